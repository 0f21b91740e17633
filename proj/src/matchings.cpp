#include "sigmakit/matchings.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sigmakit {

namespace {

BasisValues from_proto(const ProtoVector& p, int sign) {
  BasisValues v;
  v.chi0 = sign * p.L;
  v.chi1 = sign * p.R;
  for (long long d : p.D)
    v.psi.push_back(sign * d);
  return v;
}

Direction direction_of(const Rational& delta) {
  if (delta > 0)
    return Direction::ascending;
  if (delta < 0)
    return Direction::descending;
  return Direction::preserving;
}

bool is_interval(const Atom& a) {
  return !a.empty() && a.back() - a.front() + 1 == static_cast<int>(a.size());
}

bool disjoint(const Atom& a, const Atom& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j])
      return false;
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return true;
}

std::size_t cap_minus(std::size_t cap, std::size_t used) {
  if (cap == MatchingComplex::kNoCap)
    return cap;
  return used > cap ? 0 : cap - used;
}

}  // namespace

Atom vertex_atom(int k) { return {k}; }

Atom interval_atom(int first, int last) {
  if (last < first)
    throw std::invalid_argument("interval_atom: last < first");
  Atom a;
  for (int v = first; v <= last; ++v)
    a.push_back(v);
  return a;
}

std::string atom_label(const Atom& atom) {
  if (atom.size() == 1)
    return "v" + std::to_string(atom[0]);
  if (is_interval(atom))
    return "e[" + std::to_string(atom.front()) + "," + std::to_string(atom.back()) + "]";
  std::string out = "{";
  for (std::size_t i = 0; i < atom.size(); ++i)
    out += (i ? "," : "") + std::to_string(atom[i]);
  return out + "}";
}

Atom parse_atom(std::string_view text) {
  std::size_t pos = 0;
  auto number = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || pos - start > 6)
      throw ParseError("expected a vertex index", start);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  if (text.empty())
    throw ParseError("empty atom", 0);
  Atom out;
  if (text[0] == 'v') {
    ++pos;
    out = vertex_atom(number());
  } else if (text[0] == 'e') {
    ++pos;
    expect('[');
    const int first = number();
    expect(',');
    const std::size_t at = pos;
    const int last = number();
    expect(']');
    if (last < first)
      throw ParseError("interval end before start", at);
    out = interval_atom(first, last);
  } else {
    throw ParseError("atom must start with 'v' or 'e'", 0);
  }
  if (pos != text.size())
    throw ParseError("trailing characters", pos);
  return out;
}

SimplicialComplex build_delta(int n, int r) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("build_delta needs n >= 1 and r >= 1");
  std::vector<Face> facets;
  if (r <= n) {
    facets.push_back(interval_atom(0, r - 1));
  } else {
    for (int i = 0; i + n - 1 < r; ++i)
      facets.push_back(interval_atom(i, i + n - 1));
  }
  return SimplicialComplex::from_facets(static_cast<std::size_t>(r), facets);
}

std::vector<Atom> matching_atoms(const std::vector<int>& D, int n, int r) {
  if (n < 1 || r < 1)
    throw std::invalid_argument("matching_atoms needs n >= 1 and r >= 1");
  std::vector<int> dims = D;
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  for (int d : dims)
    if (d < 0 || d > n - 1)
      throw std::invalid_argument("matching dimension outside 0..n-1");
  std::vector<Atom> out;
  for (int first = 0; first < r; ++first) {
    const int window = std::min(n - 1, r - 1 - first);  // candidates first+1..first+window
    for (int d : dims) {
      if (d > window)
        continue;
      // choose d of the window positions, lexicographically
      std::vector<int> pick(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        pick[static_cast<std::size_t>(i)] = i + 1;
      for (;;) {
        Atom a{first};
        for (int off : pick)
          a.push_back(first + off);
        out.push_back(std::move(a));
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == window - (d - 1 - i))
          --i;
        if (i < 0)
          break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j)
          pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

MatchingComplex::MatchingComplex(int n, int r, std::vector<Atom> atoms,
                                 std::size_t max_singletons, std::size_t max_full)
    : n_(n), r_(r), cap0_(max_singletons), cap1_(max_full) {
  for (auto& a : atoms) {
    if (a.empty() || !std::is_sorted(a.begin(), a.end()) || a.front() < 0 || a.back() >= r)
      throw std::invalid_argument("atom outside 0..r-1 or unsorted");
    if (a.size() == 1 && cap0_ == 0)
      continue;
    if (a.size() == static_cast<std::size_t>(n) && a.size() != 1 && cap1_ == 0)
      continue;
    atoms_.push_back(std::move(a));
  }
}

int MatchingComplex::find(const Atom& atom) const {
  auto it = std::find(atoms_.begin(), atoms_.end(), atom);
  return it == atoms_.end() ? -1 : static_cast<int>(it - atoms_.begin());
}

bool MatchingComplex::is_face(const std::vector<int>& members) const {
  std::size_t singles = 0, full = 0;
  std::vector<char> used(static_cast<std::size_t>(r_), 0);
  for (int m : members) {
    const Atom& a = atoms_.at(static_cast<std::size_t>(m));
    for (int v : a) {
      if (used[static_cast<std::size_t>(v)])
        return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
    if (a.size() == 1)
      ++singles;
    else if (a.size() == static_cast<std::size_t>(n_))
      ++full;
  }
  return singles <= cap0_ && full <= cap1_;
}

bool MatchingComplex::joinable(int a, int b) const { return a == b || is_face({a, b}); }

template <typename Visit>
void MatchingComplex::enumerate(int max_dim, const Budget& budget, Visit&& visit) const {
  std::vector<char> used(static_cast<std::size_t>(r_), 0);
  std::vector<int> members;
  std::size_t singles = 0, full = 0, count = 0;
  const std::size_t limit =
      max_dim < 0 ? atoms_.size() : static_cast<std::size_t>(max_dim) + 1;
  auto fits = [&](const Atom& a) {
    for (int v : a)
      if (used[static_cast<std::size_t>(v)])
        return false;
    if (a.size() == 1)
      return singles < cap0_;
    if (a.size() == static_cast<std::size_t>(n_))
      return full < cap1_;
    return true;
  };
  auto toggle = [&](const Atom& a, int delta) {
    for (int v : a)
      used[static_cast<std::size_t>(v)] = delta > 0;
    if (a.size() == 1)
      singles += delta;
    else if (a.size() == static_cast<std::size_t>(n_))
      full += delta;
  };
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < atoms_.size(); ++i) {
      const Atom& a = atoms_[i];
      if (!fits(a))
        continue;
      toggle(a, 1);
      members.push_back(static_cast<int>(i));
      if (++count > budget.max_faces)
        throw BudgetExceeded("matching complex exceeds the face budget of " +
                             std::to_string(budget.max_faces));
      visit(members);
      if (members.size() < limit)
        self(self, i + 1);
      members.pop_back();
      toggle(a, -1);
    }
  };
  recurse(recurse, 0);
}

SimplicialComplex MatchingComplex::materialize(int max_dim, const Budget& budget) const {
  std::vector<Face> faces;
  enumerate(max_dim, budget, [&](const std::vector<int>& members) { faces.push_back(members); });
  SimplicialComplex out = SimplicialComplex::from_closed_faces(atoms_.size(), std::move(faces));
  std::vector<std::string> labels;
  for (const auto& a : atoms_)
    labels.push_back(atom_label(a));
  out.set_labels(std::move(labels));
  return out;
}

std::vector<std::size_t> MatchingComplex::face_counts(int max_dim, const Budget& budget) const {
  std::vector<std::size_t> counts;
  enumerate(max_dim, budget, [&](const std::vector<int>& members) {
    if (counts.size() < members.size())
      counts.resize(members.size(), 0);
    ++counts[members.size() - 1];
  });
  return counts;
}

std::size_t MatchingComplex::max_disjoint_full(const std::vector<bool>& blocked, int skip) const {
  // every full atom is an interval of length n, so earliest start is
  // earliest finish and the greedy choice is optimal
  std::vector<const Atom*> full;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (static_cast<int>(i) == skip || atoms_[i].size() != static_cast<std::size_t>(n_) ||
        atoms_[i].size() == 1)
      continue;
    bool ok = true;
    for (int v : atoms_[i])
      ok = ok && !blocked[static_cast<std::size_t>(v)];
    if (ok)
      full.push_back(&atoms_[i]);
  }
  std::sort(full.begin(), full.end(), [](const Atom* a, const Atom* b) { return a->back() < b->back(); });
  std::size_t count = 0;
  int last_end = -1;
  for (const Atom* a : full) {
    if (a->front() > last_end) {
      ++count;
      last_end = a->back();
    }
  }
  return count;
}

bool MatchingComplex::is_cone_with_apex(int apex) const {
  if (apex < 0 || static_cast<std::size_t>(apex) >= atoms_.size())
    return false;
  for (std::size_t b = 0; b < atoms_.size(); ++b)
    if (!joinable(apex, static_cast<int>(b)))
      return false;
  const Atom& a = atoms_[static_cast<std::size_t>(apex)];
  if (a.size() == 1 && cap0_ != kNoCap) {
    std::size_t singles = 0;
    for (std::size_t b = 0; b < atoms_.size(); ++b)
      if (static_cast<int>(b) != apex && atoms_[b].size() == 1)
        ++singles;
    if (std::min(singles, cap0_) + 1 > cap0_)
      return false;
  }
  if (a.size() == static_cast<std::size_t>(n_) && a.size() != 1 && cap1_ != kNoCap) {
    const std::vector<bool> none(static_cast<std::size_t>(r_), false);
    if (std::min(max_disjoint_full(none, apex), cap1_) + 1 > cap1_)
      return false;
  }
  return true;
}

SimplicialComplex build_matching_complex(const std::vector<int>& D, int n, int r, int max_dim,
                                         const Budget& budget) {
  return MatchingComplex(n, r, matching_atoms(D, n, r)).materialize(max_dim, budget);
}

MatchingComplex link_matching_complex(int n, int r) {
  if (n < 2)
    throw std::invalid_argument("link complexes need n >= 2");
  return MatchingComplex(n, r, matching_atoms({0, n - 1}, n, r));
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::ascending:
      return "ascending";
    case Direction::descending:
      return "descending";
    case Direction::preserving:
      return "preserving";
  }
  return "?";
}

Direction VertexClassification::basis_direction(int which) const {
  const int n = static_cast<int>(delta.psi.size()) + 1;
  if (which == 0)
    return direction_of(delta.chi0);
  if (which == n)
    return direction_of(delta.chi1);
  if (which < 0 || which > n)
    throw std::out_of_range("basis_direction index");
  return direction_of(delta.psi[static_cast<std::size_t>(which - 1)]);
}

VertexClassification classify_vertex(const CharacterF& chi, const Atom& atom, int r) {
  const int n = chi.n;
  VertexClassification out;
  if (atom.size() == 1) {
    const int k = atom[0];
    if (k < 0 || k >= r)
      throw std::invalid_argument("split index outside 0..r-1");
    out.delta = from_proto(
        proto(Forest::single_caret(n, static_cast<std::size_t>(r), static_cast<std::size_t>(k))),
        -1);
  } else if (atom.size() == static_cast<std::size_t>(n) && is_interval(atom)) {
    const int k = atom.front();
    if (k < 0 || atom.back() >= r)
      throw std::invalid_argument("merge interval outside 0..r-1");
    const int merged = r - (n - 1);
    out.delta = from_proto(proto(Forest::single_caret(n, static_cast<std::size_t>(merged),
                                                      static_cast<std::size_t>(k))),
                           1);
  } else {
    throw std::invalid_argument("link vertices are v_k or e_[k,k+n-1]");
  }
  out.char_delta = eval(chi, out.delta);
  out.direction = direction_of(out.char_delta);
  return out;
}

MatchingComplex ascending_link_complex(const CharacterF& chi, int n, int r, int p, int q) {
  if (chi.n != n)
    throw std::invalid_argument("character arity differs from n");
  if (chi.is_zero())
    throw std::invalid_argument("ascending links need a nonzero character");
  if (p < 1 || p > r || r > q)
    throw std::invalid_argument("need 1 <= p <= r <= q");
  std::vector<Atom> atoms;
  for (auto& a : matching_atoms({0, n - 1}, n, r)) {
    const Rational d = classify_vertex(chi, a, r).char_delta;
    // a split raises f, a merge lowers it
    const bool up = a.size() == 1 ? d >= 0 : d > 0;
    if (up)
      atoms.push_back(std::move(a));
  }
  const auto cap0 = static_cast<std::size_t>((q - r) / (n - 1));
  const auto cap1 = static_cast<std::size_t>((r - p) / (n - 1));
  return MatchingComplex(n, r, std::move(atoms), cap0, cap1);
}

SigmaQ sigma_q(int n, int r, int q) {
  if (n < 2 || q < 0 || q > n - 2)
    throw std::invalid_argument("sigma_q needs 0 <= q <= n-2");
  SigmaQ out;
  out.q = q;
  int s = 0;
  while (q + (s + 2) * (n - 1) < r - 1)
    s += 2;
  if (s < 2)
    throw std::invalid_argument("r too small for sigma_q (no even s >= 2)");
  out.s = s;
  for (int t = 1; t < s; t += 2)
    out.members.push_back(interval_atom(q + t * (n - 1), q + (t + 1) * (n - 1)));
  return out;
}

int choose_q(const CharacterF& chi) {
  if (chi.a != 0 || chi.b != 0)
    throw std::invalid_argument("choose_q needs a character in the span of the psi_i");
  const int m = chi.n - 1;
  auto c = [&](int i) -> Rational {
    i = ((i % m) + m) % m;
    return i == m - 1 ? Rational(0) : chi.c[static_cast<std::size_t>(i)];
  };
  for (int q = 0; q < m; ++q)
    if (c(q - 1) < c(q))
      return q;
  throw std::invalid_argument("choose_q: character has no ascent (is it zero?)");
}

namespace {

std::vector<Face> subsets_of_size(const Face& set, std::size_t size) {
  std::vector<Face> out;
  const std::size_t n = set.size();
  if (size > n)
    return out;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i)
    idx[i] = i;
  for (;;) {
    Face f;
    for (std::size_t i : idx)
      f.push_back(set[i]);
    out.push_back(std::move(f));
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + (i - 1))
      --i;
    if (i == 0)
      break;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j)
      idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Face merged(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void finish(PopularSimplexReport& rep, int ell, int k) {
  rep.ell = ell;
  rep.k = k;
  if (k <= 0)
    throw std::invalid_argument("popular_simplex_check needs k >= 1");
  rep.guaranteed_connectivity = ell / k - 1;
}

}  // namespace

PopularSimplexReport popular_simplex_check(const SimplicialComplex& complex, const Face& sigma_in,
                                           int k) {
  PopularSimplexReport rep;
  Face sigma = sigma_in;
  std::sort(sigma.begin(), sigma.end());
  finish(rep, static_cast<int>(sigma.size()) - 1, k);
  if (sigma.size() > 20)
    throw BudgetExceeded("sigma too large for an explicit flag check");
  rep.sigma_is_face = complex.contains(sigma);
  if (!rep.sigma_is_face) {
    rep.failure = "sigma is not a face";
    return rep;
  }
  auto joinable = [&](int u, int w) {
    return u == w || complex.contains(u < w ? Face{u, w} : Face{w, u});
  };
  rep.flag_wrt_sigma = true;
  const std::size_t subsets = std::size_t{1} << sigma.size();
  for (int d = 0; d <= complex.dimension() && rep.flag_wrt_sigma; ++d) {
    for (const auto& rho : complex.faces(d)) {
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        Face part;
        for (std::size_t i = 0; i < sigma.size(); ++i)
          if (mask >> i & 1)
            part.push_back(sigma[i]);
        bool all = true;
        for (int u : rho)
          for (int w : part)
            all = all && joinable(u, w);
        if (all && !complex.contains(merged(rho, part))) {
          rep.flag_wrt_sigma = false;
          rep.failure = "not flag with respect to sigma";
          break;
        }
      }
      if (!rep.flag_wrt_sigma)
        break;
    }
  }
  const int need = rep.ell - k + 1;
  rep.vertices_joinable = true;
  if (need > 0) {
    const auto taus = subsets_of_size(sigma, static_cast<std::size_t>(need));
    for (std::size_t v = 0; v < complex.vertex_count(); ++v) {
      bool found = false;
      for (const auto& tau : taus) {
        if (complex.contains(merged(tau, {static_cast<int>(v)}))) {
          found = true;
          break;
        }
      }
      if (!found) {
        rep.vertices_joinable = false;
        if (rep.failure.empty())
          rep.failure = "vertex " + std::to_string(v) + " misses every large face of sigma";
        break;
      }
    }
  }
  return rep;
}

PopularSimplexReport popular_simplex_check(const MatchingComplex& complex,
                                           const std::vector<int>& sigma, int k) {
  PopularSimplexReport rep;
  finish(rep, static_cast<int>(sigma.size()) - 1, k);
  if (sigma.size() > 24)
    throw BudgetExceeded("sigma too large for the flag check");
  rep.sigma_is_face = complex.is_face(sigma);
  if (!rep.sigma_is_face) {
    rep.failure = "sigma is not a face";
    return rep;
  }
  const auto& atoms = complex.atoms();
  const std::size_t n = static_cast<std::size_t>(complex.arity());
  const std::size_t cap0 = complex.max_singletons();
  const std::size_t cap1 = complex.max_full();
  auto kind = [&](int a) -> int {
    const std::size_t s = atoms[static_cast<std::size_t>(a)].size();
    return s == 1 ? 0 : (s == n ? 1 : 2);
  };

  // Pairwise-joinable rho u sigma' is automatically pairwise disjoint, so
  // only a cap can fail. The largest cap load a face rho can add is
  // reached by a rho of a single kind.
  rep.flag_wrt_sigma = true;
  for (std::size_t mask = 1; mask < (std::size_t{1} << sigma.size()); ++mask) {
    std::vector<int> part;
    std::size_t used0 = 0, used1 = 0;
    std::vector<bool> blocked(static_cast<std::size_t>(complex.r()), false);
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      if (!(mask >> i & 1))
        continue;
      part.push_back(sigma[i]);
      used0 += kind(sigma[i]) == 0;
      used1 += kind(sigma[i]) == 1;
      for (int v : atoms[static_cast<std::size_t>(sigma[i])])
        blocked[static_cast<std::size_t>(v)] = true;
    }
    std::size_t singles = 0;
    std::vector<Atom> full;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      bool free = true;
      for (int v : atoms[a])
        free = free && !blocked[static_cast<std::size_t>(v)];
      if (!free || kind(static_cast<int>(a)) == 2)
        continue;
      bool ok = true;
      for (int m : part)
        ok = ok && complex.joinable(static_cast<int>(a), m);
      if (!ok)
        continue;
      if (kind(static_cast<int>(a)) == 0)
        ++singles;
      else
        full.push_back(atoms[a]);
    }
    std::sort(full.begin(), full.end(), [](const Atom& a, const Atom& b) { return a.back() < b.back(); });
    std::size_t disjoint_full = 0;
    int last_end = -1;
    for (const auto& a : full)
      if (a.front() > last_end) {
        ++disjoint_full;
        last_end = a.back();
      }
    const bool over0 = cap0 != MatchingComplex::kNoCap && std::min(singles, cap0) + used0 > cap0;
    const bool over1 =
        cap1 != MatchingComplex::kNoCap && std::min(disjoint_full, cap1) + used1 > cap1;
    if (over0 || over1) {
      rep.flag_wrt_sigma = false;
      rep.failure = "not flag with respect to sigma (cap on " +
                    std::string(over0 ? "splits" : "merges") + ")";
      break;
    }
  }

  const int need = rep.ell - k + 1;
  rep.vertices_joinable = true;
  if (need > 0) {
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (std::find(sigma.begin(), sigma.end(), static_cast<int>(a)) != sigma.end())
        continue;
      std::size_t avail0 = 0, avail1 = 0, avail2 = 0;
      for (int m : sigma) {
        if (!disjoint(atoms[a], atoms[static_cast<std::size_t>(m)]))
          continue;
        (kind(m) == 0 ? avail0 : kind(m) == 1 ? avail1 : avail2)++;
      }
      const int ka = kind(static_cast<int>(a));
      const std::size_t room0 = cap_minus(cap0, ka == 0 ? 1 : 0);
      const std::size_t room1 = cap_minus(cap1, ka == 1 ? 1 : 0);
      const std::size_t best = avail2 + std::min(avail0, room0) + std::min(avail1, room1);
      if (best < static_cast<std::size_t>(need)) {
        rep.vertices_joinable = false;
        if (rep.failure.empty())
          rep.failure = atom_label(atoms[a]) + " misses every large face of sigma";
        break;
      }
    }
  }
  return rep;
}

}  // namespace sigmakit
