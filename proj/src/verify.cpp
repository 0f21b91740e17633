#include "sigmakit/verify.hpp"

#include "sigmakit/characters.hpp"
#include "sigmakit/homology.hpp"
#include "sigmakit/houghton.hpp"
#include "sigmakit/matchings.hpp"
#include "sigmakit/pl_map.hpp"
#include "sigmakit/random.hpp"
#include "sigmakit/stein_farley.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sigmakit::verify {

namespace {

// Collects counts and the first failure message of a check.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && first_failure_.empty())
      first_failure_ = what;
    failed_ += !ok;
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }
  bool passed() const { return failed_ == 0 && checked_ > 0; }
  std::string detail() const {
    std::string out = std::to_string(checked_ - failed_) + "/" + std::to_string(checked_) + " ok";
    if (!notes_.empty())
      out += "; " + notes_;
    if (!first_failure_.empty())
      out += "; first failure: " + first_failure_;
    return out;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
  std::string notes_;
};

CharacterF random_character(int n, Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CharacterF chi = CharacterF::zero(n);
  while (chi.is_zero()) {
    chi.a = Rational(num(rng), den(rng));
    chi.b = Rational(num(rng), den(rng));
    for (auto& c : chi.c)
      c = Rational(num(rng), den(rng));
  }
  return chi;
}

BasisValues difference(const BasisValues& y, const BasisValues& x) {
  BasisValues out = y;
  out.chi0 -= x.chi0;
  out.chi1 -= x.chi1;
  for (std::size_t i = 0; i < out.psi.size(); ++i)
    out.psi[i] -= x.psi[i];
  return out;
}

std::string nr(int n, long long r) { return "n=" + std::to_string(n) + " r=" + std::to_string(r); }

void check_characters(Tally& t, Rng&, const Options&) {
  for (int n = 2; n <= 8; ++n)
    t.expect(determinant(basis_matrix(n)) == Integer(-(n - 1)), "det n=" + std::to_string(n));
  t.note("n=2..8");
}

void check_homomorphism(Tally& t, Rng& rng, const Options&) {
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto [g, h] = random_composable_pair(n, 4, 6, rng);
      t.expect(eval_basis(multiply(g, h)) == eval_basis(g) + eval_basis(h),
               "chi(gh) n=" + std::to_string(n));
    }
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t step = static_cast<std::size_t>(n - 1);
      const std::size_t heads = 1 + step * static_cast<std::size_t>(trial % 3);
      const Element g = random_element(n, heads, heads + step * static_cast<std::size_t>(trial % 4), 5, rng);
      ForestPair pair = g.pair();
      std::uniform_int_distribution<int> count(1, 6);
      const int expansions = count(rng);
      for (int e = 0; e < expansions; ++e) {
        std::uniform_int_distribution<std::size_t> leaf(0, pair.minus.leaf_count() - 1);
        pair = expand(pair, leaf(rng));
      }
      const ProtoVector expanded = proto(pair.plus) - proto(pair.minus);
      t.expect(expanded == proto(g.plus()) - proto(g.minus()), "expanded value");
      t.expect(reduce_randomly(pair, rng) == g, "round trip");
    }
  }
  t.note("1000 pairs and 10 round trips per n=2..4");
}

void check_pl(Tally& t, Rng& rng, const Options&) {
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 500; ++trial) {
      const Element g = random_group_element(n, 1 + static_cast<std::size_t>(trial % 8), rng);
      const PLMap f = pl_from_pair(g);
      const BasisValues v = eval_basis(g);
      t.expect(pl_chi0(f) == v.chi0 && pl_chi1(f) == v.chi1, "chi0/chi1 " + render(g));
      for (int i = 0; i <= n - 2; ++i)
        t.expect(pl_psi(f, i) == v.psi[static_cast<std::size_t>(i)], "psi " + render(g));
    }
  t.note("500 elements per n=2..4");
}

void check_matchings(Tally& t, Rng&, const Options& o) {
  const std::vector<std::pair<int, int>> limits = {{2, 12}, {3, 12}, {4, 13}};
  int largest_bound = -2;
  for (const auto& [n, default_max] : limits) {
    const int max_r = o.max_r >= 0 ? std::min(o.max_r, default_max) : default_max;
    for (int r = n; r <= max_r; ++r) {
      const int bound = (r - n) / (2 * n - 1) - 1;
      const auto m = build_matching_complex({n - 1}, n, r, bound + 1, o.budget);
      t.expect(is_homologically_k_connected(m, bound, o.budget), nr(n, r));
      largest_bound = std::max(largest_bound, bound);
    }
  }
  const auto nine = build_matching_complex({2}, 3, 9, 1, o.budget);
  t.expect(reduced_homology(nine, 0, o.budget).vanishes_through(0), "M_2 of Delta^3(9) connected");
  t.note("bounds up to " + std::to_string(largest_bound));
}

void check_link(Tally& t, Rng& rng, const Options& o) {
  for (int n = 2; n <= 3; ++n)
    for (std::size_t r = 1; r <= 7; r += static_cast<std::size_t>(n - 1)) {
      const Element x = r == 1 ? identity(1, n) : random_vertex(n, r, r, rng);
      const int radius = 3;
      const std::size_t q = r + static_cast<std::size_t>(radius * (n - 1));
      const auto piece = ball(x, radius, 1, q, o.budget);
      const auto found = link_in_ball(piece, piece.find(x));
      const auto model = link_of_vertex(x, radius - 1, o.budget);
      t.expect(found.words_agree, "edge labels vs words " + nr(n, static_cast<long long>(r)));
      t.expect(found.atoms == model.matchings.atoms() &&
                   found.complex.skeleton(radius - 1) == model.complex,
               "ball link vs matchings " + nr(n, static_cast<long long>(r)));
      for (const auto& w : model.words)
        t.expect(g_inverse(g_map(w, n), n, r) == w, "word round trip");
    }
  const Psi psi = parse_psi("<I,V,L>");
  t.expect(g_map(psi, 3) == std::vector<Atom>{interval_atom(1, 3), vertex_atom(4)},
           "<I,V,L> -> {e[1,3], v4}");
  t.note("ball radius 3, link faces through dimension 2");
}

void check_classification(Tally& t, Rng& rng, const Options&) {
  const CharacterF psi0 = CharacterF::psi(3, 0);
  auto dir = [&](const Atom& a, int which) {
    return classify_vertex(psi0, a, 5).basis_direction(which);
  };
  t.expect(dir(vertex_atom(0), 1) == Direction::descending, "v0 psi0");
  t.expect(dir(vertex_atom(1), 2) == Direction::descending, "v1 psi1");
  t.expect(dir(interval_atom(1, 3), 1) == Direction::descending, "e[1,3] psi0");
  t.expect(dir(interval_atom(2, 4), 1) == Direction::preserving, "e[2,4] psi0");
  for (int n = 2; n <= 4; ++n)
    for (std::size_t r = 1; r <= 10; r += static_cast<std::size_t>(n - 1)) {
      const Element x = r == 1 ? identity(1, n) : random_vertex(n, r, r + 2, rng);
      const CharacterF chi = random_character(n, rng);
      const auto lk = link_matching_complex(n, static_cast<int>(r));
      for (const auto& a : lk.atoms()) {
        const auto k = static_cast<std::size_t>(a.front());
        const Element y = a.size() == 1 ? split(x, k) : merge(x, k);
        const auto c = classify_vertex(chi, a, static_cast<int>(r));
        t.expect(difference(eval_basis(y), eval_basis(x)) == c.delta,
                 atom_label(a) + " " + nr(n, static_cast<long long>(r)));
        t.expect(eval(chi, y) - eval(chi, x) == c.char_delta, "character delta");
      }
    }
  t.note("four worked classifications; every link edge for n=2..4, r<=10");
}

void check_morse(Tally& t, Rng& rng, const Options& o) {
  for (int n = 2; n <= 3; ++n)
    for (int b = 0; b < 2; ++b) {
      const std::size_t feet = n == 2 ? 3 : 5;
      const Element x = random_vertex(n, feet, 3, rng);
      const auto piece = ball(x, 3, 1, feet + 3 * static_cast<std::size_t>(n - 1), o.budget, 0);
      for (int c = 0; c < 10; ++c) {
        const CharacterF chi = random_character(n, rng);
        const auto morse = sigmakit::check_morse(piece, chi);
        const auto affine = check_affine_2cubes(piece, chi);
        t.expect(morse.ok(), "epsilon separation " + render(chi));
        t.expect(affine.ok(), "parallel edges " + render(chi));
      }
    }
  t.note("2 balls of radius 3 per n=2,3, 10 characters each");
}

void check_ascending(Tally& t, Rng&, const Options& o) {
  const CharacterF chi = CharacterF::psi(3, 0);
  const int p = 9, q = 81;
  for (int r = p; r <= 3 * p; r += 2) {
    const auto lk = ascending_link_complex(chi, 3, r, p, q);
    const int apex = lk.find(vertex_atom(r - 1));
    t.expect(apex >= 0 && lk.is_cone_with_apex(apex), "cone on v_{r-1} r=" + std::to_string(r));
    if (r <= 13)
      t.expect(lk.materialize(-1, o.budget).is_cone_with_apex(apex), "materialized cone");
  }
  const int qq = choose_q(chi);
  for (int r = 31; r <= 35; r += 2) {
    const auto lk = ascending_link_complex(chi, 3, r, p, q);
    const SigmaQ sq = sigma_q(3, r, qq);
    t.expect(sq.s >= 6, "s >= 6 r=" + std::to_string(r));
    std::vector<int> sigma;
    for (const auto& a : sq.members)
      sigma.push_back(lk.find(a));
    std::sort(sigma.begin(), sigma.end());
    const bool present = !sigma.empty() && sigma.front() >= 0;
    t.expect(present, "sigma_q atoms in the link");
    if (!present)
      continue;
    const auto rep = popular_simplex_check(lk, sigma, 2);
    t.expect(rep.hypotheses_hold(), "popular simplex hypotheses r=" + std::to_string(r) +
                                        (rep.failure.empty() ? "" : ": " + rep.failure));
    t.expect(rep.guaranteed_connectivity >= 0, "guaranteed connectivity");
    const auto skeleton = lk.materialize(1, o.budget);
    t.expect(reduced_homology(skeleton, 0, o.budget).vanishes_through(0),
             "connected r=" + std::to_string(r));
  }
  t.note("chi=psi0, p=9, q=81; cone for r=9..27, sigma_q and homology for r=31..35");
}

// Clique complex of a graph given by adjacency bitmasks.
SimplicialComplex clique_complex(const std::vector<unsigned>& adj) {
  std::vector<Face> faces;
  Face current;
  const int count = static_cast<int>(adj.size());
  auto extend = [&](auto&& self, int start, unsigned allowed) -> void {
    for (int v = start; v < count; ++v) {
      if (!(allowed >> v & 1))
        continue;
      current.push_back(v);
      faces.push_back(current);
      self(self, v + 1, allowed & adj[static_cast<std::size_t>(v)]);
      current.pop_back();
    }
  };
  extend(extend, 0, (1u << count) - 1);
  return SimplicialComplex::from_closed_faces(adj.size(), std::move(faces));
}

void check_popular(Tally& t, Rng& rng, const Options& o) {
  const std::vector<std::pair<int, int>> shapes = {{3, 1}, {4, 2}, {5, 2}};
  int generated = 0;
  for (std::size_t s = 0; s < shapes.size(); ++s) {
    const auto [ell, k] = shapes[s];
    const int count = s == 2 ? 16 : 17;
    for (int c = 0; c < count; ++c) {
      const int extra = 3 + c % 4;
      const int total = ell + 1 + extra;
      std::vector<unsigned> adj(static_cast<std::size_t>(total), 0);
      auto join = [&](int a, int b) {
        adj[static_cast<std::size_t>(a)] |= 1u << b;
        adj[static_cast<std::size_t>(b)] |= 1u << a;
      };
      for (int a = 0; a <= ell; ++a)
        for (int b = a + 1; b <= ell; ++b)
          join(a, b);
      std::bernoulli_distribution coin(0.5);
      std::uniform_int_distribution<int> misses(0, k);
      for (int v = ell + 1; v < total; ++v) {
        std::vector<int> sigma(static_cast<std::size_t>(ell + 1));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const int skip = misses(rng);
        for (int i = skip; i <= ell; ++i)
          join(v, sigma[static_cast<std::size_t>(i)]);
        for (int w = ell + 1; w < v; ++w)
          if (coin(rng))
            join(v, w);
      }
      const auto complex = clique_complex(adj);
      Face sigma(static_cast<std::size_t>(ell + 1));
      std::iota(sigma.begin(), sigma.end(), 0);
      const auto rep = popular_simplex_check(complex, sigma, k);
      t.expect(rep.hypotheses_hold(), "hypotheses " + rep.failure);
      const int through = ell / k - 1;
      t.expect(reduced_homology(complex, through, o.budget).vanishes_through(through),
               "homology (ell,k)=(" + std::to_string(ell) + "," + std::to_string(k) + ")");
      ++generated;
    }
  }
  t.note(std::to_string(generated) + " clique complexes");
}

void check_classifier(Tally& t, Rng& rng, const Options&) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::bernoulli_distribution zero_psi(0.5);
  int points = 0;
  for (int n = 2; n <= 5; ++n)
    while (points < 2500 * (n - 1)) {
      std::vector<std::pair<int, int>> raw;  // a, c..., b as num/den
      bool c_zero = true;
      const bool force_zero = zero_psi(rng);
      for (int i = 0; i < n; ++i) {
        const bool is_psi = i > 0 && i < n - 1;
        int value = num(rng);
        if (is_psi && force_zero)
          value = 0;
        raw.push_back({value, den(rng)});
        if (is_psi && value != 0)
          c_zero = false;
      }
      const bool all_zero = std::all_of(raw.begin(), raw.end(), [](auto v) { return v.first == 0; });
      if (all_zero)
        continue;
      CharacterF chi = CharacterF::zero(n);
      chi.a = Rational(raw.front().first, raw.front().second);
      chi.b = Rational(raw.back().first, raw.back().second);
      for (int i = 0; i + 2 < n; ++i)
        chi.c[static_cast<std::size_t>(i)] =
            Rational(raw[static_cast<std::size_t>(i + 1)].first, raw[static_cast<std::size_t>(i + 1)].second);
      const bool outside = c_zero && raw.front().first >= 0 && raw.back().first >= 0;
      const auto verdict = sigma_classify_F(chi, 2 + points % 5);
      t.expect((verdict == SigmaVerdict::not_member) == outside, render(chi));
      ++points;
    }
  t.note(std::to_string(points) + " grid characters, n=2..5");
}

void check_houghton(Tally& t, Rng& rng, const Options& o) {
  using namespace houghton;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    const auto phi = random_monoid_element(n, trial % 6, 5, rng);
    const auto& m = phi.char_values();
    t.expect(static_cast<long long>(phi.complement().size()) ==
                 std::accumulate(m.begin(), m.end(), 0LL),
             "f = sum chi_i " + render(phi));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const auto phi = random_monoid_element(3, 3, 5, rng);
    const auto psi = random_monoid_element(3, 3, 5, rng);
    const auto eta = transitivity_witness(phi, psi);
    t.expect(eta.is_bijective() && compose(phi, eta) == psi, "witness " + render(eta));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int f = trial % 5;
    const auto phi = random_monoid_element(3, f, 5, rng);
    t.expect(neighbors(phi).down.size() == static_cast<std::size_t>(3 * f), "down count");
  }
  for (int f = 3; f <= 5; ++f) {
    const auto lk = descending_link(random_monoid_element(2, f, 5, rng), o.budget);
    t.expect(is_homologically_k_connected(lk.complex, 0, o.budget),
             "descending n=2 f=" + std::to_string(f));
  }
  for (int f = 5; f <= 6; ++f) {
    const auto lk = descending_link(random_monoid_element(3, f, 5, rng), o.budget);
    t.expect(is_homologically_k_connected(lk.complex, 1, o.budget),
             "descending n=3 f=" + std::to_string(f));
  }
  // the ascending link depends only on which rays sit below the maximum
  std::vector<std::vector<int>> shapes = {{-1, 0, 0}, {-1, -1, 0}, {-2, -1, 0}};
  int links = 0;
  for (auto shape : shapes) {
    std::sort(shape.begin(), shape.end());
    do {
      std::vector<Rational> a(shape.begin(), shape.end());
      const int m = normalize_char(a).m;
      for (int f = 0; f <= 6; ++f) {
        const auto phi = random_monoid_element(3, f, 4, rng);
        const auto lk = ascending_link(phi, a, default_feet_cap(3), o.budget);
        t.expect(is_homologically_k_connected(lk.complex, m - 2, o.budget),
                 "ascending m=" + std::to_string(m) + " f=" + std::to_string(f));
        ++links;
      }
    } while (std::next_permutation(shape.begin(), shape.end()));
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<Rational> chi_n(static_cast<std::size_t>(n), 0);
    chi_n.back() = 1;
    t.expect(sigma_classify_H(chi_n).member_of == n - 2, "[chi_n] in Sigma^{n-2}");
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> minus(static_cast<std::size_t>(n), 0);
      minus[static_cast<std::size_t>(i)] = -1;
      const auto c = sigma_classify_H(minus);
      t.expect(c.conjectured_not == 1 && c.conjecture_proven, "[-chi_i] not in Sigma^1");
    }
  }
  t.note(std::to_string(links) + " ascending links");
}

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex torus() {
  std::vector<Face> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(7, facets);
}

void check_homology(Tally& t, Rng&, const Options& o) {
  const auto hollow = SimplicialComplex::from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto sphere = SimplicialComplex::from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  const auto rp2 = projective_plane();
  const std::vector<std::pair<std::string, SimplicialComplex>> suite = {
      {"hollow triangle", hollow},
      {"boundary of the 3-simplex", sphere},
      {"projective plane", rp2},
      {"7-vertex torus", torus()},
      {"5-simplex", SimplicialComplex::from_facets(6, {{0, 1, 2, 3, 4, 5}})},
      {"M_2 of Delta^3(9)", build_matching_complex({2}, 3, 9, -1, o.budget)},
      {"M_1 of Delta^2(8)", build_matching_complex({1}, 2, 8, -1, o.budget)},
  };
  for (const auto& [name, c] : suite) {
    t.expect(chain_complex(c).is_exact_composition(), "boundary squared " + name);
    const auto rep = reduced_homology(c, -1, o.budget);
    t.expect(euler_consistent(c, rep), "Euler characteristic " + name);
  }
  const auto s2 = reduced_homology(sphere);
  t.expect(s2.at(2).betti == 1 && s2.vanishes_through(1), "sphere b2 = 1");
  const auto p = reduced_homology(rp2);
  t.expect(p.at(1).betti == 0 && p.at(1).torsion == std::vector<Integer>{2} && p.at(2).betti == 0,
           "projective plane H1 = Z/2");
  t.note(std::to_string(suite.size()) + " complexes");
}

using Runner = std::function<void(Tally&, Rng&, const Options&)>;

struct Entry {
  std::string name;
  std::string anchor;
  Runner run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {"characters", "character basis matrix has determinant -(n-1)", check_characters},
      {"homomorphism", "basis characters are additive and invariant under expansion", check_homomorphism},
      {"pl", "slope-based characters agree with the tree-pair characters", check_pl},
      {"matchings", "M_{n-1}(Delta^n(r)) is (floor((r-n)/(2n-1))-1)-connected", check_matchings},
      {"link", "lk x is M_{0,n-1}(Delta^n(f(x))) via the word map", check_link},
      {"classification", "link vertices change characters by the split/merge rule", check_classification},
      {"morse", "(chi, f) is Morse and chi is affine on squares", check_morse},
      {"ascending", "ascending links: cone below pn, popular sigma_q above", check_ascending},
      {"popular", "flag with respect to sigma implies floor(l/k)-1 connectivity", check_popular},
      {"classifier", "Sigma^m(F_n) misses exactly the classes with c=0, a>=0, b>=0", check_classifier},
      {"houghton", "Houghton f, witnesses, neighbours, links and classifier", check_houghton},
      {"homology", "homology engine standards", check_homology},
  };
  return table;
}

Check run_entry(std::size_t index, const Options& options) {
  const Entry& e = entries()[index];
  Check c;
  c.id = static_cast<int>(index) + 1;
  c.name = e.name;
  c.anchor = e.anchor;
  Rng rng(options.seed * 1000003ULL + index);
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    e.run(tally, rng, options);
    c.passed = tally.passed();
    c.detail = tally.detail();
  } catch (const std::exception& ex) {
    c.passed = false;
    c.detail = tally.detail() + "; aborted: " + ex.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

}  // namespace

bool Report::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string Report::text() const {
  std::ostringstream out;
  out << "verify " << suite << " seed=" << seed << '\n';
  for (const auto& c : checks)
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << c.anchor
        << " -- " << c.detail << '\n';
  out << (passed() ? "all checks passed" : "some checks failed") << '\n';
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : entries())
      out.push_back(e.name);
    return out;
  }();
  return names;
}

Report run(const std::string& suite, const Options& options) {
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < entries().size(); ++i)
    if (suite == "all" || entries()[i].name == suite)
      chosen.push_back(i);
  if (chosen.empty())
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  Report report;
  report.suite = suite;
  report.seed = options.seed;
  if (options.parallel && chosen.size() > 1) {
    std::vector<std::future<Check>> jobs;
    for (std::size_t i : chosen)
      jobs.push_back(std::async(std::launch::async, run_entry, i, std::cref(options)));
    for (auto& j : jobs)
      report.checks.push_back(j.get());
  } else {
    for (std::size_t i : chosen)
      report.checks.push_back(run_entry(i, options));
  }
  return report;
}

}  // namespace sigmakit::verify
