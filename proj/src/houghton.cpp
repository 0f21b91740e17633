#include "sigmakit/houghton.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sigmakit::houghton {

namespace {

std::string point_text(const Point& p) {
  return "(" + std::to_string(p.ray) + "," + std::to_string(p.pos) + ")";
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
  }
  bool done() {
    skip_space();
    return i_ == text_.size();
  }
  bool peek(char c) {
    skip_space();
    return i_ < text_.size() && text_[i_] == c;
  }
  void expect(std::string_view token) {
    skip_space();
    if (text_.substr(i_, token.size()) != token)
      throw ParseError("expected '" + std::string(token) + "'", i_);
    i_ += token.size();
  }
  long long integer() {
    skip_space();
    const std::size_t start = i_;
    if (i_ < text_.size() && (text_[i_] == '-' || text_[i_] == '+'))
      ++i_;
    const std::size_t digits = i_;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
      ++i_;
    if (i_ == digits)
      throw ParseError("expected an integer", start);
    return std::stoll(std::string(text_.substr(start, i_ - start)));
  }
  Point point() {
    expect("(");
    Point p;
    p.ray = static_cast<int>(integer());
    expect(",");
    p.pos = integer();
    expect(")");
    return p;
  }
  std::size_t position() const { return i_; }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

}  // namespace

HoughtonMap::HoughtonMap(int n, std::vector<long long> m, std::map<Point, Point> exceptions)
    : n_(n), m_(std::move(m)) {
  if (n < 1)
    throw std::invalid_argument("Houghton maps need at least one ray");
  if (m_.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("translation vector has the wrong length");
  auto check_point = [&](const Point& p) {
    if (p.ray < 1 || p.ray > n || p.pos < 1)
      throw std::invalid_argument("point " + point_text(p) + " is not on the rays");
  };
  for (const auto& [from, to] : exceptions) {
    check_point(from);
    check_point(to);
    if (to != Point{from.ray, from.pos + m_[static_cast<std::size_t>(from.ray - 1)]})
      exceptions_.emplace(from, to);
  }
  std::set<Point> images;
  for (int i = 1; i <= n; ++i) {
    const long long shift = m_[static_cast<std::size_t>(i - 1)];
    const long long last = threshold(i);
    if (last < -shift)
      throw std::invalid_argument("ray " + std::to_string(i) + " is translated off the rays");
    for (long long x = 1; x <= last; ++x) {
      const Point y = (*this)({i, x});
      check_point(y);
      if (!images.insert(y).second)
        throw std::invalid_argument("not injective: " + point_text(y) + " is hit twice");
    }
  }
  for (const auto& y : images)
    if (y.pos - m_[static_cast<std::size_t>(y.ray - 1)] > threshold(y.ray))
      throw std::invalid_argument("not injective: " + point_text(y) +
                                  " is also hit by the translation");
}

HoughtonMap HoughtonMap::identity(int n) {
  return HoughtonMap(n, std::vector<long long>(static_cast<std::size_t>(n), 0));
}

HoughtonMap HoughtonMap::t(int n, int i) {
  if (i < 1 || i > n)
    throw std::invalid_argument("t_i needs 1 <= i <= n");
  std::vector<long long> m(static_cast<std::size_t>(n), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  return HoughtonMap(n, m);
}

long long HoughtonMap::threshold(int i) const {
  const auto it = exceptions_.lower_bound(Point{i + 1, 0});
  if (it == exceptions_.begin())
    return 0;
  const auto prev = std::prev(it);
  return prev->first.ray == i ? prev->first.pos : 0;
}

Point HoughtonMap::operator()(const Point& p) const {
  if (p.ray < 1 || p.ray > n_ || p.pos < 1)
    throw std::invalid_argument("point " + point_text(p) + " is not on the rays");
  const auto it = exceptions_.find(p);
  if (it != exceptions_.end())
    return it->second;
  return {p.ray, p.pos + m_[static_cast<std::size_t>(p.ray - 1)]};
}

std::vector<Point> HoughtonMap::complement() const {
  std::set<Point> images;
  for (int i = 1; i <= n_; ++i)
    for (long long x = 1; x <= threshold(i); ++x)
      images.insert((*this)({i, x}));
  std::vector<Point> out;
  for (int j = 1; j <= n_; ++j) {
    const long long window = threshold(j) + m_[static_cast<std::size_t>(j - 1)];
    for (long long y = 1; y <= window; ++y)
      if (!images.count({j, y}))
        out.push_back({j, y});
  }
  return out;
}

long long HoughtonMap::f_value() const {
  const auto counted = static_cast<long long>(complement().size());
  const long long summed = std::accumulate(m_.begin(), m_.end(), 0LL);
  if (counted != summed)
    throw std::logic_error("f mismatch: complement " + std::to_string(counted) +
                           ", translations " + std::to_string(summed));
  return counted;
}

HoughtonMap compose(const HoughtonMap& a, const HoughtonMap& b) {
  if (a.rays() != b.rays())
    throw std::invalid_argument("compose: ray counts differ");
  const int n = a.rays();
  std::vector<long long> m(static_cast<std::size_t>(n));
  std::map<Point, Point> table;
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    m[k] = a.translations()[k] + b.translations()[k];
    const long long last = std::max({a.threshold(i), b.threshold(i) - a.translations()[k], 0LL});
    for (long long x = 1; x <= last; ++x)
      table.emplace(Point{i, x}, b(a({i, x})));
  }
  return HoughtonMap(n, std::move(m), std::move(table));
}

HoughtonMap inverse(const HoughtonMap& a) {
  if (!a.is_bijective())
    throw std::invalid_argument("inverse: " + render(a) + " is not a bijection");
  const int n = a.rays();
  std::vector<long long> m;
  for (long long v : a.translations())
    m.push_back(-v);
  std::map<Point, Point> table;
  for (int i = 1; i <= n; ++i)
    for (long long x = 1; x <= a.threshold(i); ++x)
      table.emplace(a({i, x}), Point{i, x});
  return HoughtonMap(n, std::move(m), std::move(table));
}

HoughtonMap parse_map(std::string_view text) {
  Cursor c(text);
  const long long n = c.integer();
  if (n < 1 || n > 64)
    throw ParseError("ray count out of range", 0);
  c.expect(";");
  c.expect("m=(");
  std::vector<long long> m;
  for (long long i = 0; i < n; ++i) {
    if (i > 0)
      c.expect(",");
    m.push_back(c.integer());
  }
  c.expect(")");
  std::map<Point, Point> table;
  if (!c.done()) {
    c.expect(";");
    c.expect("map:");
    bool first = true;
    while (!c.done()) {
      if (!first)
        c.expect(",");
      first = false;
      const std::size_t at = c.position();
      const Point from = c.point();
      c.expect("->");
      const Point to = c.point();
      if (!table.emplace(from, to).second)
        throw ParseError("point " + point_text(from) + " mapped twice", at);
    }
  }
  return HoughtonMap(static_cast<int>(n), std::move(m), std::move(table));
}

std::string render(const HoughtonMap& phi) {
  std::ostringstream out;
  out << phi.rays() << "; m=(";
  for (std::size_t i = 0; i < phi.translations().size(); ++i)
    out << (i ? "," : "") << phi.translations()[i];
  out << "); map:";
  bool first = true;
  for (const auto& [from, to] : phi.exceptions()) {
    out << (first ? " " : ", ") << point_text(from) << "->" << point_text(to);
    first = false;
  }
  return out.str();
}

HoughtonMap transitivity_witness(const HoughtonMap& phi, const HoughtonMap& psi) {
  if (phi.rays() != psi.rays())
    throw std::invalid_argument("transitivity_witness: ray counts differ");
  if (phi.f_value() != psi.f_value())
    throw std::invalid_argument("transitivity_witness: f values differ");
  const int n = phi.rays();
  std::vector<long long> m;
  std::map<Point, Point> table;
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    m.push_back(psi.translations()[k] - phi.translations()[k]);
    const long long last = std::max(phi.threshold(i), psi.threshold(i));
    for (long long x = 1; x <= last; ++x)
      table.emplace(phi({i, x}), psi({i, x}));
  }
  const auto from = phi.complement();
  const auto to = psi.complement();
  for (std::size_t k = 0; k < from.size(); ++k)
    table.emplace(from[k], to[k]);
  HoughtonMap eta(n, std::move(m), std::move(table));
  if (!eta.is_bijective() || compose(phi, eta) != psi)
    throw std::logic_error("transitivity_witness: verification failed");
  return eta;
}

Neighbors neighbors(const HoughtonMap& phi) {
  const int n = phi.rays();
  Neighbors out;
  for (int i = 1; i <= n; ++i)
    out.up.push_back(compose(HoughtonMap::t(n, i), phi));
  const auto free_points = phi.complement();
  for (int i = 1; i <= n; ++i)
    for (const auto& p : free_points) {
      std::vector<long long> m = phi.translations();
      m[static_cast<std::size_t>(i - 1)] -= 1;
      std::map<Point, Point> table;
      for (int j = 1; j <= n; ++j) {
        if (j == i) {
          table.emplace(Point{i, 1}, p);
          for (long long x = 2; x <= phi.threshold(i) + 1; ++x)
            table.emplace(Point{i, x}, phi({i, x - 1}));
        } else {
          for (long long x = 1; x <= phi.threshold(j); ++x)
            table.emplace(Point{j, x}, phi({j, x}));
        }
      }
      out.down.push_back({i, p, HoughtonMap(n, std::move(m), std::move(table))});
    }
  return out;
}

namespace {

std::string vertex_label(const LinkVertex& v) {
  if (v.up)
    return "u" + std::to_string(v.ray);
  return "d" + std::to_string(v.ray) + point_text(v.point);
}

bool compatible(const LinkVertex& a, const LinkVertex& b) {
  if (a.up && b.up)
    return a.ray != b.ray;
  if (a.up != b.up)
    return a.ray != b.ray;
  return a.ray != b.ray && a.point != b.point;
}

Link build_link(std::vector<LinkVertex> vertices, long long up_room, const Budget& budget) {
  std::vector<Face> faces;
  Face current;
  long long ups = 0;
  const auto count = static_cast<int>(vertices.size());
  auto extend = [&](auto&& self, int start) -> void {
    for (int v = start; v < count; ++v) {
      const auto& cand = vertices[static_cast<std::size_t>(v)];
      if (cand.up && ups >= up_room)
        continue;
      bool ok = true;
      for (int w : current)
        ok = ok && compatible(vertices[static_cast<std::size_t>(w)], cand);
      if (!ok)
        continue;
      current.push_back(v);
      ups += cand.up;
      faces.push_back(current);
      if (faces.size() > budget.max_faces)
        throw BudgetExceeded("Houghton link: more than " + std::to_string(budget.max_faces) +
                             " faces");
      self(self, v + 1);
      ups -= cand.up;
      current.pop_back();
    }
  };
  extend(extend, 0);
  Link out{std::move(vertices), SimplicialComplex::from_closed_faces(
                                    static_cast<std::size_t>(count), std::move(faces))};
  std::vector<std::string> labels;
  for (const auto& v : out.vertices)
    labels.push_back(vertex_label(v));
  out.complex.set_labels(std::move(labels));
  return out;
}

}  // namespace

Link link(const HoughtonMap& phi, long long feet_cap, const Budget& budget) {
  const long long f = phi.f_value();
  if (f > feet_cap)
    throw std::invalid_argument("link: f exceeds the feet cap");
  std::vector<LinkVertex> vertices;
  if (f < feet_cap)
    for (int i = 1; i <= phi.rays(); ++i)
      vertices.push_back({true, i, {}});
  const auto free_points = phi.complement();
  for (int i = 1; i <= phi.rays(); ++i)
    for (const auto& p : free_points)
      vertices.push_back({false, i, p});
  return build_link(std::move(vertices), feet_cap - f, budget);
}

Link descending_link(const HoughtonMap& phi, const Budget& budget) {
  return link(phi, phi.f_value(), budget);
}

CharacterH normalize_char(const std::vector<Rational>& a) {
  if (a.empty())
    throw std::invalid_argument("normalize_char: empty coefficient list");
  if (std::all_of(a.begin(), a.end(), [&](const Rational& v) { return v == a.front(); }))
    throw std::invalid_argument("normalize_char: trivial character (all coefficients equal)");
  CharacterH out;
  out.n = static_cast<int>(a.size());
  std::vector<int> order(a.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a[static_cast<std::size_t>(x)] < a[static_cast<std::size_t>(y)]; });
  const Rational top = a[static_cast<std::size_t>(order.back())];
  for (int k : order) {
    out.a.push_back(a[static_cast<std::size_t>(k)] - top);
    out.order.push_back(k + 1);
    out.m += out.a.back() < 0;
  }
  return out;
}

Rational eval(const std::vector<Rational>& a, const HoughtonMap& phi) {
  if (a.size() != phi.translations().size())
    throw std::invalid_argument("eval: coefficient count differs from the ray count");
  Rational total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    total += a[i] * phi.translations()[i];
  return total;
}

Link ascending_link(const HoughtonMap& phi, const std::vector<Rational>& a, long long feet_cap,
                    const Budget& budget) {
  normalize_char(a);
  // the representative with maximum 0 is the height function on M
  std::vector<Rational> shifted = a;
  const Rational top = *std::max_element(a.begin(), a.end());
  for (auto& v : shifted)
    v -= top;
  const Link full = link(phi, feet_cap, budget);
  const Neighbors around = neighbors(phi);
  const Rational base = eval(shifted, phi);
  std::vector<int> keep;
  for (std::size_t v = 0; v < full.vertices.size(); ++v) {
    const LinkVertex& lv = full.vertices[v];
    Rational delta;
    if (lv.up) {
      delta = eval(shifted, around.up[static_cast<std::size_t>(lv.ray - 1)]) - base;
    } else {
      const auto it = std::find_if(around.down.begin(), around.down.end(), [&](const DownMove& d) {
        return d.ray == lv.ray && d.point == lv.point;
      });
      delta = eval(shifted, it->lower) - base;
    }
    // f moves by +1 up and -1 down, which breaks ties
    if (delta > 0 || (delta == 0 && lv.up))
      keep.push_back(static_cast<int>(v));
  }
  Link out;
  for (int v : keep)
    out.vertices.push_back(full.vertices[static_cast<std::size_t>(v)]);
  out.complex = full.complex.induced(keep);
  std::vector<std::string> labels;
  for (const auto& v : out.vertices)
    labels.push_back(vertex_label(v));
  out.complex.set_labels(std::move(labels));
  return out;
}

long long default_feet_cap(int n) { return 3LL * n - 3; }

std::string ClassificationH::summary() const {
  std::ostringstream out;
  out << "normalized (";
  for (std::size_t i = 0; i < normalized.a.size(); ++i)
    out << (i ? "," : "") << to_string(normalized.a[i]);
  out << "), m=" << normalized.m << ": in Sigma^" << member_of << "; conjecture: not in Sigma^"
      << conjectured_not << (conjecture_proven ? " (proven for m <= 2)" : " (open)");
  return out.str();
}

ClassificationH sigma_classify_H(const std::vector<Rational>& a) {
  ClassificationH out;
  out.normalized = normalize_char(a);
  out.member_of = out.normalized.m - 1;
  out.conjectured_not = out.normalized.m;
  out.conjecture_proven = out.normalized.m <= 2;
  return out;
}

HoughtonMap random_bijection(int n, int steps, std::mt19937_64& rng) {
  HoughtonMap out = HoughtonMap::identity(n);
  std::uniform_int_distribution<int> ray(1, n);
  std::uniform_int_distribution<long long> pos(1, 3);
  for (int s = 0; s < steps; ++s) {
    const int i = ray(rng);
    const int j = ray(rng);
    HoughtonMap g = HoughtonMap::identity(n);
    if (i != j && rng() % 2 == 0) {
      std::vector<long long> m(static_cast<std::size_t>(n), 0);
      m[static_cast<std::size_t>(i - 1)] = -1;
      m[static_cast<std::size_t>(j - 1)] = 1;
      g = HoughtonMap(n, m, {{Point{i, 1}, Point{j, 1}}});
    } else {
      const Point p{i, pos(rng)};
      const Point q{j, pos(rng)};
      if (p != q)
        g = HoughtonMap(n, std::vector<long long>(static_cast<std::size_t>(n), 0), {{p, q}, {q, p}});
    }
    out = compose(out, g);
  }
  return out;
}

HoughtonMap random_monoid_element(int n, int f, int steps, std::mt19937_64& rng) {
  HoughtonMap out = random_bijection(n, steps, rng);
  std::uniform_int_distribution<int> ray(1, n);
  for (int k = 0; k < f; ++k)
    out = compose(out, HoughtonMap::t(n, ray(rng)));
  return compose(out, random_bijection(n, steps, rng));
}

}  // namespace sigmakit::houghton
