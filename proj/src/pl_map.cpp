#include "sigmakit/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigmakit {

namespace {

Integer positive_mod(const Integer& value, const Integer& modulus) {
  Integer r = value % modulus;
  if (r < 0)
    r += modulus;
  return r;
}

}  // namespace

long long log_n(const Rational& value, int n) {
  if (value <= 0)
    throw std::invalid_argument("log_n of a non-positive value");
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);
  long long e = 0;
  while (num % n == 0 && num > 1) {
    num /= n;
    ++e;
  }
  while (den % n == 0 && den > 1) {
    den /= n;
    --e;
  }
  if (num != 1 || den != 1)
    throw std::invalid_argument("value " + to_string(value) + " is not a power of " +
                                std::to_string(n));
  return e;
}

PLMap::PLMap(int n, std::vector<Breakpoint> points) : n_(n) {
  if (n < 2)
    throw std::invalid_argument("arity must be at least 2");
  if (points.size() < 2 || points.front() != Breakpoint{0, 0} ||
      points.back() != Breakpoint{1, 1})
    throw std::invalid_argument("PL map must run from (0,0) to (1,1)");
  std::vector<long long> slopes;
  for (std::size_t j = 0; j + 1 < points.size(); ++j) {
    const Rational dx = points[j + 1].x - points[j].x;
    const Rational dy = points[j + 1].y - points[j].y;
    if (dx <= 0 || dy <= 0)
      throw std::invalid_argument("PL map breakpoints must be strictly increasing");
    slopes.push_back(log_n(dy / dx, n));
  }
  points_.push_back(points.front());
  for (std::size_t j = 1; j + 1 < points.size(); ++j) {
    if (slopes[j - 1] != slopes[j])
      points_.push_back(points[j]);
  }
  points_.push_back(points.back());
  for (std::size_t j = 0; j + 1 < slopes.size() + 1; ++j) {
    if (j == 0 || slopes[j] != slopes[j - 1])
      log_slopes_.push_back(slopes[j]);
  }
}

Rational PLMap::operator()(const Rational& x) const {
  if (x < 0 || x > 1)
    throw std::out_of_range("PL map evaluated outside [0,1]");
  for (std::size_t j = 0; j + 1 < points_.size(); ++j) {
    const Breakpoint& p = points_[j];
    const Breakpoint& q = points_[j + 1];
    if (x <= q.x)
      return p.y + (x - p.x) * (q.y - p.y) / (q.x - p.x);
  }
  return 1;
}

std::vector<Rational> leaf_endpoints(const Tree& tree) {
  std::vector<Rational> out;
  out.reserve(tree.leaf_count());
  // stack of (next child's left endpoint, child width, children left)
  struct Frame {
    Rational left;
    Rational width;
    int remaining;
  };
  std::vector<Frame> stack;
  Rational left = 0;
  Rational width = 1;
  for (std::uint8_t symbol : tree.code()) {
    if (symbol) {
      stack.push_back({left, width / tree.arity(), tree.arity()});
      width = stack.back().width;
      continue;
    }
    out.push_back(left);
    left += width;
    while (!stack.empty() && --stack.back().remaining == 0)
      stack.pop_back();
    if (!stack.empty())
      width = stack.back().width;
  }
  return out;
}

PLMap pl_from_pair(const Element& g) {
  if (!g.in_group())
    throw std::invalid_argument("pl_from_pair: element is not in F_n (heads or feet != 1)");
  const auto domain = leaf_endpoints(g.plus().tree(0));
  const auto range = leaf_endpoints(g.minus().tree(0));
  std::vector<Breakpoint> points;
  points.reserve(domain.size() + 1);
  for (std::size_t j = 0; j < domain.size(); ++j)
    points.push_back({domain[j], range[j]});
  points.push_back({1, 1});
  return PLMap(g.arity(), std::move(points));
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.arity() != g.arity())
    throw std::invalid_argument("compose: arity mismatch");
  // breakpoints of f o g: those of g, and preimages under g of those of f
  std::vector<Rational> xs;
  for (const auto& p : g.points())
    xs.push_back(p.x);
  const auto& gp = g.points();
  for (const auto& p : f.points()) {
    for (std::size_t j = 0; j + 1 < gp.size(); ++j) {
      if (p.x >= gp[j].y && p.x <= gp[j + 1].y) {
        xs.push_back(gp[j].x + (p.x - gp[j].y) * (gp[j + 1].x - gp[j].x) /
                                   (gp[j + 1].y - gp[j].y));
        break;
      }
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Breakpoint> points;
  for (const auto& x : xs)
    points.push_back({x, f(g(x))});
  return PLMap(f.arity(), std::move(points));
}

int orbit_index(const Rational& x, int n) {
  if (x <= 0 || x >= 1)
    throw std::invalid_argument("orbit_index: point must lie in (0,1)");
  Integer a = boost::multiprecision::numerator(x);
  Integer den = boost::multiprecision::denominator(x);
  Integer power = 1;
  for (int k = 0; power % den != 0; ++k) {
    if (k > 10000)
      throw std::invalid_argument("orbit_index: denominator is not n-adic");
    power *= n;
  }
  a *= power / den;
  return static_cast<int>(positive_mod(a - 1, Integer(n - 1)));
}

long long pl_chi0(const PLMap& f) { return f.log_slopes().front(); }

long long pl_chi1(const PLMap& f) { return f.log_slopes().back(); }

long long pl_psi(const PLMap& f, int i) {
  if (i < 0 || i > f.arity() - 2)
    throw std::out_of_range("pl_psi: index out of range");
  long long total = 0;
  const auto& pts = f.points();
  const auto& slopes = f.log_slopes();
  for (std::size_t j = 1; j + 1 < pts.size(); ++j) {
    if (orbit_index(pts[j].x, f.arity()) == i)
      total += slopes[j - 1] - slopes[j];
  }
  return total;
}

}  // namespace sigmakit
