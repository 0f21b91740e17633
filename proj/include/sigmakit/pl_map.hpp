#pragma once

// F_n as piecewise-linear homeomorphisms of [0,1]. For an element [T, U]
// the plus tree U subdivides the domain and the minus tree T the range;
// the j-th domain interval is mapped affinely onto the j-th range interval.

#include "sigmakit/groupoid.hpp"
#include "sigmakit/numeric.hpp"

#include <utility>
#include <vector>

namespace sigmakit {

struct Breakpoint {
  Rational x;
  Rational y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

class PLMap {
 public:
  /// Drops interior points where the slope does not change. Throws if the
  /// points are not strictly increasing from (0,0) to (1,1) or a slope is
  /// not an integer power of n.
  PLMap(int n, std::vector<Breakpoint> points);

  int arity() const noexcept { return n_; }
  /// Includes the endpoints (0,0) and (1,1).
  const std::vector<Breakpoint>& points() const noexcept { return points_; }
  /// log_n of the slope on segment j (between points j and j+1).
  const std::vector<long long>& log_slopes() const noexcept { return log_slopes_; }

  Rational operator()(const Rational& x) const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  int n_;
  std::vector<Breakpoint> points_;
  std::vector<long long> log_slopes_;
};

/// Left endpoints of the leaf intervals of a tree, one per leaf.
std::vector<Rational> leaf_endpoints(const Tree& tree);

PLMap pl_from_pair(const Element& g);
/// (f o g)(x) = f(g(x)).
PLMap compose(const PLMap& f, const PLMap& g);

/// Exponent e with value = n^e; throws if value is not a power of n.
long long log_n(const Rational& value, int n);

/// Orbit class of an n-adic point x in (0,1): write x = a / n^k and take
/// (a - 1) mod (n - 1). Independent of the chosen k.
int orbit_index(const Rational& x, int n);

long long pl_chi0(const PLMap& f);
long long pl_chi1(const PLMap& f);
/// Sum over breakpoints x in orbit class i of log_n(left slope) minus
/// log_n(right slope), for 0 <= i <= n-2.
long long pl_psi(const PLMap& f, int i);

}  // namespace sigmakit
