#pragma once

// Houghton groups H_n and the monoid M of injections of n rays of
// naturals that are eventually translations. Rays and positions are
// 1-based: the point (i, x) is the x-th point of ray i. Maps act on the
// right and compose(a, b) applies a first.

#include "sigmakit/complex.hpp"
#include "sigmakit/errors.hpp"
#include "sigmakit/numeric.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sigmakit::houghton {

struct Point {
  int ray = 1;
  long long pos = 1;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class HoughtonMap {
 public:
  /// (i, x) maps to exceptions[(i, x)] if present and to (i, x + m_i)
  /// otherwise. Entries agreeing with the translation rule are dropped.
  /// Throws std::invalid_argument if the map is not injective, sends a
  /// point off the rays, or the arguments are malformed.
  HoughtonMap(int n, std::vector<long long> m, std::map<Point, Point> exceptions = {});

  static HoughtonMap identity(int n);
  /// t_i: shifts ray i up by one and fixes the other rays.
  static HoughtonMap t(int n, int i);

  int rays() const noexcept { return n_; }
  const std::vector<long long>& translations() const noexcept { return m_; }
  const std::map<Point, Point>& exceptions() const noexcept { return exceptions_; }
  /// Largest exceptional position on ray i (0 when none).
  long long threshold(int i) const;

  Point operator()(const Point& p) const;
  /// Points outside the image, sorted.
  std::vector<Point> complement() const;
  bool is_bijective() const { return f_value() == 0; }
  /// f = |complement|; cross-checked against the sum of translations.
  long long f_value() const;
  /// chi_i = m_i.
  const std::vector<long long>& char_values() const noexcept { return m_; }

  friend bool operator==(const HoughtonMap&, const HoughtonMap&) = default;
  friend auto operator<=>(const HoughtonMap&, const HoughtonMap&) = default;

 private:
  int n_;
  std::vector<long long> m_;
  std::map<Point, Point> exceptions_;
};

/// First a, then b.
HoughtonMap compose(const HoughtonMap& a, const HoughtonMap& b);
/// Inverse of a bijection; throws std::invalid_argument otherwise.
HoughtonMap inverse(const HoughtonMap& a);

/// `n; m=(m1,...,mn); map: (i,x)->(j,y), ...`
HoughtonMap parse_map(std::string_view text);
std::string render(const HoughtonMap& phi);

/// eta in H_n with compose(phi, eta) = psi. Throws std::invalid_argument
/// if f(phi) != f(psi).
HoughtonMap transitivity_witness(const HoughtonMap& phi, const HoughtonMap& psi);

struct DownMove {
  int ray = 1;
  Point point;        // the value psi takes at (ray, 1)
  HoughtonMap lower;  // psi with compose(t_ray, psi) = phi
};

struct Neighbors {
  std::vector<HoughtonMap> up;  // compose(t_i, phi), i = 1..n
  std::vector<DownMove> down;   // n * f(phi) entries, by ray then point
};
Neighbors neighbors(const HoughtonMap& phi);

/// A link vertex: an up move on a ray or a down move to a point.
struct LinkVertex {
  bool up = false;
  int ray = 1;
  Point point;  // meaningful for down moves
  friend auto operator<=>(const LinkVertex&, const LinkVertex&) = default;
};

struct Link {
  std::vector<LinkVertex> vertices;
  SimplicialComplex complex;  // labelled `u2`, `d1(3,2)`
};

/// lk phi in X_n^{f <= feet_cap}: a set of moves spans a cube when the up
/// rays avoid the down rays, down moves use distinct rays and distinct
/// points, and f(phi) + #up <= feet_cap.
Link link(const HoughtonMap& phi, long long feet_cap, const Budget& budget = {});
/// Down moves only.
Link descending_link(const HoughtonMap& phi, const Budget& budget = {});

struct CharacterH {
  int n = 2;
  std::vector<Rational> a;      // normalized: ascending, a_n = 0
  std::vector<int> order;       // a[k] is the coefficient of ray order[k] (1-based)
  int m = 0;                    // number of coefficients below the maximum
};

/// Sort ascending and subtract the maximum (chi_1 + ... + chi_n = 0 on
/// H_n). Throws std::invalid_argument when all coefficients agree.
CharacterH normalize_char(const std::vector<Rational>& a);
Rational eval(const std::vector<Rational>& a, const HoughtonMap& phi);

/// The subcomplex of link(phi, feet_cap) spanned by moves that raise
/// (chi, f) lexicographically. `a` is indexed by ray; chi is evaluated
/// with its maximum coefficient shifted to 0.
Link ascending_link(const HoughtonMap& phi, const std::vector<Rational>& a, long long feet_cap,
                    const Budget& budget = {});
/// 3n-3
long long default_feet_cap(int n);

struct ClassificationH {
  CharacterH normalized;
  int member_of = 0;          // [chi] lies in Sigma^{m-1}
  int conjectured_not = 0;    // conjecturally not in Sigma^m
  bool conjecture_proven = false;  // known for m <= 2
  std::string summary() const;
};
ClassificationH sigma_classify_H(const std::vector<Rational>& a);

/// Product of `steps` random bijective generators (translations between
/// two rays and transpositions near the origin).
HoughtonMap random_bijection(int n, int steps, std::mt19937_64& rng);
/// random_bijection followed by f up moves on random rays and another
/// random bijection, so f(result) = f.
HoughtonMap random_monoid_element(int n, int f, int steps, std::mt19937_64& rng);

}  // namespace sigmakit::houghton
