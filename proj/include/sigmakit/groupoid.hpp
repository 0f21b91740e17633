#pragma once

// The groupoid of n-ary forest pairs [E-, E+]. Heads are the roots of E-,
// feet are the roots of E+. The product a*b is defined when feet(a) equals
// heads(b); read as maps, E+ is the domain and E- the range, so a*b means
// "first b, then a".

#include "sigmakit/trees.hpp"

#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigmakit {

/// An unreduced forest pair.
struct ForestPair {
  Forest minus;
  Forest plus;
};

/// Leaf indices k at which both forests have an exposed caret starting at k.
std::vector<std::size_t> common_reductions(const ForestPair& pair);
ForestPair apply_reduction(const ForestPair& pair, std::size_t k);
/// Adds a caret at leaf k of both forests.
ForestPair expand(const ForestPair& pair, std::size_t k);

class Element {
 public:
  /// Reduces the pair. Throws std::invalid_argument on a leaf-count or
  /// arity mismatch.
  Element(Forest minus, Forest plus);
  explicit Element(const ForestPair& pair) : Element(pair.minus, pair.plus) {}

  int arity() const noexcept { return minus_.arity(); }
  const Forest& minus() const noexcept { return minus_; }
  const Forest& plus() const noexcept { return plus_; }
  std::size_t heads() const noexcept { return minus_.roots(); }
  std::size_t feet() const noexcept { return plus_.roots(); }
  ForestPair pair() const { return {minus_, plus_}; }
  bool is_identity() const { return minus_.is_trivial() && plus_.is_trivial(); }
  bool in_group() const { return heads() == 1 && feet() == 1; }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  struct Reduced {};
  Element(Forest minus, Forest plus, Reduced);
  friend Element reduce(const ForestPair&);
  friend Element reduce_randomly(const ForestPair&, std::mt19937_64&);

  Forest minus_;
  Forest plus_;
};

/// Fully reduces by always removing the leftmost common caret.
Element reduce(const ForestPair& pair);
/// Fully reduces choosing a uniformly random common caret at every step.
/// Used to test confluence.
Element reduce_randomly(const ForestPair& pair, std::mt19937_64& rng);

Element identity(std::size_t k, int arity);
Element multiply(const Element& a, const Element& b);
Element invert(const Element& a);

/// The generator x_i of F_n: [V + caret at leaf i, V + caret at the last
/// leaf], where V is the shortest right vine in which leaf i is not last.
/// Satisfies x_j x_i = x_i x_{j+n-1} for i < j.
Element generator_x(std::size_t i, int arity);

/// Splitting foot k: x * [Lambda(r,k), id].
Element split(const Element& x, std::size_t k);
/// Merging feet k..k+n-1: x * [id, Lambda(r-n+1,k)].
Element merge(const Element& x, std::size_t k);

/// x <= y iff x^-1 y reduces to [E, id] for some forest E.
bool leq(const Element& x, const Element& y);
/// x preceq y iff additionally E is elementary.
bool preceq(const Element& x, const Element& y);

/// All y = x * [E, id] over elementary forests E on the feet of x, in the
/// order of the feet subsets' binary encoding (bit k = split foot k).
std::vector<std::pair<Forest, Element>> elementary_cofaces(const Element& x);

/// g = y * x^-1; requires heads(x) = heads(y) = 1 and equal feet.
Element transitivity_witness(const Element& x, const Element& y);

/// `<forest>|<forest>`; reduced on ingest. Arity 0 means infer it from
/// the first caret (falling back to 2 when there is none).
Element parse_element(std::string_view text, int arity = 0);
std::string render(const Element& e);

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

}  // namespace sigmakit
