#pragma once

// Ordered rooted n-ary trees and forests.
//
// A tree is stored as its preorder code: 1 for an internal node (a caret),
// 0 for a leaf. Every internal node has exactly `arity` children, so the
// code determines the shape. Leaves are numbered 0..r-1 left to right.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigmakit {

class Tree {
 public:
  /// The trivial tree (a single leaf) of the given arity.
  explicit Tree(int arity = 2);

  /// Builds a tree from a preorder code; throws std::invalid_argument if
  /// the code is not a complete tree.
  static Tree from_code(int arity, std::vector<std::uint8_t> code);
  /// One caret: arity leaves at depth 1.
  static Tree caret(int arity);

  int arity() const noexcept { return arity_; }
  const std::vector<std::uint8_t>& code() const noexcept { return code_; }
  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t caret_count() const noexcept { return code_.size() - leaves_; }
  bool is_trivial() const noexcept { return code_.size() == 1; }

  std::vector<int> leaf_depths() const;

  /// Attaches a caret to leaf k.
  Tree attach_caret(std::size_t k) const;
  /// True if leaves k..k+n-1 are the children of a single caret.
  bool has_exposed_caret(std::size_t k) const;
  /// First-leaf indices of all exposed carets, increasing.
  std::vector<std::size_t> exposed_carets() const;
  /// Removes the exposed caret whose first leaf is k.
  Tree remove_caret(std::size_t k) const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  Tree(int arity, std::vector<std::uint8_t> code, std::size_t leaves);

  int arity_;
  std::vector<std::uint8_t> code_;
  std::size_t leaves_;
};

class Forest {
 public:
  Forest() = default;
  Forest(int arity, std::vector<Tree> trees);

  /// id_r: r trivial trees.
  static Forest trivial(int arity, std::size_t roots);
  /// Lambda(r, k): r roots, a single caret on root k.
  static Forest single_caret(int arity, std::size_t roots, std::size_t k);

  int arity() const noexcept { return arity_; }
  const std::vector<Tree>& trees() const noexcept { return trees_; }
  const Tree& tree(std::size_t i) const { return trees_.at(i); }
  std::size_t roots() const noexcept { return trees_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_; }
  std::size_t caret_count() const;
  bool is_trivial() const;
  /// Every tree is trivial or a single caret.
  bool is_elementary() const;

  /// Depth of each leaf measured from its own root, in global leaf order.
  std::vector<int> leaf_depths() const;
  /// Index of the root above global leaf `leaf`, and the leaf's offset
  /// inside that tree.
  std::pair<std::size_t, std::size_t> locate_leaf(std::size_t leaf) const;

  Forest attach_caret(std::size_t k) const;
  bool has_exposed_caret(std::size_t k) const;
  std::vector<std::size_t> exposed_carets() const;
  Forest remove_caret(std::size_t k) const;

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest&, const Forest&) = default;

 private:
  int arity_ = 2;
  std::vector<Tree> trees_;
  std::size_t leaves_ = 0;
};

/// Least common expansion of two trees (superposition of their carets).
Tree tree_union(const Tree& a, const Tree& b);
/// Given `big` expanding `small`, the subtree of `big` hanging from each
/// leaf of `small`. Throws std::invalid_argument if `big` does not contain
/// `small`.
std::vector<Tree> tree_difference(const Tree& small, const Tree& big);
/// Replaces leaf j of `base` by pieces[j].
Tree graft(const Tree& base, const std::vector<Tree>& pieces);

/// Tree-wise versions; both forests must have the same root count.
Forest forest_union(const Forest& a, const Forest& b);
std::vector<Tree> forest_difference(const Forest& small, const Forest& big);
Forest graft(const Forest& base, const std::vector<Tree>& pieces);

/// Leaf `*`, internal node `(` + n children + `)`. No whitespace.
Tree parse_tree(std::string_view text, int arity);
/// `[t,t,...]`; a bare tree is accepted as a one-tree forest.
Forest parse_forest(std::string_view text, int arity);
std::string render(const Tree& tree);
/// Always bracketed.
std::string render(const Forest& forest);
/// Bare tree for one-root forests, bracketed otherwise.
std::string render_compact(const Forest& forest);

/// Infers the arity of a tree or forest literal from its first caret.
/// Returns 0 when the literal has no caret.
int infer_arity(std::string_view text);

struct ProtoVector {
  long long L = 0;
  long long R = 0;
  std::vector<long long> D;  // indexed 0..n-2

  friend bool operator==(const ProtoVector&, const ProtoVector&) = default;
};

ProtoVector proto(const Tree& tree);
ProtoVector proto(const Forest& forest);
/// Measurements from a list of leaf depths (global order).
ProtoVector proto_from_depths(const std::vector<int>& depths, int arity);
ProtoVector operator-(const ProtoVector& a, const ProtoVector& b);

}  // namespace sigmakit
