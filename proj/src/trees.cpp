#include "sigmakit/trees.hpp"

#include "sigmakit/errors.hpp"

#include <stdexcept>

namespace sigmakit {

namespace {

// Position one past the subtree starting at `pos`.
std::size_t skip_subtree(const std::vector<std::uint8_t>& code, std::size_t pos,
                         int arity) {
  std::size_t pending = 1;
  while (pending > 0) {
    pending += code[pos] ? static_cast<std::size_t>(arity) - 1 : 0;
    if (!code[pos])
      --pending;
    ++pos;
  }
  return pos;
}

// Code position of leaf k.
std::size_t leaf_position(const std::vector<std::uint8_t>& code, std::size_t k) {
  std::size_t seen = 0;
  for (std::size_t pos = 0; pos < code.size(); ++pos) {
    if (code[pos])
      continue;
    if (seen == k)
      return pos;
    ++seen;
  }
  throw std::out_of_range("leaf index " + std::to_string(k) + " out of range");
}

void check_arity(int arity) {
  if (arity < 2)
    throw std::invalid_argument("arity must be at least 2");
}

void union_into(const Tree& a, std::size_t& ia, const Tree& b, std::size_t& ib,
                std::vector<std::uint8_t>& out) {
  const auto& ca = a.code();
  const auto& cb = b.code();
  if (ca[ia] && cb[ib]) {
    out.push_back(1);
    ++ia;
    ++ib;
    for (int c = 0; c < a.arity(); ++c)
      union_into(a, ia, b, ib, out);
  } else if (ca[ia]) {
    const std::size_t end = skip_subtree(ca, ia, a.arity());
    out.insert(out.end(), ca.begin() + static_cast<std::ptrdiff_t>(ia),
               ca.begin() + static_cast<std::ptrdiff_t>(end));
    ia = end;
    ++ib;
  } else if (cb[ib]) {
    const std::size_t end = skip_subtree(cb, ib, b.arity());
    out.insert(out.end(), cb.begin() + static_cast<std::ptrdiff_t>(ib),
               cb.begin() + static_cast<std::ptrdiff_t>(end));
    ib = end;
    ++ia;
  } else {
    out.push_back(0);
    ++ia;
    ++ib;
  }
}

void difference_into(const Tree& small, std::size_t& is, const Tree& big,
                     std::size_t& ib, std::vector<Tree>& out) {
  const auto& cs = small.code();
  const auto& cb = big.code();
  if (!cs[is]) {
    const std::size_t end = skip_subtree(cb, ib, big.arity());
    out.push_back(Tree::from_code(
        big.arity(), std::vector<std::uint8_t>(cb.begin() + static_cast<std::ptrdiff_t>(ib),
                                               cb.begin() + static_cast<std::ptrdiff_t>(end))));
    ++is;
    ib = end;
    return;
  }
  if (!cb[ib])
    throw std::invalid_argument("tree_difference: tree is not an expansion");
  ++is;
  ++ib;
  for (int c = 0; c < small.arity(); ++c)
    difference_into(small, is, big, ib, out);
}

class TreeParser {
 public:
  TreeParser(std::string_view text, std::size_t offset, int arity)
      : text_(text), pos_(offset), arity_(arity) {}

  std::vector<std::uint8_t> parse_one() {
    std::vector<std::uint8_t> code;
    node(code);
    return code;
  }

  std::size_t position() const { return pos_; }

 private:
  void node(std::vector<std::uint8_t>& code) {
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of tree", pos_);
    const char ch = text_[pos_];
    if (ch == '*') {
      code.push_back(0);
      ++pos_;
      return;
    }
    if (ch != '(')
      throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
    const std::size_t open = pos_;
    ++pos_;
    code.push_back(1);
    int children = 0;
    while (pos_ < text_.size() && text_[pos_] != ')') {
      if (children == arity_)
        throw ParseError("caret has more than " + std::to_string(arity_) + " children",
                         pos_);
      node(code);
      ++children;
    }
    if (pos_ >= text_.size())
      throw ParseError("unterminated caret opened", open);
    if (children != arity_)
      throw ParseError("caret has " + std::to_string(children) + " children, expected " +
                           std::to_string(arity_),
                       pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_;
  int arity_;
};

}  // namespace

Tree::Tree(int arity) : arity_(arity), code_{0}, leaves_(1) { check_arity(arity); }

Tree::Tree(int arity, std::vector<std::uint8_t> code, std::size_t leaves)
    : arity_(arity), code_(std::move(code)), leaves_(leaves) {}

Tree Tree::from_code(int arity, std::vector<std::uint8_t> code) {
  check_arity(arity);
  std::size_t pending = 1;
  std::size_t leaves = 0;
  for (std::size_t pos = 0; pos < code.size(); ++pos) {
    if (pending == 0)
      throw std::invalid_argument("tree code has trailing symbols");
    if (code[pos]) {
      pending += static_cast<std::size_t>(arity) - 1;
    } else {
      --pending;
      ++leaves;
    }
  }
  if (pending != 0)
    throw std::invalid_argument("tree code is incomplete");
  return Tree(arity, std::move(code), leaves);
}

Tree Tree::caret(int arity) {
  check_arity(arity);
  std::vector<std::uint8_t> code(static_cast<std::size_t>(arity) + 1, 0);
  code[0] = 1;
  return Tree(arity, std::move(code), static_cast<std::size_t>(arity));
}

std::vector<int> Tree::leaf_depths() const {
  std::vector<int> depths;
  depths.reserve(leaves_);
  // remaining[d] = children still to visit under the open caret at depth d
  std::vector<int> remaining;
  for (std::uint8_t symbol : code_) {
    const int depth = static_cast<int>(remaining.size());
    if (symbol) {
      remaining.push_back(arity_);
      continue;
    }
    depths.push_back(depth);
    while (!remaining.empty() && --remaining.back() == 0)
      remaining.pop_back();
  }
  return depths;
}

Tree Tree::attach_caret(std::size_t k) const {
  const std::size_t pos = leaf_position(code_, k);
  std::vector<std::uint8_t> code;
  code.reserve(code_.size() + static_cast<std::size_t>(arity_));
  code.insert(code.end(), code_.begin(), code_.begin() + static_cast<std::ptrdiff_t>(pos));
  code.push_back(1);
  code.insert(code.end(), static_cast<std::size_t>(arity_), 0);
  code.insert(code.end(), code_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, code_.end());
  return Tree(arity_, std::move(code), leaves_ + static_cast<std::size_t>(arity_) - 1);
}

bool Tree::has_exposed_caret(std::size_t k) const {
  if (k + static_cast<std::size_t>(arity_) > leaves_)
    return false;
  const std::size_t pos = leaf_position(code_, k);
  if (pos == 0 || !code_[pos - 1])
    return false;
  for (int c = 0; c < arity_; ++c)
    if (code_[pos + static_cast<std::size_t>(c)])
      return false;
  return true;
}

std::vector<std::size_t> Tree::exposed_carets() const {
  std::vector<std::size_t> result;
  std::size_t leaf = 0;
  const std::size_t n = static_cast<std::size_t>(arity_);
  for (std::size_t pos = 0; pos < code_.size(); ++pos) {
    if (!code_[pos]) {
      ++leaf;
      continue;
    }
    bool exposed = pos + n < code_.size();
    for (std::size_t c = 1; exposed && c <= n; ++c)
      exposed = !code_[pos + c];
    if (exposed)
      result.push_back(leaf);
  }
  return result;
}

Tree Tree::remove_caret(std::size_t k) const {
  if (!has_exposed_caret(k))
    throw std::invalid_argument("no exposed caret at leaf " + std::to_string(k));
  const std::size_t pos = leaf_position(code_, k) - 1;
  std::vector<std::uint8_t> code;
  code.reserve(code_.size());
  code.insert(code.end(), code_.begin(), code_.begin() + static_cast<std::ptrdiff_t>(pos));
  code.push_back(0);
  code.insert(code.end(), code_.begin() + static_cast<std::ptrdiff_t>(pos + 1 + static_cast<std::size_t>(arity_)),
              code_.end());
  return Tree(arity_, std::move(code), leaves_ - static_cast<std::size_t>(arity_) + 1);
}

Forest::Forest(int arity, std::vector<Tree> trees) : arity_(arity), trees_(std::move(trees)) {
  check_arity(arity);
  if (trees_.empty())
    throw std::invalid_argument("a forest needs at least one tree");
  for (const Tree& t : trees_) {
    if (t.arity() != arity)
      throw std::invalid_argument("forest mixes arities");
    leaves_ += t.leaf_count();
  }
}

Forest Forest::trivial(int arity, std::size_t roots) {
  return Forest(arity, std::vector<Tree>(roots, Tree(arity)));
}

Forest Forest::single_caret(int arity, std::size_t roots, std::size_t k) {
  if (k >= roots)
    throw std::out_of_range("root index out of range");
  std::vector<Tree> trees(roots, Tree(arity));
  trees[k] = Tree::caret(arity);
  return Forest(arity, std::move(trees));
}

std::size_t Forest::caret_count() const {
  std::size_t total = 0;
  for (const Tree& t : trees_)
    total += t.caret_count();
  return total;
}

bool Forest::is_trivial() const {
  for (const Tree& t : trees_)
    if (!t.is_trivial())
      return false;
  return true;
}

bool Forest::is_elementary() const {
  for (const Tree& t : trees_)
    if (t.caret_count() > 1)
      return false;
  return true;
}

std::vector<int> Forest::leaf_depths() const {
  std::vector<int> depths;
  depths.reserve(leaves_);
  for (const Tree& t : trees_) {
    auto part = t.leaf_depths();
    depths.insert(depths.end(), part.begin(), part.end());
  }
  return depths;
}

std::pair<std::size_t, std::size_t> Forest::locate_leaf(std::size_t leaf) const {
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    if (leaf < trees_[i].leaf_count())
      return {i, leaf};
    leaf -= trees_[i].leaf_count();
  }
  throw std::out_of_range("leaf index out of range");
}

Forest Forest::attach_caret(std::size_t k) const {
  auto [root, offset] = locate_leaf(k);
  std::vector<Tree> trees = trees_;
  trees[root] = trees[root].attach_caret(offset);
  return Forest(arity_, std::move(trees));
}

bool Forest::has_exposed_caret(std::size_t k) const {
  if (k >= leaves_)
    return false;
  auto [root, offset] = locate_leaf(k);
  return trees_[root].has_exposed_caret(offset);
}

std::vector<std::size_t> Forest::exposed_carets() const {
  std::vector<std::size_t> result;
  std::size_t base = 0;
  for (const Tree& t : trees_) {
    for (std::size_t k : t.exposed_carets())
      result.push_back(base + k);
    base += t.leaf_count();
  }
  return result;
}

Forest Forest::remove_caret(std::size_t k) const {
  auto [root, offset] = locate_leaf(k);
  std::vector<Tree> trees = trees_;
  trees[root] = trees[root].remove_caret(offset);
  return Forest(arity_, std::move(trees));
}

Tree tree_union(const Tree& a, const Tree& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("tree_union: arity mismatch");
  std::vector<std::uint8_t> out;
  std::size_t ia = 0;
  std::size_t ib = 0;
  union_into(a, ia, b, ib, out);
  return Tree::from_code(a.arity(), std::move(out));
}

std::vector<Tree> tree_difference(const Tree& small, const Tree& big) {
  if (small.arity() != big.arity())
    throw std::invalid_argument("tree_difference: arity mismatch");
  std::vector<Tree> out;
  out.reserve(small.leaf_count());
  std::size_t is = 0;
  std::size_t ib = 0;
  difference_into(small, is, big, ib, out);
  return out;
}

Tree graft(const Tree& base, const std::vector<Tree>& pieces) {
  if (pieces.size() != base.leaf_count())
    throw std::invalid_argument("graft: need one piece per leaf");
  std::vector<std::uint8_t> code;
  std::size_t leaf = 0;
  for (std::uint8_t symbol : base.code()) {
    if (symbol) {
      code.push_back(1);
      continue;
    }
    const Tree& piece = pieces[leaf++];
    if (piece.arity() != base.arity())
      throw std::invalid_argument("graft: arity mismatch");
    code.insert(code.end(), piece.code().begin(), piece.code().end());
  }
  return Tree::from_code(base.arity(), std::move(code));
}

Forest forest_union(const Forest& a, const Forest& b) {
  if (a.roots() != b.roots())
    throw std::invalid_argument("forest_union: root counts differ");
  std::vector<Tree> trees;
  trees.reserve(a.roots());
  for (std::size_t i = 0; i < a.roots(); ++i)
    trees.push_back(tree_union(a.tree(i), b.tree(i)));
  return Forest(a.arity(), std::move(trees));
}

std::vector<Tree> forest_difference(const Forest& small, const Forest& big) {
  if (small.roots() != big.roots())
    throw std::invalid_argument("forest_difference: root counts differ");
  std::vector<Tree> out;
  out.reserve(small.leaf_count());
  for (std::size_t i = 0; i < small.roots(); ++i) {
    auto part = tree_difference(small.tree(i), big.tree(i));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Forest graft(const Forest& base, const std::vector<Tree>& pieces) {
  if (pieces.size() != base.leaf_count())
    throw std::invalid_argument("graft: need one piece per leaf");
  std::vector<Tree> trees;
  trees.reserve(base.roots());
  std::size_t next = 0;
  for (const Tree& t : base.trees()) {
    std::vector<Tree> local(pieces.begin() + static_cast<std::ptrdiff_t>(next),
                            pieces.begin() + static_cast<std::ptrdiff_t>(next + t.leaf_count()));
    next += t.leaf_count();
    trees.push_back(graft(t, local));
  }
  return Forest(base.arity(), std::move(trees));
}

Tree parse_tree(std::string_view text, int arity) {
  check_arity(arity);
  TreeParser parser(text, 0, arity);
  auto code = parser.parse_one();
  if (parser.position() != text.size())
    throw ParseError("trailing characters after tree", parser.position());
  return Tree::from_code(arity, std::move(code));
}

Forest parse_forest(std::string_view text, int arity) {
  check_arity(arity);
  if (text.empty())
    throw ParseError("empty forest", 0);
  if (text.front() != '[')
    return Forest(arity, {parse_tree(text, arity)});
  std::vector<Tree> trees;
  std::size_t pos = 1;
  while (true) {
    TreeParser parser(text, pos, arity);
    trees.push_back(Tree::from_code(arity, parser.parse_one()));
    pos = parser.position();
    if (pos >= text.size())
      throw ParseError("unterminated forest", pos);
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',')
      throw ParseError(std::string("expected ',' or ']' but found '") + text[pos] + "'", pos);
    ++pos;
  }
  if (pos != text.size())
    throw ParseError("trailing characters after forest", pos);
  return Forest(arity, std::move(trees));
}

std::string render(const Tree& tree) {
  std::string out;
  out.reserve(tree.code().size() * 2);
  std::vector<int> remaining;
  for (std::uint8_t symbol : tree.code()) {
    if (symbol) {
      out.push_back('(');
      remaining.push_back(tree.arity());
      continue;
    }
    out.push_back('*');
    while (!remaining.empty() && --remaining.back() == 0) {
      remaining.pop_back();
      out.push_back(')');
    }
  }
  return out;
}

std::string render(const Forest& forest) {
  std::string out = "[";
  for (std::size_t i = 0; i < forest.roots(); ++i) {
    if (i)
      out.push_back(',');
    out += render(forest.tree(i));
  }
  out.push_back(']');
  return out;
}

std::string render_compact(const Forest& forest) {
  return forest.roots() == 1 ? render(forest.tree(0)) : render(forest);
}

int infer_arity(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos)
    return 0;
  int depth = 0;
  int children = 0;
  for (std::size_t pos = open + 1; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '(') {
      if (depth == 0)
        ++children;
      ++depth;
    } else if (ch == ')') {
      if (depth == 0)
        return children;
      --depth;
    } else if (ch == '*' && depth == 0) {
      ++children;
    }
  }
  throw ParseError("unterminated caret opened", open);
}

ProtoVector proto_from_depths(const std::vector<int>& depths, int arity) {
  check_arity(arity);
  ProtoVector p;
  p.D.assign(static_cast<std::size_t>(arity - 1), 0);
  if (depths.empty())
    return p;
  p.L = depths.front();
  p.R = depths.back();
  const std::size_t period = static_cast<std::size_t>(arity - 1);
  for (std::size_t j = 0; j + 1 < depths.size(); ++j)
    p.D[j % period] += depths[j] - depths[j + 1];
  return p;
}

ProtoVector proto(const Tree& tree) { return proto_from_depths(tree.leaf_depths(), tree.arity()); }

ProtoVector proto(const Forest& forest) {
  return proto_from_depths(forest.leaf_depths(), forest.arity());
}

ProtoVector operator-(const ProtoVector& a, const ProtoVector& b) {
  if (a.D.size() != b.D.size())
    throw std::invalid_argument("proto vectors of different arity");
  ProtoVector out;
  out.L = a.L - b.L;
  out.R = a.R - b.R;
  out.D.resize(a.D.size());
  for (std::size_t i = 0; i < a.D.size(); ++i)
    out.D[i] = a.D[i] - b.D[i];
  return out;
}

}  // namespace sigmakit
