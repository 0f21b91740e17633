#include "sigmakit/groupoid.hpp"

#include "sigmakit/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigmakit {

namespace {

void check_pair(const Forest& minus, const Forest& plus) {
  if (minus.arity() != plus.arity())
    throw std::invalid_argument("forest pair mixes arities");
  if (minus.leaf_count() != plus.leaf_count())
    throw std::invalid_argument("forest pair has leaf counts " +
                                std::to_string(minus.leaf_count()) + " and " +
                                std::to_string(plus.leaf_count()));
}

// Leftmost k with an exposed caret in both forests, or npos.
std::size_t first_common_reduction(const Forest& minus, const Forest& plus) {
  const auto a = minus.exposed_carets();
  const auto b = plus.exposed_carets();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j])
      return a[i];
    if (a[i] < b[j])
      ++i;
    else
      ++j;
  }
  return static_cast<std::size_t>(-1);
}

Forest caret_forest(int arity, std::size_t roots, std::size_t subset) {
  std::vector<Tree> trees(roots, Tree(arity));
  for (std::size_t k = 0; k < roots; ++k)
    if (subset >> k & 1U)
      trees[k] = Tree::caret(arity);
  return Forest(arity, std::move(trees));
}

}  // namespace

std::vector<std::size_t> common_reductions(const ForestPair& pair) {
  const auto a = pair.minus.exposed_carets();
  const auto b = pair.plus.exposed_carets();
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ForestPair apply_reduction(const ForestPair& pair, std::size_t k) {
  return {pair.minus.remove_caret(k), pair.plus.remove_caret(k)};
}

ForestPair expand(const ForestPair& pair, std::size_t k) {
  return {pair.minus.attach_caret(k), pair.plus.attach_caret(k)};
}

Element::Element(Forest minus, Forest plus) : Element(reduce({std::move(minus), std::move(plus)})) {}

Element::Element(Forest minus, Forest plus, Reduced)
    : minus_(std::move(minus)), plus_(std::move(plus)) {}

Element reduce(const ForestPair& pair) {
  check_pair(pair.minus, pair.plus);
  Forest minus = pair.minus;
  Forest plus = pair.plus;
  while (true) {
    const std::size_t k = first_common_reduction(minus, plus);
    if (k == static_cast<std::size_t>(-1))
      break;
    minus = minus.remove_caret(k);
    plus = plus.remove_caret(k);
  }
  return Element(std::move(minus), std::move(plus), Element::Reduced{});
}

Element reduce_randomly(const ForestPair& pair, std::mt19937_64& rng) {
  check_pair(pair.minus, pair.plus);
  ForestPair current = pair;
  while (true) {
    const auto options = common_reductions(current);
    if (options.empty())
      break;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    current = apply_reduction(current, options[pick(rng)]);
  }
  return Element(std::move(current.minus), std::move(current.plus), Element::Reduced{});
}

Element identity(std::size_t k, int arity) {
  return Element(Forest::trivial(arity, k), Forest::trivial(arity, k));
}

Element multiply(const Element& a, const Element& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("multiply: arity mismatch");
  if (a.feet() != b.heads())
    throw std::invalid_argument("multiply: feet(a) = " + std::to_string(a.feet()) +
                                " but heads(b) = " + std::to_string(b.heads()));
  const Forest common = forest_union(a.plus(), b.minus());
  const auto grow_a = forest_difference(a.plus(), common);
  const auto grow_b = forest_difference(b.minus(), common);
  return reduce({graft(a.minus(), grow_a), graft(b.plus(), grow_b)});
}

Element invert(const Element& a) { return Element(a.plus(), a.minus()); }

Element generator_x(std::size_t i, int arity) {
  if (arity < 2)
    throw std::invalid_argument("arity must be at least 2");
  Tree vine = Tree::caret(arity);
  while (vine.leaf_count() < i + 2)
    vine = vine.attach_caret(vine.leaf_count() - 1);
  return Element(Forest(arity, {vine.attach_caret(i)}),
                 Forest(arity, {vine.attach_caret(vine.leaf_count() - 1)}));
}

Element split(const Element& x, std::size_t k) {
  const std::size_t r = x.feet();
  if (k >= r)
    throw std::out_of_range("split: foot index out of range");
  const int n = x.arity();
  const Forest lambda = Forest::single_caret(n, r, k);
  return multiply(x, Element(lambda, Forest::trivial(n, lambda.leaf_count())));
}

Element merge(const Element& x, std::size_t k) {
  const std::size_t r = x.feet();
  const std::size_t n = static_cast<std::size_t>(x.arity());
  if (k + n > r)
    throw std::out_of_range("merge: feet k..k+n-1 out of range");
  const Forest lambda = Forest::single_caret(x.arity(), r - n + 1, k);
  return multiply(x, Element(Forest::trivial(x.arity(), r), lambda));
}

bool leq(const Element& x, const Element& y) {
  if (x.heads() != y.heads() || x.arity() != y.arity())
    return false;
  return multiply(invert(x), y).plus().is_trivial();
}

bool preceq(const Element& x, const Element& y) {
  if (x.heads() != y.heads() || x.arity() != y.arity())
    return false;
  const Element d = multiply(invert(x), y);
  return d.plus().is_trivial() && d.minus().is_elementary();
}

std::vector<std::pair<Forest, Element>> elementary_cofaces(const Element& x) {
  const std::size_t r = x.feet();
  if (r >= 8 * sizeof(std::size_t) - 1)
    throw BudgetExceeded("elementary_cofaces: too many feet");
  std::vector<std::pair<Forest, Element>> out;
  out.reserve(std::size_t{1} << r);
  for (std::size_t subset = 0; subset < (std::size_t{1} << r); ++subset) {
    Forest e = caret_forest(x.arity(), r, subset);
    Element y = multiply(x, Element(e, Forest::trivial(x.arity(), e.leaf_count())));
    out.emplace_back(std::move(e), std::move(y));
  }
  return out;
}

Element transitivity_witness(const Element& x, const Element& y) {
  if (x.heads() != 1 || y.heads() != 1)
    throw std::invalid_argument("transitivity_witness: vertices must have one head");
  if (x.feet() != y.feet())
    throw std::invalid_argument("transitivity_witness: feet counts " +
                                std::to_string(x.feet()) + " and " +
                                std::to_string(y.feet()) + " differ");
  return multiply(y, invert(x));
}

Element parse_element(std::string_view text, int arity) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos)
    throw ParseError("expected '|' between forests", text.size());
  if (arity == 0) {
    arity = infer_arity(text);
    if (arity == 0)
      arity = 2;
  }
  const auto left = text.substr(0, bar);
  const auto right = text.substr(bar + 1);
  Forest minus = parse_forest(left, arity);
  Forest plus;
  try {
    plus = parse_forest(right, arity);
  } catch (const ParseError& e) {
    throw ParseError("malformed domain forest", bar + 1 + e.position());
  }
  if (minus.leaf_count() != plus.leaf_count())
    throw ParseError("forests have different leaf counts", bar);
  return Element(std::move(minus), std::move(plus));
}

std::string render(const Element& e) {
  return render_compact(e.minus()) + "|" + render_compact(e.plus());
}

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::size_t h = static_cast<std::size_t>(e.arity()) * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const Forest* f : {&e.minus(), &e.plus()}) {
    mix(f->roots());
    for (const Tree& t : f->trees())
      for (std::uint8_t s : t.code())
        mix(s);
  }
  return h;
}

}  // namespace sigmakit
