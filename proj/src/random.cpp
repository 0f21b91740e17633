#include "sigmakit/random.hpp"

#include <stdexcept>

namespace sigmakit {

namespace {

std::size_t uniform(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

Tree random_tree(int arity, std::size_t carets, Rng& rng) {
  Tree t(arity);
  for (std::size_t c = 0; c < carets; ++c)
    t = t.attach_caret(uniform(0, t.leaf_count() - 1, rng));
  return t;
}

Forest random_forest(int arity, std::size_t roots, std::size_t carets, Rng& rng) {
  if (roots == 0)
    throw std::invalid_argument("random_forest: need at least one root");
  Forest f = Forest::trivial(arity, roots);
  for (std::size_t c = 0; c < carets; ++c)
    f = f.attach_caret(uniform(0, f.leaf_count() - 1, rng));
  return f;
}

Element random_group_element(int arity, std::size_t carets, Rng& rng) {
  return Element(Forest(arity, {random_tree(arity, carets, rng)}),
                 Forest(arity, {random_tree(arity, carets, rng)}));
}

Element random_element(int arity, std::size_t heads, std::size_t feet, std::size_t extra,
                       Rng& rng) {
  const std::size_t step = static_cast<std::size_t>(arity) - 1;
  if (heads % step != feet % step)
    throw std::invalid_argument("random_element: heads and feet differ mod n-1");
  // leaves = heads + a*step = feet + b*step
  std::size_t a = feet > heads ? (feet - heads) / step : 0;
  std::size_t b = heads > feet ? (heads - feet) / step : 0;
  const std::size_t more = uniform(0, extra, rng);
  a += more;
  b += more;
  return Element(random_forest(arity, heads, a, rng), random_forest(arity, feet, b, rng));
}

Element random_vertex(int arity, std::size_t feet, std::size_t carets, Rng& rng) {
  const std::size_t step = static_cast<std::size_t>(arity) - 1;
  if (feet == 0 || (feet - 1) % step != 0)
    throw std::invalid_argument("random_vertex: feet must be 1 mod n-1");
  const std::size_t minimum = (feet - 1) / step;
  const std::size_t a = std::max(carets, minimum);
  const std::size_t b = a - minimum;
  return Element(Forest(arity, {random_tree(arity, a, rng)}), random_forest(arity, feet, b, rng));
}

std::pair<Element, Element> random_composable_pair(int arity, std::size_t max_roots,
                                                   std::size_t extra, Rng& rng) {
  const std::size_t step = static_cast<std::size_t>(arity) - 1;
  const std::size_t mid = uniform(1, max_roots, rng);
  auto draw_root_count = [&]() {
    // any count congruent to mid mod n-1 within 1..max_roots (mid itself is)
    std::vector<std::size_t> options;
    for (std::size_t r = 1; r <= max_roots; ++r)
      if (r % step == mid % step)
        options.push_back(r);
    return options[uniform(0, options.size() - 1, rng)];
  };
  const std::size_t heads = draw_root_count();
  const std::size_t feet = draw_root_count();
  return {random_element(arity, heads, mid, extra, rng),
          random_element(arity, mid, feet, extra, rng)};
}

}  // namespace sigmakit
