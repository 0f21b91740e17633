#pragma once

// Seeded generators for property tests and the verification suite. All
// randomness flows through std::mt19937_64 so runs are reproducible.

#include "sigmakit/groupoid.hpp"
#include "sigmakit/trees.hpp"

#include <cstddef>
#include <random>
#include <utility>

namespace sigmakit {

using Rng = std::mt19937_64;

/// Attaches `carets` carets, each at a uniformly random leaf.
Tree random_tree(int arity, std::size_t carets, Rng& rng);
/// Distributes `carets` carets over `roots` trees at random leaves.
Forest random_forest(int arity, std::size_t roots, std::size_t carets, Rng& rng);

/// An F_n element [T, U] with T, U random trees of `carets` carets each.
Element random_group_element(int arity, std::size_t carets, Rng& rng);
/// A 1-head element (a Stein-Farley vertex) with the given number of feet.
/// `carets` is the caret count of the head tree before reduction; it is
/// raised if needed so that the feet fit.
Element random_vertex(int arity, std::size_t feet, std::size_t carets, Rng& rng);
/// An element with the given heads and feet; `extra` bounds the carets on
/// top of the minimum needed to match leaf counts.
Element random_element(int arity, std::size_t heads, std::size_t feet, std::size_t extra,
                       Rng& rng);
/// (a, b) with feet(a) = heads(b); root counts drawn from 1..max_roots.
std::pair<Element, Element> random_composable_pair(int arity, std::size_t max_roots,
                                                   std::size_t extra, Rng& rng);

}  // namespace sigmakit
