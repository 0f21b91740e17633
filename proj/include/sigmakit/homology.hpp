#pragma once

// Integer simplicial homology through Smith normal form of the boundary
// maps. "k-connected" throughout the library means homologically
// k-connected: nonempty with reduced H_i = 0 over Z for all i <= k.

#include "sigmakit/complex.hpp"
#include "sigmakit/smith.hpp"

#include <string>
#include <vector>

namespace sigmakit {

/// Boundary maps d_k : C_k -> C_{k-1} for 0 <= k <= top. In the reduced
/// complex d_0 is the augmentation C_0 -> Z.
struct ChainComplex {
  std::vector<std::size_t> ranks;         // rank of C_k, k = 0..top
  std::vector<SparseMatrix> boundaries;   // boundaries[k] = d_k
  bool augmented = false;

  /// Every composite d_{k-1} d_k vanishes.
  bool is_exact_composition() const;
};

/// Faces up to dimension `top` (all of them when top < 0).
ChainComplex chain_complex(const SimplicialComplex& complex, int top = -1,
                           bool augmented = true);

struct DegreeHomology {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1

  bool vanishes() const { return betti == 0 && torsion.empty(); }
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyReport {
  bool reduced = true;
  /// True when every nonzero degree of the complex is covered, which is
  /// what the Euler characteristic check needs.
  bool complete = false;
  std::vector<DegreeHomology> degrees;  // 0..max_degree

  const DegreeHomology& at(int degree) const;
  bool vanishes_through(int k) const;
  std::string summary() const;
};

/// Reduced homology in degrees 0..max_degree (the whole complex when
/// max_degree < 0). Uses faces up to dimension max_degree + 1. Boundary
/// ranks are computed concurrently. Throws std::invalid_argument on the
/// empty complex and BudgetExceeded past budget.
HomologyReport reduced_homology(const SimplicialComplex& complex, int max_degree = -1,
                                const Budget& budget = {});
/// Unreduced homology, same conventions.
HomologyReport homology(const SimplicialComplex& complex, int max_degree = -1,
                        const Budget& budget = {});

/// k <= -2: always true. k = -1: nonempty. k >= 0: nonempty and reduced
/// H_i vanishes for i <= k.
bool is_homologically_k_connected(const SimplicialComplex& complex, int k,
                                  const Budget& budget = {});

long long euler_characteristic(const SimplicialComplex& complex);
/// Compares the face-count Euler characteristic with the alternating Betti
/// sum; requires report.complete.
bool euler_consistent(const SimplicialComplex& complex, const HomologyReport& report);

}  // namespace sigmakit
