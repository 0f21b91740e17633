#pragma once

// Characters of F_n in the basis chi0, psi_0..psi_{n-3}, chi1, extended to
// the forest-pair groupoid by taking proto(E+) - proto(E-).

#include "sigmakit/groupoid.hpp"
#include "sigmakit/numeric.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sigmakit {

struct CharacterF {
  int n = 2;
  Rational a;              // chi0
  std::vector<Rational> c;  // psi_0..psi_{n-3}
  Rational b;              // chi1

  static CharacterF zero(int n);
  static CharacterF chi0(int n);
  static CharacterF chi1(int n);
  /// psi_i for 0 <= i <= n-2; psi_{n-2} is expanded as
  /// chi0 - chi1 - psi_0 - ... - psi_{n-3}.
  static CharacterF psi(int n, int i);

  bool is_zero() const;
  /// Coefficients in basis order (a, c_0, ..., c_{n-3}, b).
  std::vector<Rational> coefficients() const;
  static CharacterF from_coefficients(int n, const std::vector<Rational>& coeffs);

  friend bool operator==(const CharacterF&, const CharacterF&) = default;
};

CharacterF operator+(const CharacterF& x, const CharacterF& y);
CharacterF operator*(const Rational& s, const CharacterF& x);

/// Values of the basis characters on one groupoid element.
struct BasisValues {
  long long chi0 = 0;
  std::vector<long long> psi;  // psi_0..psi_{n-2}; the last one is derived
  long long chi1 = 0;

  /// (chi0, psi_0..psi_{n-3}, chi1, psi_{n-2}).
  std::vector<long long> as_vector() const;
  friend bool operator==(const BasisValues&, const BasisValues&) = default;
};

BasisValues eval_basis(const Element& g);
BasisValues operator+(const BasisValues& x, const BasisValues& y);

Rational eval(const CharacterF& chi, const BasisValues& values);
Rational eval(const CharacterF& chi, const Element& g);

/// The elements [T_0,T_{n-1}], ..., [T_{n-2},T_{n-1}], [T_0',T_{n-1}'],
/// where T_k is a caret with a caret on leaf k and T_k' is T_k hung from
/// the last leaf of a caret.
std::vector<Element> basis_elements(int n);
/// Rows chi0, psi_0..psi_{n-3}, chi1 evaluated on basis_elements(n).
DenseMatrix<Integer> basis_matrix(int n);

/// Smallest nonzero |alpha*a + sum gamma_i c_i + beta*b| over sign
/// patterns in {-1,0,1}. Throws on the zero character.
Rational morse_epsilon(const CharacterF& chi);

enum class SigmaVerdict { member_sigma_infinity, not_member };

/// Classification of [chi] with respect to Sigma^m(F_n), m >= 2: outside
/// exactly when every c_i is zero and a, b >= 0; otherwise in Sigma^infinity.
SigmaVerdict sigma_classify_F(const CharacterF& chi, int m);

/// `a*chi0 + c0*psi0 + ... + b*chi1` with exact rationals; coefficients
/// and `*` are optional, `psi{n-2}` is accepted and expanded, `0` is the
/// zero character. Spaces are allowed between terms.
CharacterF parse_character(std::string_view text, int n);
std::string render(const CharacterF& chi);

}  // namespace sigmakit
