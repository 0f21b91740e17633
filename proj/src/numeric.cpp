#include "sigmakit/numeric.hpp"

#include <cctype>

namespace sigmakit {

namespace {

Integer parse_integer(std::string_view text) {
  if (text.empty())
    throw std::invalid_argument("empty integer literal");
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("bad integer literal '" + std::string(text) + "'");
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  Integer numerator = parse_integer(text.substr(0, slash));
  Integer denominator = 1;
  if (slash != std::string_view::npos) {
    denominator = parse_integer(text.substr(slash + 1));
    if (denominator == 0)
      throw std::invalid_argument("zero denominator");
  }
  Rational value(numerator, denominator);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1)
    return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const Integer& value) { return value.str(); }

DenseVector<Rational> solve_exact(DenseMatrix<Rational> a, DenseVector<Rational> b) {
  const Eigen::Index size = a.rows();
  if (a.cols() != size || b.size() != size)
    throw std::invalid_argument("solve_exact: shape mismatch");
  for (Eigen::Index col = 0; col < size; ++col) {
    Eigen::Index pivot = col;
    while (pivot < size && a(pivot, col) == 0)
      ++pivot;
    if (pivot == size)
      throw std::invalid_argument("solve_exact: singular system");
    a.row(col).swap(a.row(pivot));
    std::swap(b(col), b(pivot));
    for (Eigen::Index i = 0; i < size; ++i) {
      if (i == col || a(i, col) == 0)
        continue;
      Rational factor = a(i, col) / a(col, col);
      for (Eigen::Index j = col; j < size; ++j)
        a(i, j) -= factor * a(col, j);
      b(i) -= factor * b(col);
    }
  }
  DenseVector<Rational> x(size);
  for (Eigen::Index i = 0; i < size; ++i)
    x(i) = b(i) / a(i, i);
  return x;
}

}  // namespace sigmakit
