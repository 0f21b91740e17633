#include "sigmakit/characters.hpp"

#include "sigmakit/errors.hpp"

#include <cctype>
#include <stdexcept>

namespace sigmakit {

namespace {

void check_n(int n) {
  if (n < 2)
    throw std::invalid_argument("arity must be at least 2");
}

std::size_t psi_count(int n) { return static_cast<std::size_t>(n - 2); }

}  // namespace

CharacterF CharacterF::zero(int n) {
  check_n(n);
  CharacterF chi;
  chi.n = n;
  chi.c.assign(psi_count(n), Rational(0));
  return chi;
}

CharacterF CharacterF::chi0(int n) {
  CharacterF chi = zero(n);
  chi.a = 1;
  return chi;
}

CharacterF CharacterF::chi1(int n) {
  CharacterF chi = zero(n);
  chi.b = 1;
  return chi;
}

CharacterF CharacterF::psi(int n, int i) {
  CharacterF chi = zero(n);
  if (i < 0 || i > n - 2)
    throw std::out_of_range("psi index out of range");
  if (i == n - 2) {
    chi.a = 1;
    chi.b = -1;
    for (auto& ci : chi.c)
      ci = -1;
  } else {
    chi.c[static_cast<std::size_t>(i)] = 1;
  }
  return chi;
}

bool CharacterF::is_zero() const {
  if (a != 0 || b != 0)
    return false;
  for (const auto& ci : c)
    if (ci != 0)
      return false;
  return true;
}

std::vector<Rational> CharacterF::coefficients() const {
  std::vector<Rational> out;
  out.reserve(c.size() + 2);
  out.push_back(a);
  out.insert(out.end(), c.begin(), c.end());
  out.push_back(b);
  return out;
}

CharacterF CharacterF::from_coefficients(int n, const std::vector<Rational>& coeffs) {
  CharacterF chi = zero(n);
  if (coeffs.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("expected n coefficients");
  chi.a = coeffs.front();
  for (std::size_t i = 0; i < chi.c.size(); ++i)
    chi.c[i] = coeffs[i + 1];
  chi.b = coeffs.back();
  return chi;
}

CharacterF operator+(const CharacterF& x, const CharacterF& y) {
  if (x.n != y.n)
    throw std::invalid_argument("characters of different arity");
  CharacterF out = x;
  out.a += y.a;
  out.b += y.b;
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] += y.c[i];
  return out;
}

CharacterF operator*(const Rational& s, const CharacterF& x) {
  CharacterF out = x;
  out.a *= s;
  out.b *= s;
  for (auto& ci : out.c)
    ci *= s;
  return out;
}

std::vector<long long> BasisValues::as_vector() const {
  std::vector<long long> out;
  out.push_back(chi0);
  out.insert(out.end(), psi.begin(), psi.end() - 1);
  out.push_back(chi1);
  out.push_back(psi.back());
  return out;
}

BasisValues eval_basis(const Element& g) {
  const ProtoVector d = proto(g.plus()) - proto(g.minus());
  BasisValues v;
  v.chi0 = d.L;
  v.chi1 = d.R;
  v.psi = d.D;
  return v;
}

BasisValues operator+(const BasisValues& x, const BasisValues& y) {
  if (x.psi.size() != y.psi.size())
    throw std::invalid_argument("basis values of different arity");
  BasisValues out = x;
  out.chi0 += y.chi0;
  out.chi1 += y.chi1;
  for (std::size_t i = 0; i < out.psi.size(); ++i)
    out.psi[i] += y.psi[i];
  return out;
}

Rational eval(const CharacterF& chi, const BasisValues& values) {
  if (values.psi.size() != static_cast<std::size_t>(chi.n - 1))
    throw std::invalid_argument("character and element have different arity");
  Rational total = chi.a * values.chi0 + chi.b * values.chi1;
  for (std::size_t i = 0; i < chi.c.size(); ++i)
    total += chi.c[i] * values.psi[i];
  return total;
}

Rational eval(const CharacterF& chi, const Element& g) {
  if (chi.n != g.arity())
    throw std::invalid_argument("character and element have different arity");
  return eval(chi, eval_basis(g));
}

std::vector<Element> basis_elements(int n) {
  check_n(n);
  auto t = [n](std::size_t k) { return Tree::caret(n).attach_caret(k); };
  auto hung = [n](const Tree& inner) {
    std::vector<Tree> pieces(static_cast<std::size_t>(n), Tree(n));
    pieces.back() = inner;
    return graft(Tree::caret(n), pieces);
  };
  const std::size_t last = static_cast<std::size_t>(n - 1);
  std::vector<Element> out;
  for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k)
    out.emplace_back(Forest(n, {t(k)}), Forest(n, {t(last)}));
  out.emplace_back(Forest(n, {hung(t(0))}), Forest(n, {hung(t(last))}));
  return out;
}

DenseMatrix<Integer> basis_matrix(int n) {
  const auto elements = basis_elements(n);
  DenseMatrix<Integer> m(n, n);
  for (int col = 0; col < n; ++col) {
    const BasisValues v = eval_basis(elements[static_cast<std::size_t>(col)]);
    m(0, col) = v.chi0;
    for (int i = 0; i + 2 < n; ++i)
      m(i + 1, col) = v.psi[static_cast<std::size_t>(i)];
    m(n - 1, col) = v.chi1;
  }
  return m;
}

Rational morse_epsilon(const CharacterF& chi) {
  if (chi.is_zero())
    throw std::invalid_argument("morse_epsilon: zero character");
  const std::vector<Rational> coeffs = chi.coefficients();
  const std::size_t k = coeffs.size();
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < k; ++i)
    patterns *= 3;
  Rational best = -1;
  for (std::size_t code = 0; code < patterns; ++code) {
    Rational value = 0;
    std::size_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      const int sign = static_cast<int>(rest % 3) - 1;
      rest /= 3;
      if (sign)
        value += sign * coeffs[i];
    }
    if (value < 0)
      value = -value;
    if (value != 0 && (best < 0 || value < best))
      best = value;
  }
  return best;
}

SigmaVerdict sigma_classify_F(const CharacterF& chi, int m) {
  if (m < 2)
    throw std::invalid_argument("sigma_classify_F: only m >= 2 is supported");
  if (chi.is_zero())
    throw std::invalid_argument("sigma_classify_F: zero character");
  for (const auto& ci : chi.c)
    if (ci != 0)
      return SigmaVerdict::member_sigma_infinity;
  if (chi.a >= 0 && chi.b >= 0)
    return SigmaVerdict::not_member;
  return SigmaVerdict::member_sigma_infinity;
}

CharacterF parse_character(std::string_view text, int n) {
  check_n(n);
  CharacterF chi = CharacterF::zero(n);
  std::size_t pos = 0;
  auto skip_spaces = [&]() {
    while (pos < text.size() && text[pos] == ' ')
      ++pos;
  };
  skip_spaces();
  if (pos == text.size())
    throw ParseError("empty character", pos);
  bool first = true;
  while (pos < text.size()) {
    Rational sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_spaces();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", pos);
    }
    first = false;
    const std::size_t term_start = pos;
    Rational coeff = 1;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                              text[pos] == '-' || text[pos] == '+')) {
      std::size_t end = pos;
      if (text[end] == '-' || text[end] == '+')
        ++end;
      while (end < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[end])) || text[end] == '/'))
        ++end;
      try {
        coeff = parse_rational(text.substr(pos, end - pos));
      } catch (const std::invalid_argument&) {
        throw ParseError("malformed coefficient", pos);
      }
      pos = end;
      skip_spaces();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_spaces();
      } else if (pos < text.size() && text[pos] != '+' && text[pos] != '-') {
        throw ParseError("expected '*' after coefficient", pos);
      } else {
        // a bare number; only zero is meaningful
        if (coeff != 0)
          throw ParseError("a bare constant is not a character", term_start);
        skip_spaces();
        continue;
      }
    }
    const std::size_t name_start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])))
      ++pos;
    const std::string_view name = text.substr(name_start, pos - name_start);
    CharacterF term;
    if (name == "chi0") {
      term = CharacterF::chi0(n);
    } else if (name == "chi1") {
      term = CharacterF::chi1(n);
    } else if (name.size() > 3 && name.substr(0, 3) == "psi") {
      int index = 0;
      for (char ch : name.substr(3)) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          throw ParseError("malformed psi index", name_start + 3);
        index = index * 10 + (ch - '0');
        if (index > 1000)
          throw ParseError("psi index too large", name_start + 3);
      }
      if (index > n - 2)
        throw ParseError("psi" + std::to_string(index) + " does not exist for n=" +
                             std::to_string(n),
                         name_start);
      term = CharacterF::psi(n, index);
    } else {
      throw ParseError("unknown basis character '" + std::string(name) + "'", name_start);
    }
    chi = chi + (sign * coeff) * term;
    skip_spaces();
  }
  return chi;
}

std::string render(const CharacterF& chi) {
  std::string out;
  auto add = [&out](const Rational& coeff, const std::string& name) {
    if (coeff == 0)
      return;
    Rational magnitude = coeff < 0 ? Rational(-coeff) : coeff;
    if (out.empty())
      out += coeff < 0 ? "-" : "";
    else
      out += coeff < 0 ? " - " : " + ";
    if (magnitude != 1)
      out += to_string(magnitude) + "*";
    out += name;
  };
  add(chi.a, "chi0");
  for (std::size_t i = 0; i < chi.c.size(); ++i)
    add(chi.c[i], "psi" + std::to_string(i));
  add(chi.b, "chi1");
  return out.empty() ? "0" : out;
}

}  // namespace sigmakit
