#pragma once

/**
 * @file polynomial.hpp
 * @brief Exact univariate polynomials over the rationals.
 *
 * Coefficients are arbitrary-precision rationals stored in ascending degree
 * order. The zero polynomial has no coefficients, so the leading coefficient
 * of a stored polynomial is never zero.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbital/errors.hpp"

namespace orbital {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "num/den", including integers ("6/1"), so the format is uniform.
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

// Accepts "p", "p/q" with optional sign. Throws InputError otherwise.
inline Rational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InputError("bad rational '" + text + "'", ErrorCode::malformed_input);
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw InputError("bad rational '" + text + "'", ErrorCode::malformed_input);
      }
    }
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + text + "'", ErrorCode::malformed_input);
  return Rational(num, den);
}

class RationalPolynomial {
 public:
  RationalPolynomial() = default;

  explicit RationalPolynomial(std::vector<Rational> ascending)
      : coeffs_(std::move(ascending)) {
    normalize();
  }

  RationalPolynomial(std::initializer_list<Rational> ascending)
      : coeffs_(ascending) {
    normalize();
  }

  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial({c}); }
  static RationalPolynomial monomial(std::size_t degree, const Rational& c = 1) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return RationalPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
  }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  // Horner's rule.
  Rational operator()(const Rational& x) const {
    Rational y = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) y = y * x + *it;
    return y;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
  }

  RationalPolynomial& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    normalize();
    return *this;
  }

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) {
    return a += b;
  }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) {
    return a += RationalPolynomial(b) *= Rational(-1);
  }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& s) { return a *= s; }
  friend RationalPolynomial operator*(const Rational& s, RationalPolynomial a) { return a *= s; }

  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(out));
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline Rational evaluate(const RationalPolynomial& p, const Rational& x) { return p(x); }

struct SamplePoint {
  std::int64_t x;
  Rational y;
};

/// Lagrange interpolation: the unique polynomial of degree < points.size()
/// through every sample. Throws InputError on a repeated abscissa.
inline RationalPolynomial interpolate(const std::vector<SamplePoint>& points) {
  std::set<std::int64_t> seen;
  for (const auto& p : points) {
    if (!seen.insert(p.x).second) {
      throw InputError("duplicate interpolation abscissa " + std::to_string(p.x),
                       ErrorCode::malformed_input);
    }
  }
  RationalPolynomial result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].y == 0) continue;
    // basis_i(x) = prod_{j != i} (x - x_j) / (x_i - x_j)
    RationalPolynomial basis = RationalPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial({Rational(-points[j].x), Rational(1)});
      denom *= Rational(points[i].x - points[j].x);
    }
    result += basis * (points[i].y / denom);
  }
  return result;
}

struct WeightedTerm {
  Rational weight;
  RationalPolynomial polynomial;
};

inline RationalPolynomial scale_add(const std::vector<WeightedTerm>& terms) {
  RationalPolynomial sum;
  for (const auto& t : terms) sum += t.polynomial * t.weight;
  return sum;
}

}  // namespace orbital
