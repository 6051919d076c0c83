#pragma once

// Exact arithmetic for probability generating functions: big rationals,
// univariate polynomials and rational functions over Q, Maclaurin
// expansion by long division, and moment extraction.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "superpat/error.hpp"

namespace superpat {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  // Boost 1.74 rejects a negative denominator in the two-argument constructor.
  return den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

inline BigInt numerator_of(const BigRational& x) { return boost::multiprecision::numerator(x); }
inline BigInt denominator_of(const BigRational& x) { return boost::multiprecision::denominator(x); }

/// "p/q" with q > 0, always including the denominator ("0/1", "5/1").
inline std::string to_string(const BigRational& x) {
  return numerator_of(x).str() + "/" + denominator_of(x).str();
}

/// Decimal rendering rounded half away from zero to `digits` fractional
/// digits, with trailing zeros removed. Display only.
inline std::string to_decimal(const BigRational& x, unsigned digits = 12) {
  BigInt num = numerator_of(x);
  const BigInt den = denominator_of(x);
  const bool negative = num < 0;
  if (negative) num = -num;
  const BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
  const BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string whole = BigInt(scaled / scale).str();
  std::string frac = BigInt(scaled % scale).str();
  if (digits > 0) frac.insert(0, digits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = (negative && scaled != 0) ? "-" : "";
  out += whole;
  if (!frac.empty()) out += "." + frac;
  return out;
}

/// C(n, k); zero when k < 0 or k > n.
inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

/// Dense polynomial over Q, constant term first, trailing zeros trimmed.
class Polynomial {
 public:
  static constexpr long kZeroDegree = std::numeric_limits<long>::min();

  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  static Polynomial constant(BigRational c) { return Polynomial(std::vector<BigRational>{std::move(c)}); }
  static Polynomial monomial(BigRational c, std::size_t power) {
    std::vector<BigRational> v(power + 1);
    v[power] = std::move(c);
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// kZeroDegree for the zero polynomial.
  long degree() const { return is_zero() ? kZeroDegree : static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  BigRational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<BigRational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  /// Drop every term of degree > n.
  Polynomial truncated(std::size_t n) const {
    if (coeffs_.size() <= n + 1) return *this;
    return Polynomial(std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(n) + 1));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<BigRational> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const BigRational& s, const Polynomial& p) { return Polynomial::constant(s) * p; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

inline Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * base;
  return result;
}

/// numerator / denominator with a non-zero denominator. Not reduced.
class RationalFunction {
 public:
  RationalFunction(Polynomial numerator, Polynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_};
  }
  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }
  /// Equal as functions (cross-multiplication).
  friend bool operator==(const RationalFunction& f, const RationalFunction& g) {
    return f.num_ * g.den_ == g.num_ * f.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

/// Maclaurin coefficients c_0..c_N.
struct PowerSeriesPrefix {
  std::vector<BigRational> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  const BigRational& operator[](std::size_t n) const { return coeffs.at(n); }
};

/// Coefficient recurrence c_n = (a_n - sum_{j>=1} b_j c_{n-j}) / b_0.
inline PowerSeriesPrefix series_coefficients(const RationalFunction& f, std::size_t order) {
  const auto& den = f.denominator();
  const BigRational b0 = den.coeff(0);
  if (b0 == 0) throw DomainError("rational function has a pole at 0; no Maclaurin expansion");
  const auto deg = static_cast<std::size_t>(den.degree());
  PowerSeriesPrefix out;
  out.coeffs.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigRational acc = f.numerator().coeff(n);
    for (std::size_t j = 1; j <= std::min(n, deg); ++j) acc -= den.coefficients()[j] * out.coeffs[n - j];
    out.coeffs.push_back(acc / b0);
  }
  return out;
}

inline BigRational evaluate(const RationalFunction& f, const BigRational& x) {
  const BigRational d = f.denominator()(x);
  if (d == 0) throw PoleError("denominator vanishes at " + to_string(x));
  return f.numerator()(x) / d;
}

/// Quotient rule; the result is not reduced.
inline RationalFunction derivative(const RationalFunction& f) {
  const auto& a = f.numerator();
  const auto& b = f.denominator();
  return {a.derivative() * b - a * b.derivative(), b * b};
}

struct Moments {
  BigRational mean;
  BigRational variance;
};

/// Mean and variance of the distribution whose PGF is f.
inline Moments moments_from_gf(const RationalFunction& f) {
  if (evaluate(f, 1) != 1) throw DomainError("generating function does not sum to 1");
  const auto d1 = derivative(f);
  const auto d2 = derivative(d1);
  const BigRational m1 = evaluate(d1, 1);
  const BigRational f2 = evaluate(d2, 1);
  return {m1, f2 + m1 - m1 * m1};
}

}  // namespace superpat
