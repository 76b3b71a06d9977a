#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dicolor {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial in one variable, coefficients in ascending degree with
/// no trailing zeros. The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);
  Polynomial(std::initializer_list<long long> coeffs);

  static Polynomial constant(const BigInt& c);
  /// x^k
  static Polynomial monomial(int k, const BigInt& c = 1);
  /// x(x-1)...(x-j+1); the empty product for j = 0.
  static Polynomial falling_factorial(int j);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of x^k (zero beyond the degree).
  BigInt coeff(int k) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigInt operator()(const BigInt& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  Polynomial pow(int e) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Decimal coefficient strings, ascending degree.
  std::vector<std::string> coefficient_strings() const;
  /// Human-readable form such as "x^3 - x".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace dicolor
