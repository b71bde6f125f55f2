#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rigidity {

bool is_power_of_two(std::uint64_t n);

// Element of Q(w), w = exp(2*pi*i/order), order a power of two >= 2.
//
// The minimal polynomial of w is x^(order/2) + 1, so an element is stored as
// the order/2 rational coefficients of c_0 + c_1 w + ... + c_{h-1} w^{h-1},
// h = order/2, with w^h = -1 applied after every operation.
class Cyclotomic {
 public:
  // Zero of Q(w).
  explicit Cyclotomic(unsigned order);
  Cyclotomic(unsigned order, std::vector<mpq_class> coefficients);

  static Cyclotomic from_rational(unsigned order, const mpq_class& value);
  // w^exponent; negative exponents are reduced mod order.
  static Cyclotomic root_power(unsigned order, std::int64_t exponent);

  unsigned order() const noexcept { return order_; }
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff every coefficient of w^1 .. w^{h-1} vanishes.
  bool is_rational() const;

  // Same element viewed in Q(w') with w'^(larger/order) = w.
  Cyclotomic embed(unsigned larger_order) const;

  std::complex<double> evaluate() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  // `w<order>:c0,c1,...`
  std::string to_string() const;

 private:
  void require_same_field(const Cyclotomic& other) const;

  unsigned order_;
  std::vector<mpq_class> coeffs_;
};

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b);

// Inverse by the extended Euclidean algorithm on the coefficient polynomial
// and x^(order/2) + 1 over Q. Throws kDivisionByZero for zero input.
Cyclotomic cyclo_inverse(const Cyclotomic& a);

}  // namespace rigidity
