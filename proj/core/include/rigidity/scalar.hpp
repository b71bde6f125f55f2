#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "rigidity/cyclotomic.hpp"

namespace rigidity {

inline constexpr double kDefaultTolerance = 1e-9;

// Ordered so that exact kinds promote upward: Integer < Rational < Cyclotomic.
// Approx absorbs everything.
enum class ScalarKind { kInteger, kRational, kCyclotomic, kApprox };

const char* to_string(ScalarKind kind);

// Entry domain of a matrix, i.e. a kind plus the cyclotomic order when the
// kind is kCyclotomic (0 otherwise).
struct Domain {
  ScalarKind kind = ScalarKind::kInteger;
  unsigned order = 0;

  bool exact() const noexcept { return kind != ScalarKind::kApprox; }
  friend bool operator==(const Domain&, const Domain&) = default;
};

// Smallest domain containing both; throws kIncompatibleFields for distinct
// cyclotomic orders.
Domain join(const Domain& a, const Domain& b);

class Scalar {
 public:
  using Value = std::variant<mpz_class, mpq_class, Cyclotomic, std::complex<double>>;

  Scalar() : value_(mpz_class(0)) {}
  Scalar(long v) : value_(mpz_class(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : value_(mpz_class(v)) {}   // NOLINT(google-explicit-constructor)
  explicit Scalar(mpz_class v) : value_(std::move(v)) {}
  explicit Scalar(mpq_class v);
  explicit Scalar(Cyclotomic v) : value_(std::move(v)) {}
  explicit Scalar(std::complex<double> v) : value_(v) {}

  static Scalar rational(long num, long den);
  static Scalar approx(double re, double im = 0.0) { return Scalar(std::complex<double>(re, im)); }

  ScalarKind kind() const noexcept { return static_cast<ScalarKind>(value_.index()); }
  Domain domain() const;
  bool exact() const noexcept { return kind() != ScalarKind::kApprox; }

  const mpz_class& as_integer() const { return std::get<mpz_class>(value_); }
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
  const Cyclotomic& as_cyclotomic() const { return std::get<Cyclotomic>(value_); }
  const std::complex<double>& as_approx() const { return std::get<std::complex<double>>(value_); }
  const Value& value() const noexcept { return value_; }

  // Throws kMixedVariants when the value cannot be represented in `target`
  // (e.g. a non-integral rational into kInteger, or anything out of kApprox).
  Scalar promoted_to(const Domain& target) const;

  // Exact value as a rational; throws unless the scalar is integral,
  // rational, or a cyclotomic with no w terms.
  mpq_class to_rational() const;
  std::complex<double> to_complex() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  // Exact equality after promotion to the common domain. Approximate values
  // compare bitwise; use approx_equal for tolerance comparisons.
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  static Scalar parse(std::string_view token);

 private:
  Value value_;
};

// Exact kinds: canonical zero. Approx: |a| <= tolerance.
bool scalar_is_zero(const Scalar& a, double tolerance = kDefaultTolerance);

bool approx_equal(const Scalar& a, const Scalar& b, double tolerance = kDefaultTolerance);

}  // namespace rigidity
