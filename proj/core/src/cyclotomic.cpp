#include "rigidity/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "rigidity/error.hpp"

namespace rigidity {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

namespace {

void require_valid_order(unsigned order) {
  if (order < 2 || !is_power_of_two(order)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cyclotomic order must be a power of two >= 2, got " +
                    std::to_string(order));
  }
}

// Dense polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const mpq_class factor = a.back() / lead;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

}  // namespace

Cyclotomic::Cyclotomic(unsigned order) : order_(order) {
  require_valid_order(order);
  coeffs_.assign(order / 2, mpq_class(0));
}

Cyclotomic::Cyclotomic(unsigned order, std::vector<mpq_class> coefficients)
    : order_(order), coeffs_(std::move(coefficients)) {
  require_valid_order(order);
  if (coeffs_.size() != order / 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "cyclotomic of order " + std::to_string(order) + " needs " +
                    std::to_string(order / 2) + " coefficients, got " +
                    std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

Cyclotomic Cyclotomic::from_rational(unsigned order, const mpq_class& value) {
  Cyclotomic out(order);
  out.coeffs_[0] = value;
  return out;
}

Cyclotomic Cyclotomic::root_power(unsigned order, std::int64_t exponent) {
  Cyclotomic out(order);
  const auto n = static_cast<std::int64_t>(order);
  std::int64_t e = exponent % n;
  if (e < 0) e += n;
  const auto h = n / 2;
  if (e < h) {
    out.coeffs_[static_cast<std::size_t>(e)] = 1;
  } else {
    out.coeffs_[static_cast<std::size_t>(e - h)] = -1;
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) return false;
  }
  return true;
}

Cyclotomic Cyclotomic::embed(unsigned larger_order) const {
  require_valid_order(larger_order);
  if (larger_order < order_ || larger_order % order_ != 0) {
    throw Error(ErrorCode::kIncompatibleFields,
                "cannot embed Q(w" + std::to_string(order_) + ") into Q(w" +
                    std::to_string(larger_order) + ")");
  }
  const unsigned stride = larger_order / order_;
  Cyclotomic out(larger_order);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out.coeffs_[i * stride] = coeffs_[i];
  }
  return out;
}

std::complex<double> Cyclotomic::evaluate() const {
  std::complex<double> acc = 0.0;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    acc += coeffs_[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
  }
  return acc;
}

void Cyclotomic::require_same_field(const Cyclotomic& other) const {
  if (order_ != other.order_) {
    throw Error(ErrorCode::kIncompatibleFields,
                "cyclotomic orders differ: " + std::to_string(order_) + " vs " +
                    std::to_string(other.order_));
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.require_same_field(b);
  const std::size_t h = a.coeffs_.size();
  Cyclotomic out(a.order_);
  for (std::size_t i = 0; i < h; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < h; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      const std::size_t k = i + j;
      if (k < h) {
        out.coeffs_[k] += a.coeffs_[i] * b.coeffs_[j];
      } else {
        out.coeffs_[k - h] -= a.coeffs_[i] * b.coeffs_[j];  // w^h = -1
      }
    }
  }
  return out;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  *this = *this * other;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& other) {
  *this = *this * cyclo_inverse(other);
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  os << 'w' << order_ << ':';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) os << ',';
    os << coeffs_[i].get_str();
  }
  return os.str();
}

Cyclotomic cyclo_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }

Cyclotomic cyclo_inverse(const Cyclotomic& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero in Q(w" +
                                                std::to_string(a.order()) + ")");
  }
  const std::size_t h = a.order() / 2;
  if (a.is_rational()) return Cyclotomic::from_rational(a.order(), 1 / a.coefficients()[0]);

  // Track s with s*a = r (mod m), starting from (r0, s0) = (m, 0), (r1, s1) = (a, 1).
  Poly modulus(h + 1, mpq_class(0));
  modulus[0] = 1;
  modulus[h] = 1;
  Poly r0 = modulus;
  Poly r1 = a.coefficients();
  trim(r1);
  Poly s0;
  Poly s1{mpq_class(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // x^h + 1 is irreducible over Q, so the gcd is a nonzero constant.
  if (r1.empty()) {
    throw Error(ErrorCode::kDivisionByZero, "element shares a factor with the modulus");
  }
  const mpq_class scale = 1 / r1[0];
  auto reduced = poly_divmod(s1, modulus).second;
  std::vector<mpq_class> coeffs(h, mpq_class(0));
  for (std::size_t i = 0; i < reduced.size(); ++i) coeffs[i] = reduced[i] * scale;
  return Cyclotomic(a.order(), std::move(coeffs));
}

}  // namespace rigidity
