#include "rigidity/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

#include "rigidity/error.hpp"

namespace rigidity {

const char* to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::kInteger: return "int";
    case ScalarKind::kRational: return "rat";
    case ScalarKind::kCyclotomic: return "cyclo";
    case ScalarKind::kApprox: return "approx";
  }
  return "unknown";
}

Domain join(const Domain& a, const Domain& b) {
  if (a.kind == ScalarKind::kApprox || b.kind == ScalarKind::kApprox) {
    return {ScalarKind::kApprox, 0};
  }
  if (a.kind == ScalarKind::kCyclotomic && b.kind == ScalarKind::kCyclotomic &&
      a.order != b.order) {
    throw Error(ErrorCode::kIncompatibleFields,
                "cannot combine cyclotomic orders " + std::to_string(a.order) + " and " +
                    std::to_string(b.order));
  }
  if (a.kind == ScalarKind::kCyclotomic) return a;
  if (b.kind == ScalarKind::kCyclotomic) return b;
  return {std::max(a.kind, b.kind), 0};
}

Scalar::Scalar(mpq_class v) {
  v.canonicalize();
  value_ = std::move(v);
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "rational with zero denominator");
  return Scalar(mpq_class(mpz_class(num), mpz_class(den)));
}

Domain Scalar::domain() const {
  if (kind() == ScalarKind::kCyclotomic) return {ScalarKind::kCyclotomic, as_cyclotomic().order()};
  return {kind(), 0};
}

mpq_class Scalar::to_rational() const {
  switch (kind()) {
    case ScalarKind::kInteger: return mpq_class(as_integer());
    case ScalarKind::kRational: return as_rational();
    case ScalarKind::kCyclotomic:
      if (as_cyclotomic().is_rational()) return as_cyclotomic().coefficients()[0];
      break;
    case ScalarKind::kApprox: break;
  }
  throw Error(ErrorCode::kMixedVariants, "scalar " + to_string() + " is not rational");
}

std::complex<double> Scalar::to_complex() const {
  switch (kind()) {
    case ScalarKind::kInteger: return as_integer().get_d();
    case ScalarKind::kRational: return as_rational().get_d();
    case ScalarKind::kCyclotomic: return as_cyclotomic().evaluate();
    case ScalarKind::kApprox: return as_approx();
  }
  return {};
}

Scalar Scalar::promoted_to(const Domain& target) const {
  const Domain here = domain();
  if (here == target) return *this;
  switch (target.kind) {
    case ScalarKind::kInteger: {
      if (kind() == ScalarKind::kApprox) break;
      const mpq_class q = to_rational();
      if (q.get_den() != 1) break;
      return Scalar(mpz_class(q.get_num()));
    }
    case ScalarKind::kRational:
      if (kind() == ScalarKind::kApprox) break;
      return Scalar(to_rational());
    case ScalarKind::kCyclotomic:
      if (kind() == ScalarKind::kCyclotomic) {
        const auto& c = as_cyclotomic();
        if (target.order > c.order()) return Scalar(c.embed(target.order));
        if (c.is_rational()) return Scalar(Cyclotomic::from_rational(target.order, c.coefficients()[0]));
        break;
      }
      if (kind() == ScalarKind::kApprox) break;
      return Scalar(Cyclotomic::from_rational(target.order, to_rational()));
    case ScalarKind::kApprox:
      return Scalar(to_complex());
  }
  throw Error(ErrorCode::kMixedVariants,
              "cannot represent " + to_string() + " as " + rigidity::to_string(target.kind));
}

namespace {

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  const Domain d = join(a.domain(), b.domain());
  const Scalar x = a.promoted_to(d);
  const Scalar y = b.promoted_to(d);
  switch (d.kind) {
    case ScalarKind::kInteger: return op(x.as_integer(), y.as_integer());
    case ScalarKind::kRational: return op(x.as_rational(), y.as_rational());
    case ScalarKind::kCyclotomic: return op(x.as_cyclotomic(), y.as_cyclotomic());
    case ScalarKind::kApprox: return op(x.as_approx(), y.as_approx());
  }
  return {};
}

}  // namespace

Scalar Scalar::operator-() const {
  return std::visit(
      [](const auto& v) -> Scalar {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, mpz_class>) return Scalar(mpz_class(-v));
        else if constexpr (std::is_same_v<T, mpq_class>) return Scalar(mpq_class(-v));
        else return Scalar(-v);
      },
      value_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
    using T = std::decay_t<decltype(x)>;
    return Scalar(T(x + y));
  });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
    using T = std::decay_t<decltype(x)>;
    return Scalar(T(x - y));
  });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
    using T = std::decay_t<decltype(x)>;
    return Scalar(T(x * y));
  });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.exact() && scalar_is_zero(b)) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return combine(a, b, [](const auto& x, const auto& y) -> Scalar {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, mpz_class>) {
      return Scalar(mpq_class(x, y));
    } else {
      return Scalar(T(x / y));
    }
  });
}

bool operator==(const Scalar& a, const Scalar& b) {
  const Domain d = join(a.domain(), b.domain());
  const Scalar x = a.promoted_to(d);
  const Scalar y = b.promoted_to(d);
  return x.value_ == y.value_;
}

bool scalar_is_zero(const Scalar& a, double tolerance) {
  switch (a.kind()) {
    case ScalarKind::kInteger: return sgn(a.as_integer()) == 0;
    case ScalarKind::kRational: return sgn(a.as_rational()) == 0;
    case ScalarKind::kCyclotomic: return a.as_cyclotomic().is_zero();
    case ScalarKind::kApprox: return std::abs(a.as_approx()) <= tolerance;
  }
  return false;
}

bool approx_equal(const Scalar& a, const Scalar& b, double tolerance) {
  if (a.exact() && b.exact()) return a == b;
  return std::abs(a.to_complex() - b.to_complex()) <= tolerance;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_integer_token(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void parse_fail(std::string_view token, const std::string& why) {
  throw Error(ErrorCode::kParse, "bad scalar '" + std::string(token) + "': " + why);
}

mpz_class parse_integer(std::string_view s, std::string_view token) {
  if (!is_integer_token(s)) parse_fail(token, "expected integer");
  return mpz_class(std::string(s), 10);
}

mpq_class parse_rational(std::string_view s, std::string_view token) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return mpq_class(parse_integer(s, token));
  const mpz_class num = parse_integer(s.substr(0, slash), token);
  const std::string_view den_text = s.substr(slash + 1);
  if (!den_text.empty() && den_text.front() == '-') parse_fail(token, "denominator must be positive");
  const mpz_class den = parse_integer(den_text, token);
  if (sgn(den) == 0) parse_fail(token, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

double parse_double(std::string_view s, std::string_view token) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail(token, "expected real number");
  return v;
}

Scalar parse_complex(std::string_view token) {
  std::string_view s = token.substr(0, token.size() - 1);  // drop 'j'
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  std::string_view im_text = s;
  if (split != std::string_view::npos) {
    re = parse_double(s.substr(0, split), token);
    im_text = s.substr(split);
  }
  double im = 0.0;
  if (im_text == "+" || im_text.empty()) {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_double(im_text, token);
  }
  return Scalar::approx(re, im);
}

}  // namespace

std::string Scalar::to_string() const {
  switch (kind()) {
    case ScalarKind::kInteger: return as_integer().get_str();
    case ScalarKind::kRational: return as_rational().get_str();
    case ScalarKind::kCyclotomic: return as_cyclotomic().to_string();
    case ScalarKind::kApprox: {
      const auto& z = as_approx();
      std::string im = format_double(z.imag());
      if (im.front() != '-') im.insert(im.begin(), '+');
      return format_double(z.real()) + im + "j";
    }
  }
  return {};
}

Scalar Scalar::parse(std::string_view token) {
  if (token.empty()) parse_fail(token, "empty");
  if (token.front() == 'w') {
    const auto colon = token.find(':');
    if (colon == std::string_view::npos) parse_fail(token, "missing ':' in cyclotomic");
    const mpz_class order = parse_integer(token.substr(1, colon - 1), token);
    if (!order.fits_uint_p() || order < 2 || !is_power_of_two(order.get_ui())) {
      parse_fail(token, "cyclotomic order must be a power of two >= 2");
    }
    std::vector<mpq_class> coeffs;
    std::string_view rest = token.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(parse_rational(rest.substr(0, comma), token));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    const auto n = static_cast<unsigned>(order.get_ui());
    if (coeffs.size() != n / 2) parse_fail(token, "wrong number of cyclotomic coefficients");
    return Scalar(Cyclotomic(n, std::move(coeffs)));
  }
  if (token.back() == 'j') return parse_complex(token);
  if (token.find('/') != std::string_view::npos) return Scalar(parse_rational(token, token));
  if (is_integer_token(token)) return Scalar(parse_integer(token, token));
  return Scalar::approx(parse_double(token, token));
}

}  // namespace rigidity
