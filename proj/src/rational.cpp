#include "hexacycle/projpoint.hpp"
#include "hexacycle/rational.hpp"

#include <cctype>

namespace hexacycle {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::ZeroPoint: return "zero-point";
    case ErrorCode::MissingVariable: return "missing-variable";
    case ErrorCode::DegenerateMap: return "degenerate-map";
    case ErrorCode::NotMinimalPeriod: return "not-minimal-period";
    case ErrorCode::NotOnSurface: return "not-on-surface";
    case ErrorCode::Boundary: return "boundary";
    case ErrorCode::OutsideChart: return "outside-chart";
    case ErrorCode::ExcludedParameter: return "excluded-parameter";
  }
  return "unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::Parse, "empty integer");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::Parse, "not an integer: '" + std::string(text) + "'");
    }
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  q_ += rhs.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  q_ /= rhs.q_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

namespace detail {

std::vector<BigInt> normalize_projective(std::span<const BigInt> raw) {
  BigInt g = 0;
  for (const auto& c : raw) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorCode::ZeroPoint, "all projective coordinates are zero");
  std::vector<BigInt> out(raw.begin(), raw.end());
  int lead = 0;
  for (const auto& c : out) {
    if (c != 0) {
      lead = sgn(c);
      break;
    }
  }
  for (auto& c : out) {
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    if (lead < 0) c = -c;
  }
  return out;
}

std::vector<BigInt> normalize_projective(std::span<const Rational> raw) {
  BigInt l = 1;
  for (const auto& r : raw) {
    const BigInt d = r.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> ints;
  ints.reserve(raw.size());
  for (const auto& r : raw) ints.push_back(r.num() * (l / r.den()));
  return normalize_projective(std::span<const BigInt>(ints));
}

std::string format_projective(std::span<const BigInt> coords) {
  std::string out = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ':';
    out += coords[i].get_str();
  }
  return out + "]";
}

std::vector<BigInt> parse_projective(std::string_view text, std::size_t expected) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw Error(ErrorCode::Parse, "projective point must look like [c0:...:cn], got '" +
                                      std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<Rational> parts;
  while (true) {
    const auto sep = text.find_first_of(":,");
    parts.push_back(Rational::parse(text.substr(0, sep)));
    if (sep == std::string_view::npos) break;
    text.remove_prefix(sep + 1);
  }
  if (parts.size() != expected) {
    throw Error(ErrorCode::Parse, "expected " + std::to_string(expected) +
                                      " projective coordinates, got " +
                                      std::to_string(parts.size()));
  }
  return normalize_projective(std::span<const Rational>(parts));
}

}  // namespace detail
}  // namespace hexacycle
