#include "linearr/rational.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace linearr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
  }
  return true;
}

}  // namespace

Rat::Rat(std::int64_t value) : value_(static_cast<long>(value)) {}

Rat::Rat(const BigInt& value) : value_(value) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den(std::string(den_text), 10);
  if (negative) num = -num;
  return Rat(num, den);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

std::string Rat::to_string() const { return value_.get_str(10); }

std::string Rat::to_decimal(int significant) const {
  // mpf keeps the conversion exact enough for presentation; %.*Fg trims zeros.
  mpf_class f(value_, 256);
  char buf[128];
  gmp_snprintf(buf, sizeof buf, "%.*Fg", significant, f.get_mpf_t());
  return buf;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::size_t Rat::hash() const {
  const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
  const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace linearr
