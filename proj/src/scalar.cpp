#include "homleib/scalar.hpp"

#include <charconv>

#include "homleib/errors.hpp"

namespace homleib {

namespace {

thread_local std::uint64_t current_modulus = 0;

// Strips a leading sign; returns true when negative. Accepts U+2212.
bool take_sign(std::string_view& s) {
  if (s.starts_with("-")) {
    s.remove_prefix(1);
    return true;
  }
  if (s.starts_with("+")) {
    s.remove_prefix(1);
    return false;
  }
  if (s.starts_with("\xE2\x88\x92")) {
    s.remove_prefix(3);
    return true;
  }
  return false;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  const bool negative = take_sign(s);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not an exact fraction: \"" + std::string(text) + "\"");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

Fp::Modulus::Modulus(std::uint64_t p) : previous_(current_modulus) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 31))
    throw std::invalid_argument("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  current_modulus = p;
}

Fp::Modulus::~Modulus() { current_modulus = previous_; }

std::uint64_t Fp::modulus() {
  if (current_modulus == 0) throw std::logic_error("Fp arithmetic outside an Fp::Modulus scope");
  return current_modulus;
}

Fp::Fp(long value) {
  if (value == 0) return;
  const auto p = static_cast<long>(modulus());
  long r = value % p;
  if (r < 0) r += p;
  v_ = static_cast<std::uint64_t>(r);
}

Fp Fp::parse(std::string_view text) {
  std::string_view s = text;
  const bool negative = take_sign(s);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not an exact fraction: \"" + std::string(text) + "\"");
  const std::uint64_t p = modulus();
  auto reduce = [p](std::string_view digits) {
    std::uint64_t acc = 0;
    for (char c : digits) acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p;
    return raw(acc);
  };
  Fp value = reduce(num) / reduce(den);
  return negative ? -value : value;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
  // Fermat: v^(p-2).
  const std::uint64_t p = modulus();
  std::uint64_t result = 1, base = v_, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return raw(result);
}

Fp operator+(Fp a, Fp b) {
  const std::uint64_t p = Fp::modulus();
  const std::uint64_t s = a.v_ + b.v_;
  return Fp::raw(s >= p ? s - p : s);
}

Fp operator-(Fp a, Fp b) {
  const std::uint64_t p = Fp::modulus();
  return Fp::raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p - b.v_);
}

Fp operator*(Fp a, Fp b) { return Fp::raw(a.v_ * b.v_ % Fp::modulus()); }

Fp Fp::operator-() const { return v_ == 0 ? *this : raw(modulus() - v_); }

}  // namespace homleib
