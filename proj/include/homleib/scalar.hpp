#pragma once

// Exact field scalars usable as Eigen coefficient types.
//
// Rational wraps GMP's mpq_class behind plain value semantics so that Eigen
// never sees gmpxx expression templates. Fp is an integer modulo a prime p;
// the modulus lives in a thread-local context set by Fp::Modulus.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace homleib {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit like a literal
  Rational(long num, long den);
  explicit Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

  /// Parses "a" or "a/b" with optional sign; ASCII '-' or U+2212.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
  [[nodiscard]] std::string str() const { return v_.get_str(); }
  [[nodiscard]] const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

 private:
  mpq_class v_;
};

/// Integer modulo a prime. Arithmetic reads the modulus of the innermost
/// live Fp::Modulus scope on the calling thread.
class Fp {
 public:
  class Modulus {
   public:
    explicit Modulus(std::uint64_t p);
    ~Modulus();
    Modulus(const Modulus&) = delete;
    Modulus& operator=(const Modulus&) = delete;

   private:
    std::uint64_t previous_;
  };

  static std::uint64_t modulus();

  Fp() = default;
  Fp(long value);  // NOLINT: implicit like a literal

  static Fp parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] std::uint64_t value() const { return v_; }
  [[nodiscard]] std::string str() const { return std::to_string(v_); }
  [[nodiscard]] Fp inverse() const;

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const;
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

 private:
  static Fp raw(std::uint64_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }
  std::uint64_t v_ = 0;
};

bool is_prime(std::uint64_t p);

/// Per-scalar hooks used by file IO and reports.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static std::string field_name() { return "Q"; }
  static Rational parse(std::string_view s) { return Rational::parse(s); }
  static std::string format(const Rational& x) { return x.str(); }
};

template <>
struct ScalarTraits<Fp> {
  static std::string field_name() { return "GF(" + std::to_string(Fp::modulus()) + ")"; }
  static Fp parse(std::string_view s) { return Fp::parse(s); }
  static std::string format(const Fp& x) { return x.str(); }
};

template <class S>
bool is_zero(const S& x) {
  return x.is_zero();
}

}  // namespace homleib

namespace Eigen {

template <>
struct NumTraits<homleib::Rational> : GenericNumTraits<homleib::Rational> {
  using Real = homleib::Rational;
  using NonInteger = homleib::Rational;
  using Nested = homleib::Rational;
  using Literal = homleib::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static homleib::Rational epsilon() { return 0; }
  static homleib::Rational dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<homleib::Fp> : GenericNumTraits<homleib::Fp> {
  using Real = homleib::Fp;
  using NonInteger = homleib::Fp;
  using Nested = homleib::Fp;
  using Literal = homleib::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static homleib::Fp epsilon() { return 0; }
  static homleib::Fp dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
