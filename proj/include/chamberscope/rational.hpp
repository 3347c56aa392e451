#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <gmpxx.h>

namespace chamberscope {

/// Exact rational number in lowest terms with a positive denominator.
/// Values whose numerator and denominator fit in 63 bits are kept inline;
/// anything larger transparently moves to GMP.
class Rational {
 public:
  Rational() noexcept = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);
  explicit Rational(const mpq_class& value);

  Rational(const Rational& other);
  Rational(Rational&& other) noexcept = default;
  Rational& operator=(const Rational& other);
  Rational& operator=(Rational&& other) noexcept = default;
  ~Rational() = default;

  /// Parses "p" or "p/q".
  static Rational parse(std::string_view text);

  int sign() const noexcept;
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept;
  bool is_small() const noexcept { return !big_; }

  mpz_class numerator() const;
  mpz_class denominator() const;
  mpq_class to_mpq() const;

  /// Canonical text: "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;
  Rational operator+() const { return *this; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  void set_big(mpq_class value);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

}  // namespace chamberscope

namespace Eigen {

template <>
struct NumTraits<chamberscope::Rational> : GenericNumTraits<chamberscope::Rational> {
  using Real = chamberscope::Rational;
  using NonInteger = chamberscope::Rational;
  using Nested = chamberscope::Rational;
  using Literal = chamberscope::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 8
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
  static int max_digits10() { return 0; }
};

}  // namespace Eigen
