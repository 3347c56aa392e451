#include "chamberscope/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace chamberscope {

namespace {

using i128 = __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(std::int64_t v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
  return z;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  if (value == std::numeric_limits<std::int64_t>::min()) {
    set_big(mpq_class(to_mpz(value)));
  } else {
    num_ = value;
  }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(to_mpz(numerator), to_mpz(denominator));
    q.canonicalize();
    set_big(std::move(q));
  }
}

Rational::Rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  set_big(std::move(q));
}

Rational::Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
  if (other.big_) big_ = std::make_unique<mpq_class>(*other.big_);
}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::set_big(mpq_class value) {
  // Demote when the value fits back into the inline representation.
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    const long n = value.get_num().get_si();
    const long d = value.get_den().get_si();
    if (n != std::numeric_limits<long>::min()) {
      num_ = n;
      den_ = d;
      big_.reset();
      return;
    }
  }
  num_ = 0;
  den_ = 1;
  big_ = std::make_unique<mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  q.canonicalize();
  return Rational(q);
}

int Rational::sign() const noexcept {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : to_mpz(num_); }
mpz_class Rational::denominator() const { return big_ ? big_->get_den() : to_mpz(den_); }

std::string Rational::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      const i128 n = static_cast<i128>(num_) + rhs.num_;
      if (fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    } else {
      const i128 g = std::gcd(den_, rhs.den_);
      i128 n = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
      i128 d = static_cast<i128>(den_ / g) * rhs.den_;
      const i128 h = gcd128(n, g);
      if (h > 1) {
        n /= h;
        d /= h;
      }
      if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        if (num_ == 0) den_ = 1;
        return *this;
      }
    }
  }
  set_big(to_mpq() + rhs.to_mpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    const i128 g1 = gcd128(num_, rhs.den_);
    const i128 g2 = gcd128(rhs.num_, den_);
    const i128 a = g1 > 1 ? num_ / g1 : num_;
    const i128 d2 = g1 > 1 ? rhs.den_ / g1 : rhs.den_;
    const i128 c = g2 > 1 ? rhs.num_ / g2 : rhs.num_;
    const i128 b = g2 > 1 ? den_ / g2 : den_;
    const i128 n = a * c;
    const i128 d = b * d2;
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = n == 0 ? 1 : static_cast<std::int64_t>(d);
      return *this;
    }
  }
  set_big(to_mpq() * rhs.to_mpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!rhs.big_) {
    Rational inverse;
    inverse.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inverse.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inverse;
  }
  set_big(to_mpq() / rhs.to_mpq());
  return *this;
}

Rational Rational::operator-() const {
  Rational out(*this);
  if (out.big_) {
    *out.big_ = -*out.big_;
  } else {
    out.num_ = -out.num_;
  }
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace chamberscope
