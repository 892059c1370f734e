#include "avla/rational.hpp"

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace avla {

struct Rational::Big {
  mpq_class value;
};

namespace {

__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

UWide gcd_wide(UWide a, UWide b) {
  while (b != 0) {
    if (a <= UWide(UINT64_MAX) && b <= UWide(UINT64_MAX)) {
      auto x = static_cast<std::uint64_t>(a), y = static_cast<std::uint64_t>(b);
      while (y != 0) {
        std::uint64_t t = x % y;
        x = y;
        y = t;
      }
      return x;
    }
    UWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(Wide v) {
  const bool negative = v < 0;
  UWide magnitude = negative ? UWide(0) - UWide(v) : UWide(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(magnitude)));
  mpz_class out = (hi << 64) + lo;
  if (negative) out = -out;
  return out;
}

// |z| <= INT64_MAX, so negating the inline form never overflows.
bool fits_inline(const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

std::int64_t to_int64(const mpz_class& z) {
  std::uint64_t word = 0;
  std::size_t count = 0;
  mpz_export(&word, &count, -1, sizeof(word), 0, 0, z.get_mpz_t());
  auto magnitude = static_cast<std::int64_t>(word);
  return sgn(z) < 0 ? -magnitude : magnitude;
}

}  // namespace

Rational::Big* Rational::clone(const Big* b) { return new Big{b->value}; }
void Rational::release(Big* b) noexcept { delete b; }
int Rational::big_sign(const Big* b) noexcept { return sgn(b->value); }
bool Rational::big_is_integer(const Big* b) noexcept { return b->value.get_den() == 1; }
bool Rational::big_equal(const Big* a, const Big* b) noexcept { return a->value == b->value; }

Rational::Big Rational::to_big(const Rational& r) {
  if (r.big_) return *r.big_;
  return Big{mpq_class(to_mpz(r.num_), to_mpz(r.den_))};
}

Rational Rational::from_big(Big&& b) {
  Rational r;
  const mpz_class& num = b.value.get_num();
  const mpz_class& den = b.value.get_den();
  if (fits_inline(num) && fits_inline(den)) {
    r.num_ = to_int64(num);
    r.den_ = to_int64(den);
  } else {
    r.big_ = new Big{std::move(b)};
  }
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Wide n = numerator, d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  assign_wide(n, d);
}

void Rational::assign_wide_slow(Wide n, Wide d) {
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  UWide un = n < 0 ? UWide(0) - UWide(n) : UWide(n);
  UWide g = gcd_wide(un, UWide(d));
  if (g > 1) {
    n /= Wide(g);
    d /= Wide(g);
  }
  if (n >= -Wide(kMax) && n <= Wide(kMax) && d <= Wide(kMax)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    return;
  }
  big_ = new Big{mpq_class(to_mpz(n), to_mpz(d))};
}

Rational Rational::add_slow(const Rational& a, const Rational& b) {
  return from_big(Big{to_big(a).value + to_big(b).value});
}

Rational Rational::sub_slow(const Rational& a, const Rational& b) {
  return from_big(Big{to_big(a).value - to_big(b).value});
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
  return from_big(Big{to_big(a).value * to_big(b).value});
}

int Rational::compare_slow(const Rational& a, const Rational& b) noexcept {
  return cmp(to_big(a).value, to_big(b).value);
}

Rational Rational::operator-() const {
  if (!big_) {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big(Big{-big_->value});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  if (!big_) {
    Rational r;
    r.num_ = num_ < 0 ? -den_ : den_;
    r.den_ = num_ < 0 ? -num_ : num_;
    return r;
  }
  Big inv;
  mpq_inv(inv.value.get_mpq_t(), big_->value.get_mpq_t());
  return from_big(std::move(inv));
}

std::string Rational::str() const {
  if (!big_) {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  return big_->value.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto is_integer_literal = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
  };

  std::string_view body = trim(text);
  std::string_view num_part = body, den_part = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_part = trim(body.substr(0, slash));
    den_part = trim(body.substr(slash + 1));
  }
  if (!is_integer_literal(num_part, true) || !is_integer_literal(den_part, false)) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  }
  if (num_part.front() == '+') num_part.remove_prefix(1);
  mpz_class num(std::string(num_part), 10);
  mpz_class den(std::string(den_part), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Big q{mpq_class(num, den)};
  q.value.canonicalize();
  return from_big(std::move(q));
}

}  // namespace avla
