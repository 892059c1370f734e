#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

namespace avla {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator both fit in 64 bits are stored
/// inline; anything larger is promoted to an arbitrary-precision GMP value.
/// The representation is canonical: a value is held in the big form if and
/// only if it does not fit the inline form, so equality never needs to
/// compare across forms.
class Rational {
 public:
  Rational() noexcept = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      assign_wide(static_cast<Wide>(value), 1);
    } else {
      assign_wide(static_cast<Wide>(static_cast<UWide>(value)), 1);
    }
  }

  /// numerator / denominator, reduced. Throws std::domain_error on a zero denominator.
  Rational(std::int64_t numerator, std::int64_t denominator);

  Rational(const Rational& other) : num_(other.num_), den_(other.den_) {
    if (other.big_) big_ = clone(other.big_);
  }
  Rational(Rational&& other) noexcept
      : num_(other.num_), den_(other.den_), big_(std::exchange(other.big_, nullptr)) {
    other.num_ = 0;
    other.den_ = 1;
  }
  Rational& operator=(const Rational& other) {
    if (this != &other) {
      Rational tmp(other);
      swap(tmp);
    }
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    Rational tmp(std::move(other));
    swap(tmp);
    return *this;
  }
  ~Rational() {
    if (big_) release(big_);
  }

  void swap(Rational& other) noexcept {
    std::swap(num_, other.num_);
    std::swap(den_, other.den_);
    std::swap(big_, other.big_);
  }

  /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
  /// Throws std::invalid_argument on anything else (including decimals).
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const noexcept { return big_ == nullptr && num_ == 0; }
  bool is_integer() const noexcept { return big_ == nullptr ? den_ == 1 : big_is_integer(big_); }
  int sign() const noexcept {
    if (big_) return big_sign(big_);
    return (num_ > 0) - (num_ < 0);
  }

  Rational operator-() const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide(a.num_) + b.num_, 1);
      return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return add_slow(a, b);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide(a.num_) - b.num_, 1);
      return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    return sub_slow(a, b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
      if (a.num_ == 0 || b.num_ == 0) return Rational();
      if (a.den_ == 1 && b.den_ == 1) return from_wide(Wide(a.num_) * b.num_, 1);
      return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    return mul_slow(a, b);
  }
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.reciprocal(); }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (!a.big_ || !b.big_) return false;
    return big_equal(a.big_, b.big_);
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    if (!a.big_ && !b.big_) return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
    return compare_slow(a, b) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  __extension__ typedef __int128 Wide;
  __extension__ typedef unsigned __int128 UWide;
  struct Big;

  static constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

  // Reduces n/d (d > 0) and stores it inline when it fits, as Big otherwise.
  // Only called on a freshly constructed value.
  void assign_wide(Wide n, Wide d) {
    if (d == 1 && n >= -Wide(kMax) && n <= Wide(kMax)) {
      num_ = static_cast<std::int64_t>(n);
      return;
    }
    assign_wide_slow(n, d);
  }
  void assign_wide_slow(Wide n, Wide d);
  static Rational from_wide(Wide n, Wide d) {
    Rational r;
    r.assign_wide(n, d);
    return r;
  }

  static Big* clone(const Big* b);
  static void release(Big* b) noexcept;
  static int big_sign(const Big* b) noexcept;
  static bool big_is_integer(const Big* b) noexcept;
  static bool big_equal(const Big* a, const Big* b) noexcept;
  static Rational add_slow(const Rational& a, const Rational& b);
  static Rational sub_slow(const Rational& a, const Rational& b);
  static Rational mul_slow(const Rational& a, const Rational& b);
  static int compare_slow(const Rational& a, const Rational& b) noexcept;
  static Big to_big(const Rational& r);
  static Rational from_big(Big&& b);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  Big* big_ = nullptr;
};

inline void swap(Rational& a, Rational& b) noexcept { a.swap(b); }

}  // namespace avla
