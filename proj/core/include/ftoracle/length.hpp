#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fto {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A nonnegative path length, or infinity.
///
/// Infinity is a tagged state, not a large integer: it absorbs addition and
/// compares greater than every finite length.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(std::int64_t value) : value_(value) {}

  static constexpr Length infinity() {
    Length l;
    l.finite_ = false;
    return l;
  }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }

  /// Requires is_finite().
  std::int64_t value() const {
    if (!finite_) throw Error("value() called on an infinite length");
    return value_;
  }

  friend constexpr Length operator+(Length a, Length b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return Length(a.value_ + b.value_);
  }
  Length& operator+=(Length other) { return *this = *this + other; }

  friend constexpr bool operator==(Length a, Length b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Length a, Length b) {
    if (!a.finite_ || !b.finite_) return b.finite_ <=> a.finite_;
    return a.value_ <=> b.value_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const;
  static Length parse(std::string_view text);

 private:
  std::int64_t value_ = 0;
  bool finite_ = true;
};

std::ostream& operator<<(std::ostream& os, Length l);

/// Exact nonnegative rational p/q with q > 0, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "p/q" or a bare integer "p".
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// A length divided by a positive integer scale, used for estimates that carry
/// a rational additive term. Infinity is inherited from the numerator.
class ScaledLength {
 public:
  ScaledLength() = default;
  ScaledLength(Length numerator, std::int64_t scale);

  static ScaledLength infinity() { return ScaledLength(Length::infinity(), 1); }
  /// value * factor, exactly.
  static ScaledLength times(Length value, const Rational& factor);

  bool is_finite() const { return numerator_.is_finite(); }
  bool is_infinite() const { return numerator_.is_infinite(); }
  Length numerator() const { return numerator_; }
  std::int64_t scale() const { return scale_; }

  /// "inf", "a" when integral, otherwise "a/b" in lowest terms.
  std::string to_string() const;

  friend bool operator==(const ScaledLength& a, const ScaledLength& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const ScaledLength& a, const ScaledLength& b);
  friend std::strong_ordering operator<=>(const ScaledLength& a, Length b) {
    return a <=> ScaledLength(b, 1);
  }
  friend bool operator==(const ScaledLength& a, Length b) { return (a <=> b) == 0; }

 private:
  Length numerator_;
  std::int64_t scale_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ScaledLength& l);

}  // namespace fto
