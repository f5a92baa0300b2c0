#include "ftoracle/length.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

namespace fto {

namespace {
__extension__ using Wide = __int128;
}  // namespace
namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::string Length::to_string() const {
  return finite_ ? std::to_string(value_) : std::string("inf");
}

Length Length::parse(std::string_view text) {
  if (text == "inf") return infinity();
  const std::int64_t v = parse_int(text, "length");
  if (v < 0) throw Error("negative length: " + std::string(text));
  return Length(v);
}

std::ostream& operator<<(std::ostream& os, Length l) { return os << l.to_string(); }

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw Error("rational denominator must be positive");
  if (num < 0) throw Error("rational must be nonnegative");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"), 1);
  return Rational(parse_int(text.substr(0, slash), "rational"),
                  parse_int(text.substr(slash + 1), "rational"));
}

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ <=> static_cast<Wide>(b.num_) * a.den_;
}

ScaledLength::ScaledLength(Length numerator, std::int64_t scale)
    : numerator_(numerator), scale_(scale) {
  if (scale <= 0) throw Error("scale must be positive");
}

ScaledLength ScaledLength::times(Length value, const Rational& factor) {
  if (value.is_infinite()) return infinity();
  return ScaledLength(Length(value.value() * factor.num()), factor.den());
}

std::string ScaledLength::to_string() const {
  if (numerator_.is_infinite()) return "inf";
  const std::int64_t g = std::gcd(numerator_.value(), scale_);
  const std::int64_t num = numerator_.value() / g;
  const std::int64_t den = scale_ / g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering operator<=>(const ScaledLength& a, const ScaledLength& b) {
  if (a.is_infinite() || b.is_infinite()) return b.is_finite() <=> a.is_finite();
  return static_cast<Wide>(a.numerator_.value()) * b.scale_ <=>
         static_cast<Wide>(b.numerator_.value()) * a.scale_;
}

std::ostream& operator<<(std::ostream& os, const ScaledLength& l) {
  return os << l.to_string();
}

}  // namespace fto
