#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumcolor {

/// Exact fraction with positive denominator, always in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT(implicit)
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr Rational operator+(const Rational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
  }
  constexpr Rational operator*(const Rational& o) const {
    return {num_ * o.num_, den_ * o.den_};
  }
  constexpr Rational operator/(const Rational& o) const {
    return {num_ * o.den_, den_ * o.num_};
  }

  constexpr bool operator==(const Rational& o) const = default;
  constexpr std::strong_ordering operator<=>(const Rational& o) const {
    const __int128 lhs = static_cast<__int128>(num_) * o.den_;
    const __int128 rhs = static_cast<__int128>(o.num_) * den_;
    return lhs <=> rhs;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q", also for integers ("30/1").
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
  /// Inverse of str(); also accepts a bare integer.
  static Rational parse(const std::string& text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  std::size_t used = 0;
  if (slash == std::string::npos) {
    const std::int64_t v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("bad rational: " + text);
    return {v};
  }
  const std::string a = text.substr(0, slash);
  const std::string b = text.substr(slash + 1);
  std::size_t used_b = 0;
  const std::int64_t p = std::stoll(a, &used);
  const std::int64_t q = std::stoll(b, &used_b);
  if (used != a.size() || used_b != b.size()) throw std::invalid_argument("bad rational: " + text);
  return {p, q};
}

}  // namespace sumcolor
