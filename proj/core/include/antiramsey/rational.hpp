#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace antiramsey {

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Densities are compared against thresholds such as (k+1)/2 and 15/7, so all
/// comparisons are done by cross-multiplication in 128-bit arithmetic.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  [[nodiscard]] std::int64_t numerator() const noexcept { return num_; }
  [[nodiscard]] std::int64_t denominator() const noexcept { return den_; }

  /// "p/q", or just "p" when the denominator is 1.
  [[nodiscard]] std::string to_string() const;

  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace antiramsey
