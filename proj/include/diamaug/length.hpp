#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace diamaug {

/// Hop length of a path or a distance. Unreachable pairs (and the diameter of
/// a disconnected graph) are `Length::infinite()`, which compares greater than
/// every finite value.
class Length {
 public:
  constexpr Length() = default;
  constexpr explicit Length(int hops) : hops_(hops) {}

  static constexpr Length infinite() {
    Length l;
    l.hops_ = kInfinite;
    return l;
  }

  constexpr bool is_finite() const { return hops_ != kInfinite; }
  constexpr bool is_infinite() const { return hops_ == kInfinite; }

  /// Finite value; throws std::logic_error on infinity.
  int value() const;

  std::optional<int> finite_value() const {
    if (is_infinite()) return std::nullopt;
    return hops_;
  }

  /// "inf" or the decimal value.
  std::string to_string() const;

  friend constexpr bool operator==(Length a, Length b) = default;
  friend constexpr std::strong_ordering operator<=>(Length a, Length b) {
    return a.hops_ <=> b.hops_;
  }
  friend constexpr bool operator==(Length a, int b) { return a.hops_ == b; }
  friend constexpr std::strong_ordering operator<=>(Length a, int b) {
    if (a.is_infinite()) return std::strong_ordering::greater;
    return a.hops_ <=> b;
  }

  friend std::ostream& operator<<(std::ostream& os, Length l) {
    return os << l.to_string();
  }

 private:
  // Internal encoding only; never exposed as a number.
  static constexpr int kInfinite = INT32_MAX;
  int hops_ = 0;
};

}  // namespace diamaug
