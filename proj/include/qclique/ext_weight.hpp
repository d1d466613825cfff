#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace qclique {

/// Integer weight extended with +INF, the carrier of the min-plus semiring.
///
/// INF absorbs under addition and is neutral under min. Finite values are
/// restricted to |v| <= kMaxFinite so that sums of two finite values are always
/// representable; any sum that leaves that range throws instead of wrapping.
class ExtWeight {
 public:
  static constexpr std::int64_t kMaxFinite = std::int64_t{1} << 60;

  constexpr ExtWeight() : raw_(kInfRaw) {}

  static constexpr ExtWeight inf() { return ExtWeight(); }
  static ExtWeight finite(std::int64_t v) {
    if (v > kMaxFinite || v < -kMaxFinite) {
      throw std::overflow_error("weight magnitude exceeds representable range: " + std::to_string(v));
    }
    return ExtWeight(v, Tag{});
  }

  constexpr bool is_inf() const { return raw_ == kInfRaw; }
  constexpr bool is_finite() const { return raw_ != kInfRaw; }

  std::int64_t value() const {
    if (is_inf()) throw std::logic_error("value() on INF weight");
    return raw_;
  }

  friend ExtWeight operator+(ExtWeight a, ExtWeight b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return finite(a.raw_ + b.raw_);
  }

  ExtWeight operator-() const {
    if (is_inf()) throw std::logic_error("negation of INF is outside the semiring");
    return ExtWeight(-raw_, Tag{});
  }

  friend constexpr bool operator==(ExtWeight a, ExtWeight b) = default;
  friend constexpr std::strong_ordering operator<=>(ExtWeight a, ExtWeight b) {
    return a.raw_ <=> b.raw_;
  }

  std::string to_string() const { return is_inf() ? "INF" : std::to_string(raw_); }

 private:
  struct Tag {};
  static constexpr std::int64_t kInfRaw = std::numeric_limits<std::int64_t>::max();
  constexpr ExtWeight(std::int64_t v, Tag) : raw_(v) {}

  std::int64_t raw_;
};

inline ExtWeight ext_min(ExtWeight a, ExtWeight b) { return b < a ? b : a; }

}  // namespace qclique
