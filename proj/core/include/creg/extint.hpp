#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace creg {

/// An integer extended by -inf and +inf.
///
/// Used for every invariant that has an infinite sentinel: reg 0 = -inf,
/// dim 0 = -inf, indeg 0 = +inf, depth 0 = +inf, pd of a truncated
/// resolution = +inf.
class ExtInt {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  constexpr ExtInt() = default;
  constexpr ExtInt(long long v) : kind_(Kind::Finite), value_(v) {}  // NOLINT

  static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
  static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  /// Only meaningful when finite.
  constexpr long long value() const { return value_; }

  constexpr std::strong_ordering operator<=>(const ExtInt& o) const {
    if (kind_ != o.kind_) return rank() <=> o.rank();
    if (kind_ != Kind::Finite) return std::strong_ordering::equal;
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const ExtInt& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
  }

  /// -inf + (+inf) is treated as -inf: sums appear in sup-formulas where
  /// an empty contribution must not dominate.
  friend constexpr ExtInt operator+(ExtInt a, ExtInt b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
    if (a.is_pos_inf() || b.is_pos_inf()) return pos_inf();
    return ExtInt(a.value_ + b.value_);
  }
  friend constexpr ExtInt operator-(ExtInt a) {
    if (a.is_neg_inf()) return pos_inf();
    if (a.is_pos_inf()) return neg_inf();
    return ExtInt(-a.value_);
  }
  friend constexpr ExtInt operator-(ExtInt a, ExtInt b) { return a + (-b); }

  std::string to_string() const {
    switch (kind_) {
      case Kind::NegInf: return "-inf";
      case Kind::PosInf: return "+inf";
      default: return std::to_string(value_);
    }
  }

 private:
  constexpr explicit ExtInt(Kind k) : kind_(k) {}
  constexpr int rank() const {
    return kind_ == Kind::NegInf ? 0 : (kind_ == Kind::Finite ? 1 : 2);
  }

  Kind kind_ = Kind::NegInf;
  long long value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const ExtInt& x) { return os << x.to_string(); }

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
inline ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

}  // namespace creg
