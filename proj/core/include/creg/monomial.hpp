#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace creg {

using Exponent = std::uint16_t;

/// A monomial in at most kMaxVars variables under the standard grading.
///
/// Exponents are capped at 2^16 - 1; any product that would exceed the cap
/// throws OverflowError.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;
  /// Throws OverflowError for negative exponents or exponents above the cap,
  /// DomainError for more than kMaxVars entries.
  explicit Monomial(std::span<const int> exponents);
  static Monomial variable(int index, int power = 1);

  Exponent operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::uint32_t support() const { return mask_; }

  Monomial operator*(const Monomial& o) const;
  /// Requires `o.divides(*this)`.
  Monomial operator/(const Monomial& o) const;

  bool divides(const Monomial& o) const {
    if ((mask_ & ~o.mask_) != 0 || degree_ > o.degree_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& o) const { return (mask_ & o.mask_) == 0; }
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const {
    return degree_ == o.degree_ && exp_ == o.exp_;
  }
  std::size_t hash() const;

 private:
  void recompute();

  std::array<Exponent, kMaxVars> exp_{};
  int degree_ = 0;
  std::uint32_t mask_ = 0;
};

enum class MonomialOrder { Grevlex, Lex };

/// Three-way comparison; positive when `a` is greater. Grevlex compares the
/// degree first and breaks ties on the last variable where the exponents
/// differ (smaller exponent wins).
int compare_monomials(MonomialOrder order, const Monomial& a, const Monomial& b);

inline int compare_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = Monomial::kMaxVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

/// Checked variant that rejects monomials over different variable counts.
int compare_monomials(MonomialOrder order, const Monomial& a, int vars_a,
                      const Monomial& b, int vars_b);

}  // namespace creg
