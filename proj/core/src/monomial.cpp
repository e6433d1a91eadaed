#include "creg/monomial.hpp"

#include <string>

#include "creg/error.hpp"

namespace creg {

namespace {
constexpr int kExponentCap = 0xFFFF;
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 || exponents[i] > kExponentCap)
      throw OverflowError("exponent out of range: " + std::to_string(exponents[i]));
    exp_[i] = static_cast<Exponent>(exponents[i]);
  }
  recompute();
}

Monomial Monomial::variable(int index, int power) {
  if (index < 0 || index >= kMaxVars)
    throw DomainError("variable index out of range: " + std::to_string(index));
  if (power < 0 || power > kExponentCap)
    throw OverflowError("exponent out of range: " + std::to_string(power));
  Monomial m;
  m.exp_[static_cast<std::size_t>(index)] = static_cast<Exponent>(power);
  m.recompute();
  return m;
}

void Monomial::recompute() {
  degree_ = 0;
  mask_ = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    degree_ += exp_[i];
    if (exp_[i] != 0) mask_ |= 1u << i;
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = exp_[i] + o.exp_[i];
    if (s > kExponentCap) throw OverflowError("exponent overflow in monomial product");
    r.exp_[i] = static_cast<Exponent>(s);
  }
  r.degree_ = degree_ + o.degree_;
  r.mask_ = mask_ | o.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = static_cast<Exponent>(exp_[i] - o.exp_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] > b.exp_[i] ? a.exp_[i] : b.exp_[i];
  r.recompute();
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] < b.exp_[i] ? a.exp_[i] : b.exp_[i];
  r.recompute();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exp_) h = (h ^ e) * 1099511628211ull;
  return h;
}

int compare_monomials(MonomialOrder order, const Monomial& a, const Monomial& b) {
  if (order == MonomialOrder::Grevlex) return compare_grevlex(a, b);
  for (int i = 0; i < Monomial::kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int compare_monomials(MonomialOrder order, const Monomial& a, int vars_a, const Monomial& b,
                      int vars_b) {
  if (vars_a != vars_b)
    throw DomainError("cannot compare monomials over " + std::to_string(vars_a) + " and " +
                      std::to_string(vars_b) + " variables");
  return compare_monomials(order, a, b);
}

}  // namespace creg
