#include "creg/hilbert.hpp"

#include <algorithm>

#include "creg/error.hpp"

namespace creg {

namespace {

using Coeffs = std::vector<long long>;

void add_into(Coeffs& a, const Coeffs& b, int shift, long long sign) {
  if (a.size() < b.size() + static_cast<std::size_t>(shift)) a.resize(b.size() + shift, 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] += sign * b[k];
}

long long binom(long long n, int k) {
  if (k < 0 || n < k) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void minimalize(std::vector<Monomial>& g) {
  std::sort(g.begin(), g.end(),
            [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) < 0; });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  g = std::move(out);
}

// Numerator of S/J, coefficient k is that of t^k.
Coeffs numerator(std::vector<Monomial> g) {
  minimalize(g);
  if (g.empty()) return {1};
  for (const auto& m : g)
    if (m.is_one()) return {};
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& m : g) {
    if (m.support() & seen) {
      coprime = false;
      break;
    }
    seen |= m.support();
  }
  if (coprime) {
    Coeffs r{1};
    for (const auto& m : g) {
      Coeffs f(static_cast<std::size_t>(m.degree()) + 1, 0);
      f[0] = 1;
      f[static_cast<std::size_t>(m.degree())] = -1;
      Coeffs prod(r.size() + f.size() - 1, 0);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) prod[i + j] += r[i] * f[j];
      r = std::move(prod);
    }
    return r;
  }
  // Pivot on the variable occurring in the most non-linear generators.
  int counts[Monomial::kMaxVars] = {};
  for (const auto& m : g)
    if (m.degree() >= 2)
      for (int v = 0; v < Monomial::kMaxVars; ++v)
        if (m[v] > 0) ++counts[v];
  int pivot = static_cast<int>(std::max_element(counts, counts + Monomial::kMaxVars) - counts);
  Monomial x = Monomial::variable(pivot);
  std::vector<Monomial> sum{x}, colon;
  for (const auto& m : g) {
    if (!x.divides(m)) sum.push_back(m);
    colon.push_back(x.divides(m) ? m / x : m);
  }
  Coeffs r = numerator(std::move(sum));
  add_into(r, numerator(std::move(colon)), 1, 1);
  return r;
}

}  // namespace

HilbertSeries::HilbertSeries(int offset, std::vector<long long> numerator, int denominator)
    : offset_(offset), numerator_(std::move(numerator)), pole_(denominator) {
  normalize();
}

void HilbertSeries::normalize() {
  while (!numerator_.empty() && numerator_.back() == 0) numerator_.pop_back();
  std::size_t lead = 0;
  while (lead < numerator_.size() && numerator_[lead] == 0) ++lead;
  if (lead > 0) {
    numerator_.erase(numerator_.begin(), numerator_.begin() + static_cast<long>(lead));
    offset_ += static_cast<int>(lead);
  }
  if (numerator_.empty()) {
    offset_ = 0;
    pole_ = 0;
    return;
  }
  // Divide by (1 - t) while N(1) = 0.
  while (pole_ > 0) {
    long long s = 0;
    for (long long c : numerator_) s += c;
    if (s != 0) break;
    Coeffs q(numerator_.size() - 1, 0);
    long long acc = 0;
    for (std::size_t k = 0; k + 1 < numerator_.size(); ++k) {
      acc += numerator_[k];
      q[k] = acc;
    }
    numerator_ = std::move(q);
    --pole_;
    while (!numerator_.empty() && numerator_.back() == 0) numerator_.pop_back();
  }
}

long long HilbertSeries::coefficient(int j) const {
  long long s = 0;
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    long long e = j - offset_ - static_cast<long long>(k);
    if (e < 0) break;
    s += numerator_[k] * (pole_ == 0 ? (e == 0 ? 1 : 0) : binom(e + pole_ - 1, pole_ - 1));
  }
  return s;
}

ExtInt HilbertSeries::dimension() const {
  if (is_zero()) return ExtInt::neg_inf();
  return pole_;
}

ExtInt HilbertSeries::indeg() const {
  if (is_zero()) return ExtInt::pos_inf();
  return offset_;
}

ExtInt HilbertSeries::end_degree() const {
  if (is_zero()) return ExtInt::neg_inf();
  if (pole_ > 0) return ExtInt::pos_inf();
  return offset_ + static_cast<long long>(numerator_.size()) - 1;
}

std::vector<long long> HilbertSeries::numerator_over(int n, int& offset) const {
  if (n < pole_) throw DomainError("denominator exponent below the pole order");
  offset = offset_;
  Coeffs r = numerator_;
  for (int k = pole_; k < n; ++k) {
    Coeffs next(r.size() + 1, 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i] += r[i];
      next[i + 1] -= r[i];
    }
    r = std::move(next);
  }
  return r;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int n = std::max(pole_, o.pole_);
  int oa = 0, ob = 0;
  Coeffs a = numerator_over(n, oa), b = o.numerator_over(n, ob);
  int off = std::min(oa, ob);
  Coeffs r;
  add_into(r, a, oa - off, 1);
  add_into(r, b, ob - off, 1);
  return HilbertSeries(off, std::move(r), n);
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
  HilbertSeries neg = o;
  for (auto& c : neg.numerator_) c = -c;
  return *this + neg;
}

HilbertSeries HilbertSeries::shifted(int d) const {
  HilbertSeries r = *this;
  if (!r.is_zero()) r.offset_ -= d;
  return r;
}

std::string HilbertSeries::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    long long c = numerator_[k];
    if (c == 0) continue;
    int e = offset_ + static_cast<int>(k);
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) s += std::to_string(a);
    if (e != 0) {
      if (a != 1) s += "*";
      s += e == 1 ? "t" : "t^" + std::to_string(e);
    }
  }
  if (pole_ > 0) s = "(" + s + ")/(1-t)^" + std::to_string(pole_);
  return s;
}

HilbertSeries monomial_quotient_series(int nvars, std::vector<Monomial> gens) {
  return HilbertSeries(0, numerator(std::move(gens)), nvars);
}

ExtInt monomial_quotient_dimension(int nvars, const std::vector<Monomial>& gens) {
  for (const auto& m : gens)
    if (m.is_one()) return ExtInt::neg_inf();
  int best = -1;
  const std::uint32_t all = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
  for (std::uint32_t set = 0;; set = (set - all) & all) {
    bool independent = true;
    for (const auto& m : gens)
      if ((m.support() & ~set) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, static_cast<int>(__builtin_popcount(set)));
    if (set == all) break;
  }
  return best;
}

}  // namespace creg
