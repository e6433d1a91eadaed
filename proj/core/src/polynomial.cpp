#include "creg/polynomial.hpp"

#include <algorithm>
#include <ostream>

#include "creg/error.hpp"

namespace creg {

Polynomial Polynomial::from_terms(PrimeField field, std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const PolyTerm& a, const PolyTerm& b) {
    return compare_grevlex(a.mon, b.mon) > 0;
  });
  Polynomial p(field);
  for (auto& t : terms) {
    Scalar c = t.coef % field.characteristic();
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef = field.add(p.terms_.back().coef, c);
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.mon, c});
    }
  }
  return p;
}

Polynomial Polynomial::constant(PrimeField field, long long c) {
  return term(field, Monomial(), field.from_int(c));
}

Polynomial Polynomial::term(PrimeField field, const Monomial& m, Scalar c) {
  Polynomial p(field);
  if (c % field.characteristic() != 0) p.terms_.push_back({m, c % field.characteristic()});
  return p;
}

Polynomial Polynomial::variable(PrimeField field, int index) {
  return term(field, Monomial::variable(index), 1);
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mon.degree() != terms_.front().mon.degree()) return false;
  return true;
}

void Polynomial::check_field(const Polynomial& o) const {
  if (!(field_ == o.field_)) throw DomainError("polynomials over different fields");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_field(o);
  Polynomial r(field_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = compare_grevlex(terms_[i].mon, o.terms_[j].mon);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = field_.add(terms_[i].coef, o.terms_[j].coef);
      if (s != 0) r.terms_.push_back({terms_[i].mon, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(field_.neg(1)); }

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(Scalar c) const {
  Polynomial r(field_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon, field_.mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::times(const Monomial& m, Scalar c) const {
  Polynomial r(field_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mon * m, field_.mul(t.coef, c)});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_field(o);
  Polynomial r(field_);
  for (const auto& t : o.terms_) r = r + times(t.mon, t.coef);
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw DomainError("negative polynomial power");
  Polynomial r = constant(field_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (int i = 0; i < Monomial::kMaxVars; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += i < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(i)]
                                            : "v" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    long long c = field_.to_signed(t.coef);
    if (!first) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (t.mon.is_one()) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += monomial_to_string(t.mon, names);
    }
    first = false;
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  std::vector<std::string> names;
  for (int i = 0; i < Monomial::kMaxVars; ++i) names.push_back("x" + std::to_string(i));
  return os << p.to_string(names);
}

}  // namespace creg
