#include "creg/module_element.hpp"

#include <algorithm>

#include "creg/error.hpp"

namespace creg {

struct ModuleOrder::Level {
  std::shared_ptr<const Level> prev;
  std::vector<Monomial> lead_mon;
  std::vector<int> lead_comp;
  // Image of each basis element in the base free module.
  std::vector<Monomial> total_mon;
  std::vector<int> base_comp;
};

int ModuleOrder::compare_pot(const Monomial& a, int ca, const Monomial& b, int cb) const {
  if (ca != cb) return ca < cb ? 1 : -1;
  return base_ == MonomialOrder::Grevlex ? compare_grevlex(a, b)
                                         : compare_monomials(MonomialOrder::Lex, a, b);
}

ModuleOrder ModuleOrder::schreyer(const ModuleOrder& previous, std::vector<Monomial> lead_monomials,
                                  std::vector<int> lead_components) {
  if (lead_monomials.size() != lead_components.size())
    throw DomainError("Schreyer order needs one leading term per basis element");
  auto level = std::make_shared<Level>();
  level->prev = previous.level_;
  level->total_mon.reserve(lead_monomials.size());
  level->base_comp.reserve(lead_monomials.size());
  for (std::size_t i = 0; i < lead_monomials.size(); ++i) {
    if (previous.level_) {
      auto c = static_cast<std::size_t>(lead_components[i]);
      level->total_mon.push_back(lead_monomials[i] * previous.level_->total_mon[c]);
      level->base_comp.push_back(previous.level_->base_comp[c]);
    } else {
      level->total_mon.push_back(lead_monomials[i]);
      level->base_comp.push_back(lead_components[i]);
    }
  }
  level->lead_mon = std::move(lead_monomials);
  level->lead_comp = std::move(lead_components);
  ModuleOrder o(previous.base_);
  o.level_ = std::move(level);
  return o;
}

int ModuleOrder::depth() const {
  int d = 0;
  for (const Level* l = level_.get(); l; l = l->prev.get()) ++d;
  return d;
}

int ModuleOrder::compare_at(const Level* level, const Monomial& a, int ca, const Monomial& b,
                            int cb) const {
  if (!level) return compare_pot(a, ca, b, cb);
  auto ia = static_cast<std::size_t>(ca), ib = static_cast<std::size_t>(cb);
  int c = compare_pot(a * level->total_mon[ia], level->base_comp[ia], b * level->total_mon[ib],
                      level->base_comp[ib]);
  if (c != 0) return c;
  if (ca == cb) return compare_pot(a, ca, b, cb);
  c = compare_at(level->prev.get(), a * level->lead_mon[ia], level->lead_comp[ia],
                 b * level->lead_mon[ib], level->lead_comp[ib]);
  if (c != 0) return c;
  return ca < cb ? 1 : -1;
}

int ModuleOrder::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  return compare_at(level_.get(), a, ca, b, cb);
}

Vec Vec::from_terms(std::vector<Term> terms, const ModuleOrder& order, const PrimeField& F) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a, b) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mon == t.mon) {
      out.back().coef = F.add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(t);
    }
  }
  return Vec(std::move(out));
}

Vec Vec::from_polynomial(const Polynomial& p, int comp) {
  std::vector<Term> t;
  t.reserve(p.terms().size());
  for (const auto& pt : p.terms()) t.push_back({pt.mon, comp, pt.coef});
  return Vec(std::move(t));
}

int Vec::degree(const std::vector<int>& twists) const {
  const Term& t = leading();
  return t.mon.degree() + twists[static_cast<std::size_t>(t.comp)];
}

bool Vec::is_homogeneous(const std::vector<int>& twists) const {
  if (terms_.empty()) return true;
  int d = degree(twists);
  for (const auto& t : terms_)
    if (t.mon.degree() + twists[static_cast<std::size_t>(t.comp)] != d) return false;
  return true;
}

Polynomial Vec::component(int comp, const PrimeField& F) const {
  std::vector<PolyTerm> pt;
  for (const auto& t : terms_)
    if (t.comp == comp) pt.push_back({t.mon, t.coef});
  return Polynomial::from_terms(F, std::move(pt));
}

int Vec::max_component() const {
  int m = -1;
  for (const auto& t : terms_) m = std::max(m, t.comp);
  return m;
}

void add_multiple(Vec& f, Scalar c, const Monomial& m, const Vec& g, const ModuleOrder& order,
                  const PrimeField& F) {
  if (c == 0 || g.is_zero()) return;
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Term bj;
  bool have_b = false;
  while (true) {
    if (!have_b && j < b.size()) {
      bj = Term{b[j].mon * m, b[j].comp, F.mul(b[j].coef, c)};
      have_b = true;
    }
    if (i >= a.size() || !have_b) break;
    int cmp = order.compare(a[i].mon, a[i].comp, bj.mon, bj.comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bj);
      have_b = false;
      ++j;
    } else {
      Scalar s = F.add(a[i].coef, bj.coef);
      if (s != 0) out.push_back(Term{a[i].mon, a[i].comp, s});
      ++i;
      ++j;
      have_b = false;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  if (have_b) {
    out.push_back(bj);
    ++j;
  }
  for (; j < b.size(); ++j) out.push_back(Term{b[j].mon * m, b[j].comp, F.mul(b[j].coef, c)});
  f = Vec(std::move(out));
}

Vec add(const Vec& a, const Vec& b, const ModuleOrder& order, const PrimeField& F) {
  Vec r = a;
  add_multiple(r, 1, Monomial(), b, order, F);
  return r;
}

Vec scale(const Vec& a, Scalar c, const PrimeField& F) {
  if (c == 0) return Vec();
  std::vector<Term> t = a.terms();
  for (auto& x : t) x.coef = F.mul(x.coef, c);
  return Vec(std::move(t));
}

Vec multiply(const Polynomial& p, const Vec& v, const ModuleOrder& order, const PrimeField& F) {
  Vec r;
  for (const auto& t : p.terms()) add_multiple(r, t.coef, t.mon, v, order, F);
  return r;
}

Vec resort(Vec v, const ModuleOrder& order, const PrimeField& F) {
  return Vec::from_terms(std::move(v.mutable_terms()), order, F);
}

Scalar make_monic(Vec& v, const PrimeField& F) {
  if (v.is_zero()) return 1;
  Scalar lc = v.leading().coef;
  if (lc == 1) return 1;
  Scalar inv = F.inv(lc);
  for (auto& t : v.mutable_terms()) t.coef = F.mul(t.coef, inv);
  return inv;
}

}  // namespace creg
