#include "creg/ring.hpp"

#include <algorithm>
#include <set>

#include "creg/error.hpp"

namespace creg {

Vec to_vec(const Polynomial& p, int comp) { return Vec::from_polynomial(p, comp); }

Polynomial to_polynomial(const Vec& v, const PrimeField& F) { return v.component(0, F); }

std::vector<Polynomial> ideal_groebner_basis(PrimeField field, const std::vector<Polynomial>& gens) {
  std::vector<GroebnerInput> in;
  for (const auto& g : gens) in.push_back({to_vec(g), false});
  auto res = buchberger(field, GradedFreeModule({0}), ModuleOrder(), std::move(in));
  std::vector<Polynomial> out;
  for (const auto& v : res.basis.elements()) out.push_back(to_polynomial(v, field));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return compare_grevlex(a.leading().mon, b.leading().mon) < 0;
  });
  return out;
}

RingPtr GradedRing::polynomial(PrimeField field, std::vector<std::string> names) {
  if (static_cast<int>(names.size()) > Monomial::kMaxVars)
    throw DomainError("at most " + std::to_string(Monomial::kMaxVars) + " variables are supported");
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw DomainError("duplicate variable name " + n);
  return RingPtr(new GradedRing(field, std::move(names)));
}

RingPtr GradedRing::quotient(const RingPtr& base, std::vector<Polynomial> gens) {
  auto r = std::shared_ptr<GradedRing>(new GradedRing(base->field_, base->names_));
  r->ideal_ = base->ideal_;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!(g.field() == base->field_)) throw DomainError("ideal generator over a different field");
    if (!g.is_homogeneous()) throw DomainError("inhomogeneous ideal generator");
    if (g.degree() == 0) throw DomainError("ideal generator is a unit");
    r->ideal_.push_back(std::move(g));
  }
  r->basis_ = ideal_groebner_basis(r->field_, r->ideal_);
  std::vector<Vec> els;
  for (const auto& b : r->basis_) els.push_back(to_vec(b));
  r->ideal_gb_ = GroebnerBasis::from_elements(r->field_, GradedFreeModule({0}), ModuleOrder(),
                                              std::move(els));
  r->cover_ = base->cover();
  return r;
}

RingPtr GradedRing::cover() const {
  if (cover_) return cover_;
  return shared_from_this();
}

Polynomial GradedRing::variable(int i) const {
  if (i < 0 || i >= nvars()) throw DomainError("variable index out of range");
  return Polynomial::variable(field_, i);
}

std::vector<Polynomial> GradedRing::variables() const {
  std::vector<Polynomial> v;
  for (int i = 0; i < nvars(); ++i) v.push_back(variable(i));
  return v;
}

Polynomial GradedRing::reduce(const Polynomial& f) const {
  if (basis_.empty()) return f;
  return to_polynomial(ideal_gb_.normal_form(to_vec(f)), field_);
}

std::vector<Vec> GradedRing::ideal_multiples(const GradedFreeModule& F) const {
  std::vector<Vec> out;
  for (int l = 0; l < F.rank(); ++l)
    for (const auto& b : basis_) out.push_back(to_vec(b, l));
  return out;
}

bool GradedRing::same_as(const GradedRing& o) const {
  return this == &o || (field_ == o.field_ && names_ == o.names_ && basis_ == o.basis_);
}

std::string GradedRing::to_string() const {
  std::string s = "GF(" + std::to_string(field_.characteristic()) + ")[";
  for (std::size_t i = 0; i < names_.size(); ++i) s += (i ? "," : "") + names_[i];
  s += "]";
  if (!ideal_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? ", " : "") + ideal_[i].to_string(names_);
    s += ")";
  }
  return s;
}

}  // namespace creg
