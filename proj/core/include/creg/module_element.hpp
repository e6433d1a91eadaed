#pragma once

#include <memory>
#include <vector>

#include "creg/field.hpp"
#include "creg/monomial.hpp"
#include "creg/polynomial.hpp"

namespace creg {

/// A term c * m * e_comp of a free module.
struct Term {
  Monomial mon;
  int comp = 0;
  Scalar coef = 0;
  bool operator==(const Term&) const = default;
};

/// Term order on a free module.
///
/// The base order is position-over-term: e_0 > e_1 > ... and grevlex (or
/// lex) within a component. A Schreyer order is induced by a list of leading terms
/// (m_i, c_i) in a previous order: m e_i > n e_j iff m m_i e_{c_i} > n m_j
/// e_{c_j} there, ties broken so that the smaller index wins.
class ModuleOrder {
 public:
  ModuleOrder() = default;
  /// Position-over-term with the given monomial order inside components.
  explicit ModuleOrder(MonomialOrder base) : base_(base) {}

  static ModuleOrder schreyer(const ModuleOrder& previous, std::vector<Monomial> lead_monomials,
                              std::vector<int> lead_components);

  bool is_schreyer() const { return level_ != nullptr; }
  MonomialOrder base() const { return base_; }
  /// True for plain position-over-term over grevlex, the order polynomials
  /// and matrices are stored in.
  bool is_standard() const { return !level_ && base_ == MonomialOrder::Grevlex; }
  int depth() const;

  /// Positive when a*e_ca > b*e_cb.
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  int compare(const Term& a, const Term& b) const { return compare(a.mon, a.comp, b.mon, b.comp); }

 private:
  struct Level;
  int compare_at(const Level* level, const Monomial& a, int ca, const Monomial& b, int cb) const;
  int compare_pot(const Monomial& a, int ca, const Monomial& b, int cb) const;

  std::shared_ptr<const Level> level_;
  MonomialOrder base_ = MonomialOrder::Grevlex;
};

/// An element of a graded free module: a sum of terms kept strictly
/// descending in some ModuleOrder. The order is not stored; every operation
/// that needs it takes it as an argument. Outside the Gröbner engine,
/// vectors are always in the base position-over-term order.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}

  /// Sorts in `order`, merges duplicates, drops zero coefficients.
  static Vec from_terms(std::vector<Term> terms, const ModuleOrder& order, const PrimeField& F);
  static Vec from_polynomial(const Polynomial& p, int comp);
  static Vec basis(int comp) { return Vec({Term{Monomial(), comp, 1}}); }

  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  /// Degree of the leading term with respect to component twists.
  int degree(const std::vector<int>& twists) const;
  bool is_homogeneous(const std::vector<int>& twists) const;
  /// Entry in component `comp`.
  Polynomial component(int comp, const PrimeField& F) const;
  int max_component() const;

  bool operator==(const Vec&) const = default;

 private:
  std::vector<Term> terms_;
};

/// f += c * m * g. Both must be sorted in `order`; multiplication by a
/// monomial is order preserving so this is a single merge.
void add_multiple(Vec& f, Scalar c, const Monomial& m, const Vec& g, const ModuleOrder& order,
                  const PrimeField& F);
Vec add(const Vec& a, const Vec& b, const ModuleOrder& order, const PrimeField& F);
Vec scale(const Vec& a, Scalar c, const PrimeField& F);
Vec multiply(const Polynomial& p, const Vec& v, const ModuleOrder& order, const PrimeField& F);
Vec resort(Vec v, const ModuleOrder& order, const PrimeField& F);
/// Makes the leading coefficient 1; returns the factor used.
Scalar make_monic(Vec& v, const PrimeField& F);

}  // namespace creg
