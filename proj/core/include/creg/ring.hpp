#pragma once

#include <memory>
#include <string>
#include <vector>

#include "creg/field.hpp"
#include "creg/graded_map.hpp"
#include "creg/groebner.hpp"
#include "creg/polynomial.hpp"

namespace creg {

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// A standard graded algebra S/I over GF(p), with S = k[x_1..x_n] and I
/// homogeneous. Rings are immutable and shared by pointer.
class GradedRing : public std::enable_shared_from_this<GradedRing> {
 public:
  static RingPtr polynomial(PrimeField field, std::vector<std::string> names);
  /// base / (gens); generators of base's own ideal are kept. Throws
  /// DomainError on inhomogeneous or constant generators.
  static RingPtr quotient(const RingPtr& base, std::vector<Polynomial> gens);

  const PrimeField& field() const { return field_; }
  int nvars() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  /// Generators of the defining ideal as given.
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  /// Reduced Gröbner basis of the defining ideal.
  const std::vector<Polynomial>& ideal_basis() const { return basis_; }
  bool is_polynomial() const { return basis_.empty(); }

  /// The polynomial ring this ring is a quotient of.
  RingPtr cover() const;
  Polynomial variable(int i) const;
  std::vector<Polynomial> variables() const;
  Polynomial zero() const { return Polynomial(field_); }
  Polynomial one() const { return Polynomial::constant(field_, 1); }

  /// Normal form modulo the defining ideal.
  Polynomial reduce(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
  /// basis(I) · e_l for every component l of F, sorted in position-over-term.
  std::vector<Vec> ideal_multiples(const GradedFreeModule& F) const;

  /// Same field, variables and defining ideal.
  bool same_as(const GradedRing& o) const;
  std::string to_string() const;

 private:
  GradedRing(PrimeField field, std::vector<std::string> names) : field_(field), names_(std::move(names)) {}

  PrimeField field_;
  std::vector<std::string> names_;
  std::vector<Polynomial> ideal_;
  std::vector<Polynomial> basis_;
  RingPtr cover_;
  GroebnerBasis ideal_gb_;
};

/// Reduced Gröbner basis of a homogeneous ideal of a polynomial ring, sorted
/// by increasing leading monomial so that equal ideals give equal lists.
std::vector<Polynomial> ideal_groebner_basis(PrimeField field, const std::vector<Polynomial>& gens);
Vec to_vec(const Polynomial& p, int comp = 0);
Polynomial to_polynomial(const Vec& v, const PrimeField& F);

}  // namespace creg
