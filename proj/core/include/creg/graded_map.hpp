#pragma once

#include <vector>

#include "creg/field.hpp"
#include "creg/module_element.hpp"
#include "creg/polynomial.hpp"

namespace creg {

/// F = ⊕ R(-d_j): basis element e_j lives in degree d_j.
struct GradedFreeModule {
  std::vector<int> twists;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> t) : twists(std::move(t)) {}
  int rank() const { return static_cast<int>(twists.size()); }
  GradedFreeModule shifted(int d) const;  ///< F(d): every twist decreases by d
  bool operator==(const GradedFreeModule&) const = default;
};

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b);

/// A matrix of polynomials between graded free modules, stored as columns
/// (images of the source basis) in position-over-term order.
///
/// Homogeneity is not enforced by the constructor; `is_homogeneous` checks
/// that every nonzero entry (i, j) has degree source_j - target_i.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(PrimeField field, GradedFreeModule source, GradedFreeModule target,
            std::vector<Vec> columns);
  static GradedMap from_rows(PrimeField field, GradedFreeModule source, GradedFreeModule target,
                             const std::vector<std::vector<Polynomial>>& rows);
  static GradedMap zero(PrimeField field, GradedFreeModule source, GradedFreeModule target);
  static GradedMap identity(PrimeField field, const GradedFreeModule& m);
  /// Multiplication by a homogeneous form p: F -> F(deg p).
  static GradedMap scalar(PrimeField field, const GradedFreeModule& m, const Polynomial& p);

  const PrimeField& field() const { return field_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const std::vector<Vec>& columns() const { return columns_; }
  const Vec& column(int j) const { return columns_[static_cast<std::size_t>(j)]; }
  Polynomial entry(int i, int j) const;

  bool is_homogeneous() const;
  bool is_zero() const;
  /// Every entry lies in the maximal ideal (no nonzero constants).
  bool is_minimal() const;

  /// this ∘ other.
  GradedMap compose(const GradedMap& other) const;
  GradedMap negated() const;
  GradedMap scaled(Scalar c) const;
  /// Transpose, as a map Hom(target, R) -> Hom(source, R).
  GradedMap dual() const;
  /// Same matrix with source and target shifted: map F(d) -> G(d).
  GradedMap shifted(int d) const;
  GradedMap select_columns(const std::vector<int>& cols) const;
  /// Keep only the rows listed, renumbered in the given order.
  GradedMap select_rows(const std::vector<int>& rows) const;

  bool operator==(const GradedMap&) const = default;

 private:
  PrimeField field_;
  GradedFreeModule source_;
  GradedFreeModule target_;
  std::vector<Vec> columns_;
};

/// [A | B]; targets must agree.
GradedMap concat_columns(const GradedMap& a, const GradedMap& b);
/// Block diagonal A ⊕ B.
GradedMap block_diagonal(const GradedMap& a, const GradedMap& b);
/// Stacks [A; B] on a direct-sum target; sources must agree.
GradedMap stack_rows(const GradedMap& a, const GradedMap& b);
/// A ⊗ id_m: source/target basis ordered (basis of A) major, then m.
GradedMap kron_identity(const GradedMap& a, const GradedFreeModule& m);
/// id_f ⊗ B: f-major ordering, one copy of B per basis element of f,
/// each copy shifted by that basis element's twist.
GradedMap identity_kron(const GradedFreeModule& f, const GradedMap& b);

}  // namespace creg
