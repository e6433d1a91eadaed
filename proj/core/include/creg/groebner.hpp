#pragma once

#include <optional>
#include <vector>

#include "creg/graded_map.hpp"
#include "creg/module_element.hpp"

namespace creg {

/// One step of a reduction: the divisor index, the monomial multiplier and
/// the scalar used.
struct ReductionStep {
  int index;
  Monomial mon;
  Scalar coef;
};

struct GroebnerInput;
struct GroebnerResult;

/// A Gröbner basis of a submodule of a graded free module over a
/// polynomial ring, with respect to a fixed module order.
///
/// Elements are monic. A basis produced by `buchberger` is reduced; one
/// assembled with `from_elements` is trusted to be a Gröbner basis but may
/// carry tails (this is how Schreyer frames are stored).
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  static GroebnerBasis from_elements(PrimeField field, GradedFreeModule free, ModuleOrder order,
                                     std::vector<Vec> elements);

  const PrimeField& field() const { return field_; }
  const GradedFreeModule& free() const { return free_; }
  const ModuleOrder& order() const { return order_; }
  const std::vector<Vec>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  /// Fully reduced remainder; divisors are chosen leftmost first and the
  /// largest reducible term is treated first, so the result is
  /// deterministic. Input in position-over-term order is resorted.
  Vec normal_form(Vec f) const;
  bool contains(const Vec& f) const { return normal_form(f).is_zero(); }
  /// Top reduction with the sequence of steps taken; reduction stops at
  /// the first irreducible leading term.
  Vec reduce_recording(Vec f, std::vector<ReductionStep>& steps) const;
  /// Leading monomials of the elements whose lead lies in component `comp`.
  std::vector<Monomial> leading_monomials(int comp) const;

  /// Certificate: every S-pair reduces to zero.
  bool verify() const;

 private:
  friend GroebnerResult buchberger(PrimeField, const GradedFreeModule&, const ModuleOrder&,
                                   std::vector<GroebnerInput>);

  int find_divisor(const Monomial& m, int comp) const;
  void index_elements();

  PrimeField field_;
  GradedFreeModule free_;
  ModuleOrder order_;
  std::vector<Vec> elements_;
  std::vector<std::vector<int>> by_component_;
};

/// Input to `buchberger`. Background elements are always kept; candidate
/// elements are tested for redundancy modulo everything of smaller or equal
/// degree processed before them, which yields a minimal generating subset.
struct GroebnerInput {
  Vec vec;
  bool candidate = false;
};

struct GroebnerResult {
  GroebnerBasis basis;
  /// Indices (into the input list) of candidates that were not redundant.
  std::vector<int> minimal;
};

/// Graded Buchberger algorithm with the normal selection strategy and the
/// Gebauer–Möller criteria. Inputs must be homogeneous with respect to the
/// twists of `free` and sorted in `order`; throws DomainError otherwise.
GroebnerResult buchberger(PrimeField field, const GradedFreeModule& free, const ModuleOrder& order,
                          std::vector<GroebnerInput> inputs);

/// Schreyer syzygies of a Gröbner basis: one syzygy per minimal S-pair,
/// given as vectors over the basis elements. They form a Gröbner basis of
/// the syzygy module with respect to the returned Schreyer order.
struct SyzygyFrame {
  GradedFreeModule free;  ///< twists = degrees of the basis elements
  ModuleOrder order;
  std::vector<Vec> syzygies;
};

SyzygyFrame schreyer_syzygies(const GroebnerBasis& basis);

/// The syzygy map of a basis: columns are the Schreyer syzygies in
/// position-over-term order, target is the free module on the basis.
GradedMap syzygy_map(const GroebnerBasis& basis);

}  // namespace creg
