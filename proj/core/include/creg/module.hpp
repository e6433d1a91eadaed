#pragma once

#include <memory>
#include <vector>

#include "creg/extint.hpp"
#include "creg/graded_map.hpp"
#include "creg/groebner.hpp"
#include "creg/hilbert.hpp"
#include "creg/ring.hpp"

namespace creg {

/// A finitely presented graded module coker(p: F1 -> F0) over a graded
/// ring. Columns of p are relations among the generators of F0; entries are
/// polynomials of the cover and are read modulo the defining ideal.
///
/// The Gröbner basis of the relation module and the Hilbert series are
/// computed on first use and then shared by all copies.
class PresentedModule {
 public:
  PresentedModule() = default;
  /// Throws DomainError on an inhomogeneous presentation.
  PresentedModule(RingPtr ring, GradedMap presentation);

  static PresentedModule free(RingPtr ring, GradedFreeModule F);
  /// (R/J) with its generator in degree `generator_degree`, i.e. (R/J)(-g).
  static PresentedModule cyclic(RingPtr ring, const std::vector<Polynomial>& J,
                                int generator_degree = 0);
  static PresentedModule residue_field(RingPtr ring, int generator_degree = 0);
  static PresentedModule zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const GradedMap& presentation() const { return presentation_; }
  const GradedFreeModule& generators() const { return presentation_.target(); }
  int num_generators() const { return generators().rank(); }
  const PrimeField& field() const { return ring()->field(); }

  /// M(d), generators move to degree g - d.
  PresentedModule shifted(int d) const;
  /// The same module regarded over the polynomial cover.
  PresentedModule over_cover() const;
  /// Removes redundant generators and relations.
  PresentedModule minimal() const;

  /// Gröbner basis (over the cover, position-over-term) of im p + I·F0.
  const GroebnerBasis& basis() const;
  const HilbertSeries& hilbert_series() const;

  bool is_zero() const { return hilbert_series().is_zero(); }
  ExtInt dimension() const { return hilbert_series().dimension(); }
  ExtInt indeg() const { return hilbert_series().indeg(); }
  ExtInt end_degree() const { return hilbert_series().end_degree(); }
  bool is_finite_length() const { return dimension() <= ExtInt(0); }
  /// Krull dimension from the initial module, independent of the series.
  ExtInt combinatorial_dimension() const;

  /// Normal form of an element of F0 modulo the relations.
  Vec normal_form(const Vec& v) const { return basis().normal_form(v); }
  bool contains_relation(const Vec& v) const { return normal_form(v).is_zero(); }

 private:
  struct Cache;
  RingPtr ring_;
  GradedMap presentation_;
  std::shared_ptr<Cache> cache_;
};

/// A degree-preserving map of presented modules, given on generators:
/// column j is the image of generator j as an element of target's F0.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Checks shapes, homogeneity and that relations map to relations.
  ModuleMap(PresentedModule source, PresentedModule target, GradedMap matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const GradedMap& matrix() const { return matrix_; }
  bool is_zero() const;

 private:
  PresentedModule source_;
  PresentedModule target_;
  GradedMap matrix_;
};

/// A submodule together with its generators inside the ambient F0.
struct Submodule {
  PresentedModule module;
  GradedMap inclusion;
};

/// (im gens + im rels) / im rels inside the common target, with a minimal
/// subset of the columns of `gens` as generators.
Submodule subquotient(const RingPtr& ring, const GradedMap& gens, const GradedMap& rels);

/// Minimal generators (modulo I) of { v : A v in im rels + I·target }.
std::vector<Vec> kernel_generators(const RingPtr& ring, const GradedMap& A, const GradedMap& rels);

/// Columns of `gens` forming a minimal generating set modulo im rels + I.
std::vector<int> minimal_columns(const RingPtr& ring, const GradedMap& gens, const GradedMap& rels);

Submodule kernel(const ModuleMap& phi);
Submodule image(const ModuleMap& phi);
PresentedModule cokernel(const ModuleMap& phi);
/// ker phi / im psi; throws DomainError unless phi ∘ psi = 0.
PresentedModule homology_at(const ModuleMap& psi, const ModuleMap& phi);

/// (0 :_M x) with its inclusion into M.
Submodule colon_by_element(const PresentedModule& M, const Polynomial& x);
/// M / xM.
PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& x);
/// Ann_R(M), as generators of an ideal of the cover containing I.
std::vector<Polynomial> annihilator(const PresentedModule& M);
/// Whether two ideals of the cover agree modulo the defining ideal.
bool same_ideal(const RingPtr& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b);

bool is_filter_regular(const Polynomial& x, const PresentedModule& M);

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b);
PresentedModule tensor(const PresentedModule& a, const PresentedModule& b);

/// Multiplication by a form x: F -> F(deg x) as a matrix on generators.
GradedMap multiplication_map(const PrimeField& F, const GradedFreeModule& gens, const Polynomial& x);

struct Elimination {
  GradedMap map;
  std::vector<int> kept_rows;
  std::vector<int> kept_cols;
};

/// Repeatedly pivots on the first unit entry in row-major order, replacing
/// the matrix by its Schur complement, until no unit entries remain.
Elimination eliminate_units(const GradedMap& d);

}  // namespace creg
