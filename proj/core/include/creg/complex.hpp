#pragma once

#include <vector>

#include "creg/extint.hpp"
#include "creg/graded_map.hpp"
#include "creg/module.hpp"
#include "creg/oracle.hpp"
#include "creg/resolution.hpp"

namespace creg {

/// A bounded chain complex of presented modules,
/// C_hi -> ... -> C_lo, with differentials given on generators.
/// Cohomological objects live at negative homological degrees.
class BoundedComplex {
 public:
  BoundedComplex() = default;
  /// terms[k] sits at homological degree lo + k; diffs[k]: terms[k+1] -> terms[k].
  BoundedComplex(RingPtr ring, int lo, std::vector<PresentedModule> terms,
                 std::vector<GradedMap> diffs);

  static BoundedComplex from_module(const PresentedModule& M, int at = 0);
  /// A free resolution with F_i at degree i.
  static BoundedComplex from_resolution(const FreeResolution& F);

  const RingPtr& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  bool empty() const { return terms_.empty(); }

  /// Zero module outside the window.
  const PresentedModule& term(int i) const;
  /// d_i: C_i -> C_{i-1}; a zero matrix outside the window.
  GradedMap differential(int i) const;

  bool all_free() const;
  /// All free with no unit entries in any differential.
  bool is_minimal() const;
  /// Set on resolutions cut at a length bound.
  bool truncated() const { return truncated_; }
  void mark_truncated(bool t = true) { truncated_ = t; }

  /// (Σ^s C)_i = C_{i-s}, differentials multiplied by (-1)^s.
  BoundedComplex suspended(int s = 1) const;
  /// C(d) termwise.
  BoundedComplex twisted(int d) const;
  /// The same complex regarded over the polynomial cover.
  BoundedComplex over_cover() const;
  /// Drops zero terms at both ends.
  BoundedComplex trimmed() const;

  /// Differentials are module maps and d_{i-1} ∘ d_i = 0.
  bool is_complex() const;

 private:
  RingPtr ring_;
  int lo_ = 0;
  std::vector<PresentedModule> terms_;
  std::vector<GradedMap> diffs_;
  PresentedModule zero_;
  bool truncated_ = false;
};

PresentedModule homology(const BoundedComplex& C, int i);
/// inf / sup of the homology; +inf / -inf for an exact complex.
ExtInt homology_inf(const BoundedComplex& C);
ExtInt homology_sup(const BoundedComplex& C);

/// Koszul complex K(seq; R) on homogeneous forms, basis in lex order of subsets.
BoundedComplex koszul_complex(const RingPtr& ring, const std::vector<Polynomial>& seq);
BoundedComplex koszul_complex(const std::vector<Polynomial>& seq, const PresentedModule& M);
/// Totalization of K(seq; R) ⊗ C.
BoundedComplex koszul_complex(const std::vector<Polynomial>& seq, const BoundedComplex& C);

/// Totalization of F ⊗ G for an all-free F, d = d_F ⊗ 1 + (-1)^a 1 ⊗ d_G.
BoundedComplex tensor_complexes(const BoundedComplex& F, const BoundedComplex& G);
/// Hom(F, N) for an all-free F: Hom_m = Π Hom(F_a, N_{a+m}),
/// D φ = d_N φ - (-1)^m φ d_F.
BoundedComplex hom_complex(const BoundedComplex& F, const BoundedComplex& N);

/// H_i(F_M ⊗ N) with F_M the minimal resolution of M. Throws LimitError
/// when the resolution was truncated too early to determine Tor_i.
PresentedModule tor(const PresentedModule& M, const PresentedModule& N, int i, int max_len = -1);
/// H^i Hom(F_M, N).
PresentedModule ext(const PresentedModule& M, const PresentedModule& N, int i, int max_len = -1);

/// A minimal all-free complex quasi-isomorphic to L, built by killing the
/// homology of a mapping cone degree by degree. `max_len` bounds how far
/// past L's top the construction may run (negative: the default bound).
BoundedComplex free_resolution_of_complex(const BoundedComplex& L, int max_len = -1);

/// length(seq) - max{i : H_i(seq; M) != 0}; +inf for M = 0.
ExtInt grade(const std::vector<Polynomial>& seq, const PresentedModule& M);

/// dim_k H_i(C)_j by dense linear algebra on graded pieces.
long long oracle_homology_dim(const BoundedComplex& C, int i, int j, int cap = kDefaultOracleCap);

}  // namespace creg
