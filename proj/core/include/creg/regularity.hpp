#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "creg/complex.hpp"
#include "creg/extint.hpp"
#include "creg/module.hpp"

namespace creg {

/// The (i, j) attaining a supremum; its meaning depends on the route.
struct Witness {
  int i = 0;
  int j = 0;
  bool operator==(const Witness&) const = default;
};

struct RouteValue {
  ExtInt value = ExtInt::neg_inf();
  std::optional<Witness> witness;
};

/// max{j - i : beta_{i,j} != 0} over the polynomial cover; witness (i, j).
RouteValue reg_via_betti(const PresentedModule& M);
RouteValue reg_via_betti(const BoundedComplex& L);

/// exreg = sup{i + j : Ext^i_S(k, M)_j != 0} over the cover; witness (i, j).
RouteValue reg_via_ext(const PresentedModule& M);
RouteValue reg_via_ext(const BoundedComplex& L);

/// kreg^seq = sup{j - i : H_i(seq; M)_j != 0}; witness (i, j). Throws
/// HypothesisError unless every H_i has finite length. Without a sequence,
/// the variables of the ring are used.
RouteValue reg_via_koszul(const PresentedModule& M, const std::vector<Polynomial>& seq);
RouteValue reg_via_koszul(const BoundedComplex& L, const std::vector<Polynomial>& seq);
RouteValue reg_via_koszul(const PresentedModule& M);
RouteValue reg_via_koszul(const BoundedComplex& L);

/// max_e { -e - indeg Ext^e_S(M, S) } by graded local duality; witness
/// (i, j) with H^i_m(M)_j != 0 at i = n - e.
RouteValue reg_via_duality(const PresentedModule& M);
RouteValue reg_via_duality(const BoundedComplex& L);

/// dim_k H^i_m(M)_j on a window of internal degrees.
class LocalCohomologyTable {
 public:
  LocalCohomologyTable(int lo, int hi) : lo_(lo), hi_(hi) {}

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  long long at(int i, int j) const;
  void set(int i, int j, long long v);
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  /// max{i + j} over nonzero entries of the window.
  ExtInt regularity() const;
  std::string to_text() const;

 private:
  int lo_, hi_;
  std::map<std::pair<int, int>, long long> entries_;
};

/// Window of internal degrees used by default for n variables.
inline std::pair<int, int> default_window(int nvars) { return {-2 * nvars - 4, 2 * nvars + 4}; }

/// The table on [lo, hi]. The upper end is raised to cover the top nonzero
/// degree (throws LimitError beyond `cap`); below `lo` entries are cut.
LocalCohomologyTable local_cohomology_table(const BoundedComplex& L, int lo, int hi, int cap = 64);
LocalCohomologyTable local_cohomology_table(const PresentedModule& M);

/// max{j : H^{dim R}_m(R)_j != 0}.
int a_invariant(const RingPtr& R);

/// sup{i + j : H^i_m(L)_j != 0, i >= m}.
ExtInt partial_reg_m(const BoundedComplex& L, int m);
ExtInt partial_reg_m(const PresentedModule& M, int m);
/// sup{j - i : H_i(seq; L)_j != 0, i >= l}; finite length is required only
/// of the homology that enters the supremum.
ExtInt partial_kreg(const BoundedComplex& L, const std::vector<Polynomial>& seq, int l);
ExtInt partial_kreg(const PresentedModule& M, const std::vector<Polynomial>& seq, int l);

/// reg over the complex's own ring; a lower bound unless `exact`.
struct RelativeRegularity {
  ExtInt value = ExtInt::neg_inf();
  bool exact = true;
  /// Homological length reached.
  int length = 0;
  std::optional<Witness> witness;
};
RelativeRegularity relative_reg(const PresentedModule& M, int max_len = -1);
RelativeRegularity relative_reg(const BoundedComplex& L, int max_len = -1);

/// Bass numbers mu^{i,j} = dim Ext^i_S(k, L)_j over the cover. All of them:
/// each Ext module has finite length.
using BassTable = std::map<std::pair<int, int>, long long>;
BassTable bass_table(const BoundedComplex& L);
BassTable bass_table(const PresentedModule& M);

/// The three depth formulas over the cover: n - pd, min{i : Ext^i(k,M) != 0},
/// n - max{i : H_i(x; M) != 0}.
ExtInt depth_via_ext(const PresentedModule& M);
ExtInt depth_via_koszul(const PresentedModule& M);

struct RegularityReport {
  std::string cover;
  RouteValue betti, ext, koszul, duality;
  std::vector<Polynomial> koszul_sequence;
  std::optional<RelativeRegularity> relative;
  bool agree = false;
};
RegularityReport regularity_report(const PresentedModule& M, int max_len = -1);
RegularityReport regularity_report(const BoundedComplex& L, int max_len = -1);

/// reg of a complex: kreg of K(x_1..x_n; L) over the cover.
ExtInt reg_complex(const BoundedComplex& L);

}  // namespace creg
