#pragma once

#include <map>
#include <string>
#include <vector>

#include "creg/extint.hpp"
#include "creg/graded_map.hpp"
#include "creg/module.hpp"

namespace creg {

/// F_len -> ... -> F_1 -> F_0, with maps[i] = d_{i+1}: F_{i+1} -> F_i.
struct FreeResolution {
  RingPtr ring;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMap> maps;
  bool minimal = false;
  /// Cut at the length bound while the next syzygy module was nonzero.
  bool truncated = false;

  int length() const { return static_cast<int>(modules.size()) - 1; }
  const GradedMap& differential(int i) const { return maps[static_cast<std::size_t>(i - 1)]; }
};

/// Graded Betti numbers beta_{i,j}, i homological, j internal degree.
class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeResolution& F);

  long long at(int i, int j) const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }
  bool truncated() const { return truncated_; }
  /// Largest homological index computed.
  int bound() const { return bound_; }

  /// max { j - i : beta_{i,j} != 0 }, -inf when empty.
  ExtInt regularity() const;
  /// Largest j with beta_{i,j} != 0 for fixed i (t_i), -inf if none.
  ExtInt top_degree(int i) const;
  /// +inf when truncated.
  ExtInt projective_dimension() const;
  /// Alternating sum sum_{i,j} (-1)^i beta_{i,j} t^j as (offset, coefficients).
  std::vector<long long> euler_polynomial(int& offset) const;

  /// Macaulay-style rendering: rows j - i, columns i.
  std::string to_text() const;

 private:
  std::map<std::pair<int, int>, long long> entries_;
  bool truncated_ = false;
  int bound_ = -1;
};

/// Default length bound over a quotient ring with n variables.
inline int default_max_length(int nvars) { return 2 * nvars + 4; }

/// Minimal graded free resolution. Over a polynomial ring this is the
/// pruned Schreyer frame and always complete; over a quotient ring it is
/// built by iterated minimal syzygies up to `max_len` (negative: the
/// default bound).
FreeResolution minimal_free_resolution(const PresentedModule& M, int max_len = -1);

/// The Schreyer frame of M over a polynomial ring, before pruning.
FreeResolution schreyer_frame(const PresentedModule& M);
/// Removes unit entries from every differential by Gaussian elimination.
FreeResolution prune(FreeResolution F);

BettiTable betti_table(const PresentedModule& M, int max_len = -1);

/// Projective dimension over the module's own ring (+inf when truncated).
ExtInt projective_dimension(const PresentedModule& M, int max_len = -1);
/// depth = n - pd over the polynomial cover; +inf for the zero module.
ExtInt depth(const PresentedModule& M);

/// d_i ∘ d_{i+1} = 0 for every i, checked modulo the defining ideal.
bool is_complex(const FreeResolution& F);

}  // namespace creg
