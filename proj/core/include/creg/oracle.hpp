#pragma once

#include <unordered_map>
#include <vector>

#include "creg/linalg.hpp"
#include "creg/module.hpp"

namespace creg {

/// Largest internal degree the dense oracle accepts by default.
inline constexpr int kDefaultOracleCap = 8;

/// All monomials of degree d in n variables, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

/// One graded piece M_j of a presented module modelled by dense linear
/// algebra on monomial bases. Uses the defining ideal's original generators
/// and the presentation's columns only; no Gröbner basis is involved, which
/// is what makes it usable as an independent check.
class PieceModel {
 public:
  /// Throws LimitError when |degree| exceeds the cap.
  PieceModel(const PresentedModule& M, int degree, int cap = kDefaultOracleCap);

  int degree() const { return degree_; }
  int dim() const { return static_cast<int>(free_.size()); }
  /// Coordinates of a homogeneous element of F0 of this degree in the
  /// quotient basis (the non-pivot monomials).
  DenseVector coordinates(const Vec& v) const;
  /// Quotient basis as monomial vectors of F0.
  std::vector<Vec> basis() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Monomial, int>& k) const {
      return k.first.hash() * 31u + static_cast<std::size_t>(k.second);
    }
  };

  PrimeField field_;
  int degree_;
  std::vector<std::pair<Monomial, int>> monomials_;
  std::unordered_map<std::pair<Monomial, int>, int, KeyHash> index_;
  RowEchelon relations_;
  std::vector<int> free_;
};

/// dim_k M_j.
long long graded_piece_dim(const PresentedModule& M, int j, int cap = kDefaultOracleCap);
/// Whether a homogeneous element of F0 is zero in M.
bool oracle_is_zero(const PresentedModule& M, const Vec& v, int cap = kDefaultOracleCap);
/// Rank of the degree-j part of the map given on generators by `matrix`.
int oracle_map_rank(const PieceModel& source, const PieceModel& target, const GradedMap& matrix);

/// dim H_i(x_1..x_n; M)_j = dim Tor_i^S(M, k)_j over the polynomial cover,
/// from the Koszul complex on the variables assembled piece by piece.
long long oracle_koszul_betti(const PresentedModule& M, int i, int j, int cap = kDefaultOracleCap);

}  // namespace creg
