#pragma once

#include <string>
#include <vector>

#include "creg/extint.hpp"
#include "creg/monomial.hpp"

namespace creg {

/// A Hilbert series N(t) / (1-t)^n with N a Laurent polynomial over Z.
///
/// The stored form is always reduced: N(1) != 0 unless N = 0, so `pole()`
/// is the Krull dimension.
class HilbertSeries {
 public:
  HilbertSeries() = default;
  /// N(t) = sum_k numerator[k] t^(offset + k), over (1-t)^denominator.
  HilbertSeries(int offset, std::vector<long long> numerator, int denominator);

  bool is_zero() const { return numerator_.empty(); }
  int offset() const { return offset_; }
  const std::vector<long long>& numerator() const { return numerator_; }
  /// Pole order at t = 1; meaningless for the zero series.
  int pole() const { return pole_; }

  /// dim_k M_j.
  long long coefficient(int j) const;
  /// Krull dimension; -inf for the zero series.
  ExtInt dimension() const;
  /// Least degree with a nonzero coefficient; +inf for zero.
  ExtInt indeg() const;
  /// Largest degree with a nonzero coefficient: -inf for zero, +inf when
  /// the dimension is positive.
  ExtInt end_degree() const;

  /// Numerator over (1-t)^n, unreduced; used for Betti comparisons.
  std::vector<long long> numerator_over(int n, int& offset) const;

  HilbertSeries operator+(const HilbertSeries& o) const;
  HilbertSeries operator-(const HilbertSeries& o) const;
  /// Series of M(d): multiplies by t^(-d).
  HilbertSeries shifted(int d) const;
  bool operator==(const HilbertSeries& o) const = default;

  std::string to_string() const;

 private:
  void normalize();

  int offset_ = 0;
  std::vector<long long> numerator_;
  int pole_ = 0;
};

/// Hilbert series of S/J for a monomial ideal J of S = k[x_1..x_n].
HilbertSeries monomial_quotient_series(int nvars, std::vector<Monomial> gens);

/// Krull dimension of S/J from the largest set of variables containing no
/// generator's support (the combinatorial cross-check).
ExtInt monomial_quotient_dimension(int nvars, const std::vector<Monomial>& gens);

}  // namespace creg
