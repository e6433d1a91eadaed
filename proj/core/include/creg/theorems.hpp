#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "creg/complex.hpp"
#include "creg/extint.hpp"
#include "creg/module.hpp"
#include "creg/regularity.hpp"

namespace creg {

/// One (in)equality a checker evaluates, lhs = rhs or lhs <= rhs.
struct Claim {
  std::string statement;
  ExtInt lhs;
  ExtInt rhs;
  bool equality = true;
  /// Whether the checker stakes correctness on it; unasserted claims are
  /// reported for information (hypothesis failed).
  bool asserted = true;

  bool holds() const { return equality ? lhs == rhs : lhs <= rhs; }
};

enum class Conclusion { Equality, Inequality, Violated, NotAsserted };

struct CheckOutcome {
  std::string check;
  bool hypothesis = true;
  /// Per-index evidence for the hypothesis verdict.
  std::vector<std::string> hypothesis_notes;
  /// claims[0] is the theorem's conclusion; the rest are side conditions
  /// and unconditional bounds.
  std::vector<Claim> claims;
  std::vector<std::pair<std::string, std::string>> invariants;
  std::optional<std::uint64_t> seed;

  /// Conclusion of the main claim.
  Conclusion conclusion() const;
  /// Some asserted claim fails: a contradiction with a theorem.
  bool violated() const;
  std::string to_text() const;
};

/// reg(M ⊗^L N) = reg M + reg_R N = reg M + reg N - reg R, for pd_R N < inf.
CheckOutcome check_ab_formula(const PresentedModule& M, const PresentedModule& N, int max_len = -1);
/// depth H_i(L) >= dim H_{i+1}(L) - 1 for i < sup L  =>  reg L = sup{reg H_i(L) - i}.
CheckOutcome check_thm_cmd1(const BoundedComplex& L);
/// dim H_i(G) <= 1 for i > inf G  =>  reg G = sup{reg H_i(G) - i}.
CheckOutcome check_thm_dim1(const BoundedComplex& G);
/// d - 1 factors of finite pd and dim Tor_i <= 1 for i >= 1  =>
/// max{reg Tor_i - i} = sum reg M_j - (d - 1) reg R.
CheckOutcome check_cor_tensor(const std::vector<PresentedModule>& Ms, int max_len = -1);
/// depth Ext^i >= dim Ext^{i-1} - 1 for i > -sup RHom  =>
/// max{reg Ext^i(M, N) + i} = reg N - indeg M.
CheckOutcome check_cor_hom(const PresentedModule& M, const PresentedModule& N, int max_len = -1);
/// dim Hom(R/I, N) <= 1  =>  reg Hom(R/I, N) <= reg N.
CheckOutcome check_hom_dim1(const std::vector<Polynomial>& I, const PresentedModule& N, int max_len = -1);
/// depth M/xM >= dim(0 :_M x) - 1  =>  reg M = max{reg(0 :_M x), reg M/xM - d + 1}.
CheckOutcome check_filter_regular_formula(const PresentedModule& M, const Polynomial& x);
/// reg K[x; G] = reg G + deg x - 1.
CheckOutcome check_koszul_shift(const BoundedComplex& G, const Polynomial& x);
/// mu^{i,j}(RHom(M, N)) = sum_{u,v} beta_{u,v}(M) mu^{i-u,j+v}(N) entrywise,
/// with Bass numbers over the cover and Betti numbers over M's ring; also
/// exreg RHom(M, N) = reg N - indeg M. Needs pd M < inf.
CheckOutcome check_bass_convolution(const PresentedModule& M, const PresentedModule& N, int max_len = -1);
/// exreg and the local cohomology table agree for one module presented
/// over two different rings.
CheckOutcome check_ring_independence(const PresentedModule& M1, const PresentedModule& M2);

/// The same module over k[vars, extra] / (I + (extra)).
PresentedModule extend_cover(const PresentedModule& M, const std::string& extra);

/// 2-minors of [[0, x_1, ..., x_n, y_1], [x_1, ..., x_{n+1}, y_2]]
/// in k[x_1..x_{n+1}, y_1, y_2], with z = x_{n+1}.
struct NilpotentScroll {
  RingPtr ring;
  std::vector<Polynomial> ideal;
  Polynomial z;
};
NilpotentScroll nilpotent_scroll_family(int n, std::uint32_t p = PrimeField::kDefaultPrime);

/// Random linear forms, verified: a system of parameters for M (dim M of
/// them) and saturated for each module in `others`. Throws LimitError
/// carrying the failing certificate after `max_attempts`.
struct SaturatedSequence {
  std::vector<Polynomial> forms;
  std::uint64_t seed = 0;
  int attempts = 0;
};
SaturatedSequence saturated_sequence(const PresentedModule& M, const std::vector<PresentedModule>& others,
                                     std::uint64_t seed, int max_attempts = 5);
/// Empty when y is saturated for N, otherwise the reason.
std::string saturation_failure(const std::vector<Polynomial>& y, const PresentedModule& N);

/// A homogeneous ideal of a polynomial ring from the seeded corpus.
struct CorpusItem {
  std::string name;
  RingPtr ring;
  std::vector<Polynomial> ideal;
  bool binomial = false;

  PresentedModule quotient() const { return PresentedModule::cyclic(ring, ideal); }
};
/// At most 4 variables, generators of degree at most 4, monomial and
/// binomial ideals alternating.
std::vector<CorpusItem> random_corpus(std::uint64_t seed, int count = 32);
/// A random nonzero linear form with coefficients from the stream.
Polynomial random_linear_form(const RingPtr& R, std::mt19937_64& rng);

}  // namespace creg
