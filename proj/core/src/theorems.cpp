#include "creg/theorems.hpp"

#include <map>
#include <sstream>

#include "creg/error.hpp"

namespace creg {

namespace {

std::string str(ExtInt v) { return v.to_string(); }

ExtInt sup_over(ExtInt a, ExtInt b) { return max(a, b); }

// Absolute regularity of a module by local duality.
ExtInt reg_dual(const PresentedModule& M) { return reg_via_duality(M).value; }
ExtInt reg_betti(const PresentedModule& M) { return reg_via_betti(M).value; }

ExtInt ring_reg(const RingPtr& R) {
  return reg_betti(PresentedModule::free(R, GradedFreeModule({0})));
}

struct HomologyData {
  std::map<int, PresentedModule> H;
  ExtInt inf = ExtInt::pos_inf(), sup = ExtInt::neg_inf();
};

HomologyData homology_data(const BoundedComplex& L) {
  HomologyData d;
  for (int i = L.lo(); i <= L.hi(); ++i) {
    d.H.emplace(i, homology(L, i));
    if (!d.H.at(i).is_zero()) {
      d.inf = min(d.inf, ExtInt(i));
      d.sup = max(d.sup, ExtInt(i));
    }
  }
  return d;
}

const PresentedModule& at(const HomologyData& d, int i, const PresentedModule& zero) {
  auto it = d.H.find(i);
  return it == d.H.end() ? zero : it->second;
}

// Claims shared by the homology theorems: the conclusion (asserted under
// the hypothesis), the homology bound, the termwise bound and the
// small-dimension bound for H_inf.
void homology_claims(CheckOutcome& out, const BoundedComplex& L, const HomologyData& d) {
  const ExtInt regL = reg_complex(L);
  ExtInt rhs = ExtInt::neg_inf(), terms = ExtInt::neg_inf();
  for (const auto& [i, H] : d.H) {
    ExtInt r = reg_dual(H);
    rhs = sup_over(rhs, r - ExtInt(i));
    out.invariants.emplace_back("reg H_" + std::to_string(i), str(r));
    out.invariants.emplace_back("depth H_" + std::to_string(i), str(depth(H)));
    out.invariants.emplace_back("dim H_" + std::to_string(i), str(H.dimension()));
  }
  for (int i = L.lo(); i <= L.hi(); ++i) terms = sup_over(terms, reg_betti(L.term(i)) - ExtInt(i));
  out.invariants.emplace_back("reg L", str(regL));
  out.claims.push_back({"reg L = sup{reg H_i(L) - i}", regL, rhs, true, out.hypothesis});
  out.claims.push_back({"reg L <= sup{reg H_i(L) - i}", regL, rhs, false, true});
  out.claims.push_back({"reg L <= sup{reg L_i - i}", regL, terms, false, true});
  if (d.inf.is_finite()) {
    const int s = static_cast<int>(d.inf.value());
    bool small = true;
    for (const auto& [i, H] : d.H)
      if (i > s && H.dimension() > ExtInt(i - s)) small = false;
    out.claims.push_back({"reg H_inf(L) - inf L <= reg L", reg_dual(d.H.at(s)) - ExtInt(s), regL, false, small});
  }
}

CheckOutcome unresolved(const std::string& check, const std::string& why) {
  CheckOutcome out;
  out.check = check;
  out.hypothesis = false;
  out.hypothesis_notes.push_back(why);
  return out;
}

}  // namespace

Conclusion CheckOutcome::conclusion() const {
  if (claims.empty()) return Conclusion::NotAsserted;
  const Claim& c = claims.front();
  if (c.asserted && !c.holds()) return Conclusion::Violated;
  if (c.lhs == c.rhs) return Conclusion::Equality;
  return c.lhs < c.rhs ? Conclusion::Inequality : Conclusion::Violated;
}

bool CheckOutcome::violated() const {
  for (const auto& c : claims)
    if (c.asserted && !c.holds()) return true;
  return false;
}

std::string CheckOutcome::to_text() const {
  std::ostringstream os;
  os << check << ": hypothesis " << (hypothesis ? "holds" : "fails") << "\n";
  for (const auto& n : hypothesis_notes) os << "  " << n << "\n";
  for (const auto& c : claims) {
    os << "  " << c.statement << ": " << str(c.lhs) << (c.equality ? " = " : " <= ") << str(c.rhs) << "  ["
       << (c.holds() ? "holds" : (c.asserted ? "VIOLATED" : "fails")) << (c.asserted ? "" : ", not asserted")
       << "]\n";
  }
  for (const auto& [k, v] : invariants) os << "  " << k << " = " << v << "\n";
  if (seed) os << "  seed = " << *seed << "\n";
  return os.str();
}

CheckOutcome check_ab_formula(const PresentedModule& M, const PresentedModule& N, int max_len) {
  FreeResolution FN = minimal_free_resolution(N, max_len);
  if (FN.truncated)
    return unresolved("ab_formula", "pd_R N not certified finite: resolution truncated at length " +
                                        std::to_string(FN.length()));
  CheckOutcome out;
  out.check = "ab_formula";
  out.hypothesis_notes.push_back("pd_R N = " + std::to_string(FN.length()));
  BoundedComplex L = tensor_complexes(BoundedComplex::from_resolution(FN), BoundedComplex::from_module(M));
  const ExtInt regL = reg_complex(L), regM = reg_dual(M), regN = reg_dual(N), regR = ring_reg(M.ring());
  const ExtInt regRN = BettiTable(FN).regularity();
  out.claims.push_back({"reg(M ⊗^L N) = reg M + reg_R N", regL, regM + regRN});
  out.claims.push_back({"reg(M ⊗^L N) = reg M + reg N - reg R", regL, regM + regN - regR});
  out.claims.push_back({"reg N - reg_R N = reg R", regN - regRN, regR});
  out.invariants = {{"reg M", str(regM)}, {"reg N", str(regN)}, {"reg R", str(regR)}, {"reg_R N", str(regRN)}};
  return out;
}

CheckOutcome check_thm_cmd1(const BoundedComplex& L) {
  CheckOutcome out;
  out.check = "thm_cmd1";
  HomologyData d = homology_data(L);
  const PresentedModule zero = PresentedModule::zero(L.ring());
  if (d.sup.is_finite())
    for (int i = L.lo(); i < d.sup.value(); ++i) {
      const ExtInt dep = depth(at(d, i, zero)), dm = at(d, i + 1, zero).dimension();
      const bool ok = dep >= dm - ExtInt(1);
      out.hypothesis = out.hypothesis && ok;
      out.hypothesis_notes.push_back("i = " + std::to_string(i) + ": depth H_" + std::to_string(i) + " = " +
                                     str(dep) + ", dim H_" + std::to_string(i + 1) + " = " + str(dm) +
                                     (ok ? "" : "  (fails)"));
    }
  homology_claims(out, L, d);
  return out;
}

CheckOutcome check_thm_dim1(const BoundedComplex& G) {
  CheckOutcome out;
  out.check = "thm_dim1";
  HomologyData d = homology_data(G);
  for (const auto& [i, H] : d.H) {
    if (ExtInt(i) <= d.inf) continue;
    const bool ok = H.dimension() <= ExtInt(1);
    out.hypothesis = out.hypothesis && ok;
    out.hypothesis_notes.push_back("dim H_" + std::to_string(i) + " = " + str(H.dimension()) +
                                   (ok ? "" : "  (fails)"));
  }
  homology_claims(out, G, d);
  return out;
}

CheckOutcome check_cor_tensor(const std::vector<PresentedModule>& Ms, int max_len) {
  if (Ms.size() < 2) throw DomainError("cor_tensor needs at least two modules");
  const std::size_t d = Ms.size();
  std::vector<FreeResolution> F;
  std::size_t infinite = d, count_infinite = 0;
  for (std::size_t j = 0; j < d; ++j) {
    F.push_back(minimal_free_resolution(Ms[j], max_len));
    if (F.back().truncated) {
      infinite = j;
      ++count_infinite;
    }
  }
  if (count_infinite > 1)
    return unresolved("cor_tensor", std::to_string(count_infinite) + " factors without certified finite pd");
  CheckOutcome out;
  out.check = "cor_tensor";
  const std::size_t base = infinite == d ? 0 : infinite;
  BoundedComplex G = BoundedComplex::from_module(Ms[base]);
  for (std::size_t j = 0; j < d; ++j)
    if (j != base) G = tensor_complexes(BoundedComplex::from_resolution(F[j]), G);
  HomologyData h = homology_data(G);
  ExtInt lhs = ExtInt::neg_inf();
  for (const auto& [i, T] : h.H) {
    const ExtInt r = reg_dual(T);
    lhs = sup_over(lhs, r - ExtInt(i));
    out.invariants.emplace_back("reg Tor_" + std::to_string(i), str(r));
    if (i >= 1) {
      const bool ok = T.dimension() <= ExtInt(1);
      out.hypothesis = out.hypothesis && ok;
      out.hypothesis_notes.push_back("dim Tor_" + std::to_string(i) + " = " + str(T.dimension()) +
                                     (ok ? "" : "  (fails)"));
    }
  }
  ExtInt rhs = ExtInt(0);
  for (std::size_t j = 0; j < d; ++j) {
    const ExtInt r = reg_betti(Ms[j]);
    rhs = rhs + r;
    out.invariants.emplace_back("reg M_" + std::to_string(j + 1), str(r));
  }
  const ExtInt regR = ring_reg(Ms[0].ring());
  if (regR.is_finite()) rhs = rhs - ExtInt(static_cast<long long>(d - 1) * regR.value());
  const ExtInt regG = reg_complex(G);
  out.invariants.emplace_back("reg R", str(regR));
  out.claims.push_back({"max{reg Tor_i - i} = sum reg M_j - (d-1) reg R", lhs, rhs, true, out.hypothesis});
  out.claims.push_back({"reg(M_1 ⊗^L ... ⊗^L M_d) = sum reg M_j - (d-1) reg R", regG, rhs});
  out.claims.push_back({"reg(M_1 ⊗^L ... ⊗^L M_d) <= max{reg Tor_i - i}", regG, lhs, false, true});
  return out;
}

CheckOutcome check_cor_hom(const PresentedModule& M, const PresentedModule& N, int max_len) {
  FreeResolution FM = minimal_free_resolution(M, max_len);
  if (FM.truncated)
    return unresolved("cor_hom", "RHom(M, N) not certified bounded: resolution of M truncated at length " +
                                     std::to_string(FM.length()));
  CheckOutcome out;
  out.check = "cor_hom";
  BoundedComplex L = hom_complex(BoundedComplex::from_resolution(FM), BoundedComplex::from_module(N));
  HomologyData h = homology_data(L);
  const PresentedModule zero = PresentedModule::zero(M.ring());
  ExtInt lhs = ExtInt::neg_inf();
  for (const auto& [m, E] : h.H) {
    const ExtInt r = reg_dual(E);
    lhs = sup_over(lhs, r + ExtInt(-m));
    out.invariants.emplace_back("reg Ext^" + std::to_string(-m), str(r));
  }
  if (h.sup.is_finite()) {
    const int first = static_cast<int>(-h.sup.value());
    for (int i = first + 1; i <= FM.length(); ++i) {
      const ExtInt dep = depth(at(h, -i, zero)), dm = at(h, -(i - 1), zero).dimension();
      const bool ok = dep >= dm - ExtInt(1);
      out.hypothesis = out.hypothesis && ok;
      out.hypothesis_notes.push_back("i = " + std::to_string(i) + ": depth Ext^" + std::to_string(i) + " = " +
                                     str(dep) + ", dim Ext^" + std::to_string(i - 1) + " = " + str(dm) +
                                     (ok ? "" : "  (fails)"));
    }
  }
  const ExtInt rhs = reg_betti(N) - M.indeg();
  const ExtInt regL = reg_complex(L);
  out.invariants.emplace_back("reg N", str(reg_betti(N)));
  out.invariants.emplace_back("indeg M", str(M.indeg()));
  out.claims.push_back({"max{reg Ext^i(M,N) + i} = reg N - indeg M", lhs, rhs, true, out.hypothesis});
  out.claims.push_back({"reg RHom(M,N) = reg N - indeg M", regL, rhs});
  out.claims.push_back({"reg RHom(M,N) <= max{reg Ext^i(M,N) + i}", regL, lhs, false, true});
  return out;
}

CheckOutcome check_hom_dim1(const std::vector<Polynomial>& I, const PresentedModule& N, int max_len) {
  PresentedModule RI = PresentedModule::cyclic(N.ring(), I);
  FreeResolution F = minimal_free_resolution(RI, max_len);
  if (F.truncated) return unresolved("hom_dim1", "pd R/I not certified finite");
  CheckOutcome out;
  out.check = "hom_dim1";
  PresentedModule Hom = ext(RI, N, 0, max_len);
  const ExtInt dm = Hom.dimension();
  out.hypothesis = dm <= ExtInt(1);
  out.hypothesis_notes.push_back("dim Hom(R/I, N) = " + str(dm));
  out.claims.push_back({"reg Hom(R/I, N) <= reg N", reg_dual(Hom), reg_betti(N), false, out.hypothesis});
  return out;
}

CheckOutcome check_filter_regular_formula(const PresentedModule& M, const Polynomial& x) {
  if (x.is_zero() || !x.is_homogeneous()) throw DomainError("filter-regular check needs a nonzero form");
  CheckOutcome out;
  out.check = "filter_regular";
  const int d = x.degree();
  PresentedModule colon = colon_by_element(M, x).module;
  PresentedModule quot = quotient_by_element(M, x);
  const ExtInt dep = depth(quot), dm = colon.dimension();
  out.hypothesis = dep >= dm - ExtInt(1);
  out.hypothesis_notes.push_back("depth M/xM = " + str(dep) + ", dim(0 :_M x) = " + str(dm));
  const ExtInt lhs = reg_betti(M), rc = reg_dual(colon), rq = reg_dual(quot);
  const ExtInt rhs = max(rc, rq - ExtInt(d - 1));
  out.invariants = {{"reg M", str(lhs)}, {"reg(0 :_M x)", str(rc)}, {"reg M/xM", str(rq)}, {"deg x", std::to_string(d)}};
  out.claims.push_back({"reg M = max{reg(0 :_M x), reg M/xM - d + 1}", lhs, rhs, true, out.hypothesis});
  out.claims.push_back({"reg M <= max{reg(0 :_M x), reg M/xM - d + 1}", lhs, rhs, false, true});
  return out;
}

CheckOutcome check_koszul_shift(const BoundedComplex& G, const Polynomial& x) {
  CheckOutcome out;
  out.check = "koszul_shift";
  const ExtInt lhs = reg_complex(koszul_complex({x}, G));
  const ExtInt rg = reg_via_betti(G).value;
  out.claims.push_back({"reg K[x; G] = reg G + deg x - 1", lhs, rg + ExtInt(x.degree() - 1)});
  out.invariants = {{"reg G", str(rg)}, {"deg x", std::to_string(x.degree())}};
  return out;
}

CheckOutcome check_bass_convolution(const PresentedModule& M, const PresentedModule& N, int max_len) {
  FreeResolution FM = minimal_free_resolution(M, max_len);
  if (FM.truncated) return unresolved("bass_convolution", "pd M not certified finite");
  CheckOutcome out;
  out.check = "bass_convolution";
  BoundedComplex L = hom_complex(BoundedComplex::from_resolution(FM), BoundedComplex::from_module(N));
  BassTable left = bass_table(L), muN = bass_table(N);
  BettiTable beta(FM);
  BassTable right;
  for (const auto& [uv, b] : beta.entries())
    for (const auto& [ij, m] : muN) right[{ij.first + uv.first, ij.second - uv.second}] += b * m;
  long long mismatches = 0;
  for (const auto& [k, v] : left)
    if (right.count(k) == 0 || right.at(k) != v) ++mismatches;
  for (const auto& [k, v] : right)
    if (v != 0 && left.count(k) == 0) ++mismatches;
  out.invariants.emplace_back("entries", std::to_string(left.size()));
  out.claims.push_back({"mismatched Bass entries", ExtInt(mismatches), ExtInt(0)});
  ExtInt exreg = ExtInt::neg_inf();
  for (const auto& [ij, v] : left) exreg = max(exreg, ExtInt(ij.first + ij.second));
  out.claims.push_back({"exreg RHom(M,N) = reg N - indeg M", exreg, reg_betti(N) - M.indeg()});
  return out;
}

CheckOutcome check_ring_independence(const PresentedModule& M1, const PresentedModule& M2) {
  CheckOutcome out;
  out.check = "ring_independence";
  const ExtInt e1 = reg_via_ext(M1).value, e2 = reg_via_ext(M2).value;
  auto w1 = default_window(M1.ring()->nvars()), w2 = default_window(M2.ring()->nvars());
  const int lo = std::min(w1.first, w2.first), hi = std::max(w1.second, w2.second);
  auto T1 = local_cohomology_table(BoundedComplex::from_module(M1), lo, hi);
  auto T2 = local_cohomology_table(BoundedComplex::from_module(M2), lo, hi);
  long long diff = 0;
  for (int i = -1; i <= std::max(M1.ring()->nvars(), M2.ring()->nvars()) + 1; ++i)
    for (int j = lo; j <= std::max(T1.hi(), T2.hi()); ++j)
      if (T1.at(i, j) != T2.at(i, j)) ++diff;
  out.claims.push_back({"exreg over the first ring = exreg over the second", e1, e2});
  out.claims.push_back({"differing local cohomology entries", ExtInt(diff), ExtInt(0)});
  out.invariants = {{"first ring", M1.ring()->to_string()}, {"second ring", M2.ring()->to_string()}};
  return out;
}

PresentedModule extend_cover(const PresentedModule& M, const std::string& extra) {
  const RingPtr& R = M.ring();
  std::vector<std::string> names = R->names();
  names.push_back(extra);
  RingPtr S = GradedRing::polynomial(R->field(), names);
  // Monomials carry no variable count, so polynomials of R embed as they are.
  std::vector<Polynomial> gens = R->ideal();
  gens.push_back(S->variable(static_cast<int>(names.size()) - 1));
  RingPtr T = GradedRing::quotient(S, gens);
  return PresentedModule(T, M.presentation());
}

NilpotentScroll nilpotent_scroll_family(int n, std::uint32_t p) {
  if (n < 2) throw DomainError("nilpotent scroll family needs n >= 2");
  if (n + 3 > Monomial::kMaxVars) throw DomainError("nilpotent scroll family: too many variables");
  std::vector<std::string> names;
  for (int i = 1; i <= n + 1; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y1");
  names.push_back("y2");
  RingPtr S = GradedRing::polynomial(PrimeField(p), names);
  auto x = [&](int i) { return S->variable(i - 1); };
  std::vector<Polynomial> top{S->zero()}, bottom;
  for (int i = 1; i <= n; ++i) top.push_back(x(i));
  top.push_back(S->variable(n + 1));
  for (int i = 1; i <= n + 1; ++i) bottom.push_back(x(i));
  bottom.push_back(S->variable(n + 2));
  std::vector<Polynomial> minors;
  for (std::size_t a = 0; a < top.size(); ++a)
    for (std::size_t b = a + 1; b < top.size(); ++b) {
      Polynomial m = top[a] * bottom[b] - top[b] * bottom[a];
      if (m.is_zero()) continue;
      if (S->field().to_signed(m.leading().coef) < 0) m = -m;
      minors.push_back(m);
    }
  return {S, minors, x(n + 1)};
}

Polynomial random_linear_form(const RingPtr& R, std::mt19937_64& rng) {
  const PrimeField& F = R->field();
  while (true) {
    Polynomial f = R->zero();
    for (int v = 0; v < R->nvars(); ++v)
      f = f + R->variable(v).scaled(static_cast<Scalar>(rng() % F.characteristic()));
    if (!f.is_zero()) return f;
  }
}

std::string saturation_failure(const std::vector<Polynomial>& y, const PresentedModule& N) {
  if (N.is_zero()) return "";
  const ExtInt dep = depth(N);
  const long long s = min(ExtInt(static_cast<long long>(y.size())), dep).value();
  PresentedModule cur = N;
  for (long long k = 0; k < s; ++k) {
    const Polynomial& f = y[static_cast<std::size_t>(k)];
    if (!colon_by_element(cur, f).module.is_zero())
      return "y_" + std::to_string(k + 1) + " is a zero divisor modulo the earlier forms";
    cur = quotient_by_element(cur, f);
  }
  if (y.empty()) return "";
  BoundedComplex K = koszul_complex(y, N);
  for (int i = 1; i <= K.hi(); ++i) {
    PresentedModule H = homology(K, i);
    if (!H.is_finite_length())
      return "H_" + std::to_string(i) + "(y; N) has dimension " + H.dimension().to_string();
  }
  return "";
}

SaturatedSequence saturated_sequence(const PresentedModule& M, const std::vector<PresentedModule>& others,
                                     std::uint64_t seed, int max_attempts) {
  SaturatedSequence out;
  out.seed = seed;
  const ExtInt dm = M.dimension();
  const long long r = dm.is_finite() ? dm.value() : 0;
  std::mt19937_64 rng(seed);
  std::string failure;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    out.attempts = attempt;
    std::vector<Polynomial> y;
    for (long long k = 0; k < r; ++k) y.push_back(random_linear_form(M.ring(), rng));
    failure.clear();
    if (r > 0) {
      PresentedModule q = M;
      for (const auto& f : y) q = quotient_by_element(q, f);
      if (!q.is_finite_length()) failure = "not a system of parameters: dim M/(y)M = " + q.dimension().to_string();
    }
    for (std::size_t t = 0; failure.empty() && t < others.size(); ++t) {
      std::string why = saturation_failure(y, others[t]);
      if (!why.empty()) failure = "module " + std::to_string(t + 1) + ": " + why;
    }
    if (failure.empty()) {
      out.forms = std::move(y);
      return out;
    }
  }
  throw LimitError("no saturated sequence after " + std::to_string(max_attempts) + " attempts (seed " +
                   std::to_string(seed) + "): " + failure);
}

std::vector<CorpusItem> random_corpus(std::uint64_t seed, int count) {
  static const std::vector<std::string> kNames{"a", "b", "c", "d"};
  std::mt19937_64 rng(seed);
  std::map<int, RingPtr> rings;
  std::vector<CorpusItem> out;
  for (int idx = 0; idx < count; ++idx) {
    const int n = 2 + static_cast<int>(rng() % 3);
    if (!rings.count(n))
      rings[n] = GradedRing::polynomial(PrimeField(), std::vector<std::string>(kNames.begin(), kNames.begin() + n));
    RingPtr S = rings[n];
    const PrimeField& F = S->field();
    auto monomial = [&](int deg) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      for (int t = 0; t < deg; ++t) ++e[rng() % static_cast<std::size_t>(n)];
      return Monomial(e);
    };
    CorpusItem item;
    item.name = "corpus-" + std::to_string(idx);
    item.ring = S;
    item.binomial = idx % 2 == 1;
    const int ngens = 1 + static_cast<int>(rng() % 4);
    for (int g = 0; g < ngens; ++g) {
      const int deg = 2 + static_cast<int>(rng() % 3);
      Polynomial f = Polynomial::term(F, monomial(deg));
      if (item.binomial) {
        Monomial m2 = monomial(deg);
        const Scalar c = static_cast<Scalar>(1 + rng() % 3);
        if (!(m2 == f.leading().mon)) f = f - Polynomial::term(F, m2, c);
      }
      item.ideal.push_back(f);
    }
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace creg
