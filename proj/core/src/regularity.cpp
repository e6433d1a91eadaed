#include "creg/regularity.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "creg/error.hpp"

namespace creg {

namespace {

void raise(RouteValue& r, ExtInt v, Witness w) {
  if (v > r.value) {
    r.value = v;
    r.witness = w;
  }
}

long long top_degree(const PresentedModule& H) {
  ExtInt e = H.end_degree();
  if (!e.is_finite()) throw Error("expected a module of finite length");
  return e.value();
}

struct ExtToRing {
  int e;
  PresentedModule module;
};

// Nonzero Ext^e_S(L, S) over the cover, from a free resolution of L.
std::vector<ExtToRing> exts_to_ring(const BoundedComplex& F) {
  std::vector<ExtToRing> out;
  if (F.empty()) return out;
  const RingPtr& S = F.ring();
  BoundedComplex H = hom_complex(F, BoundedComplex::from_module(PresentedModule::free(S, GradedFreeModule({0}))));
  for (int m = H.lo(); m <= H.hi(); ++m) {
    PresentedModule E = homology(H, m);
    if (!E.is_zero()) out.push_back({-m, E});
  }
  return out;
}

BoundedComplex cover_resolution(const PresentedModule& M) {
  return BoundedComplex::from_resolution(minimal_free_resolution(M.over_cover()));
}

BoundedComplex cover_resolution(const BoundedComplex& L) {
  return free_resolution_of_complex(L.over_cover());
}

RouteValue duality_from(const BoundedComplex& F, int n) {
  RouteValue r;
  for (const auto& [e, E] : exts_to_ring(F)) {
    const long long d = E.indeg().value();
    raise(r, ExtInt(-e - d), Witness{n - e, static_cast<int>(-d - n)});
  }
  return r;
}

// Ext^i_S(k, L) as homology of Hom(K(x; S), L) at -i.
std::vector<std::pair<int, PresentedModule>> exts_from_field(const BoundedComplex& L) {
  BoundedComplex Ls = L.over_cover();
  const RingPtr& S = Ls.ring();
  BoundedComplex H = hom_complex(koszul_complex(S, S->variables()), Ls);
  std::vector<std::pair<int, PresentedModule>> out;
  for (int m = H.lo(); m <= H.hi(); ++m) {
    PresentedModule E = homology(H, m);
    if (!E.is_zero()) out.emplace_back(-m, E);
  }
  return out;
}

std::string describe_failures(const std::vector<std::pair<int, ExtInt>>& bad) {
  std::ostringstream os;
  os << "Koszul homology is not of finite length: ";
  for (std::size_t k = 0; k < bad.size(); ++k) {
    if (k) os << "; ";
    os << "H_" << bad[k].first << " has dimension " << bad[k].second.to_string();
  }
  return os.str();
}

// sup{j - i : H_i(seq; L)_j != 0, i >= l}, checking finite length.
RouteValue koszul_sup(const BoundedComplex& L, const std::vector<Polynomial>& seq, int l) {
  BoundedComplex K = koszul_complex(seq, L);
  RouteValue r;
  std::vector<std::pair<int, ExtInt>> bad;
  for (int i = K.hi(); i >= std::max(K.lo(), l); --i) {
    PresentedModule H = homology(K, i);
    if (H.is_zero()) continue;
    if (!H.is_finite_length()) {
      bad.emplace_back(i, H.dimension());
      continue;
    }
    const long long top = top_degree(H);
    raise(r, ExtInt(top - i), Witness{i, static_cast<int>(top)});
  }
  if (!bad.empty())
    throw HypothesisError(describe_failures(bad), bad.front().first, bad.front().second.value());
  return r;
}

}  // namespace

RouteValue reg_via_betti(const PresentedModule& M) {
  RouteValue r;
  BettiTable B = betti_table(M.over_cover());
  for (const auto& [ij, b] : B.entries())
    if (b != 0) raise(r, ExtInt(ij.second - ij.first), Witness{ij.first, ij.second});
  return r;
}

RouteValue reg_via_betti(const BoundedComplex& L) {
  RouteValue r;
  BoundedComplex F = cover_resolution(L);
  for (int i = F.lo(); i <= F.hi(); ++i)
    for (int t : F.term(i).generators().twists) raise(r, ExtInt(t - i), Witness{i, t});
  return r;
}

RouteValue reg_via_ext(const BoundedComplex& L) {
  RouteValue r;
  for (const auto& [i, E] : exts_from_field(L)) {
    const long long top = top_degree(E);
    raise(r, ExtInt(i + top), Witness{i, static_cast<int>(top)});
  }
  return r;
}

RouteValue reg_via_ext(const PresentedModule& M) { return reg_via_ext(BoundedComplex::from_module(M)); }

RouteValue reg_via_koszul(const BoundedComplex& L, const std::vector<Polynomial>& seq) {
  return koszul_sup(L, seq, std::numeric_limits<int>::min());
}

RouteValue reg_via_koszul(const PresentedModule& M, const std::vector<Polynomial>& seq) {
  return reg_via_koszul(BoundedComplex::from_module(M), seq);
}

RouteValue reg_via_koszul(const BoundedComplex& L) { return reg_via_koszul(L, L.ring()->variables()); }
RouteValue reg_via_koszul(const PresentedModule& M) { return reg_via_koszul(M, M.ring()->variables()); }

RouteValue reg_via_duality(const PresentedModule& M) {
  return duality_from(cover_resolution(M), M.ring()->nvars());
}

RouteValue reg_via_duality(const BoundedComplex& L) {
  return duality_from(cover_resolution(L), L.ring()->nvars());
}

long long LocalCohomologyTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void LocalCohomologyTable::set(int i, int j, long long v) {
  if (v == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = v;
}

ExtInt LocalCohomologyTable::regularity() const {
  ExtInt r = ExtInt::neg_inf();
  for (const auto& [ij, v] : entries_) r = max(r, ExtInt(ij.first + ij.second));
  return r;
}

std::string LocalCohomologyTable::to_text() const {
  std::ostringstream os;
  if (entries_.empty()) return "0\n";
  int imin = entries_.begin()->first.first, imax = imin;
  for (const auto& [ij, v] : entries_) {
    imin = std::min(imin, ij.first);
    imax = std::max(imax, ij.first);
  }
  os << "   j:";
  for (int j = lo_; j <= hi_; ++j) os << " " << (j < 0 ? "" : " ") << j;
  os << "\n";
  for (int i = imin; i <= imax; ++i) {
    os << "H^" << i << ":";
    for (int j = lo_; j <= hi_; ++j) {
      long long v = at(i, j);
      std::string s = v == 0 ? "." : std::to_string(v);
      int w = (j < 0 ? 2 : 1) + static_cast<int>(std::to_string(std::abs(j)).size());
      os << " " << std::string(static_cast<std::size_t>(std::max(0, w - static_cast<int>(s.size()))), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

LocalCohomologyTable local_cohomology_table(const BoundedComplex& L, int lo, int hi, int cap) {
  const int n = L.ring()->nvars();
  auto exts = exts_to_ring(cover_resolution(L));
  for (const auto& [e, E] : exts) {
    const long long top = -E.indeg().value() - n;
    if (top > cap) throw LimitError("local cohomology reaches degree " + std::to_string(top) + " beyond the cap");
    if (top > hi) hi = static_cast<int>(top);
  }
  LocalCohomologyTable T(lo, hi);
  for (const auto& [e, E] : exts)
    for (int j = lo; j <= hi; ++j) T.set(n - e, j, E.hilbert_series().coefficient(-j - n));
  return T;
}

LocalCohomologyTable local_cohomology_table(const PresentedModule& M) {
  auto [lo, hi] = default_window(M.ring()->nvars());
  return local_cohomology_table(BoundedComplex::from_module(M), lo, hi);
}

int a_invariant(const RingPtr& R) {
  PresentedModule M = PresentedModule::free(R, GradedFreeModule({0}));
  const int n = R->nvars();
  const long long d = M.dimension().value();
  for (const auto& [e, E] : exts_to_ring(cover_resolution(M)))
    if (e == n - d) return static_cast<int>(-E.indeg().value() - n);
  throw Error("top local cohomology vanished");
}

ExtInt partial_reg_m(const BoundedComplex& L, int m) {
  const int n = L.ring()->nvars();
  ExtInt r = ExtInt::neg_inf();
  if (m > n) return r;
  for (const auto& [e, E] : exts_to_ring(cover_resolution(L)))
    if (n - e >= m) r = max(r, ExtInt(-e - E.indeg().value()));
  return r;
}

ExtInt partial_reg_m(const PresentedModule& M, int m) {
  return partial_reg_m(BoundedComplex::from_module(M), m);
}

ExtInt partial_kreg(const BoundedComplex& L, const std::vector<Polynomial>& seq, int l) {
  return koszul_sup(L, seq, l).value;
}

ExtInt partial_kreg(const PresentedModule& M, const std::vector<Polynomial>& seq, int l) {
  return partial_kreg(BoundedComplex::from_module(M), seq, l);
}

RelativeRegularity relative_reg(const PresentedModule& M, int max_len) {
  FreeResolution F = minimal_free_resolution(M, max_len);
  RelativeRegularity r;
  r.exact = !F.truncated;
  r.length = F.length();
  BettiTable B(F);
  for (const auto& [ij, b] : B.entries()) {
    ExtInt v(ij.second - ij.first);
    if (b != 0 && v > r.value) {
      r.value = v;
      r.witness = Witness{ij.first, ij.second};
    }
  }
  return r;
}

RelativeRegularity relative_reg(const BoundedComplex& L, int max_len) {
  BoundedComplex F = free_resolution_of_complex(L, max_len);
  RelativeRegularity r;
  r.exact = !F.truncated();
  r.length = F.empty() ? 0 : F.hi() - F.lo();
  for (int i = F.lo(); i <= F.hi(); ++i)
    for (int t : F.term(i).generators().twists) {
      ExtInt v(t - i);
      if (v > r.value) {
        r.value = v;
        r.witness = Witness{i, t};
      }
    }
  return r;
}

BassTable bass_table(const BoundedComplex& L) {
  BassTable out;
  for (const auto& [i, E] : exts_from_field(L)) {
    const auto& hs = E.hilbert_series();
    const long long lo = E.indeg().value(), hi = top_degree(E);
    for (long long j = lo; j <= hi; ++j)
      if (long long v = hs.coefficient(static_cast<int>(j)); v != 0) out[{i, static_cast<int>(j)}] = v;
  }
  return out;
}

BassTable bass_table(const PresentedModule& M) { return bass_table(BoundedComplex::from_module(M)); }

ExtInt depth_via_ext(const PresentedModule& M) {
  BassTable B = bass_table(M);
  if (B.empty()) return ExtInt::pos_inf();
  return ExtInt(B.begin()->first.first);
}

ExtInt depth_via_koszul(const PresentedModule& M) {
  PresentedModule C = M.over_cover();
  if (C.is_zero()) return ExtInt::pos_inf();
  const int n = C.ring()->nvars();
  BoundedComplex K = koszul_complex(C.ring()->variables(), C);
  for (int i = K.hi(); i >= 0; --i)
    if (!homology(K, i).is_zero()) return ExtInt(n - i);
  return ExtInt::pos_inf();
}

namespace {

template <class X>
RegularityReport build_report(const X& x, const RingPtr& R, int max_len) {
  RegularityReport rep;
  rep.cover = R->cover()->to_string();
  rep.betti = reg_via_betti(x);
  rep.ext = reg_via_ext(x);
  rep.koszul_sequence = R->variables();
  rep.koszul = reg_via_koszul(x, rep.koszul_sequence);
  rep.duality = reg_via_duality(x);
  rep.relative = relative_reg(x, max_len);
  rep.agree = rep.betti.value == rep.ext.value && rep.ext.value == rep.koszul.value &&
              rep.koszul.value == rep.duality.value;
  return rep;
}

}  // namespace

RegularityReport regularity_report(const PresentedModule& M, int max_len) {
  return build_report(M, M.ring(), max_len);
}

RegularityReport regularity_report(const BoundedComplex& L, int max_len) {
  return build_report(L, L.ring(), max_len);
}

ExtInt reg_complex(const BoundedComplex& L) {
  BoundedComplex Ls = L.over_cover();
  return reg_via_koszul(Ls, Ls.ring()->variables()).value;
}

}  // namespace creg
