#include "creg/complex.hpp"

#include <algorithm>
#include <string>

#include "creg/error.hpp"

namespace creg {

namespace {

const ModuleOrder kPot;

Vec shift_components(Vec v, int offset) {
  for (auto& t : v.mutable_terms()) t.comp += offset;
  return v;
}

// Assembles a block matrix between direct sums of free modules.
class BlockBuilder {
 public:
  BlockBuilder(PrimeField field, const std::vector<GradedFreeModule>& src,
               const std::vector<GradedFreeModule>& tgt)
      : field_(field) {
    for (const auto& s : src) {
      src_off_.push_back(source_.rank());
      source_ = direct_sum(source_, s);
    }
    for (const auto& t : tgt) {
      tgt_off_.push_back(target_.rank());
      target_ = direct_sum(target_, t);
    }
    cols_.resize(static_cast<std::size_t>(source_.rank()));
  }

  void add(std::size_t t, std::size_t s, const GradedMap& block) {
    for (int c = 0; c < block.cols(); ++c) {
      auto& col = cols_[static_cast<std::size_t>(src_off_[s] + c)];
      col = creg::add(col, shift_components(block.column(c), tgt_off_[t]), kPot, field_);
    }
  }

  GradedMap build() const { return GradedMap(field_, source_, target_, cols_); }

 private:
  PrimeField field_;
  GradedFreeModule source_, target_;
  std::vector<int> src_off_, tgt_off_;
  std::vector<Vec> cols_;
};

GradedFreeModule negated_twists(const GradedFreeModule& f) {
  GradedFreeModule out = f;
  for (auto& t : out.twists) t = -t;
  return out;
}

PresentedModule sum_of(const RingPtr& R, const std::vector<PresentedModule>& parts) {
  PresentedModule out = PresentedModule::zero(R);
  GradedMap p = out.presentation();
  for (const auto& m : parts) p = block_diagonal(p, m.presentation());
  return PresentedModule(R, p);
}

std::vector<GradedFreeModule> gens_of(const std::vector<PresentedModule>& parts) {
  std::vector<GradedFreeModule> out;
  for (const auto& m : parts) out.push_back(m.generators());
  return out;
}

void require_free(const BoundedComplex& F, const char* what) {
  if (!F.all_free()) throw DomainError(std::string(what) + " needs an all-free first factor");
}

BoundedComplex resolution_complex(const PresentedModule& M, int max_len, int needed) {
  FreeResolution F = minimal_free_resolution(M, max_len);
  if (F.truncated && needed >= F.length())
    throw LimitError("resolution truncated at length " + std::to_string(F.length()) +
                     " before homological degree " + std::to_string(needed + 1));
  return BoundedComplex::from_resolution(F);
}

}  // namespace

BoundedComplex::BoundedComplex(RingPtr ring, int lo, std::vector<PresentedModule> terms,
                               std::vector<GradedMap> diffs)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)),
      zero_(PresentedModule::zero(ring_)) {
  const std::size_t want = terms_.empty() ? 0 : terms_.size() - 1;
  if (diffs_.size() != want) throw DomainError("complex needs one differential between consecutive terms");
  for (std::size_t k = 0; k < diffs_.size(); ++k) {
    if (!(diffs_[k].source() == terms_[k + 1].generators()) ||
        !(diffs_[k].target() == terms_[k].generators()))
      throw DomainError("differential shape does not match the terms at degree " +
                        std::to_string(lo_ + static_cast<int>(k) + 1));
    if (!diffs_[k].is_homogeneous()) throw DomainError("inhomogeneous differential");
  }
}

BoundedComplex BoundedComplex::from_module(const PresentedModule& M, int at) {
  return BoundedComplex(M.ring(), at, {M}, {});
}

BoundedComplex BoundedComplex::from_resolution(const FreeResolution& F) {
  std::vector<PresentedModule> terms;
  for (const auto& m : F.modules) terms.push_back(PresentedModule::free(F.ring, m));
  BoundedComplex C(F.ring, 0, std::move(terms), F.maps);
  C.truncated_ = F.truncated;
  return C;
}

const PresentedModule& BoundedComplex::term(int i) const {
  if (i < lo_ || i > hi()) return zero_;
  return terms_[static_cast<std::size_t>(i - lo_)];
}

GradedMap BoundedComplex::differential(int i) const {
  if (i - 1 >= lo_ && i <= hi()) return diffs_[static_cast<std::size_t>(i - 1 - lo_)];
  return GradedMap::zero(ring_->field(), term(i).generators(), term(i - 1).generators());
}

bool BoundedComplex::all_free() const {
  for (const auto& t : terms_)
    if (!t.presentation().is_zero()) return false;
  return true;
}

bool BoundedComplex::is_minimal() const {
  if (!all_free()) return false;
  for (const auto& d : diffs_)
    if (!d.is_minimal()) return false;
  return true;
}

BoundedComplex BoundedComplex::suspended(int s) const {
  std::vector<GradedMap> d = diffs_;
  if (s % 2 != 0)
    for (auto& m : d) m = m.negated();
  BoundedComplex C(ring_, lo_ + s, terms_, std::move(d));
  C.truncated_ = truncated_;
  return C;
}

BoundedComplex BoundedComplex::twisted(int d) const {
  std::vector<PresentedModule> t;
  for (const auto& m : terms_) t.push_back(m.shifted(d));
  std::vector<GradedMap> maps;
  for (const auto& m : diffs_) maps.push_back(m.shifted(d));
  BoundedComplex C(ring_, lo_, std::move(t), std::move(maps));
  C.truncated_ = truncated_;
  return C;
}

BoundedComplex BoundedComplex::over_cover() const {
  if (ring_->is_polynomial()) return *this;
  std::vector<PresentedModule> t;
  for (const auto& m : terms_) t.push_back(m.over_cover());
  BoundedComplex C(ring_->cover(), lo_, std::move(t), diffs_);
  C.truncated_ = truncated_;
  return C;
}

BoundedComplex BoundedComplex::trimmed() const {
  std::size_t a = 0, b = terms_.size();
  while (a < b && terms_[a].num_generators() == 0) ++a;
  while (b > a && terms_[b - 1].num_generators() == 0) --b;
  std::vector<PresentedModule> t(terms_.begin() + static_cast<std::ptrdiff_t>(a),
                                 terms_.begin() + static_cast<std::ptrdiff_t>(b));
  std::vector<GradedMap> d;
  for (std::size_t k = a; k + 1 < b; ++k) d.push_back(diffs_[k]);
  BoundedComplex C(ring_, lo_ + static_cast<int>(a), std::move(t), std::move(d));
  C.truncated_ = truncated_;
  return C;
}

bool BoundedComplex::is_complex() const {
  for (int i = lo_ + 1; i <= hi(); ++i) {
    try {
      ModuleMap(term(i), term(i - 1), differential(i));
    } catch (const DomainError&) {
      return false;
    }
    if (i - 1 > lo_) {
      GradedMap c = differential(i - 1).compose(differential(i));
      PresentedModule target = term(i - 2);
      for (const auto& col : c.columns())
        if (!target.contains_relation(col)) return false;
    }
  }
  return true;
}

PresentedModule homology(const BoundedComplex& C, int i) {
  PresentedModule Ci = C.term(i);
  if (Ci.num_generators() == 0) return Ci;
  ModuleMap psi(C.term(i + 1), Ci, C.differential(i + 1));
  ModuleMap phi(Ci, C.term(i - 1), C.differential(i));
  return homology_at(psi, phi);
}

ExtInt homology_inf(const BoundedComplex& C) {
  for (int i = C.lo(); i <= C.hi(); ++i)
    if (!homology(C, i).is_zero()) return ExtInt(i);
  return ExtInt::pos_inf();
}

ExtInt homology_sup(const BoundedComplex& C) {
  for (int i = C.hi(); i >= C.lo(); --i)
    if (!homology(C, i).is_zero()) return ExtInt(i);
  return ExtInt::neg_inf();
}

BoundedComplex koszul_complex(const RingPtr& R, const std::vector<Polynomial>& seq) {
  const int n = static_cast<int>(seq.size());
  for (const auto& f : seq)
    if (f.is_zero() || !f.is_homogeneous())
      throw DomainError("Koszul complex on a zero or inhomogeneous form");
  // subsets[t]: t-subsets in lex order, encoded as bitmasks
  std::vector<std::vector<unsigned>> subsets(static_cast<std::size_t>(n) + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    subsets[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
  auto lex_less = [n](unsigned a, unsigned b) {
    for (int v = 0; v < n; ++v) {
      bool ia = (a >> v) & 1u, ib = (b >> v) & 1u;
      if (ia != ib) return ia;
    }
    return false;
  };
  std::vector<GradedFreeModule> mods;
  for (auto& s : subsets) {
    std::sort(s.begin(), s.end(), lex_less);
    std::vector<int> tw;
    for (unsigned mask : s) {
      int d = 0;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) d += seq[static_cast<std::size_t>(v)].degree();
      tw.push_back(d);
    }
    mods.emplace_back(std::move(tw));
  }
  const PrimeField& F = R->field();
  std::vector<GradedMap> diffs;
  for (int t = 1; t <= n; ++t) {
    const auto& src = subsets[static_cast<std::size_t>(t)];
    const auto& tgt = subsets[static_cast<std::size_t>(t - 1)];
    std::vector<Vec> cols;
    for (unsigned mask : src) {
      Vec col;
      int k = 0;
      for (int v = 0; v < n; ++v) {
        if (!((mask >> v) & 1u)) continue;
        unsigned rest = mask & ~(1u << v);
        auto pos = static_cast<int>(std::lower_bound(tgt.begin(), tgt.end(), rest, lex_less) - tgt.begin());
        Polynomial f = seq[static_cast<std::size_t>(v)];
        Vec term = Vec::from_polynomial(k % 2 == 0 ? f : -f, pos);
        col = add(col, term, kPot, F);
        ++k;
      }
      cols.push_back(std::move(col));
    }
    diffs.emplace_back(F, mods[static_cast<std::size_t>(t)], mods[static_cast<std::size_t>(t - 1)], std::move(cols));
  }
  std::vector<PresentedModule> terms;
  for (const auto& m : mods) terms.push_back(PresentedModule::free(R, m));
  return BoundedComplex(R, 0, std::move(terms), std::move(diffs));
}

BoundedComplex koszul_complex(const std::vector<Polynomial>& seq, const PresentedModule& M) {
  return koszul_complex(seq, BoundedComplex::from_module(M));
}

BoundedComplex koszul_complex(const std::vector<Polynomial>& seq, const BoundedComplex& C) {
  return tensor_complexes(koszul_complex(C.ring(), seq), C);
}

BoundedComplex tensor_complexes(const BoundedComplex& Fc, const BoundedComplex& G) {
  require_free(Fc, "tensor product");
  const RingPtr& R = G.ring();
  const PrimeField& F = R->field();
  if (Fc.empty() || G.empty()) return BoundedComplex(R, 0, {}, {});
  const int lo = Fc.lo() + G.lo(), hi = Fc.hi() + G.hi();
  // blocks of total degree m: pairs (a, m - a)
  auto pairs = [&](int m) {
    std::vector<int> as;
    for (int a = Fc.lo(); a <= Fc.hi(); ++a)
      if (m - a >= G.lo() && m - a <= G.hi()) as.push_back(a);
    return as;
  };
  auto block = [&](int a, int b) {
    return PresentedModule(R, identity_kron(Fc.term(a).generators(), G.term(b).presentation()));
  };
  std::vector<PresentedModule> terms;
  std::vector<GradedMap> diffs;
  for (int m = lo; m <= hi; ++m) {
    std::vector<PresentedModule> parts;
    for (int a : pairs(m)) parts.push_back(block(a, m - a));
    terms.push_back(sum_of(R, parts));
    if (m == lo) continue;
    auto src = pairs(m), tgt = pairs(m - 1);
    std::vector<PresentedModule> tparts;
    for (int a : tgt) tparts.push_back(block(a, m - 1 - a));
    BlockBuilder B(F, gens_of(parts), gens_of(tparts));
    for (std::size_t s = 0; s < src.size(); ++s) {
      const int a = src[s], b = m - a;
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        if (tgt[t] == a - 1)
          B.add(t, s, kron_identity(Fc.differential(a), G.term(b).generators()));
        if (tgt[t] == a) {
          GradedMap d = identity_kron(Fc.term(a).generators(), G.differential(b));
          B.add(t, s, a % 2 == 0 ? d : d.negated());
        }
      }
    }
    diffs.push_back(B.build());
  }
  BoundedComplex C(R, lo, std::move(terms), std::move(diffs));
  C.mark_truncated(Fc.truncated() || G.truncated());
  return C;
}

BoundedComplex hom_complex(const BoundedComplex& Fc, const BoundedComplex& N) {
  require_free(Fc, "Hom complex");
  const RingPtr& R = N.ring();
  const PrimeField& F = R->field();
  if (Fc.empty() || N.empty()) return BoundedComplex(R, 0, {}, {});
  const int lo = N.lo() - Fc.hi(), hi = N.hi() - Fc.lo();
  auto pairs = [&](int m) {
    std::vector<int> as;
    for (int a = Fc.lo(); a <= Fc.hi(); ++a)
      if (a + m >= N.lo() && a + m <= N.hi()) as.push_back(a);
    return as;
  };
  auto block = [&](int a, int b) {
    return PresentedModule(R, identity_kron(negated_twists(Fc.term(a).generators()), N.term(b).presentation()));
  };
  std::vector<PresentedModule> terms;
  std::vector<GradedMap> diffs;
  for (int m = lo; m <= hi; ++m) {
    std::vector<PresentedModule> parts;
    for (int a : pairs(m)) parts.push_back(block(a, a + m));
    terms.push_back(sum_of(R, parts));
    if (m == lo) continue;
    auto src = pairs(m), tgt = pairs(m - 1);
    std::vector<PresentedModule> tparts;
    for (int a : tgt) tparts.push_back(block(a, a + m - 1));
    BlockBuilder B(F, gens_of(parts), gens_of(tparts));
    const bool odd = m % 2 != 0;
    for (std::size_t s = 0; s < src.size(); ++s) {
      const int a = src[s], b = a + m;
      for (std::size_t t = 0; t < tgt.size(); ++t) {
        if (tgt[t] == a)
          B.add(t, s, identity_kron(negated_twists(Fc.term(a).generators()), N.differential(b)));
        if (tgt[t] == a + 1) {
          // -(-1)^m φ ∘ d_F
          GradedMap d = kron_identity(Fc.differential(a + 1).dual(), N.term(b).generators());
          B.add(t, s, odd ? d : d.negated());
        }
      }
    }
    diffs.push_back(B.build());
  }
  BoundedComplex C(R, lo, std::move(terms), std::move(diffs));
  C.mark_truncated(Fc.truncated() || N.truncated());
  return C;
}

PresentedModule tor(const PresentedModule& M, const PresentedModule& N, int i, int max_len) {
  if (i < 0) return PresentedModule::zero(M.ring());
  BoundedComplex F = resolution_complex(M, max_len, i);
  return homology(tensor_complexes(F, BoundedComplex::from_module(N)), i);
}

PresentedModule ext(const PresentedModule& M, const PresentedModule& N, int i, int max_len) {
  if (i < 0) return PresentedModule::zero(M.ring());
  BoundedComplex F = resolution_complex(M, max_len, i);
  return homology(hom_complex(F, BoundedComplex::from_module(N)), -i);
}

BoundedComplex free_resolution_of_complex(const BoundedComplex& L, int max_len) {
  const RingPtr& R = L.ring();
  const PrimeField& F = R->field();
  if (max_len < 0) max_len = default_max_length(R->nvars());
  if (L.empty()) return L;
  // F_k with d_k: F_k -> F_{k-1} and phi_k: F_k -> L_k, for k >= lo.
  std::vector<GradedFreeModule> mods;
  std::vector<GradedMap> d, phi;
  auto Fmod = [&](int k) {
    return k < L.lo() ? GradedFreeModule() : mods[static_cast<std::size_t>(k - L.lo())];
  };
  bool truncated = false;
  for (int k = L.lo();; ++k) {
    if (k > L.hi() && mods.back().rank() == 0) break;
    if (k > L.hi() + max_len) {
      truncated = true;
      break;
    }
    // cone_k = F_{k-1} ⊕ L_k  ->  cone_{k-1} = F_{k-2} ⊕ L_{k-1}
    const GradedFreeModule f1 = Fmod(k - 1), f2 = Fmod(k - 2);
    const PresentedModule Lk = L.term(k), Lk1 = L.term(k - 1), Lk2 = L.term(k + 1);
    BlockBuilder D(F, {f1, Lk.generators()}, {f2, Lk1.generators()});
    if (k - 1 >= L.lo()) {
      D.add(0, 0, d[static_cast<std::size_t>(k - 1 - L.lo())].negated());
      D.add(1, 0, phi[static_cast<std::size_t>(k - 1 - L.lo())].negated());
    }
    D.add(1, 1, L.differential(k));
    GradedMap dc = D.build();
    GradedMap target_rels =
        block_diagonal(GradedMap::zero(F, GradedFreeModule(), f2), Lk1.presentation());
    std::vector<Vec> Z = kernel_generators(R, dc, target_rels);
    std::vector<int> ztw;
    for (const auto& z : Z) ztw.push_back(z.degree(dc.source().twists));
    GradedMap zmap(F, GradedFreeModule(ztw), dc.source(), Z);
    BlockBuilder bl(F, {Lk2.generators()}, {f1, Lk.generators()});
    bl.add(1, 0, L.differential(k + 1));
    GradedMap rels = concat_columns(
        block_diagonal(GradedMap::zero(F, GradedFreeModule(), f1), Lk.presentation()), bl.build());
    std::vector<int> keep = minimal_columns(R, zmap, rels);
    std::vector<Vec> dcols, pcols;
    std::vector<int> tw;
    for (int c : keep) {
      const Vec& z = Z[static_cast<std::size_t>(c)];
      std::vector<Term> a, b;
      for (const auto& t : z.terms()) {
        if (t.comp < f1.rank())
          a.push_back(Term{t.mon, t.comp, F.neg(t.coef)});
        else
          b.push_back(Term{t.mon, t.comp - f1.rank(), F.neg(t.coef)});
      }
      dcols.emplace_back(std::move(a));
      pcols.emplace_back(std::move(b));
      tw.push_back(ztw[static_cast<std::size_t>(c)]);
    }
    GradedFreeModule fk(std::move(tw));
    mods.push_back(fk);
    d.emplace_back(F, fk, f1, std::move(dcols));
    phi.emplace_back(F, fk, Lk.generators(), std::move(pcols));
  }
  // d[k - lo] maps F_k -> F_{k-1}; the one out of F_lo is zero.
  FreeResolution chain;
  chain.ring = R;
  chain.modules = mods;
  for (std::size_t k = 1; k < d.size(); ++k) chain.maps.push_back(d[k]);
  chain = prune(std::move(chain));
  std::vector<PresentedModule> terms;
  for (const auto& m : chain.modules) terms.push_back(PresentedModule::free(R, m));
  BoundedComplex out(R, L.lo(), std::move(terms), chain.maps);
  out.mark_truncated(truncated);
  return out.trimmed();
}

ExtInt grade(const std::vector<Polynomial>& seq, const PresentedModule& M) {
  if (M.is_zero()) return ExtInt::pos_inf();
  BoundedComplex K = koszul_complex(seq, M);
  for (int i = K.hi(); i >= 0; --i)
    if (!homology(K, i).is_zero()) return ExtInt(static_cast<long long>(seq.size()) - i);
  return ExtInt::pos_inf();
}

long long oracle_homology_dim(const BoundedComplex& C, int i, int j, int cap) {
  if (i < C.lo() || i > C.hi()) return 0;
  PieceModel here(C.term(i), j, cap);
  if (here.dim() == 0) return 0;
  long long r_out = 0, r_in = 0;
  if (i - 1 >= C.lo()) r_out = oracle_map_rank(here, PieceModel(C.term(i - 1), j, cap), C.differential(i));
  if (i + 1 <= C.hi()) r_in = oracle_map_rank(PieceModel(C.term(i + 1), j, cap), here, C.differential(i + 1));
  return here.dim() - r_out - r_in;
}

}  // namespace creg
