#include "creg/module.hpp"

#include <algorithm>
#include <mutex>

#include "creg/error.hpp"

namespace creg {

namespace {

const ModuleOrder kPot;

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b)) throw DomainError("modules over different rings");
}

GradedMap ideal_multiples_map(const GradedRing& R, const GradedFreeModule& F) {
  std::vector<Vec> cols = R.ideal_multiples(F);
  std::vector<int> tw;
  for (const auto& c : cols) tw.push_back(c.degree(F.twists));
  return GradedMap(R.field(), GradedFreeModule(std::move(tw)), F, std::move(cols));
}

}  // namespace

struct PresentedModule::Cache {
  std::once_flag basis_once;
  GroebnerBasis basis;
  std::once_flag series_once;
  HilbertSeries series;
};

PresentedModule::PresentedModule(RingPtr ring, GradedMap presentation) {
  if (!ring) throw DomainError("module without a ring");
  if (!(presentation.field() == ring->field()))
    throw DomainError("presentation over a different field");
  if (!presentation.is_homogeneous()) throw DomainError("inhomogeneous presentation");
  ring_ = std::move(ring);
  presentation_ = std::move(presentation);
  cache_ = std::make_shared<Cache>();
}

PresentedModule PresentedModule::free(RingPtr ring, GradedFreeModule F) {
  PrimeField field = ring->field();
  return PresentedModule(std::move(ring), GradedMap::zero(field, GradedFreeModule(), std::move(F)));
}

PresentedModule PresentedModule::cyclic(RingPtr ring, const std::vector<Polynomial>& J,
                                        int generator_degree) {
  std::vector<Vec> cols;
  std::vector<int> tw;
  for (const auto& f : J) {
    if (f.is_zero()) continue;
    if (!f.is_homogeneous()) throw DomainError("inhomogeneous ideal generator");
    cols.push_back(to_vec(f));
    tw.push_back(f.degree() + generator_degree);
  }
  PrimeField field = ring->field();
  return PresentedModule(std::move(ring), GradedMap(field, GradedFreeModule(std::move(tw)),
                                                    GradedFreeModule({generator_degree}),
                                                    std::move(cols)));
}

PresentedModule PresentedModule::residue_field(RingPtr ring, int generator_degree) {
  auto vars = ring->variables();
  return cyclic(std::move(ring), vars, generator_degree);
}

PresentedModule PresentedModule::zero(RingPtr ring) { return free(std::move(ring), GradedFreeModule()); }

PresentedModule PresentedModule::shifted(int d) const {
  return PresentedModule(ring(), presentation().shifted(d));
}

PresentedModule PresentedModule::over_cover() const {
  if (ring()->is_polynomial()) return *this;
  GradedMap extra = ideal_multiples_map(*ring(), generators());
  return PresentedModule(ring()->cover(), concat_columns(presentation(), extra));
}

PresentedModule PresentedModule::minimal() const {
  Elimination e = eliminate_units(presentation());
  GradedMap none = GradedMap::zero(field(), GradedFreeModule(), e.map.target());
  std::vector<int> keep = minimal_columns(ring(), e.map, none);
  return PresentedModule(ring(), e.map.select_columns(keep));
}

const GroebnerBasis& PresentedModule::basis() const {
  std::call_once(cache_->basis_once, [this] {
    std::vector<GroebnerInput> in;
    for (const auto& c : presentation().columns()) in.push_back({c, false});
    for (auto& v : ring()->ideal_multiples(generators())) in.push_back({std::move(v), false});
    cache_->basis = buchberger(field(), generators(), kPot, std::move(in)).basis;
  });
  return cache_->basis;
}

const HilbertSeries& PresentedModule::hilbert_series() const {
  std::call_once(cache_->series_once, [this] {
    const GroebnerBasis& G = basis();
    HilbertSeries hs;
    const int n = ring()->nvars();
    for (int l = 0; l < num_generators(); ++l)
      hs = hs + monomial_quotient_series(n, G.leading_monomials(l))
                    .shifted(-generators().twists[static_cast<std::size_t>(l)]);
    cache_->series = hs;
  });
  return cache_->series;
}

ExtInt PresentedModule::combinatorial_dimension() const {
  ExtInt d = ExtInt::neg_inf();
  for (int l = 0; l < num_generators(); ++l)
    d = max(d, monomial_quotient_dimension(ring()->nvars(), basis().leading_monomials(l)));
  return d;
}

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target, GradedMap matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring());
  if (!(matrix_.source() == source_.generators()) || !(matrix_.target() == target_.generators()))
    throw DomainError("map matrix does not match the generators of its modules");
  if (!matrix_.is_homogeneous()) throw DomainError("map is not degree preserving");
  GradedMap rel = matrix_.compose(source_.presentation());
  for (const auto& c : rel.columns())
    if (!target_.contains_relation(c)) throw DomainError("map does not respect relations");
}

bool ModuleMap::is_zero() const {
  for (const auto& c : matrix_.columns())
    if (!target_.contains_relation(c)) return false;
  return true;
}

std::vector<int> minimal_columns(const RingPtr& ring, const GradedMap& gens, const GradedMap& rels) {
  std::vector<GroebnerInput> in;
  for (const auto& c : rels.columns()) in.push_back({c, false});
  for (auto& v : ring->ideal_multiples(gens.target())) in.push_back({std::move(v), false});
  const int first = static_cast<int>(in.size());
  for (const auto& c : gens.columns()) in.push_back({c, true});
  auto res = buchberger(ring->field(), gens.target(), kPot, std::move(in));
  std::vector<int> out;
  for (int k : res.minimal) out.push_back(k - first);
  return out;
}

std::vector<Vec> kernel_generators(const RingPtr& ring, const GradedMap& A, const GradedMap& rels) {
  const PrimeField& F = ring->field();
  const int t = A.rows();
  GradedFreeModule aug = direct_sum(A.target(), A.source());
  std::vector<GroebnerInput> in;
  for (const auto& c : rels.columns()) in.push_back({c, false});
  for (auto& v : ring->ideal_multiples(aug)) in.push_back({std::move(v), false});
  for (int j = 0; j < A.cols(); ++j) {
    std::vector<Term> terms = A.column(j).terms();
    terms.push_back(Term{Monomial(), t + j, 1});
    in.push_back({Vec(std::move(terms)), false});
  }
  auto res = buchberger(F, aug, kPot, std::move(in));
  std::vector<GroebnerInput> syz;
  for (const auto& v : res.basis.elements()) {
    if (v.leading().comp < t) continue;
    std::vector<Term> terms = v.terms();
    for (auto& x : terms) x.comp -= t;
    syz.push_back({Vec(std::move(terms)), true});
  }
  const int first = static_cast<int>(syz.size());
  for (auto& v : ring->ideal_multiples(A.source())) syz.push_back({std::move(v), false});
  std::vector<Vec> cand;
  for (int k = 0; k < first; ++k) cand.push_back(syz[static_cast<std::size_t>(k)].vec);
  auto mg = buchberger(F, A.source(), kPot, std::move(syz));
  std::vector<Vec> out;
  for (int k : mg.minimal) out.push_back(cand[static_cast<std::size_t>(k)]);
  return out;
}

Submodule subquotient(const RingPtr& ring, const GradedMap& gens, const GradedMap& rels) {
  GradedMap chosen = gens.select_columns(minimal_columns(ring, gens, rels));
  std::vector<Vec> K = kernel_generators(ring, chosen, rels);
  std::vector<int> tw;
  for (const auto& v : K) tw.push_back(v.degree(chosen.source().twists));
  GradedMap pres(ring->field(), GradedFreeModule(std::move(tw)), chosen.source(), std::move(K));
  return Submodule{PresentedModule(ring, std::move(pres)), std::move(chosen)};
}

Submodule kernel(const ModuleMap& phi) {
  const RingPtr& R = phi.source().ring();
  std::vector<Vec> K = kernel_generators(R, phi.matrix(), phi.target().presentation());
  std::vector<int> tw;
  for (const auto& v : K) tw.push_back(v.degree(phi.source().generators().twists));
  GradedMap gens(R->field(), GradedFreeModule(std::move(tw)), phi.source().generators(), std::move(K));
  return subquotient(R, gens, phi.source().presentation());
}

Submodule image(const ModuleMap& phi) {
  return subquotient(phi.source().ring(), phi.matrix(), phi.target().presentation());
}

PresentedModule cokernel(const ModuleMap& phi) {
  return PresentedModule(phi.target().ring(),
                         concat_columns(phi.target().presentation(), phi.matrix()));
}

PresentedModule homology_at(const ModuleMap& psi, const ModuleMap& phi) {
  if (!(psi.matrix().target() == phi.matrix().source()))
    throw DomainError("homology of maps that do not compose");
  ModuleMap comp(psi.source(), phi.target(), phi.matrix().compose(psi.matrix()));
  if (!comp.is_zero()) throw DomainError("homology requested where the composition is nonzero");
  const RingPtr& R = phi.source().ring();
  std::vector<Vec> K = kernel_generators(R, phi.matrix(), phi.target().presentation());
  std::vector<int> tw;
  for (const auto& v : K) tw.push_back(v.degree(phi.source().generators().twists));
  GradedMap gens(R->field(), GradedFreeModule(std::move(tw)), phi.source().generators(), std::move(K));
  return subquotient(R, gens, concat_columns(phi.source().presentation(), psi.matrix())).module;
}

GradedMap multiplication_map(const PrimeField& F, const GradedFreeModule& gens, const Polynomial& x) {
  if (!x.is_homogeneous()) throw DomainError("multiplication by an inhomogeneous form");
  return GradedMap::scalar(F, gens, x);
}

Submodule colon_by_element(const PresentedModule& M, const Polynomial& x) {
  if (x.is_zero()) return Submodule{M, GradedMap::identity(M.field(), M.generators())};
  if (!x.is_homogeneous()) throw DomainError("colon by an inhomogeneous form");
  ModuleMap mult(M, M.shifted(x.degree()), multiplication_map(M.field(), M.generators(), x));
  return kernel(mult);
}

PresentedModule quotient_by_element(const PresentedModule& M, const Polynomial& x) {
  if (x.is_zero()) return M;
  if (!x.is_homogeneous()) throw DomainError("quotient by an inhomogeneous form");
  GradedMap mult = multiplication_map(M.field(), M.generators(), x);
  GradedMap rel(M.field(), M.generators().shifted(-x.degree()), M.generators(), mult.columns());
  return PresentedModule(M.ring(), concat_columns(M.presentation(), rel));
}

std::vector<Polynomial> annihilator(const PresentedModule& M) {
  const RingPtr& R = M.ring();
  const PrimeField& F = R->field();
  std::vector<Polynomial> out = R->ideal();
  const int r = M.num_generators();
  if (r == 0) {
    out.push_back(R->one());
    return out;
  }
  GradedMap rel = GradedMap::zero(F, GradedFreeModule(), GradedFreeModule());
  std::vector<Term> col;
  for (int l = 0; l < r; ++l) {
    GradedMap copy = M.presentation().shifted(M.generators().twists[static_cast<std::size_t>(l)]);
    rel = l == 0 ? copy : block_diagonal(rel, copy);
    col.push_back(Term{Monomial(), l * r + l, 1});
  }
  GradedMap A(F, GradedFreeModule({0}), rel.target(), {Vec(std::move(col))});
  for (const auto& v : kernel_generators(R, A, rel)) out.push_back(to_polynomial(v, F));
  return out;
}

bool same_ideal(const RingPtr& ring, const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b) {
  std::vector<Polynomial> aa = a, bb = b;
  aa.insert(aa.end(), ring->ideal().begin(), ring->ideal().end());
  bb.insert(bb.end(), ring->ideal().begin(), ring->ideal().end());
  return ideal_groebner_basis(ring->field(), aa) == ideal_groebner_basis(ring->field(), bb);
}

bool is_filter_regular(const Polynomial& x, const PresentedModule& M) {
  return colon_by_element(M, x).module.is_finite_length();
}

PresentedModule direct_sum(const PresentedModule& a, const PresentedModule& b) {
  require_same_ring(a.ring(), b.ring());
  return PresentedModule(a.ring(), block_diagonal(a.presentation(), b.presentation()));
}

PresentedModule tensor(const PresentedModule& a, const PresentedModule& b) {
  require_same_ring(a.ring(), b.ring());
  GradedMap left = kron_identity(a.presentation(), b.generators());
  GradedMap right = identity_kron(a.generators(), b.presentation());
  return PresentedModule(a.ring(), concat_columns(left, right));
}

Elimination eliminate_units(const GradedMap& d) {
  const PrimeField& F = d.field();
  std::vector<Vec> cols = d.columns();
  std::vector<char> row_alive(static_cast<std::size_t>(d.rows()), 1);
  std::vector<char> col_alive(cols.size(), 1);
  while (true) {
    int best_r = -1, best_c = -1;
    Scalar unit = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!col_alive[c]) continue;
      for (const auto& t : cols[c].terms()) {
        if (!t.mon.is_one()) continue;
        if (best_r < 0 || t.comp < best_r) {
          best_r = t.comp;
          best_c = static_cast<int>(c);
          unit = t.coef;
        }
        break;
      }
    }
    if (best_r < 0) break;
    const Vec pivot = cols[static_cast<std::size_t>(best_c)];
    const Scalar inv = F.inv(unit);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!col_alive[c] || static_cast<int>(c) == best_c) continue;
      Polynomial a = cols[c].component(best_r, F);
      if (a.is_zero()) continue;
      cols[c] = add(cols[c], multiply(a.scaled(F.neg(inv)), pivot, kPot, F), kPot, F);
    }
    row_alive[static_cast<std::size_t>(best_r)] = 0;
    col_alive[static_cast<std::size_t>(best_c)] = 0;
  }
  Elimination e;
  for (int r = 0; r < d.rows(); ++r)
    if (row_alive[static_cast<std::size_t>(r)]) e.kept_rows.push_back(r);
  for (int c = 0; c < d.cols(); ++c)
    if (col_alive[static_cast<std::size_t>(c)]) e.kept_cols.push_back(c);
  GradedMap m(F, d.source(), d.target(), std::move(cols));
  e.map = m.select_columns(e.kept_cols).select_rows(e.kept_rows);
  return e;
}

}  // namespace creg
