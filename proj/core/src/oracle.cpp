#include "creg/oracle.hpp"

#include <algorithm>
#include <string>

#include "creg/error.hpp"

namespace creg {

namespace {

void monomials_rec(int nvars, int var, int left, std::vector<int>& e, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    e[static_cast<std::size_t>(var)] = left;
    out.emplace_back(e);
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[static_cast<std::size_t>(var)] = k;
    monomials_rec(nvars, var + 1, left - k, e, out);
  }
  e[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  monomials_rec(nvars, 0, d, e, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return compare_grevlex(a, b) > 0; });
  return out;
}

PieceModel::PieceModel(const PresentedModule& M, int degree, int cap)
    : field_(M.field()), degree_(degree), relations_(M.field(), 0) {
  if (degree > cap || degree < -cap)
    throw LimitError("oracle degree " + std::to_string(degree) + " exceeds the cap " +
                     std::to_string(cap));
  const int n = M.ring()->nvars();
  const auto& tw = M.generators().twists;
  for (int l = 0; l < M.num_generators(); ++l)
    for (const auto& m : monomials_of_degree(n, degree - tw[static_cast<std::size_t>(l)])) {
      index_.emplace(std::make_pair(m, l), static_cast<int>(monomials_.size()));
      monomials_.emplace_back(m, l);
    }
  const int N = static_cast<int>(monomials_.size());
  relations_ = RowEchelon(field_, N);
  auto add_relation = [&](const Vec& v, const Monomial& m) {
    DenseVector row(static_cast<std::size_t>(N), 0);
    for (const auto& t : v.terms()) {
      auto it = index_.find({t.mon * m, t.comp});
      if (it == index_.end()) throw Error("oracle: relation leaves the graded piece");
      row[static_cast<std::size_t>(it->second)] = field_.add(row[static_cast<std::size_t>(it->second)], t.coef);
    }
    relations_.insert(std::move(row));
  };
  const GradedMap& p = M.presentation();
  for (int c = 0; c < p.cols(); ++c) {
    if (p.column(c).is_zero()) continue;
    for (const auto& m : monomials_of_degree(n, degree - p.source().twists[static_cast<std::size_t>(c)]))
      add_relation(p.column(c), m);
  }
  for (int l = 0; l < M.num_generators(); ++l)
    for (const auto& f : M.ring()->ideal())
      for (const auto& m : monomials_of_degree(n, degree - tw[static_cast<std::size_t>(l)] - f.degree()))
        add_relation(to_vec(f, l), m);
  free_ = relations_.free_columns();
}

DenseVector PieceModel::coordinates(const Vec& v) const {
  DenseVector full(static_cast<std::size_t>(monomials_.size()), 0);
  for (const auto& t : v.terms()) {
    auto it = index_.find({t.mon, t.comp});
    if (it == index_.end()) throw Error("oracle: element not in this graded piece");
    full[static_cast<std::size_t>(it->second)] = field_.add(full[static_cast<std::size_t>(it->second)], t.coef);
  }
  relations_.reduce(full);
  DenseVector out;
  out.reserve(free_.size());
  for (int c : free_) out.push_back(full[static_cast<std::size_t>(c)]);
  return out;
}

std::vector<Vec> PieceModel::basis() const {
  std::vector<Vec> out;
  for (int c : free_) {
    const auto& [m, l] = monomials_[static_cast<std::size_t>(c)];
    out.push_back(Vec({Term{m, l, 1}}));
  }
  return out;
}

long long graded_piece_dim(const PresentedModule& M, int j, int cap) {
  return PieceModel(M, j, cap).dim();
}

bool oracle_is_zero(const PresentedModule& M, const Vec& v, int cap) {
  if (v.is_zero()) return true;
  PieceModel P(M, v.degree(M.generators().twists), cap);
  auto c = P.coordinates(v);
  return std::all_of(c.begin(), c.end(), [](Scalar s) { return s == 0; });
}

int oracle_map_rank(const PieceModel& source, const PieceModel& target, const GradedMap& matrix) {
  const ModuleOrder pot;
  std::vector<DenseVector> rows;
  for (const auto& b : source.basis()) {
    const Term& t = b.leading();
    Vec img;
    add_multiple(img, 1, t.mon, matrix.column(t.comp), pot, matrix.field());
    rows.push_back(target.coordinates(img));
  }
  return rank_of(matrix.field(), rows, target.dim());
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Rank of the Koszul differential K_i -> K_{i-1} in internal degree j.
int koszul_rank(const PresentedModule& M, int i, int j, int cap) {
  const int n = M.ring()->nvars();
  if (i <= 0 || i > n) return 0;
  PieceModel src(M, j - i, cap), dst(M, j - i + 1, cap);
  if (src.dim() == 0 || dst.dim() == 0) return 0;
  auto from = subsets_of_size(n, i);
  auto to = subsets_of_size(n, i - 1);
  const PrimeField& F = M.field();
  const int width = static_cast<int>(to.size()) * dst.dim();
  std::vector<DenseVector> rows;
  for (const auto& T : from)
    for (const auto& b : src.basis()) {
      DenseVector row(static_cast<std::size_t>(width), 0);
      for (std::size_t k = 0; k < T.size(); ++k) {
        std::vector<int> U = T;
        U.erase(U.begin() + static_cast<std::ptrdiff_t>(k));
        auto pos = static_cast<int>(std::lower_bound(to.begin(), to.end(), U) - to.begin());
        const Term& t0 = b.leading();
        Vec xb({Term{t0.mon * Monomial::variable(T[k]), t0.comp, 1}});
        auto c = dst.coordinates(xb);
        Scalar sign = k % 2 == 0 ? 1 : F.neg(1);
        for (int t = 0; t < dst.dim(); ++t) {
          auto& e = row[static_cast<std::size_t>(pos * dst.dim() + t)];
          e = F.add(e, F.mul(sign, c[static_cast<std::size_t>(t)]));
        }
      }
      rows.push_back(std::move(row));
    }
  return rank_of(F, rows, width);
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

}  // namespace

long long oracle_koszul_betti(const PresentedModule& M, int i, int j, int cap) {
  const int n = M.ring()->nvars();
  if (i < 0 || i > n) return 0;
  long long chain = binomial(n, i) * PieceModel(M, j - i, cap).dim();
  return chain - koszul_rank(M, i, j, cap) - koszul_rank(M, i + 1, j, cap);
}

}  // namespace creg
