#include "creg/graded_map.hpp"

#include <string>

#include "creg/error.hpp"

namespace creg {

namespace {
const ModuleOrder kPot;

void renumber(std::vector<Term>& terms, const std::vector<int>& map) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    int c = map[static_cast<std::size_t>(t.comp)];
    if (c >= 0) out.push_back(Term{t.mon, c, t.coef});
  }
  terms = std::move(out);
}
}  // namespace

GradedFreeModule GradedFreeModule::shifted(int d) const {
  GradedFreeModule r = *this;
  for (auto& t : r.twists) t -= d;
  return r;
}

GradedFreeModule direct_sum(const GradedFreeModule& a, const GradedFreeModule& b) {
  GradedFreeModule r = a;
  r.twists.insert(r.twists.end(), b.twists.begin(), b.twists.end());
  return r;
}

GradedMap::GradedMap(PrimeField field, GradedFreeModule source, GradedFreeModule target,
                     std::vector<Vec> columns)
    : field_(field), source_(std::move(source)), target_(std::move(target)),
      columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != source_.rank())
    throw DomainError("matrix has " + std::to_string(columns_.size()) +
                      " columns but source has rank " + std::to_string(source_.rank()));
  for (const auto& c : columns_)
    if (c.max_component() >= target_.rank())
      throw DomainError("matrix column exceeds target rank");
}

GradedMap GradedMap::from_rows(PrimeField field, GradedFreeModule source, GradedFreeModule target,
                               const std::vector<std::vector<Polynomial>>& rows) {
  if (static_cast<int>(rows.size()) != target.rank())
    throw DomainError("row count does not match target rank");
  std::vector<Vec> cols(static_cast<std::size_t>(source.rank()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != source.rank())
      throw DomainError("row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      cols[j] = add(cols[j], Vec::from_polynomial(rows[i][j], static_cast<int>(i)), kPot, field);
  }
  return GradedMap(field, std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::zero(PrimeField field, GradedFreeModule source, GradedFreeModule target) {
  std::vector<Vec> cols(static_cast<std::size_t>(source.rank()));
  return GradedMap(field, std::move(source), std::move(target), std::move(cols));
}

GradedMap GradedMap::identity(PrimeField field, const GradedFreeModule& m) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.rank(); ++j) cols.push_back(Vec::basis(j));
  return GradedMap(field, m, m, std::move(cols));
}

GradedMap GradedMap::scalar(PrimeField field, const GradedFreeModule& m, const Polynomial& p) {
  std::vector<Vec> cols;
  for (int j = 0; j < m.rank(); ++j) cols.push_back(Vec::from_polynomial(p, j));
  return GradedMap(field, m, m.shifted(p.is_zero() ? 0 : p.degree()), std::move(cols));
}

Polynomial GradedMap::entry(int i, int j) const { return column(j).component(i, field_); }

bool GradedMap::is_homogeneous() const {
  for (int j = 0; j < cols(); ++j)
    for (const auto& t : column(j).terms())
      if (t.mon.degree() != source_.twists[static_cast<std::size_t>(j)] -
                                target_.twists[static_cast<std::size_t>(t.comp)])
        return false;
  return true;
}

bool GradedMap::is_zero() const {
  for (const auto& c : columns_)
    if (!c.is_zero()) return false;
  return true;
}

bool GradedMap::is_minimal() const {
  for (const auto& c : columns_)
    for (const auto& t : c.terms())
      if (t.mon.is_one()) return false;
  return true;
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  if (other.target_.rank() != source_.rank())
    throw DomainError("composition of incompatible maps");
  std::vector<Vec> cols;
  cols.reserve(other.columns_.size());
  for (const auto& oc : other.columns_) {
    Vec r;
    for (const auto& t : oc.terms()) add_multiple(r, t.coef, t.mon, column(t.comp), kPot, field_);
    cols.push_back(std::move(r));
  }
  return GradedMap(field_, other.source_, target_, std::move(cols));
}

GradedMap GradedMap::negated() const { return scaled(field_.neg(1)); }

GradedMap GradedMap::scaled(Scalar c) const {
  std::vector<Vec> cols;
  for (const auto& col : columns_) cols.push_back(scale(col, c, field_));
  return GradedMap(field_, source_, target_, std::move(cols));
}

GradedMap GradedMap::dual() const {
  std::vector<std::vector<Term>> cols(static_cast<std::size_t>(target_.rank()));
  for (int j = 0; j < this->cols(); ++j)
    for (const auto& t : column(j).terms())
      cols[static_cast<std::size_t>(t.comp)].push_back(Term{t.mon, j, t.coef});
  std::vector<Vec> out;
  for (auto& c : cols) out.push_back(Vec::from_terms(std::move(c), kPot, field_));
  GradedFreeModule src = target_, tgt = source_;
  for (auto& t : src.twists) t = -t;
  for (auto& t : tgt.twists) t = -t;
  return GradedMap(field_, std::move(src), std::move(tgt), std::move(out));
}

GradedMap GradedMap::shifted(int d) const {
  return GradedMap(field_, source_.shifted(d), target_.shifted(d), columns_);
}

GradedMap GradedMap::select_columns(const std::vector<int>& cs) const {
  std::vector<Vec> cols;
  std::vector<int> tw;
  for (int c : cs) {
    cols.push_back(column(c));
    tw.push_back(source_.twists[static_cast<std::size_t>(c)]);
  }
  return GradedMap(field_, GradedFreeModule(std::move(tw)), target_, std::move(cols));
}

GradedMap GradedMap::select_rows(const std::vector<int>& rs) const {
  std::vector<int> map(static_cast<std::size_t>(target_.rank()), -1);
  std::vector<int> tw;
  bool monotone = true;
  for (std::size_t k = 0; k < rs.size(); ++k) {
    map[static_cast<std::size_t>(rs[k])] = static_cast<int>(k);
    tw.push_back(target_.twists[static_cast<std::size_t>(rs[k])]);
    if (k > 0 && rs[k] < rs[k - 1]) monotone = false;
  }
  std::vector<Vec> cols;
  for (const auto& c : columns_) {
    std::vector<Term> t = c.terms();
    renumber(t, map);
    cols.push_back(monotone ? Vec(std::move(t)) : Vec::from_terms(std::move(t), kPot, field_));
  }
  return GradedMap(field_, source_, GradedFreeModule(std::move(tw)), std::move(cols));
}

GradedMap concat_columns(const GradedMap& a, const GradedMap& b) {
  if (!(a.target() == b.target())) throw DomainError("concat_columns: targets differ");
  std::vector<Vec> cols = a.columns();
  cols.insert(cols.end(), b.columns().begin(), b.columns().end());
  return GradedMap(a.field(), direct_sum(a.source(), b.source()), a.target(), std::move(cols));
}

GradedMap block_diagonal(const GradedMap& a, const GradedMap& b) {
  std::vector<Vec> cols = a.columns();
  int off = a.rows();
  for (const auto& c : b.columns()) {
    std::vector<Term> t = c.terms();
    for (auto& x : t) x.comp += off;
    cols.emplace_back(std::move(t));
  }
  return GradedMap(a.field(), direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
                   std::move(cols));
}

GradedMap stack_rows(const GradedMap& a, const GradedMap& b) {
  if (!(a.source() == b.source())) throw DomainError("stack_rows: sources differ");
  std::vector<Vec> cols;
  int off = a.rows();
  for (int j = 0; j < a.cols(); ++j) {
    std::vector<Term> t = a.column(j).terms();
    for (auto x : b.column(j).terms()) {
      x.comp += off;
      t.push_back(x);
    }
    cols.emplace_back(std::move(t));
  }
  return GradedMap(a.field(), a.source(), direct_sum(a.target(), b.target()), std::move(cols));
}

GradedMap kron_identity(const GradedMap& a, const GradedFreeModule& m) {
  const int k = m.rank();
  std::vector<int> src, tgt;
  for (int s : a.source().twists)
    for (int t : m.twists) src.push_back(s + t);
  for (int s : a.target().twists)
    for (int t : m.twists) tgt.push_back(s + t);
  std::vector<Vec> cols;
  for (int j = 0; j < a.cols(); ++j) {
    for (int l = 0; l < k; ++l) {
      std::vector<Term> t = a.column(j).terms();
      for (auto& x : t) x.comp = x.comp * k + l;
      cols.emplace_back(std::move(t));
    }
  }
  return GradedMap(a.field(), GradedFreeModule(std::move(src)), GradedFreeModule(std::move(tgt)),
                   std::move(cols));
}

GradedMap identity_kron(const GradedFreeModule& f, const GradedMap& b) {
  std::vector<int> src, tgt;
  for (int s : f.twists) {
    for (int t : b.source().twists) src.push_back(s + t);
    for (int t : b.target().twists) tgt.push_back(s + t);
  }
  std::vector<Vec> cols;
  const int r = b.rows();
  for (int i = 0; i < f.rank(); ++i) {
    for (const auto& c : b.columns()) {
      std::vector<Term> t = c.terms();
      for (auto& x : t) x.comp += i * r;
      cols.emplace_back(std::move(t));
    }
  }
  return GradedMap(b.field(), GradedFreeModule(std::move(src)), GradedFreeModule(std::move(tgt)),
                   std::move(cols));
}

}  // namespace creg
