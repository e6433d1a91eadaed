#include "creg/linalg.hpp"

namespace creg {

void RowEchelon::reduce(DenseVector& v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto p = static_cast<std::size_t>(pivots_[k]);
    const Scalar c = v[p];
    if (c == 0) continue;
    const DenseVector& r = rows_[k];
    for (std::size_t i = p; i < v.size(); ++i)
      if (r[i] != 0) v[i] = field_.sub(v[i], field_.mul(c, r[i]));
  }
}

bool RowEchelon::insert(DenseVector v) {
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p] == 0) ++p;
  if (p == v.size()) return false;
  const Scalar inv = field_.inv(v[p]);
  for (std::size_t i = p; i < v.size(); ++i) v[i] = field_.mul(v[i], inv);
  for (auto& r : rows_) {
    const Scalar c = r[p];
    if (c == 0) continue;
    for (std::size_t i = p; i < r.size(); ++i)
      if (v[i] != 0) r[i] = field_.sub(r[i], field_.mul(c, v[i]));
  }
  pivot_row_[p] = static_cast<int>(rows_.size());
  pivots_.push_back(static_cast<int>(p));
  rows_.push_back(std::move(v));
  return true;
}

std::vector<int> RowEchelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < n_; ++c)
    if (pivot_row_[static_cast<std::size_t>(c)] < 0) out.push_back(c);
  return out;
}

int rank_of(const PrimeField& field, const std::vector<DenseVector>& rows, int n) {
  RowEchelon e(field, n);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

}  // namespace creg
