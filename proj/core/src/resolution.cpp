#include "creg/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "creg/error.hpp"
#include "creg/groebner.hpp"

namespace creg {

namespace {

const ModuleOrder kPot;

// Lead components ascending, then lead monomials descending in lex; this
// ordering keeps a Schreyer frame within the length of the Koszul complex.
void sort_for_frame(std::vector<Vec>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Vec& a, const Vec& b) {
    const Term& x = a.leading();
    const Term& y = b.leading();
    if (x.comp != y.comp) return x.comp < y.comp;
    return compare_monomials(MonomialOrder::Lex, x.mon, y.mon) > 0;
  });
}

GradedMap columns_map(const PrimeField& F, const GradedFreeModule& target, std::vector<Vec> cols) {
  std::vector<int> tw;
  for (auto& c : cols) {
    tw.push_back(c.degree(target.twists));
    c = resort(std::move(c), kPot, F);
  }
  return GradedMap(F, GradedFreeModule(std::move(tw)), target, std::move(cols));
}

FreeResolution resolve_by_kernels(const PresentedModule& M, int max_len) {
  const RingPtr& R = M.ring();
  const PrimeField& F = R->field();
  FreeResolution res;
  res.ring = R;
  PresentedModule m = M.minimal();
  res.modules.push_back(m.generators());
  if (m.num_generators() == 0) {
    res.minimal = true;
    return res;
  }
  GradedMap d = m.presentation();
  while (true) {
    if (d.cols() == 0) break;
    if (res.length() == max_len) {
      res.truncated = true;
      break;
    }
    res.modules.push_back(d.source());
    res.maps.push_back(d);
    GradedMap zero = GradedMap::zero(F, GradedFreeModule(), d.target());
    std::vector<Vec> K = kernel_generators(R, d, zero);
    d = columns_map(F, d.source(), std::move(K));
  }
  res.minimal = true;
  return res;
}

}  // namespace

FreeResolution schreyer_frame(const PresentedModule& M) {
  if (!M.ring()->is_polynomial()) throw DomainError("Schreyer frames are built over polynomial rings");
  const PrimeField& F = M.field();
  FreeResolution res;
  res.ring = M.ring();
  res.modules.push_back(M.generators());
  std::vector<Vec> level = M.basis().elements();
  sort_for_frame(level);
  GroebnerBasis basis = GroebnerBasis::from_elements(F, M.generators(), kPot, level);
  while (basis.size() > 0) {
    GradedMap d = columns_map(F, basis.free(), basis.elements());
    res.modules.push_back(d.source());
    res.maps.push_back(std::move(d));
    SyzygyFrame frame = schreyer_syzygies(basis);
    sort_for_frame(frame.syzygies);
    basis = GroebnerBasis::from_elements(F, frame.free, frame.order, std::move(frame.syzygies));
  }
  return res;
}

FreeResolution prune(FreeResolution F) {
  for (std::size_t k = 0; k < F.maps.size(); ++k) {
    Elimination e = eliminate_units(F.maps[k]);
    F.maps[k] = std::move(e.map);
    if (k + 1 < F.maps.size()) F.maps[k + 1] = F.maps[k + 1].select_rows(e.kept_cols);
    if (k > 0) F.maps[k - 1] = F.maps[k - 1].select_columns(e.kept_rows);
  }
  if (F.maps.empty()) {
    F.minimal = true;
    return F;
  }
  F.modules.clear();
  F.modules.push_back(F.maps.front().target());
  for (const auto& d : F.maps) F.modules.push_back(d.source());
  while (!F.maps.empty() && F.maps.back().cols() == 0) {
    F.maps.pop_back();
    F.modules.pop_back();
  }
  F.minimal = true;
  return F;
}

FreeResolution minimal_free_resolution(const PresentedModule& M, int max_len) {
  if (max_len < 0) max_len = default_max_length(M.ring()->nvars());
  if (!M.ring()->is_polynomial()) return resolve_by_kernels(M, max_len);
  FreeResolution res = prune(schreyer_frame(M));
  if (res.length() > max_len) {
    res.maps.resize(static_cast<std::size_t>(max_len));
    res.modules.resize(static_cast<std::size_t>(max_len) + 1);
    res.truncated = true;
  }
  return res;
}

BettiTable::BettiTable(const FreeResolution& F) : truncated_(F.truncated), bound_(F.length()) {
  for (int i = 0; i <= F.length(); ++i)
    for (int t : F.modules[static_cast<std::size_t>(i)].twists) ++entries_[{i, t}];
}

long long BettiTable::at(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

ExtInt BettiTable::regularity() const {
  ExtInt r = ExtInt::neg_inf();
  for (const auto& [ij, b] : entries_)
    if (b != 0) r = max(r, ExtInt(ij.second - ij.first));
  return r;
}

ExtInt BettiTable::top_degree(int i) const {
  ExtInt r = ExtInt::neg_inf();
  for (const auto& [ij, b] : entries_)
    if (ij.first == i && b != 0) r = max(r, ExtInt(ij.second));
  return r;
}

ExtInt BettiTable::projective_dimension() const {
  if (truncated_) return ExtInt::pos_inf();
  ExtInt p = ExtInt::neg_inf();
  for (const auto& [ij, b] : entries_)
    if (b != 0) p = max(p, ExtInt(ij.first));
  return p;
}

std::vector<long long> BettiTable::euler_polynomial(int& offset) const {
  offset = 0;
  if (entries_.empty()) return {};
  int lo = entries_.begin()->first.second, hi = lo;
  for (const auto& [ij, b] : entries_) {
    lo = std::min(lo, ij.second);
    hi = std::max(hi, ij.second);
  }
  std::vector<long long> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [ij, b] : entries_)
    c[static_cast<std::size_t>(ij.second - lo)] += (ij.first % 2 == 0 ? b : -b);
  offset = lo;
  return c;
}

std::string BettiTable::to_text() const {
  if (entries_.empty()) return "0\n";
  int maxi = 0, lo = 0, hi = 0;
  bool first = true;
  for (const auto& [ij, b] : entries_) {
    maxi = std::max(maxi, ij.first);
    int r = ij.second - ij.first;
    lo = first ? r : std::min(lo, r);
    hi = first ? r : std::max(hi, r);
    first = false;
  }
  std::ostringstream os;
  const int w = 6;
  os << "      ";
  for (int i = 0; i <= maxi; ++i) {
    std::string s = std::to_string(i);
    os << std::string(static_cast<std::size_t>(w) - s.size(), ' ') << s;
  }
  os << "\n";
  for (int r = lo; r <= hi; ++r) {
    std::string lab = std::to_string(r) + ":";
    os << std::string(6 - std::min<std::size_t>(6, lab.size()), ' ') << lab;
    for (int i = 0; i <= maxi; ++i) {
      long long b = at(i, i + r);
      std::string s = b == 0 ? "." : std::to_string(b);
      os << std::string(static_cast<std::size_t>(w) - std::min<std::size_t>(w, s.size()), ' ') << s;
    }
    os << "\n";
  }
  if (truncated_) os << "(truncated at homological degree " << bound_ << ")\n";
  return os.str();
}

BettiTable betti_table(const PresentedModule& M, int max_len) {
  return BettiTable(minimal_free_resolution(M, max_len));
}

ExtInt projective_dimension(const PresentedModule& M, int max_len) {
  return betti_table(M, max_len).projective_dimension();
}

ExtInt depth(const PresentedModule& M) {
  PresentedModule C = M.over_cover();
  if (C.is_zero()) return ExtInt::pos_inf();
  ExtInt pd = projective_dimension(C);
  return ExtInt(C.ring()->nvars()) - pd;
}

bool is_complex(const FreeResolution& F) {
  for (std::size_t k = 0; k + 1 < F.maps.size(); ++k) {
    PresentedModule target = PresentedModule::free(F.ring, F.maps[k].target());
    GradedMap c = F.maps[k].compose(F.maps[k + 1]);
    for (const auto& col : c.columns())
      if (!target.contains_relation(col)) return false;
  }
  return true;
}

}  // namespace creg
