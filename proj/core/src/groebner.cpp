#include "creg/groebner.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "creg/error.hpp"

namespace creg {

namespace {

// out = a[pos..] - c * m * g, all sorted in `order`.
void subtract_multiple(const std::vector<Term>& a, std::size_t pos, Scalar c, const Monomial& m,
                       const std::vector<Term>& g, const ModuleOrder& order, const PrimeField& F,
                       std::vector<Term>& out) {
  out.clear();
  out.reserve(a.size() - pos + g.size());
  const Scalar nc = F.neg(c);
  std::size_t i = pos, j = 0;
  while (i < a.size() && j < g.size()) {
    Monomial gm = g[j].mon * m;
    int cmp = order.compare(a[i].mon, a[i].comp, gm, g[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, g[j].comp, F.mul(g[j].coef, nc)});
      ++j;
    } else {
      Scalar s = F.add(a[i].coef, F.mul(g[j].coef, nc));
      if (s != 0) out.push_back(Term{a[i].mon, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < g.size(); ++j) out.push_back(Term{g[j].mon * m, g[j].comp, F.mul(g[j].coef, nc)});
}

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int degree;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

}  // namespace

GroebnerBasis GroebnerBasis::from_elements(PrimeField field, GradedFreeModule free,
                                           ModuleOrder order, std::vector<Vec> elements) {
  GroebnerBasis g;
  g.field_ = field;
  g.free_ = std::move(free);
  g.order_ = std::move(order);
  for (auto& e : elements) {
    if (e.is_zero()) continue;
    make_monic(e, field);
    g.elements_.push_back(std::move(e));
  }
  g.index_elements();
  return g;
}

void GroebnerBasis::index_elements() {
  by_component_.assign(static_cast<std::size_t>(free_.rank()), {});
  for (std::size_t k = 0; k < elements_.size(); ++k)
    by_component_[static_cast<std::size_t>(elements_[k].leading().comp)].push_back(
        static_cast<int>(k));
}

int GroebnerBasis::find_divisor(const Monomial& m, int comp) const {
  for (int k : by_component_[static_cast<std::size_t>(comp)])
    if (elements_[static_cast<std::size_t>(k)].leading().mon.divides(m)) return k;
  return -1;
}

Vec GroebnerBasis::normal_form(Vec f) const {
  if (!order_.is_standard()) f = resort(std::move(f), order_, field_);
  std::vector<Term> cur = std::move(f.mutable_terms()), buf, result;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const Term& t = cur[pos];
    int k = find_divisor(t.mon, t.comp);
    if (k < 0) {
      result.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = elements_[static_cast<std::size_t>(k)];
    Monomial q = t.mon / g.leading().mon;
    subtract_multiple(cur, pos, t.coef, q, g.terms(), order_, field_, buf);
    std::swap(cur, buf);
    pos = 0;
  }
  return Vec(std::move(result));
}

Vec GroebnerBasis::reduce_recording(Vec f, std::vector<ReductionStep>& steps) const {
  std::vector<Term> cur = std::move(f.mutable_terms()), buf;
  while (!cur.empty()) {
    const Term& t = cur.front();
    int k = find_divisor(t.mon, t.comp);
    if (k < 0) break;
    const Vec& g = elements_[static_cast<std::size_t>(k)];
    Monomial q = t.mon / g.leading().mon;
    Scalar c = t.coef;
    steps.push_back({k, q, c});
    subtract_multiple(cur, 0, c, q, g.terms(), order_, field_, buf);
    std::swap(cur, buf);
  }
  return Vec(std::move(cur));
}

std::vector<Monomial> GroebnerBasis::leading_monomials(int comp) const {
  std::vector<Monomial> out;
  for (int k : by_component_[static_cast<std::size_t>(comp)])
    out.push_back(elements_[static_cast<std::size_t>(k)].leading().mon);
  return out;
}

bool GroebnerBasis::verify() const {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const Term& a = elements_[i].leading();
      const Term& b = elements_[j].leading();
      if (a.comp != b.comp) continue;
      Monomial l = Monomial::lcm(a.mon, b.mon);
      Vec s;
      add_multiple(s, 1, l / a.mon, elements_[i], order_, field_);
      add_multiple(s, field_.neg(1), l / b.mon, elements_[j], order_, field_);
      if (!normal_form(std::move(s)).is_zero()) return false;
    }
  }
  return true;
}

GroebnerResult buchberger(PrimeField field, const GradedFreeModule& free, const ModuleOrder& order,
                          std::vector<GroebnerInput> inputs) {
  const auto& tw = free.twists;
  std::vector<int> input_order;
  std::vector<int> input_degree(inputs.size(), 0);
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    Vec& v = inputs[k].vec;
    if (v.is_zero()) continue;
    if (!order.is_standard()) v = resort(std::move(v), order, field);
    if (v.max_component() >= free.rank())
      throw DomainError("Gröbner input outside the ambient free module");
    if (!v.is_homogeneous(tw)) throw DomainError("inhomogeneous Gröbner input");
    input_degree[k] = v.degree(tw);
    input_order.push_back(static_cast<int>(k));
  }
  std::stable_sort(input_order.begin(), input_order.end(), [&](int a, int b) {
    auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    if (input_degree[ua] != input_degree[ub]) return input_degree[ua] < input_degree[ub];
    return !inputs[ua].candidate && inputs[ub].candidate;
  });

  GroebnerResult result;
  GroebnerBasis& G = result.basis;
  G = GroebnerBasis::from_elements(field, free, order, {});
  std::vector<Pair> pairs;
  std::vector<int> degree;
  const bool rank_one = free.rank() == 1;

  auto add_element = [&](Vec h) {
    make_monic(h, field);
    const int hn = G.size();
    const Term& lh = h.leading();
    const int dh = h.degree(tw);
    std::vector<Pair> fresh;
    for (int i : G.by_component_[static_cast<std::size_t>(lh.comp)]) {
      const Monomial& li = G.elements_[static_cast<std::size_t>(i)].leading().mon;
      Monomial l = Monomial::lcm(li, lh.mon);
      fresh.push_back({i, hn, l, l.degree() + tw[static_cast<std::size_t>(lh.comp)]});
    }
    auto coprime = [&](const Pair& p) {
      return rank_one &&
             G.elements_[static_cast<std::size_t>(p.i)].leading().mon.coprime(lh.mon);
    };
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool keep = coprime(p);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + kept.size());
    for (const Pair& p : pairs) {
      const Term& li = G.elements_[static_cast<std::size_t>(p.i)].leading();
      if (li.comp == lh.comp && lh.mon.divides(p.lcm)) {
        const Monomial& mi = li.mon;
        const Monomial& mj = G.elements_[static_cast<std::size_t>(p.j)].leading().mon;
        if (!(Monomial::lcm(mi, lh.mon) == p.lcm) && !(Monomial::lcm(mj, lh.mon) == p.lcm)) continue;
      }
      next.push_back(p);
    }
    for (const Pair& p : kept)
      if (!coprime(p)) next.push_back(p);
    pairs = std::move(next);
    G.elements_.push_back(std::move(h));
    G.by_component_[static_cast<std::size_t>(lh.comp)].push_back(hn);
    degree.push_back(dh);
  };

  auto top_reduce = [&](Vec f) {
    std::vector<ReductionStep> steps;
    return G.reduce_recording(std::move(f), steps);
  };

  std::size_t next_input = 0;
  while (next_input < input_order.size() || !pairs.empty()) {
    int d = next_input < input_order.size()
                ? input_degree[static_cast<std::size_t>(input_order[next_input])]
                : std::numeric_limits<int>::max();
    for (const Pair& p : pairs) d = std::min(d, p.degree);
    while (true) {
      auto best = pairs.end();
      for (auto it = pairs.begin(); it != pairs.end(); ++it)
        if (it->degree == d && (best == pairs.end() || pair_before(*it, *best))) best = it;
      if (best != pairs.end()) {
        Pair p = *best;
        pairs.erase(best);
        const Vec& gi = G.elements_[static_cast<std::size_t>(p.i)];
        const Vec& gj = G.elements_[static_cast<std::size_t>(p.j)];
        Vec s;
        add_multiple(s, 1, p.lcm / gi.leading().mon, gi, order, field);
        add_multiple(s, field.neg(1), p.lcm / gj.leading().mon, gj, order, field);
        Vec r = top_reduce(std::move(s));
        if (!r.is_zero()) add_element(std::move(r));
        continue;
      }
      if (next_input < input_order.size() &&
          input_degree[static_cast<std::size_t>(input_order[next_input])] == d) {
        const int k = input_order[next_input++];
        Vec r = top_reduce(inputs[static_cast<std::size_t>(k)].vec);
        if (!r.is_zero()) {
          add_element(std::move(r));
          if (inputs[static_cast<std::size_t>(k)].candidate) result.minimal.push_back(k);
        }
        continue;
      }
      break;
    }
  }
  std::sort(result.minimal.begin(), result.minimal.end());

  for (std::size_t k = 0; k < G.elements_.size(); ++k) {
    Vec& g = G.elements_[k];
    std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
    Vec nf = G.normal_form(Vec(std::move(tail)));
    std::vector<Term> t{g.leading()};
    t.insert(t.end(), nf.terms().begin(), nf.terms().end());
    g = Vec(std::move(t));
  }
  return result;
}

SyzygyFrame schreyer_syzygies(const GroebnerBasis& basis) {
  const auto& G = basis.elements();
  const PrimeField& F = basis.field();
  SyzygyFrame frame;
  std::vector<Monomial> lead_mons;
  std::vector<int> lead_comps;
  for (const auto& g : G) {
    frame.free.twists.push_back(g.degree(basis.free().twists));
    lead_mons.push_back(g.leading().mon);
    lead_comps.push_back(g.leading().comp);
  }
  frame.order = ModuleOrder::schreyer(basis.order(), lead_mons, lead_comps);

  const int s = basis.size();
  for (int i = 0; i < s; ++i) {
    std::vector<std::pair<int, Monomial>> cand;
    for (int j = i + 1; j < s; ++j) {
      if (lead_comps[static_cast<std::size_t>(j)] != lead_comps[static_cast<std::size_t>(i)])
        continue;
      Monomial l = Monomial::lcm(lead_mons[static_cast<std::size_t>(i)],
                                 lead_mons[static_cast<std::size_t>(j)]);
      cand.emplace_back(j, l / lead_mons[static_cast<std::size_t>(i)]);
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cand.size() && minimal; ++b) {
        if (a == b || !cand[b].second.divides(cand[a].second)) continue;
        if (!(cand[b].second == cand[a].second) || b < a) minimal = false;
      }
      if (!minimal) continue;
      const int j = cand[a].first;
      const Monomial& mi = cand[a].second;
      Monomial l = mi * lead_mons[static_cast<std::size_t>(i)];
      Monomial mj = l / lead_mons[static_cast<std::size_t>(j)];
      Vec spoly;
      add_multiple(spoly, 1, mi, G[static_cast<std::size_t>(i)], basis.order(), F);
      add_multiple(spoly, F.neg(1), mj, G[static_cast<std::size_t>(j)], basis.order(), F);
      std::vector<ReductionStep> steps;
      Vec rem = basis.reduce_recording(std::move(spoly), steps);
      if (!rem.is_zero()) throw Error("Schreyer syzygies requested for a non-Gröbner basis");
      std::vector<Term> terms{{mi, i, 1}, {mj, j, F.neg(1)}};
      for (const auto& st : steps) terms.push_back({st.mon, st.index, F.neg(st.coef)});
      Vec sigma = Vec::from_terms(std::move(terms), frame.order, F);
      frame.syzygies.push_back(std::move(sigma));
    }
  }
  return frame;
}

GradedMap syzygy_map(const GroebnerBasis& basis) {
  SyzygyFrame frame = schreyer_syzygies(basis);
  const ModuleOrder pot;
  std::vector<Vec> cols;
  std::vector<int> src;
  for (auto& v : frame.syzygies) {
    src.push_back(v.degree(frame.free.twists));
    cols.push_back(resort(std::move(v), pot, basis.field()));
  }
  return GradedMap(basis.field(), GradedFreeModule(std::move(src)), frame.free, std::move(cols));
}

}  // namespace creg
