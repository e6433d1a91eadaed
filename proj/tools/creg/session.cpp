#include "session.hpp"

#include <set>

#include "creg/error.hpp"

namespace creg::cli {

namespace {

using K = Expr::Kind;

[[noreturn]] void fail(Span at, const std::string& what) { throw SyntaxError(at, what); }

void arity(const Expr& call, const std::string& name, std::size_t lo, std::size_t hi) {
  const std::size_t n = call.args.size() - 1;
  if (n < lo || n > hi)
    fail(call.at, "wrong number of arguments to " + name + ": expected " + std::to_string(lo) +
                      (hi != lo ? " to " + std::to_string(hi) : "") + ", got " + std::to_string(n));
}

const std::string* callee_name(const Expr& call) {
  return call.args[0]->kind == K::Ident ? &call.args[0]->text : nullptr;
}

const std::set<std::string> kModuleFunctions{"coker", "residue", "colon", "ext", "tor", "homology"};
const std::set<std::string> kComplexFunctions{"koszul", "resolution", "tensor", "hom", "suspend"};

}  // namespace

const char* kind_name(const Value& v) {
  static const char* names[] = {"ring", "ideal", "sequence", "module", "complex"};
  return names[v.index()];
}

Session Session::parse(std::string_view src, const SessionOptions& opts) {
  Session s;
  s.opts_ = opts;
  s.program_ = parse_program(src);
  for (const auto& st : s.program_.statements) s.elaborate(st);
  return s;
}

const Value& Session::get(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw SyntaxError({}, "unknown identifier '" + name + "'");
  return it->second;
}

const RingPtr& Session::current_ring() const { return need_ring({}); }

const RingPtr& Session::need_ring(Span at) const {
  if (!current_) fail(at, "no ring declared yet");
  return current_;
}

PresentedModule Session::module(const std::string& name) const {
  const Value& v = get(name);
  if (auto r = std::get_if<RingPtr>(&v)) return PresentedModule::free(*r, GradedFreeModule({0}));
  if (auto m = std::get_if<PresentedModule>(&v)) return *m;
  if (auto c = std::get_if<BoundedComplex>(&v)) {
    auto t = c->trimmed();
    if (t.lo() == t.hi() && t.lo() == 0) return t.term(0);
  }
  throw SyntaxError({}, "'" + name + "' is a " + kind_name(v) + ", not a module");
}

BoundedComplex Session::complex(const std::string& name) const {
  const Value& v = get(name);
  if (auto c = std::get_if<BoundedComplex>(&v)) return *c;
  return BoundedComplex::from_module(module(name));
}

std::vector<Polynomial> Session::forms(const std::string& text, const RingPtr& ring) const {
  Program p = parse_program("sequence _ = " + text + ";");
  return poly_list(p.statements.at(0).values, ring, true);
}

void Session::elaborate(const Statement& s) {
  if (has(s.name)) fail(s.at, "redefinition of '" + s.name + "'");
  Value v;
  try {
    switch (s.decl) {
      case Decl::Ring:
        current_ = ring_expr(*s.values[0]);
        v = current_;
        break;
      case Decl::Ideal:
        v = IdealValue{need_ring(s.at), poly_list(s.values, need_ring(s.at), true)};
        break;
      case Decl::Sequence:
        v = SequenceValue{need_ring(s.at), poly_list(s.values, need_ring(s.at), true)};
        break;
      case Decl::Module:
        v = module_expr(*s.values[0]);
        break;
      case Decl::Complex:
        v = complex_expr(*s.values[0]);
        break;
    }
  } catch (const creg::Error& e) {
    fail(s.at, e.what());
  }
  values_.emplace(s.name, std::move(v));
  order_.push_back(s.name);
}

const Value* Session::lookup(const Expr& e) const {
  if (e.kind != K::Ident) return nullptr;
  auto it = values_.find(e.text);
  return it == values_.end() ? nullptr : &it->second;
}

long long Session::integer(const Expr& e) const {
  if (e.kind == K::Number) return std::stoll(e.text);
  if (e.kind == K::Neg && e.args[0]->kind == K::Number) return -std::stoll(e.args[0]->text);
  fail(e.at, "expected an integer");
}

RingPtr Session::ring_expr(const Expr& e) const {
  if (const Value* v = lookup(e)) {
    if (auto r = std::get_if<RingPtr>(v)) return *r;
    fail(e.at, "'" + e.text + "' is a " + kind_name(*v) + ", not a ring");
  }
  if (e.kind == K::Index) {
    const Expr& f = *e.args[0];
    if (f.kind != K::Call || f.args[0]->kind != K::Ident || f.args[0]->text != "GF")
      fail(e.at, "expected GF(p)[variables]");
    arity(f, "GF", 1, 1);
    long long p = integer(*f.args[1]);
    if (opts_.field) p = *opts_.field;
    if (p < 2 || p >= (1LL << 31)) fail(f.at, "field characteristic out of range");
    std::vector<std::string> names;
    for (std::size_t i = 1; i < e.args.size(); ++i) {
      const Expr& x = *e.args[i];
      if (x.kind != K::Ident) fail(x.at, "expected a variable name");
      for (const auto& n : names)
        if (n == x.text) fail(x.at, "duplicate variable '" + x.text + "'");
      names.push_back(x.text);
    }
    if (names.empty()) fail(e.at, "a ring needs at least one variable");
    return GradedRing::polynomial(PrimeField(static_cast<std::uint32_t>(p)), names);
  }
  if (e.kind == K::Div) {
    RingPtr base = ring_expr(*e.args[0]);
    RingPtr S = base->cover();
    std::vector<Polynomial> gens = base->ideal();
    const Expr& rhs = *e.args[1];
    auto more = poly_list(rhs.kind == K::Tuple ? rhs.args : std::vector<ExprPtr>{e.args[1]}, S, true);
    gens.insert(gens.end(), more.begin(), more.end());
    return GradedRing::quotient(S, gens);
  }
  fail(e.at, "expected a ring");
}

Polynomial Session::poly(const Expr& e, const RingPtr& R) const {
  const PrimeField& F = R->field();
  switch (e.kind) {
    case K::Number: return Polynomial::constant(F, static_cast<long long>(std::stoull(e.text) % F.characteristic()));
    case K::Ident: {
      const auto& names = R->names();
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == e.text) return R->variable(static_cast<int>(i));
      if (const Value* v = lookup(e)) {
        if (auto s = std::get_if<SequenceValue>(v); s && s->forms.size() == 1) return s->forms[0];
        fail(e.at, "'" + e.text + "' is a " + kind_name(*v) + ", not a polynomial");
      }
      fail(e.at, "unknown identifier '" + e.text + "'");
    }
    case K::Neg: return -poly(*e.args[0], R);
    case K::Add: return poly(*e.args[0], R) + poly(*e.args[1], R);
    case K::Sub: return poly(*e.args[0], R) - poly(*e.args[1], R);
    case K::Mul: return poly(*e.args[0], R) * poly(*e.args[1], R);
    case K::Pow: {
      if (e.args[1]->kind != K::Number) fail(e.args[1]->at, "expected an exponent");
      const long long k = std::stoll(e.args[1]->text);
      if (k > 1000) fail(e.args[1]->at, "exponent too large");
      return poly(*e.args[0], R).pow(static_cast<int>(k));
    }
    case K::Div: fail(e.at, "division is not allowed in a polynomial");
    default: fail(e.at, "expected a polynomial");
  }
}

std::vector<Polynomial> Session::poly_list(const std::vector<ExprPtr>& es, const RingPtr& R,
                                           bool homogeneous) const {
  std::vector<Polynomial> out;
  for (const auto& e : es) {
    if (const Value* v = lookup(*e)) {
      const std::vector<Polynomial>* gens = nullptr;
      if (auto i = std::get_if<IdealValue>(v)) gens = &i->gens;
      if (auto s = std::get_if<SequenceValue>(v)) gens = &s->forms;
      if (gens) {
        out.insert(out.end(), gens->begin(), gens->end());
        continue;
      }
    }
    Polynomial f = poly(*e, R);
    if (homogeneous && !f.is_homogeneous()) fail(e->at, "inhomogeneous generator " + to_source(*e));
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

PresentedModule Session::module_expr(const Expr& e) const {
  if (const Value* v = lookup(e)) {
    if (auto r = std::get_if<RingPtr>(v)) return PresentedModule::free(*r, GradedFreeModule({0}));
    if (auto m = std::get_if<PresentedModule>(v)) return *m;
    fail(e.at, "'" + e.text + "' is a " + kind_name(*v) + ", not a module");
  }
  switch (e.kind) {
    case K::Ident: fail(e.at, "unknown identifier '" + e.text + "'");
    case K::Pow: {
      RingPtr R = ring_expr(*e.args[0]);
      const Expr& x = *e.args[1];
      std::vector<int> degs;
      if (x.kind == K::Number) degs.assign(static_cast<std::size_t>(integer(x)), 0);
      else
        for (const auto& d : x.args) degs.push_back(static_cast<int>(integer(*d)));
      return PresentedModule::free(R, GradedFreeModule(degs));
    }
    case K::Div: {
      PresentedModule M = module_expr(*e.args[0]);
      const Expr& rhs = *e.args[1];
      auto gens = poly_list(rhs.kind == K::Tuple ? rhs.args : std::vector<ExprPtr>{e.args[1]}, M.ring(), true);
      for (const auto& f : gens) M = quotient_by_element(M, f);
      return M;
    }
    case K::Call: {
      const std::string* name = callee_name(e);
      if (!name || !kModuleFunctions.count(*name)) {
        arity(e, "a twist", 1, 1);
        return module_expr(*e.args[0]).shifted(static_cast<int>(integer(*e.args[1])));
      }
      const auto& a = e.args;
      if (*name == "coker") {
        arity(e, *name, 1, 2);
        const RingPtr& R = need_ring(e.at);
        const Expr& m = *a[1];
        if (m.kind != K::Matrix) fail(m.at, "coker expects a matrix");
        std::vector<int> rowdeg(m.rows.size(), 0);
        if (a.size() == 3) {
          if (a[2]->kind != K::Braces || a[2]->args.size() != rowdeg.size())
            fail(a[2]->at, "expected one degree per row");
          for (std::size_t i = 0; i < rowdeg.size(); ++i) rowdeg[i] = static_cast<int>(integer(*a[2]->args[i]));
        }
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& row : m.rows) {
          rows.emplace_back();
          for (const auto& x : row) rows.back().push_back(poly(*x, R));
        }
        std::vector<int> coldeg;
        for (std::size_t c = 0; c < m.rows.front().size(); ++c) {
          std::optional<int> d;
          for (std::size_t r = 0; r < rows.size() && !d; ++r)
            if (!rows[r][c].is_zero()) d = rows[r][c].degree() + rowdeg[r];
          if (!d) fail(m.at, "column " + std::to_string(c + 1) + " is zero");
          coldeg.push_back(*d);
        }
        auto map = GradedMap::from_rows(R->field(), GradedFreeModule(coldeg), GradedFreeModule(rowdeg), rows);
        if (!map.is_homogeneous()) fail(m.at, "inhomogeneous matrix");
        return PresentedModule(R, map);
      }
      if (*name == "residue") {
        arity(e, *name, 1, 2);
        return PresentedModule::residue_field(ring_expr(*a[1]), a.size() == 3 ? static_cast<int>(integer(*a[2])) : 0);
      }
      if (*name == "colon") {
        arity(e, *name, 2, 2);
        PresentedModule M = module_expr(*a[1]);
        return colon_by_element(M, poly(*a[2], M.ring())).module;
      }
      if (*name == "homology") {
        arity(e, *name, 2, 2);
        return homology(complex_expr(*a[1]), static_cast<int>(integer(*a[2])));
      }
      arity(e, *name, 3, 3);
      PresentedModule M = module_expr(*a[1]), N = module_expr(*a[2]);
      const int i = static_cast<int>(integer(*a[3]));
      return *name == "ext" ? ext(M, N, i, opts_.max_len) : tor(M, N, i, opts_.max_len);
    }
    default: fail(e.at, "expected a module");
  }
}

BoundedComplex Session::complex_expr(const Expr& e) const {
  if (const Value* v = lookup(e))
    if (auto c = std::get_if<BoundedComplex>(v)) return *c;
  if (e.kind == K::Chain) {
    PresentedModule first = module_expr(*e.args[0]);
    const RingPtr& R = first.ring();
    std::vector<PresentedModule> terms{first};
    std::vector<GradedMap> diffs;
    GradedFreeModule target = first.generators();
    for (std::size_t k = 1; k < e.args.size(); ++k) {
      const Expr& m = *e.args[k];
      if (m.kind != K::Matrix) fail(m.at, "expected a matrix in a chain");
      if (static_cast<int>(m.rows.size()) != target.rank())
        fail(m.at, "matrix has " + std::to_string(m.rows.size()) + " rows but the target has rank " +
                       std::to_string(target.rank()));
      std::vector<std::vector<Polynomial>> rows;
      for (const auto& row : m.rows) {
        rows.emplace_back();
        for (const auto& x : row) rows.back().push_back(poly(*x, R));
      }
      std::vector<int> coldeg;
      for (std::size_t c = 0; c < m.rows.front().size(); ++c) {
        std::optional<int> d;
        for (std::size_t r = 0; r < rows.size() && !d; ++r)
          if (!rows[r][c].is_zero()) d = rows[r][c].degree() + target.twists[r];
        if (!d) fail(m.at, "column " + std::to_string(c + 1) + " is zero");
        coldeg.push_back(*d);
      }
      GradedFreeModule source(coldeg);
      auto map = GradedMap::from_rows(R->field(), source, target, rows);
      if (!map.is_homogeneous()) fail(m.at, "inhomogeneous matrix");
      diffs.push_back(map);
      terms.push_back(PresentedModule::free(R, source));
      target = source;
    }
    BoundedComplex C(R, 0, terms, diffs);
    if (!C.is_complex()) fail(e.at, "consecutive maps do not compose to zero");
    return C;
  }
  if (e.kind == K::Call) {
    const std::string* name = callee_name(e);
    const auto& a = e.args;
    if (name && kComplexFunctions.count(*name)) {
      if (*name == "koszul") {
        arity(e, *name, 2, 2);
        const Value* target = lookup(*a[2]);
        const bool is_complex = target && std::holds_alternative<BoundedComplex>(*target);
        const RingPtr R = is_complex ? std::get<BoundedComplex>(*target).ring() : module_expr(*a[2]).ring();
        auto seq = poly_list(a[1]->kind == K::Tuple ? a[1]->args : std::vector<ExprPtr>{a[1]}, R, true);
        return is_complex ? koszul_complex(seq, std::get<BoundedComplex>(*target))
                          : koszul_complex(seq, module_expr(*a[2]));
      }
      if (*name == "resolution") {
        arity(e, *name, 1, 1);
        return BoundedComplex::from_resolution(minimal_free_resolution(module_expr(*a[1]), opts_.max_len));
      }
      if (*name == "suspend") {
        arity(e, *name, 2, 2);
        return complex_expr(*a[1]).suspended(static_cast<int>(integer(*a[2])));
      }
      arity(e, *name, 2, 2);
      BoundedComplex A = complex_expr(*a[1]), B = complex_expr(*a[2]);
      return *name == "tensor" ? tensor_complexes(A, B) : hom_complex(A, B);
    }
    if (name && !kModuleFunctions.count(*name)) {
      if (const Value* v = lookup(*a[0]); v && std::holds_alternative<BoundedComplex>(*v)) {
        arity(e, "a twist", 1, 1);
        return std::get<BoundedComplex>(*v).twisted(static_cast<int>(integer(*a[1])));
      }
    }
  }
  return BoundedComplex::from_module(module_expr(e));
}

}  // namespace creg::cli
