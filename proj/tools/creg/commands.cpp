#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "creg/error.hpp"
#include "creg/oracle.hpp"
#include "creg/theorems.hpp"
#include "session.hpp"

namespace creg::cli {

namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kSchema = "creg.report/1";

struct Flags {
  std::string format = "json";
  std::uint64_t seed = 0;
  int max_len = -1;
  std::optional<std::uint32_t> field;
  int max_degree = 6;
  std::string session_path;
};

struct Output {
  Json json;
  std::ostringstream text;
  int code = kOk;
};

Json ext_json(ExtInt v) {
  if (v.is_finite()) return Json{{"kind", "finite"}, {"value", v.value()}};
  return Json{{"kind", v.is_pos_inf() ? "+inf" : "-inf"}, {"value", nullptr}};
}

Json route_json(const RouteValue& r) {
  Json j = ext_json(r.value);
  j["witness"] = r.witness ? Json::array({r.witness->i, r.witness->j}) : Json(nullptr);
  return j;
}

std::string poly_text(const Polynomial& f, const RingPtr& R) { return f.to_string(R->names()); }

Json hilbert_json(const PresentedModule& M) {
  const HilbertSeries& h = M.hilbert_series();
  return Json{{"offset", h.offset()}, {"numerator", h.numerator()}, {"pole", h.pole()}, {"text", h.to_string()}};
}

Json module_summary(const PresentedModule& M) {
  return Json{{"hilbert", hilbert_json(M)},
              {"dim", ext_json(M.dimension())},
              {"reg", ext_json(reg_via_duality(M).value)}};
}

Json betti_json(const BettiTable& B) {
  Json entries = Json::array();
  for (const auto& [ij, b] : B.entries())
    if (b != 0) entries.push_back({ij.first, ij.second, b});
  return Json{{"entries", entries},
              {"truncated", B.truncated()},
              {"projective_dimension", ext_json(B.projective_dimension())},
              {"regularity", ext_json(B.regularity())}};
}

Json outcome_json(const CheckOutcome& c) {
  Json claims = Json::array();
  for (const auto& cl : c.claims)
    claims.push_back({{"statement", cl.statement},
                      {"lhs", ext_json(cl.lhs)},
                      {"relation", cl.equality ? "=" : "<="},
                      {"rhs", ext_json(cl.rhs)},
                      {"asserted", cl.asserted},
                      {"holds", cl.holds()}});
  Json inv = Json::object();
  for (const auto& [k, v] : c.invariants) inv[k] = v;
  static const char* names[] = {"equality", "inequality", "violated", "not asserted"};
  return Json{{"check", c.check},
              {"hypothesis", c.hypothesis},
              {"hypothesis_notes", c.hypothesis_notes},
              {"conclusion", names[static_cast<int>(c.conclusion())]},
              {"violated", c.violated()},
              {"claims", claims},
              {"invariants", inv},
              {"seed", c.seed ? Json(*c.seed) : Json(nullptr)}};
}

bool is_complex_binding(const Session& s, const std::string& name) {
  return std::holds_alternative<BoundedComplex>(s.get(name));
}

void cmd_reg(const Session& s, const std::string& name, const Flags& f, Output& o) {
  RegularityReport rep;
  std::optional<RouteValue> random;
  std::vector<Polynomial> forms;
  const bool cx = is_complex_binding(s, name);
  RingPtr R;
  if (cx) {
    const BoundedComplex L = s.complex(name);
    R = L.ring();
    rep = regularity_report(L, f.max_len);
  } else {
    const PresentedModule M = s.module(name);
    R = M.ring();
    rep = regularity_report(M, f.max_len);
    // Koszul route once more along a seeded saturated sequence.
    const PresentedModule MS = M.over_cover();
    forms = saturated_sequence(MS, {MS}, f.seed).forms;
    random = reg_via_koszul(MS, forms);
  }
  o.json["object"] = name;
  o.json["kind"] = cx ? "complex" : "module";
  o.json["cover"] = rep.cover;
  o.json["routes"] = Json{{"betti", route_json(rep.betti)},
                          {"ext", route_json(rep.ext)},
                          {"koszul", route_json(rep.koszul)},
                          {"duality", route_json(rep.duality)}};
  o.json["agree"] = rep.agree;
  if (random) {
    Json seq = Json::array();
    for (const auto& g : forms) seq.push_back(poly_text(g, R));
    o.json["saturated_koszul"] = Json{{"seed", f.seed}, {"sequence", seq}, {"value", route_json(*random)}};
    if (!(random->value == rep.betti.value)) o.code = kContradiction;
  }
  if (rep.relative)
    o.json["relative"] = Json{{"value", ext_json(rep.relative->value)},
                              {"exact", rep.relative->exact},
                              {"length", rep.relative->length}};
  else
    o.json["relative"] = nullptr;
  if (!rep.agree) o.code = kContradiction;
  o.text << "reg " << name << " over " << rep.cover << "\n"
         << "  betti   " << rep.betti.value << "\n  ext     " << rep.ext.value << "\n  koszul  " << rep.koszul.value
         << "\n  duality " << rep.duality.value << "\n";
  if (random) o.text << "  koszul along a saturated sequence (seed " << f.seed << ") " << random->value << "\n";
  if (rep.relative)
    o.text << "  reg_R   " << rep.relative->value << (rep.relative->exact ? "" : " (lower bound, truncated)") << "\n";
  o.text << (rep.agree ? "  routes agree\n" : "  ROUTES DISAGREE\n");
}

void cmd_betti(const Session& s, const std::string& name, bool cover, const Flags& f, Output& o) {
  PresentedModule M = s.module(name);
  if (cover) M = M.over_cover();
  BettiTable B(minimal_free_resolution(M, f.max_len));
  o.json["object"] = name;
  o.json["ring"] = M.ring()->to_string();
  o.json["betti"] = betti_json(B);
  o.text << B.to_text();
}

void cmd_hilbert(const Session& s, const std::string& name, const Flags& f, Output& o) {
  const PresentedModule M = s.module(name);
  const HilbertSeries& h = M.hilbert_series();
  std::vector<long long> values;
  for (int j = 0; j <= f.max_degree; ++j) values.push_back(h.coefficient(j));
  o.json["object"] = name;
  o.json["hilbert"] = hilbert_json(M);
  o.json["values"] = values;
  o.text << "HS(" << name << ") = " << h.to_string() << "\n  dims 0.." << f.max_degree << ":";
  for (auto v : values) o.text << " " << v;
  o.text << "\n";
}

void cmd_dim(const Session& s, const std::string& name, Output& o) {
  const PresentedModule M = s.module(name);
  o.json["object"] = name;
  o.json["dim"] = ext_json(M.dimension());
  o.json["finite_length"] = M.is_finite_length();
  o.text << "dim " << name << " = " << M.dimension() << "\n";
}

void cmd_depth(const Session& s, const std::string& name, Output& o) {
  const PresentedModule M = s.module(name);
  const ExtInt a = depth(M), b = depth_via_ext(M), c = depth_via_koszul(M);
  o.json["object"] = name;
  o.json["depth"] = Json{{"projective_dimension", ext_json(a)}, {"ext", ext_json(b)}, {"koszul", ext_json(c)}};
  o.json["agree"] = a == b && b == c;
  if (!(a == b && b == c)) o.code = kContradiction;
  o.text << "depth " << name << " = " << a << " (n - pd), " << b << " (Ext), " << c << " (Koszul)\n";
}

void cmd_derived(const Session& s, bool is_ext, const std::string& m, const std::string& n,
                 std::optional<int> index, const Flags& f, Output& o) {
  const PresentedModule M = s.module(m), N = s.module(n);
  int lo = 0, hi = 0;
  if (index) {
    lo = hi = *index;
  } else {
    FreeResolution F = minimal_free_resolution(M, f.max_len);
    hi = F.length();
    if (F.truncated) o.json["truncated_at"] = hi;
  }
  Json rows = Json::array();
  const char* label = is_ext ? "Ext^" : "Tor_";
  for (int i = lo; i <= hi; ++i) {
    const PresentedModule T = is_ext ? ext(M, N, i, f.max_len) : tor(M, N, i, f.max_len);
    Json row = module_summary(T);
    row["index"] = i;
    rows.push_back(row);
    o.text << label << i << "(" << m << ", " << n << "): HS = " << T.hilbert_series().to_string()
           << ", dim " << T.dimension() << ", reg " << reg_via_duality(T).value << "\n";
  }
  o.json[is_ext ? "ext" : "tor"] = rows;
}

void cmd_koszul(const Session& s, const std::string& seq, const std::string& name, Output& o) {
  const bool cx = is_complex_binding(s, name);
  const BoundedComplex L = s.complex(name);
  const auto forms = s.forms(seq, L.ring());
  const BoundedComplex K = koszul_complex(forms, L);
  Json hs = Json::array();
  for (int i = K.lo(); i <= K.hi(); ++i) {
    const PresentedModule H = homology(K, i);
    Json row = module_summary(H);
    row["index"] = i;
    row["finite_length"] = H.is_finite_length();
    hs.push_back(row);
    o.text << "H_" << i << ": HS = " << H.hilbert_series().to_string() << ", dim " << H.dimension() << "\n";
  }
  o.json["object"] = name;
  o.json["homology"] = hs;
  try {
    const RouteValue r = cx ? reg_via_koszul(L, forms) : reg_via_koszul(s.module(name), forms);
    o.json["kreg"] = route_json(r);
    o.json["hypothesis"] = Json{{"holds", true}};
    o.text << "kreg = " << r.value << "\n";
  } catch (const HypothesisError& e) {
    o.json["kreg"] = nullptr;
    o.json["hypothesis"] = Json{{"holds", false}, {"index", e.index()}, {"message", e.what()}};
    o.text << "hypothesis fails: " << e.what() << "\n";
  }
}

struct CheckArgs {
  std::string kind;
  std::vector<std::string> modules;
  std::string complex, form, ideal, extra = "u";
};

void cmd_check(const Session& s, const CheckArgs& a, const Flags& f, Output& o) {
  auto need_modules = [&](std::size_t k) {
    if (a.modules.size() < k)
      throw SyntaxError({}, "check " + a.kind + " needs " + std::to_string(k) + " --module arguments");
    std::vector<PresentedModule> ms;
    for (const auto& m : a.modules) ms.push_back(s.module(m));
    return ms;
  };
  auto need = [&](const std::string& v, const char* flag) {
    if (v.empty()) throw SyntaxError({}, "check " + a.kind + " needs " + flag);
    return v;
  };
  auto one_form = [&](const RingPtr& R) {
    auto fs = s.forms(need(a.form, "--form"), R);
    if (fs.size() != 1) throw SyntaxError({}, "--form must be a single form");
    return fs[0];
  };
  CheckOutcome c;
  if (a.kind == "ab") {
    auto ms = need_modules(2);
    c = check_ab_formula(ms[0], ms[1], f.max_len);
  } else if (a.kind == "cmd1") {
    c = check_thm_cmd1(s.complex(need(a.complex, "--complex")));
  } else if (a.kind == "dim1") {
    c = check_thm_dim1(s.complex(need(a.complex, "--complex")));
  } else if (a.kind == "tensor") {
    c = check_cor_tensor(need_modules(2), f.max_len);
  } else if (a.kind == "hom") {
    auto ms = need_modules(2);
    c = check_cor_hom(ms[0], ms[1], f.max_len);
  } else if (a.kind == "hom1") {
    auto ms = need_modules(1);
    c = check_hom_dim1(s.forms(need(a.ideal, "--ideal"), ms[0].ring()), ms[0], f.max_len);
  } else if (a.kind == "filter") {
    auto ms = need_modules(1);
    c = check_filter_regular_formula(ms[0], one_form(ms[0].ring()));
  } else if (a.kind == "ring-indep") {
    auto ms = need_modules(1);
    c = check_ring_independence(ms[0], extend_cover(ms[0], a.extra));
  } else if (a.kind == "koszul-shift") {
    const BoundedComplex G = s.complex(need(a.complex, "--complex"));
    c = check_koszul_shift(G, one_form(G.ring()));
  } else if (a.kind == "bass") {
    auto ms = need_modules(2);
    c = check_bass_convolution(ms[0], ms[1], f.max_len);
  } else {
    throw SyntaxError({}, "unknown check '" + a.kind + "'");
  }
  o.json["outcome"] = outcome_json(c);
  o.text << c.to_text();
  if (c.violated()) o.code = kContradiction;
}

ExtInt ideal_reg(const RingPtr& S, const std::vector<Polynomial>& gens) {
  BettiTable B(minimal_free_resolution(PresentedModule::cyclic(S, gens)));
  ExtInt r = ExtInt::neg_inf();
  for (const auto& [ij, b] : B.entries())
    if (ij.first >= 1 && b != 0) r = max(r, ExtInt(ij.second - ij.first + 1));
  return r;
}

std::string scroll_session(const NilpotentScroll& fam) {
  const auto& names = fam.ring->names();
  std::ostringstream os;
  os << "ring S = GF(" << fam.ring->field().characteristic() << ")[";
  for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  os << "];\nideal I = ";
  for (std::size_t i = 0; i < fam.ideal.size(); ++i) os << (i ? ", " : "") << poly_text(fam.ideal[i], fam.ring);
  os << ";\nsequence z = " << poly_text(fam.z, fam.ring) << ";\nideal J = I, z;\n";
  os << "ring T = S / I;\nmodule M = T;\nmodule Q = S / J;\n";
  return os.str();
}

void cmd_family(const std::string& which, int n, bool emit, const Flags& f, std::ostream& out, Output& o) {
  if (which != "nilpotent-scroll") throw SyntaxError({}, "unknown family '" + which + "'");
  const NilpotentScroll fam = nilpotent_scroll_family(n, f.field.value_or(PrimeField::kDefaultPrime));
  const std::string session = scroll_session(fam);
  if (emit) {
    out << session;
    o.code = -1;
    return;
  }
  auto with_z = fam.ideal;
  with_z.push_back(fam.z);
  const ExtInt a = ideal_reg(fam.ring, fam.ideal), b = ideal_reg(fam.ring, with_z);
  o.json["family"] = which;
  o.json["n"] = n;
  o.json["session"] = session;
  o.json["reg_I"] = ext_json(a);
  o.json["reg_I_plus_z"] = ext_json(b);
  o.text << session << "reg I = " << a << "\nreg(I + (z)) = " << b << "\n";
}

void cmd_oracle(const Session& s, const std::string& name, const Flags& f, Output& o) {
  const PresentedModule M = s.module(name);
  const PresentedModule MS = M.over_cover();
  const int D = f.max_degree, cap = std::max(D, kDefaultOracleCap);
  BettiTable B(minimal_free_resolution(MS));
  Json hf = Json::array(), betti = Json::array();
  int mismatches = 0;
  for (int j = 0; j <= D; ++j) {
    const long long e = M.hilbert_series().coefficient(j), w = graded_piece_dim(M, j, cap);
    mismatches += e != w;
    hf.push_back({{"degree", j}, {"engine", e}, {"oracle", w}});
  }
  for (int i = 0; i <= MS.ring()->nvars(); ++i)
    for (int j = 0; j <= D; ++j) {
      const long long e = B.at(i, j), w = oracle_koszul_betti(MS, i, j, cap);
      mismatches += e != w;
      if (e != 0 || w != 0) betti.push_back({{"i", i}, {"j", j}, {"engine", e}, {"oracle", w}});
    }
  o.json["object"] = name;
  o.json["max_degree"] = D;
  o.json["hilbert_function"] = hf;
  o.json["betti"] = betti;
  o.json["mismatches"] = mismatches;
  o.text << "oracle comparison up to degree " << D << ": " << mismatches << " mismatches\n";
  if (mismatches) o.code = kContradiction;
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"creg: Castelnuovo-Mumford regularity of graded modules and complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  std::uint32_t field = 0;
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", f.seed, "Seed for random linear forms");
  app.add_option("--max-len", f.max_len, "Length bound for resolutions over quotient rings");
  app.add_option("--field", field, "Characteristic replacing the one in the session");
  app.add_option("--max-degree", f.max_degree, "Largest internal degree for oracle and Hilbert listings");
  app.add_option("-s,--session", f.session_path, "Session file; '-' or omitted reads stdin");

  std::string name, name2, seq, family;
  std::optional<int> index;
  bool cover = false, emit = false;
  int n = 2;
  CheckArgs check;

  auto reg = app.add_subcommand("reg", "Regularity by every route");
  reg->add_option("name", name)->required();
  auto betti = app.add_subcommand("betti", "Graded Betti table");
  betti->add_option("name", name)->required();
  betti->add_flag("--cover", cover, "Resolve over the polynomial cover");
  auto hilbert = app.add_subcommand("hilbert", "Hilbert series");
  hilbert->add_option("name", name)->required();
  auto dim = app.add_subcommand("dim", "Krull dimension");
  dim->add_option("name", name)->required();
  auto dep = app.add_subcommand("depth", "Depth by three formulas");
  dep->add_option("name", name)->required();
  auto tor_cmd = app.add_subcommand("tor", "Tor modules");
  auto ext_cmd = app.add_subcommand("ext", "Ext modules");
  for (auto* c : {tor_cmd, ext_cmd}) {
    c->add_option("M", name)->required();
    c->add_option("N", name2)->required();
    c->add_option("--index", index, "A single homological index");
  }
  auto kos = app.add_subcommand("koszul", "Koszul homology and kreg");
  kos->add_option("sequence", seq, "Sequence name or comma separated forms")->required();
  kos->add_option("name", name)->required();
  auto chk = app.add_subcommand("check", "Check a theorem on an instance");
  chk->add_option("kind", check.kind, "ab, cmd1, dim1, tensor, hom, hom1, filter, ring-indep, koszul-shift, bass")
      ->required();
  chk->add_option("--module", check.modules);
  chk->add_option("--complex", check.complex);
  chk->add_option("--form", check.form);
  chk->add_option("--ideal", check.ideal);
  chk->add_option("--extra", check.extra, "Name of the added variable for ring-indep");
  auto fam = app.add_subcommand("family", "Built-in example families");
  fam->add_option("which", family)->required();
  fam->add_option("--n", n)->check(CLI::Range(2, 13));
  fam->add_flag("--emit-session", emit, "Print the family as a session file");
  auto orc = app.add_subcommand("oracle", "Compare against dense linear algebra");
  orc->add_option("name", name)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (field) f.field = field;

  std::string src_name = "<stdin>";
  std::optional<Session> session;
  auto load = [&]() -> const Session& {
    if (!session) {
      std::string text;
      if (f.session_path.empty() || f.session_path == "-") {
        text = read_all(in);
      } else {
        std::ifstream file(f.session_path);
        if (!file) throw SyntaxError({}, "cannot open " + f.session_path);
        src_name = f.session_path;
        text = read_all(file);
      }
      SessionOptions opts;
      opts.field = f.field;
      opts.max_len = f.max_len;
      session = Session::parse(text, opts);
    }
    return *session;
  };

  Output o;
  CLI::App* sub = app.get_subcommands().front();
  o.json["schema"] = kSchema;
  o.json["command"] = sub->get_name();
  try {
    if (sub == reg) cmd_reg(load(), name, f, o);
    else if (sub == betti) cmd_betti(load(), name, cover, f, o);
    else if (sub == hilbert) cmd_hilbert(load(), name, f, o);
    else if (sub == dim) cmd_dim(load(), name, o);
    else if (sub == dep) cmd_depth(load(), name, o);
    else if (sub == tor_cmd || sub == ext_cmd) cmd_derived(load(), sub == ext_cmd, name, name2, index, f, o);
    else if (sub == kos) cmd_koszul(load(), seq, name, o);
    else if (sub == chk) cmd_check(load(), check, f, o);
    else if (sub == fam) cmd_family(family, n, emit, f, out, o);
    else if (sub == orc) cmd_oracle(load(), name, f, o);
  } catch (const SyntaxError& e) {
    err << "error: " << (e.at().line > 0 ? src_name + ":" : std::string()) << e.what() << "\n";
    return kUsage;
  } catch (const creg::Error& e) {
    err << "error: " << e.what() << "\n";
    return kComputation;
  }
  if (o.code < 0) return kOk;
  if (f.format == "json") out << o.json.dump(2) << "\n";
  else out << o.text.str();
  return o.code;
}

}  // namespace creg::cli
