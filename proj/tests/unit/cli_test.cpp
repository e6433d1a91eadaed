#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "session.hpp"

using namespace creg;
using namespace creg::cli;

namespace {

const std::string kExamples = CREG_EXAMPLES_DIR;

struct Invocation {
  int code;
  std::string out, err;
};

Invocation run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string example(const std::string& name) { return kExamples + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

void expect_syntax_error(const std::string& src, const std::string& needle, int line) {
  try {
    Session::parse(src);
    FAIL() << "expected an error for: " << src;
  } catch (const SyntaxError& e) {
    EXPECT_NE(e.message().find(needle), std::string::npos) << e.what();
    EXPECT_EQ(e.at().line, line) << e.what();
  }
}

}  // namespace

TEST(Dsl, Bindings) {
  auto s = Session::parse("ring S = GF(32003)[x,y,z,t]; ideal I = x^2, x*z, x*t - y*z;");
  EXPECT_EQ(s.order(), (std::vector<std::string>{"S", "I"}));
  EXPECT_EQ(std::get<IdealValue>(s.get("I")).gens.size(), 3u);

  auto q = Session::parse("ring S = GF(32003)[x,y,z,t]; ideal I = x^2, x*z, x*t - y*z; ring R = S / I;");
  const RingPtr& R = std::get<RingPtr>(q.get("R"));
  EXPECT_FALSE(R->is_polynomial());
  EXPECT_EQ(R->ideal().size(), 3u);
  EXPECT_EQ(q.current_ring(), R);
}

TEST(Dsl, Errors) {
  expect_syntax_error("ring S = GF(7)[x,y];\nideal J = x^2 + y;", "inhomogeneous", 2);
  expect_syntax_error("ring S = GF(7)[x,y];\nideal J = x^2 + w^2;", "unknown identifier 'w'", 2);
  expect_syntax_error("ring S = GF(7)[x,y];\nring S = GF(7)[x];", "redefinition of 'S'", 2);
  expect_syntax_error("ring S = GF(7)[x,y];\nmodule M = residue(S, 1, 2);", "wrong number of arguments", 2);
  expect_syntax_error("ring S = GF(7)[x,y];\nideal J = x^2 y;", "expected ';'", 2);
  expect_syntax_error("ring S = GF(7)[x, x];", "duplicate variable", 1);
  expect_syntax_error("ring S = GF(7)[x,y];\ncomplex K = S <- [[x, y]] <- [[x], [y]];", "compose to zero", 2);
  expect_syntax_error("ideal I = x;", "no ring declared", 1);
}

TEST(Dsl, Columns) {
  try {
    Session::parse("ring S = GF(7)[x];\n  ideal I = x $ 2;");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.at().line, 2);
    EXPECT_EQ(e.at().col, 15);
  }
}

TEST(Dsl, RoundTrip) {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kExamples)) {
    if (entry.path().extension() != ".creg") continue;
    ++files;
    const Program a = parse_program(slurp(entry.path().string()));
    const std::string printed = to_source(a);
    const Program b = parse_program(printed);
    EXPECT_TRUE(a.same(b)) << entry.path();
    EXPECT_EQ(to_source(b), printed);
  }
  EXPECT_GE(files, 5);
  const Program tricky = parse_program(
      "sequence s = -x^2 - -y, (x + y)^3*-z, x - (y - z), -(x*y), (-x)^2;\n"
      "module M = (S / (x, y))(-1);\ncomplex C = S^{0, 1} <- [[x, y], [0, x]];");
  EXPECT_TRUE(parse_program(to_source(tricky)).same(tricky)) << to_source(tricky);
}

TEST(Dsl, Modules) {
  auto s = Session::parse(slurp(example("determinantal.creg")));
  EXPECT_EQ(s.module("C").dimension(), ExtInt(2));
  EXPECT_EQ(s.module("Rz").dimension(), ExtInt(2));
  auto k = Session::parse(slurp(example("koszul_complex.creg")));
  EXPECT_EQ(k.complex("K").hi(), 2);
  EXPECT_EQ(k.module("F").generators().twists, (std::vector<int>{0, 1}));
  auto c = Session::parse("ring S = GF(7)[x,y];\nmodule M = coker([[x, y]], {1});");
  EXPECT_EQ(c.module("M").generators().twists, (std::vector<int>{1}));
}

TEST(Cli, RegJson) {
  Invocation r = run_cli({"reg", "R", "--session", example("determinantal.creg")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "creg.report/1");
  for (const char* route : {"betti", "ext", "koszul", "duality"}) EXPECT_EQ(j["routes"][route]["value"], 1) << route;
  EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(Cli, CheckFilter) {
  Invocation r = run_cli({"check", "filter", "--module", "R", "--form", "z", "-s", example("determinantal.creg")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out)["outcome"];
  EXPECT_TRUE(j["hypothesis"].get<bool>());
  EXPECT_EQ(j["conclusion"], "equality");
  EXPECT_EQ(j["claims"][0]["lhs"]["value"], 1);
  EXPECT_EQ(j["claims"][0]["rhs"]["value"], 1);
}

TEST(Cli, FamilyThenReg) {
  Invocation f = run_cli({"family", "nilpotent-scroll", "--n", "3"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(nlohmann::json::parse(f.out)["reg_I_plus_z"]["value"], 4);
  Invocation session = run_cli({"family", "nilpotent-scroll", "--n", "3", "--emit-session"});
  Invocation r = run_cli({"reg", "Q"}, session.out);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["routes"]["betti"]["value"], 3);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"--seed", "42", "reg", "M", "-s", example("nilpotent_scroll.creg")};
  Invocation a = run_cli(args), b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Invocation c = run_cli({"--seed", "43", "reg", "M", "-s", example("nilpotent_scroll.creg")});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"frobnicate"}).code, kUsage);
  EXPECT_EQ(run_cli({"reg", "R"}, "ring S = GF(7)[x];\nideal I = x +;").code, kUsage);
  Invocation unknown = run_cli({"reg", "Nope", "-s", example("tor_hypersurface.creg")});
  EXPECT_EQ(unknown.code, kUsage);
  EXPECT_NE(unknown.err.find("unknown identifier"), std::string::npos);
  Invocation limit = run_cli({"--max-len", "2", "ext", "k", "k", "--index", "3", "-s", example("koszul_algebra.creg")});
  EXPECT_EQ(limit.code, kComputation) << limit.out;
  Invocation bad = run_cli({"reg", "R"}, "ring S = GF(7)[x,y];\nideal J = x^2 + y;");
  EXPECT_EQ(bad.code, kUsage);
  EXPECT_NE(bad.err.find("<stdin>:2:"), std::string::npos) << bad.err;
}

TEST(Cli, Commands) {
  const std::string det = example("determinantal.creg");
  Invocation k = run_cli({"koszul", "z", "R", "-s", det});
  ASSERT_EQ(k.code, 0) << k.err;
  auto kj = nlohmann::json::parse(k.out);
  EXPECT_FALSE(kj["hypothesis"]["holds"].get<bool>());
  EXPECT_EQ(kj["hypothesis"]["index"], 1);

  Invocation t = run_cli({"tor", "M", "N", "-s", example("tor_hypersurface.creg")});
  ASSERT_EQ(t.code, 0) << t.err;
  auto tj = nlohmann::json::parse(t.out)["tor"];
  ASSERT_EQ(tj.size(), 2u);
  EXPECT_EQ(tj[1]["hilbert"]["text"], "t^2");

  Invocation d = run_cli({"depth", "Rz", "-s", det});
  EXPECT_EQ(nlohmann::json::parse(d.out)["depth"]["ext"]["value"], 1);
  Invocation o = run_cli({"oracle", "R", "--max-degree", "5", "-s", det});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(nlohmann::json::parse(o.out)["mismatches"], 0);
  Invocation h = run_cli({"--format", "text", "hilbert", "R", "-s", det});
  EXPECT_NE(h.out.find("1 4 7 10"), std::string::npos) << h.out;
  Invocation inf = run_cli({"dim", "E", "-s", example("polynomial_ext.creg")});
  EXPECT_EQ(nlohmann::json::parse(inf.out)["dim"]["value"], 0);
  Invocation b = run_cli({"betti", "k", "--max-len", "3", "-s", example("koszul_algebra.creg")});
  auto bj = nlohmann::json::parse(b.out)["betti"];
  EXPECT_TRUE(bj["truncated"].get<bool>());
  EXPECT_EQ(bj["projective_dimension"]["kind"], "+inf");
  EXPECT_TRUE(bj["projective_dimension"]["value"].is_null());
}
