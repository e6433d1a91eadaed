#include "dsl.hpp"

#include <cctype>
#include <sstream>

namespace creg::cli {

namespace {

std::string located(Span at, const std::string& what) {
  if (at.line == 0) return what;
  return std::to_string(at.line) + ":" + std::to_string(at.col) + ": " + what;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Program program() {
    Program p;
    while (peek().kind != Tok::End) p.statements.push_back(statement());
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  bool is(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool accept(const char* p) {
    if (!is(p)) return false;
    ++pos_;
    return true;
  }
  Token expect(const char* p) {
    if (!is(p)) fail(std::string("expected '") + p + "'");
    return toks_[pos_++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    const Token& t = peek();
    throw SyntaxError(t.at, what + (t.kind == Tok::End ? " at end of input" : " before '" + t.text + "'"));
  }

  static ExprPtr node(Expr::Kind k, Span at, std::vector<ExprPtr> args = {}, std::string text = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->at = at;
    e->args = std::move(args);
    e->text = std::move(text);
    return e;
  }

  Statement statement() {
    const Token kw = peek();
    Statement s;
    s.at = kw.at;
    if (kw.kind != Tok::Ident) fail("expected a declaration");
    if (kw.text == "ring") s.decl = Decl::Ring;
    else if (kw.text == "ideal") s.decl = Decl::Ideal;
    else if (kw.text == "sequence") s.decl = Decl::Sequence;
    else if (kw.text == "module") s.decl = Decl::Module;
    else if (kw.text == "complex") s.decl = Decl::Complex;
    else fail("unknown declaration '" + kw.text + "'");
    ++pos_;
    if (peek().kind != Tok::Ident) fail("expected a name");
    s.name = toks_[pos_++].text;
    expect("=");
    if (s.decl == Decl::Ideal || s.decl == Decl::Sequence) {
      s.values.push_back(expr());
      while (accept(",")) s.values.push_back(expr());
    } else if (s.decl == Decl::Complex) {
      s.values.push_back(chain());
    } else {
      s.values.push_back(expr());
    }
    expect(";");
    return s;
  }

  ExprPtr chain() {
    ExprPtr first = expr();
    if (peek().kind != Tok::Arrow) return first;
    std::vector<ExprPtr> items{first};
    while (peek().kind == Tok::Arrow) {
      ++pos_;
      items.push_back(expr());
    }
    return node(Expr::Kind::Chain, first->at, std::move(items));
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (is("+") || is("-")) {
      const Token op = toks_[pos_++];
      lhs = node(op.text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, op.at, {lhs, term()});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    while (is("*") || is("/")) {
      const Token op = toks_[pos_++];
      lhs = node(op.text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, op.at, {lhs, unary()});
    }
    return lhs;
  }

  ExprPtr unary() {
    if (is("-")) {
      const Span at = toks_[pos_++].at;
      return node(Expr::Kind::Neg, at, {unary()});
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = postfix();
    if (!is("^")) return base;
    const Span at = toks_[pos_++].at;
    ExprPtr exp;
    if (is("{")) exp = braces();
    else if (peek().kind == Tok::Number) exp = number();
    else fail("expected an exponent");
    return node(Expr::Kind::Pow, at, {base, exp});
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (true) {
      if (is("(")) {
        const Span at = toks_[pos_++].at;
        std::vector<ExprPtr> args{e};
        if (!is(")")) {
          args.push_back(expr());
          while (accept(",")) args.push_back(expr());
        }
        expect(")");
        e = node(Expr::Kind::Call, at, std::move(args));
      } else if (is("[") && !is_matrix_start()) {
        const Span at = toks_[pos_++].at;
        std::vector<ExprPtr> args{e};
        if (!is("]")) {
          args.push_back(expr());
          while (accept(",")) args.push_back(expr());
        }
        expect("]");
        e = node(Expr::Kind::Index, at, std::move(args));
      } else {
        return e;
      }
    }
  }

  bool is_matrix_start() const { return is("[") && peek(1).kind == Tok::Punct && peek(1).text == "["; }

  ExprPtr number() {
    const Token t = toks_[pos_++];
    return node(Expr::Kind::Number, t.at, {}, t.text);
  }

  ExprPtr braces() {
    const Span at = expect("{").at;
    std::vector<ExprPtr> items;
    if (!is("}")) {
      items.push_back(expr());
      while (accept(",")) items.push_back(expr());
    }
    expect("}");
    return node(Expr::Kind::Braces, at, std::move(items));
  }

  ExprPtr primary() {
    const Token& t = peek();
    if (t.kind == Tok::Number) return number();
    if (t.kind == Tok::Ident) {
      ++pos_;
      return node(Expr::Kind::Ident, t.at, {}, t.text);
    }
    if (is("{")) return braces();
    if (is("(")) {
      const Span at = toks_[pos_++].at;
      std::vector<ExprPtr> items{expr()};
      while (accept(",")) items.push_back(expr());
      expect(")");
      if (items.size() == 1) return items[0];
      return node(Expr::Kind::Tuple, at, std::move(items));
    }
    if (is_matrix_start()) {
      const Span at = toks_[pos_++].at;
      auto m = std::make_shared<Expr>();
      m->kind = Expr::Kind::Matrix;
      m->at = at;
      do {
        expect("[");
        std::vector<ExprPtr> row{expr()};
        while (accept(",")) row.push_back(expr());
        expect("]");
        if (!m->rows.empty() && row.size() != m->rows.front().size())
          throw SyntaxError(at, "matrix rows have different lengths");
        m->rows.push_back(std::move(row));
      } while (accept(","));
      expect("]");
      return m;
    }
    fail("expected an expression");
  }
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Chain: return 0;
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, int min_prec) {
  std::string s = to_source(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string joined(const std::vector<ExprPtr>& xs, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < xs.size(); ++i) out += (i > from ? ", " : "") + to_source(*xs[i]);
  return out;
}

}  // namespace

SyntaxError::SyntaxError(Span at, const std::string& what)
    : std::runtime_error(located(at, what)), at_(at), message_(what) {}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  Span at{1, 1};
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++at.line;
      at.col = 1;
    } else {
      ++at.col;
    }
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
    } else if (ident_start(c)) {
      Token t{Tok::Ident, {}, at};
      while (i < src.size() && ident_char(src[i])) {
        t.text += src[i];
        advance();
      }
      out.push_back(t);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      Token t{Tok::Number, {}, at};
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        t.text += src[i];
        advance();
      }
      out.push_back(t);
    } else if (c == '<' && i + 1 < src.size() && src[i + 1] == '-') {
      out.push_back({Tok::Arrow, "<-", at});
      advance();
      advance();
    } else if (std::string_view("=;,+-*/^()[]{}").find(c) != std::string_view::npos) {
      out.push_back({Tok::Punct, std::string(1, c), at});
      advance();
    } else {
      throw SyntaxError(at, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", at});
  return out;
}

bool Expr::same(const Expr& o) const {
  if (kind != o.kind || text != o.text || args.size() != o.args.size() || rows.size() != o.rows.size())
    return false;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (!args[i]->same(*o.args[i])) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != o.rows[r].size()) return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (!rows[r][c]->same(*o.rows[r][c])) return false;
  }
  return true;
}

bool Statement::same(const Statement& o) const {
  if (decl != o.decl || name != o.name || values.size() != o.values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i]->same(*o.values[i])) return false;
  return true;
}

bool Program::same(const Program& o) const {
  if (statements.size() != o.statements.size()) return false;
  for (std::size_t i = 0; i < statements.size(); ++i)
    if (!statements[i].same(o.statements[i])) return false;
  return true;
}

Program parse_program(std::string_view src) { return Parser(tokenize(src)).program(); }

const char* decl_keyword(Decl d) {
  switch (d) {
    case Decl::Ring: return "ring";
    case Decl::Ideal: return "ideal";
    case Decl::Sequence: return "sequence";
    case Decl::Module: return "module";
    case Decl::Complex: return "complex";
  }
  return "";
}

std::string to_source(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::Number:
    case K::Ident: return e.text;
    case K::Neg: return "-" + wrap(*e.args[0], 3);
    // Left-associative: the right operand needs one level more.
    case K::Add: return wrap(*e.args[0], 1) + " + " + wrap(*e.args[1], 2);
    case K::Sub: return wrap(*e.args[0], 1) + " - " + wrap(*e.args[1], 2);
    case K::Mul: return wrap(*e.args[0], 2) + "*" + wrap(*e.args[1], 3);
    case K::Div: return wrap(*e.args[0], 2) + " / " + wrap(*e.args[1], 3);
    case K::Pow: return wrap(*e.args[0], 5) + "^" + to_source(*e.args[1]);
    case K::Call: return wrap(*e.args[0], 5) + "(" + joined(e.args, 1) + ")";
    case K::Index: return wrap(*e.args[0], 5) + "[" + joined(e.args, 1) + "]";
    case K::Tuple: return "(" + joined(e.args) + ")";
    case K::Braces: return "{" + joined(e.args) + "}";
    case K::Matrix: {
      std::string s = "[";
      for (std::size_t r = 0; r < e.rows.size(); ++r) s += (r ? ", [" : "[") + joined(e.rows[r]) + "]";
      return s + "]";
    }
    case K::Chain: {
      std::string s;
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? " <- " : "") + wrap(*e.args[i], 1);
      return s;
    }
  }
  return "";
}

std::string to_source(const Statement& s) {
  std::string out = std::string(decl_keyword(s.decl)) + " " + s.name + " = ";
  for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? ", " : "") + to_source(*s.values[i]);
  return out + ";";
}

std::string to_source(const Program& p) {
  std::ostringstream os;
  for (const auto& s : p.statements) os << to_source(s) << "\n";
  return os.str();
}

}  // namespace creg::cli
