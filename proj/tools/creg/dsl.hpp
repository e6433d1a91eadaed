#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace creg::cli {

/// 1-based; line 0 means no position.
struct Span {
  int line = 0, col = 0;
};

/// A parse or elaboration failure at a source position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(Span at, const std::string& what);
  Span at() const { return at_; }
  const std::string& message() const { return message_; }

 private:
  Span at_;
  std::string message_;
};

enum class Tok { Ident, Number, Punct, Arrow, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Span at;
};

/// `#` starts a comment running to the end of the line.
std::vector<Token> tokenize(std::string_view src);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// One node type for every expression: polynomials, ring and module
// constructors, matrices, degree lists. Statements decide how to read it.
struct Expr {
  enum class Kind { Number, Ident, Neg, Add, Sub, Mul, Div, Pow, Call, Index, Tuple, Matrix, Braces, Chain };
  Kind kind;
  std::string text;  // Number digits or Ident name
  std::vector<ExprPtr> args;
  std::vector<std::vector<ExprPtr>> rows;  // Matrix only
  Span at;

  /// Structural equality; spans are ignored.
  bool same(const Expr& o) const;
};

enum class Decl { Ring, Ideal, Sequence, Module, Complex };

struct Statement {
  Decl decl;
  std::string name;
  std::vector<ExprPtr> values;  // one for ring/module/complex, a list otherwise
  Span at;

  bool same(const Statement& o) const;
};

struct Program {
  std::vector<Statement> statements;
  bool same(const Program& o) const;
};

Program parse_program(std::string_view src);

std::string to_source(const Expr& e);
std::string to_source(const Statement& s);
std::string to_source(const Program& p);

const char* decl_keyword(Decl d);

}  // namespace creg::cli
