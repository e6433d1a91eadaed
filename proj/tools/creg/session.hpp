#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "creg/complex.hpp"
#include "dsl.hpp"

namespace creg::cli {

struct IdealValue {
  RingPtr ring;
  std::vector<Polynomial> gens;
};
struct SequenceValue {
  RingPtr ring;
  std::vector<Polynomial> forms;
};

using Value = std::variant<RingPtr, IdealValue, SequenceValue, PresentedModule, BoundedComplex>;

struct SessionOptions {
  /// Replaces the characteristic of every ring declared in the session.
  std::optional<std::uint32_t> field;
  int max_len = -1;
};

/// Bindings in declaration order; names are never rebound.
class Session {
 public:
  static Session parse(std::string_view src, const SessionOptions& opts = {});

  const Program& program() const { return program_; }
  const std::vector<std::string>& order() const { return order_; }
  bool has(const std::string& name) const { return values_.count(name) != 0; }
  const Value& get(const std::string& name) const;
  /// The ring of the most recent ring declaration.
  const RingPtr& current_ring() const;

  /// A module, a ring (as its rank one free module) or a one-term complex.
  PresentedModule module(const std::string& name) const;
  /// A complex, or a module placed in degree 0.
  BoundedComplex complex(const std::string& name) const;
  /// Polynomial text over `ring`, allowing sequence and ideal names too.
  std::vector<Polynomial> forms(const std::string& text, const RingPtr& ring) const;

 private:
  Program program_;
  SessionOptions opts_;
  std::map<std::string, Value> values_;
  std::vector<std::string> order_;
  RingPtr current_;

  void elaborate(const Statement& s);
  RingPtr ring_expr(const Expr& e) const;
  Polynomial poly(const Expr& e, const RingPtr& R) const;
  std::vector<Polynomial> poly_list(const std::vector<ExprPtr>& es, const RingPtr& R, bool homogeneous) const;
  PresentedModule module_expr(const Expr& e) const;
  BoundedComplex complex_expr(const Expr& e) const;
  long long integer(const Expr& e) const;
  const Value* lookup(const Expr& e) const;
  const RingPtr& need_ring(Span at) const;
};

const char* kind_name(const Value& v);

}  // namespace creg::cli
