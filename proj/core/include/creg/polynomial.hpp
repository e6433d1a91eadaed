#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "creg/field.hpp"
#include "creg/monomial.hpp"

namespace creg {

struct PolyTerm {
  Monomial mon;
  Scalar coef;
  bool operator==(const PolyTerm&) const = default;
};

/// A multivariate polynomial over GF(p). Terms are kept strictly descending
/// in grevlex with no zero coefficients, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(PrimeField field) : field_(field) {}

  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(PrimeField field, std::vector<PolyTerm> terms);
  static Polynomial constant(PrimeField field, long long c);
  static Polynomial term(PrimeField field, const Monomial& m, Scalar c = 1);
  static Polynomial variable(PrimeField field, int index);

  const PrimeField& field() const { return field_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  const PolyTerm& leading() const { return terms_.front(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mon.degree(); }
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Scalar c) const;
  Polynomial times(const Monomial& m, Scalar c = 1) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
  }

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void check_field(const Polynomial& o) const;

  PrimeField field_;
  std::vector<PolyTerm> terms_;
};

/// Prints with variables named x0, x1, ...; meant for diagnostics.
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace creg
