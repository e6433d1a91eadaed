#include "creg/poly_parse.hpp"

#include <cctype>

#include "creg/error.hpp"

namespace creg {

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, const std::vector<std::string>& names, const PrimeField& F)
      : s_(s), names_(names), F_(F) {}

  Polynomial parse_all() {
    Polynomial p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip();
    if (pos_ == s_.size()) return out;
    out.push_back(sum());
    while (accept(',')) out.push_back(sum());
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw DomainError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial sum() {
    Polynomial p(F_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!accept('+') && !first) {
        break;
      }
      Polynomial t = product();
      p = neg ? p - t : p + t;
      first = false;
    }
    return p;
  }

  Polynomial product() {
    Polynomial p = power();
    while (accept('*')) p = p * power();
    return p;
  }

  Polynomial power() {
    Polynomial b = atom();
    if (accept('^')) {
      skip();
      long long e = number();
      if (e < 0) fail("negative exponent");
      b = b.pow(static_cast<int>(e));
    }
    return b;
  }

  long long number() {
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (1LL << 40)) fail("number too large");
    }
    return v;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = sum();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(F_, number());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return Polynomial::variable(F_, static_cast<int>(i));
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::vector<std::string>& names_;
  const PrimeField& F_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const PrimeField& field) {
  return ExprParser(text, names, field).parse_all();
}

Polynomial parse_polynomial(std::string_view text, const GradedRing& ring) {
  return parse_polynomial(text, ring.names(), ring.field());
}

std::vector<Polynomial> parse_polynomials(std::string_view text, const GradedRing& ring) {
  return ExprParser(text, ring.names(), ring.field()).parse_list();
}

}  // namespace creg
