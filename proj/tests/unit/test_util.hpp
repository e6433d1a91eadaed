#pragma once

#include <string>
#include <vector>

#include "creg/module.hpp"
#include "creg/poly_parse.hpp"
#include "creg/ring.hpp"

namespace creg::test {

inline RingPtr poly_ring(std::vector<std::string> names, std::uint32_t p = PrimeField::kDefaultPrime) {
  return GradedRing::polynomial(PrimeField(p), std::move(names));
}

inline RingPtr quotient_ring(const RingPtr& S, const std::string& ideal) {
  return GradedRing::quotient(S, parse_polynomials(ideal, *S));
}

inline Polynomial P(const RingPtr& R, const std::string& s) { return parse_polynomial(s, *R); }

inline PresentedModule cyclic(const RingPtr& R, const std::string& ideal, int degree = 0) {
  return PresentedModule::cyclic(R, parse_polynomials(ideal, *R), degree);
}

inline PresentedModule ring_module(const RingPtr& R) {
  return PresentedModule::free(R, GradedFreeModule({0}));
}

/// The determinantal ring k[x,y,z,t]/(x^2, xz, xt - yz).
inline RingPtr determinantal_ring() {
  return quotient_ring(poly_ring({"x", "y", "z", "t"}), "x^2, x*z, x*t - y*z");
}

}  // namespace creg::test
