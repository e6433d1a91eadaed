#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "creg/polynomial.hpp"
#include "creg/ring.hpp"

namespace creg {

/// Parses an infix polynomial such as "x^2 - 3*y*z + (x+y)^2" over the
/// given variable names. Throws DomainError with the offending position on
/// malformed input.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names,
                            const PrimeField& field);
Polynomial parse_polynomial(std::string_view text, const GradedRing& ring);
/// Comma separated list of polynomials.
std::vector<Polynomial> parse_polynomials(std::string_view text, const GradedRing& ring);

}  // namespace creg
