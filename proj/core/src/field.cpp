#include "creg/field.hpp"

#include <string>

#include "creg/error.hpp"

namespace creg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("field characteristic must be a prime below 2^31, got " +
                      std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const {
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(p_) + ")");
  long long t = 0, new_t = 1;
  long long r = p_, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

}  // namespace creg
