#include "oddcycles/modulus.hpp"

#include <string>
#include <thread>

#include "oddcycles/errors.hpp"
#include "oddcycles/parallel.hpp"

namespace oddcycles {

OddModulus::OddModulus(u64 q) : q_(q) {
  if (q <= 1 || (q & 1) == 0 || q > kMax) {
    throw DomainError("modulus must be odd, greater than 1 and below 2^63; got " +
                      std::to_string(q));
  }
}

void OddModulus::require_residue(u64 a) const {
  if (!contains(a)) {
    throw DomainError(std::to_string(a) + " is not an odd residue in (0, " +
                      std::to_string(q_) + ")");
  }
}

unsigned default_workers() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace oddcycles
