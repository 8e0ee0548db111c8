#ifndef PSITODA_NUMTHEORY_HPP
#define PSITODA_NUMTHEORY_HPP

#include <map>
#include <vector>

#include "psitoda/rational.hpp"

namespace psitoda {

/// Prime factorization of n > 0 (trial division, then Pollard rho with a
/// Miller-Rabin primality test for the large cofactors).
std::map<Integer, int> factorize(Integer n);

/// All positive divisors of n > 0, ascending. Throws DomainError when the
/// divisor count would exceed `cap`.
std::vector<Integer> divisors(const Integer &n, std::size_t cap = 1u << 20);

} // namespace psitoda

#endif
