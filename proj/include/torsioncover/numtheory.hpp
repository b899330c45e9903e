#pragma once

#include "torsioncover/numeric.hpp"

#include <vector>

namespace tc {

// Kronecker symbol (a|n) for n > 0, extending the Jacobi symbol by the
// (a|2) factor. Binary algorithm, O(log a · log n) word operations.
// n <= 0 is rejected.
int kronecker_symbol(Integer a, Integer n);

// Primality. Deterministic (fixed Miller-Rabin base set) for n < 3.3e14,
// and far beyond; for larger n a base-2 strong probable prime test plus a
// strong Lucas test (Selfridge parameters) plus a few extra Miller-Rabin
// rounds. Composite verdicts are always correct.
bool is_prime(const Integer& n);

// Single strong probable prime test to the given base.
bool miller_rabin(const Integer& n, const Integer& base);

// Strong Lucas probable prime test with Selfridge's method A parameters.
// Requires n odd, n > 2, n not a perfect square.
bool strong_lucas(const Integer& n);

// Primes below `bound`, by sieve. bound is expected to be modest (< 1e7).
std::vector<long> primes_below(long bound);

}  // namespace tc
