#ifndef ZSUM_GAUSS_HPP
#define ZSUM_GAUSS_HPP

#include "zsum/ntheory.hpp"
#include "zsum/symbolic_value.hpp"

namespace zsum {

// eps(a) for odd a: 1 when a = 1 (mod 4), i when a = 3 (mod 4).
SymbolicValue eps_of(const BigInt& a);

// Closed form of G(1, b):
//   b = 0 (mod 4): (1+i)*sqrt(b)      b = 1 (mod 4): sqrt(b)
//   b = 2 (mod 4): 0                  b = 3 (mod 4): i*sqrt(b)
// The plus sign in front of sqrt(b) is Gauss's sign theorem.
SymbolicValue gauss_g1(const BigInt& b);

// The quadratic Gauss sum G(a, b) = sum_{x in Z_b} e^{2*pi*i*a*x^2/b}, exact,
// in time polynomial in log a + log b. Requires gcd(a, b) = 1; a is reduced
// mod b first (G(a, 1) = 1 for any a).
//
// Evaluation: split b = 2^r * b_odd by multiplicativity; the odd part is
// (a'/b_odd) * G(1, b_odd) via the Jacobi symbol; the 2-power part is
// (-2^r / a'') * eps(a'') * G(1, 2^r) for r >= 2, zero for r = 1. The sign
// convention -2^r inside the Jacobi symbol is pinned by brute-force agreement
// over all odd a'' < 2^r for r <= 8 (see the gauss tests).
SymbolicValue gauss_sum(const BigInt& a, const BigInt& b);

} // namespace zsum

#endif
