#ifndef ZSUM_NTHEORY_HPP
#define ZSUM_NTHEORY_HPP

#include <gmpxx.h>
#include <optional>
#include <utility>

#include "zsum/errors.hpp"

namespace zsum {

using BigInt = mpz_class;

struct ExtGcd {
    BigInt g; // gcd(a, b) > 0
    BigInt s; // s*a + t*b == g
    BigInt t;
};

// Extended Euclid. Throws InvalidInput when a == b == 0.
ExtGcd ext_gcd(const BigInt& a, const BigInt& b);

// Inverse of a in Z_N, in [0, N). Throws InvalidInput when gcd(a, N) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& N);

// c^e mod N by square-and-multiply; N >= 1, e >= 0.
BigInt pow_mod(const BigInt& c, const BigInt& e, const BigInt& N);

// Reduce a into [0, N).
BigInt mod_floor(const BigInt& a, const BigInt& N);

// ceil(log2 N) for N >= 1.
unsigned long ceil_log2(const BigInt& n);

// Outcome of the gcd-powering factor extraction.
struct CoprimeSplit {
    enum class Kind { Split, Coprime, AllFactors };
    Kind kind;
    BigInt n1; // valid when kind == Split: n1 * n2 == N, gcd(n1, n2) == 1, both > 1
    BigInt n2;
};

// Computes g = gcd(N, c^ceil(log2 N) mod N). A proper divisor g yields the
// relatively prime factorization N = g * (N/g); g == 1 means c is coprime to N,
// g == N means c carries every prime factor of N. Throws InvalidInput for N < 2.
CoprimeSplit coprime_split(const BigInt& N, const BigInt& c);

// Jacobi symbol (a/b) for odd b >= 1; a is reduced mod b first, jacobi(0,1) = 1.
// Throws InvalidInput when b is even or b <= 0.
int jacobi(const BigInt& a, const BigInt& b);

struct SquarefreeParts {
    BigInt s;       // extracted square root factor
    BigInt reduced; // R == s^2 * reduced
};

// Writes R = s^2 * R' where R' has no squared prime factor below effort_bound
// and is not a perfect square. Full squarefree extraction is only guaranteed
// for R < effort_bound^3.
SquarefreeParts squarefree_reduce(const BigInt& R, unsigned long effort_bound = 1000000);

} // namespace zsum

#endif
