#ifndef ZSUM_SOLVER_HPP
#define ZSUM_SOLVER_HPP

#include "zsum/poly.hpp"
#include "zsum/symbolic_value.hpp"

namespace zsum {

// Exact value of Z(N, f) = sum over Z_N^n of e^{2*pi*i*f(x)/N} for quadratic f,
// in time polynomial in n, log N and coefficient size; N need not be factored.
// Throws DegreeError for deg f > 2 and InvalidInput for N < 1.
SymbolicValue z_eval(const BigInt& N, const SparsePoly& f);

// Z(N1*N2, f) = Z(N1, a*f) * Z(N2, b*f) where b*N1 + a*N2 = 1. Requires
// gcd(N1, N2) = 1, both > 1, f taken over Z_{N1*N2}.
SymbolicValue crt_split_eval(const BigInt& n1, const BigInt& n2, const SparsePoly& f);

// Odd-modulus algorithm (N odd, >= 3). f must be over Z_N.
SymbolicValue z_odd(const BigInt& N, const QuadraticPoly& f);

// Power-of-two algorithm for modulus 2^k, k >= 1. f must be over Z_{2^k}.
SymbolicValue z_pow2(unsigned long k, const QuadraticPoly& f);

// Base case: sum over {0,1}^n of (-1)^f(x). f must be over Z_2. The result is
// always zero or +-2^s.
SymbolicValue z_mod2(const QuadraticPoly& f);

} // namespace zsum

#endif
