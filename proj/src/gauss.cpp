#include "zsum/gauss.hpp"

namespace zsum {

SymbolicValue eps_of(const BigInt& a) {
    if (mpz_even_p(a.get_mpz_t()))
        throw InvalidInput("eps_of: argument must be odd");
    return mod_floor(a, 4) == 1 ? SymbolicValue::one()
                                : SymbolicValue::root_of_unity(1, 4);
}

SymbolicValue gauss_g1(const BigInt& b) {
    if (b < 1)
        throw InvalidInput("gauss_g1: argument must be positive");
    switch (mod_floor(b, 4).get_ui()) {
    case 0: // (1+i)*sqrt(b) = sqrt(2b) * e^{2*pi*i/8}
        return SymbolicValue::term(1, 2 * b, mpq_class(1, 8));
    case 1:
        return SymbolicValue::term(1, b, 0);
    case 2:
        return SymbolicValue::zero();
    default: // 3: i*sqrt(b)
        return SymbolicValue::term(1, b, mpq_class(1, 4));
    }
}

namespace {

SymbolicValue jacobi_sign(int j) {
    // j in {-1, +1}
    return j == 1 ? SymbolicValue::one() : SymbolicValue::root_of_unity(1, 2);
}

} // namespace

SymbolicValue gauss_sum(const BigInt& a, const BigInt& b) {
    if (b < 1)
        throw InvalidInput("gauss_sum: b must be positive");
    if (b == 1)
        return SymbolicValue::one();
    BigInt ar = mod_floor(a, b);
    if (gcd(ar, b) != 1)
        throw InvalidInput("gauss_sum: arguments must be coprime");

    unsigned long r = mpz_scan1(b.get_mpz_t(), 0);
    BigInt b_odd = b >> r;

    // G(a, 2^r * b_odd) = G(a*2^r, b_odd) * G(a*b_odd, 2^r)
    SymbolicValue odd_part = SymbolicValue::one();
    if (b_odd > 1) {
        BigInt a1 = mod_floor(ar << r, b_odd);
        odd_part = jacobi_sign(jacobi(a1, b_odd)).mul(gauss_g1(b_odd));
    }
    if (r == 0)
        return odd_part;
    if (r == 1)
        return SymbolicValue::zero();

    BigInt two_r = BigInt(1) << r;
    BigInt a2 = mod_floor(ar * b_odd, two_r); // odd
    SymbolicValue two_part =
        jacobi_sign(jacobi(-two_r, a2)).mul(eps_of(a2)).mul(gauss_g1(two_r));
    return odd_part.mul(two_part);
}

} // namespace zsum
