#include "zsum/ntheory.hpp"

#include <memory>
#include <mutex>
#include <vector>

namespace zsum {

ExtGcd ext_gcd(const BigInt& a, const BigInt& b) {
    if (a == 0 && b == 0)
        throw InvalidInput("ext_gcd: both arguments are zero");
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigInt mod_inverse(const BigInt& a, const BigInt& N) {
    if (N <= 0)
        throw InvalidInput("mod_inverse: modulus must be positive");
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), N.get_mpz_t()) == 0)
        throw InvalidInput("mod_inverse: " + a.get_str() + " is not invertible mod " + N.get_str());
    return r;
}

BigInt pow_mod(const BigInt& c, const BigInt& e, const BigInt& N) {
    if (N < 1)
        throw InvalidInput("pow_mod: modulus must be >= 1");
    if (e < 0)
        throw InvalidInput("pow_mod: exponent must be >= 0");
    BigInt r;
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), N.get_mpz_t());
    return r;
}

BigInt mod_floor(const BigInt& a, const BigInt& N) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), N.get_mpz_t());
    return r;
}

unsigned long ceil_log2(const BigInt& n) {
    if (n < 1)
        throw InvalidInput("ceil_log2: argument must be >= 1");
    unsigned long bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    // sizeinbase gives floor(log2 n) + 1; exact powers of two need one less.
    bool pow2 = mpz_popcount(n.get_mpz_t()) == 1;
    return pow2 ? bits - 1 : bits;
}

CoprimeSplit coprime_split(const BigInt& N, const BigInt& c) {
    if (N < 2)
        throw InvalidInput("coprime_split: N must be >= 2");
    // gcd(N, x) = gcd(N, x mod N), so powering mod N is enough. The exponent
    // ceil(log2 N) dominates ord_p(N) for every prime p, hence g picks up the
    // full p-power of N for each shared prime p.
    BigInt g = gcd(N, pow_mod(mod_floor(c, N), BigInt(ceil_log2(N)), N));
    if (g == 1)
        return {CoprimeSplit::Kind::Coprime, 0, 0};
    if (g == N)
        return {CoprimeSplit::Kind::AllFactors, 0, 0};
    BigInt rest = N / g;
    if (gcd(g, rest) != 1)
        throw std::logic_error("coprime_split: extracted factor is not saturated");
    return {CoprimeSplit::Kind::Split, g, rest};
}

int jacobi(const BigInt& a, const BigInt& b) {
    if (b <= 0 || mpz_even_p(b.get_mpz_t()))
        throw InvalidInput("jacobi: lower argument must be odd and positive");
    // Binary reciprocity algorithm.
    BigInt x = mod_floor(a, b);
    BigInt y = b;
    if (y == 1)
        return 1;
    int sign = 1;
    while (x != 0) {
        unsigned long twos = mpz_scan1(x.get_mpz_t(), 0);
        if (twos > 0) {
            mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), twos);
            // (2/y) = -1 iff y = 3,5 (mod 8); only the parity of `twos` matters.
            unsigned long ymod8 = mpz_fdiv_ui(y.get_mpz_t(), 8);
            if ((twos & 1) && (ymod8 == 3 || ymod8 == 5))
                sign = -sign;
        }
        // Both odd now: quadratic reciprocity flip.
        if (mpz_fdiv_ui(x.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(y.get_mpz_t(), 4) == 3)
            sign = -sign;
        swap(x, y);
        x = mod_floor(x, y);
    }
    return (y == 1) ? sign : 0;
}

namespace {

std::shared_ptr<const std::vector<unsigned long>> primes_up_to(unsigned long bound) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<unsigned long>> cache;
    static unsigned long sieved = 0;
    std::lock_guard<std::mutex> lock(mu);
    if (bound > sieved || !cache) {
        auto primes = std::make_shared<std::vector<unsigned long>>();
        std::vector<bool> composite(bound + 1, false);
        for (unsigned long p = 2; p <= bound; ++p) {
            if (composite[p])
                continue;
            primes->push_back(p);
            for (unsigned long q = p * p; q <= bound; q += p)
                composite[q] = true;
        }
        cache = std::move(primes);
        sieved = bound;
    }
    return cache;
}

} // namespace

SquarefreeParts squarefree_reduce(const BigInt& R, unsigned long effort_bound) {
    if (R < 1)
        throw InvalidInput("squarefree_reduce: argument must be >= 1");
    SquarefreeParts out{1, R};
    if (R == 1)
        return out;
    auto primes = primes_up_to(effort_bound);
    for (unsigned long p : *primes) {
        if (p > effort_bound)
            break;
        if (mpz_cmp_ui(out.reduced.get_mpz_t(), p * p) < 0)
            break;
        while (mpz_divisible_ui_p(out.reduced.get_mpz_t(), p)) {
            BigInt q = out.reduced / p;
            if (!mpz_divisible_ui_p(q.get_mpz_t(), p)) {
                break; // single factor of p: squarefree in p
            }
            out.reduced = q / p;
            out.s *= p;
        }
    }
    if (mpz_perfect_square_p(out.reduced.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), out.reduced.get_mpz_t());
        out.s *= root;
        out.reduced = 1;
    }
    return out;
}

} // namespace zsum
