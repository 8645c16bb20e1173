#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "zsum/oracle.hpp"
#include "zsum/solver.hpp"

using namespace zsum;

namespace {

Complex cval(const SymbolicValue& v) {
    auto a = v.approx();
    REQUIRE(a.value.has_value());
    return *a.value;
}

Complex oracle_value(const BigInt& N, const SparsePoly& f) {
    return brute_value(brute_counts(N, f), N);
}

SparsePoly random_quadratic(std::mt19937_64& rng, const BigInt& N, int n) {
    SparsePoly f(n, N);
    long m = N.get_si();
    for (int i = 0; i < n; ++i) {
        SparsePoly::ExpVec lin(n, 0);
        lin[i] = 1;
        f.add_monomial(lin, BigInt(static_cast<long>(rng() % m)));
        for (int j = i; j < n; ++j) {
            SparsePoly::ExpVec e(n, 0);
            e[i] += 1;
            e[j] += 1;
            f.add_monomial(e, BigInt(static_cast<long>(rng() % m)));
        }
    }
    SparsePoly::ExpVec c(n, 0);
    f.add_monomial(c, BigInt(static_cast<long>(rng() % m)));
    return f;
}

void check_matches_oracle(const BigInt& N, const SparsePoly& f, double tol_scale = 1e-8) {
    CAPTURE(N.get_str());
    CAPTURE(f.to_string());
    Complex got = cval(z_eval(N, f));
    Complex expect = oracle_value(N, f);
    double tol = tol_scale * std::pow(N.get_d(), f.var_count() / 2.0);
    CHECK(std::abs(got - expect) <= tol);
}

} // namespace

TEST_CASE("z_eval structural examples") {
    // zero polynomial: N^n
    SymbolicValue v = z_eval(6, SparsePoly(3, 6));
    CHECK(v.coeff() == 216);
    CHECK(v.radicand() == 1);
    CHECK(v.phase() == 0);

    CHECK(z_eval(3, parse_poly("x1", 3, 1)).is_zero());

    v = z_eval(5, parse_poly("x1^2", 5, 1)); // +sqrt(5)
    CHECK(v.coeff() == 1);
    CHECK(v.radicand() == 5);
    CHECK(v.phase() == 0);

    CHECK(z_eval(12, parse_poly("x1^2 + x2", 12, 2)).is_zero());

    v = z_eval(4, parse_poly("x1^2", 4, 1)); // 2*(1+i)
    CHECK(v.coeff() == 2);
    CHECK(v.radicand() == 2);
    CHECK(v.phase() == mpq_class(1, 8));

    // constant-only and N = 1
    v = z_eval(8, parse_poly("3", 8, 1));
    CHECK(v.coeff() == 8);
    CHECK(v.phase() == mpq_class(3, 8));
    CHECK(z_eval(1, SparsePoly(2, 1)).structurally_equal(SymbolicValue::one()));

    CHECK_THROWS_AS(z_eval(7, parse_poly("x1^3", 7, 1)), DegreeError);
    CHECK_THROWS_AS(z_eval(0, SparsePoly(1, 1)), InvalidInput);
}

TEST_CASE("crt_split_eval") {
    SymbolicValue v = crt_split_eval(3, 4, SparsePoly(1, 12));
    CHECK(v.coeff() == 12);

    SparsePoly f = parse_poly("x1^2", 15, 1);
    CHECK(std::abs(cval(crt_split_eval(3, 5, f)) - oracle_value(15, f)) < 1e-9);

    CHECK_THROWS_AS(crt_split_eval(4, 6, SparsePoly(1, 24)), InvalidInput);
    CHECK_THROWS_AS(crt_split_eval(1, 6, SparsePoly(1, 6)), InvalidInput);

    std::mt19937_64 rng(555);
    std::vector<std::pair<long, long>> pairs = {{3, 4}, {3, 5}, {4, 5}, {5, 6},
                                                {7, 4}, {9, 2}, {8, 3}, {5, 7}};
    for (auto [n1, n2] : pairs) {
        for (int trial = 0; trial < 5; ++trial) {
            BigInt N = n1 * n2;
            int n = 1 + static_cast<int>(rng() % 3);
            SparsePoly g = random_quadratic(rng, N, n);
            SymbolicValue split = crt_split_eval(n1, n2, g);
            SymbolicValue direct = z_eval(N, g);
            CHECK(std::abs(cval(split) - cval(direct)) <=
                  1e-8 * std::pow(N.get_d(), n / 2.0));
        }
    }
}

TEST_CASE("z_odd") {
    CHECK(z_odd(9, as_quadratic(parse_poly("3*x1^2 + x1", 9, 1))).is_zero());

    SparsePoly f = parse_poly("x1*x2", 15, 2);
    Complex got = cval(z_odd(15, as_quadratic(f)));
    CHECK(std::abs(got - oracle_value(15, f)) < 1e-9); // 225-term brute force

    SymbolicValue v = z_odd(9, as_quadratic(parse_poly("3*x1^2", 9, 1))); // 3*i*sqrt(3)
    CHECK(v.coeff() == 3);
    CHECK(v.radicand() == 3);
    CHECK(v.phase() == mpq_class(1, 4));

    CHECK_THROWS_AS(z_odd(6, as_quadratic(SparsePoly(1, 6))), InvalidInput);
}

TEST_CASE("case 4 contributes d^n (one factor of d per variable)") {
    SparsePoly f = parse_poly("3*x1^2 + 3*x2^2", 9, 2);
    SymbolicValue v = z_eval(9, f);
    Complex expect = oracle_value(9, f); // = -27
    CHECK(std::abs(expect - Complex(-27.0, 0.0)) < 1e-9);
    CHECK(std::abs(cval(v) - expect) < 1e-9);
}

TEST_CASE("z_pow2 examples") {
    SparsePoly f8 = parse_poly("x1*x2", 8, 2);
    Complex got = cval(z_pow2(3, as_quadratic(f8)));
    CHECK(std::abs(got - oracle_value(8, f8)) < 1e-9); // 64-term brute force

    SymbolicValue v = z_pow2(1, as_quadratic(parse_poly("x1*x2", 2, 2)));
    CHECK(v.coeff() == 2);
    CHECK(v.phase() == 0);

    v = z_pow2(4, as_quadratic(SparsePoly(3, 16)));
    CHECK(v.coeff() == BigInt(1) << 12); // 2^{k*n}

    CHECK_THROWS_AS(z_pow2(2, as_quadratic(SparsePoly(1, 8))), InvalidInput);
    CHECK_THROWS_AS(z_pow2(0, as_quadratic(SparsePoly(1, 1))), InvalidInput);
}

TEST_CASE("z_mod2 examples") {
    CHECK(z_mod2(as_quadratic(parse_poly("x1", 2, 1))).is_zero());

    SymbolicValue v = z_mod2(as_quadratic(parse_poly("x1*x2", 2, 2)));
    CHECK(v.coeff() == 2);
    CHECK(v.phase() == 0);

    v = z_mod2(as_quadratic(parse_poly("x1*x2 + x3*x4", 2, 4)));
    CHECK(v.coeff() == 4);
    CHECK(v.phase() == 0);

    // x^2 = x on {0,1}: diagonal folds into linear
    CHECK(z_mod2(as_quadratic(parse_poly("x1^2", 2, 1))).is_zero());
    v = z_mod2(as_quadratic(parse_poly("x1^2 + x1", 2, 1)));
    CHECK(v.coeff() == 2);

    // constant flips the sign
    v = z_mod2(as_quadratic(parse_poly("x1*x2 + 1", 2, 2)));
    CHECK(v.coeff() == 2);
    CHECK(v.phase() == mpq_class(1, 2));
}

TEST_CASE("z_mod2 equals exhaustive enumeration for every 3-variable f") {
    // 3 vars: 6 quadratic + 3 linear + 1 constant coefficients = 10 bits
    for (int mask = 0; mask < 1024; ++mask) {
        QuadraticPoly f(3, 2);
        int bit = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                f.set_quad(i, j, (mask >> bit++) & 1);
        for (int i = 0; i < 3; ++i)
            f.set_lin(i, (mask >> bit++) & 1);
        f.set_constant((mask >> bit++) & 1);

        long expect = 0;
        for (int x = 0; x < 8; ++x) {
            std::vector<BigInt> pt = {x & 1, (x >> 1) & 1, (x >> 2) & 1};
            expect += to_sparse(f).eval_point(pt) == 0 ? 1 : -1;
        }
        SymbolicValue got = z_mod2(f);
        if (expect == 0) {
            CHECK(got.is_zero());
        } else {
            REQUIRE(!got.is_zero());
            long sign = got.phase() == 0 ? 1 : -1;
            CHECK(got.coeff() * sign == expect);
        }
    }
}

TEST_CASE("solver matches oracle across moduli") {
    std::mt19937_64 rng(987654);
    for (long m : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L, 16L, 25L, 27L}) {
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + static_cast<int>(rng() % 4);
            if (std::pow(static_cast<double>(m), n) > 1e6)
                n = 3;
            check_matches_oracle(m, random_quadratic(rng, m, n), 1e-7);
        }
    }
}

TEST_CASE("unused variables multiply the value by N") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 30; ++trial) {
        BigInt N = 2 + static_cast<long>(rng() % 20);
        int n = 1 + static_cast<int>(rng() % 3);
        SparsePoly f = random_quadratic(rng, N, n);
        SparsePoly g(n + 1, N);
        for (const auto& [exps, c] : f.monomials()) {
            SparsePoly::ExpVec e = exps;
            e.push_back(0);
            g.add_monomial(e, c);
        }
        SymbolicValue vf = z_eval(N, f).scale(N, 1);
        SymbolicValue vg = z_eval(N, g);
        CHECK(vf.structurally_equal(vg));
    }
}

TEST_CASE("affine change of variables preserves the sum") {
    std::mt19937_64 rng(4321);
    int done = 0;
    while (done < 40) {
        BigInt N = 2 + static_cast<long>(rng() % 24);
        int n = 1 + static_cast<int>(rng() % 3);
        std::vector<std::vector<BigInt>> T(n, std::vector<BigInt>(n));
        std::vector<BigInt> t(n);
        for (int i = 0; i < n; ++i) {
            t[i] = static_cast<long>(rng() % 25);
            for (int j = 0; j < n; ++j)
                T[i][j] = static_cast<long>(rng() % 25);
        }
        // determinant must be a unit for the substitution to be bijective
        BigInt det = 0;
        if (n == 1)
            det = T[0][0];
        else if (n == 2)
            det = T[0][0] * T[1][1] - T[0][1] * T[1][0];
        else
            det = T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1]) -
                  T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0]) +
                  T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]);
        if (gcd(mod_floor(det, N), N) != 1)
            continue;
        SparsePoly f = random_quadratic(rng, N, n);
        Complex lhs = cval(z_eval(N, f));
        Complex rhs = cval(z_eval(N, f.affine_substitute(T, t)));
        CHECK(std::abs(lhs - rhs) <= 1e-8 * std::pow(N.get_d(), n / 2.0));
        ++done;
    }
}

TEST_CASE("evaluation routes agree beyond double range") {
    // No double-precision oracle at this size; the direct evaluation and an
    // explicit CRT split must land on the same exact value.
    BigInt p("2305843009213693951"); // 2^61 - 1
    BigInt n1 = (BigInt(1) << 12) * 2187;
    BigInt n2 = p;
    BigInt N = n1 * n2;
    SparsePoly f(3, N);
    f.add_monomial({2, 0, 0}, 3 * p);
    f.add_monomial({1, 1, 0}, BigInt("123456789123456789"));
    f.add_monomial({0, 2, 0}, BigInt(2187));
    f.add_monomial({0, 1, 1}, BigInt(7));
    f.add_monomial({0, 0, 2}, BigInt(13));
    f.add_monomial({0, 0, 0}, BigInt(11));
    SymbolicValue a = z_eval(N, f);
    SymbolicValue b = crt_split_eval(n1, n2, f);
    REQUIRE(!a.is_zero());
    CHECK(a.compare(b) != SymbolicValue::Equality::Distinct);

    // dropping the x3 diagonal makes the odd part vanish; both routes must
    // see the same zero
    SparsePoly g(3, N);
    for (const auto& [e, c] : f.monomials())
        if (e != SparsePoly::ExpVec{0, 0, 2})
            g.add_monomial(e, c);
    g.add_monomial({0, 0, 1}, BigInt(2048));
    CHECK(z_eval(N, g).is_zero());
    CHECK(crt_split_eval(n1, n2, g).is_zero());
}

TEST_CASE("512-bit odd modulus completes") {
    std::mt19937_64 rng(606);
    BigInt N = 1;
    for (int b = 0; b < 512; ++b)
        N = N * 2 + static_cast<long>(rng() % 2);
    N |= 1;
    mpz_setbit(N.get_mpz_t(), 511);

    int n = 12;
    SparsePoly f(n, N);
    for (int i = 0; i < n; ++i) {
        SparsePoly::ExpVec lin(n, 0);
        lin[i] = 1;
        BigInt c = 0;
        for (int b = 0; b < 8; ++b)
            c = c * 256 + static_cast<long>(rng() % 256);
        f.add_monomial(lin, c);
        for (int j = i; j < n; ++j) {
            SparsePoly::ExpVec e(n, 0);
            e[i] += 1;
            e[j] += 1;
            BigInt q = 0;
            for (int b = 0; b < 64; ++b)
                q = q * 256 + static_cast<long>(rng() % 256);
            f.add_monomial(e, q);
        }
    }
    SymbolicValue v = z_eval(N, f);
    CHECK(!v.coeff().get_num().get_str().empty()); // completed and canonical
    CHECK((v.is_zero() || v.coeff().get_den() == 1));
}
