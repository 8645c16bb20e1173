#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>

#include "zsum/gauss.hpp"

using namespace zsum;

namespace {

// Direct b-term sum, the independent oracle for every identity here.
std::complex<double> gauss_brute(long a, long b) {
    std::complex<double> acc(0.0, 0.0);
    for (long x = 0; x < b; ++x) {
        long e = static_cast<long>((static_cast<unsigned long long>(x) * x % b) * a % b);
        double angle = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(b);
        acc += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::complex<double> cval(const SymbolicValue& v) {
    auto a = v.approx();
    REQUIRE(a.value.has_value());
    return *a.value;
}

} // namespace

TEST_CASE("eps_of") {
    CHECK(eps_of(1).structurally_equal(SymbolicValue::one()));
    CHECK(eps_of(3).structurally_equal(SymbolicValue::root_of_unity(1, 4)));
    CHECK(eps_of(5).structurally_equal(SymbolicValue::one()));
    CHECK(eps_of(-1).structurally_equal(SymbolicValue::root_of_unity(1, 4)));
    CHECK_THROWS_AS(eps_of(2), InvalidInput);
}

TEST_CASE("gauss_g1 closed forms") {
    SymbolicValue v5 = gauss_g1(5);
    CHECK(v5.coeff() == 1);
    CHECK(v5.radicand() == 5);
    CHECK(v5.phase() == 0);

    CHECK(gauss_g1(2).is_zero());

    SymbolicValue v4 = gauss_g1(4); // 2*(1+i) = 2*sqrt(2)*w8
    CHECK(v4.coeff() == 2);
    CHECK(v4.radicand() == 2);
    CHECK(v4.phase() == mpq_class(1, 8));

    SymbolicValue v3 = gauss_g1(3);
    CHECK(v3.radicand() == 3);
    CHECK(v3.phase() == mpq_class(1, 4));

    CHECK(gauss_g1(1).structurally_equal(SymbolicValue::one()));
    CHECK_THROWS_AS(gauss_g1(0), InvalidInput);
}

TEST_CASE("gauss_sum examples") {
    CHECK(gauss_sum(7, 1).structurally_equal(SymbolicValue::one()));
    CHECK(gauss_sum(0, 1).structurally_equal(SymbolicValue::one()));

    SymbolicValue g13 = gauss_sum(1, 3); // i*sqrt(3)
    CHECK(g13.radicand() == 3);
    CHECK(g13.phase() == mpq_class(1, 4));

    SymbolicValue g25 = gauss_sum(2, 5); // -sqrt(5)
    CHECK(g25.radicand() == 5);
    CHECK(g25.phase() == mpq_class(1, 2));
    CHECK(std::abs(cval(g25) - gauss_brute(2, 5)) < 1e-12);

    // frozen from the brute-force oracle: G(3, 8) = 4*e^{2*pi*i*3/8}
    CHECK(std::abs(gauss_brute(3, 8) - std::complex<double>(-2.0 * std::sqrt(2.0),
                                                            2.0 * std::sqrt(2.0))) <
          1e-12);
    SymbolicValue g38 = gauss_sum(3, 8);
    CHECK(g38.coeff() == 4);
    CHECK(g38.radicand() == 1);
    CHECK(g38.phase() == mpq_class(3, 8));

    CHECK_THROWS_AS(gauss_sum(2, 4), InvalidInput);
    CHECK_THROWS_AS(gauss_sum(3, 0), InvalidInput);
    CHECK_THROWS_AS(gauss_sum(0, 5), InvalidInput);
}

TEST_CASE("gauss_sum against the direct sum, b <= 200") {
    for (long b = 1; b <= 200; ++b)
        for (long a = 1; a < std::max(2L, b); ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            std::complex<double> got = cval(gauss_sum(a, b));
            CHECK(std::abs(got - gauss_brute(a, b)) < 1e-8);
        }
}

TEST_CASE("the G(a, 2^r) Jacobi argument is (-2^r / a)") {
    // exhaustive pin of the convention for r <= 8
    for (long r = 2; r <= 8; ++r) {
        long q = 1L << r;
        for (long a = 1; a < q; a += 2) {
            std::complex<double> got = cval(gauss_sum(a, q));
            CHECK(std::abs(got - gauss_brute(a, q)) < 1e-8);
        }
    }
}

TEST_CASE("magnitude law") {
    for (long b = 1; b <= 128; ++b)
        for (long a = 1; a < std::max(2L, b); ++a) {
            if (std::gcd(a, b) != 1)
                continue;
            double mag2 = std::norm(cval(gauss_sum(a, b)));
            double expect;
            switch (b % 4) {
            case 0:
                expect = 2.0 * static_cast<double>(b);
                break;
            case 2:
                expect = 0.0;
                break;
            default:
                expect = static_cast<double>(b);
            }
            CHECK(std::abs(mag2 - expect) < 1e-7);
        }
}

TEST_CASE("multiplicativity G(a, bc) = G(ab, c) * G(ac, b)") {
    for (long b = 1; b <= 40; ++b)
        for (long c = b + 1; c <= 60; ++c) {
            if (std::gcd(b, c) != 1)
                continue;
            for (long a : {1L, 3L, 7L}) {
                if (std::gcd(a, b * c) != 1)
                    continue;
                SymbolicValue lhs = gauss_sum(a, b * c);
                SymbolicValue rhs = gauss_sum(a * b % std::max(1L, c), c)
                                        .mul(gauss_sum(a * c % std::max(1L, b), b));
                CHECK(lhs.structurally_equal(rhs));
            }
        }
}

TEST_CASE("odd prime power recurrence G(a, p^r) = p * G(a, p^{r-2})") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        for (int r = 2; r <= 4; ++r) {
            long pr = 1;
            for (int k = 0; k < r; ++k)
                pr *= p;
            for (long a : {1L, 2L, p + 1, pr - 1}) {
                if (std::gcd(a, pr) != 1)
                    continue;
                SymbolicValue lhs = gauss_sum(a, pr);
                SymbolicValue rhs = gauss_sum(a, pr / (p * p)).scale(p, 1);
                CHECK(lhs.structurally_equal(rhs));
            }
        }
    }
}
