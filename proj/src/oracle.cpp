#include "zsum/oracle.hpp"

#include <cmath>

namespace zsum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

void check_budget(const BigInt& base, int exponent, std::uint64_t budget, const char* what) {
    BigInt points;
    mpz_pow_ui(points.get_mpz_t(), base.get_mpz_t(), exponent);
    if (points > BigInt(budget))
        throw ResourceError(std::string(what) + ": " + base.get_str() + "^" +
                            std::to_string(exponent) + " = " + points.get_str() +
                            " points exceeds budget " + std::to_string(budget));
}

} // namespace

CountVector brute_counts(const BigInt& N, const SparsePoly& f, std::uint64_t budget) {
    if (f.modulus() != N)
        throw InvalidInput("brute_counts: polynomial modulus mismatch");
    int n = f.var_count();
    check_budget(N, n, budget, "brute_counts");
    if (N > BigInt(budget))
        throw ResourceError("brute_counts: count vector with " + N.get_str() +
                            " entries exceeds budget " + std::to_string(budget));
    std::uint64_t m = mpz_get_ui(N.get_mpz_t());

    // Monomials lowered to machine words (valid: N fits uint64 after the gate).
    struct Mono {
        std::uint64_t coeff;
        std::vector<std::pair<int, unsigned>> vars; // (index, exponent)
    };
    std::vector<Mono> monos;
    for (const auto& [exps, c] : f.monomials()) {
        Mono mo;
        mo.coeff = mpz_get_ui(c.get_mpz_t());
        for (int i = 0; i < n; ++i)
            if (exps[i] > 0)
                mo.vars.emplace_back(i, exps[i]);
        monos.push_back(std::move(mo));
    }

    CountVector counts(m, 0);
    std::vector<std::uint64_t> x(n, 0);
    // Odometer enumeration with a full polynomial evaluation at every point.
    for (;;) {
        std::uint64_t value = 0;
        for (const Mono& mo : monos) {
            std::uint64_t term = mo.coeff;
            for (const auto& [i, e] : mo.vars)
                for (unsigned k = 0; k < e; ++k)
                    term = mulmod(term, x[i], m);
            value = (value + term) % m;
        }
        ++counts[value];
        int pos = 0;
        while (pos < n && ++x[pos] == m) {
            x[pos] = 0;
            ++pos;
        }
        if (pos == n)
            break;
    }
    return counts;
}

Complex brute_value(const CountVector& counts, const BigInt& N) {
    if (BigInt(counts.size()) != N)
        throw InvalidInput("brute_value: count vector length mismatch");
    Complex acc(0.0, 0.0);
    double m = static_cast<double>(counts.size());
    for (std::size_t k = 0; k < counts.size(); ++k) {
        double angle = kTwoPi * static_cast<double>(k) / m;
        acc += static_cast<double>(counts[k]) * Complex(std::cos(angle), std::sin(angle));
    }
    return acc;
}

namespace {

struct EdgePowers {
    int u, v; // 0-based
    std::vector<std::vector<Complex>> pow; // A[c1][c2]^multiplicity
};

std::vector<EdgePowers> edge_tables(const ComplexMatrix& A, const Multigraph& G) {
    std::size_t m = A.size();
    std::vector<EdgePowers> tables;
    for (const auto& [e, mult] : G.edges) {
        EdgePowers t;
        t.u = e.first - 1;
        t.v = e.second - 1;
        t.pow.assign(m, std::vector<Complex>(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                Complex p(1.0, 0.0);
                for (long k = 0; k < mult; ++k)
                    p *= A[i][j];
                t.pow[i][j] = p;
            }
        tables.push_back(std::move(t));
    }
    return tables;
}

void check_matrix(const ComplexMatrix& A) {
    if (A.empty())
        throw InvalidInput("brute_partition: empty matrix");
    for (const auto& row : A)
        if (row.size() != A.size())
            throw InvalidInput("brute_partition: matrix is not square");
}

} // namespace

Complex brute_partition_pinned(const ComplexMatrix& A, const Multigraph& G,
                               const std::map<int, int>& pins, std::uint64_t budget) {
    check_matrix(A);
    int m = static_cast<int>(A.size());
    std::vector<int> color(G.n, -1);
    int free_count = G.n;
    for (const auto& [vtx, c] : pins) {
        if (vtx < 1 || vtx > G.n)
            throw InvalidInput("brute_partition_pinned: pinned vertex out of range");
        if (c < 0 || c >= m)
            throw InvalidInput("brute_partition_pinned: pin color out of range");
        if (color[vtx - 1] < 0)
            --free_count;
        color[vtx - 1] = c;
    }
    check_budget(m, free_count, budget, "brute_partition");

    std::vector<int> free_vertices;
    for (int v = 0; v < G.n; ++v)
        if (color[v] < 0) {
            free_vertices.push_back(v);
            color[v] = 0;
        }
    auto tables = edge_tables(A, G);

    Complex acc(0.0, 0.0);
    for (;;) {
        Complex weight(1.0, 0.0);
        for (const auto& t : tables)
            weight *= t.pow[color[t.u]][color[t.v]];
        acc += weight;
        std::size_t pos = 0;
        while (pos < free_vertices.size() && ++color[free_vertices[pos]] == m) {
            color[free_vertices[pos]] = 0;
            ++pos;
        }
        if (pos == free_vertices.size())
            break;
    }
    return acc;
}

Complex brute_partition(const ComplexMatrix& A, const Multigraph& G, std::uint64_t budget) {
    return brute_partition_pinned(A, G, {}, budget);
}

} // namespace zsum
