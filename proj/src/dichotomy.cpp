#include "zsum/dichotomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "json.hpp"

namespace zsum {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

long mod_long(long a, long M) {
    long r = a % M;
    return r < 0 ? r + M : r;
}

std::vector<Complex> unity_roots(long M) {
    std::vector<Complex> w(M);
    for (long k = 0; k < M; ++k) {
        double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(M);
        w[k] = Complex(std::cos(angle), std::sin(angle));
    }
    return w;
}

} // namespace

ExponentMatrix ExponentMatrix::make(int m, long M) {
    if (m < 1 || M < 1)
        throw InvalidInput("ExponentMatrix: size and order must be >= 1");
    ExponentMatrix A;
    A.m = m;
    A.M = M;
    A.e.assign(m, std::vector<long>(m, 0));
    return A;
}

void ExponentMatrix::validate() const {
    if (m < 1 || M < 1 || static_cast<int>(e.size()) != m)
        throw InvalidInput("ExponentMatrix: malformed shape");
    for (const auto& row : e)
        if (static_cast<int>(row.size()) != m)
            throw InvalidInput("ExponentMatrix: malformed shape");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (e[i][j] < 0 || e[i][j] >= M)
                throw InvalidInput("ExponentMatrix: exponent out of [0, M)");
            if (e[i][j] != e[j][i])
                throw InvalidInput("ExponentMatrix: matrix is not symmetric");
        }
}

ComplexMatrix ExponentMatrix::to_complex() const {
    auto w = unity_roots(M);
    ComplexMatrix A(m, std::vector<Complex>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            A[i][j] = w[e[i][j]];
    return A;
}

Complex ExponentMatrix::row_inner_product(int i, int j) const {
    auto w = unity_roots(M);
    Complex acc(0.0, 0.0);
    for (int k = 0; k < m; ++k)
        acc += w[mod_long(e[i][k] - e[j][k], M)];
    return acc;
}

bool ExponentMatrix::rows_equal(int i, int j) const { return e[i] == e[j]; }

bool ExponentMatrix::rows_linearly_dependent(int i, int j) const {
    long d = mod_long(e[i][0] - e[j][0], M);
    for (int k = 1; k < m; ++k)
        if (mod_long(e[i][k] - e[j][k], M) != d)
            return false;
    return true;
}

std::string ExponentMatrix::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["M"] = M;
    j["exponents"] = e;
    return j.dump();
}

ExponentMatrix ExponentMatrix::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("matrix JSON: ") + ex.what());
    }
    ExponentMatrix A;
    try {
        A.m = j.at("m").get<int>();
        A.M = j.at("M").get<long>();
        A.e = j.at("exponents").get<std::vector<std::vector<long>>>();
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("matrix JSON: ") + ex.what());
    }
    A.validate();
    return A;
}

ConditionResult is_discrete_unitary(const ExponentMatrix& A, double tol) {
    A.validate();
    for (int i = 0; i < A.m; ++i) {
        if (A.e[0][i] != 0 || A.e[i][0] != 0) {
            return {false, "row/column 0 is not all ones at index " + std::to_string(i)};
        }
    }
    double bound = tol * A.m;
    for (int i = 0; i < A.m; ++i)
        for (int j = i + 1; j < A.m; ++j)
            if (std::abs(A.row_inner_product(i, j)) > bound) {
                std::ostringstream os;
                os << "rows " << i << " and " << j << " are not orthogonal";
                return {false, os.str()};
            }
    return {true, ""};
}

std::optional<Rank1Witness>
rank1_violation(const std::vector<std::vector<double>>& B, double tol) {
    int m = static_cast<int>(B.size());
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != m)
            throw InvalidInput("rank1_violation: matrix is not square");
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k)
                for (int l = k + 1; l < m; ++l) {
                    double a = B[i][k], b = B[i][l], c = B[j][k], d = B[j][l];
                    int nonzero = (a > tol) + (b > tol) + (c > tol) + (d > tol);
                    if (nonzero >= 3 && std::abs(a * d - b * c) > tol)
                        return Rank1Witness{i, j, k, l};
                }
    return std::nullopt;
}

std::optional<std::pair<int, int>>
orthogonality_violation(const ExponentMatrix& A, double tol) {
    A.validate();
    double bound = tol * A.m;
    for (int i = 0; i < A.m; ++i)
        for (int j = i + 1; j < A.m; ++j) {
            if (A.rows_linearly_dependent(i, j))
                continue;
            if (std::abs(A.row_inner_product(i, j)) > bound)
                return std::make_pair(i, j);
        }
    return std::nullopt;
}

namespace {

// index of the row equal to `target`, or -1
int find_row(const ExponentMatrix& A, const std::vector<long>& target) {
    for (int k = 0; k < A.m; ++k)
        if (A.e[k] == target)
            return k;
    return -1;
}

std::vector<long> hadamard_exponents(const ExponentMatrix& A, int i, int j) {
    std::vector<long> sum(A.m);
    for (int k = 0; k < A.m; ++k)
        sum[k] = mod_long(A.e[i][k] + A.e[j][k], A.M);
    return sum;
}

} // namespace

ConditionResult group_condition(const ExponentMatrix& A, double tol) {
    ConditionResult du = is_discrete_unitary(A, tol);
    if (!du.ok)
        throw PreconditionError("group_condition: matrix is not discrete unitary (" +
                                du.witness + ")");
    for (int i = 0; i < A.m; ++i)
        for (int j = i; j < A.m; ++j)
            if (find_row(A, hadamard_exponents(A, i, j)) < 0) {
                std::ostringstream os;
                os << "no row equals the Hadamard product of rows " << i << " and " << j;
                return {false, os.str()};
            }
    return {true, ""};
}

HardnessVerdict generalized_group_condition(const ExponentMatrix& A, double tol) {
    A.validate();
    for (int i = 0; i < A.m; ++i)
        if (A.e[0][i] != 0)
            throw PreconditionError(
                "generalized_group_condition: matrix is not normalized");
    double bound = tol * A.m;
    for (int i = 0; i < A.m; ++i)
        for (int j = i + 1; j < A.m; ++j)
            if (!A.rows_equal(i, j) && std::abs(A.row_inner_product(i, j)) > bound)
                throw PreconditionError(
                    "generalized_group_condition: rows " + std::to_string(i) + " and " +
                    std::to_string(j) +
                    " are neither equal nor orthogonal; see orthogonality_violation");

    // Partition by exact row equality.
    std::vector<int> block_map(A.m, -1);
    std::vector<int> representatives;
    std::vector<int> block_size;
    for (int i = 0; i < A.m; ++i) {
        for (std::size_t b = 0; b < representatives.size(); ++b)
            if (A.rows_equal(representatives[b], i)) {
                block_map[i] = static_cast<int>(b);
                ++block_size[b];
                break;
            }
        if (block_map[i] < 0) {
            block_map[i] = static_cast<int>(representatives.size());
            representatives.push_back(i);
            block_size.push_back(1);
        }
    }
    int ell = static_cast<int>(representatives.size());

    for (int b = 0; b < ell; ++b)
        if (block_size[b] * ell != A.m) {
            std::ostringstream os;
            os << "block sizes are not all m/ell: class of row " << representatives[b]
               << " has " << block_size[b] << " rows, m = " << A.m << ", ell = " << ell;
            return {HardnessVerdict::Outcome::Hard, os.str(), std::nullopt};
        }

    for (int i = 0; i < A.m; ++i)
        for (int j = i; j < A.m; ++j)
            if (find_row(A, hadamard_exponents(A, i, j)) < 0) {
                std::ostringstream os;
                os << "no row equals the Hadamard product of rows " << i << " and " << j;
                return {HardnessVerdict::Outcome::Hard, os.str(), std::nullopt};
            }

    // A = J (x) A': the matrix is class-constant, A[i][j] = A'[cls i][cls j].
    Decomposition dec;
    dec.ell = ell;
    dec.block_map = block_map;
    dec.a_prime = ExponentMatrix::make(ell, A.M);
    for (int b = 0; b < ell; ++b)
        for (int c = 0; c < ell; ++c)
            dec.a_prime.e[b][c] = A.e[representatives[b]][representatives[c]];
    for (int i = 0; i < A.m; ++i)
        for (int j = 0; j < A.m; ++j)
            sanity_check(A.e[i][j] == dec.a_prime.e[block_map[i]][block_map[j]],
                         "generalized_group_condition: decomposition mismatch");
    std::ostringstream os;
    os << "A = J (x) A' with " << ell << " distinct rows in blocks of size "
       << A.m / ell;
    return {HardnessVerdict::Outcome::TractableInClassC, os.str(), std::move(dec)};
}

ExponentMatrix matrix_from_h(long q, const SparsePoly& h, bool symmetrize) {
    if (q < 1)
        throw InvalidInput("matrix_from_h: q must be >= 1");
    if (h.var_count() != 2)
        throw InvalidInput("matrix_from_h: h must have exactly 2 variables");
    if (h.modulus() != q)
        throw InvalidInput("matrix_from_h: h must be given over Z_q");
    ExponentMatrix A = ExponentMatrix::make(static_cast<int>(q), q);
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j) {
            BigInt v = h.eval_point({BigInt(i), BigInt(j)});
            if (symmetrize)
                v = mod_floor(v + h.eval_point({BigInt(j), BigInt(i)}), q);
            A.e[i][j] = v.get_si();
        }
    if (!symmetrize)
        for (long i = 0; i < q; ++i)
            for (long j = 0; j < q; ++j)
                if (A.e[i][j] != A.e[j][i])
                    throw InvalidInput("matrix_from_h: h(i,j) is not symmetric; "
                                       "use symmetrize");
    return A;
}

namespace {

bool is_prime_power(long q) {
    if (q < 2)
        return false;
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0)
        return true; // q prime
    while (q % p == 0)
        q /= p;
    return q == 1;
}

} // namespace

HardnessVerdict classify_S(long q, const SparsePoly& h, double tol) {
    if (!is_prime_power(q))
        throw InvalidInput("classify_S: q must be a prime power");
    if (h.var_count() != 2)
        throw InvalidInput("classify_S: h must have exactly 2 variables");
    if (h.modulus() != q)
        throw InvalidInput("classify_S: h must be given over Z_q");

    // Symmetric h is used as-is; otherwise the symmetrized matrix
    // h(i,j) + h(j,i) is classified.
    bool h_symmetric = true;
    for (long i = 0; i < q && h_symmetric; ++i)
        for (long j = i + 1; j < q && h_symmetric; ++j)
            h_symmetric = h.eval_point({BigInt(i), BigInt(j)}) ==
                          h.eval_point({BigInt(j), BigInt(i)});
    ExponentMatrix A = matrix_from_h(q, h, !h_symmetric);

    // Class C: symmetric h with h(0,x) = h(x,0) = 0, i.e. normalized A.
    bool in_class_c = h_symmetric;
    for (int i = 0; i < A.m && in_class_c; ++i)
        in_class_c = A.e[0][i] == 0;

    double bound = tol * A.m;
    for (int i = 0; i < A.m; ++i)
        for (int j = i + 1; j < A.m; ++j)
            if (!A.rows_equal(i, j) &&
                std::abs(A.row_inner_product(i, j)) > bound) {
                std::ostringstream os;
                os << "rows " << i << " and " << j
                   << " are neither equal nor orthogonal";
                return {HardnessVerdict::Outcome::Hard, os.str(), std::nullopt};
            }

    HardnessVerdict v = generalized_group_condition(A, tol);
    if (v.outcome == HardnessVerdict::Outcome::Hard) {
        v.witness = "Group Condition fails: " + v.witness;
        return v;
    }
    if (!in_class_c) {
        // No dichotomy claim outside class C.
        v.outcome = HardnessVerdict::Outcome::ConditionsPassed;
    }
    return v;
}

Gadget gadget_Hp(int p, long M) {
    if (p < 1)
        throw InvalidInput("gadget_Hp: p must be >= 1");
    if (M < 2)
        throw InvalidInput("gadget_Hp: M must be >= 2");
    // vertices: u=1, v=2, a=3, b=4, c_i=4+i, d_i=4+p+i
    Gadget g;
    g.graph.n = 2 * p + 4;
    g.u = 1;
    g.v = 2;
    const int a = 3, b = 4;
    for (int i = 1; i <= p; ++i) {
        int ci = 4 + i, di = 4 + p + i;
        g.graph.add_edge(g.u, ci, 1);
        g.graph.add_edge(ci, b, 1);
        g.graph.add_edge(di, a, 1);
        g.graph.add_edge(di, g.v, 1);
        g.graph.add_edge(ci, g.v, M - 1);
        g.graph.add_edge(ci, a, M - 1);
        g.graph.add_edge(di, b, M - 1);
        g.graph.add_edge(di, g.u, M - 1);
    }
    return g;
}

Gadget gadget_star(long M) {
    if (M < 2)
        throw InvalidInput("gadget_star: M must be >= 2");
    Gadget g;
    g.graph.n = 4;
    g.u = 1;
    g.v = 2;
    const int a = 3, b = 4;
    g.graph.add_edge(g.u, a, 1);
    g.graph.add_edge(b, g.v, 1);
    g.graph.add_edge(a, g.v, M - 1);
    g.graph.add_edge(g.u, b, M - 1);
    return g;
}

Multigraph replace_all_edges(const Multigraph& G, const Gadget& gadget) {
    Multigraph out;
    out.n = G.n;
    int internal = gadget.graph.n - 2;
    // map of gadget vertex -> fresh index for the current copy
    std::vector<int> map(gadget.graph.n + 1, 0);
    for (const auto& [e, mult] : G.edges) {
        for (long copy = 0; copy < mult; ++copy) {
            map[gadget.u] = e.first;
            map[gadget.v] = e.second;
            int next = out.n + 1;
            for (int w = 1; w <= gadget.graph.n; ++w)
                if (w != gadget.u && w != gadget.v)
                    map[w] = next++;
            out.n += internal;
            for (const auto& [ge, gmult] : gadget.graph.edges)
                out.add_edge(map[ge.first], map[ge.second], gmult);
        }
    }
    return out;
}

std::vector<std::vector<double>> bp_matrix(const ExponentMatrix& A, int p) {
    A.validate();
    if (p < 1)
        throw InvalidInput("bp_matrix: p must be >= 1");
    int m = A.m;
    auto w = unity_roots(A.M);
    std::vector<std::vector<double>> B(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            double acc = 0.0;
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < m; ++b) {
                    Complex ip(0.0, 0.0);
                    for (int k = 0; k < m; ++k)
                        ip += w[mod_long(A.e[i][k] - A.e[j][k] - A.e[a][k] + A.e[b][k],
                                         A.M)];
                    acc += std::pow(std::norm(ip), p); // |ip|^{2p}
                }
            B[i][j] = acc;
        }
    return B;
}

ComplexMatrix cor51_matrix(long q) {
    if (q < 2)
        throw InvalidInput("cor51_matrix: q must be >= 2");
    ComplexMatrix A(q, std::vector<Complex>(q, Complex(0.0, 0.0)));
    for (long i = 0; i < q; ++i)
        for (long j = 0; j < q; ++j)
            if ((i * j) % q == 0)
                A[i][j] = Complex(static_cast<double>(q), 0.0);
    return A;
}

Hypergraph cor51_hypergraph(const Multigraph& G) {
    Hypergraph out;
    out.r = 3;
    out.n = G.n + static_cast<int>(G.edge_occurrences());
    int next = G.n + 1;
    for (const auto& [e, mult] : G.edges)
        for (long k = 0; k < mult; ++k)
            out.add_edge({e.first, e.second, next++});
    return out;
}

Hypergraph cor52_digraph(const Multigraph& G) {
    Hypergraph out;
    out.r = 2;
    out.n = G.n;
    for (const auto& [e, mult] : G.edges)
        for (long k = 0; k < mult; ++k) {
            out.add_edge({e.first, e.second});
            out.add_edge({e.second, e.first});
        }
    return out;
}

std::string HardnessVerdict::to_json() const {
    nlohmann::json j;
    switch (outcome) {
    case Outcome::Hard:
        j["outcome"] = "Hard";
        break;
    case Outcome::TractableInClassC:
        j["outcome"] = "TractableInClassC";
        break;
    case Outcome::ConditionsPassed:
        j["outcome"] = "ConditionsPassed";
        break;
    }
    j["witness"] = witness;
    if (decomposition) {
        nlohmann::json d;
        d["ell"] = decomposition->ell;
        d["block_map"] = decomposition->block_map;
        d["A_prime"] = nlohmann::json::parse(decomposition->a_prime.to_json());
        j["decomposition"] = d;
    }
    return j.dump();
}

} // namespace zsum
