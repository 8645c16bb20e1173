#ifndef ZSUM_DICHOTOMY_HPP
#define ZSUM_DICHOTOMY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsum/oracle.hpp"
#include "zsum/poly.hpp"

namespace zsum {

// Symmetric m x m matrix of M-th roots of unity, stored exactly as exponents
// in [0, M): entry (i, j) denotes e^{2*pi*i*e[i][j]/M}. Rows and columns are
// indexed [0 : m-1].
struct ExponentMatrix {
    int m = 0;
    long M = 1;
    std::vector<std::vector<long>> e;

    static ExponentMatrix make(int m, long M);
    void validate() const; // shape, symmetry, exponent range

    ComplexMatrix to_complex() const;
    // <row i, row j> = sum_k w^{e[i][k] - e[j][k]} in double precision.
    Complex row_inner_product(int i, int j) const;
    bool rows_equal(int i, int j) const;
    // exact test: e[i][.] - e[j][.] constant mod M
    bool rows_linearly_dependent(int i, int j) const;

    std::string to_json() const;
    static ExponentMatrix from_json(const std::string& text);
};

inline constexpr double kDefaultTol = 1e-9;

struct ConditionResult {
    bool ok;
    std::string witness; // populated when !ok
};

// Row/column 0 all-ones and all distinct row pairs orthogonal (|<.,.>| <= tol*m).
ConditionResult is_discrete_unitary(const ExponentMatrix& A, double tol = kDefaultTol);

// A full-rank 2x2 submatrix of a symmetric nonnegative matrix with at least
// three entries > tol; its existence makes Z_B #P-hard.
struct Rank1Witness {
    int row1, row2, col1, col2;
};
std::optional<Rank1Witness>
rank1_violation(const std::vector<std::vector<double>>& B, double tol = kDefaultTol);

// A pair of rows neither linearly dependent (exact) nor orthogonal (numeric).
std::optional<std::pair<int, int>>
orthogonality_violation(const ExponentMatrix& A, double tol = kDefaultTol);

// Hadamard closure of the row set: for all i, j some row k has
// e[k][.] = e[i][.] + e[j][.] (mod M). Requires A discrete unitary.
ConditionResult group_condition(const ExponentMatrix& A, double tol = kDefaultTol);

struct Decomposition {
    int ell;
    std::vector<int> block_map; // row index -> class index in [0, ell)
    ExponentMatrix a_prime;     // ell x ell matrix of class representatives
};

struct HardnessVerdict {
    enum class Outcome { Hard, TractableInClassC, ConditionsPassed };
    Outcome outcome;
    std::string witness;
    std::optional<Decomposition> decomposition;

    std::string to_json() const;
};

// Generalized Group Condition: partitions rows by equality, requires equal
// block sizes and Hadamard closure; on success produces A = J (x) A' with A'
// the matrix of distinct-row representatives. Precondition (checked): A
// normalized and every row pair equal or orthogonal.
HardnessVerdict generalized_group_condition(const ExponentMatrix& A,
                                            double tol = kDefaultTol);

// A_{i,j} = w_q^{h(i,j)} (plus h(j,i) when symmetrize). h must have 2
// variables; a non-symmetric result without symmetrize is an error.
ExponentMatrix matrix_from_h(long q, const SparsePoly& h, bool symmetrize);

// The S[q, h] classifier: builds A from h, then (1) looks for a row pair
// neither equal nor orthogonal (Hard), (2) applies the Generalized Group
// Condition. Outside class C (h symmetric with h(0,x) = h(x,0) = 0) the
// tractable outcome is labeled ConditionsPassed: the tests are necessary
// conditions only. q must be a prime power.
HardnessVerdict classify_S(long q, const SparsePoly& h, double tol = kDefaultTol);

// Edge gadgets; `u` and `v` are the attachment vertices.
struct Gadget {
    Multigraph graph;
    int u, v;
};

// The H^[p] edge gadget: 2p+4 vertices u, v, a, b, c_i, d_i; single edges
// (u,c_i), (c_i,b), (d_i,a), (d_i,v); M-1 parallel edges (c_i,v), (c_i,a),
// (d_i,b), (d_i,u).
Gadget gadget_Hp(int p, long M);

// The 4-vertex star edge gadget u, v, a, b: single edges (u,a), (b,v); M-1 parallel
// edges (a,v), (u,b).
Gadget gadget_star(long M);

// Replaces every edge occurrence of G with a fresh copy of the gadget (an
// edge of multiplicity mu receives mu copies).
Multigraph replace_all_edges(const Multigraph& G, const Gadget& gadget);

// B^{[p]}_{i,j} = sum_{a,b} |<A_i o conj(A_j), A_a o conj(A_b)>|^{2p}.
std::vector<std::vector<double>> bp_matrix(const ExponentMatrix& A, int p);

// Cor. 5.1 matrix: entry (i,j) is q when i*j = 0 (mod q), else 0 (exact
// geometric-sum evaluation).
ComplexMatrix cor51_matrix(long q);

// Cor. 5.1 reduction: one ordered triple (u, v, w) with a fresh vertex w per
// edge occurrence.
Hypergraph cor51_hypergraph(const Multigraph& G);

// Cor. 5.2 reduction: both orientations of every edge occurrence.
Hypergraph cor52_digraph(const Multigraph& G);

} // namespace zsum

#endif
