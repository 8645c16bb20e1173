#ifndef ZSUM_POLY_HPP
#define ZSUM_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "zsum/graphs.hpp"
#include "zsum/ntheory.hpp"

namespace zsum {

// Multivariate polynomial over Z_N as a monomial map. Coefficients are kept
// reduced in [0, N) and nonzero; exponent vectors have length n (variables
// are x1..xn in the text grammar, 0-indexed internally).
class SparsePoly {
public:
    using ExpVec = std::vector<unsigned>;
    using MonomialMap = std::map<ExpVec, BigInt>;

    SparsePoly(int n, BigInt modulus);

    int var_count() const { return n_; }
    const BigInt& modulus() const { return N_; }
    const MonomialMap& monomials() const { return monomials_; }
    bool is_zero() const { return monomials_.empty(); }
    unsigned degree() const;

    // Adds coeff * x^exps, reducing mod N and dropping zero coefficients.
    void add_monomial(ExpVec exps, const BigInt& coeff);

    BigInt eval_point(const std::vector<BigInt>& x) const;

    // a*f with coefficients reduced mod a new modulus.
    SparsePoly scalar_retarget(const BigInt& a, const BigInt& new_modulus) const;

    // f(T*y + t), expanded and reduced mod N. T is n x n, t has length n.
    SparsePoly affine_substitute(const std::vector<std::vector<BigInt>>& T,
                                 const std::vector<BigInt>& t) const;

    // Canonical printer; parse(to_string()) reproduces the monomial map.
    std::string to_string() const;

private:
    int n_;
    BigInt N_;
    MonomialMap monomials_;
};

// Parses the polynomial grammar:
//   poly   := ['-'] term (('+'|'-') term)*
//   term   := [integer '*'] factor ('*' factor)* | integer
//   factor := 'x' index ['^' integer]
// Whitespace is insignificant; '*' between a coefficient and a variable may
// be omitted. Throws ParseError (with position) on bad syntax and on variable
// indices outside [1, n].
SparsePoly parse_poly(const std::string& text, const BigInt& N, int n);

// Quadratic polynomial over Z_N with dense coefficient storage:
// sum_{i<=j} c_{i,j} x_i x_j + sum_i c_i x_i + c0, all reduced in [0, N).
class QuadraticPoly {
public:
    QuadraticPoly(int n, BigInt modulus);

    int var_count() const { return n_; }
    const BigInt& modulus() const { return N_; }

    const BigInt& quad(int i, int j) const { return quad_[tri_index(i, j)]; }
    const BigInt& lin(int i) const { return lin_[i]; }
    const BigInt& constant() const { return cst_; }

    void set_quad(int i, int j, const BigInt& v) { quad_[tri_index(i, j)] = mod_floor(v, N_); }
    void set_lin(int i, const BigInt& v) { lin_[i] = mod_floor(v, N_); }
    void set_constant(const BigInt& v) { cst_ = mod_floor(v, N_); }

    void add_quad(int i, int j, const BigInt& v) { set_quad(i, j, quad(i, j) + v); }
    void add_lin(int i, const BigInt& v) { set_lin(i, lin_[i] + v); }
    void add_constant(const BigInt& v) { set_constant(cst_ + v); }

    bool is_zero_form() const; // no nonzero quadratic or linear coefficient

    std::size_t tri_index(int i, int j) const;

private:
    friend struct QuadraticPolyAccess; // solver-internal raw access

    int n_;
    BigInt N_;
    std::vector<BigInt> quad_;
    std::vector<BigInt> lin_;
    BigInt cst_;
};

// Raw storage access for the solver's in-place elimination loops. The layout
// contract: quad_[j*(j+1)/2 + i] holds c_{i,j} for i <= j, so dropping the
// highest-numbered variable is a truncation.
struct QuadraticPolyAccess {
    static std::vector<BigInt>& quad(QuadraticPoly& f) { return f.quad_; }
    static std::vector<BigInt>& lin(QuadraticPoly& f) { return f.lin_; }
    static BigInt& cst(QuadraticPoly& f) { return f.cst_; }
    static void drop_last_variable(QuadraticPoly& f) {
        f.quad_.resize(static_cast<std::size_t>(f.n_ - 1) * f.n_ / 2);
        f.lin_.pop_back();
        f.n_ -= 1;
    }
};

// Conversion; throws DegreeError naming the offending monomial when deg > 2.
QuadraticPoly as_quadratic(const SparsePoly& f);
SparsePoly to_sparse(const QuadraticPoly& f);

// The h-type polynomial sum_{(i1..ir) in E} h(x_{i1}, ..., x_{ir}) over the
// hypergraph's vertex set, coefficients mod N. Repeated edges accumulate.
SparsePoly h_type_expand(const SparsePoly& h, const Hypergraph& G, const BigInt& N);

} // namespace zsum

#endif
