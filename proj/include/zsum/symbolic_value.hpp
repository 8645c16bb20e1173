#ifndef ZSUM_SYMBOLIC_VALUE_HPP
#define ZSUM_SYMBOLIC_VALUE_HPP

#include <complex>
#include <optional>
#include <string>

#include "zsum/ntheory.hpp"

namespace zsum {

struct ValueApprox {
    double log10_mag;    // -inf for zero
    double phase_turns;  // in [0, 1)
    std::optional<std::complex<double>> value; // present when |v| fits double range
};

// Exact value of the shape (a/b) * sqrt(R) * e^{2*pi*i*k/M}, or zero.
//
// This is closed under multiplication and nonnegative rational scaling, which
// is all the evaluation algorithms ever need. Canonical form: coeff > 0 in
// lowest terms, phase in [0,1) in lowest terms, radicand free of small square
// factors and not a perfect square (see squarefree_reduce).
class SymbolicValue {
public:
    SymbolicValue() : zero_(true), coeff_(0), radicand_(1), phase_(0) {}

    static SymbolicValue zero() { return SymbolicValue(); }
    static SymbolicValue one();

    // e^{2*pi*i*k/M}, M >= 1.
    static SymbolicValue root_of_unity(const BigInt& k, const BigInt& M);

    // coeff * sqrt(radicand) * e^{2*pi*i*phase}; coeff >= 0, radicand >= 1.
    static SymbolicValue term(const mpq_class& coeff, const BigInt& radicand,
                              const mpq_class& phase);

    // integer n >= 0 as a value
    static SymbolicValue integer(const BigInt& n);

    bool is_zero() const { return zero_; }
    const mpq_class& coeff() const { return coeff_; }
    const BigInt& radicand() const { return radicand_; }
    const mpq_class& phase() const { return phase_; }

    SymbolicValue mul(const SymbolicValue& other) const;

    // Multiply the coefficient by num/den; num >= 0, den > 0.
    SymbolicValue scale(const BigInt& num, const BigInt& den) const;

    ValueApprox approx() const;

    bool structurally_equal(const SymbolicValue& other) const;

    // Structural equality when radicands are fully reduced; falls back to an
    // approx comparison at `tol` when either radicand may be under-reduced.
    enum class Equality { Distinct, Numeric, Structural };
    Equality compare(const SymbolicValue& other, double tol = 1e-9) const;

    std::string to_string() const;
    std::string to_json() const;

    // Effort bound used to keep radicands reduced.
    static constexpr unsigned long kSquarefreeEffort = 1000000;

private:
    SymbolicValue(const mpq_class& coeff, const BigInt& radicand, const mpq_class& phase);

    bool zero_;
    mpq_class coeff_;
    BigInt radicand_;
    mpq_class phase_;
};

inline SymbolicValue mul(const SymbolicValue& u, const SymbolicValue& v) { return u.mul(v); }
inline SymbolicValue one() { return SymbolicValue::one(); }
inline SymbolicValue zero_value() { return SymbolicValue::zero(); }

} // namespace zsum

#endif
