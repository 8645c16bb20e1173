#include "zsum/symbolic_value.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace zsum {

namespace {

// x = d * 2^e with d in [0.5, 1); returns log2(x).
double log2_of(const BigInt& x) {
    long e;
    double d = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log2(d) + static_cast<double>(e);
}

// phase reduced into [0, 1)
mpq_class wrap_phase(mpq_class p) {
    p.canonicalize();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
    p -= mpq_class(fl);
    return p;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

SymbolicValue::SymbolicValue(const mpq_class& coeff, const BigInt& radicand,
                             const mpq_class& phase)
    : zero_(false), coeff_(coeff), radicand_(radicand), phase_(phase) {}

SymbolicValue SymbolicValue::one() {
    return SymbolicValue(mpq_class(1), BigInt(1), mpq_class(0));
}

SymbolicValue SymbolicValue::term(const mpq_class& coeff, const BigInt& radicand,
                                  const mpq_class& phase) {
    if (radicand < 1)
        throw InvalidInput("SymbolicValue: radicand must be >= 1");
    mpq_class c = coeff;
    c.canonicalize();
    if (c == 0)
        return zero();
    if (c < 0)
        throw InvalidInput("SymbolicValue: coefficient must be >= 0");
    SquarefreeParts sq = squarefree_reduce(radicand, kSquarefreeEffort);
    c *= sq.s;
    return SymbolicValue(c, sq.reduced, wrap_phase(phase));
}

SymbolicValue SymbolicValue::integer(const BigInt& n) {
    if (n < 0)
        throw InvalidInput("SymbolicValue: integer value must be >= 0");
    if (n == 0)
        return zero();
    return SymbolicValue(mpq_class(n), BigInt(1), mpq_class(0));
}

SymbolicValue SymbolicValue::root_of_unity(const BigInt& k, const BigInt& M) {
    if (M < 1)
        throw InvalidInput("root_of_unity: order must be >= 1");
    return SymbolicValue(mpq_class(1), BigInt(1), wrap_phase(mpq_class(k, M)));
}

SymbolicValue SymbolicValue::mul(const SymbolicValue& other) const {
    if (zero_ || other.zero_)
        return zero();
    // sqrt(R1)*sqrt(R2) = g*sqrt((R1/g)*(R2/g)) with g = gcd(R1,R2). The two
    // cofactors are coprime, so no new small square factor can appear; only a
    // perfect square needs detecting.
    BigInt g = gcd(radicand_, other.radicand_);
    BigInt rad = (radicand_ / g) * (other.radicand_ / g);
    mpq_class c = coeff_ * other.coeff_;
    c *= g;
    if (rad != 1 && mpz_perfect_square_p(rad.get_mpz_t())) {
        BigInt root;
        mpz_sqrt(root.get_mpz_t(), rad.get_mpz_t());
        c *= root;
        rad = 1;
    }
    return SymbolicValue(c, rad, wrap_phase(phase_ + other.phase_));
}

SymbolicValue SymbolicValue::scale(const BigInt& num, const BigInt& den) const {
    if (den == 0)
        throw InvalidInput("scale: denominator must be nonzero");
    if (den < 0 || num < 0)
        throw InvalidInput("scale: factor must be nonnegative");
    if (zero_ || num == 0)
        return zero();
    mpq_class c = coeff_ * mpq_class(num, den);
    c.canonicalize();
    return SymbolicValue(c, radicand_, phase_);
}

ValueApprox SymbolicValue::approx() const {
    if (zero_)
        return {-std::numeric_limits<double>::infinity(), 0.0,
                std::complex<double>(0.0, 0.0)};
    constexpr double kLog10Of2 = 0.30102999566398119521;
    double log2mag = log2_of(coeff_.get_num()) - log2_of(coeff_.get_den()) +
                     0.5 * log2_of(radicand_);
    ValueApprox out;
    out.log10_mag = log2mag * kLog10Of2;
    out.phase_turns = mpq_get_d(phase_.get_mpq_t());
    if (std::abs(log2mag) < 1000.0) {
        double mag;
        if (mpz_sizeinbase(coeff_.get_num().get_mpz_t(), 2) < 900 &&
            mpz_sizeinbase(coeff_.get_den().get_mpz_t(), 2) < 900 &&
            mpz_sizeinbase(radicand_.get_mpz_t(), 2) < 900) {
            mag = mpq_get_d(coeff_.get_mpq_t()) *
                  std::sqrt(mpz_get_d(radicand_.get_mpz_t()));
        } else {
            mag = std::exp2(log2mag);
        }
        double angle = kTwoPi * out.phase_turns;
        out.value = std::complex<double>(mag * std::cos(angle), mag * std::sin(angle));
    }
    return out;
}

bool SymbolicValue::structurally_equal(const SymbolicValue& other) const {
    if (zero_ != other.zero_)
        return false;
    if (zero_)
        return true;
    return coeff_ == other.coeff_ && radicand_ == other.radicand_ && phase_ == other.phase_;
}

SymbolicValue::Equality SymbolicValue::compare(const SymbolicValue& other, double tol) const {
    if (structurally_equal(other))
        return Equality::Structural;
    // Radicands below effort^3 are certified squarefree, making the canonical
    // form unique; only under-reduced radicands need the numeric fallback.
    BigInt certified = BigInt(kSquarefreeEffort);
    certified = certified * certified * certified;
    if (!zero_ && !other.zero_ && (radicand_ >= certified || other.radicand_ >= certified)) {
        ValueApprox a = approx(), b = other.approx();
        double dphase = std::abs(a.phase_turns - b.phase_turns);
        dphase = std::min(dphase, 1.0 - dphase);
        if (std::abs(a.log10_mag - b.log10_mag) <= tol && dphase <= tol)
            return Equality::Numeric;
    }
    return Equality::Distinct;
}

std::string SymbolicValue::to_string() const {
    if (zero_)
        return "0";
    std::ostringstream os;
    bool emitted = false;
    if (coeff_ != 1 || (radicand_ == 1 && phase_ == 0)) {
        os << coeff_;
        emitted = true;
    }
    if (radicand_ != 1) {
        if (emitted)
            os << "*";
        os << "sqrt(" << radicand_ << ")";
        emitted = true;
    }
    if (phase_ != 0) {
        if (emitted)
            os << "*";
        os << "exp(2*pi*i*" << phase_ << ")";
    }
    return os.str();
}

std::string SymbolicValue::to_json() const {
    nlohmann::json j;
    if (zero_) {
        j["kind"] = "zero";
        return j.dump();
    }
    j["kind"] = "term";
    j["coeff"] = coeff_.get_num().get_str() + "/" + coeff_.get_den().get_str();
    j["radicand"] = radicand_.get_str();
    j["phase"] = phase_.get_num().get_str() + "/" + phase_.get_den().get_str();
    ValueApprox a = approx();
    nlohmann::json ja;
    ja["log10_mag"] = a.log10_mag;
    ja["phase_turns"] = a.phase_turns;
    if (a.value) {
        ja["re"] = a.value->real();
        ja["im"] = a.value->imag();
    }
    j["approx"] = ja;
    return j.dump();
}

} // namespace zsum
