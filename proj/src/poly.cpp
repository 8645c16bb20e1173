#include "zsum/poly.hpp"

#include <cctype>
#include <sstream>

namespace zsum {

SparsePoly::SparsePoly(int n, BigInt modulus) : n_(n), N_(std::move(modulus)) {
    if (n_ < 0)
        throw InvalidInput("SparsePoly: variable count must be >= 0");
    if (N_ < 1)
        throw InvalidInput("SparsePoly: modulus must be >= 1");
}

unsigned SparsePoly::degree() const {
    unsigned deg = 0;
    for (const auto& [exps, c] : monomials_) {
        unsigned d = 0;
        for (unsigned e : exps)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

void SparsePoly::add_monomial(ExpVec exps, const BigInt& coeff) {
    if (static_cast<int>(exps.size()) != n_)
        throw InvalidInput("SparsePoly: exponent vector length mismatch");
    auto it = monomials_.find(exps);
    BigInt c = mod_floor(coeff + (it == monomials_.end() ? BigInt(0) : it->second), N_);
    if (c == 0) {
        if (it != monomials_.end())
            monomials_.erase(it);
    } else if (it != monomials_.end()) {
        it->second = c;
    } else {
        monomials_.emplace(std::move(exps), c);
    }
}

BigInt SparsePoly::eval_point(const std::vector<BigInt>& x) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidInput("eval_point: point length mismatch");
    BigInt acc = 0;
    for (const auto& [exps, c] : monomials_) {
        BigInt term = c;
        for (int i = 0; i < n_; ++i)
            if (exps[i] > 0)
                term = term * pow_mod(mod_floor(x[i], N_), BigInt(exps[i]), N_) % N_;
        acc += term;
    }
    return mod_floor(acc, N_);
}

SparsePoly SparsePoly::scalar_retarget(const BigInt& a, const BigInt& new_modulus) const {
    SparsePoly out(n_, new_modulus);
    for (const auto& [exps, c] : monomials_)
        out.add_monomial(exps, c * a);
    return out;
}

namespace {

using MonoMap = SparsePoly::MonomialMap;

void map_add(MonoMap& m, const SparsePoly::ExpVec& e, const BigInt& c, const BigInt& N) {
    BigInt v = mod_floor(m[e] + c, N);
    if (v == 0)
        m.erase(e);
    else
        m[e] = v;
}

MonoMap map_mul(const MonoMap& a, const MonoMap& b, const BigInt& N) {
    MonoMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            SparsePoly::ExpVec e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            map_add(out, e, ca * cb, N);
        }
    }
    return out;
}

} // namespace

SparsePoly SparsePoly::affine_substitute(const std::vector<std::vector<BigInt>>& T,
                                         const std::vector<BigInt>& t) const {
    if (static_cast<int>(T.size()) != n_ || static_cast<int>(t.size()) != n_)
        throw InvalidInput("affine_substitute: dimension mismatch");
    for (const auto& row : T)
        if (static_cast<int>(row.size()) != n_)
            throw InvalidInput("affine_substitute: dimension mismatch");

    // Linear images L_i = sum_j T[i][j]*y_j + t[i], as monomial maps.
    std::vector<MonoMap> image(n_);
    for (int i = 0; i < n_; ++i) {
        ExpVec zero(n_, 0);
        MonoMap li;
        if (mod_floor(t[i], N_) != 0)
            li[zero] = mod_floor(t[i], N_);
        for (int j = 0; j < n_; ++j) {
            if (mod_floor(T[i][j], N_) != 0) {
                ExpVec e(n_, 0);
                e[j] = 1;
                li[e] = mod_floor(T[i][j], N_);
            }
        }
        image[i] = std::move(li);
    }

    MonoMap result;
    for (const auto& [exps, c] : monomials_) {
        MonoMap acc;
        acc[ExpVec(n_, 0)] = c;
        for (int i = 0; i < n_; ++i)
            for (unsigned k = 0; k < exps[i]; ++k)
                acc = map_mul(acc, image[i], N_);
        for (const auto& [e, v] : acc)
            map_add(result, e, v, N_);
    }

    SparsePoly out(n_, N_);
    for (const auto& [e, v] : result)
        out.add_monomial(e, v);
    return out;
}

std::string SparsePoly::to_string() const {
    if (monomials_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, c] : monomials_) {
        if (!first)
            os << " + ";
        first = false;
        bool has_vars = false;
        for (unsigned e : exps)
            has_vars |= e > 0;
        if (!has_vars || c != 1) {
            os << c.get_str();
            if (has_vars)
                os << "*";
        }
        bool first_var = true;
        for (int i = 0; i < n_; ++i) {
            if (exps[i] == 0)
                continue;
            if (!first_var)
                os << "*";
            first_var = false;
            os << "x" << (i + 1);
            if (exps[i] > 1)
                os << "^" << exps[i];
        }
    }
    return os.str();
}

namespace {

class PolyParser {
public:
    PolyParser(const std::string& text, const BigInt& N, int n)
        : text_(text), pos_(0), poly_(n, N) {}

    SparsePoly parse() {
        skip_ws();
        bool negative = accept('-');
        parse_term(negative);
        skip_ws();
        while (pos_ < text_.size()) {
            bool neg;
            if (accept('+'))
                neg = false;
            else if (accept('-'))
                neg = true;
            else
                throw ParseError("expected '+' or '-'", pos_);
            parse_term(neg);
            skip_ws();
        }
        return std::move(poly_);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    BigInt parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected integer", pos_);
        return BigInt(text_.substr(start, pos_ - start));
    }

    // factor := 'x' index ['^' integer]
    void parse_factor(SparsePoly::ExpVec& exps) {
        std::size_t at = pos_;
        if (!accept('x'))
            throw ParseError("expected variable", pos_);
        BigInt idx = parse_integer();
        if (idx < 1 || idx > poly_.var_count())
            throw ParseError("variable index out of [1," +
                                 std::to_string(poly_.var_count()) + "]",
                             at);
        unsigned e = 1;
        if (accept('^')) {
            BigInt raw = parse_integer();
            if (raw >= BigInt(1) << 31)
                throw ParseError("exponent too large", at);
            e = static_cast<unsigned>(raw.get_ui());
        }
        unsigned long i = idx.get_ui() - 1;
        if (exps[i] > (1u << 30) || e > (1u << 30))
            throw ParseError("exponent too large", at);
        exps[i] += e;
    }

    void parse_term(bool negative) {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError("expected term", pos_);
        BigInt coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coeff = parse_integer();
            have_coeff = true;
        }
        SparsePoly::ExpVec exps(poly_.var_count(), 0);
        bool have_vars = false;
        if (have_coeff && accept('*') && peek() != 'x')
            throw ParseError("expected variable after '*'", pos_);
        while (peek() == 'x') {
            parse_factor(exps);
            have_vars = true;
            if (accept('*')) {
                if (peek() != 'x')
                    throw ParseError("expected variable after '*'", pos_);
                continue;
            }
            break;
        }
        if (!have_coeff && !have_vars)
            throw ParseError("expected term", pos_);
        poly_.add_monomial(std::move(exps), negative ? BigInt(-coeff) : coeff);
    }

    const std::string& text_;
    std::size_t pos_;
    SparsePoly poly_;
};

} // namespace

SparsePoly parse_poly(const std::string& text, const BigInt& N, int n) {
    if (n < 1)
        throw InvalidInput("parse_poly: variable count must be >= 1");
    return PolyParser(text, N, n).parse();
}

QuadraticPoly::QuadraticPoly(int n, BigInt modulus) : n_(n), N_(std::move(modulus)), cst_(0) {
    if (n_ < 0)
        throw InvalidInput("QuadraticPoly: variable count must be >= 0");
    if (N_ < 1)
        throw InvalidInput("QuadraticPoly: modulus must be >= 1");
    quad_.assign(static_cast<std::size_t>(n_) * (n_ + 1) / 2, BigInt(0));
    lin_.assign(n_, BigInt(0));
}

std::size_t QuadraticPoly::tri_index(int i, int j) const {
    if (i > j)
        std::swap(i, j);
    if (i < 0 || j >= n_)
        throw InvalidInput("QuadraticPoly: index out of range");
    // column-major upper triangle: column j holds entries (0..j, j)
    return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
}

bool QuadraticPoly::is_zero_form() const {
    for (const auto& c : quad_)
        if (c != 0)
            return false;
    for (const auto& c : lin_)
        if (c != 0)
            return false;
    return true;
}

QuadraticPoly as_quadratic(const SparsePoly& f) {
    QuadraticPoly out(f.var_count(), f.modulus());
    for (const auto& [exps, c] : f.monomials()) {
        int vars[2] = {-1, -1};
        unsigned deg = 0;
        for (int i = 0; i < f.var_count(); ++i) {
            for (unsigned k = 0; k < exps[i]; ++k) {
                if (deg < 2)
                    vars[deg] = i;
                ++deg;
            }
        }
        if (deg > 2) {
            std::ostringstream os;
            os << "monomial of degree " << deg << " (";
            bool first = true;
            for (int i = 0; i < f.var_count(); ++i) {
                if (exps[i] == 0)
                    continue;
                if (!first)
                    os << "*";
                first = false;
                os << "x" << (i + 1);
                if (exps[i] > 1)
                    os << "^" << exps[i];
            }
            os << ") exceeds degree 2";
            throw DegreeError(os.str());
        }
        if (deg == 0)
            out.add_constant(c);
        else if (deg == 1)
            out.add_lin(vars[0], c);
        else
            out.add_quad(vars[0], vars[1], c);
    }
    return out;
}

SparsePoly to_sparse(const QuadraticPoly& f) {
    SparsePoly out(f.var_count(), f.modulus());
    int n = f.var_count();
    SparsePoly::ExpVec e(n, 0);
    if (f.constant() != 0)
        out.add_monomial(e, f.constant());
    for (int i = 0; i < n; ++i) {
        if (f.lin(i) != 0) {
            SparsePoly::ExpVec le(n, 0);
            le[i] = 1;
            out.add_monomial(std::move(le), f.lin(i));
        }
        for (int j = i; j < n; ++j) {
            if (f.quad(i, j) != 0) {
                SparsePoly::ExpVec qe(n, 0);
                qe[i] += 1;
                qe[j] += 1;
                out.add_monomial(std::move(qe), f.quad(i, j));
            }
        }
    }
    return out;
}

SparsePoly h_type_expand(const SparsePoly& h, const Hypergraph& G, const BigInt& N) {
    if (h.var_count() != G.r)
        throw InvalidInput("h_type_expand: template arity does not match hypergraph");
    SparsePoly out(G.n, N);
    for (const auto& edge : G.edges) {
        for (const auto& [exps, c] : h.monomials()) {
            SparsePoly::ExpVec e(G.n, 0);
            for (int k = 0; k < G.r; ++k)
                e[edge[k] - 1] += exps[k];
            out.add_monomial(std::move(e), c);
        }
    }
    return out;
}

} // namespace zsum
