#include "zsum/solver.hpp"

#include <cstdint>
#include <vector>

#include "zsum/gauss.hpp"

namespace zsum {

namespace {

BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

QuadraticPoly retarget(const QuadraticPoly& f, const BigInt& a, const BigInt& new_modulus) {
    QuadraticPoly out(f.var_count(), new_modulus);
    int n = f.var_count();
    for (int i = 0; i < n; ++i) {
        out.set_lin(i, f.lin(i) * a);
        for (int j = i; j < n; ++j)
            out.set_quad(i, j, f.quad(i, j) * a);
    }
    out.set_constant(f.constant() * a);
    return out;
}

// f with variable `piv` eliminated: coefficients copied with indices above piv
// shifted down by one.
QuadraticPoly drop_variable(const QuadraticPoly& f, int piv) {
    int n = f.var_count();
    QuadraticPoly out(n - 1, f.modulus());
    auto remap = [piv](int i) { return i < piv ? i : i - 1; };
    for (int i = 0; i < n; ++i) {
        if (i == piv)
            continue;
        out.set_lin(remap(i), f.lin(i));
        for (int j = i; j < n; ++j) {
            if (j == piv)
                continue;
            out.set_quad(remap(i), remap(j), f.quad(i, j));
        }
    }
    out.set_constant(f.constant());
    return out;
}

// Replaces x_piv by the affine form sum_m a[m]*x_m + a0 (a[piv] scales the
// fresh variable occupying the same slot). O(n^2).
QuadraticPoly substitute_var_affine(const QuadraticPoly& f, int piv,
                                    const std::vector<BigInt>& a, const BigInt& a0) {
    int n = f.var_count();
    // f = cpp*x_piv^2 + x_piv*B + C with B affine over the other variables.
    BigInt cpp = f.quad(piv, piv);
    std::vector<BigInt> b(n);
    for (int m = 0; m < n; ++m)
        if (m != piv)
            b[m] = f.quad(piv, m);
    BigInt b0 = f.lin(piv);

    QuadraticPoly out = f; // start from C: zero out everything involving x_piv
    out.set_quad(piv, piv, 0);
    for (int m = 0; m < n; ++m)
        if (m != piv)
            out.set_quad(piv, m, 0);
    out.set_lin(piv, 0);

    // cpp * A^2
    if (cpp != 0) {
        for (int u = 0; u < n; ++u) {
            if (a[u] == 0)
                continue;
            out.add_quad(u, u, cpp * a[u] * a[u]);
            for (int v = u + 1; v < n; ++v)
                if (a[v] != 0)
                    out.add_quad(u, v, 2 * cpp * a[u] * a[v]);
            out.add_lin(u, 2 * cpp * a[u] * a0);
        }
        out.add_constant(cpp * a0 * a0);
    }
    // A * B
    for (int u = 0; u < n; ++u) {
        if (a[u] == 0)
            continue;
        for (int v = 0; v < n; ++v) {
            if (v == piv || b[v] == 0)
                continue;
            out.add_quad(u, v, a[u] * b[v]);
        }
        out.add_lin(u, a[u] * b0);
    }
    if (a0 != 0) {
        for (int v = 0; v < n; ++v)
            if (v != piv && b[v] != 0)
                out.add_lin(v, a0 * b[v]);
        out.add_constant(a0 * b0);
    }
    return out;
}

struct Work {
    BigInt modulus;
    QuadraticPoly f;
};

class Engine {
public:
    explicit Engine(std::size_t stack_limit) : stack_limit_(stack_limit) {}

    SymbolicValue run(BigInt modulus, QuadraticPoly f) {
        push(std::move(modulus), std::move(f));
        while (!stack_.empty()) {
            Work w = std::move(stack_.back());
            stack_.pop_back();
            if (!dispatch(std::move(w)))
                return SymbolicValue::zero();
        }
        return acc_;
    }

private:
    void push(BigInt modulus, QuadraticPoly f) {
        stack_.push_back({std::move(modulus), std::move(f)});
        sanity_check(stack_.size() <= stack_limit_,
                     "solver: work stack exceeded its depth bound");
    }

    void emit(const SymbolicValue& v) { acc_ = acc_.mul(v); }

    void crt_push(const BigInt& n1, const BigInt& n2, const QuadraticPoly& f) {
        ExtGcd e = ext_gcd(n1, n2); // e.s*n1 + e.t*n2 == 1
        push(n1, retarget(f, e.t, n1));
        push(n2, retarget(f, e.s, n2));
    }

    // Returns false when the whole product is zero.
    bool dispatch(Work w) {
        if (w.f.constant() != 0) {
            emit(SymbolicValue::root_of_unity(w.f.constant(), w.modulus));
            w.f.set_constant(0);
        }
        if (w.modulus == 1 || w.f.var_count() == 0)
            return true;
        unsigned long k = mpz_scan1(w.modulus.get_mpz_t(), 0);
        if (k == 0)
            return run_odd(std::move(w.modulus), std::move(w.f));
        BigInt odd_part = w.modulus >> k;
        if (odd_part == 1)
            return run_pow2(k, std::move(w.f));
        crt_push(BigInt(1) << k, odd_part, w.f);
        return true;
    }

    bool run_odd(BigInt N, QuadraticPoly f);
    bool run_pow2(unsigned long k, QuadraticPoly f);
    bool run_mod2(QuadraticPoly f);

    SymbolicValue acc_ = SymbolicValue::one();
    std::vector<Work> stack_;
    std::size_t stack_limit_;
};

bool Engine::run_odd(BigInt N, QuadraticPoly f) {
    std::vector<BigInt>& quad = QuadraticPolyAccess::quad(f);
    std::vector<BigInt>& lin = QuadraticPolyAccess::lin(f);
    auto at = [](int i, int j) { // i <= j, column-major triangle
        return static_cast<std::size_t>(j) * (j + 1) / 2 + i;
    };
    std::vector<BigInt> gamma, delta, eps;
    BigInt prod;

    unsigned long rounds = 0;
    const unsigned long round_bound =
        2 * static_cast<unsigned long>(f.var_count()) + ceil_log2(N) + 8;
    for (;;) {
        sanity_check(++rounds <= round_bound, "z_odd: round bound exceeded");
        if (f.constant() != 0) {
            emit(SymbolicValue::root_of_unity(f.constant(), N));
            f.set_constant(0);
        }
        if (N == 1)
            return true;
        int n = f.var_count();
        if (n == 0)
            return true;

        // Coprime-split scan over every nonzero coefficient. A single gcd of N
        // with the product of all coefficients decides the common all-coprime
        // case; otherwise each coefficient is examined individually.
        prod = 1;
        bool any_nonzero = false;
        for (const BigInt& c : quad) {
            if (c != 0) {
                any_nonzero = true;
                mpz_mul(prod.get_mpz_t(), prod.get_mpz_t(), c.get_mpz_t());
                mpz_fdiv_r(prod.get_mpz_t(), prod.get_mpz_t(), N.get_mpz_t());
            }
        }
        for (const BigInt& c : lin) {
            if (c != 0) {
                any_nonzero = true;
                mpz_mul(prod.get_mpz_t(), prod.get_mpz_t(), c.get_mpz_t());
                mpz_fdiv_r(prod.get_mpz_t(), prod.get_mpz_t(), N.get_mpz_t());
            }
        }
        if (!any_nonzero) {
            emit(SymbolicValue::integer(pow_int(N, n)));
            return true;
        }
        bool all_coprime = gcd(prod, N) == 1;
        if (!all_coprime) {
            for (int j = 0; j < n; ++j) {
                for (int i = 0; i <= j; ++i) {
                    const BigInt& c = quad[at(i, j)];
                    if (c == 0)
                        continue;
                    CoprimeSplit cs = coprime_split(N, c);
                    if (cs.kind == CoprimeSplit::Kind::Split) {
                        crt_push(cs.n1, cs.n2, f);
                        return true;
                    }
                }
            }
            for (const BigInt& c : lin) {
                if (c == 0)
                    continue;
                CoprimeSplit cs = coprime_split(N, c);
                if (cs.kind == CoprimeSplit::Kind::Split) {
                    crt_push(cs.n1, cs.n2, f);
                    return true;
                }
            }
        }
        // Now every nonzero coefficient is coprime to N or carries every
        // prime factor of N.
        auto coprime = [&](const BigInt& c) {
            return c != 0 && (all_coprime || gcd(c, N) == 1);
        };

        // Case 1: a diagonal coefficient invertible in Z_N. The pivot is
        // swapped to the last slot so eliminating it truncates the storage.
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (coprime(quad[at(i, i)]))
                piv = i;
        if (piv >= 0) {
            int last = n - 1;
            if (piv != last) {
                for (int k = 0; k < n; ++k) {
                    if (k == piv || k == last)
                        continue;
                    quad[at(std::min(k, piv), std::max(k, piv))].swap(
                        quad[at(std::min(k, last), std::max(k, last))]);
                }
                quad[at(piv, piv)].swap(quad[at(last, last)]);
                lin[piv].swap(lin[last]);
            }
            BigInt cpp = quad[at(last, last)];
            BigInt cl = lin[last];
            BigInt inv2c = mod_inverse(2 * cpp, N);
            gamma.resize(last);
            delta.resize(last);
            eps.resize(last);
            for (int m = 0; m < last; ++m) {
                gamma[m] = mod_floor(inv2c * quad[at(m, last)], N);
                delta[m] = mod_floor(cpp * gamma[m], N);
                eps[m] = mod_floor(2 * delta[m], N);
            }
            emit(gauss_sum(cpp, N));
            // h = rest - cpp*g^2 - cl*g, then the square completion constant
            for (int j = 0; j < last; ++j) {
                for (int i = 0; i < j; ++i) {
                    mpz_ptr q = quad[at(i, j)].get_mpz_t();
                    mpz_submul(q, eps[i].get_mpz_t(), gamma[j].get_mpz_t());
                    mpz_fdiv_r(q, q, N.get_mpz_t());
                }
                mpz_ptr d = quad[at(j, j)].get_mpz_t();
                mpz_submul(d, delta[j].get_mpz_t(), gamma[j].get_mpz_t());
                mpz_fdiv_r(d, d, N.get_mpz_t());
                mpz_ptr l = lin[j].get_mpz_t();
                mpz_submul(l, cl.get_mpz_t(), gamma[j].get_mpz_t());
                mpz_fdiv_r(l, l, N.get_mpz_t());
            }
            f.set_constant(-cl * cl * mod_inverse(4 * cpp, N));
            QuadraticPolyAccess::drop_last_variable(f);
            continue;
        }

        // Case 2: a cross coefficient invertible; rotate x_i = y1+y2,
        // x_j = y1-y2 to create an invertible diagonal.
        int ci = -1, cj = -1;
        for (int i = 0; i < n && ci < 0; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coprime(f.quad(i, j))) {
                    ci = i;
                    cj = j;
                    break;
                }
        if (ci >= 0) {
            BigInt cii = f.quad(ci, ci), cjj = f.quad(cj, cj), cij = f.quad(ci, cj);
            BigInt li = f.lin(ci), lj = f.lin(cj);
            f.set_quad(ci, ci, cii + cjj + cij);
            f.set_quad(cj, cj, cii + cjj - cij);
            f.set_quad(ci, cj, 2 * (cii - cjj));
            for (int m = 0; m < n; ++m) {
                if (m == ci || m == cj)
                    continue;
                BigInt cim = f.quad(ci, m), cjm = f.quad(cj, m);
                f.set_quad(ci, m, cim + cjm);
                f.set_quad(cj, m, cim - cjm);
            }
            f.set_lin(ci, li + lj);
            f.set_lin(cj, li - lj);
            continue;
        }

        // Case 3: no quadratic coefficient invertible but a linear one is.
        // The inner geometric sum vanishes at every prime of N, so the whole
        // sum is zero.
        bool linear_coprime = false;
        for (int i = 0; i < n && !linear_coprime; ++i)
            linear_coprime = coprime(f.lin(i));
        if (linear_coprime)
            return false;

        // Case 4: every nonzero coefficient carries all prime factors of N.
        BigInt d = N;
        for (const BigInt& c : quad)
            if (c != 0)
                d = gcd(d, c);
        for (const BigInt& c : lin)
            if (c != 0)
                d = gcd(d, c);
        sanity_check(d > 1, "solver: case 4 requires a shared factor");
        // Each variable covers Z_{N/d} exactly d times: factor d^n.
        emit(SymbolicValue::integer(pow_int(d, n)));
        BigInt m = N / d;
        QuadraticPoly g(n, m);
        for (int i = 0; i < n; ++i) {
            g.set_lin(i, f.lin(i) / d);
            for (int j = i; j < n; ++j)
                g.set_quad(i, j, f.quad(i, j) / d);
        }
        N = m;
        f = std::move(g);
    }
}

bool Engine::run_pow2(unsigned long k, QuadraticPoly f) {
    BigInt q = BigInt(1) << k;
    unsigned long rounds = 0;
    const unsigned long round_bound =
        (static_cast<unsigned long>(f.var_count()) + 2) * (k + 2) + 8;
    for (;;) {
        sanity_check(++rounds <= round_bound, "z_pow2: round bound exceeded");
        if (f.constant() != 0) {
            emit(SymbolicValue::root_of_unity(f.constant(), q));
            f.set_constant(0);
        }
        if (k == 1)
            return run_mod2(std::move(f));
        int n = f.var_count();
        if (n == 0)
            return true;

        auto odd = [](const BigInt& c) { return mpz_odd_p(c.get_mpz_t()) != 0; };

        // (a) Parity normalization: make every cross and linear coefficient
        // even, at a cost of 1/2 per substitution.
        int t = -1;
        for (int i = 0; i < n && t < 0; ++i) {
            if (odd(f.lin(i))) {
                t = i;
                break;
            }
            for (int j = i + 1; j < n; ++j)
                if (odd(f.quad(i, j))) {
                    t = i;
                    break;
                }
        }
        if (t >= 0) {
            int ell = -1;
            for (int j = t + 1; j < n && ell < 0; ++j)
                if (odd(f.quad(t, j)))
                    ell = j;
            if (ell < 0) {
                // linear coefficient odd, all crosses even: f_1 is always odd
                return false;
            }
            BigInt invc = mod_inverse(f.quad(t, ell), q);
            // x_ell = invc * (2*x'_ell - (sum_{i<t} c_{i,t} x_i
            //                  + sum_{j>t, j != ell} c_{t,j} x_j + c_t))
            std::vector<BigInt> a(n);
            a[ell] = mod_floor(2 * invc, q);
            for (int i = 0; i < t; ++i)
                a[i] = mod_floor(-invc * f.quad(i, t), q);
            for (int j = t + 1; j < n; ++j)
                if (j != ell)
                    a[j] = mod_floor(-invc * f.quad(t, j), q);
            BigInt a0 = mod_floor(-invc * f.lin(t), q);
            f = substitute_var_affine(f, ell, a, a0);
            emit(SymbolicValue::one().scale(1, 2)); // Z(q, f) = Z(q, f')/2
            continue;
        }

        // All cross and linear coefficients are even now.
        int piv = -1;
        for (int i = 0; i < n && piv < 0; ++i)
            if (odd(f.quad(i, i)))
                piv = i;

        if (piv < 0) {
            // (b) Everything even: Z(q, f) = 2^n * Z(q/2, f/2).
            emit(SymbolicValue::integer(BigInt(1) << n));
            --k;
            q >>= 1;
            QuadraticPoly g(n, q);
            for (int i = 0; i < n; ++i) {
                g.set_lin(i, f.lin(i) / 2);
                for (int j = i; j < n; ++j)
                    g.set_quad(i, j, f.quad(i, j) / 2);
            }
            f = std::move(g);
            continue;
        }

        // (c) Odd diagonal: complete the square, emit G(c, q), drop the
        // variable. Cross and linear terms are even so B/2 is integral.
        const BigInt& cpp = f.quad(piv, piv);
        BigInt invc = mod_inverse(cpp, q);
        std::vector<BigInt> f1(n);
        for (int m = 0; m < n; ++m)
            if (m != piv)
                f1[m] = mod_floor(invc * (f.quad(piv, m) / 2), q);
        BigInt f10 = mod_floor(invc * (f.lin(piv) / 2), q);
        emit(gauss_sum(cpp, q));
        QuadraticPoly h(n, q);
        for (int i = 0; i < n; ++i) {
            if (i == piv)
                continue;
            h.set_lin(i, f.lin(i) - 2 * cpp * f1[i] * f10);
            for (int j = i; j < n; ++j) {
                if (j == piv)
                    continue;
                BigInt sub = (i == j) ? BigInt(cpp * f1[i] * f1[i])
                                      : BigInt(2 * cpp * f1[i] * f1[j]);
                h.set_quad(i, j, f.quad(i, j) - sub);
            }
        }
        h.set_constant(-cpp * f10 * f10);
        f = drop_variable(h, piv);
    }
}

bool Engine::run_mod2(QuadraticPoly f) {
    int n = f.var_count();
    // Bit representation mod 2; x^2 = x on {0,1} folds diagonals into linears.
    std::vector<std::vector<uint8_t>> quad(n, std::vector<uint8_t>(n, 0));
    std::vector<uint8_t> lin(n, 0);
    int sign_bit = mpz_odd_p(f.constant().get_mpz_t()) ? 1 : 0;
    for (int i = 0; i < n; ++i) {
        lin[i] = static_cast<uint8_t>(mpz_odd_p(f.lin(i).get_mpz_t()) ^
                                      mpz_odd_p(f.quad(i, i).get_mpz_t()));
        for (int j = i + 1; j < n; ++j)
            quad[i][j] = quad[j][i] =
                static_cast<uint8_t>(mpz_odd_p(f.quad(i, j).get_mpz_t()));
    }

    std::vector<int> active(n);
    for (int i = 0; i < n; ++i)
        active[i] = i;
    unsigned long pair_factors = 0;

    while (true) {
        int u = -1, v = -1;
        for (std::size_t p = 0; p < active.size() && u < 0; ++p)
            for (std::size_t r = p + 1; r < active.size(); ++r)
                if (quad[active[p]][active[r]]) {
                    u = active[p];
                    v = active[r];
                    break;
                }
        if (u < 0)
            break;
        // f = x_u x_v + x_u A + x_v B + C; pairing (x_u+B, x_v+A) contributes
        // a factor 2 and leaves A*B + C.
        std::vector<uint8_t> A(n, 0), B(n, 0);
        uint8_t a0 = lin[u], b0 = lin[v];
        for (int m : active) {
            if (m == u || m == v)
                continue;
            A[m] = quad[u][m];
            B[m] = quad[v][m];
        }
        // strip u, v
        std::erase(active, u);
        std::erase(active, v);
        for (int m : active) {
            quad[u][m] = quad[m][u] = quad[v][m] = quad[m][v] = 0;
        }
        quad[u][v] = quad[v][u] = 0;
        lin[u] = lin[v] = 0;
        // add A*B
        for (std::size_t p = 0; p < active.size(); ++p) {
            int m = active[p];
            lin[m] ^= static_cast<uint8_t>((A[m] & B[m]) ^ (A[m] & b0) ^ (a0 & B[m]));
            for (std::size_t r = p + 1; r < active.size(); ++r) {
                int m2 = active[r];
                quad[m][m2] = quad[m2][m] =
                    static_cast<uint8_t>(quad[m][m2] ^ (A[m] & B[m2]) ^ (A[m2] & B[m]));
            }
        }
        sign_bit ^= a0 & b0;
        ++pair_factors;
    }

    for (int m : active)
        if (lin[m])
            return false; // odd linear form: the +-1 terms cancel
    // Each remaining free variable contributes a factor 2.
    emit(SymbolicValue::term(mpq_class(BigInt(1) << (pair_factors + active.size())),
                             1, mpq_class(sign_bit, 2)));
    return true;
}

SymbolicValue finish(Engine& engine, BigInt modulus, QuadraticPoly f) {
    SymbolicValue v = engine.run(std::move(modulus), std::move(f));
    // Z(N, f) is an algebraic integer; with reduced radicands the rational
    // coefficient must be integral.
    sanity_check(v.is_zero() || v.coeff().get_den() == 1,
                 "solver: result has a fractional coefficient");
    return v;
}

std::size_t stack_limit_for(const BigInt& N, int n) {
    return ceil_log2(N) + static_cast<std::size_t>(n) + 4;
}

} // namespace

SymbolicValue z_eval(const BigInt& N, const SparsePoly& f) {
    if (N < 1)
        throw InvalidInput("z_eval: modulus must be >= 1");
    if (f.modulus() != N)
        throw InvalidInput("z_eval: polynomial modulus mismatch");
    QuadraticPoly q = as_quadratic(f);
    if (N == 1)
        return SymbolicValue::one();
    Engine engine(stack_limit_for(N, q.var_count()));
    return finish(engine, N, std::move(q));
}

SymbolicValue crt_split_eval(const BigInt& n1, const BigInt& n2, const SparsePoly& f) {
    if (n1 < 2 || n2 < 2)
        throw InvalidInput("crt_split_eval: factors must be > 1");
    if (gcd(n1, n2) != 1)
        throw InvalidInput("crt_split_eval: factors must be coprime");
    BigInt N = n1 * n2;
    if (f.modulus() != N)
        throw InvalidInput("crt_split_eval: polynomial modulus mismatch");
    QuadraticPoly q = as_quadratic(f);
    ExtGcd e = ext_gcd(n1, n2);
    Engine engine(stack_limit_for(N, q.var_count()));
    SymbolicValue left = finish(engine, n1, retarget(q, e.t, n1));
    Engine engine2(stack_limit_for(N, q.var_count()));
    SymbolicValue right = finish(engine2, n2, retarget(q, e.s, n2));
    return left.mul(right);
}

SymbolicValue z_odd(const BigInt& N, const QuadraticPoly& f) {
    if (N < 3 || mpz_even_p(N.get_mpz_t()))
        throw InvalidInput("z_odd: modulus must be odd and >= 3");
    if (f.modulus() != N)
        throw InvalidInput("z_odd: polynomial modulus mismatch");
    Engine engine(stack_limit_for(N, f.var_count()));
    return finish(engine, N, f);
}

SymbolicValue z_pow2(unsigned long k, const QuadraticPoly& f) {
    if (k < 1)
        throw InvalidInput("z_pow2: exponent must be >= 1");
    BigInt q = BigInt(1) << k;
    if (f.modulus() != q)
        throw InvalidInput("z_pow2: polynomial modulus is not 2^k");
    Engine engine(stack_limit_for(q, f.var_count()));
    return finish(engine, q, f);
}

SymbolicValue z_mod2(const QuadraticPoly& f) {
    if (f.modulus() != 2)
        throw InvalidInput("z_mod2: modulus must be 2");
    Engine engine(stack_limit_for(2, f.var_count()));
    return finish(engine, 2, f);
}

} // namespace zsum
