#include "hankelmonde/generators.hpp"

#include "hankelmonde/errors.hpp"

namespace hankelmonde {

namespace {

void require_positive(unsigned v, const char* name) {
    if (v == 0) {
        throw InvalidArgument(std::string(name) + " must be a positive integer");
    }
}

Rational inv_factorial(unsigned n) { return Rational(1) / Rational(factorial(n)); }

// Block (i,j) of a mu x nu block matrix with q x r blocks, filled by f(i, j).
template <typename BlockFn>
PolyMatrix block_matrix(const Params& p, BlockFn f) {
    PolyMatrix m(std::size_t{p.mu} * p.q, std::size_t{p.nu} * p.r);
    for (unsigned i = 0; i < p.mu; ++i) {
        for (unsigned j = 0; j < p.nu; ++j) {
            m.set_block(std::size_t{i} * p.q, std::size_t{j} * p.r, f(i, j));
        }
    }
    return m;
}

PolyMatrix make_L_signed(unsigned m, unsigned k, bool alternate) {
    require_positive(m, "m");
    require_positive(k, "k");
    const PolyMatrix j = make_J(k);
    std::vector<PolyMatrix> powers{PolyMatrix::identity(k)};
    for (unsigned t = 1; t < m; ++t) {
        powers.push_back(powers.back() * j);
    }
    PolyMatrix l(std::size_t{m} * k, std::size_t{m} * k);
    for (unsigned a = 0; a < m; ++a) {
        for (unsigned b = 0; b <= a; ++b) {
            Rational c(binomial(a, b));
            if (alternate && (a - b) % 2 == 1) {
                c = -c;
            }
            l.set_block(std::size_t{a} * k, std::size_t{b} * k, powers[a - b] * c);
        }
    }
    return l;
}

} // namespace

void Params::validate() const {
    require_positive(q, "q");
    require_positive(r, "r");
    require_positive(mu, "mu");
    require_positive(nu, "nu");
}

std::string to_string(const Params& p) {
    return "(q=" + std::to_string(p.q) + ", r=" + std::to_string(p.r) + ", mu=" + std::to_string(p.mu) +
           ", nu=" + std::to_string(p.nu) + ")";
}

PolyMatrix make_u(unsigned q) {
    require_positive(q, "q");
    PolyMatrix u(q, 1);
    for (unsigned i = 0; i < q; ++i) {
        u(i, 0) = Poly::monomial(1, i);
    }
    return u;
}

PolyMatrix make_w(unsigned r) { return make_u(r).transpose(); }

PolyMatrix make_M(unsigned q, unsigned r) {
    require_positive(q, "q");
    require_positive(r, "r");
    PolyMatrix m(q, r);
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j < r; ++j) {
            m(i, j) = Poly::monomial(1, i + j);
        }
    }
    return m;
}

PolyMatrix make_M_deriv(unsigned q, unsigned r, unsigned k) { return make_M(q, r).derivative(k); }

PolyMatrix make_M_deriv(const Params& p, unsigned k) { return make_M_deriv(p.q, p.r, k); }

PolyMatrix make_w_j(unsigned r, unsigned j) {
    require_positive(r, "r");
    if (j > r) {
        throw IndexOutOfRange("w_j needs j <= r, got j=" + std::to_string(j) + ", r=" + std::to_string(r));
    }
    PolyMatrix w(1, r - j);
    for (unsigned i = 0; i < r - j; ++i) {
        w(0, i) = Poly::monomial(1, i);
    }
    return w;
}

PolyMatrix make_M_j(unsigned q, unsigned r, unsigned j) { return make_u(q) * make_w_j(r, j); }

PolyMatrix make_calM(const Params& p) {
    p.validate();
    std::vector<PolyMatrix> derivs;
    for (unsigned k = 0; k + 1 < p.mu + p.nu; ++k) {
        derivs.push_back(make_M_deriv(p.q, p.r, k));
    }
    return block_matrix(p, [&](unsigned i, unsigned j) { return derivs[i + j]; });
}

PolyMatrix make_calN(const Params& p) {
    p.validate();
    std::vector<PolyMatrix> derivs;
    for (unsigned k = 0; k + 1 < p.mu + p.nu; ++k) {
        derivs.push_back(make_M_deriv(p.q, p.r, k));
    }
    return block_matrix(p, [&](unsigned i, unsigned j) { return derivs[i + j] * (inv_factorial(i) * inv_factorial(j)); });
}

PolyMatrix make_calM0(unsigned q, unsigned r, unsigned nu) { return make_calM({q, r, 1, nu}); }

PolyMatrix make_calN0(unsigned q, unsigned r, unsigned nu) { return make_calN({q, r, 1, nu}); }

PolyMatrix make_U(unsigned q) {
    const PolyMatrix u = make_u(q);
    std::vector<PolyMatrix> cols;
    for (unsigned i = 0; i < q; ++i) {
        cols.push_back(u.derivative(i));
    }
    return hstack(cols);
}

PolyMatrix make_W(unsigned r) { return make_U(r).transpose(); }

PolyMatrix make_U_tilde(unsigned q) {
    require_positive(q, "q");
    PolyMatrix u(q, q);
    for (unsigned i = 0; i < q; ++i) {
        for (unsigned j = 0; j <= i; ++j) {
            u(i, j) = Poly::monomial(Rational(binomial(i, j)), i - j);
        }
    }
    return u;
}

PolyMatrix make_W_tilde(unsigned r) { return make_U_tilde(r).transpose(); }

PolyMatrix make_U_inverse(unsigned q) { return inverse_factorial_diag(q) * make_U_tilde(q).scale_argument(-1); }

PolyMatrix make_W_inverse(unsigned r) { return make_W_tilde(r).scale_argument(-1) * inverse_factorial_diag(r); }

PolyMatrix make_J(unsigned k) {
    require_positive(k, "k");
    return PolyMatrix::identity(k) * Poly::z() + shift_matrix(k).transpose();
}

PolyMatrix make_Ak(unsigned q, unsigned r, unsigned k) {
    require_positive(q, "q");
    require_positive(r, "r");
    PolyMatrix a(q, r);
    for (unsigned i = 0; i < q && i <= k; ++i) {
        for (unsigned j = 0; j < r && i + j <= k; ++j) {
            a(i, j) = Poly::monomial(Rational(multinomial(k, i, j)), k - i - j);
        }
    }
    return a;
}

PolyMatrix make_Ak0(unsigned q, unsigned r, unsigned k) {
    require_positive(q, "q");
    require_positive(r, "r");
    PolyMatrix a(q, r);
    for (unsigned i = 0; i < q && i <= k; ++i) {
        if (k - i < r) {
            a(i, k - i) = Poly(Rational(binomial(k, i)));
        }
    }
    return a;
}

PolyMatrix make_Atilde_k(unsigned q, unsigned r, unsigned k) {
    require_positive(q, "q");
    require_positive(r, "r");
    PolyMatrix a(q, r);
    for (unsigned i = 0; i < q && i <= k; ++i) {
        if (k - i < r) {
            a(i, k - i) = Poly(Rational(factorial(k)));
        }
    }
    return a;
}

PolyMatrix make_calA(const Params& p) {
    p.validate();
    std::vector<PolyMatrix> blocks;
    for (unsigned k = 0; k + 1 < p.mu + p.nu; ++k) {
        blocks.push_back(make_Ak(p.q, p.r, k));
    }
    return block_matrix(p, [&](unsigned i, unsigned j) { return blocks[i + j]; });
}

PolyMatrix make_calAbar(const Params& p) {
    p.validate();
    PolyMatrix m(std::size_t{p.mu} * p.q, std::size_t{p.nu} * p.r);
    for (unsigned i = 0; i < p.mu && i < p.r; ++i) {
        for (unsigned j = 0; j < p.nu && j < p.q; ++j) {
            // e_j f_i^T inside block (i,j)
            m(std::size_t{i} * p.q + j, std::size_t{j} * p.r + i) = Poly(1);
        }
    }
    return m;
}

PolyMatrix make_calAhat(const Params& p) {
    p.validate();
    return block_matrix(p, [&](unsigned i, unsigned j) {
        PolyMatrix b(p.q, p.r);
        const unsigned s = i + j;
        for (unsigned k = 0; k < p.q && k <= s; ++k) {
            if (s - k < p.r) {
                b(k, s - k) = Poly(Rational(binomial(s, i)));
            }
        }
        return b;
    });
}

PolyMatrix make_calAtilde(const Params& p) {
    p.validate();
    return block_matrix(p, [&](unsigned i, unsigned j) { return make_Atilde_k(p.q, p.r, i + j); });
}

PolyMatrix make_L(unsigned m, unsigned k) { return make_L_signed(m, k, false); }

PolyMatrix make_L_inverse(unsigned m, unsigned k) { return make_L_signed(m, k, true); }

} // namespace hankelmonde
