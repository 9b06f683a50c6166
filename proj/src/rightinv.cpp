#include "hankelmonde/rightinv.hpp"

#include "hankelmonde/errors.hpp"
#include "hankelmonde/oracle.hpp"

namespace hankelmonde {

namespace {

std::string params_text(unsigned q, unsigned r, unsigned nu) {
    return "q=" + std::to_string(q) + ", r=" + std::to_string(r) + ", nu=" + std::to_string(nu);
}

} // namespace

PolyMatrix make_Bk(unsigned q, unsigned r, unsigned k) {
    if (q == 0 || r == 0) {
        throw InvalidArgument("q and r must be positive integers");
    }
    PolyMatrix b(r, q);
    const Rational c(binomial(q, k + 1));
    for (unsigned i = 0; i < r && i <= k; ++i) {
        const unsigned j = k - i;
        if (j < q) {
            b(i, j) = Poly(i % 2 == 0 ? c : Rational(-c));
        }
    }
    return b;
}

PolyMatrix make_B0(unsigned q, unsigned r, unsigned nu) {
    std::vector<PolyMatrix> blocks;
    for (unsigned k = 0; k < nu; ++k) {
        blocks.push_back(make_Bk(q, r, k));
    }
    return vstack(blocks);
}

PolyMatrix make_calA0(unsigned q, unsigned r, unsigned nu) { return make_calA({q, r, 1, nu}).eval(0); }

Integer a0b_diagonal_sum(unsigned q, unsigned i) {
    Integer sum(0);
    for (unsigned k = i; k < q; ++k) {
        const Integer term = binomial(k, i) * binomial(q, k + 1);
        sum += (k - i) % 2 == 0 ? term : Integer(-term);
    }
    return sum;
}

bool verify_a0b(unsigned q, unsigned r, unsigned nu) {
    if (nu < q) {
        throw CaseViolation("A0 B0 = I needs nu >= q (A0 has rank min{nu,q}); got " + params_text(q, r, nu));
    }
    bool ok = (make_calA0(q, r, nu) * make_B0(q, r, nu) == eye(q));
    for (unsigned i = 0; i < q; ++i) {
        ok = ok && a0b_diagonal_sum(q, i) == 1;
    }
    return ok;
}

PolyMatrix make_Xk(unsigned q, unsigned r, unsigned k) {
    const PolyMatrix b = make_Bk(q, r, k);
    return b * shift_matrix(q).transpose() + shift_matrix(r) * b;
}

PolyMatrix make_Hk(unsigned q, unsigned r, unsigned k) {
    return make_W_tilde(r) * inverse_factorial_diag(r) * make_Bk(q, r, k) * inverse_factorial_diag(q) *
           make_U_tilde(q);
}

PolyMatrix make_S_hat(unsigned k) { return inverse_factorial_diag(k) * shift_matrix(k) * factorial_diag(k); }

PolyMatrix nilpotent_exp(const PolyMatrix& n) {
    if (n.rows() != n.cols()) {
        throw NonSquare("exponential of a non-square matrix");
    }
    const PolyMatrix zn = n * Poly::z();
    PolyMatrix sum = eye(n.rows());
    PolyMatrix term = eye(n.rows());
    for (std::size_t k = 1; k <= n.rows(); ++k) {
        term = term * zn * (Rational(1) / Rational(static_cast<unsigned long>(k)));
        sum += term;
    }
    return sum;
}

RightInverseResult make_C_constant(unsigned q, unsigned r, unsigned nu) {
    if (r < q || nu < q) {
        throw CaseViolation("a constant right inverse of calM0(z) needs r >= q and nu >= q; got " +
                            params_text(q, r, nu));
    }
    RightInverseResult res;
    res.inverse = kron(eye(nu), inverse_factorial_diag(r)) * make_B0(q, r, nu) * inverse_factorial_diag(q);
    res.is_constant = res.inverse.is_constant();
    res.affine_freedom_dim = std::size_t{nu - q} * r * q;
    return res;
}

PolyMatrix constant_kernel_basis(unsigned q, unsigned r, unsigned nu) {
    if (q == 0 || r == 0 || nu == 0) {
        throw InvalidArgument("q, r and nu must be positive integers");
    }
    if (nu <= q) {
        return PolyMatrix(std::size_t{nu} * r, 0);
    }
    // A constant x lies in every ker calM0(z) iff
    //   sum_n C(n,k) T^{n-k} x_n = 0 for k = 0..q-1,   T = S_r diag(0, 1, ..., r-1),
    // because w^(j) = w T^j. Take x_q..x_{nu-1} free; the equations are unit
    // upper triangular in x_0..x_{q-1}, and for x_n = I (n >= q) alone they give
    //   x_k = (-1)^{q-k} C(n,k) C(n-k-1, q-1-k) T^{n-k}.
    PolyMatrix t(r, r);
    for (unsigned i = 0; i + 1 < r; ++i) {
        t(i, i + 1) = Poly(static_cast<long>(i + 1));
    }
    PolyMatrix basis(std::size_t{nu} * r, std::size_t{nu - q} * r);
    for (unsigned n = q; n < nu; ++n) {
        const std::size_t col = std::size_t{n - q} * r;
        basis.set_block(std::size_t{n} * r, col, eye(r));
        for (unsigned k = 0; k < q; ++k) {
            const Integer c = binomial(n, k) * binomial(n - k - 1, q - 1 - k);
            const Rational coeff((q - k) % 2 == 0 ? c : Integer(-c));
            basis.set_block(std::size_t{k} * r, col, t.power(n - k) * coeff);
        }
    }
    return basis;
}

RightInverseResult make_M_right_inverse(const Params& p) {
    p.validate();
    if (p.nu < p.q || p.mu > p.r) {
        throw CaseViolation("calM(z) has a right inverse only when nu >= q and mu <= r; got " + to_string(p));
    }
    const PolyMatrix lnu_t_inv = make_L_inverse(p.nu, p.r).eval(0).transpose();
    const PolyMatrix lmu_inv = make_L_inverse(p.mu, p.q).eval(0);
    RightInverseResult res;
    res.inverse = kron(eye(p.nu), make_W_inverse(p.r)) * lnu_t_inv * make_calAbar(p).transpose() * lmu_inv *
                  kron(eye(p.mu), make_U_inverse(p.q));
    res.is_constant = res.inverse.is_constant();
    const std::size_t rows = std::size_t{p.mu} * p.q;
    res.affine_freedom_dim = (std::size_t{p.nu} * p.r - rows) * rows;
    return res;
}

PolyMatrix make_simple_M0_right_inverse(unsigned q, unsigned r, unsigned nu) {
    if (nu < q) {
        throw CaseViolation("calM0(z) has a right inverse only when nu >= q; got " + params_text(q, r, nu));
    }
    PolyMatrix f0(r, 1);
    f0(0, 0) = Poly(1);
    return kron(vstack({make_U_inverse(q), PolyMatrix(nu - q, q)}), f0);
}

bool constant_right_inverse_exists(const PolyMatrix& m) {
    const long deg = std::max(0L, m.max_degree());
    std::vector<PolyMatrix> coeff_blocks;
    std::vector<PolyMatrix> rhs_blocks;
    for (long d = 0; d <= deg; ++d) {
        PolyMatrix c(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                c(i, j) = Poly(m(i, j).coeff(static_cast<std::size_t>(d)));
            }
        }
        coeff_blocks.push_back(c);
        rhs_blocks.push_back(d == 0 ? eye(m.rows()) : PolyMatrix(m.rows(), m.rows()));
    }
    const PolyMatrix a = vstack(coeff_blocks);
    const PolyMatrix b = vstack(rhs_blocks);
    return rank_constant(a) == rank_constant(hstack({a, b}));
}

} // namespace hankelmonde
