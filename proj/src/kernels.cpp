#include "hankelmonde/kernels.hpp"

#include "hankelmonde/errors.hpp"
#include "hankelmonde/oracle.hpp"

#include <algorithm>

namespace hankelmonde {

namespace {

std::string params_text(unsigned q, unsigned r, unsigned nu) {
    return "q=" + std::to_string(q) + ", r=" + std::to_string(r) + ", nu=" + std::to_string(nu);
}

// I_n x I_r - S_n x G
PolyMatrix bidiagonal_tail(unsigned n, unsigned r) {
    return PolyMatrix::identity(std::size_t{n} * r) - kron(shift_matrix(n), make_G(r));
}

PolyMatrix product_of_Kk(unsigned nu, unsigned r, unsigned factors) {
    PolyMatrix acc = make_Kk(nu, r, 0);
    for (unsigned k = 1; k < factors; ++k) {
        acc = acc * make_Kk(nu, r, k);
    }
    return acc;
}

} // namespace

std::string to_string(KernelCase c) {
    switch (c) {
    case KernelCase::NuLeQ:
        return "NU_LE_Q";
    case KernelCase::QLtNuLtQpr:
        return "Q_LT_NU_LT_QPR";
    case KernelCase::NuGeQpr:
        return "NU_GE_QPR";
    }
    return "?";
}

std::string to_string(KernelTarget t) {
    switch (t) {
    case KernelTarget::N0:
        return "N0";
    case KernelTarget::N:
        return "N";
    case KernelTarget::M:
        return "M";
    }
    return "?";
}

KernelTarget parse_kernel_target(const std::string& s) {
    if (s == "N0") {
        return KernelTarget::N0;
    }
    if (s == "N") {
        return KernelTarget::N;
    }
    if (s == "M") {
        return KernelTarget::M;
    }
    throw InvalidArgument("unknown kernel target '" + s + "' (expected N0, N or M)");
}

KernelCase kernel_case(unsigned q, unsigned r, unsigned nu) {
    if (nu <= q) {
        return KernelCase::NuLeQ;
    }
    return nu < q + r ? KernelCase::QLtNuLtQpr : KernelCase::NuGeQpr;
}

PolyMatrix make_F(unsigned r) { return make_Fk(r, 0); }

PolyMatrix make_Fk(unsigned r, unsigned k) {
    if (r == 0) {
        throw InvalidArgument("r must be a positive integer");
    }
    if (k >= r) {
        return {};
    }
    const unsigned n = r - k;
    PolyMatrix f(n, n - 1);
    for (unsigned i = 0; i + 1 < n; ++i) {
        f(i, i) = Poly{0, -1};
        f(i + 1, i) = Poly(1);
    }
    return f;
}

PolyMatrix make_K(unsigned nu, unsigned r) { return make_Kk(nu, r, 0); }

PolyMatrix make_Kk(unsigned nu, unsigned r, unsigned k) {
    if (nu == 0) {
        throw InvalidArgument("nu must be a positive integer");
    }
    const PolyMatrix f = make_Fk(r, k);
    return kron(eye(nu), f) + kron(shift_matrix(nu), f.derivative());
}

PolyMatrix make_G(unsigned r) {
    if (r == 0) {
        throw InvalidArgument("r must be a positive integer");
    }
    PolyMatrix g(r, r);
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = i + 1; j < r; ++j) {
            g(i, j) = Poly::monomial(1, j - i - 1);
        }
    }
    return g;
}

PolyMatrix make_G_resolvent(unsigned r) {
    const PolyMatrix s = shift_matrix(r);
    const PolyMatrix zs = s * Poly::z();
    PolyMatrix sum = eye(r);
    PolyMatrix term = eye(r);
    for (unsigned k = 1; k < r; ++k) {
        term = term * zs;
        sum += term;
    }
    return s * sum;
}

PolyMatrix make_Gkj(unsigned r, unsigned k, unsigned j) {
    if (k >= r || j >= r) {
        throw IndexOutOfRange("G_{kj} needs 0 <= k, j <= r-1; got k=" + std::to_string(k) +
                              ", j=" + std::to_string(j) + ", r=" + std::to_string(r));
    }
    return make_G(r).block(0, 0, r - k, r - j);
}

PolyMatrix make_calGi(unsigned r, unsigned i) {
    if (i >= r) {
        throw IndexOutOfRange("calG_i needs 0 <= i <= r-1; got i=" + std::to_string(i) + ", r=" + std::to_string(r));
    }
    PolyMatrix acc = eye(r);
    for (unsigned t = 1; t <= i; ++t) {
        acc = make_Gkj(r, t, t - 1) * acc;
    }
    return acc;
}

PolyMatrix make_calGi_closed(unsigned r, unsigned i) {
    if (i >= r) {
        throw IndexOutOfRange("calG_i needs 0 <= i <= r-1; got i=" + std::to_string(i) + ", r=" + std::to_string(r));
    }
    if (i == 0) {
        return eye(r);
    }
    return make_Gkj(r, i, 0) * make_G(r).power(i - 1);
}

PolyMatrix make_Kbar(unsigned q, unsigned r, unsigned nu) {
    if (kernel_case(q, r, nu) != KernelCase::QLtNuLtQpr) {
        throw CaseViolation("Kbar is defined only for q < nu < q + r; got " + params_text(q, r, nu));
    }
    return make_Kbar_j(q, r, nu, 0);
}

PolyMatrix make_Kbar_post_multiplier(unsigned q, unsigned r, unsigned nu) {
    if (kernel_case(q, r, nu) != KernelCase::QLtNuLtQpr) {
        throw CaseViolation("Kbar is defined only for q < nu < q + r; got " + params_text(q, r, nu));
    }
    const unsigned n = nu - q;
    const PolyMatrix g = make_G(r);
    PolyMatrix t(std::size_t{n} * r, std::size_t{n} * r);
    PolyMatrix power = eye(r);
    for (unsigned d = 0; d < n; ++d) {
        for (unsigned a = 0; a + d < n; ++a) {
            t.set_block(std::size_t{a} * r, std::size_t{a + d} * r, power);
        }
        power = power * g;
    }
    return block_diag({eye(std::size_t{q} * (r - 1)), t});
}

PolyMatrix make_Kbar_alternative(unsigned q, unsigned r, unsigned nu) {
    if (kernel_case(q, r, nu) != KernelCase::QLtNuLtQpr) {
        throw CaseViolation("Kbar is defined only for q < nu < q + r; got " + params_text(q, r, nu));
    }
    const unsigned n = nu - q;
    const PolyMatrix f = make_F(r);
    PolyMatrix out(std::size_t{nu} * r, std::size_t{nu} * r - q);
    out.set_block(0, 0, kron(eye(q), f) + kron(shift_matrix(q), f.derivative()));
    const PolyMatrix g = make_G(r);
    PolyMatrix power = g;
    for (unsigned b = 0; b < n; ++b) {
        out.set_block(std::size_t{q - 1} * r, std::size_t{q} * (r - 1) + std::size_t{b} * r, -power);
        power = power * g;
    }
    out.set_block(std::size_t{q} * r, std::size_t{q} * (r - 1), eye(std::size_t{n} * r));
    return out;
}

PolyMatrix make_Kbar_j(unsigned q, unsigned r, unsigned nu, unsigned j) {
    if (q == 0 || r == 0) {
        throw InvalidArgument("q and r must be positive integers");
    }
    if (nu <= q) {
        throw CaseViolation("the factors Kbar_j need nu > q; got " + params_text(q, r, nu));
    }
    const unsigned n = nu - q;
    const PolyMatrix tail = bidiagonal_tail(n, r);
    if (j >= r) {
        return tail;
    }
    if (j == r - 1) {
        PolyMatrix out(q + std::size_t{n} * r, std::size_t{n} * r);
        out.set_block(q, 0, tail);
        return out;
    }
    const PolyMatrix f = make_Fk(r, j);
    const std::size_t top_rows = std::size_t{q} * (r - j);
    const std::size_t top_cols = std::size_t{q} * (r - j - 1);
    PolyMatrix out(top_rows + std::size_t{n} * r, top_cols + std::size_t{n} * r);
    out.set_block(0, 0, kron(eye(q), f) + kron(shift_matrix(q), f.derivative()));
    // -(1/j!) G_{j0}^{(j)} in the last F block row, first tail block column
    const PolyMatrix coupling = make_Gkj(r, j, 0).derivative(j) * (Rational(-1) / Rational(factorial(j)));
    out.set_block(std::size_t{q - 1} * (r - j), top_cols, coupling);
    out.set_block(top_rows, top_cols, tail);
    return out;
}

PolyMatrix make_calKbar(unsigned q, unsigned r, unsigned nu, unsigned i) {
    PolyMatrix acc = make_Kbar_j(q, r, nu, 0);
    for (unsigned j = 1; j <= i; ++j) {
        acc = acc * make_Kbar_j(q, r, nu, j);
    }
    return acc;
}

KernelBasis kernel_basis_N0(unsigned q, unsigned r, unsigned nu) {
    const Params p{q, r, 1, nu};
    p.validate();
    KernelBasis kb;
    kb.params = p;
    kb.target = KernelTarget::N0;
    kb.case_tag = kernel_case(q, r, nu);
    kb.claimed_dim = kernel_dim(p, KernelTarget::N0);
    switch (kb.case_tag) {
    case KernelCase::NuLeQ:
        kb.basis = make_K(nu, r);
        break;
    case KernelCase::QLtNuLtQpr:
        kb.basis = make_Kbar(q, r, nu);
        break;
    case KernelCase::NuGeQpr: {
        const PolyMatrix star = kernel_basis_N0(q, r, q + r - 1).basis;
        kb.basis = block_diag({star, eye(std::size_t{r} * (nu - q - r + 1))});
        break;
    }
    }
    return kb;
}

KernelBasis kernel_basis_N(const Params& p) {
    p.validate();
    const unsigned q = p.q, r = p.r, mu = p.mu, nu = p.nu;
    KernelBasis kb;
    kb.params = p;
    kb.target = KernelTarget::N;
    kb.case_tag = kernel_case(q, r, nu);
    kb.claimed_dim = kernel_dim(p, KernelTarget::N);
    switch (kb.case_tag) {
    case KernelCase::NuLeQ:
        kb.basis = mu < r ? product_of_Kk(nu, r, mu) : PolyMatrix(std::size_t{nu} * r, 0);
        break;
    case KernelCase::QLtNuLtQpr:
        kb.basis = make_calKbar(q, r, nu, mu - 1);
        break;
    case KernelCase::NuGeQpr: {
        const PolyMatrix star = kernel_basis_N({q, r, mu, q + r - 1}).basis;
        kb.basis = block_diag({star, eye(std::size_t{r} * (nu - q - r + 1))});
        break;
    }
    }
    return kb;
}

KernelBasis kernel_basis_M(const Params& p) {
    KernelBasis kb = kernel_basis_N(p);
    kb.target = KernelTarget::M;
    kb.basis = kron(inverse_factorial_diag(p.nu), eye(p.r)) * kb.basis;
    return kb;
}

KernelBasis kernel_basis(const Params& p, KernelTarget target) {
    switch (target) {
    case KernelTarget::N0:
        return kernel_basis_N0(p.q, p.r, p.nu);
    case KernelTarget::N:
        return kernel_basis_N(p);
    case KernelTarget::M:
        return kernel_basis_M(p);
    }
    throw InvalidArgument("unknown kernel target");
}

std::size_t kernel_dim(const Params& p, KernelTarget target) {
    p.validate();
    const std::size_t cols = std::size_t{p.nu} * p.r;
    if (target == KernelTarget::N0) {
        return cols - std::min(p.nu, p.q);
    }
    if (p.nu <= p.q) {
        return std::size_t{p.nu} * (p.r > p.mu ? p.r - p.mu : 0);
    }
    return cols - std::size_t{p.q} * std::min(p.mu, p.r);
}

PolyMatrix kernel_target_matrix(const Params& p, KernelTarget target) {
    switch (target) {
    case KernelTarget::N0:
        return make_calN0(p.q, p.r, p.nu);
    case KernelTarget::N:
        return make_calN(p);
    case KernelTarget::M:
        return make_calM(p);
    }
    throw InvalidArgument("unknown kernel target");
}

KernelBasis reparametrize(const KernelBasis& basis, const PolyMatrix& transform) {
    if (transform.rows() != transform.cols()) {
        throw NonSquare("reparametrization matrix must be square");
    }
    if (transform.rows() != basis.basis.cols()) {
        throw ShapeMismatch("reparametrization matrix has " + std::to_string(transform.rows()) +
                            " rows but the basis has " + std::to_string(basis.basis.cols()) + " columns");
    }
    // det is a polynomial of degree <= n * max_degree; it is a nonzero
    // constant iff it takes one nonzero value at that many points plus one.
    const long bound = static_cast<long>(transform.rows()) * std::max(0L, transform.max_degree());
    const Rational d0 = det_at(transform, 0);
    bool unimodular = d0 != 0;
    for (long t = 1; unimodular && t <= bound; ++t) {
        unimodular = det_at(transform, t) == d0;
    }
    if (!unimodular) {
        throw InvalidArgument("reparametrization matrix is not unimodular");
    }
    KernelBasis out = basis;
    out.basis = basis.basis * transform;
    return out;
}

KernelCheck check_kernel_basis(const PolyMatrix& target, const KernelBasis& kb, std::size_t formula_dim,
                               const std::vector<Rational>& points) {
    KernelCheck c;
    if (target.cols() != kb.basis.rows()) {
        return c;
    }
    c.annihilates = is_zero_poly_matrix(target * kb.basis);
    c.dim_matches_formula = kb.basis.cols() == kb.claimed_dim && kb.claimed_dim == formula_dim;
    c.full_column_rank = true;
    c.spans_nullspace = true;
    for (const auto& z0 : points) {
        c.full_column_rank = c.full_column_rank && rank_at(kb.basis, z0) == kb.basis.cols();
        c.spans_nullspace = c.spans_nullspace && spans_equal_at(kb.basis, nullspace_at(target, z0), z0);
    }
    return c;
}

namespace detail {

PolyMatrix calN_row(unsigned q, unsigned r, unsigned nu, unsigned k, unsigned j) {
    const PolyMatrix mj = make_M_j(q, r, j);
    std::vector<PolyMatrix> blocks;
    for (unsigned i = 0; i < nu; ++i) {
        blocks.push_back(mj.derivative(k + i) * (Rational(1) / Rational(factorial(k) * factorial(i))));
    }
    return hstack(blocks);
}

} // namespace detail

} // namespace hankelmonde
