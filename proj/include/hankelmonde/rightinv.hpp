#pragma once

// Right inverses of calM0(z) and calM(z): the combinatorial right inverse
// B0 of A0 = (A^0(0), ..., A^{nu-1}(0)), the constant right inverse C of
// calM0(z), the basis of constant kernel vectors, and the general right
// inverse built from Abar^T.

#include "hankelmonde/generators.hpp"

namespace hankelmonde {

struct RightInverseResult {
    PolyMatrix inverse;
    bool is_constant = false;
    /// Dimension of the affine family of right inverses this one belongs to.
    std::size_t affine_freedom_dim = 0;
};

/// B^k, size r x q: (-1)^i C(q, k+1) where i + j = k, zero elsewhere
/// (so B^k = 0 for k >= q).
PolyMatrix make_Bk(unsigned q, unsigned r, unsigned k);
/// B0 = (B^0; ...; B^{nu-1}), size nu r x q.
PolyMatrix make_B0(unsigned q, unsigned r, unsigned nu);
/// A0 = (A^0(0), ..., A^{nu-1}(0)), size q x nu r.
PolyMatrix make_calA0(unsigned q, unsigned r, unsigned nu);

/// sum_{k=i}^{q-1} C(k,i) (-1)^{k-i} C(q,k+1), the diagonal entry i of A0 B0.
Integer a0b_diagonal_sum(unsigned q, unsigned i);

/// True iff A0 B0 = I_q and every diagonal sum above equals 1. This holds
/// exactly when r >= q; for r < q the r-row blocks B^k truncate the sums.
/// Throws CaseViolation when nu < q (A0 then has rank nu < q).
bool verify_a0b(unsigned q, unsigned r, unsigned nu);

/// X^k = B^k S_q^T + S_r B^k. Zero unless r <= k <= q-1.
PolyMatrix make_Xk(unsigned q, unsigned r, unsigned k);

/// H_k(z) = Wtilde_r(z) D_r^{-1} B^k D_q^{-1} Utilde_q(z), size r x q.
PolyMatrix make_Hk(unsigned q, unsigned r, unsigned k);

/// D_k^{-1} S_k D_k. With this orientation for both sides,
/// H_k' = Shat_r H_k + H_k Shat_q^T.
PolyMatrix make_S_hat(unsigned k);

/// exp(z n) for a constant nilpotent n, as the finite Taylor sum.
PolyMatrix nilpotent_exp(const PolyMatrix& n);

/// C = (I_nu x D_r^{-1}) B0 D_q^{-1}, a constant right inverse of calM0(z).
/// Throws CaseViolation unless r >= q and nu >= q.
RightInverseResult make_C_constant(unsigned q, unsigned r, unsigned nu);

/// Constant nu r x ((nu-q)^+ r) matrix whose columns span the vectors lying
/// in the kernel of calM0(z) for every z (equivalently the kernel of calM(z)
/// for any mu >= r). The bottom (nu-q) r rows are the identity; the top q
/// block rows are multiples of powers of T = S_r diag(0, ..., r-1).
PolyMatrix constant_kernel_basis(unsigned q, unsigned r, unsigned nu);

/// (I_nu x W_r^{-1}) (L_{nu,r}(0)^T)^{-1} Abar^T L_{mu,q}(0)^{-1} (I_mu x U_q^{-1}).
/// Throws CaseViolation unless nu >= q and mu <= r (calM(z) then has full row rank).
RightInverseResult make_M_right_inverse(const Params& p);

/// (U_q(z)^{-1}; 0_{(nu-q) x q}) x f_0, a right inverse of calM0(z).
/// Throws CaseViolation when nu < q.
PolyMatrix make_simple_M0_right_inverse(unsigned q, unsigned r, unsigned nu);

/// Whether m(z) C = I has a solution C independent of z: stacks the
/// coefficient matrices of m by degree and compares oracle ranks of the
/// coefficient matrix and the augmented matrix.
bool constant_right_inverse_exists(const PolyMatrix& m);

} // namespace hankelmonde
