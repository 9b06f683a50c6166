#pragma once

// Closed-form polynomial bases for the right kernels of calN0(z) (one block
// row) and calN(z) (mu block rows), in the three regimes nu <= q,
// q < nu < q + r and nu >= q + r.

#include "hankelmonde/generators.hpp"

#include <string>
#include <vector>

namespace hankelmonde {

enum class KernelCase { NuLeQ, QLtNuLtQpr, NuGeQpr };
enum class KernelTarget { N0, N, M };

/// "NU_LE_Q", "Q_LT_NU_LT_QPR", "NU_GE_QPR".
std::string to_string(KernelCase c);
/// "N0", "N", "M".
std::string to_string(KernelTarget t);
/// Throws InvalidArgument for anything other than N0, N or M.
KernelTarget parse_kernel_target(const std::string& s);

KernelCase kernel_case(unsigned q, unsigned r, unsigned nu);

struct KernelBasis {
    PolyMatrix basis;
    KernelCase case_tag = KernelCase::NuLeQ;
    std::size_t claimed_dim = 0;
    KernelTarget target = KernelTarget::N0;
    Params params;
};

/// F(z): r x (r-1), -z on the diagonal and 1 below it. w(z) F(z) = 0.
PolyMatrix make_F(unsigned r);
/// F_k(z): same pattern, (r-k) x (r-1-k) for k <= r-1 (1 x 0 at k = r-1);
/// 0 x 0 for k >= r.
PolyMatrix make_Fk(unsigned r, unsigned k);
/// K(z) = I_nu x F + S_nu x F', size nu r x nu (r-1).
PolyMatrix make_K(unsigned nu, unsigned r);
/// K_k(z) = I_nu x F_k + S_nu x F_k'.
PolyMatrix make_Kk(unsigned nu, unsigned r, unsigned k);

/// r x r, entry (i,j) = z^{j-i-1} for j > i.
PolyMatrix make_G(unsigned r);
/// S (I - z S)^{-1} expanded as the finite sum S sum_k (zS)^k.
PolyMatrix make_G_resolvent(unsigned r);
/// Upper left (r-k) x (r-j) block of G. Throws IndexOutOfRange unless k, j <= r-1.
PolyMatrix make_Gkj(unsigned r, unsigned k, unsigned j);
/// calG_0 = I_r, calG_i = G_{i,i-1} ... G_{1,0}, size (r-i) x r.
PolyMatrix make_calGi(unsigned r, unsigned i);
/// calG_i = G_{i0} G^{i-1} for i >= 1 (I_r for i = 0).
PolyMatrix make_calGi_closed(unsigned r, unsigned i);

/// Kbar(z) for q < nu < q + r, size nu r x (nu r - q). Throws CaseViolation otherwise.
PolyMatrix make_Kbar(unsigned q, unsigned r, unsigned nu);
/// Unit upper triangular right factor turning Kbar into the sparse alternative basis.
PolyMatrix make_Kbar_post_multiplier(unsigned q, unsigned r, unsigned nu);
/// Kbar with the coupling row (-G, -G^2, ..., -G^{nu-q}) and identity tail.
PolyMatrix make_Kbar_alternative(unsigned q, unsigned r, unsigned nu);

/// The j-th factor Kbar_j(z) of the kernel of calN for nu > q.
/// Throws CaseViolation when nu <= q.
PolyMatrix make_Kbar_j(unsigned q, unsigned r, unsigned nu, unsigned j);
/// Kbar_0 ... Kbar_i.
PolyMatrix make_calKbar(unsigned q, unsigned r, unsigned nu, unsigned i);

KernelBasis kernel_basis_N0(unsigned q, unsigned r, unsigned nu);
KernelBasis kernel_basis_N(const Params& p);
/// (D_nu^{-1} x I_r) kernel_basis_N(p): a basis for the kernel of calM(z).
KernelBasis kernel_basis_M(const Params& p);
KernelBasis kernel_basis(const Params& p, KernelTarget target);

/// Dimension of the kernel: N0 gives nu r - min{nu,q}; N and M give
/// nu max(r-mu,0) when nu <= q and nu r - q min{mu,r} otherwise.
std::size_t kernel_dim(const Params& p, KernelTarget target);

/// The matrix a kernel basis of the given target annihilates.
PolyMatrix kernel_target_matrix(const Params& p, KernelTarget target);

/// basis * transform, after checking that transform is square with a
/// nonzero constant determinant. Throws NonSquare, ShapeMismatch or
/// InvalidArgument (not unimodular).
KernelBasis reparametrize(const KernelBasis& basis, const PolyMatrix& transform);

struct KernelCheck {
    bool annihilates = false;
    bool dim_matches_formula = false;
    bool full_column_rank = false;
    /// Span equality with the oracle nullspace at every sample point.
    bool spans_nullspace = false;

    bool ok() const { return annihilates && dim_matches_formula && full_column_rank && spans_nullspace; }
};

/// Checks `kb` against `target`: symbolic annihilation, the dimension
/// formula, full column rank and span equality at every point.
KernelCheck check_kernel_basis(const PolyMatrix& target, const KernelBasis& kb, std::size_t formula_dim,
                               const std::vector<Rational>& points);

namespace detail {

/// calN_j^k(z) = (1/k!) (M_j^(k)/0!, ..., M_j^(k+nu-1)/(nu-1)!), size q x nu (r-j).
/// With j = 0 this is block row k of calN.
PolyMatrix calN_row(unsigned q, unsigned r, unsigned nu, unsigned k, unsigned j = 0);

} // namespace detail

} // namespace hankelmonde
