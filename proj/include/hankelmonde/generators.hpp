#pragma once

// Constructors for the confluent Vandermonde building blocks and the block
// Hankel matrix polynomials built from them. Every function is pure.
//
// Naming: "cal" prefixes stand for calligraphic block matrices (calM is the
// mu x nu block matrix with q x r blocks M^(i+j)), "tilde"/"hat"/"bar" mirror
// the usual accents.

#include "hankelmonde/poly_matrix.hpp"

#include <string>

namespace hankelmonde {

/// The parameter quadruple. All four are positive; relations among them are
/// checked by the operations that need them.
struct Params {
    unsigned q = 1;
    unsigned r = 1;
    unsigned mu = 1;
    unsigned nu = 1;

    /// Throws InvalidArgument when any field is zero.
    void validate() const;

    friend bool operator==(const Params&, const Params&) = default;
};

std::string to_string(const Params& p);

/// Column (1, z, ..., z^{q-1}).
PolyMatrix make_u(unsigned q);
/// Row (1, z, ..., z^{r-1}).
PolyMatrix make_w(unsigned r);
/// M(z) = u(z) w(z), size q x r.
PolyMatrix make_M(unsigned q, unsigned r);
/// (d/dz)^k M(z); zero once k >= q + r - 1.
PolyMatrix make_M_deriv(unsigned q, unsigned r, unsigned k);
PolyMatrix make_M_deriv(const Params& p, unsigned k);

/// w_j(z) = (1, z, ..., z^{r-1-j}), the first r - j entries of w; 0 <= j <= r.
PolyMatrix make_w_j(unsigned r, unsigned j);
/// M_j(z) = u(z) w_j(z), size q x (r - j).
PolyMatrix make_M_j(unsigned q, unsigned r, unsigned j);

/// mu q x nu r block matrix with block (i,j) = M^(i+j)(z).
PolyMatrix make_calM(const Params& p);
/// mu q x nu r block matrix with block (i,j) = M^(i+j)(z) / (i! j!).
PolyMatrix make_calN(const Params& p);
/// The single block row (M, M', ..., M^(nu-1)).
PolyMatrix make_calM0(unsigned q, unsigned r, unsigned nu);
/// The single block row (M, M'/1!, ..., M^(nu-1)/(nu-1)!).
PolyMatrix make_calN0(unsigned q, unsigned r, unsigned nu);

/// U_q(z) = (u, u', ..., u^(q-1)).
PolyMatrix make_U(unsigned q);
/// W_r(z) with rows w, w', ..., w^(r-1).
PolyMatrix make_W(unsigned r);
/// Entry (i,j) = C(i,j) z^{i-j}; U_q = Utilde_q D_q.
PolyMatrix make_U_tilde(unsigned q);
/// Transpose of make_U_tilde(r); W_r = D_r Wtilde_r.
PolyMatrix make_W_tilde(unsigned r);
/// U_q(z)^{-1} = D_q^{-1} Utilde_q(-z).
PolyMatrix make_U_inverse(unsigned q);
/// W_r(z)^{-1} = Wtilde_r(-z) D_r^{-1}.
PolyMatrix make_W_inverse(unsigned r);

/// J_k(z) = z I_k + S_k^T.
PolyMatrix make_J(unsigned k);

/// A^k(z), q x r, entry (i,j) = k!/(i! j! (k-i-j)!) z^{k-i-j} for i+j <= k.
PolyMatrix make_Ak(unsigned q, unsigned r, unsigned k);
/// A^k(0): C(k,i) on the anti-diagonal i + j = k.
PolyMatrix make_Ak0(unsigned q, unsigned r, unsigned k);
/// Atilde^k = D_q A^k(0) D_r: k! on the anti-diagonal i + j = k.
PolyMatrix make_Atilde_k(unsigned q, unsigned r, unsigned k);

/// Block Hankel matrix with block (i,j) = A^{i+j}(z).
PolyMatrix make_calA(const Params& p);
/// Constant 0/1 matrix with block (i,j) = e_j f_i^T (zero block when j >= q or i >= r).
PolyMatrix make_calAbar(const Params& p);
/// Block (i,j) has C(i+j,i) on the anti-diagonal k + l = i + j.
PolyMatrix make_calAhat(const Params& p);
/// Block (i,j) = Atilde^{i+j}.
PolyMatrix make_calAtilde(const Params& p);

/// Block lower triangular m k x m k matrix, block (i,j) = C(i,j) J_k(z)^{i-j}.
PolyMatrix make_L(unsigned m, unsigned k);
/// Inverse of make_L: block (i,j) = (-1)^{i-j} C(i,j) J_k(z)^{i-j}.
PolyMatrix make_L_inverse(unsigned m, unsigned k);

/// Shorthand for a k x k identity.
inline PolyMatrix eye(std::size_t k) { return PolyMatrix::identity(k); }

} // namespace hankelmonde
