#pragma once

// Symbolic checks of the factorization identities relating calA(z), calM(z),
// calN(z) and their constant cores, plus closed-form rank and determinants.
//
// Identity labels (all checked as exact polynomial identities):
//   lal1   calA(z) = L_{mu,q}(z) Abar L_{nu,r}(z)^T
//   aa0    the same at z = 0
//   m      calM(z) = (I_mu x U_q(z)) calA(0) (I_nu x W_r(z))
//   mm     calM(z) = (I_mu x Utilde_q(z)) Atilde (I_nu x Wtilde_r(z))
//   mt     calN(z) = (I_mu x Utilde_q(z)) Ahat (I_nu x Wtilde_r(z))
//   aahat  (D_mu x I_q) Ahat (D_nu x I_r) = (I_mu x D_q) calA(0) (I_nu x D_r)
//   aa1    Atilde = (D_mu x I_q) Ahat (D_nu x I_r)
//   aa2    Atilde = (I_mu x D_q) calA(0) (I_nu x D_r)
//   mdnd   calM(z) = (D_mu x I_q) calN(z) (D_nu x I_r)
//   aza0   calA(z) = (Utilde_mu(z) x I_q) calA(0) (Wtilde_nu(z) x I_r)
//   mzm0   calM(z) = (I_mu x Utilde_q(z)) calM(0) (I_nu x Wtilde_r(z))
//   mzaz   calM(z) = (Utilde_mu(-z) x U_q(z)) calA(z) (Wtilde_nu(-z) x W_r(z))
//   nzaz   calN(z) = (U_mu(z)^{-1} x U_q(z)) calA(z) (W_nu(z)^{-1} x W_r(z))
//   nzn0   calN(z) = (I_mu x Utilde_q(z)) calN(0) (I_nu x Wtilde_r(z))
//   pmuq   L_{mu,q}(z) L_{mu,q}(0)^{-1} = Utilde_mu(z) x I_q
// ("x" is the Kronecker product.)

#include "hankelmonde/generators.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace hankelmonde {

struct FactorizationReport {
    std::string identity_name;
    Params params;
    bool holds = false;
    /// Largest degree among nonzero entries of lhs - rhs; 0 when the identity holds.
    unsigned lhs_minus_rhs_max_degree = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Compares two matrices symbolically and times the comparison together with
/// whatever work the caller did inside `build`.
template <typename Build>
FactorizationReport check_identity(std::string name, const Params& p, Build build);

/// All identity labels in a fixed order.
const std::vector<std::string>& identity_labels();
bool is_identity_label(const std::string& label);

/// Checks a single labelled identity. Throws InvalidArgument for an unknown label.
FactorizationReport verify_identity(const std::string& label, const Params& p);
/// lal1 or aa0 checked against a caller-supplied Abar (negative controls
/// feed a corrupted one). Throws InvalidArgument for any other label.
FactorizationReport verify_abar_identity(const std::string& label, const Params& p, const PolyMatrix& abar);

/// lal1 together with aa0 (holds iff both do).
FactorizationReport verify_lal1(const Params& p);
/// As above, but with a caller-supplied Abar (used to inject faults).
FactorizationReport verify_lal1(const Params& p, const PolyMatrix& abar);

/// m together with mm.
FactorizationReport verify_m_factorization(const Params& p);
/// mt together with aahat, aa1 and aa2.
FactorizationReport verify_n_factorization(const Params& p);
/// One report each for aza0, mzm0, mzaz, nzaz, nzn0.
std::vector<FactorizationReport> verify_further_factorizations(const Params& p);
/// Every labelled identity, one report each.
std::vector<FactorizationReport> factorization_suite(const Params& p);

/// min{mu,r} * min{nu,q}: the rank of calA(z), calM(z) and calN(z) for every z.
std::size_t rank_formula(const Params& p);

struct DetClosedForms {
    std::optional<Rational> detAbar;
    std::optional<Rational> detA;
    std::optional<Rational> detM;
    std::optional<Rational> detN;
};

/// Closed-form determinants, populated only when mu = r and nu = q
/// (the only shapes where the matrices are square and nonsingular).
DetClosedForms det_closed_forms(const Params& p);

/// (-1)^{qr(q-1)(r-1)/4}
Rational abar_det_sign(unsigned q, unsigned r);

/// Number of inversions of the permutation encoded by Abar for mu = r,
/// nu = q, counted literally from the matrix.
std::size_t abar_inversion_count(unsigned q, unsigned r);

// ---------------------------------------------------------------------------

template <typename Build>
FactorizationReport check_identity(std::string name, const Params& p, Build build) {
    const auto start = std::chrono::steady_clock::now();
    const auto [lhs, rhs] = build();
    FactorizationReport rep;
    rep.identity_name = std::move(name);
    rep.params = p;
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        rep.holds = false;
    } else {
        const PolyMatrix diff = lhs - rhs;
        rep.holds = diff.is_zero();
        rep.lhs_minus_rhs_max_degree = rep.holds ? 0 : static_cast<unsigned>(std::max(0L, diff.max_degree()));
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

} // namespace hankelmonde
