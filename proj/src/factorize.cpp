#include "hankelmonde/factorize.hpp"

#include "hankelmonde/errors.hpp"

#include <algorithm>
#include <utility>

namespace hankelmonde {

namespace {

using Pair = std::pair<PolyMatrix, PolyMatrix>;

PolyMatrix i_kron(unsigned n, const PolyMatrix& m) { return kron(eye(n), m); }
PolyMatrix kron_i(const PolyMatrix& m, unsigned n) { return kron(m, eye(n)); }

Pair build_lal1(const Params& p, const PolyMatrix& abar, bool at_zero) {
    PolyMatrix l_left = make_L(p.mu, p.q);
    PolyMatrix l_right = make_L(p.nu, p.r);
    PolyMatrix a = make_calA(p);
    if (at_zero) {
        l_left = l_left.eval(0);
        l_right = l_right.eval(0);
        a = a.eval(0);
    }
    return {a, l_left * abar * l_right.transpose()};
}

Pair build(const std::string& label, const Params& p) {
    const unsigned q = p.q, r = p.r, mu = p.mu, nu = p.nu;
    if (label == "lal1") {
        return build_lal1(p, make_calAbar(p), false);
    }
    if (label == "aa0") {
        return build_lal1(p, make_calAbar(p), true);
    }
    if (label == "m") {
        return {make_calM(p), i_kron(mu, make_U(q)) * make_calA(p).eval(0) * i_kron(nu, make_W(r))};
    }
    if (label == "mm") {
        return {make_calM(p), i_kron(mu, make_U_tilde(q)) * make_calAtilde(p) * i_kron(nu, make_W_tilde(r))};
    }
    if (label == "mt") {
        return {make_calN(p), i_kron(mu, make_U_tilde(q)) * make_calAhat(p) * i_kron(nu, make_W_tilde(r))};
    }
    if (label == "aahat") {
        return {kron_i(factorial_diag(mu), q) * make_calAhat(p) * kron_i(factorial_diag(nu), r),
                i_kron(mu, factorial_diag(q)) * make_calA(p).eval(0) * i_kron(nu, factorial_diag(r))};
    }
    if (label == "aa1") {
        return {make_calAtilde(p), kron_i(factorial_diag(mu), q) * make_calAhat(p) * kron_i(factorial_diag(nu), r)};
    }
    if (label == "aa2") {
        return {make_calAtilde(p), i_kron(mu, factorial_diag(q)) * make_calA(p).eval(0) * i_kron(nu, factorial_diag(r))};
    }
    if (label == "mdnd") {
        return {make_calM(p), kron_i(factorial_diag(mu), q) * make_calN(p) * kron_i(factorial_diag(nu), r)};
    }
    if (label == "aza0") {
        return {make_calA(p), kron_i(make_U_tilde(mu), q) * make_calA(p).eval(0) * kron_i(make_W_tilde(nu), r)};
    }
    if (label == "mzm0") {
        return {make_calM(p), i_kron(mu, make_U_tilde(q)) * make_calM(p).eval(0) * i_kron(nu, make_W_tilde(r))};
    }
    if (label == "mzaz") {
        return {make_calM(p), kron(make_U_tilde(mu).scale_argument(-1), make_U(q)) * make_calA(p) *
                                  kron(make_W_tilde(nu).scale_argument(-1), make_W(r))};
    }
    if (label == "nzaz") {
        return {make_calN(p),
                kron(make_U_inverse(mu), make_U(q)) * make_calA(p) * kron(make_W_inverse(nu), make_W(r))};
    }
    if (label == "nzn0") {
        return {make_calN(p), i_kron(mu, make_U_tilde(q)) * make_calN(p).eval(0) * i_kron(nu, make_W_tilde(r))};
    }
    if (label == "pmuq") {
        return {make_L(mu, q) * make_L_inverse(mu, q).eval(0), kron_i(make_U_tilde(mu), q)};
    }
    throw InvalidArgument("unknown identity label '" + label + "'");
}

FactorizationReport combine(std::string name, const Params& p, const std::vector<FactorizationReport>& parts) {
    FactorizationReport rep;
    rep.identity_name = std::move(name);
    rep.params = p;
    rep.holds = true;
    for (const auto& part : parts) {
        rep.holds = rep.holds && part.holds;
        rep.lhs_minus_rhs_max_degree = std::max(rep.lhs_minus_rhs_max_degree, part.lhs_minus_rhs_max_degree);
        rep.elapsed += part.elapsed;
    }
    return rep;
}

} // namespace

const std::vector<std::string>& identity_labels() {
    static const std::vector<std::string> labels{"lal1", "aa0",  "m",    "mm",   "mt",   "aahat", "aa1", "aa2",
                                                 "mdnd", "aza0", "mzm0", "mzaz", "nzaz", "nzn0",  "pmuq"};
    return labels;
}

bool is_identity_label(const std::string& label) {
    const auto& labels = identity_labels();
    return std::find(labels.begin(), labels.end(), label) != labels.end();
}

FactorizationReport verify_identity(const std::string& label, const Params& p) {
    p.validate();
    if (!is_identity_label(label)) {
        throw InvalidArgument("unknown identity label '" + label + "'");
    }
    return check_identity(label, p, [&] { return build(label, p); });
}

FactorizationReport verify_abar_identity(const std::string& label, const Params& p, const PolyMatrix& abar) {
    p.validate();
    if (label != "lal1" && label != "aa0") {
        throw InvalidArgument("only lal1 and aa0 involve Abar, got '" + label + "'");
    }
    return check_identity(label, p, [&] { return build_lal1(p, abar, label == "aa0"); });
}

FactorizationReport verify_lal1(const Params& p) { return verify_lal1(p, make_calAbar(p)); }

FactorizationReport verify_lal1(const Params& p, const PolyMatrix& abar) {
    p.validate();
    return combine("lal1", p,
                   {check_identity("lal1", p, [&] { return build_lal1(p, abar, false); }),
                    check_identity("aa0", p, [&] { return build_lal1(p, abar, true); })});
}

FactorizationReport verify_m_factorization(const Params& p) {
    return combine("m", p, {verify_identity("m", p), verify_identity("mm", p)});
}

FactorizationReport verify_n_factorization(const Params& p) {
    return combine("mt", p,
                   {verify_identity("mt", p), verify_identity("aahat", p), verify_identity("aa1", p),
                    verify_identity("aa2", p)});
}

std::vector<FactorizationReport> verify_further_factorizations(const Params& p) {
    std::vector<FactorizationReport> out;
    for (const char* label : {"aza0", "mzm0", "mzaz", "nzaz", "nzn0"}) {
        out.push_back(verify_identity(label, p));
    }
    return out;
}

std::vector<FactorizationReport> factorization_suite(const Params& p) {
    std::vector<FactorizationReport> out;
    for (const auto& label : identity_labels()) {
        out.push_back(verify_identity(label, p));
    }
    return out;
}

std::size_t rank_formula(const Params& p) {
    p.validate();
    return std::size_t{std::min(p.mu, p.r)} * std::min(p.nu, p.q);
}

Rational abar_det_sign(unsigned q, unsigned r) {
    const unsigned long e = static_cast<unsigned long>(q) * r * (q - 1) * (r - 1) / 4;
    return e % 2 == 0 ? Rational(1) : Rational(-1);
}

std::size_t abar_inversion_count(unsigned q, unsigned r) {
    const PolyMatrix abar = make_calAbar({q, r, r, q});
    const std::size_t n = abar.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!abar(i, j).is_zero()) {
                perm[i] = j;
            }
        }
    }
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            inversions += perm[i] > perm[j] ? 1 : 0;
        }
    }
    return inversions;
}

DetClosedForms det_closed_forms(const Params& p) {
    p.validate();
    DetClosedForms out;
    if (p.mu != p.r || p.nu != p.q) {
        return out;
    }
    const Rational sign = abar_det_sign(p.q, p.r);
    out.detAbar = sign;
    out.detA = sign;
    // det(D_k)
    auto superfactorial = [](unsigned k) {
        Integer s(1);
        for (unsigned i = 0; i < k; ++i) {
            s *= factorial(i);
        }
        return s;
    };
    Integer scale(1);
    for (unsigned t = 0; t < p.mu; ++t) {
        scale *= superfactorial(p.q);
    }
    for (unsigned t = 0; t < p.nu; ++t) {
        scale *= superfactorial(p.r);
    }
    out.detM = sign * Rational(scale);
    // calN = (D_mu^{-1} x I_q) calM (D_nu^{-1} x I_r); with mu = r and nu = q
    // the factorial scalings on both sides cancel.
    out.detN = sign;
    return out;
}

} // namespace hankelmonde
