#include "hankelmonde/sweep.hpp"

#include "hankelmonde/errors.hpp"
#include "hankelmonde/factorize.hpp"
#include "hankelmonde/kernels.hpp"
#include "hankelmonde/oracle.hpp"
#include "hankelmonde/rightinv.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace hankelmonde {

namespace {

unsigned parse_unsigned(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InvalidArgument("expected a non-negative integer for " + what + ", got '" + s + "'");
    }
    try {
        const unsigned long v = std::stoul(s);
        if (v > 1000000UL) {
            throw InvalidArgument(what + " is too large: " + s);
        }
        return static_cast<unsigned>(v);
    } catch (const std::out_of_range&) {
        throw InvalidArgument(what + " is too large: " + s);
    }
}

std::vector<Params> grid(const SweepConfig& cfg) {
    std::vector<Params> out;
    for (unsigned q = cfg.q_range.lo; q <= cfg.q_range.hi; ++q) {
        for (unsigned r = cfg.r_range.lo; r <= cfg.r_range.hi; ++r) {
            for (unsigned mu = cfg.mu_range.lo; mu <= cfg.mu_range.hi; ++mu) {
                for (unsigned nu = cfg.nu_range.lo; nu <= cfg.nu_range.hi; ++nu) {
                    out.push_back({q, r, mu, nu});
                }
            }
        }
    }
    return out;
}

bool faults(const std::optional<Fault>& fault, FaultTarget target) { return fault && fault->target == target; }

std::string join_failures(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        out += (out.empty() ? "" : "; ") + s;
    }
    return out;
}

// Each checker fills `failures` with short human-readable reasons.
void check_rank(const Params& p, const std::vector<Rational>& points, std::vector<std::string>& failures) {
    const std::size_t expected = rank_formula(p);
    const PolyMatrix m = make_calM(p);
    const PolyMatrix n = make_calN(p);
    const PolyMatrix a = make_calA(p);
    for (const Rational& z0 : points) {
        for (const auto& [name, mat] : {std::pair{"calM", &m}, std::pair{"calN", &n}, std::pair{"calA", &a}}) {
            const std::size_t got = rank_at(*mat, z0);
            if (got != expected) {
                failures.push_back(std::string("rank ") + name + "(" + to_string(z0) + ") = " + std::to_string(got) +
                                   ", expected " + std::to_string(expected));
            }
        }
    }
}

void check_det(const Params& p, const std::vector<Rational>& points, const std::optional<Fault>& fault,
               std::vector<std::string>& failures) {
    const DetClosedForms forms = det_closed_forms(p);
    PolyMatrix abar = make_calAbar(p);
    if (faults(fault, FaultTarget::CalAbar)) {
        abar = apply_fault(abar, *fault);
    }
    const Rational d = det_fraction_free(abar);
    if (d != *forms.detAbar) {
        failures.push_back("det Abar = " + to_string(d) + ", expected " + to_string(*forms.detAbar));
    }
    const std::size_t expected_inv = std::size_t{p.q} * p.r * (p.q - 1) * (p.r - 1) / 4;
    if (abar_inversion_count(p.q, p.r) != expected_inv) {
        failures.push_back("Abar inversion count differs from qr(q-1)(r-1)/4");
    }
    const PolyMatrix m = make_calM(p);
    const PolyMatrix n = make_calN(p);
    const PolyMatrix a = make_calA(p);
    for (const Rational& z0 : points) {
        if (det_at(m, z0) != *forms.detM) {
            failures.push_back("det calM(" + to_string(z0) + ") differs from the closed form");
        }
        if (det_at(n, z0) != *forms.detN) {
            failures.push_back("det calN(" + to_string(z0) + ") differs from the closed form");
        }
        if (det_at(a, z0) != *forms.detA) {
            failures.push_back("det calA(" + to_string(z0) + ") differs from the closed form");
        }
    }
}

void check_kernel(const Params& p, KernelTarget target, const std::vector<Rational>& points,
                  const std::optional<Fault>& fault, std::vector<std::string>& failures) {
    KernelBasis kb = kernel_basis(p, target);
    // The fixture K only appears verbatim as the N0 basis for nu <= q and as the N basis for mu = 1.
    const bool plain_k = kb.case_tag == KernelCase::NuLeQ &&
                         (target == KernelTarget::N0 || (target == KernelTarget::N && p.mu == 1));
    if (plain_k && faults(fault, FaultTarget::K)) {
        kb.basis = apply_fault(kb.basis, *fault);
    }
    const KernelCheck c = check_kernel_basis(kernel_target_matrix(p, target), kb, kernel_dim(p, target), points);
    if (!c.annihilates) {
        failures.push_back("basis does not annihilate the target");
    }
    if (!c.dim_matches_formula) {
        failures.push_back("column count " + std::to_string(kb.basis.cols()) + " differs from the dimension formula " +
                           std::to_string(kernel_dim(p, target)));
    }
    if (!c.full_column_rank) {
        failures.push_back("basis loses column rank at a sample point");
    }
    if (!c.spans_nullspace) {
        failures.push_back("basis span differs from the oracle nullspace");
    }
}

void check_rightinv(const Params& p, std::vector<std::string>& failures) {
    const bool exists = p.nu >= p.q && p.mu <= p.r;
    if (!exists) {
        try {
            (void)make_M_right_inverse(p);
            failures.push_back("right inverse built although calM(z) lacks full row rank");
        } catch (const CaseViolation&) {
        }
        return;
    }
    const RightInverseResult res = make_M_right_inverse(p);
    const std::size_t rows = std::size_t{p.mu} * p.q;
    if (!(make_calM(p) * res.inverse == eye(rows))) {
        failures.push_back("calM(z) times its right inverse is not the identity");
    }
    if (res.affine_freedom_dim != (std::size_t{p.nu} * p.r - rows) * rows) {
        failures.push_back("affine freedom dimension is off");
    }
    if (res.is_constant != res.inverse.is_constant()) {
        failures.push_back("is_constant flag disagrees with the entries");
    }
    if (p.mu == 1 && p.r >= p.q) {
        const RightInverseResult c = make_C_constant(p.q, p.r, p.nu);
        if (!c.is_constant || !(make_calM0(p.q, p.r, p.nu) * c.inverse == eye(p.q))) {
            failures.push_back("constant right inverse C fails");
        }
    }
    const PolyMatrix ck = constant_kernel_basis(p.q, p.r, p.nu);
    if (ck.cols() != std::size_t{p.nu > p.q ? p.nu - p.q : 0} * p.r ||
        !(make_calM0(p.q, p.r, p.nu) * ck).is_zero()) {
        failures.push_back("constant kernel basis fails");
    }
}

} // namespace

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range out;
    if (dots == std::string::npos) {
        out.lo = out.hi = parse_unsigned(text, "range");
    } else {
        out.lo = parse_unsigned(text.substr(0, dots), "range start");
        out.hi = parse_unsigned(text.substr(dots + 2), "range end");
    }
    if (out.lo > out.hi) {
        throw InvalidArgument("empty range '" + text + "'");
    }
    return out;
}

Fault parse_fault(const std::string& text) {
    const auto colon = text.find(':');
    const auto comma = text.find(',', colon == std::string::npos ? 0 : colon);
    if (colon == std::string::npos || comma == std::string::npos) {
        throw InvalidArgument("fault must look like calAbar:i,j or K:i,j");
    }
    Fault f;
    const std::string target = text.substr(0, colon);
    if (target == "calAbar") {
        f.target = FaultTarget::CalAbar;
    } else if (target == "K") {
        f.target = FaultTarget::K;
    } else {
        throw InvalidArgument("fault target must be calAbar or K, got '" + target + "'");
    }
    f.row = parse_unsigned(text.substr(colon + 1, comma - colon - 1), "fault row");
    f.col = parse_unsigned(text.substr(comma + 1), "fault column");
    return f;
}

PolyMatrix apply_fault(PolyMatrix m, const Fault& fault) {
    if (fault.row < m.rows() && fault.col < m.cols()) {
        m(fault.row, fault.col) = m(fault.row, fault.col) + Poly(fault.delta);
    }
    return m;
}

std::vector<std::string> SweepConfig::all_checks_default() { return check_labels(); }

void SweepConfig::validate() const {
    for (const Range* r : {&q_range, &r_range, &mu_range, &nu_range}) {
        if (r->lo == 0 || r->lo > r->hi) {
            throw InvalidArgument("parameter ranges must satisfy 1 <= lo <= hi");
        }
    }
    if (sample_count == 0) {
        throw InvalidArgument("sample count must be at least 1");
    }
    if (checks.empty()) {
        throw InvalidArgument("no checks selected");
    }
    const auto& known = check_labels();
    for (const auto& c : checks) {
        if (std::find(known.begin(), known.end(), c) == known.end()) {
            throw InvalidArgument("unknown check '" + c + "'");
        }
    }
}

const std::vector<std::string>& check_labels() {
    static const std::vector<std::string> labels = [] {
        std::vector<std::string> out = identity_labels();
        for (const char* extra : {"rank", "det", "kernelN0", "kernelN", "kernelM", "rightinv"}) {
            out.emplace_back(extra);
        }
        return out;
    }();
    return labels;
}

void apply_env_overrides(SweepConfig& cfg) {
    const char* env = std::getenv("HANKELMONDE_SEED");
    if (env == nullptr) {
        return;
    }
    const std::string s(env);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InvalidArgument("HANKELMONDE_SEED must be an unsigned integer, got '" + s + "'");
    }
    try {
        cfg.seed = std::stoull(s);
    } catch (const std::out_of_range&) {
        throw InvalidArgument("HANKELMONDE_SEED is out of range");
    }
}

std::size_t SweepReport::failed() const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.holds; }));
}

std::optional<CheckResult> run_check(const std::string& check, const Params& p, const std::vector<Rational>& points,
                                     const std::optional<Fault>& fault) {
    if (check == "det" && (p.mu != p.r || p.nu != p.q)) {
        return std::nullopt;
    }
    const auto start = std::chrono::steady_clock::now();
    CheckResult out;
    out.check = check;
    out.params = p;
    std::vector<std::string> failures;
    try {
        if (is_identity_label(check)) {
            FactorizationReport rep;
            if ((check == "lal1" || check == "aa0") && faults(fault, FaultTarget::CalAbar)) {
                rep = verify_abar_identity(check, p, apply_fault(make_calAbar(p), *fault));
            } else {
                rep = verify_identity(check, p);
            }
            if (!rep.holds) {
                failures.push_back("lhs - rhs is nonzero (max degree " + std::to_string(rep.lhs_minus_rhs_max_degree) +
                                   ")");
            }
        } else if (check == "rank") {
            check_rank(p, points, failures);
        } else if (check == "det") {
            check_det(p, points, fault, failures);
        } else if (check == "kernelN0") {
            check_kernel(p, KernelTarget::N0, points, fault, failures);
        } else if (check == "kernelN") {
            check_kernel(p, KernelTarget::N, points, fault, failures);
        } else if (check == "kernelM") {
            check_kernel(p, KernelTarget::M, points, fault, failures);
        } else if (check == "rightinv") {
            check_rightinv(p, failures);
        } else {
            throw InvalidArgument("unknown check '" + check + "'");
        }
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception& e) {
        failures.push_back(std::string("exception: ") + e.what());
    }
    out.holds = failures.empty();
    out.detail = join_failures(failures);
    out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return out;
}

SweepReport run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<Params> tuples = grid(cfg);
    const std::vector<Rational> points = sample_points(cfg.sample_count, cfg.seed);
    std::vector<std::vector<CheckResult>> per_tuple(tuples.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tuples.size(); t = next++) {
            for (const auto& check : cfg.checks) {
                if (auto res = run_check(check, tuples[t], points, cfg.fault)) {
                    per_tuple[t].push_back(std::move(*res));
                }
            }
        }
    };
    unsigned n = cfg.workers != 0 ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, tuples.size()));
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) {
        pool.emplace_back(worker);
    }
    pool.clear();

    SweepReport report;
    report.tuple_count = tuples.size();
    for (auto& rs : per_tuple) {
        for (auto& r : rs) {
            report.results.push_back(std::move(r));
        }
    }
    return report;
}

nlohmann::json report_to_json(const SweepConfig& cfg, const SweepReport& report) {
    using nlohmann::json;
    json results = json::array();
    for (const auto& r : report.results) {
        json entry{{"check", r.check},
                   {"params", {{"q", r.params.q}, {"r", r.params.r}, {"mu", r.params.mu}, {"nu", r.params.nu}}},
                   {"holds", r.holds},
                   {"elapsed_ns", r.elapsed.count()}};
        if (!r.detail.empty()) {
            entry["detail"] = r.detail;
        }
        results.push_back(std::move(entry));
    }
    auto range = [](const Range& r) { return json::array({r.lo, r.hi}); };
    return json{{"format_version", kReportFormatVersion},
                {"config",
                 {{"q", range(cfg.q_range)},
                  {"r", range(cfg.r_range)},
                  {"mu", range(cfg.mu_range)},
                  {"nu", range(cfg.nu_range)},
                  {"checks", cfg.checks},
                  {"sample_count", cfg.sample_count},
                  {"seed", cfg.seed}}},
                {"summary",
                 {{"tuples", report.tuple_count},
                  {"checks_run", report.results.size()},
                  {"failed", report.failed()}}},
                {"results", results}};
}

std::string report_to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "check,q,r,mu,nu,holds,elapsed_ns,detail\n";
    for (const auto& r : report.results) {
        std::string detail = r.detail;
        std::replace(detail.begin(), detail.end(), '"', '\'');
        out << r.check << ',' << r.params.q << ',' << r.params.r << ',' << r.params.mu << ',' << r.params.nu << ','
            << (r.holds ? "true" : "false") << ',' << r.elapsed.count() << ",\"" << detail << "\"\n";
    }
    return out.str();
}

} // namespace hankelmonde
