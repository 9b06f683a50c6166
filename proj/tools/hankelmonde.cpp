// hankelmonde: generate the structured matrices, run verification sweeps,
// and emit kernel bases. Exit codes: 0 all checks pass, 1 a check failed,
// 2 usage or I/O error.

#include "hankelmonde/errors.hpp"
#include "hankelmonde/families.hpp"
#include "hankelmonde/kernels.hpp"
#include "hankelmonde/oracle.hpp"
#include "hankelmonde/serialize.hpp"
#include "hankelmonde/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace hm = hankelmonde;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << text;
    if (!out) {
        throw IoError("write to '" + path + "' failed");
    }
}

json params_json(const hm::Params& p) { return {{"q", p.q}, {"r", p.r}, {"mu", p.mu}, {"nu", p.nu}}; }

struct GenOptions {
    std::string family;
    hm::FamilyArgs args;
    std::string at;
    std::string format = "json";
    std::string out;
};

int run_gen(const GenOptions& o) {
    hm::PolyMatrix m = hm::generate_family(o.family, o.args);
    if (!o.at.empty()) {
        m = m.eval(hm::parse_rational(o.at));
    }
    if (o.format == "csv") {
        write_output(o.out, hm::matrix_to_csv(m));
    } else {
        json j = hm::matrix_to_json(m);
        j["family"] = o.family;
        j["params"] = params_json(o.args.params);
        if (!o.at.empty()) {
            j["at"] = o.at;
        }
        write_output(o.out, j.dump(2) + "\n");
    }
    return kExitOk;
}

struct VerifyOptions {
    bool all = false;
    unsigned max = 0;
    std::vector<std::string> checks;
    std::string q, r, mu, nu;
    std::string fault;
    hm::SweepConfig cfg;
    std::string format = "json";
};

int run_verify(VerifyOptions o) {
    hm::SweepConfig& cfg = o.cfg;
    if (o.max != 0) {
        cfg.q_range = cfg.r_range = cfg.mu_range = cfg.nu_range = hm::Range{1, o.max};
    }
    if (!o.q.empty()) cfg.q_range = hm::parse_range(o.q);
    if (!o.r.empty()) cfg.r_range = hm::parse_range(o.r);
    if (!o.mu.empty()) cfg.mu_range = hm::parse_range(o.mu);
    if (!o.nu.empty()) cfg.nu_range = hm::parse_range(o.nu);
    if (!o.all && !o.checks.empty()) {
        cfg.checks = o.checks;
    }
    cfg.format = o.format == "csv" ? hm::ReportFormat::Csv : hm::ReportFormat::Json;
    if (!o.fault.empty()) {
        cfg.fault = hm::parse_fault(o.fault);
    }
    hm::apply_env_overrides(cfg);
    cfg.validate();

    const hm::SweepReport report = hm::run_sweep(cfg);
    const std::string text = cfg.format == hm::ReportFormat::Csv ? hm::report_to_csv(report)
                                                                 : hm::report_to_json(cfg, report).dump(2) + "\n";
    if (cfg.output_path.empty()) {
        std::cout << text;
    } else {
        write_output(cfg.output_path, text);
    }
    std::cerr << report.tuple_count << " tuples, " << report.results.size() << " checks, " << report.failed()
              << " failed\n";
    for (const auto& r : report.results) {
        if (!r.holds) {
            std::cerr << "FAIL " << r.check << " " << hm::to_string(r.params) << ": " << r.detail << "\n";
        }
    }
    return report.all_passed() ? kExitOk : kExitFailed;
}

struct KernelOptions {
    hm::Params params;
    std::string target = "N0";
    std::size_t samples = 3;
    std::uint64_t seed = hm::SweepConfig{}.seed;
    std::string out;
};

int run_kernel(const KernelOptions& o) {
    hm::SweepConfig seed_holder;
    seed_holder.seed = o.seed;
    hm::apply_env_overrides(seed_holder);
    if (o.samples == 0) {
        throw hm::InvalidArgument("sample count must be at least 1");
    }
    const hm::KernelTarget target = hm::parse_kernel_target(o.target);
    const hm::KernelBasis kb = hm::kernel_basis(o.params, target);
    const std::vector<hm::Rational> points = hm::sample_points(o.samples, seed_holder.seed);
    const hm::KernelCheck check = hm::check_kernel_basis(hm::kernel_target_matrix(o.params, target), kb,
                                                         hm::kernel_dim(o.params, target), points);
    json pts = json::array();
    for (const auto& z : points) {
        pts.push_back(hm::to_string(z));
    }
    const json j{{"format_version", hm::kFormatVersion},
                 {"target", hm::to_string(target)},
                 {"params", params_json(o.params)},
                 {"case", hm::to_string(kb.case_tag)},
                 {"claimed_dim", kb.claimed_dim},
                 {"basis", hm::matrix_to_json(kb.basis)},
                 {"oracle",
                  {{"sample_points", pts},
                   {"annihilates", check.annihilates},
                   {"dim_matches_formula", check.dim_matches_formula},
                   {"full_column_rank", check.full_column_rank},
                   {"spans_nullspace", check.spans_nullspace}}}};
    write_output(o.out, j.dump(2) + "\n");
    std::cerr << "target " << hm::to_string(target) << ", case " << hm::to_string(kb.case_tag) << ", dim "
              << kb.claimed_dim << ", oracle " << (check.ok() ? "ok" : "MISMATCH") << "\n";
    return check.ok() ? kExitOk : kExitFailed;
}

void add_params(CLI::App* cmd, hm::Params& p) {
    cmd->add_option("--q", p.q, "rows of M (length of u)")->check(CLI::PositiveNumber);
    cmd->add_option("--r", p.r, "columns of M (length of w)")->check(CLI::PositiveNumber);
    cmd->add_option("--mu", p.mu, "block rows")->check(CLI::PositiveNumber);
    cmd->add_option("--nu", p.nu, "block columns")->check(CLI::PositiveNumber);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Block Hankel confluent Vandermonde matrix polynomials in exact arithmetic"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "print one matrix in the JSON exchange format (or CSV when constant)");
    std::string family_help = "one of:";
    for (const auto& f : hm::family_names()) {
        family_help += " " + f;
    }
    gen_cmd->add_option("family", gen.family, family_help)->required();
    add_params(gen_cmd, gen.args.params);
    gen_cmd->add_option("--k", gen.args.k, "index k for Ak and Hk, block size for L, row offset for F");
    gen_cmd->add_option("--j", gen.args.j, "index j for Kbar_j");
    gen_cmd->add_option("--m", gen.args.m, "block count for L (default mu)");
    gen_cmd->add_option("--at", gen.at, "evaluate at this rational point, e.g. 0 or -3/2");
    gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"json", "csv"}));
    gen_cmd->add_option("-o,--out", gen.out, "output file (default stdout)");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "run verification checks over a parameter grid");
    ver_cmd->add_flag("--all", ver.all, "run every check (the default when --checks is absent)");
    ver_cmd->add_option("--max", ver.max, "shorthand for --q 1..N --r 1..N --mu 1..N --nu 1..N")
        ->check(CLI::PositiveNumber);
    ver_cmd->add_option("--checks", ver.checks, "check labels")->delimiter(',');
    ver_cmd->add_option("--q", ver.q, "range such as 1..4 or 2");
    ver_cmd->add_option("--r", ver.r, "range");
    ver_cmd->add_option("--mu", ver.mu, "range");
    ver_cmd->add_option("--nu", ver.nu, "range");
    ver_cmd->add_option("--samples", ver.cfg.sample_count, "sample points per tuple");
    ver_cmd->add_option("--seed", ver.cfg.seed, "sample point seed (HANKELMONDE_SEED overrides)");
    ver_cmd->add_option("--workers", ver.cfg.workers, "worker threads (default: hardware)");
    ver_cmd->add_option("-o,--out", ver.cfg.output_path, "report file (default stdout)");
    ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"json", "csv"}));
    ver_cmd->add_option("--inject-fault", ver.fault, "corrupt one entry, calAbar:i,j or K:i,j (negative control)");

    KernelOptions ker;
    auto* ker_cmd = app.add_subcommand("kernel", "emit a kernel basis and cross-check it against the oracle");
    add_params(ker_cmd, ker.params);
    ker_cmd->add_option("--target", ker.target)->check(CLI::IsMember({"N0", "N", "M"}));
    ker_cmd->add_option("--samples", ker.samples, "sample points for the oracle check");
    ker_cmd->add_option("--seed", ker.seed, "sample point seed (HANKELMONDE_SEED overrides)");
    ker_cmd->add_option("-o,--out", ker.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) {
            return run_gen(gen);
        }
        if (ver_cmd->parsed()) {
            return run_verify(ver);
        }
        return run_kernel(ker);
    } catch (const hm::CaseViolation& e) {
        std::cerr << "hypothesis not met: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitUsage;
    }
}
