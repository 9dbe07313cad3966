#include "orbchi/cli.hpp"

#include <iomanip>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>

#include "orbchi/analytic.hpp"
#include "orbchi/bernoulli.hpp"
#include "orbchi/format.hpp"
#include "orbchi/oracle.hpp"
#include "orbchi/pipeline.hpp"
#include "orbchi/species.hpp"

namespace orbchi::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr std::string_view kFilePrefix = "file:";

Species resolve_species(const std::string& spec)
{
    if (spec.starts_with(kFilePrefix)) {
        return species_from_file(spec.substr(kFilePrefix.size()));
    }
    try {
        return builtin_species(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_min_loops(int loops)
{
    if (loops < 2) {
        throw UsageError("max-loops must be >= 2");
    }
}

const char* verdict(bool pass)
{
    return pass ? "PASS" : "FAIL";
}

struct ComputeOptions {
    std::string species;
    int max_loops = 11;
    bool all = false;
    std::string format = "plain";
    bool decimal = false;
};

int cmd_compute(const ComputeOptions& opt, std::ostream& out)
{
    require_min_loops(opt.max_loops);
    const auto format = parse_output_format(opt.format);
    if (!format) {
        throw UsageError("unknown format '" + opt.format + "' (valid: plain, csv, json, latex)");
    }
    const Species species = resolve_species(opt.species);
    const EulerTable table = euler_characteristic(species, opt.max_loops, !opt.all);
    out << render_table(table, *format, opt.decimal);
    return kExitOk;
}

int cmd_verify_bernoulli(int max_loops, std::ostream& out)
{
    require_min_loops(max_loops);
    bool ok = true;
    for (const char* name : {"commutative", "associative"}) {
        const auto report = verify_bernoulli(euler_characteristic(builtin_species(name), max_loops, true));
        for (const auto& c : report.checks) {
            out << name << " n=" << c.loops << ": " << c.computed << " vs B_n/(n(n-1)) = " << c.expected << "  "
                << verdict(c.pass) << '\n';
        }
        ok = ok && report.all_pass();
    }
    out << (ok ? "bernoulli: all checks passed\n" : "bernoulli: some checks FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

int cmd_verify_oracle(const std::string& species_spec, int max_loops, std::ostream& out)
{
    require_min_loops(max_loops);
    // The connected oracle needs 6(max_loops - 1) <= 12 half-edges.
    if (6 * (max_loops - 1) > oracle::kJointHalfEdgeBudget) {
        throw UsageError("verify oracle supports --max-loops <= 3");
    }
    const Species species = resolve_species(species_spec);
    const TSeries all = all_graphs_series(species, max_loops);
    const TSeries connected = connected_series(all);
    bool ok = true;
    for (int m = 1; m <= max_loops - 1; ++m) {
        const Rational g = oracle::oracle_all_graphs_coefficient(species, m, 3 * m);
        const Rational c = oracle::oracle_connected_coefficient(species, m, 3 * m);
        const bool g_ok = g == all[m];
        const bool c_ok = c == connected[m];
        out << species.name() << " all-graphs t^" << m << ": pipeline " << all[m] << ", oracle " << g << "  "
            << verdict(g_ok) << '\n';
        out << species.name() << " connected  t^" << m << ": pipeline " << connected[m] << ", oracle " << c << "  "
            << verdict(c_ok) << '\n';
        ok = ok && g_ok && c_ok;
    }
    out << (ok ? "oracle: all checks passed\n" : "oracle: some checks FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

int cmd_verify_analytic(double t, int terms, std::ostream& out)
{
    if (!(t > 0.0 && t <= 0.2)) {
        throw UsageError("--t must satisfy 0 < t <= 0.2");
    }
    if (terms < 1 || terms > 5) {
        throw UsageError("--terms must be between 1 and 5");
    }
    const auto r = analytic::check_commutative_asymptotics(t, terms);
    out << "t = " << r.t << ", terms = " << r.terms_used << '\n' << std::setprecision(17)
        << "gamma expression  = " << r.lhs << '\n'
        << "partial sum       = " << r.rhs << '\n'
        << "residual          = " << r.residual << '\n'
        << "first omitted     = " << r.bound << '\n'
        << "residual <= " << analytic::kBoundSlack << " x first omitted: " << verdict(r.pass) << '\n';
    return r.pass ? kExitOk : kExitFailure;
}

int cmd_verify_equality(int max_loops, std::ostream& out)
{
    require_min_loops(max_loops);
    const auto comm = euler_characteristic(builtin_species("commutative"), max_loops, true);
    const auto assoc = euler_characteristic(builtin_species("associative"), max_loops, true);
    bool ok = true;
    for (int n = 2; n <= max_loops; ++n) {
        const bool pass = comm.entries.at(n) == assoc.entries.at(n);
        out << "n=" << n << ": associative " << assoc.entries.at(n) << ", commutative " << comm.entries.at(n) << "  "
            << verdict(pass) << '\n';
        ok = ok && pass;
    }
    out << (ok ? "equality: all checks passed\n" : "equality: some checks FAILED\n");
    return ok ? kExitOk : kExitFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Orbifold Euler characteristics of graph complexes"};
    app.name("orbchi");
    app.require_subcommand(1);

    ComputeOptions compute;
    auto* compute_cmd = app.add_subcommand("compute", "Compute the Euler characteristic table for a vertex species");
    compute_cmd->add_option("--species", compute.species, "Built-in species name or file:PATH")->required();
    compute_cmd->add_option("--max-loops", compute.max_loops, "Largest loop number")->capture_default_str();
    compute_cmd->add_flag("--all", compute.all, "All graphs instead of connected graphs only");
    compute_cmd->add_option("--format", compute.format, "plain, csv, json or latex")->capture_default_str();
    compute_cmd->add_flag("--decimal", compute.decimal, "Also print 15-digit decimal approximations");

    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->require_subcommand(1);

    int bernoulli_loops = 11;
    auto* bernoulli_cmd = verify_cmd->add_subcommand("bernoulli", "Compare against B_n / (n (n - 1))");
    bernoulli_cmd->add_option("--max-loops", bernoulli_loops)->capture_default_str();

    std::string oracle_species;
    int oracle_loops = 3;
    auto* oracle_cmd = verify_cmd->add_subcommand("oracle", "Compare against brute-force graph enumeration");
    oracle_cmd->add_option("--species", oracle_species, "Built-in species name or file:PATH")->required();
    oracle_cmd->add_option("--max-loops", oracle_loops)->capture_default_str();

    double analytic_t = 0.1;
    int analytic_terms = 3;
    auto* analytic_cmd = verify_cmd->add_subcommand("analytic", "Check the gamma-function asymptotics");
    analytic_cmd->add_option("--t", analytic_t)->capture_default_str();
    analytic_cmd->add_option("--terms", analytic_terms)->capture_default_str();

    int equality_loops = 11;
    auto* equality_cmd = verify_cmd->add_subcommand("equality", "Check associative = commutative");
    equality_cmd->add_option("--max-loops", equality_loops)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (compute_cmd->parsed()) {
            return cmd_compute(compute, out);
        }
        if (bernoulli_cmd->parsed()) {
            return cmd_verify_bernoulli(bernoulli_loops, out);
        }
        if (oracle_cmd->parsed()) {
            return cmd_verify_oracle(oracle_species, oracle_loops, out);
        }
        if (analytic_cmd->parsed()) {
            return cmd_verify_analytic(analytic_t, analytic_terms, out);
        }
        if (equality_cmd->parsed()) {
            return cmd_verify_equality(equality_loops, out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    err << app.help();
    return kExitUsage;
}

} // namespace orbchi::cli
