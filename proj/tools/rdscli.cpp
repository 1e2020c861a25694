// Command-line front end: simulate orbits, evaluate closed-form solutions,
// run randomized cross-verification, and check periodicity conditions.
//
// Exit codes: 0 success, 2 usage or configuration error, 3 mathematical
// domain error (a closed-form query on an orbit that hits the forbidden
// set), 4 verification failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rds/checks.hpp"
#include "rds/closed_form.hpp"
#include "rds/coefficients.hpp"
#include "rds/errors.hpp"
#include "rds/invariants.hpp"
#include "rds/orbit.hpp"
#include "rds/periodicity.hpp"
#include "rds/rational.hpp"

namespace {

using namespace rds;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    for (;;) {
        auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// "--const a=1,b=1,c=1/2,d=0": all four names exactly once, any order.
CoefficientSpec spec_from_const(const std::string& text) {
    std::optional<Rational> values[4];
    for (const std::string& token : split(text, ',')) {
        if (token.size() < 3 || token[1] != '=' || token[0] < 'a' || token[0] > 'd')
            throw ParseError("--const expects a=,b=,c=,d= entries, got '" + token + "'");
        const int slot = token[0] - 'a';
        if (values[slot])
            throw ParseError(std::string("--const repeats '") + token[0] + "'");
        values[slot] = Rational::parse(token.substr(2));
    }
    for (int slot = 0; slot < 4; ++slot)
        if (!values[slot])
            throw ParseError(std::string("--const is missing '") + char('a' + slot) + "'");
    return CoefficientSpec::constant(*values[0], *values[1], *values[2], *values[3]);
}

CoefficientSpec spec_from_file(const std::string& path, CoeffKind expected, const char* flag) {
    std::ifstream in(path);
    if (!in)
        throw ParseError(std::string(flag) + ": cannot open '" + path + "'");
    CoefficientSpec spec = parse_coefficient_file(in);
    if (spec.kind() != expected)
        throw ParseError(std::string(flag) + ": '" + path +
                         "' does not declare the matching coefficient kind");
    return spec;
}

// The three mutually exclusive coefficient sources shared by the
// orbit-bearing subcommands.
struct SourceOptions {
    std::string const_text;
    std::string periodic_path;
    std::string table_path;

    void add_to(CLI::App& cmd) {
        auto* c = cmd.add_option("--const", const_text,
                                 "Constant coefficients as a=p/q,b=p/q,c=p/q,d=p/q");
        auto* p = cmd.add_option("--periodic", periodic_path,
                                 "Coefficient file with @period lists");
        auto* t = cmd.add_option("--table", table_path, "Coefficient file with @table lists");
        c->excludes(p)->excludes(t);
        p->excludes(t);
    }

    CoefficientSpec resolve() const {
        const int given = !const_text.empty() + !periodic_path.empty() + !table_path.empty();
        if (given != 1)
            throw ParseError("exactly one of --const, --periodic, --table is required");
        if (!const_text.empty()) return spec_from_const(const_text);
        if (!periodic_path.empty())
            return spec_from_file(periodic_path, CoeffKind::Periodic, "--periodic");
        return spec_from_file(table_path, CoeffKind::Tabulated, "--table");
    }
};

InitialState init_from(const std::string& text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 6)
        throw ParseError("--init expects six values x-2,x-1,x0,y-2,y-1,y0");
    std::vector<Rational> v;
    v.reserve(6);
    for (const std::string& part : parts) v.push_back(Rational::parse(part));
    return InitialState(v[0], v[1], v[2], v[3], v[4], v[5]);
}

Branch branch_for(const CoefficientSpec& spec) {
    if (spec.kind() == CoeffKind::Constant) return Branch::Constant;
    if (spec.kind() == CoeffKind::Periodic && spec.length() == 4) return Branch::Period4;
    return Branch::General;
}

int run_simulate(const SourceOptions& sources, const std::string& init_text, long steps,
                 const std::string& out_path, bool float_columns) {
    CoefficientSpec spec = sources.resolve();
    InitialState init = init_from(init_text);
    Orbit orbit = iterate(spec, init, steps);
    if (out_path.empty()) {
        write_csv(std::cout, orbit, float_columns);
    } else {
        std::ofstream out(out_path);
        if (!out)
            throw Error("--out: cannot open '" + out_path + "' for writing");
        write_csv(out, orbit, float_columns);
    }
    return 0;
}

int run_closed(const SourceOptions& sources, const std::string& init_text, long n, int j,
               const std::string& component) {
    CoefficientSpec spec = sources.resolve();
    InitialState init = init_from(init_text);
    const Component comp = component == "x" ? Component::X : Component::Y;
    const Branch branch = branch_for(spec);
    ClosedFormQuery query{branch, j, n, comp};
    Rational value;
    switch (branch) {
    case Branch::Constant: {
        auto values = constant_values(spec);
        value = closed_constant((*values)[0], (*values)[1], (*values)[2], (*values)[3], init,
                                query);
        break;
    }
    case Branch::Period4:
        value = closed_period4(spec, init, query);
        break;
    case Branch::General:
        value = closed_general(spec, init, query);
        break;
    }
    std::cout << component << '[' << solution_index(query) << "] = " << value.str() << '\n';
    return 0;
}

int run_verify(const std::string& mode, long trials, std::uint64_t seed, long nmax,
               const std::string& t_text) {
    CheckResult result;
    if (mode == "general") {
        result = suite_general(seed, trials, nmax);
    } else if (mode == "constant") {
        result = suite_constant(seed, trials, nmax);
    } else if (mode == "unit16") {
        result = suite_unit16(seed, (trials + 15) / 16, nmax);
    } else if (mode == "period4") {
        result = suite_period4(seed, trials, nmax);
    } else if (mode == "uv") {
        result = suite_uv(seed, trials, nmax);
    } else {
        result = suite_symmetry(seed, trials, {Rational::parse(t_text)}, nmax);
    }
    std::cout << result.passed << '/' << result.total << " pass\n";
    if (result.ok()) return 0;
    std::cout << "first failure: " << result.failure << '\n';
    return 4;
}

int run_period(const SourceOptions& sources, const std::string& init_text, long steps,
               long max_period) {
    CoefficientSpec spec = sources.resolve();
    InitialState init = init_from(init_text);
    Orbit orbit = iterate(spec, init, steps);
    if (!orbit.complete())
        throw Error("orbit hits the forbidden set at step " +
                    std::to_string(orbit.forbidden_step()) + "; no period window available");

    PeriodReport report;
    report.period = detect_period(orbit, max_period);
    report.window = orbit.last_index() + 3;
    if (auto values = constant_values(spec)) {
        const Rational& a = (*values)[0];
        const Rational& b = (*values)[1];
        const Rational& c = (*values)[2];
        const Rational& d = (*values)[3];
        try {
            report.thm2 = check_period2_conditions(a, b, c, d, init);
        } catch (const ConditionUndefined&) {
            report.thm2 = false;
        }
        try {
            report.thm4 = check_period4_conditions(a, b, c, d, init);
        } catch (const ConditionUndefined&) {
            report.thm4 = false;
        }
        report.remark = check_period4_remark(a, b, c, d, init);
    }

    const char* tf[] = {"false", "true"};
    std::cout << "period=";
    if (report.period)
        std::cout << *report.period;
    else
        std::cout << "none";
    std::cout << " thm2=" << tf[report.thm2] << " thm4=" << tf[report.thm4]
              << " remark=" << tf[report.remark] << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact simulator and closed-form evaluator for a two-component "
                 "third-order rational difference system"};
    app.require_subcommand(1);

    SourceOptions sim_sources, closed_sources, period_sources;
    std::string sim_init, closed_init, period_init;
    long sim_steps = 0, period_steps = 0;
    std::string sim_out;
    bool sim_float = false;
    long closed_n = 0;
    int closed_j = 0;
    std::string closed_component;
    std::string verify_mode;
    long verify_trials = 50;
    std::uint64_t verify_seed = 1;
    long verify_nmax = 6;
    std::string verify_t = "2";
    long period_max = 8;

    CLI::App* sim = app.add_subcommand("simulate", "Iterate the system and emit a CSV orbit");
    sim_sources.add_to(*sim);
    sim->add_option("--init", sim_init, "Start values x-2,x-1,x0,y-2,y-1,y0")->required();
    sim->add_option("--steps", sim_steps, "Number of steps to iterate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sim->add_option("--out", sim_out, "Write the CSV here instead of stdout");
    sim->add_flag("--float", sim_float, "Append lossy double-precision columns for plotting");

    CLI::App* closed = app.add_subcommand("closed", "Evaluate one closed-form solution value");
    closed_sources.add_to(*closed);
    closed->add_option("--init", closed_init, "Start values x-2,x-1,x0,y-2,y-1,y0")->required();
    closed->add_option("--n", closed_n, "Block count n >= 0")
        ->required()
        ->check(CLI::NonNegativeNumber);
    closed->add_option("--j", closed_j, "Residue in {-2,-1,0,1}; the value index is 4n+j")
        ->required();
    closed->add_option("--component", closed_component, "Which component, x or y")
        ->required()
        ->check(CLI::IsMember({"x", "y"}));

    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check closed forms, invariants, or the scaling action");
    verify->add_option("--mode", verify_mode, "One of general, constant, unit16, period4, uv, "
                                              "symmetry")
        ->required()
        ->check(CLI::IsMember({"general", "constant", "unit16", "period4", "uv", "symmetry"}));
    verify->add_option("--trials", verify_trials,
                       "Trial count (unit16 runs ceil(trials/16) draws per sign pattern)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Seed for the deterministic sampler");
    verify->add_option("--nmax", verify_nmax,
                       "Depth bound: block counts for closed-form modes, steps for symmetry")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--t", verify_t, "Group parameter p/q for --mode symmetry");

    CLI::App* period = app.add_subcommand("period",
                                          "Detect the minimal period and test the "
                                          "sufficient conditions");
    period_sources.add_to(*period);
    period->add_option("--init", period_init, "Start values x-2,x-1,x0,y-2,y-1,y0")->required();
    period->add_option("--steps", period_steps, "Number of steps to iterate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    period->add_option("--max-period", period_max, "Largest period to test")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed())
            return run_simulate(sim_sources, sim_init, sim_steps, sim_out, sim_float);
        if (closed->parsed())
            return run_closed(closed_sources, closed_init, closed_n, closed_j, closed_component);
        if (verify->parsed())
            return run_verify(verify_mode, verify_trials, verify_seed, verify_nmax, verify_t);
        return run_period(period_sources, period_init, period_steps, period_max);
    } catch (const DenominatorVanished& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
