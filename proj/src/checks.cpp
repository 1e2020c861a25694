#include "rds/checks.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "rds/closed_form.hpp"
#include "rds/errors.hpp"
#include "rds/invariants.hpp"
#include "rds/orbit.hpp"
#include "rds/periodicity.hpp"
#include "rds/scaling.hpp"

namespace rds {

namespace {

std::string join_values(const std::vector<Rational>& values) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ',';
        out << values[i].str();
    }
    return out.str();
}

std::string spec_lines(const CoefficientSpec& spec) {
    static constexpr std::array<CoeffName, 4> names = {CoeffName::A, CoeffName::B, CoeffName::C,
                                                       CoeffName::D};
    static constexpr std::array<char, 4> letters = {'a', 'b', 'c', 'd'};
    std::ostringstream out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << "  " << letters[i] << ": " << join_values(spec.list(names[i]));
        if (spec.kind() == CoeffKind::Periodic) out << " @period";
        if (spec.kind() == CoeffKind::Tabulated) out << " @table";
        out << '\n';
    }
    return out.str();
}

std::string init_csv(const InitialState& init) {
    std::ostringstream out;
    out << init.x(-2).str() << ',' << init.x(-1).str() << ',' << init.x(0).str() << ','
        << init.y(-2).str() << ',' << init.y(-1).str() << ',' << init.y(0).str();
    return out.str();
}

std::string describe(const Instance& inst) {
    return "  init: " + init_csv(inst.init) + "\n" + spec_lines(inst.spec);
}

std::string describe(const CoefficientSpec& spec, const InitialState& init) {
    return describe(Instance{spec, init});
}

const Rational& orbit_value(const Orbit& orbit, Component comp, long index) {
    return comp == Component::X ? orbit.x(index) : orbit.y(index);
}

char component_letter(Component comp) {
    return comp == Component::X ? 'x' : 'y';
}

// Evaluates one closed-form branch for all residues, both components and
// block counts 0..nmax, comparing bit-exactly against the simulated orbit.
// Returns an empty string on success and a replayable report otherwise.
std::string compare_branch_to_orbit(const CoefficientSpec& spec, const InitialState& init,
                                    const Orbit& orbit, Branch branch, long nmax) {
    for (long n = 0; n <= nmax; ++n) {
        for (int j = -2; j <= 1; ++j) {
            for (Component comp : {Component::X, Component::Y}) {
                ClosedFormQuery q{branch, j, n, comp};
                const long m = solution_index(q);
                Rational got;
                try {
                    switch (branch) {
                    case Branch::General:
                        got = closed_general(spec, init, q);
                        break;
                    case Branch::Constant: {
                        auto values = constant_values(spec);
                        got = closed_constant((*values)[0], (*values)[1], (*values)[2],
                                              (*values)[3], init, q);
                        break;
                    }
                    case Branch::Period4:
                        got = closed_period4(spec, init, q);
                        break;
                    }
                } catch (const DenominatorVanished& e) {
                    std::ostringstream msg;
                    msg << component_letter(comp) << '[' << m
                        << "] raised denominator-vanished (step " << e.step
                        << ") on a live orbit\n"
                        << describe(spec, init);
                    return msg.str();
                }
                const Rational& want = orbit_value(orbit, comp, m);
                if (got != want) {
                    std::ostringstream msg;
                    msg << component_letter(comp) << '[' << m << "] closed=" << got.str()
                        << " orbit=" << want.str() << " (n=" << n << " j=" << j << ")\n"
                        << describe(spec, init);
                    return msg.str();
                }
            }
        }
    }
    return {};
}

void record(CheckResult& result, long trial, const std::string& problem) {
    ++result.total;
    if (problem.empty()) {
        ++result.passed;
    } else if (result.failure.empty()) {
        result.failure = "trial " + std::to_string(trial) + ": " + problem;
    }
}

} // namespace

CheckResult suite_general(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    const long depth = 4 * nmax + 1;
    // Closed-form evaluation may consume coefficients up to index 4n + 5.
    const long table_length = 4 * nmax + 6;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Tabulated, table_length, depth);
        Orbit orbit = iterate(inst.spec, inst.init, depth);
        record(result, trial,
               compare_branch_to_orbit(inst.spec, inst.init, orbit, Branch::General, nmax));
    }
    return result;
}

CheckResult suite_constant(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    const long depth = 4 * nmax + 1;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Constant, 1, depth);
        Orbit orbit = iterate(inst.spec, inst.init, depth);
        std::string problem =
            compare_branch_to_orbit(inst.spec, inst.init, orbit, Branch::Constant, nmax);
        if (problem.empty())
            problem = compare_branch_to_orbit(inst.spec, inst.init, orbit, Branch::General, nmax);
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_unit16(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    const long depth = 4 * nmax + 1;
    long trial = 0;
    for (int bits = 0; bits < 16; ++bits) {
        SignPattern pattern{(bits & 1) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 4) ? -1 : 1,
                            (bits & 8) ? -1 : 1};
        CoefficientSpec spec = CoefficientSpec::constant(
            Rational(pattern.a), Rational(pattern.b), Rational(pattern.c), Rational(pattern.d));
        for (long draw = 0; draw < trials; ++draw, ++trial) {
            SplitMix64 rng(trial_seed(seed, trial));
            InitialState init = live_init(rng, spec, depth);
            Orbit orbit = iterate(spec, init, depth);
            std::string problem;
            for (long n = 0; n <= nmax && problem.empty(); ++n) {
                for (int j = -2; j <= 1 && problem.empty(); ++j) {
                    for (Component comp : {Component::X, Component::Y}) {
                        ClosedFormQuery q{Branch::Constant, j, n, comp};
                        Rational got = closed_unit(pattern, init, q);
                        const Rational& want = orbit_value(orbit, comp, solution_index(q));
                        if (got != want) {
                            std::ostringstream msg;
                            msg << "pattern (" << pattern.a << ',' << pattern.b << ','
                                << pattern.c << ',' << pattern.d << ") "
                                << component_letter(comp) << '[' << solution_index(q)
                                << "] closed=" << got.str() << " orbit=" << want.str() << '\n'
                                << describe(spec, init);
                            problem = msg.str();
                            break;
                        }
                        // The two sign patterns with their own simplified
                        // evaluation path must also agree with the generic
                        // constant-coefficient route.
                        if (pattern.a == 1 && pattern.c == 1 && pattern.b == pattern.d) {
                            Rational through_constant =
                                closed_constant(Rational(pattern.a), Rational(pattern.b),
                                                Rational(pattern.c), Rational(pattern.d), init, q);
                            if (got != through_constant) {
                                std::ostringstream msg;
                                msg << "pattern (" << pattern.a << ',' << pattern.b << ','
                                    << pattern.c << ',' << pattern.d << ") "
                                    << component_letter(comp) << '[' << solution_index(q)
                                    << "] simplified=" << got.str()
                                    << " constant=" << through_constant.str() << '\n'
                                    << describe(spec, init);
                                problem = msg.str();
                                break;
                            }
                        }
                    }
                }
            }
            record(result, trial, problem);
        }
    }
    return result;
}

CheckResult suite_period4(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    const long depth = 4 * nmax + 1;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Periodic, 4, depth);
        Orbit orbit = iterate(inst.spec, inst.init, depth);
        std::string problem =
            compare_branch_to_orbit(inst.spec, inst.init, orbit, Branch::Period4, nmax);
        if (problem.empty())
            problem = compare_branch_to_orbit(inst.spec, inst.init, orbit, Branch::General, nmax);
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_uv(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    const long top_slot = 4 * nmax + 3;
    const long orbit_depth = 27;
    const long table_length = std::max(top_slot + 2, orbit_depth + 1);
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Tabulated, table_length, orbit_depth);
        std::string problem;

        InvariantSeeds seeds = seeds_from_init(inst.spec, inst.init);
        InvariantTrack iterated = iterate_invariants(inst.spec, seeds.u[0], seeds.u[1],
                                                     seeds.v[0], seeds.v[1], top_slot);
        for (long n = 0; n <= nmax && problem.empty(); ++n) {
            for (int j = 0; j < 4; ++j) {
                auto [u, v] = invariant_closed(inst.spec, seeds, n, j);
                const long slot = 4 * n + j;
                if (u != iterated.us[slot] || v != iterated.vs[slot]) {
                    std::ostringstream msg;
                    msg << "slot " << slot << " closed (U,V)=(" << u.str() << ',' << v.str()
                        << ") iterated (" << iterated.us[slot].str() << ','
                        << iterated.vs[slot].str() << ")\n" << describe(inst);
                    problem = msg.str();
                    break;
                }
            }
        }

        if (problem.empty()) {
            Orbit orbit = iterate(inst.spec, inst.init, orbit_depth);
            InvariantTrack from_orbit = track_from_orbit(orbit);
            // Orbit-derived slots must agree with the affine recurrences both
            // slot-by-slot and through the explicit two-term relations.
            const long shared = std::min(from_orbit.slots(), iterated.slots());
            for (long slot = 0; slot < shared; ++slot) {
                if (from_orbit.us[slot] != iterated.us[slot] ||
                    from_orbit.vs[slot] != iterated.vs[slot]) {
                    std::ostringstream msg;
                    msg << "slot " << slot << " from orbit (U,V)=(" << from_orbit.us[slot].str()
                        << ',' << from_orbit.vs[slot].str() << ") from recurrence ("
                        << iterated.us[slot].str() << ',' << iterated.vs[slot].str() << ")\n"
                        << describe(inst);
                    problem = msg.str();
                    break;
                }
            }
            for (long n = 0; n + 2 < from_orbit.slots() && problem.empty(); ++n) {
                Rational v_next = from_orbit.vs[n + 2] - inst.spec.at(CoeffName::A, n) *
                                      from_orbit.us[n] - inst.spec.at(CoeffName::B, n);
                Rational u_next = from_orbit.us[n + 2] - inst.spec.at(CoeffName::C, n) *
                                      from_orbit.vs[n] - inst.spec.at(CoeffName::D, n);
                if (!v_next.is_zero() || !u_next.is_zero()) {
                    std::ostringstream msg;
                    msg << "affine relation residual at n=" << n << ": (" << u_next.str() << ','
                        << v_next.str() << ")\n" << describe(inst);
                    problem = msg.str();
                }
            }
        }
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_reconstruction(std::uint64_t seed, long trials, long max_index) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Tabulated, max_index + 4, max_index);
        Orbit orbit = iterate(inst.spec, inst.init, max_index);
        InvariantTrack track = track_from_orbit(orbit);
        std::string problem;
        for (long index = 0; index <= 2 + max_index && problem.empty(); ++index) {
            auto [two_x, two_y] = reconstruct(inst.init.x(-2), inst.init.x(-1), inst.init.y(-2),
                                              inst.init.y(-1), track, index);
            auto [four_x, four_y] = reconstruct_regrouped(inst.init.x(-2), inst.init.x(-1),
                                                          inst.init.y(-2), inst.init.y(-1),
                                                          track, index);
            const Rational& want_x = orbit.x(index - 2);
            const Rational& want_y = orbit.y(index - 2);
            if (two_x != want_x || two_y != want_y || four_x != want_x || four_y != want_y) {
                std::ostringstream msg;
                msg << "index " << index - 2 << " two-step (" << two_x.str() << ','
                    << two_y.str() << ") four-step (" << four_x.str() << ',' << four_y.str()
                    << ") orbit (" << want_x.str() << ',' << want_y.str() << ")\n"
                    << describe(inst);
                problem = msg.str();
            }
        }
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_symmetry(std::uint64_t seed, long trials, const std::vector<Rational>& ts,
                           long steps) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = live_instance(rng, CoeffKind::Tabulated, steps, steps);
        std::string problem;
        for (const Rational& t : ts) {
            ScalingReport report = verify_scaling(inst.spec, inst.init, t, steps,
                                                  ExponentConvention::SameSign);
            if (!report.ok()) {
                std::ostringstream msg;
                msg << "t=" << t.str() << ": " << report.detail << '\n' << describe(inst);
                problem = msg.str();
                break;
            }
        }
        record(result, trial, problem);
    }
    return result;
}

namespace {

// Shared body of the three periodicity suites: the instance's orbit must be
// complete and repeat with the announced period at every held index.
std::string check_periodic_orbit(const Instance& inst, long period, long steps) {
    Orbit orbit = iterate(inst.spec, inst.init, steps);
    if (!orbit.complete()) {
        std::ostringstream msg;
        msg << "orbit hit the forbidden set at step " << orbit.forbidden_step() << '\n'
            << describe(inst);
        return msg.str();
    }
    for (long n = -2; n + period <= orbit.last_index(); ++n) {
        if (orbit.x(n + period) != orbit.x(n) || orbit.y(n + period) != orbit.y(n)) {
            std::ostringstream msg;
            msg << "index " << n << " does not repeat after " << period << " steps: x "
                << orbit.x(n).str() << " -> " << orbit.x(n + period).str() << ", y "
                << orbit.y(n).str() << " -> " << orbit.y(n + period).str() << '\n'
                << describe(inst);
            return msg.str();
        }
    }
    return {};
}

} // namespace

CheckResult suite_period2_theorem(std::uint64_t seed, long trials, long steps) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = period2_instance(rng);
        auto values = constant_values(inst.spec);
        std::string problem;
        if (!check_period2_conditions((*values)[0], (*values)[1], (*values)[2], (*values)[3],
                                      inst.init)) {
            problem = "constructed instance rejected by the period-2 condition\n" + describe(inst);
        } else {
            problem = check_periodic_orbit(inst, 2, steps);
        }
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_period4_theorem(std::uint64_t seed, long trials, long steps) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = period4_instance(rng);
        auto values = constant_values(inst.spec);
        std::string problem;
        if (!check_period4_conditions((*values)[0], (*values)[1], (*values)[2], (*values)[3],
                                      inst.init)) {
            problem = "constructed instance rejected by the period-4 condition\n" + describe(inst);
        } else {
            problem = check_periodic_orbit(inst, 4, steps);
        }
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_remark(std::uint64_t seed, long trials, long steps) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        Instance inst = remark_instance(rng, steps);
        auto values = constant_values(inst.spec);
        std::string problem;
        if (!check_period4_remark((*values)[0], (*values)[1], (*values)[2], (*values)[3],
                                  inst.init)) {
            problem = "constructed instance rejected by the sharpened condition\n" + describe(inst);
        } else {
            problem = check_periodic_orbit(inst, 4, steps);
        }
        record(result, trial, problem);
    }
    return result;
}

CheckResult suite_forbidden(std::uint64_t seed, long trials, long nmax) {
    CheckResult result;
    for (long trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(trial_seed(seed, trial));
        const ForbiddenReason reason =
            (trial % 2 == 0) ? ForbiddenReason::XDenominator : ForbiddenReason::YDenominator;
        Instance inst = dead_at_zero_instance(rng, reason);
        std::string problem;

        Orbit orbit = iterate(inst.spec, inst.init, 5);
        if (orbit.complete() || orbit.forbidden_step() != 0 || orbit.forbidden_reason() != reason) {
            std::ostringstream msg;
            msg << "iteration did not stop with a step-0 " << reason_name(reason)
                << "-denominator report\n" << describe(inst);
            problem = msg.str();
        }

        for (long n = 0; n <= nmax && problem.empty(); ++n) {
            for (int j = -2; j <= 1 && problem.empty(); ++j) {
                for (Component comp : {Component::X, Component::Y}) {
                    ClosedFormQuery q{Branch::General, j, n, comp};
                    const long m = solution_index(q);
                    if (m < 1) {
                        // Queries addressing the start values never touch the
                        // dead step and must still answer.
                        Rational got = closed_general(inst.spec, inst.init, q);
                        const Rational& want =
                            comp == Component::X ? inst.init.x(static_cast<int>(m))
                                                 : inst.init.y(static_cast<int>(m));
                        if (got != want) {
                            std::ostringstream msg;
                            msg << component_letter(comp) << '[' << m << "] = " << got.str()
                                << " but the start value is " << want.str() << '\n'
                                << describe(inst);
                            problem = msg.str();
                            break;
                        }
                        continue;
                    }
                    bool raised = false;
                    try {
                        closed_general(inst.spec, inst.init, q);
                    } catch (const DenominatorVanished& e) {
                        raised = true;
                        if (e.step != 0) {
                            std::ostringstream msg;
                            msg << component_letter(comp) << '[' << m
                                << "] reported a vanish at step " << e.step << ", expected 0\n"
                                << describe(inst);
                            problem = msg.str();
                        }
                    }
                    if (!raised && problem.empty()) {
                        std::ostringstream msg;
                        msg << component_letter(comp) << '[' << m
                            << "] answered on an orbit that dies at step 0\n" << describe(inst);
                        problem = msg.str();
                    }
                }
            }
        }
        record(result, trial, problem);
    }
    return result;
}

} // namespace rds
