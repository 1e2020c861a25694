#include "rds/invariants.hpp"

#include <ostream>

namespace rds {

InvariantTrack track_from_orbit(const Orbit& orbit) {
    InvariantTrack track;
    const long top = orbit.last_index() + 1;
    track.us.reserve(static_cast<size_t>(top) + 1);
    track.vs.reserve(static_cast<size_t>(top) + 1);
    for (long n = 0; n <= top; ++n) {
        track.us.push_back((orbit.x(n - 2) * orbit.y(n - 1)).reciprocal());
        track.vs.push_back((orbit.x(n - 1) * orbit.y(n - 2)).reciprocal());
    }
    return track;
}

std::pair<Rational, Rational> invariant_step(const CoefficientSpec& spec,
                                             const InvariantTrack& track, long n) {
    const size_t i = static_cast<size_t>(n);
    return {spec.at(CoeffName::A, n) * track.us[i] + spec.at(CoeffName::B, n),
            spec.at(CoeffName::C, n) * track.vs[i] + spec.at(CoeffName::D, n)};
}

InvariantTrack iterate_invariants(const CoefficientSpec& spec, const Rational& u0,
                                  const Rational& u1, const Rational& v0,
                                  const Rational& v1, long max_slot) {
    InvariantTrack track;
    if (max_slot < 0)
        return track;
    track.us = {u0, u1};
    track.vs = {v0, v1};
    for (long n = 0; n + 2 <= max_slot; ++n) {
        auto [v_next, u_next] = invariant_step(spec, track, n);
        track.us.push_back(std::move(u_next));
        track.vs.push_back(std::move(v_next));
    }
    if (max_slot == 0) {
        track.us.resize(1);
        track.vs.resize(1);
    }
    return track;
}

InvariantSeeds seeds_from_init(const CoefficientSpec& spec, const InitialState& init) {
    InvariantSeeds s;
    s.u[0] = (init.x(-2) * init.y(-1)).reciprocal();
    s.u[1] = (init.x(-1) * init.y(0)).reciprocal();
    s.v[0] = (init.x(-1) * init.y(-2)).reciprocal();
    s.v[1] = (init.x(0) * init.y(-1)).reciprocal();
    s.v[2] = spec.at(CoeffName::A, 0) * s.u[0] + spec.at(CoeffName::B, 0);
    s.u[2] = spec.at(CoeffName::C, 0) * s.v[0] + spec.at(CoeffName::D, 0);
    s.v[3] = spec.at(CoeffName::A, 1) * s.u[1] + spec.at(CoeffName::B, 1);
    s.u[3] = spec.at(CoeffName::C, 1) * s.v[1] + spec.at(CoeffName::D, 1);
    return s;
}

std::pair<Rational, Rational> invariant_closed(const CoefficientSpec& spec,
                                               const InvariantSeeds& seeds, long n, int j) {
    // Suffix products suffix[l] = prod_{k=l..n-1} q[k], so that the sum term
    // for index l needs suffix[l+1] and the leading term needs suffix[0].
    const auto evaluate = [n](const std::vector<Rational>& q, const std::vector<Rational>& t,
                              const Rational& seed) {
        std::vector<Rational> suffix(static_cast<size_t>(n) + 1);
        suffix[static_cast<size_t>(n)] = Rational(1);
        for (long l = n - 1; l >= 0; --l)
            suffix[static_cast<size_t>(l)] =
                q[static_cast<size_t>(l)] * suffix[static_cast<size_t>(l) + 1];
        Rational out = seed * suffix[0];
        for (long l = 0; l < n; ++l)
            out += t[static_cast<size_t>(l)] * suffix[static_cast<size_t>(l) + 1];
        return out;
    };

    std::vector<Rational> qu, tu, qv, tv;
    qu.reserve(static_cast<size_t>(n));
    tu.reserve(static_cast<size_t>(n));
    qv.reserve(static_cast<size_t>(n));
    tv.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        const long base = 4 * k + j;
        const Rational& a0 = spec.at(CoeffName::A, base);
        const Rational& b0 = spec.at(CoeffName::B, base);
        const Rational& c0 = spec.at(CoeffName::C, base);
        const Rational& d0 = spec.at(CoeffName::D, base);
        const Rational& a2 = spec.at(CoeffName::A, base + 2);
        const Rational& b2 = spec.at(CoeffName::B, base + 2);
        const Rational& c2 = spec.at(CoeffName::C, base + 2);
        const Rational& d2 = spec.at(CoeffName::D, base + 2);
        qu.push_back(a0 * c2);
        tu.push_back(b0 * c2 + d2);
        qv.push_back(a2 * c0);
        tv.push_back(a2 * d0 + b2);
    }
    const size_t ji = static_cast<size_t>(j);
    return {evaluate(qu, tu, seeds.u[ji]), evaluate(qv, tv, seeds.v[ji])};
}

namespace {

Rational track_at(const std::vector<Rational>& slots, long n, const char* side) {
    if (n >= static_cast<long>(slots.size()))
        throw IndexOutOfRange(std::string("invariant track too short: need ") + side + "[" +
                              std::to_string(n) + "], have " +
                              std::to_string(slots.size()) + " slots");
    return slots[static_cast<size_t>(n)];
}

Rational checked_divide(const Rational& num, const Rational& den) {
    if (den.is_zero())
        throw DivisionByZero();
    return num / den;
}

} // namespace

std::pair<Rational, Rational> reconstruct(const Rational& x0, const Rational& x1,
                                          const Rational& y0, const Rational& y1,
                                          const InvariantTrack& track, long index) {
    const long j = index % 2;
    const long n = index / 2;
    Rational x = j == 0 ? x0 : x1;
    Rational y = j == 0 ? y0 : y1;
    for (long i = 0; i < n; ++i) {
        const long base = 2 * i + j;
        x *= checked_divide(track_at(track.us, base, "U"), track_at(track.vs, base + 1, "V"));
        y *= checked_divide(track_at(track.vs, base, "V"), track_at(track.us, base + 1, "U"));
    }
    return {x, y};
}

std::pair<Rational, Rational> reconstruct_regrouped(const Rational& x0, const Rational& x1,
                                                    const Rational& y0, const Rational& y1,
                                                    const InvariantTrack& track, long index) {
    const long j = index % 4;
    const long n = index / 4;

    Rational x, y;
    switch (j) {
    case 0: x = x0; y = y0; break;
    case 1: x = x1; y = y1; break;
    case 2:  // one two-step application past index 0
        x = x0 * checked_divide(track_at(track.us, 0, "U"), track_at(track.vs, 1, "V"));
        y = y0 * checked_divide(track_at(track.vs, 0, "V"), track_at(track.us, 1, "U"));
        break;
    default:  // j == 3, one two-step application past index 1
        x = x1 * checked_divide(track_at(track.us, 1, "U"), track_at(track.vs, 2, "V"));
        y = y1 * checked_divide(track_at(track.vs, 1, "V"), track_at(track.us, 2, "U"));
        break;
    }
    for (long i = 0; i < n; ++i) {
        const long base = 4 * i + j;
        x *= checked_divide(track_at(track.us, base, "U") * track_at(track.us, base + 2, "U"),
                            track_at(track.vs, base + 1, "V") * track_at(track.vs, base + 3, "V"));
        y *= checked_divide(track_at(track.vs, base, "V") * track_at(track.vs, base + 2, "V"),
                            track_at(track.us, base + 1, "U") * track_at(track.us, base + 3, "U"));
    }
    return {x, y};
}

void write_track_csv(std::ostream& os, const InvariantTrack& track) {
    os << "n,U,V\n";
    for (long n = 0; n < track.slots(); ++n)
        os << n << ',' << track.us[static_cast<size_t>(n)].str() << ','
           << track.vs[static_cast<size_t>(n)].str() << '\n';
}

} // namespace rds
