#include "rds/coefficients.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace rds {

namespace {

const char* name_of(CoeffName w) {
    switch (w) {
    case CoeffName::A: return "a";
    case CoeffName::B: return "b";
    case CoeffName::C: return "c";
    case CoeffName::D: return "d";
    }
    return "?";
}

void require_nonzero_denominator_terms(const std::array<std::vector<Rational>, 4>& seq) {
    for (CoeffName w : {CoeffName::A, CoeffName::C}) {
        const auto& list = seq[static_cast<int>(w)];
        for (size_t i = 0; i < list.size(); ++i) {
            if (list[i].is_zero())
                throw ZeroCoefficient(std::string(name_of(w)) + "[" + std::to_string(i) +
                                      "] must be nonzero");
        }
    }
}

} // namespace

CoefficientSpec::CoefficientSpec(CoeffKind kind, std::array<std::vector<Rational>, 4> seq)
    : kind_(kind), seq_(std::move(seq)) {
    const size_t len = seq_[0].size();
    if (len == 0)
        throw ParseError("coefficient lists must be nonempty");
    for (const auto& list : seq_) {
        if (list.size() != len)
            throw ParseError("coefficient lists must all have the same length");
    }
    require_nonzero_denominator_terms(seq_);
}

CoefficientSpec CoefficientSpec::constant(Rational a, Rational b, Rational c, Rational d) {
    return CoefficientSpec(CoeffKind::Constant, {std::vector<Rational>{std::move(a)},
                                                 std::vector<Rational>{std::move(b)},
                                                 std::vector<Rational>{std::move(c)},
                                                 std::vector<Rational>{std::move(d)}});
}

CoefficientSpec CoefficientSpec::periodic(std::vector<Rational> a, std::vector<Rational> b,
                                          std::vector<Rational> c, std::vector<Rational> d) {
    return CoefficientSpec(CoeffKind::Periodic,
                           {std::move(a), std::move(b), std::move(c), std::move(d)});
}

CoefficientSpec CoefficientSpec::tabulated(std::vector<Rational> a, std::vector<Rational> b,
                                           std::vector<Rational> c, std::vector<Rational> d) {
    return CoefficientSpec(CoeffKind::Tabulated,
                           {std::move(a), std::move(b), std::move(c), std::move(d)});
}

const Rational& CoefficientSpec::at(CoeffName which, long n) const {
    const auto& list = seq_[static_cast<int>(which)];
    switch (kind_) {
    case CoeffKind::Constant:
        return list[0];
    case CoeffKind::Periodic:
        return list[static_cast<size_t>(n % static_cast<long>(list.size()))];
    case CoeffKind::Tabulated:
        if (n < 0 || n >= static_cast<long>(list.size()))
            throw IndexOutOfRange(std::string(name_of(which)) + "[" + std::to_string(n) +
                                  "]: table has " + std::to_string(list.size()) + " entries");
        return list[static_cast<size_t>(n)];
    }
    throw Error("unreachable");
}

std::optional<std::array<Rational, 4>> constant_values(const CoefficientSpec& spec) {
    std::array<Rational, 4> out;
    for (int i = 0; i < 4; ++i) {
        const auto& list = spec.list(static_cast<CoeffName>(i));
        for (const auto& v : list) {
            if (v != list[0])
                return std::nullopt;
        }
        out[static_cast<size_t>(i)] = list[0];
    }
    return out;
}

namespace {

struct ParsedLine {
    CoeffKind kind;
    std::vector<Rational> values;
};

std::string strip(std::string s) {
    const auto issp = [](unsigned char c) { return std::isspace(c); };
    while (!s.empty() && issp(static_cast<unsigned char>(s.back())))
        s.pop_back();
    size_t i = 0;
    while (i < s.size() && issp(static_cast<unsigned char>(s[i])))
        ++i;
    return s.substr(i);
}

ParsedLine parse_line_body(const std::string& body, int lineno) {
    // body is everything after "x:", e.g. " 1,2,3,4 @period"
    std::string text = strip(body);
    CoeffKind kind = CoeffKind::Constant;
    if (auto at = text.find('@'); at != std::string::npos) {
        const std::string tag = strip(text.substr(at + 1));
        if (tag == "period")
            kind = CoeffKind::Periodic;
        else if (tag == "table")
            kind = CoeffKind::Tabulated;
        else
            throw ParseError("line " + std::to_string(lineno) + ": unknown tag @" + tag);
        text = strip(text.substr(0, at));
    }

    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        values.push_back(Rational::parse(strip(item)));
    if (values.empty())
        throw ParseError("line " + std::to_string(lineno) + ": no values");
    if (kind == CoeffKind::Constant && values.size() != 1)
        throw ParseError("line " + std::to_string(lineno) +
                         ": a list needs an @period or @table tag");
    return {kind, std::move(values)};
}

} // namespace

CoefficientSpec parse_coefficient_file(std::istream& in) {
    std::map<char, ParsedLine> lines;
    std::map<char, int> where;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        const std::string line = strip(raw);
        if (line.empty())
            continue;
        if (line.size() < 2 || line[1] != ':' ||
            (line[0] != 'a' && line[0] != 'b' && line[0] != 'c' && line[0] != 'd'))
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected \"a:\", \"b:\", \"c:\" or \"d:\"");
        const char which = line[0];
        if (lines.count(which))
            throw ParseError("line " + std::to_string(lineno) + ": duplicate \"" +
                             std::string(1, which) + ":\" (first on line " +
                             std::to_string(where[which]) + ")");
        lines.emplace(which, parse_line_body(line.substr(2), lineno));
        where[which] = lineno;
    }

    for (char which : {'a', 'b', 'c', 'd'}) {
        if (!lines.count(which))
            throw ParseError("missing \"" + std::string(1, which) + ":\" line");
    }
    const CoeffKind kind = lines.at('a').kind;
    for (char which : {'b', 'c', 'd'}) {
        if (lines.at(which).kind != kind)
            throw ParseError("line " + std::to_string(where[which]) + ": \"" +
                             std::string(1, which) +
                             ":\" does not match the kind of the \"a:\" line " +
                             std::to_string(where['a']));
    }

    auto take = [&](char which) { return std::move(lines.at(which).values); };
    switch (kind) {
    case CoeffKind::Constant:
        return CoefficientSpec::constant(take('a')[0], take('b')[0], take('c')[0], take('d')[0]);
    case CoeffKind::Periodic:
        return CoefficientSpec::periodic(take('a'), take('b'), take('c'), take('d'));
    case CoeffKind::Tabulated:
        return CoefficientSpec::tabulated(take('a'), take('b'), take('c'), take('d'));
    }
    throw Error("unreachable");
}

CoefficientSpec parse_coefficient_text(const std::string& text) {
    std::istringstream in(text);
    return parse_coefficient_file(in);
}

} // namespace rds
