#include "goldman/decide.hpp"

#include <algorithm>

namespace goldman {

namespace {

bool shares_root(const CyclicWord& x, const CyclicWord& y) {
    const CyclicWord rx = primitive_root(x).root;
    const CyclicWord ry = primitive_root(y).root;
    return rx == ry || rx == inverse(ry);
}

/// [x^m, y] for m >= 1 across all input shapes the library covers.
FormalSum bracket_of_power(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                           int m, int radius) {
    if (m < 1) throw domain_error("bracket_of_power: m must be >= 1");
    if (x.empty() || y.empty()) return {};
    if (is_nonessential(rep, x) || is_nonessential(rep, y)) return {};
    if (y == power(x, m)) return {};  // trivial vanishing by antisymmetry
    if (shares_root(x, y)) {
        if (y == x && m >= 2 && primitive_root(x).exponent == 1)
            return bracket_power_self(rep, x, m, radius);
        throw unsupported_error(
            "bracket of shared-primitive-root classes is only supported for [x^m, x] "
            "with primitive x");
    }
    return bracket_power(rep, x, y, m, radius).sum;
}

}  // namespace

const char* to_string(SeparabilityMethod m) {
    switch (m) {
        case SeparabilityMethod::NonEssential: return "non_essential";
        case SeparabilityMethod::SharedPrimitiveRoot: return "shared_primitive_root";
        case SeparabilityMethod::GeodesicCount: return "geodesic_count";
    }
    return "?";
}

SeparabilityVerdict decide_separable(const SurfaceRep& rep, const CyclicWord& x,
                                     const CyclicWord& y, int radius) {
    SeparabilityVerdict v;
    if (x.empty() || y.empty() || is_nonessential(rep, x) || is_nonessential(rep, y)) {
        v.method = SeparabilityMethod::NonEssential;
        v.intersection_count = 0;
    } else if (shares_root(x, y)) {
        v.method = SeparabilityMethod::SharedPrimitiveRoot;
        v.intersection_count = 0;
    } else {
        v.method = SeparabilityMethod::GeodesicCount;
        v.witness_points = transverse_points(rep, x, y, radius);
        v.intersection_count = static_cast<int>(v.witness_points.size());
    }
    v.separable = v.intersection_count == 0;
    return v;
}

WscVerdict wsc_verdict(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                       int m, int radius) {
    if (m < 2) throw domain_error("wsc_verdict: m must be >= 2");
    WscVerdict v;
    v.y_eq_xm = y == power(x, m);
    v.i_zero = intersection_number(rep, x, y, radius) == 0;
    v.bracket_zero = bracket_of_power(rep, x, y, m, radius).is_zero();
    v.consistent = v.bracket_zero == (v.i_zero || v.y_eq_xm);
    return v;
}

SscConditions ssc_conditions(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                             int m1, int m2, const Rational& c1, const Rational& c2,
                             int radius) {
    if (m1 == m2) throw domain_error("ssc_conditions: m1 and m2 must differ");
    if (m1 < 1 || m2 < 1) throw domain_error("ssc_conditions: powers must be >= 1");
    if (c1 == 0 || c2 == 0) throw domain_error("ssc_conditions: coefficients must be nonzero");

    SscConditions out;
    out.cond1 = intersection_number(rep, x, y, radius) == 0;

    const int mm = std::max(2, m1);
    const bool plain = !x.empty() && !y.empty() && !is_nonessential(rep, x) &&
                       !is_nonessential(rep, y) && !shares_root(x, y);
    if (plain) {
        // one enumeration serves every bracket in the four conditions
        auto points = transverse_points(rep, x, y, radius);
        auto b = [&](int m, int n) {
            return bracket_terms_from_points(x, y, points, m, n);
        };
        out.cond2 = b(m1, 1).is_zero() && b(m2, 1).is_zero();
        out.cond3 = b(m1, 1).is_zero() && b(1, m2).is_zero();
        FormalSum mix = b(mm, 1);
        mix.scale(c1);
        FormalSum second = b(mm, -1);
        second.scale(c2);
        mix += second;
        out.cond4 = mix.is_zero();
        return out;
    }

    auto bz = [&](const CyclicWord& u, const CyclicWord& v, int m) {
        return bracket_of_power(rep, u, v, m, radius).is_zero();
    };
    out.cond2 = bz(x, y, m1) && bz(x, y, m2);
    out.cond3 = bz(x, y, m1) && bz(y, x, m2);  // [x, y^m] = 0 iff [y^m, x] = 0
    FormalSum mix = bracket_of_power(rep, x, y, mm, radius);
    mix.scale(c1);
    FormalSum second = bracket_of_power(rep, x, inverse(y), mm, radius);
    second.scale(c2);
    mix += second;
    out.cond4 = mix.is_zero();
    return out;
}

bool is_simple(const SurfaceRep& rep, const CyclicWord& x, int radius) {
    if (x.empty()) return true;
    if (primitive_root(x).exponent != 1)
        throw domain_error("is_simple: x must be primitive");
    if (is_nonessential(rep, x)) return true;  // boundary classes are simple
    return self_intersection_points(rep, x, radius).empty();
}

CyclicWord figure_eight_probe() { return cyclic_canonical_str("aB"); }

CenterVerdict center_probe(const SurfaceRep& rep, const Combo& combo, int radius) {
    if (combo.empty()) throw domain_error("center_probe: empty combination");
    for (std::size_t i = 0; i < combo.size(); ++i) {
        if (combo[i].first == 0) throw domain_error("center_probe: zero coefficient");
        for (std::size_t j = i + 1; j < combo.size(); ++j)
            if (combo[i].second == combo[j].second)
                throw domain_error("center_probe: duplicate class '" +
                                   combo[i].second.str() + "'");
    }

    const CyclicWord x = figure_eight_probe();
    struct Member {
        Rational coeff;
        CyclicWord y;
        bool essential = false;
        bool is_probe = false;  // y == x, the one supported shared-root shape
        std::vector<TransversePoint> points;
    };
    std::vector<Member> members;
    int self_count = -1;
    long total_i = 0;
    for (const auto& [coeff, y] : combo) {
        Member m{coeff, y, false, false, {}};
        if (!y.empty() && !is_nonessential(rep, y)) {
            m.essential = true;
            if (y == x) {
                m.is_probe = true;
                if (self_count < 0)
                    self_count = static_cast<int>(self_intersection_points(rep, x, radius).size());
                // the probe meets its own copy twice per self-crossing
                total_i += 2 * self_count;
            } else if (shares_root(x, y)) {
                throw unsupported_error("center_probe: member '" + y.str() +
                                        "' is a nontrivial power of the probe (or its "
                                        "inverse); bracket shape not supported");
            } else {
                m.points = transverse_points(rep, x, y, radius);
                total_i += static_cast<long>(m.points.size());
            }
        }
        members.push_back(std::move(m));
    }

    CenterVerdict verdict;
    bool any_essential = std::any_of(members.begin(), members.end(),
                                     [](const Member& m) { return m.essential; });
    if (!any_essential) {
        verdict.central_candidate = true;
        return verdict;
    }

    for (int m = 1; m <= static_cast<int>(total_i) + 1; ++m) {
        FormalSum bracket;
        for (const Member& mem : members) {
            if (!mem.essential) continue;
            FormalSum part;
            if (mem.is_probe) {
                if (m == 1) continue;  // [x, x] = 0
                part = bracket_power_self(rep, x, m, radius);
            } else {
                part = bracket_terms_from_points(x, mem.y, mem.points, m, 1);
            }
            part.scale(mem.coeff);
            bracket += part;
        }
        if (!bracket.is_zero()) {
            verdict.central_candidate = false;
            verdict.witness = CenterWitness{m, std::move(bracket), power(x, m)};
            return verdict;
        }
    }
    verdict.central_candidate = true;  // probe exhausted without a witness
    return verdict;
}

}  // namespace goldman
