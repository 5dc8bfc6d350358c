#pragma once

#include "goldman/intersect.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace goldman {

enum class SeparabilityMethod { NonEssential, SharedPrimitiveRoot, GeodesicCount };

const char* to_string(SeparabilityMethod m);

struct SeparabilityVerdict {
    bool separable = false;
    int intersection_count = 0;
    std::vector<TransversePoint> witness_points;
    SeparabilityMethod method = SeparabilityMethod::GeodesicCount;
};

/// Do x and y admit disjoint representatives? Decided from the geometric
/// intersection number; `method` records which branch fired.
SeparabilityVerdict decide_separable(const SurfaceRep& rep, const CyclicWord& x,
                                     const CyclicWord& y, int radius = kDefaultRadius);

/// The weak criterion: [x^m, y] = 0 iff i(x, y) = 0 or y = x^m (m >= 2).
/// `consistent` must come out true on every input the theorem covers.
struct WscVerdict {
    bool bracket_zero = false;
    bool i_zero = false;
    bool y_eq_xm = false;
    bool consistent = false;
};

WscVerdict wsc_verdict(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                       int m, int radius = kDefaultRadius);

/// The four equivalent separability conditions:
///  (1) i(x, y) = 0
///  (2) [x^m1, y] = [x^m2, y] = 0
///  (3) [x^m1, y] = [x, y^m2] = 0
///  (4) [x^max(2,m1), c1 y + c2 y^-1] = 0
struct SscConditions {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    bool cond4 = false;
    bool all_agree() const { return cond1 == cond2 && cond2 == cond3 && cond3 == cond4; }
};

SscConditions ssc_conditions(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                             int m1, int m2, const Rational& c1, const Rational& c2,
                             int radius = kDefaultRadius);

/// Does the primitive class x contain a simple representative?
/// Non-essential classes are simple; otherwise the self-intersection
/// count decides (equivalently, [x^2, x] = 0).
bool is_simple(const SurfaceRep& rep, const CyclicWord& x, int radius = kDefaultRadius);

struct CenterWitness {
    int m = 0;
    FormalSum bracket;
    CyclicWord against;  // the probe power x^m the combination fails against
};

struct CenterVerdict {
    bool central_candidate = false;
    std::optional<CenterWitness> witness;
};

using Combo = std::vector<std::pair<Rational, CyclicWord>>;

/// Center probe for the pair of pants: tests [x^m, sum_j c_j y_j] for the
/// figure-eight probe x = aB and m = 1 .. I+1, I the total intersection
/// number with the combination. Combinations of non-essential classes
/// come back central_candidate; a nonzero bracket is returned as the
/// witness. Members equal to a nontrivial power of the probe (or its
/// inverse) are outside the supported bracket shapes.
CenterVerdict center_probe(const SurfaceRep& rep, const Combo& combo,
                           int radius = kDefaultRadius);

/// The probe class "aB".
CyclicWord figure_eight_probe();

}  // namespace goldman
