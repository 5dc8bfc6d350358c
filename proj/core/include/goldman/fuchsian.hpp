#pragma once

#include "goldman/hplane.hpp"
#include "goldman/words.hpp"

#include <array>
#include <memory>

namespace goldman {

namespace detail {
struct BallCache;
}

enum class SurfaceKind { PairOfPants };

/// Holonomy representation of the rank-2 free group <a, b> as hyperbolic
/// isometries, realizing a complete hyperbolic metric. For a pair of pants
/// the boundary classes are a, b and (ab)^-1 with prescribed lengths, and
/// discreteness/faithfulness is guaranteed by the SL(2,R) lifts having
/// tr rho(a), tr rho(b), tr rho(ab) <= -2.
class SurfaceRep {
public:
    SurfaceKind kind() const { return kind_; }
    const MobiusMap& gen_a() const { return gen_a_; }
    const MobiusMap& gen_b() const { return gen_b_; }
    double boundary_length(int i) const { return lengths_.at(static_cast<std::size_t>(i)); }
    double tol() const { return tol_; }

    /// Conjugated copy: same surface, every holonomy matrix replaced by
    /// k g k^-1. Invariant quantities must not change.
    SurfaceRep conjugated(const MobiusMap& k) const;

    friend SurfaceRep pants_rep(double l1, double l2, double l3, double tol);

    // enumeration support (see intersect.cpp); shared across copies
    std::shared_ptr<detail::BallCache> ball_cache() const { return ball_; }

private:
    SurfaceRep() = default;
    SurfaceKind kind_ = SurfaceKind::PairOfPants;
    MobiusMap gen_a_;
    MobiusMap gen_b_;
    std::array<double, 3> lengths_{};
    double tol_ = 1e-9;
    std::shared_ptr<detail::BallCache> ball_;
};

/// Pants representation with boundary geodesic lengths (l1, l2, l3):
/// rho(a) diagonal with trace -2 cosh(l1/2), rho(b) solved in closed form
/// so that tr rho(b) = -2 cosh(l2/2) and tr rho(ab) = -2 cosh(l3/2).
SurfaceRep pants_rep(double l1, double l2, double l3, double tol = 1e-9);

/// Convenience: boundary traces (t1, t2, t3), all <= -2 - tol.
SurfaceRep pants_rep_from_traces(double t1, double t2, double t3, double tol = 1e-9);

/// The default desk-scale metric: traces (-3, -3, -3).
SurfaceRep default_pants();

/// Homomorphism value rho(w).
MobiusMap holonomy(const SurfaceRep& rep, const Word& w);
MobiusMap holonomy(const SurfaceRep& rep, std::string_view letters);

/// Length of the closed geodesic in the class x. Conjugation-invariant,
/// so well defined on cyclic words. Throws domain_error on the empty class.
double geodesic_length(const SurfaceRep& rep, const CyclicWord& x);

/// True iff x is the constant class or a power of a boundary class
/// (a, b or ab up to orientation). Decided combinatorially.
bool is_nonessential(const SurfaceRep& rep, const CyclicWord& x);

}  // namespace goldman
