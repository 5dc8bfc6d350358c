#pragma once

#include "goldman/errors.hpp"

#include <array>
#include <complex>
#include <optional>
#include <utility>

namespace goldman {

/// Point of the upper half-plane (imaginary part > 0).
using PointH = std::complex<double>;

/// Tolerances used by the geometric layer. Overridable per call site;
/// the defaults are shared by the whole library.
struct Tolerances {
    double trace = 1e-9;          // |trace| - 2 window for classification
    double coincidence = 1e-8;    // geometric coincidence tests
    double tangency = 1e-6;       // transversality guard in enumeration
    double case_boundary = 1e-9;  // zigzag case-boundary reporting
};

inline constexpr Tolerances default_tol{};

/// Point of the boundary circle R u {inf}, held projectively as (p : q)
/// with hypot(p, q) = 1. Infinity is exactly (1 : 0); no float infinities
/// are ever produced, so vertical geodesics stay exact.
struct BoundaryPoint {
    double p = 0.0;
    double q = 1.0;

    static BoundaryPoint finite(double x);
    static BoundaryPoint infinity();
    static BoundaryPoint projective(double p, double q);

    bool is_infinite() const { return q == 0.0; }
    double value() const;  // throws domain_error at infinity

    friend double boundary_det(const BoundaryPoint& a, const BoundaryPoint& b) {
        return a.p * b.q - b.p * a.q;
    }
};

/// Orientation-preserving isometry of H, stored as a real 2x2 matrix with
/// det = 1. The SL(2,R) lift sign is preserved through products (needed
/// for the Fuchsian trace conditions); equality is projective.
class MobiusMap {
public:
    MobiusMap() : e_{1.0, 0.0, 0.0, 1.0} {}

    /// Normalizes det to 1. Throws domain_error when det <= 0.
    static MobiusMap from_entries(double m11, double m12, double m21, double m22);

    double m11() const { return e_[0]; }
    double m12() const { return e_[1]; }
    double m21() const { return e_[2]; }
    double m22() const { return e_[3]; }
    double trace() const { return e_[0] + e_[3]; }

    PointH apply(PointH z) const;
    BoundaryPoint apply(const BoundaryPoint& x) const;

    MobiusMap inverse() const;
    friend MobiusMap operator*(const MobiusMap& g, const MobiusMap& h);

    /// Representative with m11 + m22 >= 0 (first nonzero entry positive
    /// when the trace vanishes); used for stable projective comparison.
    MobiusMap projective_canonical() const;

    /// Projective equality: g == h or g == -h entrywise within tol.
    bool approx_equal(const MobiusMap& o, double tol = 1e-9) const;

    MobiusMap negated() const { return MobiusMap({-e_[0], -e_[1], -e_[2], -e_[3]}); }

private:
    explicit MobiusMap(std::array<double, 4> e) : e_(e) {}
    std::array<double, 4> e_;
};

enum class IsomClass { Identity, Elliptic, Parabolic, Hyperbolic };

IsomClass classify(const MobiusMap& g, const Tolerances& tol = default_tol);

/// 2 * arccosh(|tr|/2); requires a hyperbolic map.
double translation_length(const MobiusMap& g, const Tolerances& tol = default_tol);

/// Hyperbolic distance in the upper half-plane.
double dist(PointH p, PointH q);

/// Geodesic with an orientation, named by its ideal endpoints.
struct DirectedGeodesic {
    BoundaryPoint source;
    BoundaryPoint target;

    DirectedGeodesic reversed() const { return {target, source}; }
};

/// Axis of a hyperbolic map, directed from repelling to attracting
/// fixed point (the direction of translation).
DirectedGeodesic axis(const MobiusMap& g, const Tolerances& tol = default_tol);

/// One transverse crossing of two directed geodesics.
struct GeodesicCrossing {
    PointH point;
    double angle;     // forward angle between the directions, in (0, pi)
    int orientation;  // +1 if the ordered pair of tangents is positively oriented
};

/// The unique transverse crossing, or nullopt when the geodesics are
/// disjoint, asymptotic or equal.
std::optional<GeodesicCrossing> geodesic_meet(const DirectedGeodesic& L1,
                                              const DirectedGeodesic& L2);

/// Euclidean unit tangent of L at a point assumed to lie on L. The
/// conformal metric makes this the hyperbolic direction as well.
std::complex<double> tangent_at(const DirectedGeodesic& L, PointH z);

/// Anti-isometry z -> (r11 conj(z) + r12) / (r21 conj(z) + r22), det -1.
class Reflection {
public:
    explicit Reflection(const DirectedGeodesic& mirror);

    PointH apply(PointH z) const;
    BoundaryPoint apply(const BoundaryPoint& x) const;
    const DirectedGeodesic& mirror() const { return mirror_; }

    /// Orientation-preserving composition this . other.
    MobiusMap compose(const Reflection& other) const;

private:
    DirectedGeodesic mirror_;
    std::array<double, 4> r_;
};

inline Reflection reflect(const DirectedGeodesic& L) { return Reflection(L); }

/// Isometry taking L to the imaginary axis directed (0 -> inf). All
/// along-L bookkeeping (parameters, feet, perpendiculars) happens in
/// this frame, where it is numerically benign.
class GeodesicFrame {
public:
    explicit GeodesicFrame(const DirectedGeodesic& L);

    const MobiusMap& to_standard() const { return to_std_; }
    const MobiusMap& from_standard() const { return from_std_; }

    /// Signed position along L of the projection of z (log-height in frame).
    double param(PointH z) const;
    /// Distance from z to L.
    double offset(PointH z) const;
    /// Point of L at parameter t.
    PointH at(double t) const;
    /// Foot of the perpendicular from z to L.
    PointH foot(PointH z) const;
    /// Geodesic perpendicular to L at parameter t, directed so that
    /// (direction of L, direction of the perpendicular) is positively
    /// oriented.
    DirectedGeodesic perpendicular(double t) const;

private:
    MobiusMap to_std_;
    MobiusMap from_std_;
};

PointH perpendicular_foot(const DirectedGeodesic& L, PointH z);
PointH point_at(const DirectedGeodesic& L, PointH origin, double s);
DirectedGeodesic perpendicular_at(const DirectedGeodesic& L, PointH origin, double s);

/// Hyperbolic midpoint of two distinct points.
PointH hyperbolic_midpoint(PointH p, PointH q);

/// Directed geodesic through two distinct points, oriented from p to q.
DirectedGeodesic geodesic_through(PointH p, PointH q);

/// Both sides of the composition law for translation lengths:
/// cosh(t_gh/2) = cosh(t_g/2) cosh(t_h/2) + sinh(t_g/2) sinh(t_h/2) cos(theta),
/// theta the forward angle of the crossing axes.
struct CoshCheck {
    double t_g;
    double t_h;
    double theta;
    double t_gh;
    double residual;  // |lhs - rhs|
};

/// Requires both maps hyperbolic with transversely crossing axes.
CoshCheck compose_check_cosh(const MobiusMap& g, const MobiusMap& h,
                             const Tolerances& tol = default_tol);

/// g as a product reflect(L2) . reflect(L1) with both mirrors orthogonal
/// to the axis and d(L1, L2) = t_g / 2. L1 passes through the point of
/// the axis nearest to i.
std::pair<DirectedGeodesic, DirectedGeodesic>
two_reflection_decomposition(const MobiusMap& g, const Tolerances& tol = default_tol);

/// Order-two rotation about a point.
MobiusMap half_turn(PointH v);

/// g as half_turn(v2) * half_turn(v1) with v1 the given basepoint on the
/// axis and d(v1, v2) = t_g / 2.
std::pair<PointH, PointH>
two_rotation_decomposition(const MobiusMap& g, PointH basepoint,
                           const Tolerances& tol = default_tol);

}  // namespace goldman
