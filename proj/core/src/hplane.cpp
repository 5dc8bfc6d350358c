#include "goldman/hplane.hpp"

#include <algorithm>
#include <cmath>

namespace goldman {

namespace {

constexpr double kInfEps = 1e-13;

struct GeodesicShape {
    bool vertical;
    double x0;      // vertical: line Re z = x0
    double center;  // circle: center on the real axis
    double radius;
};

GeodesicShape shape_of(const DirectedGeodesic& L) {
    const bool si = L.source.is_infinite();
    const bool ti = L.target.is_infinite();
    if (si && ti) throw domain_error("geodesic with two infinite endpoints");
    if (si) return {true, L.target.value(), 0, 0};
    if (ti) return {true, L.source.value(), 0, 0};
    double u = L.source.value();
    double v = L.target.value();
    if (u == v) throw domain_error("geodesic endpoints coincide");
    return {false, 0, 0.5 * (u + v), 0.5 * std::fabs(u - v)};
}

}  // namespace

BoundaryPoint BoundaryPoint::finite(double x) { return projective(x, 1.0); }

BoundaryPoint BoundaryPoint::infinity() { return BoundaryPoint{1.0, 0.0}; }

BoundaryPoint BoundaryPoint::projective(double p, double q) {
    double h = std::hypot(p, q);
    if (h == 0.0) throw domain_error("boundary point (0:0)");
    p /= h;
    q /= h;
    if (std::fabs(q) <= kInfEps * std::fabs(p)) return infinity();
    if (q < 0.0) {
        p = -p;
        q = -q;
    }
    return BoundaryPoint{p, q};
}

double BoundaryPoint::value() const {
    if (is_infinite()) throw domain_error("boundary point at infinity has no finite value");
    return p / q;
}

MobiusMap MobiusMap::from_entries(double m11, double m12, double m21, double m22) {
    double det = m11 * m22 - m12 * m21;
    if (!(det > 0.0))
        throw domain_error("matrix determinant must be positive");
    double s = 1.0 / std::sqrt(det);
    return MobiusMap({m11 * s, m12 * s, m21 * s, m22 * s});
}

PointH MobiusMap::apply(PointH z) const {
    std::complex<double> num = e_[0] * z + e_[1];
    std::complex<double> den = e_[2] * z + e_[3];
    return num / den;
}

BoundaryPoint MobiusMap::apply(const BoundaryPoint& x) const {
    return BoundaryPoint::projective(e_[0] * x.p + e_[1] * x.q,
                                     e_[2] * x.p + e_[3] * x.q);
}

MobiusMap MobiusMap::inverse() const {
    return MobiusMap({e_[3], -e_[1], -e_[2], e_[0]});
}

MobiusMap operator*(const MobiusMap& g, const MobiusMap& h) {
    const auto& a = g.e_;
    const auto& b = h.e_;
    return MobiusMap({a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                      a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]});
}

MobiusMap MobiusMap::projective_canonical() const {
    double tr = trace();
    if (tr < 0.0) return negated();
    if (tr > 0.0) return *this;
    for (double v : e_) {
        if (v > 0.0) return *this;
        if (v < 0.0) return negated();
    }
    return *this;
}

bool MobiusMap::approx_equal(const MobiusMap& o, double tol) const {
    MobiusMap a = projective_canonical();
    MobiusMap b = o.projective_canonical();
    for (int i = 0; i < 4; ++i)
        if (std::fabs(a.e_[i] - b.e_[i]) > tol) return false;
    return true;
}

IsomClass classify(const MobiusMap& g, const Tolerances& tol) {
    double t = std::fabs(g.trace());
    if (t > 2.0 + tol.trace) return IsomClass::Hyperbolic;
    bool ident = g.approx_equal(MobiusMap{}, tol.trace);
    if (t >= 2.0 - tol.trace) return ident ? IsomClass::Identity : IsomClass::Parabolic;
    return IsomClass::Elliptic;
}

double translation_length(const MobiusMap& g, const Tolerances& tol) {
    if (classify(g, tol) != IsomClass::Hyperbolic)
        throw domain_error("translation_length: map is not hyperbolic");
    return 2.0 * std::acosh(0.5 * std::fabs(g.trace()));
}

double dist(PointH p, PointH q) {
    double d2 = std::norm(p - q);
    double c = 1.0 + d2 / (2.0 * p.imag() * q.imag());
    return std::acosh(std::max(1.0, c));
}

DirectedGeodesic axis(const MobiusMap& g, const Tolerances& tol) {
    if (classify(g, tol) != IsomClass::Hyperbolic)
        throw domain_error("axis: map is not hyperbolic");
    const double a = g.m11(), b = g.m12(), c = g.m21(), d = g.m22();
    const double tr = a + d;
    const double s = std::sqrt(tr * tr - 4.0);
    // Fixed points solve c z^2 + (d - a) z - b = 0. Both are taken from the
    // branch of (a - d +- s) with larger magnitude, each in the projective
    // form that stays finite as c -> 0 or b -> 0.
    const double u1 = a - d + s;
    const double u2 = a - d - s;
    const double u = std::fabs(u1) >= std::fabs(u2) ? u1 : u2;
    BoundaryPoint f1 = BoundaryPoint::projective(u, 2.0 * c);
    BoundaryPoint f2 = BoundaryPoint::projective(-2.0 * b, u);

    auto eig_mag = [&](const BoundaryPoint& f) {
        // |eigenvalue| of the eigenvector (p, q); use the better-conditioned row.
        double n1 = a * f.p + b * f.q, d1 = f.p;
        double n2 = c * f.p + d * f.q, d2 = f.q;
        return std::fabs(d1) >= std::fabs(d2) ? std::fabs(n1) / std::fabs(d1)
                                              : std::fabs(n2) / std::fabs(d2);
    };
    if (eig_mag(f1) > 1.0) return {f2, f1};
    return {f1, f2};
}

std::complex<double> tangent_at(const DirectedGeodesic& L, PointH z) {
    GeodesicShape sh = shape_of(L);
    if (sh.vertical) {
        return L.target.is_infinite() ? std::complex<double>(0.0, 1.0)
                                      : std::complex<double>(0.0, -1.0);
    }
    double u = L.source.value();
    double v = L.target.value();
    double tx = z.imag() / sh.radius;
    double ty = (sh.center - z.real()) / sh.radius;
    if (u < v) return {tx, ty};
    return {-tx, -ty};
}

std::optional<GeodesicCrossing> geodesic_meet(const DirectedGeodesic& L1,
                                              const DirectedGeodesic& L2) {
    // Transverse crossing iff the endpoint pairs separate each other on
    // the boundary circle: cross-ratio sign test, no divisions.
    double d13 = boundary_det(L1.source, L2.source);
    double d24 = boundary_det(L1.target, L2.target);
    double d14 = boundary_det(L1.source, L2.target);
    double d23 = boundary_det(L1.target, L2.source);
    if (!((d13 * d24) * (d14 * d23) < 0.0)) return std::nullopt;

    GeodesicShape s1 = shape_of(L1);
    GeodesicShape s2 = shape_of(L2);
    PointH z;
    if (s1.vertical && s2.vertical) return std::nullopt;
    if (s1.vertical || s2.vertical) {
        const GeodesicShape& vert = s1.vertical ? s1 : s2;
        const GeodesicShape& circ = s1.vertical ? s2 : s1;
        double y2 = circ.radius * circ.radius - (vert.x0 - circ.center) * (vert.x0 - circ.center);
        if (y2 <= 0.0) return std::nullopt;
        z = {vert.x0, std::sqrt(y2)};
    } else {
        if (s1.center == s2.center) return std::nullopt;
        double x = (s1.radius * s1.radius - s2.radius * s2.radius - s1.center * s1.center +
                    s2.center * s2.center) /
                   (2.0 * (s2.center - s1.center));
        double y2 = s1.radius * s1.radius - (x - s1.center) * (x - s1.center);
        if (y2 <= 0.0) return std::nullopt;
        z = {x, std::sqrt(y2)};
    }

    std::complex<double> t1 = tangent_at(L1, z);
    std::complex<double> t2 = tangent_at(L2, z);
    double dot = std::clamp(t1.real() * t2.real() + t1.imag() * t2.imag(), -1.0, 1.0);
    double cross = t1.real() * t2.imag() - t1.imag() * t2.real();
    return GeodesicCrossing{z, std::acos(dot), cross > 0.0 ? 1 : -1};
}

Reflection::Reflection(const DirectedGeodesic& mirror) : mirror_(mirror) {
    GeodesicShape sh = shape_of(mirror);
    if (sh.vertical) {
        r_ = {-1.0, 2.0 * sh.x0, 0.0, 1.0};
    } else {
        double m = sh.center, r = sh.radius;
        r_ = {m / r, (r * r - m * m) / r, 1.0 / r, -m / r};
    }
}

PointH Reflection::apply(PointH z) const {
    std::complex<double> w = std::conj(z);
    return (r_[0] * w + r_[1]) / (r_[2] * w + r_[3]);
}

BoundaryPoint Reflection::apply(const BoundaryPoint& x) const {
    return BoundaryPoint::projective(r_[0] * x.p + r_[1] * x.q,
                                     r_[2] * x.p + r_[3] * x.q);
}

MobiusMap Reflection::compose(const Reflection& other) const {
    const auto& a = r_;
    const auto& b = other.r_;
    return MobiusMap::from_entries(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                   a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]);
}

GeodesicFrame::GeodesicFrame(const DirectedGeodesic& L) {
    // Rows built from the projective endpoints; sign of the second row
    // chosen to keep the determinant positive.
    double d = boundary_det(L.source, L.target);
    if (d == 0.0) throw domain_error("frame: endpoints coincide");
    double sg = d > 0.0 ? 1.0 : -1.0;
    to_std_ = MobiusMap::from_entries(L.source.q, -L.source.p,
                                      sg * L.target.q, -sg * L.target.p);
    from_std_ = to_std_.inverse();
}

double GeodesicFrame::param(PointH z) const {
    PointH w = to_std_.apply(z);
    return std::log(std::hypot(w.real(), w.imag()));
}

double GeodesicFrame::offset(PointH z) const {
    PointH w = to_std_.apply(z);
    return std::asinh(std::fabs(w.real()) / w.imag());
}

PointH GeodesicFrame::at(double t) const {
    return from_std_.apply(PointH(0.0, std::exp(t)));
}

PointH GeodesicFrame::foot(PointH z) const {
    PointH w = to_std_.apply(z);
    return from_std_.apply(PointH(0.0, std::hypot(w.real(), w.imag())));
}

DirectedGeodesic GeodesicFrame::perpendicular(double t) const {
    double h = std::exp(t);
    return {from_std_.apply(BoundaryPoint::finite(h)),
            from_std_.apply(BoundaryPoint::finite(-h))};
}

PointH perpendicular_foot(const DirectedGeodesic& L, PointH z) {
    return GeodesicFrame(L).foot(z);
}

PointH point_at(const DirectedGeodesic& L, PointH origin, double s) {
    GeodesicFrame f(L);
    return f.at(f.param(origin) + s);
}

DirectedGeodesic perpendicular_at(const DirectedGeodesic& L, PointH origin, double s) {
    GeodesicFrame f(L);
    return f.perpendicular(f.param(origin) + s);
}

PointH hyperbolic_midpoint(PointH p, PointH q) {
    // rescale to O(1) first; z -> sz is an isometry and the circle-center
    // solve below cancels catastrophically at large coordinates
    double s = 1.0 / std::sqrt(std::hypot(p.real(), p.imag()) * std::hypot(q.real(), q.imag()));
    GeodesicFrame f(geodesic_through(s * p, s * q));
    PointH w = f.at(0.5 * (f.param(s * p) + f.param(s * q)));
    return w / s;
}

DirectedGeodesic geodesic_through(PointH p, PointH q) {
    double scale = std::max(std::hypot(p.real(), p.imag()), std::hypot(q.real(), q.imag()));
    double s = scale > 0.0 ? 1.0 / scale : 1.0;
    PointH ps = s * p, qs = s * q;
    double dx = qs.real() - ps.real();
    if (std::fabs(dx) <= kInfEps * (std::fabs(ps.real()) + std::fabs(qs.real()) + 1.0)) {
        BoundaryPoint base = BoundaryPoint::finite(p.real());
        if (p.imag() < q.imag()) return {base, BoundaryPoint::infinity()};
        return {BoundaryPoint::infinity(), base};
    }
    double m = (std::norm(qs) - std::norm(ps)) / (2.0 * dx);
    double r = std::hypot(ps.real() - m, ps.imag());
    if (ps.real() < qs.real())
        return {BoundaryPoint::projective(m - r, s), BoundaryPoint::projective(m + r, s)};
    return {BoundaryPoint::projective(m + r, s), BoundaryPoint::projective(m - r, s)};
}

CoshCheck compose_check_cosh(const MobiusMap& g, const MobiusMap& h, const Tolerances& tol) {
    DirectedGeodesic ag = axis(g, tol);
    DirectedGeodesic ah = axis(h, tol);
    auto crossing = geodesic_meet(ag, ah);
    if (!crossing)
        throw domain_error("compose_check_cosh: axes do not cross transversely");
    CoshCheck out{};
    out.t_g = translation_length(g, tol);
    out.t_h = translation_length(h, tol);
    out.theta = crossing->angle;
    out.t_gh = translation_length(g * h, tol);
    double lhs = std::cosh(0.5 * out.t_gh);
    double rhs = std::cosh(0.5 * out.t_g) * std::cosh(0.5 * out.t_h) +
                 std::sinh(0.5 * out.t_g) * std::sinh(0.5 * out.t_h) * std::cos(out.theta);
    out.residual = std::fabs(lhs - rhs);
    return out;
}

std::pair<DirectedGeodesic, DirectedGeodesic>
two_reflection_decomposition(const MobiusMap& g, const Tolerances& tol) {
    DirectedGeodesic L = axis(g, tol);
    GeodesicFrame f(L);
    double t0 = f.param(PointH(0.0, 1.0));
    double half = 0.5 * translation_length(g, tol);
    return {f.perpendicular(t0), f.perpendicular(t0 + half)};
}

MobiusMap half_turn(PointH v) {
    double x = v.real(), y = v.imag();
    return MobiusMap::from_entries(x, -(x * x + y * y), 1.0, -x);
}

std::pair<PointH, PointH>
two_rotation_decomposition(const MobiusMap& g, PointH basepoint, const Tolerances& tol) {
    DirectedGeodesic L = axis(g, tol);
    GeodesicFrame f(L);
    if (f.offset(basepoint) > tol.coincidence)
        throw domain_error("two_rotation_decomposition: basepoint is not on the axis");
    double half = 0.5 * translation_length(g, tol);
    return {basepoint, f.at(f.param(basepoint) + half)};
}

}  // namespace goldman
