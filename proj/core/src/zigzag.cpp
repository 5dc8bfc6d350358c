#include "goldman/zigzag.hpp"

#include <algorithm>
#include <cmath>

namespace goldman {

namespace {

/// Distance from a chart point to the imaginary axis.
double axis_offset(PointH z) { return std::asinh(std::fabs(z.real()) / z.imag()); }

/// Signed position along the imaginary axis of the projection of z.
double axis_param(PointH z) { return std::log(std::hypot(z.real(), z.imag())); }

/// Signed distance to the imaginary axis (positive on the right).
double axis_offset_signed(PointH z) { return std::asinh(z.real() / z.imag()); }

/// Chart point at along-axis parameter t and signed offset o.
PointH from_fermi(double t, double o) {
    return std::exp(t) * PointH(std::tanh(o), 1.0 / std::cosh(o));
}

/// Reflection across the chart geodesic |z| = r.
PointH reflect_circle(double r, PointH z) {
    double d2 = std::norm(z);
    return PointH(r * r * z.real() / d2, r * r * z.imag() / d2);
}

}  // namespace

DirectedGeodesic ZigzagCurve::axis_chart() const {
    return {BoundaryPoint::finite(0.0), BoundaryPoint::infinity()};
}

double ZigzagCurve::midpoint_residual() const {
    // Measured on the honestly computed central midpoints; the outer ones
    // are isometric recentrings of these (a far vertex cannot carry its
    // transverse offset in double precision, the recentred segment can).
    double worst = 0.0;
    for (const PointH& m : central_mids_) worst = std::max(worst, axis_offset(m));
    return worst;
}

double ZigzagCurve::alpha_segment_residual() const {
    return std::fabs(dist(central_p_[0], central_p_[1]) - len_alpha_);
}

double ZigzagCurve::beta_segment_residual() const {
    return std::fabs(dist(central_p_[1], central_p_[2]) - len_beta_);
}

double ZigzagCurve::even_spacing_residual() const {
    return std::fabs(dist(central_mids_[2], period_image_of_m0_) - len_product_);
}

ZigzagCurve build_zigzag(const SurfaceRep& rep, const CyclicWord& alpha,
                         const CyclicWord& beta, const TransversePoint& P, int window) {
    if (window < 2) throw domain_error("build_zigzag: window must be >= 2");
    if (alpha.empty() || beta.empty()) throw domain_error("build_zigzag: empty class");

    const std::string wa = alpha.letters();
    const std::string wb = beta.letters();
    const std::string g = P.coset_rep.letters();
    const MobiusMap ta = holonomy(rep, wa);
    const MobiusMap hg = holonomy(rep, g);
    const MobiusMap tb_lift = hg * holonomy(rep, wb) * hg.inverse();

    // The base lift is re-derived from the coset word in the frame of the
    // alpha axis, where the crossing height is a plain product of the
    // beta-axis endpoint images. World coordinates are never used: deep
    // crossings sit too close to the boundary circle for them.
    const GeodesicFrame fa(axis(ta));
    const DirectedGeodesic axis_tb = axis(tb_lift);
    const BoundaryPoint e1 = fa.to_standard().apply(axis_tb.source);
    const BoundaryPoint e2 = fa.to_standard().apply(axis_tb.target);
    if (e1.is_infinite() || e2.is_infinite() || !(e1.value() * e2.value() < 0.0))
        throw domain_error("build_zigzag: base point is not a transverse point of this pair");
    const PointH base_fa(0.0, std::sqrt(-e1.value() * e2.value()));

    const MobiusMap phi = ta * tb_lift;
    if (classify(phi) != IsomClass::Hyperbolic)
        throw domain_error("build_zigzag: product holonomy is not hyperbolic");

    ZigzagCurve z;
    z.alpha_ = alpha;
    z.beta_ = beta;
    z.base_ = P;
    z.window_ = window;
    z.len_alpha_ = translation_length(ta);
    z.len_beta_ = translation_length(tb_lift);
    z.len_product_ = translation_length(phi);
    z.axis_world_ = axis(phi);

    // Work in the chart where the product axis is the imaginary axis.
    // The period map acts there as the exact translation t -> t + len in
    // Fermi coordinates (along-axis parameter, signed offset); vertices
    // are stored through that exact action, so the whole window stays
    // well conditioned. The honest numerical content lives in the central
    // vertices and midpoints, everything else is an isometric translate.
    GeodesicFrame frame(z.axis_world_);
    // recentre so the base vertex sits at |z| = 1
    PointH base_phi0 = (frame.to_standard() * fa.from_standard()).apply(base_fa);
    const double t_base = std::log(std::hypot(base_phi0.real(), base_phi0.imag()));
    const double d = std::exp(-0.5 * t_base);
    const MobiusMap recentre = MobiusMap::from_entries(d, 0.0, 0.0, 1.0 / d);
    const MobiusMap to_chart = recentre * frame.to_standard();
    z.from_chart_ = to_chart.inverse();
    const double lp = z.len_product_;

    // Central vertices, each reached by an exact translation along the
    // geodesic segment it lies on, composed directly into the chart. No
    // conjugated period matrix appears: its off-diagonal cancellation
    // noise is exactly what ruins deep instances.
    const GeodesicFrame fb(axis_tb);
    const PointH base_fb = (fb.to_standard() * fa.from_standard()).apply(base_fa);
    const double t_tb = std::log(std::hypot(base_fb.real(), base_fb.imag()));
    const double la = z.len_alpha_;
    const double lb = z.len_beta_;
    const MobiusMap fa_to_chart = to_chart * fa.from_standard();
    const MobiusMap fb_to_chart = to_chart * fb.from_standard();

    PointH p0 = recentre.apply(base_phi0);
    PointH p0d = fa_to_chart.apply(PointH(0.0, base_fa.imag() * std::exp(la)));
    PointH p1 = (to_chart * ta * fb.from_standard()).apply(PointH(0.0, std::exp(t_tb + lb)));
    PointH p1d =
        (to_chart * ta * tb_lift * fa.from_standard()).apply(PointH(0.0, base_fa.imag() * std::exp(la)));
    PointH pm1d = fb_to_chart.apply(PointH(0.0, std::exp(t_tb - lb)));
    PointH pm1 =
        (to_chart * tb_lift.inverse() * fa.from_standard()).apply(PointH(0.0, base_fa.imag() * std::exp(-la)));
    z.central_p_ = {p0, p0d, p1};

    const int n = 2 * window + 1;
    z.p1_.assign(static_cast<std::size_t>(n), PointH{});
    z.p2_.assign(static_cast<std::size_t>(n), PointH{});
    const double t1 = axis_param(p0), o1 = axis_offset_signed(p0);
    const double t2 = axis_param(p0d), o2 = axis_offset_signed(p0d);
    for (int i = -window; i <= window; ++i) {
        z.p1_[static_cast<std::size_t>(i + window)] = from_fermi(t1 + i * lp, o1);
        z.p2_[static_cast<std::size_t>(i + window)] = from_fermi(t2 + i * lp, o2);
    }

    z.central_mids_ = {hyperbolic_midpoint(pm1, pm1d),   // M_-2
                       hyperbolic_midpoint(pm1d, p0),    // M_-1
                       hyperbolic_midpoint(p0, p0d),     // M_0
                       hyperbolic_midpoint(p0d, p1)};    // M_1
    z.period_image_of_m0_ = hyperbolic_midpoint(p1, p1d);  // honest M_2

    z.mid_.assign(static_cast<std::size_t>(4 * window), PointH{});
    const double tm0 = axis_param(z.central_mids_[2]), om0 = axis_offset_signed(z.central_mids_[2]);
    const double tm1 = axis_param(z.central_mids_[3]), om1 = axis_offset_signed(z.central_mids_[3]);
    for (int i = -window; i < window; ++i) {
        z.mid_[static_cast<std::size_t>(2 * i + 2 * window)] = from_fermi(tm0 + i * lp, om0);
        z.mid_[static_cast<std::size_t>(2 * i + 1 + 2 * window)] = from_fermi(tm1 + i * lp, om1);
    }
    return z;
}

ZigzagConfig ZigzagConfig::build(const ZigzagCurve& z, double par, bool mirrored) {
    ZigzagConfig c;
    c.curve_ = z;
    c.mirrored_ = mirrored;
    c.par_ = par;

    const int k = z.window();
    c.feet_.assign(static_cast<std::size_t>(2 * k + 1), PointH{});
    for (int i = -k; i <= k; ++i) {
        double t = axis_param(z.p_prime(i));
        c.feet_[static_cast<std::size_t>(i + k)] = PointH(0.0, std::exp(t));
    }

    // theta0: forward angle of L (vertical, upward) and the alpha segment
    // P_0'P_0'' at M_0
    DirectedGeodesic seg = geodesic_through(z.p_prime(0), z.p_dprime(0));
    auto crossing = geodesic_meet(z.axis_chart(), seg);
    if (!crossing) throw degenerate_error("zigzag config: alpha segment parallel to L");
    c.theta0_ = crossing->angle;
    c.a_ = std::fabs(axis_param(z.midpoint(0)) - axis_param(c.feet_[static_cast<std::size_t>(k)]));

    const std::size_t n1 = static_cast<std::size_t>(2 * k + 1);
    const std::size_t nm = static_cast<std::size_t>(4 * k);
    c.q1_.assign(n1, PointH{});
    c.q2_.assign(n1, PointH{});
    c.n_.assign(nm, PointH{});

    if (mirrored) {
        double t_h0 = axis_param(c.feet_[static_cast<std::size_t>(k)]);
        double r_u = std::exp(t_h0 + par);
        double r_v = std::exp(t_h0 + par + 0.5 * z.len_product());
        c.mirror_u_ = DirectedGeodesic{BoundaryPoint::finite(r_u), BoundaryPoint::finite(-r_u)};
        c.mirror_v_ = DirectedGeodesic{BoundaryPoint::finite(r_v), BoundaryPoint::finite(-r_v)};
        // Q_i' = rho_U(P_{-i}''), Q_i'' = rho_U(P_{-i}'), N_j = rho_U(M_{-j})
        for (int i = -k; i <= k; ++i) {
            c.q1_[static_cast<std::size_t>(i + k)] = reflect_circle(r_u, z.p_dprime(-i));
            c.q2_[static_cast<std::size_t>(i + k)] = reflect_circle(r_u, z.p_prime(-i));
        }
        for (int j = -2 * k; j < 2 * k; ++j) {
            int mj = -j;
            if (mj < -2 * k || mj >= 2 * k) {
                c.n_[static_cast<std::size_t>(j + 2 * k)] = PointH(0.0, 1.0);  // outside window
                continue;
            }
            c.n_[static_cast<std::size_t>(j + 2 * k)] = reflect_circle(r_u, z.midpoint(mj));
        }
    } else {
        double scale = std::exp(par);
        for (int i = -k; i <= k; ++i) {
            c.q1_[static_cast<std::size_t>(i + k)] = scale * z.p_prime(i);
            c.q2_[static_cast<std::size_t>(i + k)] = scale * z.p_dprime(i);
        }
        for (int j = -2 * k; j < 2 * k; ++j)
            c.n_[static_cast<std::size_t>(j + 2 * k)] = scale * z.midpoint(j);
    }
    return c;
}

ZigzagConfig make_config(const ZigzagCurve& z, double u) {
    if (!(u > 0.0) || u > 0.5 * z.len_product() + 1e-12)
        throw domain_error("make_config: need 0 < u <= len_product / 2");
    return ZigzagConfig::build(z, u, true);
}

ZigzagConfig make_translated_config(const ZigzagCurve& z, double d) {
    if (d < 0.0 || d >= z.len_product())
        throw domain_error("make_translated_config: need 0 <= d < len_product");
    return ZigzagConfig::build(z, d, false);
}

const char* to_string(ConfigCase c) {
    switch (c) {
        case ConfigCase::I: return "I";
        case ConfigCase::II: return "II";
        case ConfigCase::III: return "III";
        case ConfigCase::IV: return "IV";
        case ConfigCase::V: return "V";
        case ConfigCase::VI: return "VI";
        case ConfigCase::VII: return "VII";
        case ConfigCase::VIII: return "VIII";
        case ConfigCase::IX: return "IX";
        case ConfigCase::X: return "X";
        case ConfigCase::XI: return "XI";
        case ConfigCase::Iprime: return "I'";
        case ConfigCase::IIprime: return "II'";
        case ConfigCase::IIIprime: return "III'";
        case ConfigCase::IVprime: return "IV'";
        case ConfigCase::Vprime: return "V'";
        case ConfigCase::VIprime: return "VI'";
        case ConfigCase::VIIprime: return "VII'";
    }
    return "?";
}

ConfigCase classify_config(const ZigzagConfig& c, const Tolerances& tol) {
    const double l = c.curve().len_product();
    if (!c.mirrored()) {
        double d = std::fmod(c.parameter(), l);
        if (d < 0) d += l;
        bool aligned = d <= tol.case_boundary || l - d <= tol.case_boundary;
        return aligned ? ConfigCase::X : ConfigCase::XI;
    }
    const double la = c.curve().len_alpha();
    const double lb = c.curve().len_beta();
    const double u = c.parameter();
    if (std::fabs(la - lb) <= tol.case_boundary)
        return std::fabs(u - 0.5 * l) <= tol.case_boundary ? ConfigCase::IX : ConfigCase::VIII;

    const bool primed = la > lb;
    const double half_pi = 0.5 * M_PI;
    ConfigCase base;
    if (std::fabs(c.theta0() - half_pi) <= tol.case_boundary) {
        base = std::fabs(u - 0.5 * l) <= tol.case_boundary ? ConfigCase::VI : ConfigCase::V;
    } else if (c.theta0() < half_pi) {
        if (std::fabs(u - 2.0 * c.a_dist()) <= tol.case_boundary)
            base = ConfigCase::II;
        else if (std::fabs(u - 0.5 * l) <= tol.case_boundary)
            base = ConfigCase::IV;
        else if (u < 2.0 * c.a_dist())
            base = ConfigCase::I;
        else
            base = ConfigCase::III;
    } else {
        base = ConfigCase::VII;
    }
    if (!primed) return base;
    switch (base) {
        case ConfigCase::I: return ConfigCase::Iprime;
        case ConfigCase::II: return ConfigCase::IIprime;
        case ConfigCase::III: return ConfigCase::IIIprime;
        case ConfigCase::IV: return ConfigCase::IVprime;
        case ConfigCase::V: return ConfigCase::Vprime;
        case ConfigCase::VI: return ConfigCase::VIprime;
        default: return ConfigCase::VIIprime;
    }
}

namespace {

/// Segment between two chart points, as its full directed geodesic plus
/// the parameter range of the endpoints.
struct Segment {
    PointH a, b;
    DirectedGeodesic geod;
};

Segment make_segment(PointH a, PointH b) { return {a, b, geodesic_through(a, b)}; }

bool crossing_within(const Segment& s, PointH z, double slack = 1e-6) {
    // slack covers the boundary configurations where the crossing sits
    // exactly on a shared vertex (u = len_product/2)
    GeodesicFrame f(s.geod);
    double t = f.param(z);
    double ta = f.param(s.a);
    double tb = f.param(s.b);
    return std::min(ta, tb) - slack <= t && t <= std::max(ta, tb) + slack;
}

}  // namespace

bool verify_segment_crossing(const ZigzagConfig& c) {
    if (!c.mirrored()) throw domain_error("verify_segment_crossing: mirrored configs only");
    const ZigzagCurve& z = c.curve();
    if (z.len_alpha() > z.len_beta() + 1e-12)
        throw domain_error("verify_segment_crossing: requires len_alpha <= len_beta");
    const double u = c.parameter();
    if (!(u > 0.0) || u > 0.5 * z.len_product() + 1e-12)
        throw domain_error("verify_segment_crossing: u out of range");

    Segment qs = make_segment(c.q_dprime(0), c.q_prime(1));  // Q_0'' -> Q_1'
    Segment ps = make_segment(z.p_dprime(0), z.p_prime(1));  // P_0'' -> P_1'
    auto crossing = geodesic_meet(qs.geod, ps.geod);
    if (!crossing) return false;
    return crossing_within(qs, crossing->point) && crossing_within(ps, crossing->point);
}

namespace {

struct FamilyCrossing {
    PointH point;
    double angle;
    double dist_to_ref;
};

/// Nearest transverse crossing (to the reference geodesic) between one
/// family of C-segments and one family of D-segments. The crossings are
/// taken between the full geodesics carrying the segments, so shared
/// vertices in the boundary configurations still count. c_alpha selects
/// C's alpha family, d_alpha D's alpha family.
std::optional<FamilyCrossing> nearest_family_crossing(const ZigzagConfig& c, bool c_alpha,
                                                      bool d_alpha,
                                                      const DirectedGeodesic& ref) {
    const ZigzagCurve& z = c.curve();
    GeodesicFrame fref(ref);
    std::optional<FamilyCrossing> best;
    for (int i = -1; i <= 1; ++i) {
        DirectedGeodesic gc = c_alpha
            ? geodesic_through(z.p_prime(i), z.p_dprime(i))
            : geodesic_through(z.p_dprime(i), z.p_prime(i + 1));
        for (int j = -1; j <= 1; ++j) {
            DirectedGeodesic gd = d_alpha
                ? geodesic_through(c.q_prime(j), c.q_dprime(j))
                : geodesic_through(c.q_dprime(j - 1), c.q_prime(j));
            auto crossing = geodesic_meet(gc, gd);
            if (!crossing) continue;
            double d = fref.offset(crossing->point);
            if (!best || d < best->dist_to_ref)
                best = FamilyCrossing{crossing->point, crossing->angle, d};
        }
    }
    return best;
}

}  // namespace

std::optional<SmallerAngle> find_smaller_angle(const ZigzagConfig& c) {
    ConfigCase cc = classify_config(c);
    if (cc == ConfigCase::IX || cc == ConfigCase::X) return std::nullopt;
    if (cc == ConfigCase::I || cc == ConfigCase::Iprime || cc == ConfigCase::VIII)
        throw domain_error(std::string("find_smaller_angle: case ") + to_string(cc) +
                           " needs the self-intersection analysis; "
                           "check its conclusion through the intersection search");

    // reference: the mirror U_u, or its translated analogue halfway
    // between the curves
    DirectedGeodesic ref = c.mirrored()
        ? *c.mirror_u()
        : DirectedGeodesic{BoundaryPoint::finite(
              std::exp(axis_param(c.curve().midpoint(0)) + 0.5 * c.parameter())),
              BoundaryPoint::finite(-std::exp(
                  axis_param(c.curve().midpoint(0)) + 0.5 * c.parameter()))};

    const bool primed = c.curve().len_alpha() > c.curve().len_beta();
    // R': crossing of a C beta-segment with a D alpha-segment (roles
    // exchanged in the primed cases). Rbar': the opposite pairing.
    auto r = nearest_family_crossing(c, primed, !primed, ref);
    auto rbar = nearest_family_crossing(c, !primed, primed, ref);
    if (!r || !rbar)
        throw degenerate_error("find_smaller_angle: expected crossing not found near the mirror");
    return SmallerAngle{r->point, rbar->point, r->angle, rbar->angle};
}

}  // namespace goldman
