#include "goldman/fuchsian.hpp"

#include "goldman/ball.hpp"

#include <cmath>

namespace goldman {

SurfaceRep SurfaceRep::conjugated(const MobiusMap& k) const {
    SurfaceRep out = *this;
    MobiusMap ki = k.inverse();
    out.gen_a_ = k * gen_a_ * ki;
    out.gen_b_ = k * gen_b_ * ki;
    out.ball_ = std::make_shared<detail::BallCache>();
    return out;
}

SurfaceRep pants_rep(double l1, double l2, double l3, double tol) {
    if (!(l1 > 0.0) || !(l2 > 0.0) || !(l3 > 0.0))
        throw domain_error("pants_rep: boundary lengths must be positive");

    const double lam = std::exp(0.5 * l1);  // e^{l1/2}
    const double t2 = -2.0 * std::cosh(0.5 * l2);
    const double t3 = -2.0 * std::cosh(0.5 * l3);

    // A = diag(-lam, -1/lam), so tr A = -2 cosh(l1/2).
    // B = [[p, q], [r, s]] with p + s = t2; tr(AB) = -lam p - s/lam is
    // linear in p, so the conjugation parameter solves in closed form.
    const double p = -(t3 + t2 / lam) / (lam - 1.0 / lam);
    const double s = t2 - p;
    const double qr = p * s - 1.0;
    if (std::fabs(qr) < 1e-12)
        throw construction_error("pants_rep: degenerate off-diagonal product");
    const double rho = std::sqrt(std::fabs(qr));

    SurfaceRep rep;
    rep.gen_a_ = MobiusMap::from_entries(-lam, 0.0, 0.0, -1.0 / lam);
    rep.gen_b_ = MobiusMap::from_entries(p, qr / rho, rho, s);
    rep.lengths_ = {l1, l2, l3};
    rep.tol_ = tol;
    rep.ball_ = std::make_shared<detail::BallCache>();

    const MobiusMap ab = rep.gen_a_ * rep.gen_b_;
    const double ta = rep.gen_a_.trace();
    const double tb = rep.gen_b_.trace();
    const double tab = ab.trace();
    if (!(ta <= -2.0 - tol) || !(tb <= -2.0 - tol) || !(tab <= -2.0 - tol))
        throw construction_error("pants_rep: boundary traces not all <= -2 (traces " +
                                 std::to_string(ta) + ", " + std::to_string(tb) + ", " +
                                 std::to_string(tab) + ")");
    auto check_len = [&](const MobiusMap& m, double l, const char* who) {
        double got = 2.0 * std::acosh(0.5 * std::fabs(m.trace()));
        if (std::fabs(got - l) > 1e-9 * (1.0 + l))
            throw construction_error(std::string("pants_rep: boundary length for ") + who +
                                     " not realized");
    };
    check_len(rep.gen_a_, l1, "a");
    check_len(rep.gen_b_, l2, "b");
    check_len(ab, l3, "ab");
    return rep;
}

SurfaceRep pants_rep_from_traces(double t1, double t2, double t3, double tol) {
    if (!(t1 <= -2.0 - tol) || !(t2 <= -2.0 - tol) || !(t3 <= -2.0 - tol))
        throw domain_error("pants_rep_from_traces: traces must be <= -2");
    auto len = [](double t) { return 2.0 * std::acosh(-0.5 * t); };
    return pants_rep(len(t1), len(t2), len(t3), tol);
}

SurfaceRep default_pants() { return pants_rep_from_traces(-3.0, -3.0, -3.0); }

MobiusMap holonomy(const SurfaceRep& rep, std::string_view letters) {
    MobiusMap m;
    const MobiusMap ia = rep.gen_a().inverse();
    const MobiusMap ib = rep.gen_b().inverse();
    for (char c : letters) {
        switch (c) {
            case 'a': m = m * rep.gen_a(); break;
            case 'A': m = m * ia; break;
            case 'b': m = m * rep.gen_b(); break;
            case 'B': m = m * ib; break;
            default: throw domain_error("holonomy: bad letter");
        }
    }
    return m;
}

MobiusMap holonomy(const SurfaceRep& rep, const Word& w) {
    return holonomy(rep, w.letters());
}

double geodesic_length(const SurfaceRep& rep, const CyclicWord& x) {
    if (x.empty()) throw domain_error("geodesic_length: empty class");
    return translation_length(holonomy(rep, x.letters()));
}

bool is_nonessential(const SurfaceRep& rep, const CyclicWord& x) {
    (void)rep;  // pants only; the boundary set is fixed by the marking
    if (x.empty()) return true;
    const CyclicWord root = primitive_root(x).root;
    static const std::array<const char*, 6> boundary = {"a", "A", "b", "B", "ab", "AB"};
    for (const char* b : boundary)
        if (root.letters() == b) return true;
    return false;
}

}  // namespace goldman
