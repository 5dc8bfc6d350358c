#include "goldman/intersect.hpp"

#include "goldman/ball.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace goldman {

namespace {

// ---- word helpers on raw strings ----

std::string repeat_word(const std::string& w, int k) {
    std::string out;
    if (k == 0) return out;
    const std::string base = k > 0 ? w : invert_letters(w);
    const int n = k > 0 ? k : -k;
    out.reserve(base.size() * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out += base;
    return out;
}

/// h == w^j for some integer j (j = 0 gives the empty word)?
bool is_power_of(const std::string& h, const std::string& w) {
    if (h.empty()) return true;
    if (w.empty()) return false;
    if (h.size() % w.size() != 0) return false;
    const std::size_t reps = h.size() / w.size();
    const std::string wi = invert_letters(w);
    for (const std::string& base : {w, wi}) {
        bool ok = true;
        for (std::size_t i = 0; i < reps && ok; ++i)
            ok = h.compare(i * w.size(), w.size(), base) == 0;
        if (ok) return true;
    }
    return false;
}

int shortlex_cmp(const std::string& u, const std::string& v) {
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    return compare_letters(u, v);
}

// ---- compensated (double-double) products for the endpoint determinants.
// A lift can cross the axis deep in the fundamental window, where the
// endpoint separations need more than double precision relative to the
// matrix entries; plain doubles lose the crossing angle there.

struct DD {
    double hi = 0.0, lo = 0.0;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    DD r = two_sum(s.hi, lo);
    return r;
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return two_sum(p.hi, p.lo);
}

inline DD dd_neg(DD a) { return {-a.hi, -a.lo}; }

inline DD dd_div(DD a, DD b) {
    double q0 = a.hi / b.hi;
    DD r = dd_add(a, dd_neg(dd_mul({q0, 0.0}, b)));
    double q1 = r.hi / b.hi;
    return two_sum(q0, q1);
}

inline DD dd_sqrt(DD a) {
    double s0 = std::sqrt(a.hi);
    if (s0 == 0.0) return {0.0, 0.0};
    DD e = dd_add(a, dd_neg(dd_mul({s0, 0.0}, {s0, 0.0})));
    return two_sum(s0, e.hi / (2.0 * s0));
}

// The per-coset geometry runs start to finish in double-double: the
// double matrices of the representation are taken as the exact group,
// and the endpoint determinants of deep-window crossings genuinely need
// more than double precision relative to the matrix products.

struct DDMat {
    DD a, b, c, d;
};

inline DDMat dd_mat(const MobiusMap& m) {
    return {{m.m11(), 0.0}, {m.m12(), 0.0}, {m.m21(), 0.0}, {m.m22(), 0.0}};
}

inline DDMat dd_mul(const DDMat& x, const DDMat& y) {
    return {dd_add(dd_mul(x.a, y.a), dd_mul(x.b, y.c)),
            dd_add(dd_mul(x.a, y.b), dd_mul(x.b, y.d)),
            dd_add(dd_mul(x.c, y.a), dd_mul(x.d, y.c)),
            dd_add(dd_mul(x.c, y.b), dd_mul(x.d, y.d))};
}

inline DDMat dd_adjugate(const DDMat& m) {
    return {m.d, dd_neg(m.b), dd_neg(m.c), m.a};
}

struct DDPt {
    DD p, q;
};

inline DDPt dd_apply(const DDMat& m, const DDPt& x) {
    return {dd_add(dd_mul(m.a, x.p), dd_mul(m.b, x.q)),
            dd_add(dd_mul(m.c, x.p), dd_mul(m.d, x.q))};
}

inline DD dd_det(const DDPt& u, const DDPt& v) {
    return dd_add(dd_mul(u.p, v.q), dd_neg(dd_mul(v.p, u.q)));
}

/// axis endpoints (source, target) of a hyperbolic dd matrix, projective
inline std::pair<DDPt, DDPt> dd_axis(const DDMat& m) {
    DD tr = dd_add(m.a, m.d);
    DD s = dd_sqrt(dd_add(dd_mul(tr, tr), {-4.0, 0.0}));
    DD amd = dd_add(m.a, dd_neg(m.d));
    DD u1 = dd_add(amd, s);
    DD u2 = dd_add(amd, dd_neg(s));
    DD u = std::fabs(u1.hi) >= std::fabs(u2.hi) ? u1 : u2;
    DDPt f1{u, dd_mul({2.0, 0.0}, m.c)};
    DDPt f2{dd_mul({-2.0, 0.0}, m.b), u};
    auto eig_mag = [&](const DDPt& f) {
        DD n1 = dd_add(dd_mul(m.a, f.p), dd_mul(m.b, f.q));
        DD n2 = dd_add(dd_mul(m.c, f.p), dd_mul(m.d, f.q));
        if (std::fabs(f.p.hi) >= std::fabs(f.q.hi))
            return std::fabs(dd_div(n1, f.p).hi);
        return std::fabs(dd_div(n2, f.q).hi);
    };
    if (eig_mag(f1) > 1.0) return {f2, f1};
    return {f1, f2};
}

// ---- group ball ----

std::shared_ptr<const detail::Ball> get_ball(const SurfaceRep& rep, int radius) {
    auto cache = rep.ball_cache();
    {
        std::lock_guard lock(cache->mu);
        auto it = cache->by_radius.find(radius);
        if (it != cache->by_radius.end()) return it->second;
    }

    auto ball = std::make_shared<detail::Ball>();
    ball->radius = radius;
    const MobiusMap gens[4] = {rep.gen_a(), rep.gen_a().inverse(), rep.gen_b(),
                               rep.gen_b().inverse()};
    const char letters[4] = {'a', 'A', 'b', 'B'};

    // breadth-first in shortlex order; matrices extend incrementally
    struct Node {
        std::string word;
        MobiusMap m;
    };
    std::vector<Node> frontier{{std::string{}, MobiusMap{}}};
    auto push_entry = [&](const Node& n) {
        detail::BallEntry e;
        e.m[0] = n.m.m11();
        e.m[1] = n.m.m12();
        e.m[2] = n.m.m21();
        e.m[3] = n.m.m22();
        e.begin = static_cast<std::uint32_t>(ball->arena.size());
        e.len = static_cast<std::uint32_t>(n.word.size());
        ball->arena += n.word;
        ball->entries.push_back(e);
    };
    push_entry(frontier.front());
    for (int depth = 0; depth < radius; ++depth) {
        std::vector<Node> next;
        next.reserve(frontier.size() * 3 + 1);
        for (const Node& n : frontier) {
            for (int i = 0; i < 4; ++i) {
                if (!n.word.empty() && inverse_letter(n.word.back()) == letters[i]) continue;
                Node child{n.word + letters[i], n.m * gens[i]};
                push_entry(child);
                next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    std::lock_guard lock(cache->mu);
    auto [it, inserted] = cache->by_radius.emplace(radius, ball);
    return it->second;
}

// ---- candidate scan and double-coset grouping ----

struct Candidate {
    std::string gnorm;  // g reduced to crossing parameters in [0, l) on both sides
    int orig_len;       // length of the ball word that produced it
    std::string g_orig;
    double angle;
    int orient;
    PointH lift;
};

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    }
    void unite(int i, int j) { parent[find(i)] = find(j); }
};

/// <wx> g1 <wy> == <wx> g2 <wy> for parameter-normalized representatives.
/// The normalization pins the wx-power up to +-2 (floor rounding on both
/// candidates), so a small exact window decides membership.
bool same_coset_normed(const std::string& g1, const std::string& g2, const std::string& wx,
                       const std::string& wy) {
    const std::string g2i = invert_letters(g2);
    for (int k = -2; k <= 2; ++k) {
        std::string h = free_reduce(g2i + repeat_word(wx, k) + g1);
        if (is_power_of(h, wy)) return true;
    }
    return false;
}

/// <wx> g1 <wx> == <wx> g2^-1 <wx> (unordered self-crossing merge).
bool mirror_coset(const std::string& g1, const std::string& g2, const std::string& wx) {
    const int kmax = static_cast<int>((g1.size() + g2.size()) / wx.size()) + 2;
    for (int k = -kmax; k <= kmax; ++k) {
        std::string h = free_reduce(g2 + repeat_word(wx, k) + g1);
        if (is_power_of(h, wx)) return true;
    }
    return false;
}

std::vector<TransversePoint> enumerate_points(const SurfaceRep& rep, const CyclicWord& x,
                                              const CyclicWord& y, int radius,
                                              bool self_mode) {
    if (radius < kMinRadius || radius > kMaxRadius)
        throw domain_error("radius must be in [" + std::to_string(kMinRadius) + ", " +
                           std::to_string(kMaxRadius) + "]");
    if (x.empty() || y.empty())
        throw domain_error("transverse enumeration needs nonempty classes");

    const std::string wx = x.letters();
    const std::string wy = y.letters();
    const MobiusMap hx = holonomy(rep, wx);
    const MobiusMap hy = holonomy(rep, wy);
    const DirectedGeodesic ax = axis(hx);
    const DirectedGeodesic ay = axis(hy);
    const double lx = translation_length(hx);
    const double ly = translation_length(hy);
    const GeodesicFrame fx(ax);

    const double xs_p = ax.source.p, xs_q = ax.source.q;
    const double xt_p = ax.target.p, xt_q = ax.target.q;
    const double ys_p = ay.source.p, ys_q = ay.source.q;
    const double yt_p = ay.target.p, yt_q = ay.target.q;
    const GeodesicFrame fy(ay);

    // frame matrices as raw entries for the hot loop
    const MobiusMap& fxm = fx.to_standard();
    const MobiusMap& fym = fy.to_standard();
    const double FX[4] = {fxm.m11(), fxm.m12(), fxm.m21(), fxm.m22()};
    const double FY[4] = {fym.m11(), fym.m12(), fym.m21(), fym.m22()};

    // All crossing data comes from ratios of boundary-endpoint images in
    // the frames of the two axes: uniformly well conditioned no matter
    // how far along the axis a lift crosses.
    struct CrossData {
        bool found = false;
        double s = 0, t = 0, angle = 0, h = 0;
        int orient = 0;
    };
    // scan pass: fast doubles, only needs the parameters for the floor
    // normalization (the geometry is rederived per coset below)
    auto frame_crossing = [&](const double M[4]) {
        CrossData out;
        const double sp = M[0] * ys_p + M[1] * ys_q;
        const double sq = M[2] * ys_p + M[3] * ys_q;
        const double tp = M[0] * yt_p + M[1] * yt_q;
        const double tq = M[2] * yt_p + M[3] * yt_q;
        const double e1p = FX[0] * sp + FX[1] * sq, e1q = FX[2] * sp + FX[3] * sq;
        const double e2p = FX[0] * tp + FX[1] * tq, e2q = FX[2] * tp + FX[3] * tq;
        if (e1q == 0.0 || e2q == 0.0) return out;  // grazes an endpoint of axis(x)
        const double v1 = e1p / e1q, v2 = e2p / e2q;
        if (!(v1 * v2 < 0.0)) return out;
        out.h = std::sqrt(-v1 * v2);
        out.s = std::log(out.h);
        const double AD[4] = {M[3], -M[1], -M[2], M[0]};
        const double u1p = AD[0] * xs_p + AD[1] * xs_q, u1q = AD[2] * xs_p + AD[3] * xs_q;
        const double u2p = AD[0] * xt_p + AD[1] * xt_q, u2q = AD[2] * xt_p + AD[3] * xt_q;
        const double f1p = FY[0] * u1p + FY[1] * u1q, f1q = FY[2] * u1p + FY[3] * u1q;
        const double f2p = FY[0] * u2p + FY[1] * u2q, f2q = FY[2] * u2p + FY[3] * u2q;
        if (f1q == 0.0 || f2q == 0.0) return out;
        const double w1 = f1p / f1q, w2 = f2p / f2q;
        if (!(w1 * w2 < 0.0)) return out;
        out.t = 0.5 * std::log(-w1 * w2);
        out.found = true;
        return out;
    };

    // per-coset pass: double-double throughout, taking the rep's double
    // matrices as the exact group
    const DDMat gen_dd[4] = {dd_mat(rep.gen_a()), dd_mat(rep.gen_a().inverse()),
                             dd_mat(rep.gen_b()), dd_mat(rep.gen_b().inverse())};
    auto dd_hol = [&](const std::string& word) {
        DDMat m{{1, 0}, {0, 0}, {0, 0}, {1, 0}};
        for (char ch : word) {
            int idx = ch == 'a' ? 0 : ch == 'A' ? 1 : ch == 'b' ? 2 : 3;
            m = dd_mul(m, gen_dd[idx]);
        }
        return m;
    };
    const auto [xs_dd, xt_dd] = dd_axis(dd_hol(wx));
    const auto [ys_dd, yt_dd] = dd_axis(dd_hol(wy));
    const double sigma_x = dd_det(xs_dd, xt_dd).hi > 0.0 ? 1.0 : -1.0;

    // dij = det(axis(x) endpoint i, M . axis(y) endpoint j); then
    //   v1 = d13 / (sigma d23),  v2 = d14 / (sigma d24),
    //   cos(angle) = (v1+v2)/(v2-v1) = (d13 d24 + d14 d23)/(d14 d23 - d13 d24),
    //   orient = +1 iff v1 > v2, h^2 = -v1 v2.
    auto precise_crossing = [&](const std::string& word) {
        CrossData out;
        const DDMat m = dd_hol(word);
        const DDPt gys = dd_apply(m, ys_dd), gyt = dd_apply(m, yt_dd);
        const DD d13 = dd_det(xs_dd, gys);
        const DD d14 = dd_det(xs_dd, gyt);
        const DD d23 = dd_det(xt_dd, gys);
        const DD d24 = dd_det(xt_dd, gyt);
        if (d23.hi == 0.0 || d24.hi == 0.0) return out;
        const DD v1 = dd_div(d13, d23);  // up to the common sigma factor
        const DD v2 = dd_div(d14, d24);
        const double vv = dd_mul(v1, v2).hi;
        if (!(vv < 0.0)) return out;
        out.h = std::sqrt(-vv);
        out.s = std::log(out.h);
        const DD a = dd_mul(d13, d24);
        const DD b = dd_mul(d14, d23);
        const DD den = dd_add(b, dd_neg(a));
        if (den.hi == 0.0) return out;
        out.angle = std::acos(std::clamp(dd_div(dd_add(a, b), den).hi, -1.0, 1.0));
        const double diff = dd_add(v1, dd_neg(v2)).hi;  // (v1 - v2) / sigma
        out.orient = diff * sigma_x > 0.0 ? 1 : -1;

        const DDMat adj = dd_adjugate(m);
        const DDPt gxs = dd_apply(adj, xs_dd), gxt = dd_apply(adj, xt_dd);
        const DD e13 = dd_det(ys_dd, gxs);
        const DD e14 = dd_det(ys_dd, gxt);
        const DD e23 = dd_det(yt_dd, gxs);
        const DD e24 = dd_det(yt_dd, gxt);
        if (e23.hi == 0.0 || e24.hi == 0.0) return out;
        const double ww = dd_mul(dd_div(e13, e23), dd_div(e14, e24)).hi;
        if (!(ww < 0.0)) return out;
        out.t = 0.5 * std::log(-ww);
        out.found = true;
        return out;
    };

    // scan: ball words only propose double cosets here
    auto ball = get_ball(rep, radius);
    std::vector<Candidate> cands;
    for (const detail::BallEntry& e : ball->entries) {
        const double sp = e.m[0] * ys_p + e.m[1] * ys_q;
        const double sq = e.m[2] * ys_p + e.m[3] * ys_q;
        const double tp = e.m[0] * yt_p + e.m[1] * yt_q;
        const double tq = e.m[2] * yt_p + e.m[3] * yt_q;
        // separation test: endpoints interleave on the boundary circle
        const double d13 = xs_p * sq - sp * xs_q;
        const double d24 = xt_p * tq - tp * xt_q;
        const double d14 = xs_p * tq - tp * xs_q;
        const double d23 = xt_p * sq - sp * xt_q;
        if (!((d13 * d24) * (d14 * d23) < 0.0)) continue;

        std::string g(ball->word(e));
        if (self_mode && is_power_of(g, wx)) continue;
        CrossData cd = frame_crossing(e.m);
        if (!cd.found) continue;
        const int k0 = static_cast<int>(std::floor(cd.s / lx));
        const int j0 = static_cast<int>(std::floor(cd.t / ly));
        Candidate c;
        c.gnorm = free_reduce(repeat_word(wx, -k0) + g + repeat_word(wy, j0));
        c.orig_len = static_cast<int>(g.size());
        c.g_orig = std::move(g);
        cands.push_back(std::move(c));
    }

    // bucket by the normalized word (exact); recompute the geometry once
    // per bucket from the normalized word itself, whose crossing sits in
    // the fundamental window. A deep candidate whose ill-conditioned scan
    // data proposed a coset that does not actually cross is dropped here.
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.gnorm != b.gnorm) return a.gnorm < b.gnorm;
        return a.orig_len < b.orig_len;
    });
    struct Bucket {
        std::string gnorm;
        int min_len;
        CrossData geo;
    };
    std::vector<Bucket> buckets;
    bool run_kept = false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i > 0 && cands[i].gnorm == cands[i - 1].gnorm) {
            if (run_kept)
                buckets.back().min_len = std::min(buckets.back().min_len, cands[i].orig_len);
            continue;
        }
        CrossData geo = precise_crossing(cands[i].gnorm);
        run_kept = geo.found;
        if (!geo.found) continue;  // spurious proposal from a deep candidate
        buckets.push_back({cands[i].gnorm, cands[i].orig_len, geo});
    }

    const int nb = static_cast<int>(buckets.size());
    Dsu dsu(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i)
        for (int j = i + 1; j < nb; ++j) {
            if (dsu.find(i) == dsu.find(j)) continue;
            const std::string& g1 = buckets[static_cast<std::size_t>(i)].gnorm;
            const std::string& g2 = buckets[static_cast<std::size_t>(j)].gnorm;
            if (same_coset_normed(g1, g2, wx, wy)) dsu.unite(i, j);
            else if (self_mode && mirror_coset(g1, g2, wx)) dsu.unite(i, j);
        }

    std::vector<std::vector<int>> groups(static_cast<std::size_t>(nb));
    for (int i = 0; i < nb; ++i) groups[static_cast<std::size_t>(dsu.find(i))].push_back(i);

    std::vector<TransversePoint> points;
    for (const auto& grp : groups) {
        if (grp.empty()) continue;
        // word, sign and geometry all come from one representative bucket
        // so that branch order stays coherent
        int best = grp.front();
        int min_len = buckets[static_cast<std::size_t>(grp.front())].min_len;
        for (int b : grp) {
            min_len = std::min(min_len, buckets[static_cast<std::size_t>(b)].min_len);
            if (shortlex_cmp(buckets[static_cast<std::size_t>(b)].gnorm,
                             buckets[static_cast<std::size_t>(best)].gnorm) < 0)
                best = b;
        }
        const Bucket& c = buckets[static_cast<std::size_t>(best)];
        if (c.geo.angle < default_tol.tangency || c.geo.angle > M_PI - default_tol.tangency)
            throw degenerate_error("near-tangent crossing for coset '" + c.gnorm +
                                   "'; configuration too degenerate to count");
        TransversePoint p;
        p.lift = fx.from_standard().apply(PointH(0.0, c.geo.h));
        p.coset_rep = Word::from_reduced(c.gnorm);
        p.sign = c.geo.orient;
        p.angle = c.geo.angle;
        p.product = cyclic_canonical_str(wx + c.gnorm + wy + invert_letters(c.gnorm));
        p.len_x = lx;
        p.len_y = ly;
        p.min_rep_len = min_len;
        points.push_back(std::move(p));
    }
    std::sort(points.begin(), points.end(), [](const TransversePoint& a, const TransversePoint& b) {
        return shortlex_cmp(a.coset_rep.letters(), b.coset_rep.letters()) < 0;
    });
    return points;
}

bool shared_root(const CyclicWord& x, const CyclicWord& y) {
    const CyclicWord rx = primitive_root(x).root;
    const CyclicWord ry = primitive_root(y).root;
    return rx == ry || rx == inverse(ry);
}

BracketResult assemble(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                       int m, int n, int radius) {
    BracketResult out;
    out.points = transverse_points(rep, x, y, radius);
    out.radius_used = radius;
    int visible_earlier = 0;
    for (const TransversePoint& p : out.points)
        if (p.min_rep_len <= radius - 2) ++visible_earlier;
    out.converged = visible_earlier == static_cast<int>(out.points.size());
    out.sum = bracket_terms_from_points(x, y, out.points, m, n);
    return out;
}

}  // namespace

std::vector<TransversePoint> transverse_points(const SurfaceRep& rep, const CyclicWord& x,
                                               const CyclicWord& y, int radius) {
    if (x.empty() || y.empty())
        throw domain_error("transverse_points: classes must be nonempty");
    if (shared_root(x, y))
        throw domain_error("transverse_points: shared primitive root; "
                           "use intersection_number for this pair");
    return enumerate_points(rep, x, y, radius, false);
}

std::vector<TransversePoint> self_intersection_points(const SurfaceRep& rep,
                                                      const CyclicWord& x, int radius) {
    if (x.empty()) throw domain_error("self_intersection_points: empty class");
    if (primitive_root(x).exponent != 1)
        throw domain_error("self_intersection_points: pass the primitive root");
    return enumerate_points(rep, x, x, radius, true);
}

int intersection_number(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                        int radius) {
    if (x.empty() || y.empty()) return 0;
    if (is_nonessential(rep, x) || is_nonessential(rep, y)) return 0;
    if (shared_root(x, y)) return 0;
    return static_cast<int>(transverse_points(rep, x, y, radius).size());
}

BracketResult goldman_bracket(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                              int radius) {
    return bracket_power(rep, x, y, 1, radius);
}

BracketResult bracket_power(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                            int m, int radius) {
    return bracket_power_pair(rep, x, y, m, 1, radius);
}

BracketResult bracket_power_pair(const SurfaceRep& rep, const CyclicWord& x, const CyclicWord& y,
                                 int m, int n, int radius) {
    if (m < 1) throw domain_error("bracket_power: m must be >= 1");
    if (n == 0) throw domain_error("bracket_power: n must be nonzero");
    if (x.empty() || y.empty())
        throw domain_error("bracket: classes must be nonempty");
    if (shared_root(x, y))
        throw domain_error("bracket: shared primitive root; "
                           "use bracket_power_self for [x^m, x]");
    return assemble(rep, x, y, m, n, radius);
}

FormalSum bracket_power_self(const SurfaceRep& rep, const CyclicWord& x, int m, int radius) {
    if (m < 2) throw domain_error("bracket_power_self: m must be >= 2");
    if (primitive_root(x).exponent != 1)
        throw domain_error("bracket_power_self: x must be primitive");
    if (is_nonessential(rep, x))
        throw domain_error("bracket_power_self: x must be essential");

    const std::string w = x.letters();
    FormalSum sum;
    for (const TransversePoint& p : self_intersection_points(rep, x, radius)) {
        const std::string g = p.coset_rep.letters();
        const std::string gi = invert_letters(g);
        // branch translations t1 = w, t2 = g w g^-1 based at the crossing
        CyclicWord c1 = cyclic_canonical_str(repeat_word(w, m) + g + w + gi);
        CyclicWord c2 = cyclic_canonical_str(g + repeat_word(w, m) + gi + w);
        sum.add(Rational(m * p.sign), c1);
        sum.add(Rational(-m * p.sign), c2);
    }
    return sum;
}

const TransversePoint& min_angle_point(std::span<const TransversePoint> points) {
    if (points.empty()) throw domain_error("min_angle_point: empty list");
    const TransversePoint* best = &points.front();
    for (const TransversePoint& p : points) {
        if (p.angle < best->angle ||
            (p.angle == best->angle &&
             shortlex_cmp(p.coset_rep.letters(), best->coset_rep.letters()) < 0))
            best = &p;
    }
    return *best;
}

FormalSum bracket_terms_from_points(const CyclicWord& x, const CyclicWord& y,
                                    std::span<const TransversePoint> points, int m, int n) {
    const std::string wx = x.letters();
    const std::string wy = y.letters();
    FormalSum sum;
    const int scale = m * (n > 0 ? n : -n);
    const int flip = n > 0 ? 1 : -1;
    for (const TransversePoint& p : points) {
        const std::string g = p.coset_rep.letters();
        CyclicWord prod = cyclic_canonical_str(repeat_word(wx, m) + g + repeat_word(wy, n) +
                                               invert_letters(g));
        sum.add(Rational(scale * flip * p.sign), prod);
    }
    return sum;
}

}  // namespace goldman
