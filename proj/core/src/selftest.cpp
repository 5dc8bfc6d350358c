#include "goldman/selftest.hpp"

#include "goldman/decide.hpp"
#include "goldman/intersect.hpp"
#include "goldman/zigzag.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace goldman::selftest {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int thread_count(const Options& opt) {
    if (opt.threads > 0) return opt.threads;
    if (const char* env = std::getenv("GOLDMAN_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void log_line(const Options& opt, const std::string& line) {
    if (opt.log) (*opt.log) << line << std::endl;
}

template <typename F>
void parallel_for(int n, int threads, F&& body) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads - 1; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

// relative residual: the cosh values reach 1e6 on the length-6 corpus,
// where an absolute 1e-8 would demand more than double precision
double cosh_identity_residual(const SurfaceRep& rep, const TransversePoint& p) {
    double lp = translation_length(holonomy(rep, p.product.letters()));
    double lhs = std::cosh(0.5 * lp);
    double rhs = std::cosh(0.5 * p.len_x) * std::cosh(0.5 * p.len_y) +
                 std::sinh(0.5 * p.len_x) * std::sinh(0.5 * p.len_y) * std::cos(p.angle);
    return std::fabs(lhs - rhs) / std::max(1.0, std::fabs(lhs));
}

struct Failure {
    std::mutex mu;
    int count = 0;
    std::string first;
    void record(const std::string& what) {
        std::lock_guard lock(mu);
        ++count;
        if (first.empty()) first = what;
    }
    std::string summary(const std::string& ok) {
        std::lock_guard lock(mu);
        if (count == 0) return ok;
        return std::to_string(count) + " failures; first: " + first;
    }
};

// ---------------------------------------------------------------- corpus

struct CorpusEntry {
    CyclicWord word;
    CyclicWord root;
    CyclicWord root_inv;
    bool essential;
};

std::vector<CorpusEntry> build_corpus(const SurfaceRep& rep, int max_len) {
    std::vector<CorpusEntry> out;
    for (const CyclicWord& w : word_corpus(max_len)) {
        CorpusEntry e;
        e.word = w;
        e.root = primitive_root(w).root;
        e.root_inv = inverse(e.root);
        e.essential = !is_nonessential(rep, w);
        out.push_back(std::move(e));
    }
    return out;
}

struct PairChecks {
    bool wsc_ok = true;
    bool ssc_ok = true;
    bool antisym_ok = true;
    bool metric_ok = true;
    bool radius_ok = true;
    bool boundary_ok = true;
    double worst_cosh = 0.0;
    std::string note;

    void fail(bool PairChecks::* flag, const std::string& what) {
        this->*flag = false;
        if (note.empty()) note = what;
    }
};

/// Criteria 7, 8 and the pairwise parts of 3 and 10 on one unordered
/// corpus pair, across the given metrics.
PairChecks eval_pair(const std::vector<SurfaceRep>& reps, const CorpusEntry& X,
                     const CorpusEntry& Y, int radius) {
    PairChecks out;
    const bool essential_pair = X.essential && Y.essential;
    std::vector<FormalSum> metric_sums;  // m=1 and m=2 sums per metric, xy direction

    for (const SurfaceRep& rep : reps) {
        struct Direction {
            const CyclicWord *u, *v;
            std::vector<TransversePoint> points;
        };
        Direction dirs[2] = {{&X.word, &Y.word, {}}, {&Y.word, &X.word, {}}};
        for (Direction& d : dirs) {
            d.points = transverse_points(rep, *d.u, *d.v, radius);
            if (!essential_pair && !d.points.empty())
                out.fail(&PairChecks::boundary_ok,
                         "non-essential pair (" + d.u->str() + "," + d.v->str() +
                             ") produced intersection points");
            for (const TransversePoint& p : d.points)
                out.worst_cosh = std::max(out.worst_cosh, cosh_identity_residual(rep, p));
            int early = 0;
            for (const TransversePoint& p : d.points)
                if (p.min_rep_len <= radius - 2) ++early;
            if (early != static_cast<int>(d.points.size()))
                out.fail(&PairChecks::radius_ok,
                         "count changed between radius " + std::to_string(radius - 2) + " and " +
                             std::to_string(radius) + " for (" + d.u->str() + "," + d.v->str() +
                             ")");
        }

        for (const Direction& d : dirs) {
            const int i_uv = static_cast<int>(d.points.size());
            for (int m : {2, 3}) {
                bool y_eq = *d.v == power(*d.u, m);
                bool bz = y_eq || bracket_terms_from_points(*d.u, *d.v, d.points, m, 1).is_zero();
                if (bz != (i_uv == 0 || y_eq))
                    out.fail(&PairChecks::wsc_ok, "WSC inconsistent for [" + d.u->str() + "^" +
                                                      std::to_string(m) + ", " + d.v->str() + "]");
            }
            for (auto [m1, m2] : {std::pair{1, 2}, std::pair{2, 3}}) {
                for (auto [c1n, c2n] : {std::pair{1, 1}, std::pair{2, -3}}) {
                    auto terms = [&](int m, int n) {
                        return bracket_terms_from_points(*d.u, *d.v, d.points, m, n);
                    };
                    bool cond1 = i_uv == 0;
                    bool cond2 = terms(m1, 1).is_zero() && terms(m2, 1).is_zero();
                    bool cond3 = terms(m1, 1).is_zero() && terms(1, m2).is_zero();
                    int mm = std::max(2, m1);
                    FormalSum mix = terms(mm, 1);
                    mix.scale(Rational(c1n));
                    FormalSum snd = terms(mm, -1);
                    snd.scale(Rational(c2n));
                    mix += snd;
                    bool cond4 = mix.is_zero();
                    if (!(cond1 == cond2 && cond2 == cond3 && cond3 == cond4))
                        out.fail(&PairChecks::ssc_ok,
                                 "SSC disagreement for (" + d.u->str() + "," + d.v->str() +
                                     ") m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                                     " c=(" + std::to_string(c1n) + "," + std::to_string(c2n) +
                                     ")");
                }
            }
        }

        FormalSum anti = bracket_terms_from_points(X.word, Y.word, dirs[0].points, 1, 1);
        anti += bracket_terms_from_points(Y.word, X.word, dirs[1].points, 1, 1);
        if (!anti.is_zero())
            out.fail(&PairChecks::antisym_ok,
                     "[x,y] + [y,x] != 0 for (" + X.word.str() + "," + Y.word.str() + ")");

        metric_sums.push_back(bracket_terms_from_points(X.word, Y.word, dirs[0].points, 1, 1));
        metric_sums.push_back(bracket_terms_from_points(X.word, Y.word, dirs[0].points, 2, 1));
    }

    for (std::size_t k = 2; k + 1 < metric_sums.size(); k += 2) {
        if (!(metric_sums[k] == metric_sums[0]) || !(metric_sums[k + 1] == metric_sums[1]))
            out.fail(&PairChecks::metric_ok, "bracket sums differ between metrics for (" +
                                                 X.word.str() + "," + Y.word.str() + ")");
    }
    return out;
}

// ------------------------------------------------------- zigzag sampling

struct ZigzagInstance {
    SurfaceRep rep;
    CyclicWord alpha, beta;
    TransversePoint point;
};

std::vector<ZigzagInstance> zigzag_instances(int radius) {
    const std::vector<std::array<double, 3>> metrics = {
        {-3.0, -3.0, -3.0},   {-3.0, -4.0, -5.0},  {-2.05, -2.05, -2.05},
        {-2.1, -7.0, -2.1},   {-8.0, -2.2, -2.6},  {-2.5, -3.5, -6.0},
    };
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"aB", "aab"}, {"aB", "abb"},  {"aab", "abb"}, {"aB", "aabb"}, {"aab", "aabb"},
        {"aB", "aaB"}, {"aB", "AAbb"}, {"Ab", "aaBB"}, {"aaB", "abb"}, {"aB", "aabab"},
    };
    std::vector<ZigzagInstance> out;
    for (const auto& tr : metrics) {
        SurfaceRep rep = pants_rep_from_traces(tr[0], tr[1], tr[2]);
        for (const auto& [xs, ys] : pairs) {
            CyclicWord x = cyclic_canonical_str(xs);
            CyclicWord y = cyclic_canonical_str(ys);
            // orient so the first class is the shorter one
            if (geodesic_length(rep, x) > geodesic_length(rep, y)) std::swap(x, y);
            auto points = transverse_points(rep, x, y, radius);
            int used = 0;
            for (const TransversePoint& p : points) {
                if (used++ == 2) break;
                out.push_back({rep, x, y, p});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CyclicWord> word_corpus(int max_len) {
    std::vector<CyclicWord> out;
    const char letters[4] = {'a', 'A', 'b', 'B'};
    std::string buf;
    for (int n = 1; n <= max_len; ++n) {
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            buf.clear();
            for (int i : idx) buf.push_back(letters[i]);
            bool reduced = true;
            for (int i = 0; i + 1 < n && reduced; ++i)
                reduced = buf[static_cast<std::size_t>(i + 1)] !=
                          inverse_letter(buf[static_cast<std::size_t>(i)]);
            if (reduced && (n == 1 || buf.front() != inverse_letter(buf.back()))) {
                CyclicWord c = cyclic_canonical_str(buf);
                if (c.letters() == buf) out.push_back(c);
            }
            int pos = n - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 3) {
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CriterionResult> run_acceptance(const Options& options) {
    std::vector<CriterionResult> results;
    const int radius = options.radius;
    const int threads = thread_count(options);
    const int max_len = options.quick ? 4 : 6;
    SurfaceRep rep0 = default_pants();

    auto push = [&](int id, const std::string& name, bool pass, const std::string& detail,
                    double secs) {
        results.push_back({id, name, pass, detail, secs});
        std::ostringstream line;
        line << "criterion " << id << " [" << name << "]: " << (pass ? "PASS" : "FAIL") << " ("
             << detail << ", " << secs << "s)";
        log_line(options, line.str());
    };

    // ---- criterion 1: the figure-eight power bracket ----
    {
        auto t0 = Clock::now();
        bool pass = true;
        std::string detail = "m=2..5 exact, terms distinct";
        CyclicWord x = cyclic_canonical_str("aB");
        for (int m = 2; m <= 5 && pass; ++m) {
            FormalSum got = bracket_power_self(rep0, x, m, radius);
            std::string w1s, w2s;
            for (int i = 0; i < m; ++i) w1s += "Ba";
            w1s += "aB";
            for (int i = 0; i < m; ++i) w2s += "aB";
            w2s += "Ba";
            CyclicWord w1 = cyclic_canonical_str(w1s);
            CyclicWord w2 = cyclic_canonical_str(w2s);
            FormalSum expect;
            expect.add(Rational(m), w1);
            expect.add(Rational(-m), w2);
            if (w1 == w2) {
                pass = false;
                detail = "terms coincide at m=" + std::to_string(m);
            } else if (!(got == expect)) {
                pass = false;
                detail = "sum mismatch at m=" + std::to_string(m);
            }
        }
        push(1, "figure-eight power bracket", pass, detail, seconds_since(t0));
    }

    // ---- criterion 2: cosh composition law, randomized ----
    {
        auto t0 = Clock::now();
        std::mt19937 rng(42);
        std::uniform_real_distribution<double> len_dist(0.2, 6.0);
        std::uniform_real_distribution<double> ang_dist(0.12, M_PI - 0.12);
        std::uniform_real_distribution<double> entry(-2.0, 2.0);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            double t1 = len_dist(rng), t2 = len_dist(rng);
            double chi1 = ang_dist(rng);
            double delta = ang_dist(rng);
            auto rot = [](double chi) {
                return MobiusMap::from_entries(std::cos(0.5 * chi), std::sin(0.5 * chi),
                                               -std::sin(0.5 * chi), std::cos(0.5 * chi));
            };
            auto diag = [](double t) {
                return MobiusMap::from_entries(std::exp(0.5 * t), 0, 0, std::exp(-0.5 * t));
            };
            MobiusMap k;
            while (true) {
                double a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
                if (a * d - b * c > 0.1) {
                    k = MobiusMap::from_entries(a, b, c, d);
                    break;
                }
            }
            MobiusMap ki = k.inverse();
            MobiusMap g = k * rot(chi1) * diag(t1) * rot(chi1).inverse() * ki;
            MobiusMap h = k * rot(chi1 + delta) * diag(t2) * rot(chi1 + delta).inverse() * ki;
            CoshCheck chk = compose_check_cosh(g, h);
            worst = std::max(worst, chk.residual / std::cosh(0.5 * chk.t_gh));
        }
        std::ostringstream d;
        d << "worst relative residual " << worst;
        push(2, "cosh composition law", worst < 1e-9, d.str(), seconds_since(t0));
    }

    // ---- corpus loop: criteria 3, 7, 8 and most of 10 ----
    {
        auto t0 = Clock::now();
        std::vector<SurfaceRep> reps = {rep0, pants_rep_from_traces(-3.0, -4.0, -5.0)};
        std::vector<CorpusEntry> corpus = build_corpus(rep0, max_len);
        std::vector<std::pair<int, int>> todo;
        for (int i = 0; i < static_cast<int>(corpus.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(corpus.size()); ++j) {
                const CorpusEntry& X = corpus[static_cast<std::size_t>(i)];
                const CorpusEntry& Y = corpus[static_cast<std::size_t>(j)];
                if (X.root == Y.root || X.root == Y.root_inv) continue;
                todo.emplace_back(i, j);
            }
        log_line(options, "corpus: " + std::to_string(corpus.size()) + " classes, " +
                              std::to_string(todo.size()) + " unordered pairs, " +
                              std::to_string(threads) + " threads");

        Failure f_wsc, f_ssc, f_anti, f_metric, f_radius, f_boundary, f_error;
        std::atomic<int> done{0};
        std::mutex cosh_mu;
        double worst_cosh = 0.0;
        parallel_for(static_cast<int>(todo.size()), threads, [&](int t) {
            auto [i, j] = todo[static_cast<std::size_t>(t)];
            const CorpusEntry& X = corpus[static_cast<std::size_t>(i)];
            const CorpusEntry& Y = corpus[static_cast<std::size_t>(j)];
            try {
                PairChecks c = eval_pair(reps, X, Y, radius);
                if (!c.wsc_ok) f_wsc.record(c.note);
                if (!c.ssc_ok) f_ssc.record(c.note);
                if (!c.antisym_ok) f_anti.record(c.note);
                if (!c.metric_ok) f_metric.record(c.note);
                if (!c.radius_ok) f_radius.record(c.note);
                if (!c.boundary_ok) f_boundary.record(c.note);
                std::lock_guard lock(cosh_mu);
                worst_cosh = std::max(worst_cosh, c.worst_cosh);
            } catch (const std::exception& e) {
                f_error.record("(" + X.word.str() + "," + Y.word.str() + "): " + e.what());
            }
            int n = done.fetch_add(1) + 1;
            if (n % 5000 == 0)
                log_line(options,
                         "  ... " + std::to_string(n) + "/" + std::to_string(todo.size()) +
                             " pairs");
        });
        double secs = seconds_since(t0);

        {
            std::ostringstream d;
            d << "worst residual " << worst_cosh << " over corpus points";
            push(3, "per-point cosh identity", worst_cosh < 1e-8 && f_error.count == 0,
                 f_error.count ? f_error.summary("") : d.str(), secs);
        }
        push(7, "weak separability criterion", f_wsc.count == 0 && f_error.count == 0,
             f_error.count ? f_error.summary("")
                           : f_wsc.summary("consistent on all pairs, m in {2,3}, two metrics"),
             secs);
        push(8, "strong separability criteria", f_ssc.count == 0 && f_error.count == 0,
             f_ssc.summary("four conditions agree on all pairs"), secs);

        // conjugation invariance on a slice of essential crossing pairs
        auto t1 = Clock::now();
        bool conj_ok = true;
        std::string conj_note;
        MobiusMap k = MobiusMap::from_entries(1.3, 0.4, 0.2, 1.1);
        SurfaceRep conj_rep = rep0.conjugated(k);
        int tested = 0;
        for (const auto& [i, j] : todo) {
            if (tested >= 30) break;
            const CorpusEntry& X = corpus[static_cast<std::size_t>(i)];
            const CorpusEntry& Y = corpus[static_cast<std::size_t>(j)];
            if (!X.essential || !Y.essential) continue;
            auto base = transverse_points(rep0, X.word, Y.word, radius);
            if (base.empty()) continue;
            ++tested;
            auto moved = transverse_points(conj_rep, X.word, Y.word, radius);
            if (moved.size() != base.size()) {
                conj_ok = false;
                conj_note = "point count changed under conjugation for (" + X.word.str() + "," +
                            Y.word.str() + ")";
                break;
            }
            auto angles_of = [](const std::vector<TransversePoint>& v) {
                std::vector<double> a;
                for (const auto& p : v) a.push_back(p.angle);
                std::sort(a.begin(), a.end());
                return a;
            };
            auto a1 = angles_of(base), a2 = angles_of(moved);
            for (std::size_t q = 0; q < a1.size(); ++q)
                if (std::fabs(a1[q] - a2[q]) > 1e-8) {
                    conj_ok = false;
                    conj_note = "angle drift under conjugation for (" + X.word.str() + "," +
                                Y.word.str() + ")";
                }
            if (!(bracket_terms_from_points(X.word, Y.word, base, 2, 1) ==
                  bracket_terms_from_points(X.word, Y.word, moved, 2, 1))) {
                conj_ok = false;
                conj_note = "bracket changed under conjugation";
            }
        }
        bool pass10 = f_metric.count == 0 && f_radius.count == 0 && f_anti.count == 0 &&
                      f_boundary.count == 0 && conj_ok && f_error.count == 0;
        std::string d10 = !conj_ok            ? conj_note
                          : f_metric.count    ? f_metric.summary("")
                          : f_radius.count    ? f_radius.summary("")
                          : f_anti.count      ? f_anti.summary("")
                          : f_boundary.count  ? f_boundary.summary("")
                          : f_error.count     ? f_error.summary("")
                                              : "metric/radius/conjugation/antisymmetry stable (" +
                                                    std::to_string(tested) + " conjugated pairs)";
        push(10, "robustness", pass10, d10, secs + seconds_since(t1));
    }

    // ---- criteria 4, 5, 6: zigzag geometry ----
    {
        auto t0 = Clock::now();
        std::vector<ZigzagInstance> instances = zigzag_instances(radius);
        std::mt19937 rng(7);

        int built = 0;
        double worst_mid = 0.0, worst_spacing = 0.0;
        int crossing_checks = 0, theta_lo = 0, theta_hi = 0;
        int angle_checks = 0;
        Failure f4, f5, f6;

        for (const ZigzagInstance& inst : instances) {
            ZigzagCurve z;
            try {
                z = build_zigzag(inst.rep, inst.alpha, inst.beta, inst.point, 3);
            } catch (const std::exception& e) {
                f4.record(std::string("build failed: ") + e.what());
                continue;
            }
            ++built;
            worst_mid = std::max(worst_mid, z.midpoint_residual());
            worst_spacing = std::max(worst_spacing, z.even_spacing_residual());
            if (z.midpoint_residual() > 1e-8 || z.even_spacing_residual() > 1e-8)
                f4.record("zigzag residual too large for (" + inst.alpha.str() + "," +
                          inst.beta.str() + ")");

            const double half = 0.5 * z.len_product();
            std::uniform_real_distribution<double> u_dist(1e-3 * half, half);
            for (int s = 0; s < 3; ++s) {
                double u = s == 2 ? half : u_dist(rng);
                try {
                    ZigzagConfig cfg = make_config(z, u);
                    ++crossing_checks;
                    (cfg.theta0() < 0.5 * M_PI ? theta_lo : theta_hi) += 1;
                    if (!verify_segment_crossing(cfg))
                        f5.record("segments failed to cross for (" + inst.alpha.str() + "," +
                                  inst.beta.str() + "), u=" + std::to_string(u));
                } catch (const std::exception& e) {
                    f5.record(std::string("config failed: ") + e.what());
                }
            }

            // angle decrease: the plain and the role-swapped (primed) layout
            for (int swap_roles = 0; swap_roles < 2; ++swap_roles) {
                ZigzagCurve zz;
                if (swap_roles == 0) {
                    zz = z;
                } else {
                    try {
                        auto flipped = transverse_points(inst.rep, inst.beta, inst.alpha, radius);
                        if (flipped.empty()) continue;
                        zz = build_zigzag(inst.rep, inst.beta, inst.alpha, flipped.front(), 3);
                    } catch (const std::exception&) {
                        continue;
                    }
                }
                if (std::fabs(zz.len_alpha() - zz.len_beta()) <= 1e-9) continue;
                ZigzagConfig probe = make_config(zz, 0.25 * zz.len_product());
                double theta0 = probe.theta0();
                double a2 = 2.0 * probe.a_dist();
                double halfz = 0.5 * zz.len_product();
                std::vector<double> us;
                if (theta0 < 0.5 * M_PI - 1e-9) {
                    if (a2 < halfz - 1e-9)
                        us = {a2, 0.5 * (a2 + halfz), halfz};
                    else
                        us = {halfz};
                } else {
                    us = {0.3 * halfz, 0.7 * halfz, halfz};
                }
                for (double u : us) {
                    ZigzagConfig cfg = make_config(zz, u);
                    ConfigCase cc = classify_config(cfg);
                    if (cc == ConfigCase::I || cc == ConfigCase::Iprime ||
                        cc == ConfigCase::VIII || cc == ConfigCase::IX)
                        continue;
                    try {
                        auto found = find_smaller_angle(cfg);
                        if (!found) {
                            f6.record(std::string("no angle found in case ") + to_string(cc));
                            continue;
                        }
                        ++angle_checks;
                        if (!(found->phi < zz.phi_p() - 1e-9))
                            f6.record("phi not smaller in case " + std::string(to_string(cc)) +
                                      " for (" + zz.alpha().str() + "," + zz.beta().str() + ")");
                        if (std::fabs(found->phi - found->phi_bar) > 1e-8)
                            f6.record("phi(R') != phi(Rbar') in case " +
                                      std::string(to_string(cc)));
                    } catch (const std::exception& e) {
                        f6.record(std::string("find_smaller_angle failed in case ") +
                                  to_string(cc) + ": " + e.what());
                    }
                }
            }
        }
        double secs = seconds_since(t0);
        {
            std::ostringstream d;
            d << built << " curves, worst midpoint " << worst_mid << ", worst spacing "
              << worst_spacing;
            push(4, "zigzag structure", built >= 50 && f4.count == 0, f4.summary(d.str()), secs);
        }
        {
            std::ostringstream d;
            d << crossing_checks << " samples, theta0<pi/2: " << theta_lo
              << ", theta0>=pi/2: " << theta_hi;
            push(5, "segment crossing",
                 crossing_checks >= 200 && theta_lo > 0 && theta_hi > 0 && f5.count == 0,
                 f5.summary(d.str()), secs);
        }
        {
            std::ostringstream d;
            d << angle_checks << " configurations";
            push(6, "angle decrease", angle_checks >= 100 && f6.count == 0, f6.summary(d.str()),
                 secs);
        }
    }

    // ---- criterion 9: center probe ----
    {
        auto t0 = Clock::now();
        Failure f9;
        int boundary_combos = 0, essential_combos = 0;

        std::vector<Combo> central_expected = {
            {{Rational(2), cyclic_canonical_str("aaa")}},
            {{Rational(7), cyclic_canonical_str("B")}},
            {{Rational(1), cyclic_canonical_str("b")},
             {Rational(-3), cyclic_canonical_str("abab")}},
            {{Rational(1), cyclic_canonical_str("a")},
             {Rational(1), cyclic_canonical_str("b")},
             {Rational(1), cyclic_canonical_str("ab")}},
            {{parse_rational("5/2"), cyclic_canonical_str("AA")},
             {Rational(-1), cyclic_canonical_str("ABAB")}},
        };
        for (const Combo& combo : central_expected) {
            ++boundary_combos;
            CenterVerdict v = center_probe(rep0, combo, radius);
            if (!v.central_candidate || v.witness)
                f9.record("boundary combination produced a witness");
        }

        // every essential class of length <= 5 whose bracket shape is in
        // scope (not a nontrivial power of the probe or its inverse)
        CyclicWord probe = figure_eight_probe();
        CyclicWord probe_inv = inverse(probe);
        for (const CyclicWord& y : word_corpus(5)) {
            if (is_nonessential(rep0, y)) continue;
            CyclicWord root = primitive_root(y).root;
            if ((root == probe || root == probe_inv) && y != probe) continue;
            ++essential_combos;
            Combo combo{{Rational(1), y}};
            long expected_i =
                y == probe
                    ? 2 * static_cast<long>(self_intersection_points(rep0, probe, radius).size())
                    : static_cast<long>(transverse_points(rep0, probe, y, radius).size());
            CenterVerdict v = center_probe(rep0, combo, radius);
            if (v.central_candidate || !v.witness) {
                f9.record("no witness for essential class " + y.str());
                continue;
            }
            if (v.witness->m > expected_i + 1)
                f9.record("witness exponent above the I+1 bound for " + y.str());
        }

        std::vector<Combo> mixed = {
            {{Rational(1), cyclic_canonical_str("aab")}, {Rational(2), cyclic_canonical_str("a")}},
            {{Rational(1), cyclic_canonical_str("aab")},
             {Rational(-1), cyclic_canonical_str("abb")}},
            {{parse_rational("3/2"), cyclic_canonical_str("aBab")},
             {Rational(1), cyclic_canonical_str("bb")}},
            {{Rational(2), cyclic_canonical_str("aaab")},
             {Rational(-5), cyclic_canonical_str("b")}},
            {{Rational(1), cyclic_canonical_str("aB")}, {Rational(1), cyclic_canonical_str("a")}},
        };
        for (const Combo& combo : mixed) {
            ++essential_combos;
            CenterVerdict v = center_probe(rep0, combo, radius);
            if (v.central_candidate || !v.witness)
                f9.record("no witness for a mixed essential combination");
        }

        std::ostringstream d;
        d << boundary_combos << " boundary combos central, " << essential_combos
          << " essential combos witnessed";
        push(9, "center probe", f9.count == 0, f9.summary(d.str()), seconds_since(t0));
    }

    std::sort(results.begin(), results.end(),
              [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
    return results;
}

}  // namespace goldman::selftest
