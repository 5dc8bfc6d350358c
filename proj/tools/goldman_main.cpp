// Command-line front end: bracket / separable / center / zigzag / selftest
// subcommands over the pants Goldman-bracket library. JSON on stdout,
// exit 0 on success, 1 on internal failure, 2 on user error.

#include "goldman/decide.hpp"
#include "goldman/intersect.hpp"
#include "goldman/json_io.hpp"
#include "goldman/selftest.hpp"
#include "goldman/zigzag.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace goldman;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUser = 2;

struct RunConfig {
    double lengths[3];
    double tol = 1e-9;
    int radius = kDefaultRadius;
    std::string format = "json";
    RunConfig() {
        double l = 2.0 * std::acosh(1.5);  // boundary traces (-3,-3,-3)
        lengths[0] = lengths[1] = lengths[2] = l;
    }
};

void load_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open config file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("bad JSON in '" + path + "': " + std::string(e.what()));
    }
    if (j.contains("surface") && j["surface"] != "pants")
        throw parse_error("only surface = \"pants\" is supported");
    if (j.contains("lengths")) {
        auto arr = j["lengths"];
        if (!arr.is_array() || arr.size() != 3)
            throw parse_error("config 'lengths' must be an array of three numbers");
        for (int i = 0; i < 3; ++i) cfg.lengths[i] = arr[static_cast<std::size_t>(i)];
    }
    if (j.contains("tol")) cfg.tol = j["tol"];
    if (j.contains("radius")) cfg.radius = j["radius"];
}

void validate(const RunConfig& cfg) {
    if (cfg.radius < kMinRadius || cfg.radius > kMaxRadius)
        throw parse_error("radius must be in [4, 14]");
    if (!(cfg.tol > 0.0) || cfg.tol >= 1e-4)
        throw parse_error("tol must be in (0, 1e-4)");
    if (cfg.format != "json" && cfg.format != "text")
        throw parse_error("format must be json or text");
}

SurfaceRep make_rep(const RunConfig& cfg) {
    return pants_rep(cfg.lengths[0], cfg.lengths[1], cfg.lengths[2], cfg.tol);
}

CyclicWord parse_class(const std::string& text) {
    return cyclic_canonical(parse_word(text));
}

/// "2*aaa, -1*ab" or "aB" (coefficient 1).
Combo parse_combo(const std::string& text) {
    Combo combo;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t b = item.find_first_not_of(" \t");
        if (b != std::string::npos) {
            std::size_t e = item.find_last_not_of(" \t");
            item = item.substr(b, e - b + 1);
            std::size_t star = item.find('*');
            Rational coeff = 1;
            std::string word = item;
            if (star != std::string::npos) {
                coeff = parse_rational(item.substr(0, star));
                word = item.substr(star + 1);
            }
            combo.emplace_back(coeff, parse_class(word));
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (combo.empty()) throw parse_error("empty combination");
    return combo;
}

void print_sum_text(const FormalSum& sum, std::ostream& out) {
    if (sum.is_zero()) {
        out << "0\n";
        return;
    }
    bool first = true;
    for (const auto& [word, coeff] : sum.terms()) {
        if (!first) out << " + ";
        out << rational_to_string(coeff) << "*[" << word.str() << "]";
        first = false;
    }
    out << "\n";
}

int cmd_bracket(const RunConfig& cfg, const std::string& xs, const std::string& ys, int m) {
    SurfaceRep rep = make_rep(cfg);
    CyclicWord x = parse_class(xs);
    CyclicWord y = parse_class(ys);
    if (m < 1) throw domain_error("m must be >= 1");

    BracketResult result;
    result.radius_used = cfg.radius;
    if (x.empty() || y.empty() || is_nonessential(rep, x) || is_nonessential(rep, y)) {
        result.converged = true;  // empty point set, nothing more to find
    } else if (y == power(x, m)) {
        result.converged = true;  // trivial vanishing by antisymmetry
    } else if (y == x && m >= 2 && primitive_root(x).exponent == 1) {
        result.sum = bracket_power_self(rep, x, m, cfg.radius);
        result.points = self_intersection_points(rep, x, cfg.radius);
        result.converged = true;
    } else {
        result = bracket_power(rep, x, y, m, cfg.radius);
    }

    if (cfg.format == "json") {
        std::cout << to_json(result) << "\n";
    } else {
        std::cout << "[" << xs << "^" << m << ", " << ys << "] = ";
        print_sum_text(result.sum, std::cout);
        std::cout << "points: " << result.points.size() << ", radius " << result.radius_used
                  << (result.converged ? " (converged)" : " (not converged)") << "\n";
    }
    return kExitOk;
}

int cmd_separable(const RunConfig& cfg, const std::string& xs, const std::string& ys) {
    SurfaceRep rep = make_rep(cfg);
    SeparabilityVerdict v = decide_separable(rep, parse_class(xs), parse_class(ys), cfg.radius);
    if (cfg.format == "json") {
        std::cout << to_json(v) << "\n";
    } else {
        std::cout << (v.separable ? "separable" : "not separable") << " (i = "
                  << v.intersection_count << ", method " << to_string(v.method) << ")\n";
    }
    return kExitOk;
}

int cmd_center(const RunConfig& cfg, const std::string& combo_text) {
    SurfaceRep rep = make_rep(cfg);
    CenterVerdict v = center_probe(rep, parse_combo(combo_text), cfg.radius);
    if (cfg.format == "json") {
        std::cout << to_json(v) << "\n";
    } else if (v.central_candidate) {
        std::cout << "central candidate (no witness up to the probe bound)\n";
    } else {
        std::cout << "not central: [probe^" << v.witness->m << ", combo] = ";
        print_sum_text(v.witness->bracket, std::cout);
    }
    return kExitOk;
}

int cmd_zigzag(const RunConfig& cfg, const std::string& xs, const std::string& ys, double u,
               const std::string& svg_path, int point_index, int window) {
    SurfaceRep rep = make_rep(cfg);
    CyclicWord x = parse_class(xs);
    CyclicWord y = parse_class(ys);
    auto points = transverse_points(rep, x, y, cfg.radius);
    if (points.empty())
        throw domain_error("classes have no transverse intersection points; nothing to draw");
    if (point_index < 0 || point_index >= static_cast<int>(points.size()))
        throw domain_error("point index out of range (have " + std::to_string(points.size()) +
                           " points)");
    ZigzagCurve z = build_zigzag(rep, x, y, points[static_cast<std::size_t>(point_index)], window);
    std::string svg;
    if (u > 0.0) {
        ZigzagConfig c = make_config(z, u);
        svg = render_svg(c);
    } else {
        svg = render_svg(z);
    }
    if (svg_path.empty()) {
        std::cout << svg;
    } else {
        std::ofstream out(svg_path, std::ios::binary);
        if (!out) throw goldman::error("cannot write '" + svg_path + "'");
        out << svg;
    }
    return kExitOk;
}

int cmd_selftest(const RunConfig& cfg, bool quick) {
    selftest::Options opt;
    opt.radius = cfg.radius;
    opt.quick = quick;
    opt.log = &std::cerr;
    auto results = selftest::run_acceptance(opt);
    bool all = true;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << " [" << r.name << "]: "
                  << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldman bracket computations on the hyperbolic pair of pants"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global options after the subcommand too

    RunConfig cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (surface, lengths, tol, radius)");
    app.add_option("--radius", cfg.radius, "word-ball radius for the double-coset search");
    app.add_option("--format", cfg.format, "output format: json or text");
    std::vector<double> traces;
    app.add_option("--traces", traces, "boundary traces t1 t2 t3 (each <= -2)")->expected(3);

    std::string xs, ys, combo_text, svg_path;
    int m = 1;
    double u = 0.0;
    int point_index = 0;
    int window = 3;
    bool quick = false;

    auto* bracket = app.add_subcommand("bracket", "Goldman bracket [x^m, y]");
    bracket->add_option("--x", xs, "first class")->required();
    bracket->add_option("--y", ys, "second class")->required();
    bracket->add_option("--m", m, "power of x (default 1)");

    auto* separable =
        app.add_subcommand("separable", "do x and y admit disjoint representatives?");
    separable->add_option("--x", xs, "first class")->required();
    separable->add_option("--y", ys, "second class")->required();

    auto* center = app.add_subcommand("center", "center probe for a linear combination");
    center->add_option("--combo", combo_text, "combination, e.g. \"2*aaa, -1*ab\"")->required();

    auto* zigzag = app.add_subcommand("zigzag", "emit the zigzag figure as SVG");
    zigzag->add_option("--x", xs, "first class")->required();
    zigzag->add_option("--y", ys, "second class")->required();
    zigzag->add_option("--u", u, "mirror offset (0 < u <= len/2); omit to draw the bare curve");
    zigzag->add_option("--svg", svg_path, "output file (stdout when omitted)");
    zigzag->add_option("--point", point_index, "which intersection point (default 0)");
    zigzag->add_option("--window", window, "vertex window k (default 3)");

    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance corpus");
    selftest_cmd->add_flag("--quick", quick, "restrict the corpus to words of length <= 4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUser;
    }

    try {
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (!traces.empty()) {
            for (int i = 0; i < 3; ++i) {
                if (!(traces[static_cast<std::size_t>(i)] <= -2.0 - cfg.tol))
                    throw parse_error("traces must be <= -2");
                cfg.lengths[i] = 2.0 * std::acosh(-0.5 * traces[static_cast<std::size_t>(i)]);
            }
        }
        validate(cfg);
        if (bracket->parsed()) return cmd_bracket(cfg, xs, ys, m);
        if (separable->parsed()) return cmd_separable(cfg, xs, ys);
        if (center->parsed()) return cmd_center(cfg, combo_text);
        if (zigzag->parsed()) return cmd_zigzag(cfg, xs, ys, u, svg_path, point_index, window);
        if (selftest_cmd->parsed()) return cmd_selftest(cfg, quick);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const unsupported_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUser;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUser;
}
