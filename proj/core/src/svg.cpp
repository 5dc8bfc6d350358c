#include "goldman/zigzag.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <sstream>

namespace goldman {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    if (std::strcmp(buf, "-0.00") == 0) return "0.00";
    return buf;
}

struct Bounds {
    double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
    void add(PointH p) {
        minx = std::min(minx, p.real());
        maxx = std::max(maxx, p.real());
        miny = std::min(miny, p.imag());
        maxy = std::max(maxy, p.imag());
    }
};

/// Display chart: the curve's axis L (the imaginary axis of the working
/// chart) goes to the half-circle (-100, 100), with the segment midpoint
/// M_0 at height 100i. The whole figure then fits one viewport even
/// though the lifts spread exponentially along L.
struct Display {
    double scale;  // |M_0| in chart coordinates

    PointH operator()(PointH chart) const {
        PointH w = chart / scale;
        PointH d = (w - 1.0) / (w + 1.0);
        return 100.0 * d;
    }
    /// image of a boundary value (chart real axis), nullopt at the pole
    std::optional<double> boundary(double x) const {
        double w = x / scale;
        if (std::fabs(w + 1.0) < 1e-12) return std::nullopt;
        return 100.0 * (w - 1.0) / (w + 1.0);
    }
};

/// Path for the geodesic segment between two display points, drawn as a
/// circular arc (or vertical line) in SVG coordinates (y up mapped to -y).
std::string seg_path(PointH p, PointH q) {
    std::ostringstream out;
    double dx = q.real() - p.real();
    if (std::fabs(dx) < 1e-9 * (std::fabs(p.real()) + std::fabs(q.real()) + 1.0)) {
        out << "M " << fmt(p.real()) << " " << fmt(-p.imag()) << " L " << fmt(q.real()) << " "
            << fmt(-q.imag());
        return out.str();
    }
    double m = (std::norm(q) - std::norm(p)) / (2.0 * dx);
    double r = std::hypot(p.real() - m, p.imag());
    int sweep = p.real() < q.real() ? 1 : 0;
    out << "M " << fmt(p.real()) << " " << fmt(-p.imag()) << " A " << fmt(r) << " " << fmt(r)
        << " 0 0 " << sweep << " " << fmt(q.real()) << " " << fmt(-q.imag());
    return out.str();
}

void emit_path(std::ostringstream& svg, const std::string& d, const char* stroke, double width,
               bool dashed = false) {
    svg << "  <path d=\"" << d << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
        << fmt(width) << "\"";
    if (dashed) svg << " stroke-dasharray=\"" << fmt(width * 4) << " " << fmt(width * 3) << "\"";
    svg << "/>\n";
}

void emit_dot(std::ostringstream& svg, PointH p, double r, const char* fill) {
    svg << "  <circle cx=\"" << fmt(p.real()) << "\" cy=\"" << fmt(-p.imag()) << "\" r=\""
        << fmt(r) << "\" fill=\"" << fill << "\"/>\n";
}

void emit_label(std::ostringstream& svg, PointH p, double size, const std::string& text) {
    svg << "  <text x=\"" << fmt(p.real() + 0.6 * size) << "\" y=\"" << fmt(-p.imag() - 0.4 * size)
        << "\" font-size=\"" << fmt(size) << "\" font-family=\"sans-serif\" fill=\"#222222\">"
        << text << "</text>\n";
}

constexpr const char* kAlphaColor = "#1f63b4";
constexpr const char* kBetaColor = "#d62728";
constexpr const char* kDAlphaColor = "#2ca02c";
constexpr const char* kDBetaColor = "#ff8c1a";
constexpr const char* kAxisColor = "#555555";
constexpr const char* kMirrorColor = "#999999";

std::string finish(const std::ostringstream& body, Bounds b, double width_px) {
    b.miny = std::min(b.miny, 0.0);
    double w = b.maxx - b.minx, h = b.maxy - b.miny;
    double mx = 0.1 * w + 1e-3, my = 0.1 * h + 1e-3;
    double vx = b.minx - mx, vy = -(b.maxy + my);
    double vw = w + 2 * mx, vh = h + 2 * my;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(vx)
        << " " << fmt(vy) << " " << fmt(vw) << " " << fmt(vh) << "\" width=\"" << fmt(width_px)
        << "\" height=\"" << fmt(width_px * vh / vw) << "\">\n";
    // the ideal boundary
    svg << "  <line x1=\"" << fmt(vx) << "\" y1=\"0.00\" x2=\"" << fmt(vx + vw)
        << "\" y2=\"0.00\" stroke=\"#bbbbbb\" stroke-width=\"" << fmt(vw / 600.0) << "\"/>\n";
    svg << body.str();
    svg << "</svg>\n";
    return svg.str();
}

Display curve_display(const ZigzagCurve& z) {
    return Display{std::hypot(z.midpoint(0).real(), z.midpoint(0).imag())};
}

void render_curve_into(const ZigzagCurve& z, const Display& disp, const SvgStyle& style,
                       std::ostringstream& body, Bounds& bounds, double stroke) {
    const int k = z.window();
    for (int i = -k; i <= k; ++i) {
        bounds.add(disp(z.p_prime(i)));
        bounds.add(disp(z.p_dprime(i)));
    }
    // axis L: the full display half-circle
    emit_path(body, seg_path(PointH(-100.0, 1e-4), PointH(100.0, 1e-4)), kAxisColor, stroke);
    // 2k alpha and 2k beta segments
    for (int i = -k; i < k; ++i) {
        emit_path(body, seg_path(disp(z.p_prime(i)), disp(z.p_dprime(i))), kAlphaColor, stroke);
        emit_path(body, seg_path(disp(z.p_dprime(i)), disp(z.p_prime(i + 1))), kBetaColor,
                  stroke);
    }
    for (int i = -k; i < k; ++i) {
        emit_dot(body, disp(z.p_prime(i)), stroke * 1.4, "#000000");
        emit_dot(body, disp(z.p_dprime(i)), stroke * 1.4, "#000000");
    }
    emit_dot(body, disp(z.midpoint(0)), stroke * 1.4, kAxisColor);
    if (style.labels) {
        double fs = stroke * 8.0;
        for (int i = -1; i <= 1; ++i) {
            emit_label(body, disp(z.p_prime(i)), fs, "P'(" + std::to_string(i) + ")");
            emit_label(body, disp(z.p_dprime(i)), fs, "P''(" + std::to_string(i) + ")");
        }
        emit_label(body, disp(z.midpoint(0)), fs, "M0");
        emit_label(body, PointH(-100.0, 0.0), fs, "L");
    }
}

void render_mirror_into(const Display& disp, double radius_chart, const char* label,
                        const SvgStyle& style, std::ostringstream& body, const Bounds& bounds,
                        double stroke) {
    auto x1 = disp.boundary(radius_chart);
    auto x2 = disp.boundary(-radius_chart);
    double top = bounds.maxy * 1.05 + 1.0;
    if (x1 && x2) {
        emit_path(body, seg_path(PointH(*x1, 1e-4), PointH(*x2, 1e-4)), kMirrorColor, stroke,
                  true);
        if (style.labels)
            emit_label(body, PointH(0.5 * (*x1 + *x2), 0.0), stroke * 8.0, label);
    } else {
        double x0 = x1 ? *x1 : *x2;
        emit_path(body, seg_path(PointH(x0, 1e-4), PointH(x0, top)), kMirrorColor, stroke, true);
        if (style.labels) emit_label(body, PointH(x0, 0.0), stroke * 8.0, label);
    }
}

}  // namespace

std::string render_svg(const ZigzagCurve& z, const SvgStyle& style) {
    Display disp = curve_display(z);
    std::ostringstream body;
    Bounds bounds;
    double stroke = 200.0 / 300.0;
    render_curve_into(z, disp, style, body, bounds, stroke);
    return finish(body, bounds, style.width_px);
}

std::string render_svg(const ZigzagConfig& c, const SvgStyle& style) {
    const ZigzagCurve& z = c.curve();
    const int k = z.window();
    Display disp = curve_display(z);
    std::ostringstream body;
    Bounds bounds;
    double stroke = 200.0 / 300.0;

    render_curve_into(z, disp, style, body, bounds, stroke);
    for (int i = -k; i <= k; ++i) {
        bounds.add(disp(c.q_prime(i)));
        bounds.add(disp(c.q_dprime(i)));
    }
    // companion D: alpha segments Q_i'Q_i'', beta segments Q_i''Q_{i+1}'
    for (int i = -k; i < k; ++i) {
        emit_path(body, seg_path(disp(c.q_prime(i)), disp(c.q_dprime(i))), kDAlphaColor, stroke);
        emit_path(body, seg_path(disp(c.q_dprime(i)), disp(c.q_prime(i + 1))), kDBetaColor,
                  stroke);
    }
    if (c.mirrored()) {
        // mirrors are chart half-circles |z| = r; their display images
        // are geodesics between the two boundary images
        double r_u = std::fabs(c.mirror_u()->source.value());
        double r_v = std::fabs(c.mirror_v()->source.value());
        render_mirror_into(disp, r_u, "U", style, body, bounds, stroke);
        render_mirror_into(disp, r_v, "V", style, body, bounds, stroke);
    }
    return finish(body, bounds, style.width_px);
}

}  // namespace goldman
