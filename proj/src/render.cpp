#include "sphnn/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sphnn {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Canvas {
    double cx, cy, scale;
};

void legend(std::ostringstream& svg, const Configuration& conf, const RenderSpec& spec) {
    double y = 18;
    size_t i = 0;
    for (const auto& e : conf.terms) {
        const std::string& color = spec.palette[i % spec.palette.size()];
        std::string label = e.complement_node ? "c_" + e.name : e.name;
        svg << "<rect x=\"10\" y=\"" << fmt(y - 9) << "\" width=\"12\" height=\"12\" fill=\""
            << color << "\"/>\n";
        svg << "<text x=\"28\" y=\"" << fmt(y + 1) << "\" font-size=\"13\" font-family=\"sans-serif\">"
            << xml_escape(label) << "</text>\n";
        y += 18;
        ++i;
    }
}

// arc of the circle |p|=rho from angle a to angle b (b > a), split at the
// midpoint so each SVG arc segment spans less than pi
std::string arc_path(const Canvas& cv, double rho, double a, double b) {
    auto px = [&](double t) { return cv.cx + rho * std::cos(t); };
    auto py = [&](double t) { return cv.cy - rho * std::sin(t); };
    double m = 0.5 * (a + b);
    std::string d = "M " + fmt(px(a)) + " " + fmt(py(a));
    d += " A " + fmt(rho) + " " + fmt(rho) + " 0 0 0 " + fmt(px(m)) + " " + fmt(py(m));
    d += " A " + fmt(rho) + " " + fmt(rho) + " 0 0 0 " + fmt(px(b)) + " " + fmt(py(b));
    return d;
}

void render_dim2(std::ostringstream& svg, const Configuration& conf, const RenderSpec& spec,
                 const Canvas& cv) {
    double base = cv.scale;
    svg << "<circle cx=\"" << fmt(cv.cx) << "\" cy=\"" << fmt(cv.cy) << "\" r=\"" << fmt(base)
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    auto arcs = term_arcs(conf);
    double step = spec.stroke_width * 3.0;
    for (size_t i = 0; i < arcs.size(); ++i) {
        const auto& a = arcs[i];
        const std::string& color = spec.palette[i % spec.palette.size()];
        double rho = base + step * static_cast<double>(i + 1);
        double lo = a.theta - a.half_width, hi = a.theta + a.half_width;
        svg << "<path d=\"" << arc_path(cv, rho, lo, hi) << "\" fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"" << fmt(spec.stroke_width) << "\"";
        if (a.complement_node) svg << " stroke-dasharray=\"6,4\"";
        svg << "/>\n";
        if (spec.labels == RenderSpec::LabelPlacement::Centroid) {
            double lx = cv.cx + (rho + 10) * std::cos(a.theta);
            double ly = cv.cy - (rho + 10) * std::sin(a.theta);
            std::string label = a.complement_node ? "c_" + a.name : a.name;
            svg << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
                << "\" font-size=\"13\" font-family=\"sans-serif\" fill=\"" << color << "\">"
                << xml_escape(label) << "</text>\n";
        }
    }
}

void polyline_runs(std::ostringstream& svg, const std::vector<Vec>& pts, const Canvas& cv,
                   const std::string& color, double stroke, bool front, bool dashed_style) {
    // consecutive runs with matching visibility become one path each
    const size_t n = pts.size();
    size_t start = 0;
    while (start < n) {
        bool vis = pts[start][2] >= 0.0;
        size_t end = start;
        while (end < n && (pts[end][2] >= 0.0) == vis) ++end;
        if (vis == front) {
            std::string d;
            for (size_t i = start; i < end; ++i) {
                double x = cv.cx + cv.scale * pts[i][0];
                double y = cv.cy - cv.scale * pts[i][1];
                d += (i == start ? "M " : "L ") + fmt(x) + " " + fmt(y) + " ";
            }
            svg << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"" << fmt(stroke) << "\"";
            if (!front || dashed_style) svg << " stroke-dasharray=\"" << (front ? "6,4" : "3,5") << "\"";
            svg << "/>\n";
        }
        start = end;
    }
}

void render_dim3(std::ostringstream& svg, const Configuration& conf, const RenderSpec& spec,
                 const Canvas& cv) {
    svg << "<circle cx=\"" << fmt(cv.cx) << "\" cy=\"" << fmt(cv.cy) << "\" r=\"" << fmt(cv.scale)
        << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    for (size_t i = 0; i < conf.terms.size(); ++i) {
        const auto& e = conf.terms[i];
        const std::string& color = spec.palette[i % spec.palette.size()];
        auto pts = boundary_samples(e.circle);
        pts.push_back(pts.front()); // close the curve
        polyline_runs(svg, pts, cv, color, spec.stroke_width, true, e.complement_node);
        polyline_runs(svg, pts, cv, color, spec.stroke_width * 0.6, false, e.complement_node);
        if (spec.labels == RenderSpec::LabelPlacement::Centroid) {
            Vec c = e.circle.center;
            if (e.complement_node)
                for (auto& x : c) x = -x; // label at the complement's center
            double lx = cv.cx + cv.scale * c[0];
            double ly = cv.cy - cv.scale * c[1];
            std::string label = e.complement_node ? "c_" + e.name : e.name;
            svg << "<text x=\"" << fmt(lx) << "\" y=\"" << fmt(ly)
                << "\" font-size=\"13\" font-family=\"sans-serif\" fill=\"" << color << "\">"
                << xml_escape(label) << "</text>\n";
        }
    }
}

} // namespace

std::vector<TermArc> term_arcs(const Configuration& conf) {
    if (conf.sphere.ambient_dim != 2)
        throw std::invalid_argument("term arcs exist only on the 2-d sphere");
    std::vector<TermArc> arcs;
    arcs.reserve(conf.terms.size());
    for (const auto& e : conf.terms) {
        SurfaceCircle c = e.circle;
        if (e.complement_node) c = complement(c, conf.sphere.radius);
        arcs.push_back(TermArc{e.name, std::atan2(c.center[1], c.center[0]), c.radius,
                               e.complement_node});
    }
    return arcs;
}

std::vector<Vec> boundary_samples(const SurfaceCircle& c, int count) {
    if (c.center.size() != 3)
        throw std::invalid_argument("boundary sampling needs a 3-d center");
    Vec axis = normalized(c.center);
    // orthonormal frame around the axis, seeded from the least-aligned
    // coordinate direction for determinism
    int least = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(axis[i]) < std::abs(axis[least])) least = i;
    Vec e(3, 0.0);
    e[least] = 1.0;
    double proj = dot(e, axis);
    Vec u(3);
    for (int i = 0; i < 3; ++i) u[i] = e[i] - proj * axis[i];
    u = normalized(u);
    Vec v = {axis[1] * u[2] - axis[2] * u[1], axis[2] * u[0] - axis[0] * u[2],
             axis[0] * u[1] - axis[1] * u[0]};

    const double cr = std::cos(c.radius), sr = std::sin(c.radius);
    std::vector<Vec> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        double t = 2.0 * M_PI * i / count;
        Vec p(3);
        for (int k = 0; k < 3; ++k)
            p[k] = cr * axis[k] + sr * (std::cos(t) * u[k] + std::sin(t) * v[k]);
        pts.push_back(std::move(p));
    }
    return pts;
}

std::string render_svg(const Configuration& conf, const RenderSpec& spec) {
    const int n = conf.sphere.ambient_dim;
    if (n != 2 && n != 3)
        throw std::invalid_argument(
            "no projection for ambient dimension " + std::to_string(n) +
            "; use the JSON export instead");
    if (spec.width <= 0 || spec.height <= 0)
        throw std::invalid_argument("render size must be positive");

    Canvas cv;
    cv.cx = spec.width / 2.0;
    cv.cy = spec.height / 2.0;
    cv.scale = 0.38 * std::min(spec.width, spec.height);

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
        << spec.height << "\">\n";
    if (n == 2)
        render_dim2(svg, conf, spec, cv);
    else
        render_dim3(svg, conf, spec, cv);
    if (spec.labels == RenderSpec::LabelPlacement::Legend) legend(svg, conf, spec);
    svg << "</svg>\n";
    return svg.str();
}

std::string export_json(const Configuration& conf) { return configuration_to_json(conf); }

} // namespace sphnn
