#include "sphnn/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sphnn {

Sphere make_sphere(int ambient_dim, double radius) {
    if (ambient_dim < 2)
        throw std::invalid_argument("sphere ambient dimension must be >= 2");
    if (!(radius > 0.0))
        throw std::invalid_argument("sphere radius must be positive");
    return Sphere{ambient_dim, radius};
}

double dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vec& v) { return std::sqrt(dot(v, v)); }

Vec normalized(const Vec& v) {
    double n = norm(v);
    if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

SurfaceCircle make_circle(Vec center, double radius, double sphere_radius) {
    const double pi_r = M_PI * sphere_radius;
    if (!(radius > 0.0) || !(radius < pi_r))
        throw std::invalid_argument("circle radius must lie in (0, pi*R)");
    double n = norm(center);
    if (std::abs(n - sphere_radius) > 1e-9)
        throw std::invalid_argument("circle center must lie on the sphere surface");
    return SurfaceCircle{std::move(center), radius};
}

const char* to_string(QualRelation r) {
    switch (r) {
        case QualRelation::P: return "P";
        case QualRelation::Pbar: return "Pbar";
        case QualRelation::PO: return "PO";
        case QualRelation::D: return "D";
        case QualRelation::EQ: return "EQ";
    }
    return "?";
}

double geodesic_distance(const Vec& a, const Vec& b, double sphere_radius) {
    double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0)
        throw std::invalid_argument("surface point cannot be the origin");
    double u = dot(a, b) / (na * nb);
    // Exact at identity/antipode; the tighter gradient-side clamp lives in
    // the solver kernel.
    u = std::clamp(u, -1.0, 1.0);
    return std::acos(u) * sphere_radius;
}

SurfaceCircle complement(const SurfaceCircle& c, double sphere_radius) {
    Vec anti(c.center.size());
    for (size_t i = 0; i < anti.size(); ++i) anti[i] = -c.center[i];
    return SurfaceCircle{std::move(anti), M_PI * sphere_radius - c.radius};
}

bool membership(const Vec& q, const SurfaceCircle& c, double sphere_radius) {
    return geodesic_distance(q, c.center, sphere_radius) < c.radius;
}

QualRelation relation_of(const SurfaceCircle& a, const SurfaceCircle& b,
                         double tol, double sphere_radius) {
    const double d = geodesic_distance(a.center, b.center, sphere_radius);
    if (d <= tol && std::abs(a.radius - b.radius) <= tol) return QualRelation::EQ;
    if (d + a.radius <= b.radius + tol) return QualRelation::P;
    if (d + b.radius <= a.radius + tol) return QualRelation::Pbar;
    if (d >= a.radius + b.radius - tol) return QualRelation::D;
    return QualRelation::PO;
}

} // namespace sphnn
