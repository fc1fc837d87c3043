#ifndef SPHNN_GEOMETRY_HPP
#define SPHNN_GEOMETRY_HPP

#include <string>
#include <vector>

namespace sphnn {

/// The ambient sphere all circles live on. Its surface is S^(n-1); the
/// center is always the origin, so the antipode of a point p is simply -p.
struct Sphere {
    int ambient_dim = 3;
    double radius = 1.0;
};

Sphere make_sphere(int ambient_dim, double radius = 1.0);

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm(const Vec& v);
Vec normalized(const Vec& v);

/// Geodesic disc on the sphere surface: all surface points whose surface
/// distance to `center` is strictly less than `radius` (arc-length units).
struct SurfaceCircle {
    Vec center;    // point on the surface, |center| == R
    double radius; // geodesic radius, 0 < radius < pi*R
};

SurfaceCircle make_circle(Vec center, double radius, double sphere_radius = 1.0);

/// Qualitative relation between two circles.
enum class QualRelation { P, Pbar, PO, D, EQ };

const char* to_string(QualRelation r);

/// Surface (great-circle) distance between two points, in [0, pi*R].
double geodesic_distance(const Vec& a, const Vec& b, double sphere_radius = 1.0);

/// The complement of a circle is again a circle: antipodal center,
/// radius pi*R - r. Involutive.
SurfaceCircle complement(const SurfaceCircle& c, double sphere_radius = 1.0);

/// Strict membership: distance(q, center) < radius.
bool membership(const Vec& q, const SurfaceCircle& c, double sphere_radius = 1.0);

/// Classify the relation between two circles within a tolerance band.
/// Priority: EQ, P, Pbar, D, PO.
QualRelation relation_of(const SurfaceCircle& a, const SurfaceCircle& b,
                         double tol = 1e-6, double sphere_radius = 1.0);

} // namespace sphnn

#endif
