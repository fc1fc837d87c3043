#ifndef SPHNN_RENDER_HPP
#define SPHNN_RENDER_HPP

#include "sphnn/solver.hpp"

#include <string>
#include <vector>

namespace sphnn {

struct RenderSpec {
    int width = 640;
    int height = 640;
    std::vector<std::string> palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                        "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    double stroke_width = 2.5;
    enum class LabelPlacement { Centroid, Legend } labels = LabelPlacement::Legend;
};

/// Euler diagram of a configuration. Ambient dimension 2 draws the sphere
/// surface as a circle with one highlighted arc per term; dimension 3 draws
/// each term's boundary circle under orthographic projection, hidden
/// hemisphere dashed. Other dimensions are not drawable; use the JSON export.
std::string render_svg(const Configuration& conf, const RenderSpec& spec = RenderSpec());

/// Same schema as configuration_to_json.
std::string export_json(const Configuration& conf);

/// Arc of a term on the 2-d sphere: center angle and geodesic half-width.
/// Exposed so the drawn intervals can be checked against relation_of.
struct TermArc {
    std::string name;
    double theta;      // center angle
    double half_width; // geodesic radius
    bool complement_node;
};
std::vector<TermArc> term_arcs(const Configuration& conf);

/// Sampled boundary circle of a term on the 3-d sphere (unit points).
std::vector<Vec> boundary_samples(const SurfaceCircle& c, int count = 240);

} // namespace sphnn

#endif
