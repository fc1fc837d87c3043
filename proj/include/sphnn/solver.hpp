#ifndef SPHNN_SOLVER_HPP
#define SPHNN_SOLVER_HPP

#include "sphnn/geometry.hpp"
#include "sphnn/logic.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sphnn {

struct SolverConfig {
    double learning_rate = 1e-4;
    int max_epochs = 1;
    long steps_per_constraint = 50000;
    double loss_tol = 1e-6;
    double strict_margin = 1e-3;  // margin certifying strict relations (NotP, NotD)
    double atomic_radius = 0.01;  // frozen radius of atomic circles
    double init_radius = 0.36787944117144233; // e^-1
    std::uint64_t seed = 0;
};

void validate(const SolverConfig& cfg); // throws on out-of-range values

/// One constructed circle. When `complement_node` is set the optimizer
/// represented this term by its complement circle; `circle` is always the
/// base circle of the term.
struct TermEntry {
    std::string name;
    SurfaceCircle circle;
    bool complement_node = false;
    bool atomic = false;
};

/// A circle per term on a common sphere: the constructed Euler diagram.
struct Configuration {
    Sphere sphere;
    std::vector<TermEntry> terms;

    const TermEntry* find(const std::string& name) const;
    const SurfaceCircle& circle(const std::string& name) const; // throws if missing
};

/// Conceptual neighbourhood over {D, PO, P, Pbar, EQ}:
/// D--PO, PO--P, PO--Pbar, P--EQ, Pbar--EQ.
struct TransitionMap {
    static const TransitionMap& standard();
    const std::vector<QualRelation>& neighbours(QualRelation r) const;
    int distance(QualRelation from, QualRelation to) const;

    std::vector<std::vector<QualRelation>> adjacency;
    int dist[5][5] = {};
};

/// The neighbour of `current` on the shortest path to `target`; ties broken
/// toward P. Returns `target` when equal or adjacent.
QualRelation next_subgoal(QualRelation current, QualRelation target,
                          const TransitionMap& map = TransitionMap::standard());

/// All circles coincide on one seeded-random center; radii init_radius,
/// atomic terms at atomic_radius. Terms with the complement flag set are
/// optimized as complement circles (their base circle is derived).
Configuration init_configuration(const std::vector<Term>& terms, const SolverConfig& cfg,
                                 const Sphere& sphere);

/// Hinge loss of one constraint on a configuration; zero exactly when the
/// relation holds (strict relations with margin strict_margin).
/// Complemented operands are materialized via complement().
double constraint_loss(const SpatialConstraint& k, const Configuration& conf,
                       const SolverConfig& cfg);

/// One descent step on loss(k) + sum of preserved losses. Centers are
/// projected back to the surface, radii clamped; atomic radii frozen.
Configuration gradient_step(const SpatialConstraint& k,
                            const std::vector<SpatialConstraint>& preserved,
                            const Configuration& conf, const SolverConfig& cfg);

/// Analytic gradient of constraint_loss with respect to every term's center
/// coordinates and radius (before projection or clamping).
struct LossGradient {
    std::vector<std::string> names;
    std::vector<Vec> center;
    std::vector<double> radius;
};
LossGradient constraint_gradient(const SpatialConstraint& k, const Configuration& conf,
                                 const SolverConfig& cfg);

struct ConstructOutcome {
    enum class Status { Satisfied, Failed };
    Status status = Status::Failed;
    double final_loss = 0.0;
    Configuration configuration;
    long steps_used = 0;
};

/// Constructs a configuration for an ordered constraint loop: walks the
/// constraints, chasing transition-map subgoals per constraint while
/// preserving the already satisfied ones. Satisfied iff the total loss is
/// within loss_tol at the end of an epoch.
ConstructOutcome construct(const Conjunction& loop, const SolverConfig& cfg, int ambient_dim);

struct SatDecision {
    bool satisfiable = false;
    std::optional<Configuration> model;
    int disjuncts_tried = 0;
    long steps_used = 0;
};

/// Tries the disjuncts in order, skipping those without a circle loop;
/// Sat with the first zero-loss configuration, else Unsat.
SatDecision decide_satisfiable(const ConstraintFormula& f, const SolverConfig& cfg,
                               int ambient_dim);

/// {"dim":..,"radius":..,"circles":{name:{"center":[..],"r":..}}},
/// floats with 17 significant digits.
std::string configuration_to_json(const Configuration& conf);
Configuration configuration_from_json(const std::string& text);

} // namespace sphnn

#endif
