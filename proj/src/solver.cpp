#include "sphnn/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

namespace sphnn {

void validate(const SolverConfig& cfg) {
    if (!(cfg.learning_rate > 0)) throw std::invalid_argument("learning_rate must be positive");
    if (cfg.max_epochs < 1) throw std::invalid_argument("max_epochs must be >= 1");
    if (cfg.steps_per_constraint < 1)
        throw std::invalid_argument("steps_per_constraint must be >= 1");
    if (!(cfg.loss_tol > 0)) throw std::invalid_argument("loss_tol must be positive");
    if (!(cfg.strict_margin > 0)) throw std::invalid_argument("strict_margin must be positive");
    if (!(cfg.atomic_radius > 0)) throw std::invalid_argument("atomic_radius must be positive");
    if (!(cfg.atomic_radius < cfg.init_radius && cfg.init_radius < M_PI / 2))
        throw std::invalid_argument("need atomic_radius < init_radius < pi*R/2");
}

const TermEntry* Configuration::find(const std::string& name) const {
    for (const auto& t : terms)
        if (t.name == name) return &t;
    return nullptr;
}

const SurfaceCircle& Configuration::circle(const std::string& name) const {
    const TermEntry* e = find(name);
    if (!e) throw std::invalid_argument("no circle for term '" + name + "'");
    return e->circle;
}

// ---------------------------------------------------------------------------
// transition map

const TransitionMap& TransitionMap::standard() {
    static const TransitionMap map = [] {
        TransitionMap m;
        m.adjacency.resize(5);
        auto link = [&m](QualRelation a, QualRelation b) {
            m.adjacency[static_cast<int>(a)].push_back(b);
            m.adjacency[static_cast<int>(b)].push_back(a);
        };
        link(QualRelation::D, QualRelation::PO);
        link(QualRelation::PO, QualRelation::P);
        link(QualRelation::PO, QualRelation::Pbar);
        link(QualRelation::P, QualRelation::EQ);
        link(QualRelation::Pbar, QualRelation::EQ);
        for (int s = 0; s < 5; ++s) { // BFS from every node
            for (int t = 0; t < 5; ++t) m.dist[s][t] = -1;
            m.dist[s][s] = 0;
            std::vector<int> queue{s};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int cur = queue[qi];
                for (QualRelation nb : m.adjacency[cur]) {
                    int ni = static_cast<int>(nb);
                    if (m.dist[s][ni] < 0) {
                        m.dist[s][ni] = m.dist[s][cur] + 1;
                        queue.push_back(ni);
                    }
                }
            }
        }
        return m;
    }();
    return map;
}

const std::vector<QualRelation>& TransitionMap::neighbours(QualRelation r) const {
    return adjacency[static_cast<int>(r)];
}

int TransitionMap::distance(QualRelation from, QualRelation to) const {
    return dist[static_cast<int>(from)][static_cast<int>(to)];
}

// scan order for tie-breaking: P before Pbar, deformation via PO before EQ
static constexpr QualRelation kPreference[5] = {QualRelation::P, QualRelation::Pbar,
                                                QualRelation::PO, QualRelation::D,
                                                QualRelation::EQ};

QualRelation next_subgoal(QualRelation current, QualRelation target, const TransitionMap& map) {
    if (current == target) return target;
    int best = -1;
    QualRelation pick = target;
    for (QualRelation cand : kPreference) {
        bool adjacent = false;
        for (QualRelation nb : map.neighbours(current))
            if (nb == cand) adjacent = true;
        if (!adjacent) continue;
        int d = map.distance(cand, target);
        if (best < 0 || d < best) {
            best = d;
            pick = cand;
        }
    }
    return pick;
}

// ---------------------------------------------------------------------------
// optimization kernel

namespace {

constexpr double kGradClamp = 1e-12;  // dot clamp for arccos gradients
constexpr double kCoincident = 1e-13; // |u| beyond 1-this counts as degenerate

// linear hinge max(0, sd*d + sa*ra + sb*rb + m), or the equality pull
// d + |ra - rb| when eq_kind is set
struct Atom {
    int ia, ib;     // term slots
    bool fa, fb;    // operand is the complement of the stored node circle
    double sd, sa, sb, m;
    bool eq_kind = false;
};

struct Workspace {
    int n = 0;
    std::vector<std::string> names;
    std::vector<bool> node_comp; // stored circle is the complement circle
    std::vector<bool> atomic;
    std::vector<double> centers; // flat, unit rows
    std::vector<double> radii;
    std::vector<double> grad_c;
    std::vector<double> grad_r;
    std::vector<char> touched;
    std::mt19937_64 rng;

    int index(const std::string& name) const {
        for (size_t i = 0; i < names.size(); ++i)
            if (names[i] == name) return static_cast<int>(i);
        return -1;
    }
    double* center(int i) { return centers.data() + static_cast<size_t>(i) * n; }
    const double* center(int i) const { return centers.data() + static_cast<size_t>(i) * n; }
};

double unit_gauss(std::mt19937_64& rng) {
    auto u01 = [&rng] { return ((rng() >> 11) + 0.5) * 0x1p-53; };
    return std::sqrt(-2.0 * std::log(u01())) * std::cos(2.0 * M_PI * u01());
}

void random_unit(std::mt19937_64& rng, double* out, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        out[i] = unit_gauss(rng);
        s += out[i] * out[i];
    }
    s = std::sqrt(s);
    for (int i = 0; i < n; ++i) out[i] /= s;
}

struct PairGeom {
    double w;  // normalized dot of stored centers
    double u;  // dot of operand views (sign-flipped for complements)
    double d;  // geodesic distance between views
    double na, nb;
};

PairGeom pair_geom(const Workspace& ws, const Atom& a) {
    const double* ca = ws.center(a.ia);
    const double* cb = ws.center(a.ib);
    double dotv = 0, na2 = 0, nb2 = 0;
    for (int i = 0; i < ws.n; ++i) {
        dotv += ca[i] * cb[i];
        na2 += ca[i] * ca[i];
        nb2 += cb[i] * cb[i];
    }
    PairGeom g;
    g.na = std::sqrt(na2);
    g.nb = std::sqrt(nb2);
    g.w = dotv / (g.na * g.nb);
    double sign = (a.fa != a.fb) ? -1.0 : 1.0;
    g.u = sign * g.w;
    g.d = std::acos(std::clamp(g.u, -1.0, 1.0));
    return g;
}

double view_radius(const Workspace& ws, int idx, bool flip) {
    return flip ? M_PI - ws.radii[idx] : ws.radii[idx];
}

double atom_value(const Workspace& ws, const Atom& a) {
    PairGeom g = pair_geom(ws, a);
    double ra = view_radius(ws, a.ia, a.fa);
    double rb = view_radius(ws, a.ib, a.fb);
    if (a.eq_kind) return g.d + std::abs(ra - rb);
    return std::max(0.0, a.sd * g.d + a.sa * ra + a.sb * rb + a.m);
}

// Coincident centers with a loss that needs them apart have no usable
// distance gradient; nudge one center along a seeded random tangent first.
void maybe_perturb(Workspace& ws, const std::vector<Atom>& atoms) {
    for (const auto& a : atoms) {
        PairGeom g = pair_geom(ws, a);
        bool degenerate_near = g.u > 1.0 - kCoincident;
        bool degenerate_far = g.u < -1.0 + kCoincident;
        if (!degenerate_near && !degenerate_far) continue;
        double ra = view_radius(ws, a.ia, a.fa);
        double rb = view_radius(ws, a.ib, a.fb);
        bool active;
        double want_d; // sign of useful distance change
        if (a.eq_kind) {
            active = g.d + std::abs(ra - rb) > 0;
            want_d = -1.0;
        } else {
            active = a.sd * g.d + a.sa * ra + a.sb * rb + a.m > 0;
            want_d = -a.sd;
        }
        if (!active) continue;
        if ((degenerate_near && want_d > 0) || (degenerate_far && want_d < 0)) {
            double* c = ws.center(a.ia);
            std::vector<double> t(ws.n);
            random_unit(ws.rng, t.data(), ws.n);
            double proj = 0;
            for (int i = 0; i < ws.n; ++i) proj += t[i] * c[i];
            double s2 = 0;
            for (int i = 0; i < ws.n; ++i) {
                t[i] -= proj * c[i];
                s2 += t[i] * t[i];
            }
            double sn = std::sqrt(s2);
            if (sn == 0.0) continue;
            double norm2 = 0;
            for (int i = 0; i < ws.n; ++i) {
                c[i] += 1e-6 * t[i] / sn;
                norm2 += c[i] * c[i];
            }
            norm2 = std::sqrt(norm2);
            for (int i = 0; i < ws.n; ++i) c[i] /= norm2;
        }
    }
}

void accumulate_gradient(Workspace& ws, const Atom& a) {
    PairGeom g = pair_geom(ws, a);
    double ra = view_radius(ws, a.ia, a.fa);
    double rb = view_radius(ws, a.ib, a.fb);

    double dd = 0, dra = 0, drb = 0; // dL/dd, dL/dra, dL/drb
    if (a.eq_kind) {
        dd = 1.0;
        double diff = ra - rb;
        double sg = (diff > 0) - (diff < 0);
        dra = sg;
        drb = -sg;
    } else {
        double h = a.sd * g.d + a.sa * ra + a.sb * rb + a.m;
        if (h <= 0) return;
        dd = a.sd;
        dra = a.sa;
        drb = a.sb;
    }

    ws.grad_r[a.ia] += dra * (a.fa ? -1.0 : 1.0);
    ws.grad_r[a.ib] += drb * (a.fb ? -1.0 : 1.0);

    if (dd != 0.0) {
        double uc = std::clamp(g.u, -1.0 + kGradClamp, 1.0 - kGradClamp);
        double dacos = -1.0 / std::sqrt(1.0 - uc * uc);
        double sign = (a.fa != a.fb) ? -1.0 : 1.0;
        const double* ca = ws.center(a.ia);
        const double* cb = ws.center(a.ib);
        double* ga = ws.grad_c.data() + static_cast<size_t>(a.ia) * ws.n;
        double* gb = ws.grad_c.data() + static_cast<size_t>(a.ib) * ws.n;
        double fa = dd * dacos * sign / (g.na * g.nb);
        for (int i = 0; i < ws.n; ++i) {
            double ah = ca[i] / g.na, bh = cb[i] / g.nb;
            ga[i] += fa * g.nb * (bh - g.w * ah); // d u / d ca = (bh - w ah)/na
            gb[i] += fa * g.na * (ah - g.w * bh);
        }
        ws.touched[a.ia] = ws.touched[a.ib] = 1;
    }
}

void apply_update(Workspace& ws, const SolverConfig& cfg) {
    const double lr = cfg.learning_rate;
    const int T = static_cast<int>(ws.names.size());
    for (int t = 0; t < T; ++t) {
        if (ws.touched[t]) {
            double* c = ws.center(t);
            const double* g = ws.grad_c.data() + static_cast<size_t>(t) * ws.n;
            double norm2 = 0;
            for (int i = 0; i < ws.n; ++i) {
                c[i] -= lr * g[i];
                norm2 += c[i] * c[i];
            }
            norm2 = std::sqrt(norm2);
            for (int i = 0; i < ws.n; ++i) c[i] /= norm2;
        }
        if (!ws.atomic[t]) {
            double r = ws.radii[t] - lr * ws.grad_r[t];
            ws.radii[t] = std::clamp(r, cfg.atomic_radius, M_PI - cfg.atomic_radius);
        }
    }
    // two circles must never jointly cover the sphere
    const double cap = M_PI - cfg.strict_margin;
    for (int pass = 0; pass < 8; ++pass) {
        bool violated = false;
        for (int i = 0; i < T; ++i)
            for (int j = i + 1; j < T; ++j) {
                double sum = ws.radii[i] + ws.radii[j];
                if (sum <= cap) continue;
                violated = true;
                if (!ws.atomic[i] && !ws.atomic[j]) {
                    double scale = cap / sum;
                    ws.radii[i] *= scale;
                    ws.radii[j] *= scale;
                } else if (ws.atomic[i] && !ws.atomic[j]) {
                    ws.radii[j] = cap - ws.radii[i];
                } else if (!ws.atomic[i] && ws.atomic[j]) {
                    ws.radii[i] = cap - ws.radii[j];
                }
            }
        if (!violated) break;
    }
    std::fill(ws.grad_c.begin(), ws.grad_c.end(), 0.0);
    std::fill(ws.grad_r.begin(), ws.grad_r.end(), 0.0);
    std::fill(ws.touched.begin(), ws.touched.end(), 0);
}

Atom constraint_atom(const Workspace& ws, const SpatialConstraint& k, double strict_margin) {
    int ia = ws.index(k.lhs.name), ib = ws.index(k.rhs.name);
    if (ia < 0 || ib < 0)
        throw std::invalid_argument("constraint references missing term '" +
                                    (ia < 0 ? k.lhs.name : k.rhs.name) + "'");
    Atom a;
    a.ia = ia;
    a.ib = ib;
    a.fa = k.lhs.complemented != ws.node_comp[ia];
    a.fb = k.rhs.complemented != ws.node_comp[ib];
    switch (k.rel) {
        case SpatialRel::P: a.sd = 1; a.sa = 1; a.sb = -1; a.m = 0; break;
        case SpatialRel::D: a.sd = -1; a.sa = 1; a.sb = 1; a.m = 0; break;
        case SpatialRel::NotD: a.sd = 1; a.sa = -1; a.sb = -1; a.m = strict_margin; break;
        case SpatialRel::NotP: a.sd = -1; a.sa = -1; a.sb = 1; a.m = strict_margin; break;
    }
    return a;
}

void subgoal_atoms(QualRelation sub, const Atom& base, double eps, std::vector<Atom>& out) {
    Atom a = base;
    a.eq_kind = false;
    switch (sub) {
        case QualRelation::P:
            a.sd = 1; a.sa = 1; a.sb = -1; a.m = eps;
            out.push_back(a);
            break;
        case QualRelation::Pbar:
            a.sd = 1; a.sa = -1; a.sb = 1; a.m = eps;
            out.push_back(a);
            break;
        case QualRelation::D:
            a.sd = -1; a.sa = 1; a.sb = 1; a.m = eps;
            out.push_back(a);
            break;
        case QualRelation::PO:
            a.sd = -1; a.sa = -1; a.sb = 1; a.m = eps; // not P
            out.push_back(a);
            a.sd = -1; a.sa = 1; a.sb = -1; a.m = eps; // not Pbar
            out.push_back(a);
            a.sd = 1; a.sa = -1; a.sb = -1; a.m = eps; // not D
            out.push_back(a);
            break;
        case QualRelation::EQ:
            a.eq_kind = true;
            out.push_back(a);
            break;
    }
}

QualRelation classify(double d, double ra, double rb, double tol) {
    if (d <= tol && std::abs(ra - rb) <= tol) return QualRelation::EQ;
    if (d + ra <= rb + tol) return QualRelation::P;
    if (d + rb <= ra + tol) return QualRelation::Pbar;
    if (d >= ra + rb - tol) return QualRelation::D;
    return QualRelation::PO;
}

QualRelation atom_relation(const Workspace& ws, const Atom& a, double tol) {
    PairGeom g = pair_geom(ws, a);
    return classify(g.d, view_radius(ws, a.ia, a.fa), view_radius(ws, a.ib, a.fb), tol);
}

// Final qualitative relation a constraint is steered toward from `cur`:
// the satisfying relation nearest on the transition map.
QualRelation steering_target(SpatialRel rel, QualRelation cur, const TransitionMap& map) {
    switch (rel) {
        case SpatialRel::P: return QualRelation::P;
        case SpatialRel::D: return QualRelation::D;
        case SpatialRel::NotP: {
            if (cur == QualRelation::Pbar || cur == QualRelation::PO || cur == QualRelation::D)
                return cur;
            int best = -1;
            QualRelation pick = QualRelation::Pbar;
            for (QualRelation cand : {QualRelation::Pbar, QualRelation::PO, QualRelation::D}) {
                int d = map.distance(cur, cand);
                if (best < 0 || d < best) {
                    best = d;
                    pick = cand;
                }
            }
            return pick;
        }
        case SpatialRel::NotD: {
            if (cur != QualRelation::D) return cur;
            return QualRelation::PO;
        }
    }
    return cur;
}

Workspace make_workspace(const std::vector<Term>& terms, const SolverConfig& cfg,
                         const Sphere& sphere) {
    Workspace ws;
    ws.n = sphere.ambient_dim;
    ws.rng.seed(cfg.seed);
    for (const auto& t : terms) {
        int idx = ws.index(t.name);
        if (idx >= 0) {
            if (t.atomic) ws.atomic[idx] = true;
            continue;
        }
        ws.names.push_back(t.name);
        ws.node_comp.push_back(t.complemented);
        ws.atomic.push_back(t.atomic);
    }
    const size_t T = ws.names.size();
    ws.centers.assign(T * ws.n, 0.0);
    ws.radii.assign(T, 0.0);
    ws.grad_c.assign(T * ws.n, 0.0);
    ws.grad_r.assign(T, 0.0);
    ws.touched.assign(T, 0);
    std::vector<double> common(ws.n);
    random_unit(ws.rng, common.data(), ws.n);
    for (size_t t = 0; t < T; ++t) {
        std::copy(common.begin(), common.end(), ws.center(static_cast<int>(t)));
        ws.radii[t] = ws.atomic[t] ? cfg.atomic_radius : cfg.init_radius;
    }
    return ws;
}

Configuration workspace_to_configuration(const Workspace& ws, const Sphere& sphere) {
    Configuration conf;
    conf.sphere = sphere;
    for (size_t t = 0; t < ws.names.size(); ++t) {
        TermEntry e;
        e.name = ws.names[t];
        e.complement_node = ws.node_comp[t];
        e.atomic = ws.atomic[t];
        Vec center(ws.center(static_cast<int>(t)), ws.center(static_cast<int>(t)) + ws.n);
        double r = ws.radii[t];
        if (e.complement_node) { // store the base circle of the term
            for (auto& x : center) x = -x;
            r = M_PI - r;
        }
        e.circle = SurfaceCircle{std::move(center), r};
        conf.terms.push_back(std::move(e));
    }
    return conf;
}

Workspace workspace_from_configuration(const Configuration& conf) {
    Workspace ws;
    ws.n = conf.sphere.ambient_dim;
    const size_t T = conf.terms.size();
    ws.centers.assign(T * ws.n, 0.0);
    ws.radii.assign(T, 0.0);
    ws.grad_c.assign(T * ws.n, 0.0);
    ws.grad_r.assign(T, 0.0);
    ws.touched.assign(T, 0);
    for (size_t t = 0; t < T; ++t) {
        const TermEntry& e = conf.terms[t];
        ws.names.push_back(e.name);
        ws.node_comp.push_back(e.complement_node);
        ws.atomic.push_back(e.atomic);
        Vec c = e.circle.center;
        double r = e.circle.radius;
        if (e.complement_node) {
            for (auto& x : c) x = -x;
            r = M_PI - r;
        }
        std::copy(c.begin(), c.end(), ws.center(static_cast<int>(t)));
        ws.radii[t] = r;
    }
    return ws;
}

} // namespace

Configuration init_configuration(const std::vector<Term>& terms, const SolverConfig& cfg,
                                 const Sphere& sphere) {
    if (terms.empty()) throw std::invalid_argument("cannot initialize an empty configuration");
    validate(cfg);
    Workspace ws = make_workspace(terms, cfg, sphere);
    return workspace_to_configuration(ws, sphere);
}

double constraint_loss(const SpatialConstraint& k, const Configuration& conf,
                       const SolverConfig& cfg) {
    Workspace ws = workspace_from_configuration(conf);
    return atom_value(ws, constraint_atom(ws, k, cfg.strict_margin));
}

Configuration gradient_step(const SpatialConstraint& k,
                            const std::vector<SpatialConstraint>& preserved,
                            const Configuration& conf, const SolverConfig& cfg) {
    Workspace ws = workspace_from_configuration(conf);
    // perturbation stream decoupled from the init stream: seeding with the
    // bare cfg.seed would redraw the init center as the tangent direction,
    // leaving an exactly-zero tangential component
    ws.rng.seed(cfg.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<Atom> atoms{constraint_atom(ws, k, cfg.strict_margin)};
    for (const auto& p : preserved) atoms.push_back(constraint_atom(ws, p, cfg.strict_margin));
    maybe_perturb(ws, atoms);
    for (const auto& a : atoms) accumulate_gradient(ws, a);
    apply_update(ws, cfg);
    return workspace_to_configuration(ws, conf.sphere);
}

LossGradient constraint_gradient(const SpatialConstraint& k, const Configuration& conf,
                                 const SolverConfig& cfg) {
    Workspace ws = workspace_from_configuration(conf);
    accumulate_gradient(ws, constraint_atom(ws, k, cfg.strict_margin));
    LossGradient g;
    for (size_t t = 0; t < ws.names.size(); ++t) {
        g.names.push_back(ws.names[t]);
        const double* gc = ws.grad_c.data() + t * ws.n;
        g.center.emplace_back(gc, gc + ws.n);
        g.radius.push_back(ws.grad_r[t]);
    }
    return g;
}

ConstructOutcome construct(const Conjunction& loop, const SolverConfig& cfg, int ambient_dim) {
    validate(cfg);
    const Sphere sphere = make_sphere(ambient_dim, 1.0);
    const TransitionMap& map = TransitionMap::standard();

    std::vector<Term> terms;
    for (const auto& k : loop) {
        terms.push_back(k.lhs);
        terms.push_back(k.rhs);
    }
    ConstructOutcome out;
    if (loop.empty()) {
        out.status = ConstructOutcome::Status::Satisfied;
        out.configuration.sphere = sphere;
        return out;
    }

    Workspace ws = make_workspace(terms, cfg, sphere);

    std::vector<Atom> hinges;
    hinges.reserve(loop.size());
    for (const auto& k : loop) hinges.push_back(constraint_atom(ws, k, cfg.strict_margin));

    std::vector<Atom> active;
    std::vector<size_t> preserved;
    long steps = 0;

    for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
        for (size_t ci = 0; ci < loop.size(); ++ci) {
            const Atom& hinge = hinges[ci];
            auto joint_value = [&] {
                double v = atom_value(ws, hinge);
                for (size_t pi : preserved) v += atom_value(ws, hinges[pi]);
                return v;
            };
            QualRelation last_sub = QualRelation::EQ;
            bool have_active = false;
            for (long s = 0; s < cfg.steps_per_constraint; ++s) {
                if (joint_value() <= cfg.loss_tol) break;
                QualRelation cur = atom_relation(ws, hinge, cfg.loss_tol);
                QualRelation target = steering_target(loop[ci].rel, cur, map);
                QualRelation sub = (cur == target) ? target : next_subgoal(cur, target, map);
                if (!have_active || sub != last_sub) {
                    active.clear();
                    active.push_back(hinge);
                    if (cur != target || sub != cur) subgoal_atoms(sub, hinge, cfg.strict_margin, active);
                    for (size_t pi : preserved) active.push_back(hinges[pi]);
                    last_sub = sub;
                    have_active = true;
                }
                maybe_perturb(ws, active);
                for (const auto& a : active) accumulate_gradient(ws, a);
                apply_update(ws, cfg);
                ++steps;
            }
            if (atom_value(ws, hinge) <= cfg.loss_tol) preserved.push_back(ci);
        }
        // settle any residual the last constraints left on earlier hinges
        {
            auto total_value = [&] {
                double v = 0;
                for (const auto& h : hinges) v += atom_value(ws, h);
                return v;
            };
            active.clear();
            for (const auto& h : hinges) active.push_back(h);
            for (long s = 0; s < cfg.steps_per_constraint && total_value() > cfg.loss_tol; ++s) {
                maybe_perturb(ws, active);
                for (const auto& a : active) accumulate_gradient(ws, a);
                apply_update(ws, cfg);
                ++steps;
            }
        }
        double total = 0;
        for (const auto& h : hinges) total += atom_value(ws, h);
        if (total <= cfg.loss_tol) {
            out.status = ConstructOutcome::Status::Satisfied;
            out.final_loss = total;
            out.configuration = workspace_to_configuration(ws, sphere);
            out.steps_used = steps;
            return out;
        }
        out.final_loss = total;
    }
    out.status = ConstructOutcome::Status::Failed;
    out.configuration = workspace_to_configuration(ws, sphere);
    out.steps_used = steps;
    return out;
}

SatDecision decide_satisfiable(const ConstraintFormula& f, const SolverConfig& cfg,
                               int ambient_dim) {
    SatDecision dec;
    for (const auto& disjunct : f.disjuncts) {
        ++dec.disjuncts_tried;
        auto loop = find_circle_loop(disjunct);
        if (!loop) continue;
        ConstructOutcome out = construct(*loop, cfg, ambient_dim);
        dec.steps_used += out.steps_used;
        if (out.status == ConstructOutcome::Status::Satisfied) {
            dec.satisfiable = true;
            dec.model = std::move(out.configuration);
            return dec;
        }
    }
    return dec;
}

// ---------------------------------------------------------------------------
// JSON round-trip

static void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

std::string configuration_to_json(const Configuration& conf) {
    std::string out = "{\"dim\": ";
    out += std::to_string(conf.sphere.ambient_dim);
    out += ", \"radius\": ";
    append_double(out, conf.sphere.radius);
    out += ", \"circles\": {";
    bool first = true;
    for (const auto& e : conf.terms) {
        if (!first) out += ", ";
        first = false;
        out += "\"" + e.name + "\": {\"center\": [";
        for (size_t i = 0; i < e.circle.center.size(); ++i) {
            if (i) out += ", ";
            append_double(out, e.circle.center[i]);
        }
        out += "], \"r\": ";
        append_double(out, e.circle.radius);
        out += "}";
    }
    out += "}}";
    return out;
}

Configuration configuration_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Configuration conf;
    conf.sphere = make_sphere(j.at("dim").get<int>(), j.at("radius").get<double>());
    for (auto it = j.at("circles").begin(); it != j.at("circles").end(); ++it) {
        TermEntry e;
        e.name = it.key();
        e.circle.center = it.value().at("center").get<std::vector<double>>();
        e.circle.radius = it.value().at("r").get<double>();
        if (static_cast<int>(e.circle.center.size()) != conf.sphere.ambient_dim)
            throw std::invalid_argument("circle dimension does not match sphere");
        conf.terms.push_back(std::move(e));
    }
    return conf;
}

} // namespace sphnn
