// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Expected to run in minutes on a laptop.

#include "sphnn/bench.hpp"
#include "sphnn/oracle.hpp"
#include "sphnn/parser.hpp"
#include "sphnn/reasoner.hpp"
#include "sphnn/render.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace sphnn;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s criterion-%d: %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

SolverConfig default_cfg() {
    SolverConfig cfg;
    cfg.seed = 20240817;
    return cfg;
}

struct CorpusOutcome {
    CorpusReport report;
    long rows = 0;
    long agree = 0;
    long valid_verdicts_per_dim = 0;
    bool splits_ok = true;
};

CorpusOutcome run_corpus(const std::vector<ReasoningTask>& tasks, const std::vector<int>& dims,
                         long expected_valid) {
    CorpusOutcome out;
    out.report = evaluate_corpus(tasks, default_cfg(), dims, /*jobs=*/4);
    out.rows = static_cast<long>(out.report.rows.size());
    std::map<int, long> valid_count;
    for (const auto& row : out.report.rows) {
        out.agree += row.agree;
        if (row.verdict) ++valid_count[row.dim];
    }
    for (int d : dims)
        if (valid_count[d] != expected_valid) out.splits_ok = false;
    return out;
}

std::string strip_wall_time(const std::string& csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        size_t col = 0, start = 0;
        for (size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (col != 6) out += line.substr(start, i - start) + ",";
                start = i + 1;
                ++col;
            }
        }
        out += "\n";
    }
    return out;
}

Vec random_unit_vec(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss;
    Vec v(n);
    for (auto& x : v) x = gauss(rng);
    return normalized(v);
}

} // namespace

int main() {
    const auto t_start = std::chrono::steady_clock::now();
    SolverConfig cfg = default_cfg();

    // ---- criterion 1: extended-16 across dimensions -----------------------
    auto extended = generate_extended16();
    CorpusOutcome ext = run_corpus(extended, {2, 3, 15, 30, 100}, 32);
    {
        char detail[160];
        std::snprintf(detail, sizeof detail, "%ld/%ld oracle agreement, 32/32 split %s",
                      ext.agree, ext.rows, ext.splits_ok ? "exact" : "WRONG");
        report(1, "extended-16 accuracy at dims {2,3,15,30,100}",
               ext.agree == ext.rows && ext.rows == 320 && ext.splits_ok, detail);
    }

    // ---- criterion 2: classic-256 ------------------------------------------
    auto classic = generate_classic256();
    CorpusOutcome cls = run_corpus(classic, {2, 3}, 24);
    {
        char detail[160];
        std::snprintf(detail, sizeof detail, "%ld/%ld oracle agreement, 24/232 split %s",
                      cls.agree, cls.rows, cls.splits_ok ? "exact" : "WRONG");
        report(2, "classic-256 accuracy at dims {2,3}",
               cls.agree == cls.rows && cls.rows == 512 && cls.splits_ok, detail);
    }

    // ---- criterion 3: one-epoch construction of satisfiable refutations ----
    {
        long satisfiable = 0, constructed = 0;
        auto count = [&](const CorpusOutcome& out, const std::vector<ReasoningTask>& tasks) {
            std::map<std::string, const ReasoningTask*> by_id;
            for (const auto& t : tasks) by_id[t.id] = &t;
            for (const auto& row : out.report.rows) {
                if (by_id.at(row.task_id)->gold_valid) continue; // refutation unsatisfiable
                ++satisfiable;
                if (!row.verdict) ++constructed; // counter-example reached zero loss in epoch 1
            }
        };
        count(ext, extended);
        count(cls, classic);
        char detail[160];
        std::snprintf(detail, sizeof detail,
                      "%ld/%ld satisfiable refutations constructed within one epoch",
                      constructed, satisfiable);
        report(3, "one-epoch construction, zero failures",
               satisfiable == constructed && satisfiable == 32 * 5 + 232 * 2, detail);
    }

    // ---- criterion 4: the grape scenario ------------------------------------
    {
        const Term g = plain("g", true), A = plain("A"), B = plain("B");
        bool both_cases_fail = true;
        for (const Term& in_jar : {A, B}) {
            Conjunction case_i = normalize({make_constraint(SpatialRel::P, g, in_jar),
                                            make_constraint(SpatialRel::P, g, comp(A)),
                                            make_constraint(SpatialRel::P, g, comp(B))});
            auto loop = find_circle_loop(case_i);
            if (!loop) continue; // counts as unconstructible
            both_cases_fail =
                both_cases_fail &&
                construct(*loop, cfg, 3).status == ConstructOutcome::Status::Failed;
        }
        ReasoningTask grape;
        grape.id = "grape";
        grape.premises = {Statement{Quantifier::All, g, {A, B}},
                          Statement{Quantifier::All, g, {comp(A)}}};
        grape.conclusion = Statement{Quantifier::All, g, {B}};
        Verdict v = decide_validity(grape, cfg, 3);
        report(4, "grape refutation: both cases unsat, conclusion valid",
               both_cases_fail && v.valid);
    }

    // ---- criterion 5: analytic gradients match central differences ----------
    {
        std::mt19937_64 rng(515151);
        std::uniform_real_distribution<double> radius(0.25, 2.4);
        const double h = 1e-5, max_rel = 1e-4;
        int checked = 0;
        bool all_ok = true;
        const SpatialRel rels[] = {SpatialRel::P, SpatialRel::D, SpatialRel::NotP,
                                   SpatialRel::NotD};
        while (checked < 100) {
            Configuration conf;
            conf.sphere = make_sphere(4);
            conf.terms.push_back({"F", SurfaceCircle{random_unit_vec(rng, 4), radius(rng)}});
            conf.terms.push_back({"G", SurfaceCircle{random_unit_vec(rng, 4), radius(rng)}});
            bool scene_used = false;
            for (SpatialRel rel : rels) {
                for (bool flip : {false, true}) {
                    SpatialConstraint k =
                        make_constraint(rel, plain("F"), flip ? comp(plain("G")) : plain("G"));
                    double base = constraint_loss(k, conf, cfg);
                    if (base < 0.05) continue; // inactive or near the hinge kink
                    double u = std::abs(dot(conf.terms[0].circle.center,
                                            conf.terms[1].circle.center));
                    if (u > 0.95) continue; // near the arccos singularity
                    scene_used = true;
                    LossGradient grad = constraint_gradient(k, conf, cfg);
                    for (size_t t = 0; t < conf.terms.size(); ++t) {
                        for (size_t i = 0; i < 4; ++i) {
                            Configuration up = conf, dn = conf;
                            up.terms[t].circle.center[i] += h;
                            dn.terms[t].circle.center[i] -= h;
                            double fd = (constraint_loss(k, up, cfg) -
                                         constraint_loss(k, dn, cfg)) /
                                        (2 * h);
                            double an = grad.center[t][i];
                            double err = std::abs(fd - an) /
                                         std::max({std::abs(fd), std::abs(an), 1e-8});
                            if (err > max_rel) all_ok = false;
                        }
                        Configuration up = conf, dn = conf;
                        up.terms[t].circle.radius += h;
                        dn.terms[t].circle.radius -= h;
                        double fd =
                            (constraint_loss(k, up, cfg) - constraint_loss(k, dn, cfg)) / (2 * h);
                        double err = std::abs(fd - grad.radius[t]) /
                                     std::max({std::abs(fd), std::abs(grad.radius[t]), 1e-8});
                        if (err > max_rel) all_ok = false;
                    }
                }
            }
            if (scene_used) ++checked;
        }
        report(5, "hinge-loss gradients vs central differences (rel err <= 1e-4)", all_ok);
    }

    // ---- criterion 6: geometry property suite -------------------------------
    {
        std::mt19937_64 rng(616161);
        std::uniform_real_distribution<double> radius(0.05, M_PI - 0.05);
        bool involution_ok = true, antipode_ok = true, triangle_ok = true;
        for (int i = 0; i < 1000; ++i) {
            SurfaceCircle c{random_unit_vec(rng, 3), radius(rng)};
            SurfaceCircle back = complement(complement(c));
            for (int k = 0; k < 3; ++k)
                involution_ok = involution_ok && back.center[k] == c.center[k];
            involution_ok = involution_ok && std::abs(back.radius - c.radius) < 1e-12;

            Vec p = random_unit_vec(rng, 3), q = random_unit_vec(rng, 3);
            Vec anti(3);
            for (int k = 0; k < 3; ++k) anti[k] = -p[k];
            antipode_ok = antipode_ok &&
                          std::abs(geodesic_distance(anti, q) -
                                   (M_PI - geodesic_distance(p, q))) < 1e-9;

            Vec x = random_unit_vec(rng, 3), y = random_unit_vec(rng, 3),
                z = random_unit_vec(rng, 3);
            triangle_ok = triangle_ok && geodesic_distance(x, z) <= geodesic_distance(x, y) +
                                                                        geodesic_distance(y, z) +
                                                                        1e-9;
        }

        // rewrite identities: normalized constraints keep their truth value
        bool rewrite_ok = true;
        std::uniform_real_distribution<double> r2(0.2, 2.6);
        int scenes = 0;
        while (scenes < 1000) {
            SurfaceCircle cf{random_unit_vec(rng, 3), r2(rng)};
            SurfaceCircle cg{random_unit_vec(rng, 3), r2(rng)};
            bool near_band = false;
            for (bool lc : {false, true})
                for (bool rc : {false, true}) {
                    SurfaceCircle l = lc ? complement(cf) : cf;
                    SurfaceCircle r = rc ? complement(cg) : cg;
                    near_band = near_band || relation_of(l, r, 1e-9) != relation_of(l, r, 2e-3);
                }
            if (near_band) continue;
            ++scenes;
            auto holds = [&](const SpatialConstraint& k) {
                SurfaceCircle l = k.lhs.complemented ? complement(cf) : cf;
                SurfaceCircle r = k.rhs.complemented ? complement(cg) : cg;
                if (k.lhs.name == "G") std::swap(l, r);
                QualRelation rel = relation_of(l, r, 1e-6);
                switch (k.rel) {
                    case SpatialRel::P: return rel == QualRelation::P || rel == QualRelation::EQ;
                    case SpatialRel::NotP:
                        return rel != QualRelation::P && rel != QualRelation::EQ;
                    case SpatialRel::D: return rel == QualRelation::D;
                    case SpatialRel::NotD: return rel != QualRelation::D;
                }
                return false;
            };
            for (SpatialRel rel :
                 {SpatialRel::P, SpatialRel::NotP, SpatialRel::D, SpatialRel::NotD})
                for (bool lc : {false, true})
                    for (bool rc : {false, true}) {
                        Term l = plain("F");
                        l.complemented = lc;
                        Term r = plain("G");
                        r.complemented = rc;
                        SpatialConstraint k = make_constraint(rel, l, r);
                        Conjunction n = normalize({k});
                        rewrite_ok = rewrite_ok && holds(k) == holds(n[0]);
                    }
        }
        char detail[200];
        std::snprintf(detail, sizeof detail, "involution %s, antipode %s, rewrites %s, triangle %s",
                      involution_ok ? "ok" : "FAIL", antipode_ok ? "ok" : "FAIL",
                      rewrite_ok ? "ok" : "FAIL", triangle_ok ? "ok" : "FAIL");
        report(6, "geometry property suite (1000 samples each)",
               involution_ok && antipode_ok && rewrite_ok && triangle_ok, detail);
    }

    // ---- criterion 7: bench determinism -------------------------------------
    {
        RunManifest m;
        m.corpus = RunManifest::Corpus::Extended16;
        m.dims = {2};
        m.solver = cfg;
        m.jobs = 4;
        m.out_dir.clear(); // in-memory comparison
        BenchResult r1 = run_bench(m);
        BenchResult r2 = run_bench(m);
        bool same = strip_wall_time(r1.report.to_csv()) == strip_wall_time(r2.report.to_csv());
        report(7, "repeated bench runs identical up to wall_time", same);
    }

    // ---- criterion 8: reported-only timing profile --------------------------
    {
        std::printf(
            "INFO criterion-8: timing is hardware-dependent and reported, never asserted.\n"
            "  extended-16: mean valid %.2fs, mean invalid %.2fs, invalid<5s %ld/%ld, "
            "valid<120s %ld/%ld\n"
            "  classic-256: mean valid %.2fs, mean invalid %.2fs\n"
            "  dims 200..10000 run only behind the bench --paper-grid flag, with the same "
            "accuracy expectation.\n",
            ext.report.mean_time_valid_s, ext.report.mean_time_invalid_s,
            ext.report.under_5s_invalid, ext.rows - 32 * 5, ext.report.under_120s_valid,
            32L * 5, cls.report.mean_time_valid_s, cls.report.mean_time_invalid_s);
        report(8, "timing reported, high-dimension grid opt-in", true);
    }

    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    std::printf("%s -- %d criterion(s) failed, %.1fs total\n", failures ? "FAILURE" : "SUCCESS",
                failures, elapsed);
    return failures ? 1 : 0;
}
