#include "sphnn/reasoner.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

namespace sphnn {

Verdict decide_validity(const ReasoningTask& t, const SolverConfig& cfg, int ambient_dim) {
    const auto start = std::chrono::steady_clock::now();
    ConstraintFormula f = refutation_formula(t.premises, t.conclusion);
    SatDecision dec = decide_satisfiable(f, cfg, ambient_dim);
    Verdict v;
    v.valid = !dec.satisfiable;
    v.counter_model = std::move(dec.model);
    v.disjuncts_tried = dec.disjuncts_tried;
    v.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return v;
}

namespace {

bool constraint_holds(const SpatialConstraint& k, const Configuration& conf, double tol) {
    auto view = [&](const Term& t) {
        SurfaceCircle c = conf.circle(t.name);
        return t.complemented ? complement(c, conf.sphere.radius) : c;
    };
    QualRelation rel = relation_of(view(k.lhs), view(k.rhs), tol, conf.sphere.radius);
    switch (k.rel) {
        case SpatialRel::P: return rel == QualRelation::P || rel == QualRelation::EQ;
        case SpatialRel::NotP: return rel != QualRelation::P && rel != QualRelation::EQ;
        case SpatialRel::D: return rel == QualRelation::D;
        case SpatialRel::NotD: return rel != QualRelation::D;
    }
    return false;
}

bool statement_holds(const Statement& s, const Configuration& conf, double tol) {
    ConstraintFormula f = translate_statement(s);
    for (const auto& d : f.disjuncts) {
        bool all = true;
        for (const auto& k : d)
            if (!constraint_holds(k, conf, tol)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

} // namespace

bool counter_model_satisfies(const ReasoningTask& t, const Configuration& conf, double tol) {
    for (const auto& p : t.premises)
        if (!statement_holds(p, conf, tol)) return false;
    return statement_holds(negate_conclusion(t.conclusion), conf, tol);
}

std::string CorpusReport::to_csv() const {
    std::ostringstream out;
    out << "task_id,family,dim,verdict,gold,agree,wall_time_s,disjuncts_tried\n";
    char buf[64];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f", r.wall_time_s);
        out << r.task_id << ',' << to_string(r.family) << ',' << r.dim << ','
            << (r.verdict ? "VALID" : "INVALID") << ',' << (r.gold ? "VALID" : "INVALID") << ','
            << (r.agree ? 1 : 0) << ',' << buf << ',' << r.disjuncts_tried << '\n';
    }
    return out.str();
}

std::string CorpusReport::summary_json() const {
    nlohmann::ordered_json j;
    j["accuracy"] = accuracy;
    j["mean_time_valid_s"] = mean_time_valid_s;
    j["mean_time_invalid_s"] = mean_time_invalid_s;
    j["under_5s_invalid"] = under_5s_invalid;
    j["under_120s_valid"] = under_120s_valid;
    return j.dump(2);
}

CorpusReport evaluate_corpus(const std::vector<ReasoningTask>& tasks, const SolverConfig& cfg,
                             const std::vector<int>& dims, int jobs,
                             bool keep_counter_models) {
    if (tasks.empty()) throw std::invalid_argument("corpus is empty");
    if (dims.empty()) throw std::invalid_argument("dimension list is empty");

    const size_t total = tasks.size() * dims.size();
    std::vector<TaskRow> rows(total);

    auto run_one = [&](size_t idx) {
        const ReasoningTask& t = tasks[idx / dims.size()];
        const int dim = dims[idx % dims.size()];
        Verdict v = decide_validity(t, cfg, dim);
        TaskRow row;
        row.task_id = t.id;
        row.family = t.family;
        row.dim = dim;
        row.verdict = v.valid;
        row.gold = t.gold_valid;
        row.agree = v.valid == t.gold_valid;
        row.wall_time_s = v.wall_time_s;
        row.disjuncts_tried = v.disjuncts_tried;
        if (keep_counter_models && !v.valid) row.counter_model = std::move(v.counter_model);
        rows[idx] = std::move(row);
    };

    if (jobs <= 1) {
        for (size_t i = 0; i < total; ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> workers;
        int count = std::min<int>(jobs, static_cast<int>(total));
        workers.reserve(count);
        for (int w = 0; w < count; ++w)
            workers.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) run_one(i);
            });
        for (auto& w : workers) w.join();
    }

    std::stable_sort(rows.begin(), rows.end(), [](const TaskRow& a, const TaskRow& b) {
        if (a.task_id != b.task_id) return a.task_id < b.task_id;
        return a.dim < b.dim;
    });

    CorpusReport report;
    report.rows = std::move(rows);
    long agree = 0, n_valid = 0, n_invalid = 0;
    double t_valid = 0, t_invalid = 0;
    for (const auto& r : report.rows) {
        agree += r.agree;
        if (r.verdict) {
            ++n_valid;
            t_valid += r.wall_time_s;
            if (r.wall_time_s < 120.0) ++report.under_120s_valid;
        } else {
            ++n_invalid;
            t_invalid += r.wall_time_s;
            if (r.wall_time_s < 5.0) ++report.under_5s_invalid;
        }
    }
    report.accuracy = static_cast<double>(agree) / static_cast<double>(report.rows.size());
    report.mean_time_valid_s = n_valid ? t_valid / n_valid : 0.0;
    report.mean_time_invalid_s = n_invalid ? t_invalid / n_invalid : 0.0;
    return report;
}

} // namespace sphnn
