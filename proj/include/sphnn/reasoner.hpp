#ifndef SPHNN_REASONER_HPP
#define SPHNN_REASONER_HPP

#include "sphnn/logic.hpp"
#include "sphnn/oracle.hpp"
#include "sphnn/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphnn {

struct Verdict {
    bool valid = false;
    std::optional<Configuration> counter_model;
    double wall_time_s = 0.0;
    int disjuncts_tried = 0;
};

/// Validity by refutation: construct a model of premises && not(conclusion);
/// success refutes the conclusion, failure across all disjuncts proves it.
Verdict decide_validity(const ReasoningTask& t, const SolverConfig& cfg, int ambient_dim);

/// True iff every premise and the negated conclusion hold on `conf`, judged
/// by relation_of alone.
bool counter_model_satisfies(const ReasoningTask& t, const Configuration& conf,
                             double tol = 1e-6);

struct TaskRow {
    std::string task_id;
    CorpusFamily family = CorpusFamily::Extended16;
    int dim = 2;
    bool verdict = false;
    bool gold = false;
    bool agree = false;
    double wall_time_s = 0.0;
    int disjuncts_tried = 0;
    std::optional<Configuration> counter_model; // kept only when requested
};

struct CorpusReport {
    std::vector<TaskRow> rows; // sorted by task id, then dimension
    double accuracy = 0.0;
    double mean_time_valid_s = 0.0;
    double mean_time_invalid_s = 0.0;
    long under_5s_invalid = 0;
    long under_120s_valid = 0;

    std::string to_csv() const;
    std::string summary_json() const;
};

/// Runs every task at every dimension; `jobs` > 1 fans the grid out over
/// worker threads, the merged report order stays deterministic.
CorpusReport evaluate_corpus(const std::vector<ReasoningTask>& tasks, const SolverConfig& cfg,
                             const std::vector<int>& dims, int jobs = 1,
                             bool keep_counter_models = false);

} // namespace sphnn

#endif
