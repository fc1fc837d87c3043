#ifndef SPHNN_BENCH_HPP
#define SPHNN_BENCH_HPP

#include "sphnn/reasoner.hpp"

#include <string>
#include <vector>

namespace sphnn {

struct RunManifest {
    enum class Corpus { Extended16, Classic256, File };
    Corpus corpus = Corpus::Extended16;
    std::string corpus_file;           // when corpus == File
    std::vector<int> dims = {2, 3, 15, 30, 100};
    SolverConfig solver;
    std::string out_dir;
    bool write_csv = true;
    bool write_json = true;
    bool write_svg = false;
    int jobs = 1;
};

void validate(const RunManifest& m);

struct BenchResult {
    CorpusReport report;
    std::vector<std::string> files_written;
};

/// Runs the manifest's corpus over its dimension grid and writes report.csv,
/// summary.json and per-counter-example SVGs (dims 2 and 3) into out_dir.
BenchResult run_bench(const RunManifest& m);

std::vector<ReasoningTask> load_corpus(const RunManifest& m);

} // namespace sphnn

#endif
