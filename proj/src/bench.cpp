#include "sphnn/bench.hpp"

#include "sphnn/parser.hpp"
#include "sphnn/render.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sphnn {

void validate(const RunManifest& m) {
    if (m.dims.empty()) throw std::invalid_argument("manifest needs at least one dimension");
    for (int d : m.dims)
        if (d < 2) throw std::invalid_argument("dimensions must be >= 2");
    if (m.corpus == RunManifest::Corpus::File && m.corpus_file.empty())
        throw std::invalid_argument("file corpus needs a path");
    if (m.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
    validate(m.solver);
}

std::vector<ReasoningTask> load_corpus(const RunManifest& m) {
    switch (m.corpus) {
        case RunManifest::Corpus::Extended16: return generate_extended16();
        case RunManifest::Corpus::Classic256: return generate_classic256();
        case RunManifest::Corpus::File: {
            std::ifstream in(m.corpus_file);
            if (!in) throw std::runtime_error("cannot read corpus file " + m.corpus_file);
            std::stringstream buf;
            buf << in.rdbuf();
            return corpus_from_jsonl(buf.str());
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::string>& written) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    written.push_back(path.string());
}

} // namespace

BenchResult run_bench(const RunManifest& m) {
    validate(m);
    std::vector<ReasoningTask> tasks = load_corpus(m);

    bool want_models = m.write_svg;
    CorpusReport report = evaluate_corpus(tasks, m.solver, m.dims, m.jobs, want_models);

    BenchResult result;
    if (!m.out_dir.empty()) {
        std::filesystem::path dir(m.out_dir);
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) throw std::runtime_error("cannot create output directory " + m.out_dir);

        if (m.write_csv) write_file(dir / "report.csv", report.to_csv(), result.files_written);
        if (m.write_json)
            write_file(dir / "summary.json", report.summary_json() + "\n", result.files_written);
        if (m.write_svg) {
            std::filesystem::create_directories(dir / "svg", ec);
            for (const auto& row : report.rows) {
                if (row.verdict || !row.counter_model) continue;
                if (row.dim != 2 && row.dim != 3) continue;
                std::string name = row.task_id + "-dim" + std::to_string(row.dim) + ".svg";
                write_file(dir / "svg" / name, render_svg(*row.counter_model),
                           result.files_written);
            }
        }
    }
    for (auto& row : report.rows) row.counter_model.reset();
    result.report = std::move(report);
    return result;
}

} // namespace sphnn
