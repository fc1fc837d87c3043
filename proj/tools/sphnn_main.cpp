// Command-line front end: decide single arguments, construct and render
// models, generate corpora, and run the benchmark harness.

#include "sphnn/bench.hpp"
#include "sphnn/parser.hpp"
#include "sphnn/render.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace sphnn;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

struct CommonOpts {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

SolverConfig solver_from_json(const nlohmann::json& j) {
    SolverConfig cfg;
    auto get = [&j](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    get("learning_rate", cfg.learning_rate);
    get("loss_tol", cfg.loss_tol);
    get("strict_margin", cfg.strict_margin);
    get("atomic_radius", cfg.atomic_radius);
    get("init_radius", cfg.init_radius);
    if (j.contains("max_epochs")) cfg.max_epochs = j.at("max_epochs").get<int>();
    if (j.contains("steps_per_constraint"))
        cfg.steps_per_constraint = j.at("steps_per_constraint").get<long>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    return cfg;
}

SolverConfig resolve_solver(const CommonOpts& opts) {
    SolverConfig cfg;
    if (!opts.config_path.empty()) cfg = solver_from_json(nlohmann::json::parse(read_file(opts.config_path)));
    if (opts.seed_given)
        cfg.seed = opts.seed;
    else if (const char* env = std::getenv("SPHNN_SEED"))
        cfg.seed = std::strtoull(env, nullptr, 10);
    validate(cfg);
    return cfg;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) dims.push_back(std::stoi(item));
    return dims;
}

int cmd_decide(const std::vector<std::string>& premises, const std::string& conclusion,
               const std::vector<std::string>& atomic, int dim, const CommonOpts& opts,
               const std::string& out_path) {
    SolverConfig cfg = resolve_solver(opts);
    ReasoningTask task;
    task.id = "cli";
    for (const auto& p : premises) task.premises.push_back(parse_statement(p, atomic));
    task.conclusion = parse_statement(conclusion, atomic);
    Verdict v = decide_validity(task, cfg, dim);
    if (v.valid) {
        std::cout << "VALID\n";
        return 0;
    }
    std::cout << "INVALID\n";
    if (v.counter_model) {
        std::string json = configuration_to_json(*v.counter_model);
        if (!out_path.empty()) {
            write_file(out_path, json + "\n");
            std::cout << "counter-model: " << out_path << "\n";
        } else {
            std::cout << json << "\n";
        }
    }
    return 1;
}

int cmd_construct(const std::vector<std::string>& statements,
                  const std::vector<std::string>& atomic, int dim, const CommonOpts& opts,
                  const std::string& out_path) {
    SolverConfig cfg = resolve_solver(opts);
    ConstraintFormula f{{Conjunction{}}};
    for (const auto& s : statements) f = conjoin(f, translate_statement(parse_statement(s, atomic)));
    for (auto& d : f.disjuncts) d = normalize(d);
    SatDecision dec = decide_satisfiable(f, cfg, dim);
    if (!dec.satisfiable) {
        std::cout << "UNSATISFIABLE\n";
        return 1;
    }
    std::cout << "SATISFIABLE\n";
    std::string json = configuration_to_json(*dec.model);
    if (!out_path.empty()) {
        write_file(out_path, json + "\n");
        std::cout << "model: " << out_path << "\n";
    } else {
        std::cout << json << "\n";
    }
    return 0;
}

int cmd_render(const std::string& in_path, const std::string& out_path, int width, int height) {
    Configuration conf = configuration_from_json(read_file(in_path));
    RenderSpec spec;
    spec.width = width;
    spec.height = height;
    spec.labels = RenderSpec::LabelPlacement::Centroid;
    std::string svg = render_svg(conf, spec);
    if (!out_path.empty())
        write_file(out_path, svg);
    else
        std::cout << svg;
    return 0;
}

int cmd_gen_corpus(const std::string& corpus, const std::string& out_path) {
    std::vector<ReasoningTask> tasks;
    if (corpus == "extended16")
        tasks = generate_extended16();
    else if (corpus == "classic256")
        tasks = generate_classic256();
    else
        throw std::runtime_error("unknown corpus '" + corpus + "'");
    std::string jsonl = corpus_to_jsonl(tasks);
    if (!out_path.empty())
        write_file(out_path, jsonl);
    else
        std::cout << jsonl;
    return 0;
}

int cmd_bench(RunManifest m, const CommonOpts& opts, const std::string& formats,
              bool paper_grid) {
    m.solver = resolve_solver(opts);
    if (paper_grid)
        for (int d : {200, 1000, 2000, 3000, 10000}) m.dims.push_back(d);
    m.write_csv = formats.find("csv") != std::string::npos;
    m.write_json = formats.find("json") != std::string::npos;
    m.write_svg = formats.find("svg") != std::string::npos;
    BenchResult res = run_bench(m);
    const CorpusReport& r = res.report;
    std::printf("runs: %zu  accuracy: %.4f\n", r.rows.size(), r.accuracy);
    std::printf("mean time valid: %.2fs  invalid: %.2fs\n", r.mean_time_valid_s,
                r.mean_time_invalid_s);
    std::printf("invalid under 5s: %ld  valid under 120s: %ld\n", r.under_5s_invalid,
                r.under_120s_valid);
    for (const auto& f : res.files_written) std::printf("wrote %s\n", f.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Euler-diagram construction on a sphere for syllogistic validity"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--config", opts.config_path, "JSON file with solver settings");
    auto* seed_opt = app.add_option("--seed", opts.seed, "RNG seed (fallback: SPHNN_SEED)");

    // decide
    std::vector<std::string> premises, atomic;
    std::string conclusion, out_path;
    int dim = 3;
    auto* decide = app.add_subcommand("decide", "decide the validity of an argument");
    decide->add_option("premises", premises, "premise statements")->required();
    decide->add_option("--conclusion", conclusion, "candidate conclusion")->required();
    decide->add_option("--atomic", atomic, "names of atomic terms");
    decide->add_option("--dim", dim, "ambient dimension");
    decide->add_option("--out", out_path, "counter-model JSON path");

    // construct
    std::vector<std::string> statements;
    std::string cmodel_out;
    int cdim = 3;
    auto* construct_cmd = app.add_subcommand("construct", "construct a model of statements");
    construct_cmd->add_option("statements", statements, "statements to satisfy")->required();
    construct_cmd->add_option("--atomic", atomic, "names of atomic terms");
    construct_cmd->add_option("--dim", cdim, "ambient dimension");
    construct_cmd->add_option("--out", cmodel_out, "model JSON path");

    // render
    std::string render_in, render_out;
    int width = 640, height = 640;
    auto* render_cmd = app.add_subcommand("render", "render a configuration JSON as SVG");
    render_cmd->add_option("input", render_in, "configuration JSON file")->required();
    render_cmd->add_option("--out", render_out, "SVG output path");
    render_cmd->add_option("--width", width, "canvas width");
    render_cmd->add_option("--height", height, "canvas height");

    // gen-corpus
    std::string corpus_name = "extended16", corpus_out;
    auto* gen = app.add_subcommand("gen-corpus", "emit a task corpus as JSONL");
    gen->add_option("--corpus", corpus_name, "extended16 or classic256")->required();
    gen->add_option("--out", corpus_out, "output path");

    // bench
    RunManifest manifest;
    std::string bench_corpus = "extended16", bench_file, bench_dims, bench_out, formats = "csv,json";
    bool paper_grid = false;
    int jobs = 1;
    auto* bench = app.add_subcommand("bench", "run a corpus over a dimension grid");
    bench->add_option("--corpus", bench_corpus, "extended16, classic256 or file");
    bench->add_option("--file", bench_file, "JSONL corpus path (with --corpus file)");
    bench->add_option("--dims", bench_dims, "comma-separated dimensions (default 2,3,15,30,100)");
    bench->add_option("--out", bench_out, "output directory")->required();
    bench->add_option("--format", formats, "any of csv,json,svg (comma separated)");
    bench->add_option("--jobs", jobs, "parallel workers");
    bench->add_flag("--paper-grid", paper_grid, "extend the grid to dimensions 200..10000");

    try {
        app.parse(argc, argv);
        opts.seed_given = seed_opt->count() > 0;

        if (*decide) return cmd_decide(premises, conclusion, atomic, dim, opts, out_path);
        if (*construct_cmd) return cmd_construct(statements, atomic, cdim, opts, cmodel_out);
        if (*render_cmd) return cmd_render(render_in, render_out, width, height);
        if (*gen) return cmd_gen_corpus(corpus_name, corpus_out);
        if (*bench) {
            if (bench_corpus == "extended16")
                manifest.corpus = RunManifest::Corpus::Extended16;
            else if (bench_corpus == "classic256")
                manifest.corpus = RunManifest::Corpus::Classic256;
            else if (bench_corpus == "file")
                manifest.corpus = RunManifest::Corpus::File;
            else
                throw std::runtime_error("unknown corpus '" + bench_corpus + "'");
            manifest.corpus_file = bench_file;
            if (!bench_dims.empty()) manifest.dims = parse_dims(bench_dims);
            manifest.out_dir = bench_out;
            manifest.jobs = jobs;
            return cmd_bench(manifest, opts, formats, paper_grid);
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
