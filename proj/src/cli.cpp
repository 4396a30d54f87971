#include "cover/cli.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cover/errors.hpp"
#include "cover/generators.hpp"
#include "cover/instance.hpp"
#include "cover/scoring.hpp"
#include "cover/solver_cliquecover.hpp"
#include "cover/solver_greedy.hpp"
#include "cover/solver_setcover.hpp"
#include "cover/svg.hpp"

namespace fs = std::filesystem;

namespace cover {
namespace {

SteinerLevel parse_steiner(const std::string& s) {
    if (s == "none") return SteinerLevel::None;
    if (s == "ext") return SteinerLevel::EdgeExtensions;
    if (s == "extx") return SteinerLevel::ExtensionIntersections;
    throw InvalidParams("unknown steiner level '" + s + "'");
}

CollectionGen parse_gen(const std::string& s) {
    if (s == "cliques") return CollectionGen::Cliques;
    if (s == "bloat") return CollectionGen::Bloat;
    if (s == "both") return CollectionGen::Both;
    throw InvalidParams("unknown collection generator '" + s + "'");
}

struct SolveOptions {
    std::string algo = "greedy";
    std::uint64_t seed = 0;
    int restarts = 1;
    std::string steiner = "none";
    std::string gen = "both";
    std::size_t cap = 4000;
    long steps = -1;
};

Solution run_solver(const Instance& inst, const SolveOptions& opt) {
    if (opt.algo == "greedy") return solve_greedy_merge_best(inst, opt.seed, opt.restarts);
    if (opt.algo == "cliquecover")
        return solve_cliquecover(inst, parse_steiner(opt.steiner), opt.seed);
    if (opt.algo == "setcover") {
        SetCoverConfig cfg;
        cfg.gen = parse_gen(opt.gen);
        cfg.cap = opt.cap;
        cfg.policy = parse_steiner(opt.steiner);
        cfg.schedule.steps = opt.steps;
        cfg.seed = opt.seed;
        return solve_setcover(inst, cfg);
    }
    throw InvalidParams("unknown algorithm '" + opt.algo + "'");
}

int cmd_generate(const std::string& kind, std::uint64_t seed, const std::string& out, long holes,
                 long width, long height, long hole_radius, int cols, int rows, long cell_size) {
    Instance inst;
    if (kind == "cheese" || kind == "ccheese") {
        CheeseParams p;
        p.target_holes = holes;
        p.field_width = width;
        p.field_height = height;
        p.hole_radius = hole_radius;
        p.seed = seed;
        inst = kind == "cheese" ? gen_cheese(p) : gen_ccheese(p);
    } else if (kind == "maze") {
        MazeParams p;
        p.grid_cols = cols;
        p.grid_rows = rows;
        p.cell_size = cell_size;
        p.seed = seed;
        inst = gen_maze(p);
    } else {
        throw InvalidParams("unknown generator kind '" + kind + "'");
    }
    save_text_file(out, serialize_instance(inst));
    std::cout << "generated " << inst.name << " -> " << out << "\n";
    return 0;
}

int cmd_verify(const std::string& inst_path, const std::string& sol_path) {
    Instance inst = load_instance_file(inst_path);
    Solution sol = load_solution_file(sol_path);
    CoverReport report = verify_solution(inst, sol);
    if (report.valid) {
        std::cout << "VALID k=" << report.piece_count << "\n";
        return 0;
    }
    const CoverFailure& f = report.failures.front();
    switch (f.kind) {
        case CoverFailure::Kind::Uncovered:
            std::cout << "INVALID uncovered at " << f.witness->str() << "\n";
            break;
        case CoverFailure::Kind::NonConvex:
            std::cout << "INVALID piece " << f.piece_index << " not convex\n";
            break;
        case CoverFailure::Kind::NotContained:
            std::cout << "INVALID piece " << f.piece_index << " leaves the region at "
                      << f.witness->str() << "\n";
            break;
    }
    return 1;
}

int cmd_bench(const std::string& inst_dir, std::uint64_t seed, const std::string& out) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(inst_dir))
        if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InvalidParams("no instances in " + inst_dir);

    const std::vector<std::string> algos = {"greedy", "cliquecover", "setcover"};
    struct Row {
        std::string instance, algo;
        std::size_t pieces = 0;
        bool valid = false;
    };
    std::vector<Row> rows(files.size() * algos.size());
    parallel_for(rows.size(), worker_pool_size(), [&](std::size_t i) {
        const fs::path& file = files[i / algos.size()];
        const std::string& algo = algos[i % algos.size()];
        Instance inst = load_instance_file(file.string());
        SolveOptions opt;
        opt.algo = algo;
        opt.seed = seed;
        Solution sol = run_solver(inst, opt);
        rows[i] = {inst.name, algo, sol.pieces.size(), verify_solution(inst, sol).valid};
    });

    std::ostringstream os;
    os << "instance\talgo\tpieces\tvalid\n";
    for (const Row& r : rows)
        os << r.instance << '\t' << r.algo << '\t' << r.pieces << '\t'
           << (r.valid ? "yes" : "no") << '\n';
    std::cout << os.str();
    if (!out.empty()) save_text_file(out, os.str());
    return 0;
}

int dispatch(int argc, const char* const* argv) {
    CLI::App app{"convex polygon cover toolkit"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "generate a benchmark instance");
    std::string g_kind = "cheese", g_out = "instance.json";
    std::uint64_t g_seed = 0;
    long g_holes = 10, g_width = 100, g_height = 100, g_radius = 3, g_cell = 10;
    int g_cols = 4, g_rows = 4;
    gen->add_option("--kind", g_kind, "cheese|ccheese|maze")->required();
    gen->add_option("--seed", g_seed);
    gen->add_option("--out", g_out)->required();
    gen->add_option("--holes", g_holes);
    gen->add_option("--width", g_width);
    gen->add_option("--height", g_height);
    gen->add_option("--hole-radius", g_radius);
    gen->add_option("--cols", g_cols);
    gen->add_option("--rows", g_rows);
    gen->add_option("--cell-size", g_cell);

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance");
    std::string s_in, s_out = "solution.json";
    SolveOptions opt;
    solve->add_option("-i,--instance", s_in)->required();
    solve->add_option("-o,--out", s_out);
    solve->add_option("--algo", opt.algo, "greedy|cliquecover|setcover");
    solve->add_option("--seed", opt.seed);
    solve->add_option("--restarts", opt.restarts);
    solve->add_option("--steiner", opt.steiner, "none|ext|extx");
    solve->add_option("--gen", opt.gen, "cliques|bloat|both");
    solve->add_option("--cap", opt.cap);
    solve->add_option("--steps", opt.steps);

    // verify
    auto* verify = app.add_subcommand("verify", "verify a solution");
    std::string v_inst, v_sol;
    verify->add_option("-i,--instance", v_inst)->required();
    verify->add_option("-s,--solution", v_sol)->required();

    // score
    auto* score = app.add_subcommand("score", "leaderboard over a solutions tree");
    std::string sc_inst, sc_sols, sc_json;
    score->add_option("--instances", sc_inst)->required();
    score->add_option("--solutions", sc_sols)->required();
    score->add_option("--json", sc_json, "also write the machine-readable document here");

    // render
    auto* render = app.add_subcommand("render", "render instance (and solution) to SVG");
    std::string r_inst, r_sol, r_out = "out.svg";
    bool r_allow_invalid = false;
    render->add_option("-i,--instance", r_inst)->required();
    render->add_option("-s,--solution", r_sol);
    render->add_option("-o,--out", r_out);
    render->add_flag("--allow-invalid", r_allow_invalid);

    // bench
    auto* bench = app.add_subcommand("bench", "run all solvers over an instance directory");
    std::string b_dir, b_out;
    std::uint64_t b_seed = 0;
    bench->add_option("--instances", b_dir)->required();
    bench->add_option("--seed", b_seed);
    bench->add_option("--out", b_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (gen->parsed())
        return cmd_generate(g_kind, g_seed, g_out, g_holes, g_width, g_height, g_radius, g_cols,
                            g_rows, g_cell);
    if (solve->parsed()) {
        Instance inst = load_instance_file(s_in);
        Solution sol = run_solver(inst, opt);
        save_text_file(s_out, serialize_solution(sol));
        std::cout << "solved " << inst.name << " with " << opt.algo << ": k="
                  << sol.pieces.size() << " -> " << s_out << "\n";
        return 0;
    }
    if (verify->parsed()) return cmd_verify(v_inst, v_sol);
    if (score->parsed()) {
        ScoreTable table = build_leaderboard(sc_inst, sc_sols);
        std::cout << leaderboard_table(table);
        if (!sc_json.empty()) save_text_file(sc_json, leaderboard_json(table));
        return 0;
    }
    if (render->parsed()) {
        Instance inst = load_instance_file(r_inst);
        std::optional<Solution> sol;
        if (!r_sol.empty()) {
            sol = load_solution_file(r_sol);
            if (!r_allow_invalid && !verify_solution(inst, *sol).valid)
                throw InvalidSolution("solution is invalid; pass --allow-invalid to render anyway");
        }
        save_text_file(r_out, render_svg(inst, sol));
        std::cout << "rendered -> " << r_out << "\n";
        return 0;
    }
    if (bench->parsed()) return cmd_bench(b_dir, b_seed, b_out);
    return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return dispatch(argc, argv);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidParams& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InvalidSolution& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const WrongInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const MissingInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("cover_cli");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cover
