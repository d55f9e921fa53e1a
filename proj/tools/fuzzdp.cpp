// fuzzdp: command-line front end for the fuzzy-set metric library.
//
//   fuzzdp dist a.json b.json
//   fuzzdp example ma|wz71|spike [--n N]
//   fuzzdp modulus|diagnose|net|classify|kuratowski|limit family.json
//
// Exit codes: 0 success, 2 validation failure, 3 numeric non-convergence.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzdp/compactness.hpp"
#include "fuzzdp/errors.hpp"
#include "fuzzdp/format.hpp"
#include "fuzzdp/instances.hpp"
#include "fuzzdp/io.hpp"
#include "fuzzdp/parallel.hpp"
#include "fuzzdp/setgeom.hpp"

namespace fs = std::filesystem;
using namespace fuzzdp;

namespace {

struct RunConfig {
    double p = 1.0;
    std::size_t grid_size = 4096;
    double alpha_min = 0x1p-40;
    double tolerance = kSequenceTolerance;
    fs::path output_dir = "out";
    std::uint64_t seed = 1;
    std::string grid_kind;  // empty: per-command default
    std::vector<double> eps;

    void validate() const {
        PNorm{p};
        if (grid_size < 2) throw ValidationError("--grid must be at least 2");
        if (!(alpha_min > 0 && alpha_min < 1)) throw ValidationError("--alpha-min must lie in (0, 1)");
        if (!(tolerance > 0)) throw ValidationError("--tol must be positive");
    }

    AlphaGrid make_grid(const std::string& fallback) const {
        const std::string kind = grid_kind.empty() ? fallback : grid_kind;
        if (kind == "graded") return AlphaGrid::graded(grid_size, alpha_min);
        if (kind == "uniform") return AlphaGrid::uniform(grid_size, alpha_min);
        if (kind == "tail") return AlphaGrid::with_tail(grid_size, alpha_min);
        if (kind == "regular") {
            // Multiples of 24 keep every breakpoint of the wz71 family on the grid.
            return AlphaGrid::regular((grid_size + 23) / 24 * 24);
        }
        throw ValidationError("unknown --grid-kind '" + kind + "'");
    }
};

bool is_family(const io::Json& j) { return j.is_object() && j.contains("members"); }

Family load_family(const fs::path& path, PNorm p) {
    const io::Json j = io::read_json(path);
    if (!is_family(j)) return Family({io::read_fuzzy(path)}, p, {path.stem().string()});
    auto fam = io::read_family(path);
    return Family(std::move(fam.members), p, std::move(fam.ids));
}

std::vector<double> eps_or_default(const RunConfig& cfg) {
    if (!cfg.eps.empty()) return cfg.eps;
    return {0.5, 0.1, 0.02};
}

int cmd_dist(const RunConfig& cfg, const std::vector<std::string>& files) {
    const FuzzySet a = io::read_fuzzy(files.at(0));
    const FuzzySet b = io::read_fuzzy(files.at(1));
    const PNorm p(cfg.p);
    const double d = dp_distance(a, b, p);
    const bool same = a.grid() == b.grid();
    const std::size_t merged = same ? a.levels() : merge(a.grid(), b.grid()).size();
    std::cout << format_number(d) << "\n";
    std::cout << "p=" << format_number(cfg.p) << " levels_a=" << a.levels()
              << " levels_b=" << b.levels() << " merged=" << merged << " rule="
              << to_string(same ? a.grid().rule() : merge(a.grid(), b.grid()).rule()) << "\n";
    return 0;
}

int cmd_example(const RunConfig& cfg, const std::string& name, unsigned count) {
    const fs::path dir = cfg.output_dir;
    std::vector<std::string> ids, files;
    auto emit = [&](const std::string& id, const FuzzySet& u, bool member) {
        const std::string file = id + ".json";
        io::write_fuzzy(dir / file, u);
        if (member) {
            ids.push_back(id);
            files.push_back(file);
        }
    };

    if (name == "ma") {
        const auto grid = instances::share(cfg.make_grid("graded"));
        const unsigned n = count ? count : 10;
        for (unsigned k = 1; k <= n; ++k) emit("ma_" + std::to_string(k), instances::ma_member(grid, k), true);
        emit("ma_limit", instances::ma_limit(grid), false);
    } else if (name == "wz71") {
        const auto grid = instances::with_level(instances::share(cfg.make_grid("regular")), 1.0 / 3.0);
        const unsigned n = count ? count : 20;
        for (unsigned k = 1; k <= n; ++k)
            emit("wz71_" + std::to_string(k), instances::wz71_member(grid, k), true);
        emit("wz71_u0", instances::wz71_u0(grid), false);
        emit("wz71_v", instances::wz71_v(grid), false);
        emit("wz71_w", instances::wz71_w(grid), false);
    } else if (name == "spike") {
        const auto grid = instances::share(cfg.make_grid("graded"));
        const unsigned n = count ? count : 20;
        for (unsigned k = 1; k <= n; ++k)
            emit("spike_" + std::to_string(k), instances::spike(grid, k, cfg.p), true);
    } else {
        throw ValidationError("unknown example '" + name + "' (expected ma, wz71 or spike)");
    }
    io::write_family(dir / "family.json", ids, files);
    std::cout << "wrote " << ids.size() << " members to " << (dir / "family.json").string() << "\n";
    return 0;
}

int cmd_modulus(const RunConfig& cfg, const std::string& file) {
    const Family U = load_family(file, PNorm(cfg.p));
    io::Json all = io::Json::array();
    const auto eps = eps_or_default(cfg);
    for (std::size_t i = 0; i < U.size(); ++i) {
        const auto h = default_h_grid(U[i].grid());
        const auto rep = modulus_report(U[i], i, h, U.p(), eps);
        io::Json j = io::to_json(rep);
        j["id"] = U.id(i);
        all.push_back(std::move(j));
        io::write_text(cfg.output_dir / ("modulus_" + U.id(i) + ".csv"), io::modulus_csv(rep));
        std::cout << U.id(i);
        for (const auto& [e, d] : rep.delta_for_eps)
            std::cout << " eps=" << format_number(e) << ":delta=" << (d ? format_number(*d) : "FAIL");
        std::cout << "\n";
    }
    io::write_json(cfg.output_dir / "modulus.json", all);
    return 0;
}

int cmd_diagnose(const RunConfig& cfg, const std::string& file) {
    const Family U = load_family(file, PNorm(cfg.p));
    DiagnoseOptions opts;
    opts.delta_floor = cfg.tolerance;
    const auto rep = diagnose(U, eps_or_default(cfg), opts);
    io::write_json(cfg.output_dir / "diagnose.json", io::to_json(rep, U));
    io::write_text(cfg.output_dir / "eps_delta.csv", io::eps_delta_csv(rep));
    std::cout << "bound_M=" << format_number(rep.bound_M) << " (member " << U.id(rep.bound_member) << ")\n";
    for (const auto& e : rep.equi) {
        std::cout << "eps=" << format_number(e.eps) << " ";
        if (e.pass) {
            std::cout << "delta=" << format_number(*e.delta) << "\n";
        } else {
            std::cout << "FAIL";
            if (e.witness)
                std::cout << " witness member=" << U.id(e.witness->member)
                          << " h=" << format_number(e.witness->h)
                          << " omega=" << format_number(e.witness->omega);
            std::cout << "\n";
        }
    }
    std::cout << "verdict=" << to_string(rep.verdict) << "\n";
    return 0;
}

int cmd_net(const RunConfig& cfg, const std::string& file) {
    const Family U = load_family(file, PNorm(cfg.p));
    const double eps = cfg.eps.empty() ? 0.25 : cfg.eps.front();
    const auto net = epsilon_net(U, eps);
    io::write_json(cfg.output_dir / "net.json", io::to_json(net, U));
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < U.size(); ++i) ids.push_back(U.id(i));
    io::write_text(cfg.output_dir / "distances.csv",
                   io::distance_csv(par::distance_matrix(U.members(), U.p()), ids));
    std::cout << "centers=" << net.center_ids.size() << " radius=" << format_number(net.radius) << "\n";
    return 0;
}

int cmd_classify(const RunConfig& cfg, const std::string& file) {
    const Family U = load_family(file, PNorm(cfg.p));
    io::Json all = io::Json::array();
    for (std::size_t i = 0; i < U.size(); ++i) {
        const auto c = classify(U[i]);
        io::Json j;
        j["id"] = U.id(i);
        j.update(io::to_json(c));
        all.push_back(std::move(j));
        std::cout << U.id(i) << " " << to_string(c.label) << "\n";
    }
    io::write_json(cfg.output_dir / "classify.json", all);
    return 0;
}

int cmd_kuratowski(const RunConfig& cfg, const std::string& file, double level) {
    const Family U = load_family(file, PNorm(cfg.p));
    std::vector<CutSet> seq;
    for (std::size_t i = 0; i < U.size(); ++i) seq.push_back(cut(U[i], level));
    const auto r = kuratowski(seq, cfg.tolerance);
    io::write_json(cfg.output_dir / "kuratowski.json", io::to_json(r));
    std::cout << "liminf_points=" << r.liminf_points.size() << " limsup_points=" << r.limsup_points.size()
              << " resolution=" << format_number(r.resolution) << "\n";
    return 0;
}

int cmd_limit(const RunConfig& cfg, const std::string& file) {
    const Family U = load_family(file, PNorm(cfg.p));
    DiagonalOptions opts;
    opts.tolerance = cfg.tolerance;
    const auto r = diagonal_limit(U, {}, opts);
    io::write_json(cfg.output_dir / "limit.json", io::to_json(r));
    io::write_fuzzy(cfg.output_dir / "limit_set.json", r.limit);
    std::cout << "subsequence=" << r.subsequence.size() << " rounds=" << r.rounds
              << " unresolved_levels=" << r.unresolved_levels.size()
              << " support=" << to_string(r.limit.support())
              << " last_distance=" << format_number(r.tail_distances.back()) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Metric diagnostics for alpha-cut fuzzy sets"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string out_dir = "out";
    app.add_option("--p", cfg.p, "exponent p >= 1")->capture_default_str();
    app.add_option("--grid", cfg.grid_size, "alpha-grid size for generated sets")->capture_default_str();
    app.add_option("--alpha-min", cfg.alpha_min, "smallest alpha level of generated grids");
    app.add_option("--tol", cfg.tolerance, "tolerance (equi-continuity floor, Kuratowski lattice)")
        ->capture_default_str();
    app.add_option("--out", out_dir, "output directory")->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--grid-kind", cfg.grid_kind, "graded | uniform | tail | regular");
    app.add_option("--eps", cfg.eps, "epsilon values (diagnose, modulus, net)")->delimiter(',');

    std::vector<std::string> dist_files;
    auto* dist = app.add_subcommand("dist", "print d_p between two fuzzy-set files");
    dist->add_option("files", dist_files)->required()->expected(2);

    std::string example_name;
    unsigned example_count = 0;
    auto* example = app.add_subcommand("example", "write a generated example family");
    example->add_option("name", example_name, "ma | wz71 | spike")->required();
    example->add_option("--n", example_count, "number of members");

    std::string family_file;
    auto* modulus = app.add_subcommand("modulus", "p-mean modulus curves");
    auto* diag = app.add_subcommand("diagnose", "uniform bound and equi-left-continuity");
    auto* net = app.add_subcommand("net", "greedy epsilon-net");
    auto* cls = app.add_subcommand("classify", "space taxonomy per member");
    auto* kur = app.add_subcommand("kuratowski", "Kuratowski limits of the cuts at one level");
    auto* lim = app.add_subcommand("limit", "diagonal limit candidate of a sequence");
    for (auto* sc : {modulus, diag, net, cls, kur, lim}) sc->add_option("family", family_file)->required();
    double kur_level = 1.0;
    kur->add_option("--level", kur_level, "alpha level of the cut sequence")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.output_dir = out_dir;
        cfg.validate();
        if (*dist) return cmd_dist(cfg, dist_files);
        if (*example) return cmd_example(cfg, example_name, example_count);
        if (*modulus) return cmd_modulus(cfg, family_file);
        if (*diag) return cmd_diagnose(cfg, family_file);
        if (*net) return cmd_net(cfg, family_file);
        if (*cls) return cmd_classify(cfg, family_file);
        if (*kur) return cmd_kuratowski(cfg, family_file, kur_level);
        if (*lim) return cmd_limit(cfg, family_file);
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
