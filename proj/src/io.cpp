#include "fuzzdp/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzdp/errors.hpp"
#include "fuzzdp/format.hpp"

namespace fuzzdp::io {

namespace {

// JSON has no inf/nan; those go out as strings.
Json num(double v) {
    if (std::isfinite(v)) return v;
    return format_number(v);
}

Json point_json(Point2 p) { return Json::array({p.x, p.y}); }

Json points_json(const std::vector<Point2>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

std::vector<Point2> read_points(const Json& a) {
    std::vector<Point2> pts;
    for (const auto& p : a) {
        if (!p.is_array() || p.size() != 2) throw ValidationError("a point must be [x, y]");
        pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return pts;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FuzzySet parse_fuzzy(const Json& j, const FuzzySet::GridPtr& hint) {
    if (!j.is_object()) throw ValidationError("fuzzy set must be a JSON object");
    const int dim = j.at("dim").get<int>();
    if (dim != 1 && dim != 2) throw ValidationError("dim must be 1 or 2");
    const SupportKind support = support_from_string(j.value("support", std::string("bounded")));
    const Quadrature rule = quadrature_from_string(j.value("quadrature", std::string("step")));
    const Json& levels = j.at("levels");
    if (!levels.is_array() || levels.empty()) throw ValidationError("levels must be a nonempty array");

    std::vector<double> alphas;
    alphas.reserve(levels.size());
    for (const auto& l : levels) alphas.push_back(l.at("alpha").get<double>());
    FuzzySet::GridPtr grid;
    if (hint && hint->rule() == rule && std::equal(alphas.begin(), alphas.end(),
                                                   hint->levels().begin(), hint->levels().end()))
        grid = hint;
    else
        grid = std::make_shared<const AlphaGrid>(std::move(alphas), rule);
    const std::size_t n = grid->size();

    auto empty_level = [&](std::size_t k) {
        if (k + 1 == n) throw EmptyTopCut();
        throw NestednessViolation(grid->level(k), grid->level(k + 1));
    };

    if (dim == 1) {
        std::vector<Interval> pieces;
        std::vector<std::uint32_t> offsets{0};
        offsets.reserve(n + 1);
        for (std::size_t k = 0; k < n; ++k) {
            const Json& iv = levels[k].at("intervals");
            if (!iv.is_array()) throw ValidationError("intervals must be an array");
            for (const auto& p : iv) {
                if (!p.is_array() || p.size() != 2) throw ValidationError("an interval must be [lo, hi]");
                pieces.push_back({p[0].get<double>(), p[1].get<double>()});
            }
            offsets.push_back(static_cast<std::uint32_t>(pieces.size()));
        }
        return FuzzySet(grid, std::move(pieces), std::move(offsets), support);
    }

    std::vector<CutSet> cuts;
    cuts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Json& l = levels[k];
        if (l.contains("polygon")) {
            auto ring = read_points(l.at("polygon"));
            if (ring.empty()) empty_level(k);
            cuts.push_back(CutSet::polygon_or_points(std::move(ring)));
        } else if (l.contains("points")) {
            auto pts = read_points(l.at("points"));
            if (pts.empty()) empty_level(k);
            cuts.push_back(CutSet(PointCloud{std::move(pts)}));
        } else {
            throw ValidationError("planar level needs \"polygon\" or \"points\"");
        }
    }
    return FuzzySet(grid, std::move(cuts), support);
}

}  // namespace

Json to_json(const FuzzySet& u) {
    Json j;
    j["dim"] = u.dim();
    j["support"] = std::string(to_string(u.support()));
    j["quadrature"] = std::string(to_string(u.grid().rule()));
    Json levels = Json::array();
    for (std::size_t k = 0; k < u.levels(); ++k) {
        Json l;
        l["alpha"] = u.grid().level(k);
        if (u.dim() == 1) {
            Json iv = Json::array();
            for (const auto& p : u.pieces_at(k)) iv.push_back(Json::array({p.lo, p.hi}));
            l["intervals"] = std::move(iv);
        } else {
            const CutSet& c = u.planar_at(k);
            if (c.kind() == CutSet::Kind::polygon)
                l["polygon"] = points_json(c.polygon().vertices());
            else
                l["points"] = points_json(c.points().points);
        }
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    return j;
}

FuzzySet fuzzy_from_json(const Json& j, const FuzzySet::GridPtr& grid_hint) {
    try {
        return parse_fuzzy(j, grid_hint);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed fuzzy set: ") + e.what());
    }
}

Json parse_text(const std::string& text, const std::string& origin) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ValidationError(origin + ": line " + std::to_string(line) + ", column " +
                              std::to_string(col) + ": invalid JSON");
    }
}

Json read_json(const std::filesystem::path& path) { return parse_text(read_file(path), path.string()); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path.string());
    out << text;
}

void write_json(const std::filesystem::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

FuzzySet read_fuzzy(const std::filesystem::path& path) {
    try {
        return fuzzy_from_json(read_json(path));
    } catch (const NestednessViolation&) {
        throw;
    } catch (const EmptyTopCut&) {
        throw;
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

void write_fuzzy(const std::filesystem::path& path, const FuzzySet& u) { write_json(path, to_json(u)); }

LoadedFamily read_family(const std::filesystem::path& path) {
    const Json j = read_json(path);
    LoadedFamily fam;
    try {
        const Json& members = j.at("members");
        if (!members.is_array() || members.empty())
            throw ValidationError("family needs a nonempty \"members\" array");
        FuzzySet::GridPtr hint;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const Json& m = members[i];
            const std::string id = m.contains("id") ? m["id"].is_string() ? m["id"].get<std::string>()
                                                                          : m["id"].dump()
                                                    : std::to_string(i);
            try {
                Json set = m.contains("set") ? m.at("set")
                                             : read_json(path.parent_path() / m.at("file").get<std::string>());
                fam.members.push_back(fuzzy_from_json(set, hint));
                hint = fam.members.back().grid_ptr();
            } catch (const NestednessViolation& e) {
                throw ValidationError("member " + id + ": " + e.what());
            } catch (const ValidationError& e) {
                throw ValidationError("member " + id + ": " + e.what());
            } catch (const nlohmann::json::exception& e) {
                throw ValidationError("member " + id + ": " + e.what());
            }
            fam.ids.push_back(id);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
    return fam;
}

void write_family(const std::filesystem::path& path, const std::vector<std::string>& ids,
                  const std::vector<std::string>& files) {
    Json members = Json::array();
    for (std::size_t i = 0; i < ids.size(); ++i) {
        Json m;
        m["id"] = ids[i];
        m["file"] = files[i];
        members.push_back(std::move(m));
    }
    Json j;
    j["members"] = std::move(members);
    write_json(path, j);
}

Json to_json(const CompactnessReport& r, const Family& U) {
    Json j;
    j["p"] = U.p().value();
    j["members"] = U.size();
    j["bound_M"] = num(r.bound_M);
    j["bound_member"] = U.id(r.bound_member);
    j["bound_limit"] = num(r.bound_limit);
    j["bounded"] = r.bounded;
    j["delta_floor"] = num(r.delta_floor);
    Json eq = Json::array();
    for (const auto& e : r.equi) {
        Json x;
        x["eps"] = e.eps;
        x["pass"] = e.pass;
        x["delta"] = e.delta ? num(*e.delta) : Json();
        if (e.witness) {
            Json w;
            w["member"] = U.id(e.witness->member);
            w["h"] = e.witness->h;
            w["omega"] = num(e.witness->omega);
            x["witness"] = std::move(w);
        }
        eq.push_back(std::move(x));
    }
    j["equi_delta"] = std::move(eq);
    j["verdict"] = std::string(to_string(r.verdict));
    j["closure_condition"] = "not decidable from finite data; only finite-family proxies are reported";
    return j;
}

Json to_json(const NetResult& r, const Family& U) {
    Json j;
    j["eps"] = r.eps;
    Json centers = Json::array();
    for (auto c : r.center_ids) centers.push_back(U.id(c));
    j["centers"] = std::move(centers);
    j["radius"] = num(r.radius);
    Json as = Json::array();
    for (const auto& a : r.assignments) {
        Json x;
        x["member"] = U.id(a.member);
        x["center"] = U.id(a.center);
        x["distance"] = num(a.distance);
        as.push_back(std::move(x));
    }
    j["assignments"] = std::move(as);
    return j;
}

Json to_json(const ModulusReport& r) {
    Json j;
    j["u_id"] = r.u_id;
    Json curve = Json::array();
    for (std::size_t i = 0; i < r.h_grid.size(); ++i) curve.push_back(Json::array({r.h_grid[i], num(r.omega[i])}));
    j["curve"] = std::move(curve);
    Json d = Json::array();
    for (const auto& [eps, delta] : r.delta_for_eps) {
        Json x;
        x["eps"] = eps;
        x["delta"] = delta ? num(*delta) : Json();
        d.push_back(std::move(x));
    }
    j["delta_for_eps"] = std::move(d);
    return j;
}

Json to_json(const SpaceClass& c) {
    Json j;
    j["label"] = std::string(to_string(c.label));
    j["all_convex"] = c.all_convex;
    j["all_star_shaped"] = c.all_star_shaped;
    j["common_kernel"] = c.common_kernel;
    j["origin_in_kernels"] = c.origin_in_kernels;
    j["kernel_point"] = c.kernel_point ? point_json(*c.kernel_point) : Json();
    j["violation_level"] = c.violation_level ? Json(*c.violation_level) : Json();
    j["violation"] = c.violation;
    return j;
}

Json to_json(const DiagonalResult& r) {
    Json j;
    j["subsequence"] = r.subsequence;
    j["rounds"] = r.rounds;
    j["support"] = std::string(to_string(r.limit.support()));
    j["unresolved_levels"] = r.unresolved_levels.size();
    Json d = Json::array();
    for (double v : r.tail_distances) d.push_back(num(v));
    j["tail_distances"] = std::move(d);
    j["limit"] = to_json(r.limit);
    return j;
}

Json to_json(const TruncationReport& r) {
    Json j;
    j["tolerance"] = r.tolerance;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["r"] = row.r;
        x["converges"] = row.converges;
        x["plateau"] = row.plateau;
        x["level_fraction"] = row.level_fraction;
        x["odd_converges"] = row.odd_converges;
        x["even_converges"] = row.even_converges;
        x["split_distance"] = num(row.split_distance);
        Json res = Json::array();
        for (double v : row.residuals) res.push_back(num(v));
        x["residuals"] = std::move(res);
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    Json full = Json::array();
    for (double v : r.full_residuals) full.push_back(num(v));
    j["full_residuals"] = std::move(full);
    j["full_converges"] = r.full_converges;
    j["all_truncations_converge"] = r.all_truncations_converge;
    j["consistent"] = r.consistent;
    return j;
}

Json to_json(const RelativeCompactnessReport& r) {
    Json j;
    j["tolerance"] = r.tolerance;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["r"] = row.r;
        x["min_residual"] = num(row.min_residual);
        x["argmin"] = row.argmin;
        x["near_zero"] = row.near_zero;
        x["plausible"] = row.plausible;
        x["escaping"] = row.escaping;
        rows.push_back(std::move(x));
    }
    j["rows"] = std::move(rows);
    j["condition_iii_prime"] = r.condition_iii_prime;
    j["escaping_evidence"] = r.escaping_evidence;
    return j;
}

Json to_json(const KuratowskiResult& r) {
    Json j;
    j["tolerance"] = r.tolerance;
    j["resolution"] = r.resolution;
    j["tail_start"] = r.tail_start;
    j["liminf_points"] = points_json(r.liminf_points);
    j["limsup_points"] = points_json(r.limsup_points);
    return j;
}

std::string distance_csv(const par::Table& d, const std::vector<std::string>& ids) {
    std::string out = "id";
    for (const auto& id : ids) out += "," + id;
    out += "\n";
    for (std::size_t i = 0; i < d.rows; ++i) {
        out += ids[i];
        for (std::size_t k = 0; k < d.cols; ++k) out += "," + format_number(d(i, k));
        out += "\n";
    }
    return out;
}

std::string modulus_csv(const ModulusReport& r) {
    std::string out = "h,omega\n";
    for (std::size_t i = 0; i < r.h_grid.size(); ++i)
        out += format_number(r.h_grid[i]) + "," + format_number(r.omega[i]) + "\n";
    return out;
}

std::string eps_delta_csv(const CompactnessReport& r) {
    std::string out = "eps,delta,pass\n";
    for (const auto& e : r.equi)
        out += format_number(e.eps) + "," + (e.delta ? format_number(*e.delta) : std::string("FAIL")) +
               "," + (e.pass ? "1" : "0") + "\n";
    return out;
}

}  // namespace fuzzdp::io
