#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzdp/compactness.hpp"
#include "fuzzdp/dp_metric.hpp"
#include "fuzzdp/fuzzy_set.hpp"
#include "fuzzdp/parallel.hpp"
#include "fuzzdp/setgeom.hpp"

namespace fuzzdp::io {

using Json = nlohmann::ordered_json;

// Fuzzy-set files:
//   {"dim": 1|2, "support": "bounded"|"lp_tail", "quadrature": "step"|"log_linear",
//    "levels": [{"alpha": a, "intervals": [[lo, hi], ...]}
//             | {"alpha": a, "polygon": [[x, y], ...]}
//             | {"alpha": a, "points": [[x, y], ...]}, ...]}
// "quadrature" is optional (default step). Levels ascend; the last alpha is 1.
//
// Family files:
//   {"members": [{"id": "...", "file": "relative/path.json"} | {"id": "...", "set": {...}}]}

Json to_json(const FuzzySet& u);
/// Reuses `grid_hint` when the levels and rule match, so families share one grid.
FuzzySet fuzzy_from_json(const Json& j, const FuzzySet::GridPtr& grid_hint = nullptr);

/// Parses text; syntax errors carry "line L, column C".
Json parse_text(const std::string& text, const std::string& origin);
Json read_json(const std::filesystem::path& path);
/// Writes j.dump(2) plus a trailing newline.
void write_json(const std::filesystem::path& path, const Json& j);

FuzzySet read_fuzzy(const std::filesystem::path& path);
void write_fuzzy(const std::filesystem::path& path, const FuzzySet& u);

struct LoadedFamily {
    std::vector<FuzzySet> members;
    std::vector<std::string> ids;
};
/// Member files resolve relative to the family file. Errors name the member id.
LoadedFamily read_family(const std::filesystem::path& path);
/// Writes a family file referencing `files` (relative paths) with `ids`.
void write_family(const std::filesystem::path& path, const std::vector<std::string>& ids,
                  const std::vector<std::string>& files);

Json to_json(const CompactnessReport& r, const Family& U);
Json to_json(const NetResult& r, const Family& U);
Json to_json(const ModulusReport& r);
Json to_json(const SpaceClass& c);
Json to_json(const DiagonalResult& r);
Json to_json(const TruncationReport& r);
Json to_json(const RelativeCompactnessReport& r);
Json to_json(const KuratowskiResult& r);

/// CSV with a header row; numbers via format_number.
std::string distance_csv(const par::Table& d, const std::vector<std::string>& ids);
std::string modulus_csv(const ModulusReport& r);
std::string eps_delta_csv(const CompactnessReport& r);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace fuzzdp::io
