#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover/polygon.hpp"

namespace cover {

struct GeneratorMeta {
    std::string generator;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;  // ordered key/value
};

// Benchmark instance: integer-coordinate region plus provenance.
struct Instance {
    std::string name;
    PolygonWithHoles region;
    std::optional<GeneratorMeta> meta;
};

struct Solution {
    std::string instance_name;
    std::vector<ConvexPolygon> pieces;  // piece count is the objective
};

struct CoverFailure {
    enum class Kind { NonConvex, NotContained, Uncovered };
    Kind kind;
    std::size_t piece_index = 0;     // meaningless for Uncovered
    std::optional<Point> witness;    // absent only for NonConvex
};

struct CoverReport {
    bool valid = false;
    std::size_t piece_count = 0;
    std::vector<CoverFailure> failures;
};

// JSON text formats; serialize(parse(x)) is byte-identical and
// parse(serialize(v)) == v. Parsers repair vertex orientation and report a
// warning; serializers always emit outer/pieces CCW and holes CW.
Instance parse_instance(const std::string& bytes, std::vector<std::string>* warnings = nullptr);
std::string serialize_instance(const Instance& inst);
Solution parse_solution(const std::string& bytes, std::vector<std::string>* warnings = nullptr);
std::string serialize_solution(const Solution& sol);

// Exact feasibility check: all pieces convex, all contained (closed
// semantics), union covers the region. Throws WrongInstance on name mismatch.
CoverReport verify_solution(const Instance& inst, const Solution& sol);

// Scale, round to nearest integers, translate so min x = min y = 0. Throws
// NormalizationFailed when rounding collapses an edge or breaks validity.
PolygonWithHoles normalize_coordinates(const PolygonWithHoles& region, const Integer& scale);

Instance load_instance_file(const std::string& path);
Solution load_solution_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& contents);

}  // namespace cover
