#include "cover/instance.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cover/errors.hpp"
#include "cover/region_ops.hpp"

namespace cover {

using json = nlohmann::ordered_json;

namespace {

json rational_to_json(const Rational& q) {
    if (is_integer(q)) {
        auto v = to_int64(q.get_num());
        if (v) return *v;
        return q.get_num().get_str();  // beyond int64: decimal string
    }
    json o;
    auto num = to_int64(q.get_num());
    auto den = to_int64(q.get_den());
    o["num"] = num ? json(*num) : json(q.get_num().get_str());
    o["den"] = den ? json(*den) : json(q.get_den().get_str());
    return o;
}

Integer integer_from_json(const json& j, const char* what) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        std::uint64_t u = j.get<std::uint64_t>();
        Integer z;
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
        return z;
    }
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError(std::string(what) + ": malformed integer string");
        }
    }
    throw ParseError(std::string(what) + ": expected an integer");
}

Rational rational_from_json(const json& j, const char* what) {
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den"))
            throw ParseError(std::string(what) + ": rational object needs num and den");
        Integer num = integer_from_json(j.at("num"), what);
        Integer den = integer_from_json(j.at("den"), what);
        if (sgn(den) == 0) throw ParseError(std::string(what) + ": denominator 0");
        if (sgn(den) < 0) throw ParseError(std::string(what) + ": denominator must be positive");
        return rat(num, den);
    }
    if (j.is_number_float()) {
        double d = j.get<double>();
        if (d != static_cast<double>(static_cast<std::int64_t>(d)))
            throw ParseError(std::string(what) + ": non-integer number literal");
        return Rational(static_cast<long>(d));
    }
    return Rational(integer_from_json(j, what));
}

json point_to_json(const Point& p) {
    json o;
    o["x"] = rational_to_json(p.x);
    o["y"] = rational_to_json(p.y);
    return o;
}

Point point_from_json(const json& j, const char* what) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y"))
        throw ParseError(std::string(what) + ": vertex must be an object with x and y");
    return Point{rational_from_json(j.at("x"), what), rational_from_json(j.at("y"), what)};
}

std::vector<Point> cycle_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + ": expected a vertex array");
    std::vector<Point> pts;
    for (const auto& v : j) pts.push_back(point_from_json(v, what));
    return pts;
}

json cycle_to_json(const std::vector<Point>& pts) {
    json arr = json::array();
    for (const Point& p : pts) arr.push_back(point_to_json(p));
    return arr;
}

json parse_document(const std::string& bytes) {
    try {
        return json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace

Instance parse_instance(const std::string& bytes, std::vector<std::string>* warnings) {
    json doc = parse_document(bytes);
    if (!doc.is_object() || doc.value("type", "") != "cover_instance")
        throw ParseError("not a cover_instance document");
    if (!doc.contains("name") || !doc.at("name").is_string())
        throw ParseError("instance name missing");

    Instance inst;
    inst.name = doc.at("name").get<std::string>();
    if (!doc.contains("outer_boundary")) throw ParseError("outer_boundary missing");
    PolygonWithHoles region;
    region.outer = SimplePolygon(cycle_from_json(doc.at("outer_boundary"), "outer_boundary"));
    if (doc.contains("holes")) {
        if (!doc.at("holes").is_array()) throw ParseError("holes must be an array");
        for (const auto& h : doc.at("holes"))
            region.holes.emplace_back(cycle_from_json(h, "hole"));
    }
    for (const Point& p : region.outer.vertices)
        if (!is_integer(p.x) || !is_integer(p.y))
            throw InvalidInstance("instance coordinates must be integers");
    for (const auto& h : region.holes)
        for (const Point& p : h.vertices)
            if (!is_integer(p.x) || !is_integer(p.y))
                throw InvalidInstance("instance coordinates must be integers");

    if (warnings) {
        if (sign(signed_area(region.outer)) < 0)
            warnings->push_back("outer boundary was clockwise; repaired");
        for (std::size_t i = 0; i < region.holes.size(); ++i)
            if (sign(signed_area(region.holes[i])) > 0)
                warnings->push_back("hole " + std::to_string(i) + " was counterclockwise; repaired");
    }
    inst.region = validate_region(std::move(region));

    if (doc.contains("meta")) {
        const json& m = doc.at("meta");
        GeneratorMeta meta;
        meta.generator = m.value("generator", "");
        if (m.contains("seed")) meta.seed = std::stoull(m.at("seed").get<std::string>());
        if (m.contains("params"))
            for (const auto& [k, v] : m.at("params").items())
                meta.params.emplace_back(k, v.get<std::string>());
        inst.meta = std::move(meta);
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    json doc;
    doc["type"] = "cover_instance";
    doc["name"] = inst.name;
    std::vector<Point> outer = inst.region.outer.vertices;
    if (sign(signed_area(outer)) < 0) std::reverse(outer.begin(), outer.end());
    doc["outer_boundary"] = cycle_to_json(outer);
    json holes = json::array();
    for (const auto& h : inst.region.holes) {
        std::vector<Point> hv = h.vertices;
        if (sign(signed_area(hv)) > 0) std::reverse(hv.begin(), hv.end());
        holes.push_back(cycle_to_json(hv));
    }
    doc["holes"] = holes;
    if (inst.meta) {
        json m;
        m["generator"] = inst.meta->generator;
        m["seed"] = std::to_string(inst.meta->seed);
        json params;
        for (const auto& [k, v] : inst.meta->params) params[k] = v;
        m["params"] = params;
        doc["meta"] = m;
    }
    return doc.dump(2) + "\n";
}

Solution parse_solution(const std::string& bytes, std::vector<std::string>* warnings) {
    json doc = parse_document(bytes);
    if (!doc.is_object() || doc.value("type", "") != "cover_solution")
        throw ParseError("not a cover_solution document");
    if (!doc.contains("instance") || !doc.at("instance").is_string())
        throw ParseError("instance reference missing");
    if (!doc.contains("pieces") || !doc.at("pieces").is_array())
        throw ParseError("pieces array missing");

    Solution sol;
    sol.instance_name = doc.at("instance").get<std::string>();
    std::size_t idx = 0;
    for (const auto& pj : doc.at("pieces")) {
        std::vector<Point> pts = cycle_from_json(pj, "piece");
        if (pts.size() < 3)
            throw InvalidSolution("piece " + std::to_string(idx) + " has fewer than 3 vertices");
        if (sign(signed_area(pts)) == 0)
            throw InvalidSolution("piece " + std::to_string(idx) + " has zero area");
        if (sign(signed_area(pts)) < 0) {
            std::reverse(pts.begin(), pts.end());
            if (warnings)
                warnings->push_back("piece " + std::to_string(idx) + " was clockwise; repaired");
        }
        sol.pieces.emplace_back(std::move(pts));
        ++idx;
    }
    if (sol.pieces.empty()) throw InvalidSolution("solution has no pieces");
    return sol;
}

std::string serialize_solution(const Solution& sol) {
    json doc;
    doc["type"] = "cover_solution";
    doc["instance"] = sol.instance_name;
    json pieces = json::array();
    for (const auto& piece : sol.pieces) {
        std::vector<Point> pts = piece.vertices;
        if (sign(signed_area(pts)) < 0) std::reverse(pts.begin(), pts.end());
        pieces.push_back(cycle_to_json(pts));
    }
    doc["pieces"] = pieces;
    return doc.dump(2) + "\n";
}

CoverReport verify_solution(const Instance& inst, const Solution& sol) {
    if (sol.instance_name != inst.name)
        throw WrongInstance("solution targets '" + sol.instance_name + "', not '" + inst.name + "'");

    CoverReport report;
    report.piece_count = sol.pieces.size();
    RegionCells cells(inst.region);

    std::vector<const ConvexPolygon*> usable;
    for (std::size_t i = 0; i < sol.pieces.size(); ++i) {
        const ConvexPolygon& piece = sol.pieces[i];
        bool convex_ok;
        try {
            convex_ok = is_convex(piece);
        } catch (const InvalidPolygon&) {
            convex_ok = false;
        }
        if (!convex_ok) {
            report.failures.push_back({CoverFailure::Kind::NonConvex, i, std::nullopt});
            continue;
        }
        if (!cells.contains_piece(piece.vertices)) {
            // witness: interior point of piece \ region
            Residual excess(std::vector<ConvexCell>{piece.vertices});
            for (const ConvexCell& cell : cells.cells()) {
                excess.subtract(cell);
                if (excess.empty()) break;
            }
            Point witness = excess.empty() ? piece.vertices[0] : cell_centroid(excess.cells()[0]);
            report.failures.push_back({CoverFailure::Kind::NotContained, i, witness});
            continue;
        }
        usable.push_back(&piece);
    }

    Residual residual(inst.region);
    for (const ConvexPolygon* piece : usable) {
        residual.subtract(piece->vertices);
        if (residual.empty()) break;
    }
    for (const ConvexCell& cell : residual.cells())
        report.failures.push_back({CoverFailure::Kind::Uncovered, 0, cell_centroid(cell)});

    report.valid = report.failures.empty();
    return report;
}

PolygonWithHoles normalize_coordinates(const PolygonWithHoles& region, const Integer& scale) {
    if (sgn(scale) <= 0) throw InvalidParams("scale must be >= 1");
    auto transform = [&](const std::vector<Point>& pts) {
        std::vector<Point> out;
        for (const Point& p : pts)
            out.push_back({Rational(round_nearest(Rational(p.x * scale))),
                           Rational(round_nearest(Rational(p.y * scale)))});
        return out;
    };
    PolygonWithHoles scaled;
    scaled.outer = SimplePolygon(transform(region.outer.vertices));
    for (const auto& h : region.holes) scaled.holes.emplace_back(transform(h.vertices));

    // translate to the first quadrant with min x = min y = 0
    Rational min_x = scaled.outer.vertices[0].x, min_y = scaled.outer.vertices[0].y;
    for (const Point& p : scaled.outer.vertices) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
    }
    auto shift = [&](std::vector<Point>& pts) {
        for (Point& p : pts) {
            p.x -= min_x;
            p.y -= min_y;
        }
    };
    shift(scaled.outer.vertices);
    for (auto& h : scaled.holes) shift(h.vertices);

    for (std::size_t i = 0; i < scaled.outer.size(); ++i)
        if (scaled.outer[i] == scaled.outer[(i + 1) % scaled.outer.size()])
            throw NormalizationFailed("rounding collapsed an outer edge");
    for (const auto& h : scaled.holes)
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] == h[(i + 1) % h.size()])
                throw NormalizationFailed("rounding collapsed a hole edge");
    try {
        return validate_region(std::move(scaled));
    } catch (const InvalidInstance& e) {
        throw NormalizationFailed(std::string("rounding broke region validity: ") + e.what());
    }
}

Instance load_instance_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingInstance("cannot open instance file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_instance(ss.str());
}

Solution load_solution_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open solution file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_solution(ss.str());
}

void save_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << contents;
}

}  // namespace cover
