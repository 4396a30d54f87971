#include "cover/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace cover {
namespace {

constexpr double kViewport = 1000.0;
constexpr double kMargin = 20.0;

constexpr std::array<const char*, 8> kPalette = {
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3",
    "#ff7f00", "#a65628", "#f781bf", "#17becf",
};

struct Transform {
    double min_x, min_y, scale;
    double x(const Rational& v) const { return kMargin + (to_double(v) - min_x) * scale; }
    // SVG y grows downward; flip so the drawing matches math orientation
    double y(const Rational& v, double span_y) const {
        return kMargin + (span_y - (to_double(v) - min_y)) * scale;
    }
};

void emit_polygon(std::ostringstream& os, const std::vector<Point>& cycle, const Transform& tf,
                  double span_y, const std::string& style) {
    os << "<polygon points=\"";
    char buf[64];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.3f,%.3f", i ? " " : "", tf.x(cycle[i].x),
                      tf.y(cycle[i].y, span_y));
        os << buf;
    }
    os << "\" " << style << "/>\n";
}

}  // namespace

std::string render_svg(const Instance& inst, const std::optional<Solution>& sol) {
    BBox box = bbox_of(inst.region.outer.vertices);
    double span_x = std::max(box.max_x - box.min_x, 1e-9);
    double span_y = std::max(box.max_y - box.min_y, 1e-9);
    double scale = (kViewport - 2 * kMargin) / std::max(span_x, span_y);
    Transform tf{box.min_x, box.min_y, scale};
    double width = 2 * kMargin + span_x * scale;
    double height = 2 * kMargin + span_y * scale;

    std::ostringstream os;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.1f\" height=\"%.1f\" "
                  "viewBox=\"0 0 %.1f %.1f\">\n",
                  width, height, width, height);
    os << buf;
    emit_polygon(os, inst.region.outer.vertices, tf, span_y,
                 "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");
    for (const SimplePolygon& hole : inst.region.holes)
        emit_polygon(os, hole.vertices, tf, span_y,
                     "fill=\"#9e9e9e\" stroke=\"black\" stroke-width=\"1\"");
    if (sol) {
        for (std::size_t i = 0; i < sol->pieces.size(); ++i) {
            std::string style = std::string("fill=\"") + kPalette[i % kPalette.size()] +
                                "\" fill-opacity=\"0.45\" stroke=\"" +
                                kPalette[i % kPalette.size()] + "\" stroke-width=\"1\"";
            emit_polygon(os, sol->pieces[i].vertices, tf, span_y, style);
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cover
