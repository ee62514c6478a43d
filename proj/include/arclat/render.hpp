#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arclat/arcs_b.hpp"

namespace arclat {

struct RenderSpec {
    enum class Format { Svg, Ascii, Tikz };
    Format format = Format::Svg;
    // Minimum canvas size: pixels for svg and tikz, character cells for ascii.
    int width = 240;
    int height = 240;
    // Pixels between consecutive numbered points (svg and tikz).
    int spacing = 40;
    void validate() const;  // throws Error unless all dimensions are positive
};

RenderSpec::Format render_format_from_string(const std::string& s);

// Integer layout: numbered points sit on x = 0 four units apart, the orbifold point at the
// origin. Glyphs occupy the box of half-width 1 around their centre.
struct Layout {
    struct Glyph {
        std::string label;
        int x, y;
        bool orbifold;
    };
    struct Stroke {
        std::vector<std::pair<int, int>> path;  // axis-parallel polyline
        std::vector<int> own;                   // glyphs the stroke is allowed to touch
    };
    std::vector<Glyph> glyphs;
    std::vector<Stroke> strokes;
    int xmin = 0, xmax = 0, ymin = 0, ymax = 0;
};

Layout layout_diagram(const DiagramA& D);
Layout layout_diagram(const DiagramB& D);

// No stroke meets the box of a glyph other than its own endpoints.
bool strokes_clear_of_glyphs(const Layout& lay);

std::string render(const Layout& lay, const RenderSpec& spec);
std::string render(const DiagramA& D, const RenderSpec& spec);
std::string render(const DiagramB& D, const RenderSpec& spec);

}  // namespace arclat
