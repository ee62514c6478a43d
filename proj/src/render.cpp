#include "arclat/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "arclat/errors.hpp"

namespace arclat {

namespace {

constexpr int kStep = 4;  // vertical distance between consecutive points
constexpr int kHalf = 2;  // height of the horizontal runs above and below a point

struct Pass {
    int point;  // glyph index
    int side;   // +1 right of the point, -1 left
    int depth = 0;
};

struct Piece {
    std::vector<Pass> passes;
    int key;
};

int y_of(int idx) { return kStep * (idx + 1); }

void assign_depths(std::vector<Piece>& pieces) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> slots;  // (point, side) -> (key, piece)
    for (int i = 0; i < static_cast<int>(pieces.size()); ++i)
        for (const auto& ps : pieces[i].passes) slots[{ps.point, ps.side}].push_back({pieces[i].key, i});
    for (auto& [where, list] : slots) {
        std::sort(list.begin(), list.end());
        for (int d = 0; d < static_cast<int>(list.size()); ++d)
            for (auto& ps : pieces[list[d].second].passes)
                if (ps.point == where.first && ps.side == where.second) ps.depth = d + 1;
    }
}

int x_of(const Pass& ps) { return ps.side * 2 * ps.depth; }

void push(std::vector<std::pair<int, int>>& path, int x, int y) {
    if (path.empty() || path.back() != std::make_pair(x, y)) path.emplace_back(x, y);
}

// Upward run from y0 to the point at y1 passing the given points.
void run_up(std::vector<std::pair<int, int>>& path, int y0, int y1, const std::vector<Pass>& passes) {
    push(path, 0, y0);
    push(path, 0, y0 + kHalf);
    for (const auto& ps : passes) {
        push(path, x_of(ps), y_of(ps.point) - kHalf);
        push(path, x_of(ps), y_of(ps.point) + kHalf);
    }
    push(path, 0, y1 - kHalf);
    push(path, 0, y1);
}

void fit_bounds(Layout& lay) {
    lay.xmin = lay.ymin = -1;
    lay.xmax = lay.ymax = 1;
    for (const auto& g : lay.glyphs) {
        lay.xmin = std::min(lay.xmin, g.x - 1);
        lay.xmax = std::max(lay.xmax, g.x + 1);
        lay.ymin = std::min(lay.ymin, g.y - 1);
        lay.ymax = std::max(lay.ymax, g.y + 1);
    }
    for (const auto& s : lay.strokes)
        for (auto [x, y] : s.path) {
            lay.xmin = std::min(lay.xmin, x);
            lay.xmax = std::max(lay.xmax, x);
            lay.ymin = std::min(lay.ymin, y);
            lay.ymax = std::max(lay.ymax, y);
        }
}

int max_depth(const std::vector<Piece>& pieces) {
    int m = 0;
    for (const auto& pc : pieces)
        for (const auto& ps : pc.passes) m = std::max(m, ps.depth);
    return m;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

std::string render_svg(const Layout& lay, const RenderSpec& spec) {
    const double u = spec.spacing / double(kStep);
    const double W = std::max<double>(spec.width, (lay.xmax - lay.xmin) * u + 2 * spec.spacing);
    const double H = std::max<double>(spec.height, (lay.ymax - lay.ymin) * u + 2 * spec.spacing);
    auto X = [&](int x) { return W / 2 + (x - (lay.xmin + lay.xmax) / 2.0) * u; };
    auto Y = [&](int y) { return H / 2 - (y - (lay.ymin + lay.ymax) / 2.0) * u; };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(W) << "\" height=\"" << num(H)
      << "\" viewBox=\"0 0 " << num(W) << " " << num(H) << "\">\n";
    o << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << num(u / 3) << "\">\n";
    for (const auto& s : lay.strokes) {
        o << "<polyline points=\"";
        for (std::size_t i = 0; i < s.path.size(); ++i)
            o << (i ? " " : "") << num(X(s.path[i].first)) << "," << num(Y(s.path[i].second));
        o << "\"/>\n";
    }
    o << "</g>\n";
    for (const auto& g : lay.glyphs) {
        if (g.orbifold) {
            o << "<g stroke=\"black\" stroke-width=\"" << num(u / 3) << "\">"
              << "<line x1=\"" << num(X(g.x) - u) << "\" y1=\"" << num(Y(g.y) - u) << "\" x2=\"" << num(X(g.x) + u)
              << "\" y2=\"" << num(Y(g.y) + u) << "\"/>"
              << "<line x1=\"" << num(X(g.x) - u) << "\" y1=\"" << num(Y(g.y) + u) << "\" x2=\"" << num(X(g.x) + u)
              << "\" y2=\"" << num(Y(g.y) - u) << "\"/></g>\n";
            continue;
        }
        o << "<circle cx=\"" << num(X(g.x)) << "\" cy=\"" << num(Y(g.y)) << "\" r=\"" << num(u)
          << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << num(u / 6) << "\"/>\n";
        o << "<text x=\"" << num(X(g.x)) << "\" y=\"" << num(Y(g.y) + u / 2.5) << "\" font-size=\"" << num(u * 1.1)
          << "\" text-anchor=\"middle\" font-family=\"sans-serif\">" << xml_escape(g.label) << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string render_ascii(const Layout& lay, const RenderSpec& spec) {
    const int cols = std::max(spec.width, lay.xmax - lay.xmin + 1);
    const int rows = std::max(spec.height, lay.ymax - lay.ymin + 1);
    const int c0 = (cols - (lay.xmax - lay.xmin + 1)) / 2 - lay.xmin;
    const int r0 = (rows - (lay.ymax - lay.ymin + 1)) / 2 + lay.ymax;
    std::vector<std::string> grid(rows, std::string(cols, ' '));
    auto put = [&](int x, int y, char c) {
        char& cell = grid[r0 - y][c0 + x];
        if (cell == ' ' || cell == c) cell = c;
        else cell = '+';
    };
    for (const auto& s : lay.strokes) {
        for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
            auto [x1, y1] = s.path[i];
            auto [x2, y2] = s.path[i + 1];
            if (y1 == y2)
                for (int x = std::min(x1, x2); x <= std::max(x1, x2); ++x) put(x, y1, '-');
            else
                for (int y = std::min(y1, y2); y <= std::max(y1, y2); ++y) put(x1, y, '|');
        }
        for (std::size_t i = 1; i + 1 < s.path.size(); ++i) {
            bool turn = (s.path[i - 1].first == s.path[i].first) != (s.path[i].first == s.path[i + 1].first);
            if (turn) grid[r0 - s.path[i].second][c0 + s.path[i].first] = '+';
        }
    }
    for (const auto& g : lay.glyphs) {
        std::string text = g.orbifold ? "x" : g.label;
        int start = c0 + g.x - static_cast<int>(text.size()) + 1;
        for (std::size_t k = 0; k < text.size(); ++k)
            if (start + static_cast<int>(k) >= 0) grid[r0 - g.y][start + k] = text[k];
    }
    std::string out;
    for (auto& line : grid) {
        line.erase(line.find_last_not_of(' ') + 1);
        out += line + "\n";
    }
    return out;
}

std::string render_tikz(const Layout& lay, const RenderSpec& spec) {
    const double u = spec.spacing * 0.75 / kStep;  // px to pt
    std::ostringstream o;
    o << "\\begin{tikzpicture}[x=" << num(u) << "pt,y=" << num(u) << "pt]\n";
    const double minw = spec.width * 0.75 / u, minh = spec.height * 0.75 / u;
    const double cx = (lay.xmin + lay.xmax) / 2.0, cy = (lay.ymin + lay.ymax) / 2.0;
    const double hw = std::max((lay.xmax - lay.xmin) / 2.0, minw / 2), hh = std::max((lay.ymax - lay.ymin) / 2.0, minh / 2);
    o << "\\useasboundingbox (" << num(cx - hw) << "," << num(cy - hh) << ") rectangle (" << num(cx + hw) << ","
      << num(cy + hh) << ");\n";
    for (const auto& s : lay.strokes) {
        o << "\\draw";
        for (std::size_t i = 0; i < s.path.size(); ++i)
            o << (i ? " -- " : " ") << "(" << s.path[i].first << "," << s.path[i].second << ")";
        o << ";\n";
    }
    for (const auto& g : lay.glyphs) {
        if (g.orbifold)
            o << "\\node at (" << g.x << "," << g.y << ") {$\\times$};\n";
        else
            o << "\\node[circle,draw,fill=white,inner sep=1pt] at (" << g.x << "," << g.y << ") {$" << g.label
              << "$};\n";
    }
    o << "\\end{tikzpicture}\n";
    return o.str();
}

}  // namespace

void RenderSpec::validate() const {
    if (width <= 0 || height <= 0 || spacing <= 0) throw Error("render dimensions must be positive");
}

RenderSpec::Format render_format_from_string(const std::string& s) {
    if (s == "svg") return RenderSpec::Format::Svg;
    if (s == "ascii") return RenderSpec::Format::Ascii;
    if (s == "tikz") return RenderSpec::Format::Tikz;
    throw ParseError("unknown render format \"" + s + "\"");
}

Layout layout_diagram(const DiagramA& D) {
    Layout lay;
    const auto& g = D.ground;
    for (int i = 0; i < static_cast<int>(g.size()); ++i) lay.glyphs.push_back({std::to_string(g[i]), 0, y_of(i), false});
    auto idx = [&](int x) { return static_cast<int>(std::lower_bound(g.begin(), g.end(), x) - g.begin()); };
    std::vector<Piece> pieces;
    for (const auto& a : D.arcs) {
        Piece pc{{}, idx(a.q) - idx(a.p)};
        for (int k = idx(a.p) + 1; k < idx(a.q); ++k) pc.passes.push_back({k, a.side(g[k])});
        pieces.push_back(pc);
    }
    assign_depths(pieces);
    for (std::size_t i = 0; i < D.arcs.size(); ++i) {
        Layout::Stroke s;
        int ip = idx(D.arcs[i].p), iq = idx(D.arcs[i].q);
        run_up(s.path, y_of(ip), y_of(iq), pieces[i].passes);
        s.own = {ip, iq};
        lay.strokes.push_back(std::move(s));
    }
    fit_bounds(lay);
    return lay;
}

Layout layout_diagram(const DiagramB& D) {
    Layout lay;
    for (int k = 1; k <= D.n; ++k) lay.glyphs.push_back({std::to_string(k), 0, y_of(k - 1), false});
    const int cross = D.n;
    lay.glyphs.push_back({"x", 0, 0, true});
    auto has = [](const std::vector<int>& v, int x) { return std::binary_search(v.begin(), v.end(), x); };

    // Each arc gives one piece, long arcs two (left piece first).
    std::vector<Piece> pieces;
    std::vector<int> first_piece;
    for (const auto& a : D.arcs) {
        first_piece.push_back(static_cast<int>(pieces.size()));
        if (a.is_ordinary() || a.is_orbifold()) {
            Piece pc{{}, a.q - a.p};
            for (int k = a.p + 1; k < a.q; ++k) pc.passes.push_back({k - 1, has(a.L, k) ? 1 : -1});
            pieces.push_back(pc);
        } else {
            Piece left{{}, 0}, right{{}, 0};
            for (int k = a.p - 1; k >= 1; --k) left.passes.push_back({k - 1, has(a.L, k) ? 1 : -1});
            for (int k = 1; k < a.q; ++k) right.passes.push_back({k - 1, has(a.R, k) ? -1 : 1});
            left.key = 1000 + 4 * a.p;
            right.key = 1000 + 4 * a.q + 2;
            pieces.push_back(left);
            pieces.push_back(right);
        }
    }
    assign_depths(pieces);
    const int W = 2 * (max_depth(pieces) + 1);
    for (std::size_t i = 0; i < D.arcs.size(); ++i) {
        const auto& a = D.arcs[i];
        Layout::Stroke s;
        const Piece& pc = pieces[first_piece[i]];
        if (a.is_ordinary()) {
            run_up(s.path, y_of(a.p - 1), y_of(a.q - 1), pc.passes);
            s.own = {a.p - 1, a.q - 1};
        } else if (a.is_orbifold()) {
            run_up(s.path, 0, y_of(a.q - 1), pc.passes);
            s.own = {cross, a.q - 1};
        } else {
            const Piece& rp = pieces[first_piece[i] + 1];
            push(s.path, 0, y_of(a.p - 1));
            push(s.path, 0, y_of(a.p - 1) - kHalf);
            for (const auto& ps : pc.passes) {
                push(s.path, x_of(ps), y_of(ps.point) + kHalf);
                push(s.path, x_of(ps), y_of(ps.point) - kHalf);
            }
            push(s.path, -W, kHalf);
            push(s.path, -W, -kHalf);
            push(s.path, W, -kHalf);
            push(s.path, W, kHalf);
            for (const auto& ps : rp.passes) {
                push(s.path, x_of(ps), y_of(ps.point) - kHalf);
                push(s.path, x_of(ps), y_of(ps.point) + kHalf);
            }
            push(s.path, 0, y_of(a.q - 1) - kHalf);
            push(s.path, 0, y_of(a.q - 1));
            s.own = {a.p - 1, a.q - 1};
        }
        lay.strokes.push_back(std::move(s));
    }
    fit_bounds(lay);
    return lay;
}

bool strokes_clear_of_glyphs(const Layout& lay) {
    for (const auto& s : lay.strokes) {
        for (int gi = 0; gi < static_cast<int>(lay.glyphs.size()); ++gi) {
            if (std::find(s.own.begin(), s.own.end(), gi) != s.own.end()) continue;
            const auto& g = lay.glyphs[gi];
            for (std::size_t i = 0; i + 1 < s.path.size(); ++i) {
                auto [x1, y1] = s.path[i];
                auto [x2, y2] = s.path[i + 1];
                bool xs = std::max(x1, x2) >= g.x - 1 && std::min(x1, x2) <= g.x + 1;
                bool ys = std::max(y1, y2) >= g.y - 1 && std::min(y1, y2) <= g.y + 1;
                if (xs && ys) return false;
            }
        }
    }
    return true;
}

std::string render(const Layout& lay, const RenderSpec& spec) {
    spec.validate();
    switch (spec.format) {
        case RenderSpec::Format::Svg: return render_svg(lay, spec);
        case RenderSpec::Format::Ascii: return render_ascii(lay, spec);
        case RenderSpec::Format::Tikz: return render_tikz(lay, spec);
    }
    return {};
}

std::string render(const DiagramA& D, const RenderSpec& spec) { return render(layout_diagram(D), spec); }
std::string render(const DiagramB& D, const RenderSpec& spec) { return render(layout_diagram(D), spec); }

}  // namespace arclat
