#include "iamonds/io_render.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace iamonds {

namespace {

using nlohmann::json;

// Planar geometry: cell (r,c) has its horizontal edge spanning
// x in [c/2, c/2+1] (at y = r*H for up, (r+1)*H for down) and its apex at
// x = (c+1)/2; H = sqrt(3)/2. SVG y grows downward, so rows are flipped.
constexpr double kRowHeight = 0.8660254037844386;

struct Tri {
    double x[3], y[3];
};

Tri cell_triangle(TriCoord c) {
    const double x0 = c.col / 2.0;
    Tri t;
    if (is_up(c)) {
        t.x[0] = x0;       t.y[0] = c.row * kRowHeight;
        t.x[1] = x0 + 1;   t.y[1] = c.row * kRowHeight;
        t.x[2] = x0 + 0.5; t.y[2] = (c.row + 1) * kRowHeight;
    } else {
        t.x[0] = x0;       t.y[0] = (c.row + 1) * kRowHeight;
        t.x[1] = x0 + 1;   t.y[1] = (c.row + 1) * kRowHeight;
        t.x[2] = x0 + 0.5; t.y[2] = c.row * kRowHeight;
    }
    return t;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

std::string to_json(const Polyiamond& a, const DocumentMetadata& meta) {
    json doc;
    json cells = json::array();
    for (TriCoord c : a.cells()) cells.push_back(json::array({c.row, c.col}));
    doc["cells"] = std::move(cells);
    if (!meta.empty()) {
        json m = json::object();
        if (meta.k) m["k"] = *meta.k;
        if (meta.name) m["name"] = *meta.name;
        if (meta.provenance) m["provenance"] = *meta.provenance;
        doc["metadata"] = std::move(m);
    }
    return doc.dump();
}

Polyiamond from_json(const std::string& text) {
    DocumentMetadata ignored;
    return from_json(text, ignored);
}

Polyiamond from_json(const std::string& text, DocumentMetadata& meta_out) {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
        throw std::invalid_argument("document must be an object with a \"cells\" array");
    std::vector<TriCoord> cells;
    for (const json& e : doc["cells"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("each cell must be a [row, col] integer pair");
        cells.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    meta_out = {};
    if (doc.contains("metadata")) {
        const json& m = doc["metadata"];
        if (m.contains("name")) meta_out.name = m["name"].get<std::string>();
        if (m.contains("k")) meta_out.k = m["k"].get<long long>();
        if (m.contains("provenance")) meta_out.provenance = m["provenance"].get<std::string>();
    }
    return make_polyiamond(std::move(cells));
}

std::string to_svg(const Polyiamond& a, const SvgOptions& opts) {
    const HoleSummary hs = holes(a);

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (TriCoord c : a.cells()) {
        const Tri t = cell_triangle(c);
        for (int i = 0; i < 3; ++i) {
            xmin = std::min(xmin, t.x[i]);
            xmax = std::max(xmax, t.x[i]);
            ymin = std::min(ymin, t.y[i]);
            ymax = std::max(ymax, t.y[i]);
        }
    }
    const double s = opts.side;
    const double margin = 0.25;
    const double w = (xmax - xmin + 2 * margin) * s;
    const double h = (ymax - ymin + 2 * margin) * s;
    auto px = [&](double x) { return (x - xmin + margin) * s; };
    auto py = [&](double y) { return (ymax - y + margin) * s; };  // flip y

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" viewBox=\"0 0 " + fmt(w) + " " + fmt(h) + "\">\n";
    auto polygon = [&](TriCoord c, const std::string& fill, const std::string& extra) {
        const Tri t = cell_triangle(c);
        out += "<polygon points=\"";
        for (int i = 0; i < 3; ++i) {
            if (i) out += ' ';
            out += fmt(px(t.x[i])) + "," + fmt(py(t.y[i]));
        }
        out += "\" fill=\"" + fill + "\" stroke=\"" + opts.stroke +
               "\" stroke-width=\"" + fmt(s * 0.03) + "\"" + extra + "/>\n";
    };
    for (TriCoord c : a.cells()) polygon(c, opts.fill, "");
    if (opts.hole_fill || opts.hole_outline) {
        const std::string fill = opts.hole_fill ? *opts.hole_fill : "none";
        const std::string extra =
            opts.hole_outline ? std::string(" stroke-dasharray=\"") + fmt(s * 0.12) + "\"" : "";
        for (const auto& hole : hs.holes)
            for (TriCoord c : hole) polygon(c, fill, extra);
    }
    out += "</svg>\n";
    return out;
}

std::string to_text_art(const Polyiamond& a) {
    const HoleSummary hs = holes(a);
    std::vector<TriCoord> hole_cells;
    for (const auto& hole : hs.holes)
        hole_cells.insert(hole_cells.end(), hole.begin(), hole.end());
    std::sort(hole_cells.begin(), hole_cells.end());

    int r0 = INT_MAX, r1 = INT_MIN, c0 = INT_MAX, c1 = INT_MIN;
    for (TriCoord c : a.cells()) {
        r0 = std::min(r0, c.row);
        r1 = std::max(r1, c.row);
        c0 = std::min(c0, c.col);
        c1 = std::max(c1, c.col);
    }
    std::string out;
    for (int r = r1; r >= r0; --r) {
        for (int c = c0; c <= c1; ++c) {
            const TriCoord cell{r, c};
            if (a.contains(cell))
                out += is_up(cell) ? '^' : 'v';
            else if (std::binary_search(hole_cells.begin(), hole_cells.end(), cell))
                out += 'o';
            else
                out += '.';
        }
        out += '\n';
    }
    return out;
}

}  // namespace iamonds
