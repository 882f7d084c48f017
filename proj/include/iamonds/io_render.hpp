// Serialization of polyiamonds (JSON document, cells sorted, lossless round
// trip) and publication-style rendering (SVG with holes left empty, plain
// text art).

#pragma once

#include <optional>
#include <string>

#include "iamonds/polyiamond.hpp"

namespace iamonds {

struct DocumentMetadata {
    std::optional<std::string> name;
    std::optional<long long> k;
    std::optional<std::string> provenance;

    bool empty() const { return !name && !k && !provenance; }
};

// {"cells":[[row,col],...]} with cells sorted and canonical key order;
// metadata emitted only when present.
std::string to_json(const Polyiamond& a, const DocumentMetadata& meta = {});

// Parses and re-validates; throws nlohmann parse errors on malformed text
// and the make_polyiamond errors on invalid shapes.
Polyiamond from_json(const std::string& text);
Polyiamond from_json(const std::string& text, DocumentMetadata& meta_out);

struct SvgOptions {
    double side = 32.0;  // triangle side length in pixels
    std::string fill = "#4878a8";
    std::string stroke = "#24313f";
    std::optional<std::string> hole_fill;  // unset: holes rendered by omission
    bool hole_outline = false;             // dashed outline around hole cells
};

// Deterministic SVG: cells in sorted order, coordinates printed with fixed
// 6-digit precision, byte-stable for identical options.
std::string to_svg(const Polyiamond& a, const SvgOptions& opts = {});

// One character per lattice cell, rows printed top to bottom:
// '^' up tile, 'v' down tile, 'o' hole cell, '.' elsewhere.
std::string to_text_art(const Polyiamond& a);

}  // namespace iamonds
