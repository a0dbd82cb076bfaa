#pragma once

#include <string>

#include "hyperfn/surface.hpp"

namespace hyperfn {

/// Surface file format:
///   {"pants": [[[i,0],[i,1],[i,2]], ...],
///    "pairings": [[slotRef, slotRef], ...], "boundary": [slotRef, ...],
///    "punctures": [slotRef, ...],
///    "lengths": {"id": number}, "twists": {"id": number},
///    "upper_bound": number | null,
///    "curve_index": {"pairings": [id...], "boundary": [...], "punctures": [...]}}
/// slotRef is [pants, slot]. Without "curve_index" curves are numbered from 1
/// in the order pairings, boundary, punctures. Throws ParseError.
MarkedSurface surface_from_json(const std::string& text);

/// Inverse of surface_from_json; always writes "curve_index". Numbers use the
/// shortest form that reads back to the same double.
std::string surface_to_json(const MarkedSurface& s);

}  // namespace hyperfn
