// SVG pictures of surfaces. Coordinates are converted to floating point for
// drawing only.

#ifndef VEECH2_SVG_HPP
#define VEECH2_SVG_HPP

#include "veech2/cylinder.hpp"

#include <string>

namespace veech2 {

/// Polygons side by side, each glued edge pair drawn in a shared color with
/// a shared label. With a decomposition, its saddle connections are drawn
/// over the polygons and each cylinder is drawn as a shaded parallelogram in
/// the normalized chart with its core curve dashed.
std::string export_svg(const Surface& s, const CylinderDecomposition* dec = nullptr);

}  // namespace veech2

#endif
