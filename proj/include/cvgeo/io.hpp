#ifndef CVGEO_IO_HPP
#define CVGEO_IO_HPP

#include <string>

#include "json.hpp"

#include "cvgeo/body.hpp"
#include "cvgeo/feq.hpp"
#include "cvgeo/polytope.hpp"
#include "cvgeo/valuation.hpp"

namespace cvgeo::io {

using json = nlohmann::ordered_json;

// {"dim": n, "vertices": [["p/q", ...], ...]}. Facet data is always derived
// by the exact hull, never read from input.
Polytope polytope_from_json(const json& j);
json polytope_to_json(const Polytope& P);

// {"type": "ball" | "ellipsoid" | "piecewise2d" | "polytope", ...}.
// Ellipsoid matrices are row-major with decimal-string (or numeric) entries
// and denote the shape matrix A of the body A*B^n.
BodyModel body_from_json(const json& j);

// {"c0": .., "c1": .., "c2": .., "phi": null | {"type":"power","p":..}
//  | {"type":"affine","alpha":..,"beta":..}
//  | {"type":"table","points":[[s,v],..]}}.
// Coefficients parse exactly (integers, decimals, or "p/q" strings);
// `ambient_dim` fixes n for the power weight.
CompositeSpec composite_from_json(const json& j, std::size_t ambient_dim);
json composite_to_json(const CompositeSpec& spec);

ConcFn conc_fn_from_json(const json& j, std::size_t ambient_dim);
// Parses "power:p=1" style CLI descriptors.
ConcFn conc_fn_from_descriptor(const std::string& text,
                               std::size_t ambient_dim);

// CSV with lines "x,value" (1D) or "x,y,value" (2D); '#' starts a comment,
// blank lines are skipped, all fields parse as exact rationals.
GridFunction1D grid1d_from_csv(const std::string& text);
GridFunction2D grid2d_from_csv(const std::string& text);

} // namespace cvgeo::io

#endif
