#pragma once

#include <string>

#include "dbc/doublebox.hpp"
#include "dbc/doubledimer.hpp"
#include "dbc/hexlattice.hpp"
#include "dbc/planepart.hpp"

namespace dbc {

// Static SVG renderers for the three object kinds. Inputs are the JSON
// dumps produced by the corresponding modules.

// Lozenge tiling of the n-window for a plane partition.
std::string render_pp_svg(const PlanePartition& pp, int n);

// Box diagram of a double-box class: projected cubes colored by type,
// moveable boxes outlined.
std::string render_dbc_svg(const DoubleBoxClass& cls);

// H(n) with doubled edges, loops, paths, and colored nodes.
std::string render_ddc_svg(const HexGraph& g, const DoubleDimerConfig& cfg,
                           const NodeSpec& spec);

}  // namespace dbc
