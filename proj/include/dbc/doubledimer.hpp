#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dbc/doublebox.hpp"
#include "dbc/hexlattice.hpp"
#include "dbc/qseries.hpp"

namespace dbc {

// Double-dimer configuration on H(n) with a node set: every non-node vertex
// covered exactly twice, every node exactly once. Decomposes into doubled
// edges, closed loops, and node-to-node paths.
struct DoubleDimerConfig {
  std::vector<uint8_t> mult;          // per edge id, 0/1/2
  std::vector<int> doubled;           // edge ids with multiplicity 2
  std::vector<std::vector<int>> loops;  // vertex cycles
  std::vector<std::vector<int>> paths;  // vertex sequences, node endpoints
  Pairing pairing;
  int loops_count = 0;
  int weight_exponent = 0;
  int excess = 0;  // weight_exponent minus the frozen minimum
  int a = 0, b = 0, c = 0;  // node parameters of the spec it was built with

  std::string to_json(const HexGraph& g) const;
};

// Checks the degree law and fills the decomposition. Throws on violation.
DoubleDimerConfig make_config(const HexGraph& g, const NodeSpec& spec,
                              std::vector<uint8_t> mult, int min_exponent);

// Every double-dimer configuration on H(n) with the given nodes, pairing
// sigma_{a,b,c}, and excess exponent <= max_excess, each exactly once.
// DFS over vertices in row order, pruned by degree feasibility and an
// admissible exponent bound (current exponent plus, per column of
// horizontal edges, the cheapest completion meeting the column's crossing
// parity and the number of sigma pairs the column line separates).
std::vector<DoubleDimerConfig> enumerate_ddc(const HexGraph& g,
                                             const NodeSpec& spec,
                                             int max_excess, int jobs = 0);

struct WindowSeries {
  QSeries series{0};
  int n = 0;
  int config_count = 0;
};

// Z_DDC on the H(n) window: sum of 2^loops q^excess over configurations
// with pairing sigma, normalized by the minimal configuration.
WindowSeries zddc_window(int a, int b, int c, int n, int trunc_order,
                         int jobs = 0);

struct StabilizationError : std::runtime_error {
  StabilizationError(const std::string& msg, QSeries partial, int n_reached)
      : std::runtime_error(msg), partial(std::move(partial)),
        n_reached(n_reached) {}
  QSeries partial;
  int n_reached;
};

struct StabilizedSeries {
  QSeries series{0};
  int stabilized_at = 0;                // first n of the agreeing pair
  std::vector<WindowSeries> windows;    // all windows computed, ascending n
};

// Window series at increasing n until two consecutive windows agree on all
// kept coefficients. Throws StabilizationError (with the last window as
// partial data) if the ceiling is reached first.
StabilizedSeries zddc(int a, int b, int c, int trunc_order,
                      int n_ceiling = 8, int jobs = 0);

// Image of a double-box class representative under the folklore bijection:
// superpose the matchings of eta_1, eta_2, eta_3 (drawn with (a,b,c) at the
// center face), remove the matching of eta_in U eta_out based at (a,b,c),
// restrict to H(n). Throws if the window is too small for the boxes.
DoubleDimerConfig dbc_to_ddc(const HexGraph& g, const DoubleBoxClass& cls,
                             const Assignment& rep);

}  // namespace dbc
