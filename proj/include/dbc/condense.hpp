#pragma once

#include <optional>
#include <string>

#include "dbc/qseries.hpp"

namespace dbc {

struct RecurrenceReport {
  int a = 0, b = 0, c = 0, trunc_order = 0;
  QSeries lhs{0}, rhs{0};
  bool pass = false;
  std::optional<int> first_mismatch;

  std::string to_json() const;
};

// X(a,b,c) = M(q)^2 M_{a,b,c}(q).
QSeries x_series(int a, int b, int c, int trunc_order);

// The condensation recurrence, with c the distinguished axis:
//   X(a,b,c) X(a+1,b+1,c) = X(a+1,b,c) X(a,b+1,c)
//                           + q^(a+b+1) X(a+1,b+1,c-1) X(a,b,c+1).
// Requires c >= 1 (the c-1 term); c = 0 is covered by the initial-condition
// family M_{a,b,0} = 1 instead.
RecurrenceReport check_x_recurrence(int a, int b, int c, int trunc_order);

// Same relation with the common M(q)^4 factored out, i.e. on M_{a,b,c}
// alone. Agreement with check_x_recurrence is itself an invariant.
RecurrenceReport check_m_recurrence(int a, int b, int c, int trunc_order);

// Smallest k with lhs - term1 == q^k * term2 of the M-recurrence, if any.
// Exposes the condensation prefactor so tests can derive it rather than
// assume it.
std::optional<int> solve_m_recurrence_prefactor(int a, int b, int c,
                                                int trunc_order);

struct MainReport {
  int a = 0, b = 0, c = 0, trunc_order = 0;
  QSeries z_dbc{0}, x{0};
  std::optional<QSeries> z_ddc;  // set when with_ddc
  bool pass = false;
  std::optional<int> first_mismatch_dbc_x;
  std::optional<int> first_mismatch_ddc;
  std::optional<int> ddc_stabilized_at;

  std::string to_json() const;
};

// Theorem-level comparison: zdbc vs M^2 M_{a,b,c}, optionally vs the
// stabilized double-dimer series.
MainReport verify_main(int a, int b, int c, int trunc_order,
                       bool with_ddc = false, int n_ceiling = 8, int jobs = 0);

// Both recurrence forms at every grid point 0 <= a,b <= grid,
// 1 <= c <= grid, in the three cyclic axis orientations. Points are
// independent and run in parallel.
bool check_recurrence_grid(int grid, int trunc_order, int jobs = 0);

}  // namespace dbc
