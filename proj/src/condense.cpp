#include "dbc/condense.hpp"

#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dbc/doublebox.hpp"
#include "dbc/doubledimer.hpp"
#include "json.hpp"

namespace dbc {

QSeries x_series(int a, int b, int c, int trunc_order) {
  QSeries m = macmahon(trunc_order);
  return mul(mul(m, m), macmahon_box(a, b, c, trunc_order));
}

namespace {

RecurrenceReport check_recurrence(int a, int b, int c, int N, bool with_m2) {
  if (a < 0 || b < 0 || c < 1)
    throw std::invalid_argument("recurrence step requires a,b >= 0 and c >= 1");
  auto term = [&](int da, int db, int dc) {
    return with_m2 ? x_series(a + da, b + db, c + dc, N)
                   : macmahon_box(a + da, b + db, c + dc, N);
  };
  RecurrenceReport r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.trunc_order = N;
  r.lhs = mul(term(0, 0, 0), term(1, 1, 0));
  r.rhs = add(mul(term(1, 0, 0), term(0, 1, 0)),
              shift(mul(term(1, 1, -1), term(0, 0, 1)), a + b + 1));
  int fm = r.lhs.first_mismatch(r.rhs);
  r.pass = fm < 0;
  if (fm >= 0) r.first_mismatch = fm;
  return r;
}

}  // namespace

RecurrenceReport check_x_recurrence(int a, int b, int c, int trunc_order) {
  return check_recurrence(a, b, c, trunc_order, true);
}

RecurrenceReport check_m_recurrence(int a, int b, int c, int trunc_order) {
  return check_recurrence(a, b, c, trunc_order, false);
}

std::optional<int> solve_m_recurrence_prefactor(int a, int b, int c, int N) {
  QSeries lhs = mul(macmahon_box(a, b, c, N), macmahon_box(a + 1, b + 1, c, N));
  QSeries t1 =
      mul(macmahon_box(a + 1, b, c, N), macmahon_box(a, b + 1, c, N));
  QSeries t2 =
      mul(macmahon_box(a + 1, b + 1, c - 1, N), macmahon_box(a, b, c + 1, N));
  QSeries diff = sub(lhs, t1);
  for (int k = 0; k <= N; ++k)
    if (diff == shift(t2, k)) return k;
  return std::nullopt;
}

bool check_recurrence_grid(int grid, int trunc_order, int jobs) {
  std::vector<std::array<int, 3>> points;
  for (int a = 0; a <= grid; ++a)
    for (int b = 0; b <= grid; ++b)
      for (int c = 1; c <= grid; ++c) {
        points.push_back({a, b, c});
        if (a >= 1) points.push_back({b, c, a});
        if (b >= 1) points.push_back({c, a, b});
      }
  bool all_pass = true;
#ifdef _OPENMP
  int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads) \
    reduction(&& : all_pass)
#else
  (void)jobs;
#endif
  for (size_t i = 0; i < points.size(); ++i) {
    auto [a, b, c] = points[i];
    RecurrenceReport rm = check_m_recurrence(a, b, c, trunc_order);
    RecurrenceReport rx = check_x_recurrence(a, b, c, trunc_order);
    all_pass = all_pass && rm.pass && rx.pass && rm.pass == rx.pass;
  }
  return all_pass;
}

MainReport verify_main(int a, int b, int c, int trunc_order, bool with_ddc,
                       int n_ceiling, int jobs) {
  MainReport r;
  r.a = a;
  r.b = b;
  r.c = c;
  r.trunc_order = trunc_order;
  r.z_dbc = zdbc(a, b, c, trunc_order, jobs);
  r.x = x_series(a, b, c, trunc_order);
  int fm = r.z_dbc.first_mismatch(r.x);
  r.pass = fm < 0;
  if (fm >= 0) r.first_mismatch_dbc_x = fm;
  if (with_ddc) {
    StabilizedSeries s = zddc(a, b, c, trunc_order, n_ceiling, jobs);
    r.z_ddc = s.series;
    r.ddc_stabilized_at = s.stabilized_at;
    int fd = s.series.first_mismatch(r.z_dbc);
    if (fd >= 0) {
      r.first_mismatch_ddc = fd;
      r.pass = false;
    }
  }
  return r;
}

std::string RecurrenceReport::to_json() const {
  nlohmann::json j;
  j["params"] = {a, b, c};
  j["trunc_order"] = trunc_order;
  j["lhs"] = nlohmann::json::parse(lhs.to_json());
  j["rhs"] = nlohmann::json::parse(rhs.to_json());
  j["pass"] = pass;
  if (first_mismatch)
    j["first_mismatch"] = *first_mismatch;
  else
    j["first_mismatch"] = nullptr;
  return j.dump();
}

std::string MainReport::to_json() const {
  nlohmann::json j;
  j["params"] = {a, b, c};
  j["trunc_order"] = trunc_order;
  j["z_dbc"] = nlohmann::json::parse(z_dbc.to_json());
  j["x_series"] = nlohmann::json::parse(x.to_json());
  if (z_ddc) j["z_ddc"] = nlohmann::json::parse(z_ddc->to_json());
  if (ddc_stabilized_at) j["ddc_stabilized_at"] = *ddc_stabilized_at;
  j["pass"] = pass;
  j["first_mismatch_dbc_x"] =
      first_mismatch_dbc_x ? nlohmann::json(*first_mismatch_dbc_x) : nullptr;
  j["first_mismatch_ddc"] =
      first_mismatch_ddc ? nlohmann::json(*first_mismatch_ddc) : nullptr;
  return j.dump();
}

}  // namespace dbc
