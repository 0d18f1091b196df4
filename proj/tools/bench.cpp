// Benchmark comparing the serial reference implementations against the
// OpenMP-parallel kernels, verifying that both produce identical results.
//
//   bench [--trunc N] [--window n] [--jobs J]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dbc/condense.hpp"
#include "dbc/doublebox.hpp"
#include "dbc/doubledimer.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int mismatches = 0;

void row(const char* name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-28s %10.3fs %10.3fs %8.2fx   %s\n", name, serial_s,
              parallel_s, serial_s / parallel_s, equal ? "equal" : "MISMATCH");
  if (!equal) ++mismatches;
}

}  // namespace

int main(int argc, char** argv) {
  int trunc = 6, window = 7, jobs = 0;
  for (int i = 1; i < argc - 1; ++i) {
    if (!std::strcmp(argv[i], "--trunc")) trunc = std::atoi(argv[i + 1]);
    if (!std::strcmp(argv[i], "--window")) window = std::atoi(argv[i + 1]);
    if (!std::strcmp(argv[i], "--jobs")) jobs = std::atoi(argv[i + 1]);
  }
#ifdef _OPENMP
  int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  int threads = 1;
  std::puts("built without OpenMP; parallel runs degenerate to serial");
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%-28s %11s %11s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  {
    auto t0 = Clock::now();
    dbc::QSeries s = dbc::zdbc(1, 1, 1, trunc, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    dbc::QSeries p = dbc::zdbc(1, 1, 1, trunc, jobs);
    double tp = seconds_since(t0);
    std::string name = "zdbc(1,1,1) N=" + std::to_string(trunc);
    row(name.c_str(), ts, tp, s == p);
  }
  {
    auto t0 = Clock::now();
    dbc::WindowSeries s = dbc::zddc_window(1, 1, 1, window, trunc, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    dbc::WindowSeries p = dbc::zddc_window(1, 1, 1, window, trunc, jobs);
    double tp = seconds_since(t0);
    std::string name =
        "zddc window n=" + std::to_string(window) + " N=" + std::to_string(trunc);
    row(name.c_str(), ts, tp, s.series == p.series);
  }
  {
    int ceiling = window + 2;
    auto t0 = Clock::now();
    dbc::StabilizedSeries s = dbc::zddc(1, 1, 1, trunc, ceiling, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    dbc::StabilizedSeries p = dbc::zddc(1, 1, 1, trunc, ceiling, jobs);
    double tp = seconds_since(t0);
    std::string name = "zddc stabilized N=" + std::to_string(trunc);
    row(name.c_str(), ts, tp,
        s.series == p.series && s.stabilized_at == p.stabilized_at);
  }
  {
    auto t0 = Clock::now();
    bool s = dbc::check_recurrence_grid(4, 24, 1);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    bool p = dbc::check_recurrence_grid(4, 24, jobs);
    double tp = seconds_since(t0);
    row("recurrence grid 4, N=24", ts, tp, s == p && s);
  }
  return mismatches ? 1 : 0;
}
