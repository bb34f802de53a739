// Compares the serial reference implementations against the OpenMP kernels on
// representative workloads: the exact cyclic-cutset search and a sweep.

#include <chrono>
#include <cstdio>

#include "pgc/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pgc;

namespace {

template <typename F>
double time_ms(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void bench_search(const char* label, const PowerGraph& g, SearchOptions opt) {
  opt.policy = ExecPolicy::Serial;
  ConnectivityValue serial_value, parallel_value;
  const double serial = time_ms([&] { serial_value = cyclic_vertex_connectivity(g, opt).value; });
  opt.policy = ExecPolicy::Parallel;
  const double parallel =
      time_ms([&] { parallel_value = cyclic_vertex_connectivity(g, opt).value; });
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", label, serial,
              parallel, parallel > 0 ? serial / parallel : 0.0,
              serial_value == parallel_value ? "values match" : "VALUE MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both runs are serial\n");
#endif

  SearchOptions vertex_opt;
  vertex_opt.mode = SearchMode::VertexOracle;
  SearchOptions class_opt;
  class_opt.mode = SearchMode::ClassQuotient;
  class_opt.class_cap = 64;

  bench_search("vertex search P(C_36)", build(GroupSpec::cyclic(36)), vertex_opt);
  bench_search("vertex search P(C_40)", build(GroupSpec::cyclic(40)), vertex_opt);
  bench_search("vertex search P(Q_40)", build(GroupSpec::dicyclic(10)), vertex_opt);
  bench_search("class search P(C_240)", build(GroupSpec::cyclic(240)), class_opt);
  bench_search("class search P(Q_92)", build(GroupSpec::dicyclic(23)), class_opt);

  for (auto policy : {ExecPolicy::Serial, ExecPolicy::Parallel}) {
    const double ms = time_ms([&] { sweep(Family::Cyclic, 2, 120, {}, Caps{}, policy); });
    std::printf("sweep cyclic 2..120           %s %9.2f ms\n",
                policy == ExecPolicy::Serial ? "serial  " : "parallel", ms);
  }
  return 0;
}
