// Serial reference vs OpenMP kernels: wall time and result agreement.

#include <chrono>
#include <cstdio>
#include <set>

#include "flagcx/sweep.hpp"

using namespace flagcx;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", configured_threads());

  for (LieType t : {LieType{Family::B, 6}, LieType{Family::G, 2}}) {
    auto sc = build_structure_constants(build_root_system(t));
    JacobiReport s, p;
    const double ts = seconds([&] { s = jacobi_serial(*sc); });
    const double tp = seconds([&] { p = jacobi_parallel(*sc); });
    row(("jacobi " + t.name()).c_str(), ts, tp, s == p);
  }

  for (LieType t : {LieType{Family::C, 8}, LieType{Family::D, 8}}) {
    auto rs = build_root_system(t);
    std::vector<ExistenceReport> s, p;
    const double ts = seconds([&] { s = existence_serial(rs); });
    const double tp = seconds([&] { p = existence_parallel(rs); });
    bool same = s.size() == p.size();
    for (std::size_t i = 0; same && i < s.size(); ++i) same = s[i].admits_gacs == p[i].admits_gacs;
    row(("existence " + t.name()).c_str(), ts, tp, same);
  }

  for (LieType t : {LieType{Family::G, 2}, LieType{Family::D, 5}}) {
    auto model = build_tangent_model(FlagSpec(build_root_system(t), {}));
    CertifyPlan plan{model, all_combinations(*model), false, 20, 7, false};
    if (plan.combinations.size() > 16) plan.combinations.resize(16);
    CertifySummary s, p;
    const double ts = seconds([&] { s = summarize(certify_serial(plan)); });
    const double tp = seconds([&] { p = summarize(certify_parallel(plan)); });
    row(("certify " + t.name()).c_str(), ts, tp, s == p);
  }
}
