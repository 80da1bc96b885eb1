#include "flagcx/sweep.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

#include "flagcx/errors.hpp"

namespace flagcx {

bool in_theorem_scope(const FlagSpec& fs) {
  if (!fs.is_maximal()) return false;
  const LieType& t = fs.root_system().lie_type();
  switch (t.family) {
    case Family::A: return t.rank == 3;
    case Family::B: return t.rank == 2;
    case Family::G: return true;
    case Family::D: return t.rank >= 5;
    case Family::C: return t.rank >= 6 && t.rank % 2 == 0;
  }
  return false;
}

int configured_threads() {
  if (const char* env = std::getenv("FLAGCX_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

namespace {

int resolve(int threads) { return threads > 0 ? threads : configured_threads(); }

std::size_t combination_count(const CertifyPlan& plan) {
  return plan.random_per_sample ? 1 : plan.combinations.size();
}

// Runs f(i) for i in [0, n) across threads; the first exception is rethrown after the loop.
template <class F>
void parallel_for(std::size_t n, int threads, F&& f) {
  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(flagcx_sweep_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
}

}  // namespace

InvariantGacs sample_structure(const CertifyPlan& plan, std::size_t c, std::size_t s, Combination* combo) {
  Rng rng = Rng::stream(plan.seed, c, s);
  Combination pick = plan.random_per_sample ? random_combination(*plan.model, rng) : plan.combinations.at(c);
  InvariantGacs j = random_structure(plan.model, pick, rng);
  if (combo) *combo = std::move(pick);
  return j;
}

SampleOutcome certify_one(const CertifyPlan& plan, std::size_t c, std::size_t s) {
  SampleOutcome out;
  out.combination = c;
  out.sample = s;
  InvariantGacs j = sample_structure(plan, c, s, &out.combo);
  const Eigenspace l(j);
  IntegrabilityVerdict v = check_integrability(l);
  if (auto* ni = std::get_if<NotIntegrable>(&v)) {
    out.reverified = reverify(l, ni->witness);
    if (plan.keep_detail) out.witness = std::move(ni->witness);
  } else {
    out.integrable = true;
  }
  if (plan.keep_detail) out.structure = std::move(j);
  return out;
}

std::vector<SampleOutcome> certify_serial(const CertifyPlan& plan) {
  std::vector<SampleOutcome> out;
  const std::size_t nc = combination_count(plan);
  for (std::size_t c = 0; c < nc; ++c)
    for (int s = 0; s < plan.samples; ++s) out.push_back(certify_one(plan, c, s));
  return out;
}

std::vector<SampleOutcome> certify_parallel(const CertifyPlan& plan, int threads) {
  const std::size_t nc = combination_count(plan);
  const std::size_t ns = static_cast<std::size_t>(plan.samples);
  std::vector<SampleOutcome> out(nc * ns);
  parallel_for(out.size(), resolve(threads), [&](std::size_t i) { out[i] = certify_one(plan, i / ns, i % ns); });
  return out;
}

CertifySummary summarize(const std::vector<SampleOutcome>& outcomes) {
  CertifySummary s;
  for (const auto& o : outcomes) {
    ++s.total;
    if (o.integrable) {
      ++s.integrable;
    } else {
      ++s.not_integrable;
      if (!o.reverified) ++s.unverified;
    }
  }
  return s;
}

JacobiReport jacobi_serial(const StructureConstants& sc) {
  return sc.jacobi_slice(0, sc.root_system().num_roots());
}

JacobiReport jacobi_parallel(const StructureConstants& sc, int threads) {
  const int n = sc.root_system().num_roots();
  std::vector<JacobiReport> parts(n);
  parallel_for(n, resolve(threads), [&](std::size_t i) {
    parts[i] = sc.jacobi_slice(static_cast<int>(i), static_cast<int>(i) + 1);
  });
  JacobiReport total;
  for (const auto& p : parts) {
    total.triples += p.triples;
    total.zero_sum += p.zero_sum;
    total.violations += p.violations;
  }
  return total;
}

namespace {

FlagSpec flag_of_mask(const std::shared_ptr<const RootSystem>& rs, std::size_t mask) {
  std::vector<int> theta;
  for (int i = 0; i < rs->rank(); ++i)
    if (mask >> i & 1) theta.push_back(i);
  return FlagSpec(rs, theta);
}

}  // namespace

std::vector<ExistenceReport> existence_serial(const std::shared_ptr<const RootSystem>& rs) {
  std::vector<ExistenceReport> out;
  const std::size_t n = std::size_t{1} << rs->rank();
  for (std::size_t m = 0; m < n; ++m) out.push_back(decide_existence(flag_of_mask(rs, m)));
  return out;
}

std::vector<ExistenceReport> existence_parallel(const std::shared_ptr<const RootSystem>& rs, int threads) {
  const std::size_t n = std::size_t{1} << rs->rank();
  std::vector<std::optional<ExistenceReport>> slots(n);
  parallel_for(n, resolve(threads), [&](std::size_t m) { slots[m] = decide_existence(flag_of_mask(rs, m)); });
  std::vector<ExistenceReport> out;
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace flagcx
