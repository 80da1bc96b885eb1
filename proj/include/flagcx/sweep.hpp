#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "flagcx/chevalley.hpp"
#include "flagcx/courant.hpp"
#include "flagcx/mclass.hpp"
#include "flagcx/sampling.hpp"

namespace flagcx {

// Maximal flags covered by the non-integrability theorem: B2, A3, G2, D_l (l >= 5), C_l (l >= 6 even).
bool in_theorem_scope(const FlagSpec& fs);

// Thread cap from FLAGCX_THREADS, else the OpenMP default.
int configured_threads();

struct CertifyPlan {
  std::shared_ptr<const TangentModel> model;
  std::vector<Combination> combinations;  // ignored when random_per_sample
  bool random_per_sample = false;
  int samples = 100;
  std::uint64_t seed = 0;
  bool keep_detail = true;  // keep structures and witnesses
};

struct SampleOutcome {
  std::size_t combination = 0;
  std::size_t sample = 0;
  Combination combo;
  bool integrable = false;
  bool reverified = false;
  std::optional<InvariantGacs> structure;
  std::optional<Witness> witness;
};

struct CertifySummary {
  std::size_t total = 0;
  std::size_t not_integrable = 0;
  std::size_t integrable = 0;
  std::size_t unverified = 0;  // NotIntegrable verdicts whose witness failed re-evaluation
  friend bool operator==(const CertifySummary&, const CertifySummary&) = default;
};

// Structure for sample s of combination c; depends only on (seed, c, s).
InvariantGacs sample_structure(const CertifyPlan& plan, std::size_t c, std::size_t s, Combination* combo = nullptr);
SampleOutcome certify_one(const CertifyPlan& plan, std::size_t c, std::size_t s);

std::vector<SampleOutcome> certify_serial(const CertifyPlan& plan);
std::vector<SampleOutcome> certify_parallel(const CertifyPlan& plan, int threads = 0);
CertifySummary summarize(const std::vector<SampleOutcome>& outcomes);

JacobiReport jacobi_serial(const StructureConstants& sc);
JacobiReport jacobi_parallel(const StructureConstants& sc, int threads = 0);

// decide_existence for every Θ ⊆ Σ, indexed by the bitmask of Θ.
std::vector<ExistenceReport> existence_serial(const std::shared_ptr<const RootSystem>& rs);
std::vector<ExistenceReport> existence_parallel(const std::shared_ptr<const RootSystem>& rs, int threads = 0);

}  // namespace flagcx
