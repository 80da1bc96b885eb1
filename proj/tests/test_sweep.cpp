#include "doctest.h"

#include <cstdlib>
#include <set>

#include "flagcx/sweep.hpp"
#include "support.hpp"

using namespace flagcx;

TEST_SUITE("sweep") {
  TEST_CASE("parallel certification matches the serial reference") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::G, 2}, {Family::C, 4}}) {
      auto model = support::maximal(f, l);
      CertifyPlan plan{model, all_combinations(*model), false, 3, 99, true};
      if (plan.combinations.size() > 16) plan.combinations.resize(16);
      const auto serial = certify_serial(plan);
      const auto parallel = certify_parallel(plan, 4);
      REQUIRE(serial.size() == parallel.size());
      for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].combination == parallel[i].combination);
        CHECK(serial[i].sample == parallel[i].sample);
        CHECK(serial[i].combo == parallel[i].combo);
        CHECK(serial[i].integrable == parallel[i].integrable);
        CHECK(serial[i].structure->full_matrix() == parallel[i].structure->full_matrix());
        REQUIRE(serial[i].witness);
        REQUIRE(parallel[i].witness);
        CHECK(serial[i].witness->elements == parallel[i].witness->elements);
        CHECK(serial[i].witness->value == parallel[i].witness->value);
      }
      CHECK(summarize(serial) == summarize(parallel));
      CHECK(summarize(serial).not_integrable == serial.size());
      CHECK(summarize(serial).unverified == 0);
    }
  }

  TEST_CASE("samples depend only on (seed, combination, sample)") {
    auto model = support::maximal(Family::A, 3);
    CertifyPlan a{model, all_combinations(*model), false, 4, 5, false};
    CertifyPlan b = a;
    b.samples = 2;
    CHECK(sample_structure(a, 3, 1).full_matrix() == sample_structure(b, 3, 1).full_matrix());
    CertifyPlan c = a;
    c.seed = 6;
    CHECK(sample_structure(a, 3, 1).full_matrix() != sample_structure(c, 3, 1).full_matrix());
  }

  TEST_CASE("random per-sample combinations") {
    auto model = support::maximal(Family::D, 5);
    CertifyPlan plan{model, {}, true, 12, 3, false};
    const auto out = certify_parallel(plan, 2);
    CHECK(out.size() == 12);
    std::set<Combination> seen;
    for (const auto& o : out) seen.insert(o.combo);
    CHECK(seen.size() > 1);
    CHECK(summarize(out) == summarize(certify_serial(plan)));
  }

  TEST_CASE("Jacobi kernels agree") {
    for (auto t : std::vector<LieType>{{Family::A, 4}, {Family::C, 4}, {Family::G, 2}}) {
      auto sc = build_structure_constants(build_root_system(t));
      const auto s = jacobi_serial(*sc);
      CHECK(s == jacobi_parallel(*sc, 3));
      CHECK(s.violations == 0);
      CHECK(s.triples > 0);
    }
  }

  TEST_CASE("existence kernels agree") {
    auto rs = build_root_system({Family::D, 5});
    const auto s = existence_serial(rs);
    const auto p = existence_parallel(rs, 3);
    REQUIRE(s.size() == 32);
    REQUIRE(p.size() == 32);
    for (std::size_t m = 0; m < s.size(); ++m) {
      CHECK(s[m].admits_gacs == p[m].admits_gacs);
      CHECK(s[m].gm2 == p[m].gm2);
      CHECK(s[m].classes.size() == p[m].classes.size());
      CHECK(s[m].flag.theta() == p[m].flag.theta());
    }
  }

  TEST_CASE("thread cap from the environment") {
    setenv("FLAGCX_THREADS", "3", 1);
    CHECK(configured_threads() == 3);
    setenv("FLAGCX_THREADS", "junk", 1);
    CHECK(configured_threads() >= 1);
    unsetenv("FLAGCX_THREADS");
  }

  TEST_CASE("theorem scope") {
    auto scope = [](Family f, int l) { return in_theorem_scope(FlagSpec(build_root_system({f, l}), {})); };
    CHECK(scope(Family::B, 2));
    CHECK(scope(Family::A, 3));
    CHECK(scope(Family::G, 2));
    CHECK(scope(Family::D, 5));
    CHECK(scope(Family::C, 6));
    CHECK(!scope(Family::C, 4));
    CHECK(!scope(Family::D, 4));
    CHECK(!scope(Family::C, 7));
    CHECK(!in_theorem_scope(FlagSpec(build_root_system({Family::B, 2}), {0})));
  }
}
