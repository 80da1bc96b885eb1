#include "doctest.h"

#include "flagcx/btransform.hpp"
#include "flagcx/errors.hpp"
#include "support.hpp"

using namespace flagcx;

namespace {

BField random_invariant_b(const TangentModel& model, Rng& rng) {
  BField b(model);
  for (int c = 0; c < static_cast<int>(model.classes().size()); ++c) {
    const auto& ps = model.class_positions(c);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) b.set(ps[i], ps[j], random_rational(rng));
  }
  return b;
}

BField class_b(const TangentModel& model, int c, const Rational& r) {
  BField b(model);
  const auto& ps = model.class_positions(c);
  b.set(ps[0], ps[1], r);
  return b;
}

Spinor random_spinor(const TangentModel& model, Rng& rng) {
  Spinor s;
  const Spinor::Mask full = (Spinor::Mask{1} << model.dim()) - 1;
  for (int t = 0; t < 6; ++t) s.add(static_cast<Spinor::Mask>(rng.next()) & full, support::random_gq(rng));
  return s;
}

Spinor dual(const TangentModel& m, int pos) { return Spinor::one_form(m, {{pos, GQ(1)}}); }

}  // namespace

TEST_SUITE("btransform") {
  TEST_CASE("B-field storage is antisymmetric") {
    auto model = support::maximal(Family::B, 2);
    BField b(*model);
    b.set(2, 0, 5);
    CHECK(b.coeff(0, 2) == -5);
    CHECK(b.coeff(2, 0) == 5);
    CHECK(b.coeff(1, 1) == 0);
    b.set(0, 2, 0);
    CHECK(b.is_zero());
    CHECK_THROWS(b.set(1, 1, 2));
  }

  TEST_CASE("apply_b is a group action preserving type") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::A, 3}, {Family::G, 2}, {Family::D, 4}}) {
      auto model = support::maximal(f, l);
      Rng rng(21);
      for (int t = 0; t < 20; ++t) {
        InvariantGacs j = random_structure(model, random_combination(*model, rng), rng);
        const BField b1 = random_invariant_b(*model, rng), b2 = random_invariant_b(*model, rng);
        CHECK(apply_b(j, BField(*model)).full_matrix() == j.full_matrix());
        CHECK(apply_b(apply_b(j, b1), b2).full_matrix() == apply_b(j, b1 + b2).full_matrix());
        CHECK(apply_b(apply_b(j, b1), -b1).full_matrix() == j.full_matrix());
        CHECK(structure_type(apply_b(j, b1)) == structure_type(j));
      }
    }
  }

  TEST_CASE("apply_b agrees with the shear on vectors") {
    auto model = support::maximal(Family::G, 2);
    Rng rng(3);
    InvariantGacs j = random_structure(model, random_combination(*model, rng), rng);
    const BField b = random_invariant_b(*model, rng);
    const InvariantGacs jb = apply_b(j, b);
    for (int t = 0; t < 20; ++t) {
      const GVector v = support::random_gvector(*model, rng);
      CHECK(jb.apply(v) == exp_b(-b, j.apply(exp_b(b, v))));
    }
  }

  TEST_CASE("non-invariant B is rejected") {
    auto model = support::maximal(Family::B, 2);
    BField b(*model);
    b.set(model->class_positions(0)[0], model->class_positions(1)[0], 1);
    CHECK(!b.is_invariant());
    InvariantGacs j(model, {symplectic_block(1), symplectic_block(2)});
    CHECK_THROWS_AS(apply_b(j, b), InvariantViolation);
  }

  TEST_CASE("noncomplex blocks are B-transforms of symplectic ones") {
    auto model = support::maximal(Family::B, 2);
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
      const NonComplexType nc = random_noncomplex(rng);
      const ComplexType c = random_complex(rng);
      InvariantGacs sym(model, {symplectic_block(nc.x), c});
      InvariantGacs got = apply_b(sym, class_b(*model, 0, -nc.a / nc.x));
      const auto* blk = std::get_if<NonComplexType>(&got.blocks()[0]);
      REQUIRE(blk);
      CHECK(blk->a == nc.a);
      CHECK(blk->x == nc.x);
      CHECK(blk->y == nc.y);
      // The complex block is fixed by any B on its class.
      InvariantGacs fixed = apply_b(sym, class_b(*model, 1, random_rational(rng)));
      CHECK(fixed.block_matrix(1) == sym.block_matrix(1));
      const auto* cb = std::get_if<ComplexType>(&fixed.blocks()[1]);
      REQUIRE(cb);
      CHECK(cb->b == c.b);
      CHECK(cb->c == c.c);
    }
  }

  TEST_CASE("canonical form round trip") {
    for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::A, 3}, {Family::G, 2}, {Family::D, 5}}) {
      auto model = support::maximal(f, l);
      Rng rng(40);
      for (int t = 0; t < 20; ++t) {
        InvariantGacs j = random_structure(model, random_combination(*model, rng), rng);
        auto [j0, b] = canonical_form(j);
        CHECK(apply_b(j0, b).full_matrix() == j.full_matrix());
        for (std::size_t c = 0; c < j0.blocks().size(); ++c) {
          if (const auto* n = std::get_if<NonComplexType>(&j0.blocks()[c])) CHECK(n->a == 0);
          CHECK(kind_of(j0.blocks()[c]) == kind_of(j.blocks()[c]));
        }
      }
    }
    auto model = support::maximal(Family::B, 2);
    InvariantGacs sym(model, {symplectic_block(3), symplectic_block(-1)});
    auto [j0, b] = canonical_form(sym);
    CHECK(b.is_zero());
    CHECK(j0.full_matrix() == sym.full_matrix());
  }

  TEST_CASE("moduli coordinates") {
    auto model = support::maximal(Family::B, 2);
    auto mc = moduli_coordinates(InvariantGacs(model, {symplectic_block(1), symplectic_block(2)}));
    CHECK(mc == std::vector<ModuliCoordinate>{SymplecticCoord{1}, SymplecticCoord{2}});
    mc = moduli_coordinates(InvariantGacs(model, {make_noncomplex(3, 2), ComplexType{4, 5}}));
    CHECK(mc == std::vector<ModuliCoordinate>{SymplecticCoord{2}, ComplexCoord{5, 4}});
    CHECK(moduli_coordinates(InvariantGacs(model, {make_noncomplex(3, 2), ComplexType{4, 5}})) ==
          moduli_coordinates(InvariantGacs(model, {make_noncomplex(-7, 2), ComplexType{4, 5}})));

    Rng rng(77);
    for (int t = 0; t < 50; ++t) {
      InvariantGacs j = random_structure(model, random_combination(*model, rng), rng);
      CHECK(moduli_coordinates(apply_b(j, random_invariant_b(*model, rng))) == moduli_coordinates(j));
    }
  }

  TEST_CASE("GM2 restrictions") {
    auto c6 = support::maximal(Family::C, 6);
    Rng rng(1);
    InvariantGacs j = random_structure(c6, random_combination(*c6, rng), rng);
    CHECK_THROWS_AS(canonical_form(j), Unsupported);
    CHECK_THROWS_AS(pure_spinor(j), Unsupported);
    CHECK_THROWS_AS(metric_moduli(*c6), Unsupported);
    auto b3 = build_tangent_model(FlagSpec(build_root_system({Family::B, 3}), {0, 1}));
    CHECK_THROWS_AS(metric_moduli(*b3), Unsupported);
  }

  TEST_CASE("exterior algebra") {
    auto model = support::maximal(Family::A, 3);
    Rng rng(5);
    for (int t = 0; t < 30; ++t) {
      const Spinor a = random_spinor(*model, rng), b = random_spinor(*model, rng), c = random_spinor(*model, rng);
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
    const Spinor e0 = dual(*model, 0), e1 = dual(*model, 1), e2 = dual(*model, 2);
    CHECK(wedge(e0, e1) == GQ(-1) * wedge(e1, e0));
    CHECK(wedge(e0, e0).is_zero());
    const Spinor w = wedge(e0, e1);
    CHECK(wedge(w, e2) == wedge(e2, w));
    CHECK(contract(0, wedge(e0, e1)) == e1);
    CHECK(contract(1, wedge(e0, e1)) == GQ(-1) * e0);
    CHECK(Spinor::exp(Spinor()) == Spinor::one());
    // exp(e0∧e1 + e2∧e3) = 1 + e0∧e1 + e2∧e3 + e0∧e1∧e2∧e3.
    const Spinor e3 = dual(*model, 3);
    const Spinor form = wedge(e0, e1) + wedge(e2, e3);
    CHECK(Spinor::exp(form) == Spinor::one() + form + wedge(wedge(e0, e1), wedge(e2, e3)));
  }

  TEST_CASE("Clifford action") {
    auto model = support::maximal(Family::G, 2);
    const GVector x0 = GVector::basis(*model, {0, false});
    const GVector x0s = GVector::basis(*model, {0, true});
    CHECK(clifford_act(x0, dual(*model, 0)) == Spinor::one());
    CHECK(clifford_act(x0s, Spinor::one()) == dual(*model, 0));
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
      const GVector v = support::random_gvector(*model, rng);
      const Spinor s = random_spinor(*model, rng);
      CHECK(clifford_act(v, clifford_act(v, s)) == pairing_q(v, v) * s);
    }
  }

  TEST_CASE("pure spinors") {
    auto model = support::maximal(Family::B, 2);
    const auto& p0 = model->class_positions(0);
    const auto& p1 = model->class_positions(1);

    InvariantGacs sym(model, {symplectic_block(2), symplectic_block(-3)});
    Spinor omega;
    omega.add((Spinor::Mask{1} << p0[0]) | (Spinor::Mask{1} << p0[1]), GQ(0, Rational(1, 2)));
    omega.add((Spinor::Mask{1} << p1[0]) | (Spinor::Mask{1} << p1[1]), GQ(0, Rational(-1, 3)));
    CHECK(pure_spinor(sym) == Spinor::exp(omega));

    InvariantGacs cx(model, {ComplexType{1, 2}, ComplexType{0, 3}});
    const Spinor phi = pure_spinor(cx);
    CHECK(phi.max_degree() == 2);
    CHECK(phi.terms().size() == 4);
    for (const auto& [m, v] : phi.terms()) CHECK(std::popcount(m) == 2);

    for (auto [f, l] : std::vector<std::pair<Family, int>>{{Family::B, 2}, {Family::A, 3}, {Family::G, 2}, {Family::D, 5}}) {
      auto md = support::maximal(f, l);
      Rng rng(l);
      for (int t = 0; t < 10; ++t) {
        InvariantGacs j = random_structure(md, random_combination(*md, rng), rng);
        const Spinor s = pure_spinor(j);
        for (const auto& v : plus_i_eigenspace(j)) CHECK(clifford_act(v, s).is_zero());
        CHECK(annihilator_dimension(*md, s) == md->dim());
        const BField b = random_invariant_b(*md, rng);
        CHECK(proportional(pure_spinor(apply_b(j, b)), wedge(Spinor::exp(Spinor::two_form(b)), s)));
      }
    }
  }

  TEST_CASE("Hermitian pairs") {
    auto model = support::maximal(Family::B, 2);
    InvariantGacs jc(model, {ComplexType{0, 1}, ComplexType{2, 3}});
    InvariantGacs jn(model, {make_noncomplex(1, 2), symplectic_block(5)});
    auto v = hermitian_pair(jc, jn);
    REQUIRE(std::holds_alternative<HermitianValid>(v));
    const auto& g = std::get<HermitianValid>(v).metric;
    CHECK(g.matrix * g.matrix == QMatrix::identity(8));
    CHECK(std::holds_alternative<HermitianInvalid>(hermitian_pair(jc, jc)));

    InvariantGacs bad(model, {symplectic_block(-1), symplectic_block(1)});
    auto w = hermitian_pair(jc, bad);
    REQUIRE(std::holds_alternative<HermitianInvalid>(w));
    CHECK(std::get<HermitianInvalid>(w).class_index == 0);
    CHECK(std::get<HermitianInvalid>(w).reason.find("cx > 0") != std::string::npos);
  }

  TEST_CASE("metric normal form") {
    auto model = support::maximal(Family::B, 2);
    const auto& p0 = model->class_positions(0);
    InvariantGacs jc(model, {ComplexType{0, 3}, ComplexType{0, 1}});
    InvariantGacs jn(model, {symplectic_block(2), symplectic_block(1)});
    auto v = hermitian_pair(jc, jn);
    REQUIRE(std::holds_alternative<HermitianValid>(v));
    const auto nf = metric_normal_form(std::get<HermitianValid>(v).metric);
    CHECK(nf.riemannian(p0[0], p0[0]) == Rational(3, 2));
    CHECK(nf.riemannian(p0[1], p0[1]) == Rational(1, 6));
    CHECK(nf.riemannian(p0[0], p0[1]) == 0);
    CHECK(nf.b2.is_zero());
    CHECK(metric_from_normal_form(*model, nf) == std::get<HermitianValid>(v).metric.matrix);

    // General b: g = [[c/x, -b/x], [-b/x, (1+b²)/(cx)]].
    InvariantGacs jc2(model, {ComplexType{2, 1}, ComplexType{0, 1}});
    auto v2 = hermitian_pair(jc2, jn);
    REQUIRE(std::holds_alternative<HermitianValid>(v2));
    const auto nf2 = metric_normal_form(std::get<HermitianValid>(v2).metric);
    CHECK(nf2.riemannian(p0[0], p0[0]) == Rational(1, 2));
    CHECK(nf2.riemannian(p0[0], p0[1]) == -1);
    CHECK(nf2.riemannian(p0[1], p0[1]) == Rational(5, 2));
  }

  TEST_CASE("metric moduli") {
    CHECK(metric_moduli(*support::maximal(Family::B, 2)).size() == 2);
    CHECK(metric_moduli(*support::maximal(Family::G, 2)).size() == 3);
    const auto d5 = metric_moduli(*support::maximal(Family::D, 5));
    CHECK(d5.size() == 10);
    CHECK(d5[0].constraint == "c*x > 0");
    CHECK(d5[0].coordinates == std::vector<std::string>{"c", "x", "b"});
  }
}
