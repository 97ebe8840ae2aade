#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace relstab;
using fx::c2;
using fx::c3;
using fx::z;

TEST(Module, CreateValidatesChainAndAction) {
  std::vector<Matrix> id2(2, Matrix::identity(1));
  EXPECT_NO_THROW(GModule::create(z(), c2(), {Int(4)}, id2));
  EXPECT_THROW(GModule::create(z(), c2(), {Int(1)}, id2), ValidationError);  // unit factor
  std::vector<Matrix> two{Matrix::identity(2), Matrix::identity(2)};
  EXPECT_THROW(GModule::create(z(), c2(), {Int(0), Int(4)}, two), ValidationError);  // chain order
  EXPECT_THROW(GModule::create(z(), c2(), {Int(3), Int(4)}, two), ValidationError);  // not dividing
  // x^2 must act as the identity
  EXPECT_THROW(GModule::create(z(), c2(), {Int(0)}, {Matrix::identity(1), Matrix{{2}}}), ValidationError);
  // on Z/2 ⊕ Z the action must preserve the torsion part
  EXPECT_THROW(GModule::create(z(), c2(), {Int(2), Int(0)}, {Matrix::identity(2), Matrix{{1, 0}, {1, -1}}}),
               ValidationError);
}

TEST(Module, PartialActionCompletes) {
  FiniteGroup g = c3();
  Matrix rot{{0, -1}, {1, -1}};  // order 3
  GModule m = GModule::from_partial_action(z(), g, {Int(0), Int(0)}, {{1, rot}});
  EXPECT_EQ(m.action(2), rot * rot);
  EXPECT_THROW(GModule::from_partial_action(z(), g, {Int(0)}, {{1, Matrix{{-1}}}}), ValidationError);
}

TEST(Module, JsonRoundTrip) {
  GModule m = fx::shifted();
  GModule back = io::module_from_json(io::module_to_json(m));
  EXPECT_EQ(back.factors(), m.factors());
  EXPECT_EQ(back.actions(), m.actions());
}

TEST(Presentation, ShiftedModuleIsCyclic) {
  GModule m = fx::shifted(3);
  EXPECT_EQ(m.factors(), (std::vector<Int>{8}));
  EXPECT_EQ(m.action(1), Matrix{{3}});
  EXPECT_EQ(fx::shifted(2).factors(), (std::vector<Int>{3}));
  EXPECT_EQ(fx::shifted(-1).factors(), (std::vector<Int>{0}));
}

TEST(Presentation, FreeAndInducedModules) {
  GModule f = free_module(z(), c3(), 2);
  EXPECT_EQ(f.factors(), std::vector<Int>(6, Int(0)));
  GModule ind = induction(z(), c2(), {Int(4)});
  EXPECT_EQ(ind.factors(), (std::vector<Int>{4, 4}));
  Coinduction co = coinduction(z(), c3(), {Int(5)});
  EXPECT_TRUE(fx::is_iso(co.to_induction));
}

TEST(Tensor, UnitAndSymmetry) {
  GModule m = fx::shifted();
  GModule r = trivial_module(z(), c2());
  EXPECT_TRUE(fx::isomorphic(tensor_product(r, m), m));
  EXPECT_TRUE(fx::isomorphic(tensor_product(m, r), m));
  GModule mm = tensor_product(m, m);
  EXPECT_EQ(mm.factors(), (std::vector<Int>{8}));
  EXPECT_EQ(mm.action(1), Matrix::identity(1));
  EXPECT_TRUE(fx::isomorphic(tensor_product(fx::sign(), fx::sign()), r));
  // RG ⊗ M is free over RG when M is R-free
  GModule t = tensor_product(free_module(z(), c2(), 1), fx::sign());
  EXPECT_TRUE(is_projective(t));
}

TEST(Dual, SignAndShift) {
  EXPECT_TRUE(fx::isomorphic(dual(fx::sign()), fx::sign()));
  EXPECT_TRUE(fx::isomorphic(dual(trivial_module(z(), c2())), trivial_module(z(), c2())));
  // Hom_Z(Z/8, Z) = 0
  EXPECT_TRUE(dual(fx::shifted()).is_zero());
  const CoefficientRing z4 = CoefficientRing::prime_power(2, 2);
  GModule m = scalar_module(z4, c2(), 2, {Int(1), Int(1)});
  EXPECT_EQ(dual(m).factors(), (std::vector<Int>{2}));
}

TEST(Hom, KnownGroups) {
  GModule r = trivial_module(z(), c2());
  GModule rg = free_module(z(), c2(), 1);
  EXPECT_TRUE(hom_group(fx::shifted(), r).factors.empty());
  EXPECT_EQ(hom_group(r, rg).factors, (std::vector<Int>{0}));
  EXPECT_EQ(hom_group(rg, fx::shifted()).factors, (std::vector<Int>{8}));
  EXPECT_EQ(hom_group(fx::sign(), r).factors, std::vector<Int>{});
  EXPECT_EQ(hom_group(r, fx::shifted()).factors, (std::vector<Int>{2}));  // invariants of Z/8 under 3
  for (const auto& g : hom_group(rg, fx::shifted()).generators) EXPECT_TRUE(g.is_equivariant());
}

TEST(Adjunction, CounitAndUnitSplitOverR) {
  for (const GModule& m : {fx::shifted(), fx::sign(), trivial_module(z(), c3())}) {
    SplitMap c = counit(m), u = unit(m);
    EXPECT_TRUE(c.map.is_equivariant());
    EXPECT_TRUE(is_surjective(c.map));
    EXPECT_TRUE(u.map.is_equivariant());
    EXPECT_TRUE(is_injective(u.map));
    EXPECT_TRUE(is_r_split_exact(relative_syzygy(m).first, c.map));
    EXPECT_TRUE(is_r_split_exact(u.map, relative_cosyzygy(m).second));
  }
}

TEST(Exactness, KernelAndCokernelOfCover) {
  for (const GModule& m : {fx::shifted(), induction(z(), c3(), {Int(3)}), fx::sign()}) {
    FreeCover c = free_cover(m);
    EXPECT_TRUE(is_surjective(c.map));
    Kernel k = kernel(c.map);
    EXPECT_TRUE(is_injective(k.inclusion));
    EXPECT_TRUE(compose(c.map, k.inclusion).is_zero());
    EXPECT_TRUE(homology_at(k.inclusion.matrix(), c.free.moduli(), c.map.matrix(), m.moduli()).empty());
    Cokernel q = cokernel(k.inclusion);
    EXPECT_TRUE(fx::isomorphic(q.module, m));
  }
}

TEST(Exactness, FreeCoverIsSmallOnCyclicModules) {
  EXPECT_EQ(free_cover(fx::shifted()).generators.cols(), 1u);
  EXPECT_EQ(free_cover(free_module(z(), c3(), 2)).generators.cols(), 2u);
}

TEST(DirectSum, ProjectionsAndInjections) {
  DirectSum s = direct_sum_data(fx::shifted(), fx::sign());
  EXPECT_EQ(s.module.rank(), 2u);
  EXPECT_TRUE(equal_as_maps(compose(s.project_first, s.inject_first), GModuleHom::identity(fx::shifted())));
  EXPECT_TRUE(equal_as_maps(compose(s.project_second, s.inject_second), GModuleHom::identity(fx::sign())));
  EXPECT_TRUE(compose(s.project_second, s.inject_first).is_zero());
}

TEST(Submodule, AugmentationIdeal) {
  GModule rg = free_module(z(), c2(), 1);
  Matrix v(2, 1);
  v(0, 0) = -1;
  v(1, 0) = 1;  // x - 1
  Kernel i = submodule(rg, v);
  EXPECT_TRUE(fx::isomorphic(i.module, fx::sign()));
  EXPECT_TRUE(fx::isomorphic(cokernel(i.inclusion).module, trivial_module(z(), c2())));
}

TEST(Hom, NonEquivariantRejected) {
  GModule r = trivial_module(z(), c2());
  EXPECT_THROW(GModuleHom::create(r, fx::sign(), Matrix{{1}}), ValidationError);
  EXPECT_NO_THROW(GModuleHom::r_linear(r, fx::sign(), Matrix{{1}}));
}
