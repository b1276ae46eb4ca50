#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"

using namespace tropabel;

namespace {

Rational q(long long a, long long b = 1) { return Rational(a) / b; }
const ValuedMonomial t = ValuedMonomial::t_power(1);
const ValuedMonomial one = ValuedMonomial::one();
const ValuedMonomial minus_one = ValuedMonomial::minus_one();
const RationalMatrix I2 = RationalMatrix::identity(2);
const RationalMatrix O2(2, 2);
const Sublattice Z2 = Sublattice::full(2);

NATorus example_torus() { return NATorus({{t, one}, {minus_one, t}}); }

NALineBundle random_bundle(gen::Rng& rng, const gen::NsInstance& inst) {
  auto adm = admissible_lattices(inst.torus, inst.h);
  std::vector<ValuedMonomial> r;
  for (std::size_t k = 0; k < inst.torus.rank(); ++k) r.push_back(gen::monomial(rng));
  return {inst.torus, rng.pick(adm), inst.h, r};
}

NASemisimpleRep random_rep(gen::Rng& rng, std::size_t g) {
  std::vector<NACharacter> chars(static_cast<std::size_t>(rng.range(1, 4)));
  for (auto& c : chars)
    for (std::size_t j = 0; j < g; ++j) c.values.push_back(gen::monomial(rng));
  return NASemisimpleRep(chars);
}

} // namespace

TEST(NALineBundle, RequiresSymmetry) {
  EXPECT_THROW(NALineBundle(example_torus(), Z2, I2, {one, one}), Error);
  EXPECT_NO_THROW(NALineBundle(example_torus(), Sublattice(IntMatrix{{2, 0}, {0, 1}}), I2, {one, one}));
}

TEST(ExtendR, Examples) {
  NATorus tor = example_torus();
  NALineBundle b(tor, Sublattice(IntMatrix{{1, 0}, {0, 2}}), I2, {ValuedMonomial(2, 0, 1), ValuedMonomial(1, q(1, 3), 0)});
  EXPECT_EQ(extend_r(tor, b, IntVector{1, 0}), b.r_basis()[0]);
  EXPECT_EQ(extend_r(tor, b, IntVector{0, 2}), b.r_basis()[1]);
  EXPECT_EQ(extend_r(tor, b, IntVector{0, 0}), one);
  EXPECT_EQ(extend_r(tor, b, IntVector{2, 0}), b.r_basis()[0].pow(2) * gm_pairing(tor, I2, {1, 0}, {1, 0}));
  try {
    extend_r(tor, b, IntVector{0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInLattice);
  }
  NATorus line({{t.pow(3)}});
  NALineBundle one_dim(line, Sublattice::full(1), RationalMatrix{{2}}, {ValuedMonomial(3, 0, 1)});
  EXPECT_EQ(extend_r(line, one_dim, IntVector{2}), one_dim.r_basis()[0].pow(2) * gm_pairing(line, RationalMatrix{{2}}, {1}, {1}));
}

TEST(ExtendR, CocycleIdentity) {
  gen::Rng rng(51);
  for (int n = 0; n < 30; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 16);
    NALineBundle b = random_bundle(rng, inst);
    const std::size_t g = inst.torus.rank();
    for (int k = 0; k < 20; ++k) {
      IntVector x = b.lattice().basis() * gen::int_matrix(rng, g, 1, 3).column(0);
      IntVector y = b.lattice().basis() * gen::int_matrix(rng, g, 1, 3).column(0);
      EXPECT_EQ(extend_r(inst.torus, b, x + y),
                extend_r(inst.torus, b, x) * extend_r(inst.torus, b, y) * gm_pairing(inst.torus, inst.h, x, y));
    }
  }
}

TEST(TropicalizeLine, Examples) {
  NATorus tor = example_torus();
  NALineBundle flat(tor, Z2, O2, {ValuedMonomial(2, 0, 3), ValuedMonomial(1, q(1, 2), q(-1, 2))});
  EXPECT_EQ(tropicalize_line_bundle(tor, flat).l(), (RationalVector{3, q(-1, 2)}));
  NATorus line({{t}});
  NALineBundle b(line, Sublattice::full(1), RationalMatrix{{3}}, {t.pow(2)});
  EXPECT_EQ(tropicalize_line_bundle(line, b).l(), RationalVector{q(1, 2)});
  NATorus split({{t, one}, {one, t}});
  NALineBundle c(split, Z2, I2, {one, ValuedMonomial(5, q(1, 4), 0)});
  EXPECT_EQ(tropicalize_line_bundle(split, c).l(), (RationalVector{q(-1, 2), q(-1, 2)}));
}

TEST(TropicalizeLine, LinearOnLattice) {
  gen::Rng rng(52);
  for (int n = 0; n < 30; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 16);
    NALineBundle b = random_bundle(rng, inst);
    TropLineBundle trop = tropicalize_line_bundle(inst.torus, b);
    EXPECT_TRUE(trop.is_R_symmetric(inst.torus.tropicalization()));
    const std::size_t g = inst.torus.rank();
    for (int k = 0; k < 20; ++k) {
      IntVector x = b.lattice().basis() * gen::int_matrix(rng, g, 1, 4).column(0);
      Rational direct = extend_r(inst.torus, b, x).valuation() - real_pairing(inst.torus.v(), inst.h, x, x) / 2;
      EXPECT_EQ(direct, trop.value(x));
    }
  }
}

TEST(TropicalizeSimple, ZeroClass) {
  gen::Rng rng(53);
  NATorus tor = gen::generic_torus(rng, 2);
  NALineBundle b(tor, Z2, O2, {ValuedMonomial(1, 0, q(7, 2)), ValuedMonomial(3, q(1, 2), q(1, 3))});
  ModuliPoint p = tropicalize_simple(tor, O2, Z2, b);
  EXPECT_EQ(p.gamma, Z2);
  TropLineBundle direct(Z2, O2, {q(7, 2), q(1, 3)});
  EXPECT_EQ(p, moduli_point(tor.tropicalization(), Z2, direct, Z2, O2));
}

TEST(TropicalizeSimple, RejectsNonAdmissible) {
  NATorus tor = example_torus();
  NALineBundle b(tor, Sublattice::scaled(2, 2), I2, {one, one});
  try {
    tropicalize_simple(tor, I2, Sublattice::scaled(2, 2), b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAdmissible);
  }
}

TEST(TropicalizeSimple, SameRestrictionToSmallLatticeGivesSamePoint) {
  NATorus tor = example_torus();
  auto adm = admissible_lattices(tor, I2);
  Sublattice first(IntMatrix{{1, 0}, {0, 2}}), second(IntMatrix{{2, 0}, {0, 1}});
  ASSERT_NE(std::find(adm.begin(), adm.end(), first), adm.end());
  ASSERT_NE(std::find(adm.begin(), adm.end(), second), adm.end());
  const ValuedMonomial p11 = gm_pairing(tor, I2, {1, 0}, {1, 0});
  const ValuedMonomial p22 = gm_pairing(tor, I2, {0, 1}, {0, 1});
  gen::Rng rng(54);
  for (int n = 0; n < 20; ++n) {
    // on Γ_H = 2Λ: r(2λ_1) = r_1^2 [λ_1,λ_1] and r(2λ_2) = s_2^2 [λ_2,λ_2]
    ValuedMonomial r1 = gen::monomial(rng), s2 = gen::monomial(rng);
    NALineBundle b(tor, first, I2, {r1, s2.pow(2) * p22});
    NALineBundle c(tor, second, I2, {r1.pow(2) * p11, s2});
    ModuliPoint p = tropicalize_simple(tor, I2, first, b);
    EXPECT_EQ(tropicalize_simple(tor, I2, second, c), p);
    IntVector lambda = gen::int_matrix(rng, 2, 1, 3).column(0);
    EXPECT_EQ(tropicalize_simple(tor, I2, first, translate(tor, b, tor.embed(lambda))), p);
  }
}

TEST(TropicalizeSimple, CharacterTwistShiftsByItsTropicalization) {
  NATorus tor = example_torus();
  auto adm = admissible_lattices(tor, I2);
  gen::Rng rng(55);
  Sublattice gamma = small_lattice(tor, I2);
  for (int n = 0; n < 20; ++n) {
    NALineBundle b(tor, rng.pick(adm), I2, {gen::monomial(rng), gen::monomial(rng)});
    NACharacter chi{{gen::monomial(rng), gen::monomial(rng)}};
    ModuliPoint p = tropicalize_simple(tor, I2, b.lattice(), b);
    ModuliPoint p2 = tropicalize_simple(tor, I2, b.lattice(), tensor_character(tor, b, chi));
    RationalVector shift(2);
    for (std::size_t k = 0; k < 2; ++k) shift[k] = chi.at(gamma.basis_vector(k)).valuation();
    RationalLattice mprime = translation_lattice(tor.tropicalization(), gamma, I2, Z2);
    EXPECT_EQ(p2.coords, reduce_mod_lattice(p.coords + shift, mprime));
    // a character ⟨·, m⟩ does not move the point
    IntVector m = gen::int_matrix(rng, 2, 1, 3).column(0);
    EXPECT_EQ(tropicalize_simple(tor, I2, b.lattice(), tensor_character(tor, b, character_of(tor, m))), p);
  }
}

TEST(Translate, TropicalizesToNegativeTropicalTranslate) {
  // explicit instance fixing the sign: x = (t^2, 1), H = I on Λ' = ⟨λ_1, 2λ_2⟩
  NATorus tor = example_torus();
  Sublattice lat(IntMatrix{{1, 0}, {0, 2}});
  NALineBundle b(tor, lat, I2, {one, one});
  MultiplicativePoint x{t.pow(2), one};
  TropLineBundle lhs = tropicalize_line_bundle(tor, translate(tor, b, x));
  EXPECT_EQ(lhs.l(), (RationalVector{q(3, 2), -2}));
  TropLineBundle rhs = tropabel::translate(tor.tropicalization(), tropicalize_line_bundle(tor, b), RationalVector{-2, 0});
  EXPECT_EQ(lhs, rhs);
  gen::Rng rng(56);
  for (int n = 0; n < 40; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 16);
    NALineBundle bb = random_bundle(rng, inst);
    MultiplicativePoint pt;
    for (std::size_t i = 0; i < inst.torus.rank(); ++i) pt.push_back(gen::monomial(rng));
    RationalVector trop_x;
    for (const auto& c : pt) trop_x.push_back(-c.valuation());
    EXPECT_EQ(tropicalize_line_bundle(inst.torus, translate(inst.torus, bb, pt)),
              tropabel::translate(inst.torus.tropicalization(), tropicalize_line_bundle(inst.torus, bb), trop_x));
  }
}

TEST(TropRep, Examples) {
  NASemisimpleRep trivial({NACharacter{{one, one}}});
  EXPECT_EQ(trop_rep(trivial).images()[0], TropGLElement::diagonal({0}));
  NASemisimpleRep single({NACharacter{{ValuedMonomial(3, q(1, 5), q(7, 3))}}});
  EXPECT_EQ(trop_rep(single).images()[0], TropGLElement::diagonal({q(7, 3)}));
  NACharacter a{{ValuedMonomial(1, 0, 2)}}, b{{ValuedMonomial(1, 0, -1)}};
  EXPECT_EQ(canonical_form(trop_rep(NASemisimpleRep({a, b}))), canonical_form(trop_rep(NASemisimpleRep({b, a}))));
  for (const auto& s : stratum(trop_rep(NASemisimpleRep({a, b})))) EXPECT_EQ(s, Sublattice::full(1));
}

TEST(EtaA, Examples) {
  NATorus tor = example_torus();
  NACharacter triv{{one, one}}, c{{t, minus_one}};
  auto e1 = eta_A(tor, NASemisimpleRep({triv}));
  ASSERT_EQ(e1.size(), 1u);
  EXPECT_EQ(e1[0], NALineBundle(tor, Z2, O2, {one, one}));
  EXPECT_EQ(eta_A(tor, NASemisimpleRep({triv, c})).size(), 2u);
  auto twice = eta_A(tor, NASemisimpleRep({c, c}));
  ASSERT_EQ(twice.size(), 2u);
  EXPECT_EQ(twice[0], twice[1]);
}

TEST(CharactersEqualModM, Examples) {
  gen::Rng rng(57);
  NATorus tor = gen::generic_torus(rng, 2);
  NACharacter a{{gen::monomial(rng), gen::monomial(rng)}};
  EXPECT_TRUE(characters_equal_mod_M(tor, a, a));
  EXPECT_TRUE(characters_equal_mod_M(tor, a, multiply(a, character_of(tor, {1, 0}))));
  NATorus std_tor({{t, one}, {one, t}});
  NACharacter b{{one, one}}, half{{ValuedMonomial::t_power(q(1, 2)), one}};
  EXPECT_FALSE(characters_equal_mod_M(std_tor, b, half));
  NACharacter phase{{ValuedMonomial::root_of_unity(q(1, 3)), one}};
  EXPECT_FALSE(characters_equal_mod_M(std_tor, b, phase));
}

TEST(CommutingSquare, Examples) {
  NATorus line({{ValuedMonomial(2, q(1, 3), 3)}});
  NASemisimpleRep rho({NACharacter{{ValuedMonomial(5, 0, q(7, 2))}}});
  SquareCheck c = verify_commuting_square(line, rho);
  EXPECT_TRUE(c.commutes);
  EXPECT_EQ(c.via_analytic.coords, std::vector<RationalVector>{RationalVector{q(1, 2)}});
}

TEST(CommutingSquare, RandomAndInvariantUnderM) {
  gen::Rng rng(58);
  for (int n = 0; n < 50; ++n) {
    std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
    NATorus tor = gen::generic_torus(rng, g);
    NASemisimpleRep rho = random_rep(rng, g);
    SquareCheck c = verify_commuting_square(tor, rho);
    EXPECT_TRUE(c.commutes);
    std::vector<NACharacter> shifted;
    for (const auto& ch : rho.characters())
      shifted.push_back(multiply(ch, character_of(tor, gen::int_matrix(rng, g, 1, 3).column(0))));
    NASemisimpleRep rho2(shifted);
    for (std::size_t i = 0; i < rho.r(); ++i) {
      bool matched = false;
      for (const auto& ch : rho2.characters()) matched = matched || characters_equal_mod_M(tor, rho.characters()[i], ch);
      EXPECT_TRUE(matched);
    }
    EXPECT_EQ(verify_commuting_square(tor, rho2).via_analytic, c.via_analytic);
  }
}
