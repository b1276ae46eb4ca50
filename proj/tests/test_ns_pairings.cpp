#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracles.hpp"

using namespace tropabel;

namespace {

const ValuedMonomial t = ValuedMonomial::t_power(1);
const ValuedMonomial one = ValuedMonomial::one();
const ValuedMonomial minus_one = ValuedMonomial::minus_one();

// λ_1 = (t, 1), λ_2 = (−1, t)
NATorus example_torus() { return NATorus({{t, one}, {minus_one, t}}); }
// λ_1 = (t, 1), λ_2 = (1, t)
NATorus split_torus() { return NATorus({{t, one}, {one, t}}); }

const RationalMatrix I2 = RationalMatrix::identity(2);
const RationalMatrix Z2(2, 2);
const IntVector l1{1, 0}, l2{0, 1};

Rational q(long long a, long long b = 1) { return Rational(a) / b; }

} // namespace

TEST(RSymmetry, Examples) {
  EXPECT_TRUE(is_R_symmetric(I2, I2));
  EXPECT_FALSE(is_R_symmetric(RationalMatrix{{0, 1}, {-1, 0}}, I2));
  EXPECT_TRUE(is_R_symmetric(Z2, I2));
  EXPECT_TRUE(is_R_symmetric(I2, example_torus().v()));
}

TEST(GmPairing, Examples) {
  NATorus tor = example_torus();
  EXPECT_EQ(gm_pairing(tor, I2, l1, l2), one);
  EXPECT_EQ(gm_pairing(tor, I2, l2, l1), minus_one);
  EXPECT_EQ(gm_pairing(tor, I2, IntVector{0, 0}, l1), one);
  try {
    gm_pairing(tor, RationalMatrix{{q(1, 2), 0}, {0, 1}}, l1, l1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInLargeLattice);
  }
}

TEST(GmSymmetry, Examples) {
  NATorus tor = example_torus();
  EXPECT_FALSE(is_Gm_symmetric(tor, I2));
  EXPECT_TRUE(is_Gm_symmetric(tor, Rational(2) * I2));
  EXPECT_TRUE(is_Gm_symmetric_on(tor, I2, Sublattice(IntMatrix{{2, 0}, {0, 1}})));
  EXPECT_TRUE(is_Gm_symmetric_on(tor, I2, Sublattice(IntMatrix{{1, 0}, {0, 2}})));
}

TEST(LargeLattice, Examples) {
  EXPECT_EQ(large_lattice(I2), Sublattice::full(2));
  EXPECT_EQ(large_lattice(RationalMatrix{{q(1, 2), 0}, {0, 1}}), Sublattice(IntMatrix{{2, 0}, {0, 1}}));
  Sublattice even = large_lattice(RationalMatrix{{q(1, 2), q(1, 2)}, {q(1, 2), q(1, 2)}});
  for (const auto& v : oracle::box(2, 3)) EXPECT_EQ(even.contains(v), (v[0] + v[1]) % 2 == 0);
}

TEST(LargeLattice, AgreesWithResidueOracle) {
  gen::Rng rng(21);
  for (int n = 0; n < 100; ++n) {
    std::size_t g = static_cast<std::size_t>(rng.range(1, 3));
    RationalMatrix h = gen::rational_matrix(rng, g, g, 4, 4);
    Sublattice large = large_lattice(h);
    EXPECT_TRUE(oracle::same_span(large.basis(), Sublattice(oracle::large_lattice(h)).basis()));
    EXPECT_TRUE(is_integral(h * to_rational(large.basis())));
  }
}

TEST(SmallLattice, Examples) {
  EXPECT_EQ(small_lattice(example_torus(), I2), Sublattice::scaled(2, 2));
  EXPECT_EQ(small_lattice(example_torus(), Z2), Sublattice::full(2));
  EXPECT_EQ(small_lattice(split_torus(), I2), Sublattice::full(2));
}

TEST(SmallLattice, AgreesWithDefinition) {
  gen::Rng rng(22);
  for (int n = 0; n < 40; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 64);
    Sublattice large = large_lattice(inst.h);
    Sublattice small = small_lattice(inst.torus, inst.h);
    EXPECT_EQ(small, Sublattice(oracle::small_lattice(inst.torus, inst.h, large)));
  }
}

TEST(SmallLattice, NonTorsionPairingRejected) {
  // magnitudes make B non-torsion, so H is not algebraic on this torus
  NATorus tor({{t, ValuedMonomial(2, 0, 0)}, {one, t}});
  try {
    small_lattice(tor, I2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAlgebraic);
  }
}

TEST(BPairing, Examples) {
  NATorus tor = example_torus();
  EXPECT_EQ(b_pairing(tor, I2, l1, l2), minus_one);
  EXPECT_EQ(b_pairing(tor, I2, l1, l1), one);
  EXPECT_EQ(b_pairing(tor, I2, IntVector{2, 0}, l2), one);
}

TEST(BPairing, AlternatingTorsionAndKilledByExponent) {
  gen::Rng rng(23);
  for (int n = 0; n < 50; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 64);
    const std::size_t g = inst.torus.rank();
    Sublattice large = large_lattice(inst.h);
    // smallest l with lH integral and G_m-symmetric on Λ
    Integer l = 1;
    while (!(is_integral(Rational(l) * inst.h) && is_Gm_symmetric(inst.torus, Rational(l) * inst.h))) ++l;
    for (int k = 0; k < 10; ++k) {
      IntVector a = large.basis() * gen::int_matrix(rng, g, 1, 3).column(0);
      IntVector b = large.basis() * gen::int_matrix(rng, g, 1, 3).column(0);
      ValuedMonomial bab = b_pairing(inst.torus, inst.h, a, b);
      EXPECT_TRUE(bab.torsion_order().has_value());
      EXPECT_EQ(bab * b_pairing(inst.torus, inst.h, b, a), one);
      EXPECT_TRUE(bab.pow(l).is_one());
      // ν[λ,λ']_H = [λ,λ']^R_H
      EXPECT_EQ(gm_pairing(inst.torus, inst.h, a, b).valuation(), real_pairing(inst.torus.v(), inst.h, a, b));
    }
  }
}

TEST(Admissible, Examples) {
  auto adm = admissible_lattices(example_torus(), I2);
  ASSERT_EQ(adm.size(), 3u);
  std::vector<Sublattice> expected{Sublattice(IntMatrix{{1, 0}, {0, 2}}), Sublattice(IntMatrix{{1, 0}, {1, 2}}),
                                   Sublattice(IntMatrix{{2, 0}, {0, 1}})};
  EXPECT_EQ(adm, expected);
  for (const auto& a : adm) {
    EXPECT_EQ(a.index(), 2);
    EXPECT_TRUE(a.contains(Sublattice::scaled(2, 2)));
    EXPECT_TRUE(is_Gm_symmetric_on(example_torus(), I2, a));
  }
  EXPECT_EQ(admissible_lattices(example_torus(), Z2), std::vector<Sublattice>{Sublattice::full(2)});
  EXPECT_EQ(admissible_lattices(split_torus(), I2), std::vector<Sublattice>{Sublattice::full(2)});
}

TEST(Admissible, RankOfClass) {
  EXPECT_EQ(rank_of_class(example_torus(), I2), 2);
  EXPECT_EQ(rank_of_class(example_torus(), Z2), 1);
  EXPECT_EQ(rank_of_class(example_torus(), Rational(2) * I2), 1);
}

TEST(Admissible, StructureOnRandomClasses) {
  gen::Rng rng(24);
  for (int n = 0; n < 40; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 64);
    Sublattice large = large_lattice(inst.h), small = small_lattice(inst.torus, inst.h);
    auto adm = admissible_lattices(inst.torus, inst.h);
    ASSERT_FALSE(adm.empty());
    EXPECT_TRUE(std::is_sorted(adm.begin(), adm.end()));
    Sublattice meet = adm.front();
    for (const auto& a : adm) {
      EXPECT_TRUE(a.contains(small));
      EXPECT_TRUE(large.contains(a));
      EXPECT_EQ(a.index(), adm.front().index());
      EXPECT_EQ((a.index() / large.index()) * (a.index() / large.index()), small.index() / large.index());
      EXPECT_TRUE(is_Gm_symmetric_on(inst.torus, inst.h, a));
      meet = intersect(meet, a);
    }
    EXPECT_EQ(meet, small);
    Integer sq = 1;
    while (sq * sq < small.index() / large.index()) ++sq;
    EXPECT_EQ(rank_of_class(inst.torus, inst.h), sq * large.index());
  }
}

TEST(Admissible, TooLarge) {
  gen::Rng rng(25);
  NATorus tor = example_torus();
  try {
    admissible_lattices(tor, I2, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(MLargeNLarge, Examples) {
  RationalMatrix h{{q(1, 2), 0}, {0, 1}};
  EXPECT_EQ(m_large(h), RationalLattice(RationalMatrix{{q(1, 2), 0}, {0, 1}}));
  EXPECT_EQ(m_large_index(h), 2);
  EXPECT_EQ(n_large(h), Sublattice(IntMatrix{{2, 0}, {0, 1}}));
  EXPECT_EQ(m_large(Z2), RationalLattice::integral(2));
  EXPECT_EQ(n_large(Z2), Sublattice::full(2));
  EXPECT_EQ(m_large(I2), RationalLattice::integral(2));
  EXPECT_EQ(n_large(I2), Sublattice::full(2));
}

TEST(MLargeNLarge, CardinalityIdentity) {
  gen::Rng rng(26);
  for (int n = 0; n < 150; ++n) {
    std::size_t g = static_cast<std::size_t>(rng.range(1, 4));
    RationalMatrix h = gen::rational_matrix(rng, g, g, 5, 6);
    EXPECT_EQ(m_large_index(h), n_large(h).index());
    for (std::size_t j = 0; j < g; ++j) EXPECT_TRUE(m_large(h).contains(h.column(j)));
  }
}

TEST(ExtendedPairing, Examples) {
  NATorus tor = example_torus();
  IntVector gamma{2, 0};
  EXPECT_EQ(extended_pairing(tor, I2, gamma, IntVector{1, 3}, IntVector{0, 0}),
            eval_character(tor.embed(gamma), IntVector{1, 3}));
  EXPECT_EQ(extended_pairing(tor, I2, IntVector{0, 0}, IntVector{1, 1}, IntVector{1, 1}), one);
  // m = H(λ_2) = e_2^* written two ways
  EXPECT_EQ(extended_pairing(tor, I2, gamma, IntVector{0, 0}, l2), extended_pairing(tor, I2, gamma, IntVector{0, 1}, IntVector{0, 0}));
  try {
    extended_pairing(tor, I2, l1, IntVector{0, 0}, l2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInSmallLattice);
  }
}

TEST(ExtendedPairing, IndependentOfDecomposition) {
  gen::Rng rng(27);
  for (int n = 0; n < 40; ++n) {
    auto inst = gen::ns_instance(rng, static_cast<std::size_t>(rng.range(1, 3)), 64);
    const std::size_t g = inst.torus.rank();
    Sublattice small = small_lattice(inst.torus, inst.h), large = large_lattice(inst.h);
    IntVector gamma = small.basis() * gen::int_matrix(rng, g, 1, 2).column(0);
    IntVector m0 = gen::int_matrix(rng, g, 1, 3).column(0);
    IntVector lp = gen::int_matrix(rng, g, 1, 3).column(0);
    // shift λ' by μ ∈ Λ_H and compensate in M
    IntVector mu = large.basis() * gen::int_matrix(rng, g, 1, 2).column(0);
    IntVector m1 = m0 - to_integer(inst.h * to_rational(mu));
    EXPECT_EQ(extended_pairing(inst.torus, inst.h, gamma, m0, lp),
              extended_pairing(inst.torus, inst.h, gamma, m1, lp + mu));
  }
}
