#include <gtest/gtest.h>

#include "oracle.hpp"
#include "unlattice/error.hpp"
#include "unlattice/spaces.hpp"

using namespace unlattice;

namespace {

StepFn typewriter5() { return StepFn::indicator(ratio(1, 4), ratio(1, 2)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Spaces, L1FlagsAndUnit) {
  auto pair = build_pair("L1@L0");
  EXPECT_TRUE(pair.flags.order_continuous);
  EXPECT_FALSE(pair.flags.atomic);
  EXPECT_TRUE(pair.flags.order_dense);
  ASSERT_TRUE(pair.unit);
  EXPECT_EQ(pair.unit->kind, UnitKind::QuasiInterior);
  EXPECT_EQ(std::get<StepFn>(pair.unit->element), StepFn::constant(1));
}

TEST(Spaces, EllInfHasStrongUnit) {
  auto pair = build_pair("linf@RN");
  EXPECT_FALSE(pair.flags.order_continuous);
  ASSERT_TRUE(pair.unit);
  EXPECT_EQ(pair.unit->kind, UnitKind::Strong);
  EXPECT_EQ(std::get<TailSeq>(pair.unit->element), TailSeq::ones());
}

TEST(Spaces, C00DenseWithoutUnit) {
  auto pair = build_pair("c00@RN");
  EXPECT_TRUE(pair.flags.order_dense);
  EXPECT_FALSE(pair.unit);
}

TEST(Spaces, UnsupportedDescriptors) {
  for (const char* d : {"L1", "L1@RN", "l1@L0", "Lx@L0", "L1/2@L0", "foo@bar", "X0@L0", ""}) {
    EXPECT_EQ(code_of([&] { build_pair(d); }), ErrorCode::UnsupportedPair) << d;
  }
}

TEST(Spaces, TestVectorsEllInf) {
  auto tv = test_vectors(build_pair("linf@RN"), 5);
  ASSERT_EQ(tv.vectors.size(), 1u);
  EXPECT_EQ(tv.provenance, TestVectorProvenance::UnitSingleton);
  EXPECT_EQ(std::get<TailSeq>(tv.vectors[0]), TailSeq::ones());
}

TEST(Spaces, TestVectorsC0) {
  auto tv = test_vectors(build_pair("c0@RN"), 3);
  ASSERT_EQ(tv.vectors.size(), 3u);
  EXPECT_EQ(tv.provenance, TestVectorProvenance::DenseIdealBasis);
  for (Index i = 1; i <= 3; ++i) {
    const auto& e = std::get<TailSeq>(tv.vectors[i - 1]);
    for (Index n = 1; n <= 6; ++n) EXPECT_EQ(e(n), n == i ? 1 : 0);
  }
}

TEST(Spaces, TestVectorsL1BudgetOne) {
  auto tv = test_vectors(build_pair("L1@L0"), 1);
  ASSERT_EQ(tv.vectors.size(), 1u);
  EXPECT_EQ(std::get<StepFn>(tv.vectors[0]), StepFn::constant(1));
}

TEST(Spaces, ZeroBudgetRejected) {
  EXPECT_EQ(code_of([] { test_vectors(build_pair("c0@RN"), 0); }), ErrorCode::BadParams);
}

TEST(Spaces, DyadicBasisCoversInterval) {
  auto tv = dense_basis(build_pair("L1@L0"), 11);  // depth floor(log2 11) = 3
  ASSERT_EQ(tv.vectors.size(), 8u);
  Element sum = StepFn::constant(0);
  for (const auto& v : tv.vectors) sum = sum + v;
  EXPECT_EQ(std::get<StepFn>(sum), StepFn::constant(1));
}

TEST(Spaces, WitnessTypewriterIsItself) {
  auto x = order_dense_witness(build_pair("L1@L0"), typewriter5());
  EXPECT_EQ(std::get<StepFn>(x), typewriter5());
}

TEST(Spaces, WitnessVanishAtZeroHat) {
  auto pair = build_pair("X0@C01");
  Element y = PLFn::constant(1);
  auto x = order_dense_witness(pair, y);
  const auto& h = std::get<PLFn>(x);
  EXPECT_EQ(h.breakpoints(), (std::vector<Rational>{0, ratio(1, 2), 1}));
  EXPECT_EQ(h.node_values(), (std::vector<Rational>{0, 1, 1}));
  // 0 < x <= y on the grid, by direct evaluation.
  bool some_positive = false;
  for (long k = 0; k <= oracle::kGrid; ++k) {
    Rational v = oracle::pl_value(h, oracle::grid_point(k));
    EXPECT_GE(v, 0);
    EXPECT_LE(v, 1);
    some_positive = some_positive || v > 0;
  }
  EXPECT_TRUE(some_positive);
  EXPECT_TRUE(pair.in_ideal(x));
}

TEST(Spaces, BandRefusesComplement) {
  auto pair = build_pair("bandA(1)@L0");
  EXPECT_FALSE(pair.flags.order_dense);
  EXPECT_EQ(code_of([&] { order_dense_witness(pair, StepFn::indicator(ratio(1, 2), 1)); }), ErrorCode::NotDense);
  // Anything meeting the band still has a witness.
  auto x = order_dense_witness(pair, StepFn::indicator(ratio(1, 4), ratio(3, 4)));
  EXPECT_EQ(std::get<StepFn>(x), StepFn::indicator(ratio(1, 4), ratio(1, 2)));
}

TEST(Spaces, IdealMembership) {
  auto c0 = build_pair("c0@RN");
  EXPECT_TRUE(c0.in_ideal(TailSeq::unit(4)));
  EXPECT_FALSE(c0.in_ideal(TailSeq::ones()));
  auto linf = build_pair("linf@RN");
  EXPECT_TRUE(linf.in_ideal(TailSeq::ones()));
  EXPECT_FALSE(linf.in_ideal(TailSeq::affine_tail({}, 1, 0)));
  auto x0 = build_pair("X0@C01");
  EXPECT_FALSE(x0.in_ideal(PLFn::constant(1)));
  EXPECT_TRUE(x0.in_ideal(PLFn::tent(ratio(1, 4), ratio(1, 2))));
  EXPECT_FALSE(x0.in_ideal(StepFn::constant(1)));
  auto band = build_pair("bandA(1)@L0");
  EXPECT_TRUE(band.in_ideal(StepFn::indicator(0, ratio(1, 2))));
  EXPECT_FALSE(band.in_ideal(StepFn::constant(1)));
}

class SpacesProperty : public ::testing::TestWithParam<std::string> {};

TEST_P(SpacesProperty, TestVectorsPositiveFiniteAndInIdeal) {
  auto pair = build_pair(GetParam());
  for (unsigned budget : {1u, 3u, 16u}) {
    for (const auto& set : {test_vectors(pair, budget), dense_basis(pair, budget)}) {
      ASSERT_FALSE(set.vectors.empty());
      for (const auto& v : set.vectors) {
        EXPECT_TRUE(is_positive(v));
        EXPECT_FALSE(is_zero(v));
        EXPECT_FALSE(pair.ideal_norm(v).is_infinite());
        EXPECT_TRUE(pair.in_ideal(v));
      }
    }
  }
}

TEST_P(SpacesProperty, WitnessBelowAbsY) {
  auto pair = build_pair(GetParam());
  oracle::Generator gen(std::hash<std::string>{}(GetParam()) % 1000);
  for (int trial = 0; trial < 40; ++trial) {
    Element y;
    switch (pair.ambient) {
      case Ambient::L0UnitInterval: y = trial % 2 ? Element(gen.step()) : Element(gen.pl()); break;
      case Ambient::SequencesRN: y = gen.seq(); break;
      case Ambient::ContinuousUnitInterval: y = gen.pl(); break;
      case Ambient::DirectSumL0: y = DirectSumElem({{trial % 3, gen.step()}}); break;
    }
    if (is_zero(y)) continue;
    Element x;
    try {
      x = order_dense_witness(pair, y);
    } catch (const Error& e) {
      ASSERT_EQ(e.code(), ErrorCode::NotDense);
      ASSERT_FALSE(pair.flags.order_dense);
      continue;
    }
    EXPECT_TRUE(pair.in_ideal(x));
    EXPECT_FALSE(is_zero(x));
    Element ay = abs_val(y);
    if (auto* s = std::get_if<TailSeq>(&x)) {
      const auto& ys = std::get<TailSeq>(ay);
      for (Index n = 1; n <= 64; ++n) {
        EXPECT_GE((*s)(n), 0);
        EXPECT_LE((*s)(n), ys(n));
      }
    } else if (std::holds_alternative<DirectSumElem>(x)) {
      EXPECT_TRUE(leq(x, ay));
      EXPECT_TRUE(is_positive(x));
    } else {
      for (long k = 0; k < oracle::kGrid; ++k) {
        Rational t = oracle::grid_point(k);
        Rational xv = oracle::value(x, t);
        EXPECT_GE(xv, 0);
        EXPECT_LE(xv, oracle::value(ay, t)) << "t=" << to_string(t);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllPairs, SpacesProperty, ::testing::ValuesIn(known_pairs()),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return s;
                         });
