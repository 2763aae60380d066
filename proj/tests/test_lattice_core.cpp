#include <gtest/gtest.h>

#include "oracle.hpp"
#include "unlattice/error.hpp"
#include "unlattice/norm.hpp"
#include "unlattice/serialize.hpp"

using namespace unlattice;

namespace {

Rational q(long n, long d = 1) { return ratio(n, d); }

StepFn typewriter5() { return StepFn::indicator(q(1, 4), q(1, 2)); }

}  // namespace

TEST(Rational, FormatsAndParses) {
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(q(3)), "3/1");
  EXPECT_EQ(parse_rational("-10/4"), q(-5, 2));
  EXPECT_EQ(parse_rational("7"), q(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
}

TEST(ExtScalar, InfinityAbsorbs) {
  auto inf = ExtScalar::infinity();
  EXPECT_TRUE((inf + ExtScalar(q(3))).is_infinite());
  EXPECT_EQ(max(inf, ExtScalar(q(3))), inf);
  EXPECT_LT(ExtScalar(q(1000000)), inf);
  EXPECT_EQ(to_string(inf), "inf");
}

TEST(StepFn, MeetExample) {
  StepFn a({q(0), q(1, 2), q(1)}, {q(1), q(3)});
  StepFn b = StepFn::constant(q(2));
  EXPECT_EQ(std::get<StepFn>(meet(a, b)), StepFn({q(0), q(1, 2), q(1)}, {q(1), q(2)}));
}

TEST(StepFn, CanonicalMergesEqualNeighbours) {
  StepFn f({q(0), q(1, 3), q(2, 3), q(1)}, {q(1), q(1), q(2)});
  EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{q(0), q(2, 3), q(1)}));
  EXPECT_THROW(StepFn({q(0), q(1, 2)}, {q(1)}), Error);
  EXPECT_THROW(StepFn({q(0), q(1, 2), q(1, 2), q(1)}, {q(1), q(2), q(3)}), Error);
}

TEST(StepFn, AbsScaleRestrict) {
  EXPECT_EQ(std::get<StepFn>(abs_val(StepFn::constant(q(-2)))), StepFn::constant(q(2)));
  EXPECT_TRUE(is_zero(scale(q(0), typewriter5())));
  Region left({{q(0), q(1, 2)}});
  EXPECT_EQ(restrict(StepFn::constant(q(2)), left), StepFn::indicator(q(0), q(1, 2), q(2)));
  EXPECT_EQ(restrict(typewriter5(), Region::unit()), typewriter5());
  EXPECT_TRUE(restrict(typewriter5(), Region({{q(0), q(1, 4)}})).is_zero());
  EXPECT_THROW(Region({{q(0), q(1, 2)}, {q(1, 4), q(3, 4)}}), Error);
  EXPECT_THROW(Region({{q(1, 2), q(3, 2)}}), Error);
}

TEST(PLFn, MeetInsertsCrossing) {
  PLFn ramp({q(0), q(1)}, {q(0), q(2)});
  PLFn one = PLFn::constant(q(1));
  PLFn m = std::get<PLFn>(meet(ramp, one));
  EXPECT_EQ(m, PLFn({q(0), q(1, 2), q(1)}, {q(0), q(1), q(1)}));
  for (long k = 0; k <= oracle::kGrid; ++k) {
    Rational t = oracle::grid_point(k);
    EXPECT_EQ(m(t), std::min(ramp(t), one(t)));
  }
}

TEST(PLFn, CollinearNodesDropped) {
  PLFn f({q(0), q(1, 2), q(1)}, {q(0), q(1), q(2)});
  EXPECT_EQ(f.breakpoints().size(), 2u);
  PLFn t = PLFn::tent(q(1, 2), q(1));
  EXPECT_EQ(t(q(3, 4)), q(1));
  EXPECT_EQ(t(q(1, 2)), q(0));
}

TEST(TailSeq, CanonicalPrefix) {
  auto s = TailSeq::const_tail({q(1), q(5), q(5)}, q(5));
  EXPECT_EQ(s.prefix().size(), 1u);
  auto z = TailSeq::affine_tail({q(1), q(2), q(3)}, q(1), q(0));
  EXPECT_TRUE(z.prefix().empty());
  EXPECT_EQ(z(7), q(7));
}

TEST(TailSeq, AbsAndMeetWithCrossing) {
  auto a = TailSeq::zero_tail({q(3), q(-5)});
  EXPECT_EQ(std::get<TailSeq>(abs_val(a)), TailSeq::zero_tail({q(3), q(5)}));
  // (1/4) n meets the constant one at n = 4.
  auto ramp = TailSeq::affine_tail({}, q(1, 4), q(0));
  auto m = std::get<TailSeq>(meet(ramp, TailSeq::ones()));
  for (Index n = 1; n <= 20; ++n) EXPECT_EQ(m(n), std::min(ramp(n), Rational(1))) << n;
  EXPECT_EQ(m.tail_kind(), TailSeq::TailKind::Const);
  auto neg = TailSeq::affine_tail({}, q(-1), q(3));
  auto an = std::get<TailSeq>(abs_val(neg));
  for (Index n = 1; n <= 10; ++n) EXPECT_EQ(an(n), abs(neg(n)));
}

TEST(Combine, MixedKindsRejected) {
  try {
    (void)meet(StepFn(), TailSeq());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindMismatch);
  }
}

TEST(DirectSum, ComponentwiseOps) {
  DirectSumElem a({{1, StepFn::constant(q(2))}, {2, StepFn()}});
  EXPECT_EQ(a.components().size(), 1u);
  DirectSumElem b({{1, StepFn::constant(q(-1))}, {3, typewriter5()}});
  auto s = std::get<DirectSumElem>(a + b);
  EXPECT_EQ(s.component(1), StepFn::constant(q(1)));
  EXPECT_EQ(s.component(3), typewriter5());
  EXPECT_EQ(norm(s, NormSpec::sum_l1()).value(), ExtScalar(q(5, 4)));
}

TEST(Norm, Examples) {
  StepFn f({q(0), q(1, 2), q(1)}, {q(1), q(2)});
  EXPECT_EQ(norm(f, NormSpec::l1()).value(), ExtScalar(q(3, 2)));
  EXPECT_EQ(norm(TailSeq::zero_tail({q(3), q(-5)}), NormSpec::unit_norm(TailSeq::ones())).value(), ExtScalar(q(5)));
  EXPECT_TRUE(norm(TailSeq::affine_tail({}, q(1), q(0)), NormSpec::ell_inf()).is_infinite());
  EXPECT_TRUE(norm(TailSeq::ones(), NormSpec::ell1()).is_infinite());
  EXPECT_EQ(norm(TailSeq::ones(), NormSpec::ell_inf()).value(), ExtScalar(q(1)));
  // Unit norm outside the principal ideal.
  EXPECT_TRUE(norm(StepFn::constant(q(1)), NormSpec::unit_norm(typewriter5())).is_infinite());
  EXPECT_THROW(norm(f, NormSpec::ell1()), Error);
}

TEST(Norm, EvenPowerExact) {
  // ||t||_2^2 = 1/3 on [0,1].
  PLFn ramp({q(0), q(1)}, {q(0), q(1)});
  auto v = norm(ramp, NormSpec::lp(q(2)));
  EXPECT_EQ(v.power, 2u);
  EXPECT_EQ(v.powered, ExtScalar(q(1, 3)));
  EXPECT_NEAR(v.approx, std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_TRUE(v.below(q(3, 5)));   // 9/25 > 1/3
  EXPECT_FALSE(v.below(q(4, 7)));  // 16/49 < 1/3
}

TEST(Norm, FractionalPowerApproximate) {
  PLFn ramp({q(0), q(1)}, {q(-1), q(1)});
  auto v = norm(ramp, NormSpec::lp(q(3, 2)));
  EXPECT_FALSE(v.exact);
  double expected = std::pow(2.0 / 5.0, 2.0 / 3.0);  // integral of |2t-1|^{3/2} = 2/5
  EXPECT_NEAR(v.approx, expected, 1e-12 * expected);
}

TEST(Norm, UnitNormOnFunctions) {
  PLFn hat({q(0), q(1, 2), q(1)}, {q(0), q(1), q(1)});
  PLFn ramp({q(0), q(1)}, {q(0), q(1, 2)});
  // ramp / hat = t/2 / 2t = 1/4 on (0, 1/2], then t/2 on [1/2, 1] up to 1/2.
  EXPECT_EQ(norm(ramp, NormSpec::unit_norm(hat)).value(), ExtScalar(q(1, 2)));
  EXPECT_TRUE(norm(PLFn::constant(q(1)), NormSpec::unit_norm(hat)).is_infinite());
}

TEST(LevelMeasure, Examples) {
  EXPECT_EQ(level_measure(typewriter5(), q(1, 2)), q(1, 4));
  EXPECT_EQ(level_measure(StepFn(), q(1, 100)), q(0));
  PLFn ramp({q(0), q(1)}, {q(0), q(1)});
  EXPECT_EQ(level_measure(ramp, q(1, 2)), q(1, 2));
  EXPECT_EQ(oracle::grid_level_measure(ramp, q(1, 2)), q(1, 2));
  EXPECT_EQ(oracle::grid_level_measure(typewriter5(), q(1, 2)), q(1, 4));
  EXPECT_EQ(level_measure(typewriter5(), q(1, 2), Region({{q(0), q(3, 8)}})), q(1, 8));
}

TEST(Serialize, RoundTripExamples) {
  const char* texts[] = {
      "step [0/1,1/2,1/1] [1/1,3/1]",
      "pl [0/1,1/2,1/1] [0/1,1/1,1/1]",
      "seq [3/1,-5/1] zero",
      "seq [] const 1/1",
      "seq [] affine 1/1 0/1",
      "sum {}",
      "sum {0: step [0/1,1/4,1/2,1/1] [0/1,1/1,0/1]; 7: step [0/1,1/1] [2/1]}",
  };
  for (const char* t : texts) EXPECT_EQ(to_text(parse_element(t)), t);
  EXPECT_EQ(to_text(parse_element("step [0,1] [-2]")), "step [0/1,1/1] [-2/1]");
  EXPECT_THROW(parse_element("step [0,1/2] [1]"), Error);
  EXPECT_THROW(parse_element("blob []"), Error);
  EXPECT_EQ(to_text(parse_region("[0,1/2) U [3/4,1)")), "[0/1,1/2) U [3/4,1/1)");
}

// ---------------------------------------------------------------- properties

class LatticeProperties : public ::testing::TestWithParam<int> {};

TEST_P(LatticeProperties, StepAndPlAgreeWithPointwiseOracle) {
  oracle::Generator gen(1000 + GetParam());
  for (int rep = 0; rep < 10; ++rep) {
    for (bool pl : {false, true}) {
      Element a = pl ? Element(gen.pl()) : Element(gen.step());
      Element b = pl ? Element(gen.pl()) : Element(gen.step());
      Element mn = meet(a, b), mx = join(a, b), sm = a + b, df = a - b, ab = abs_val(a);
      for (long k = 0; k < oracle::kGrid; k += 7) {
        Rational t = oracle::grid_point(k);
        Rational x = oracle::value(a, t), y = oracle::value(b, t);
        ASSERT_EQ(oracle::value(mn, t), std::min(x, y));
        ASSERT_EQ(oracle::value(mx, t), std::max(x, y));
        ASSERT_EQ(oracle::value(sm, t), x + y);
        ASSERT_EQ(oracle::value(df, t), x - y);
        ASSERT_EQ(oracle::value(ab, t), abs(x));
      }
      // meet + join = sum, exactly in canonical form.
      EXPECT_EQ(mn + mx, sm);
      EXPECT_EQ(ab, join(a, scale(Rational(-1), a)));
      Rational eps = gen.positive_rational();
      EXPECT_EQ(level_measure(a, eps), oracle::grid_level_measure(a, eps));
      EXPECT_EQ(level_measure(ab, eps), level_measure(a, eps));
      EXPECT_LE(level_measure(a, eps + 1), level_measure(a, eps));
    }
  }
}

TEST_P(LatticeProperties, SequencesAgreeCoordinatewise) {
  oracle::Generator gen(2000 + GetParam());
  for (int rep = 0; rep < 20; ++rep) {
    TailSeq a = gen.seq(), b = gen.seq();
    Element mn = meet(a, b), mx = join(a, b), ab = abs_val(a);
    for (Index n = 1; n <= 80; ++n) {
      Rational x = a(n), y = b(n);
      ASSERT_EQ(std::get<TailSeq>(mn)(n), std::min(x, y));
      ASSERT_EQ(std::get<TailSeq>(mx)(n), std::max(x, y));
      ASSERT_EQ(std::get<TailSeq>(ab)(n), abs(x));
    }
    EXPECT_EQ(mn + mx, Element(a) + Element(b));
  }
}

TEST_P(LatticeProperties, NormAxioms) {
  oracle::Generator gen(3000 + GetParam());
  for (int rep = 0; rep < 10; ++rep) {
    Element a = gen.step(), b = gen.step();
    Rational alpha = gen.small_rational();
    for (const auto& spec : {NormSpec::l1(), NormSpec::sup()}) {
      auto na = norm(a, spec).value().value();
      EXPECT_EQ(norm(scale(alpha, a), spec).value().value(), abs(alpha) * na);
      EXPECT_LE(norm(a + b, spec).value().value(), na + norm(b, spec).value().value());
      Element pa = abs_val(a), pb = join(pa, abs_val(b));
      EXPECT_LE(norm(pa, spec).value(), norm(pb, spec).value());
    }
    // Exact power form of L2 is homogeneous of degree 2.
    auto p2 = norm(a, NormSpec::lp(Rational(2))).powered.value();
    EXPECT_EQ(norm(scale(alpha, a), NormSpec::lp(Rational(2))).powered.value(), alpha * alpha * p2);
  }
}

TEST_P(LatticeProperties, CanonicalTextRoundTrip) {
  oracle::Generator gen(4000 + GetParam());
  for (int rep = 0; rep < 10; ++rep) {
    for (Element e : {Element(gen.step()), Element(gen.pl()), Element(gen.seq())}) {
      std::string text = to_text(e);
      EXPECT_EQ(parse_element(text), e);
      EXPECT_EQ(to_text(parse_element(text)), text);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LatticeProperties, ::testing::Range(0, 5));
