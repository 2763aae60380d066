#include <gtest/gtest.h>

#include "unlattice/error.hpp"
#include "unlattice/laws.hpp"
#include "unlattice/serialize.hpp"

using namespace unlattice;

namespace {

const LawCase* find_case(const LawReport& r, const std::string& key) {
  for (const auto& c : r.cases) {
    if (c.key == key) return &c;
  }
  return nullptr;
}

std::string failures(const LawReport& r) {
  std::string out;
  for (const auto& c : r.cases) {
    if (!c.pass) out += c.key + " " + c.detail.dump() + "\n";
  }
  return out;
}

}  // namespace

class EveryLaw : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryLaw, PassesAtDefaults) {
  LawReport r = run_law(GetParam());
  EXPECT_TRUE(r.pass) << failures(r);
  EXPECT_FALSE(r.cases.empty());
  EXPECT_TRUE(std::any_of(r.cases.begin(), r.cases.end(), [](const LawCase& c) { return c.in_scope; }));
  for (const auto& c : r.counterexamples) EXPECT_TRUE(reproduces(c)) << to_json(c).dump();
  EXPECT_TRUE(std::is_sorted(r.cases.begin(), r.cases.end(),
                             [](const LawCase& a, const LawCase& b) { return a.key < b.key; }));
}

INSTANTIATE_TEST_SUITE_P(Catalog, EveryLaw, ::testing::ValuesIn(law_ids()),
                         [](const auto& info) { return info.param; });

TEST(Laws, UnknownLaw) {
  try {
    run_law("L15");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownLaw);
  }
}

TEST(Laws, BadConfigurationIsRejected) {
  LawConfig cfg;
  cfg.pairs = {"nope@RN"};
  EXPECT_THROW(run_law("L7", cfg), Error);
  LawConfig cfg2;
  cfg2.families = {"nope"};
  EXPECT_THROW(run_law("L9", cfg2), Error);
}

TEST(Laws, DisjointDichotomyClasses) {
  LawReport r = run_law("L7");
  ASSERT_TRUE(r.pass);
  const auto* l1 = find_case(r, "disjoint_blocks|l1@RN");
  const auto* linf = find_case(r, "disjoint_blocks|linf@RN");
  ASSERT_TRUE(l1 && linf);
  EXPECT_EQ(l1->detail["verdict"]["class"], "CertifiedNull");
  EXPECT_EQ(linf->detail["verdict"]["class"], "Refuted");
}

TEST(Laws, MeasureEquivalenceOnSelectedFamilies) {
  LawConfig cfg;
  cfg.families = {"typewriter", "moving_bump"};
  LawReport r = run_law("L9", cfg);
  ASSERT_TRUE(r.pass) << failures(r);
  ASSERT_EQ(r.cases.size(), 2u);
  for (const auto& c : r.cases) {
    EXPECT_EQ(c.detail["un"]["class"], "CertifiedNull") << c.key;
    EXPECT_EQ(c.detail["measure"]["class"], "CertifiedNull") << c.key;
  }
}

TEST(Laws, BandPairHasTwoLimits) {
  LawConfig cfg;
  cfg.pairs = {"bandA(1)@L0"};
  LawReport r = run_law("L12", cfg);
  ASSERT_TRUE(r.pass);
  ASSERT_EQ(r.cases.size(), 1u);
  const auto& limits = r.cases[0].detail["limits"];
  ASSERT_EQ(limits.size(), 2u);
  EXPECT_EQ(limits[0], to_text(Element(StepFn::constant(Rational(0)))));
  EXPECT_EQ(limits[1], to_text(Element(StepFn::indicator(ratio(1, 2), Rational(1)))));
}

TEST(Laws, ReportsAreDeterministic) {
  for (const char* id : {"L3", "L12", "L14"}) {
    EXPECT_EQ(to_json(run_law(id)).dump(), to_json(run_law(id)).dump()) << id;
  }
}

TEST(Laws, CounterexampleReproducesExactly) {
  Counterexample c;
  c.family = "typewriter";
  c.pair = "L1@L0";
  c.index = 5;
  c.y = StepFn::indicator(Rational(0), ratio(1, 4));
  c.x = StepFn::constant(Rational(1));
  c.gauge = make_norm_value(ExtScalar(ratio(1, 4)), 1);
  EXPECT_TRUE(reproduces(c));
  c.gauge = make_norm_value(ExtScalar(ratio(1, 3)), 1);
  EXPECT_FALSE(reproduces(c));
}

TEST(Laws, ExtractionCoversTypewriter) {
  LawConfig cfg;
  cfg.families = {"typewriter"};
  LawReport r = run_law("L13", cfg);
  ASSERT_TRUE(r.pass) << failures(r);
  const auto* c = find_case(r, "typewriter");
  ASSERT_TRUE(c);
  EXPECT_TRUE(c->in_scope);
  EXPECT_EQ(c->detail["indices"].size(), 16u);
}
