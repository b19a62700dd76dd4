#include <gtest/gtest.h>

#include <set>

#include "trispec/certificate/certify.hpp"

using namespace trispec;
using namespace trispec::certificate;

namespace {

const ProofStep* find_step(const CertificateReport& r, const std::string& id) {
  for (const auto& a : r.areas) {
    for (const auto& s : a.steps) {
      if (s.id == id) return &s;
    }
  }
  return nullptr;
}

const CertificateReport& replay_report() {
  static const CertificateReport r = [] {
    CertifyOptions opt;
    opt.deterministic = true;
    return certify(opt);
  }();
  return r;
}

}  // namespace

TEST(Transcription, IdsAreUniqueAndParse) {
  std::set<std::string> ids;
  for (const Formula& f : transcription()) {
    EXPECT_TRUE(ids.insert(f.id).second) << f.id;
    EXPECT_NO_THROW(expr(f.id)) << f.id;
    EXPECT_FALSE(f.locator.empty()) << f.id;
  }
  EXPECT_GE(ids.size(), 12u);
  EXPECT_THROW(formula("no.such.entry"), Error);
}

TEST(Report, EnumRoundTrips) {
  for (StepKind k : {StepKind::ALPHA_QUADRATIC_NONPOSITIVE, StepKind::ALL_ALPHA_POSITIVE,
                     StepKind::PARTIAL_CONVEXITY_REDUCTION, StepKind::UNIVARIATE_SIGN,
                     StepKind::MONOTONE_COMPARATOR_COVERING, StepKind::SUBSTITUTION_MONOTONE, StepKind::ASSUMED_LEMMA,
                     StepKind::SYMBOLIC_IDENTITY, StepKind::BOX_SUBDIVISION, StepKind::COEFFICIENT_CROSSCHECK}) {
    EXPECT_EQ(parse_step_kind(to_string(k)), k);
  }
  EXPECT_EQ(parse_mode("both"), certificate::Mode::BOTH);
  EXPECT_EQ(parse_verdict("ASSUMED"), Verdict::ASSUMED);
  EXPECT_THROW(parse_mode("sideways"), Error);
}

TEST(Report, AnchorToleranceAndCombine) {
  Anchor a = make_anchor("x", Interval(-0.01771, -0.01769, 64), -0.0177, 5e-4);
  EXPECT_TRUE(a.matches);
  Anchor b = make_anchor("y", Interval(1.0, 1.1, 64), 1.0, 0.05);
  EXPECT_FALSE(b.matches);
  ProofStep pass{"a", StepKind::UNIVARIATE_SIGN, "", Verdict::PASS, {}, ""};
  ProofStep assumed{"b", StepKind::ASSUMED_LEMMA, "", Verdict::ASSUMED, {}, ""};
  ProofStep fail{"c", StepKind::UNIVARIATE_SIGN, "", Verdict::FAIL, {}, ""};
  EXPECT_EQ(combine({pass, assumed}), Verdict::PASS);
  EXPECT_EQ(combine({pass, fail, assumed}), Verdict::FAIL);
}

TEST(Replay, AllAreasPass) {
  const CertificateReport& r = replay_report();
  ASSERT_EQ(r.areas.size(), 4u);
  EXPECT_EQ(r.overall_verdict, Verdict::PASS);
  for (const auto& a : r.areas) {
    EXPECT_EQ(a.verdict, Verdict::PASS) << a.label;
    for (const auto& s : a.steps) {
      EXPECT_NE(s.verdict, Verdict::FAIL) << s.id << ": " << s.detail;
    }
  }
  EXPECT_GE(r.assumed_lemmas.size(), 5u);
}

TEST(Replay, AtLeastTwentyPrintedAnchors) {
  std::size_t printed = 0, matched = 0;
  for (const Anchor& a : replay_report().anchor_table()) {
    if (!a.paper_value) continue;
    ++printed;
    matched += a.matches;
  }
  EXPECT_GE(printed, 20u);
  // the two printed Area II discriminant decimals do not match their formulas
  EXPECT_EQ(printed - matched, 2u);
}

TEST(Replay, AreaOneAnchors) {
  const ProofStep* s = find_step(replay_report(), "area1.corner_right");
  ASSERT_NE(s, nullptr);
  bool seen = false;
  for (const Anchor& a : s->anchors) {
    if (a.name == "maximum over alpha") {
      seen = true;
      EXPECT_GE(a.enclosure_lo, -1723.5);
      EXPECT_LE(a.enclosure_hi, -1721.5);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(Replay, AreaTwoP3Enclosure) {
  const ProofStep* s = find_step(replay_report(), "area2.arc_g");
  ASSERT_NE(s, nullptr);
  const Anchor& p3 = s->anchors.at(0);
  EXPECT_EQ(p3.name, "p3");
  EXPECT_GE(p3.enclosure_lo, 0.8140);
  EXPECT_LE(p3.enclosure_hi, 0.8143);
}

TEST(Replay, AreaThreePairRatio) {
  const ProofStep* s = find_step(replay_report(), "area3.pairs");
  ASSERT_NE(s, nullptr);
  ASSERT_EQ(s->anchors.size(), 3u);
  EXPECT_GE(s->anchors[0].enclosure_lo, 0.9925);
  EXPECT_LE(s->anchors[0].enclosure_hi, 0.9933);
  for (const Anchor& a : s->anchors) EXPECT_LT(a.enclosure_hi, 1.0);
}

TEST(Replay, AssumedLemmasAreMarked) {
  const ProofStep* d = find_step(replay_report(), "area3.lemma_derivative");
  const ProofStep* c = find_step(replay_report(), "area3.lemma_concave");
  ASSERT_NE(d, nullptr);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(d->verdict, Verdict::ASSUMED);
  EXPECT_EQ(c->kind, StepKind::ASSUMED_LEMMA);
}

TEST(Replay, LooseBesselToleranceFailsAreaThree) {
  CertifyOptions opt;
  opt.areas = {AreaLabel::III};
  opt.bessel_tol = 1.0;
  CertificateReport r = certify(opt);
  EXPECT_EQ(r.areas.at(0).verdict, Verdict::FAIL);
  EXPECT_EQ(r.overall_verdict, Verdict::FAIL);
}

TEST(Replay, LowPrecisionFails) {
  CertifyOptions opt;
  opt.areas = {AreaLabel::III};
  opt.prec = 8;
  EXPECT_EQ(certify(opt).overall_verdict, Verdict::FAIL);
}

class Mutation : public ::testing::TestWithParam<std::string> {};

TEST_P(Mutation, FlippedInequalityFails) {
  const std::string id = GetParam();
  CertifyOptions opt;
  opt.mutate = {id};
  opt.deterministic = true;
  CertificateReport r = certify(opt);
  const ProofStep* s = find_step(r, id);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->verdict, Verdict::FAIL) << s->detail;
  EXPECT_EQ(r.overall_verdict, Verdict::FAIL);
  // every other step is untouched
  for (const auto& a : r.areas) {
    for (const auto& st : a.steps) {
      if (st.id != id) {
        EXPECT_NE(st.verdict, Verdict::FAIL) << st.id;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(FiveSteps, Mutation,
                         ::testing::Values("area1.corner_left", "area2.line_disc", "area2.arc_f", "area3.pairs",
                                           "area4.monotone"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s) c = c == '.' ? '_' : c;
                           return s;
                         });

TEST(Report, JsonRoundTrip) {
  const CertificateReport& r = replay_report();
  const std::string text = serialize(r);
  CertificateReport back = parse_report(text);
  EXPECT_TRUE(back == r);
  EXPECT_EQ(serialize(back), text);
}

TEST(Report, JsonSchemaFieldNames) {
  const json j = json::parse(serialize(replay_report()));
  for (const char* key : {"mode", "precision_bits", "areas", "assumed_lemmas", "overall_verdict", "wall_time_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  int anchors = 0;
  for (const json& area : j["areas"]) {
    EXPECT_TRUE(area.contains("label"));
    EXPECT_TRUE(area.contains("verdict"));
    for (const json& step : area["steps"]) {
      for (const char* key : {"kind", "claim", "verdict", "anchors"}) EXPECT_TRUE(step.contains(key)) << key;
      for (const json& anchor : step["anchors"]) {
        ++anchors;
        for (const char* key : {"name", "enclosure_lo", "enclosure_hi", "paper_value"}) {
          EXPECT_TRUE(anchor.contains(key)) << key;
        }
      }
    }
  }
  EXPECT_GT(anchors, 20);
}

TEST(Report, DeterministicAcrossRuns) {
  CertifyOptions opt;
  opt.deterministic = true;
  EXPECT_EQ(serialize(certify(opt)), serialize(replay_report()));
}

TEST(Subdivision, AreaFourShallow) {
  SubdivisionOptions opt;
  opt.max_depth = 20;
  ProofStep s = certify_subdivision(AreaLabel::IV, opt);
  EXPECT_EQ(s.verdict, Verdict::PASS) << s.detail;
  EXPECT_EQ(s.kind, StepKind::BOX_SUBDIVISION);
}

TEST(Subdivision, EveryAreaPasses) {
  for (AreaLabel a : {AreaLabel::I, AreaLabel::II, AreaLabel::III}) {
    ProofStep s = certify_subdivision(a);
    EXPECT_EQ(s.verdict, Verdict::PASS) << to_string(a) << ": " << s.detail;
  }
}

TEST(Subdivision, TooShallowFailsWithBox) {
  SubdivisionOptions opt;
  opt.max_depth = 2;
  ProofStep s = certify_subdivision(AreaLabel::I, opt);
  EXPECT_EQ(s.verdict, Verdict::FAIL);
  EXPECT_NE(s.detail.find("depth exhausted on {"), std::string::npos);
}

TEST(Subdivision, RightIsoscelesBoxCertified) {
  // 20 pi^2 against (7/3) 9 pi^2 from the diameter/height bound at (1/2, 1/2)
  const Interval pi2 = rigor::constants(64).pi2;
  Interval p(0.5, 0.5, 64), q(0.5, 0.5, 64);
  Interval up = certificate::detail::scaled_upper(UpperKind::T45, p, q, pi2);
  Interval lo = certificate::detail::scaled_diam_height(p, q, pi2);
  EXPECT_TRUE(rigor::certainly_less_equal(3L * up, 7L * lo));
  EXPECT_NEAR(up.mid_d() / (0.25 * M_PI * M_PI), 20, 1e-9);
  EXPECT_NEAR(lo.mid_d() / (0.25 * M_PI * M_PI), 9, 1e-9);
}

TEST(Subdivision, AcuteRejected) {
  EXPECT_EQ(certify_subdivision(AreaLabel::ACUTE).verdict, Verdict::FAIL);
}

TEST(Coefficients, QuadratureAgrees) {
  ProofStep s = verify_coefficient_formulas();
  EXPECT_EQ(s.verdict, Verdict::PASS) << s.detail;
  EXPECT_EQ(s.anchors.size(), 12u);
  for (const Anchor& a : s.anchors) EXPECT_LT(a.enclosure_hi, 1e-10) << a.name;
}

TEST(Coefficients, SpotValues) {
  CoefficientValues quad = quadrature_coefficients(Family::T30, 0.6, 0.3);
  EXPECT_LE(std::abs(quad[4]), 1e-10);
  EXPECT_NEAR(quad[3], 3 * 0.3 / 8, 1e-13);
  CoefficientValues q45 = quadrature_coefficients(Family::T45, 0.83, 0.21);
  EXPECT_NEAR(q45[3], 0.21 / 4, 1e-13);
  CoefficientValues printed = printed_coefficients(Family::T45, 0.7, 0.2);
  CoefficientValues direct = quadrature_coefficients(Family::T45, 0.7, 0.2);
  for (int k = 0; k < 6; ++k) EXPECT_NEAR(printed[k], direct[k], 1e-8 * std::max(1.0, std::abs(direct[k])));
}

TEST(Coefficients, DetectsWrongFormula) {
  // Compare quadrature for one family with the printed formulas of the other.
  CoefficientValues a = quadrature_coefficients(Family::T45, 0.7, 0.2);
  CoefficientValues b = printed_coefficients(Family::T30, 0.7, 0.2);
  EXPECT_GT(std::abs(a[0] - b[0]) / std::abs(a[0]), 1e-3);
  EXPECT_THROW(verify_coefficient_formulas({0, 1e-8, 1e-10, 1}), Error);
}

TEST(Certify, BothModesAgree) {
  CertifyOptions opt;
  opt.mode = certificate::Mode::BOTH;
  opt.areas = {AreaLabel::IV, AreaLabel::III};
  CertificateReport r = certify(opt);
  EXPECT_EQ(r.overall_verdict, Verdict::PASS);
  for (const auto& a : r.areas) EXPECT_EQ(a.steps.back().kind, StepKind::BOX_SUBDIVISION);
}
