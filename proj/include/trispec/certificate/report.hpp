#pragma once

// Certificate transcripts: proof steps with verdicts and numeric anchors, and
// their JSON form.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trispec/error.hpp"
#include "trispec/rigor/interval.hpp"

namespace trispec::certificate {

using rigor::Interval;
using rigor::Precision;

enum class StepKind {
  ALPHA_QUADRATIC_NONPOSITIVE,
  ALL_ALPHA_POSITIVE,
  PARTIAL_CONVEXITY_REDUCTION,
  UNIVARIATE_SIGN,
  MONOTONE_COMPARATOR_COVERING,
  SUBSTITUTION_MONOTONE,
  ASSUMED_LEMMA,
  SYMBOLIC_IDENTITY,
  BOX_SUBDIVISION,
  COEFFICIENT_CROSSCHECK,
};

enum class Verdict { PASS, FAIL, ASSUMED };
enum class Mode { REPLAY, SUBDIVISION, BOTH };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::ALPHA_QUADRATIC_NONPOSITIVE: return "ALPHA_QUADRATIC_NONPOSITIVE";
    case StepKind::ALL_ALPHA_POSITIVE: return "ALL_ALPHA_POSITIVE";
    case StepKind::PARTIAL_CONVEXITY_REDUCTION: return "PARTIAL_CONVEXITY_REDUCTION";
    case StepKind::UNIVARIATE_SIGN: return "UNIVARIATE_SIGN";
    case StepKind::MONOTONE_COMPARATOR_COVERING: return "MONOTONE_COMPARATOR_COVERING";
    case StepKind::SUBSTITUTION_MONOTONE: return "SUBSTITUTION_MONOTONE";
    case StepKind::ASSUMED_LEMMA: return "ASSUMED_LEMMA";
    case StepKind::SYMBOLIC_IDENTITY: return "SYMBOLIC_IDENTITY";
    case StepKind::BOX_SUBDIVISION: return "BOX_SUBDIVISION";
    case StepKind::COEFFICIENT_CROSSCHECK: return "COEFFICIENT_CROSSCHECK";
  }
  return "?";
}

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::PASS: return "PASS";
    case Verdict::FAIL: return "FAIL";
    case Verdict::ASSUMED: return "ASSUMED";
  }
  return "?";
}

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::REPLAY: return "REPLAY";
    case Mode::SUBDIVISION: return "SUBDIVISION";
    case Mode::BOTH: return "BOTH";
  }
  return "?";
}

inline StepKind parse_step_kind(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(StepKind::COEFFICIENT_CROSSCHECK); ++i) {
    if (s == to_string(static_cast<StepKind>(i))) return static_cast<StepKind>(i);
  }
  throw Error("unknown step kind '" + s + "'");
}

inline Verdict parse_verdict(const std::string& s) {
  if (s == "PASS") return Verdict::PASS;
  if (s == "FAIL") return Verdict::FAIL;
  if (s == "ASSUMED") return Verdict::ASSUMED;
  throw Error("unknown verdict '" + s + "'");
}

inline Mode parse_mode(const std::string& s) {
  if (s == "REPLAY" || s == "replay") return Mode::REPLAY;
  if (s == "SUBDIVISION" || s == "subdivision") return Mode::SUBDIVISION;
  if (s == "BOTH" || s == "both") return Mode::BOTH;
  throw Error("unknown mode '" + s + "'");
}

// A computed enclosure, optionally compared with a printed decimal. The anchor
// matches when the enclosure lies within `tolerance` of the printed value.
// Anchors are informational: a mismatch is reported but does not decide the
// step verdict, which rests on the interval checks alone.
struct Anchor {
  std::string name;
  double enclosure_lo = 0;
  double enclosure_hi = 0;
  std::optional<double> paper_value;
  double tolerance = 0;
  bool matches = true;

  bool operator==(const Anchor&) const = default;
};

inline Anchor make_anchor(std::string name, const Interval& enclosure, std::optional<double> printed = {},
                          double tolerance = 0) {
  Anchor a;
  a.name = std::move(name);
  a.enclosure_lo = enclosure.lo_d();
  a.enclosure_hi = enclosure.hi_d();
  a.paper_value = printed;
  a.tolerance = tolerance;
  if (printed) a.matches = a.enclosure_lo >= *printed - tolerance && a.enclosure_hi <= *printed + tolerance;
  return a;
}

struct ProofStep {
  std::string id;
  StepKind kind = StepKind::UNIVARIATE_SIGN;
  std::string claim;
  Verdict verdict = Verdict::FAIL;
  std::vector<Anchor> anchors;
  std::string detail;

  bool operator==(const ProofStep&) const = default;
};

struct AreaResult {
  std::string label;
  std::vector<ProofStep> steps;
  Verdict verdict = Verdict::FAIL;

  bool operator==(const AreaResult&) const = default;
};

struct CertificateReport {
  Mode mode = Mode::REPLAY;
  Precision precision_bits = rigor::kDefaultPrecision;
  std::vector<AreaResult> areas;
  std::vector<std::string> assumed_lemmas;
  std::optional<ProofStep> coefficient_check;
  Verdict overall_verdict = Verdict::FAIL;
  double wall_time_ms = 0;

  bool operator==(const CertificateReport&) const = default;

  std::vector<Anchor> anchor_table() const {
    std::vector<Anchor> out;
    for (const auto& a : areas) {
      for (const auto& s : a.steps) out.insert(out.end(), s.anchors.begin(), s.anchors.end());
    }
    return out;
  }
};

// PASS iff every step that is not an assumed lemma passed.
inline Verdict combine(const std::vector<ProofStep>& steps) {
  for (const auto& s : steps) {
    if (s.verdict == Verdict::FAIL) return Verdict::FAIL;
  }
  return Verdict::PASS;
}

using nlohmann::json;

inline void to_json(json& j, const Anchor& a) {
  j = json{{"name", a.name},
           {"enclosure_lo", a.enclosure_lo},
           {"enclosure_hi", a.enclosure_hi},
           {"paper_value", a.paper_value ? json(*a.paper_value) : json(nullptr)},
           {"tolerance", a.tolerance},
           {"matches", a.matches}};
}

inline void from_json(const json& j, Anchor& a) {
  a.name = j.at("name").get<std::string>();
  a.enclosure_lo = j.at("enclosure_lo").get<double>();
  a.enclosure_hi = j.at("enclosure_hi").get<double>();
  if (j.at("paper_value").is_null()) {
    a.paper_value.reset();
  } else {
    a.paper_value = j.at("paper_value").get<double>();
  }
  a.tolerance = j.value("tolerance", 0.0);
  a.matches = j.value("matches", true);
}

inline void to_json(json& j, const ProofStep& s) {
  j = json{{"id", s.id},           {"kind", to_string(s.kind)}, {"claim", s.claim},
           {"verdict", to_string(s.verdict)}, {"anchors", s.anchors}, {"detail", s.detail}};
}

inline void from_json(const json& j, ProofStep& s) {
  s.id = j.value("id", std::string());
  s.kind = parse_step_kind(j.at("kind").get<std::string>());
  s.claim = j.at("claim").get<std::string>();
  s.verdict = parse_verdict(j.at("verdict").get<std::string>());
  s.anchors = j.at("anchors").get<std::vector<Anchor>>();
  s.detail = j.value("detail", std::string());
}

inline void to_json(json& j, const AreaResult& a) {
  j = json{{"label", a.label}, {"steps", a.steps}, {"verdict", to_string(a.verdict)}};
}

inline void from_json(const json& j, AreaResult& a) {
  a.label = j.at("label").get<std::string>();
  a.steps = j.at("steps").get<std::vector<ProofStep>>();
  a.verdict = parse_verdict(j.at("verdict").get<std::string>());
}

inline void to_json(json& j, const CertificateReport& r) {
  j = json{{"mode", to_string(r.mode)},
           {"precision_bits", static_cast<long>(r.precision_bits)},
           {"areas", r.areas},
           {"assumed_lemmas", r.assumed_lemmas},
           {"coefficient_check", r.coefficient_check ? json(*r.coefficient_check) : json(nullptr)},
           {"overall_verdict", to_string(r.overall_verdict)},
           {"wall_time_ms", r.wall_time_ms}};
}

inline void from_json(const json& j, CertificateReport& r) {
  r.mode = parse_mode(j.at("mode").get<std::string>());
  r.precision_bits = j.at("precision_bits").get<long>();
  r.areas = j.at("areas").get<std::vector<AreaResult>>();
  r.assumed_lemmas = j.at("assumed_lemmas").get<std::vector<std::string>>();
  if (j.contains("coefficient_check") && !j.at("coefficient_check").is_null()) {
    r.coefficient_check = j.at("coefficient_check").get<ProofStep>();
  } else {
    r.coefficient_check.reset();
  }
  r.overall_verdict = parse_verdict(j.at("overall_verdict").get<std::string>());
  r.wall_time_ms = j.at("wall_time_ms").get<double>();
}

inline std::string serialize(const CertificateReport& r, int indent = 2) { return json(r).dump(indent); }

inline CertificateReport parse_report(const std::string& text) { return json::parse(text).get<CertificateReport>(); }

}  // namespace trispec::certificate
