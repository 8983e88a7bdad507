#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "flowsg/complexity.hpp"
#include "flowsg/structure.hpp"

namespace flowsg {

// Label-level mirror of the analysis results; this is the JSON surface.
struct ReportFactor {
  std::string kind;
  int degree = 0;
  std::vector<std::string> support;
  bool operator==(const ReportFactor&) const = default;
};

struct ReportEvidence {
  std::vector<std::string> part;
  std::string rule;
  bool operator==(const ReportEvidence&) const = default;
};

struct ReportDefectGroup {
  int k = 0;
  std::string descriptor;
  std::uint64_t order = 1;
  std::vector<ReportFactor> factors;
  std::vector<ReportEvidence> evidence;
  bool operator==(const ReportDefectGroup&) const = default;
};

struct ReportComplexity {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::vector<std::string> rules;
  bool operator==(const ReportComplexity&) const = default;
};

struct OracleSummary {
  int k = 0;
  std::vector<std::string> defect_set;
  std::vector<std::string> points;
  std::uint64_t order = 1;
  std::vector<int> orbit_sizes;
  std::string classification;
  bool operator==(const OracleSummary&) const = default;
};

struct AnalysisReport {
  std::string name;
  int n = 0;
  int edge_count = 0;
  bool directed = false;
  std::vector<ReportDefectGroup> defect_groups;
  std::optional<ReportComplexity> complexity;
  std::optional<OracleSummary> oracle;
  double timing_ms = 0.0;  // excluded from equality
  bool operator==(const AnalysisReport& o) const {
    return name == o.name && n == o.n && edge_count == o.edge_count &&
           directed == o.directed && defect_groups == o.defect_groups &&
           complexity == o.complexity && oracle == o.oracle;
  }
};

inline ReportDefectGroup make_report_group(
    const DefectAnalysis& a, const std::vector<std::string>& labels) {
  ReportDefectGroup out;
  out.k = a.k;
  out.descriptor = a.descriptor.to_string();
  out.order = a.descriptor.order();
  for (const auto& f : a.descriptor.factors) {
    ReportFactor rf{to_string(f.kind), f.degree, {}};
    for (int v : f.support) rf.support.push_back(labels[v]);
    out.factors.push_back(std::move(rf));
  }
  for (const auto& e : a.evidence) {
    ReportEvidence re{{}, e.rule};
    for (int v : e.vertices) re.part.push_back(labels[v]);
    out.evidence.push_back(std::move(re));
  }
  return out;
}

inline ReportComplexity make_report_complexity(const ComplexityBounds& b) {
  return {b.lower, b.upper, b.exact, b.rules};
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["input"] = {{"name", r.name},
                {"n", r.n},
                {"edges", r.edge_count},
                {"directed", r.directed}};
  j["defect_groups"] = nlohmann::json::array();
  for (const auto& g : r.defect_groups) {
    nlohmann::json jg;
    jg["k"] = g.k;
    jg["descriptor"] = g.descriptor;
    jg["order"] = g.order;
    jg["factors"] = nlohmann::json::array();
    for (const auto& f : g.factors)
      jg["factors"].push_back(
          {{"kind", f.kind}, {"degree", f.degree}, {"support", f.support}});
    jg["evidence"] = nlohmann::json::array();
    for (const auto& e : g.evidence)
      jg["evidence"].push_back({{"part", e.part}, {"rule", e.rule}});
    j["defect_groups"].push_back(std::move(jg));
  }
  if (r.complexity) {
    j["complexity"] = {{"lower", r.complexity->lower},
                       {"upper", r.complexity->upper},
                       {"exact", r.complexity->exact},
                       {"rules", r.complexity->rules}};
  }
  if (r.oracle) {
    j["oracle"] = {{"k", r.oracle->k},
                   {"defect_set", r.oracle->defect_set},
                   {"points", r.oracle->points},
                   {"order", r.oracle->order},
                   {"orbit_sizes", r.oracle->orbit_sizes},
                   {"classification", r.oracle->classification}};
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

inline AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.name = j.at("input").at("name").get<std::string>();
  r.n = j.at("input").at("n").get<int>();
  r.edge_count = j.at("input").at("edges").get<int>();
  r.directed = j.at("input").at("directed").get<bool>();
  for (const auto& jg : j.at("defect_groups")) {
    ReportDefectGroup g;
    g.k = jg.at("k").get<int>();
    g.descriptor = jg.at("descriptor").get<std::string>();
    g.order = jg.at("order").get<std::uint64_t>();
    for (const auto& jf : jg.at("factors"))
      g.factors.push_back({jf.at("kind").get<std::string>(),
                           jf.at("degree").get<int>(),
                           jf.at("support").get<std::vector<std::string>>()});
    for (const auto& je : jg.at("evidence"))
      g.evidence.push_back({je.at("part").get<std::vector<std::string>>(),
                            je.at("rule").get<std::string>()});
    r.defect_groups.push_back(std::move(g));
  }
  if (j.contains("complexity")) {
    const auto& jc = j.at("complexity");
    r.complexity = ReportComplexity{
        jc.at("lower").get<int>(), jc.at("upper").get<int>(),
        jc.at("exact").get<bool>(),
        jc.at("rules").get<std::vector<std::string>>()};
  }
  if (j.contains("oracle")) {
    const auto& jo = j.at("oracle");
    r.oracle = OracleSummary{
        jo.at("k").get<int>(),
        jo.at("defect_set").get<std::vector<std::string>>(),
        jo.at("points").get<std::vector<std::string>>(),
        jo.at("order").get<std::uint64_t>(),
        jo.at("orbit_sizes").get<std::vector<int>>(),
        jo.at("classification").get<std::string>()};
  }
  if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

// One line per orbit, e.g. "orbit {a,b,c}: S3" plus flags.
inline std::string classify_string(const GroupAnalysis& a,
                                   const std::vector<std::string>& labels) {
  std::string s;
  for (const auto& oc : a.orbits) {
    if (!s.empty()) s += "; ";
    s += "orbit {";
    for (std::size_t i = 0; i < oc.points.size(); ++i) {
      if (i) s += ",";
      s += labels[oc.points[i]];
    }
    s += "}: ";
    if (auto k = orbit_key(oc))
      s += k->to_string();
    else
      s += "1";
  }
  return s;
}

}  // namespace flowsg
