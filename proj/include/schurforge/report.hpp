#pragma once

// JSON and CSV renderings shared by the command-line tool and the tests.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "schurforge/irred.hpp"
#include "schurforge/structure.hpp"
#include "schurforge/version.hpp"

namespace schurforge {

using Json = nlohmann::ordered_json;

inline Json field_json(const GaloisField& f) {
  return Json{{"kind", to_string(f.kind())}, {"p", f.characteristic()}, {"m", f.degree()}, {"modulus", f.modulus()}};
}

inline Json field_json(const Rationals&) { return Json{{"kind", "rational"}, {"p", 0}, {"m", 1}}; }

inline Json field_json(const FieldCtx& ctx) {
  return std::visit([](const auto& f) { return field_json(f); }, ctx);
}

inline Json theorem_json(const TheoremCheck& t) {
  return Json{{"applies", t.applies}, {"only_if_holds", t.only_if_holds}, {"failures", t.failures}};
}

inline Json verdict_json(const Verdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  if (v.factor) {
    j["witness"] = to_string(*v.factor);
    j["cofactor"] = to_string(*v.cofactor);
  }
  j["searched_degree"] = v.searched_degree;
  j["candidates_tested"] = v.candidates_tested;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline constexpr const char* kSurveyCsvHeader =
    "a,b,p,total_degree,theorem_applies,verdict,witness,candidates_tested,elapsed_ms";

inline std::string survey_csv(const std::vector<SurveyRecord>& records) {
  std::ostringstream out;
  out << kSurveyCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.c[1] << ',' << r.c[2] << ',' << r.p << ',' << r.total_degree << ',' << (r.check.applies ? "true" : "false")
        << ',' << to_string(r.verdict.kind) << ',' << csv_field(r.verdict.factor ? to_string(*r.verdict.factor) : "")
        << ',' << r.verdict.candidates_tested << ',' << r.elapsed_ms << '\n';
  }
  return out.str();
}

inline Json survey_record_json(const SurveyRecord& r) {
  return Json{{"a", r.c[1]},
              {"b", r.c[2]},
              {"p", r.p},
              {"total_degree", r.total_degree},
              {"theorem_applies", r.check.applies},
              {"verdict", to_string(r.verdict.kind)},
              {"witness", r.verdict.factor ? to_string(*r.verdict.factor) : ""},
              {"candidates_tested", r.verdict.candidates_tested},
              {"elapsed_ms", r.elapsed_ms}};
}

struct SurveySummary {
  std::size_t instances = 0;
  std::size_t applicable = 0;
  std::size_t inconsistent = 0;

  std::string line() const {
    return std::to_string(instances) + " instances, " + std::to_string(applicable) + " theorem-applicable, " +
           std::to_string(inconsistent) + " inconsistencies";
  }
};

inline SurveySummary summarize(const std::vector<SurveyRecord>& records) {
  SurveySummary s;
  s.instances = records.size();
  for (const auto& r : records) {
    s.applicable += r.check.applies;
    s.inconsistent += !r.consistent;
  }
  return s;
}

/// Envelope shared by every JSON document the tool writes.
inline Json document(const std::string& command, Json config) {
  return Json{{"tool", "schurforge"}, {"version", kVersion}, {"command", command}, {"config", std::move(config)}};
}

}  // namespace schurforge
