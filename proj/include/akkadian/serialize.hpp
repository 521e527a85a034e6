#pragma once

// JSON payloads shared by the CLI (structured mode) and the HTTP service,
// plus the plain-text table layout.
//
// Analysis:
//   { "root": "q-b-&", "radicals": ["q","b","&"], "stem": "G",
//     "tense": "Precative", "png": "3cs", "root_class": "ThirdWeak",
//     "suffix": { "ventive": false, "dative": null, "accusative": null, "ma": false },
//     "label": "G Precative Third Weak 3 c s",
//     "normalized": { "ascii": "liqbi", "unicode": "liqbi", "html": "liqbi" } }
//
// Output record (one per line in structured mode):
//   { "schema": "akkadian.record/1", "kind": "parse"|"generate", "input": "...",
//     "analyses": [Analysis...], "elapsed_ms": 0.42, "error": null | "..." }

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "akkadian/analyzer.hpp"
#include "json.hpp"

namespace akkadian {

inline constexpr const char* kRecordSchema = "akkadian.record/1";
inline constexpr int kApiVersion = 1;
inline constexpr const char* kEngineVersion = "akkadian 1.0.0";

inline nlohmann::json suffix_to_json(const SuffixFeatures& sf) {
  const auto cell = [](const std::optional<PngCell>& p) {
    return p ? nlohmann::json(p->str()) : nlohmann::json(nullptr);
  };
  return {{"ventive", sf.ventive}, {"dative", cell(sf.dative)}, {"accusative", cell(sf.accusative)}, {"ma", sf.ma}};
}

// Accepts null/missing fields as absent. Throws FeatureError on bad cells.
inline SuffixFeatures suffix_from_json(const nlohmann::json& j) {
  SuffixFeatures sf;
  if (j.is_null()) return sf;
  if (!j.is_object()) throw FeatureError("suffix must be an object");
  const auto cell = [&](const char* key) -> std::optional<PngCell> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    if (!j[key].is_string()) throw FeatureError(std::string(key) + " must be a string");
    auto p = PngCell::parse(j[key].get<std::string>());
    if (!p || !is_object_cell(*p)) throw FeatureError(std::string("invalid ") + key + " cell");
    return p;
  };
  const auto flag = [&](const char* key) {
    if (!j.contains(key) || j[key].is_null()) return false;
    if (!j[key].is_boolean()) throw FeatureError(std::string(key) + " must be a boolean");
    return j[key].get<bool>();
  };
  sf.ventive = flag("ventive");
  sf.dative = cell("dative");
  sf.accusative = cell("accusative");
  sf.ma = flag("ma");
  return sf;
}

inline nlohmann::json encodings_json(const SegmentedForm& f) {
  return {{"ascii", encode(f, Style::Ascii)}, {"unicode", encode(f, Style::Unicode)}, {"html", encode(f, Style::Html)}};
}

inline nlohmann::json to_json(const Analysis& a) {
  nlohmann::json radicals = nlohmann::json::array();
  for (char c : a.root.radicals) radicals.push_back(std::string(1, c));
  return {{"root", a.root.str()},
          {"radicals", radicals},
          {"stem", a.bundle.stem.code},
          {"tense", std::string(to_string(a.bundle.tense))},
          {"png", a.bundle.png.str()},
          {"root_class", std::string(to_string(a.bundle.root_class))},
          {"suffix", suffix_to_json(a.suffix)},
          {"label", a.label},
          {"normalized", encodings_json(a.normalized)}};
}

inline Analysis analysis_from_json(const nlohmann::json& j) {
  Analysis a;
  auto root = Root::parse(j.at("root").get<std::string>());
  auto tense = parse_tense(j.at("tense").get<std::string>());
  auto png = PngCell::parse(j.at("png").get<std::string>());
  auto cls = parse_root_class(j.at("root_class").get<std::string>());
  if (!root || !tense || !png || !cls) throw FeatureError("malformed analysis record");
  a.root = *root;
  a.bundle = FeatureBundle{Stem{j.at("stem").get<std::string>()}, *tense, *png, *cls};
  a.suffix = suffix_from_json(j.at("suffix"));
  a.label = j.at("label").get<std::string>();
  a.normalized = decode(j.at("normalized").at("ascii").get<std::string>());
  return a;
}

struct OutputRecord {
  std::string kind = "parse";
  std::string input;
  std::vector<Analysis> analyses;
  double elapsed_ms = 0;
  std::optional<std::string> error;
};

inline nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json analyses = nlohmann::json::array();
  for (const auto& a : r.analyses) analyses.push_back(to_json(a));
  return {{"schema", kRecordSchema},
          {"kind", r.kind},
          {"input", r.input},
          {"analyses", analyses},
          {"elapsed_ms", r.elapsed_ms},
          {"error", r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr)}};
}

inline OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.kind = j.at("kind").get<std::string>();
  r.input = j.at("input").get<std::string>();
  for (const auto& a : j.at("analyses")) r.analyses.push_back(analysis_from_json(a));
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  if (!j.at("error").is_null()) r.error = j.at("error").get<std::string>();
  return r;
}

inline bool is_any(std::string_view s) { return s.empty() || s == "any" || s == "*"; }

// Builds a generation request from feature names; "any" is a wildcard.
inline GenRequest make_request(std::string_view root, std::string_view stem, std::string_view tense,
                               std::string_view png) {
  GenRequest req;
  auto r = Root::parse(root);
  if (!r) throw FeatureError("invalid root '" + std::string(root) + "'");
  req.root = *r;
  if (!is_any(stem)) req.stem = Stem{std::string(stem)};
  if (!is_any(tense)) {
    req.tense = parse_tense(tense);
    if (!req.tense) throw FeatureError("unknown tense '" + std::string(tense) + "'");
  }
  if (!is_any(png)) {
    req.png = PngCell::parse(png);
    if (!req.png || !is_subject_cell(*req.png)) throw FeatureError("invalid png '" + std::string(png) + "'");
  }
  return req;
}

// Body: {"radicals": ["p","r","s"] | "p-r-s", "stem", "tense", "png", "suffix"?}
// A feature that is null, missing or "any" is a wildcard.
inline GenRequest gen_request_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FeatureError("request body must be an object");
  std::string root;
  const auto& rad = j.contains("radicals") ? j["radicals"] : j.value("root", nlohmann::json());
  if (rad.is_array()) {
    if (rad.size() != 3) throw FeatureError("radicals must have three entries");
    for (const auto& c : rad) {
      if (!c.is_string() || c.get<std::string>().size() != 1) throw FeatureError("radical must be one letter");
      root += c.get<std::string>();
    }
  } else if (rad.is_string()) {
    root = rad.get<std::string>();
  } else {
    throw FeatureError("radicals missing");
  }
  const auto field = [&](const char* key) -> std::string {
    if (!j.contains(key) || j[key].is_null()) return "any";
    if (!j[key].is_string()) throw FeatureError(std::string(key) + " must be a string");
    return j[key].get<std::string>();
  };
  auto req = make_request(root, field("stem"), field("tense"), field("png"));
  if (j.contains("suffix") && !j["suffix"].is_null()) req.suffix = suffix_from_json(j["suffix"]);
  if (req.suffix && !valid(*req.suffix)) throw FeatureError("invalid suffix combination");
  return req;
}

inline std::vector<Analysis> analyses_of(const std::vector<Generated>& gs) {
  std::vector<Analysis> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(g.analysis);
  return out;
}

// Row-group layout:
//   Stem            q-b-&
//   Parse           G Precative Third Weak 3 c s
//   Normalized form liqbi
inline std::string to_text(const OutputRecord& r, Style style = Style::Ascii) {
  std::ostringstream os;
  if (r.error) {
    os << r.input << ": error: " << *r.error << "\n";
    return os.str();
  }
  if (r.analyses.empty()) {
    os << r.input << ": no " << (r.kind == "parse" ? "parse" : "forms") << "\n";
    return os.str();
  }
  bool first = true;
  for (const auto& a : r.analyses) {
    if (!first) os << "\n";
    first = false;
    os << "Stem\t" << a.root.str() << "\n"
       << "Parse\t" << a.label << "\n"
       << "Normalized form\t" << encode(a.normalized, style) << "\n";
  }
  return os.str();
}

}  // namespace akkadian
