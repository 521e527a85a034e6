#pragma once

// Readers for the tab-separated fixture corpora under data/fixtures.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "akkadian/analyzer.hpp"

#ifndef AKKADIAN_FIXTURES
#define AKKADIAN_FIXTURES "data/fixtures"
#endif

namespace fixtures {

// `excluded` selects the "#!" rows instead of the ordinary ones.
inline std::vector<std::vector<std::string>> read_tsv(const std::string& name, bool excluded = false) {
  std::ifstream in(std::string(AKKADIAN_FIXTURES) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::vector<std::string>> rows;
  bool header = !excluded;
  for (std::string line; std::getline(in, line);) {
    if (excluded) {
      if (line.rfind("#!\t", 0) != 0) continue;
      line = line.substr(3);
    } else if (line.empty() || line[0] == '#') {
      continue;
    }
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, '\t');) cols.push_back(c);
    rows.push_back(cols);
  }
  return rows;
}

struct ParadigmRow {
  akkadian::Root root;
  akkadian::FeatureBundle bundle;
  std::string form;
};

inline std::vector<ParadigmRow> paradigms(bool excluded = false) {
  using namespace akkadian;
  std::vector<ParadigmRow> out;
  for (const auto& c : read_tsv("paradigms.tsv", excluded)) {
    if (c.size() != 6) throw std::runtime_error("bad paradigm row");
    out.push_back({*Root::parse(c[0]),
                   FeatureBundle{Stem{c[1]}, *parse_tense(c[2]), *PngCell::parse(c[3]), *parse_root_class(c[4])},
                   c[5]});
  }
  return out;
}

struct SuffixRow {
  akkadian::SuffixFeatures features;
  akkadian::SuffixContext context;
  std::string surface;  // empty for no suffix
};

inline std::vector<SuffixRow> suffixes() {
  using namespace akkadian;
  std::vector<SuffixRow> out;
  const auto cell = [](const std::string& s) -> std::optional<PngCell> {
    if (s == "-") return std::nullopt;
    return PngCell::parse(s);
  };
  for (const auto& c : read_tsv("suffixes.tsv")) {
    if (c.size() != 6) throw std::runtime_error("bad suffix row");
    SuffixRow r;
    r.features = SuffixFeatures{c[0] == "yes", cell(c[1]), cell(c[2]), c[3] == "yes"};
    r.context = *parse_suffix_context(c[4]);
    r.surface = c[5] == "-" ? "" : c[5];
    out.push_back(r);
  }
  return out;
}

}  // namespace fixtures
