// Command-line front end.
//
//   akkadian parse iprus liqbi
//   akkadian parse --file forms.txt --format structured
//   akkadian generate p r s G Preterite 3cs
//   akkadian generate q b '&' G any any --ventive --dative 2fs
//
// parse exits 0 when every line parsed, 1 when some line had no analysis,
// 2 when some line was malformed. generate exits 2 on bad features and 1 on
// an unsupported concrete cell.

#include <algorithm>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "akkadian/analyzer.hpp"
#include "akkadian/serialize.hpp"

namespace {

using namespace akkadian;

struct Output {
  bool structured = false;
  Style style = Style::Ascii;

  void emit(const OutputRecord& r, bool separate) const {
    if (structured) {
      std::cout << to_json(r).dump() << "\n";
      return;
    }
    if (separate) std::cout << "\n";
    std::cout << to_text(r, style);
  }
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_parse(const Analyzer& analyzer, const Output& out, const std::vector<std::string>& forms,
              const std::string& file) {
  std::vector<std::string> lines = forms;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot open " << file << "\n";
      return 2;
    }
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }

  int status = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    OutputRecord r;
    r.kind = "parse";
    r.input = lines[i];
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.analyses = analyzer.parse(lines[i]);
      if (r.analyses.empty()) status = std::max(status, 1);
    } catch (const DecodeError& e) {
      r.error = e.what();
      std::cerr << "line " << i + 1 << ": " << e.what() << "\n";
      status = 2;
    }
    r.elapsed_ms = ms_since(t0);
    out.emit(r, i > 0);
  }
  return status;
}

struct GenArgs {
  std::string r1, r2, r3, stem, tense, png;
  bool ventive = false;
  bool ma = false;
  std::string dative, accusative;
};

int run_generate(const Analyzer& analyzer, const Output& out, const GenArgs& g) {
  OutputRecord r;
  r.kind = "generate";
  r.input = g.r1 + "-" + g.r2 + "-" + g.r3 + " " + g.stem + " " + g.tense + " " + g.png;
  try {
    auto req = make_request(g.r1 + g.r2 + g.r3, g.stem, g.tense, g.png);
    SuffixFeatures sf;
    sf.ventive = g.ventive;
    sf.ma = g.ma;
    const auto cell = [](const std::string& s, const char* what) {
      auto p = PngCell::parse(s);
      if (!p || !is_object_cell(*p)) throw FeatureError(std::string("invalid ") + what + " '" + s + "'");
      return *p;
    };
    if (!g.dative.empty()) sf.dative = cell(g.dative, "dative");
    if (!g.accusative.empty()) sf.accusative = cell(g.accusative, "accusative");
    if (!sf.empty()) req.suffix = sf;

    const auto t0 = std::chrono::steady_clock::now();
    r.analyses = analyses_of(analyzer.generate(req));
    r.elapsed_ms = ms_since(t0);
  } catch (const FeatureError& e) {
    std::cerr << "generate: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedCell& e) {
    std::cerr << "generate: " << e.what() << "\n";
    return 1;
  }
  out.emit(r, false);
  return r.analyses.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Akkadian verb parser and generator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string style = "ascii";
  std::string data_dir;
  app.add_option("--format", format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--style", style, "ascii, unicode or html")->check(CLI::IsMember({"ascii", "unicode", "html"}));
  app.add_option("--data-dir", data_dir, "rule data directory");

  auto* parse = app.add_subcommand("parse", "analyze transliterated forms");
  std::vector<std::string> forms;
  std::string file;
  parse->add_option("forms", forms, "forms to analyze");
  parse->add_option("--file", file, "file with one form per line");

  auto* gen = app.add_subcommand("generate", "generate forms from a root and features");
  GenArgs g;
  gen->add_option("r1", g.r1)->required();
  gen->add_option("r2", g.r2)->required();
  gen->add_option("r3", g.r3)->required();
  gen->add_option("stem", g.stem, "G, D, N or any")->required();
  gen->add_option("tense", g.tense, "tense name or any")->required();
  gen->add_option("png", g.png, "subject cell such as 3cs, or any")->required();
  gen->add_flag("--ventive", g.ventive);
  gen->add_option("--dative", g.dative, "dative cell");
  gen->add_option("--accusative", g.accusative, "accusative cell");
  gen->add_flag("--ma", g.ma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Output out;
  out.structured = format == "structured";
  out.style = style == "unicode" ? Style::Unicode : style == "html" ? Style::Html : Style::Ascii;

  try {
    const Analyzer analyzer(data_dir.empty() ? default_data_dir() : std::filesystem::path(data_dir));
    if (parse->parsed()) {
      if (forms.empty() && file.empty()) {
        std::cerr << "parse: give forms or --file\n";
        return 2;
      }
      return run_parse(analyzer, out, forms, file);
    }
    return run_generate(analyzer, out, g);
  } catch (const std::exception& e) {
    std::cerr << "akkadian: " << e.what() << "\n";
    return 2;
  }
}
