#pragma once

// Paradigm coordinates (stem, tense, person/number/gender, root class) and
// the registry of per-stem rule sets loaded from data/stems/<STEM>.json.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "akkadian/rulekit.hpp"
#include "akkadian/segform.hpp"

#ifndef AKKADIAN_DEFAULT_DATA_DIR
#define AKKADIAN_DEFAULT_DATA_DIR "data"
#endif

namespace akkadian {

class UnsupportedCell : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FeatureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Stem {
  std::string code;  // "G", "D", "N", or any further stem file name

  static Stem G() { return {"G"}; }
  static Stem D() { return {"D"}; }
  static Stem N() { return {"N"}; }

  friend auto operator<=>(const Stem&, const Stem&) = default;
  friend bool operator==(const Stem&, const Stem&) = default;
};

enum class Tense { Preterite, Durative, Perfect, Imperative, Precative, Vetitive };

inline constexpr std::array kTenses = {Tense::Preterite, Tense::Durative,  Tense::Perfect,
                                       Tense::Imperative, Tense::Precative, Tense::Vetitive};

inline std::string_view to_string(Tense t) {
  switch (t) {
    case Tense::Preterite: return "Preterite";
    case Tense::Durative: return "Durative";
    case Tense::Perfect: return "Perfect";
    case Tense::Imperative: return "Imperative";
    case Tense::Precative: return "Precative";
    case Tense::Vetitive: return "Vetitive";
  }
  return "";
}

inline std::string_view rule_abbrev(Tense t) {
  switch (t) {
    case Tense::Preterite: return "pret";
    case Tense::Durative: return "dur";
    case Tense::Perfect: return "perf";
    case Tense::Imperative: return "imp";
    case Tense::Precative: return "prec";
    case Tense::Vetitive: return "vet";
  }
  return "";
}

inline std::optional<Tense> parse_tense(std::string_view s) {
  for (auto t : kTenses)
    if (to_string(t) == s || rule_abbrev(t) == s) return t;
  return std::nullopt;
}

inline std::size_t index_of(Tense t) { return static_cast<std::size_t>(t); }

enum class RootClass { Strong, FirstN, FirstW_Active, FirstW_Stative, FirstAleph, SecondAleph, ThirdWeak };

inline constexpr std::array kRootClasses = {RootClass::Strong,     RootClass::FirstN,
                                            RootClass::FirstW_Active, RootClass::FirstW_Stative,
                                            RootClass::FirstAleph, RootClass::SecondAleph,
                                            RootClass::ThirdWeak};

struct RootClassInfo {
  std::string_view name;       // identifier used in files and payloads
  std::string_view qualifier;  // label text; empty for strong roots
  std::string_view prefix;     // rule-name prefix
  int fixed_index;             // radical fixed by the class (0-based), or -1
  char fixed_letter;
};

inline const RootClassInfo& info(RootClass c) {
  static const std::array<RootClassInfo, 7> table = {{
      {"Strong", "", "str", -1, 0},
      {"FirstN", "First N", "fn", 0, 'n'},
      {"FirstW_Active", "First W Active", "fwa", 0, 'w'},
      {"FirstW_Stative", "First W Stative", "fws", 0, 'w'},
      {"FirstAleph", "First Aleph", "fa", 0, '\''},
      {"SecondAleph", "Second Aleph", "sa", 1, '\''},
      {"ThirdWeak", "Third Weak", "tw", 2, '&'},
  }};
  return table[static_cast<std::size_t>(c)];
}

inline std::string_view to_string(RootClass c) { return info(c).name; }

inline std::optional<RootClass> parse_root_class(std::string_view s) {
  for (auto c : kRootClasses)
    if (info(c).name == s) return c;
  return std::nullopt;
}

struct PngCell {
  int person = 3;
  char gender = 'c';  // m | f | c
  char number = 's';  // s | p

  std::string str() const { return std::to_string(person) + gender + number; }
  std::string label() const { return std::to_string(person) + " " + gender + " " + number; }
  std::vector<std::string> features() const {
    return {std::to_string(person), std::string(1, gender), std::string(1, number)};
  }

  static std::optional<PngCell> parse(std::string_view s) {
    std::string compact;
    for (char c : s)
      if (c != ' ') compact.push_back(c);
    if (compact.size() != 3) return std::nullopt;
    PngCell p{compact[0] - '0', compact[1], compact[2]};
    if (p.person < 1 || p.person > 3) return std::nullopt;
    if (p.gender != 'm' && p.gender != 'f' && p.gender != 'c') return std::nullopt;
    if (p.number != 's' && p.number != 'p') return std::nullopt;
    return p;
  }

  static std::optional<PngCell> from_features(const std::vector<std::string>& f) {
    if (f.size() != 3) return std::nullopt;
    return parse(f[0] + f[1] + f[2]);
  }

  friend auto operator<=>(const PngCell&, const PngCell&) = default;
  friend bool operator==(const PngCell&, const PngCell&) = default;
};

// The eight subject cells of the finite verb.
inline const std::array<PngCell, 8>& subject_cells() {
  static const std::array<PngCell, 8> cells = {{{3, 'c', 's'},
                                                {2, 'm', 's'},
                                                {2, 'f', 's'},
                                                {1, 'c', 's'},
                                                {3, 'm', 'p'},
                                                {3, 'f', 'p'},
                                                {2, 'c', 'p'},
                                                {1, 'c', 'p'}}};
  return cells;
}

inline bool is_subject_cell(const PngCell& p) {
  const auto& cells = subject_cells();
  return std::find(cells.begin(), cells.end(), p) != cells.end();
}

struct Root {
  std::array<char, 3> radicals{};

  static Root of(char a, char b, char c) { return {{a, b, c}}; }

  // Accepts "p-r-s", "prs" or three separate letters joined by spaces.
  static std::optional<Root> parse(std::string_view s) {
    std::string letters;
    for (char c : s)
      if (c != '-' && c != ' ') letters.push_back(c);
    if (letters.size() != 3) return std::nullopt;
    for (char c : letters)
      if (!is_consonant_letter(c)) return std::nullopt;
    return of(letters[0], letters[1], letters[2]);
  }

  std::string str() const {
    return std::string{radicals[0], '-', radicals[1], '-', radicals[2]};
  }

  friend auto operator<=>(const Root&, const Root&) = default;
  friend bool operator==(const Root&, const Root&) = default;
};

inline bool is_weak_letter(char c) { return c == '&' || c == '\''; }

// Whether a root belongs to the class: the class's own weak radical is in
// place and no other radical is weak (doubly weak roots are not modelled).
inline bool admits(RootClass cls, const Root& root) {
  const auto& r = root.radicals;
  const auto& ci = info(cls);
  for (int i = 0; i < 3; ++i) {
    const char c = r[static_cast<std::size_t>(i)];
    if (i == ci.fixed_index) {
      if (c != ci.fixed_letter) return false;
    } else if (is_weak_letter(c)) {
      return false;
    }
  }
  if (cls == RootClass::Strong) return r[0] != 'n' && r[0] != 'w';
  if (ci.fixed_index != 0) return r[0] != 'w';
  return true;
}

inline std::vector<RootClass> classes_for(const Root& root) {
  std::vector<RootClass> out;
  for (auto c : kRootClasses)
    if (admits(c, root)) out.push_back(c);
  return out;
}

struct FeatureBundle {
  Stem stem;
  Tense tense = Tense::Preterite;
  PngCell png;
  RootClass root_class = RootClass::Strong;

  friend auto operator<=>(const FeatureBundle&, const FeatureBundle&) = default;
  friend bool operator==(const FeatureBundle&, const FeatureBundle&) = default;
};

// Rule naming: <class prefix><stem letter><tense>, e.g. strgdur, twgprec.
inline std::string entry_name(const Stem& stem, Tense tense, RootClass cls) {
  std::string s = std::string(info(cls).prefix);
  for (char c : stem.code) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  s += rule_abbrev(tense);
  return s;
}

inline std::string entry_name(const FeatureBundle& b) { return entry_name(b.stem, b.tense, b.root_class); }

inline Root representative_root(RootClass cls) {
  switch (cls) {
    case RootClass::Strong: return Root::of('p', 'r', 's');
    case RootClass::FirstN: return Root::of('n', 'd', 'n');
    case RootClass::FirstW_Active:
    case RootClass::FirstW_Stative: return Root::of('w', 'b', 'l');
    case RootClass::FirstAleph: return Root::of('\'', 'k', 'l');
    case RootClass::SecondAleph: return Root::of('$', '\'', 'l');
    case RootClass::ThirdWeak: return Root::of('q', 'b', '&');
  }
  return Root::of('p', 'r', 's');
}

inline std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("AKKADIAN_DATA_DIR"); env && *env) return env;
  return AKKADIAN_DEFAULT_DATA_DIR;
}

// Loads each stem's rule file once, on first use, and records which
// (tense, class, png) cells its rules cover.
class StemRegistry {
 public:
  explicit StemRegistry(std::filesystem::path data_dir = default_data_dir()) : dir_(std::move(data_dir)) {
    const auto stems_dir = dir_ / "stems";
    std::error_code ec;
    if (!std::filesystem::is_directory(stems_dir, ec))
      throw rules::RuleLoadError("stem data directory not found: " + stems_dir.string());
    std::vector<std::string> codes;
    for (const auto& entry : std::filesystem::directory_iterator(stems_dir))
      if (entry.path().extension() == ".json") codes.push_back(entry.path().stem().string());
    const auto rank = [](const std::string& c) {
      static const std::array<std::string_view, 3> order = {"G", "D", "N"};
      auto it = std::find(order.begin(), order.end(), c);
      return it == order.end() ? order.size() : static_cast<std::size_t>(it - order.begin());
    };
    std::sort(codes.begin(), codes.end(),
              [&](const auto& a, const auto& b) { return rank(a) != rank(b) ? rank(a) < rank(b) : a < b; });
    for (auto& c : codes) {
      stems_.push_back(Stem{c});
      slots_.push_back(std::make_unique<Slot>());
    }
  }

  const std::filesystem::path& data_dir() const { return dir_; }
  const std::vector<Stem>& stems() const { return stems_; }

  std::optional<Stem> find_stem(std::string_view code) const {
    for (const auto& s : stems_)
      if (s.code == code) return s;
    return std::nullopt;
  }

  const rules::RuleSet& stem_rules(const Stem& stem) const { return slot(stem).rules; }

  bool supports(const FeatureBundle& b) const {
    if (!is_subject_cell(b.png)) return false;
    return slot(b.stem).covered.count({index_of(b.tense), static_cast<int>(b.root_class), b.png}) != 0;
  }

  // The entry rule for a paradigm cell; throws UnsupportedCell when the
  // stem's rules do not cover it.
  std::string checked_entry(const FeatureBundle& b) const {
    if (!supports(b))
      throw UnsupportedCell("unsupported cell: " + b.stem.code + " " + std::string(to_string(b.tense)) + " " +
                            std::string(to_string(b.root_class)) + " " + b.png.str());
    return entry_name(b);
  }

 private:
  struct Slot {
    std::once_flag once;
    rules::RuleSet rules;
    std::set<std::tuple<std::size_t, int, PngCell>> covered;
  };

  Slot& slot(const Stem& stem) const {
    auto it = std::find(stems_.begin(), stems_.end(), stem);
    if (it == stems_.end()) throw FeatureError("unknown stem '" + stem.code + "'");
    Slot& s = *slots_[static_cast<std::size_t>(it - stems_.begin())];
    std::call_once(s.once, [&] {
      s.rules = rules::RuleSet::from_file(dir_ / "stems" / (stem.code + ".json"));
      for (auto t : kTenses) {
        for (auto c : kRootClasses) {
          const auto name = entry_name(stem, t, c);
          if (!s.rules.has(name)) continue;
          const auto root = representative_root(c);
          for (const auto& png : subject_cells()) {
            auto b = rules::Bindings{root.radicals, png.features()};
            if (!rules::realize(s.rules, name, b).empty())
              s.covered.insert({index_of(t), static_cast<int>(c), png});
          }
        }
      }
    });
    return s;
  }

  std::filesystem::path dir_;
  std::vector<Stem> stems_;
  std::vector<std::unique_ptr<Slot>> slots_;
};

}  // namespace akkadian
