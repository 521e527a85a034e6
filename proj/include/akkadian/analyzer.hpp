#pragma once

// Parsing and generation of finite verb forms over the stem rule sets.

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "akkadian/rulekit.hpp"
#include "akkadian/segform.hpp"
#include "akkadian/stems.hpp"
#include "akkadian/suffixes.hpp"

namespace akkadian {

struct Analysis {
  Root root;
  FeatureBundle bundle;
  SuffixFeatures suffix;
  SegmentedForm normalized;
  std::string label;

  friend auto operator<=>(const Analysis&, const Analysis&) = default;
  friend bool operator==(const Analysis&, const Analysis&) = default;
};

// "G Precative Third Weak 3 c s", followed by the suffix label if any.
inline std::string make_label(const FeatureBundle& b, const SuffixFeatures& sf) {
  std::string out = b.stem.code + " " + std::string(to_string(b.tense));
  if (const auto q = info(b.root_class).qualifier; !q.empty()) out += " " + std::string(q);
  out += " " + b.png.label();
  if (auto s = suffix_label(sf); !s.empty()) out += " " + s;
  return out;
}

// A first-person subject takes no first-person object suffix.
inline bool compatible(const PngCell& subject, const SuffixFeatures& sf) {
  if (subject.person != 1) return true;
  return !(sf.dative && sf.dative->person == 1) && !(sf.accusative && sf.accusative->person == 1);
}

struct GenRequest {
  Root root;
  std::optional<Stem> stem;  // nullopt = any
  std::optional<Tense> tense;
  std::optional<PngCell> png;
  std::optional<SuffixFeatures> suffix;

  bool concrete() const { return stem && tense && png; }
};

struct Generated {
  Analysis analysis;
  std::string ascii;
  std::string unicode;
  std::string html;
};

class Analyzer {
 public:
  explicit Analyzer(std::filesystem::path data_dir = default_data_dir()) : registry_(std::move(data_dir)) {}

  const StemRegistry& registry() const { return registry_; }

  std::vector<Analysis> parse(std::string_view text) const { return parse(decode(text)); }

  // Tries every stem, tense and root class against every wildcard
  // expansion, once for a bare form and once with a suffixed remainder.
  // Order: stem, tense, expansion, root class, then bindings.
  std::vector<Analysis> parse(const SegmentedForm& form) const {
    if (form.empty()) throw DecodeError("empty input", 0);
    const auto expansions = expand_wildcards(form);
    std::vector<Analysis> out;
    std::set<Analysis> seen;
    for (const auto& stem : registry_.stems()) {
      const auto& rules = registry_.stem_rules(stem);
      for (auto tense : kTenses) {
        for (const auto& e : expansions) {
          for (auto cls : kRootClasses) {
            const auto name = entry_name(stem, tense, cls);
            if (!rules.has(name)) continue;
            for (const auto& rec : rules::recognize(rules, name, e)) {
              const auto consumed = e.size() - rec.remainder.size();
              if (consumed == 0) continue;
              const auto png = PngCell::from_features(rec.bindings.features);
              if (!png || !is_subject_cell(*png)) continue;
              const auto root = resolve_root(cls, rec.bindings);
              if (!root) continue;
              const FeatureBundle bundle{stem, tense, *png, cls};
              for (const auto& sf : parse_suffix(rec.remainder, context_of(e[consumed - 1]))) {
                if (!compatible(*png, sf)) continue;
                Analysis a{*root, bundle, sf, e, make_label(bundle, sf)};
                if (seen.insert(a).second) out.push_back(std::move(a));
              }
            }
          }
        }
      }
    }
    return out;
  }

  // Unsupported cells are skipped under wildcards; a fully concrete request
  // for a cell no rule covers throws UnsupportedCell.
  std::vector<Generated> generate(const GenRequest& req) const {
    if (req.suffix && !valid(*req.suffix)) throw FeatureError("invalid suffix combination");
    if (req.png && !is_subject_cell(*req.png)) throw FeatureError("not a subject cell: " + req.png->str());
    for (char c : req.root.radicals)
      if (!is_consonant_letter(c)) throw FeatureError("radical is not a consonant");

    std::vector<Stem> stems;
    if (req.stem) {
      if (!registry_.find_stem(req.stem->code)) throw FeatureError("unknown stem '" + req.stem->code + "'");
      stems.push_back(*req.stem);
    } else {
      stems = registry_.stems();
    }
    std::vector<Tense> tenses(kTenses.begin(), kTenses.end());
    if (req.tense) tenses = {*req.tense};
    std::vector<PngCell> cells(subject_cells().begin(), subject_cells().end());
    if (req.png) cells = {*req.png};

    std::vector<Generated> out;
    std::set<Analysis> seen;
    bool any_cell = false;
    for (const auto& stem : stems) {
      for (auto tense : tenses) {
        for (const auto& png : cells) {
          for (auto cls : classes_for(req.root)) {
            const FeatureBundle bundle{stem, tense, png, cls};
            if (!registry_.supports(bundle)) continue;
            const SuffixFeatures sf = req.suffix.value_or(SuffixFeatures{});
            if (!compatible(png, sf)) continue;
            any_cell = true;
            const auto bindings = rules::Bindings{req.root.radicals, png.features()};
            for (const auto& base : rules::realize(registry_.stem_rules(stem), entry_name(bundle), bindings)) {
              SegmentedForm full = base;
              if (!sf.empty()) full.append(realize_suffix(sf, context_of(base.back())).span());
              Analysis a{req.root, bundle, sf, full, make_label(bundle, sf)};
              if (!seen.insert(a).second) continue;
              Generated g{a, encode(full, Style::Ascii), encode(full, Style::Unicode), encode(full, Style::Html)};
              out.push_back(std::move(g));
            }
          }
        }
      }
    }
    if (req.concrete() && !any_cell)
      throw UnsupportedCell("unsupported cell: " + req.root.str() + " " + req.stem->code + " " +
                            std::string(to_string(*req.tense)) + " " + req.png->str());
    return out;
  }

  // Every form generated for the cell parses back to the same root and bundle.
  bool round_trip_check(const Root& root, const FeatureBundle& bundle) const {
    if (!admits(bundle.root_class, root) || !registry_.supports(bundle)) return false;
    std::vector<Generated> generated;
    try {
      generated = generate(GenRequest{root, bundle.stem, bundle.tense, bundle.png, std::nullopt});
    } catch (const std::exception&) {
      return false;
    }
    bool any = false;
    for (const auto& g : generated) {
      if (g.analysis.bundle != bundle) continue;
      any = true;
      bool back = false;
      for (const auto& a : parse(g.analysis.normalized))
        if (a.root == root && a.bundle == bundle && a.suffix.empty()) back = true;
      if (!back) return false;
    }
    return any;
  }

 private:
  // Radicals fixed by the class fill the slots the rule left unbound.
  static std::optional<Root> resolve_root(RootClass cls, const rules::Bindings& b) {
    Root root{b.radicals};
    const auto& ci = info(cls);
    if (ci.fixed_index >= 0) {
      char& slot = root.radicals[static_cast<std::size_t>(ci.fixed_index)];
      if (slot != 0 && slot != ci.fixed_letter) return std::nullopt;
      slot = ci.fixed_letter;
    }
    for (char c : root.radicals)
      if (c == 0) return std::nullopt;
    if (!admits(cls, root)) return std::nullopt;
    return root;
  }

  StemRegistry registry_;
};

}  // namespace akkadian
