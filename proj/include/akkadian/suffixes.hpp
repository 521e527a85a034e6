#pragma once

// Pronominal suffixes after the verb: ventive, dative, accusative and the
// enclitic -ma, in that surface order.

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "akkadian/segform.hpp"
#include "akkadian/stems.hpp"

namespace akkadian {

// What the suffix attaches to: the final segment of the verb base.
enum class SuffixContext { Consonant, ShortVowel, LongVowel, OverlongVowel };

inline constexpr std::array kSuffixContexts = {SuffixContext::Consonant, SuffixContext::ShortVowel,
                                               SuffixContext::LongVowel, SuffixContext::OverlongVowel};

inline SuffixContext context_of(const Segment& last) {
  if (last.is_consonant()) return SuffixContext::Consonant;
  switch (last.length) {
    case Length::Short: return SuffixContext::ShortVowel;
    case Length::Long: return SuffixContext::LongVowel;
    case Length::Overlong: return SuffixContext::OverlongVowel;
  }
  return SuffixContext::Consonant;
}

inline std::string_view to_string(SuffixContext c) {
  switch (c) {
    case SuffixContext::Consonant: return "consonant";
    case SuffixContext::ShortVowel: return "short";
    case SuffixContext::LongVowel: return "long";
    case SuffixContext::OverlongVowel: return "overlong";
  }
  return "";
}

inline std::optional<SuffixContext> parse_suffix_context(std::string_view s) {
  for (auto c : kSuffixContexts)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

struct SuffixFeatures {
  bool ventive = false;
  std::optional<PngCell> dative;
  std::optional<PngCell> accusative;
  bool ma = false;

  bool empty() const { return !ventive && !dative && !accusative && !ma; }

  friend auto operator<=>(const SuffixFeatures&, const SuffixFeatures&) = default;
  friend bool operator==(const SuffixFeatures&, const SuffixFeatures&) = default;
};

// Person/number/gender cells a pronominal suffix can refer to.
inline const std::array<PngCell, 10>& object_cells() {
  static const std::array<PngCell, 10> cells = {{{1, 'c', 's'},
                                                 {2, 'm', 's'},
                                                 {2, 'f', 's'},
                                                 {3, 'm', 's'},
                                                 {3, 'f', 's'},
                                                 {1, 'c', 'p'},
                                                 {2, 'm', 'p'},
                                                 {2, 'f', 'p'},
                                                 {3, 'm', 'p'},
                                                 {3, 'f', 'p'}}};
  return cells;
}

inline bool is_object_cell(const PngCell& p) {
  const auto& cells = object_cells();
  return std::find(cells.begin(), cells.end(), p) != cells.end();
}

// The dative 1cs is the ventive itself, so the two cannot co-occur.
inline bool valid(const SuffixFeatures& sf) {
  if (sf.dative && !is_object_cell(*sf.dative)) return false;
  if (sf.accusative && !is_object_cell(*sf.accusative)) return false;
  if (sf.ventive && sf.dative && *sf.dative == PngCell{1, 'c', 's'}) return false;
  return true;
}

namespace suffix_tables {

inline const char* accusative(const PngCell& p) {
  static const std::array<const char*, 10> forms = {"ni",  "ka",      "ki",     "$u",      "$i",
                                                    "niaati", "kunuuti", "kinaati", "$unuuti", "$inaati"};
  const auto& cells = object_cells();
  return forms[static_cast<std::size_t>(std::find(cells.begin(), cells.end(), p) - cells.begin())];
}

// Dative 1cs is absent here: it is realized by the ventive allomorph.
inline const char* dative(const PngCell& p) {
  static const std::array<const char*, 10> forms = {nullptr,   "kum",      "kim",      "$um",       "$im",
                                                    "niaa$im", "kunuu$im", "kinaa$im", "$unuu$im", "$inaa$im"};
  const auto& cells = object_cells();
  return forms[static_cast<std::size_t>(std::find(cells.begin(), cells.end(), p) - cells.begin())];
}

inline const char* ventive(SuffixContext c) { return c == SuffixContext::Consonant ? "am" : "nim"; }

inline std::vector<Segment> segments(const char* ascii) { return decode(ascii).segments(); }

}  // namespace suffix_tables

namespace detail {

inline std::vector<std::vector<Segment>> suffix_morphs(const SuffixFeatures& sf, SuffixContext ctx) {
  std::vector<std::vector<Segment>> morphs;
  if (sf.ventive) morphs.push_back(suffix_tables::segments(suffix_tables::ventive(ctx)));
  if (sf.dative) {
    const char* d = suffix_tables::dative(*sf.dative);
    morphs.push_back(suffix_tables::segments(d ? d : suffix_tables::ventive(ctx)));
  }
  if (sf.accusative) morphs.push_back(suffix_tables::segments(suffix_tables::accusative(*sf.accusative)));
  return morphs;
}

inline bool ends_in_m(const std::vector<Segment>& m) {
  return !m.empty() && m.back() == Segment::consonant('m');
}

}  // namespace detail

// Ventive -am after a consonant, -nim after a vowel; a suffix-final m
// assimilates totally to the consonant that starts the next suffix.
inline SegmentedForm realize_suffix(const SuffixFeatures& sf, SuffixContext ctx) {
  if (!valid(sf)) throw std::invalid_argument("invalid suffix combination");
  auto morphs = detail::suffix_morphs(sf, ctx);
  SegmentedForm out;
  for (std::size_t i = 0; i < morphs.size(); ++i) {
    auto m = morphs[i];
    if (i + 1 < morphs.size() && detail::ends_in_m(m)) m.back() = morphs[i + 1].front();
    out.append(m);
  }
  if (sf.ma) out.append(suffix_tables::segments("ma"));
  return out;
}

// Every valid feature set whose realization in `ctx` is exactly `remainder`.
inline std::vector<SuffixFeatures> parse_suffix(std::span<const Segment> remainder, SuffixContext ctx) {
  std::vector<SuffixFeatures> found;
  const auto ma = suffix_tables::segments("ma");
  const auto matches = [&](std::size_t pos, std::span<const Segment> what) {
    if (pos + what.size() > remainder.size()) return false;
    return std::equal(what.begin(), what.end(), remainder.begin() + static_cast<std::ptrdiff_t>(pos));
  };

  // stage 0 ventive, 1 dative, 2 accusative. `pending`: the previous morph's
  // final m was assimilated and must be matched by the next morph's onset.
  // `closed`: the previous morph kept its m, so no further morph may follow.
  std::function<void(int, std::size_t, bool, bool, SuffixFeatures)> walk =
      [&](int stage, std::size_t pos, bool pending, bool closed, SuffixFeatures sf) {
        if (stage == 3) {
          if (pending) return;
          if (pos == remainder.size()) found.push_back(sf);
          if (matches(pos, ma) && pos + ma.size() == remainder.size()) {
            sf.ma = true;
            found.push_back(sf);
          }
          return;
        }
        walk(stage + 1, pos, pending, closed, sf);
        if (closed) return;

        const auto attempt = [&](const std::vector<Segment>& surface, SuffixFeatures next) {
          std::size_t p = pos;
          if (pending) {
            if (p >= remainder.size() || remainder[p] != surface.front()) return;
            ++p;
          }
          const std::span<const Segment> s(surface);
          if (!detail::ends_in_m(surface)) {
            if (matches(p, s)) walk(stage + 1, p + s.size(), false, false, next);
            return;
          }
          if (!matches(p, s.first(s.size() - 1))) return;
          walk(stage + 1, p + s.size() - 1, true, false, next);
          if (matches(p, s)) walk(stage + 1, p + s.size(), false, true, next);
        };

        if (stage == 0) {
          SuffixFeatures next = sf;
          next.ventive = true;
          attempt(suffix_tables::segments(suffix_tables::ventive(ctx)), next);
        } else {
          for (const auto& cell : object_cells()) {
            SuffixFeatures next = sf;
            const char* surface = nullptr;
            if (stage == 1) {
              next.dative = cell;
              if (!valid(next)) continue;
              surface = suffix_tables::dative(cell);
              if (!surface) surface = suffix_tables::ventive(ctx);
            } else {
              next.accusative = cell;
              surface = suffix_tables::accusative(cell);
            }
            attempt(suffix_tables::segments(surface), next);
          }
        }
      };
  walk(0, 0, false, false, SuffixFeatures{});
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

inline std::vector<SuffixFeatures> parse_suffix(const SegmentedForm& remainder, SuffixContext ctx) {
  return parse_suffix(remainder.span(), ctx);
}

// Human-readable suffix description; -ma is not labelled.
inline std::string suffix_label(const SuffixFeatures& sf) {
  std::string out;
  const auto add = [&](const std::string& part) {
    if (!out.empty()) out += ' ';
    out += part;
  };
  if (sf.ventive) add(sf.dative ? "Ventive " + sf.dative->label() : std::string("Ventive"));
  if (sf.dative && !sf.ventive) add("Dative " + sf.dative->str());
  if (sf.accusative) add("Accusative " + sf.accusative->str());
  return out;
}

// The whole valid feature space (small enough to enumerate).
inline std::vector<SuffixFeatures> all_suffix_features() {
  std::vector<std::optional<PngCell>> cells{std::nullopt};
  for (const auto& c : object_cells()) cells.emplace_back(c);
  std::vector<SuffixFeatures> out;
  for (bool ventive : {false, true})
    for (const auto& d : cells)
      for (const auto& a : cells)
        for (bool ma : {false, true}) {
          SuffixFeatures sf{ventive, d, a, ma};
          if (valid(sf)) out.push_back(sf);
        }
  return out;
}

}  // namespace akkadian
