#pragma once

// Segment inventory and the normal-form encoding of verb forms.
//
// ASCII transliteration (the wire format):
//   consonants  b d g h k l m n p q r s t w y z
//               $ = š   S = ṣ   T = ṭ   x = ḫ   ' = ʔ (aleph)
//               & = generic weak radical (root notation only)
//   vowels      a e i u; a doubled vowel is long (macron), a tripled vowel
//               is overlong (circumflex); `v*` is a wildcard for any length.

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace akkadian {

class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::string reason, std::size_t position)
      : std::runtime_error(reason + " at offset " + std::to_string(position)),
        reason_(std::move(reason)),
        position_(position) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string reason_;
  std::size_t position_;
};

class EncodeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Length : std::uint8_t { Short, Long, Overlong };

struct Segment {
  enum class Kind : std::uint8_t { Consonant, Vowel, WildVowel };

  Kind kind = Kind::Consonant;
  char letter = 0;  // ASCII letter of the inventory
  Length length = Length::Short;

  static constexpr Segment consonant(char c) { return {Kind::Consonant, c, Length::Short}; }
  static constexpr Segment vowel(char q, Length l = Length::Short) { return {Kind::Vowel, q, l}; }
  static constexpr Segment wild(char q) { return {Kind::WildVowel, q, Length::Short}; }

  constexpr bool is_consonant() const { return kind == Kind::Consonant; }
  constexpr bool is_vowel() const { return kind == Kind::Vowel; }
  constexpr bool is_wild() const { return kind == Kind::WildVowel; }

  friend constexpr auto operator<=>(const Segment&, const Segment&) = default;
};

inline constexpr std::string_view kConsonantLetters = "bdghklmnpqrstwyz$STx'&";
inline constexpr std::string_view kVowelLetters = "aeiu";

constexpr bool is_consonant_letter(char c) {
  return kConsonantLetters.find(c) != std::string_view::npos;
}
constexpr bool is_vowel_letter(char c) { return kVowelLetters.find(c) != std::string_view::npos; }

class SegmentedForm {
 public:
  SegmentedForm() = default;
  explicit SegmentedForm(std::vector<Segment> segments) : segments_(std::move(segments)) {}
  SegmentedForm(std::initializer_list<Segment> segments) : segments_(segments) {}

  const std::vector<Segment>& segments() const { return segments_; }
  std::span<const Segment> span() const { return segments_; }
  std::size_t size() const { return segments_.size(); }
  bool empty() const { return segments_.empty(); }
  const Segment& operator[](std::size_t i) const { return segments_[i]; }
  const Segment& back() const { return segments_.back(); }
  auto begin() const { return segments_.begin(); }
  auto end() const { return segments_.end(); }

  void push_back(Segment s) { segments_.push_back(s); }
  void append(std::span<const Segment> more) {
    segments_.insert(segments_.end(), more.begin(), more.end());
  }

  bool has_wildcards() const {
    for (const auto& s : segments_)
      if (s.is_wild()) return true;
    return false;
  }

  // A form is canonical when no two adjacent vowels share a quality, i.e.
  // when its ASCII encoding decodes back to the same segments.
  bool is_canonical() const {
    for (std::size_t i = 1; i < segments_.size(); ++i) {
      const auto& a = segments_[i - 1];
      const auto& b = segments_[i];
      if (!a.is_consonant() && !b.is_consonant() && a.letter == b.letter) return false;
      if (a.is_wild() && !b.is_consonant()) return false;
    }
    return true;
  }

  SegmentedForm suffix_from(std::size_t pos) const {
    return SegmentedForm(std::vector<Segment>(segments_.begin() + static_cast<std::ptrdiff_t>(pos),
                                              segments_.end()));
  }

  friend auto operator<=>(const SegmentedForm&, const SegmentedForm&) = default;
  friend bool operator==(const SegmentedForm&, const SegmentedForm&) = default;

 private:
  std::vector<Segment> segments_;
};

enum class Style { Ascii, Unicode, Html };

namespace detail {

inline std::string_view unicode_consonant(char c) {
  switch (c) {
    case '$': return "š";
    case 'S': return "ṣ";
    case 'T': return "ṭ";
    case 'x': return "ḫ";
    case '\'': return "ʔ";
    default: return {};
  }
}

inline std::string_view unicode_vowel(char q, Length l) {
  if (l == Length::Long) {
    switch (q) {
      case 'a': return "ā";
      case 'e': return "ē";
      case 'i': return "ī";
      case 'u': return "ū";
    }
  } else if (l == Length::Overlong) {
    switch (q) {
      case 'a': return "â";
      case 'e': return "ê";
      case 'i': return "î";
      case 'u': return "û";
    }
  }
  return {};
}

inline int codepoint_of(std::string_view utf8) {
  const auto b = [&](std::size_t i) { return static_cast<unsigned char>(utf8[i]); };
  if (utf8.size() == 2) return ((b(0) & 0x1F) << 6) | (b(1) & 0x3F);
  if (utf8.size() == 3) return ((b(0) & 0x0F) << 12) | ((b(1) & 0x3F) << 6) | (b(2) & 0x3F);
  return b(0);
}

inline void put_ascii_vowel(std::string& out, char q, Length l) {
  const int n = l == Length::Short ? 1 : l == Length::Long ? 2 : 3;
  out.append(static_cast<std::size_t>(n), q);
}

}  // namespace detail

inline SegmentedForm decode(std::string_view text) {
  if (text.empty()) throw DecodeError("empty input", 0);
  std::vector<Segment> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (is_consonant_letter(c)) {
      out.push_back(Segment::consonant(c));
      ++i;
      continue;
    }
    if (is_vowel_letter(c)) {
      std::size_t run = 1;
      while (i + run < text.size() && text[i + run] == c) ++run;
      if (run > 3) throw DecodeError("vowel run longer than 3", i);
      if (i + run < text.size() && text[i + run] == '*') {
        if (run != 1) throw DecodeError("wildcard must follow a single vowel letter", i + run);
        out.push_back(Segment::wild(c));
        i += 2;
        continue;
      }
      out.push_back(Segment::vowel(c, run == 1 ? Length::Short
                                      : run == 2 ? Length::Long
                                                 : Length::Overlong));
      i += run;
      continue;
    }
    if (c == '*') throw DecodeError("'*' not preceded by a vowel", i);
    throw DecodeError(std::string("unknown character '") + c + "'", i);
  }
  return SegmentedForm(std::move(out));
}

inline std::string encode(const SegmentedForm& form, Style style = Style::Ascii) {
  std::string out;
  for (const auto& s : form) {
    if (s.is_wild()) throw EncodeError("cannot encode a wildcard vowel");
    if (style == Style::Ascii) {
      if (s.is_consonant())
        out.push_back(s.letter);
      else
        detail::put_ascii_vowel(out, s.letter, s.length);
      continue;
    }
    std::string_view uni = s.is_consonant() ? detail::unicode_consonant(s.letter)
                                            : detail::unicode_vowel(s.letter, s.length);
    if (uni.empty()) {
      if (style == Style::Html && s.letter == '&')
        out += "&amp;";
      else
        out.push_back(s.letter);
    } else if (style == Style::Unicode) {
      out += uni;
    } else {
      out += "&#" + std::to_string(detail::codepoint_of(uni)) + ";";
    }
  }
  return out;
}

inline std::string encode_segment(Segment s, Style style = Style::Ascii) {
  return encode(SegmentedForm{s}, style);
}

// Every wildcard vowel is replaced by its short, long and overlong variant.
// Order: leftmost wildcard varies slowest, lengths in Short/Long/Overlong order.
inline std::vector<SegmentedForm> expand_wildcards(const SegmentedForm& form) {
  std::vector<std::vector<Segment>> acc{{}};
  for (const auto& s : form) {
    if (!s.is_wild()) {
      for (auto& partial : acc) partial.push_back(s);
      continue;
    }
    std::vector<std::vector<Segment>> next;
    next.reserve(acc.size() * 3);
    for (const auto& partial : acc) {
      for (Length l : {Length::Short, Length::Long, Length::Overlong}) {
        auto copy = partial;
        copy.push_back(Segment::vowel(s.letter, l));
        next.push_back(std::move(copy));
      }
    }
    acc = std::move(next);
  }
  std::vector<SegmentedForm> out;
  out.reserve(acc.size());
  for (auto& segs : acc) out.emplace_back(std::move(segs));
  return out;
}

// Orders forms by their ASCII encoding (the canonical result order).
struct AsciiOrder {
  bool operator()(const SegmentedForm& a, const SegmentedForm& b) const {
    const auto ea = encode(a);
    const auto eb = encode(b);
    return ea != eb ? ea < eb : a < b;
  }
};

}  // namespace akkadian
