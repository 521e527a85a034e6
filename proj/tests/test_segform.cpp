#include <gtest/gtest.h>

#include <random>
#include <regex>
#include <set>
#include <string>

#include "akkadian/segform.hpp"

using namespace akkadian;

namespace {

const auto C = Segment::consonant;
const auto V = [](char q, Length l = Length::Short) { return Segment::vowel(q, l); };

// Independent html reader: numeric entities become UTF-8, &amp; becomes &.
std::string unescape_html(const std::string& s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s.compare(i, 5, "&amp;") == 0) {
      out += '&';
      i += 5;
    } else if (s.compare(i, 2, "&#") == 0) {
      const auto end = s.find(';', i);
      const int cp = std::stoi(s.substr(i + 2, end - i - 2));
      if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      } else {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
      }
      i = end + 1;
    } else {
      out += s[i++];
    }
  }
  return out;
}

SegmentedForm random_canonical(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<std::size_t> cons(0, kConsonantLetters.size() - 1);
  std::uniform_int_distribution<std::size_t> vow(0, kVowelLetters.size() - 1);
  std::uniform_int_distribution<int> lens(0, 2);
  std::uniform_int_distribution<int> coin(0, 1);
  SegmentedForm f;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) {
      f.push_back(C(kConsonantLetters[cons(rng)]));
    } else {
      char q = kVowelLetters[vow(rng)];
      if (!f.empty() && !f.back().is_consonant() && f.back().letter == q) continue;
      f.push_back(V(q, static_cast<Length>(lens(rng))));
    }
  }
  if (f.empty()) f.push_back(C('p'));
  return f;
}

}  // namespace

TEST(Decode, PlainForm) {
  EXPECT_EQ(decode("iprus"), (SegmentedForm{V('i'), C('p'), C('r'), V('u'), C('s')}));
}

TEST(Decode, LengthsFromRepetition) {
  EXPECT_EQ(decode("taprusii"), (SegmentedForm{C('t'), V('a'), C('p'), C('r'), V('u'), C('s'), V('i', Length::Long)}));
  EXPECT_EQ(decode("iqbiii"), (SegmentedForm{V('i'), C('q'), C('b'), V('i', Length::Overlong)}));
}

TEST(Decode, SpecialConsonants) {
  EXPECT_EQ(decode("$STx'&"), (SegmentedForm{C('$'), C('S'), C('T'), C('x'), C('\''), C('&')}));
}

TEST(Decode, GeminateIsTwoConsonants) {
  EXPECT_EQ(decode("iparras").size(), 7u);
}

TEST(Decode, Wildcard) {
  const auto f = decode("tumalli*nikkim");
  ASSERT_TRUE(f.has_wildcards());
  EXPECT_EQ(f[6], Segment::wild('i'));
  EXPECT_EQ(f.size(), 13u);
}

TEST(Decode, Errors) {
  EXPECT_THROW(decode(""), DecodeError);
  EXPECT_THROW(decode("iiiip"), DecodeError);
  EXPECT_THROW(decode("ip*"), DecodeError);
  EXPECT_THROW(decode("ii*"), DecodeError);
  EXPECT_THROW(decode("*"), DecodeError);
  EXPECT_THROW(decode("ipr0s"), DecodeError);
  EXPECT_THROW(decode("ip rus"), DecodeError);
  EXPECT_THROW(decode("zzz!"), DecodeError);
}

TEST(Decode, ErrorPosition) {
  try {
    decode("ipr?s");
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.position(), 3u);
    EXPECT_FALSE(e.reason().empty());
  }
}

TEST(Encode, Styles) {
  const auto f = decode("u$aaaxxiiz");
  EXPECT_EQ(encode(f, Style::Ascii), "u$aaaxxiiz");
  EXPECT_EQ(encode(f, Style::Unicode), "ušâḫḫīz");
  EXPECT_EQ(encode(f, Style::Html), "u&#353;&#226;&#7723;&#7723;&#299;z");
}

TEST(Encode, WeakRadical) {
  EXPECT_EQ(encode(decode("iq&"), Style::Unicode), "iq&");
  EXPECT_EQ(encode(decode("iq&"), Style::Html), "iq&amp;");
}

TEST(Encode, WildcardRefused) {
  EXPECT_THROW(encode(decode("i*p")), EncodeError);
}

TEST(Wildcards, ExpansionCount) {
  EXPECT_EQ(expand_wildcards(decode("iprus")).size(), 1u);
  EXPECT_EQ(expand_wildcards(decode("a*b")).size(), 3u);
  EXPECT_EQ(expand_wildcards(decode("a*bi*")).size(), 9u);
}

// Brute force: every canonical form obtained by replacing each starred vowel
// with one, two or three copies of itself.
TEST(Wildcards, MatchesStringSubstitution) {
  const std::string pattern = "ta*pi*s";
  std::set<std::string> expected;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) expected.insert("t" + std::string(a, 'a') + "p" + std::string(b, 'i') + "s");
  std::set<std::string> got;
  for (const auto& f : expand_wildcards(decode(pattern))) got.insert(encode(f));
  EXPECT_EQ(got, expected);
}

TEST(Wildcards, LeftmostVariesSlowest) {
  const auto e = expand_wildcards(decode("a*bi*"));
  EXPECT_EQ(encode(e[0]), "abi");
  EXPECT_EQ(encode(e[1]), "abii");
  EXPECT_EQ(encode(e[3]), "aabi");
  EXPECT_EQ(encode(e[8]), "aaabiii");
}

TEST(Properties, AsciiRoundTrip) {
  std::mt19937 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_canonical(rng);
    ASSERT_TRUE(f.is_canonical());
    EXPECT_EQ(decode(encode(f)), f) << encode(f);
  }
}

TEST(Properties, HtmlAgreesWithUnicode) {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_canonical(rng);
    EXPECT_EQ(unescape_html(encode(f, Style::Html)), encode(f, Style::Unicode));
  }
}

TEST(Properties, HtmlIsPlainAscii) {
  std::mt19937 rng(13);
  const std::regex ascii_only("^[\\x20-\\x7e]*$");
  for (int i = 0; i < 500; ++i) EXPECT_TRUE(std::regex_match(encode(random_canonical(rng), Style::Html), ascii_only));
}

TEST(Canonical, AdjacentSameQuality) {
  EXPECT_FALSE((SegmentedForm{V('a'), V('a')}).is_canonical());
  EXPECT_TRUE((SegmentedForm{V('i'), V('a')}).is_canonical());
}

TEST(Order, AsciiOrderSortsByEncoding) {
  AsciiOrder less;
  EXPECT_TRUE(less(decode("ipras"), decode("iprus")));
  EXPECT_FALSE(less(decode("iprus"), decode("iprus")));
}
