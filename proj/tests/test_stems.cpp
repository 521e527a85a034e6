#include <gtest/gtest.h>

#include <set>
#include <string>
#include <variant>

#include "akkadian/stems.hpp"
#include "fixtures.hpp"

using namespace akkadian;

namespace {

const StemRegistry& registry() {
  static const StemRegistry r;
  return r;
}

bool realizes(const fixtures::ParadigmRow& row) {
  const auto& rules = registry().stem_rules(row.bundle.stem);
  const auto forms = rules::realize(rules, entry_name(row.bundle), {row.root.radicals, row.bundle.png.features()});
  for (const auto& f : forms)
    if (encode(f) == row.form) return true;
  return false;
}

// Radicals the rule bound must agree with the root; class-fixed ones may be unbound.
bool recognizes(const fixtures::ParadigmRow& row) {
  const auto& rules = registry().stem_rules(row.bundle.stem);
  const auto head = rules::constants({std::to_string(row.bundle.png.person), std::string(1, row.bundle.png.gender),
                                      std::string(1, row.bundle.png.number)});
  for (const auto& r : rules::recognize(rules, entry_name(row.bundle), decode(row.form), head)) {
    if (!r.remainder.empty()) continue;
    bool agree = true;
    for (std::size_t i = 0; i < 3; ++i)
      if (r.bindings.radicals[i] != 0 && r.bindings.radicals[i] != row.root.radicals[i]) agree = false;
    if (agree) return true;
  }
  return false;
}

}  // namespace

TEST(Naming, EntryNames) {
  EXPECT_EQ(entry_name(Stem::G(), Tense::Durative, RootClass::Strong), "strgdur");
  EXPECT_EQ(entry_name(Stem::G(), Tense::Precative, RootClass::ThirdWeak), "twgprec");
  EXPECT_EQ(entry_name(Stem::N(), Tense::Preterite, RootClass::FirstN), "fnnpret");
  EXPECT_EQ(entry_name(Stem::D(), Tense::Vetitive, RootClass::SecondAleph), "sadvet");
}

TEST(Features, ParseAndPrint) {
  EXPECT_EQ(parse_tense("Precative"), Tense::Precative);
  EXPECT_EQ(parse_tense("dur"), Tense::Durative);
  EXPECT_FALSE(parse_tense("Future"));
  EXPECT_EQ(parse_root_class("ThirdWeak"), RootClass::ThirdWeak);
  EXPECT_EQ(PngCell::parse("3cs")->label(), "3 c s");
  EXPECT_EQ(PngCell::parse("2 f s")->str(), "2fs");
  EXPECT_FALSE(PngCell::parse("9xx"));
  EXPECT_FALSE(is_subject_cell(*PngCell::parse("3ms")));
  EXPECT_EQ(Root::parse("q-b-&")->str(), "q-b-&");
  EXPECT_FALSE(Root::parse("p-r"));
}

TEST(RootClasses, Admission) {
  EXPECT_TRUE(admits(RootClass::Strong, Root::of('p', 'r', 's')));
  EXPECT_FALSE(admits(RootClass::Strong, Root::of('n', 'd', 'n')));
  EXPECT_FALSE(admits(RootClass::Strong, Root::of('q', 'b', '&')));
  EXPECT_TRUE(admits(RootClass::ThirdWeak, Root::of('q', 'b', '&')));
  EXPECT_FALSE(admits(RootClass::ThirdWeak, Root::of('w', 'b', '&')));
  EXPECT_TRUE(admits(RootClass::FirstN, Root::of('n', 'd', 'n')));
  EXPECT_TRUE(admits(RootClass::FirstW_Active, Root::of('w', 'b', 'l')));
  EXPECT_TRUE(admits(RootClass::SecondAleph, Root::of('$', '\'', 'l')));
  EXPECT_FALSE(admits(RootClass::SecondAleph, Root::of('\'', '\'', 'l')));
  EXPECT_EQ(classes_for(Root::of('w', 'b', 'l')).size(), 2u);
}

TEST(Registry, DiscoversStems) {
  const auto& s = registry().stems();
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], Stem::G());
  EXPECT_EQ(s[1], Stem::D());
  EXPECT_EQ(s[2], Stem::N());
  EXPECT_TRUE(registry().find_stem("D"));
  EXPECT_FALSE(registry().find_stem("Sh"));
}

TEST(Registry, Errors) {
  EXPECT_THROW(StemRegistry("/nonexistent/dir"), rules::RuleLoadError);
  EXPECT_THROW(registry().stem_rules(Stem{"Q"}), FeatureError);
}

TEST(Coverage, ImperativeIsSecondPersonOnly) {
  FeatureBundle b{Stem::G(), Tense::Imperative, {2, 'm', 's'}, RootClass::Strong};
  EXPECT_TRUE(registry().supports(b));
  b.png = {3, 'c', 's'};
  EXPECT_FALSE(registry().supports(b));
  EXPECT_THROW(registry().checked_entry(b), UnsupportedCell);
}

TEST(Coverage, StrongCellsEverywhere) {
  for (const auto& stem : registry().stems())
    for (auto t : kTenses)
      for (const auto& png : subject_cells()) {
        if (t == Tense::Imperative && png.person != 2) continue;
        EXPECT_TRUE(registry().supports({stem, t, png, RootClass::Strong}))
            << stem.code << " " << to_string(t) << " " << png.str();
      }
}

TEST(Coverage, EveryFixtureCellSupported) {
  for (const auto& row : fixtures::paradigms())
    EXPECT_TRUE(registry().supports(row.bundle)) << row.form;
}

TEST(Fixtures, CorpusSize) {
  const auto rows = fixtures::paradigms();
  std::size_t strong = 0;
  for (const auto& r : rows) strong += r.bundle.root_class == RootClass::Strong;
  EXPECT_GE(strong, 144u);
  EXPECT_GT(rows.size(), strong);
}

TEST(Fixtures, EveryRowRealizes) {
  for (const auto& row : fixtures::paradigms()) EXPECT_TRUE(realizes(row)) << row.root.str() << " " << row.form;
}

TEST(Fixtures, EveryRowRecognizes) {
  for (const auto& row : fixtures::paradigms()) EXPECT_TRUE(recognizes(row)) << row.root.str() << " " << row.form;
}

TEST(Fixtures, ExcludedVariantsAreNotProduced) {
  const auto rows = fixtures::paradigms(true);
  ASSERT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_FALSE(realizes(row)) << row.form;
}

// Plural and feminine cells extend the singular rule rather than restating it.
TEST(Structure, PluralsReuseSingular) {
  const auto& g = registry().stem_rules(Stem::G());
  const std::vector<std::pair<std::string, std::string>> reuse = {
      {"2fs", "2ms"}, {"3mp", "3cs"}, {"3fp", "3cs"}, {"2cp", "2ms"}};
  for (const auto& [cell, base] : reuse) {
    bool found = false;
    for (const auto* t : g.rules_named("strgpret")) {
      std::string head;
      for (const auto& f : t->features) head += f.value;
      if (head != cell) continue;
      const auto* call = std::get_if<rules::Call>(&t->body.front());
      ASSERT_NE(call, nullptr) << cell;
      std::string target;
      for (const auto& f : call->features) target += f.value;
      EXPECT_EQ(call->rule_name, "strgpret");
      EXPECT_EQ(target, base);
      found = true;
    }
    EXPECT_TRUE(found) << cell;
  }
}

TEST(Structure, RuleFilesLoad) {
  for (const auto& stem : registry().stems()) {
    const auto& rs = registry().stem_rules(stem);
    EXPECT_EQ(rs.stem(), stem.code);
    EXPECT_GT(rs.size(), 100u);
  }
}
