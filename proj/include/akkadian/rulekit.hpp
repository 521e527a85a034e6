#pragma once

// Bidirectional rule engine over segment sequences.
//
// A rule is `name(features) --> body`, where each body item is a literal
// segment run, a radical reference (1..3), a vowel-class slot or a call to
// another rule. The same rules are run in two directions: `recognize` matches
// a prefix of an input form and binds radicals, `realize` substitutes bound
// radicals and enumerates class members to produce surface forms.
//
// Rule-file schema (JSON, schema_version 1):
//   { "schema_version": 1, "stem": "G",
//     "classes": { "<id>": ["a", "ee", ...] },        // optional extras
//     "rules": [ { "name": "strgdur", "features": ["3","m","p"],
//                  "body": ["call:strgdur(3,c,s)", "literal:uu"] }, ... ] }
// Body items: literal:<ascii> | radical:<1|2|3> | class:<id> | call:<name>(<args>).
// Feature arguments starting with an uppercase letter are variables.

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "akkadian/segform.hpp"
#include "json.hpp"

namespace akkadian::rules {

class RuleLoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRule : public std::invalid_argument {
 public:
  explicit UnknownRule(const std::string& name) : std::invalid_argument("unknown rule '" + name + "'") {}
};

class UnboundRadical : public std::invalid_argument {
 public:
  explicit UnboundRadical(int index)
      : std::invalid_argument("radical " + std::to_string(index) + " is not bound") {}
};

struct FeatureArg {
  std::string value;
  bool variable = false;

  static FeatureArg parse(std::string_view text) {
    FeatureArg a;
    a.value = std::string(text);
    a.variable = !text.empty() && text.front() >= 'A' && text.front() <= 'Z';
    return a;
  }
  static FeatureArg constant(std::string v) { return {std::move(v), false}; }
  static FeatureArg var(std::string v) { return {std::move(v), true}; }

  friend bool operator==(const FeatureArg&, const FeatureArg&) = default;
};

using FeatureArgs = std::vector<FeatureArg>;

inline FeatureArgs constants(std::initializer_list<std::string> values) {
  FeatureArgs out;
  for (const auto& v : values) out.push_back(FeatureArg::constant(v));
  return out;
}

struct Literal {
  std::vector<Segment> segments;
};
struct RadicalRef {
  int index = 1;
};
struct ClassSlot {
  std::string class_id;
};
struct Call {
  std::string rule_name;
  FeatureArgs features;
};
using RuleItem = std::variant<Literal, RadicalRef, ClassSlot, Call>;

struct RuleTemplate {
  std::string name;
  FeatureArgs features;
  std::vector<RuleItem> body;
};

class VowelClassTable {
 public:
  static VowelClassTable builtin() {
    VowelClassTable t;
    const auto all = [](Length l) {
      std::vector<Segment> v;
      for (char q : kVowelLetters) v.push_back(Segment::vowel(q, l));
      return v;
    };
    t.add("vs", all(Length::Short));
    t.add("vl", all(Length::Long));
    t.add("vdl", all(Length::Overlong));
    t.add("ae", {Segment::vowel('a'), Segment::vowel('e')});
    t.add("ui", {Segment::vowel('u'), Segment::vowel('i')});
    return t;
  }

  void add(std::string id, std::vector<Segment> members) { classes_[std::move(id)] = std::move(members); }

  const std::vector<Segment>* find(std::string_view id) const {
    auto it = classes_.find(std::string(id));
    return it == classes_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return classes_.size(); }

 private:
  std::map<std::string, std::vector<Segment>> classes_;
};

// Radical slots hold a consonant letter, or 0 when unbound.
struct Bindings {
  std::array<char, 3> radicals{};
  std::vector<std::string> features;

  static Bindings of(char r1, char r2, char r3, std::vector<std::string> features = {}) {
    return {{r1, r2, r3}, std::move(features)};
  }

  bool radicals_complete() const {
    return std::all_of(radicals.begin(), radicals.end(), [](char c) { return c != 0; });
  }

  friend auto operator<=>(const Bindings&, const Bindings&) = default;
  friend bool operator==(const Bindings&, const Bindings&) = default;
};

struct Recognition {
  Bindings bindings;
  SegmentedForm remainder;

  friend auto operator<=>(const Recognition&, const Recognition&) = default;
  friend bool operator==(const Recognition&, const Recognition&) = default;
};

class RuleSet;
std::vector<SegmentedForm> realize(const RuleSet& rules, std::string_view entry, const Bindings& bindings);

class RuleSet {
 public:
  RuleSet() : classes_(VowelClassTable::builtin()) {}

  static RuleSet from_json(const nlohmann::json& doc);

  static RuleSet from_text(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return RuleSet{};
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw RuleLoadError(std::string("malformed rule document: ") + e.what());
    }
    return from_json(doc);
  }

  static RuleSet from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw RuleLoadError("cannot open rule file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return from_text(buf.str());
    } catch (const RuleLoadError& e) {
      throw RuleLoadError(path.filename().string() + ": " + e.what());
    }
  }

  const std::string& stem() const { return stem_; }
  const std::vector<RuleTemplate>& rules() const { return rules_; }
  const VowelClassTable& classes() const { return classes_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }
  bool has(std::string_view name) const { return name_ids_.count(std::string(name)) != 0; }

  std::vector<const RuleTemplate*> rules_named(std::string_view name) const {
    std::vector<const RuleTemplate*> out;
    if (auto id = name_id(name))
      for (int r : by_name_[static_cast<std::size_t>(*id)]) out.push_back(&rules_[static_cast<std::size_t>(r)]);
    return out;
  }

  std::optional<std::size_t> arity(std::string_view name) const {
    auto id = name_id(name);
    if (!id) return std::nullopt;
    return arity_[static_cast<std::size_t>(*id)];
  }

 private:
  friend class Machine;

  struct Slot {
    int var = -1;     // >= 0: variable index in the rule frame
    int symbol = -1;  // constant symbol id when var < 0
  };
  struct CItem {
    enum class Kind { Literal, Radical, Class, Call } kind = Kind::Literal;
    std::vector<Segment> segments;  // literal run, or class members
    int radical = 0;                // 0-based
    int target = -1;
    std::vector<Slot> args;
  };
  struct CRule {
    int name = -1;
    std::vector<Slot> head;
    std::vector<CItem> body;
    int vars = 0;
  };

  std::optional<int> name_id(std::string_view name) const {
    auto it = name_ids_.find(std::string(name));
    if (it == name_ids_.end()) return std::nullopt;
    return it->second;
  }
  int intern_name(const std::string& name) {
    auto [it, inserted] = name_ids_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) {
      names_.push_back(name);
      by_name_.emplace_back();
      arity_.push_back(0);
    }
    return it->second;
  }
  int intern_symbol(const std::string& s) {
    auto [it, inserted] = symbol_ids_.emplace(s, static_cast<int>(symbols_.size()));
    if (inserted) symbols_.push_back(s);
    return it->second;
  }
  std::optional<int> symbol_id(const std::string& s) const {
    auto it = symbol_ids_.find(s);
    if (it == symbol_ids_.end()) return std::nullopt;
    return it->second;
  }

  void compile();
  void check_cycles() const;

  std::string stem_;
  std::vector<RuleTemplate> rules_;
  VowelClassTable classes_;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> name_ids_;
  std::vector<std::vector<int>> by_name_;
  std::vector<std::size_t> arity_;
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> symbol_ids_;
  std::vector<CRule> compiled_;
};

namespace detail {

inline std::string describe(std::size_t index, const std::string& name) {
  return "rule #" + std::to_string(index) + " '" + name + "'";
}

inline Call parse_call(std::string_view text, const std::string& where) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw RuleLoadError(where + ": malformed call '" + std::string(text) + "'");
  Call c;
  c.rule_name = std::string(text.substr(0, open));
  if (c.rule_name.empty()) throw RuleLoadError(where + ": call without a rule name");
  auto inner = text.substr(open + 1, text.size() - open - 2);
  while (!inner.empty()) {
    const auto comma = inner.find(',');
    auto arg = inner.substr(0, comma);
    if (arg.empty()) throw RuleLoadError(where + ": empty call argument");
    c.features.push_back(FeatureArg::parse(arg));
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return c;
}

inline RuleItem parse_item(std::string_view text, const std::string& where) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw RuleLoadError(where + ": body item '" + std::string(text) + "' has no tag");
  const auto tag = text.substr(0, colon);
  const auto value = text.substr(colon + 1);
  if (tag == "literal") {
    SegmentedForm f;
    try {
      f = decode(value);
    } catch (const DecodeError& e) {
      throw RuleLoadError(where + ": bad literal '" + std::string(value) + "': " + e.what());
    }
    if (f.has_wildcards()) throw RuleLoadError(where + ": wildcard in literal");
    return Literal{f.segments()};
  }
  if (tag == "radical") {
    if (value != "1" && value != "2" && value != "3")
      throw RuleLoadError(where + ": radical index must be 1, 2 or 3");
    return RadicalRef{value[0] - '0'};
  }
  if (tag == "class") return ClassSlot{std::string(value)};
  if (tag == "call") return parse_call(value, where);
  throw RuleLoadError(where + ": unknown body item tag '" + std::string(tag) + "'");
}

}  // namespace detail

inline RuleSet RuleSet::from_json(const nlohmann::json& doc) {
  RuleSet rs;
  if (doc.is_null()) return rs;
  if (!doc.is_object()) throw RuleLoadError("malformed rule document: top level is not an object");
  if (doc.contains("schema_version") && doc["schema_version"] != 1)
    throw RuleLoadError("unsupported schema_version " + doc["schema_version"].dump());
  if (doc.contains("stem")) {
    if (!doc["stem"].is_string()) throw RuleLoadError("malformed rule document: 'stem' is not a string");
    rs.stem_ = doc["stem"].get<std::string>();
  }
  if (doc.contains("classes")) {
    if (!doc["classes"].is_object()) throw RuleLoadError("malformed rule document: 'classes' is not an object");
    for (const auto& [id, members] : doc["classes"].items()) {
      std::vector<Segment> segs;
      if (!members.is_array()) throw RuleLoadError("vowel class '" + id + "' is not a list");
      for (const auto& m : members) {
        SegmentedForm f;
        try {
          f = decode(m.get<std::string>());
        } catch (const std::exception& e) {
          throw RuleLoadError("vowel class '" + id + "': " + e.what());
        }
        if (f.size() != 1 || !f[0].is_vowel())
          throw RuleLoadError("vowel class '" + id + "' member is not a single vowel");
        segs.push_back(f[0]);
      }
      rs.classes_.add(id, std::move(segs));
    }
  }
  const auto rules = doc.value("rules", nlohmann::json::array());
  if (!rules.is_array()) throw RuleLoadError("malformed rule document: 'rules' is not a list");
  std::size_t index = 0;
  for (const auto& r : rules) {
    const std::string name = r.is_object() && r.contains("name") && r["name"].is_string()
                                 ? r["name"].get<std::string>()
                                 : std::string();
    const auto where = detail::describe(index, name);
    if (name.empty()) throw RuleLoadError(where + ": missing rule name");
    if (!r.contains("features") || !r["features"].is_array())
      throw RuleLoadError(where + ": 'features' must be a list");
    if (!r.contains("body") || !r["body"].is_array() || r["body"].empty())
      throw RuleLoadError(where + ": 'body' must be a non-empty list");
    RuleTemplate t;
    t.name = name;
    for (const auto& f : r["features"]) {
      if (!f.is_string() || f.get<std::string>().empty())
        throw RuleLoadError(where + ": feature arguments must be non-empty strings");
      t.features.push_back(FeatureArg::parse(f.get<std::string>()));
    }
    for (const auto& item : r["body"]) {
      if (!item.is_string()) throw RuleLoadError(where + ": body items must be strings");
      t.body.push_back(detail::parse_item(item.get<std::string>(), where));
    }
    rs.rules_.push_back(std::move(t));
    ++index;
  }
  rs.compile();
  rs.check_cycles();
  return rs;
}

inline void RuleSet::compile() {
  // Names and arities first so calls can be resolved in any order.
  std::vector<bool> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& t = rules_[i];
    const int id = intern_name(t.name);
    const auto uid = static_cast<std::size_t>(id);
    if (by_name_[uid].empty())
      arity_[uid] = t.features.size();
    else if (arity_[uid] != t.features.size())
      throw RuleLoadError(detail::describe(i, t.name) + ": arity differs from earlier rules of that name");
    by_name_[uid].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& t = rules_[i];
    const auto where = detail::describe(i, t.name);
    CRule cr;
    cr.name = *name_id(t.name);
    std::map<std::string, int> vars;
    std::map<std::string, int> call_uses;
    const auto slot_of = [&](const FeatureArg& a) {
      Slot s;
      if (a.variable) {
        auto [it, inserted] = vars.emplace(a.value, static_cast<int>(vars.size()));
        s.var = it->second;
      } else {
        s.symbol = intern_symbol(a.value);
      }
      return s;
    };
    std::set<std::string> head_vars;
    for (const auto& a : t.features) {
      if (a.variable && !head_vars.insert(a.value).second)
        throw RuleLoadError(where + ": head variable " + a.value + " repeated");
      cr.head.push_back(slot_of(a));
    }
    for (const auto& item : t.body) {
      CItem ci;
      if (const auto* lit = std::get_if<Literal>(&item)) {
        ci.kind = CItem::Kind::Literal;
        ci.segments = lit->segments;
      } else if (const auto* rad = std::get_if<RadicalRef>(&item)) {
        if (rad->index < 1 || rad->index > 3) throw RuleLoadError(where + ": radical index out of range");
        ci.kind = CItem::Kind::Radical;
        ci.radical = rad->index - 1;
      } else if (const auto* cls = std::get_if<ClassSlot>(&item)) {
        const auto* members = classes_.find(cls->class_id);
        if (!members) throw RuleLoadError(where + ": unknown vowel class '" + cls->class_id + "'");
        ci.kind = CItem::Kind::Class;
        ci.segments = *members;
      } else {
        const auto& call = std::get<Call>(item);
        auto target = name_id(call.rule_name);
        if (!target) throw RuleLoadError(where + ": unresolved call to '" + call.rule_name + "'");
        if (arity_[static_cast<std::size_t>(*target)] != call.features.size())
          throw RuleLoadError(where + ": call to '" + call.rule_name + "' has wrong arity");
        ci.kind = CItem::Kind::Call;
        ci.target = *target;
        for (const auto& a : call.features) {
          if (a.variable) ++call_uses[a.value];
          ci.args.push_back(slot_of(a));
        }
      }
      cr.body.push_back(std::move(ci));
    }
    for (const auto& v : head_vars)
      if (call_uses[v] != 1)
        throw RuleLoadError(where + ": head variable " + v + " must appear in exactly one body call");
    cr.vars = static_cast<int>(vars.size());
    compiled_.push_back(std::move(cr));
  }
}

// Calls may not form a cycle: a cycle would either left-recurse forever when
// recognizing or never bottom out when realizing.
inline void RuleSet::check_cycles() const {
  const auto n = compiled_.size();
  std::vector<std::vector<std::size_t>> edges(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& item : compiled_[r].body) {
      if (item.kind != CItem::Kind::Call) continue;
      for (int s : by_name_[static_cast<std::size_t>(item.target)]) {
        const auto& callee = compiled_[static_cast<std::size_t>(s)];
        bool unifies = true;
        for (std::size_t i = 0; i < item.args.size(); ++i) {
          const auto& a = item.args[i];
          const auto& h = callee.head[i];
          if (a.var < 0 && h.var < 0 && a.symbol != h.symbol) unifies = false;
        }
        if (unifies) edges[r].push_back(static_cast<std::size_t>(s));
      }
    }
  }
  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  std::function<void(std::size_t)> visit = [&](std::size_t r) {
    colour[r] = Grey;
    for (auto s : edges[r]) {
      if (colour[s] == Grey)
        throw RuleLoadError(detail::describe(s, rules_[s].name) + ": call cycle through '" +
                            rules_[r].name + "'");
      if (colour[s] == White) visit(s);
    }
    colour[r] = Black;
  };
  for (std::size_t r = 0; r < n; ++r)
    if (colour[r] == White) visit(r);
}

// Depth-first interpreter shared by both directions. With an input form it
// matches segments; without one it emits them.
class Machine {
 public:
  using HeadCont = std::function<void(std::size_t pos, const std::vector<int>& head)>;

  Machine(const RuleSet& rules, const SegmentedForm* input) : rs_(rules), input_(input) {}

  std::array<char, 3> radicals{};
  std::vector<Segment> out;

  void call(int name, const std::vector<int>& args, std::size_t pos, const HeadCont& k) {
    for (int ri : rs_.by_name_[static_cast<std::size_t>(name)]) {
      const auto& rule = rs_.compiled_[static_cast<std::size_t>(ri)];
      std::vector<int> env(static_cast<std::size_t>(rule.vars), -1);
      bool ok = true;
      for (std::size_t i = 0; i < rule.head.size() && ok; ++i) {
        const auto& slot = rule.head[i];
        if (slot.var < 0)
          ok = args[i] < 0 || args[i] == slot.symbol;
        else
          env[static_cast<std::size_t>(slot.var)] = args[i];
      }
      if (!ok) continue;
      body(rule, 0, env, pos, [&](std::size_t p, const std::vector<int>& e) {
        std::vector<int> head(rule.head.size());
        for (std::size_t i = 0; i < rule.head.size(); ++i) {
          const auto& slot = rule.head[i];
          head[i] = slot.var < 0 ? slot.symbol : e[static_cast<std::size_t>(slot.var)];
        }
        k(p, head);
      });
    }
  }

  const std::string& symbol(int id) const { return rs_.symbols_[static_cast<std::size_t>(id)]; }

 private:
  using BodyCont = std::function<void(std::size_t pos, const std::vector<int>& env)>;

  bool matching() const { return input_ != nullptr; }

  void body(const RuleSet::CRule& rule, std::size_t idx, const std::vector<int>& env, std::size_t pos,
            const BodyCont& k) {
    if (idx == rule.body.size()) {
      k(pos, env);
      return;
    }
    const auto& item = rule.body[idx];
    using Kind = RuleSet::CItem::Kind;
    switch (item.kind) {
      case Kind::Literal: {
        const auto n = item.segments.size();
        if (matching()) {
          if (pos + n > input_->size()) return;
          for (std::size_t i = 0; i < n; ++i)
            if ((*input_)[pos + i] != item.segments[i]) return;
          body(rule, idx + 1, env, pos + n, k);
        } else {
          out.insert(out.end(), item.segments.begin(), item.segments.end());
          body(rule, idx + 1, env, pos, k);
          out.resize(out.size() - n);
        }
        return;
      }
      case Kind::Radical: {
        char& slot = radicals[static_cast<std::size_t>(item.radical)];
        if (matching()) {
          if (pos >= input_->size() || !(*input_)[pos].is_consonant()) return;
          const char c = (*input_)[pos].letter;
          if (slot != 0) {
            if (slot == c) body(rule, idx + 1, env, pos + 1, k);
            return;
          }
          slot = c;
          body(rule, idx + 1, env, pos + 1, k);
          slot = 0;
        } else {
          if (slot == 0) throw UnboundRadical(item.radical + 1);
          out.push_back(Segment::consonant(slot));
          body(rule, idx + 1, env, pos, k);
          out.pop_back();
        }
        return;
      }
      case Kind::Class: {
        for (const auto& member : item.segments) {
          if (matching()) {
            if (pos < input_->size() && (*input_)[pos] == member) body(rule, idx + 1, env, pos + 1, k);
          } else {
            out.push_back(member);
            body(rule, idx + 1, env, pos, k);
            out.pop_back();
          }
        }
        return;
      }
      case Kind::Call: {
        std::vector<int> args(item.args.size());
        for (std::size_t i = 0; i < args.size(); ++i) {
          const auto& a = item.args[i];
          args[i] = a.var < 0 ? a.symbol : env[static_cast<std::size_t>(a.var)];
        }
        call(item.target, args, pos, [&](std::size_t p, const std::vector<int>& head) {
          std::vector<int> next = env;
          for (std::size_t i = 0; i < item.args.size(); ++i) {
            const auto& a = item.args[i];
            if (a.var < 0) {
              if (head[i] != a.symbol) return;
              continue;
            }
            int& v = next[static_cast<std::size_t>(a.var)];
            if (v >= 0 && v != head[i]) return;
            v = head[i];
          }
          body(rule, idx + 1, next, p, k);
        });
        return;
      }
    }
  }

  const RuleSet& rs_;
  const SegmentedForm* input_;

 public:
  // Entry arguments: constants resolve to symbol ids (-2 when the constant is
  // unknown to the rule set, so nothing can match), variables to -1.
  std::optional<std::vector<int>> entry_args(const FeatureArgs& args, std::vector<int>& var_of) const {
    std::vector<int> out_args;
    std::map<std::string, int> vars;
    for (const auto& a : args) {
      if (a.variable) {
        auto [it, _] = vars.emplace(a.value, static_cast<int>(vars.size()));
        var_of.push_back(it->second);
        out_args.push_back(-1);
      } else {
        var_of.push_back(-1);
        auto id = rs_.symbol_id(a.value);
        if (!id) return std::nullopt;
        out_args.push_back(*id);
      }
    }
    return out_args;
  }

  std::optional<int> entry(std::string_view name) const { return rs_.name_id(name); }
};

// Every (bindings, remainder) pair such that the entry consumes a prefix of
// `form`. `head` constrains the entry's features; empty means all variables.
inline std::vector<Recognition> recognize(const RuleSet& rules, std::string_view entry, const SegmentedForm& form,
                                          FeatureArgs head = {}) {
  Machine m(rules, &form);
  const auto name = m.entry(entry);
  if (!name) throw UnknownRule(std::string(entry));
  const auto arity = *rules.arity(entry);
  if (head.empty())
    for (std::size_t i = 0; i < arity; ++i) head.push_back(FeatureArg::var("_" + std::to_string(i)));
  if (head.size() != arity) throw std::invalid_argument("feature arity mismatch for '" + std::string(entry) + "'");
  if (form.has_wildcards()) throw std::invalid_argument("recognize requires a wildcard-free form");

  std::vector<int> var_of;
  auto args = m.entry_args(head, var_of);
  std::set<Recognition> found;
  if (!args) return {};
  m.call(*name, *args, 0, [&](std::size_t pos, const std::vector<int>& values) {
    // Repeated query variables must agree.
    std::map<int, int> seen;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (var_of[i] < 0) continue;
      auto [it, inserted] = seen.emplace(var_of[i], values[i]);
      if (!inserted && it->second != values[i]) return;
    }
    Recognition r;
    r.bindings.radicals = m.radicals;
    for (int v : values) r.bindings.features.push_back(v >= 0 ? m.symbol(v) : std::string());
    r.remainder = form.suffix_from(pos);
    found.insert(std::move(r));
  });
  std::vector<Recognition> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const Recognition& a, const Recognition& b) {
    if (a.bindings != b.bindings) return a.bindings < b.bindings;
    return AsciiOrder{}(a.remainder, b.remainder);
  });
  return out;
}

inline std::vector<Recognition> recognize(const RuleSet& rules, std::string_view entry, const SegmentedForm& form,
                                          std::initializer_list<std::string> head) {
  return recognize(rules, entry, form, constants(head));
}

// Every surface form the entry produces for fully bound radicals and
// constant features, in ASCII order.
inline std::vector<SegmentedForm> realize(const RuleSet& rules, std::string_view entry, const Bindings& bindings) {
  Machine m(rules, nullptr);
  const auto name = m.entry(entry);
  if (!name) throw UnknownRule(std::string(entry));
  for (std::size_t i = 0; i < 3; ++i)
    if (bindings.radicals[i] == 0) throw UnboundRadical(static_cast<int>(i) + 1);
  if (bindings.features.size() != *rules.arity(entry))
    throw std::invalid_argument("feature arity mismatch for '" + std::string(entry) + "'");
  FeatureArgs head;
  for (const auto& f : bindings.features) {
    if (f.empty() || FeatureArg::parse(f).variable)
      throw std::invalid_argument("realize requires constant features");
    head.push_back(FeatureArg::constant(f));
  }
  std::vector<int> var_of;
  auto args = m.entry_args(head, var_of);
  if (!args) return {};
  m.radicals = bindings.radicals;
  std::set<SegmentedForm, AsciiOrder> found;
  m.call(*name, *args, 0, [&](std::size_t, const std::vector<int>&) { found.insert(SegmentedForm(m.out)); });
  return {found.begin(), found.end()};
}

inline RuleSet load_rules(std::string_view text) { return RuleSet::from_text(text); }

}  // namespace akkadian::rules
