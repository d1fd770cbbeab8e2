// Copyright 2026 The Taxlog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Terms, literals, clauses and substitutions. Terms are immutable values
// with shared structure; once built they may be handed freely between
// threads. Numbers are canonical: an integral value is always an Integer
// term, a Decimal term always has a nonzero fractional part.

#pragma once

#include "taxlog/calendar.hpp"
#include "taxlog/decimal.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace taxlog {

enum class TermKind { Variable, Atom, Integer, Decimal, Date, Compound };

class Term;
using TermList = std::vector<Term>;

class Term {
public:
  Term() : Term(atom("nil")) {}

  static Term variable(std::string name) {
    return Term(Rep{TermKind::Variable, std::move(name), {}, {}, {}});
  }
  static Term atom(std::string name) {
    return Term(Rep{TermKind::Atom, std::move(name), {}, {}, {}});
  }
  static Term integer(BigInt v) {
    return Term(Rep{TermKind::Integer, {}, Decimal(std::move(v)), {}, {}});
  }
  static Term integer(long v) { return integer(BigInt(v)); }
  // Canonicalizing constructor: scale-0 decimals come back as Integer terms.
  static Term number(Decimal v) {
    TermKind k = v.is_integer() ? TermKind::Integer : TermKind::Decimal;
    return Term(Rep{k, {}, std::move(v), {}, {}});
  }
  static Term date(CivilDate d) {
    if (!calendar::valid(d))
      throw CalendarError("invalid calendar date: " + calendar::format_date(d));
    return Term(Rep{TermKind::Date, {}, {}, d, {}});
  }
  static Term compound(std::string functor, TermList args) {
    assert(!args.empty());  // arity 0 is an Atom, enforced by the parser too
    return Term(Rep{TermKind::Compound, std::move(functor), {}, {}, std::move(args)});
  }

  TermKind kind() const { return rep_->kind; }
  bool is_variable() const { return kind() == TermKind::Variable; }
  bool is_atom() const { return kind() == TermKind::Atom; }
  bool is_number() const {
    return kind() == TermKind::Integer || kind() == TermKind::Decimal;
  }
  bool is_date() const { return kind() == TermKind::Date; }
  bool is_compound() const { return kind() == TermKind::Compound; }
  bool is_callable() const { return is_atom() || is_compound(); }

  // Variable or atom name, or compound functor.
  const std::string& name() const { return rep_->name; }
  const Decimal& number() const { return rep_->number; }
  const CivilDate& date() const { return rep_->date; }
  const TermList& args() const { return rep_->args; }
  std::size_t arity() const {
    return kind() == TermKind::Compound ? rep_->args.size() : 0;
  }

  // Functor text for indexing: name for atoms/compounds.
  const std::string& functor() const { return rep_->name; }

  bool operator==(const Term& other) const { return compare(other) == 0; }
  bool operator!=(const Term& other) const { return compare(other) != 0; }
  bool operator<(const Term& other) const { return compare(other) < 0; }

  // Total structural order; used for canonical sets of solutions.
  int compare(const Term& other) const {
    if (rep_ == other.rep_) return 0;
    if (kind() != other.kind()) {
      // The two numeric kinds order by value; canonicalization guarantees an
      // Integer and a Decimal never hold the same value.
      if (is_number() && other.is_number()) {
        auto c = number() <=> other.number();
        return c < 0 ? -1 : 1;
      }
      return static_cast<int>(kind()) < static_cast<int>(other.kind()) ? -1 : 1;
    }
    switch (kind()) {
      case TermKind::Variable:
      case TermKind::Atom:
        return name().compare(other.name());
      case TermKind::Integer:
      case TermKind::Decimal: {
        auto c = number() <=> other.number();
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
      }
      case TermKind::Date: {
        auto c = date() <=> other.date();
        return c < 0 ? -1 : (c > 0 ? 1 : 0);
      }
      case TermKind::Compound: {
        if (int c = name().compare(other.name())) return c;
        if (arity() != other.arity()) return arity() < other.arity() ? -1 : 1;
        for (std::size_t i = 0; i < arity(); ++i)
          if (int c = args()[i].compare(other.args()[i])) return c;
        return 0;
      }
    }
    return 0;
  }

  void collect_variables(std::set<std::string>& out) const {
    switch (kind()) {
      case TermKind::Variable: out.insert(name()); break;
      case TermKind::Compound:
        for (const Term& a : args()) a.collect_variables(out);
        break;
      default: break;
    }
  }
  std::set<std::string> variables() const {
    std::set<std::string> v;
    collect_variables(v);
    return v;
  }
  bool is_ground() const {
    switch (kind()) {
      case TermKind::Variable: return false;
      case TermKind::Compound:
        for (const Term& a : args())
          if (!a.is_ground()) return false;
        return true;
      default: return true;
    }
  }

private:
  struct Rep {
    TermKind kind;
    std::string name;
    Decimal number;
    CivilDate date;
    TermList args;
  };
  explicit Term(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}

  std::shared_ptr<const Rep> rep_;
};

// A body literal: possibly negated goal. The goal must be callable.
struct Literal {
  Term goal;
  bool negated = false;

  bool operator==(const Literal& other) const {
    return negated == other.negated && goal == other.goal;
  }
};

// Where a clause came from, for traces and diagnostics.
struct SourceLoc {
  std::string file;
  int line = 0;

  std::string str() const {
    return file.empty() ? "<none>" : file + ":" + std::to_string(line);
  }
};

struct Clause {
  Term head;                  // callable, positive
  std::vector<Literal> body;  // empty for facts
  SourceLoc origin;

  bool is_fact() const { return body.empty(); }
};

// A substitution. Triangular: images may mention variables bound later;
// `apply` resolves to the fixpoint. Value-semantic and immutable from the
// outside — bind() returns an extended copy.
class Bindings {
public:
  Bindings() = default;

  bool contains(const std::string& var) const { return map_.count(var) != 0; }
  std::optional<Term> lookup(const std::string& var) const {
    auto it = map_.find(var);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  Bindings bind(const std::string& var, Term value) const {
    Bindings next(*this);
    next.map_.insert_or_assign(var, std::move(value));
    return next;
  }

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  // Follows variable chains until a non-variable or an unbound variable.
  Term walk(Term t) const {
    int guard = 0;
    while (t.is_variable()) {
      auto img = lookup(t.name());
      if (!img) return t;
      t = *img;
      if (++guard > kApplyDepthLimit)
        throw std::runtime_error("cyclic substitution (occurs-check disabled)");
    }
    return t;
  }

  // Full recursive application to the substitution's fixpoint.
  Term apply(const Term& t, int depth = 0) const {
    if (depth > kApplyDepthLimit)
      throw std::runtime_error("cyclic substitution (occurs-check disabled)");
    switch (t.kind()) {
      case TermKind::Variable: {
        auto img = lookup(t.name());
        if (!img) return t;
        return apply(*img, depth + 1);
      }
      case TermKind::Compound: {
        TermList out;
        out.reserve(t.args().size());
        for (const Term& a : t.args()) out.push_back(apply(a, depth + 1));
        return Term::compound(t.name(), std::move(out));
      }
      default:
        return t;
    }
  }

  Literal apply(const Literal& l) const { return Literal{apply(l.goal), l.negated}; }

  // Restriction to the given variables, with images fully resolved. This is
  // the answer form handed back in solutions: applying it twice equals
  // applying it once.
  Bindings project(const std::set<std::string>& vars) const {
    Bindings out;
    for (const std::string& v : vars) {
      if (contains(v)) {
        Term image = apply(Term::variable(v));
        if (image.is_variable() && image.name() == v) continue;
        out.map_.insert_or_assign(v, std::move(image));
      }
    }
    return out;
  }

  bool operator==(const Bindings& other) const {
    if (map_.size() != other.map_.size()) return false;
    auto it = other.map_.begin();
    for (const auto& [k, v] : map_) {
      if (it->first != k || !(it->second == v)) return false;
      ++it;
    }
    return true;
  }
  bool operator<(const Bindings& other) const {
    auto a = map_.begin();
    auto b = other.map_.begin();
    for (; a != map_.end() && b != other.map_.end(); ++a, ++b) {
      if (a->first != b->first) return a->first < b->first;
      if (int c = a->second.compare(b->second)) return c < 0;
    }
    return map_.size() < other.map_.size();
  }

private:
  static constexpr int kApplyDepthLimit = 4096;
  std::map<std::string, Term> map_;
};

// Source of globally fresh variable names.
class FreshNames {
public:
  std::string next(const std::string& base) {
    return "_R" + std::to_string(++counter_) + "_" + base;
  }

private:
  unsigned long counter_ = 0;
};

inline Term rename_term(const Term& t, std::map<std::string, std::string>& seen,
                        FreshNames& fresh) {
  switch (t.kind()) {
    case TermKind::Variable: {
      auto it = seen.find(t.name());
      if (it == seen.end())
        it = seen.emplace(t.name(), fresh.next(t.name())).first;
      return Term::variable(it->second);
    }
    case TermKind::Compound: {
      TermList out;
      out.reserve(t.args().size());
      for (const Term& a : t.args()) out.push_back(rename_term(a, seen, fresh));
      return Term::compound(t.name(), std::move(out));
    }
    default:
      return t;
  }
}

// Replaces every variable in the clause with a globally fresh one.
inline Clause rename_apart(const Clause& c, FreshNames& fresh) {
  std::map<std::string, std::string> seen;
  Clause out;
  out.head = rename_term(c.head, seen, fresh);
  out.body.reserve(c.body.size());
  for (const Literal& l : c.body)
    out.body.push_back(Literal{rename_term(l.goal, seen, fresh), l.negated});
  out.origin = c.origin;
  return out;
}

}  // namespace taxlog
