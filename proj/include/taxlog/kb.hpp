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

// The clause store. Clauses are indexed by (functor, arity) in source order.
// Loading validates each clause: heads must be positive user predicates (no
// builtin may be shadowed) and negated body variables must be scoped safely.
//
// `declare(name, arity).` facts register a predicate as part of the known
// vocabulary. A declared predicate with no clauses simply fails when queried;
// an entirely unknown predicate is an error — that distinction is what turns
// encoding typos into diagnostics instead of silently wrong answers.

#pragma once

#include "taxlog/builtins.hpp"
#include "taxlog/parser.hpp"
#include "taxlog/term.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace taxlog {

class KBError : public std::runtime_error {
public:
  explicit KBError(const std::string& what) : std::runtime_error(what) {}
};

class KnowledgeBase {
public:
  using Key = std::pair<std::string, int>;

  void add(Clause c) {
    validate(c);
    if (c.head.is_compound() && c.head.name() == "declare" && c.head.arity() == 2 &&
        c.is_fact()) {
      const Term& name = c.head.args()[0];
      const Term& arity = c.head.args()[1];
      if (!name.is_atom() || !arity.is_number() || !arity.number().is_integer())
        throw KBError("malformed declaration at " + c.origin.str() +
                      ": expected declare(name, arity)");
      declared_.insert({name.name(), static_cast<int>(arity.number().integer_value())});
    }
    Key key{c.head.name(), static_cast<int>(c.head.arity())};
    declared_.insert(key);
    index_[key].push_back(c);
    clauses_.push_back(std::move(c));
  }

  void load_text(std::string_view text, const std::string& file = "") {
    for (Clause& c : parse_program(text, file)) add(std::move(c));
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw KBError("cannot open clause file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    load_text(buf.str(), path);
  }

  // Clauses for (name, arity), in source order; null when none.
  const std::vector<Clause>* lookup(const std::string& name, int arity) const {
    auto it = index_.find({name, arity});
    return it == index_.end() ? nullptr : &it->second;
  }

  bool is_declared(const std::string& name, int arity) const {
    return declared_.count({name, arity}) != 0;
  }

  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }

  // Every known (functor, arity), declared or defined.
  const std::set<Key>& predicates() const { return declared_; }

private:
  void validate(const Clause& c) const {
    if (!c.head.is_callable())
      throw KBError("clause head is not callable at " + c.origin.str());
    if (is_builtin_name(c.head.name()))
      throw KBError("clause at " + c.origin.str() + " shadows builtin " +
                    c.head.name() + "/" + std::to_string(c.head.arity()));

    // Negation scoping: every variable of a negated literal must either be
    // bound by the head or an earlier positive literal, or occur nowhere
    // else in the clause (purely local, i.e. existential inside the
    // negation). Anything in between would consult an unbound shared
    // variable and make the clause's meaning order-dependent.
    std::set<std::string> bound = c.head.variables();
    std::map<std::string, int> uses;  // variable -> number of literals using it
    auto count_vars = [&uses](const Term& t) {
      for (const std::string& v : t.variables()) ++uses[v];
    };
    count_vars(c.head);
    for (const Literal& l : c.body) count_vars(l.goal);

    for (const Literal& l : c.body) {
      if (l.negated) {
        for (const std::string& v : l.goal.variables()) {
          if (bound.count(v)) continue;
          if (uses[v] == 1) continue;  // local to this negation
          throw KBError("unsafe negation at " + c.origin.str() + ": variable " +
                        v + " in \\+ " + to_string(l.goal) +
                        " is shared but not bound earlier");
        }
      } else {
        for (const std::string& v : l.goal.variables()) bound.insert(v);
      }
    }
  }

  std::map<Key, std::vector<Clause>> index_;
  std::vector<Clause> clauses_;
  std::set<Key> declared_;
};

}  // namespace taxlog
