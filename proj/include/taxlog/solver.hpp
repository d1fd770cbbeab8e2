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

// The inference engine: depth-first, left-to-right resolution over clauses
// in source order, with negation as failure, builtins, and aggregation.
//
// Negation is scoped: a selected negated goal may carry variables only if
// they occur nowhere else in the pending computation (purely existential
// inside the negation). A shared unbound variable under `\+` is an error,
// never a silent wrong answer.
//
// Unknown predicates are errors too. A predicate that is declared (or has
// clauses elsewhere in the KB) but matches nothing merely fails; a name the
// KB has never heard of signals a typo.

#pragma once

#include "taxlog/builtins.hpp"
#include "taxlog/kb.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace taxlog {

class SolveError : public std::runtime_error {
public:
  explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};
class ResourceLimitError : public SolveError {
public:
  explicit ResourceLimitError(const std::string& what) : SolveError(what) {}
};
class NonGroundNegationError : public SolveError {
public:
  explicit NonGroundNegationError(const std::string& what) : SolveError(what) {}
};
class UnknownPredicateError : public SolveError {
public:
  explicit UnknownPredicateError(const std::string& what) : SolveError(what) {}
};

struct SolveLimits {
  long max_steps = 10000;   // resolution steps per top-level query
  long max_solutions = 0;   // 0 = unbounded
};

// One resolution step: the selected literal (instantiated as far as the
// step's own unifier determines it) and the clause or builtin resolving it.
// In a solution's proof, literals are re-instantiated under the final
// answer bindings, so they read fully resolved.
struct TraceEvent {
  int depth = 0;
  Term literal = Term::atom("true");
  bool negated = false;
  std::string clause_id;

  std::string str() const {
    return std::to_string(depth) + "\t" + (negated ? "\\+ " : "") +
           to_string(literal) + "\t" + clause_id;
  }
};

struct Solution {
  Bindings bindings;               // restricted to the query's variables
  std::vector<TraceEvent> proof;   // the successful derivation's steps
};

struct SolveOptions {
  SolveLimits limits;
  bool occurs_check = false;
  // Live sink for every resolution step, including ones later backtracked.
  std::function<void(const TraceEvent&)> trace;
};

class Solver {
public:
  explicit Solver(const KnowledgeBase& kb, SolveOptions options = {})
      : kb_(kb), opt_(std::move(options)) {}

  // Enumerates solutions in derivation order. `on_solution` returning false
  // stops the search. Returns the number of solutions delivered.
  long solve(const std::vector<Literal>& query,
             const std::function<bool(const Solution&)>& on_solution) {
    steps_ = 0;
    path_.clear();
    query_vars_.clear();
    for (const Literal& l : query) l.goal.collect_variables(query_vars_);

    long delivered = 0;
    std::vector<Goal> goals;
    goals.reserve(query.size());
    for (const Literal& l : query) goals.push_back({l, 0});

    run(goals, 0, Bindings{}, [&](const Bindings& b) {
      Solution s;
      s.bindings = b.project(query_vars_);
      s.proof = path_;
      // Instantiate the recorded steps under the full answer bindings so the
      // proof reads in resolved form (p(b), not p(_R1_X)).
      for (TraceEvent& e : s.proof) e.literal = b.apply(e.literal);
      ++delivered;
      if (!on_solution(s)) return false;
      return opt_.limits.max_solutions == 0 || delivered < opt_.limits.max_solutions;
    });
    return delivered;
  }

  std::vector<Solution> all(const std::vector<Literal>& query) {
    std::vector<Solution> out;
    solve(query, [&](const Solution& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }

  bool prove(const std::vector<Literal>& query) {
    bool found = false;
    solve(query, [&](const Solution&) {
      found = true;
      return false;
    });
    return found;
  }

  long steps_used() const { return steps_; }

private:
  struct Goal {
    Literal lit;
    int depth;
  };

  using Emit = std::function<bool(const Bindings&)>;

  // Resolves `goals[index..]` under `b`; solutions go to `emit`. Returns
  // false iff the search was stopped from above (emit returned false).
  bool run(const std::vector<Goal>& goals, std::size_t index, const Bindings& b,
           const Emit& emit) {
    if (index == goals.size()) return emit(b);
    const Goal& g = goals[index];

    if (++steps_ > opt_.limits.max_steps)
      throw ResourceLimitError("resolution step limit exceeded (" +
                               std::to_string(opt_.limits.max_steps) + " steps)");

    Term sel = b.apply(g.lit.goal);
    if (g.lit.negated) return resolve_negation(goals, index, sel, b, emit);

    const std::string& name = sel.name();
    int arity = static_cast<int>(sel.arity());

    if (is_builtin(name, arity)) {
      BuiltinKind kind = builtin_table().at({name, arity});
      bool keep_going;
      push_event(g.depth, sel, false, "builtin");
      if (kind == BuiltinKind::Pure) {
        keep_going = run_pure_builtin(
            sel, b, [&](const Bindings& nb) { return run(goals, index + 1, nb, emit); });
      } else {
        keep_going = resolve_aggregate(goals, index, sel, g.depth, b, emit);
      }
      pop_event();
      return keep_going;
    }
    if (is_builtin_name(name))
      throw EvalError("builtin " + name + " used with wrong arity " +
                      std::to_string(arity));

    const std::vector<Clause>* clauses = kb_.lookup(name, arity);
    if (!clauses) {
      if (kb_.is_declared(name, arity)) return true;  // declared, empty: fails
      throw UnknownPredicateError("unknown predicate " + name + "/" +
                                  std::to_string(arity) + " in goal " +
                                  to_string(sel));
    }
    for (const Clause& c : *clauses) {
      Clause rc = rename_apart(c, fresh_);
      auto u = unify(sel, rc.head, b, UnifyOptions{opt_.occurs_check});
      if (!u) continue;
      push_event(g.depth, u->apply(sel), false, rc.origin.str());
      std::vector<Goal> next;
      next.reserve(rc.body.size() + (goals.size() - index - 1));
      for (const Literal& l : rc.body) next.push_back({l, g.depth + 1});
      next.insert(next.end(), goals.begin() + index + 1, goals.end());
      bool keep_going = run(next, 0, *u, emit);
      pop_event();
      if (!keep_going) return false;
    }
    return true;
  }

  bool resolve_negation(const std::vector<Goal>& goals, std::size_t index,
                        const Term& sel, const Bindings& b, const Emit& emit) {
    const Goal& g = goals[index];
    std::set<std::string> inner = sel.variables();
    if (!inner.empty()) {
      // Any variable shared with the rest of the computation (or with the
      // query's answer terms) makes the negation unsound to evaluate now.
      std::set<std::string> outside;
      for (std::size_t j = index + 1; j < goals.size(); ++j)
        b.apply(goals[j].lit.goal).collect_variables(outside);
      for (const std::string& qv : query_vars_)
        b.apply(Term::variable(qv)).collect_variables(outside);
      for (const std::string& v : inner) {
        if (outside.count(v))
          throw NonGroundNegationError(
              "non-ground negation selected: variable " + v + " in \\+ " +
              to_string(sel) + " is shared with pending goals");
      }
    }

    bool provable = false;
    {
      // Sub-proof runs against the same step budget; its trace events are
      // exploration, not part of any proof, so the path is fenced off.
      std::vector<TraceEvent> saved_path;
      saved_path.swap(path_);
      std::vector<Goal> sub{{Literal{sel, false}, g.depth + 1}};
      run(sub, 0, b, [&](const Bindings&) {
        provable = true;
        return false;
      });
      saved_path.swap(path_);
    }
    if (provable) return true;  // \+ fails; this branch just dies

    push_event(g.depth, sel, true, "naf");
    bool keep_going = run(goals, index + 1, b, emit);
    pop_event();
    return keep_going;
  }

  bool resolve_aggregate(const std::vector<Goal>& goals, std::size_t index,
                         const Term& sel, int depth, const Bindings& b,
                         const Emit& emit) {
    const TermList& args = sel.args();
    const Term& goal_arg = args[sel.name() == "aggregate_sum" ? 1 : 0];
    Term goal = b.apply(goal_arg);
    if (!goal.is_callable())
      throw EvalError(sel.name() + ": goal argument must be callable, got " +
                      to_string(goal));

    // Solutions are keyed by the goal's free variables; one contribution per
    // distinct key, so two derivations of the same fact count once.
    std::set<std::string> key_vars = goal.variables();
    std::set<std::vector<Term>> seen;
    Decimal total(0);
    long count = 0;
    {
      std::vector<TraceEvent> saved_path;
      saved_path.swap(path_);
      std::vector<Goal> sub{{Literal{goal, false}, depth + 1}};
      run(sub, 0, b, [&](const Bindings& nb) {
        std::vector<Term> key;
        key.reserve(key_vars.size());
        for (const std::string& v : key_vars)
          key.push_back(nb.apply(Term::variable(v)));
        if (seen.insert(std::move(key)).second) {
          if (sel.name() == "aggregate_sum")
            total = total + eval_arith(args[0], nb);
          ++count;
        }
        return true;
      });
      saved_path.swap(path_);
    }

    Term result = sel.name() == "aggregate_sum" ? Term::number(total)
                                                : Term::integer(count);
    auto u = unify(args[sel.name() == "aggregate_sum" ? 2 : 1], result, b,
                   UnifyOptions{opt_.occurs_check});
    if (!u) return true;  // result did not match: fail quietly
    return run(goals, index + 1, *u, emit);
  }

  void push_event(int depth, Term literal, bool negated, std::string id) {
    TraceEvent e{depth, std::move(literal), negated, std::move(id)};
    if (opt_.trace) opt_.trace(e);
    path_.push_back(std::move(e));
  }
  void pop_event() { path_.pop_back(); }

  const KnowledgeBase& kb_;
  SolveOptions opt_;
  FreshNames fresh_;
  long steps_ = 0;
  std::vector<TraceEvent> path_;
  std::set<std::string> query_vars_;
};

// Convenience wrappers matching the operation vocabulary.

inline std::vector<Solution> solve(const KnowledgeBase& kb,
                                   const std::vector<Literal>& query,
                                   SolveOptions opt = {}) {
  return Solver(kb, std::move(opt)).all(query);
}

inline bool prove(const KnowledgeBase& kb, const std::vector<Literal>& query,
                  SolveOptions opt = {}) {
  return Solver(kb, std::move(opt)).prove(query);
}

}  // namespace taxlog
