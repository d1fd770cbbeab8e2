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

// Property suite for the inference engine: randomized stratified programs
// are evaluated twice — by the solver and by brute-force fixpoint over the
// Herbrand base — and every ground query must agree. Negation-as-failure
// coherence and clause-order insensitivity ride along on the same programs.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "taxlog/solver.hpp"

using namespace taxlog;

namespace {

struct Pred {
  std::string name;
  int level;
  int arity;
};

struct GeneratedProgram {
  std::vector<std::string> consts;
  std::vector<Pred> preds;
  std::vector<std::string> clause_lines;  // without declarations

  std::string text(bool shuffled, std::mt19937& rng) const {
    std::vector<std::string> lines = clause_lines;
    if (shuffled) std::shuffle(lines.begin(), lines.end(), rng);
    std::ostringstream out;
    for (const Pred& p : preds)
      out << "declare(" << p.name << ", " << p.arity << ").\n";
    for (const std::string& l : lines) out << l << "\n";
    return out.str();
  }
};

GeneratedProgram generate(std::mt19937& rng) {
  GeneratedProgram g;
  std::size_t nconst = 2 + rng() % 3;  // 2..4 constants
  for (std::size_t i = 0; i < nconst; ++i)
    g.consts.push_back(std::string(1, static_cast<char>('a' + i)));
  for (int level = 0; level < 4; ++level)
    g.preds.push_back({"p" + std::to_string(level), level,
                       static_cast<int>(1 + rng() % 2)});

  auto rand_const = [&]() -> std::string {
    return g.consts[rng() % g.consts.size()];
  };
  auto atom_str = [](const Pred& p, const std::vector<std::string>& args) {
    std::string s = p.name + "(";
    for (std::size_t i = 0; i < args.size(); ++i)
      s += (i ? ", " : "") + args[i];
    return s + ")";
  };

  // Ground facts (any level), up to 6.
  std::size_t nfacts = rng() % 7;
  for (std::size_t i = 0; i < nfacts; ++i) {
    const Pred& p = g.preds[rng() % g.preds.size()];
    std::vector<std::string> args;
    for (int a = 0; a < p.arity; ++a) args.push_back(rand_const());
    g.clause_lines.push_back(atom_str(p, args) + ".");
  }

  // Hierarchical rules: a head at level L draws its body only from levels
  // strictly below, so resolution always terminates and negation is
  // stratified by construction.
  std::size_t nrules = 1 + rng() % 4;
  const char* vars[] = {"X", "Y"};
  for (std::size_t i = 0; i < nrules; ++i) {
    const Pred& head = g.preds[1 + rng() % 3];
    std::vector<std::string> head_args;
    for (int a = 0; a < head.arity; ++a) {
      switch (rng() % 3) {
        case 0: head_args.push_back(vars[0]); break;
        case 1: head_args.push_back(vars[1]); break;
        default: head_args.push_back(rand_const());
      }
    }

    auto lower_pred = [&]() -> const Pred& {
      return g.preds[rng() % head.level];
    };

    std::vector<std::string> body;
    std::set<std::string> bound;
    std::size_t npos = 1 + rng() % 2;
    for (std::size_t b = 0; b < npos; ++b) {
      const Pred& bp = lower_pred();
      std::vector<std::string> args;
      for (int a = 0; a < bp.arity; ++a) {
        if (rng() % 2) {
          const char* v = vars[rng() % 2];
          args.push_back(v);
          bound.insert(v);
        } else {
          args.push_back(rand_const());
        }
      }
      body.push_back(atom_str(bp, args));
    }
    // Range restriction: every head variable must be produced by a positive
    // body literal. Patch with extra literals that bind the leftovers.
    for (const std::string& hv : head_args) {
      if ((hv == "X" || hv == "Y") && !bound.count(hv)) {
        const Pred& bp = lower_pred();
        std::vector<std::string> args(static_cast<std::size_t>(bp.arity), hv);
        body.insert(body.begin(), atom_str(bp, args));
        bound.insert(hv);
      }
    }
    // Optional negation over strictly-lower predicates, bound args only.
    if (rng() % 5 < 2) {
      const Pred& np = lower_pred();
      std::vector<std::string> args;
      for (int a = 0; a < np.arity; ++a) {
        if (!bound.empty() && rng() % 2) {
          auto it = bound.begin();
          std::advance(it, rng() % bound.size());
          args.push_back(*it);
        } else {
          args.push_back(rand_const());
        }
      }
      body.push_back("\\+ " + atom_str(np, args));
    }

    std::string rule = atom_str(head, head_args) + " :- ";
    for (std::size_t b = 0; b < body.size(); ++b)
      rule += (b ? ", " : "") + body[b];
    g.clause_lines.push_back(rule + ".");
  }
  return g;
}

// Brute-force stratified fixpoint over the Herbrand base. Rules are
// hierarchical, so one pass per level in ascending order is exact.
std::set<std::string> brute_force_model(const GeneratedProgram& g,
                                        const std::vector<Clause>& clauses) {
  std::map<std::string, int> level_of;
  for (const Pred& p : g.preds) level_of[p.name] = p.level;

  std::set<std::string> model;
  for (const Clause& c : clauses)
    if (c.is_fact() && c.head.name() != "declare")
      model.insert(to_string(c.head));

  for (int level = 1; level < 4; ++level) {
    for (const Clause& c : clauses) {
      if (c.is_fact() || level_of.at(c.head.name()) != level) continue;
      std::set<std::string> vars = c.head.variables();
      for (const Literal& l : c.body) {
        for (const std::string& v : l.goal.variables()) vars.insert(v);
      }
      std::vector<std::string> var_list(vars.begin(), vars.end());
      std::vector<std::size_t> odo(var_list.size(), 0);
      while (true) {
        Bindings b;
        for (std::size_t i = 0; i < var_list.size(); ++i)
          b = b.bind(var_list[i], Term::atom(g.consts[odo[i]]));
        bool ok = true;
        for (const Literal& l : c.body) {
          bool holds = model.count(to_string(b.apply(l.goal))) != 0;
          if (holds == l.negated) {
            ok = false;
            break;
          }
        }
        if (ok) model.insert(to_string(b.apply(c.head)));
        // Advance the odometer.
        std::size_t i = 0;
        for (; i < odo.size(); ++i) {
          if (++odo[i] < g.consts.size()) break;
          odo[i] = 0;
        }
        if (i == odo.size()) break;
        if (var_list.empty()) break;
      }
    }
  }
  return model;
}

std::vector<Term> herbrand_base(const GeneratedProgram& g) {
  std::vector<Term> atoms;
  for (const Pred& p : g.preds) {
    if (p.arity == 1) {
      for (const auto& c : g.consts)
        atoms.push_back(Term::compound(p.name, {Term::atom(c)}));
    } else {
      for (const auto& c1 : g.consts)
        for (const auto& c2 : g.consts)
          atoms.push_back(Term::compound(p.name, {Term::atom(c1), Term::atom(c2)}));
    }
  }
  return atoms;
}

}  // namespace

TEST_CASE("solver equals brute force on 1200 random stratified programs") {
  std::mt19937 rng(424242);
  long checked_atoms = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    GeneratedProgram g = generate(rng);
    KnowledgeBase kb;
    std::string text = g.text(false, rng);
    CAPTURE(trial, text);
    REQUIRE_NOTHROW(kb.load_text(text, "gen.pl"));
    std::set<std::string> model = brute_force_model(g, kb.clauses());

    // Exhaustive enumeration over duplicated facts can make derivation
    // counts combinatorial, so give these runs far more headroom than the
    // engine's default budget.
    SolveOptions roomy;
    roomy.limits.max_steps = 5'000'000;
    Solver solver(kb, roomy);
    for (const Term& atom : herbrand_base(g)) {
      bool expected = model.count(to_string(atom)) != 0;
      CAPTURE(to_string(atom));
      // Ground truth vs solver.
      REQUIRE(solver.prove({Literal{atom, false}}) == expected);
      // Negation coherence: exactly one of g, \+g is provable.
      REQUIRE(solver.prove({Literal{atom, true}}) == !expected);
      ++checked_atoms;
    }

    // Open queries enumerate exactly the model's rows (as a set).
    for (const Pred& p : g.preds) {
      TermList args;
      args.push_back(Term::variable("X"));
      if (p.arity == 2) args.push_back(Term::variable("Y"));
      Term query = Term::compound(p.name, std::move(args));
      std::set<std::string> got;
      for (const Solution& s : solver.all({Literal{query, false}}))
        got.insert(to_string(s.bindings.apply(query)));
      std::set<std::string> want;
      for (const Term& atom : herbrand_base(g))
        if (atom.name() == p.name && model.count(to_string(atom)))
          want.insert(to_string(atom));
      REQUIRE(got == want);
    }
  }
  CHECK(checked_atoms > 20000);
}

TEST_CASE("prove is insensitive to clause order") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 300; ++trial) {
    GeneratedProgram g = generate(rng);
    KnowledgeBase original, shuffled;
    REQUIRE_NOTHROW(original.load_text(g.text(false, rng), "orig.pl"));
    REQUIRE_NOTHROW(shuffled.load_text(g.text(true, rng), "shuf.pl"));
    SolveOptions roomy;
    roomy.limits.max_steps = 5'000'000;
    Solver a(original, roomy), b(shuffled, roomy);
    for (const Term& atom : herbrand_base(g)) {
      CAPTURE(trial, to_string(atom));
      REQUIRE(a.prove({Literal{atom, false}}) == b.prove({Literal{atom, false}}));
    }
  }
}

TEST_CASE("repeated runs produce identical solution sequences") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    GeneratedProgram g = generate(rng);
    KnowledgeBase kb;
    REQUIRE_NOTHROW(kb.load_text(g.text(false, rng), "det.pl"));
    for (const Pred& p : g.preds) {
      TermList args;
      args.push_back(Term::variable("X"));
      if (p.arity == 2) args.push_back(Term::variable("Y"));
      std::vector<Literal> query{Literal{Term::compound(p.name, std::move(args)), false}};
      SolveOptions roomy;
      roomy.limits.max_steps = 5'000'000;
      auto run1 = Solver(kb, roomy).all(query);
      auto run2 = Solver(kb, roomy).all(query);
      REQUIRE(run1.size() == run2.size());
      for (std::size_t i = 0; i < run1.size(); ++i) {
        REQUIRE(run1[i].bindings == run2[i].bindings);
        REQUIRE(run1[i].proof.size() == run2[i].proof.size());
        for (std::size_t j = 0; j < run1[i].proof.size(); ++j)
          REQUIRE(run1[i].proof[j].str() == run2[i].proof[j].str());
      }
    }
  }
}
