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

// The builtin predicate vocabulary: exact arithmetic, comparison, calendar
// predicates, and bounded enumeration. Aggregation builtins (which must
// re-enter the solver) are declared here but executed by the solver itself.
//
// Arithmetic is evaluate-only and left-to-right moded: expression arguments
// must be ground when the builtin is selected; "output" arguments may be
// unbound and are unified with the result.

#pragma once

#include "taxlog/calendar.hpp"
#include "taxlog/decimal.hpp"
#include "taxlog/term.hpp"
#include "taxlog/unify.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace taxlog {

// Raised for misuse of a builtin: unbound expression variables, division by
// zero, unknown operators, type mismatches. Distinct from proof failure.
class EvalError : public std::runtime_error {
public:
  explicit EvalError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Arithmetic expression evaluation.
//
// Expression grammar (function-style, since the clause format has no infix
// operators):
//   number
//   plus(E1, E2)    minus(E1, E2)   times(E1, E2)   divide(E1, E2)
//   min_of(E1, E2)  max_of(E1, E2)  percent(P, E)   neg(E)
//   round_dollar(E) ceil_of(E)      floor_of(E)

inline Decimal eval_arith(const Term& expr, const Bindings& b) {
  Term t = b.apply(expr);
  switch (t.kind()) {
    case TermKind::Integer:
    case TermKind::Decimal:
      return t.number();
    case TermKind::Variable:
      throw EvalError("unbound variable in arithmetic expression: " + t.name());
    case TermKind::Atom:
    case TermKind::Date:
      throw EvalError("non-numeric value in arithmetic expression");
    case TermKind::Compound: {
      const std::string& op = t.name();
      const TermList& args = t.args();
      auto arg = [&](std::size_t i) { return eval_arith(args[i], b); };
      if (op == "plus" && args.size() == 2) return arg(0) + arg(1);
      if (op == "minus" && args.size() == 2) return arg(0) - arg(1);
      if (op == "times" && args.size() == 2) return arg(0) * arg(1);
      if (op == "divide" && args.size() == 2) {
        Decimal d = arg(1);
        if (d.is_zero()) throw EvalError("division by zero");
        try {
          return Decimal::divide(arg(0), d);
        } catch (const DecimalError& e) {
          throw EvalError(e.what());
        }
      }
      if (op == "min_of" && args.size() == 2) {
        Decimal a = arg(0), c = arg(1);
        return a < c ? a : c;
      }
      if (op == "max_of" && args.size() == 2) {
        Decimal a = arg(0), c = arg(1);
        return a > c ? a : c;
      }
      // percent(P, E): P percent of E.
      if (op == "percent" && args.size() == 2)
        return Decimal::divide(arg(0) * arg(1), Decimal(100));
      if (op == "neg" && args.size() == 1) return -arg(0);
      if (op == "round_dollar" && args.size() == 1) return arg(0).round_half_away();
      if (op == "ceil_of" && args.size() == 1) return arg(0).ceil();
      if (op == "floor_of" && args.size() == 1) return arg(0).floor();
      throw EvalError("unknown arithmetic operator: " + op + "/" +
                      std::to_string(args.size()));
    }
  }
  throw EvalError("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Builtin registry.

enum class BuiltinKind {
  Pure,       // executed right here
  Aggregate,  // executed by the solver (needs sub-proofs)
};

// All builtin (name, arity) pairs. User clauses may not define any of these.
inline const std::map<std::pair<std::string, int>, BuiltinKind>& builtin_table() {
  static const std::map<std::pair<std::string, int>, BuiltinKind> table = {
      {{"true", 0}, BuiltinKind::Pure},     // the empty conjunction, as an atom
      {{"fail", 0}, BuiltinKind::Pure},
      {{"eval", 2}, BuiltinKind::Pure},
      {{"lt", 2}, BuiltinKind::Pure},
      {{"le", 2}, BuiltinKind::Pure},
      {{"gt", 2}, BuiltinKind::Pure},
      {{"ge", 2}, BuiltinKind::Pure},
      {{"num_eq", 2}, BuiltinKind::Pure},
      {{"num_ne", 2}, BuiltinKind::Pure},
      {{"between", 3}, BuiltinKind::Pure},
      {{"days_between", 3}, BuiltinKind::Pure},
      {{"date_before", 2}, BuiltinKind::Pure},
      {{"date_le", 2}, BuiltinKind::Pure},
      {{"days_in_year", 2}, BuiltinKind::Pure},
      {{"overlap_days", 5}, BuiltinKind::Pure},
      {{"date_parts", 4}, BuiltinKind::Pure},
      {{"week_index", 2}, BuiltinKind::Pure},
      {{"quarter", 2}, BuiltinKind::Pure},
      {{"aggregate_sum", 3}, BuiltinKind::Aggregate},
      {{"aggregate_count", 2}, BuiltinKind::Aggregate},
  };
  return table;
}

inline bool is_builtin(const std::string& name, int arity) {
  return builtin_table().count({name, arity}) != 0;
}

// Shadow checks go by name alone: a user clause may not redefine any builtin
// at any arity (an off-by-one-argument "eval/3" is a typo, not a predicate).
inline bool is_builtin_name(const std::string& name) {
  for (const auto& [key, kind] : builtin_table())
    if (key.first == name) return true;
  return false;
}

namespace detail {

inline CivilDate date_arg(const Term& t, const char* who) {
  if (!t.is_date())
    throw EvalError(std::string(who) + ": expected a date, got " + (t.is_variable()
        ? "unbound variable " + t.name() : std::string("a non-date term")));
  return t.date();
}

inline long int_arg(const Term& t, const char* who) {
  if (!t.is_number() || !t.number().is_integer())
    throw EvalError(std::string(who) + ": expected an integer");
  return static_cast<long>(t.number().integer_value());
}

}  // namespace detail

// Executes a pure builtin. `goal` must already have the current bindings
// applied. Each solution is reported by extending `b` and calling `emit`;
// `emit` returning false stops enumeration early. Returns false when the
// caller should stop (propagated from emit).
inline bool run_pure_builtin(const Term& goal, const Bindings& b,
                             const std::function<bool(const Bindings&)>& emit) {
  const std::string& name = goal.name();
  const TermList no_args;
  const TermList& args = goal.is_compound() ? goal.args() : no_args;

  auto unify_out = [&](const Term& slot, const Term& value) -> bool {
    auto r = unify(slot, value, b);
    if (!r) return true;  // mismatch: fail quietly, continue caller's search
    return emit(*r);
  };

  if (name == "true") return emit(b);
  if (name == "fail") return true;

  if (name == "eval")
    return unify_out(args[1], Term::number(eval_arith(args[0], b)));

  if (name == "lt" || name == "le" || name == "gt" || name == "ge" ||
      name == "num_eq" || name == "num_ne") {
    Decimal x = eval_arith(args[0], b);
    Decimal y = eval_arith(args[1], b);
    bool ok = name == "lt"       ? x < y
              : name == "le"     ? x <= y
              : name == "gt"     ? x > y
              : name == "ge"     ? x >= y
              : name == "num_eq" ? x == y
                                 : !(x == y);
    return ok ? emit(b) : true;
  }

  if (name == "between") {
    long lo = detail::int_arg(b.apply(args[0]), "between");
    long hi = detail::int_arg(b.apply(args[1]), "between");
    for (long v = lo; v <= hi; ++v)
      if (!unify_out(args[2], Term::integer(v))) return false;
    return true;
  }

  if (name == "days_between") {
    auto d1 = detail::date_arg(b.apply(args[0]), "days_between");
    auto d2 = detail::date_arg(b.apply(args[1]), "days_between");
    return unify_out(args[2], Term::integer(static_cast<long>(
                                  calendar::to_ordinal(d2) - calendar::to_ordinal(d1))));
  }
  if (name == "date_before") {
    auto d1 = detail::date_arg(b.apply(args[0]), "date_before");
    auto d2 = detail::date_arg(b.apply(args[1]), "date_before");
    return d1 < d2 ? emit(b) : true;
  }
  if (name == "date_le") {
    auto d1 = detail::date_arg(b.apply(args[0]), "date_le");
    auto d2 = detail::date_arg(b.apply(args[1]), "date_le");
    return d1 <= d2 ? emit(b) : true;
  }
  if (name == "days_in_year") {
    long y = detail::int_arg(b.apply(args[0]), "days_in_year");
    return unify_out(args[1], Term::integer(calendar::days_in_year(static_cast<int>(y))));
  }
  if (name == "overlap_days") {
    auto s1 = detail::date_arg(b.apply(args[0]), "overlap_days");
    auto e1 = detail::date_arg(b.apply(args[1]), "overlap_days");
    auto s2 = detail::date_arg(b.apply(args[2]), "overlap_days");
    auto e2 = detail::date_arg(b.apply(args[3]), "overlap_days");
    long n = static_cast<long>(calendar::overlap_days(
        calendar::to_ordinal(s1), calendar::to_ordinal(e1),
        calendar::to_ordinal(s2), calendar::to_ordinal(e2)));
    return unify_out(args[4], Term::integer(n));
  }

  if (name == "date_parts") {
    Term date = b.apply(args[0]);
    if (date.is_date()) {
      CivilDate d = date.date();
      auto r = unify(args[1], Term::integer(d.year), b);
      if (r) r = unify(args[2], Term::integer(d.month), *r);
      if (r) r = unify(args[3], Term::integer(d.day), *r);
      return r ? emit(*r) : true;
    }
    if (date.is_variable()) {
      CivilDate d{static_cast<int>(detail::int_arg(b.apply(args[1]), "date_parts")),
                  static_cast<int>(detail::int_arg(b.apply(args[2]), "date_parts")),
                  static_cast<int>(detail::int_arg(b.apply(args[3]), "date_parts"))};
      if (!calendar::valid(d))
        throw EvalError("date_parts: invalid calendar date " + calendar::format_date(d));
      return unify_out(args[0], Term::date(d));
    }
    throw EvalError("date_parts: first argument must be a date or variable");
  }
  if (name == "week_index") {
    auto d = detail::date_arg(b.apply(args[0]), "week_index");
    return unify_out(args[1], Term::integer(calendar::week_of_year(d)));
  }
  if (name == "quarter") {
    auto d = detail::date_arg(b.apply(args[0]), "quarter");
    return unify_out(args[1], Term::integer(calendar::quarter_of(d)));
  }

  throw EvalError("builtin dispatch missed: " + name);
}

}  // namespace taxlog
