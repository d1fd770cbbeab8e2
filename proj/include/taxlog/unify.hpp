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

// Syntactic unification over triangular substitutions. `unify` extends the
// given bindings to a most general unifier of the two terms, or returns
// nullopt if none exists. The occurs check is optional and off by default,
// matching the usual resolution-engine convention; the clause corpus never
// builds cyclic terms.

#pragma once

#include "taxlog/term.hpp"

#include <optional>

namespace taxlog {

struct UnifyOptions {
  bool occurs_check = false;
};

namespace detail {

// Does `var` occur in `t` under `b`? Only called when occurs_check is on.
inline bool occurs_in(const std::string& var, const Term& t, const Bindings& b) {
  Term w = b.walk(t);
  switch (w.kind()) {
    case TermKind::Variable:
      return w.name() == var;
    case TermKind::Compound:
      for (const Term& a : w.args())
        if (occurs_in(var, a, b)) return true;
      return false;
    default:
      return false;
  }
}

inline bool unify_step(const Term& lhs, const Term& rhs, Bindings& b,
                       const UnifyOptions& opt) {
  Term x = b.walk(lhs);
  Term y = b.walk(rhs);
  if (x.is_variable()) {
    if (y.is_variable() && x.name() == y.name()) return true;
    if (opt.occurs_check && occurs_in(x.name(), y, b)) return false;
    b = b.bind(x.name(), y);
    return true;
  }
  if (y.is_variable()) {
    if (opt.occurs_check && occurs_in(y.name(), x, b)) return false;
    b = b.bind(y.name(), x);
    return true;
  }
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case TermKind::Atom:
      return x.name() == y.name();
    case TermKind::Integer:
    case TermKind::Decimal:
      return x.number() == y.number();
    case TermKind::Date:
      return x.date() == y.date();
    case TermKind::Compound: {
      if (x.name() != y.name() || x.arity() != y.arity()) return false;
      for (std::size_t i = 0; i < x.args().size(); ++i)
        if (!unify_step(x.args()[i], y.args()[i], b, opt)) return false;
      return true;
    }
    default:
      return false;  // unreachable: variables handled above
  }
}

}  // namespace detail

inline std::optional<Bindings> unify(const Term& lhs, const Term& rhs,
                                     const Bindings& start = Bindings{},
                                     const UnifyOptions& opt = UnifyOptions{}) {
  Bindings b = start;
  if (detail::unify_step(lhs, rhs, b, opt)) return b;
  return std::nullopt;
}

}  // namespace taxlog
