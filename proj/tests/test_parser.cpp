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

#include "taxlog/parser.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace taxlog;

namespace {

bool same_clause(const Clause& a, const Clause& b) {
  if (!(a.head == b.head) || a.body.size() != b.body.size()) return false;
  for (std::size_t i = 0; i < a.body.size(); ++i)
    if (!(a.body[i] == b.body[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("a bare fact parses to a bodiless clause") {
  auto prog = parse_program("marriage_(alice_and_bob).");
  REQUIRE(prog.size() == 1);
  CHECK(prog[0].is_fact());
  CHECK(prog[0].head ==
        Term::compound("marriage_", {Term::atom("alice_and_bob")}));
}

TEST_CASE("the empty program parses to the empty sequence") {
  CHECK(parse_program("").empty());
  CHECK(parse_program("   \n\t  ").empty());
  CHECK(parse_program("% only a comment\n").empty());
}

TEST_CASE("rule with a negated body literal") {
  auto prog = parse_program("a :- b, \\+ c.");
  REQUIRE(prog.size() == 1);
  CHECK(prog[0].head == Term::atom("a"));
  REQUIRE(prog[0].body.size() == 2);
  CHECK(prog[0].body[0].goal == Term::atom("b"));
  CHECK_FALSE(prog[0].body[0].negated);
  CHECK(prog[0].body[1].goal == Term::atom("c"));
  CHECK(prog[0].body[1].negated);
}

TEST_CASE("quoted YYYY-MM-DD strings become date terms") {
  auto prog = parse_program("start_(alice_and_bob, \"1993-01-24\").");
  REQUIRE(prog.size() == 1);
  const Term& head = prog[0].head;
  REQUIRE(head.arity() == 2);
  CHECK(head.args()[1].is_date());
  CHECK(head.args()[1].date() == CivilDate{1993, 1, 24});

  // Other quoted strings are plain atoms.
  auto prog2 = parse_program("p(\"hello world\").");
  CHECK(prog2[0].head.args()[0] == Term::atom("hello world"));

  // Date-shaped but invalid on the calendar: a parse error, not a silent atom.
  CHECK_THROWS_AS(parse_program("p(\"2015-02-29\")."), ParseError);
}

TEST_CASE("numbers: integers, decimals, negatives") {
  auto prog = parse_program("q(33200, -7, 85804.86, -0.5, 0).");
  const auto& args = prog[0].head.args();
  CHECK(args[0] == Term::integer(33200));
  CHECK(args[1] == Term::integer(-7));
  CHECK(args[2] == Term::number(Decimal::parse("85804.86")));
  CHECK(args[3] == Term::number(Decimal::parse("-0.5")));
  CHECK(args[4] == Term::integer(0));
  CHECK(args[2].kind() == TermKind::Decimal);
}

TEST_CASE("a clause-final dot after a number still terminates the clause") {
  auto prog = parse_program("p(3).\nq(3.5).");
  REQUIRE(prog.size() == 2);
  CHECK(prog[0].head.args()[0] == Term::integer(3));
  CHECK(prog[1].head.args()[0] == Term::number(Decimal::parse("3.5")));
}

TEST_CASE("variables start uppercase or with underscore") {
  auto prog = parse_program("p(X, Amount, _Hidden) :- q(X).");
  const auto& args = prog[0].head.args();
  CHECK(args[0] == Term::variable("X"));
  CHECK(args[1] == Term::variable("Amount"));
  CHECK(args[2] == Term::variable("_Hidden"));
}

TEST_CASE("each anonymous variable is distinct") {
  auto prog = parse_program("p(_, _).");
  const auto& args = prog[0].head.args();
  CHECK(args[0].is_variable());
  CHECK(args[1].is_variable());
  CHECK(args[0].name() != args[1].name());
}

TEST_CASE("quoted atoms carry arbitrary characters") {
  auto prog = parse_program("p('hello world', 'it\\'s', 'Alice').");
  const auto& args = prog[0].head.args();
  CHECK(args[0] == Term::atom("hello world"));
  CHECK(args[1] == Term::atom("it's"));
  CHECK(args[2] == Term::atom("Alice"));  // quoting defeats the variable rule
}

TEST_CASE("comments and whitespace are insignificant") {
  auto prog = parse_program(
      "% leading comment\n"
      "s2_a(X)  :-  % trailing comment\n"
      "    joint_return(X) , \n"
      "    \\+  s2_a_2(X)  .\n");
  REQUIRE(prog.size() == 1);
  REQUIRE(prog[0].body.size() == 2);
  CHECK(prog[0].body[1].negated);
}

TEST_CASE("clauses carry their source location") {
  auto prog = parse_program("a.\n\nb :- a.\n", "kb/example.pl");
  REQUIRE(prog.size() == 2);
  CHECK(prog[0].origin.file == "kb/example.pl");
  CHECK(prog[0].origin.line == 1);
  CHECK(prog[1].origin.line == 3);
  CHECK(prog[1].origin.str() == "kb/example.pl:3");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse_program("p(a).\nq(]).\n", "bad.pl");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
    CHECK(std::string(e.what()).find("bad.pl:2:3") != std::string::npos);
  }
}

TEST_CASE("arity-0 compounds are rejected") {
  CHECK_THROWS_AS(parse_program("f()."), ParseError);
}

TEST_CASE("unterminated clauses are rejected") {
  CHECK_THROWS_AS(parse_program("p(a)"), ParseError);
  CHECK_THROWS_AS(parse_program("p(a) :- q(a)"), ParseError);
  CHECK_THROWS_AS(parse_program("p(a"), ParseError);
  CHECK_THROWS_AS(parse_program("'unclosed"), ParseError);
  CHECK_THROWS_AS(parse_program("p(\"unclosed)."), ParseError);
}

TEST_CASE("other malformed inputs are rejected") {
  CHECK_THROWS_AS(parse_program("123."), ParseError);        // head not callable
  CHECK_THROWS_AS(parse_program("p :- 5."), ParseError);     // literal not callable
  CHECK_THROWS_AS(parse_program("p :- q,."), ParseError);    // dangling comma
  CHECK_THROWS_AS(parse_program("p : q."), ParseError);      // lone colon
  CHECK_THROWS_AS(parse_program("p(a,)."), ParseError);      // empty argument
  CHECK_THROWS_AS(parse_program("p \\ q."), ParseError);     // lone backslash
}

TEST_CASE("queries parse as literal sequences") {
  auto q = parse_query("tax(alice, 2017, Amount)");
  REQUIRE(q.size() == 1);
  CHECK(q[0].goal.name() == "tax");
  CHECK(q[0].goal.args()[2] == Term::variable("Amount"));

  auto q2 = parse_query("s151_d(X, 2015), \\+ dead(X).");
  REQUIRE(q2.size() == 2);
  CHECK(q2[1].negated);

  CHECK(parse_query("true").empty());
  CHECK_THROWS_AS(parse_query("p(a). q(b)."), ParseError);
}

TEST_CASE("printing re-parses to a structurally equal clause") {
  const char* samples[] = {
      "marriage_(alice_and_bob).",
      "start_(alice_and_bob, \"1993-01-24\").",
      "a :- b, \\+ c.",
      "tax(Taxp, Year, Amount) :- gross_income_(Taxp, Year, Amount).",
      "p('odd atom!', -3, 12.75, \"2018-02-09\").",
      "s63_c_2(X, Y, Z) :- s63_c_2_a(X, Y, Z), \\+ s63_c_6(X, Y).",
      "p(_, _).",
      "'Quoted head'(x).",
      "deduction(X, 0) :- \\+ itemizer_(X).",
  };
  for (const char* src : samples) {
    CAPTURE(src);
    auto first = parse_program(src);
    REQUIRE(first.size() == 1);
    std::string printed = to_string(first[0]);
    auto again = parse_program(printed);
    REQUIRE(again.size() == 1);
    // Anonymous variables get fresh names per parse, so compare after a
    // canonicalizing rename of both sides.
    FreshNames fa, fb;
    CHECK(same_clause(rename_apart(first[0], fa), rename_apart(again[0], fb)));
    CHECK(to_string(again[0]) == printed);
  }
}

TEST_CASE("printer quotes atoms that need it and not those that do not") {
  CHECK(to_string(Term::atom("alice")) == "alice");
  CHECK(to_string(Term::atom("hello world")) == "'hello world'");
  CHECK(to_string(Term::atom("Alice")) == "'Alice'");
  CHECK(to_string(Term::atom("it's")) == "'it\\'s'");
  CHECK(to_string(Term::integer(-5)) == "-5");
  CHECK(to_string(Term::number(Decimal::parse("3.50"))) == "3.5");
  CHECK(to_string(Term::date({1993, 1, 24})) == "\"1993-01-24\"");
  CHECK(to_string(Term::compound(
            "start_", {Term::atom("alice_and_bob"), Term::date({1993, 1, 24})})) ==
        "start_(alice_and_bob, \"1993-01-24\")");
}

TEST_CASE("literal and query printing") {
  auto q = parse_query("s151_d(X, 2015), \\+ dead(X)");
  CHECK(to_string(q) == "s151_d(X, 2015), \\+ dead(X)");
  CHECK(to_string(std::vector<Literal>{}) == "true");
}
