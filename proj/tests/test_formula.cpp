#include <cstdint>
#include <string>
#include <vector>

#include "ck/bitset.hpp"
#include "ck/common.hpp"
#include "ck/formula.hpp"
#include "ck/product_algebras.hpp"
#include "ck/rng.hpp"
#include "doctest.h"

namespace {

int idx(const ck::CyclicAlgebra& A, const std::string& s) {
  return A.require_index(A.ops().word_from_str(s));
}

// Random AST over the full node menu; depth-bounded, leaf-heavy at the cutoff.
ck::FormulaPtr gen_ast(ck::SplitMix64& rng, int depth) {
  static const std::vector<std::string> kVars = {"p", "q", "r", "x1", "y_2", "o1", "tt"};
  const std::uint64_t leaf_chance = depth <= 0 ? 100 : 25;
  if (rng.below(100) < leaf_chance) {
    switch (rng.below(6)) {
      case 0: return ck::f_bot();
      case 1: return ck::f_top();
      default: return ck::f_var(kVars[size_t(rng.below(kVars.size()))]);
    }
  }
  switch (rng.below(13)) {
    case 0: return ck::f_and(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
    case 1: return ck::f_or(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
    case 2: return ck::f_neg(gen_ast(rng, depth - 1));
    case 3: return ck::f_star(gen_ast(rng, depth - 1));
    case 4: return ck::f_t(gen_ast(rng, depth - 1));
    case 5: return ck::f_tpow(int(rng.below(10)), gen_ast(rng, depth - 1));
    case 6: return ck::f_nabla(gen_ast(rng, depth - 1));
    case 7: return ck::f_tri(gen_ast(rng, depth - 1));
    case 8: return ck::f_cyc_imp(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
    case 9: return ck::f_arrow(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
    case 10: return ck::f_iff(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
    case 11: return ck::f_circ(gen_ast(rng, depth - 1));
    default: return ck::f_delta(gen_ast(rng, depth - 1), gen_ast(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("parse builds the expected shapes") {
  auto f = ck::parse("p /\\ ~p");
  CHECK(ck::formula_eq(f, ck::f_and(ck::f_var("p"), ck::f_neg(ck::f_var("p")))));

  CHECK(ck::formula_eq(ck::parse("delta(p,q)"), ck::f_delta(ck::f_var("p"), ck::f_var("q"))));
  CHECK(ck::formula_eq(ck::parse("t^3(p)*"), ck::f_star(ck::f_tpow(3, ck::f_var("p")))));

  CHECK(ck::formula_eq(ck::parse("bot \\/ top"), ck::f_or(ck::f_bot(), ck::f_top())));
  CHECK(ck::formula_eq(ck::parse("0 \\/ 1"), ck::f_or(ck::f_bot(), ck::f_top())));

  // Precedence: * > ~ > /\ > \/ > ~> > (-> = <->).
  CHECK(ck::formula_eq(ck::parse("~p*"), ck::f_neg(ck::f_star(ck::f_var("p")))));
  CHECK(ck::formula_eq(ck::parse("(~p)*"), ck::f_star(ck::f_neg(ck::f_var("p")))));
  CHECK(ck::formula_eq(ck::parse("p**"), ck::f_star(ck::f_star(ck::f_var("p")))));
  CHECK(ck::formula_eq(ck::parse("p /\\ q \\/ r"),
                       ck::f_or(ck::f_and(ck::f_var("p"), ck::f_var("q")), ck::f_var("r"))));
  CHECK(ck::formula_eq(ck::parse("p \\/ q ~> r"),
                       ck::f_cyc_imp(ck::f_or(ck::f_var("p"), ck::f_var("q")), ck::f_var("r"))));

  // ~> is right-associative; -> and <-> chain left at the weakest level.
  CHECK(ck::formula_eq(ck::parse("p ~> q ~> r"),
                       ck::f_cyc_imp(ck::f_var("p"), ck::f_cyc_imp(ck::f_var("q"), ck::f_var("r")))));
  CHECK(ck::formula_eq(ck::parse("p <-> q -> r"),
                       ck::f_arrow(ck::f_iff(ck::f_var("p"), ck::f_var("q")), ck::f_var("r"))));
  CHECK(ck::formula_eq(ck::parse("p -> q <-> r"),
                       ck::f_iff(ck::f_arrow(ck::f_var("p"), ck::f_var("q")), ck::f_var("r"))));

  // Reserved-looking identifiers that are ordinary variables.
  CHECK(ck::formula_eq(ck::parse("o1 /\\ tt"), ck::f_and(ck::f_var("o1"), ck::f_var("tt"))));
}

TEST_CASE("parse reports positions") {
  auto expect_error = [](const std::string& text, int line, int col) {
    try {
      ck::parse(text);
      FAIL("no error for: " << text);
    } catch (const ck::ParseError& e) {
      CAPTURE(text);
      CAPTURE(e.what());
      CHECK(e.line == line);
      CHECK(e.col == col);
    }
  };
  expect_error("2", 1, 1);
  expect_error("p q", 1, 3);
  expect_error("delta(p q)", 1, 9);
  expect_error("(p \\/ q", 1, 8);
  expect_error("Foo", 1, 1);
  expect_error("t", 1, 2);
  expect_error("nabla p", 1, 7);
  expect_error("p -> ", 1, 6);
  expect_error("~", 1, 2);
  expect_error("p <- q", 1, 3);
  expect_error("p /", 1, 3);  // error anchored at the token start
  expect_error("t^(p)", 1, 3);
  expect_error("", 1, 1);
  expect_error("p /\\ \n q \\/", 2, 6);
  expect_error("delta(p,q) /\\ delta(p)", 1, 22);

  CHECK_THROWS_AS(ck::parse("bot(p)"), ck::ParseError);   // constant is not a call
  CHECK_THROWS_AS(ck::parse("t^9999999(p)"), ck::ParseError);
}

TEST_CASE("print uses minimal parentheses and round-trips") {
  auto same = [](const std::string& text) { CHECK(ck::print(ck::parse(text)) == text); };
  same("p /\\ ~p");
  same("t^3(p)*");
  same("delta(p,q)");
  same("(p \\/ q) /\\ r");
  same("(p ~> q) ~> r");
  same("p ~> q ~> r");
  same("p <-> (q -> r)");
  same("p <-> q -> r");
  same("(~p)*");
  same("~p*");
  same("o(p) \\/ nabla(q /\\ r)");
  same("tri(p)* /\\ 0");
  same("t(t(p))");

  CHECK(ck::print(ck::parse("p \\/ (q /\\ r)")) == "p \\/ q /\\ r");
  CHECK(ck::print(ck::parse("((p))")) == "p");
  CHECK(ck::print(ck::f_bot()) == "0");
  CHECK(ck::print(ck::f_top()) == "1");
  CHECK(ck::print(ck::f_tpow(7, ck::f_var("p"))) == "t^7(p)");
}

TEST_CASE("round-trip on random ASTs") {
  ck::SplitMix64 rng(0x5eed5eed1234ULL);
  for (int i = 0; i < 10000; ++i) {
    auto f = gen_ast(rng, 8);
    CAPTURE(i);
    auto text = ck::print(f);
    CAPTURE(text);
    REQUIRE(ck::formula_eq(ck::parse(text), f));
  }
}

TEST_CASE("expansion removes sugar with the pinned shapes") {
  const auto p = ck::f_var("p");
  const auto q = ck::f_var("q");

  CHECK(ck::print(ck::expand(ck::parse("nabla(p)"), 3)) == "~(~p /\\ p*)");
  CHECK(ck::print(ck::expand(ck::parse("tri(p)"), 1)) == "~~(~~p /\\ (~p)*)");
  CHECK(ck::print(ck::expand(ck::parse("p ~> q"), 1)) == "~(~~t(p) /\\ (~t(p))*) \\/ q");
  CHECK(ck::print(ck::expand(ck::parse("o(p)"), 1)) ==
        "(~p \\/ p) /\\ (p /\\ ~p)* /\\ t((~p \\/ p) /\\ (p /\\ ~p)*)");

  // delta at k=1 is exactly the biconditional's expansion.
  CHECK(ck::formula_eq(ck::expand(ck::f_delta(p, q), 1), ck::expand(ck::f_iff(p, q), 1)));

  // The circle operator keeps k+1 conjuncts: top node is And with a t-chain.
  auto circ2 = ck::expand(ck::parse("o(p)"), 2);
  CHECK(circ2->kind == ck::NodeKind::kAnd);
  CHECK(circ2->right->kind == ck::NodeKind::kT);
  CHECK(circ2->right->left->kind == ck::NodeKind::kT);

  // t^i reduces modulo k at expansion time only.
  CHECK(ck::formula_eq(ck::expand(ck::parse("t^3(p)"), 2), ck::f_t(p)));
  CHECK(ck::formula_eq(ck::expand(ck::parse("t^4(p)"), 2), p));
  CHECK(ck::formula_eq(ck::expand(ck::parse("t^0(p)"), 5), p));
  CHECK(ck::formula_eq(ck::expand(ck::parse("t^6(p)"), 4), ck::f_t(ck::f_t(p))));
  CHECK(ck::print(ck::parse("t^6(p)")) == "t^6(p)");

  ck::SplitMix64 rng(77);
  for (int i = 0; i < 300; ++i) {
    auto f = gen_ast(rng, 6);
    for (int k = 1; k <= 3; ++k) {
      auto e = ck::expand(f, k);
      CAPTURE(i);
      REQUIRE(ck::is_primitive(e));
      REQUIRE(ck::formula_eq(ck::expand(e, k), e));
    }
  }
}

TEST_CASE("evaluation matches the pinned values") {
  auto T4 = ck::CyclicAlgebra::full(ck::BaseFamily::Four, 1);
  auto T3 = ck::CyclicAlgebra::full(ck::BaseFamily::Three, 1);
  const int a = idx(T4, "a");
  const int b = idx(T4, "b");
  const int c = idx(T3, "c");

  CHECK(ck::evaluate(ck::parse("o(p)"), T4, {{"p", a}}) == T4.zero());
  CHECK(ck::evaluate(ck::parse("delta(p,q)"), T4, {{"p", a}, {"q", b}}) == T4.zero());
  CHECK(ck::evaluate(ck::parse("top"), T4, {}) == T4.one());
  CHECK(ck::evaluate(ck::parse("1"), T3, {}) == T3.one());
  CHECK(ck::evaluate(ck::parse("p ~> p"), T3, {{"p", c}}) == T3.one());
  CHECK(ck::evaluate(ck::parse("nabla(p)"), T3, {{"p", c}}) == T3.one());
  CHECK(ck::evaluate(ck::parse("tri(p)"), T3, {{"p", c}}) == T3.zero());
  CHECK(ck::evaluate(ck::parse("p -> p"), T4, {{"p", a}}) == T4.one());
  CHECK(ck::evaluate(ck::parse("1 -> p"), T4, {{"p", a}}) == T4.zero());

  CHECK_THROWS_WITH_AS(ck::evaluate(ck::parse("p \\/ q"), T3, {{"p", 0}}),
                       "unbound variable 'q'", ck::UsageError);
}

TEST_CASE("evaluation commutes with expansion") {
  const std::vector<std::string> templates = {
      "nabla(p)", "tri(p)", "o(p)", "p ~> q", "p -> q", "p <-> q",
      "delta(p,q)", "t^3(p)", "t^5(q)", "o(p ~> q)",
      "delta(nabla(p), q*)", "tri(delta(p,q)) \\/ o(q)",
  };
  for (int k = 1; k <= 2; ++k) {
    for (auto fam : {ck::BaseFamily::Three, ck::BaseFamily::Four}) {
      auto A = ck::CyclicAlgebra::full(fam, k);
      for (const auto& text : templates) {
        auto f = ck::parse(text);
        auto e = ck::expand(f, k);
        auto vars = ck::variables(f);
        CAPTURE(text);
        CAPTURE(k);
        ck::for_each_valuation(vars, A, ck::kDefaultWorkBudget, [&](const ck::Valuation& v) {
          REQUIRE(ck::evaluate(f, A, v) == ck::evaluate(e, A, v));
        });
      }
    }
  }
}

TEST_CASE("circle operator detects Boolean elements") {
  // o(p) evaluates to 1 exactly on elements x with x /\ ~x = 0.
  auto circ = ck::parse("o(p)");
  for (int k = 1; k <= 3; ++k) {
    for (auto fam : {ck::BaseFamily::Three, ck::BaseFamily::Four}) {
      auto A = ck::CyclicAlgebra::full(fam, k);
      auto boolean = ck::B_set(A);
      for (int e = 0; e < A.size(); ++e) {
        const bool one = ck::evaluate(circ, A, {{"p", e}}) == A.one();
        CAPTURE(k);
        CAPTURE(A.elem_str(e));
        CHECK(one == boolean.get(size_t(e)));
      }
    }
  }
}

TEST_CASE("variables and sizes") {
  auto f = ck::parse("delta(p, q) /\\ x1");
  CHECK(ck::variables(f) == std::vector<std::string>{"p", "q", "x1"});
  CHECK(ck::variables(ck::parse("p /\\ p")) == std::vector<std::string>{"p"});
  CHECK(ck::variables(ck::parse("0")).empty());
  CHECK(ck::dag_size(ck::parse("p /\\ p")) == 3);
  CHECK(ck::dag_size(ck::parse("p")) == 1);
  CHECK(ck::is_primitive(ck::parse("~p* /\\ t(q)")));
  CHECK_FALSE(ck::is_primitive(ck::parse("o(p)")));
}

TEST_CASE("valuation streams are lexicographic and budgeted") {
  auto T3 = ck::CyclicAlgebra::full(ck::BaseFamily::Three, 1);
  auto T42 = ck::CyclicAlgebra::full(ck::BaseFamily::Four, 2);

  int count = 0;
  ck::for_each_valuation({"p"}, T3, ck::kDefaultWorkBudget, [&](const ck::Valuation&) { ++count; });
  CHECK(count == 3);

  count = 0;
  ck::for_each_valuation({"p", "q"}, T42, ck::kDefaultWorkBudget, [&](const ck::Valuation&) { ++count; });
  CHECK(count == 256);

  count = 0;
  ck::for_each_valuation({}, T3, ck::kDefaultWorkBudget, [&](const ck::Valuation& v) {
    ++count;
    CHECK(v.empty());
  });
  CHECK(count == 1);

  std::vector<std::pair<int, int>> first;
  ck::for_each_valuation({"p", "q"}, T3, ck::kDefaultWorkBudget, [&](const ck::Valuation& v) {
    if (first.size() < 5) first.emplace_back(v.at("p"), v.at("q"));
  });
  CHECK(first == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}});

  CHECK(ck::valuation_count(0, 16, ck::kDefaultWorkBudget) == 1);
  CHECK(ck::valuation_count(2, 16, ck::kDefaultWorkBudget) == 256);
  const std::vector<std::string> eight = {"a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8"};
  CHECK_THROWS_AS(ck::for_each_valuation(eight, T42, ck::kDefaultWorkBudget,
                                         [](const ck::Valuation&) {}),
                  ck::ResourceError);
}
