#include "ck/base_algebras.hpp"

#include <vector>

#include "doctest.h"

using namespace ck;

namespace {

const BaseFamily kFams[3] = {BaseFamily::Two, BaseFamily::Three, BaseFamily::Four};

std::vector<BaseElement> all_of(BaseFamily f) {
  std::vector<BaseElement> out;
  const BaseTables& t = base_tables(f);
  for (int i = 0; i < t.size; ++i) out.push_back({f, t.elems[i]});
  return out;
}

}  // namespace

TEST_CASE("frozen single values") {
  CHECK(base_neg({BaseFamily::Four, kMid}).sym == kMid);        // ~a = a
  CHECK(base_pseudo({BaseFamily::Four, kMid}).sym == kB);       // a* = b
  CHECK(base_pseudo({BaseFamily::Four, kB}).sym == kMid);       // b* = a
  CHECK(base_nabla({BaseFamily::Three, kMid}).sym == kOne);     // nabla c = 1
  CHECK(base_triangle({BaseFamily::Four, kMid}).sym == kZero);  // tri a = 0
  CHECK(base_neg({BaseFamily::Three, kMid}).sym == kMid);       // ~c = c
  CHECK(base_pseudo({BaseFamily::Three, kMid}).sym == kZero);   // c* = 0
}

TEST_CASE("frozen nabla and triangle tables") {
  // Two: both are the identity
  for (auto x : all_of(BaseFamily::Two)) {
    CHECK(base_nabla(x) == x);
    CHECK(base_triangle(x) == x);
  }
  // Three: nabla sends c to 1, triangle sends c to 0, both fix 0 and 1
  CHECK(base_nabla({BaseFamily::Three, kZero}).sym == kZero);
  CHECK(base_nabla({BaseFamily::Three, kOne}).sym == kOne);
  CHECK(base_triangle({BaseFamily::Three, kMid}).sym == kZero);
  CHECK(base_triangle({BaseFamily::Three, kOne}).sym == kOne);
  // Four: nabla collapses a, b to 1; triangle collapses them to 0
  CHECK(base_nabla({BaseFamily::Four, kMid}).sym == kOne);
  CHECK(base_nabla({BaseFamily::Four, kB}).sym == kOne);
  CHECK(base_triangle({BaseFamily::Four, kB}).sym == kZero);
  CHECK(base_nabla({BaseFamily::Four, kZero}).sym == kZero);
  CHECK(base_triangle({BaseFamily::Four, kOne}).sym == kOne);
}

TEST_CASE("bounded distributive lattice laws") {
  for (BaseFamily f : kFams) {
    auto elems = all_of(f);
    BaseElement zero{f, kZero}, one{f, kOne};
    for (auto x : elems) {
      CHECK(base_meet(x, x) == x);
      CHECK(base_join(x, x) == x);
      CHECK(base_meet(x, zero) == zero);
      CHECK(base_join(x, one) == one);
      CHECK(base_meet(x, one) == x);
      CHECK(base_join(x, zero) == x);
      for (auto y : elems) {
        CHECK(base_meet(x, y) == base_meet(y, x));
        CHECK(base_join(x, y) == base_join(y, x));
        CHECK(base_join(x, base_meet(x, y)) == x);  // absorption
        CHECK(base_meet(x, base_join(x, y)) == x);
        // order agrees with meet
        CHECK(base_leq(x, y) == (base_meet(x, y) == x));
        for (auto z : elems) {
          CHECK(base_meet(x, base_meet(y, z)) == base_meet(base_meet(x, y), z));
          CHECK(base_meet(x, base_join(y, z)) ==
                base_join(base_meet(x, y), base_meet(x, z)));
          CHECK(base_join(x, base_meet(y, z)) ==
                base_meet(base_join(x, y), base_join(x, z)));
        }
      }
    }
  }
}

TEST_CASE("De Morgan involution") {
  for (BaseFamily f : kFams) {
    auto elems = all_of(f);
    for (auto x : elems) {
      CHECK(base_neg(base_neg(x)) == x);
      for (auto y : elems) {
        CHECK(base_neg(base_meet(x, y)) == base_join(base_neg(x), base_neg(y)));
        CHECK(base_neg(base_join(x, y)) == base_meet(base_neg(x), base_neg(y)));
      }
    }
  }
}

TEST_CASE("pseudocomplement is the largest disjoint element") {
  for (BaseFamily f : kFams) {
    auto elems = all_of(f);
    BaseElement zero{f, kZero};
    for (auto x : elems)
      for (auto y : elems)
        CHECK(base_leq(y, base_pseudo(x)) == (base_meet(x, y) == zero));
  }
}

TEST_CASE("modal inequality x v ~x <= x v x*") {
  for (BaseFamily f : kFams)
    for (auto x : all_of(f))
      CHECK(base_leq(base_join(x, base_neg(x)), base_join(x, base_pseudo(x))));
}

TEST_CASE("derived operator definitions hold pointwise") {
  for (BaseFamily f : kFams) {
    for (auto x : all_of(f)) {
      CHECK(base_nabla(x) == base_neg(base_meet(base_neg(x), base_pseudo(x))));
      CHECK(base_triangle(x) == base_neg(base_nabla(base_neg(x))));
    }
  }
}

TEST_CASE("symbol names round trip") {
  for (BaseFamily f : kFams)
    for (auto x : all_of(f))
      CHECK(symbol_from_name(f, symbol_name(f, x.sym)) == x.sym);
  CHECK(symbol_name(BaseFamily::Three, kMid) == "c");
  CHECK(symbol_name(BaseFamily::Four, kMid) == "a");
  CHECK(symbol_name(BaseFamily::Four, kB) == "b");
  CHECK_THROWS_AS(symbol_from_name(BaseFamily::Two, "a"), UsageError);
  CHECK_THROWS_AS(symbol_from_name(BaseFamily::Three, "b"), UsageError);
}

TEST_CASE("family mismatch is a usage error") {
  BaseElement x{BaseFamily::Two, kOne}, y{BaseFamily::Three, kMid};
  CHECK_THROWS_AS(base_meet(x, y), UsageError);
  CHECK_THROWS_AS(base_leq(y, x), UsageError);
  CHECK_THROWS_AS(base_neg({BaseFamily::Two, kMid}), UsageError);
}
