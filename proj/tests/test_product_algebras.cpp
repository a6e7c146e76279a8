#include "ck/product_algebras.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"

using namespace ck;

namespace {

// Brute-force subuniverse scan for universes of at most 16 elements: every
// subset containing the bounds and closed under all five operations.
std::set<std::vector<int>> naive_subuniverses(const CyclicAlgebra& A) {
  const int n = A.size();
  REQUIRE(n <= 16);
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << A.zero())) || !(mask & (1u << A.one()))) continue;
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      if (!(mask & (1u << i))) continue;
      if (!(mask & (1u << A.neg(i))) || !(mask & (1u << A.star(i))) ||
          !(mask & (1u << A.shift(i)))) {
        closed = false;
        break;
      }
      for (int j = 0; j < n; ++j) {
        if (!(mask & (1u << j))) continue;
        if (!(mask & (1u << A.meet(i, j))) || !(mask & (1u << A.join(i, j)))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    out.insert(members);
  }
  return out;
}

std::set<std::vector<int>> member_lists(const std::vector<CyclicAlgebra>& subs,
                                        const CyclicAlgebra& parent) {
  std::set<std::vector<int>> out;
  for (const auto& s : subs) {
    std::vector<int> members;
    for (int i = 0; i < s.size(); ++i) members.push_back(parent.require_index(s.elem(i)));
    out.insert(members);
  }
  return out;
}

std::vector<std::string> universe_strings(const CyclicAlgebra& A) {
  std::vector<std::string> out;
  for (int i = 0; i < A.size(); ++i) out.push_back(A.elem_str(i));
  return out;
}

}  // namespace

TEST_CASE("universe enumeration order and printing") {
  auto t41 = CyclicAlgebra::full(BaseFamily::Four, 1);
  CHECK(universe_strings(t41) == std::vector<std::string>{"0", "a", "b", "1"});
  auto t32 = CyclicAlgebra::full(BaseFamily::Three, 2);
  CHECK(t32.size() == 9);
  CHECK(t32.elem_str(0) == "(0,0)");
  CHECK(t32.elem_str(1) == "(0,c)");
  CHECK(t32.elem_str(5) == "(c,1)");
  CHECK(t32.elem_str(8) == "(1,1)");
  CHECK(CyclicAlgebra::full(BaseFamily::Four, 2).size() == 16);
}

TEST_CASE("packed words round trip through strings") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  for (int i = 0; i < A.size(); ++i)
    CHECK(A.ops().word_from_str(A.elem_str(i)) == A.elem(i));
  CHECK_THROWS_AS(A.ops().word_from_str("(a)"), UsageError);
  CHECK_THROWS_AS(A.ops().word_from_str("(a,q)"), UsageError);
  auto B = CyclicAlgebra::full(BaseFamily::Three, 1);
  CHECK(B.ops().word_from_str("c") == B.elem(1));
}

TEST_CASE("shift rotates to the right") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 3);
  auto w = A.ops().word_from_str("(a,0,b)");
  CHECK(A.ops().word_str(A.ops().pshift(w)) == "(b,a,0)");
  // t^k is the identity
  std::uint64_t x = w;
  for (int i = 0; i < 3; ++i) x = A.ops().pshift(x);
  CHECK(x == w);
}

TEST_CASE("rank_of_word inverts word_at") {
  auto P = PackedOps({Block{BaseFamily::Four, 2}, Block{BaseFamily::Three, 1}}, 2);
  CHECK(P.word_count() == 48);
  for (std::uint64_t r = 0; r < P.word_count(); ++r)
    CHECK(P.rank_of_word(P.word_at(r)) == r);
}

TEST_CASE("mixed products at k = 1") {
  auto A = CyclicAlgebra::product({Block{BaseFamily::Four, 1}, Block{BaseFamily::Three, 1}}, 1);
  CHECK(A.size() == 12);
  CHECK(A.elem_str(A.require_index(A.ops().word_from_str("(a,c)"))) == "(a,c)");
  for (int i = 0; i < A.size(); ++i) CHECK(A.shift(i) == i);  // t = id at k = 1
}

TEST_CASE("closure of the empty seed set is the bounds only") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  auto sub = generated_subalgebra(A, {});
  CHECK(universe_strings(sub) == std::vector<std::string>{"(0,0)", "(1,1)"});
}

TEST_CASE("closure of the cross pair is the twisted diagonal") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  int ab = A.require_index(A.ops().word_from_str("(a,b)"));
  auto sub = generated_subalgebra(A, {ab});
  CHECK(universe_strings(sub) ==
        std::vector<std::string>{"(0,0)", "(a,b)", "(b,a)", "(1,1)"});
}

TEST_CASE("generated subalgebra is the least subuniverse containing the seeds") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  auto subs = enumerate_subalgebras(A);
  for (int seed = 0; seed < A.size(); ++seed) {
    auto gen = generated_subalgebra(A, {seed});
    auto gen_members = member_lists({gen}, A);
    for (const auto& s : subs) {
      auto members = *member_lists({s}, A).begin();
      bool contains_seed = std::find(members.begin(), members.end(), seed) != members.end();
      if (contains_seed) {
        // every subuniverse containing the seed contains its closure
        for (int m : *gen_members.begin())
          CHECK(std::find(members.begin(), members.end(), m) != members.end());
      }
    }
  }
}

TEST_CASE("subalgebra enumeration matches brute force") {
  for (auto [fam, k] : {std::pair{BaseFamily::Two, 2}, {BaseFamily::Three, 2},
                        {BaseFamily::Four, 2}, {BaseFamily::Four, 1}}) {
    auto A = CyclicAlgebra::full(fam, k);
    CHECK(member_lists(enumerate_subalgebras(A), A) == naive_subuniverses(A));
  }
}

TEST_CASE("frozen subalgebra counts") {
  CHECK(enumerate_subalgebras(CyclicAlgebra::full(BaseFamily::Two, 2)).size() == 2);
  CHECK(enumerate_subalgebras(CyclicAlgebra::full(BaseFamily::Three, 2)).size() == 4);
  CHECK(enumerate_subalgebras(CyclicAlgebra::full(BaseFamily::Four, 1)).size() == 2);
  // diag, {0,1}^2, T_{4,1} diagonal, twisted diagonal, full
  auto subs = enumerate_subalgebras(CyclicAlgebra::full(BaseFamily::Four, 2));
  CHECK(subs.size() == 5);
  std::vector<int> sizes;
  for (const auto& s : subs) sizes.push_back(s.size());
  CHECK(sizes == std::vector<int>{2, 4, 4, 4, 16});
}

TEST_CASE("subalgebra constructor rejects non-closed subsets") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  Bitset m(A.size());
  m.set(A.zero());
  m.set(A.one());
  m.set(A.require_index(A.ops().word_from_str("(a,0)")));
  CHECK_THROWS_AS(CyclicAlgebra::subalgebra(A, m), UsageError);
}

TEST_CASE("isomorphism distinguishes the twisted diagonal") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  auto subs = enumerate_subalgebras(A);  // sizes 2,4,4,4,16
  const auto& t41 = CyclicAlgebra::full(BaseFamily::Four, 1);
  int iso_to_t41 = 0, not_iso = 0;
  for (const auto& s : subs) {
    if (s.size() != 4) continue;
    if (auto m = is_isomorphic(s, t41)) {
      ++iso_to_t41;
      // image really is an isomorphism: spot-check operation preservation
      for (int i = 0; i < s.size(); ++i)
        CHECK((*m)[size_t(s.neg(i))] == t41.neg((*m)[size_t(i)]));
    } else {
      ++not_iso;
    }
  }
  // T_{2,2} and the twisted diagonal are not T_{4,1}; the plain diagonal is
  CHECK(iso_to_t41 == 1);
  CHECK(not_iso == 2);
}

TEST_CASE("isomorphism is found across different parents") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  Bitset diag(A.size());
  for (int i = 0; i < A.size(); ++i)
    if (A.shift(i) == i) diag.set(i);
  auto sub = CyclicAlgebra::subalgebra(A, diag);
  CHECK(is_isomorphic(sub, CyclicAlgebra::full(BaseFamily::Four, 1)).has_value());
  CHECK(!is_isomorphic(sub, CyclicAlgebra::full(BaseFamily::Two, 2)).has_value());
}

TEST_CASE("automorphism counts of the generating algebras") {
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Two, 1)) == 1);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Two, 2)) == 2);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Two, 3)) == 3);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Three, 1)) == 1);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Three, 2)) == 2);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Three, 3)) == 3);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Four, 1)) == 2);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Four, 2)) == 4);
  CHECK(aut_count(CyclicAlgebra::full(BaseFamily::Four, 3)) == 6);
}

TEST_CASE("twisted diagonal has two automorphisms") {
  auto A = CyclicAlgebra::full(BaseFamily::Four, 2);
  int ab = A.require_index(A.ops().word_from_str("(a,b)"));
  auto tw = generated_subalgebra(A, {ab});
  CHECK(aut_count(tw) == 2);
}

TEST_CASE("K and B sets") {
  auto t42 = CyclicAlgebra::full(BaseFamily::Four, 2);
  auto K = K_set(t42);
  CHECK(K.count() == 2);
  CHECK(K.get(t42.zero()));
  CHECK(K.get(t42.one()));
  auto B4 = B_set(CyclicAlgebra::full(BaseFamily::Four, 1));
  CHECK(B4.count() == 2);
  CHECK(B_set(CyclicAlgebra::full(BaseFamily::Three, 1)).count() == 2);
  CHECK(B_set(CyclicAlgebra::full(BaseFamily::Two, 2)).count() == 4);
}

TEST_CASE("periodic subuniverses intersect by gcd") {
  for (BaseFamily f : {BaseFamily::Three, BaseFamily::Four}) {
    auto A = CyclicAlgebra::full(f, 4);
    for (int d1 : {1, 2, 4})
      for (int d2 : {1, 2, 4}) {
        int g = std::gcd(d1, d2);
        CHECK((periodic_members(A, f, d1) & periodic_members(A, f, d2)) ==
              periodic_members(A, f, g));
        CHECK((periodic_members(A, BaseFamily::Two, d1) & periodic_members(A, f, d2)) ==
              periodic_members(A, BaseFamily::Two, g));
      }
  }
  // coprime periods meet in the constants
  auto A6 = CyclicAlgebra::full(BaseFamily::Four, 6);
  auto meet23 = periodic_members(A6, BaseFamily::Four, 2) &
                periodic_members(A6, BaseFamily::Four, 3);
  CHECK(meet23 == periodic_members(A6, BaseFamily::Four, 1));
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(enumerate_subalgebras(CyclicAlgebra::full(BaseFamily::Four, 5)),
                  ResourceError);
  CHECK_THROWS_AS(CyclicAlgebra::full(BaseFamily::Four, 16), ResourceError);
  CHECK_THROWS_AS(CyclicAlgebra::full(BaseFamily::Four, 0), UsageError);
  CHECK_THROWS_AS(PackedOps({Block{BaseFamily::Four, 3}}, 4), UsageError);
}
