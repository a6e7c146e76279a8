#include "ck/base_algebras.hpp"

namespace ck {

namespace {

constexpr Sym X = 0xFF;  // marker for codes outside the family

struct Spec {
  int size;
  std::array<Sym, 4> elems;
  std::array<Sym, 4> neg;
  std::array<Sym, 4> star;
  // rank in the order; incomparable middles of Four share a level
  std::array<int, 4> level;
};

// Zero=0, One=1, Mid=2, B=3. Levels: bottom 0, middles 1, top 2.
constexpr Spec kSpecs[3] = {
    // Two: ~ and * both swap 0 and 1
    {2, {0, 1, X, X}, {1, 0, X, X}, {1, 0, X, X}, {0, 2, -1, -1}},
    // Three: 0 < c < 1, ~c = c, c* = 0
    {3, {0, 2, 1, X}, {1, 0, 2, X}, {1, 0, 0, X}, {0, 2, 1, -1}},
    // Four: 0 < a,b < 1 with a,b incomparable, ~a = a, ~b = b, a* = b, b* = a
    {4, {0, 2, 3, 1}, {1, 0, 2, 3}, {1, 0, 3, 2}, {0, 2, 1, 1}},
};

constexpr bool spec_has(const Spec& s, Sym v) {
  for (int i = 0; i < s.size; ++i)
    if (s.elems[i] == v) return true;
  return false;
}

constexpr bool spec_leq(const Spec& s, Sym x, Sym y) {
  if (x == y) return true;
  // distinct middles of Four are incomparable
  if (s.level[x] == s.level[y]) return false;
  return s.level[x] < s.level[y];
}

constexpr BaseTables make_tables(int fi) {
  const Spec& s = kSpecs[fi];
  BaseTables t{};
  t.size = s.size;
  t.elems = s.elems;
  for (int i = 0; i < 4; ++i) {
    t.neg[i] = X;
    t.star[i] = X;
    t.nabla[i] = X;
    t.tri[i] = X;
    for (int j = 0; j < 4; ++j) {
      t.meet[i][j] = X;
      t.join[i][j] = X;
      t.leq[i][j] = false;
    }
  }
  for (int i = 0; i < s.size; ++i) {
    Sym x = s.elems[i];
    t.neg[x] = s.neg[x];
    t.star[x] = s.star[x];
    for (int j = 0; j < s.size; ++j) {
      Sym y = s.elems[j];
      t.leq[x][y] = spec_leq(s, x, y);
      // meet = greatest lower bound: scan elements bottom-up
      Sym m = kZero, jn = kOne;
      for (int u = 0; u < s.size; ++u) {
        Sym z = s.elems[u];
        if (spec_leq(s, z, x) && spec_leq(s, z, y) && spec_leq(s, m, z)) m = z;
        if (spec_leq(s, x, z) && spec_leq(s, y, z) && spec_leq(s, z, jn)) jn = z;
      }
      t.meet[x][y] = m;
      t.join[x][y] = jn;
    }
  }
  for (int i = 0; i < s.size; ++i) {
    Sym x = s.elems[i];
    Sym nx = t.neg[x];
    t.nabla[x] = t.neg[t.meet[nx][t.star[x]]];
  }
  for (int i = 0; i < s.size; ++i) {
    Sym x = s.elems[i];
    t.tri[x] = t.neg[t.nabla[t.neg[x]]];
  }
  return t;
}

constexpr std::array<BaseTables, 3> kTables = {make_tables(0), make_tables(1),
                                               make_tables(2)};

void require_member(BaseFamily f, Sym s, const char* who) {
  if (s > 3 || !spec_has(kSpecs[int(f)], s))
    throw UsageError(std::string(who) + ": code " + std::to_string(int(s)) +
                     " is not an element of " + family_name(f));
}

void require_same(BaseElement x, BaseElement y, const char* who) {
  if (x.family != y.family)
    throw UsageError(std::string(who) + ": arguments from different families (" +
                     family_name(x.family) + " vs " + family_name(y.family) + ")");
  require_member(x.family, x.sym, who);
  require_member(y.family, y.sym, who);
}

}  // namespace

const BaseTables& base_tables(BaseFamily f) { return kTables[int(f)]; }

int family_size(BaseFamily f) { return kTables[int(f)].size; }

const char* family_name(BaseFamily f) {
  switch (f) {
    case BaseFamily::Two: return "two";
    case BaseFamily::Three: return "three";
    case BaseFamily::Four: return "four";
  }
  return "?";
}

BaseFamily family_from_name(const std::string& s) {
  if (s == "two" || s == "2") return BaseFamily::Two;
  if (s == "three" || s == "3") return BaseFamily::Three;
  if (s == "four" || s == "4") return BaseFamily::Four;
  throw UsageError("unknown family '" + s + "' (expected two, three or four)");
}

std::string symbol_name(BaseFamily f, Sym s) {
  require_member(f, s, "symbol_name");
  switch (s) {
    case kZero: return "0";
    case kOne: return "1";
    case kMid: return f == BaseFamily::Three ? "c" : "a";
    default: return "b";
  }
}

Sym symbol_from_name(BaseFamily f, const std::string& token) {
  const BaseTables& t = base_tables(f);
  for (int i = 0; i < t.size; ++i)
    if (symbol_name(f, t.elems[i]) == token) return t.elems[i];
  throw UsageError("'" + token + "' is not an element of " + family_name(f));
}

bool base_valid(BaseElement x) {
  return x.sym <= 3 && spec_has(kSpecs[int(x.family)], x.sym);
}

BaseElement base_meet(BaseElement x, BaseElement y) {
  require_same(x, y, "base_meet");
  return {x.family, kTables[int(x.family)].meet[x.sym][y.sym]};
}

BaseElement base_join(BaseElement x, BaseElement y) {
  require_same(x, y, "base_join");
  return {x.family, kTables[int(x.family)].join[x.sym][y.sym]};
}

BaseElement base_neg(BaseElement x) {
  require_member(x.family, x.sym, "base_neg");
  return {x.family, kTables[int(x.family)].neg[x.sym]};
}

BaseElement base_pseudo(BaseElement x) {
  require_member(x.family, x.sym, "base_pseudo");
  return {x.family, kTables[int(x.family)].star[x.sym]};
}

BaseElement base_nabla(BaseElement x) {
  require_member(x.family, x.sym, "base_nabla");
  return {x.family, kTables[int(x.family)].nabla[x.sym]};
}

BaseElement base_triangle(BaseElement x) {
  require_member(x.family, x.sym, "base_triangle");
  return {x.family, kTables[int(x.family)].tri[x.sym]};
}

bool base_leq(BaseElement x, BaseElement y) {
  require_same(x, y, "base_leq");
  return kTables[int(x.family)].leq[x.sym][y.sym];
}

}  // namespace ck
