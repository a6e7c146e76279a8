#include "ck/filters_congruences.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace ck {

namespace {

// generator of a nonempty meet-closed up-set: the meet of its members
int filter_generator(const CyclicAlgebra& A, const Bitset& S) {
  int g = A.one();
  S.for_each([&](int i) { g = A.meet(g, i); });
  return g;
}

Bitset upset(const CyclicAlgebra& A, int e) {
  Bitset out(A.size());
  for (int i = 0; i < A.size(); ++i)
    if (A.leq(e, i)) out.set(i);
  return out;
}

bool proper(const CyclicAlgebra& A, const Bitset& S) { return !S.get(A.zero()); }

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(size_t(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[size_t(x)] != x) {
      p[size_t(x)] = p[size_t(p[size_t(x)])];
      x = p[size_t(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller index as root
    p[size_t(b)] = a;
    return true;
  }
};

Congruence from_union_find(UnionFind& uf) {
  Congruence c;
  c.cls.resize(uf.p.size());
  for (size_t i = 0; i < uf.p.size(); ++i) c.cls[i] = uf.find(int(i));
  c.normalize();
  return c;
}

}  // namespace

bool is_filter(const CyclicAlgebra& A, const Bitset& S) {
  if (S.size() != A.size()) throw UsageError("subset mask does not match the universe");
  if (S.none()) return false;
  bool ok = true;
  S.for_each([&](int x) {
    if (!ok) return;
    for (int y = 0; y < A.size(); ++y) {
      if (A.leq(x, y) && !S.get(y)) {
        ok = false;
        return;
      }
    }
  });
  if (!ok) return false;
  S.for_each([&](int x) {
    if (!ok) return;
    S.for_each([&](int y) {
      if (!S.get(A.meet(x, y))) ok = false;
    });
  });
  return ok;
}

bool is_prime_filter(const CyclicAlgebra& A, const Bitset& S) {
  if (!is_filter(A, S) || !proper(A, S)) return false;
  for (int x = 0; x < A.size(); ++x)
    for (int y = 0; y < A.size(); ++y)
      if (S.get(A.join(x, y)) && !S.get(x) && !S.get(y)) return false;
  return true;
}

bool is_ultrafilter(const CyclicAlgebra& A, const Bitset& S) {
  if (!is_filter(A, S) || !proper(A, S)) return false;
  // maximal proper filter of a finite lattice: generated by an atom
  int g = filter_generator(A, S);
  if (g == A.zero()) return false;
  for (int y = 0; y < A.size(); ++y)
    if (y != A.zero() && y != g && A.leq(y, g)) return false;
  return true;
}

Bitset birula_rasiowa(const CyclicAlgebra& A, const Bitset& P) {
  if (!is_prime_filter(A, P))
    throw UsageError("birula_rasiowa needs a prime filter");
  Bitset out(A.size());
  for (int i = 0; i < A.size(); ++i)
    if (!P.get(A.neg(i))) out.set(i);
  return out;
}

bool is_c_filter(const CyclicAlgebra& A, const Bitset& S) {
  if (!is_filter(A, S)) return false;
  bool ok = true;
  S.for_each([&](int x) {
    if (!S.get(A.tri(x)) || !S.get(A.shift(x))) ok = false;
  });
  return ok;
}

Congruence Congruence::identity(int n) {
  Congruence c;
  c.cls.resize(size_t(n));
  std::iota(c.cls.begin(), c.cls.end(), 0);
  return c;
}

Congruence Congruence::total(int n) {
  Congruence c;
  c.cls.assign(size_t(n), 0);
  return c;
}

int Congruence::classes() const {
  int k = 0;
  for (size_t i = 0; i < cls.size(); ++i)
    if (cls[i] == int(i)) ++k;
  return k;
}

void Congruence::normalize() {
  // make cls[i] the least member of i's class
  std::vector<int> least(cls.size(), -1);
  for (size_t i = 0; i < cls.size(); ++i) {
    int r = cls[i];
    if (least[size_t(r)] == -1) least[size_t(r)] = int(i);
  }
  for (size_t i = 0; i < cls.size(); ++i) cls[i] = least[size_t(cls[i])];
}

bool is_congruence(const CyclicAlgebra& A, const Congruence& c) {
  const int n = A.size();
  if (c.size() != n) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!c.related(i, j)) continue;
      if (!c.related(A.neg(i), A.neg(j)) || !c.related(A.star(i), A.star(j)) ||
          !c.related(A.shift(i), A.shift(j)))
        return false;
      for (int x = 0; x < n; ++x)
        if (!c.related(A.meet(i, x), A.meet(j, x)) ||
            !c.related(A.join(i, x), A.join(j, x)))
          return false;
    }
  return true;
}

bool congruence_leq(const Congruence& a, const Congruence& b) {
  for (size_t i = 0; i < a.cls.size(); ++i)
    if (b.cls[size_t(a.cls[i])] != b.cls[i]) return false;
  return true;
}

Congruence congruence_meet(const Congruence& a, const Congruence& b) {
  const int n = a.size();
  Congruence out = Congruence::identity(n);
  // two elements are related iff related in both; map pair of roots to least index
  std::vector<int> root(size_t(n));
  std::map<std::pair<int, int>, int> seen;
  for (int i = 0; i < n; ++i) {
    auto key = std::pair{a.cls[size_t(i)], b.cls[size_t(i)]};
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, i);
      out.cls[size_t(i)] = i;
    } else {
      out.cls[size_t(i)] = it->second;
    }
  }
  return out;
}

Congruence principal_congruence(const CyclicAlgebra& A,
                                const std::vector<std::pair<int, int>>& pairs) {
  const int n = A.size();
  UnionFind uf(n);
  std::deque<std::pair<int, int>> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    if (!uf.unite(a, b)) continue;
    queue.push_back({A.neg(a), A.neg(b)});
    queue.push_back({A.star(a), A.star(b)});
    queue.push_back({A.shift(a), A.shift(b)});
    for (int c = 0; c < n; ++c) {
      queue.push_back({A.meet(a, c), A.meet(b, c)});
      queue.push_back({A.join(a, c), A.join(b, c)});
    }
  }
  return from_union_find(uf);
}

Congruence congruence_join(const CyclicAlgebra& A, const Congruence& a, const Congruence& b) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < a.size(); ++i) {
    pairs.push_back({i, a.cls[size_t(i)]});
    pairs.push_back({i, b.cls[size_t(i)]});
  }
  return principal_congruence(A, pairs);
}

Congruence congruence_from_filter(const CyclicAlgebra& A, const Bitset& F) {
  if (!is_c_filter(A, F))
    throw UsageError("congruence_from_filter needs a c-filter");
  const int n = A.size();
  UnionFind uf(n);
  auto fs = F.members();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int f : fs)
        if (A.meet(x, f) == A.meet(y, f)) {
          uf.unite(x, y);
          break;
        }
  return from_union_find(uf);
}

std::vector<Bitset> all_filters(const CyclicAlgebra& A) {
  std::vector<Bitset> out;
  out.reserve(size_t(A.size()));
  for (int e = 0; e < A.size(); ++e) out.push_back(upset(A, e));
  return out;
}

std::vector<Bitset> c_filters(const CyclicAlgebra& A) {
  std::vector<Bitset> out;
  for (const Bitset& f : all_filters(A))
    if (is_c_filter(A, f)) out.push_back(f);
  return out;
}

std::vector<Bitset> maximal_c_filters(const CyclicAlgebra& A) {
  std::vector<Bitset> props;
  for (const Bitset& f : c_filters(A))
    if (proper(A, f)) props.push_back(f);
  std::vector<Bitset> out;
  for (const Bitset& f : props) {
    bool maximal = true;
    for (const Bitset& g : props)
      if (!(g == f) && f.is_subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Congruence> congruence_lattice(const CyclicAlgebra& A) {
  const int n = A.size();
  if (n > kCongruenceCap)
    throw ResourceError("congruence lattice refused for universe of size " +
                        std::to_string(n));
  std::set<Congruence> found;
  found.insert(Congruence::identity(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) found.insert(principal_congruence(A, {{i, j}}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Congruence> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size() && !grew; ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Congruence u = congruence_join(A, cur[i], cur[j]);
        if (found.insert(u).second) {
          grew = true;
          break;
        }
      }
  }
  for (const Congruence& c : found)
    if (!is_congruence(A, c))
      throw InconsistencyError("generated relation is not a congruence");
  return {found.begin(), found.end()};
}

int cyc_imp(const CyclicAlgebra& A, int a, int b) {
  int r = b;
  int x = a;
  for (int i = 1; i <= A.k(); ++i) {
    x = A.shift(x);
    r = A.join(r, A.nabla(A.neg(x)));
  }
  return r;
}

bool is_cyclic_deductive(const CyclicAlgebra& A, const Bitset& S) {
  if (S.size() != A.size()) throw UsageError("subset mask does not match the universe");
  if (!S.get(A.one())) return false;
  bool ok = true;
  S.for_each([&](int x) {
    if (!ok) return;
    for (int y = 0; y < A.size(); ++y)
      if (S.get(cyc_imp(A, x, y)) && !S.get(y)) {
        ok = false;
        return;
      }
  });
  return ok;
}

Bitset deductive_generated(const CyclicAlgebra& A, const Bitset& H) {
  int e = A.one();
  H.for_each([&](int h) {
    int x = h;
    for (int j = 1; j <= A.k(); ++j) {
      x = A.shift(x);
      e = A.meet(e, A.tri(x));
    }
  });
  return upset(A, e);
}

Bitset deductive_of_element(const CyclicAlgebra& A, int a) {
  Bitset h(A.size());
  h.set(a);
  return deductive_generated(A, h);
}

Bitset deductive_extend(const CyclicAlgebra& A, const Bitset& D1, int a) {
  if (!is_cyclic_deductive(A, D1))
    throw UsageError("deductive_extend needs a deductive system");
  Bitset out(A.size());
  for (int x = 0; x < A.size(); ++x)
    if (D1.get(cyc_imp(A, a, x))) out.set(x);
  return out;
}

SimplicityReport is_simple(const CyclicAlgebra& A) {
  const int n = A.size();
  SimplicityReport r;

  r.via_kset = K_set(A).count() == 2;

  r.via_meet = true;
  for (int a = 0; a < n && r.via_meet; ++a) {
    if (a == A.one()) continue;
    int m = A.one(), x = a;
    for (int j = 1; j <= A.k(); ++j) {
      x = A.shift(x);
      m = A.meet(m, A.tri(x));
    }
    if (m != A.zero()) {
      r.via_meet = false;
      r.witness = a;
    }
  }

  // any nontrivial congruence collapses a covering pair, so it is enough to
  // check that each covering pair generates the total congruence
  r.via_congruences = n >= 2;
  for (int x = 0; x < n && r.via_congruences; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == y || !A.leq(x, y)) continue;
      bool covering = true;
      for (int z = 0; z < n && covering; ++z)
        if (z != x && z != y && A.leq(x, z) && A.leq(z, y)) covering = false;
      if (!covering) continue;
      if (principal_congruence(A, {{x, y}}).classes() != 1) {
        r.via_congruences = false;
        break;
      }
    }

  r.agree = (r.via_congruences == r.via_meet) && (r.via_meet == r.via_kset);
  r.simple = r.via_congruences;
  return r;
}

MaximalityReport maximality_equivalents(const CyclicAlgebra& A, const Bitset& M) {
  const int n = A.size();
  if (M.count() == n)
    throw UsageError("maximality conditions are about proper deductive systems");
  if (!is_cyclic_deductive(A, M))
    throw UsageError("maximality_equivalents needs a deductive system");

  MaximalityReport r;
  auto shifted_tri_meet = [&](int a) {
    int m = A.one(), x = a;
    for (int j = 1; j <= A.k(); ++j) {
      x = A.shift(x);
      m = A.meet(m, A.tri(x));
    }
    return m;
  };
  auto shift_meet = [&](int a) {
    int m = A.one(), x = a;
    for (int j = 1; j <= A.k(); ++j) {
      x = A.shift(x);
      m = A.meet(m, x);
    }
    return m;
  };

  // (1) no proper deductive system strictly extends M
  r.conditions[0] = true;
  for (const Bitset& f : c_filters(A)) {
    if (proper(A, f) && M.is_subset_of(f) && !(f == M)) {
      r.conditions[0] = false;
      break;
    }
  }

  // (2) a outside M admits m in M with Meet_j t^j(tri a) /\ m = 0
  r.conditions[1] = true;
  for (int a = 0; a < n && r.conditions[1]; ++a) {
    if (M.get(a)) continue;
    int base = shifted_tri_meet(a);
    bool found = false;
    M.for_each([&](int m) {
      if (A.meet(base, m) == A.zero()) found = true;
    });
    if (!found) r.conditions[1] = false;
  }

  // (3) Meet_j t^j(tri a) v b in M forces a in M or b in M
  r.conditions[2] = true;
  for (int a = 0; a < n && r.conditions[2]; ++a)
    for (int b = 0; b < n; ++b)
      if (M.get(A.join(shifted_tri_meet(a), b)) && !M.get(a) && !M.get(b)) {
        r.conditions[2] = false;
        break;
      }

  // (4) a outside M puts ~tri(Meet_j t^j(a)) inside M
  r.conditions[3] = true;
  for (int a = 0; a < n; ++a)
    if (!M.get(a) && !M.get(A.neg(A.tri(shift_meet(a))))) {
      r.conditions[3] = false;
      break;
    }

  // (5) a, b outside M have a ~> b and b ~> a in M
  r.conditions[4] = true;
  for (int a = 0; a < n && r.conditions[4]; ++a)
    for (int b = 0; b < n; ++b)
      if (!M.get(a) && !M.get(b) &&
          (!M.get(cyc_imp(A, a, b)) || !M.get(cyc_imp(A, b, a)))) {
        r.conditions[4] = false;
        break;
      }

  r.agree = true;
  for (bool c : r.conditions) r.agree = r.agree && (c == r.conditions[0]);
  return r;
}

namespace {

void require_maximal_c_filter(const CyclicAlgebra& A, const Bitset& N, const char* who) {
  for (const Bitset& f : maximal_c_filters(A))
    if (f == N) return;
  throw UsageError(std::string(who) + " needs a maximal c-filter");
}

// first atom below the generator, in universe order
int atom_below(const CyclicAlgebra& A, int g) {
  for (int a = 0; a < A.size(); ++a) {
    if (a == A.zero() || !A.leq(a, g)) continue;
    bool atom = true;
    for (int y = 0; y < A.size() && atom; ++y)
      if (y != A.zero() && y != a && A.leq(y, a)) atom = false;
    if (atom) return a;
  }
  throw InconsistencyError("no atom below a nonzero element");
}

}  // namespace

int filter_period(const CyclicAlgebra& A, const Bitset& N) {
  require_maximal_c_filter(A, N, "filter_period");
  int a = atom_below(A, filter_generator(A, N));
  int d = 1, x = A.shift(a);
  while (x != a) {
    x = A.shift(x);
    ++d;
  }
  if (A.k() % d != 0)
    throw InconsistencyError("filter period does not divide k");
  return d;
}

UltraDecomposition ultrafilter_decomposition(const CyclicAlgebra& A, const Bitset& N) {
  require_maximal_c_filter(A, N, "ultrafilter_decomposition");
  int a = atom_below(A, filter_generator(A, N));
  UltraDecomposition out;
  out.ultrafilter = upset(A, a);
  out.period = filter_period(A, N);

  Bitset inter(A.size());
  for (int i = 0; i < A.size(); ++i) inter.set(i);
  int x = a;
  std::set<Bitset> orbit;
  for (int i = 0; i < A.k(); ++i) {
    Bitset u = upset(A, x);
    Bitset phi = birula_rasiowa(A, u);
    inter &= u;
    inter &= phi;
    orbit.insert(u);
    orbit.insert(phi);
    x = A.shift(x);
  }
  if (!(inter == N))
    throw InconsistencyError("ultrafilter decomposition does not reproduce the filter");
  out.orbit.assign(orbit.begin(), orbit.end());
  return out;
}

Congruence leibniz_congruence(const CyclicAlgebra& A, const Bitset& F) {
  if (!is_filter(A, F)) throw UsageError("leibniz_congruence needs a lattice filter");
  auto compatible = [&](const Congruence& c) {
    for (int i = 0; i < A.size(); ++i)
      for (int j = 0; j < A.size(); ++j)
        if (c.related(i, j) && F.get(i) && !F.get(j)) return false;
    return true;
  };
  Congruence best = Congruence::identity(A.size());
  for (const Congruence& c : congruence_lattice(A))
    if (compatible(c)) best = congruence_join(A, best, c);
  if (!compatible(best))
    throw InconsistencyError("join of compatible congruences lost compatibility");
  return best;
}

Congruence tarski_congruence(const CyclicAlgebra& A, const std::vector<Bitset>& filters) {
  Congruence out = Congruence::total(A.size());
  for (const Bitset& f : filters) out = congruence_meet(out, leibniz_congruence(A, f));
  return out;
}

}  // namespace ck
