#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "ck/bitset.hpp"
#include "ck/product_algebras.hpp"

namespace ck {

// Subsets of a universe are member bitsets over the algebra's element indices.

bool is_filter(const CyclicAlgebra& A, const Bitset& S);
// Proper filter closed under disjunction splitting: x v y in S forces a disjunct in S.
bool is_prime_filter(const CyclicAlgebra& A, const Bitset& S);
// Maximal proper filter.
bool is_ultrafilter(const CyclicAlgebra& A, const Bitset& S);
// phi(P) = A \ ~P. UsageError unless P is a prime filter.
Bitset birula_rasiowa(const CyclicAlgebra& A, const Bitset& P);
// Filter closed under triangle and under t.
bool is_c_filter(const CyclicAlgebra& A, const Bitset& S);

// Partition of the universe; cls[i] is the least index in i's class.
struct Congruence {
  std::vector<int> cls;

  static Congruence identity(int n);
  static Congruence total(int n);
  int size() const { return int(cls.size()); }
  bool related(int i, int j) const { return cls[size_t(i)] == cls[size_t(j)]; }
  int classes() const;
  void normalize();

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.cls < b.cls; }
};

bool is_congruence(const CyclicAlgebra& A, const Congruence& c);
// finer-or-equal: every a-class is inside a b-class
bool congruence_leq(const Congruence& a, const Congruence& b);
Congruence congruence_meet(const Congruence& a, const Congruence& b);
Congruence congruence_join(const CyclicAlgebra& A, const Congruence& a, const Congruence& b);
// Congruence generated by a set of pairs (unary-polynomial propagation).
Congruence principal_congruence(const CyclicAlgebra& A, const std::vector<std::pair<int, int>>& pairs);

// R(F) = {(x,y) : exists f in F with x /\ f = y /\ f}. UsageError unless F is a c-filter.
Congruence congruence_from_filter(const CyclicAlgebra& A, const Bitset& F);

// Every filter of a finite lattice is principal; these enumerate them as
// up-sets of each element, in universe order.
std::vector<Bitset> all_filters(const CyclicAlgebra& A);
std::vector<Bitset> c_filters(const CyclicAlgebra& A);
// Maximal among the proper c-filters.
std::vector<Bitset> maximal_c_filters(const CyclicAlgebra& A);

// All congruences; refused (ResourceError) above kCongruenceCap elements.
inline constexpr int kCongruenceCap = 64;
std::vector<Congruence> congruence_lattice(const CyclicAlgebra& A);

// a ~> b = Join_{i=1..k} nabla(~t^i(a)) v b, on element indices.
int cyc_imp(const CyclicAlgebra& A, int a, int b);

// Cyclic deductive system: contains 1 and is closed under modus ponens for ~>.
bool is_cyclic_deductive(const CyclicAlgebra& A, const Bitset& S);

// Least deductive system containing H: the up-set of
// Meet_{h in H} Meet_{j=1..k} t^j(triangle h).
Bitset deductive_generated(const CyclicAlgebra& A, const Bitset& H);
// D(a) = deductive_generated({a}).
Bitset deductive_of_element(const CyclicAlgebra& A, int a);
// D(D1, a) = {x : a ~> x in D1}; D1 must be a deductive system (UsageError).
Bitset deductive_extend(const CyclicAlgebra& A, const Bitset& D1, int a);

// The three equivalent simplicity tests, evaluated independently:
//   via_congruences : every covering pair generates the total congruence
//   via_meet        : for all a != 1, Meet_{j=1..k} t^j(triangle a) = 0
//   via_kset        : K(A) = {0, 1}
struct SimplicityReport {
  bool simple = false;
  bool via_congruences = false;
  bool via_meet = false;
  bool via_kset = false;
  bool agree = false;
  std::optional<int> witness;  // element violating via_meet, if any
};
SimplicityReport is_simple(const CyclicAlgebra& A);

// The five equivalent maximality tests for a proper deductive system M.
// UsageError if M is the whole universe or not a deductive system.
struct MaximalityReport {
  std::array<bool, 5> conditions{};
  bool agree = false;
};
MaximalityReport maximality_equivalents(const CyclicAlgebra& A, const Bitset& M);

// Period of a maximal c-filter: the least d > 0 with t^d(U) = U for an
// ultrafilter U containing it. UsageError unless N is a maximal c-filter.
int filter_period(const CyclicAlgebra& A, const Bitset& N);

// N = Meet_{i=0..k-1} t^i(U) /\ phi(t^i(U)) for an ultrafilter U over N;
// orbit lists the distinct t^i(U), phi(t^i(U)). UsageError unless N is a
// maximal c-filter.
struct UltraDecomposition {
  Bitset ultrafilter;
  int period = 0;
  std::vector<Bitset> orbit;
};
UltraDecomposition ultrafilter_decomposition(const CyclicAlgebra& A, const Bitset& N);

// Largest congruence compatible with the lattice filter F (F is a union of
// classes). UsageError unless F is a filter.
Congruence leibniz_congruence(const CyclicAlgebra& A, const Bitset& F);
// Intersection of the Leibniz congruences of the given filters.
Congruence tarski_congruence(const CyclicAlgebra& A, const std::vector<Bitset>& filters);

}  // namespace ck
