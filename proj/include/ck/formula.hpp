#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ck/common.hpp"
#include "ck/product_algebras.hpp"

namespace ck {

// Primitive signature: Var, Bot, Top, And, Or, Neg (~), Star (*), T (shift).
// Everything after kT is sugar; expand() removes it. Nodes are immutable and
// shared, so expansion builds DAGs; all traversals here are DAG-aware.
enum class NodeKind {
  kVar,
  kBot,
  kTop,
  kAnd,
  kOr,
  kNeg,
  kStar,
  kT,
  kTPow,    // t^i(f); i kept verbatim by the parser, reduced mod k by expand()
  kNabla,   // nabla(f) = ~(~f /\ f*)
  kTri,     // tri(f)   = ~nabla(~f)
  kCycImp,  // f ~> g   = join_{i=1..k} nabla(~t^i f) \/ g
  kArrow,   // ->       = ~((~(f\/g))* /\ (f\/g)) \/ ((~(f/\g))* /\ (f/\g))
  kIff,     // <->      = (f -> g) /\ (~g -> ~f)
  kCirc,    // o(f)     = meet_{i=0..k} t^i((~f \/ f) /\ (f /\ ~f)*)
  kDelta,   // delta(f,g) = meet_{i=0..k-1} (t^i f <-> t^i g)
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  NodeKind kind;
  std::string name;        // kVar only
  int power = 0;           // kTPow only
  FormulaPtr left, right;  // unary nodes use left; right null
};

FormulaPtr f_var(std::string name);
FormulaPtr f_bot();
FormulaPtr f_top();
FormulaPtr f_and(FormulaPtr l, FormulaPtr r);
FormulaPtr f_or(FormulaPtr l, FormulaPtr r);
FormulaPtr f_neg(FormulaPtr x);
FormulaPtr f_star(FormulaPtr x);
FormulaPtr f_t(FormulaPtr x);
FormulaPtr f_tpow(int power, FormulaPtr x);
FormulaPtr f_nabla(FormulaPtr x);
FormulaPtr f_tri(FormulaPtr x);
FormulaPtr f_cyc_imp(FormulaPtr l, FormulaPtr r);
FormulaPtr f_arrow(FormulaPtr l, FormulaPtr r);
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r);
FormulaPtr f_circ(FormulaPtr x);
FormulaPtr f_delta(FormulaPtr l, FormulaPtr r);

// Structural equality (pointer-equal subtrees short-circuit).
bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

// Concrete syntax:
//   iff  := cyc (("<->" | "->") cyc)*          left-assoc, weakest
//   cyc  := disj ("~>" disj)*                  right-assoc
//   disj := conj ("\/" conj)*
//   conj := unary ("/\" unary)*
//   unary := "~" unary | postfix
//   postfix := atom ("*")*
//   atom := "0"|"bot" | "1"|"top" | variable | "t(" f ")" | "t^" int "(" f ")"
//         | "nabla(" f ")" | "tri(" f ")" | "o(" f ")" | "delta(" f "," g ")"
//         | "(" f ")"
// Variables match [a-z][a-zA-Z0-9_]* and must not be a reserved word
// (bot, top, t, nabla, tri, o, delta).
FormulaPtr parse(const std::string& text);

// Minimal-parenthesis rendering; parse(print(f)) is structurally equal to f.
std::string print(const FormulaPtr& f);

// True when no sugar node occurs anywhere.
bool is_primitive(const FormulaPtr& f);

// Number of distinct nodes (DAG size).
std::size_t dag_size(const FormulaPtr& f);

// Removes all sugar for period k. t^i reduces mod k; the circle operator keeps
// the full i = 0..k conjunct list even though the i = k term repeats i = 0.
FormulaPtr expand(const FormulaPtr& f, int k);

// Variables in sorted order, deduplicated.
std::vector<std::string> variables(const FormulaPtr& f);

// Valuations map variable names to universe indices of A.
using Valuation = std::map<std::string, int>;

// Homomorphic evaluation; sugar is computed by direct table shortcuts, which
// agree with evaluating the expansion. Throws UsageError on unbound variables.
int evaluate(const FormulaPtr& f, const CyclicAlgebra& A, const Valuation& v);

inline constexpr std::uint64_t kDefaultWorkBudget = std::uint64_t(1) << 28;

// |A|^nvars, or ResourceError when it would exceed the budget.
std::uint64_t valuation_count(std::size_t nvars, std::uint64_t alg_size,
                              std::uint64_t budget);

// Writes the valuation with the given rank into indices (sized to nvars).
// Rank runs lexicographically: the first variable is the most significant
// digit and each digit runs through universe indices 0..|A|-1.
void valuation_at(std::uint64_t rank, std::size_t nvars, std::uint64_t alg_size,
                  std::vector<int>& indices);

// Visits every valuation of vars into A in rank order. fn(const Valuation&).
template <typename F>
void for_each_valuation(const std::vector<std::string>& vars,
                        const CyclicAlgebra& A, std::uint64_t budget, F&& fn) {
  const std::uint64_t total =
      valuation_count(vars.size(), std::uint64_t(A.size()), budget);
  Valuation v;
  for (const auto& name : vars) v[name] = 0;
  std::vector<int> digits;
  digits.resize(vars.size());
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    valuation_at(rank, vars.size(), std::uint64_t(A.size()), digits);
    for (std::size_t j = 0; j < vars.size(); ++j) v[vars[j]] = digits[j];
    fn(static_cast<const Valuation&>(v));
  }
}

}  // namespace ck
