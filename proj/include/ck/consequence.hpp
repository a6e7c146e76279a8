#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ck/bitset.hpp"
#include "ck/formula.hpp"
#include "ck/product_algebras.hpp"

namespace ck {

enum class Logic { Deg, Assert };

std::string logic_name(Logic logic);          // "deg" | "assert"
Logic logic_from_name(const std::string& s);  // UsageError otherwise

struct ConsequenceQuery {
  int k = 1;
  std::vector<FormulaPtr> premises;
  FormulaPtr goal;
  Logic logic = Logic::Deg;
  std::uint64_t budget = kDefaultWorkBudget;  // valuations x program size
  int threads = 1;
};

struct Counterexample {
  // "T3k" / "T4k" for the generator scan, or the tag passed to
  // matrix_consequence.
  std::string algebra;
  // Sorted by variable name; values are element strings.
  std::vector<std::pair<std::string, std::string>> valuation;
  // Degree queries only: the value of the premise meet (1 when no premises),
  // which the goal fails to dominate.
  std::optional<std::string> witness_bound;
};

struct Verdict {
  bool holds = true;
  Logic logic = Logic::Deg;
  int k = 1;
  std::optional<Counterexample> counterexample;
};

// Degree-preserving consequence: meet(premises) <= goal under every valuation
// into the two generator algebras of period k (empty premises: goal is 1
// everywhere). The scan covers T_{3,k} fully before T_{4,k} and reports the
// valuation of least rank, independent of thread count.
Verdict entails_deg(const ConsequenceQuery& q);

// 1-assertional consequence: whenever every premise takes value 1, so does
// the goal. Same scan order and determinism guarantees.
Verdict entails_assert(const ConsequenceQuery& q);

// Dispatch on q.logic.
Verdict decide(const ConsequenceQuery& q);

// Empty-premise query; the two logics agree here and tests assert it.
Verdict is_theorem(int k, const FormulaPtr& goal, Logic logic,
                   std::uint64_t budget = kDefaultWorkBudget, int threads = 1);

// Designated-set preservation over a single finite matrix (A, designated).
// The designated set must be nonempty; tag names the algebra in any
// counterexample.
Verdict matrix_consequence(const CyclicAlgebra& A, const Bitset& designated,
                           const std::vector<FormulaPtr>& premises,
                           const FormulaPtr& goal,
                           std::uint64_t budget = kDefaultWorkBudget,
                           const std::string& tag = "matrix");

// Re-evaluates a counterexample through the plain formula evaluator and
// reports whether it indeed refutes the query. Supports the "T3k"/"T4k" tags.
bool counterexample_refutes(const ConsequenceQuery& q, const Counterexample& cex);

}  // namespace ck
