#include "ck/consequence.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>
#include <unordered_map>

namespace ck {

std::string logic_name(Logic logic) { return logic == Logic::Deg ? "deg" : "assert"; }

Logic logic_from_name(const std::string& s) {
  if (s == "deg") return Logic::Deg;
  if (s == "assert") return Logic::Assert;
  throw UsageError("unknown logic '" + s + "' (expected deg or assert)");
}

namespace {

// ---------------------------------------------------------------------------
// Compiled programs: primitive formulas flattened with common-subterm sharing.
// ---------------------------------------------------------------------------

enum class Op : std::uint8_t { kVar, kZero, kOne, kMeet, kJoin, kNeg, kStar, kShift };

struct Instr {
  Op op;
  std::int32_t a = -1;
  std::int32_t b = -1;
};

struct Prog {
  std::vector<Instr> code;
  std::vector<std::int32_t> premise_roots;
  std::int32_t goal_root = -1;
  std::vector<std::string> vars;  // sorted; kVar operand a is a slot herein
};

constexpr std::int32_t kMaxInstr = 1 << 26;

class ProgBuilder {
 public:
  explicit ProgBuilder(std::vector<std::string> vars) {
    prog_.vars = std::move(vars);
    for (std::size_t i = 0; i < prog_.vars.size(); ++i)
      slot_.emplace(prog_.vars[i], std::int32_t(i));
  }

  std::int32_t add(const FormulaPtr& f) { return build(f); }

  Prog take() { return std::move(prog_); }

 private:
  std::int32_t emit(Op op, std::int32_t a, std::int32_t b) {
    const std::uint64_t key = (std::uint64_t(op) << 58) |
                              ((std::uint64_t(a) + 1) << 29) |
                              (std::uint64_t(b) + 1);
    auto it = by_shape_.find(key);
    if (it != by_shape_.end()) return it->second;
    if (std::int32_t(prog_.code.size()) >= kMaxInstr)
      throw ResourceError("compiled query exceeds the instruction cap");
    prog_.code.push_back(Instr{op, a, b});
    const std::int32_t idx = std::int32_t(prog_.code.size()) - 1;
    by_shape_.emplace(key, idx);
    return idx;
  }

  std::int32_t build(const FormulaPtr& f) {
    auto it = by_node_.find(f.get());
    if (it != by_node_.end()) return it->second;
    std::int32_t idx;
    switch (f->kind) {
      case NodeKind::kVar: idx = emit(Op::kVar, slot_.at(f->name), -1); break;
      case NodeKind::kBot: idx = emit(Op::kZero, -1, -1); break;
      case NodeKind::kTop: idx = emit(Op::kOne, -1, -1); break;
      case NodeKind::kAnd: idx = emit(Op::kMeet, build(f->left), build(f->right)); break;
      case NodeKind::kOr: idx = emit(Op::kJoin, build(f->left), build(f->right)); break;
      case NodeKind::kNeg: idx = emit(Op::kNeg, build(f->left), -1); break;
      case NodeKind::kStar: idx = emit(Op::kStar, build(f->left), -1); break;
      case NodeKind::kT: idx = emit(Op::kShift, build(f->left), -1); break;
      default:
        throw InconsistencyError("program compiler was handed unexpanded sugar");
    }
    by_node_.emplace(f.get(), idx);
    return idx;
  }

  Prog prog_;
  std::unordered_map<const Formula*, std::int32_t> by_node_;
  std::unordered_map<std::uint64_t, std::int32_t> by_shape_;
  std::unordered_map<std::string, std::int32_t> slot_;
};

// ---------------------------------------------------------------------------
// Algebra views: u16 index tables when they fit, packed words otherwise.
// ---------------------------------------------------------------------------

struct TableView {
  using Val = std::uint16_t;
  const CyclicAlgebra* A;
  const std::uint16_t *mt, *jt, *nt, *st, *sht;
  std::size_t n;
  Val one, zero;

  explicit TableView(const CyclicAlgebra& alg)
      : A(&alg),
        mt(alg.meet_table()),
        jt(alg.join_table()),
        nt(alg.neg_table()),
        st(alg.star_table()),
        sht(alg.shift_table()),
        n(std::size_t(alg.size())),
        one(Val(alg.one())),
        zero(Val(alg.zero())) {}

  std::uint64_t size() const { return n; }
  Val var_value(int digit) const { return Val(digit); }
  Val meet(Val x, Val y) const { return mt[std::size_t(x) * n + y]; }
  Val join(Val x, Val y) const { return jt[std::size_t(x) * n + y]; }
  Val neg(Val x) const { return nt[x]; }
  Val star(Val x) const { return st[x]; }
  Val shift(Val x) const { return sht[x]; }
  bool leq(Val x, Val y) const { return A->leq(int(x), int(y)); }
  std::string str(Val x) const { return A->elem_str(int(x)); }
};

struct PackedView {
  using Val = std::uint64_t;
  const PackedOps* P;
  Val one, zero;

  explicit PackedView(const PackedOps& ops) : P(&ops), one(ops.pone()), zero(ops.pzero()) {}

  std::uint64_t size() const { return P->word_count(); }
  Val var_value(int digit) const { return P->word_at(std::uint64_t(digit)); }
  Val meet(Val x, Val y) const { return P->pmeet(x, y); }
  Val join(Val x, Val y) const { return P->pjoin(x, y); }
  Val neg(Val x) const { return P->pneg(x); }
  Val star(Val x) const { return P->pstar(x); }
  Val shift(Val x) const { return P->pshift(x); }
  bool leq(Val x, Val y) const { return P->pleq(x, y); }
  std::string str(Val x) const { return P->word_str(x); }
};

// Per-valuation memoized evaluation; instructions are computed on demand so a
// failed premise skips everything it does not share with earlier roots.
template <class View>
struct Evaluator {
  using Val = typename View::Val;
  const Prog& prog;
  const View& view;
  std::vector<Val> cache;
  std::vector<std::uint32_t> stamp;
  std::uint32_t cur = 0;
  const std::vector<int>* digits = nullptr;

  Evaluator(const Prog& p, const View& v) : prog(p), view(v) {
    cache.resize(p.code.size());
    stamp.assign(p.code.size(), 0);
  }

  void begin(const std::vector<int>& d) {
    digits = &d;
    if (++cur == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      cur = 1;
    }
  }

  Val get(std::int32_t i) {
    if (stamp[std::size_t(i)] == cur) return cache[std::size_t(i)];
    const Instr& ins = prog.code[std::size_t(i)];
    Val r{};
    switch (ins.op) {
      case Op::kVar: r = view.var_value((*digits)[std::size_t(ins.a)]); break;
      case Op::kZero: r = view.zero; break;
      case Op::kOne: r = view.one; break;
      case Op::kMeet: r = view.meet(get(ins.a), get(ins.b)); break;
      case Op::kJoin: r = view.join(get(ins.a), get(ins.b)); break;
      case Op::kNeg: r = view.neg(get(ins.a)); break;
      case Op::kStar: r = view.star(get(ins.a)); break;
      case Op::kShift: r = view.shift(get(ins.a)); break;
    }
    stamp[std::size_t(i)] = cur;
    cache[std::size_t(i)] = r;
    return r;
  }
};

// Straight-line evaluation of the whole program; profitable when every
// instruction is needed, i.e. for empty-premise (theorem) scans.
template <class View>
struct SweepEval {
  using Val = typename View::Val;
  const Prog& prog;
  const View& view;
  std::vector<Val> regs;

  SweepEval(const Prog& p, const View& v) : prog(p), view(v) { regs.resize(p.code.size()); }

  Val goal(const std::vector<int>& digits) {
    const Instr* code = prog.code.data();
    const std::size_t n = prog.code.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Instr& ins = code[i];
      Val r{};
      switch (ins.op) {
        case Op::kVar: r = view.var_value(digits[std::size_t(ins.a)]); break;
        case Op::kZero: r = view.zero; break;
        case Op::kOne: r = view.one; break;
        case Op::kMeet: r = view.meet(regs[std::size_t(ins.a)], regs[std::size_t(ins.b)]); break;
        case Op::kJoin: r = view.join(regs[std::size_t(ins.a)], regs[std::size_t(ins.b)]); break;
        case Op::kNeg: r = view.neg(regs[std::size_t(ins.a)]); break;
        case Op::kStar: r = view.star(regs[std::size_t(ins.a)]); break;
        case Op::kShift: r = view.shift(regs[std::size_t(ins.a)]); break;
      }
      regs[i] = r;
    }
    return regs[std::size_t(prog.goal_root)];
  }
};

template <class View>
bool valuation_refutes(Evaluator<View>& ev, const Prog& prog, const View& view, bool deg) {
  if (deg) {
    auto acc = view.one;
    for (auto r : prog.premise_roots) {
      acc = view.meet(acc, ev.get(r));
      if (acc == view.zero) return false;  // nothing lies strictly below 0
    }
    return !view.leq(acc, ev.get(prog.goal_root));
  }
  for (auto r : prog.premise_roots)
    if (ev.get(r) != view.one) return false;
  return ev.get(prog.goal_root) != view.one;
}

// Ascending scan over valuation ranks; the least refuting rank is returned
// regardless of the worker count (each worker owns a contiguous chunk and the
// reduction keeps the minimum).
template <class View>
std::optional<std::uint64_t> scan_algebra(const Prog& prog, const View& view,
                                          std::uint64_t total, bool deg, int threads) {
  const std::size_t nvars = prog.vars.size();
  std::uint64_t workers = std::uint64_t(std::max(threads, 1));
  if (total < 1024) workers = 1;
  if (workers > total && total > 0) workers = total;

  // With no premises both logics refute exactly where the goal is not 1.
  const bool sweep = prog.premise_roots.empty();

  if (workers <= 1) {
    Evaluator<View> ev(prog, view);
    SweepEval<View> sw(prog, view);
    std::vector<int> digits;
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      valuation_at(rank, nvars, view.size(), digits);
      if (sweep) {
        if (sw.goal(digits) != view.one) return rank;
        continue;
      }
      ev.begin(digits);
      if (valuation_refutes(ev, prog, view, deg)) return rank;
    }
    return std::nullopt;
  }

  constexpr std::uint64_t kNone = ~std::uint64_t(0);
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) return;
      Evaluator<View> ev(prog, view);
      SweepEval<View> sw(prog, view);
      std::vector<int> digits;
      for (std::uint64_t rank = lo; rank < hi; ++rank) {
        if ((rank & 1023) == 0 && best.load(std::memory_order_relaxed) < rank) return;
        valuation_at(rank, nvars, view.size(), digits);
        bool refuted;
        if (sweep) {
          refuted = sw.goal(digits) != view.one;
        } else {
          ev.begin(digits);
          refuted = valuation_refutes(ev, prog, view, deg);
        }
        if (refuted) {
          std::uint64_t prev = best.load(std::memory_order_relaxed);
          while (rank < prev && !best.compare_exchange_weak(prev, rank)) {
          }
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  const std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

template <class View>
Counterexample make_counterexample(const Prog& prog, const View& view,
                                   std::uint64_t rank, bool deg, const std::string& tag) {
  std::vector<int> digits;
  valuation_at(rank, prog.vars.size(), view.size(), digits);
  Counterexample cex;
  cex.algebra = tag;
  for (std::size_t j = 0; j < prog.vars.size(); ++j)
    cex.valuation.emplace_back(prog.vars[j], view.str(view.var_value(digits[j])));
  if (deg) {
    Evaluator<View> ev(prog, view);
    ev.begin(digits);
    auto acc = view.one;
    for (auto r : prog.premise_roots) acc = view.meet(acc, ev.get(r));
    cex.witness_bound = view.str(acc);
  }
  return cex;
}

Prog compile_query(const ConsequenceQuery& q) {
  if (!q.goal) throw UsageError("consequence query needs a goal");
  if (q.k < 1) throw UsageError("consequence query needs k >= 1");
  std::vector<FormulaPtr> expanded;
  expanded.reserve(q.premises.size() + 1);
  for (const auto& p : q.premises) {
    if (!p) throw UsageError("null premise");
    expanded.push_back(expand(p, q.k));
  }
  expanded.push_back(expand(q.goal, q.k));

  std::set<std::string> names;
  for (const auto& f : expanded)
    for (auto& v : variables(f)) names.insert(v);

  ProgBuilder builder(std::vector<std::string>(names.begin(), names.end()));
  Prog prog;
  std::vector<std::int32_t> roots;
  roots.reserve(expanded.size());
  for (const auto& f : expanded) roots.push_back(builder.add(f));
  prog = builder.take();
  prog.goal_root = roots.back();
  roots.pop_back();
  prog.premise_roots = std::move(roots);
  return prog;
}

std::uint64_t family_word_count(BaseFamily f, int k) {
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) n *= std::uint64_t(family_size(f));
  return n;
}

Verdict decide_impl(const ConsequenceQuery& q, bool deg) {
  Prog prog = compile_query(q);
  Verdict verdict;
  verdict.holds = true;
  verdict.logic = deg ? Logic::Deg : Logic::Assert;
  verdict.k = q.k;

  const std::uint64_t prog_size = std::max<std::uint64_t>(prog.code.size(), 1);
  if (q.budget < prog_size)
    throw ResourceError("work budget " + std::to_string(q.budget) +
                        " is below the program size " + std::to_string(prog_size));
  const std::uint64_t val_budget = q.budget / prog_size;

  struct Gen {
    BaseFamily family;
    const char* tag;
  };
  const Gen gens[2] = {{BaseFamily::Three, "T3k"}, {BaseFamily::Four, "T4k"}};
  for (const Gen& g : gens) {
    const std::uint64_t words = family_word_count(g.family, q.k);
    if (words <= std::uint64_t(CyclicAlgebra::kIndexCap)) {
      CyclicAlgebra A = CyclicAlgebra::full(g.family, q.k);
      TableView view(A);
      const std::uint64_t total = valuation_count(prog.vars.size(), view.size(), val_budget);
      if (auto rank = scan_algebra(prog, view, total, deg, q.threads)) {
        verdict.holds = false;
        verdict.counterexample = make_counterexample(prog, view, *rank, deg, g.tag);
        return verdict;
      }
    } else {
      PackedOps P({Block{g.family, q.k}}, q.k);
      PackedView view(P);
      const std::uint64_t total = valuation_count(prog.vars.size(), view.size(), val_budget);
      if (auto rank = scan_algebra(prog, view, total, deg, q.threads)) {
        verdict.holds = false;
        verdict.counterexample = make_counterexample(prog, view, *rank, deg, g.tag);
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace

Verdict entails_deg(const ConsequenceQuery& q) { return decide_impl(q, true); }

Verdict entails_assert(const ConsequenceQuery& q) { return decide_impl(q, false); }

Verdict decide(const ConsequenceQuery& q) {
  return q.logic == Logic::Deg ? entails_deg(q) : entails_assert(q);
}

Verdict is_theorem(int k, const FormulaPtr& goal, Logic logic, std::uint64_t budget,
                   int threads) {
  ConsequenceQuery q;
  q.k = k;
  q.goal = goal;
  q.logic = logic;
  q.budget = budget;
  q.threads = threads;
  return decide(q);
}

Verdict matrix_consequence(const CyclicAlgebra& A, const Bitset& designated,
                           const std::vector<FormulaPtr>& premises,
                           const FormulaPtr& goal, std::uint64_t budget,
                           const std::string& tag) {
  if (designated.size() != std::size_t(A.size()))
    throw UsageError("designated set does not match the algebra size");
  if (designated.none()) throw UsageError("designated set must be nonempty");
  if (A.size() > CyclicAlgebra::kIndexCap)
    throw ResourceError("matrix consequence needs an index-table algebra");

  ConsequenceQuery q;
  q.k = A.k();
  q.premises = premises;
  q.goal = goal;
  Prog prog = compile_query(q);

  const std::uint64_t prog_size = std::max<std::uint64_t>(prog.code.size(), 1);
  if (budget < prog_size)
    throw ResourceError("work budget " + std::to_string(budget) +
                        " is below the program size " + std::to_string(prog_size));
  TableView view(A);
  const std::uint64_t total =
      valuation_count(prog.vars.size(), view.size(), budget / prog_size);

  Verdict verdict;
  verdict.holds = true;
  verdict.logic = Logic::Assert;
  verdict.k = A.k();

  Evaluator<TableView> ev(prog, view);
  std::vector<int> digits;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    valuation_at(rank, prog.vars.size(), view.size(), digits);
    ev.begin(digits);
    bool premises_designated = true;
    for (auto r : prog.premise_roots) {
      if (!designated.get(std::size_t(ev.get(r)))) {
        premises_designated = false;
        break;
      }
    }
    if (!premises_designated) continue;
    if (!designated.get(std::size_t(ev.get(prog.goal_root)))) {
      verdict.holds = false;
      verdict.counterexample = make_counterexample(prog, view, rank, false, tag);
      return verdict;
    }
  }
  return verdict;
}

bool counterexample_refutes(const ConsequenceQuery& q, const Counterexample& cex) {
  BaseFamily family;
  if (cex.algebra == "T3k") family = BaseFamily::Three;
  else if (cex.algebra == "T4k") family = BaseFamily::Four;
  else throw UsageError("cannot re-evaluate counterexample tag '" + cex.algebra + "'");

  CyclicAlgebra A = CyclicAlgebra::full(family, q.k);
  Valuation v;
  for (const auto& [name, value] : cex.valuation)
    v[name] = A.require_index(A.ops().word_from_str(value));

  if (q.logic == Logic::Deg) {
    int acc = A.one();
    for (const auto& p : q.premises) acc = A.meet(acc, evaluate(p, A, v));
    return !A.leq(acc, evaluate(q.goal, A, v));
  }
  for (const auto& p : q.premises)
    if (evaluate(p, A, v) != A.one()) return false;
  return evaluate(q.goal, A, v) != A.one();
}

}  // namespace ck
