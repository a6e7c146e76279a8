#include "ck/formula.hpp"

#include <set>
#include <unordered_map>
#include <unordered_set>

namespace ck {

namespace {

FormulaPtr node(NodeKind kind, std::string name, int power, FormulaPtr l,
                FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = kind;
  f->name = std::move(name);
  f->power = power;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

}  // namespace

FormulaPtr f_var(std::string name) { return node(NodeKind::kVar, std::move(name), 0, nullptr, nullptr); }
FormulaPtr f_bot() { return node(NodeKind::kBot, "", 0, nullptr, nullptr); }
FormulaPtr f_top() { return node(NodeKind::kTop, "", 0, nullptr, nullptr); }
FormulaPtr f_and(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kAnd, "", 0, std::move(l), std::move(r)); }
FormulaPtr f_or(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kOr, "", 0, std::move(l), std::move(r)); }
FormulaPtr f_neg(FormulaPtr x) { return node(NodeKind::kNeg, "", 0, std::move(x), nullptr); }
FormulaPtr f_star(FormulaPtr x) { return node(NodeKind::kStar, "", 0, std::move(x), nullptr); }
FormulaPtr f_t(FormulaPtr x) { return node(NodeKind::kT, "", 0, std::move(x), nullptr); }
FormulaPtr f_tpow(int power, FormulaPtr x) { return node(NodeKind::kTPow, "", power, std::move(x), nullptr); }
FormulaPtr f_nabla(FormulaPtr x) { return node(NodeKind::kNabla, "", 0, std::move(x), nullptr); }
FormulaPtr f_tri(FormulaPtr x) { return node(NodeKind::kTri, "", 0, std::move(x), nullptr); }
FormulaPtr f_cyc_imp(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kCycImp, "", 0, std::move(l), std::move(r)); }
FormulaPtr f_arrow(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kArrow, "", 0, std::move(l), std::move(r)); }
FormulaPtr f_iff(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kIff, "", 0, std::move(l), std::move(r)); }
FormulaPtr f_circ(FormulaPtr x) { return node(NodeKind::kCirc, "", 0, std::move(x), nullptr); }
FormulaPtr f_delta(FormulaPtr l, FormulaPtr r) { return node(NodeKind::kDelta, "", 0, std::move(l), std::move(r)); }

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->power != b->power) return false;
  return formula_eq(a->left, b->left) && formula_eq(a->right, b->right);
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  kEnd, kLParen, kRParen, kComma, kStar, kTilde, kAnd, kOr, kCycArrow,
  kArrow, kIff, kCaret, kIdent, kInt,
};

struct Token {
  Tok kind;
  std::string text;
  long value = 0;
  int line = 1;
  int col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= s_.size()) {
      t.kind = Tok::kEnd;
      return t;
    }
    char c = s_[pos_];
    switch (c) {
      case '(': advance(); t.kind = Tok::kLParen; return t;
      case ')': advance(); t.kind = Tok::kRParen; return t;
      case ',': advance(); t.kind = Tok::kComma; return t;
      case '*': advance(); t.kind = Tok::kStar; return t;
      case '^': advance(); t.kind = Tok::kCaret; return t;
      case '~':
        advance();
        if (peek() == '>') { advance(); t.kind = Tok::kCycArrow; return t; }
        t.kind = Tok::kTilde;
        return t;
      case '/':
        advance();
        if (peek() == '\\') { advance(); t.kind = Tok::kAnd; return t; }
        throw ParseError("expected '\\' after '/'", t.line, t.col);
      case '\\':
        advance();
        if (peek() == '/') { advance(); t.kind = Tok::kOr; return t; }
        throw ParseError("expected '/' after '\\'", t.line, t.col);
      case '-':
        advance();
        if (peek() == '>') { advance(); t.kind = Tok::kArrow; return t; }
        throw ParseError("expected '>' after '-'", t.line, t.col);
      case '<':
        advance();
        if (peek() == '-') {
          advance();
          if (peek() == '>') { advance(); t.kind = Tok::kIff; return t; }
        }
        throw ParseError("expected '<->'", t.line, t.col);
      default:
        break;
    }
    if (c >= '0' && c <= '9') {
      std::string digits;
      while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9') {
        digits.push_back(s_[pos_]);
        advance();
      }
      if (digits.size() > 9) throw ParseError("integer literal too long", t.line, t.col);
      t.kind = Tok::kInt;
      t.text = digits;
      t.value = std::stol(digits);
      return t;
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
      std::string word;
      while (pos_ < s_.size() &&
             ((s_[pos_] >= 'a' && s_[pos_] <= 'z') ||
              (s_[pos_] >= 'A' && s_[pos_] <= 'Z') ||
              (s_[pos_] >= '0' && s_[pos_] <= '9') || s_[pos_] == '_')) {
        word.push_back(s_[pos_]);
        advance();
      }
      t.kind = Tok::kIdent;
      t.text = word;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.line, t.col);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  void advance() {
    if (pos_ < s_.size()) {
      if (s_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') advance();
      else break;
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string>& reserved_words() {
  static const std::set<std::string> kWords = {"bot", "top", "t", "nabla", "tri", "o", "delta"};
  return kWords;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) { cur_ = lex_.next(); }

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    if (cur_.kind != Tok::kEnd) throw ParseError("unexpected trailing input", cur_.line, cur_.col);
    return f;
  }

 private:
  void bump() { cur_ = lex_.next(); }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) throw ParseError(std::string("expected ") + what, cur_.line, cur_.col);
    bump();
  }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_cyc();
    while (cur_.kind == Tok::kIff || cur_.kind == Tok::kArrow) {
      bool iff = cur_.kind == Tok::kIff;
      bump();
      FormulaPtr rhs = parse_cyc();
      f = iff ? f_iff(std::move(f), std::move(rhs)) : f_arrow(std::move(f), std::move(rhs));
    }
    return f;
  }

  FormulaPtr parse_cyc() {
    FormulaPtr f = parse_disj();
    if (cur_.kind == Tok::kCycArrow) {
      bump();
      return f_cyc_imp(std::move(f), parse_cyc());
    }
    return f;
  }

  FormulaPtr parse_disj() {
    FormulaPtr f = parse_conj();
    while (cur_.kind == Tok::kOr) {
      bump();
      f = f_or(std::move(f), parse_conj());
    }
    return f;
  }

  FormulaPtr parse_conj() {
    FormulaPtr f = parse_unary();
    while (cur_.kind == Tok::kAnd) {
      bump();
      f = f_and(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    if (cur_.kind == Tok::kTilde) {
      bump();
      return f_neg(parse_unary());
    }
    return parse_postfix();
  }

  FormulaPtr parse_postfix() {
    FormulaPtr f = parse_atom();
    while (cur_.kind == Tok::kStar) {
      bump();
      f = f_star(std::move(f));
    }
    return f;
  }

  FormulaPtr parse_paren_arg() {
    expect(Tok::kLParen, "'('");
    FormulaPtr f = parse_iff();
    expect(Tok::kRParen, "')'");
    return f;
  }

  FormulaPtr parse_atom() {
    Token t = cur_;
    switch (t.kind) {
      case Tok::kInt:
        bump();
        if (t.value == 0) return f_bot();
        if (t.value == 1) return f_top();
        throw ParseError("unexpected integer literal (only 0 and 1 denote constants)", t.line, t.col);
      case Tok::kLParen: {
        bump();
        FormulaPtr f = parse_iff();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kIdent:
        break;
      default:
        throw ParseError("expected a formula", t.line, t.col);
    }
    bump();
    const std::string& w = t.text;
    if (w == "bot") return f_bot();
    if (w == "top") return f_top();
    if (w == "t") {
      if (cur_.kind == Tok::kCaret) {
        bump();
        if (cur_.kind != Tok::kInt) throw ParseError("expected an integer after 't^'", cur_.line, cur_.col);
        long power = cur_.value;
        if (power > 1000000) throw ParseError("t-power exponent too large", cur_.line, cur_.col);
        bump();
        return f_tpow(int(power), parse_paren_arg());
      }
      return f_t(parse_paren_arg());
    }
    if (w == "nabla") return f_nabla(parse_paren_arg());
    if (w == "tri") return f_tri(parse_paren_arg());
    if (w == "o") return f_circ(parse_paren_arg());
    if (w == "delta") {
      expect(Tok::kLParen, "'('");
      FormulaPtr a = parse_iff();
      expect(Tok::kComma, "','");
      FormulaPtr b = parse_iff();
      expect(Tok::kRParen, "')'");
      return f_delta(std::move(a), std::move(b));
    }
    if (reserved_words().count(w)) throw ParseError("reserved word '" + w + "' used as a variable", t.line, t.col);
    if (!(w[0] >= 'a' && w[0] <= 'z'))
      throw ParseError("variable names must start with a lowercase letter", t.line, t.col);
    return f_var(w);
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

namespace {

// Binding strength; a node is parenthesized when placed where a strictly
// stronger level is required.
int node_level(NodeKind k) {
  switch (k) {
    case NodeKind::kArrow:
    case NodeKind::kIff: return 0;
    case NodeKind::kCycImp: return 1;
    case NodeKind::kOr: return 2;
    case NodeKind::kAnd: return 3;
    case NodeKind::kNeg: return 4;
    case NodeKind::kStar: return 5;
    default: return 6;
  }
}

void print_rec(const Formula& f, int min_level, std::string& out) {
  const int level = node_level(f.kind);
  const bool wrap = level < min_level;
  if (wrap) out.push_back('(');
  switch (f.kind) {
    case NodeKind::kVar: out += f.name; break;
    case NodeKind::kBot: out.push_back('0'); break;
    case NodeKind::kTop: out.push_back('1'); break;
    case NodeKind::kAnd:
      print_rec(*f.left, 3, out);
      out += " /\\ ";
      print_rec(*f.right, 4, out);
      break;
    case NodeKind::kOr:
      print_rec(*f.left, 2, out);
      out += " \\/ ";
      print_rec(*f.right, 3, out);
      break;
    case NodeKind::kNeg:
      out.push_back('~');
      print_rec(*f.left, 4, out);
      break;
    case NodeKind::kStar:
      print_rec(*f.left, 5, out);
      out.push_back('*');
      break;
    case NodeKind::kT:
      out += "t(";
      print_rec(*f.left, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kTPow:
      out += "t^" + std::to_string(f.power) + "(";
      print_rec(*f.left, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kNabla:
      out += "nabla(";
      print_rec(*f.left, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kTri:
      out += "tri(";
      print_rec(*f.left, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kCirc:
      out += "o(";
      print_rec(*f.left, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kDelta:
      out += "delta(";
      print_rec(*f.left, 0, out);
      out.push_back(',');
      print_rec(*f.right, 0, out);
      out.push_back(')');
      break;
    case NodeKind::kCycImp:
      print_rec(*f.left, 2, out);
      out += " ~> ";
      print_rec(*f.right, 1, out);
      break;
    case NodeKind::kArrow:
      print_rec(*f.left, 0, out);
      out += " -> ";
      print_rec(*f.right, 1, out);
      break;
    case NodeKind::kIff:
      print_rec(*f.left, 0, out);
      out += " <-> ";
      print_rec(*f.right, 1, out);
      break;
  }
  if (wrap) out.push_back(')');
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::string out;
  print_rec(*f, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// DAG traversals
// ---------------------------------------------------------------------------

bool is_primitive(const FormulaPtr& f) {
  std::unordered_set<const Formula*> seen;
  std::vector<const Formula*> stack = {f.get()};
  while (!stack.empty()) {
    const Formula* n = stack.back();
    stack.pop_back();
    if (!n || !seen.insert(n).second) continue;
    switch (n->kind) {
      case NodeKind::kVar:
      case NodeKind::kBot:
      case NodeKind::kTop:
      case NodeKind::kAnd:
      case NodeKind::kOr:
      case NodeKind::kNeg:
      case NodeKind::kStar:
      case NodeKind::kT:
        break;
      default:
        return false;
    }
    stack.push_back(n->left.get());
    stack.push_back(n->right.get());
  }
  return true;
}

std::size_t dag_size(const FormulaPtr& f) {
  std::unordered_set<const Formula*> seen;
  std::vector<const Formula*> stack = {f.get()};
  while (!stack.empty()) {
    const Formula* n = stack.back();
    stack.pop_back();
    if (!n || !seen.insert(n).second) continue;
    stack.push_back(n->left.get());
    stack.push_back(n->right.get());
  }
  return seen.size();
}

std::vector<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> names;
  std::unordered_set<const Formula*> seen;
  std::vector<const Formula*> stack = {f.get()};
  while (!stack.empty()) {
    const Formula* n = stack.back();
    stack.pop_back();
    if (!n || !seen.insert(n).second) continue;
    if (n->kind == NodeKind::kVar) names.insert(n->name);
    stack.push_back(n->left.get());
    stack.push_back(n->right.get());
  }
  return std::vector<std::string>(names.begin(), names.end());
}

// ---------------------------------------------------------------------------
// Expansion
// ---------------------------------------------------------------------------

namespace {

FormulaPtr t_times(FormulaPtr f, int i) {
  while (i-- > 0) f = f_t(std::move(f));
  return f;
}

FormulaPtr nabla_prim(const FormulaPtr& x) { return f_neg(f_and(f_neg(x), f_star(x))); }

// x -> y on the primitive signature, per the defining display.
FormulaPtr arrow_prim(const FormulaPtr& x, const FormulaPtr& y) {
  FormulaPtr j = f_or(x, y);
  FormulaPtr m = f_and(x, y);
  return f_or(f_neg(f_and(f_star(f_neg(j)), j)), f_and(f_star(f_neg(m)), m));
}

FormulaPtr iff_prim(const FormulaPtr& x, const FormulaPtr& y) {
  return f_and(arrow_prim(x, y), arrow_prim(f_neg(y), f_neg(x)));
}

FormulaPtr expand_rec(const FormulaPtr& f, int k,
                      std::unordered_map<const Formula*, FormulaPtr>& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  FormulaPtr out;
  switch (f->kind) {
    case NodeKind::kVar:
    case NodeKind::kBot:
    case NodeKind::kTop:
      out = f;
      break;
    case NodeKind::kAnd:
      out = f_and(expand_rec(f->left, k, memo), expand_rec(f->right, k, memo));
      break;
    case NodeKind::kOr:
      out = f_or(expand_rec(f->left, k, memo), expand_rec(f->right, k, memo));
      break;
    case NodeKind::kNeg:
      out = f_neg(expand_rec(f->left, k, memo));
      break;
    case NodeKind::kStar:
      out = f_star(expand_rec(f->left, k, memo));
      break;
    case NodeKind::kT:
      out = f_t(expand_rec(f->left, k, memo));
      break;
    case NodeKind::kTPow:
      out = t_times(expand_rec(f->left, k, memo), ((f->power % k) + k) % k);
      break;
    case NodeKind::kNabla:
      out = nabla_prim(expand_rec(f->left, k, memo));
      break;
    case NodeKind::kTri: {
      FormulaPtr e = expand_rec(f->left, k, memo);
      out = f_neg(nabla_prim(f_neg(e)));
      break;
    }
    case NodeKind::kCycImp: {
      FormulaPtr a = expand_rec(f->left, k, memo);
      FormulaPtr b = expand_rec(f->right, k, memo);
      FormulaPtr acc;
      for (int i = 1; i <= k; ++i) {
        FormulaPtr term = nabla_prim(f_neg(t_times(a, i)));
        acc = acc ? f_or(std::move(acc), std::move(term)) : std::move(term);
      }
      out = f_or(std::move(acc), std::move(b));
      break;
    }
    case NodeKind::kArrow:
      out = arrow_prim(expand_rec(f->left, k, memo), expand_rec(f->right, k, memo));
      break;
    case NodeKind::kIff:
      out = iff_prim(expand_rec(f->left, k, memo), expand_rec(f->right, k, memo));
      break;
    case NodeKind::kCirc: {
      FormulaPtr e = expand_rec(f->left, k, memo);
      FormulaPtr base = f_and(f_or(f_neg(e), e), f_star(f_and(e, f_neg(e))));
      FormulaPtr acc = base;
      for (int i = 1; i <= k; ++i) acc = f_and(std::move(acc), t_times(base, i));
      out = std::move(acc);
      break;
    }
    case NodeKind::kDelta: {
      FormulaPtr p = expand_rec(f->left, k, memo);
      FormulaPtr q = expand_rec(f->right, k, memo);
      FormulaPtr acc;
      for (int i = 0; i < k; ++i) {
        FormulaPtr term = iff_prim(t_times(p, i), t_times(q, i));
        acc = acc ? f_and(std::move(acc), std::move(term)) : std::move(term);
      }
      out = std::move(acc);
      break;
    }
  }
  memo.emplace(f.get(), out);
  return out;
}

}  // namespace

FormulaPtr expand(const FormulaPtr& f, int k) {
  if (k < 1) throw UsageError("expand: k must be >= 1");
  std::unordered_map<const Formula*, FormulaPtr> memo;
  return expand_rec(f, k, memo);
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

namespace {

int shift_times(const CyclicAlgebra& A, int x, int i) {
  for (; i > 0; --i) x = A.shift(x);
  return x;
}

int arrow_elem(const CyclicAlgebra& A, int x, int y) {
  const int j = A.join(x, y);
  const int m = A.meet(x, y);
  const int lhs = A.neg(A.meet(A.star(A.neg(j)), j));
  const int rhs = A.meet(A.star(A.neg(m)), m);
  return A.join(lhs, rhs);
}

int iff_elem(const CyclicAlgebra& A, int x, int y) {
  return A.meet(arrow_elem(A, x, y), arrow_elem(A, A.neg(y), A.neg(x)));
}

int eval_rec(const FormulaPtr& f, const CyclicAlgebra& A, const Valuation& v,
             std::unordered_map<const Formula*, int>& memo) {
  auto it = memo.find(f.get());
  if (it != memo.end()) return it->second;
  const int k = A.k();
  int out = 0;
  switch (f->kind) {
    case NodeKind::kVar: {
      auto vit = v.find(f->name);
      if (vit == v.end()) throw UsageError("unbound variable '" + f->name + "'");
      out = vit->second;
      if (out < 0 || out >= A.size()) throw UsageError("valuation index out of range for '" + f->name + "'");
      break;
    }
    case NodeKind::kBot: out = A.zero(); break;
    case NodeKind::kTop: out = A.one(); break;
    case NodeKind::kAnd: out = A.meet(eval_rec(f->left, A, v, memo), eval_rec(f->right, A, v, memo)); break;
    case NodeKind::kOr: out = A.join(eval_rec(f->left, A, v, memo), eval_rec(f->right, A, v, memo)); break;
    case NodeKind::kNeg: out = A.neg(eval_rec(f->left, A, v, memo)); break;
    case NodeKind::kStar: out = A.star(eval_rec(f->left, A, v, memo)); break;
    case NodeKind::kT: out = A.shift(eval_rec(f->left, A, v, memo)); break;
    case NodeKind::kTPow:
      out = shift_times(A, eval_rec(f->left, A, v, memo), ((f->power % k) + k) % k);
      break;
    case NodeKind::kNabla: out = A.nabla(eval_rec(f->left, A, v, memo)); break;
    case NodeKind::kTri: out = A.tri(eval_rec(f->left, A, v, memo)); break;
    case NodeKind::kCycImp: {
      const int a = eval_rec(f->left, A, v, memo);
      const int b = eval_rec(f->right, A, v, memo);
      int cur = a;
      int acc = -1;
      for (int i = 1; i <= k; ++i) {
        cur = A.shift(cur);
        const int term = A.nabla(A.neg(cur));
        acc = (acc < 0) ? term : A.join(acc, term);
      }
      out = A.join(acc, b);
      break;
    }
    case NodeKind::kArrow:
      out = arrow_elem(A, eval_rec(f->left, A, v, memo), eval_rec(f->right, A, v, memo));
      break;
    case NodeKind::kIff:
      out = iff_elem(A, eval_rec(f->left, A, v, memo), eval_rec(f->right, A, v, memo));
      break;
    case NodeKind::kCirc: {
      const int x = eval_rec(f->left, A, v, memo);
      const int base = A.meet(A.join(A.neg(x), x), A.star(A.meet(x, A.neg(x))));
      int acc = base;
      int cur = base;
      for (int i = 1; i <= k; ++i) {
        cur = A.shift(cur);
        acc = A.meet(acc, cur);
      }
      out = acc;
      break;
    }
    case NodeKind::kDelta: {
      int p = eval_rec(f->left, A, v, memo);
      int q = eval_rec(f->right, A, v, memo);
      int acc = iff_elem(A, p, q);
      for (int i = 1; i < k; ++i) {
        p = A.shift(p);
        q = A.shift(q);
        acc = A.meet(acc, iff_elem(A, p, q));
      }
      out = acc;
      break;
    }
  }
  memo.emplace(f.get(), out);
  return out;
}

}  // namespace

int evaluate(const FormulaPtr& f, const CyclicAlgebra& A, const Valuation& v) {
  std::unordered_map<const Formula*, int> memo;
  return eval_rec(f, A, v, memo);
}

// ---------------------------------------------------------------------------
// Valuation streams
// ---------------------------------------------------------------------------

std::uint64_t valuation_count(std::size_t nvars, std::uint64_t alg_size,
                              std::uint64_t budget) {
  if (alg_size == 0) throw UsageError("valuation_count: empty algebra");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (total > budget / alg_size)
      throw ResourceError("valuation space " + std::to_string(alg_size) + "^" +
                          std::to_string(nvars) + " exceeds the work budget of " +
                          std::to_string(budget));
    total *= alg_size;
  }
  if (total > budget)
    throw ResourceError("valuation space " + std::to_string(alg_size) + "^" +
                        std::to_string(nvars) + " exceeds the work budget of " +
                        std::to_string(budget));
  return total;
}

void valuation_at(std::uint64_t rank, std::size_t nvars, std::uint64_t alg_size,
                  std::vector<int>& indices) {
  indices.resize(nvars);
  for (std::size_t j = nvars; j-- > 0;) {
    indices[j] = int(rank % alg_size);
    rank /= alg_size;
  }
}

}  // namespace ck
