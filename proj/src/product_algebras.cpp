#include "ck/product_algebras.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

namespace ck {

namespace {

inline Sym get2(std::uint64_t w, int c) { return Sym((w >> (2 * c)) & 3u); }
inline void put2(std::uint64_t& w, int c, Sym s) {
  w |= std::uint64_t(s) << (2 * c);
}

// position of a code within its family's bottom..top order
inline int digit_of(BaseFamily f, Sym s) {
  const BaseTables& t = base_tables(f);
  for (int i = 0; i < t.size; ++i)
    if (t.elems[i] == s) return i;
  throw InconsistencyError("corrupt packed word: invalid coordinate code");
}

}  // namespace

PackedOps::PackedOps(std::vector<Block> blocks, int k) : blocks_(std::move(blocks)), k_(k) {
  if (k_ < 1 || k_ > 16) throw UsageError("period k must be between 1 and 16");
  if (blocks_.empty()) throw UsageError("algebra needs at least one block");
  for (const Block& b : blocks_) {
    if (b.width < 1) throw UsageError("block width must be positive");
    if (k_ % b.width != 0)
      throw UsageError("block width " + std::to_string(b.width) +
                       " does not divide the period " + std::to_string(k_));
    for (int i = 0; i < b.width; ++i) coord_family_.push_back(b.family);
    coords_ += b.width;
  }
  if (coords_ > 32) throw UsageError("more than 32 coordinates");
  unsigned __int128 cnt = 1;
  for (int c = 0; c < coords_; ++c) cnt *= unsigned(family_size(coord_family_[size_t(c)]));
  if (cnt > (unsigned __int128)(std::uint64_t(1) << 62))
    throw ResourceError("universe too large to count in 64 bits");
  count_ = std::uint64_t(cnt);
  stride_.assign(size_t(coords_), 1);
  for (int c = coords_ - 2; c >= 0; --c)
    stride_[size_t(c)] = stride_[size_t(c) + 1] *
                         std::uint64_t(family_size(coord_family_[size_t(c) + 1]));
  for (int c = 0; c < coords_; ++c) put2(one_word_, c, kOne);
}

std::uint64_t PackedOps::word_at(std::uint64_t rank) const {
  std::uint64_t w = 0;
  for (int c = 0; c < coords_; ++c) {
    const BaseTables& t = base_tables(coord_family_[size_t(c)]);
    int d = int((rank / stride_[size_t(c)]) % std::uint64_t(t.size));
    put2(w, c, t.elems[size_t(d)]);
  }
  return w;
}

std::uint64_t PackedOps::rank_of_word(std::uint64_t w) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    r += stride_[size_t(c)] *
         std::uint64_t(digit_of(coord_family_[size_t(c)], get2(w, c)));
  return r;
}

std::uint64_t PackedOps::pmeet(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).meet[get2(x, c)][get2(y, c)]);
  return r;
}

std::uint64_t PackedOps::pjoin(std::uint64_t x, std::uint64_t y) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).join[get2(x, c)][get2(y, c)]);
  return r;
}

std::uint64_t PackedOps::pneg(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).neg[get2(x, c)]);
  return r;
}

std::uint64_t PackedOps::pstar(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).star[get2(x, c)]);
  return r;
}

std::uint64_t PackedOps::pshift(std::uint64_t x) const {
  std::uint64_t r = 0;
  int base = 0;
  for (const Block& b : blocks_) {
    for (int i = 0; i < b.width; ++i)
      put2(r, base + (i + 1) % b.width, get2(x, base + i));
    base += b.width;
  }
  return r;
}

std::uint64_t PackedOps::pnabla(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).nabla[get2(x, c)]);
  return r;
}

std::uint64_t PackedOps::ptri(std::uint64_t x) const {
  std::uint64_t r = 0;
  for (int c = 0; c < coords_; ++c)
    put2(r, c, base_tables(coord_family_[size_t(c)]).tri[get2(x, c)]);
  return r;
}

bool PackedOps::pleq(std::uint64_t x, std::uint64_t y) const {
  for (int c = 0; c < coords_; ++c)
    if (!base_tables(coord_family_[size_t(c)]).leq[get2(x, c)][get2(y, c)])
      return false;
  return true;
}

std::string PackedOps::word_str(std::uint64_t w) const {
  if (coords_ == 1) return symbol_name(coord_family_[0], get2(w, 0));
  std::string out = "(";
  for (int c = 0; c < coords_; ++c) {
    if (c) out += ",";
    out += symbol_name(coord_family_[size_t(c)], get2(w, c));
  }
  out += ")";
  return out;
}

std::uint64_t PackedOps::word_from_str(const std::string& s) const {
  std::string trimmed;
  for (char ch : s)
    if (ch != ' ' && ch != '\t') trimmed += ch;
  std::vector<std::string> tokens;
  if (!trimmed.empty() && trimmed.front() == '(') {
    if (trimmed.back() != ')') throw UsageError("unterminated element tuple: " + s);
    std::string body = trimmed.substr(1, trimmed.size() - 2);
    std::string cur;
    for (char ch : body) {
      if (ch == ',') {
        tokens.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    tokens.push_back(cur);
  } else {
    tokens.push_back(trimmed);
  }
  if (int(tokens.size()) != coords_)
    throw UsageError("element '" + s + "' has " + std::to_string(tokens.size()) +
                     " coordinates, expected " + std::to_string(coords_));
  std::uint64_t w = 0;
  for (int c = 0; c < coords_; ++c)
    put2(w, c, symbol_from_name(coord_family_[size_t(c)], tokens[size_t(c)]));
  return w;
}

CyclicAlgebra CyclicAlgebra::full(BaseFamily f, int k) {
  return product({Block{f, k}}, k);
}

CyclicAlgebra CyclicAlgebra::product(std::vector<Block> blocks, int k) {
  CyclicAlgebra a;
  a.ops_ = PackedOps(std::move(blocks), k);
  if (a.ops_.word_count() > (std::uint64_t(1) << 20))
    throw ResourceError("universe too large to materialize (" +
                        std::to_string(a.ops_.word_count()) + " elements)");
  std::vector<std::uint64_t> u(size_t(a.ops_.word_count()));
  for (std::uint64_t r = 0; r < a.ops_.word_count(); ++r) u[size_t(r)] = a.ops_.word_at(r);
  a.adopt_universe(std::move(u));
  return a;
}

CyclicAlgebra CyclicAlgebra::subalgebra(const CyclicAlgebra& parent, const Bitset& members) {
  if (members.size() != parent.size())
    throw UsageError("member mask size does not match the parent universe");
  std::vector<std::uint64_t> words;
  members.for_each([&](int i) { words.push_back(parent.elem(i)); });
  std::unordered_set<std::uint64_t> in(words.begin(), words.end());
  const PackedOps& P = parent.ops();
  if (!in.count(P.pzero()) || !in.count(P.pone()))
    throw UsageError("subset is not a subuniverse: missing a bound");
  for (std::uint64_t x : words) {
    if (!in.count(P.pneg(x)) || !in.count(P.pstar(x)) || !in.count(P.pshift(x)))
      throw UsageError("subset is not a subuniverse: not closed under a unary operation");
    for (std::uint64_t y : words)
      if (!in.count(P.pmeet(x, y)) || !in.count(P.pjoin(x, y)))
        throw UsageError("subset is not a subuniverse: not closed under meet/join");
  }
  CyclicAlgebra a;
  a.ops_ = P;
  a.adopt_universe(std::move(words));
  return a;
}

void CyclicAlgebra::adopt_universe(std::vector<std::uint64_t> universe) {
  universe_ = std::move(universe);
  index_.clear();
  index_.reserve(universe_.size() * 2);
  for (int i = 0; i < int(universe_.size()); ++i) index_[universe_[size_t(i)]] = i;
  if (index_.size() != universe_.size())
    throw InconsistencyError("duplicate words in universe");
  auto z = index_.find(ops_.pzero()), o = index_.find(ops_.pone());
  if (z == index_.end() || o == index_.end())
    throw InconsistencyError("universe lacks a bound");
  zero_idx_ = z->second;
  one_idx_ = o->second;
}

std::optional<int> CyclicAlgebra::index_of(std::uint64_t w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int CyclicAlgebra::require_index(std::uint64_t w) const {
  auto i = index_of(w);
  if (!i) throw InconsistencyError("word " + ops_.word_str(w) + " escaped the universe");
  return *i;
}

void CyclicAlgebra::tables() const {
  if (tables_built_) return;
  const size_t n = universe_.size();
  if (int(n) > kIndexCap)
    throw ResourceError("index tables refused for universe of size " + std::to_string(n));
  meet_.resize(n * n);
  join_.resize(n * n);
  neg_.resize(n);
  star_.resize(n);
  shift_.resize(n);
  nabla_.resize(n);
  tri_.resize(n);
  leq_row_ = (n + 63) / 64;
  leq_.assign(n * leq_row_, 0);
  for (size_t i = 0; i < n; ++i) {
    std::uint64_t x = universe_[i];
    neg_[i] = std::uint16_t(require_index(ops_.pneg(x)));
    star_[i] = std::uint16_t(require_index(ops_.pstar(x)));
    shift_[i] = std::uint16_t(require_index(ops_.pshift(x)));
    nabla_[i] = std::uint16_t(require_index(ops_.pnabla(x)));
    tri_[i] = std::uint16_t(require_index(ops_.ptri(x)));
    for (size_t j = 0; j < n; ++j) {
      std::uint64_t y = universe_[j];
      meet_[i * n + j] = std::uint16_t(require_index(ops_.pmeet(x, y)));
      join_[i * n + j] = std::uint16_t(require_index(ops_.pjoin(x, y)));
      if (ops_.pleq(x, y)) leq_[i * leq_row_ + (j >> 6)] |= std::uint64_t(1) << (j & 63);
    }
  }
  tables_built_ = true;
}

Bitset closure_mask(const CyclicAlgebra& A, const Bitset& seeds) {
  const int n = A.size();
  Bitset in(n);
  std::vector<int> stack, members;
  auto add = [&](int i) {
    if (!in.get(i)) {
      in.set(i);
      stack.push_back(i);
    }
  };
  add(A.zero());
  add(A.one());
  seeds.for_each(add);
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    members.push_back(x);
    add(A.neg(x));
    add(A.star(x));
    add(A.shift(x));
    for (int y : members) {
      add(A.meet(x, y));
      add(A.join(x, y));
    }
  }
  return in;
}

CyclicAlgebra generated_subalgebra(const CyclicAlgebra& A, const std::vector<int>& seeds) {
  Bitset s(A.size());
  for (int i : seeds) {
    if (i < 0 || i >= A.size()) throw UsageError("seed index out of range");
    s.set(i);
  }
  return CyclicAlgebra::subalgebra(A, closure_mask(A, s));
}

std::vector<CyclicAlgebra> enumerate_subalgebras(const CyclicAlgebra& A) {
  const int n = A.size();
  if (n > kEnumerateCap)
    throw ResourceError("subalgebra enumeration refused for universe of size " +
                        std::to_string(n));
  std::set<Bitset> found;
  Bitset empty(n);
  found.insert(closure_mask(A, empty));
  for (int i = 0; i < n; ++i) {
    Bitset s(n);
    s.set(i);
    found.insert(closure_mask(A, s));
    for (int j = i + 1; j < n; ++j) {
      Bitset p(n);
      p.set(i);
      p.set(j);
      found.insert(closure_mask(A, p));
    }
  }
  // close the collection under union-then-closure
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Bitset> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size() && !grew; ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        Bitset u = cur[i] | cur[j];
        if (u == cur[i] || u == cur[j]) continue;
        Bitset c = closure_mask(A, u);
        if (found.insert(c).second) {
          grew = true;
          break;
        }
      }
  }
  std::vector<Bitset> masks(found.begin(), found.end());
  std::sort(masks.begin(), masks.end(), [](const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<CyclicAlgebra> out;
  out.reserve(masks.size());
  for (const Bitset& m : masks) out.push_back(CyclicAlgebra::subalgebra(A, m));
  return out;
}

namespace {

// Order- and operation-theoretic fingerprint, constant under isomorphism.
struct Sig {
  int below = 0, above = 0, orbit = 0;
  bool neg_fixed = false, star_self = false, nabla_fixed = false, tri_fixed = false,
       neg_eq_star = false, is_zero = false, is_one = false;
  friend bool operator==(const Sig&, const Sig&) = default;
  friend auto operator<=>(const Sig&, const Sig&) = default;
};

std::vector<Sig> signatures(const CyclicAlgebra& A) {
  const int n = A.size();
  std::vector<Sig> s{};
  s.resize(size_t(n));
  for (int i = 0; i < n; ++i) {
    Sig& g = s[size_t(i)];
    for (int j = 0; j < n; ++j) {
      if (A.leq(j, i)) ++g.below;
      if (A.leq(i, j)) ++g.above;
    }
    int x = A.shift(i);
    g.orbit = 1;
    while (x != i) {
      x = A.shift(x);
      ++g.orbit;
    }
    g.neg_fixed = A.neg(i) == i;
    g.star_self = A.star(i) == i;
    g.nabla_fixed = A.nabla(i) == i;
    g.tri_fixed = A.tri(i) == i;
    g.neg_eq_star = A.neg(i) == A.star(i);
    g.is_zero = i == A.zero();
    g.is_one = i == A.one();
  }
  return s;
}

std::vector<int> generating_set(const CyclicAlgebra& A) {
  const int n = A.size();
  std::vector<int> gens;
  Bitset seeds(n);
  Bitset closed = closure_mask(A, seeds);
  while (closed.count() < n) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i)
      if (!closed.get(i)) pick = i;
    gens.push_back(pick);
    seeds.set(pick);
    closed = closure_mask(A, seeds);
  }
  return gens;
}

// Try to extend zero/one/generator images to a full isomorphism by replaying
// the closure; returns the image list on success.
std::optional<std::vector<int>> extend_iso(const CyclicAlgebra& A, const CyclicAlgebra& B,
                                           const std::vector<int>& gens,
                                           const std::vector<int>& imgs) {
  const int n = A.size();
  std::vector<int> m(size_t(n), -1);
  std::vector<int> stack, members;
  bool ok = true;
  auto assign = [&](int x, int fx) {
    if (!ok) return;
    if (m[size_t(x)] == -1) {
      m[size_t(x)] = fx;
      stack.push_back(x);
    } else if (m[size_t(x)] != fx) {
      ok = false;
    }
  };
  assign(A.zero(), B.zero());
  assign(A.one(), B.one());
  for (size_t g = 0; g < gens.size(); ++g) assign(gens[g], imgs[g]);
  while (ok && !stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    members.push_back(x);
    assign(A.neg(x), B.neg(m[size_t(x)]));
    assign(A.star(x), B.star(m[size_t(x)]));
    assign(A.shift(x), B.shift(m[size_t(x)]));
    for (int y : members) {
      assign(A.meet(x, y), B.meet(m[size_t(x)], m[size_t(y)]));
      assign(A.join(x, y), B.join(m[size_t(x)], m[size_t(y)]));
      if (!ok) break;
    }
  }
  if (!ok) return std::nullopt;
  Bitset hit(n);
  for (int i = 0; i < n; ++i) {
    if (m[size_t(i)] == -1)
      throw InconsistencyError("generating set failed to generate the algebra");
    if (hit.get(m[size_t(i)])) return std::nullopt;  // not injective
    hit.set(m[size_t(i)]);
  }
  // airtight: verify every operation on every argument tuple
  for (int i = 0; i < n; ++i) {
    if (m[size_t(A.neg(i))] != B.neg(m[size_t(i)])) return std::nullopt;
    if (m[size_t(A.star(i))] != B.star(m[size_t(i)])) return std::nullopt;
    if (m[size_t(A.shift(i))] != B.shift(m[size_t(i)])) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (m[size_t(A.meet(i, j))] != B.meet(m[size_t(i)], m[size_t(j)])) return std::nullopt;
      if (m[size_t(A.join(i, j))] != B.join(m[size_t(i)], m[size_t(j)])) return std::nullopt;
    }
  }
  return m;
}

// Visit every isomorphism A -> B; stops early when visit returns false.
void for_each_iso(const CyclicAlgebra& A, const CyclicAlgebra& B,
                  const std::function<bool(const std::vector<int>&)>& visit) {
  if (A.size() != B.size()) return;
  auto sa = signatures(A), sb = signatures(B);
  {
    auto ka = sa, kb = sb;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return;
  }
  std::vector<int> gens = generating_set(A);
  std::vector<std::vector<int>> cands(gens.size());
  for (size_t g = 0; g < gens.size(); ++g)
    for (int j = 0; j < B.size(); ++j)
      if (sb[size_t(j)] == sa[size_t(gens[g])]) cands[g].push_back(j);
  std::vector<int> imgs(gens.size(), -1);
  bool stop = false;
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (stop) return;
    if (depth == gens.size()) {
      if (auto m = extend_iso(A, B, gens, imgs))
        if (!visit(*m)) stop = true;
      return;
    }
    for (int c : cands[depth]) {
      imgs[depth] = c;
      self(self, depth + 1);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const CyclicAlgebra& A, const CyclicAlgebra& B) {
  std::optional<std::vector<int>> out;
  for_each_iso(A, B, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

std::uint64_t aut_count(const CyclicAlgebra& A) {
  std::uint64_t n = 0;
  for_each_iso(A, A, [&](const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

Bitset K_set(const CyclicAlgebra& A) {
  Bitset out(A.size());
  for (int i = 0; i < A.size(); ++i)
    if (A.shift(i) == i && A.nabla(i) == i) out.set(i);
  return out;
}

Bitset B_set(const CyclicAlgebra& A) {
  Bitset out(A.size());
  for (int i = 0; i < A.size(); ++i)
    if (A.meet(i, A.neg(i)) == A.zero()) out.set(i);
  return out;
}

Bitset periodic_members(const CyclicAlgebra& A, BaseFamily g, int d) {
  if (!A.single_family()) throw UsageError("periodic_members needs a single-block algebra");
  const int k = A.blocks()[0].width;
  BaseFamily f = A.blocks()[0].family;
  if (d < 1 || k % d != 0) throw UsageError("period must divide the block width");
  if (g != f && g != BaseFamily::Two)
    throw UsageError("subfamily must be the block family or two");
  const BaseTables& gt = base_tables(g);
  std::uint64_t cnt = 1;
  for (int i = 0; i < d; ++i) cnt *= std::uint64_t(gt.size);
  Bitset out(A.size());
  for (std::uint64_t r = 0; r < cnt; ++r) {
    std::uint64_t rem = r, w = 0;
    std::vector<Sym> digs{};
    digs.resize(size_t(d));
    for (int c = d - 1; c >= 0; --c) {
      digs[size_t(c)] = gt.elems[size_t(rem % std::uint64_t(gt.size))];
      rem /= std::uint64_t(gt.size);
    }
    for (int c = 0; c < k; ++c) put2(w, c, digs[size_t(c % d)]);
    out.set(A.require_index(w));
  }
  return out;
}

}  // namespace ck
