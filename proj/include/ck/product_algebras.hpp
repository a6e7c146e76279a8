#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ck/base_algebras.hpp"
#include "ck/bitset.hpp"
#include "ck/common.hpp"

namespace ck {

// One rotation cycle of coordinates drawn from a single base family.
// T_{i,k} is a single block of width k; direct products of generating
// algebras (used at k = 1 and in tests) are several blocks.
struct Block {
  BaseFamily family;
  int width;
  friend bool operator==(const Block&, const Block&) = default;
};

// Elements are packed 2 bits per coordinate into a u64 (coordinate c at bits
// 2c, 2c+1), so at most 32 coordinates. All operations act coordinatewise
// except t, which rotates each block one step to the right. This layer never
// materializes a universe, so it works for word counts far beyond table size;
// the consequence engines use it directly for large k.
class PackedOps {
 public:
  PackedOps() = default;
  // Every block width must divide the declared period k (so t^k = id).
  PackedOps(std::vector<Block> blocks, int k);

  int k() const { return k_; }
  int coords() const { return coords_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  BaseFamily coord_family(int c) const { return coord_family_[size_t(c)]; }
  bool single_family() const { return blocks_.size() == 1; }

  std::uint64_t word_count() const { return count_; }
  // Words in canonical order: coordinate 0 is the most significant digit and
  // each coordinate runs through its family's bottom..top element order.
  std::uint64_t word_at(std::uint64_t rank) const;
  std::uint64_t rank_of_word(std::uint64_t w) const;

  std::uint64_t pmeet(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t pjoin(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t pneg(std::uint64_t x) const;
  std::uint64_t pstar(std::uint64_t x) const;
  std::uint64_t pshift(std::uint64_t x) const;
  std::uint64_t pnabla(std::uint64_t x) const;
  std::uint64_t ptri(std::uint64_t x) const;
  bool pleq(std::uint64_t x, std::uint64_t y) const;
  std::uint64_t pzero() const { return 0; }
  std::uint64_t pone() const { return one_word_; }

  std::string word_str(std::uint64_t w) const;
  // Accepts "a" for single-coordinate layouts or "(a,b,...)" tuples.
  std::uint64_t word_from_str(const std::string& s) const;

  friend bool operator==(const PackedOps& a, const PackedOps& b) {
    return a.blocks_ == b.blocks_ && a.k_ == b.k_;
  }

 private:
  std::vector<Block> blocks_;
  int k_ = 0;
  int coords_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t one_word_ = 0;
  std::vector<BaseFamily> coord_family_;
  std::vector<std::uint64_t> stride_;  // per coordinate, most significant first
};

// A finite algebra with a materialized universe and, on demand, full index
// operation tables (u16), used by everything that enumerates subsets.
class CyclicAlgebra {
 public:
  CyclicAlgebra() = default;

  // T_{f,k}: one block of width k, declared period k.
  static CyclicAlgebra full(BaseFamily f, int k);
  // General product; every block width must divide the declared period k.
  static CyclicAlgebra product(std::vector<Block> blocks, int k);
  // Restriction to a subset of the parent universe; throws UsageError if the
  // subset is not a subuniverse (constants + closure under all operations).
  static CyclicAlgebra subalgebra(const CyclicAlgebra& parent, const Bitset& members);

  const PackedOps& ops() const { return ops_; }
  int size() const { return int(universe_.size()); }
  int k() const { return ops_.k(); }
  int coords() const { return ops_.coords(); }
  const std::vector<Block>& blocks() const { return ops_.blocks(); }
  bool single_family() const { return ops_.single_family(); }

  std::uint64_t elem(int i) const { return universe_[size_t(i)]; }
  std::optional<int> index_of(std::uint64_t w) const;
  int require_index(std::uint64_t w) const;  // InconsistencyError if absent

  // Index operations via cached tables; first use builds them.
  // Refused (ResourceError) for universes larger than kIndexCap.
  static constexpr int kIndexCap = 1024;
  int meet(int i, int j) const { tables(); return meet_[size_t(i) * universe_.size() + size_t(j)]; }
  int join(int i, int j) const { tables(); return join_[size_t(i) * universe_.size() + size_t(j)]; }
  int neg(int i) const { tables(); return neg_[size_t(i)]; }
  int star(int i) const { tables(); return star_[size_t(i)]; }
  int shift(int i) const { tables(); return shift_[size_t(i)]; }
  int nabla(int i) const { tables(); return nabla_[size_t(i)]; }
  int tri(int i) const { tables(); return tri_[size_t(i)]; }
  bool leq(int i, int j) const {
    tables();
    return (leq_[size_t(i) * leq_row_ + size_t(j >> 6)] >> (j & 63)) & 1u;
  }
  int zero() const { return zero_idx_; }
  int one() const { return one_idx_; }

  // Raw table access for hot loops (builds tables on first use).
  const std::uint16_t* meet_table() const { tables(); return meet_.data(); }
  const std::uint16_t* join_table() const { tables(); return join_.data(); }
  const std::uint16_t* neg_table() const { tables(); return neg_.data(); }
  const std::uint16_t* star_table() const { tables(); return star_.data(); }
  const std::uint16_t* shift_table() const { tables(); return shift_.data(); }
  const std::uint16_t* nabla_table() const { tables(); return nabla_.data(); }
  const std::uint16_t* tri_table() const { tables(); return tri_.data(); }

  std::string elem_str(int i) const { return ops_.word_str(elem(i)); }

  friend bool operator==(const CyclicAlgebra& a, const CyclicAlgebra& b) {
    return a.ops_ == b.ops_ && a.universe_ == b.universe_;
  }

 private:
  PackedOps ops_;
  std::vector<std::uint64_t> universe_;
  std::unordered_map<std::uint64_t, int> index_;
  int zero_idx_ = -1, one_idx_ = -1;

  mutable bool tables_built_ = false;
  mutable std::vector<std::uint16_t> meet_, join_, neg_, star_, shift_, nabla_, tri_;
  mutable std::vector<std::uint64_t> leq_;
  mutable size_t leq_row_ = 0;

  void adopt_universe(std::vector<std::uint64_t> universe);
  void tables() const;
};

// Closure of seeds (given as a member bitset over A's universe) together with
// the constants 0, 1 under meet, join, ~, *, t. Returns a member bitset.
Bitset closure_mask(const CyclicAlgebra& A, const Bitset& seeds);

// Same closure, packaged as an algebra.
CyclicAlgebra generated_subalgebra(const CyclicAlgebra& A, const std::vector<int>& seeds);

// All subuniverses of A, each packaged as an algebra, sorted by size then by
// member mask. Computed as closures of all seed sets of size at most 2,
// then closed under pairwise union-closure to a fixpoint.
// Refused (ResourceError) when A is larger than kEnumerateCap (k > 4 for T4).
inline constexpr int kEnumerateCap = 256;
std::vector<CyclicAlgebra> enumerate_subalgebras(const CyclicAlgebra& A);

// Isomorphism of cyclic algebras: a bijection preserving meet, join, ~, *, t.
// Returns the image list (index in A -> index in B) or nullopt.
std::optional<std::vector<int>> is_isomorphic(const CyclicAlgebra& A, const CyclicAlgebra& B);

// Number of automorphisms of A.
std::uint64_t aut_count(const CyclicAlgebra& A);

// K(A) = { x : t(x) = x and nabla(x) = x }.
Bitset K_set(const CyclicAlgebra& A);
// B(A) = { x : x /\ ~x = 0 }.
Bitset B_set(const CyclicAlgebra& A);

// The d-periodic words of single-block A whose coordinates lie in subfamily g
// (g must be A's family, or Two); requires d | k. Member bitset over A.
Bitset periodic_members(const CyclicAlgebra& A, BaseFamily g, int d);

}  // namespace ck
