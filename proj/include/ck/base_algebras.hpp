#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "ck/common.hpp"

namespace ck {

// The three generating chains/diamonds:
//   Two   = {0, 1}                 the two-element Boolean algebra
//   Three = {0, c, 1}              chain with ~c = c and c* = 0
//   Four  = {0, a, b, 1}           diamond with ~a = a, ~b = b, a* = b, b* = a
enum class BaseFamily : std::uint8_t { Two = 0, Three = 1, Four = 2 };

// Element codes shared across families. Code 2 is the middle element
// ("c" in Three, "a" in Four); code 3 ("b") exists only in Four.
using Sym = std::uint8_t;
inline constexpr Sym kZero = 0;
inline constexpr Sym kOne = 1;
inline constexpr Sym kMid = 2;
inline constexpr Sym kB = 3;

struct BaseElement {
  BaseFamily family;
  Sym sym;
  friend bool operator==(const BaseElement&, const BaseElement&) = default;
};

// Raw operation tables over the codes of one family. Entries for codes that
// do not belong to the family are 0xFF; hot paths index these directly.
struct BaseTables {
  int size;                          // number of elements
  std::array<Sym, 4> elems;          // codes in canonical order (bottom..top)
  std::array<std::array<Sym, 4>, 4> meet;
  std::array<std::array<Sym, 4>, 4> join;
  std::array<Sym, 4> neg;            // De Morgan negation ~
  std::array<Sym, 4> star;           // pseudocomplement *
  std::array<Sym, 4> nabla;          // nabla x = ~(~x /\ x*)
  std::array<Sym, 4> tri;            // triangle x = ~ nabla ~x
  std::array<std::array<bool, 4>, 4> leq;
};

const BaseTables& base_tables(BaseFamily f);

int family_size(BaseFamily f);
const char* family_name(BaseFamily f);            // "two" | "three" | "four"
BaseFamily family_from_name(const std::string&);  // inverse; UsageError on junk

// Printable name of a code within a family: "0", "1", "c", "a", "b".
std::string symbol_name(BaseFamily f, Sym s);
// Inverse of symbol_name; UsageError if the token is not an element of f.
Sym symbol_from_name(BaseFamily f, const std::string& token);

bool base_valid(BaseElement x);

// Checked element-level operations. Binary ones require both arguments from
// the same family and throw UsageError otherwise.
BaseElement base_meet(BaseElement x, BaseElement y);
BaseElement base_join(BaseElement x, BaseElement y);
BaseElement base_neg(BaseElement x);
BaseElement base_pseudo(BaseElement x);
BaseElement base_nabla(BaseElement x);
BaseElement base_triangle(BaseElement x);
bool base_leq(BaseElement x, BaseElement y);

}  // namespace ck
