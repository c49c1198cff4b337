#pragma once

// Pregroup types over a partially ordered set of basic types.
//
// A simple type is a basic type with an integer adjoint exponent:
//   ... a^ll = a(-2), a^l = a(-1), a = a(0), a^r = a(1), a^rr = a(2) ...
// A type is a finite string of simple types; the empty string is the
// tensor unit I.

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pgsem::pregroup {

using BasicType = std::string;

/// The basic-type poset. The order is the reflexive-transitive closure of
/// the declared pairs; antisymmetry is checked on construction.
class Poset {
 public:
  Poset() = default;

  /// Throws std::invalid_argument when the closure is not antisymmetric.
  Poset(std::vector<BasicType> elements, const std::vector<std::pair<BasicType, BasicType>>& declared);

  /// Parses lines of the form `a <= b` (chains `a <= b <= c` allowed) or a
  /// single name declaring an isolated element. `#` starts a comment.
  static Poset parse(std::string_view text);
  static Poset load(const std::string& path);

  bool contains(const BasicType& a) const { return index_.contains(a); }
  bool leq(const BasicType& a, const BasicType& b) const;
  /// Elements in order of first declaration.
  const std::vector<BasicType>& elements() const { return elements_; }

 private:
  std::vector<BasicType> elements_;
  std::map<BasicType, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;
};

struct SimpleType {
  BasicType base;
  int z = 0;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;
};

enum class Side { Left, Right };

/// Left decrements the exponent, right increments it.
SimpleType adjoint(const SimpleType& t, Side side);

inline bool is_even(const SimpleType& t) { return t.z % 2 == 0; }

struct Type {
  std::vector<SimpleType> factors;

  bool is_unit() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }

  friend bool operator==(const Type&, const Type&) = default;
};

/// Juxtaposition.
Type operator*(const Type& a, const Type& b);

/// Whitespace-separated simple types; adjoints written `a^r`, `a^rr`,
/// `a^l`, `a^ll`, ... Throws std::invalid_argument for unknown basic types
/// or malformed suffixes.
Type parse_type(std::string_view text, const Poset& poset);
std::string to_string(const SimpleType& t);
std::string to_string(const Type& t);

/// Generalised contraction s t -> 1 for adjacent s, t: t.z = s.z + 1 and,
/// if s.z is even, s.base <= t.base, otherwise t.base <= s.base.
bool contractible(const SimpleType& s, const SimpleType& t, const Poset& poset);

}  // namespace pgsem::pregroup
