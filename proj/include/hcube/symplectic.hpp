#pragma once

// Finitely supported symplectic permutations of Z\{0}, i.e. permutations s
// with s(-i) = -s(i), and their wreath-product (signed permutation) form.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "hcube/vertex.hpp"

namespace hcube {

/// Stores s(i) for the positive i it moves; s(-i) = -s(i) is implicit.
class SymplecticPerm {
 public:
  /// Identity.
  SymplecticPerm() = default;

  /// Validates that keys are >= 1, images are nonzero, the absolute images of
  /// the keys permute the keys, and drops identity entries. Throws InputError.
  static SymplecticPerm from_moves(std::map<Index, Index> moves);

  /// Throws InputError for i == 0.
  Index operator()(Index i) const;

  const std::map<Index, Index>& moves() const { return moves_; }
  bool is_identity() const { return moves_.empty(); }
  /// Positive indices moved by s, ascending.
  std::vector<Index> support() const;

  friend bool operator==(const SymplecticPerm&, const SymplecticPerm&) = default;

 private:
  std::map<Index, Index> moves_;
};

/// Signed permutation in wreath form: a coordinate permutation (type-1 part)
/// followed by sign changes at target coordinates (type-2 part). The induced
/// symplectic permutation sends i > 0 to signs(perm(i)) * perm(i).
struct WreathPair {
  /// Finite permutation of positive integers; fixed points omitted.
  std::map<Index, Index> perm;
  /// Coordinates carrying sign -1.
  std::set<Index> negated;

  friend bool operator==(const WreathPair&, const WreathPair&) = default;
};

Index apply(const SymplecticPerm& s, Index i);

/// The vertex {s(x) : x in v}.
Vertex apply_vertex(const SymplecticPerm& s, const Vertex& v);

/// (a o b)(i) = a(b(i)).
SymplecticPerm compose(const SymplecticPerm& a, const SymplecticPerm& b);
SymplecticPerm inverse(const SymplecticPerm& s);

/// Checks that a raw map on nonzero integers is a bijection of its domain
/// onto itself that commutes with negation. Any structural defect (zero
/// entries, asymmetric domain, non-injective) yields false.
bool is_symplectic(const std::map<Index, Index>& raw);

/// Expands s to its raw map on the symmetric support {+-i : i in support}.
std::map<Index, Index> to_raw(const SymplecticPerm& s);

/// Least k >= 1 with s^k = id. A cycle of length l on |s| contributes l if
/// the product of signs along it is +1 and 2l otherwise.
std::uint64_t order(const SymplecticPerm& s);

/// Throws InputError if perm is not a bijection of its keys or mentions an
/// index < 1, or if a negated coordinate is < 1.
SymplecticPerm from_wreath(const WreathPair& w);
WreathPair to_wreath(const SymplecticPerm& s);

/// Product in the wreath group itself: apply b, then a.
WreathPair wreath_multiply(const WreathPair& a, const WreathPair& b);

/// Whether s maps base into its own connected component.
bool weak_membership(const SymplecticPerm& s, const Vertex& base);

/// Uniform signed permutation of {1..support_bound}, deterministic per seed.
SymplecticPerm random_symplectic(std::size_t support_bound, std::uint64_t seed);

}  // namespace hcube
