#pragma once

// The finite hypercube H_n and brute-force automorphism ground truth.
//
// Vertices are n-bit masks; bit k-1 of the mask is coordinate k, matching
// index k of the infinite graph. A set bit means "flipped relative to the
// base vertex" once embedded.

#include <cstdint>
#include <string>
#include <vector>

#include "hcube/automorphism.hpp"
#include "hcube/symplectic.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

using CubeVertex = std::uint32_t;

class FiniteCube {
 public:
  static constexpr int max_dimension = 10;

  /// Throws InputError unless 1 <= n <= max_dimension.
  explicit FiniteCube(int n);

  int dimension() const { return n_; }
  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  bool adjacent(CubeVertex u, CubeVertex v) const;
  std::vector<CubeVertex> neighbors(CubeVertex u) const;

 private:
  int n_;
};

struct CubeAutomorphism {
  int n = 0;
  /// vertex_map[u] is the image of u.
  std::vector<CubeVertex> vertex_map;

  CubeVertex operator()(CubeVertex u) const { return vertex_map[u]; }

  friend bool operator==(const CubeAutomorphism&, const CubeAutomorphism&) = default;
  friend auto operator<=>(const CubeAutomorphism&, const CubeAutomorphism&) = default;
};

/// Bijection check plus adjacency preservation in both directions.
bool is_cube_automorphism(const CubeAutomorphism& a);

/// Every bijection of the vertex set that preserves adjacency, in
/// lexicographic order of vertex_map. Requires 1 <= n <= 3.
std::vector<CubeAutomorphism> enumerate_automorphisms_bruteforce(int n);

/// Fixes the image of vertex 0 and the images of its n neighbours, extends to
/// the rest of the cube by completing squares, and keeps the candidates that
/// validate. Same order as the brute-force enumerator. Requires
/// 1 <= n <= max_listed_dimension.
std::vector<CubeAutomorphism> enumerate_automorphisms_extension(int n);

/// Same search without materializing the maps; runs candidate roots in
/// parallel. Requires 1 <= n <= 8.
std::uint64_t count_automorphisms_extension(int n);

inline constexpr int max_listed_dimension = 6;

/// Coordinate k moves to perm(k), then bits are flipped where the target
/// coordinate is negated. Throws InputError if w is not supported in 1..n.
CubeAutomorphism wreath_to_cube(const WreathPair& w, int n);

/// Inverse of wreath_to_cube; throws InputError if a is not induced by a
/// wreath pair.
WreathPair cube_to_wreath(const CubeAutomorphism& a);

/// All 2^n n! wreath pairs supported in 1..n, in a fixed order.
std::vector<WreathPair> all_wreath_pairs(int n);

CubeVertex cube_vertex_from_bits(const std::string& bits);
std::string bits_of(CubeVertex u, int n);

/// base with every coordinate k whose bit is set flipped.
Vertex embed_cube_vertex(CubeVertex bits, int n, const Vertex& base = {});

/// The regular oracle s on the infinite graph with
/// s(embed(u, base)) = embed(a(u), base) for every u.
SymplecticPerm lift_cube_permutation(const CubeAutomorphism& a, const Vertex& base = {});
AutomorphismOracle lift_cube_automorphism(const CubeAutomorphism& a, const Vertex& base = {});

}  // namespace hcube
