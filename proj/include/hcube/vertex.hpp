#pragma once

// Vertices of the infinite-dimensional hypercube graph.
//
// A vertex is a maximal singular subset X of Z\{0}: for every i >= 1 exactly
// one of i, -i belongs to X. We store it as a sign function on the positive
// integers, sign(i) = +1 iff i in X. Only eventually periodic sign functions
// are representable: a periodic pattern plus finitely many overrides.
//
// Indexing convention: pattern[r] is the sign of every index i with
// (i - 1) mod period == r, so pattern[0] governs 1, 1+p, 1+2p, ...

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hcube {

using Index = std::int64_t;

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }
constexpr Index operator*(Sign s, Index i) { return s == Sign::plus ? i : -i; }
constexpr Sign sign_of(Index i) { return i < 0 ? Sign::minus : Sign::plus; }

/// Raw, possibly non-canonical description of a sign function.
struct SignRule {
  std::int64_t period = 1;
  std::vector<Sign> pattern{Sign::plus};
  std::map<Index, Sign> overrides;
};

class Vertex {
 public:
  /// The all-positive basepoint {1, 2, 3, ...}.
  Vertex();

  /// Validates and canonicalizes. Throws InputError on a non-positive period,
  /// a pattern whose length differs from the period, or an override key < 1.
  static Vertex from_rule(SignRule rule);

  /// sign(i) for i >= 1.
  Sign sign(Index i) const;
  bool contains(Index i) const;

  /// Copy of this vertex with the signs at the given positions replaced.
  Vertex with_signs(const std::map<Index, Sign>& updates) const;

  std::int64_t period() const { return static_cast<std::int64_t>(pattern_.size()); }
  const std::vector<Sign>& pattern() const { return pattern_; }
  const std::map<Index, Sign>& overrides() const { return overrides_; }
  SignRule rule() const { return {period(), pattern_, overrides_}; }

  /// Pattern as a string of '+'/'-'.
  std::string pattern_string() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b);

 private:
  Sign pattern_sign(Index i) const;
  void canonicalize();

  std::vector<Sign> pattern_{Sign::plus};
  std::map<Index, Sign> overrides_;
};

/// Graph distance; std::nullopt means the vertices lie in different
/// components (infinite distance).
using Distance = std::optional<std::uint64_t>;

Vertex make_vertex(SignRule rule);

/// The vertex with the given signed elements, taking signs from `background`
/// at every unmentioned position. Throws InputError if both i and -i (or 0)
/// appear.
Vertex vertex_from_elements(std::span<const Index> elements, const Vertex& background = {});

/// Throws InputError for i == 0.
bool contains(const Vertex& v, Index i);

/// The unique neighbour of v that differs from it at index i (i >= 1).
Vertex flip(const Vertex& v, Index i);

/// Positions where v and w disagree, ascending; nullopt if there are
/// infinitely many.
std::optional<std::vector<Index>> differing_indices(const Vertex& v, const Vertex& w);

bool adjacent(const Vertex& v, const Vertex& w);
bool same_component(const Vertex& v, const Vertex& w);
Distance distance(const Vertex& v, const Vertex& w);

/// Sorted, deduplicated copy of a window. Throws InputError on an index < 1.
std::vector<Index> normalize_window(std::span<const Index> window);

/// flip(v, i) for each i in the window, ascending.
std::vector<Vertex> neighbors_in_window(const Vertex& v, std::span<const Index> window);

/// Every vertex reachable from v by flipping at most `radius` distinct indices
/// of the window. Ordered by number of flips, then lexicographically by the
/// flipped index set.
std::vector<Vertex> ball(const Vertex& v, std::size_t radius, std::span<const Index> window);

/// {1, -2, 3, -4, ...}
Vertex alternating_vertex();

}  // namespace hcube
