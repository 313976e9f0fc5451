#pragma once

// Automorphism oracles of the infinite hypercube graph and recovery of the
// inducing symplectic permutation from pointwise oracle queries.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "hcube/symplectic.hpp"
#include "hcube/vertex.hpp"

namespace hcube {

struct PiecewiseCase {
  Vertex component_rep;
  SymplecticPerm perm;
};

/// Black-box vertex map promised to preserve adjacency.
///
/// Regular oracles apply one symplectic permutation everywhere. Piecewise
/// oracles apply a per-component permutation on the listed components and
/// fix every other vertex. Callback oracles are trusted user code; they must
/// be safe to call concurrently if the oracle is shared across threads.
class AutomorphismOracle {
 public:
  using Callback = std::function<Vertex(const Vertex&)>;

  struct Regular {
    SymplecticPerm perm;
  };
  struct Piecewise {
    std::vector<PiecewiseCase> cases;
  };
  struct UserCallback {
    Callback fn;
  };

  static AutomorphismOracle regular(SymplecticPerm s);
  /// Throws InputError if a case permutation moves its representative out of
  /// its component or two cases share a component.
  static AutomorphismOracle piecewise(std::vector<PiecewiseCase> cases);
  static AutomorphismOracle callback(Callback fn);

  Vertex operator()(const Vertex& v) const;

  const std::variant<Regular, Piecewise, UserCallback>& variant() const { return impl_; }

 private:
  explicit AutomorphismOracle(std::variant<Regular, Piecewise, UserCallback> impl) : impl_(std::move(impl)) {}

  std::variant<Regular, Piecewise, UserCallback> impl_;
};

Vertex evaluate(const AutomorphismOracle& f, const Vertex& v);

/// Windowed restriction of the symplectic permutation that agrees with an
/// oracle on the closed neighbourhood of a vertex.
struct ReconstructionResult {
  std::vector<Index> window;
  /// action[i] = s(i) for every i in the window (identity entries included).
  std::map<Index, Index> action;
  std::vector<Vertex> consistency_checked_at;
  std::uint64_t oracle_query_count = 0;
};

/// Recovers s with f(Y) = s(Y) for Y = X and every Y = flip(X, i), i in the
/// window. Uses exactly |window| + 1 oracle queries. Throws MalformedOracle
/// when the images are inconsistent with f being an automorphism.
ReconstructionResult reconstruct_local(const AutomorphismOracle& f, const Vertex& x, std::span<const Index> window);

/// reconstruct_local at x, then at `checks` seeded-random vertices within
/// distance 2 of x (flipping window indices), asserting that every local
/// reconstruction agrees. Throws MalformedOracle on disagreement.
ReconstructionResult reconstruct_component(const AutomorphismOracle& f, const Vertex& x,
                                           std::span<const Index> window, std::size_t checks,
                                           std::uint64_t seed = 0);

/// The recovered action as a closed permutation, if the window is invariant
/// under it (|action(i)| ranges over the window); nullopt otherwise.
std::optional<SymplecticPerm> finitize(const ReconstructionResult& r);

struct NonRegularWitness {
  Index index = 0;
  std::size_t first_rep = 0;
  std::size_t second_rep = 0;
  Index first_image = 0;
  Index second_image = 0;
};

/// NonRegular (a witness is present) certifies that no single symplectic
/// permutation induces f. Without a witness the reconstructions merely agree
/// on the probed window; that is not a proof of regularity.
struct RegularityVerdict {
  std::optional<NonRegularWitness> witness;
  std::vector<ReconstructionResult> per_component;

  bool non_regular() const { return witness.has_value(); }
};

/// Throws InputError if two representatives share a component.
RegularityVerdict is_regular_verdict(const AutomorphismOracle& f, std::span<const Vertex> reps,
                                     std::span<const Index> window);

/// The piecewise map that acts as s on H(a) and fixes every other vertex.
/// Throws InputError for the identity permutation.
AutomorphismOracle example1_automorphism(const Vertex& a, const SymplecticPerm& s);

/// Samples edges and non-edges inside ball(base, 2, window) and checks that f
/// maps them to edges and non-edges respectively.
bool check_automorphism_on_sample(const AutomorphismOracle& f, const Vertex& base, std::span<const Index> window,
                                  std::size_t samples, std::uint64_t seed = 0);

}  // namespace hcube
