#include "hcube/automorphism.hpp"

#include <random>
#include <set>
#include <string>

#include "hcube/error.hpp"

namespace hcube {

namespace {

std::string describe(Index i) { return std::to_string(i); }

// Sign change on every index of `indices`; self-inverse.
SymplecticPerm sign_flip(const std::vector<Index>& indices) {
  std::map<Index, Index> moves;
  for (Index i : indices) moves[i] = -i;
  return SymplecticPerm::from_moves(std::move(moves));
}

}  // namespace

AutomorphismOracle AutomorphismOracle::regular(SymplecticPerm s) { return AutomorphismOracle(Regular{std::move(s)}); }

AutomorphismOracle AutomorphismOracle::piecewise(std::vector<PiecewiseCase> cases) {
  for (std::size_t a = 0; a < cases.size(); ++a) {
    if (!weak_membership(cases[a].perm, cases[a].component_rep)) {
      throw InputError("piecewise case " + std::to_string(a) + " does not preserve its component");
    }
    for (std::size_t b = 0; b < a; ++b) {
      if (same_component(cases[a].component_rep, cases[b].component_rep)) {
        throw InputError("piecewise cases " + std::to_string(b) + " and " + std::to_string(a) +
                         " share a component");
      }
    }
  }
  return AutomorphismOracle(Piecewise{std::move(cases)});
}

AutomorphismOracle AutomorphismOracle::callback(Callback fn) {
  if (!fn) throw InputError("empty callback");
  return AutomorphismOracle(UserCallback{std::move(fn)});
}

Vertex AutomorphismOracle::operator()(const Vertex& v) const {
  struct Visitor {
    const Vertex& v;
    Vertex operator()(const Regular& r) const { return apply_vertex(r.perm, v); }
    Vertex operator()(const Piecewise& p) const {
      for (const auto& c : p.cases) {
        if (same_component(v, c.component_rep)) return apply_vertex(c.perm, v);
      }
      return v;
    }
    Vertex operator()(const UserCallback& c) const { return c.fn(v); }
  };
  return std::visit(Visitor{v}, impl_);
}

Vertex evaluate(const AutomorphismOracle& f, const Vertex& v) { return f(v); }

ReconstructionResult reconstruct_local(const AutomorphismOracle& f, const Vertex& x, std::span<const Index> window) {
  ReconstructionResult result;
  result.window = normalize_window(window);

  const Vertex fx = f(x);
  ++result.oracle_query_count;
  const auto moved = differing_indices(fx, x);
  if (!moved) throw MalformedOracle("oracle moves the vertex to a different component");
  // t sends f(X) back to X; g = t o f then fixes X.
  const SymplecticPerm t = sign_flip(*moved);

  std::set<Index> images_seen;
  for (Index i : result.window) {
    const Vertex y = flip(x, i);
    const Vertex gy = apply_vertex(t, f(y));
    ++result.oracle_query_count;

    // g(Y) must be a neighbour of X; g(Y)\X is then the single element at the
    // unique differing coordinate.
    const auto diff = differing_indices(gy, x);
    if (!diff || diff->size() != 1) {
      throw MalformedOracle("image of the neighbour at coordinate " + describe(i) +
                            " is not adjacent to the normalized image of the base vertex");
    }
    const Index k = diff->front();
    const Index new_element = gy.sign(k) * k;
    if (!images_seen.insert(k).second) {
      throw MalformedOracle("two neighbours map to the same neighbour (coordinate " + describe(k) + ")");
    }

    // Y\X = {y_elem}; s_X(y_elem) = new_element and s_X(-y_elem) follows by
    // oddness.
    const Index y_elem = y.sign(i) * i;
    const Index local_image = y_elem == i ? new_element : -new_element;
    result.action[i] = t(local_image);
  }
  return result;
}

ReconstructionResult reconstruct_component(const AutomorphismOracle& f, const Vertex& x,
                                           std::span<const Index> window, std::size_t checks,
                                           std::uint64_t seed) {
  ReconstructionResult result = reconstruct_local(f, x, window);
  if (result.window.empty() || checks == 0) return result;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, result.window.size() - 1);
  std::bernoulli_distribution second_step(0.5);
  for (std::size_t c = 0; c < checks; ++c) {
    Vertex y = flip(x, result.window[pick(rng)]);
    if (result.window.size() > 1 && second_step(rng)) {
      Index j;
      do {
        j = result.window[pick(rng)];
      } while (y.sign(j) != x.sign(j));
      y = flip(y, j);
    }
    const ReconstructionResult local = reconstruct_local(f, y, result.window);
    result.oracle_query_count += local.oracle_query_count;
    for (Index i : result.window) {
      if (local.action.at(i) != result.action.at(i)) {
        throw MalformedOracle("local permutations disagree at coordinate " + describe(i) + ": " +
                              describe(result.action.at(i)) + " vs " + describe(local.action.at(i)));
      }
    }
    result.consistency_checked_at.push_back(y);
  }
  return result;
}

std::optional<SymplecticPerm> finitize(const ReconstructionResult& r) {
  std::map<Index, Index> moves;
  for (const auto& [i, image] : r.action) {
    const Index target = image < 0 ? -image : image;
    if (!r.action.contains(target)) return std::nullopt;
    moves[i] = image;
  }
  try {
    return SymplecticPerm::from_moves(std::move(moves));
  } catch (const InputError&) {
    return std::nullopt;
  }
}

RegularityVerdict is_regular_verdict(const AutomorphismOracle& f, std::span<const Vertex> reps,
                                     std::span<const Index> window) {
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      if (same_component(reps[a], reps[b])) {
        throw InputError("representatives " + std::to_string(b) + " and " + std::to_string(a) +
                         " lie in the same component");
      }
    }
  }
  RegularityVerdict verdict;
  for (const Vertex& rep : reps) verdict.per_component.push_back(reconstruct_local(f, rep, window));

  // A regular automorphism has one inducing permutation, so its local action
  // is the same on every component.
  const std::vector<Index> w = normalize_window(window);
  for (Index i : w) {
    for (std::size_t b = 1; b < reps.size(); ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        const Index ia = verdict.per_component[a].action.at(i);
        const Index ib = verdict.per_component[b].action.at(i);
        if (ia != ib) {
          verdict.witness = NonRegularWitness{i, a, b, ia, ib};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

AutomorphismOracle example1_automorphism(const Vertex& a, const SymplecticPerm& s) {
  if (s.is_identity()) throw InputError("the identity permutation gives the trivial automorphism");
  return AutomorphismOracle::piecewise({{a, s}});
}

bool check_automorphism_on_sample(const AutomorphismOracle& f, const Vertex& base, std::span<const Index> window,
                                  std::size_t samples, std::uint64_t seed) {
  const std::vector<Index> w = normalize_window(window);
  if (w.empty()) return true;
  const std::vector<Vertex> region = ball(base, 2, w);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_vertex(0, region.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_index(0, w.size() - 1);

  for (std::size_t n = 0; n < samples; ++n) {
    const Vertex& u = region[pick_vertex(rng)];
    const Vertex v = flip(u, w[pick_index(rng)]);
    if (!adjacent(f(u), f(v))) return false;

    if (region.size() < 2) continue;
    const Vertex& p = region[pick_vertex(rng)];
    const Vertex& q = region[pick_vertex(rng)];
    if (p == q || adjacent(p, q)) continue;
    const Vertex fp = f(p);
    const Vertex fq = f(q);
    if (fp == fq || adjacent(fp, fq)) return false;
  }
  return true;
}

}  // namespace hcube
