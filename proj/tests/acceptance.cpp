// Acceptance suite: one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>

#include "hcube/automorphism.hpp"
#include "hcube/error.hpp"
#include "hcube/finite_cube.hpp"
#include "hcube/symplectic.hpp"
#include "hcube/vertex.hpp"
#include "test_support.hpp"

using namespace hcube;
namespace ht = hcube::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Index> range(Index lo, Index hi) {
  std::vector<Index> out;
  for (Index i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::uint64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Wraps an oracle and counts evaluations.
struct CountingOracle {
  AutomorphismOracle inner;
  std::shared_ptr<std::uint64_t> calls = std::make_shared<std::uint64_t>(0);

  AutomorphismOracle oracle() const {
    return AutomorphismOracle::callback([inner = inner, calls = calls](const Vertex& v) {
      ++*calls;
      return inner(v);
    });
  }
};

Vertex vertex_outside_component(const Vertex& a, std::mt19937_64& rng) {
  while (true) {
    const Vertex b = ht::random_vertex(rng);
    if (!same_component(a, b)) return b;
  }
}

// 1. |Aut(H_n)| = 2^n n!; brute force for n <= 3, extension for n = 4, 5.
Outcome finite_count_law() {
  const auto start = Clock::now();
  Outcome o;
  std::string counts;
  for (int n = 1; n <= 3; ++n) {
    const auto brute = enumerate_automorphisms_bruteforce(n);
    const auto extension = enumerate_automorphisms_extension(n);
    const std::uint64_t expected = (std::uint64_t{1} << n) * factorial(n);
    o.pass = o.pass && brute.size() == expected && brute == extension;
    counts += " n=" + std::to_string(n) + ":" + std::to_string(brute.size());
  }
  const std::uint64_t expected4 = 384;
  const std::uint64_t expected5 = 3840;
  const auto ext4 = enumerate_automorphisms_extension(4).size();
  const auto ext5 = enumerate_automorphisms_extension(5).size();
  o.pass = o.pass && ext4 == expected4 && ext5 == expected5;
  counts += " n=4:" + std::to_string(ext4) + " n=5:" + std::to_string(ext5);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.pass = o.pass && seconds < 60.0;
  o.detail = "counts" + counts + ", " + std::to_string(seconds) + " s (limit 60 s)";
  return o;
}

// 2. Regular oracles are recovered exactly on windows containing the support.
Outcome theorem1_round_trip() {
  std::mt19937_64 rng(2001);
  constexpr int trials = 1000;
  constexpr std::size_t checks = 3;
  int disagreements = 0;
  int bad_query_counts = 0;
  for (int t = 0; t < trials; ++t) {
    const SymplecticPerm s = ht::random_sparse_symplectic(12, rng);
    const Vertex x = ht::random_vertex(rng);
    std::vector<Index> window = s.support();
    for (Index i = 1; i <= 20; ++i) {
      if (rng() % 2) window.push_back(i);
    }
    window = normalize_window(window);

    CountingOracle counted{AutomorphismOracle::regular(s)};
    const AutomorphismOracle f = counted.oracle();
    try {
      const auto local = reconstruct_local(f, x, window);
      if (*counted.calls != window.size() + 1 || local.oracle_query_count != window.size() + 1) ++bad_query_counts;

      const auto r = reconstruct_component(f, x, window, checks, rng());
      if (r.oracle_query_count != (checks + 1) * (window.size() + 1)) ++bad_query_counts;
      for (Index i : window) {
        if (r.action.at(i) != s(i) || local.action.at(i) != s(i)) {
          ++disagreements;
          break;
        }
      }
    } catch (const MalformedOracle&) {
      ++disagreements;
    }
  }
  return {disagreements == 0 && bad_query_counts == 0,
          std::to_string(trials) + " permutations, " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(bad_query_counts) + " wrong query counts"};
}

// 3. Local reconstructions at adjacent vertices coincide.
Outcome lemma2_agreement() {
  std::mt19937_64 rng(3001);
  constexpr int trials = 500;
  int mismatches = 0;
  const auto window = range(1, 14);
  for (int t = 0; t < trials; ++t) {
    const auto f = AutomorphismOracle::regular(ht::random_sparse_symplectic(12, rng));
    const Vertex x = ht::random_vertex(rng);
    const Vertex y = flip(x, 1 + static_cast<Index>(rng() % 16));
    if (reconstruct_local(f, x, window).action != reconstruct_local(f, y, window).action) ++mismatches;
  }
  return {mismatches == 0, std::to_string(trials) + " adjacent pairs, " + std::to_string(mismatches) + " mismatches"};
}

// 4. Example-1 oracles are certified non-regular; regular oracles never are.
Outcome example1_certificate() {
  std::mt19937_64 rng(4001);
  constexpr int trials = 100;
  const auto window = range(1, 10);
  int false_negatives = 0;
  int false_positives = 0;
  int bad_witnesses = 0;
  for (int t = 0; t < trials; ++t) {
    SymplecticPerm s;
    while (s.is_identity()) s = ht::random_sparse_symplectic(10, rng);
    const Vertex a = ht::random_vertex(rng);
    const Vertex b = vertex_outside_component(a, rng);
    const std::vector<Vertex> reps = rng() % 2 ? std::vector<Vertex>{a, b} : std::vector<Vertex>{b, a};

    const RegularityVerdict v = is_regular_verdict(example1_automorphism(a, s), reps, window);
    if (!v.non_regular()) {
      ++false_negatives;
    } else {
      const NonRegularWitness& w = *v.witness;
      const bool a_first = reps[w.first_rep] == a;
      const Index on_a = a_first ? w.first_image : w.second_image;
      const Index off_a = a_first ? w.second_image : w.first_image;
      if (on_a != s(w.index) || off_a != w.index || w.first_image == w.second_image) ++bad_witnesses;
    }

    const SymplecticPerm r = ht::random_sparse_symplectic(10, rng);
    if (is_regular_verdict(AutomorphismOracle::regular(r), reps, window).non_regular()) ++false_positives;
  }
  return {false_negatives == 0 && false_positives == 0 && bad_witnesses == 0,
          std::to_string(trials) + " piecewise + " + std::to_string(trials) + " regular oracles, " +
              std::to_string(false_negatives) + " false negatives, " + std::to_string(false_positives) +
              " false positives, " + std::to_string(bad_witnesses) + " bad witnesses"};
}

// 5. is_symplectic agrees with the singular-set preservation test.
Outcome symplectic_characterization() {
  std::mt19937_64 rng(5001);
  constexpr int trials = 600;
  int disagreements = 0;
  int non_symplectic = 0;
  for (int t = 0; t < trials; ++t) {
    const std::size_t k = 1 + rng() % 7;
    std::map<Index, Index> raw;
    if (t % 2 == 0) {
      const SymplecticPerm s = random_symplectic(k, rng());
      for (Index i = 1; i <= static_cast<Index>(k); ++i) {
        raw[i] = s(i);
        raw[-i] = s(-i);
      }
    } else {
      do {
        raw = ht::random_raw_bijection(k, rng);
      } while (is_symplectic(raw) && k > 1);
    }
    const bool symplectic = is_symplectic(raw);
    non_symplectic += !symplectic;
    if (symplectic != ht::preserves_singular_sets(raw, k)) ++disagreements;
  }
  return {disagreements == 0 && non_symplectic >= 50,
          std::to_string(trials) + " bijections (" + std::to_string(non_symplectic) + " non-symplectic), " +
              std::to_string(disagreements) + " disagreements"};
}

// 6. Group axioms, wreath round trip and homomorphism, order formula.
Outcome group_theory_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(6001);
  constexpr int trials = 1000;
  int failures = 0;
  for (int t = 0; t < trials; ++t) {
    const SymplecticPerm a = ht::random_sparse_symplectic(8, rng);
    const SymplecticPerm b = ht::random_sparse_symplectic(8, rng);
    const SymplecticPerm c = ht::random_sparse_symplectic(8, rng);
    bool ok = compose(compose(a, b), c) == compose(a, compose(b, c));
    ok = ok && compose(a, SymplecticPerm{}) == a && compose(SymplecticPerm{}, a) == a;
    ok = ok && compose(a, inverse(a)).is_identity() && compose(inverse(a), a).is_identity();
    ok = ok && from_wreath(to_wreath(a)) == a && to_wreath(from_wreath(to_wreath(b))) == to_wreath(b);
    ok = ok && from_wreath(wreath_multiply(to_wreath(a), to_wreath(b))) == compose(a, b);
    const SymplecticPerm small = random_symplectic(1 + rng() % 6, rng());
    ok = ok && order(small) == ht::order_by_iteration(small);
    failures += !ok;
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return {failures == 0 && seconds < 10.0, std::to_string(trials) + " cases, " + std::to_string(failures) +
                                               " failures, " + std::to_string(seconds) + " s (limit 10 s)"};
}

// 7. Every automorphism of H_3, lifted, is reconstructed to its wreath pair.
Outcome cross_validation() {
  const auto window = range(1, 3);
  const auto all = enumerate_automorphisms_bruteforce(3);
  std::size_t exact = 0;
  for (const CubeAutomorphism& a : all) {
    const WreathPair w = cube_to_wreath(a);
    const auto r = reconstruct_local(lift_cube_automorphism(a), embed_cube_vertex(0, 3), window);
    const auto recovered = finitize(r);
    if (recovered && to_wreath(*recovered) == w) ++exact;
  }
  return {exact == 48 && all.size() == 48, std::to_string(exact) + "/" + std::to_string(all.size()) + " exact"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 finite count law", finite_count_law},
      {"2 regular round trip", theorem1_round_trip},
      {"3 adjacent agreement", lemma2_agreement},
      {"4 non-regularity certificate", example1_certificate},
      {"5 symplectic characterization", symplectic_characterization},
      {"6 group theory suite", group_theory_suite},
      {"7 finite cross-validation", cross_validation},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
