#include "hcube/symplectic.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "hcube/error.hpp"
#include "test_support.hpp"

using namespace hcube;
namespace ht = hcube::testing;

namespace {

SymplecticPerm perm(std::map<Index, Index> moves) { return SymplecticPerm::from_moves(std::move(moves)); }

const Vertex a0{};

}  // namespace

TEST_CASE("construction validates") {
  CHECK(perm({{1, 1}}).is_identity());
  CHECK_THROWS_AS(perm({{0, 1}}), InputError);
  CHECK_THROWS_AS(perm({{1, 0}}), InputError);
  CHECK_THROWS_AS(perm({{1, 2}}), InputError);           // 2 is hit but not mapped
  CHECK_THROWS_AS(perm({{1, 2}, {2, -2}}), InputError);  // not injective
}

TEST_CASE("apply") {
  const SymplecticPerm s = perm({{1, -2}, {2, -1}});
  CHECK(apply(s, 1) == -2);
  CHECK(apply(s, -1) == 2);
  CHECK(apply(s, 7) == 7);
  CHECK(apply(SymplecticPerm{}, 7) == 7);
  CHECK_THROWS_AS(apply(s, 0), InputError);
}

TEST_CASE("apply_vertex") {
  CHECK(apply_vertex(perm({{1, -1}}), a0) == flip(a0, 1));
  const Vertex alt = alternating_vertex();
  CHECK(apply_vertex(SymplecticPerm{}, alt) == alt);

  const SymplecticPerm swap = perm({{1, 2}, {2, 1}});
  const Vertex v = flip(a0, 1);
  // Elementwise image on the window {1,2}: {-1, 2} -> {-2, 1}.
  CHECK(ht::image_elements(swap, v, 2) == std::set<Index>{-2, 1});
  CHECK(apply_vertex(swap, v) == flip(a0, 2));
}

TEST_CASE("compose and inverse") {
  const SymplecticPerm a = perm({{1, 2}, {2, 1}});
  const SymplecticPerm b = perm({{2, 3}, {3, 2}});
  const SymplecticPerm ab = compose(a, b);
  for (Index i = -3; i <= 3; ++i) {
    if (i != 0) CHECK(ab(i) == a(b(i)));
  }
  CHECK(ab == perm({{1, 2}, {2, 3}, {3, 1}}));
  CHECK(compose(SymplecticPerm{}, a) == a);
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(inverse(SymplecticPerm{}).is_identity());
  CHECK(inverse(perm({{1, -1}})) == perm({{1, -1}}));
}

TEST_CASE("is_symplectic") {
  CHECK(is_symplectic({{1, 2}, {-1, -2}, {2, 1}, {-2, -1}}));
  CHECK_FALSE(is_symplectic({{1, 2}, {-1, 2}, {2, 1}, {-2, -1}}));
  CHECK(is_symplectic({{1, -1}, {-1, 1}}));
  CHECK_FALSE(is_symplectic({{1, 2}, {-1, -2}}));     // not onto its domain
  CHECK_FALSE(is_symplectic({{1, 1}}));               // domain not symmetric
  CHECK_FALSE(is_symplectic({{1, -2}, {-1, -2}, {2, 1}, {-2, -1}}));
  CHECK(is_symplectic({}));
}

TEST_CASE("order") {
  CHECK(order(SymplecticPerm{}) == 1);
  CHECK(order(perm({{1, -1}})) == 2);
  const SymplecticPerm negative_cycle = perm({{1, 2}, {2, -1}});
  CHECK(ht::order_by_iteration(negative_cycle) == 4);
  CHECK(order(negative_cycle) == 4);
  // A positive 3-cycle and a negative 2-cycle: lcm(3, 4).
  const SymplecticPerm mixed = perm({{1, 2}, {2, 3}, {3, 1}, {4, -5}, {5, 4}});
  CHECK(ht::order_by_iteration(mixed) == 12);
  CHECK(order(mixed) == 12);
}

TEST_CASE("wreath form") {
  CHECK(from_wreath({{}, {1}}) == perm({{1, -1}}));
  CHECK(from_wreath({{{1, 2}, {2, 1}}, {}}) == perm({{1, 2}, {2, 1}}));
  // Sign attaches to the target coordinate.
  CHECK(from_wreath({{{1, 2}, {2, 1}}, {2}}) == perm({{1, -2}, {2, 1}}));
  CHECK_THROWS_AS(from_wreath({{{1, 2}}, {}}), InputError);
  CHECK_THROWS_AS(from_wreath({{{1, 3}, {2, 3}, {3, 1}}, {}}), InputError);
  CHECK_THROWS_AS(from_wreath({{}, {0}}), InputError);
  CHECK(to_wreath(perm({{1, -2}, {2, 1}})) == WreathPair{{{1, 2}, {2, 1}}, {2}});
}

TEST_CASE("weak_membership and random_symplectic") {
  const Vertex alt = alternating_vertex();
  CHECK(weak_membership(perm({{1, -1}}), alt));
  CHECK(weak_membership(SymplecticPerm{}, alt));
  CHECK(random_symplectic(0, 3).is_identity());
  CHECK(random_symplectic(9, 42) == random_symplectic(9, 42));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const SymplecticPerm s = random_symplectic(rng() % 10, rng());
    CHECK(is_symplectic(to_raw(s)));
    CHECK(weak_membership(s, ht::random_vertex(rng)));
    for (Index k : s.support()) CHECK(k <= 10);
  }
}

TEST_CASE("property: group axioms, order formula, wreath homomorphism") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const SymplecticPerm a = ht::random_sparse_symplectic(7, rng);
    const SymplecticPerm b = ht::random_sparse_symplectic(7, rng);
    const SymplecticPerm c = ht::random_sparse_symplectic(7, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, SymplecticPerm{}) == a);
    CHECK(compose(SymplecticPerm{}, a) == a);
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(inverse(a), a).is_identity());

    CHECK(to_wreath(from_wreath(to_wreath(a))) == to_wreath(a));
    CHECK(from_wreath(to_wreath(a)) == a);
    CHECK(from_wreath(wreath_multiply(to_wreath(a), to_wreath(b))) == compose(a, b));

    if (a.support().size() <= 6) CHECK(order(a) == ht::order_by_iteration(a));
  }
}

TEST_CASE("property: symplectic iff singular sets stay singular") {
  std::mt19937_64 rng(22);
  int non_symplectic = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t k = 1 + rng() % 6;
    std::map<Index, Index> raw;
    if (trial % 2 == 0) {
      const SymplecticPerm s = random_symplectic(k, rng());
      for (Index i = 1; i <= static_cast<Index>(k); ++i) {
        raw[i] = s(i);
        raw[-i] = s(-i);
      }
    } else {
      raw = ht::random_raw_bijection(k, rng);
    }
    const bool symplectic = is_symplectic(raw);
    non_symplectic += !symplectic;
    CHECK(symplectic == ht::preserves_singular_sets(raw, k));
  }
  CHECK(non_symplectic >= 50);

  // Concrete counterexample: 1 -> 2, -1 -> 1 sends the singular set {-1, -2}
  // to {1, -1}.
  const std::map<Index, Index> bad{{1, 2}, {-1, 1}, {2, -1}, {-2, -2}};
  CHECK_FALSE(is_symplectic(bad));
  CHECK_FALSE(ht::preserves_singular_sets(bad, 2));
}

TEST_CASE("property: regular automorphisms preserve adjacency and are faithful") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const SymplecticPerm s = ht::random_sparse_symplectic(8, rng);
    const Vertex v = ht::random_vertex(rng);
    const Vertex w = rng() % 2 ? flip(v, 1 + static_cast<Index>(rng() % 10)) : ht::random_vertex(rng);
    CHECK(adjacent(v, w) == adjacent(apply_vertex(s, v), apply_vertex(s, w)));
    CHECK(same_component(v, w) == same_component(apply_vertex(s, v), apply_vertex(s, w)));
    // Elementwise agreement with the set image on a long prefix.
    const Index limit = 30;
    CHECK(ht::image_elements(s, v, limit) == ht::elements(apply_vertex(s, v), limit));

    // Distinct permutations are told apart by some vertex flipped only inside
    // the union of their supports.
    const SymplecticPerm t = ht::random_sparse_symplectic(4, rng);
    if (s == t) continue;
    std::set<Index> support_set;
    for (Index k : s.support()) support_set.insert(k);
    for (Index k : t.support()) support_set.insert(k);
    const std::vector<Index> support(support_set.begin(), support_set.end());
    bool distinguished = false;
    for (const Vertex& x : ball(v, support.size(), support)) {
      if (apply_vertex(s, x) != apply_vertex(t, x)) {
        distinguished = true;
        break;
      }
    }
    CHECK(distinguished);
  }
}
