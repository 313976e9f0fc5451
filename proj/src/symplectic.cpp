#include "hcube/symplectic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hcube/error.hpp"

namespace hcube {

namespace {

Index abs_index(Index i) { return i < 0 ? -i : i; }

}  // namespace

SymplecticPerm SymplecticPerm::from_moves(std::map<Index, Index> moves) {
  std::set<Index> targets;
  for (const auto& [i, image] : moves) {
    if (i < 1) throw InputError("permutation keys must be positive, got " + std::to_string(i));
    if (image == 0) throw InputError("permutation image of " + std::to_string(i) + " is 0");
    if (!targets.insert(abs_index(image)).second) {
      throw InputError("permutation is not injective at |image| = " + std::to_string(abs_index(image)));
    }
  }
  for (Index t : targets) {
    if (!moves.contains(t)) {
      throw InputError("permutation support is not closed: " + std::to_string(t) + " is hit but not mapped");
    }
  }
  std::erase_if(moves, [](const auto& kv) { return kv.first == kv.second; });
  SymplecticPerm s;
  s.moves_ = std::move(moves);
  return s;
}

Index SymplecticPerm::operator()(Index i) const {
  if (i == 0) throw InputError("0 is not an element of Z\\{0}");
  if (i < 0) return -(*this)(-i);
  auto it = moves_.find(i);
  return it == moves_.end() ? i : it->second;
}

std::vector<Index> SymplecticPerm::support() const {
  std::vector<Index> out;
  out.reserve(moves_.size());
  for (const auto& kv : moves_) out.push_back(kv.first);
  return out;
}

Index apply(const SymplecticPerm& s, Index i) { return s(i); }

Vertex apply_vertex(const SymplecticPerm& s, const Vertex& v) {
  // x = sign(i) * i in v maps to sign(i) * s(i), which sits at |s(i)|.
  std::map<Index, Sign> updates;
  for (const auto& [i, image] : s.moves()) updates[abs_index(image)] = v.sign(i) * sign_of(image);
  return v.with_signs(updates);
}

SymplecticPerm compose(const SymplecticPerm& a, const SymplecticPerm& b) {
  std::map<Index, Index> moves;
  for (Index i : a.support()) moves[i] = a(b(i));
  for (Index i : b.support()) moves[i] = a(b(i));
  return SymplecticPerm::from_moves(std::move(moves));
}

SymplecticPerm inverse(const SymplecticPerm& s) {
  std::map<Index, Index> moves;
  // s(i) = e * j  =>  s^-1(j) = e * i.
  for (const auto& [i, image] : s.moves()) moves[abs_index(image)] = sign_of(image) * i;
  return SymplecticPerm::from_moves(std::move(moves));
}

bool is_symplectic(const std::map<Index, Index>& raw) {
  std::set<Index> images;
  for (const auto& [i, image] : raw) {
    if (i == 0 || image == 0) return false;
    if (!raw.contains(-i)) return false;
    if (raw.at(-i) != -image) return false;
    if (!images.insert(image).second) return false;
  }
  for (Index image : images) {
    if (!raw.contains(image)) return false;
  }
  return true;
}

std::map<Index, Index> to_raw(const SymplecticPerm& s) {
  std::map<Index, Index> raw;
  for (const auto& [i, image] : s.moves()) {
    raw[i] = image;
    raw[-i] = -image;
  }
  return raw;
}

std::uint64_t order(const SymplecticPerm& s) {
  std::uint64_t result = 1;
  std::set<Index> seen;
  for (Index start : s.support()) {
    if (seen.contains(start)) continue;
    std::uint64_t length = 0;
    Sign product = Sign::plus;
    Index i = start;
    do {
      seen.insert(i);
      const Index image = s(i);
      product = product * sign_of(image);
      i = abs_index(image);
      ++length;
    } while (i != start);
    result = std::lcm(result, product == Sign::plus ? length : 2 * length);
  }
  return result;
}

SymplecticPerm from_wreath(const WreathPair& w) {
  std::set<Index> targets;
  for (const auto& [i, j] : w.perm) {
    if (i < 1 || j < 1) throw InputError("wreath permutation entries must be positive");
    if (!targets.insert(j).second) throw InputError("wreath permutation is not injective at " + std::to_string(j));
  }
  for (Index j : targets) {
    if (!w.perm.contains(j)) throw InputError("wreath permutation support is not closed at " + std::to_string(j));
  }
  for (Index k : w.negated) {
    if (k < 1) throw InputError("sign coordinates must be positive, got " + std::to_string(k));
  }
  std::map<Index, Index> moves;
  for (const auto& [i, j] : w.perm) moves[i] = j;
  for (Index k : w.negated) moves.try_emplace(k, k);
  for (auto& [i, j] : moves) {
    if (w.negated.contains(j)) j = -j;
  }
  return SymplecticPerm::from_moves(std::move(moves));
}

WreathPair to_wreath(const SymplecticPerm& s) {
  WreathPair w;
  for (const auto& [i, image] : s.moves()) {
    const Index j = abs_index(image);
    if (j != i) w.perm[i] = j;
    if (image < 0) w.negated.insert(j);
  }
  return w;
}

WreathPair wreath_multiply(const WreathPair& a, const WreathPair& b) {
  auto perm_of = [](const WreathPair& w, Index i) {
    auto it = w.perm.find(i);
    return it == w.perm.end() ? i : it->second;
  };
  // b sends i to eb(pb(i)) * pb(i); a then sends that to
  // eb(pb(i)) * ea(pa(pb(i))) * pa(pb(i)). The product's sign at target
  // k = pa(pb(i)) is therefore ea(k) * eb(pa^-1(k)).
  std::set<Index> domain;
  for (const auto& kv : a.perm) domain.insert(kv.first);
  for (const auto& kv : b.perm) domain.insert(kv.first);
  WreathPair out;
  for (Index i : domain) {
    const Index k = perm_of(a, perm_of(b, i));
    if (k != i) out.perm[i] = k;
  }
  std::map<Index, Index> a_inverse;
  for (const auto& [i, j] : a.perm) a_inverse[j] = i;
  std::set<Index> candidates = a.negated;
  for (Index m : b.negated) candidates.insert(perm_of(a, m));
  for (Index k : candidates) {
    auto it = a_inverse.find(k);
    const Index pre = it == a_inverse.end() ? k : it->second;
    if (a.negated.contains(k) != b.negated.contains(pre)) out.negated.insert(k);
  }
  return out;
}

bool weak_membership(const SymplecticPerm& s, const Vertex& base) {
  return same_component(apply_vertex(s, base), base);
}

SymplecticPerm random_symplectic(std::size_t support_bound, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Index> targets(support_bound);
  std::iota(targets.begin(), targets.end(), Index{1});
  std::shuffle(targets.begin(), targets.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::map<Index, Index> moves;
  for (std::size_t k = 0; k < support_bound; ++k) {
    moves[static_cast<Index>(k) + 1] = coin(rng) ? -targets[k] : targets[k];
  }
  return SymplecticPerm::from_moves(std::move(moves));
}

}  // namespace hcube
