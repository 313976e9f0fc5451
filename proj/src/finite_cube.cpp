#include "hcube/finite_cube.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <thread>

#include "hcube/error.hpp"

namespace hcube {

namespace {

void require_dimension(int n, int max, const char* what) {
  if (n < 1 || n > max) {
    throw InputError(std::string(what) + " requires 1 <= n <= " + std::to_string(max) + ", got " + std::to_string(n));
  }
}

bool single_bit(CubeVertex x) { return x != 0 && (x & (x - 1)) == 0; }

bool hamming_one(CubeVertex u, CubeVertex v) { return single_bit(u ^ v); }

// Extends the root assignment (images of 0 and of each unit vector) to the
// whole cube by completing squares: for u with lowest set bits a < b, u is the
// common neighbour of u^a and u^b other than u^a^b, so its image must be the
// common neighbour of their images other than the image of u^a^b.
bool extend_from_root(int n, std::vector<CubeVertex>& image) {
  const CubeVertex count = CubeVertex{1} << n;
  for (CubeVertex u = 3; u < count; ++u) {
    if ((u & (u - 1)) == 0) continue;
    const CubeVertex a = u & (~u + 1);
    const CubeVertex rest = u ^ a;
    const CubeVertex b = rest & (~rest + 1);
    const CubeVertex p = image[u ^ a];
    const CubeVertex q = image[u ^ b];
    const CubeVertex opposite = image[u ^ a ^ b];
    // Two vertices at distance 2 have exactly the two common neighbours
    // p ^ d1 and p ^ d2, where d1, d2 are the bits of p ^ q.
    const CubeVertex d = p ^ q;
    const CubeVertex d1 = d & (~d + 1);
    if (d == 0 || !single_bit(d ^ d1)) return false;
    const CubeVertex first = p ^ d1;
    const CubeVertex second = p ^ (d ^ d1);
    if (first == opposite) {
      image[u] = second;
    } else if (second == opposite) {
      image[u] = first;
    } else {
      return false;
    }
  }
  return true;
}

// Bijective and edge preserving. For a bijection of a finite graph onto
// itself this already implies that non-edges map to non-edges.
bool validate(int n, const std::vector<CubeVertex>& image, std::vector<std::uint64_t>& seen_bits) {
  std::fill(seen_bits.begin(), seen_bits.end(), 0);
  for (CubeVertex v : image) {
    std::uint64_t& word = seen_bits[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (word & bit) return false;
    word |= bit;
  }
  for (CubeVertex u = 0; u < image.size(); ++u) {
    for (int k = 0; k < n; ++k) {
      const CubeVertex v = u ^ (CubeVertex{1} << k);
      if (v > u && !hamming_one(image[u], image[v])) return false;
    }
  }
  return true;
}

// Calls visit(map) for every valid automorphism whose root image is `root`.
template <typename Visit>
void extensions_from(int n, CubeVertex root, Visit&& visit) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  CubeAutomorphism candidate{n, std::vector<CubeVertex>(std::size_t{1} << n)};
  std::vector<std::uint64_t> scratch((candidate.vertex_map.size() + 63) / 64);
  do {
    candidate.vertex_map[0] = root;
    for (int k = 0; k < n; ++k) candidate.vertex_map[CubeVertex{1} << k] = root ^ (CubeVertex{1} << sigma[k]);
    if (extend_from_root(n, candidate.vertex_map) && validate(n, candidate.vertex_map, scratch)) visit(candidate);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

FiniteCube::FiniteCube(int n) : n_(n) { require_dimension(n, max_dimension, "FiniteCube"); }

bool FiniteCube::adjacent(CubeVertex u, CubeVertex v) const { return hamming_one(u, v); }

std::vector<CubeVertex> FiniteCube::neighbors(CubeVertex u) const {
  std::vector<CubeVertex> out;
  for (int k = 0; k < n_; ++k) out.push_back(u ^ (CubeVertex{1} << k));
  return out;
}

bool is_cube_automorphism(const CubeAutomorphism& a) {
  const std::size_t count = std::size_t{1} << a.n;
  if (a.n < 1 || a.vertex_map.size() != count) return false;
  std::vector<CubeVertex> preimage(count, static_cast<CubeVertex>(count));
  for (CubeVertex u = 0; u < count; ++u) {
    const CubeVertex v = a.vertex_map[u];
    if (v >= count || preimage[v] != count) return false;
    preimage[v] = u;
  }
  for (CubeVertex u = 0; u < count; ++u) {
    for (int k = 0; k < a.n; ++k) {
      const CubeVertex v = u ^ (CubeVertex{1} << k);
      if (!hamming_one(a.vertex_map[u], a.vertex_map[v])) return false;
      if (!hamming_one(preimage[u], preimage[v])) return false;
    }
  }
  return true;
}

std::vector<CubeAutomorphism> enumerate_automorphisms_bruteforce(int n) {
  require_dimension(n, 3, "brute-force enumeration");
  CubeAutomorphism candidate{n, std::vector<CubeVertex>(std::size_t{1} << n)};
  std::iota(candidate.vertex_map.begin(), candidate.vertex_map.end(), CubeVertex{0});
  std::vector<CubeAutomorphism> out;
  do {
    if (is_cube_automorphism(candidate)) out.push_back(candidate);
  } while (std::next_permutation(candidate.vertex_map.begin(), candidate.vertex_map.end()));
  return out;
}

std::vector<CubeAutomorphism> enumerate_automorphisms_extension(int n) {
  require_dimension(n, max_listed_dimension, "extension enumeration");
  std::vector<CubeAutomorphism> out;
  for (CubeVertex root = 0; root < (CubeVertex{1} << n); ++root) {
    extensions_from(n, root, [&](const CubeAutomorphism& a) { out.push_back(a); });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_automorphisms_extension(int n) {
  require_dimension(n, 8, "extension count");
  const CubeVertex roots = CubeVertex{1} << n;
  std::atomic<CubeVertex> next{0};
  std::atomic<std::uint64_t> total{0};
  const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(roots)));
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      std::uint64_t local = 0;
      for (CubeVertex root = next++; root < roots; root = next++) {
        extensions_from(n, root, [&](const CubeAutomorphism&) { ++local; });
      }
      total += local;
    });
  }
  pool.clear();
  return total;
}

CubeAutomorphism wreath_to_cube(const WreathPair& w, int n) {
  require_dimension(n, FiniteCube::max_dimension, "wreath_to_cube");
  // Validates the pair as a side effect.
  const SymplecticPerm s = from_wreath(w);
  for (Index k : s.support()) {
    if (k > n) throw InputError("wreath pair moves coordinate " + std::to_string(k) + " beyond n = " + std::to_string(n));
  }
  std::vector<int> target(static_cast<std::size_t>(n));
  CubeVertex flips = 0;
  for (int k = 1; k <= n; ++k) {
    const Index image = s(k);
    target[k - 1] = static_cast<int>(image < 0 ? -image : image) - 1;
    if (image < 0) flips |= CubeVertex{1} << target[k - 1];
  }
  CubeAutomorphism a{n, std::vector<CubeVertex>(std::size_t{1} << n)};
  for (CubeVertex u = 0; u < a.vertex_map.size(); ++u) {
    CubeVertex v = 0;
    for (int k = 0; k < n; ++k) {
      if (u >> k & 1) v |= CubeVertex{1} << target[k];
    }
    a.vertex_map[u] = v ^ flips;
  }
  return a;
}

WreathPair cube_to_wreath(const CubeAutomorphism& a) {
  if (a.n < 1 || a.vertex_map.size() != (std::size_t{1} << a.n)) throw InputError("malformed cube map");
  WreathPair w;
  const CubeVertex flips = a.vertex_map[0];
  for (int k = 0; k < a.n; ++k) {
    const CubeVertex d = a.vertex_map[CubeVertex{1} << k] ^ flips;
    if (std::popcount(d) != 1) throw InputError("cube map is not induced by a wreath pair");
    const Index j = std::countr_zero(d) + 1;
    if (j != k + 1) w.perm[k + 1] = j;
    if (flips >> k & 1) w.negated.insert(k + 1);
  }
  bool induced = false;
  try {
    induced = wreath_to_cube(w, a.n) == a;
  } catch (const InputError&) {
    // Non-injective coordinate images; falls through as not induced.
  }
  if (!induced) throw InputError("cube map is not induced by a wreath pair");
  return w;
}

std::vector<WreathPair> all_wreath_pairs(int n) {
  require_dimension(n, FiniteCube::max_dimension, "all_wreath_pairs");
  std::vector<Index> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), Index{1});
  std::vector<WreathPair> out;
  do {
    for (CubeVertex mask = 0; mask < (CubeVertex{1} << n); ++mask) {
      WreathPair w;
      for (Index k = 1; k <= n; ++k) {
        if (images[k - 1] != k) w.perm[k] = images[k - 1];
        if (mask >> (k - 1) & 1) w.negated.insert(k);
      }
      out.push_back(std::move(w));
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

CubeVertex cube_vertex_from_bits(const std::string& bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(FiniteCube::max_dimension)) {
    throw InputError("bitstring length must be in 1.." + std::to_string(FiniteCube::max_dimension));
  }
  CubeVertex u = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1') {
      u |= CubeVertex{1} << k;
    } else if (bits[k] != '0') {
      throw InputError("bitstring may contain only '0' and '1': " + bits);
    }
  }
  return u;
}

std::string bits_of(CubeVertex u, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int k = 0; k < n; ++k) {
    if (u >> k & 1) out[static_cast<std::size_t>(k)] = '1';
  }
  return out;
}

Vertex embed_cube_vertex(CubeVertex bits, int n, const Vertex& base) {
  require_dimension(n, FiniteCube::max_dimension, "embed_cube_vertex");
  std::map<Index, Sign> updates;
  for (int k = 0; k < n; ++k) {
    if (bits >> k & 1) updates[k + 1] = -base.sign(k + 1);
  }
  return base.with_signs(updates);
}

SymplecticPerm lift_cube_permutation(const CubeAutomorphism& a, const Vertex& base) {
  const SymplecticPerm s = from_wreath(cube_to_wreath(a));
  // Bits are relative to base, so conjugate by the (possibly infinite) sign
  // change that takes the all-positive vertex to base. Only the support of s
  // is affected.
  std::map<Index, Index> moves;
  for (const auto& [i, image] : s.moves()) {
    const Index j = image < 0 ? -image : image;
    moves[i] = (base.sign(i) * base.sign(j)) * image;
  }
  return SymplecticPerm::from_moves(std::move(moves));
}

AutomorphismOracle lift_cube_automorphism(const CubeAutomorphism& a, const Vertex& base) {
  return AutomorphismOracle::regular(lift_cube_permutation(a, base));
}

}  // namespace hcube
