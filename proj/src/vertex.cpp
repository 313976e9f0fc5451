#include "hcube/vertex.hpp"

#include <algorithm>
#include <set>

#include "hcube/error.hpp"

namespace hcube {

namespace {

void require_positive(Index i, const char* what) {
  if (i < 1) throw InputError(std::string(what) + " must be a positive index, got " + std::to_string(i));
}

// Smallest d dividing the length such that the pattern is d-periodic.
std::vector<Sign> reduce_to_minimal_period(const std::vector<Sign>& pattern) {
  const std::size_t p = pattern.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (std::size_t r = d; r < p && periodic; ++r) periodic = pattern[r] == pattern[r % d];
    if (periodic) return {pattern.begin(), pattern.begin() + static_cast<std::ptrdiff_t>(d)};
  }
  return pattern;
}

}  // namespace

Vertex::Vertex() = default;

Vertex Vertex::from_rule(SignRule rule) {
  if (rule.period < 1) throw InputError("period must be >= 1, got " + std::to_string(rule.period));
  if (static_cast<std::int64_t>(rule.pattern.size()) != rule.period) {
    throw InputError("pattern length " + std::to_string(rule.pattern.size()) + " does not match period " +
                     std::to_string(rule.period));
  }
  for (const auto& [key, sign] : rule.overrides) require_positive(key, "override key");
  Vertex v;
  v.pattern_ = std::move(rule.pattern);
  v.overrides_ = std::move(rule.overrides);
  v.canonicalize();
  return v;
}

void Vertex::canonicalize() {
  pattern_ = reduce_to_minimal_period(pattern_);
  std::erase_if(overrides_, [this](const auto& kv) { return kv.second == pattern_sign(kv.first); });
}

Sign Vertex::pattern_sign(Index i) const {
  return pattern_[static_cast<std::size_t>((i - 1) % period())];
}

Sign Vertex::sign(Index i) const {
  require_positive(i, "coordinate");
  if (auto it = overrides_.find(i); it != overrides_.end()) return it->second;
  return pattern_sign(i);
}

bool Vertex::contains(Index i) const {
  if (i == 0) throw InputError("0 is not an element of Z\\{0}");
  return sign(i < 0 ? -i : i) == sign_of(i);
}

Vertex Vertex::with_signs(const std::map<Index, Sign>& updates) const {
  Vertex v = *this;
  for (const auto& [i, s] : updates) {
    require_positive(i, "coordinate");
    if (s == pattern_sign(i)) {
      v.overrides_.erase(i);
    } else {
      v.overrides_[i] = s;
    }
  }
  return v;
}

std::string Vertex::pattern_string() const {
  std::string out;
  out.reserve(pattern_.size());
  for (Sign s : pattern_) out.push_back(s == Sign::plus ? '+' : '-');
  return out;
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
  if (auto c = a.period() <=> b.period(); c != 0) return c;
  if (auto c = a.pattern_ <=> b.pattern_; c != 0) return c;
  return a.overrides_ <=> b.overrides_;
}

Vertex make_vertex(SignRule rule) { return Vertex::from_rule(std::move(rule)); }

Vertex vertex_from_elements(std::span<const Index> elements, const Vertex& background) {
  std::map<Index, Sign> signs;
  for (Index e : elements) {
    if (e == 0) throw InputError("0 is not an element of Z\\{0}");
    const Index i = e < 0 ? -e : e;
    auto [it, inserted] = signs.emplace(i, sign_of(e));
    if (!inserted && it->second != sign_of(e)) {
      throw InputError("element set is not singular: contains both " + std::to_string(i) + " and " +
                       std::to_string(-i));
    }
  }
  return background.with_signs(signs);
}

bool contains(const Vertex& v, Index i) { return v.contains(i); }

Vertex flip(const Vertex& v, Index i) {
  require_positive(i, "flip index");
  return v.with_signs({{i, -v.sign(i)}});
}

std::optional<std::vector<Index>> differing_indices(const Vertex& v, const Vertex& w) {
  // Canonical patterns are minimal-period representatives, so the periodic
  // parts agree everywhere iff they are identical.
  if (v.pattern() != w.pattern()) return std::nullopt;
  std::set<Index> candidates;
  for (const auto& kv : v.overrides()) candidates.insert(kv.first);
  for (const auto& kv : w.overrides()) candidates.insert(kv.first);
  std::vector<Index> out;
  for (Index i : candidates) {
    if (v.sign(i) != w.sign(i)) out.push_back(i);
  }
  return out;
}

bool same_component(const Vertex& v, const Vertex& w) { return v.pattern() == w.pattern(); }

Distance distance(const Vertex& v, const Vertex& w) {
  auto diff = differing_indices(v, w);
  if (!diff) return std::nullopt;
  return diff->size();
}

bool adjacent(const Vertex& v, const Vertex& w) { return distance(v, w) == Distance{1}; }

std::vector<Index> normalize_window(std::span<const Index> window) {
  std::vector<Index> out(window.begin(), window.end());
  for (Index i : out) require_positive(i, "window index");
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> neighbors_in_window(const Vertex& v, std::span<const Index> window) {
  std::vector<Vertex> out;
  for (Index i : normalize_window(window)) out.push_back(flip(v, i));
  return out;
}

std::vector<Vertex> ball(const Vertex& v, std::size_t radius, std::span<const Index> window) {
  const std::vector<Index> w = normalize_window(window);
  std::vector<Vertex> out{v};
  // Index subsets of each size k in lexicographic order.
  for (std::size_t k = 1; k <= std::min(radius, w.size()); ++k) {
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    while (true) {
      std::map<Index, Sign> updates;
      for (std::size_t j : pick) updates.emplace(w[j], -v.sign(w[j]));
      out.push_back(v.with_signs(updates));
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == w.size() - k + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t m = j; m < k; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return out;
}

Vertex alternating_vertex() { return make_vertex({2, {Sign::plus, Sign::minus}, {}}); }

}  // namespace hcube
