#include "monochrome/embedding.hpp"

#include <algorithm>
#include <bit>

#include "monochrome/errors.hpp"

namespace mono {

EmbeddingCounter::EmbeddingCounter(const SmallGraph& pattern, MapKind kind, std::span<const int> pinned)
    : order_(pattern.order()), pinned_(static_cast<int>(pinned.size())), kind_(kind) {
  std::uint64_t placed = 0;
  for (int p : pinned) {
    if (p < 0 || p >= order_ || ((placed >> p) & 1U)) {
      throw InputError("pinned pattern vertices must be distinct and in range");
    }
    sequence_.push_back(p);
    placed |= std::uint64_t{1} << p;
  }
  // Greedy connected ordering: most placed neighbours first, then degree.
  while (static_cast<int>(sequence_.size()) < order_) {
    int best = -1, best_links = -1, best_degree = -1;
    for (int x = 0; x < order_; ++x) {
      if ((placed >> x) & 1U) continue;
      int links = std::popcount(pattern.neighbors(x) & placed);
      int deg = pattern.degree(x);
      if (links > best_links || (links == best_links && deg > best_degree)) {
        best = x;
        best_links = links;
        best_degree = deg;
      }
    }
    sequence_.push_back(best);
    placed |= std::uint64_t{1} << best;
  }
  back_adjacent_.assign(order_, 0);
  back_nonadjacent_.assign(order_, 0);
  for (int d = 0; d < order_; ++d) {
    for (int e = 0; e < d; ++e) {
      if (pattern.adjacent(sequence_[d], sequence_[e])) {
        back_adjacent_[d] |= std::uint64_t{1} << e;
      } else {
        back_nonadjacent_[d] |= std::uint64_t{1} << e;
      }
    }
  }
  image_by_depth_.assign(order_, 0);
  image_by_vertex_.assign(order_, 0);
}

void EmbeddingCounter::reserve(const HostGraph& g) {
  if (words_ == g.words() && !candidates_.empty()) return;
  words_ = g.words();
  candidates_.assign(static_cast<std::size_t>(std::max(order_, 1)) * words_, 0);
  used_.assign(words_, 0);
}

bool EmbeddingCounter::place_pins(const HostGraph& g, std::span<const Vertex> images,
                                  std::span<const Word> allowed) {
  if (static_cast<int>(images.size()) != pinned_) {
    throw InputError("expected " + std::to_string(pinned_) + " pinned images");
  }
  std::fill(used_.begin(), used_.end(), 0);
  for (int d = 0; d < pinned_; ++d) {
    Vertex x = images[d];
    if (x >= g.size()) throw InputError("pinned image " + std::to_string(x) + " out of range");
    if (!allowed.empty() && !((allowed[x >> 6] >> (x & 63)) & 1U)) return false;
    for (int e = 0; e < d; ++e) {
      Vertex y = image_by_depth_[e];
      bool adj = g.adjacent(x, y);
      if (((back_adjacent_[d] >> e) & 1U) && !adj) return false;
      if (kind_ == MapKind::induced && ((back_nonadjacent_[d] >> e) & 1U) && adj) return false;
      if (kind_ != MapKind::homomorphism && x == y) return false;
    }
    image_by_depth_[d] = x;
    image_by_vertex_[sequence_[d]] = x;
    used_[x >> 6] |= Word{1} << (x & 63);
  }
  return true;
}

void EmbeddingCounter::fill_candidates(const HostGraph& g, int depth, std::span<const Word> allowed) {
  Word* cand = candidates_.data() + static_cast<std::size_t>(depth) * words_;
  std::span<const Word> base = allowed.empty() ? g.all() : allowed;
  std::copy(base.begin(), base.end(), cand);
  for (std::uint64_t m = back_adjacent_[depth]; m; m &= m - 1) {
    auto r = g.row(image_by_depth_[std::countr_zero(m)]);
    for (std::size_t w = 0; w < words_; ++w) cand[w] &= r[w];
  }
  if (kind_ == MapKind::induced) {
    for (std::uint64_t m = back_nonadjacent_[depth]; m; m &= m - 1) {
      auto r = g.row(image_by_depth_[std::countr_zero(m)]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~r[w];
    }
  }
  if (kind_ != MapKind::homomorphism) {
    for (std::size_t w = 0; w < words_; ++w) cand[w] &= ~used_[w];
  }
}

std::uint64_t EmbeddingCounter::count_from(const HostGraph& g, int depth, std::span<const Word> allowed) {
  fill_candidates(g, depth, allowed);
  const Word* cand = candidates_.data() + static_cast<std::size_t>(depth) * words_;
  if (depth == order_ - 1) {
    std::uint64_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::uint64_t>(std::popcount(cand[w]));
    return total;
  }
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    for (Word bits = cand[w]; bits; bits &= bits - 1) {
      Vertex x = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
      image_by_depth_[depth] = x;
      used_[w] |= Word{1} << (x & 63);
      total += count_from(g, depth + 1, allowed);
      used_[w] &= ~(Word{1} << (x & 63));
    }
  }
  return total;
}

std::uint64_t EmbeddingCounter::count(const HostGraph& g, std::span<const Vertex> images,
                                      std::span<const Word> allowed) {
  reserve(g);
  if (!place_pins(g, images, allowed)) return 0;
  if (pinned_ == order_) return 1;
  return count_from(g, pinned_, allowed);
}

void EmbeddingCounter::enumerate_from(const HostGraph& g, int depth, std::span<const Word> allowed,
                                      const std::function<void(std::span<const Vertex>)>& visit) {
  if (depth == order_) {
    visit(image_by_vertex_);
    return;
  }
  fill_candidates(g, depth, allowed);
  const Word* cand = candidates_.data() + static_cast<std::size_t>(depth) * words_;
  for (std::size_t w = 0; w < words_; ++w) {
    for (Word bits = cand[w]; bits; bits &= bits - 1) {
      Vertex x = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
      image_by_depth_[depth] = x;
      image_by_vertex_[sequence_[depth]] = x;
      used_[w] |= Word{1} << (x & 63);
      enumerate_from(g, depth + 1, allowed, visit);
      used_[w] &= ~(Word{1} << (x & 63));
    }
  }
}

void EmbeddingCounter::enumerate(const HostGraph& g, std::span<const Vertex> images,
                                 const std::function<void(std::span<const Vertex>)>& visit,
                                 std::span<const Word> allowed) {
  reserve(g);
  if (!place_pins(g, images, allowed)) return;
  enumerate_from(g, pinned_, allowed, visit);
}

}  // namespace mono
