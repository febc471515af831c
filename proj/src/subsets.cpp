#include "monochrome/subsets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "monochrome/counting.hpp"
#include "monochrome/errors.hpp"

namespace mono {

namespace {

class SubsetWalker {
 public:
  SubsetWalker(const HostGraph& g, int k)
      : g_(g), k_(k), words_(g.words()), ext_(static_cast<std::size_t>(k) * words_),
        nbhd_(static_cast<std::size_t>(k) * words_), above_(words_), sub_(static_cast<std::size_t>(k)),
        sorted_(static_cast<std::size_t>(k)) {}

  void run_root(Vertex root, const std::function<void(std::span<const Vertex>)>& visit) {
    std::fill(above_.begin(), above_.end(), 0);
    for (std::size_t w = 0; w < words_; ++w) {
      const std::size_t lo = w * 64;
      if (lo + 64 <= root + 1) continue;
      Word m = g_.all()[w];
      if (lo <= root) m &= ~((Word{2} << (root - lo)) - 1);
      above_[w] = m;
    }
    sub_[0] = root;
    auto r = g_.row(root);
    for (std::size_t w = 0; w < words_; ++w) {
      ext_[w] = r[w] & above_[w];
      nbhd_[w] = r[w];
    }
    nbhd_[root >> 6] |= Word{1} << (root & 63);
    extend(1, visit);
  }

 private:
  void extend(int size, const std::function<void(std::span<const Vertex>)>& visit) {
    if (size == k_) {
      std::copy(sub_.begin(), sub_.end(), sorted_.begin());
      std::sort(sorted_.begin(), sorted_.end());
      visit(sorted_);
      return;
    }
    Word* ext = ext_.data() + static_cast<std::size_t>(size - 1) * words_;
    const Word* nbhd = nbhd_.data() + static_cast<std::size_t>(size - 1) * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      while (ext[w]) {
        const Vertex x = static_cast<Vertex>(w * 64 + std::countr_zero(ext[w]));
        ext[w] &= ext[w] - 1;
        if (size + 1 < k_) {
          Word* next_ext = ext_.data() + static_cast<std::size_t>(size) * words_;
          Word* next_nbhd = nbhd_.data() + static_cast<std::size_t>(size) * words_;
          auto r = g_.row(x);
          for (std::size_t u = 0; u < words_; ++u) {
            next_ext[u] = ext[u] | (r[u] & ~nbhd[u] & above_[u]);
            next_nbhd[u] = nbhd[u] | r[u];
          }
        }
        sub_[size] = x;
        extend(size + 1, visit);
      }
    }
  }

  const HostGraph& g_;
  int k_;
  std::size_t words_;
  std::vector<Word> ext_;
  std::vector<Word> nbhd_;
  std::vector<Word> above_;
  std::vector<Vertex> sub_;
  std::vector<Vertex> sorted_;
};

std::uint64_t induced_code(const HostGraph& g, std::span<const Vertex> s) {
  std::uint64_t code = 0;
  int bit = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b, ++bit) {
      if (g.adjacent(s[a], s[b])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

}  // namespace

void for_each_connected_subset(const HostGraph& g, int k,
                               const std::function<void(std::span<const Vertex>)>& visit) {
  if (k <= 0 || static_cast<std::size_t>(k) > g.size()) return;
  SubsetWalker walker(g, k);
  for (Vertex root = 0; root < g.size(); ++root) walker.run_root(root, visit);
}

std::uint64_t SubsetProfile::total_copies() const {
  return std::accumulate(copies.begin(), copies.end(), std::uint64_t{0});
}

SubsetProfile subset_profile(const Pattern& pattern, const HostGraph& g, std::size_t max_subsets) {
  const int k = pattern.order();
  SubsetProfile out;
  out.subset_size = k;
  if (static_cast<std::size_t>(k) > g.size()) return out;
  const long n = static_cast<long>(g.size());
  std::vector<std::vector<Vertex>> root_vertices(static_cast<std::size_t>(n));
  std::vector<std::vector<std::uint64_t>> root_copies(static_cast<std::size_t>(n));
  std::size_t stored = 0;
  bool over_budget = false;
#pragma omp parallel
  {
    SubsetWalker walker(g, k);
    std::unordered_map<std::uint64_t, std::uint64_t> cache;
#pragma omp for schedule(dynamic, 4)
    for (long root = 0; root < n; ++root) {
      bool stop = false;
#pragma omp atomic read
      stop = over_budget;
      if (stop) continue;
      auto& verts = root_vertices[root];
      auto& copies = root_copies[root];
      walker.run_root(static_cast<Vertex>(root), [&](std::span<const Vertex> s) {
        const std::uint64_t code = induced_code(g, s);
        auto it = cache.find(code);
        if (it == cache.end()) {
          const std::uint64_t homs = serial::count_injective_homs(pattern.graph(), to_host(induced_small(g, s)));
          it = cache.emplace(code, homs / pattern.automorphisms()).first;
        }
        if (it->second == 0) return;
        verts.insert(verts.end(), s.begin(), s.end());
        copies.push_back(it->second);
      });
      std::size_t total = 0;
#pragma omp atomic capture
      total = stored += copies.size();
      if (total > max_subsets) {
#pragma omp atomic write
        over_budget = true;
      }
    }
  }
  if (over_budget) {
    throw BudgetExceeded("more than " + std::to_string(max_subsets) +
                         " vertex subsets carry a copy of the pattern; use a smaller host graph");
  }
  for (long root = 0; root < n; ++root) {
    out.vertices.insert(out.vertices.end(), root_vertices[root].begin(), root_vertices[root].end());
    out.copies.insert(out.copies.end(), root_copies[root].begin(), root_copies[root].end());
  }
  return out;
}

}  // namespace mono
