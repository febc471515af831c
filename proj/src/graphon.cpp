#include "monochrome/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monochrome/errors.hpp"
#include "monochrome/stats.hpp"

namespace mono {

namespace {

// Sum over block assignments of prod W^mult(edge) [prod (1-W) over non-edges]
// times the block measures of the free vertices. Vertices 0..pins-1 have
// fixed blocks and carry no measure.
class BlockSum {
 public:
  BlockSum(const StepGraphon& w, std::vector<std::vector<int>> multiplicity, bool induced, int pins)
      : w_(w), mult_(std::move(multiplicity)), induced_(induced), pins_(pins),
        order_(static_cast<int>(mult_.size())), block_(static_cast<std::size_t>(order_), 0) {
    const double assignments = std::pow(static_cast<double>(w.blocks()), order_ - pins);
    if (assignments > kMaxBlockAssignments) {
      throw BudgetExceeded("density of a " + std::to_string(order_) + "-vertex graph over " +
                           std::to_string(w.blocks()) + " blocks needs " + std::to_string(assignments) +
                           " block assignments; coarsen the graphon");
    }
  }

  double evaluate(std::span<const int> pinned_blocks) {
    double weight = 1;
    for (int d = 0; d < pins_; ++d) {
      block_[d] = pinned_blocks[d];
      weight *= factor(d);
      if (weight == 0) return 0;
    }
    return recurse(pins_, weight);
  }

 private:
  double factor(int d) const {
    double f = 1;
    const auto& vals = w_.values();
    for (int e = 0; e < d; ++e) {
      const double x = vals(block_[e], block_[d]);
      const int m = mult_[d][e];
      if (m > 0) {
        for (int r = 0; r < m; ++r) f *= x;
      } else if (induced_) {
        f *= 1 - x;
      }
    }
    return f;
  }

  double recurse(int d, double weight) {
    if (d == order_) return weight;
    double total = 0;
    for (int b = 0; b < w_.blocks(); ++b) {
      block_[d] = b;
      const double next = weight * w_.sizes()[b] * factor(d);
      if (next != 0) total += recurse(d + 1, next);
    }
    return total;
  }

  const StepGraphon& w_;
  std::vector<std::vector<int>> mult_;
  bool induced_;
  int pins_;
  int order_;
  std::vector<int> block_;
};

std::vector<std::vector<int>> multiplicity_of(const SmallGraph& f, std::span<const int> order) {
  const int v = f.order();
  std::vector<std::vector<int>> m(v, std::vector<int>(v, 0));
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) m[a][b] = f.adjacent(order[a], order[b]) ? 1 : 0;
  }
  return m;
}

std::vector<int> identity_order(int v) {
  std::vector<int> order(v);
  for (int i = 0; i < v; ++i) order[i] = i;
  return order;
}

}  // namespace

StepGraphon::StepGraphon(Eigen::VectorXd sizes, Eigen::MatrixXd values)
    : sizes_(std::move(sizes)), values_(std::move(values)) {
  const auto k = sizes_.size();
  if (k == 0) throw InputError("graphon needs at least one block");
  if (values_.rows() != k || values_.cols() != k) {
    throw InputError("graphon values must be a " + std::to_string(k) + "x" + std::to_string(k) + " matrix");
  }
  for (Eigen::Index a = 0; a < k; ++a) {
    if (!(sizes_[a] > 0)) throw InputError("graphon block sizes must be positive");
  }
  if (std::abs(sizes_.sum() - 1.0) > 1e-12) {
    throw InputError("graphon block sizes sum to " + std::to_string(sizes_.sum()) + ", not 1");
  }
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) {
      const double x = values_(a, b);
      if (!(x >= 0 && x <= 1)) throw InputError("graphon values must lie in [0,1]");
      if (x != values_(b, a)) throw InputError("graphon values must be symmetric");
    }
  }
}

StepGraphon StepGraphon::constant(double p) {
  return StepGraphon(Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Constant(1, 1, p));
}

StepGraphon StepGraphon::bipartite() { return multipartite(2); }

StepGraphon StepGraphon::multipartite(int k) {
  if (k < 1) throw InputError("multipartite graphon needs k >= 1");
  Eigen::MatrixXd values = Eigen::MatrixXd::Ones(k, k);
  values.diagonal().setZero();
  Eigen::VectorXd sizes = Eigen::VectorXd::Constant(k, 1.0 / k);
  sizes[k - 1] = 1.0 - sizes.head(k - 1).sum();
  return StepGraphon(sizes, values);
}

StepGraphon StepGraphon::from_graph(const HostGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    values(e.u, e.v) = 1;
    values(e.v, e.u) = 1;
  }
  Eigen::VectorXd sizes = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  sizes[n - 1] = 1.0 - sizes.head(n - 1).sum();
  return StepGraphon(sizes, values);
}

double density_W(const SmallGraph& f, const StepGraphon& w) {
  const auto order = identity_order(f.order());
  return BlockSum(w, multiplicity_of(f, order), false, 0).evaluate({});
}

double induced_density_W(const SmallGraph& f, const StepGraphon& w) {
  const auto order = identity_order(f.order());
  return BlockSum(w, multiplicity_of(f, order), true, 0).evaluate({});
}

double density_W(const MultiEdgeGraph& f, const StepGraphon& w) {
  std::vector<std::vector<int>> m(f.order, std::vector<int>(f.order, 0));
  for (const Edge& e : f.edges) {
    if (e.u == e.v) throw InputError("multigraph density does not accept loops");
    ++m[e.u][e.v];
    ++m[e.v][e.u];
  }
  return BlockSum(w, std::move(m), false, 0).evaluate({});
}

Eigen::MatrixXd two_point_function(const Pattern& pattern, int u, int v, const StepGraphon& w) {
  const int order = pattern.order();
  if (u == v) throw InputError("two-point function needs distinct pattern vertices");
  if (u < 0 || v < 0 || u >= order || v >= order) throw InputError("two-point function vertex out of range");
  std::vector<int> sequence{u, v};
  for (int x = 0; x < order; ++x) {
    if (x != u && x != v) sequence.push_back(x);
  }
  BlockSum sum(w, multiplicity_of(pattern.graph(), sequence), false, 2);
  const int k = w.blocks();
  Eigen::MatrixXd out(k, k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      const int pins[] = {a, b};
      out(a, b) = sum.evaluate(pins);
    }
  }
  return out;
}

StepKernel kernel_WH(const Pattern& pattern, const StepGraphon& w) {
  const int order = pattern.order();
  const int k = w.blocks();
  Eigen::MatrixXd total = Eigen::MatrixXd::Zero(k, k);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      const Eigen::MatrixXd t = two_point_function(pattern, u, v, w);
      total += t + t.transpose();
    }
  }
  total /= 2.0 * static_cast<double>(pattern.automorphisms());
  return {w.sizes(), total};
}

std::vector<double> kernel_eigenvalues(const StepKernel& kernel) {
  const Eigen::VectorXd root = kernel.sizes.cwiseSqrt();
  Eigen::MatrixXd m = root.asDiagonal() * kernel.values * root.asDiagonal();
  m = 0.5 * (m + m.transpose());
  std::vector<double> out;
  for (double x : symmetric_eigenvalues(m).values) {
    if (std::abs(x) >= 1e-10) out.push_back(x);
  }
  return out;
}

}  // namespace mono
