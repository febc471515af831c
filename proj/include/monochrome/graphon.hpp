#pragma once

#include <vector>

#include <Eigen/Dense>

#include "monochrome/constructions.hpp"
#include "monochrome/graph.hpp"

namespace mono {

/// Piecewise-constant graphon: block k occupies an interval of measure
/// sizes[k] and W equals values(a,b) on block a x block b.
class StepGraphon {
 public:
  StepGraphon() = default;
  /// Validates: positive sizes summing to 1 (1e-12), symmetric values in [0,1].
  StepGraphon(Eigen::VectorXd sizes, Eigen::MatrixXd values);

  static StepGraphon constant(double p);
  /// 1{(x-1/2)(y-1/2) <= 0}: two halves, edges only across.
  static StepGraphon bipartite();
  /// k equal blocks, value 1 off the diagonal blocks and 0 on them.
  static StepGraphon multipartite(int k);
  /// f^G: one block of measure 1/n per vertex, values = adjacency.
  static StepGraphon from_graph(const HostGraph& g);

  int blocks() const { return static_cast<int>(sizes_.size()); }
  const Eigen::VectorXd& sizes() const { return sizes_; }
  const Eigen::MatrixXd& values() const { return values_; }

 private:
  Eigen::VectorXd sizes_;
  Eigen::MatrixXd values_;
};

/// Block-constant symmetric kernel with arbitrary real values (e.g. W_H).
struct StepKernel {
  Eigen::VectorXd sizes;
  Eigen::MatrixXd values;
};

/// Upper limit on k^{|V(F)|} block assignments per density evaluation.
inline constexpr double kMaxBlockAssignments = 1e8;

// t(F,W) and t_ind(F,W). Throws BudgetExceeded above kMaxBlockAssignments.
double density_W(const SmallGraph& f, const StepGraphon& w);
double induced_density_W(const SmallGraph& f, const StepGraphon& w);
/// t(F,W) where parallel edges each contribute their own factor of W.
double density_W(const MultiEdgeGraph& f, const StepGraphon& w);

/// t_{u,v}(x,y,H,W) on block pairs: entry (a,b) is the value for x in block a
/// and y in block b. Not symmetric in general; transposing swaps u and v.
Eigen::MatrixXd two_point_function(const Pattern& pattern, int u, int v, const StepGraphon& w);

/// W_H = (1 / 2|Aut(H)|) sum over ordered u != v of t_{u,v}.
StepKernel kernel_WH(const Pattern& pattern, const StepGraphon& w);

/// Nonzero eigenvalues (|lambda| >= 1e-10) of the integral operator of K,
/// descending.
std::vector<double> kernel_eigenvalues(const StepKernel& kernel);

}  // namespace mono
