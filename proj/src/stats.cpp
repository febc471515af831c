#include "monochrome/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monochrome/errors.hpp"

namespace mono {

std::vector<double> empirical_moments(std::span<const double> x, int r_max) {
  if (r_max < 1 || r_max > 6) throw InputError("moment order must lie in 1..6");
  std::vector<double> out(static_cast<std::size_t>(r_max), 0.0);
  if (x.empty()) return out;
  for (double value : x) {
    double p = 1;
    for (int r = 0; r < r_max; ++r) {
      p *= value;
      out[r] += p;
    }
  }
  for (double& m : out) m /= static_cast<double>(x.size());
  return out;
}

double wasserstein1_empirical(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InputError("Wasserstein distance needs non-empty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x.size() == y.size()) {
    double sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::abs(x[i] - y[i]);
    return sum / static_cast<double>(x.size());
  }
  // Integrate |F_x - F_y| between consecutive merged jump points.
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double total = 0;
  double prev = std::min(x.front(), y.front());
  while (i < x.size() || j < y.size()) {
    const double next = (j == y.size() || (i < x.size() && x[i] <= y[j])) ? x[i] : y[j];
    total += std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny) * (next - prev);
    while (i < x.size() && x[i] == next) ++i;
    while (j < y.size() && y[j] == next) ++j;
    prev = next;
  }
  return total;
}

double tv_lattice(std::span<const double> p, std::span<const double> q) {
  const std::size_t len = std::max(p.size(), q.size());
  double sum = 0;
  for (std::size_t k = 0; k < len; ++k) {
    const double a = k < p.size() ? p[k] : 0.0;
    const double b = k < q.size() ? q[k] : 0.0;
    sum += std::abs(a - b);
  }
  return 0.5 * sum;
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InputError("KS statistic needs non-empty samples");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double best = 0;
  while (i < x.size() || j < y.size()) {
    const double next = (j == y.size() || (i < x.size() && x[i] <= y[j])) ? x[i] : y[j];
    while (i < x.size() && x[i] == next) ++i;
    while (j < y.size() && y[j] == next) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return best;
}

std::vector<double> empirical_pmf(std::span<const double> x) {
  std::vector<double> pmf;
  for (double value : x) {
    if (value < 0 || value != std::floor(value)) throw InputError("pmf needs non-negative integer samples");
    const auto k = static_cast<std::size_t>(value);
    if (k >= pmf.size()) pmf.resize(k + 1, 0.0);
    pmf[k] += 1;
  }
  for (double& p : pmf) p /= static_cast<double>(x.size());
  return pmf;
}

Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m, double tolerance) {
  if (m.rows() != m.cols()) throw InputError("eigenvalues need a square matrix");
  const double asym = m.size() == 0 ? 0.0 : (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > tolerance) {
    throw InputError("matrix is not symmetric (max |M - M^T| = " + std::to_string(asym) + ")");
  }
  Spectrum out;
  if (m.size() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  const Eigen::VectorXd& values = solver.eigenvalues();
  out.residual = (m * solver.eigenvectors() - solver.eigenvectors() * values.asDiagonal()).norm();
  out.values.assign(values.data(), values.data() + values.size());
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

ComparisonReport compare(std::string statistic, double value, double threshold, std::size_t size_a,
                         std::size_t size_b) {
  return {std::move(statistic), value, threshold, value <= threshold, size_a, size_b};
}

}  // namespace mono
