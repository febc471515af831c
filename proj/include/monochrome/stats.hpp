#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace mono {

/// Raw moments E X^r for r = 1..r_max (r_max <= 6).
std::vector<double> empirical_moments(std::span<const double> x, int r_max);

/// W1 between two empirical measures on the line. Equal-size samples use the
/// sorted-sample coupling; unequal sizes integrate |F_a - F_b| exactly.
double wasserstein1_empirical(std::span<const double> a, std::span<const double> b);

/// Half the l1 distance between two pmfs on {0,1,...}; the shorter table is
/// padded with zeros.
double tv_lattice(std::span<const double> p, std::span<const double> q);

/// sup_x |F_a(x) - F_b(x)| for the two empirical CDFs.
double ks_statistic(std::span<const double> a, std::span<const double> b);

/// Normalised histogram of non-negative integer samples.
std::vector<double> empirical_pmf(std::span<const double> x);

struct Spectrum {
  std::vector<double> values;  // descending
  double residual = 0;         // ||M V - V diag(values)||_F
};

/// Full spectrum of a symmetric matrix. Throws InputError if any |M_ij - M_ji|
/// exceeds `tolerance`.
Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m, double tolerance = 1e-10);

struct ComparisonReport {
  std::string statistic;
  double value = 0;
  double threshold = 0;
  bool pass = false;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

ComparisonReport compare(std::string statistic, double value, double threshold, std::size_t size_a,
                         std::size_t size_b);

}  // namespace mono
