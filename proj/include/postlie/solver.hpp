#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "postlie/mateq.hpp"

namespace postlie {

struct SolveResult {
  Mat3d a_final;
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  std::optional<ClassificationReport> classification;
  std::string classification_error;  // set when a converged point failed to classify
};

struct SurveyReport {
  int starts = 0;
  int converged_count = 0;  // = sum of histogram counts + unclassified
  std::map<std::string, int> family_histogram;
  std::vector<ComplexValue> k_values;
  int failures = 0;      // starts that did not converge
  int unclassified = 0;  // converged points the classifier rejected; 0 when the classification is complete
};

struct SearchOptions {
  int starts = 500;
  std::uint64_t seed = 0;
  double radius = 2.0;
  double tol = 1e-12;
  int max_iter = 100;
  double classify_tol = 1e-6;
  int threads = 1;
};

namespace solver {

using Jacobian = Eigen::Matrix<double, 18, 18>;
using RealVec = Eigen::Matrix<double, 18, 1>;

/// Real parts of the entries (row-major) followed by imaginary parts.
RealVec pack(const Mat3d& a);
Mat3d unpack(const RealVec& x);

/// d pack(residual(A)) / d pack(A), analytic.
Jacobian residual_jacobian(const Mat3d& a);

/// Damped Newton on pack(residual) = 0. Steps are halved down to 2^-20 until the
/// residual norm drops; near-singular Jacobians use (J'J + 1e-10 I) dx = -J'F.
/// Converged points are classified at classify_tol.
SolveResult newton_solve(const Mat3d& a0, int max_iter = 50, double tol = 1e-12, double classify_tol = 1e-6);

/// The start matrix of start `index`: entries uniform in the complex disk.
Mat3d start_point(std::uint64_t seed, int index, double radius);

/// Runs newton_solve from opts.starts seeded start points and tallies the
/// families reached. The report does not depend on opts.threads.
SurveyReport multistart(const SearchOptions& opts);

/// Same, also returning every individual result in start order.
SurveyReport multistart(const SearchOptions& opts, std::vector<SolveResult>& results);

}  // namespace solver
}  // namespace postlie
