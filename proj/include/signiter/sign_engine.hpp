#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "signiter/pade.hpp"
#include "signiter/poly.hpp"

namespace signiter {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class IterationStatus { converged, max_iterations, singular_step, diverged };

std::string_view to_string(IterationStatus status);

struct ConvergenceReport {
  int iterate_count = 0;
  /// Relative change |x_{k+1} - x_k| / |x_{k+1}| of each step taken.
  std::vector<double> step_norms;
  /// |S^2 - I| / |S|^2 at the last iterate (Frobenius norm for matrices).
  double final_residual_sq = 0.0;
  std::optional<double> estimated_order;
  IterationStatus status = IterationStatus::max_iterations;
};

/// Default relative step tolerance for a problem of dimension `dim`.
double default_tolerance(std::size_t dim);
inline constexpr int kDefaultMaxIter = 60;

/// +1 or -1, the nearest square root of unity. Throws std::domain_error on
/// the imaginary axis.
int scalar_sign(Complex z);

/// Coefficients converted to double, ascending powers.
std::vector<double> to_double_coeffs(const Poly& p);

/// Horner evaluation with real coefficients.
Complex eval_poly(std::span<const double> coeffs, Complex z);

struct ScalarRun {
  Complex value;
  /// z_0, z_1, ..., z_{iterate_count}.
  std::vector<Complex> iterates;
  ConvergenceReport report;
};

/// Runs z_{k+1} = num(z_k) / den(z_k) until the relative step is at most
/// `tol` or `max_iter` steps were taken. The order estimate uses the errors
/// |z_k - sign(z_final)|.
ScalarRun scalar_iterate(const IterationSpec& spec, Complex z0, double tol, int max_iter = kDefaultMaxIter);

/// Least-squares slope of log e_{k+1} against log e_k over the errors in
/// (100 eps, 1). Empty when fewer than three such errors remain.
std::optional<double> estimate_order(std::span<const double> errors);

/// p(X) by Horner's scheme.
DenseMatrix matrix_poly_eval(const Poly& p, const DenseMatrix& x);
DenseMatrix matrix_poly_eval(std::span<const double> coeffs, const DenseMatrix& x);

struct MatrixRun {
  DenseMatrix value;
  ConvergenceReport report;
};

/// X_0 = A, X_{k+1} = den(X_k)^{-1} num(X_k) via LU with partial pivoting,
/// until |X_{k+1} - X_k|_F <= tol |X_{k+1}|_F. Convergence is only local;
/// no scaling is applied. Throws std::invalid_argument for non-square A.
MatrixRun matrix_sign_iterate(const IterationSpec& spec, const DenseMatrix& a, double tol,
                              int max_iter = kDefaultMaxIter);

struct SignResiduals {
  double involution = 0.0;   // |S^2 - I|_F / max(1, |S|_F^2)
  double commutation = 0.0;  // |SA - AS|_F / (|S|_F |A|_F)
};

SignResiduals sign_residuals(const DenseMatrix& s, const DenseMatrix& a);

struct TestMatrix {
  DenseMatrix a;
  DenseMatrix expected_sign;
  DenseMatrix basis;  // V in A = V D V^{-1}
};

/// A = V diag(eigenvalues) V^{-1} and its sign V diag(sign(lambda)) V^{-1}.
TestMatrix similarity_test_matrix(std::span<const Complex> eigenvalues, const DenseMatrix& basis);

/// As similarity_test_matrix with V = I + E, E a seeded complex perturbation
/// shrunk until cond_2(V) <= 100. Reproducible across platforms for a given
/// seed. Throws std::invalid_argument for an empty list or an eigenvalue on
/// the imaginary axis.
TestMatrix build_test_matrix(std::span<const Complex> eigenvalues, std::uint64_t seed);

double condition_number(const DenseMatrix& m);

}  // namespace signiter
