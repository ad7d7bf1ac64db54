#include "signiter/sign_engine.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace signiter {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// |den(z)| below this is treated as a pole hit.
constexpr double kUnderflowGuard = 1e-290;
// Iterates beyond this magnitude have left every basin of attraction.
constexpr double kOverflowGuard = 1e150;

double relative_step(double diff, double next_norm) {
  if (next_norm > 0.0) return diff / next_norm;
  return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

// Uniform in [0, 1) from the top 53 bits; std::uniform_real_distribution is
// implementation-defined and would break cross-platform reproducibility.
double unit_uniform(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(IterationStatus status) {
  switch (status) {
    case IterationStatus::converged:
      return "converged";
    case IterationStatus::max_iterations:
      return "max-iterations";
    case IterationStatus::singular_step:
      return "singular-step";
    case IterationStatus::diverged:
      return "diverged";
  }
  return "unknown";
}

double default_tolerance(std::size_t dim) { return static_cast<double>(std::max<std::size_t>(dim, 1)) * kEps * 100.0; }

int scalar_sign(Complex z) {
  if (z.real() == 0.0 || std::isnan(z.real())) throw std::domain_error("sign undefined on imaginary axis");
  return z.real() > 0.0 ? 1 : -1;
}

std::vector<double> to_double_coeffs(const Poly& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return out;
}

Complex eval_poly(std::span<const double> coeffs, Complex z) {
  Complex acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ScalarRun scalar_iterate(const IterationSpec& spec, Complex z0, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
  scalar_sign(z0);

  const auto num = to_double_coeffs(spec.numerator());
  const auto den = to_double_coeffs(spec.denominator());

  ScalarRun run{z0, {z0}, {}};
  ConvergenceReport& report = run.report;
  report.status = IterationStatus::max_iterations;
  Complex z = z0;
  for (int k = 0; k < max_iter; ++k) {
    const Complex d = eval_poly(den, z);
    if (!(std::abs(d) > kUnderflowGuard)) {
      report.status = IterationStatus::singular_step;
      break;
    }
    const Complex next = eval_poly(num, z) / d;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag()) || std::abs(next) > kOverflowGuard) {
      report.status = IterationStatus::diverged;
      break;
    }
    const double diff = std::abs(next - z);
    report.step_norms.push_back(relative_step(diff, std::abs(next)));
    run.iterates.push_back(next);
    z = next;
    if (diff <= tol * std::abs(next)) {
      report.status = IterationStatus::converged;
      break;
    }
  }

  report.iterate_count = static_cast<int>(report.step_norms.size());
  run.value = z;
  report.final_residual_sq = std::abs(z * z - 1.0) / std::norm(z);
  if (report.status == IterationStatus::converged && z.real() != 0.0) {
    const Complex target = z.real() > 0.0 ? 1.0 : -1.0;
    std::vector<double> errors;
    errors.reserve(run.iterates.size());
    for (const auto& w : run.iterates) errors.push_back(std::abs(w - target));
    report.estimated_order = estimate_order(errors);
  }
  return run;
}

std::optional<double> estimate_order(std::span<const double> errors) {
  const double floor = 100.0 * kEps;
  auto usable = [floor](double e) { return e > floor && e < 1.0; };

  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t k = 0; k + 1 < errors.size(); ++k) {
    if (usable(errors[k]) && usable(errors[k + 1])) {
      xs.push_back(std::log(errors[k]));
      ys.push_back(std::log(errors[k + 1]));
    }
  }
  if (xs.size() < 2) return std::nullopt;

  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mean_x += xs[i];
    mean_y += ys[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
    sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

DenseMatrix matrix_poly_eval(std::span<const double> coeffs, const DenseMatrix& x) {
  if (x.rows() != x.cols()) throw std::invalid_argument("matrix_poly_eval: matrix must be square");
  const auto dim = x.rows();
  const DenseMatrix identity = DenseMatrix::Identity(dim, dim);
  if (coeffs.empty()) return DenseMatrix::Zero(dim, dim);

  DenseMatrix acc = coeffs.back() * identity;
  for (auto i = static_cast<std::ptrdiff_t>(coeffs.size()) - 2; i >= 0; --i) {
    DenseMatrix next = acc * x;
    if (coeffs[static_cast<std::size_t>(i)] != 0.0) next += coeffs[static_cast<std::size_t>(i)] * identity;
    acc = std::move(next);
  }
  return acc;
}

DenseMatrix matrix_poly_eval(const Poly& p, const DenseMatrix& x) {
  const auto coeffs = to_double_coeffs(p);
  return matrix_poly_eval(coeffs, x);
}

MatrixRun matrix_sign_iterate(const IterationSpec& spec, const DenseMatrix& a, double tol, int max_iter) {
  if (a.rows() != a.cols()) throw std::invalid_argument("matrix must be square");
  if (a.rows() == 0) throw std::invalid_argument("matrix must be nonempty");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");

  const auto num = to_double_coeffs(spec.numerator());
  const auto den = to_double_coeffs(spec.denominator());
  const double singular_rcond = static_cast<double>(a.rows()) * kEps;

  MatrixRun run{a, {}};
  ConvergenceReport& report = run.report;
  report.status = IterationStatus::max_iterations;
  DenseMatrix x = a;
  for (int k = 0; k < max_iter; ++k) {
    const DenseMatrix n_x = matrix_poly_eval(num, x);
    DenseMatrix next;
    if (den.size() == 1) {
      next = n_x / den.front();
    } else {
      // num(X) and den(X) commute, so den(X)^{-1} num(X) = num(X) den(X)^{-1}.
      const Eigen::PartialPivLU<DenseMatrix> lu(matrix_poly_eval(den, x));
      // rcond() is only an estimate and misses exactly zero pivots.
      const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
      if (!(min_pivot > 0.0) || !(lu.rcond() > singular_rcond)) {
        report.status = IterationStatus::singular_step;
        break;
      }
      next = lu.solve(n_x);
    }
    if (!next.allFinite() || next.norm() > kOverflowGuard) {
      report.status = IterationStatus::diverged;
      break;
    }
    const double diff = (next - x).norm();
    const double next_norm = next.norm();
    report.step_norms.push_back(relative_step(diff, next_norm));
    x = std::move(next);
    if (diff <= tol * next_norm) {
      report.status = IterationStatus::converged;
      break;
    }
  }

  report.iterate_count = static_cast<int>(report.step_norms.size());
  const DenseMatrix identity = DenseMatrix::Identity(x.rows(), x.cols());
  report.final_residual_sq = (x * x - identity).norm() / x.squaredNorm();
  if (report.status == IterationStatus::converged) {
    // For superlinear convergence the relative step tracks the error.
    report.estimated_order = estimate_order(report.step_norms);
  }
  run.value = std::move(x);
  return run;
}

SignResiduals sign_residuals(const DenseMatrix& s, const DenseMatrix& a) {
  if (s.rows() != s.cols() || a.rows() != a.cols()) throw std::invalid_argument("sign_residuals: matrices must be square");
  if (s.rows() != a.rows()) throw std::invalid_argument("sign_residuals: dimension mismatch");
  const DenseMatrix identity = DenseMatrix::Identity(s.rows(), s.cols());
  SignResiduals r;
  r.involution = (s * s - identity).norm() / std::max(1.0, s.squaredNorm());
  const double scale = s.norm() * a.norm();
  r.commutation = scale > 0.0 ? (s * a - a * s).norm() / scale : 0.0;
  return r;
}

double condition_number(const DenseMatrix& m) {
  const Eigen::JacobiSVD<DenseMatrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0) return 1.0;
  const double smallest = sv(sv.size() - 1);
  return smallest > 0.0 ? sv(0) / smallest : std::numeric_limits<double>::infinity();
}

TestMatrix similarity_test_matrix(std::span<const Complex> eigenvalues, const DenseMatrix& basis) {
  if (eigenvalues.empty()) throw std::invalid_argument("eigenvalue list is empty");
  const auto dim = static_cast<Eigen::Index>(eigenvalues.size());
  if (basis.rows() != dim || basis.cols() != dim) throw std::invalid_argument("basis has wrong dimension");

  Eigen::VectorX<Complex> lambda(dim);
  Eigen::VectorX<Complex> signs(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex ev = eigenvalues[static_cast<std::size_t>(i)];
    if (ev.real() == 0.0) throw std::invalid_argument("eigenvalue on the imaginary axis");
    lambda(i) = ev;
    signs(i) = static_cast<double>(scalar_sign(ev));
  }
  const DenseMatrix inverse = basis.partialPivLu().inverse();
  return {basis * lambda.asDiagonal() * inverse, basis * signs.asDiagonal() * inverse, basis};
}

TestMatrix build_test_matrix(std::span<const Complex> eigenvalues, std::uint64_t seed) {
  if (eigenvalues.empty()) throw std::invalid_argument("eigenvalue list is empty");
  const auto dim = static_cast<Eigen::Index>(eigenvalues.size());

  std::mt19937_64 gen(seed);
  DenseMatrix perturbation(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const double re = 2.0 * unit_uniform(gen) - 1.0;
      const double im = 2.0 * unit_uniform(gen) - 1.0;
      perturbation(i, j) = Complex(re, im);
    }
  }
  const DenseMatrix identity = DenseMatrix::Identity(dim, dim);
  double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  DenseMatrix basis = identity + scale * perturbation;
  while (condition_number(basis) > 100.0) {
    scale /= 2.0;
    basis = identity + scale * perturbation;
  }
  return similarity_test_matrix(eigenvalues, basis);
}

}  // namespace signiter
