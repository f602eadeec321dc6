#include "treemu/spectral.hpp"

#include <limits>

namespace treemu {

Eigen::VectorXd signless_apply(const Tree& t, const Eigen::VectorXd& x) {
  if (static_cast<std::size_t>(x.size()) != t.order()) {
    throw Error(ErrorCode::DimensionMismatch, "vector of size " + std::to_string(x.size()) + " for a tree of order " +
                                                  std::to_string(t.order()));
  }
  Eigen::VectorXd y(x.size());
  for (Eigen::Index v = 0; v < x.size(); ++v) {
    const auto nbrs = t.neighbors(static_cast<VertexId>(v));
    double acc = static_cast<double>(nbrs.size()) * x[v];
    for (VertexId w : nbrs) acc += x[w];
    y[v] = acc;
  }
  return y;
}

SpectralEstimate mu_numeric(const Tree& t, double tol, std::int64_t max_iterations) {
  if (t.order() < 2) throw Error(ErrorCode::OrderTooSmall, "spectral radius needs a tree of order at least 2");
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  Eigen::VectorXd x = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(t.order())).normalized();
  SpectralEstimate best{0.0, std::numeric_limits<double>::infinity(), 0};
  for (std::int64_t it = 1; it <= max_iterations; ++it) {
    const Eigen::VectorXd y = signless_apply(t, x);
    const double lambda = x.dot(y);
    const Eigen::VectorXd r = y - lambda * x;
    const double residual_2 = r.norm();
    const SpectralEstimate current{lambda, r.lpNorm<Eigen::Infinity>(), it};
    if (current.residual <= best.residual) best = current;
    if (residual_2 <= tol) return current;
    x = y.normalized();
  }
  throw NoConvergence(best, "power iteration did not reach tolerance within " + std::to_string(max_iterations) +
                                " iterations");
}

PhiAssignment phi_assignment(const RootedTree& rt, const Rational& alpha) {
  if (alpha <= 1) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1, got " + to_string(alpha));
  return phi_assignment_t<Rational>(rt, alpha);
}

NumericPhiAssignment phi_assignment_numeric(const RootedTree& rt, double alpha, double eps) {
  if (!(alpha > 1)) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
  return phi_assignment_t<double>(rt, alpha, eps);
}

bool check_mu_exact(const Tree& t, const Rational& alpha) {
  if (t.order() < 2) throw Error(ErrorCode::OrderTooSmall, "spectral radius needs a tree of order at least 2");
  // mu(T) >= 2 for every tree of order >= 2, so alpha <= 1 can never match.
  if (alpha <= 1) return false;
  const PhiAssignment phi = phi_assignment(orient_from_root(t, 0), alpha);
  return phi.status.complete() && phi.phi[phi.root] == -1;
}

bool check_mu_numeric(const Tree& t, double alpha, double eps) {
  if (t.order() < 2) throw Error(ErrorCode::OrderTooSmall, "spectral radius needs a tree of order at least 2");
  if (!(alpha > 1)) return false;
  const NumericPhiAssignment phi = phi_assignment_numeric(orient_from_root(t, 0), alpha, eps);
  return phi.status.complete() && std::abs(phi.phi[phi.root] + 1) <= eps;
}

std::optional<Rational> mu_exact_if_rational(const Tree& t, std::int64_t max_denominator) {
  SpectralEstimate estimate;
  try {
    estimate = mu_numeric(t, 1e-10);
  } catch (const NoConvergence& e) {
    estimate = e.best();
  }
  const Rational candidate = nearest_rational(estimate.value, max_denominator);
  if (check_mu_exact(t, candidate)) return candidate;
  return std::nullopt;
}

}  // namespace treemu
