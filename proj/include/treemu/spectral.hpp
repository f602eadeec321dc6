#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "treemu/error.hpp"
#include "treemu/rational.hpp"
#include "treemu/tree.hpp"

namespace treemu {

/// Power-iteration estimate of the Laplacian spectral radius.
struct SpectralEstimate {
  double value = 0.0;
  /// Infinity norm of Qx - value*x on the final unit iterate.
  double residual = 0.0;
  std::int64_t iterations = 0;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const SpectralEstimate& best, const std::string& what)
      : Error(ErrorCode::NoConvergence, what), best_(best) {}
  const SpectralEstimate& best() const noexcept { return best_; }

 private:
  SpectralEstimate best_;
};

inline constexpr std::int64_t kPowerIterationCap = 1'000'000;
inline constexpr double kNumericPhiTolerance = 1e-8;

/// (Qx)_v = d(v) x_v + sum of x over the neighbors of v, with Q = D + A.
/// Throws Error(DimensionMismatch) when x.size() != order(t).
Eigen::VectorXd signless_apply(const Tree& t, const Eigen::VectorXd& x);

/// Largest eigenvalue of Q(t), which equals mu(t) since trees are bipartite.
/// Starts from the all-ones vector and stops once the 2-norm residual of the
/// Rayleigh quotient is at most `tol`, so some eigenvalue lies within `tol`
/// of the returned value. Throws Error(OrderTooSmall) for order < 2 and
/// NoConvergence (carrying the best estimate) after `max_iterations`.
SpectralEstimate mu_numeric(const Tree& t, double tol = 1e-12, std::int64_t max_iterations = kPowerIterationCap);

enum class PhiStatusKind { Complete, PoleAt, NonPositiveAt };

struct PhiStatus {
  PhiStatusKind kind = PhiStatusKind::Complete;
  VertexId vertex = kNoVertex;

  bool complete() const noexcept { return kind == PhiStatusKind::Complete; }
  friend bool operator==(const PhiStatus&, const PhiStatus&) = default;
};

/// Bottom-up values of the recursion on a rooted tree:
///   sink:      alpha - 1
///   otherwise: alpha - 1 - od(v) - sum over children w of 1/phi(w).
/// The root is evaluated with the same rule (its out-degree is its degree).
/// Entries not reached because of a pole are left at zero.
template <class Scalar>
struct PhiAssignmentT {
  Scalar alpha{};
  VertexId root = 0;
  std::vector<Scalar> phi;
  PhiStatus status;
};

using PhiAssignment = PhiAssignmentT<Rational>;
using NumericPhiAssignment = PhiAssignmentT<double>;

namespace detail {

inline bool is_zero(const Rational& x, const Rational&) { return sgn(x) == 0; }
inline bool is_zero(double x, double eps) { return std::abs(x) <= eps; }
inline bool is_positive(const Rational& x, const Rational&) { return sgn(x) > 0; }
inline bool is_positive(double x, double eps) { return x > eps; }

}  // namespace detail

/// Evaluates the recursion in the rooted tree's postorder, recording the
/// first failure: PoleAt(v) when a child of v has value zero (evaluation
/// stops there), NonPositiveAt(v) when a non-root v has value <= 0
/// (evaluation continues). For floating scalars "zero" and "positive" are
/// judged against `eps`.
template <class Scalar>
PhiAssignmentT<Scalar> phi_assignment_t(const RootedTree& rt, const Scalar& alpha, const Scalar& eps = Scalar{}) {
  PhiAssignmentT<Scalar> out;
  out.alpha = alpha;
  out.root = rt.root();
  out.phi.assign(rt.order(), Scalar{});
  const Scalar base = alpha - 1;
  for (VertexId v : rt.postorder()) {
    Scalar value = base - Scalar(static_cast<long>(rt.out_degree(v)));
    for (VertexId w : rt.children(v)) {
      if (detail::is_zero(out.phi[w], eps)) {
        if (out.status.complete()) out.status = {PhiStatusKind::PoleAt, v};
        return out;
      }
      value -= 1 / out.phi[w];
    }
    out.phi[v] = value;
    if (v != rt.root() && !detail::is_positive(out.phi[v], eps) && out.status.complete()) {
      out.status = {PhiStatusKind::NonPositiveAt, v};
    }
  }
  return out;
}

/// Exact recursion. Requires alpha > 1 (Error(InvalidArgument) otherwise).
PhiAssignment phi_assignment(const RootedTree& rt, const Rational& alpha);

/// Floating recursion for irrational alpha; approximate.
NumericPhiAssignment phi_assignment_numeric(const RootedTree& rt, double alpha, double eps = kNumericPhiTolerance);

/// True iff mu(t) == alpha exactly: rooted at vertex 0, the recursion must
/// complete with every non-root value positive and the root value -1.
/// Order < 2 throws Error(OrderTooSmall).
bool check_mu_exact(const Tree& t, const Rational& alpha);

/// Same test under floating evaluation: |phi(root) + 1| <= eps. Approximate.
bool check_mu_numeric(const Tree& t, double alpha, double eps = kNumericPhiTolerance);

/// Rational mu(t) with denominator at most `max_denominator`, confirmed by
/// check_mu_exact; empty when no such value passes.
std::optional<Rational> mu_exact_if_rational(const Tree& t, std::int64_t max_denominator);

}  // namespace treemu
