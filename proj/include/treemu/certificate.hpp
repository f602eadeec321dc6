#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "treemu/error.hpp"
#include "treemu/rational.hpp"
#include "treemu/spectral.hpp"

namespace treemu {

/// Derivation tree witnessing membership in the recursive set L_r(alpha).
///
/// A Base node stands for the axiom alpha-1; a Derived node with children
/// c_1..c_s stands for alpha - 1 - s - sum 1/value(c_i). The structure does
/// not depend on alpha, so one certificate can be evaluated under several
/// (alpha, r) contexts. Nodes are immutable and shared between copies.
class Certificate {
 public:
  /// Base.
  Certificate() = default;

  static Certificate base() { return {}; }
  /// Throws Error(InvalidArgument) for an empty child list.
  static Certificate derived(std::vector<Certificate> children);

  bool is_base() const noexcept { return node_ == nullptr; }
  std::span<const Certificate> children() const noexcept;
  std::size_t arity() const noexcept { return children().size(); }
  std::size_t node_count() const noexcept;
  /// Largest arity over all nodes (0 for Base).
  std::size_t max_arity() const noexcept;
  std::size_t depth() const noexcept;
  /// Address shared by copies of the same node; null for Base.
  const void* identity() const noexcept { return node_.get(); }

  /// Structural comparison: node count first, then arity, then children
  /// lexicographically.
  friend std::strong_ordering operator<=>(const Certificate& a, const Certificate& b);
  friend bool operator==(const Certificate& a, const Certificate& b) { return (a <=> b) == 0; }

 private:
  struct Node {
    std::vector<Certificate> children;
    std::size_t nodes = 1;
    std::size_t max_arity = 0;
    std::size_t depth = 0;
  };
  std::shared_ptr<const Node> node_;
};

/// Failure while evaluating a certificate; `path()` lists child indices from
/// the certificate root down to the offending node.
class CertificateError : public Error {
 public:
  CertificateError(ErrorCode code, std::vector<std::size_t> path, const std::string& what);
  const std::vector<std::size_t>& path() const noexcept { return path_; }

 private:
  std::vector<std::size_t> path_;
};

/// Evaluates certificates in one (alpha, r) context, caching values of
/// shared nodes so repeated subtrees are evaluated once.
///
/// Every Derived node may have at most r-1 children and every node must
/// evaluate to a positive value. Failures throw CertificateError with code
/// ArityExceeded, NonPositiveValue or ZeroChildValue (a zero child is
/// reported at its parent, a negative node at itself). For floating
/// scalars, values within `eps` of zero count as zero.
template <class Scalar>
class CertificateEvaluator {
 public:
  CertificateEvaluator(const Scalar& alpha, std::size_t r, const Scalar& eps = Scalar{})
      : alpha_(alpha), max_children_(r - 1), eps_(eps) {
    if (!(alpha > 1)) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1");
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
  }

  Scalar operator()(const Certificate& c) {
    std::vector<std::size_t> path;
    const Scalar value = at(c, path);
    if (!detail::is_positive(value, eps_) || detail::is_zero(value, eps_)) {
      throw CertificateError(ErrorCode::NonPositiveValue, path, "certificate value is not positive");
    }
    return value;
  }

 private:
  Scalar at(const Certificate& c, std::vector<std::size_t>& path) {
    if (c.arity() > max_children_) {
      throw CertificateError(ErrorCode::ArityExceeded, path,
                             "node has " + std::to_string(c.arity()) + " children, at most " +
                                 std::to_string(max_children_) + " allowed");
    }
    if (c.is_base()) return alpha_ - 1;
    if (auto it = memo_.find(c.identity()); it != memo_.end()) return it->second;
    Scalar value = alpha_ - 1 - Scalar(static_cast<long>(c.arity()));
    for (std::size_t i = 0; i < c.arity(); ++i) {
      path.push_back(i);
      const Scalar child = at(c.children()[i], path);
      if (detail::is_zero(child, eps_)) {
        path.pop_back();
        throw CertificateError(ErrorCode::ZeroChildValue, path, "child " + std::to_string(i) + " evaluates to zero");
      }
      if (!detail::is_positive(child, eps_)) {
        throw CertificateError(ErrorCode::NonPositiveValue, path, "node value is not positive");
      }
      path.pop_back();
      value -= 1 / child;
    }
    memo_.emplace(c.identity(), value);
    return value;
  }

  Scalar alpha_;
  std::size_t max_children_;
  Scalar eps_;
  std::unordered_map<const void*, Scalar> memo_;
};

/// Value of `c` in L_r(alpha); see CertificateEvaluator for the checks.
template <class Scalar>
Scalar cert_value_t(const Certificate& c, const Scalar& alpha, std::size_t r, const Scalar& eps = Scalar{}) {
  return CertificateEvaluator<Scalar>(alpha, r, eps)(c);
}

inline Rational cert_value(const Certificate& c, const Rational& alpha, std::size_t r) {
  return cert_value_t<Rational>(c, alpha, r);
}

inline double cert_value_numeric(const Certificate& c, double alpha, std::size_t r,
                                 double eps = kNumericPhiTolerance) {
  return cert_value_t<double>(c, alpha, r, eps);
}

/// `*` for Base, `( c1 c2 ... cs )` for Derived, single spaces between
/// tokens.
std::string to_string(const Certificate& c);

/// Accepts any whitespace between tokens. When `max_children` is given, a
/// node with more children is rejected with Error(ArityExceeded). Syntax
/// errors throw Error(MalformedInput).
Certificate parse_certificate(std::string_view text, std::optional<std::size_t> max_children = std::nullopt);

}  // namespace treemu
