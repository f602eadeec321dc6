#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treemu/certificate.hpp"
#include "treemu/lset.hpp"
#include "treemu/spectral.hpp"
#include "treemu/tree.hpp"

namespace treemu {

/// Tree assembled from a witness together with its exact recursion values.
/// Invariants: phi is complete, phi(root) = -1, every other value is
/// positive, and the maximum degree is at most witness.r.
struct BuiltTree {
  RootedTree tree;
  Rational alpha;
  PhiAssignment phi;
  Witness witness;
};

/// Positive eigenvector of Q for the eigenvalue alpha, normalized to 1 at
/// the root.
struct EigenvectorMap {
  std::vector<Rational> values;
};

/// The derivation tree read as a directed tree: Base becomes a sink, a
/// Derived node a vertex whose children are its child certificates (same
/// order). Vertex ids follow preorder with the certificate root at 0.
RootedTree tree_from_certificate(const Certificate& c);

/// Joins a new root to the roots of the certificate trees. Throws
/// Error(InvalidWitness) if the witness invariant does not hold.
BuiltTree tree_from_witness(const Witness& w);

/// phi(root) = 1 and phi(child) = phi(parent) / Phi(child) down the tree.
/// Throws Error(InvalidArgument) unless the recursion is complete with root
/// value -1.
EigenvectorMap eigenvector_from_phi(const RootedTree& rt, const PhiAssignment& phi);

inline EigenvectorMap eigenvector_from_phi(const BuiltTree& bt) { return eigenvector_from_phi(bt.tree, bt.phi); }

struct EdgeRatio {
  /// phi(from) / phi(to) for the Perron eigenvector phi.
  Rational ratio;
  /// The component of `to` after deleting the edge, oriented away from
  /// `from`, read as a derivation. Its children follow ascending vertex id.
  Certificate certificate;
};

using DirectedEdge = std::pair<VertexId, VertexId>;

/// Ratio and certificate for both orientations of every edge, valid in
/// L_r(alpha) with r = max degree. Each certificate is re-evaluated and
/// must reproduce its ratio. Throws Error(NotEigenvalue) unless
/// mu(t) = alpha. Cost grows quadratically with the order.
std::map<DirectedEdge, EdgeRatio> edge_ratio_certificates(const Tree& t, const Rational& alpha);

/// Maximum degree of the built tree. It equals r exactly when the witness
/// has r members or some certificate node has r-1 children, and is below r
/// otherwise; a violation throws std::logic_error.
std::size_t exact_max_degree_claim(const BuiltTree& bt);

/// Floating analog of BuiltTree for irrational alpha; approximate.
struct NumericBuiltTree {
  RootedTree tree;
  double alpha = 0;
  std::size_t r = 1;
  NumericPhiAssignment phi;
};

/// Same assembly as tree_from_witness with floating evaluation: every
/// certificate must be valid in L_r(alpha) and sum 1/q_i must match alpha - s
/// within eps. Throws Error(InvalidWitness) otherwise.
NumericBuiltTree tree_from_witness_numeric(double alpha, std::size_t r, std::span<const Certificate> roots,
                                           double eps = kNumericPhiTolerance);

}  // namespace treemu
