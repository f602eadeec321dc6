#include "treemu/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace treemu {

namespace {

// Appends the certificate's vertices in preorder, hanging its root under
// `parent` (or nowhere when parent == kNoVertex).
void append_certificate(const Certificate& c, VertexId parent, VertexId& next_id, std::vector<Edge>& edges) {
  std::vector<std::pair<const Certificate*, VertexId>> stack{{&c, parent}};
  while (!stack.empty()) {
    const auto [node, up] = stack.back();
    stack.pop_back();
    const VertexId id = next_id++;
    if (up != kNoVertex) edges.emplace_back(up, id);
    const auto kids = node->children();
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(&*it, id);
  }
}

}  // namespace

RootedTree tree_from_certificate(const Certificate& c) {
  std::vector<Edge> edges;
  edges.reserve(c.node_count() - 1);
  VertexId next = 0;
  append_certificate(c, kNoVertex, next, edges);
  return orient_from_root(Tree::from_edges(next, std::move(edges)), 0);
}

BuiltTree tree_from_witness(const Witness& w) {
  validate(w);
  const auto roots = w.roots();
  std::size_t order = 1;
  for (const auto& c : roots) order += c.node_count();
  std::vector<Edge> edges;
  edges.reserve(order - 1);
  VertexId next = 1;
  for (const auto& c : roots) append_certificate(c, 0, next, edges);

  RootedTree rt = orient_from_root(Tree::from_edges(order, std::move(edges)), 0);
  PhiAssignment phi = phi_assignment(rt, w.alpha);
  if (!phi.status.complete() || phi.phi[0] != -1) {
    throw Error(ErrorCode::InvalidWitness, "assembled tree does not evaluate to -1 at its root");
  }
  return BuiltTree{std::move(rt), w.alpha, std::move(phi), w};
}

EigenvectorMap eigenvector_from_phi(const RootedTree& rt, const PhiAssignment& phi) {
  if (!phi.status.complete() || phi.phi.size() != rt.order() || phi.phi[rt.root()] != -1) {
    throw Error(ErrorCode::InvalidArgument, "eigenvector needs a complete assignment with root value -1");
  }
  EigenvectorMap out;
  out.values.assign(rt.order(), Rational(0));
  for (VertexId v : rt.preorder()) {
    out.values[v] = v == rt.root() ? Rational(1) : Rational(out.values[rt.parent(v)] / phi.phi[v]);
  }
  return out;
}

std::map<DirectedEdge, EdgeRatio> edge_ratio_certificates(const Tree& t, const Rational& alpha) {
  if (t.order() < 2 || !check_mu_exact(t, alpha)) {
    throw Error(ErrorCode::NotEigenvalue, to_string(alpha) + " is not the Laplacian spectral radius of the tree");
  }
  const std::size_t r = degree_profile(t).max_degree;
  const RootedTree rt = orient_from_root(t, 0);
  const EigenvectorMap phi = eigenvector_from_phi(rt, phi_assignment(rt, alpha));

  // cert[{u, v}]: component of v away from u. Children of such a derivation
  // are the neighbors of v other than u, ascending.
  std::map<DirectedEdge, Certificate> cert;
  auto build = [&](VertexId from, VertexId to) {
    std::vector<Certificate> kids;
    for (VertexId w : t.neighbors(to)) {
      if (w != from) kids.push_back(cert.at({to, w}));
    }
    cert[{from, to}] = kids.empty() ? Certificate::base() : Certificate::derived(std::move(kids));
  };
  // Downward edges bottom-up, then upward edges top-down.
  for (VertexId v : rt.postorder()) {
    if (v != rt.root()) build(rt.parent(v), v);
  }
  for (VertexId v : rt.preorder()) {
    if (v != rt.root()) build(v, rt.parent(v));
  }

  std::map<DirectedEdge, EdgeRatio> out;
  CertificateEvaluator<Rational> evaluate(alpha, std::max<std::size_t>(r, 1));
  for (const auto& [edge, c] : cert) {
    Rational ratio = phi.values[edge.first] / phi.values[edge.second];
    const Rational value = evaluate(c);
    if (value != ratio) {
      throw std::logic_error("edge certificate evaluates to " + to_string(value) + " but the eigenvector ratio is " +
                             to_string(ratio));
    }
    out.emplace(edge, EdgeRatio{std::move(ratio), c});
  }
  return out;
}

std::size_t exact_max_degree_claim(const BuiltTree& bt) {
  const std::size_t delta = degree_profile(bt.tree.tree()).max_degree;
  const std::size_t r = bt.witness.r;
  bool attains = bt.witness.size() == r;
  for (const auto& e : bt.witness.entries) attains = attains || e.certificate.max_arity() + 1 == r;
  if (attains ? delta != r : delta >= r) {
    throw std::logic_error("maximum degree " + std::to_string(delta) + " contradicts the degree claim for r = " +
                           std::to_string(r));
  }
  return delta;
}

NumericBuiltTree tree_from_witness_numeric(double alpha, std::size_t r, std::span<const Certificate> roots,
                                           double eps) {
  if (roots.empty() || roots.size() > r) throw Error(ErrorCode::InvalidWitness, "witness size outside 1..r");
  double sum = 0;
  try {
    CertificateEvaluator<double> evaluate(alpha, r, eps);
    for (const auto& c : roots) sum += 1 / evaluate(c);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidWitness, std::string("invalid certificate: ") + e.what());
  }
  if (std::abs(sum - (alpha - static_cast<double>(roots.size()))) > eps) {
    throw Error(ErrorCode::InvalidWitness, "sum of reciprocals does not match alpha - s");
  }
  std::size_t order = 1;
  for (const auto& c : roots) order += c.node_count();
  std::vector<Edge> edges;
  VertexId next = 1;
  for (const auto& c : roots) append_certificate(c, 0, next, edges);
  RootedTree rt = orient_from_root(Tree::from_edges(order, std::move(edges)), 0);
  NumericPhiAssignment phi = phi_assignment_numeric(rt, alpha, eps);
  if (!phi.status.complete() || std::abs(phi.phi[0] + 1) > eps) {
    throw Error(ErrorCode::InvalidWitness, "assembled tree does not evaluate to -1 at its root");
  }
  return NumericBuiltTree{std::move(rt), alpha, r, std::move(phi)};
}

}  // namespace treemu
