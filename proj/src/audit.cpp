#include "treemu/audit.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "treemu/construct.hpp"
#include "treemu/enumerate.hpp"
#include "treemu/spectral.hpp"

namespace treemu {

namespace {

std::string join_levels(const std::vector<int>& levels) {
  std::string out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(levels[i]);
  }
  return out;
}

std::string fixed(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

TreeAuditRecord base_record(const Tree& t) {
  TreeAuditRecord rec;
  rec.levels = join_levels(canonical_free_levels(t));
  rec.order = t.order();
  rec.max_degree = degree_profile(t).max_degree;
  rec.mu = mu_numeric(t, 1e-12).value;
  return rec;
}

void audit_forward(const Tree& t, TreeAuditRecord& rec, std::vector<std::string>& violations) {
  auto fail = [&](const std::string& why) {
    rec.ok = false;
    violations.push_back("[" + rec.levels + "] " + why);
  };
  const NumericPhiAssignment phi = phi_assignment_numeric(orient_from_root(t, 0), rec.mu, 0.0);
  rec.root_phi = phi.phi[0];
  if (!phi.status.complete()) fail("numeric recursion failed before reaching the root");
  if (std::abs(phi.phi[0] + 1) > kForwardRootTolerance) fail("root value " + fixed(phi.phi[0]) + " is not -1");
}

void audit_exact(const Tree& t, const SearchBudget& budget, TreeAuditRecord& rec, std::size_t& witnesses,
                 std::vector<std::string>& violations) {
  auto fail = [&](const std::string& why) {
    rec.ok = false;
    violations.push_back("[" + rec.levels + "] " + why);
  };
  const auto mu = mu_exact_if_rational(t, kAuditMaxDenominator);
  if (!mu) return;
  rec.exact_mu = to_string(*mu);
  const std::size_t r = rec.max_degree;

  const Rational floor_mu = Rational(mpz_class(mu->get_num() / mu->get_den()));
  if (Rational(static_cast<long>(r)) > floor_mu - 1) fail("max degree exceeds floor(mu) - 1");

  try {
    const auto ratios = edge_ratio_certificates(t, *mu);
    rec.edge_certificates = ratios.size();
    const Rational leaf_ratio = 1 / (*mu - 1);
    for (const auto& [edge, er] : ratios) {
      if (cert_value(er.certificate, *mu, r) != er.ratio) fail("edge certificate does not reproduce its ratio");
      if (t.degree(edge.first) == 1 && er.ratio != leaf_ratio) fail("leaf edge ratio differs from 1/(mu-1)");
    }
  } catch (const Error& e) {
    fail(std::string("edge certificates: ") + e.what());
  }

  const auto found = find_witness(*mu, r, budget);
  rec.witness = found ? "found" : "not-found";
  if (found) {
    ++witnesses;
    const BuiltTree bt = tree_from_witness(*found);
    if (!check_mu_exact(bt.tree.tree(), *mu)) fail("witness rebuilds into a tree with a different mu");
    if (degree_profile(bt.tree.tree()).max_degree > r) fail("witness rebuilds into a tree above the degree bound");
  }
}

}  // namespace

Theorem1Report run_verify_theorem1(std::size_t max_order, const SearchBudget& budget) {
  if (max_order < 2 || max_order > kDefaultEnumerationCap) {
    throw Error(ErrorCode::InvalidArgument, "max_order must lie in 2.." + std::to_string(kDefaultEnumerationCap));
  }
  validate(budget);
  Theorem1Report report;
  report.max_order = max_order;
  FreeTreeEnumerator stream(max_order);
  while (auto t = stream.next()) {
    TreeAuditRecord rec = base_record(*t);
    ++report.trees;
    ++report.trees_per_order[t->order()];
    audit_forward(*t, rec, report.violations);
    audit_exact(*t, budget, rec, report.witnesses_found, report.violations);
    if (!rec.exact_mu.empty()) ++report.rational_mu;
    report.records.push_back(std::move(rec));
  }
  return report;
}

BoundReport run_bound_audit(std::size_t max_order) {
  if (max_order < 2) throw Error(ErrorCode::InvalidArgument, "max_order must be at least 2");
  BoundReport report;
  report.max_order = max_order;
  FreeTreeEnumerator stream(max_order);
  while (auto t = stream.next()) {
    TreeAuditRecord rec = base_record(*t);
    ++report.trees;
    const double delta = static_cast<double>(rec.max_degree);
    if (std::abs(rec.mu - (delta + 1)) <= kBoundTolerance) ++report.lower_tight;
    if (delta + 1 > rec.mu + kBoundTolerance) {
      rec.ok = false;
      report.violations.push_back("[" + rec.levels + "] mu " + fixed(rec.mu) + " below max degree + 1");
    }
    if (rec.max_degree >= 2 && !(rec.mu - kBoundTolerance < delta + 2 * std::sqrt(delta - 1))) {
      rec.ok = false;
      report.violations.push_back("[" + rec.levels + "] mu " + fixed(rec.mu) + " reaches the upper bound");
    }
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string format_report(const Theorem1Report& report) {
  std::ostringstream out;
  out << "max_order: " << report.max_order << '\n';
  for (const auto& [order, count] : report.trees_per_order) out << "order_" << order << ": " << count << '\n';
  out << "trees: " << report.trees << '\n';
  out << "rational_mu: " << report.rational_mu << '\n';
  out << "witnesses_found: " << report.witnesses_found << '\n';
  out << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  return out.str();
}

std::string format_report(const BoundReport& report) {
  std::ostringstream out;
  out << "max_order: " << report.max_order << '\n';
  out << "trees: " << report.trees << '\n';
  out << "lower_tight: " << report.lower_tight << '\n';
  out << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  return out.str();
}

std::string format_records(const std::vector<TreeAuditRecord>& records) {
  std::ostringstream out;
  out << "levels\torder\tmax_degree\tmu\troot_phi\texact_mu\tedge_certificates\twitness\tok\n";
  for (const auto& r : records) {
    out << r.levels << '\t' << r.order << '\t' << r.max_degree << '\t' << fixed(r.mu) << '\t' << fixed(r.root_phi)
        << '\t' << (r.exact_mu.empty() ? "-" : r.exact_mu) << '\t' << r.edge_certificates << '\t'
        << (r.witness.empty() ? "-" : r.witness) << '\t' << (r.ok ? "ok" : "violation") << '\n';
  }
  return out.str();
}

}  // namespace treemu
