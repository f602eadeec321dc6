#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "treemu/lset.hpp"
#include "treemu/tree.hpp"

namespace treemu {

struct TreeAuditRecord {
  std::string levels;  // canonical level sequence, space separated
  std::size_t order = 0;
  std::size_t max_degree = 0;
  double mu = 0;
  double root_phi = 0;        // numeric recursion at alpha = mu, rooted at vertex 0
  std::string exact_mu;       // empty when mu is not recognized as rational
  std::size_t edge_certificates = 0;
  std::string witness;        // "found", "not-found" or "" when not attempted
  bool ok = true;
};

struct Theorem1Report {
  std::size_t max_order = 0;
  std::map<std::size_t, std::size_t> trees_per_order;
  std::size_t trees = 0;
  std::size_t rational_mu = 0;
  std::size_t witnesses_found = 0;
  std::vector<std::string> violations;
  std::vector<TreeAuditRecord> records;
};

inline constexpr double kForwardRootTolerance = 1e-6;
inline constexpr std::int64_t kAuditMaxDenominator = 1000;

/// For every free tree of order 2..max_order (max_order in 2..12):
///  - numerically, the recursion at alpha = mu rooted at vertex 0 ends within
///    1e-6 of -1 with every other value positive;
///  - when mu is rational, every directed edge yields a certificate valid in
///    L_r(mu) with r = max degree, the leaf edges give 1/(mu-1), and
///    max degree <= floor(mu) - 1;
///  - when mu is rational, a witness search within `budget` is attempted and
///    any witness found must rebuild into a tree with the same mu. A miss is
///    recorded, not counted as a violation.
Theorem1Report run_verify_theorem1(std::size_t max_order, const SearchBudget& budget = {});

struct BoundReport {
  std::size_t max_order = 0;
  std::size_t trees = 0;
  /// Trees with mu = max degree + 1 up to the tolerance (the stars).
  std::size_t lower_tight = 0;
  std::vector<std::string> violations;
  std::vector<TreeAuditRecord> records;
};

inline constexpr double kBoundTolerance = 1e-9;

/// Checks max_degree + 1 <= mu + tol for every tree and, when the maximum
/// degree is at least 2, mu - tol < max_degree + 2 sqrt(max_degree - 1).
BoundReport run_bound_audit(std::size_t max_order);

/// Stable key: value text.
std::string format_report(const Theorem1Report& report);
std::string format_report(const BoundReport& report);

/// One tab-separated record per tree, preceded by a header line.
std::string format_records(const std::vector<TreeAuditRecord>& records);

}  // namespace treemu
