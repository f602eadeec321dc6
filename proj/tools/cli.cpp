#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treemu/audit.hpp"
#include "treemu/construct.hpp"
#include "treemu/enumerate.hpp"
#include "treemu/families.hpp"
#include "treemu/lset.hpp"
#include "treemu/spectral.hpp"
#include "treemu/tree.hpp"

namespace treemu::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TreeFormat tree_format(const std::string& name) {
  if (name == "edgelist") return TreeFormat::EdgeList;
  if (name == "levelseq") return TreeFormat::LevelSeq;
  throw Error(ErrorCode::InvalidArgument, "unknown tree format '" + name + "'");
}

std::string render(const Tree& t, const std::string& format) {
  if (format == "edgelist") return to_edgelist(t);
  if (format == "levelseq") return to_levelseq(t);
  if (format == "dot") return to_dot(t);
  throw Error(ErrorCode::InvalidArgument, "unknown output format '" + format + "'");
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string sci(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

void add_budget_options(CLI::App* cmd, SearchBudget& budget) {
  cmd->add_option("--max-certificates", budget.max_certificates, "Candidate derivations examined")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-nodes", budget.max_nodes_per_certificate, "Nodes per certificate")->check(CLI::PositiveNumber);
  cmd->add_option("--max-bits", budget.max_denominator_bits, "Denominator bits of a value")->check(CLI::PositiveNumber);
  cmd->add_option("--max-values", budget.max_values, "Distinct values kept")->check(CLI::PositiveNumber);
}

std::string built_report(const BuiltTree& bt, bool verified) {
  std::ostringstream out;
  const auto profile = degree_profile(bt.tree.tree());
  out << "alpha: " << to_string(bt.alpha) << '\n';
  out << "r: " << bt.witness.r << '\n';
  out << "s: " << bt.witness.size() << '\n';
  out << "order: " << bt.tree.order() << '\n';
  out << "max_degree: " << profile.max_degree << '\n';
  out << "verified: " << (verified ? "true" : "false") << '\n';
  for (std::size_t v = 0; v < bt.phi.phi.size(); ++v) out << "phi " << v << ": " << to_string(bt.phi.phi[v]) << '\n';
  return out.str();
}

std::string witness_summary(const Witness& w) {
  std::ostringstream out;
  for (const auto& e : w.entries) {
    out << "witness_entry: " << to_string(e.value) << " x" << e.multiplicity << " nodes=" << e.certificate.node_count()
        << '\n';
  }
  return out.str();
}

GapStrategy parse_strategy(const std::string& text) {
  if (text == "auto") return AutoStrategy{};
  if (text == "prime") return PrimeStrategy{};
  if (text.rfind("divisor=", 0) == 0) {
    const std::string digits = text.substr(8);
    std::size_t t = 0;
    try {
      std::size_t used = 0;
      t = std::stoul(digits, &used);
      if (used != digits.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "bad divisor in strategy '" + text + "'");
    }
    return DivisorStrategy{t};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + text + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trees with prescribed Laplacian spectral radius and maximum degree", "treemu"};
  app.require_subcommand(1);
  int code = kExitOk;

  // mu
  std::string file;
  std::string in_format = "edgelist";
  double tol = 1e-12;
  auto* mu = app.add_subcommand("mu", "Laplacian spectral radius by power iteration");
  mu->add_option("file", file, "Tree file")->required();
  mu->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);
  mu->add_option("--format", in_format, "Input format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  mu->callback([&] {
    const Tree t = parse_tree(read_file(file), tree_format(in_format));
    try {
      const auto est = mu_numeric(t, tol);
      out << "mu: " << fixed(est.value, 12) << '\n'
          << "residual: " << sci(est.residual) << '\n'
          << "iterations: " << est.iterations << '\n';
    } catch (const NoConvergence& e) {
      out << "mu: " << fixed(e.best().value, 12) << '\n'
          << "residual: " << sci(e.best().residual) << '\n'
          << "converged: false\n";
      code = kExitNegative;
    }
  });

  // check
  std::string alpha_text;
  double alpha_approx = 0;
  auto* check = app.add_subcommand("check", "Decide mu(T) == alpha exactly");
  check->add_option("file", file, "Tree file")->required();
  auto* alpha_opt = check->add_option("--alpha", alpha_text, "Rational p/q");
  auto* approx_opt = check->add_option("--alpha-approx", alpha_approx, "Real alpha, floating check (approximate)");
  alpha_opt->excludes(approx_opt);
  check->add_option("--format", in_format, "Input format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  check->callback([&] {
    const Tree t = parse_tree(read_file(file), tree_format(in_format));
    bool ok = false;
    if (*alpha_opt) {
      ok = check_mu_exact(t, parse_rational(alpha_text));
      out << "check: " << (ok ? "true" : "false") << '\n';
    } else if (*approx_opt) {
      ok = check_mu_numeric(t, alpha_approx);
      out << "check: " << (ok ? "true" : "false") << " (approximate, eps " << sci(kNumericPhiTolerance) << ")\n";
    } else {
      throw CLI::RequiredError("--alpha or --alpha-approx");
    }
    code = ok ? kExitOk : kExitNegative;
  });

  // witness
  std::size_t r = 1;
  SearchBudget budget;
  std::string out_path;
  auto* witness = app.add_subcommand("witness", "Search for a witness multiset");
  witness->add_option("--alpha", alpha_text, "Rational p/q")->required();
  witness->add_option("--r", r, "Degree bound")->required()->check(CLI::PositiveNumber);
  witness->add_option("--out", out_path, "Write the witness file here instead of stdout");
  add_budget_options(witness, budget);
  witness->callback([&] {
    const auto result = search_witness(parse_rational(alpha_text), r, budget);
    if (!result.witness) {
      out << "not found within budget: " << to_string(budget) << '\n'
          << "values_examined: " << result.values_examined << '\n'
          << "enumeration_truncated: " << (result.enumeration_truncated ? "true" : "false") << '\n';
      code = kExitNegative;
      return;
    }
    const std::string text = to_witness_text(*result.witness);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream(out_path) << text;
      out << "written: " << out_path << '\n';
    }
  });

  // build
  std::string witness_path;
  std::string out_format = "edgelist";
  bool report = false;
  std::string report_path;
  auto* build = app.add_subcommand("build", "Assemble the tree of a witness file");
  build->add_option("--witness", witness_path, "Witness file")->required();
  build->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"edgelist", "dot", "levelseq"}));
  build->add_flag("--report", report, "Print the report after the tree");
  build->add_option("--report-file", report_path, "Write the report to a sidecar file");
  build->callback([&] {
    const BuiltTree bt = tree_from_witness(parse_witness(read_file(witness_path)));
    const bool verified = check_mu_exact(bt.tree.tree(), bt.alpha);
    out << render(bt.tree.tree(), out_format);
    const std::string text = built_report(bt, verified);
    if (report) out << text;
    if (!report_path.empty()) std::ofstream(report_path) << text;
    code = verified ? kExitOk : kExitNegative;
  });

  // star-gap
  std::size_t n = 0;
  std::string strategy = "auto";
  auto* gap = app.add_subcommand("star-gap", "Tree with mu = n + 1 and maximum degree below n");
  gap->add_option("n", n, "n >= 4")->required();
  gap->add_option("--strategy", strategy, "auto | divisor=t | prime");
  gap->add_option("--out", out_format, "Output format")->check(CLI::IsMember({"edgelist", "dot", "levelseq"}));
  gap->add_flag("--report", report, "Print a verification report instead of the tree");
  gap->callback([&] {
    const BuiltTree bt = star_gap_tree(GapRequest{n, parse_strategy(strategy)});
    const bool verified = check_mu_exact(bt.tree.tree(), bt.alpha);
    if (report) {
      out << "alpha: " << to_string(bt.alpha) << '\n'
          << "r: " << bt.witness.r << '\n'
          << "s: " << bt.witness.size() << '\n'
          << witness_summary(bt.witness) << "order: " << bt.tree.order() << '\n'
          << "max_degree: " << degree_profile(bt.tree.tree()).max_degree << '\n'
          << "verified: " << (verified ? "true" : "false") << '\n';
    } else {
      out << render(bt.tree.tree(), out_format);
    }
    code = verified ? kExitOk : kExitNegative;
  });

  // enumerate
  std::size_t max_order = 0;
  std::string list_format = "levelseq";
  bool counts_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List free trees of orders 2..max-order");
  enumerate->add_option("--max-order", max_order, "Largest order (<= 12)")->required();
  enumerate->add_option("--format", list_format, "Output format")->check(CLI::IsMember({"levelseq", "edgelist"}));
  enumerate->add_flag("--count", counts_only, "Print counts per order only");
  enumerate->callback([&] {
    FreeTreeEnumerator stream(max_order);
    std::map<std::size_t, std::size_t> counts;
    while (auto t = stream.next()) {
      ++counts[t->order()];
      if (!counts_only) out << render(*t, list_format);
    }
    if (counts_only) {
      for (const auto& [order, count] : counts) out << "order_" << order << ": " << count << '\n';
    }
  });

  // verify-theorem1
  bool machine = false;
  auto* verify = app.add_subcommand("verify-theorem1", "Audit the certificate characterization on all small trees");
  verify->add_option("--max-order", max_order, "Largest order (2..12)")->required();
  verify->add_flag("--machine", machine, "Tab-separated per-tree records");
  add_budget_options(verify, budget);
  verify->callback([&] {
    const auto rep = run_verify_theorem1(max_order, budget);
    out << (machine ? format_records(rep.records) : format_report(rep));
    code = rep.violations.empty() ? kExitOk : kExitNegative;
  });

  // bound-audit
  auto* bound = app.add_subcommand("bound-audit", "Check max_degree + 1 <= mu < max_degree + 2 sqrt(max_degree - 1)");
  bound->add_option("--max-order", max_order, "Largest order (2..12)")->required();
  bound->add_flag("--machine", machine, "Tab-separated per-tree records");
  bound->callback([&] {
    const auto rep = run_bound_audit(max_order);
    out << (machine ? format_records(rep.records) : format_report(rep));
    code = rep.violations.empty() ? kExitOk : kExitNegative;
  });

  // conjecture-scan
  auto* scan = app.add_subcommand("conjecture-scan", "Bounded witness search for one (alpha, r)");
  scan->add_option("--alpha", alpha_text, "Rational p/q")->required();
  scan->add_option("--r", r, "Degree bound")->required()->check(CLI::PositiveNumber);
  add_budget_options(scan, budget);
  scan->callback([&] {
    const Rational alpha = parse_rational(alpha_text);
    const double a = alpha.get_d();
    const double rr = static_cast<double>(r);
    const bool in_window = a >= 3 && a + 2 - 2 * std::sqrt(a) < rr && rr <= a - 1;
    const auto result = search_witness(alpha, r, budget);
    out << "alpha: " << to_string(alpha) << '\n'
        << "r: " << r << '\n'
        << "in_window: " << (in_window ? "true" : "false") << '\n'
        << "values_examined: " << result.values_examined << '\n'
        << "enumeration_truncated: " << (result.enumeration_truncated ? "true" : "false") << '\n'
        << "witness: " << (result.witness ? "found" : "not found within budget") << '\n';
    if (result.witness) {
      const BuiltTree bt = tree_from_witness(*result.witness);
      out << "s: " << result.witness->size() << '\n'
          << "order: " << bt.tree.order() << '\n'
          << "max_degree: " << degree_profile(bt.tree.tree()).max_degree << '\n';
    }
    code = result.witness ? kExitOk : kExitNegative;
  });

  // export
  std::string to_format = "dot";
  auto* exp = app.add_subcommand("export", "Convert a tree file");
  exp->add_option("file", file, "Tree file")->required();
  exp->add_option("--format", in_format, "Input format")->check(CLI::IsMember({"edgelist", "levelseq"}));
  exp->add_option("--to", to_format, "Output format")->check(CLI::IsMember({"edgelist", "dot", "levelseq"}));
  exp->callback([&] { out << render(parse_tree(read_file(file), tree_format(in_format)), to_format); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (e.get_exit_code() == 0) return kExitOk;
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    // no tree exists: an answer, not bad input
    return e.code() == ErrorCode::NoGapTree ? kExitNegative : kExitUsage;
  }
  return code;
}

}  // namespace treemu::cli
