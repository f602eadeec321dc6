// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "treemu/audit.hpp"
#include "treemu/construct.hpp"
#include "treemu/enumerate.hpp"
#include "treemu/error.hpp"
#include "treemu/families.hpp"
#include "treemu/lset.hpp"
#include "treemu/spectral.hpp"

using namespace treemu;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }

// Collects the first failure message; later checks are still evaluated.
struct Check {
  std::string failure;
  std::size_t count = 0;

  void operator()(bool ok, const std::string& what) {
    ++count;
    if (!ok && failure.empty()) failure = what;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<void(Check&)> body;
};

// (alpha - d(v)) x(v) = sum over neighbours, exactly.
bool eigen_equation(const Tree& t, const Rational& alpha, const std::vector<Rational>& x) {
  for (VertexId v = 0; v < t.order(); ++v) {
    Rational sum = 0;
    for (VertexId w : t.neighbors(v)) sum += x[w];
    if ((alpha - static_cast<long>(t.degree(v))) * x[v] != sum) return false;
  }
  return true;
}

void stars(Check& check) {
  for (std::size_t n = 1; n <= 50; ++n) {
    const Tree t = star(n);
    check(check_mu_exact(t, q(static_cast<long>(n + 1))), "exact check failed for n=" + std::to_string(n));
    check(std::abs(mu_numeric(t).value - static_cast<double>(n + 1)) <= 1e-9,
          "numeric mu off for n=" + std::to_string(n));
  }
}

void small_lsets(Check& check) {
  const auto values = [](const LsetEnumeration& e) {
    std::vector<Rational> out;
    for (const auto& entry : e.entries) out.push_back(entry.value);
    return out;
  };
  const auto l22 = enumerate_lset(q(2), 2);
  check(!l22.truncated && values(l22) == std::vector<Rational>{1}, "L_2(2) differs from {1}");
  const auto l23 = enumerate_lset(q(3), 2);
  check(!l23.truncated && values(l23) == std::vector<Rational>{2, q(1, 2)}, "L_2(3) differs from {2, 1/2}");
  SearchBudget twenty;
  twenty.max_values = 20;
  const auto l24 = values(enumerate_lset(q(4), 2, twenty));
  check(l24.size() == 20, "L_2(4) prefix has " + std::to_string(l24.size()) + " values");
  for (long i = 1; i <= static_cast<long>(l24.size()); ++i) {
    check(l24[i - 1] == q(2 * i + 1, 2 * i - 1), "L_2(4) element " + std::to_string(i) + " is " + to_string(l24[i - 1]));
  }
}

void star_recursion(Check& check) {
  const RootedTree rt = orient_from_root(star(3), 1);
  const auto at5 = phi_assignment(rt, q(5));
  const auto at4 = phi_assignment(rt, q(4));
  // order: source leaf, center, two sinks
  const std::vector<Rational> want5{q(7, 3), q(3, 2), q(4), q(4)};
  const std::vector<Rational> want4{q(-1), q(1, 3), q(3), q(3)};
  const std::vector<Rational> got5{at5.phi[1], at5.phi[0], at5.phi[2], at5.phi[3]};
  const std::vector<Rational> got4{at4.phi[1], at4.phi[0], at4.phi[2], at4.phi[3]};
  check(at5.status.complete() && got5 == want5, "values at alpha=5 differ");
  check(at4.status.complete() && got4 == want4, "values at alpha=4 differ");
}

void star_gap(Check& check) {
  for (std::size_t n = 4; n <= 60; ++n) {
    const BuiltTree bt = star_gap_tree(n);
    const std::size_t delta = degree_profile(bt.tree.tree()).max_degree;
    check(delta <= n - 1, "n=" + std::to_string(n) + " has max degree " + std::to_string(delta));
    check(check_mu_exact(bt.tree.tree(), q(static_cast<long>(n + 1))), "n=" + std::to_string(n) + " fails the exact check");
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    bool rejected = false;
    try {
      star_gap_tree(n);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NoGapTree;
    }
    check(rejected, "n=" + std::to_string(n) + " did not raise NoGapTree");
  }
}

void identities(Check& check) {
  for (long n = 2; n <= 100; ++n) {
    for (long t = 1; t * t <= n; ++t) {
      if (n % t != 0) continue;
      const long r = n - t + 1;
      const Rational beta = q(n - t + 1, t);
      const Witness w = divisor_witness(static_cast<std::size_t>(n), static_cast<std::size_t>(t));
      const std::string tag = "(n,t)=(" + std::to_string(n) + "," + std::to_string(t) + ")";
      check(w.entries.size() == 1 && w.entries[0].value == beta, tag + " unit value");
      check(r / beta == Rational(t) && Rational(t) == Rational(n + 1 - r), tag + " sum identity");
      check((t - 1) * n / t <= r - 1, tag + " arity");
    }
  }
  const auto rule = [](const Rational& alpha, long s, const Rational& child) -> Rational { return alpha - 1 - s - s / child; };
  for (long k = 0; k <= 50; ++k) {
    const std::string tag = "k=" + std::to_string(k);
    if (k >= 1) {
      const Rational alpha = 6 * k + 2;
      const Rational a = rule(alpha, 6 * k - 1, alpha - 1);
      const Rational b = rule(alpha, 3 * k, a);
      check(a == q(6 * k + 3, 6 * k + 1) && b == q(4 * k + 1, 2 * k + 1), tag + " B=3k chain");
      check((4 * k + 1) / b == Rational(2 * k + 1) && Rational(2 * k + 1) == alpha - (4 * k + 1), tag + " B=3k sum");
      check(prime_witness(static_cast<std::size_t>(3 * k)).entries[0].value == b, tag + " B=3k witness");

      const Rational alpha2 = 6 * k + 4;
      const Rational a2 = rule(alpha2, 6 * k, alpha2 - 1);
      check(a2 == q(4 * k + 3, 2 * k + 1), tag + " B=3k+1 chain");
      check((4 * k + 3) / a2 == Rational(2 * k + 1) && Rational(2 * k + 1) == alpha2 - (4 * k + 3), tag + " B=3k+1 sum");
      check(prime_witness(static_cast<std::size_t>(3 * k + 1)).entries[0].value == a2, tag + " B=3k+1 witness");
    }
    const Rational alpha = 6 * k + 6;
    const Rational a1 = rule(alpha, 6 * k + 3, alpha - 1);
    const Rational a2 = rule(alpha, 6 * k + 2, alpha - 1);
    const Rational b = rule(alpha, 4 * k + 3, a2);
    const Rational c = rule(alpha, 3 * k + 2, b);
    check(a1 == q(6 * k + 7, 6 * k + 5) && a2 == q(12 * k + 13, 6 * k + 5), tag + " B=3k+2 leaves");
    check(b == q(12 * k + 11, 12 * k + 13) && c == q(6 * k + 7, 12 * k + 11), tag + " B=3k+2 chain");
    check((2 * k + 1) / c + 2 / a1 == alpha - (2 * k + 3), tag + " B=3k+2 sum");
    const Witness w = prime_witness(static_cast<std::size_t>(3 * k + 2));
    check(w.size() == static_cast<std::size_t>(2 * k + 3) && w.r == static_cast<std::size_t>(6 * k + 4), tag + " B=3k+2 witness");
  }
}

void gap_five(Check& check) {
  const BuiltTree bt = star_gap_tree(5);
  check(check_mu_exact(bt.tree.tree(), q(6)), "mu is not 6");
  const std::size_t delta = degree_profile(bt.tree.tree()).max_degree;
  check(delta == 4, "max degree is " + std::to_string(delta));
}

void forward_audit(Check& check) {
  const auto rep = run_verify_theorem1(9);
  const std::vector<std::size_t> expected{1, 1, 2, 3, 6, 11, 23, 47};
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto it = rep.trees_per_order.find(n);
    const std::size_t got = it == rep.trees_per_order.end() ? 0 : it->second;
    check(got == expected[n - 2], "order " + std::to_string(n) + " has " + std::to_string(got) + " trees");
  }
  check(rep.violations.empty(), rep.violations.empty() ? "" : rep.violations.front());
}

void bound(Check& check) {
  const auto rep = run_bound_audit(10);
  check(rep.trees == 200, "audited " + std::to_string(rep.trees) + " trees");
  check(rep.violations.empty(), rep.violations.empty() ? "" : rep.violations.front());
}

// Trees with mu = alpha to cut witnesses from.
std::vector<Tree> sources(long alpha) {
  std::vector<Tree> out{star(static_cast<std::size_t>(alpha - 1))};
  if (alpha - 1 >= 4) out.push_back(star_gap_tree(static_cast<std::size_t>(alpha - 1)).tree.tree());
  for (const Tree& t : enumerate_free_trees(10)) {
    if (check_mu_exact(t, q(alpha))) out.push_back(t);
  }
  for (std::size_t r = 1; r < static_cast<std::size_t>(alpha); ++r) {
    SearchBudget budget;
    budget.max_values = 2000;
    budget.max_certificates = 20'000;
    if (auto w = find_witness(q(alpha), r, budget)) out.push_back(tree_from_witness(*w).tree.tree());
  }
  return out;
}

void round_trip(Check& check) {
  const std::vector<long> alphas{2, 3, 4, 5, 6, 8, 10};
  std::map<long, std::vector<Tree>> pool;
  std::size_t pool_size = 0;
  for (long a : alphas) pool_size += (pool[a] = sources(a)).size();
  check(pool_size > 20, "only " + std::to_string(pool_size) + " source trees");

  std::mt19937 rng(20240601);
  std::size_t done = 0;
  for (std::size_t i = 0; i < 100; ++i) {
    const long alpha = alphas[i % alphas.size()];
    const auto& trees = pool[alpha];
    const Tree& t = trees[rng() % trees.size()];
    const VertexId u = static_cast<VertexId>(rng() % t.order());
    const std::size_t delta = degree_profile(t).max_degree;
    const std::size_t r = delta + rng() % 3;

    // The branches at u, read as derivations, form a witness.
    const auto ratios = edge_ratio_certificates(t, q(alpha));
    std::vector<Certificate> roots;
    for (VertexId w : t.neighbors(u)) roots.push_back(ratios.at({u, w}).certificate);
    std::shuffle(roots.begin(), roots.end(), rng);

    const std::string tag = "sample " + std::to_string(i) + " (alpha " + std::to_string(alpha) + ")";
    try {
      const BuiltTree bt = tree_from_witness(make_witness(q(alpha), r, roots));
      const Tree& built = bt.tree.tree();
      check(check_mu_exact(built, q(alpha)), tag + ": exact check failed");
      check(eigen_equation(built, q(alpha), eigenvector_from_phi(bt).values), tag + ": eigen-equation fails");
      check(degree_profile(built).max_degree <= r, tag + ": max degree exceeds r");
      ++done;
    } catch (const std::exception& e) {
      check(false, tag + ": " + e.what());
    }
  }
  check(done == 100, std::to_string(done) + " of 100 witnesses built");
}

void irrational(Check& check) {
  const Tree t = Tree::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {0, 4}, {4, 5}, {4, 6}});
  const double mu = mu_numeric(t).value;
  std::ostringstream s;
  s.precision(15);
  s << "mu " << mu;
  check(std::abs(mu - (3 + std::sqrt(2.0))) <= 1e-9, s.str());
  check(!mu_exact_if_rational(t, 1'000'000).has_value(), "a rational value was reported");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "stars: exact and numeric mu = n + 1 for n = 1..50", 5, stars},
      {2, "small L sets: L_2(2), L_2(3), first 20 of L_2(4)", 1, small_lsets},
      {3, "K_{1,3} recursion values at alpha = 5 and 4", 1, star_recursion},
      {4, "star gap trees for n = 4..60, NoGapTree for n <= 3", 60, star_gap},
      {5, "divisor and prime family identities", 10, identities},
      {6, "n = 5 construction has mu = 6 and max degree 4", 1, gap_five},
      {7, "forward audit over all trees of order <= 9", 300, forward_audit},
      {8, "degree bounds over all trees of order <= 10", 300, bound},
      {9, "100 witness round-trips", 120, round_trip},
      {10, "irrational mu 3 + sqrt 2", 1, irrational},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (check.failure.empty() && secs > c.limit_s) {
      check.failure = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s";
    }
    const bool ok = check.failure.empty();
    if (!ok) ++failed;
    std::printf("%s  %2d  %-55s %8.3f s  %zu checks%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                check.count, ok ? "" : "  -- ", check.failure.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
