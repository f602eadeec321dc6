#include "treemu/families.hpp"

#include <stdexcept>

namespace treemu {

namespace {

Certificate fan(long count, const Certificate& child) {
  return Certificate::derived(std::vector<Certificate>(static_cast<std::size_t>(count), child));
}

Rational q(long num, long den) { return make_rational(num, den); }

void expect_value(const Certificate& c, const Rational& alpha, std::size_t r, const Rational& expected,
                  const char* name) {
  const Rational got = cert_value(c, alpha, r);
  if (got != expected) {
    throw std::logic_error(std::string("chain value ") + name + " is " + to_string(got) + ", expected " +
                           to_string(expected));
  }
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Tree star(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "star needs at least one leaf");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(0, static_cast<VertexId>(i));
  return Tree::from_edges(n + 1, std::move(edges));
}

Witness divisor_witness(std::size_t n, std::size_t t) {
  if (n < 2 || t < 1) throw Error(ErrorCode::InvalidArgument, "divisor family needs n >= 2 and t >= 1");
  if (n % t != 0) throw Error(ErrorCode::NotDivisor, std::to_string(t) + " does not divide " + std::to_string(n));
  if (t * t > n) throw Error(ErrorCode::DivisorTooLarge, std::to_string(t) + "^2 exceeds " + std::to_string(n));
  const Rational alpha(static_cast<long>(n + 1));
  const std::size_t r = n - t + 1;
  const Certificate unit = t == 1 ? Certificate::base() : fan(static_cast<long>((t - 1) * n / t), Certificate::base());
  const std::vector<Certificate> roots(r, unit);
  return make_witness(alpha, r, roots);
}

Witness prime_witness(std::size_t B) {
  if (B < 2) throw Error(ErrorCode::BTooSmall, "B must be at least 2, got " + std::to_string(B));
  const Certificate base = Certificate::base();
  const long k = static_cast<long>(B / 3);
  switch (B % 3) {
    case 0: {
      const Rational alpha(6 * k + 2);
      const std::size_t r = static_cast<std::size_t>(6 * k);
      const Certificate a = fan(6 * k - 1, base);
      const Certificate b = fan(3 * k, a);
      expect_value(a, alpha, r, q(3 * (2 * k + 1), 6 * k + 1), "a");
      expect_value(b, alpha, r, q(4 * k + 1, 2 * k + 1), "b");
      return make_witness(alpha, r, std::vector<Certificate>(static_cast<std::size_t>(4 * k + 1), b));
    }
    case 1: {
      const Rational alpha(6 * k + 4);
      const std::size_t r = static_cast<std::size_t>(6 * k + 1);
      const Certificate a = fan(6 * k, base);
      expect_value(a, alpha, r, q(4 * k + 3, 2 * k + 1), "a");
      return make_witness(alpha, r, std::vector<Certificate>(static_cast<std::size_t>(4 * k + 3), a));
    }
    default: {
      const Rational alpha(6 * k + 6);
      const std::size_t r = static_cast<std::size_t>(6 * k + 4);
      const Certificate a1 = fan(6 * k + 3, base);
      const Certificate a2 = fan(6 * k + 2, base);
      const Certificate b = fan(4 * k + 3, a2);
      const Certificate c = fan(3 * k + 2, b);
      expect_value(a1, alpha, r, q(6 * k + 7, 6 * k + 5), "a1");
      expect_value(a2, alpha, r, q(12 * k + 13, 6 * k + 5), "a2");
      expect_value(b, alpha, r, q(12 * k + 11, 12 * k + 13), "b");
      expect_value(c, alpha, r, q(6 * k + 7, 12 * k + 11), "c");
      std::vector<Certificate> roots(static_cast<std::size_t>(2 * k + 1), c);
      roots.push_back(a1);
      roots.push_back(a1);
      return make_witness(alpha, r, roots);
    }
  }
}

std::size_t largest_small_divisor(std::size_t n) {
  std::size_t best = 1;
  for (std::size_t t = 1; t * t <= n; ++t) {
    if (n % t == 0) best = t;
  }
  return best;
}

BuiltTree star_gap_tree(const GapRequest& request) {
  const std::size_t n = request.n;
  if (n <= 3) {
    throw Error(ErrorCode::NoGapTree, "the star is the only tree with mu = n + 1 and maximum degree n for n = " +
                                          std::to_string(n));
  }
  Witness w = std::visit(
      [n](const auto& s) -> Witness {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, DivisorStrategy>) {
          if (s.t < 2) throw Error(ErrorCode::InvalidArgument, "the divisor strategy needs t >= 2");
          return divisor_witness(n, s.t);
        } else if constexpr (std::is_same_v<S, PrimeStrategy>) {
          if (n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "the prime strategy needs odd n");
          return prime_witness((n - 1) / 2);
        } else {
          if (is_prime(n)) return prime_witness((n - 1) / 2);
          return divisor_witness(n, largest_small_divisor(n));
        }
      },
      request.strategy);
  BuiltTree bt = tree_from_witness(w);
  if (degree_profile(bt.tree.tree()).max_degree >= n) {
    throw std::logic_error("gap construction produced maximum degree >= n");
  }
  return bt;
}

}  // namespace treemu
