#include "treemu/lset.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace treemu {

void validate(const SearchBudget& budget) {
  if (budget.max_certificates == 0 || budget.max_nodes_per_certificate == 0 || budget.max_denominator_bits == 0 ||
      budget.max_values == 0) {
    throw Error(ErrorCode::InvalidArgument, "every search budget field must be positive");
  }
}

std::string to_string(const SearchBudget& budget) {
  std::ostringstream out;
  out << "max_certificates=" << budget.max_certificates << " max_nodes=" << budget.max_nodes_per_certificate
      << " max_denominator_bits=" << budget.max_denominator_bits << " max_values=" << budget.max_values;
  return out.str();
}

const LsetEntry* LsetEnumeration::find(const Rational& value) const {
  for (const auto& e : entries) {
    if (e.value == value) return &e;
  }
  return nullptr;
}

namespace {

class LsetSearch {
 public:
  LsetSearch(const Rational& alpha, std::size_t r, const SearchBudget& budget)
      : alpha_(alpha), max_children_(r - 1), budget_(budget) {}

  LsetEnumeration run() {
    add(alpha_ - 1, Certificate::base(), 1);
    std::size_t max_size = 1;
    for (std::size_t n = 2; !stop_; ++n) {
      if (n - 1 > max_children_ * max_size) break;  // no multiset can reach this size
      if (n > budget_.max_nodes_per_certificate) {
        truncated_ = true;
        break;
      }
      round_size_ = n;
      available_ = entries_.size();
      chosen_.clear();
      extend(0, n - 1, Rational(0));
      for (std::size_t i = available_; i < entries_.size(); ++i) max_size = std::max(max_size, sizes_[i]);
    }
    LsetEnumeration out;
    out.entries = std::move(entries_);
    out.truncated = truncated_;
    out.budget = budget_;
    return out;
  }

 private:
  void add(const Rational& value, Certificate cert, std::size_t size) {
    index_.emplace(value, entries_.size());
    terms_.push_back(1 + 1 / value);
    sizes_.push_back(size);
    entries_.push_back({value, std::move(cert)});
  }

  // Chooses children with non-decreasing entry index whose sizes sum to
  // `remaining`; `partial` is the sum of (1 + 1/q) over the chosen ones.
  void extend(std::size_t start, std::size_t remaining, const Rational& partial) {
    const std::size_t slots = max_children_ - chosen_.size();
    if (slots == 0) return;
    for (std::size_t i = start; i < available_ && !stop_; ++i) {
      if (sizes_[i] > remaining) break;
      // Sizes are non-decreasing in i, so the rest cannot be filled either.
      if (sizes_[available_ - 1] * slots < remaining) return;
      Rational next = partial + terms_[i];
      if (alpha_ - 1 - next <= 0) continue;
      chosen_.push_back(i);
      if (sizes_[i] == remaining) {
        emit(next);
      } else {
        extend(i, remaining - sizes_[i], next);
      }
      chosen_.pop_back();
    }
  }

  void emit(const Rational& sum_terms) {
    if (++examined_ > budget_.max_certificates) {
      truncated_ = stop_ = true;
      return;
    }
    Rational value = alpha_ - 1 - sum_terms;
    if (denominator_bits(value) > budget_.max_denominator_bits) {
      truncated_ = true;
      return;
    }
    std::vector<Certificate> kids;
    kids.reserve(chosen_.size());
    for (std::size_t i : chosen_) kids.push_back(entries_[i].certificate);
    auto it = index_.find(value);
    if (it != index_.end()) {
      // Same value found earlier this round: keep the structurally smaller.
      if (sizes_[it->second] == round_size_) {
        Certificate candidate = Certificate::derived(std::move(kids));
        if (candidate < entries_[it->second].certificate) entries_[it->second].certificate = std::move(candidate);
      }
      return;
    }
    if (entries_.size() >= budget_.max_values) {
      truncated_ = stop_ = true;
      return;
    }
    add(value, Certificate::derived(std::move(kids)), round_size_);
  }

  Rational alpha_;
  std::size_t max_children_;
  SearchBudget budget_;
  std::vector<LsetEntry> entries_;
  std::vector<Rational> terms_;
  std::vector<std::size_t> sizes_;
  std::map<Rational, std::size_t> index_;
  std::vector<std::size_t> chosen_;
  std::size_t available_ = 0;
  std::size_t round_size_ = 1;
  std::size_t examined_ = 0;
  bool truncated_ = false;
  bool stop_ = false;
};

void require_alpha_r(const Rational& alpha, std::size_t r) {
  if (alpha <= 1) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1, got " + to_string(alpha));
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be at least 1");
}

}  // namespace

LsetEnumeration enumerate_lset(const Rational& alpha, std::size_t r, const SearchBudget& budget) {
  require_alpha_r(alpha, r);
  validate(budget);
  return LsetSearch(alpha, r, budget).run();
}

std::size_t Witness::size() const {
  std::size_t s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

std::vector<Certificate> Witness::roots() const {
  std::vector<Certificate> out;
  for (const auto& e : entries) out.insert(out.end(), e.multiplicity, e.certificate);
  return out;
}

Witness make_witness(const Rational& alpha, std::size_t r, std::span<const Certificate> roots) {
  if (alpha <= 1) throw Error(ErrorCode::InvalidWitness, "alpha must exceed 1");
  if (r < 1) throw Error(ErrorCode::InvalidWitness, "r must be at least 1");
  if (roots.empty() || roots.size() > r) {
    throw Error(ErrorCode::InvalidWitness,
                "witness size " + std::to_string(roots.size()) + " outside 1.." + std::to_string(r));
  }
  std::vector<std::pair<Rational, Certificate>> valued;
  valued.reserve(roots.size());
  CertificateEvaluator<Rational> evaluate(alpha, r);
  for (const auto& c : roots) {
    try {
      valued.emplace_back(evaluate(c), c);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidWitness, std::string("invalid certificate: ") + e.what());
    }
  }
  std::sort(valued.begin(), valued.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  Witness w{alpha, r, {}};
  for (auto& [value, cert] : valued) {
    if (!w.entries.empty() && w.entries.back().value == value && w.entries.back().certificate == cert) {
      ++w.entries.back().multiplicity;
    } else {
      w.entries.push_back({value, cert, 1});
    }
  }
  validate(w);
  return w;
}

void validate(const Witness& w) {
  if (w.alpha <= 1 || w.r < 1) throw Error(ErrorCode::InvalidWitness, "alpha must exceed 1 and r must be positive");
  const std::size_t s = w.size();
  if (s < 1 || s > w.r) {
    throw Error(ErrorCode::InvalidWitness, "witness size " + std::to_string(s) + " outside 1.." + std::to_string(w.r));
  }
  Rational sum = 0;
  CertificateEvaluator<Rational> evaluate(w.alpha, w.r);
  for (const auto& e : w.entries) {
    if (e.multiplicity == 0) throw Error(ErrorCode::InvalidWitness, "zero multiplicity");
    Rational value;
    try {
      value = evaluate(e.certificate);
    } catch (const Error& err) {
      throw Error(ErrorCode::InvalidWitness, std::string("invalid certificate: ") + err.what());
    }
    if (value != e.value) throw Error(ErrorCode::InvalidWitness, "recorded value disagrees with its certificate");
    sum += Rational(static_cast<long>(e.multiplicity)) / value;
  }
  const Rational target = w.alpha - Rational(static_cast<long>(s));
  if (sum != target) {
    throw Error(ErrorCode::InvalidWitness,
                "sum of reciprocals is " + to_string(sum) + ", expected alpha - s = " + to_string(target));
  }
}

Witness witness_from_pair(const Certificate& a, const Certificate& b, const Rational& alpha, std::size_t r) {
  if (a.is_base() && b.is_base() && alpha != 2) {
    throw Error(ErrorCode::BaseWithAlphaNot2, "two base certificates multiply to 1 only when alpha = 2");
  }
  const Rational va = cert_value(a, alpha, r);
  const Rational vb = cert_value(b, alpha, r);
  if (va * vb != 1) {
    throw Error(ErrorCode::NotReciprocal, to_string(va) + " * " + to_string(vb) + " != 1");
  }
  if (a.is_base() && alpha == 2) {
    const Certificate one[] = {a};
    return make_witness(alpha, r, one);
  }
  const Certificate& derived = a.is_base() ? b : a;
  const Certificate& other = a.is_base() ? a : b;
  std::vector<Certificate> roots(derived.children().begin(), derived.children().end());
  roots.push_back(other);
  return make_witness(alpha, r, roots);
}

namespace {

class SubsetSumSearch {
 public:
  SubsetSumSearch(const Rational& alpha, std::size_t r, std::span<const LsetEntry> entries, std::size_t max_steps)
      : alpha_(alpha), r_(r), max_steps_(max_steps) {
    for (std::size_t i = 0; i < entries.size(); ++i) items_.push_back({1 + 1 / entries[i].value, i});
    std::sort(items_.begin(), items_.end(), [](const auto& x, const auto& y) {
      if (x.term != y.term) return x.term < y.term;
      return x.index < y.index;
    });
  }

  /// Indices into the entry list whose terms 1 + 1/q sum to alpha.
  std::optional<std::vector<std::size_t>> run() {
    if (items_.empty()) return std::nullopt;
    if (descend(0, r_, Rational(0))) return found_;
    return std::nullopt;
  }

 private:
  struct Item {
    Rational term;
    std::size_t index;
  };

  bool descend(std::size_t start, std::size_t slots, const Rational& partial) {
    for (std::size_t j = start; j < items_.size(); ++j) {
      if (++steps_ > max_steps_) return false;
      Rational next = partial + items_[j].term;
      if (next > alpha_) break;
      // Even filling every slot with the largest term cannot reach alpha.
      if (next + Rational(static_cast<long>(slots - 1)) * items_.back().term < alpha_) continue;
      chosen_.push_back(items_[j].index);
      if (next == alpha_) {
        found_ = chosen_;
        return true;
      }
      if (slots > 1 && descend(j, slots - 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  Rational alpha_;
  std::size_t r_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
  std::vector<Item> items_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> found_;
};

}  // namespace

WitnessSearchResult search_witness(const Rational& alpha, std::size_t r, const SearchBudget& budget) {
  if (alpha < 2) throw Error(ErrorCode::InvalidArgument, "witness search needs alpha >= 2, got " + to_string(alpha));
  require_alpha_r(alpha, r);
  const LsetEnumeration lset = enumerate_lset(alpha, r, budget);

  WitnessSearchResult result;
  result.values_examined = lset.entries.size();
  result.enumeration_truncated = lset.truncated;
  std::map<Rational, const LsetEntry*> by_value;
  for (const auto& e : lset.entries) by_value.emplace(e.value, &e);

  // k copies of q with k/q = alpha - k, i.e. k = q alpha / (q + 1); values
  // are tried in enumeration order so the smallest certificate wins.
  for (const auto& e : lset.entries) {
    const Rational k = e.value * alpha / (e.value + 1);
    if (k.get_den() != 1 || k < 1 || k > r) continue;
    const std::vector<Certificate> roots(k.get_num().get_ui(), e.certificate);
    result.witness = make_witness(alpha, r, roots);
    result.strategy = WitnessStrategy::EqualCopies;
    return result;
  }

  for (const auto& a : lset.entries) {
    if (auto it = by_value.find(1 / a.value); it != by_value.end()) {
      result.witness = witness_from_pair(a.certificate, it->second->certificate, alpha, r);
      result.strategy = WitnessStrategy::ReciprocalPair;
      return result;
    }
  }

  if (auto picked = SubsetSumSearch(alpha, r, lset.entries, budget.max_certificates).run()) {
    std::vector<Certificate> roots;
    for (std::size_t i : *picked) roots.push_back(lset.entries[i].certificate);
    result.witness = make_witness(alpha, r, roots);
    result.strategy = WitnessStrategy::SubsetSum;
  }
  return result;
}

std::string to_witness_text(const Witness& w) {
  std::ostringstream out;
  out << "alpha " << to_string(w.alpha) << '\n' << "r " << w.r << '\n' << "s " << w.size() << '\n';
  for (const auto& c : w.roots()) out << to_string(c) << '\n';
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string_view header_value(std::string_view line, std::string_view key) {
  line = trim(line);
  if (line.substr(0, key.size()) != key || line.size() <= key.size() || line[key.size()] != ' ') {
    throw Error(ErrorCode::MalformedInput, "expected '" + std::string(key) + " <value>', got '" + std::string(line) + "'");
  }
  return trim(line.substr(key.size() + 1));
}

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::MalformedInput, "not a non-negative integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Witness parse_witness(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.size() < 3) throw Error(ErrorCode::MalformedInput, "witness file needs alpha, r and s header lines");
  const Rational alpha = parse_rational(header_value(lines[0], "alpha"));
  const std::size_t r = parse_count(header_value(lines[1], "r"));
  const std::size_t s = parse_count(header_value(lines[2], "s"));
  if (r < 1) throw Error(ErrorCode::MalformedInput, "r must be at least 1");
  if (lines.size() - 3 != s) {
    throw Error(ErrorCode::MalformedInput,
                "header announces " + std::to_string(s) + " certificates, found " + std::to_string(lines.size() - 3));
  }
  std::vector<Certificate> roots;
  for (std::size_t i = 3; i < lines.size(); ++i) roots.push_back(parse_certificate(lines[i], r - 1));
  return make_witness(alpha, r, roots);
}

}  // namespace treemu
