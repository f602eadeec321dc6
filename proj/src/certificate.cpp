#include "treemu/certificate.hpp"

#include <algorithm>
#include <cctype>

namespace treemu {

namespace {

std::string describe_path(const std::vector<std::size_t>& path) {
  std::string out = "at node [";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(path[i]);
  }
  return out + "]";
}

}  // namespace

CertificateError::CertificateError(ErrorCode code, std::vector<std::size_t> path, const std::string& what)
    : Error(code, describe_path(path) + ": " + what), path_(std::move(path)) {}

Certificate Certificate::derived(std::vector<Certificate> children) {
  if (children.empty()) throw Error(ErrorCode::InvalidArgument, "a derived certificate needs at least one child");
  auto node = std::make_shared<Node>();
  node->max_arity = children.size();
  for (const auto& c : children) {
    node->nodes += c.node_count();
    node->max_arity = std::max(node->max_arity, c.max_arity());
    node->depth = std::max(node->depth, c.depth() + 1);
  }
  node->children = std::move(children);
  Certificate out;
  out.node_ = std::move(node);
  return out;
}

std::span<const Certificate> Certificate::children() const noexcept {
  if (!node_) return {};
  return node_->children;
}

std::size_t Certificate::node_count() const noexcept { return node_ ? node_->nodes : 1; }
std::size_t Certificate::max_arity() const noexcept { return node_ ? node_->max_arity : 0; }
std::size_t Certificate::depth() const noexcept { return node_ ? node_->depth : 0; }

std::strong_ordering operator<=>(const Certificate& a, const Certificate& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.node_count() <=> b.node_count(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  const auto ka = a.children();
  const auto kb = b.children();
  for (std::size_t i = 0; i < ka.size(); ++i) {
    if (auto c = ka[i] <=> kb[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void write(const Certificate& c, std::string& out) {
  if (c.is_base()) {
    out += '*';
    return;
  }
  out += '(';
  for (const auto& child : c.children()) {
    out += ' ';
    write(child, out);
  }
  out += " )";
}

class CertificateParser {
 public:
  CertificateParser(std::string_view text, std::optional<std::size_t> max_children)
      : text_(text), max_children_(max_children) {}

  Certificate parse() {
    Certificate c = node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters");
    return c;
  }

 private:
  Certificate node() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_++];
    if (ch == '*') return Certificate::base();
    if (ch != '(') fail(std::string("unexpected '") + ch + "'");
    std::vector<Certificate> children;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) fail("unterminated '('");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      children.push_back(node());
    }
    if (children.empty()) fail("empty derived node");
    if (max_children_ && children.size() > *max_children_) {
      throw Error(ErrorCode::ArityExceeded, "node with " + std::to_string(children.size()) +
                                                " children exceeds the limit " + std::to_string(*max_children_));
    }
    return Certificate::derived(std::move(children));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::MalformedInput, "certificate, offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::optional<std::size_t> max_children_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Certificate& c) {
  std::string out;
  write(c, out);
  return out;
}

Certificate parse_certificate(std::string_view text, std::optional<std::size_t> max_children) {
  return CertificateParser(text, max_children).parse();
}

}  // namespace treemu
