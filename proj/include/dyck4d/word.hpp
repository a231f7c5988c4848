#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck4d/error.hpp"
#include "dyck4d/vec4.hpp"

namespace dyck4d {

enum class Step : std::uint8_t { Open = 0, Close = 1 };

constexpr char step_char(Step s) noexcept { return s == Step::Open ? '(' : ')'; }

constexpr Vec4 step_vector(Step s) noexcept { return s == Step::Open ? kUp : kDown; }

namespace detail {

// Positions reported by NegativePrefix are prefix lengths in steps: the
// offending step is the k-th one read, and the path node it would produce
// is node k.
inline void check_steps(std::span<const Step> steps) {
  std::int64_t balance = 0;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    balance += steps[k] == Step::Open ? 1 : -1;
    if (balance < 0) {
      throw Error(ErrorKind::NegativePrefix,
                  "closes exceed opens at step " + std::to_string(k + 1),
                  static_cast<std::int64_t>(k + 1));
    }
  }
  if (balance != 0) {
    throw Error(ErrorKind::Unbalanced,
                "word ends with " + std::to_string(balance) + " unclosed parentheses",
                balance);
  }
}

}  // namespace detail

/// A balanced parenthesis word of length 2n. Instances are always valid:
/// every prefix has at least as many opens as closes and the totals match.
class DyckWord {
 public:
  DyckWord() = default;

  /// Validates and wraps `steps`; throws NegativePrefix or Unbalanced.
  static DyckWord from_steps(std::vector<Step> steps) {
    detail::check_steps(steps);
    return DyckWord(std::move(steps));
  }

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t half_length() const noexcept { return steps_.size() / 2; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t k) const noexcept { return steps_[k]; }

  // Open < Close, so this is string order of the rendered words.
  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  friend auto operator<=>(const DyckWord&, const DyckWord&) = default;

 private:
  explicit DyckWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

constexpr bool is_ascii_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

/// Parses a parenthesis string. ASCII whitespace is skipped.
///
/// Errors, reported for the first failure met while scanning left to right:
/// - InvalidCharacter(offset): 0-based offset in `text` of a character
///   other than '(', ')' or whitespace.
/// - NegativePrefix(k): the k-th step read drives the balance below zero.
/// - Unbalanced(excess): input ended with `excess` unclosed opens.
inline DyckWord parse_word(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  std::int64_t balance = 0;
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (is_ascii_space(c)) continue;
    if (c != '(' && c != ')') {
      throw Error(ErrorKind::InvalidCharacter,
                  "unexpected character at offset " + std::to_string(pos),
                  static_cast<std::int64_t>(pos));
    }
    const Step s = c == '(' ? Step::Open : Step::Close;
    steps.push_back(s);
    balance += s == Step::Open ? 1 : -1;
    if (balance < 0) {
      throw Error(ErrorKind::NegativePrefix,
                  "closes exceed opens at step " + std::to_string(steps.size()),
                  static_cast<std::int64_t>(steps.size()));
    }
  }
  return DyckWord::from_steps(std::move(steps));
}

inline std::string render_word(const DyckWord& word) {
  std::string out;
  out.reserve(word.size());
  for (Step s : word.steps()) out.push_back(step_char(s));
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const DyckWord& w) {
  return os << '"' << render_word(w) << '"';
}

/// Origin-anchored walk in the Catalan lattice whose steps are `kUp` and
/// `kDown` and which never leaves j >= 0. A path need not return to j = 0;
/// prefixes of Dyck words are paths too.
class Path4D {
 public:
  Path4D() : nodes_{kOrigin} {}

  /// Validates `nodes`; throws MalformedPath(index) at the first node that
  /// is off-origin (index 0), reached by a delta other than up/down, or
  /// has negative unbalance.
  static Path4D from_nodes(std::vector<LatticeNode> nodes) {
    if (nodes.empty() || nodes.front() != kOrigin) {
      throw Error(ErrorKind::MalformedPath, "path must start at the origin", 0);
    }
    for (std::size_t k = 1; k < nodes.size(); ++k) {
      const Vec4 delta = nodes[k] - nodes[k - 1];
      if (delta != kUp && delta != kDown) {
        throw Error(ErrorKind::MalformedPath,
                    "node " + std::to_string(k) + " is not one step from its predecessor",
                    static_cast<std::int64_t>(k));
      }
      if (nodes[k].j < 0) {
        throw Error(ErrorKind::MalformedPath,
                    "node " + std::to_string(k) + " has negative unbalance",
                    static_cast<std::int64_t>(k));
      }
    }
    return Path4D(std::move(nodes));
  }

  std::span<const LatticeNode> nodes() const& noexcept { return nodes_; }
  std::span<const LatticeNode> nodes() const&& = delete;  // would dangle
  std::size_t size() const noexcept { return nodes_.size(); }
  const LatticeNode& operator[](std::size_t k) const noexcept { return nodes_[k]; }
  const LatticeNode& back() const noexcept { return nodes_.back(); }

  friend bool operator==(const Path4D&, const Path4D&) = default;

 private:
  explicit Path4D(std::vector<LatticeNode> nodes) : nodes_(std::move(nodes)) {}

  std::vector<LatticeNode> nodes_;
};

/// Node k of the result has read k steps: l opens, r closes, i = l + r,
/// j = l - r. The last node of a word of half-length n is (2n, 0, n, n).
inline Path4D word_to_path(const DyckWord& word) {
  std::vector<LatticeNode> nodes;
  nodes.reserve(word.size() + 1);
  LatticeNode at = kOrigin;
  nodes.push_back(at);
  for (Step s : word.steps()) {
    at = at + step_vector(s);
    nodes.push_back(at);
  }
  return Path4D::from_nodes(std::move(nodes));
}

/// Inverse of word_to_path. Throws Unbalanced if the path does not end at
/// j = 0 (it is then a proper prefix of a Dyck path).
inline DyckWord path_to_word(const Path4D& path) {
  std::vector<Step> steps;
  steps.reserve(path.size() - 1);
  for (std::size_t k = 1; k < path.size(); ++k) {
    steps.push_back(path[k] - path[k - 1] == kUp ? Step::Open : Step::Close);
  }
  return DyckWord::from_steps(std::move(steps));
}

}  // namespace dyck4d
