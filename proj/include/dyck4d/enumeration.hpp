#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyck4d/error.hpp"
#include "dyck4d/lattice.hpp"
#include "dyck4d/word.hpp"

namespace dyck4d {

/// Position of a word in the lexicographic order of its half-length.
struct Rank {
  BigInt value;

  friend bool operator==(const Rank&, const Rank&) = default;
};

/// The n-th Catalan number, via C(k+1) = C(k) * 2(2k+1) / (k+2).
inline BigInt catalan(std::size_t n) {
  BigInt c = 1;
  for (std::size_t k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= k + 2;
  }
  return c;
}

/// Completion counts for words of half-length n: entry [m][b] is the number
/// of ways to finish a word with m steps left at balance b.
class Ranker {
 public:
  explicit Ranker(std::size_t n) : n_(n), table_(2 * n + 1, std::vector<BigInt>(n + 2)) {
    table_[0][0] = 1;
    for (std::size_t m = 1; m <= 2 * n; ++m) {
      for (std::size_t b = 0; b <= n; ++b) {
        BigInt ways = table_[m - 1][b + 1];
        if (b > 0) ways += table_[m - 1][b - 1];
        table_[m][b] = std::move(ways);
      }
    }
  }

  std::size_t half_length() const noexcept { return n_; }
  const BigInt& total() const noexcept { return table_[2 * n_][0]; }

  /// Throws WrongArity if the word's half-length differs from this ranker's.
  Rank rank(const DyckWord& word) const {
    if (word.half_length() != n_) {
      throw Error(ErrorKind::WrongArity, "word half-length does not match the ranker");
    }
    BigInt k = 0;
    std::size_t balance = 0;
    const std::size_t len = 2 * n_;
    for (std::size_t p = 0; p < len; ++p) {
      if (word[p] == Step::Close) {
        // Every word sharing this prefix but opening here sorts earlier.
        k += completions(len - p - 1, balance + 1);
        --balance;
      } else {
        ++balance;
      }
    }
    return {std::move(k)};
  }

  /// Throws RankOutOfRange unless 0 <= k < catalan(n).
  DyckWord unrank(const Rank& k) const {
    if (k.value < 0 || k.value >= total()) {
      throw Error(ErrorKind::RankOutOfRange, "rank " + k.value.str() + " is out of range");
    }
    BigInt rest = k.value;
    std::vector<Step> steps;
    steps.reserve(2 * n_);
    std::size_t balance = 0;
    const std::size_t len = 2 * n_;
    for (std::size_t p = 0; p < len; ++p) {
      const BigInt& with_open = completions(len - p - 1, balance + 1);
      if (rest < with_open) {
        steps.push_back(Step::Open);
        ++balance;
      } else {
        rest -= with_open;
        steps.push_back(Step::Close);
        --balance;
      }
    }
    return DyckWord::from_steps(std::move(steps));
  }

 private:
  const BigInt& completions(std::size_t remaining, std::size_t balance) const {
    static const BigInt zero = 0;
    if (balance > n_ + 1) return zero;
    return table_[remaining][balance];
  }

  std::size_t n_;
  std::vector<std::vector<BigInt>> table_;
};

inline Rank rank(const DyckWord& word) { return Ranker(word.half_length()).rank(word); }

inline DyckWord unrank(const Rank& k, std::size_t n) { return Ranker(n).unrank(k); }

/// Pull-style generator of all words of half-length n in lexicographic
/// order ('(' < ')'). Each call to next() yields the successor of the
/// previous word, or nullopt once the order is exhausted.
class WordEnumerator {
 public:
  explicit WordEnumerator(std::size_t n) : n_(n) {}

  std::optional<DyckWord> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      steps_.assign(n_, Step::Open);
      steps_.resize(2 * n_, Step::Close);
      return DyckWord::from_steps(steps_);
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return DyckWord::from_steps(steps_);
  }

 private:
  // Flips the rightmost Open that can become a Close without the balance
  // going negative, then refills the suffix with its smallest completion.
  bool advance() {
    const std::size_t len = steps_.size();
    std::vector<std::int64_t> balance_before(len + 1, 0);
    for (std::size_t p = 0; p < len; ++p) {
      balance_before[p + 1] = balance_before[p] + (steps_[p] == Step::Open ? 1 : -1);
    }
    for (std::size_t p = len; p-- > 0;) {
      if (steps_[p] != Step::Open || balance_before[p] < 1) continue;
      std::size_t opens = 0;
      for (std::size_t q = 0; q < p; ++q) opens += steps_[q] == Step::Open ? 1 : 0;
      steps_[p] = Step::Close;
      std::size_t q = p + 1;
      for (std::size_t left = n_ - opens; left > 0; --left) steps_[q++] = Step::Open;
      while (q < len) steps_[q++] = Step::Close;
      return true;
    }
    return false;
  }

  std::size_t n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<Step> steps_;
};

inline std::vector<DyckWord> enumerate_words(std::size_t n) {
  std::vector<DyckWord> out;
  WordEnumerator gen(n);
  while (auto w = gen.next()) out.push_back(std::move(*w));
  return out;
}

/// Uniform draw of a rank below catalan(n), by rejection.
///
/// The generator is std::mt19937_64 seeded with `seed`. A candidate is
/// built from ceil(b / 64) successive outputs, most significant first, and
/// truncated to its low b bits, where b is the bit length of
/// catalan(n) - 1. Candidates >= catalan(n) are discarded.
inline Rank sample_rank(std::size_t n, std::uint64_t seed) {
  const BigInt total = catalan(n);
  if (total == 1) return {0};
  const BigInt top = total - 1;
  const std::size_t bits = boost::multiprecision::msb(top) + 1;
  const std::size_t blocks = (bits + 63) / 64;
  const BigInt mask = (BigInt(1) << bits) - 1;
  std::mt19937_64 gen(seed);
  for (;;) {
    BigInt candidate = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      candidate <<= 64;
      candidate |= BigInt(gen());
    }
    candidate &= mask;
    if (candidate < total) return {std::move(candidate)};
  }
}

inline DyckWord sample_uniform(std::size_t n, std::uint64_t seed) {
  return unrank(sample_rank(n, seed), n);
}

}  // namespace dyck4d
