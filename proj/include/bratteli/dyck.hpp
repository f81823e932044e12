#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "bratteli/count.hpp"

namespace bratteli::dyck {

enum class Step : std::uint8_t { Up, Down };

/// A lattice path of up-steps (1,1) and down-steps (1,-1) from the origin.
class StepPath {
 public:
  StepPath() = default;
  explicit StepPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Parses a word over {u, d}; throws DomainError on any other character.
  static StepPath parse(std::string_view word);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t length() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }

  /// Final height (#u - #d); may be negative for invalid paths.
  std::int64_t end_height() const noexcept;
  /// Maximum height over all prefixes (0 for the empty path).
  std::int64_t max_height() const noexcept;
  /// No prefix dips below the x-axis.
  bool is_nonnegative() const noexcept;

  void push(Step s) { steps_.push_back(s); }
  void pop() { steps_.pop_back(); }

  std::string str() const;

  friend bool operator==(const StepPath&, const StepPath&) = default;

 private:
  std::vector<Step> steps_;
};

inline constexpr std::uint32_t kMaxEnumerationLength = 26;
inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 28;

/// Counts, one path at a time, the step sequences of length j from the origin
/// to height i whose heights stay within [0, k]. Throws DomainError when
/// j > kMaxEnumerationLength and BudgetExceeded after `budget` search nodes.
Count enumerate_count(const Query& q, std::uint64_t budget = kDefaultNodeBudget);

/// Calls fn for every bounded path of the query, in lexicographic order with
/// u < d. Same limits as enumerate_count.
template <typename Fn>
void for_each_path(const Query& q, Fn&& fn,
                   std::uint64_t budget = kDefaultNodeBudget);

/// Splits a k-bounded path ending at height i into P_1 u P_2 u ... u P_{i+1}
/// at the last departure from each level 0..i-1. Each factor P_s is a Dyck
/// path relative to its baseline s-1 with height at most k+1-s.
/// Throws DomainError if p dips below 0 or rises above k.
std::vector<StepPath> factorize(const StepPath& p, Level k);

/// Inverse of factorize: P_1 u P_2 u ... u P_n.
StepPath join_factors(const std::vector<StepPath>& factors);

namespace detail {
void check_enumerable(const Query& q);
[[noreturn]] void throw_budget(const Query& q, std::uint64_t budget);
}  // namespace detail

template <typename Fn>
void for_each_path(const Query& q, Fn&& fn, std::uint64_t budget) {
  detail::check_enumerable(q);
  StepPath path;
  std::uint64_t nodes = 0;
  const std::int64_t k = q.k, target = q.i, len = q.j;
  auto walk = [&](auto&& self, std::int64_t height) -> void {
    if (++nodes > budget) detail::throw_budget(q, budget);
    const auto remaining = len - static_cast<std::int64_t>(path.length());
    if (remaining == 0) {
      if (height == target) fn(static_cast<const StepPath&>(path));
      return;
    }
    // The target must stay within reach of the remaining steps.
    if (height + 1 <= k && std::abs(height + 1 - target) <= remaining - 1) {
      path.push(Step::Up);
      self(self, height + 1);
      path.pop();
    }
    if (height - 1 >= 0 && std::abs(height - 1 - target) <= remaining - 1) {
      path.push(Step::Down);
      self(self, height - 1);
      path.pop();
    }
  };
  walk(walk, 0);
}

}  // namespace bratteli::dyck
