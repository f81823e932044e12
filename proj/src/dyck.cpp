#include "bratteli/dyck.hpp"

#include <algorithm>

#include "bratteli/errors.hpp"

namespace bratteli::dyck {

StepPath StepPath::parse(std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'u')
      steps.push_back(Step::Up);
    else if (c == 'd')
      steps.push_back(Step::Down);
    else
      throw DomainError(std::string("invalid step '") + c + "' in path \"" +
                        std::string(word) + "\"");
  }
  return StepPath(std::move(steps));
}

std::int64_t StepPath::end_height() const noexcept {
  std::int64_t h = 0;
  for (Step s : steps_) h += s == Step::Up ? 1 : -1;
  return h;
}

std::int64_t StepPath::max_height() const noexcept {
  std::int64_t h = 0, top = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    top = std::max(top, h);
  }
  return top;
}

bool StepPath::is_nonnegative() const noexcept {
  std::int64_t h = 0;
  for (Step s : steps_) {
    h += s == Step::Up ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

std::string StepPath::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(s == Step::Up ? 'u' : 'd');
  return out;
}

namespace detail {

void check_enumerable(const Query& q) {
  if (q.j > kMaxEnumerationLength)
    throw DomainError("enumeration of " + to_string(q) + " exceeds the length cap j <= " +
                      std::to_string(kMaxEnumerationLength));
}

void throw_budget(const Query& q, std::uint64_t budget) {
  throw BudgetExceeded("enumeration of " + to_string(q) + " exceeded its budget of " +
                       std::to_string(budget) + " nodes");
}

}  // namespace detail

Count enumerate_count(const Query& q, std::uint64_t budget) {
  Count n = 0;
  for_each_path(q, [&](const StepPath&) { ++n; }, budget);
  return n;
}

std::vector<StepPath> factorize(const StepPath& p, Level k) {
  const auto& steps = p.steps();
  // Heights after each prefix; heights[t] is the height before step t.
  std::vector<std::int64_t> heights(steps.size() + 1, 0);
  for (std::size_t t = 0; t < steps.size(); ++t) {
    heights[t + 1] = heights[t] + (steps[t] == Step::Up ? 1 : -1);
    if (heights[t + 1] < 0)
      throw DomainError("path \"" + p.str() + "\" dips below the x-axis");
    if (heights[t + 1] > static_cast<std::int64_t>(k))
      throw DomainError("path \"" + p.str() + "\" rises above height " + std::to_string(k));
  }
  const std::int64_t end = heights.back();

  // The up-step leaving level s for the last time, s = 0..end-1.
  std::vector<std::size_t> cuts(static_cast<std::size_t>(end));
  std::vector<bool> found(cuts.size(), false);
  for (std::size_t t = steps.size(); t-- > 0;) {
    if (steps[t] != Step::Up || heights[t] >= end) continue;
    const auto level = static_cast<std::size_t>(heights[t]);
    if (!found[level]) {
      found[level] = true;
      cuts[level] = t;
    }
  }

  std::vector<StepPath> factors;
  factors.reserve(cuts.size() + 1);
  std::size_t begin = 0;
  for (std::size_t s = 0; s <= cuts.size(); ++s) {
    const std::size_t stop = s < cuts.size() ? cuts[s] : steps.size();
    factors.emplace_back(std::vector<Step>(steps.begin() + static_cast<std::ptrdiff_t>(begin),
                                           steps.begin() + static_cast<std::ptrdiff_t>(stop)));
    begin = stop + 1;
  }
  return factors;
}

StepPath join_factors(const std::vector<StepPath>& factors) {
  StepPath out;
  for (std::size_t s = 0; s < factors.size(); ++s) {
    if (s > 0) out.push(Step::Up);
    for (Step st : factors[s].steps()) out.push(st);
  }
  return out;
}

}  // namespace bratteli::dyck
