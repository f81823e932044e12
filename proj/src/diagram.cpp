#include "bratteli/diagram.hpp"

#include <algorithm>

#include "bratteli/errors.hpp"

namespace bratteli {

std::string to_string(const Query& q) {
  return "(k=" + std::to_string(q.k) + ", i=" + std::to_string(q.i) +
         ", j=" + std::to_string(q.j) + ")";
}

Count count_dp(const Query& q) {
  if (!is_reachable(q)) return 0;
  const std::size_t rows = std::size_t{q.k} + 1;
  std::vector<Count> col(rows), next(rows);
  col[0] = 1;
  for (std::uint32_t step = 1; step <= q.j; ++step) {
    // Heights above `step` are still zero; no need to touch them.
    const std::size_t top = std::min<std::size_t>(q.k, step);
    for (std::size_t h = 0; h <= top; ++h) {
      Count& c = next[h];
      c = 0;
      if (h > 0) c += col[h - 1];
      if (h + 1 < rows) c += col[h + 1];
    }
    std::swap(col, next);
  }
  return col[q.i];
}

namespace {

using Matrix = std::vector<std::vector<Count>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Count>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t t = 0; t < n; ++t) {
      if (a[r][t] == 0) continue;
      for (std::size_t s = 0; s < n; ++s) c[r][s] += a[r][t] * b[t][s];
    }
  return c;
}

}  // namespace

Count count_matrix_power(const Query& q) {
  if (q.i > q.k) return 0;
  const std::size_t n = std::size_t{q.k} + 1;
  Matrix base(n, std::vector<Count>(n));
  for (std::size_t h = 0; h + 1 < n; ++h) base[h][h + 1] = base[h + 1][h] = 1;
  Matrix result(n, std::vector<Count>(n));
  for (std::size_t h = 0; h < n; ++h) result[h][h] = 1;
  for (std::uint32_t e = q.j; e != 0; e >>= 1) {
    if (e & 1U) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return result[0][q.i];
}

Degrees degrees(Level k, std::uint32_t i, std::uint32_t j) {
  if (!is_reachable(k, i, j))
    throw DomainError("vertex " + to_string(Query{k, i, j}) + " is not reachable");
  Degrees d;
  if (j > 0) {
    if (i > 0 && is_reachable(k, i - 1, j - 1)) ++d.in;
    if (i < k && is_reachable(k, i + 1, j - 1)) ++d.in;
  }
  if (i > 0) ++d.out;
  if (i < k) ++d.out;
  return d;
}

// ---------------------------------------------------------------------------
// CountTable

namespace {

std::size_t column_size(Level k, std::uint32_t j) noexcept {
  if (k == 0) return j == 0 ? 1 : 0;
  const std::uint32_t top = std::min<std::uint32_t>(k, j);
  const std::uint32_t base = j & 1U;
  return top < base ? 0 : (top - base) / 2 + 1;
}

}  // namespace

std::size_t table_entry_count(Level k, std::uint32_t jmax) noexcept {
  if (k == 0) return 1;
  std::size_t n = 0;
  for (std::uint32_t j = 0; j <= jmax; ++j) n += column_size(k, j);
  return n;
}

const Count* CountTable::find(std::uint32_t i, std::uint32_t j) const noexcept {
  if (j > jmax_ || !is_reachable(k_, i, j)) return nullptr;
  return &columns_[j][i / 2];
}

Count CountTable::at(std::uint32_t i, std::uint32_t j) const {
  const Count* c = find(i, j);
  return c ? *c : Count(0);
}

void CountTable::for_each(const std::function<void(const Entry&)>& fn) const {
  for (std::uint32_t j = 0; j <= jmax_; ++j) {
    const auto& col = columns_[j];
    for (std::size_t n = 0; n < col.size(); ++n)
      fn(Entry{static_cast<std::uint32_t>((j & 1U) + 2 * n), j, col[n]});
  }
}

bool operator==(const CountTable& a, const CountTable& b) {
  return a.k_ == b.k_ && a.jmax_ == b.jmax_ && a.columns_ == b.columns_;
}

CountTable build_table(Level k, std::uint32_t jmax, std::size_t max_entries) {
  // For k >= 1 every column holds at least one entry, so this bounds the
  // exact count below without walking a huge jmax.
  if ((k >= 1 && jmax >= max_entries) || table_entry_count(k, jmax) > max_entries)
    throw ResourceError("table for k=" + std::to_string(k) + ", jmax=" +
                        std::to_string(jmax) + " exceeds the budget of " +
                        std::to_string(max_entries) + " entries");

  CountTable t(k, jmax);
  t.columns_.resize(std::size_t{jmax} + 1);
  t.columns_[0].push_back(1);
  t.size_ = 1;
  for (std::uint32_t j = 1; j <= jmax; ++j) {
    const auto& prev = t.columns_[j - 1];
    auto& col = t.columns_[j];
    col.resize(column_size(k, j));
    for (std::size_t n = 0; n < col.size(); ++n) {
      const std::uint32_t i = (j & 1U) + 2 * static_cast<std::uint32_t>(n);
      // Neighbours i-1 and i+1 live in the previous column at n' = (i±1)/2.
      if (i > 0) col[n] += prev[(i - 1) / 2];
      if (i < k && (i + 1) / 2 < prev.size()) col[n] += prev[(i + 1) / 2];
    }
    t.size_ += col.size();
  }
  return t;
}

CountTableBuilder::CountTableBuilder(Level k, std::uint32_t jmax) : table_(k, jmax) {
  table_.columns_.resize(std::size_t{jmax} + 1);
  seen_.resize(std::size_t{jmax} + 1);
  for (std::uint32_t j = 0; j <= jmax; ++j) {
    table_.columns_[j].resize(column_size(k, j));
    seen_[j].assign(table_.columns_[j].size(), false);
  }
}

void CountTableBuilder::add(std::uint32_t i, std::uint32_t j, Count count) {
  if (j > table_.jmax_ || !is_reachable(table_.k_, i, j))
    throw ParseError("entry (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                     ") is not a reachable vertex of the table");
  auto seen = seen_[j][i / 2];
  if (seen)
    throw ParseError("duplicate entry (i=" + std::to_string(i) + ", j=" +
                     std::to_string(j) + ")");
  seen_[j][i / 2] = true;
  table_.columns_[j][i / 2] = std::move(count);
}

CountTable CountTableBuilder::finish() && {
  const Level k = table_.k_;
  std::size_t size = 0;
  for (std::uint32_t j = 0; j <= table_.jmax_; ++j) {
    for (std::size_t n = 0; n < seen_[j].size(); ++n) {
      const auto i = static_cast<std::uint32_t>((j & 1U) + 2 * n);
      if (!seen_[j][n])
        throw ParseError("missing entry (i=" + std::to_string(i) + ", j=" +
                         std::to_string(j) + ")");
      Count expected = j == 0 ? Count(1) : Count(0);
      if (j > 0) {
        if (i > 0) expected += table_.at(i - 1, j - 1);
        if (i < k) expected += table_.at(i + 1, j - 1);
      }
      if (table_.columns_[j][n] != expected)
        throw ParseError("entry (i=" + std::to_string(i) + ", j=" + std::to_string(j) +
                         ") violates the path recurrence");
    }
    size += seen_[j].size();
  }
  table_.size_ = size;
  return std::move(table_);
}

}  // namespace bratteli
