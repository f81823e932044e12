#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bratteli/count.hpp"

namespace bratteli {

/// D_k(i,j) by the column recurrence D(i,j) = D(i-1,j-1) + D(i+1,j-1), with
/// heights outside 0..k read as 0. Keeps two columns of k+1 counts.
Count count_dp(const Query& q);

/// D_k(i,j) as entry (0,i) of A^j, A the adjacency matrix of the path graph
/// on heights 0..k, by binary exponentiation.
Count count_matrix_power(const Query& q);

struct Degrees {
  std::uint32_t in = 0;
  std::uint32_t out = 0;

  friend bool operator==(const Degrees&, const Degrees&) = default;
};

/// In- and outdegree of a reachable vertex, counting arcs (j,i) -> (j+1,i±1)
/// that stay inside heights 0..k and touch only reachable vertices.
/// Throws DomainError for unreachable vertices.
Degrees degrees(Level k, std::uint32_t i, std::uint32_t j);

/// Immutable table of every nonzero D_k(i,j) with j <= jmax.
class CountTable {
 public:
  struct Entry {
    std::uint32_t i;
    std::uint32_t j;
    const Count& count;
  };

  Level k() const noexcept { return k_; }
  std::uint32_t jmax() const noexcept { return jmax_; }
  std::size_t size() const noexcept { return size_; }

  /// Pointer to the count at (i,j), or nullptr where the vertex is
  /// unreachable or beyond jmax.
  const Count* find(std::uint32_t i, std::uint32_t j) const noexcept;

  /// Count at (i,j); 0 where find() would return nullptr.
  Count at(std::uint32_t i, std::uint32_t j) const;

  /// Visits entries sorted by (j, i).
  void for_each(const std::function<void(const Entry&)>& fn) const;

  friend bool operator==(const CountTable& a, const CountTable& b);

 private:
  friend CountTable build_table(Level, std::uint32_t, std::size_t);
  friend class CountTableBuilder;

  CountTable(Level k, std::uint32_t jmax) : k_(k), jmax_(jmax) {}

  Level k_;
  std::uint32_t jmax_;
  std::size_t size_ = 0;
  // columns_[j][n] holds height i = (j & 1) + 2n, for i <= min(k, j).
  std::vector<std::vector<Count>> columns_;
};

/// Number of entries build_table(k, jmax) would hold.
std::size_t table_entry_count(Level k, std::uint32_t jmax) noexcept;

inline constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 24;

/// All reachable entries for j <= jmax in a single pass. Throws ResourceError
/// when more than max_entries entries would be materialized.
CountTable build_table(Level k, std::uint32_t jmax,
                       std::size_t max_entries = kDefaultTableBudget);

/// Assembles a CountTable from externally supplied entries (deserialization).
/// finish() checks that exactly the reachable vertices are present and that
/// every entry satisfies the recurrence; violations throw ParseError.
class CountTableBuilder {
 public:
  CountTableBuilder(Level k, std::uint32_t jmax);

  void add(std::uint32_t i, std::uint32_t j, Count count);
  CountTable finish() &&;

 private:
  CountTable table_;
  std::vector<std::vector<bool>> seen_;
};

}  // namespace bratteli
