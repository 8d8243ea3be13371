#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "amoeba/matrix.hpp"
#include "amoeba/partition.hpp"
#include "amoeba/subset.hpp"

namespace amoeba {

/// Matroid rank oracle r: 2^E -> N with an evaluation counter.
///
/// Oracles are immutable after construction except for the memo cache and
/// the counter, both internally synchronized; rank() is safe to call from
/// concurrent readers. The counter counts cache misses, i.e. distinct
/// logical evaluations on memoized oracles and every call on formula
/// oracles (which do not cache).
class RankOracle {
 public:
  explicit RankOracle(int ground_size, bool memoize);
  virtual ~RankOracle() = default;

  RankOracle(const RankOracle&) = delete;
  RankOracle& operator=(const RankOracle&) = delete;

  int ground_size() const { return ground_size_; }
  SubsetMask ground() const { return SubsetMask::full(ground_size_); }

  int rank(const SubsetMask& s) const;
  int rank_of_ground() const { return rank(ground()); }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

  bool is_loopless() const;

 protected:
  virtual int rank_uncached(const SubsetMask& s) const = 0;

 private:
  int ground_size_;
  bool memoize_;
  mutable std::atomic<std::uint64_t> calls_{0};
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<std::uint64_t, int> cache_;
};

using OraclePtr = std::shared_ptr<const RankOracle>;

/// Matroid M_V of the column space labels of A; rank(S) = linear_rank(A, S).
/// Memoizes by subset mask. Throws ZeroColumn if A has a zero column.
OraclePtr make_linear_oracle(GRMatrix a);

/// Uniform matroid U_{d,n}: rank(S) = min(d, |S|). Throws InvalidParams if
/// d = 0 or d > n.
OraclePtr make_uniform_oracle(int d, int n);

/// Truncation: rank_N(S) = min(rank(S), d-1) with d = rank(E) > 0.
OraclePtr truncate(OraclePtr m);

/// Disjoint union on the concatenated ground set; rank(S) = sum r_i(S & E_i).
OraclePtr direct_sum(std::vector<OraclePtr> ms);

/// Access to the matrix behind a linear oracle (nullptr otherwise).
const GRMatrix* oracle_matrix(const RankOracle& m);

/// Partition of E into connected components (finest partition across which
/// r is additive), found by exhaustive separator search; n <= 24.
Partition connected_components(const RankOracle& m);

/// True iff there is no S with |S| >= c, |E\S| >= c and
/// r(S) + r(E\S) - r(E) < c. Exhaustive scan; n <= 24.
bool is_c_connected(const RankOracle& m, int c);

/// True iff r(S + e) > r(S) for every e outside S.
bool is_flat(const RankOracle& m, const SubsetMask& s);

}  // namespace amoeba
