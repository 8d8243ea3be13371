#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amoeba/matrix.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/partition.hpp"

namespace amoeba {

/// Output of the coarsest-optimal-partition computation for a set S:
/// the partition, a basis B of S in the derived matroid with
/// |B| = r'(S) = tilde_r(partition), and the number of fresh rank
/// evaluations spent.
struct OptimalPartitionResult {
  Partition partition;
  SubsetMask basis;
  int rprime = 0;
  std::uint64_t rank_calls = 0;
};

/// Computes the coarsest optimal partition of S and a derived-matroid basis
/// by one pass over the elements in ascending order: a new element either
/// joins a part whose rank it does not raise, or triggers a submodular
/// minimization that finds the largest J in the current basis with
/// 2 r(J+e) - 1 = |J+e| and merges J+e into the partition.
/// Throws LoopDetected on elements of rank zero.
OptimalPartitionResult coarsest_optimal_partition(const RankOracle& m, const SubsetMask& s);

/// Same, processing elements in the given order (a permutation of S);
/// the result does not depend on the order.
OptimalPartitionResult coarsest_optimal_partition(const RankOracle& m, const SubsetMask& s,
                                                  const std::vector<int>& order);

/// r'(S) = min over partitions P of S of sum (2 r(P_i) - 1).
int rprime(const RankOracle& m, const SubsetMask& s);

/// r'(S) = |S|.
bool independent_in_Mprime(const RankOracle& m, const SubsetMask& s);

/// The derived matroid M' as a rank oracle; caches one
/// OptimalPartitionResult per queried subset and is usable anywhere a
/// RankOracle is (including as the base of another DerivedOracle).
class DerivedOracle final : public RankOracle {
 public:
  explicit DerivedOracle(OraclePtr base);

  const RankOracle& base() const { return *base_; }

  const OptimalPartitionResult& result(const SubsetMask& s) const;

 protected:
  int rank_uncached(const SubsetMask& s) const override { return result(s).rprime; }

 private:
  OraclePtr base_;
  mutable std::mutex results_mutex_;
  mutable std::unordered_map<std::uint64_t, OptimalPartitionResult> results_;
};

std::shared_ptr<const DerivedOracle> derived_oracle(OraclePtr base);

/// Real dimension of the amoeba of the row space of A intersected with the
/// torus: r'([n]) of the column matroid, with the coarsest optimal
/// partition as witness. Throws ZeroColumn if A has one.
std::pair<int, Partition> amoeba_dimension(const GRMatrix& a);

}  // namespace amoeba
