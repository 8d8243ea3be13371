#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "amoeba/derived.hpp"
#include "amoeba/matrix.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/partition.hpp"

namespace amoeba {

/// Streams every set partition of a ground set exactly once, as
/// restricted-growth strings over the elements in ascending order.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(const SubsetMask& ground);

  std::optional<Partition> next();

 private:
  std::vector<int> elems_;
  std::vector<int> rgs_;
  int ground_size_;
  bool started_ = false;
  bool done_ = false;

  Partition current() const;
  bool advance();
};

/// Number of set partitions of an n-element ground set, by enumeration.
std::uint64_t count_partitions_by_enumeration(int n);

/// Exact minimum of tilde_r over all partitions of S together with every
/// partition attaining it, by depth-first search over restricted-growth
/// prefixes with pruning on the partial weight. Requires |S| <= 12.
std::pair<int, std::vector<Partition>> rprime_bruteforce(const RankOracle& m,
                                                         const SubsetMask& s);

/// Join (resp. meet) of all optimal partitions of S; verified to be optimal
/// itself, else LatticeViolation.
Partition coarsest_bruteforce(const RankOracle& m, const SubsetMask& s);
Partition finest_bruteforce(const RankOracle& m, const SubsetMask& s);

/// One sampled point of the row space with nonzero coordinates, and the
/// exact rank of the real Jacobian of the coordinatewise-log map there.
struct JacobianSample {
  std::vector<GaussianRational> coefficients;
  std::vector<GaussianRational> point;
  int rank_found = 0;
};

JacobianSample jacobian_sample(const GRMatrix& a, std::mt19937_64& rng);

/// Lower bound for the amoeba dimension that is exact for generic samples:
/// the maximum over `samples` random points p of the rank of the 2d x n
/// real matrix with rows Re(v_j / p) and -Im(v_j / p), v_1..v_d the rows
/// of A. All arithmetic exact over Q. Throws RankDeficientInput when the
/// rows of A are dependent and ZeroColumn when a column is zero.
int amoeba_dim_numeric(const GRMatrix& a, int samples, std::uint64_t seed);

struct AxiomFailure {
  std::string axiom;
  SubsetMask s;
  SubsetMask t;
  std::vector<std::int64_t> values;
};

struct AxiomReport {
  std::uint64_t checks_run = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive rank-axiom check of the derived rank function: nonnegativity,
/// unit bound, monotonicity over all nested pairs, submodularity over all
/// pairs. Requires n <= 8.
AxiomReport axiom_suite(const RankOracle& m);

}  // namespace amoeba
