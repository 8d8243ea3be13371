#pragma once

#include <cstdint>

#include "amoeba/matrix.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/partition.hpp"

namespace amoeba {

GRMatrix identity_matrix(int n);

/// 1 x n all-ones row (rank-1 matroid).
GRMatrix ones_matrix(int n);

/// The 4 x 7 pattern with identity columns 1..4, two generic columns in the
/// span of e1,e2 and one generic full column. Star entries are integers
/// drawn from [-10^6, 10^6] with the given seed; the draw is certified
/// generic by comparing every subset rank against the closed-form generic
/// rank of the pattern (and the matroid connected), resampling on failure.
GRMatrix nisse_matrix(std::uint64_t seed);

/// Generic rank of the pattern above.
int nisse_expected_rank(const SubsetMask& s);

/// Direct sum of k copies of U_{c,2c}, truncated c times; 2ck elements.
OraclePtr trunc_sum_oracle(int c, int k);

/// The block partition {E_1,...,E_k} of the ground set of trunc_sum_oracle.
Partition trunc_sum_blocks(int c, int k);

/// Seeded random d x n matrix over Q(i) with d <= max_d, n <= max_n, small
/// sparse entries, no zero column and full row rank. Deterministic per seed.
GRMatrix random_instance(std::uint64_t seed, int max_d = 4, int max_n = 8);

}  // namespace amoeba
