#pragma once

#include <cstdint>

#include "amoeba/oracle.hpp"
#include "amoeba/subset.hpp"

namespace amoeba {

/// Integer-scaled form of the rank-deficiency test function on subsets
/// I of B, for a fixed element e outside B:
///
///   F(I) = 2k * (2 r(I+e) - 2 - |I|) - |I|,   k = |B|.
///
/// F equals 2k * f(I) with f(I) = 2r(I+e) - 1 - |I+e| - |I|/(2k), so F is
/// submodular, F(empty) = 0 on loopless matroids, and the minimizers of F
/// are exactly those of f.
class ScaledCunninghamFn {
 public:
  ScaledCunninghamFn(const RankOracle& m, const SubsetMask& b, int e);

  const RankOracle& oracle() const { return m_; }
  const SubsetMask& ground_B() const { return b_; }
  int element() const { return e_; }
  int k() const { return k_; }

  /// One rank evaluation per call (memoized at the oracle).
  std::int64_t operator()(const SubsetMask& i) const;

 private:
  const RankOracle& m_;
  SubsetMask b_;
  int e_;
  int k_;
};

inline std::int64_t eval_scaled(const ScaledCunninghamFn& f, const SubsetMask& i) {
  return f(i);
}

/// Unique maximal minimizer (union of all minimizers) by enumeration of
/// 2^B; exactly 2^k fresh rank evaluations. Requires k <= 22.
SubsetMask minimize_brute(const ScaledCunninghamFn& f);

/// Minimum-norm point of the base polytope in exact rational arithmetic
/// (Wolfe's algorithm), extended to the maximal minimizer and certified
/// against the duality identity, the empty-set baseline and single-element
/// exchanges. Throws CertificationFailed if any check fails.
SubsetMask minimize_mnp(const ScaledCunninghamFn& f);

/// Largest J inside B with 2 r(J+e) - 1 = |J+e|, via minimize_brute for
/// |B| <= 22 and minimize_mnp beyond. Caller guarantees r'(B+e) = |B+e|.
SubsetMask largest_feasible_J(const RankOracle& m, const SubsetMask& b, int e);

/// Brute-force dispatch bound in largest_feasible_J.
inline constexpr int kSfmBruteForceMaxK = 22;

}  // namespace amoeba
