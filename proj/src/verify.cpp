#include "amoeba/verify.hpp"

#include <algorithm>
#include <limits>

#include "amoeba/errors.hpp"
#include "amoeba/exact_linalg.hpp"

namespace amoeba {

PartitionEnumerator::PartitionEnumerator(const SubsetMask& ground)
    : elems_(ground.elements()), ground_size_(ground.ground_size) {
  rgs_.assign(elems_.size(), 0);
}

Partition PartitionEnumerator::current() const {
  std::vector<SubsetMask> blocks;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const std::size_t b = static_cast<std::size_t>(rgs_[i]);
    if (b >= blocks.size()) blocks.push_back(SubsetMask::empty(ground_size_));
    blocks[b] = blocks[b] | SubsetMask::single(elems_[i], ground_size_);
  }
  return Partition(std::move(blocks), ground_size_);
}

bool PartitionEnumerator::advance() {
  const std::size_t m = rgs_.size();
  if (m <= 1) return false;
  for (std::size_t i = m; i-- > 1;) {
    int prefix_max = 0;
    for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[j]);
    if (rgs_[i] <= prefix_max) {
      ++rgs_[i];
      for (std::size_t j = i + 1; j < m; ++j) rgs_[j] = 0;
      return true;
    }
  }
  return false;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return current();
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return current();
}

std::uint64_t count_partitions_by_enumeration(int n) {
  PartitionEnumerator en(SubsetMask::full(n));
  std::uint64_t count = 0;
  while (en.next()) ++count;
  return count;
}

namespace {

constexpr int kBruteCap = 12;

struct BruteSearch {
  const RankOracle& m;
  std::vector<int> elems;
  std::vector<SubsetMask> blocks;
  std::vector<int> block_ranks;
  std::int64_t partial = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Partition> optima;
  int ground_size;

  void dfs(std::size_t i) {
    if (partial > best) return;  // completions never decrease the weight
    if (i == elems.size()) {
      if (partial < best) {
        best = partial;
        optima.clear();
      }
      if (partial == best) optima.emplace_back(blocks, ground_size);
      return;
    }
    const int e = elems[i];
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const SubsetMask old_mask = blocks[b];
      const int old_rank = block_ranks[b];
      const SubsetMask new_mask = old_mask.with(e);
      const int new_rank = m.rank(new_mask);
      blocks[b] = new_mask;
      block_ranks[b] = new_rank;
      partial += 2 * static_cast<std::int64_t>(new_rank - old_rank);
      dfs(i + 1);
      blocks[b] = old_mask;
      block_ranks[b] = old_rank;
      partial -= 2 * static_cast<std::int64_t>(new_rank - old_rank);
    }
    const SubsetMask single = SubsetMask::single(e, ground_size);
    const int r = m.rank(single);
    blocks.push_back(single);
    block_ranks.push_back(r);
    partial += 2 * static_cast<std::int64_t>(r) - 1;
    dfs(i + 1);
    blocks.pop_back();
    block_ranks.pop_back();
    partial -= 2 * static_cast<std::int64_t>(r) - 1;
  }
};

}  // namespace

std::pair<int, std::vector<Partition>> rprime_bruteforce(const RankOracle& m,
                                                         const SubsetMask& s) {
  if (s.count() > kBruteCap)
    throw Error(Errc::GroundTooLarge, "brute-force search is limited to |S| <= 12");
  if (s.is_empty()) return {0, {Partition(s.ground_size)}};
  BruteSearch search{m, s.elements(), {}, {}, 0,
                     std::numeric_limits<std::int64_t>::max(), {}, s.ground_size};
  search.dfs(0);
  return {static_cast<int>(search.best), std::move(search.optima)};
}

Partition coarsest_bruteforce(const RankOracle& m, const SubsetMask& s) {
  auto [best, optima] = rprime_bruteforce(m, s);
  Partition acc = optima.front();
  for (std::size_t i = 1; i < optima.size(); ++i) acc = join(acc, optima[i]);
  if (!s.is_empty() && tilde_r(m, acc) != best)
    throw Error(Errc::LatticeViolation, "join of optimal partitions is not optimal");
  return acc;
}

Partition finest_bruteforce(const RankOracle& m, const SubsetMask& s) {
  auto [best, optima] = rprime_bruteforce(m, s);
  Partition acc = optima.front();
  for (std::size_t i = 1; i < optima.size(); ++i) acc = meet(acc, optima[i]);
  if (!s.is_empty() && tilde_r(m, acc) != best)
    throw Error(Errc::LatticeViolation, "meet of optimal partitions is not optimal");
  return acc;
}

namespace {

constexpr long kCoefficientBound = 1000000;

BigInt draw_coefficient(std::mt19937_64& rng) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(kCoefficientBound) + 1;
  return BigInt(static_cast<long>(rng() % range) - kCoefficientBound);
}

}  // namespace

JacobianSample jacobian_sample(const GRMatrix& a, std::mt19937_64& rng) {
  const int d = a.rows();
  const int n = a.cols();

  JacobianSample out;
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<GaussianRational> coeff;
    coeff.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
      coeff.emplace_back(Rational(draw_coefficient(rng)), Rational(draw_coefficient(rng)));
    std::vector<GaussianRational> p(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
      GaussianRational sum;
      for (int j = 0; j < d; ++j) sum += coeff[static_cast<std::size_t>(j)] * a.at(j, c);
      p[static_cast<std::size_t>(c)] = sum;
    }
    bool torus_point = true;
    for (const auto& z : p)
      if (z.is_zero()) {
        torus_point = false;
        break;
      }
    if (!torus_point) continue;

    // rows Re(v_j / p) and -Im(v_j / p); the rank is computed exactly after
    // clearing denominators per row
    std::vector<std::vector<Rational>> jac(2 * static_cast<std::size_t>(d),
                                           std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 0; j < d; ++j) {
      for (int c = 0; c < n; ++c) {
        GaussianRational q = a.at(j, c) / p[static_cast<std::size_t>(c)];
        jac[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = q.re;
        jac[static_cast<std::size_t>(d + j)][static_cast<std::size_t>(c)] = -q.im;
      }
    }
    std::vector<std::vector<GaussInt>> zi(jac.size());
    for (std::size_t r = 0; r < jac.size(); ++r) {
      BigInt scale = 1;
      for (const auto& q : jac[r]) scale = lcm(scale, static_cast<BigInt>(denominator(q)));
      zi[r].reserve(jac[r].size());
      for (const auto& q : jac[r])
        zi[r].emplace_back(static_cast<BigInt>(numerator(q) * (scale / denominator(q))),
                           BigInt(0));
    }
    out.coefficients = std::move(coeff);
    out.point = std::move(p);
    out.rank_found = bareiss_rank(zi);
    return out;
  }
  throw Error(Errc::Internal, "failed to sample a point with nonzero coordinates");
}

int amoeba_dim_numeric(const GRMatrix& a, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::InvalidParams, "need at least one sample");
  if (int c = a.find_zero_column(); c >= 0)
    throw Error(Errc::ZeroColumn, "column " + std::to_string(c + 1) + " is zero");
  if (linear_rank(a, SubsetMask::full(a.cols())) != a.rows())
    throw Error(Errc::RankDeficientInput, "rows of the matrix are linearly dependent");

  std::mt19937_64 rng(seed);
  int best = 0;
  for (int i = 0; i < samples; ++i)
    best = std::max(best, jacobian_sample(a, rng).rank_found);
  return best;
}

AxiomReport axiom_suite(const RankOracle& m) {
  const int n = m.ground_size();
  if (n > 8) throw Error(Errc::GroundTooLarge, "axiom_suite is limited to n <= 8");

  // table of r' over every subset, one Algorithm-1 pass each
  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<int> rp(size);
  for (std::uint64_t bits = 0; bits < size; ++bits)
    rp[bits] = coarsest_optimal_partition(m, SubsetMask(bits, n)).rprime;

  AxiomReport report;
  auto fail = [&](const char* axiom, std::uint64_t sbits, std::uint64_t tbits,
                  std::initializer_list<std::int64_t> values) {
    report.failures.push_back(
        {axiom, SubsetMask(sbits, n), SubsetMask(tbits, n), std::vector<std::int64_t>(values)});
  };

  for (std::uint64_t sbits = 0; sbits < size; ++sbits) {
    ++report.checks_run;
    if (rp[sbits] < 0) fail("nonnegative", sbits, sbits, {rp[sbits]});
    ++report.checks_run;
    const int card = std::popcount(sbits);
    if (rp[sbits] > card) fail("unit-bound", sbits, sbits, {rp[sbits], card});
  }
  // monotonicity over all nested pairs: T and its submasks
  for (std::uint64_t tbits = 0; tbits < size; ++tbits) {
    for (std::uint64_t sbits = tbits;; sbits = (sbits - 1) & tbits) {
      ++report.checks_run;
      if (rp[sbits] > rp[tbits]) fail("monotone", sbits, tbits, {rp[sbits], rp[tbits]});
      if (sbits == 0) break;
    }
  }
  // submodularity over all pairs
  for (std::uint64_t sbits = 0; sbits < size; ++sbits) {
    for (std::uint64_t tbits = sbits; tbits < size; ++tbits) {
      ++report.checks_run;
      if (rp[sbits] + rp[tbits] < rp[sbits | tbits] + rp[sbits & tbits])
        fail("submodular", sbits, tbits,
             {rp[sbits], rp[tbits], rp[sbits | tbits], rp[sbits & tbits]});
    }
  }
  return report;
}

}  // namespace amoeba
