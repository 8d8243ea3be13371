#include "amoeba/oracle.hpp"

#include <algorithm>

#include "amoeba/errors.hpp"

namespace amoeba {

RankOracle::RankOracle(int ground_size, bool memoize)
    : ground_size_(ground_size), memoize_(memoize) {
  if (ground_size < 1 || ground_size > SubsetMask::kMaxGround)
    throw Error(Errc::GroundTooLarge, "ground set must have between 1 and 64 elements");
}

int RankOracle::rank(const SubsetMask& s) const {
  if (s.ground_size != ground_size_)
    throw Error(Errc::InvalidParams, "subset belongs to a different ground set");
  if (!memoize_) {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return rank_uncached(s);
  }
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(s.bits);
    if (it != cache_.end()) return it->second;
  }
  int value = rank_uncached(s);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = cache_.emplace(s.bits, value);
  if (inserted) calls_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

bool RankOracle::is_loopless() const {
  for (int e = 0; e < ground_size_; ++e)
    if (rank(SubsetMask::single(e, ground_size_)) == 0) return false;
  return true;
}

namespace {

class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(GRMatrix a)
      : RankOracle(a.cols(), /*memoize=*/true), matrix_(std::move(a)) {
    if (int c = matrix_.find_zero_column(); c >= 0)
      throw Error(Errc::ZeroColumn,
                  "column " + std::to_string(c + 1) + " is zero: the matroid would have a loop");
    integerized_ = integerize_rows(matrix_);
  }

  const GRMatrix& matrix() const { return matrix_; }

 protected:
  int rank_uncached(const SubsetMask& s) const override {
    return rank_of_columns(integerized_, s);
  }

 private:
  GRMatrix matrix_;
  std::vector<std::vector<GaussInt>> integerized_;
};

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int d, int n) : RankOracle(n, /*memoize=*/false), d_(d) {}

 protected:
  int rank_uncached(const SubsetMask& s) const override { return std::min(d_, s.count()); }

 private:
  int d_;
};

class TruncatedOracle final : public RankOracle {
 public:
  TruncatedOracle(OraclePtr inner, int cap)
      : RankOracle(inner->ground_size(), /*memoize=*/false), inner_(std::move(inner)), cap_(cap) {}

 protected:
  int rank_uncached(const SubsetMask& s) const override {
    return std::min(cap_, inner_->rank(s));
  }

 private:
  OraclePtr inner_;
  int cap_;
};

class DirectSumOracle final : public RankOracle {
 public:
  DirectSumOracle(std::vector<OraclePtr> parts, int total)
      : RankOracle(total, /*memoize=*/false), parts_(std::move(parts)) {
    int offset = 0;
    for (const auto& p : parts_) {
      offsets_.push_back(offset);
      offset += p->ground_size();
    }
  }

 protected:
  int rank_uncached(const SubsetMask& s) const override {
    int sum = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      const int k = parts_[i]->ground_size();
      std::uint64_t block = (s.bits >> offsets_[i]) & SubsetMask::full_bits(k);
      sum += parts_[i]->rank(SubsetMask(block, k));
    }
    return sum;
  }

 private:
  std::vector<OraclePtr> parts_;
  std::vector<int> offsets_;
};

}  // namespace

OraclePtr make_linear_oracle(GRMatrix a) {
  return std::make_shared<LinearOracle>(std::move(a));
}

OraclePtr make_uniform_oracle(int d, int n) {
  if (d < 1) throw Error(Errc::InvalidParams, "uniform matroid with d = 0 has loops");
  if (d > n) throw Error(Errc::InvalidParams, "uniform matroid needs d <= n");
  if (n > SubsetMask::kMaxGround)
    throw Error(Errc::GroundTooLarge, "ground set must have at most 64 elements");
  return std::make_shared<UniformOracle>(d, n);
}

OraclePtr truncate(OraclePtr m) {
  const int d = m->rank_of_ground();
  if (d == 0) throw Error(Errc::RankZero, "cannot truncate a rank-0 matroid");
  return std::make_shared<TruncatedOracle>(std::move(m), d - 1);
}

OraclePtr direct_sum(std::vector<OraclePtr> ms) {
  if (ms.empty()) throw Error(Errc::InvalidParams, "direct sum of an empty list");
  if (ms.size() == 1) return ms.front();
  long total = 0;
  for (const auto& m : ms) total += m->ground_size();
  if (total > SubsetMask::kMaxGround)
    throw Error(Errc::GroundTooLarge, "direct sum exceeds 64 ground elements");
  return std::make_shared<DirectSumOracle>(std::move(ms), static_cast<int>(total));
}

const GRMatrix* oracle_matrix(const RankOracle& m) {
  if (auto* lin = dynamic_cast<const LinearOracle*>(&m)) return &lin->matrix();
  return nullptr;
}

namespace {

constexpr int kScanCap = 24;

// Splits S into connected pieces: first proper T containing the lowest
// element with r(T) + r(S\T) = r(S), then recurse.
void split_components(const RankOracle& m, const SubsetMask& s, std::vector<SubsetMask>& out) {
  const int card = s.count();
  if (card <= 1) {
    if (card == 1) out.push_back(s);
    return;
  }
  const int rs = m.rank(s);
  const std::uint64_t low_bit = std::uint64_t{1} << s.lowest();
  const std::uint64_t rest = s.bits & ~low_bit;

  // candidate separators: low element plus any proper submask of the rest
  for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
    SubsetMask t(sub | low_bit, s.ground_size);
    SubsetMask comp = s - t;
    if (!comp.is_empty() && m.rank(t) + m.rank(comp) == rs) {
      split_components(m, t, out);
      split_components(m, comp, out);
      return;
    }
    if (sub == 0) break;
  }
  out.push_back(s);  // connected
}

}  // namespace

Partition connected_components(const RankOracle& m) {
  if (m.ground_size() > kScanCap)
    throw Error(Errc::GroundTooLarge, "connected_components is limited to n <= 24");
  if (!m.is_loopless()) throw Error(Errc::Loops, "matroid has loops");
  std::vector<SubsetMask> parts;
  split_components(m, m.ground(), parts);
  return Partition(std::move(parts), m.ground_size());
}

bool is_c_connected(const RankOracle& m, int c) {
  const int n = m.ground_size();
  if (n > kScanCap) throw Error(Errc::GroundTooLarge, "is_c_connected is limited to n <= 24");
  if (c < 1) throw Error(Errc::InvalidParams, "connectivity parameter must be positive");
  const int re = m.rank_of_ground();
  // S ranges over subsets containing element 0; the condition is symmetric
  // in S and its complement.
  const std::uint64_t all = SubsetMask::full_bits(n);
  for (std::uint64_t bits = 1; bits <= all; bits += 2) {
    SubsetMask s(bits, n);
    SubsetMask comp = s.complement();
    if (s.count() >= c && comp.count() >= c && m.rank(s) + m.rank(comp) - re < c) return false;
    if (bits == all) break;
  }
  return true;
}

bool is_flat(const RankOracle& m, const SubsetMask& s) {
  const int rs = m.rank(s);
  SubsetMask outside = s.complement();
  bool flat = true;
  outside.for_each([&](int e) {
    if (flat && m.rank(s.with(e)) == rs) flat = false;
  });
  return flat;
}

}  // namespace amoeba
