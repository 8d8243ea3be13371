#include "amoeba/derived.hpp"

#include <algorithm>

#include "amoeba/errors.hpp"
#include "amoeba/sfm.hpp"

namespace amoeba {

namespace {

struct PartState {
  SubsetMask mask;
  int rank;
};

void sort_canonical(std::vector<PartState>& parts) {
  std::sort(parts.begin(), parts.end(),
            [](const PartState& a, const PartState& b) { return a.mask.lowest() < b.mask.lowest(); });
}

}  // namespace

OptimalPartitionResult coarsest_optimal_partition(const RankOracle& m, const SubsetMask& s,
                                                  const std::vector<int>& order) {
  const int n = m.ground_size();
  if (s.ground_size != n) throw Error(Errc::InvalidParams, "subset has the wrong ground size");
  {
    SubsetMask covered = SubsetMask::empty(n);
    for (int e : order) {
      if (!s.contains(e) || covered.contains(e))
        throw Error(Errc::InvalidParams, "order must be a permutation of S");
      covered = covered.with(e);
    }
    if (!(covered == s)) throw Error(Errc::InvalidParams, "order must be a permutation of S");
  }

  const std::uint64_t calls_before = m.calls();
  std::vector<PartState> parts;
  SubsetMask basis = SubsetMask::empty(n);

  for (int e : order) {
    if (m.rank(SubsetMask::single(e, n)) == 0)
      throw Error(Errc::LoopDetected, "element " + std::to_string(e + 1) + " is a loop");

    int match = -1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (m.rank(parts[i].mask.with(e)) == parts[i].rank) {
        match = static_cast<int>(i);
        break;
      }
    }
    if (match >= 0) {
      // e joins the first part whose rank it does not raise; parts are
      // pairwise disjoint, so no merge can follow
      parts[static_cast<std::size_t>(match)].mask =
          parts[static_cast<std::size_t>(match)].mask.with(e);
    } else {
      const SubsetMask j = largest_feasible_J(m, basis, e);
      SubsetMask merged = j.with(e);
      std::vector<PartState> rest;
      rest.reserve(parts.size());
      for (auto& p : parts) {
        if (p.mask.intersects(merged))
          merged = merged | p.mask;
        else
          rest.push_back(p);
      }
      rest.push_back({merged, m.rank(merged)});
      parts = std::move(rest);
      basis = basis.with(e);
    }
    sort_canonical(parts);
  }

  OptimalPartitionResult out;
  std::vector<SubsetMask> masks;
  std::int64_t weight = 0;
  masks.reserve(parts.size());
  for (const auto& p : parts) {
    masks.push_back(p.mask);
    weight += 2 * static_cast<std::int64_t>(p.rank) - 1;
  }
  out.partition = Partition(std::move(masks), n);
  out.basis = basis;
  out.rprime = basis.count();
  out.rank_calls = m.calls() - calls_before;
  if (weight != out.rprime)
    throw Error(Errc::Internal, "partition weight does not match basis size");
  return out;
}

OptimalPartitionResult coarsest_optimal_partition(const RankOracle& m, const SubsetMask& s) {
  return coarsest_optimal_partition(m, s, s.elements());
}

int rprime(const RankOracle& m, const SubsetMask& s) {
  return coarsest_optimal_partition(m, s).rprime;
}

bool independent_in_Mprime(const RankOracle& m, const SubsetMask& s) {
  return rprime(m, s) == s.count();
}

DerivedOracle::DerivedOracle(OraclePtr base)
    : RankOracle(base->ground_size(), /*memoize=*/true), base_(std::move(base)) {
  if (!base_->is_loopless()) throw Error(Errc::Loops, "base matroid has loops");
}

const OptimalPartitionResult& DerivedOracle::result(const SubsetMask& s) const {
  {
    std::lock_guard<std::mutex> lock(results_mutex_);
    auto it = results_.find(s.bits);
    if (it != results_.end()) return it->second;
  }
  OptimalPartitionResult r = coarsest_optimal_partition(*base_, s);
  std::lock_guard<std::mutex> lock(results_mutex_);
  return results_.emplace(s.bits, std::move(r)).first->second;
}

std::shared_ptr<const DerivedOracle> derived_oracle(OraclePtr base) {
  return std::make_shared<DerivedOracle>(std::move(base));
}

std::pair<int, Partition> amoeba_dimension(const GRMatrix& a) {
  OraclePtr m = make_linear_oracle(a);
  OptimalPartitionResult r = coarsest_optimal_partition(*m, m->ground());
  return {r.rprime, r.partition};
}

}  // namespace amoeba
