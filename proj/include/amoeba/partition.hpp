#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "amoeba/subset.hpp"

namespace amoeba {

class RankOracle;

/// Pairwise disjoint nonempty subsets of a support set, in canonical order
/// (ascending lowest element). The empty partition (of the empty support)
/// is valid.
class Partition {
 public:
  Partition() = default;
  explicit Partition(int ground_size) : support_(SubsetMask::empty(ground_size)) {}
  Partition(std::vector<SubsetMask> parts, int ground_size);

  static Partition singletons(const SubsetMask& support);
  static Partition trivial(const SubsetMask& support);  // one part, unless empty

  const std::vector<SubsetMask>& parts() const { return parts_; }
  const SubsetMask& support() const { return support_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int ground_size() const { return support_.ground_size; }

  /// The part containing e, or -1.
  int part_index_of(int e) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_ && a.support_ == b.support_;
  }

  std::string to_string() const;

 private:
  std::vector<SubsetMask> parts_;
  SubsetMask support_;
};

/// Finite multiset of nonempty subsets of E, canonically sorted with
/// positive multiplicities.
class SubsetMultiset {
 public:
  explicit SubsetMultiset(int ground_size) : ground_size_(ground_size) {}
  SubsetMultiset(std::vector<SubsetMask> members, int ground_size);
  static SubsetMultiset of_partition(const Partition& p);

  void add(const SubsetMask& s, std::int64_t multiplicity = 1);

  /// Multiset difference; throws if other is not contained in *this.
  SubsetMultiset subtract(const SubsetMultiset& other) const;
  bool contains(const SubsetMultiset& other) const;

  const std::vector<std::pair<SubsetMask, std::int64_t>>& items() const { return items_; }
  int ground_size() const { return ground_size_; }
  bool empty() const { return items_.empty(); }

  /// #S: member count with multiplicities.
  std::int64_t total_count() const;
  /// c(S)_e: number of members containing e, with multiplicities.
  std::int64_t count_containing(int e) const;
  /// n(S) = sum |S_i|^2, with multiplicities.
  std::int64_t n_value() const;
  SubsetMask support() const;

  SubsetMultiset united(const SubsetMultiset& other) const;

  bool is_cross_free() const;

  friend bool operator==(const SubsetMultiset& a, const SubsetMultiset& b) {
    return a.items_ == b.items_ && a.ground_size_ == b.ground_size_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  std::vector<std::pair<SubsetMask, std::int64_t>> items_;
  int ground_size_ = 0;
};

/// Finest common coarsening: the partition of the union whose parts are the
/// minimal sets containing every member they intersect. Union-find over the
/// members. Throws EmptyMember if the multiset contains the empty set.
Partition fcc(const SubsetMultiset& s);

/// Lattice join: fcc of the combined parts; partition of the union of the
/// supports.
Partition join(const Partition& p, const Partition& q);

/// Lattice meet: nonempty pairwise intersections; partition of the
/// intersection of the supports.
Partition meet(const Partition& p, const Partition& q);

/// Rewrites crossing pairs {S,S'} -> {S&S', S|S'} until cross-free, always
/// taking the first crossing pair in canonical scan order. Each step keeps
/// every c(.)_e and strictly increases n(.). An optional observer sees the
/// multiset after every rewrite.
SubsetMultiset uncross(const SubsetMultiset& s,
                       const std::function<void(const SubsetMultiset&)>& on_step = {});

/// Weight r~(S) = sum over members (with multiplicity) of 2 r(S_i) - 1.
/// Requires the oracle to be loopless on the support (not checked here).
std::int64_t tilde_r(const RankOracle& m, const SubsetMultiset& s);
std::int64_t tilde_r(const RankOracle& m, const Partition& p);

/// True iff every part of p lies inside a part of q. Throws SupportMismatch
/// unless the supports coincide.
bool refines(const Partition& p, const Partition& q);

}  // namespace amoeba
