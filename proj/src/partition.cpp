#include "amoeba/partition.hpp"

#include <algorithm>
#include <numeric>

#include "amoeba/errors.hpp"
#include "amoeba/oracle.hpp"

namespace amoeba {

namespace {

bool mask_less(const SubsetMask& a, const SubsetMask& b) {
  if (a.bits == b.bits) return false;
  if (a.bits == 0) return true;
  if (b.bits == 0) return false;
  if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
  return a.bits < b.bits;
}

}  // namespace

Partition::Partition(std::vector<SubsetMask> parts, int ground_size)
    : parts_(std::move(parts)), support_(SubsetMask::empty(ground_size)) {
  std::uint64_t seen = 0;
  for (const auto& p : parts_) {
    if (p.ground_size != ground_size)
      throw Error(Errc::InvalidParams, "partition part has wrong ground size");
    if (p.is_empty()) throw Error(Errc::EmptyMember, "partition part is empty");
    if (seen & p.bits) throw Error(Errc::InvalidParams, "partition parts overlap");
    seen |= p.bits;
  }
  support_ = SubsetMask(seen, ground_size);
  std::sort(parts_.begin(), parts_.end(), mask_less);
}

Partition Partition::singletons(const SubsetMask& support) {
  std::vector<SubsetMask> parts;
  support.for_each([&](int e) { parts.push_back(SubsetMask::single(e, support.ground_size)); });
  return Partition(std::move(parts), support.ground_size);
}

Partition Partition::trivial(const SubsetMask& support) {
  if (support.is_empty()) return Partition(support.ground_size);
  return Partition({support}, support.ground_size);
}

int Partition::part_index_of(int e) const {
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (parts_[i].contains(e)) return static_cast<int>(i);
  return -1;
}

std::string Partition::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += parts_[i].to_string();
  }
  return s + "}";
}

SubsetMultiset::SubsetMultiset(std::vector<SubsetMask> members, int ground_size)
    : ground_size_(ground_size) {
  for (const auto& m : members) {
    if (m.ground_size != ground_size)
      throw Error(Errc::InvalidParams, "multiset member has wrong ground size");
    items_.emplace_back(m, 1);
  }
  canonicalize();
}

SubsetMultiset SubsetMultiset::of_partition(const Partition& p) {
  SubsetMultiset s(p.ground_size());
  for (const auto& part : p.parts()) s.add(part);
  return s;
}

void SubsetMultiset::add(const SubsetMask& s, std::int64_t multiplicity) {
  if (multiplicity <= 0) throw Error(Errc::InvalidParams, "multiplicity must be positive");
  if (s.ground_size != ground_size_)
    throw Error(Errc::InvalidParams, "multiset member has wrong ground size");
  items_.emplace_back(s, multiplicity);
  canonicalize();
}

void SubsetMultiset::canonicalize() {
  std::sort(items_.begin(), items_.end(), [](const auto& a, const auto& b) {
    return a.first.bits < b.first.bits;
  });
  std::vector<std::pair<SubsetMask, std::int64_t>> merged;
  for (auto& it : items_) {
    if (!merged.empty() && merged.back().first == it.first)
      merged.back().second += it.second;
    else
      merged.push_back(it);
  }
  items_ = std::move(merged);
}

bool SubsetMultiset::contains(const SubsetMultiset& other) const {
  for (const auto& [mask, mult] : other.items_) {
    auto it = std::find_if(items_.begin(), items_.end(),
                           [&](const auto& p) { return p.first == mask; });
    if (it == items_.end() || it->second < mult) return false;
  }
  return true;
}

SubsetMultiset SubsetMultiset::subtract(const SubsetMultiset& other) const {
  if (!contains(other))
    throw Error(Errc::InvalidParams, "multiset difference of a non-submultiset");
  SubsetMultiset out(ground_size_);
  for (const auto& [mask, mult] : items_) {
    std::int64_t drop = 0;
    for (const auto& [omask, omult] : other.items_)
      if (omask == mask) drop = omult;
    if (mult - drop > 0) out.items_.emplace_back(mask, mult - drop);
  }
  return out;
}

std::int64_t SubsetMultiset::total_count() const {
  std::int64_t n = 0;
  for (const auto& [mask, mult] : items_) n += mult;
  return n;
}

std::int64_t SubsetMultiset::count_containing(int e) const {
  std::int64_t n = 0;
  for (const auto& [mask, mult] : items_)
    if (mask.contains(e)) n += mult;
  return n;
}

std::int64_t SubsetMultiset::n_value() const {
  std::int64_t n = 0;
  for (const auto& [mask, mult] : items_) n += mult * mask.count() * mask.count();
  return n;
}

SubsetMask SubsetMultiset::support() const {
  SubsetMask u = SubsetMask::empty(ground_size_);
  for (const auto& [mask, mult] : items_) u = u | mask;
  return u;
}

SubsetMultiset SubsetMultiset::united(const SubsetMultiset& other) const {
  if (ground_size_ != other.ground_size_)
    throw Error(Errc::InvalidParams, "multiset union over different grounds");
  SubsetMultiset out = *this;
  for (const auto& [mask, mult] : other.items_) out.items_.emplace_back(mask, mult);
  out.canonicalize();
  return out;
}

namespace {

bool crosses(const SubsetMask& a, const SubsetMask& b) {
  return (a.bits & b.bits) != 0 && (a.bits & ~b.bits) != 0 && (b.bits & ~a.bits) != 0;
}

}  // namespace

bool SubsetMultiset::is_cross_free() const {
  for (std::size_t i = 0; i < items_.size(); ++i)
    for (std::size_t j = i + 1; j < items_.size(); ++j)
      if (crosses(items_[i].first, items_[j].first)) return false;
  return true;
}

std::string SubsetMultiset::to_string() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [mask, mult] : items_) {
    for (std::int64_t t = 0; t < mult; ++t) {
      if (!first) s += ',';
      s += mask.to_string();
      first = false;
    }
  }
  return s + "]";
}

Partition fcc(const SubsetMultiset& s) {
  const int n = s.ground_size();
  for (const auto& [mask, mult] : s.items())
    if (mask.is_empty()) throw Error(Errc::EmptyMember, "fcc of a multiset containing {}");

  // Union-find on elements; each member merges its own elements.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& [mask, mult] : s.items()) {
    int root = -1;
    mask.for_each([&](int e) {
      if (root < 0)
        root = find(e);
      else
        parent[static_cast<std::size_t>(find(e))] = root;
    });
  }

  SubsetMask support = s.support();
  std::vector<SubsetMask> groups(static_cast<std::size_t>(n), SubsetMask::empty(n));
  support.for_each([&](int e) {
    auto& g = groups[static_cast<std::size_t>(find(e))];
    g = g | SubsetMask::single(e, n);
  });
  std::vector<SubsetMask> parts;
  for (const auto& g : groups)
    if (!g.is_empty()) parts.push_back(g);
  return Partition(std::move(parts), n);
}

Partition join(const Partition& p, const Partition& q) {
  if (p.ground_size() != q.ground_size())
    throw Error(Errc::InvalidParams, "join over different grounds");
  SubsetMultiset s = SubsetMultiset::of_partition(p).united(SubsetMultiset::of_partition(q));
  if (s.empty()) return Partition(p.ground_size());
  return fcc(s);
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.ground_size() != q.ground_size())
    throw Error(Errc::InvalidParams, "meet over different grounds");
  std::vector<SubsetMask> parts;
  for (const auto& a : p.parts())
    for (const auto& b : q.parts()) {
      SubsetMask x = a & b;
      if (!x.is_empty()) parts.push_back(x);
    }
  return Partition(std::move(parts), p.ground_size());
}

SubsetMultiset uncross(const SubsetMultiset& s,
                       const std::function<void(const SubsetMultiset&)>& on_step) {
  for (const auto& [mask, mult] : s.items())
    if (mask.is_empty()) throw Error(Errc::EmptyMember, "uncross of a multiset containing {}");

  SubsetMultiset cur = s;
  for (;;) {
    const auto& items = cur.items();
    bool rewrote = false;
    for (std::size_t i = 0; i < items.size() && !rewrote; ++i) {
      for (std::size_t j = i + 1; j < items.size() && !rewrote; ++j) {
        const SubsetMask a = items[i].first;
        const SubsetMask b = items[j].first;
        if (!crosses(a, b)) continue;
        SubsetMultiset pair(cur.ground_size());
        pair.add(a);
        pair.add(b);
        SubsetMultiset next = cur.subtract(pair);
        next.add(a & b);
        next.add(a | b);
        cur = std::move(next);
        rewrote = true;
      }
    }
    if (!rewrote) break;
    if (on_step) on_step(cur);
  }
  return cur;
}

std::int64_t tilde_r(const RankOracle& m, const SubsetMultiset& s) {
  std::int64_t sum = 0;
  for (const auto& [mask, mult] : s.items()) {
    if (mask.is_empty()) throw Error(Errc::EmptyMember, "tilde_r of a multiset containing {}");
    sum += mult * (2 * static_cast<std::int64_t>(m.rank(mask)) - 1);
  }
  return sum;
}

std::int64_t tilde_r(const RankOracle& m, const Partition& p) {
  std::int64_t sum = 0;
  for (const auto& part : p.parts()) sum += 2 * static_cast<std::int64_t>(m.rank(part)) - 1;
  return sum;
}

bool refines(const Partition& p, const Partition& q) {
  if (!(p.support() == q.support()))
    throw Error(Errc::SupportMismatch, "refines requires equal supports");
  for (const auto& a : p.parts()) {
    bool inside = false;
    for (const auto& b : q.parts())
      if (a.subset_of(b)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

}  // namespace amoeba
