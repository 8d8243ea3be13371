#include "amoeba/generators.hpp"

#include <random>

#include "amoeba/errors.hpp"

namespace amoeba {

GRMatrix identity_matrix(int n) {
  GRMatrix a(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = GaussianRational::one();
  return a;
}

GRMatrix ones_matrix(int n) {
  GRMatrix a(1, n);
  for (int c = 0; c < n; ++c) a.at(0, c) = GaussianRational::one();
  return a;
}

int nisse_expected_rank(const SubsetMask& s) {
  if (s.ground_size != 7) throw Error(Errc::InvalidParams, "pattern lives on 7 elements");
  const SubsetMask plane = SubsetMask::of({0, 1, 4, 5}, 7);
  const SubsetMask tail = SubsetMask::of({2, 3}, 7);
  int r = std::min(2, (s & plane).count()) + (s & tail).count();
  if (s.contains(6) && r < 4) ++r;
  return r;
}

namespace {

constexpr long kStarBound = 1000000;

long draw_star(std::mt19937_64& rng) {
  const std::uint64_t range = 2 * static_cast<std::uint64_t>(kStarBound) + 1;
  return static_cast<long>(rng() % range) - kStarBound;
}

}  // namespace

GRMatrix nisse_matrix(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    GRMatrix a(4, 7);
    for (int i = 0; i < 4; ++i) a.at(i, i) = GaussianRational::one();
    for (int r = 0; r < 2; ++r)
      for (int c = 4; c < 7; ++c) a.at(r, c) = GaussianRational(draw_star(rng));
    a.at(2, 6) = GaussianRational(draw_star(rng));
    a.at(3, 6) = GaussianRational(draw_star(rng));

    bool generic = true;
    for (std::uint64_t bits = 0; bits < (1u << 7) && generic; ++bits) {
      SubsetMask s(bits, 7);
      if (linear_rank(a, s) != nisse_expected_rank(s)) generic = false;
    }
    if (!generic) continue;
    OraclePtr m = make_linear_oracle(a);
    if (connected_components(*m).size() != 1) continue;
    return a;
  }
  throw Error(Errc::Internal, "failed to draw a certified generic instance");
}

OraclePtr trunc_sum_oracle(int c, int k) {
  if (c < 1 || k < 1) throw Error(Errc::InvalidParams, "need c >= 1 and k >= 1");
  if (2L * c * k > SubsetMask::kMaxGround)
    throw Error(Errc::GroundTooLarge, "ground set would exceed 64 elements");
  if (k < 2) throw Error(Errc::InvalidParams, "truncating once per c needs k >= 2");
  std::vector<OraclePtr> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) blocks.push_back(make_uniform_oracle(c, 2 * c));
  OraclePtr m = direct_sum(std::move(blocks));
  for (int t = 0; t < c; ++t) m = truncate(std::move(m));
  return m;
}

Partition trunc_sum_blocks(int c, int k) {
  const int n = 2 * c * k;
  std::vector<SubsetMask> parts;
  parts.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    std::uint64_t block = SubsetMask::full_bits(2 * c) << (2 * c * i);
    parts.emplace_back(block, n);
  }
  return Partition(std::move(parts), n);
}

GRMatrix random_instance(std::uint64_t seed, int max_d, int max_n) {
  if (max_d < 1 || max_n < max_d)
    throw Error(Errc::InvalidParams, "need 1 <= max_d <= max_n");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int d = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_d));
    const int n = d + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - d + 1));
    GRMatrix a(d, n);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < n; ++c) {
        if (rng() % 100 < 40) continue;  // sparse: keep the entry zero
        long re = static_cast<long>(rng() % 7) - 3;
        long im = (rng() % 100 < 30) ? static_cast<long>(rng() % 5) - 2 : 0;
        GaussianRational z{Rational(re), Rational(im)};
        if (rng() % 100 < 20) z = z / GaussianRational(2);
        a.at(r, c) = z;
      }
    }
    for (int c = 0; c < n; ++c)
      if (a.column_is_zero(c))
        a.at(static_cast<int>(rng() % static_cast<std::uint64_t>(d)), c) =
            GaussianRational::one();
    if (linear_rank(a, SubsetMask::full(n)) == d) return a;
  }
  throw Error(Errc::Internal, "failed to draw a full-row-rank instance");
}

}  // namespace amoeba
