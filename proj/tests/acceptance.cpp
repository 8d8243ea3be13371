// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Seeds, tolerances and the rank-call budget constant are frozen
// here; everything is exact integer arithmetic, so "tolerance" always means
// equality.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "amoeba/derived.hpp"
#include "amoeba/generators.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/partition.hpp"
#include "amoeba/verify.hpp"

using namespace amoeba;

namespace {

constexpr std::uint64_t kCorpusSeedBase = 1000;
constexpr int kCorpusSize = 200;
constexpr std::uint64_t kNisseSeed = 7;
constexpr std::uint64_t kNumericSeedBase = 9000;
constexpr std::uint64_t kOrderSeed = 777;
// calibrated on this corpus (largest observed ratio ~10.3, from the
// brute-force submodular minimization inside the n=24 family run)
constexpr std::uint64_t kBudgetConstant = 16;

int g_failures = 0;

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int id, bool pass, const std::string& detail, double seconds) {
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << detail << "  ["
       << seconds << "s]";
  std::cout << line.str() << std::endl;
  if (!pass) ++g_failures;
}

std::vector<GRMatrix> corpus_matrices() {
  std::vector<GRMatrix> out;
  out.reserve(kCorpusSize);
  for (int i = 0; i < kCorpusSize; ++i)
    out.push_back(random_instance(kCorpusSeedBase + static_cast<std::uint64_t>(i)));
  return out;
}

double budget(double n, double k) { return n * k + k * k * k * std::log2(k + 2); }

void criterion_1() {
  Stopwatch watch;
  GRMatrix a = nisse_matrix(kNisseSeed);
  auto [dim, partition] = amoeba_dimension(a);
  Partition expected({SubsetMask::of({0, 1, 4, 5}, 7), SubsetMask::of({2}, 7),
                      SubsetMask::of({3}, 7), SubsetMask::of({6}, 7)},
                     7);
  const double secs = watch.seconds();
  const bool pass = dim == 6 && partition == expected && secs < 1.0;
  std::ostringstream d;
  d << "4x7 example: dim=" << dim << " (want 6), partition "
    << (partition == expected ? "matches" : "differs") << ", " << secs << "s < 1s";
  report(1, pass, d.str(), secs);
}

void criterion_2() {
  Stopwatch watch;
  bool pass = true;
  std::ostringstream d;
  d << "truncated-sum family:";
  for (auto [c, k] : {std::pair{1, 4}, std::pair{1, 5}, std::pair{2, 6}}) {
    OraclePtr m = trunc_sum_oracle(c, k);
    auto res = coarsest_optimal_partition(*m, m->ground());
    const int expect = 2 * c * k - k;
    const bool value_ok = res.rprime == expect;
    const bool blocks_ok = res.partition == trunc_sum_blocks(c, k);
    bool brute_ok = true;
    if (c == 1) {
      auto [best, optima] = rprime_bruteforce(*m, m->ground());
      brute_ok = best == expect && coarsest_bruteforce(*m, m->ground()) == res.partition;
    }
    pass = pass && value_ok && blocks_ok && brute_ok;
    d << " (" << c << "," << k << "):r'=" << res.rprime << "/" << expect
      << (blocks_ok ? " blocks" : " WRONG-PARTITION") << (brute_ok ? "" : " BRUTE-MISMATCH");
  }
  const double secs = watch.seconds();
  pass = pass && secs < 30.0;
  d << ", " << secs << "s < 30s";
  report(2, pass, d.str(), secs);
}

void criterion_3() {
  Stopwatch watch;
  bool pass = true;
  std::string first_mismatch;
  int checked_sets = 0;
  auto matrices = corpus_matrices();
  for (int i = 0; i < kCorpusSize && pass; ++i) {
    OraclePtr m = make_linear_oracle(matrices[static_cast<std::size_t>(i)]);
    const int n = m->ground_size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      SubsetMask s(bits, n);
      auto res = coarsest_optimal_partition(*m, s);
      const int best = rprime_bruteforce(*m, s).first;
      Partition folded = coarsest_bruteforce(*m, s);
      ++checked_sets;
      if (res.rprime != best || !(res.partition == folded)) {
        pass = false;
        first_mismatch = " first mismatch at instance " + std::to_string(i) + ", S=" +
                         s.to_string();
        break;
      }
    }
  }
  const double secs = watch.seconds();
  pass = pass && secs < 300.0;
  std::ostringstream d;
  d << "oracle equivalence on " << kCorpusSize << " instances, " << checked_sets
    << " subsets exhaustive (value and coarsest partition)" << first_mismatch << ", " << secs
    << "s < 300s";
  report(3, pass, d.str(), secs);
}

void criterion_4() {
  Stopwatch watch;
  bool pass = true;
  std::string detail;
  auto matrices = corpus_matrices();
  for (int i = 0; i < kCorpusSize; ++i) {
    const GRMatrix& a = matrices[static_cast<std::size_t>(i)];
    OraclePtr m = make_linear_oracle(a);
    const int algebraic = rprime(*m, m->ground());
    const int numeric =
        amoeba_dim_numeric(a, 5, kNumericSeedBase + static_cast<std::uint64_t>(i));
    if (numeric != algebraic) {
      pass = false;
      detail = " mismatch at instance " + std::to_string(i) + ": " +
               std::to_string(numeric) + " vs " + std::to_string(algebraic);
      break;
    }
  }
  const double secs = watch.seconds();
  pass = pass && secs < 300.0;
  std::ostringstream d;
  d << "analytic agreement (5 samples, exact equality) on " << kCorpusSize << " instances"
    << detail << ", " << secs << "s < 300s";
  report(4, pass, d.str(), secs);
}

void criterion_5() {
  Stopwatch watch;
  bool pass = true;
  std::uint64_t checks = 0;
  std::string detail;
  auto matrices = corpus_matrices();
  std::vector<OraclePtr> instances;
  for (const auto& a : matrices) instances.push_back(make_linear_oracle(a));
  instances.push_back(make_linear_oracle(nisse_matrix(kNisseSeed)));
  instances.push_back(trunc_sum_oracle(1, 4));
  instances.push_back(make_uniform_oracle(2, 4));
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (instances[i]->ground_size() > 8) continue;
    AxiomReport r = axiom_suite(*instances[i]);
    checks += r.checks_run;
    if (!r.ok()) {
      pass = false;
      detail = " violation (" + r.failures.front().axiom + ") at instance " +
               std::to_string(i);
      break;
    }
  }
  const double secs = watch.seconds();
  std::ostringstream d;
  d << "matroid axioms for r' on every corpus instance with n <= 8: " << checks
    << " checks, zero violations" << detail;
  report(5, pass, d.str(), secs);
}

void criterion_6() {
  Stopwatch watch;
  bool pass = true;
  std::string detail;
  auto matrices = corpus_matrices();
  std::vector<OraclePtr> instances;
  for (const auto& a : matrices) instances.push_back(make_linear_oracle(a));
  instances.push_back(make_linear_oracle(nisse_matrix(kNisseSeed)));
  instances.push_back(trunc_sum_oracle(1, 4));
  instances.push_back(make_uniform_oracle(2, 4));

  for (std::size_t i = 0; i < instances.size() && pass; ++i) {
    OraclePtr m = instances[i];
    const int n = m->ground_size();
    if (n > 8) continue;
    auto derived = derived_oracle(m);
    // quotient: flats of M are flats of M'
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      SubsetMask s(bits, n);
      if (is_flat(*m, s) && !is_flat(*derived, s)) {
        pass = false;
        detail = " quotient failure at instance " + std::to_string(i) + ", S=" + s.to_string();
        break;
      }
    }
    if (!pass) break;
    // truncation identity needs rank d > 1
    const int d = m->rank_of_ground();
    if (d > 1) {
      OraclePtr trunc = truncate(m);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        SubsetMask s(bits, n);
        if (rprime(*trunc, s) != std::min(rprime(*m, s), 2 * d - 3)) {
          pass = false;
          detail = " truncation failure at instance " + std::to_string(i) + ", S=" +
                   s.to_string();
          break;
        }
      }
    }
  }
  const double secs = watch.seconds();
  std::ostringstream d;
  d << "quotient and truncation lemmas hold exhaustively on corpus instances (n <= 8)"
    << detail;
  report(6, pass, d.str(), secs);
}

void criterion_7() {
  Stopwatch watch;
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(kOrderSeed);
  auto matrices = corpus_matrices();
  std::vector<OraclePtr> instances;
  for (const auto& a : matrices) instances.push_back(make_linear_oracle(a));
  instances.push_back(make_linear_oracle(nisse_matrix(kNisseSeed)));
  instances.push_back(trunc_sum_oracle(1, 4));
  instances.push_back(trunc_sum_oracle(1, 5));
  instances.push_back(trunc_sum_oracle(2, 6));

  for (std::size_t i = 0; i < instances.size() && pass; ++i) {
    OraclePtr m = instances[i];
    const int n = m->ground_size();
    // bounds: r'(S) <= min(|S|, 2r(S)-1) on all subsets for small n, on the
    // full set otherwise
    if (n <= 8) {
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        SubsetMask s(bits, n);
        const int rp = rprime(*m, s);
        if (rp > std::min(s.count(), 2 * m->rank(s) - 1)) {
          pass = false;
          detail = " bound failure at instance " + std::to_string(i) + ", S=" + s.to_string();
          break;
        }
      }
    }
    if (!pass) break;
    auto reference = coarsest_optimal_partition(*m, m->ground());
    if (reference.rprime > std::min(n, 2 * m->rank_of_ground() - 1)) {
      pass = false;
      detail = " full-set bound failure at instance " + std::to_string(i);
      break;
    }
    const int components = connected_components(*m).size();
    if (reference.rprime > 2 * m->rank_of_ground() - components) {
      pass = false;
      detail = " component bound failure at instance " + std::to_string(i);
      break;
    }
    // 20 random element orders give the identical result
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> order = m->ground().elements();
      for (std::size_t t = order.size(); t > 1; --t) std::swap(order[t - 1], order[rng() % t]);
      auto res = coarsest_optimal_partition(*m, m->ground(), order);
      if (res.rprime != reference.rprime || !(res.partition == reference.partition)) {
        pass = false;
        detail = " order dependence at instance " + std::to_string(i);
        break;
      }
    }
  }
  const double secs = watch.seconds();
  std::ostringstream d;
  d << "upper bounds, component bound and invariance under 20 random orders per instance"
    << detail;
  report(7, pass, d.str(), secs);
}

void criterion_8() {
  Stopwatch watch;
  bool pass = true;
  double worst_ratio = 0;
  std::string detail;
  auto matrices = corpus_matrices();
  std::vector<OraclePtr> instances;
  for (const auto& a : matrices) instances.push_back(make_linear_oracle(a));
  instances.push_back(make_linear_oracle(nisse_matrix(kNisseSeed)));
  instances.push_back(trunc_sum_oracle(1, 4));
  instances.push_back(trunc_sum_oracle(1, 5));
  instances.push_back(trunc_sum_oracle(2, 6));
  instances.push_back(make_linear_oracle(identity_matrix(10)));

  for (std::size_t i = 0; i < instances.size(); ++i) {
    OraclePtr m = instances[i];
    auto res = coarsest_optimal_partition(*m, m->ground());
    const double n = m->ground_size();
    const double k = std::max(1, res.rprime);
    const double allowance = static_cast<double>(kBudgetConstant) * budget(n, k);
    const double ratio = static_cast<double>(res.rank_calls) / budget(n, k);
    worst_ratio = std::max(worst_ratio, ratio);
    if (static_cast<double>(res.rank_calls) > allowance) {
      pass = false;
      detail = " budget exceeded at instance " + std::to_string(i) + " (" +
               std::to_string(res.rank_calls) + " calls)";
      break;
    }
  }
  const double secs = watch.seconds();
  std::ostringstream d;
  d << "rank calls <= " << kBudgetConstant
    << " * (n*k + k^3*log2(k+2)) on fresh oracles; worst observed ratio " << worst_ratio
    << detail;
  report(8, pass, d.str(), secs);
}

void criterion_9() {
  Stopwatch watch;
  bool pass = true;
  std::string detail;
  std::mt19937_64 rng(4040);
  OraclePtr m = make_linear_oracle(random_instance(31415, 4, 10));
  const int n = m->ground_size();

  auto random_mask = [&](int limit) {
    std::uint64_t bits = rng() & SubsetMask::full_bits(limit);
    if (bits == 0) bits = 1;
    return SubsetMask(bits, limit);
  };
  auto random_partition = [&](const SubsetMask& support) {
    std::vector<SubsetMask> blocks;
    support.for_each([&](int e) {
      const std::size_t choice = blocks.empty() ? 0 : rng() % (blocks.size() + 1);
      if (blocks.empty() || choice == blocks.size())
        blocks.push_back(SubsetMask::single(e, support.ground_size));
      else
        blocks[choice] = blocks[choice].with(e);
    });
    return Partition(std::move(blocks), support.ground_size);
  };

  for (int trial = 0; trial < 500 && pass; ++trial) {
    // conservation along uncross steps of a random multiset
    SubsetMultiset s(n);
    const int members = 1 + static_cast<int>(rng() % 6);
    for (int t = 0; t < members; ++t) s.add(random_mask(n));
    std::int64_t prev_n = s.n_value();
    SubsetMultiset t = uncross(s, [&](const SubsetMultiset& step) {
      if (step.n_value() <= prev_n) pass = false;
      prev_n = step.n_value();
    });
    if (!t.is_cross_free()) pass = false;
    for (int e = 0; e < n; ++e)
      if (t.count_containing(e) != s.count_containing(e)) pass = false;
    if (!(fcc(t) == fcc(s))) pass = false;
    if (!pass) {
      detail = " uncross conservation failure at trial " + std::to_string(trial);
      break;
    }

    // quadruple identity: P, P' on random supports
    Partition p = random_partition(random_mask(n));
    Partition q = random_partition(random_mask(n));
    SubsetMultiset merged =
        SubsetMultiset::of_partition(p).united(SubsetMultiset::of_partition(q));
    SubsetMultiset uncrossed = uncross(merged);
    SubsetMultiset remainder = uncrossed.subtract(SubsetMultiset::of_partition(fcc(uncrossed)));
    std::int64_t remainder_weight = remainder.empty() ? 0 : tilde_r(*m, remainder);
    if (p.size() + q.size() != join(p, q).size() + remainder.total_count()) {
      pass = false;
      detail = " count identity failure at trial " + std::to_string(trial);
      break;
    }
    if (tilde_r(*m, p) + tilde_r(*m, q) < tilde_r(*m, join(p, q)) + remainder_weight) {
      pass = false;
      detail = " weight inequality failure at trial " + std::to_string(trial);
      break;
    }
  }
  const double secs = watch.seconds();
  std::ostringstream d;
  d << "uncross conservation laws and the coarsening identity over 500 random trials"
    << detail;
  report(9, pass, d.str(), secs);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::cout << "SUMMARY: 9/9 criteria passed" << std::endl;
    return 0;
  }
  std::cout << "SUMMARY: " << (9 - g_failures) << "/9 criteria passed" << std::endl;
  return 1;
}
