#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amoeba/derived.hpp"
#include "amoeba/errors.hpp"
#include "amoeba/generators.hpp"
#include "amoeba/json_io.hpp"
#include "amoeba/matrix.hpp"
#include "amoeba/oracle.hpp"
#include "amoeba/sfm.hpp"
#include "amoeba/verify.hpp"

namespace {

using amoeba::Errc;
using amoeba::Error;
using amoeba::GRMatrix;
using amoeba::Json;
using amoeba::OraclePtr;
using amoeba::RankOracle;
using amoeba::SubsetMask;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;  // zero column / loops
constexpr int kExitVerifyFailed = 4;
constexpr int kExitSizeLimit = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError:
    case Errc::InvalidParams:
      return kExitUsage;
    case Errc::ZeroColumn:
    case Errc::Loops:
    case Errc::LoopDetected:
      return kExitDegenerate;
    case Errc::GroundTooLarge:
    case Errc::BTooLarge:
      return kExitSizeLimit;
    default:
      return 1;
  }
}

struct Options {
  std::vector<std::string> gen;
  std::string matrix_file;
  std::string format = "text";
  std::string subset;
  std::string mode = "all";
  int samples = 5;
  std::uint64_t seed = 7;
};

struct Instance {
  OraclePtr oracle;
  std::optional<GRMatrix> matrix;
};

long parse_long(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, std::string("expected an integer for ") + what + ", got '" + s + "'");
  }
}

Instance resolve_instance(const Options& opt) {
  if (!opt.gen.empty() && !opt.matrix_file.empty())
    throw Error(Errc::ParseError, "--gen and --matrix are mutually exclusive");
  if (opt.gen.empty() && opt.matrix_file.empty())
    throw Error(Errc::ParseError, "an instance is required: --gen NAME ARGS or --matrix FILE");

  Instance inst;
  if (!opt.matrix_file.empty()) {
    std::ifstream in(opt.matrix_file);
    if (!in) throw Error(Errc::ParseError, "cannot open '" + opt.matrix_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    GRMatrix a = [&] {
      if (opt.format == "json") {
        Json j = Json::parse(buf.str(), nullptr, false);
        if (j.is_discarded() || !j.contains("rows"))
          throw Error(Errc::ParseError, "matrix JSON must be an object with a \"rows\" array");
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : j["rows"]) {
          std::vector<std::string> r;
          for (const auto& cell : row) r.push_back(cell.get<std::string>());
          rows.push_back(std::move(r));
        }
        return amoeba::matrix_from_strings(rows);
      }
      if (opt.format != "text")
        throw Error(Errc::ParseError, "unknown --format '" + opt.format + "'");
      return amoeba::parse_matrix_text(buf.str());
    }();
    inst.oracle = amoeba::make_linear_oracle(a);
    inst.matrix = std::move(a);
    return inst;
  }

  const std::string& name = opt.gen.front();
  auto arg = [&](std::size_t i, const char* what) -> long {
    if (i >= opt.gen.size())
      throw Error(Errc::ParseError, std::string("--gen ") + name + " is missing " + what);
    return parse_long(opt.gen[i], what);
  };
  auto expect_args = [&](std::size_t count) {
    if (opt.gen.size() != count + 1)
      throw Error(Errc::ParseError, "--gen " + name + " takes " + std::to_string(count) +
                                        " argument(s)");
  };

  if (name == "nisse") {
    expect_args(0);
    GRMatrix a = amoeba::nisse_matrix(opt.seed);
    inst.oracle = amoeba::make_linear_oracle(a);
    inst.matrix = std::move(a);
  } else if (name == "identity") {
    expect_args(1);
    GRMatrix a = amoeba::identity_matrix(static_cast<int>(arg(1, "n")));
    inst.oracle = amoeba::make_linear_oracle(a);
    inst.matrix = std::move(a);
  } else if (name == "ones") {
    expect_args(1);
    GRMatrix a = amoeba::ones_matrix(static_cast<int>(arg(1, "n")));
    inst.oracle = amoeba::make_linear_oracle(a);
    inst.matrix = std::move(a);
  } else if (name == "uniform") {
    expect_args(2);
    inst.oracle = amoeba::make_uniform_oracle(static_cast<int>(arg(1, "d")),
                                              static_cast<int>(arg(2, "n")));
  } else if (name == "trunc-sum") {
    // the optional trailing seed is accepted for interface compatibility;
    // the construction is deterministic
    if (opt.gen.size() != 3 && opt.gen.size() != 4)
      throw Error(Errc::ParseError, "--gen trunc-sum takes c k [seed]");
    inst.oracle = amoeba::trunc_sum_oracle(static_cast<int>(arg(1, "c")),
                                           static_cast<int>(arg(2, "k")));
  } else {
    throw Error(Errc::ParseError, "unknown generator '" + name + "'");
  }
  return inst;
}

SubsetMask parse_subset(const std::string& text, int ground_size) {
  SubsetMask s = SubsetMask::empty(ground_size);
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    long e = parse_long(tok, "--subset");
    if (e < 1 || e > ground_size)
      throw Error(Errc::ParseError,
                  "subset element " + std::to_string(e) + " is outside 1.." +
                      std::to_string(ground_size));
    s = s.with(static_cast<int>(e - 1));
  }
  return s;
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

Json bell_counts_json(int n) {
  Json arr = Json::array();
  for (int i = 0; i <= std::min(n, 8); ++i)
    arr.push_back(amoeba::count_partitions_by_enumeration(i));
  return arr;
}

int cmd_dim(const Options& opt) {
  Instance inst = resolve_instance(opt);
  auto result = amoeba::coarsest_optimal_partition(*inst.oracle, inst.oracle->ground());
  emit(amoeba::result_to_json(result));
  return kExitOk;
}

int cmd_rank(const Options& opt) {
  Instance inst = resolve_instance(opt);
  SubsetMask s = parse_subset(opt.subset, inst.oracle->ground_size());
  auto result = amoeba::coarsest_optimal_partition(*inst.oracle, s);
  emit(amoeba::result_to_json(result));
  return kExitOk;
}

struct SubReport {
  std::uint64_t checks_run = 0;
  Json failures = Json::array();

  void check(bool ok, const char* axiom, Json values) {
    ++checks_run;
    if (!ok) {
      Json f;
      f["axiom"] = axiom;
      f["S"] = Json::array();
      f["T"] = Json::array();
      f["values"] = std::move(values);
      failures.push_back(std::move(f));
    }
  }

  Json to_json(Json bell_counts) const {
    Json j;
    j["checks_run"] = checks_run;
    j["failures"] = failures;
    j["bell_counts"] = std::move(bell_counts);
    return j;
  }
};

int cmd_verify(const Options& opt) {
  Instance inst = resolve_instance(opt);
  const RankOracle& m = *inst.oracle;
  const int n = m.ground_size();
  const bool mode_all = opt.mode == "all";
  if (!mode_all && opt.mode != "brute" && opt.mode != "numeric" && opt.mode != "axioms")
    throw Error(Errc::ParseError, "--mode must be brute, numeric, axioms or all");
  if ((opt.mode == "brute" || mode_all) && n > 12)
    throw Error(Errc::GroundTooLarge, "brute verification is limited to n <= 12");
  if ((opt.mode == "axioms" || mode_all) && n > 8)
    throw Error(Errc::GroundTooLarge, "axiom verification is limited to n <= 8");
  if (opt.mode == "numeric" && !inst.matrix)
    throw Error(Errc::ParseError, "numeric verification needs a matrix-backed instance");

  auto result = amoeba::coarsest_optimal_partition(m, m.ground());
  Json doc = amoeba::result_to_json(result);
  Json verifications;
  bool failed = false;

  if (opt.mode == "brute" || mode_all) {
    SubReport r;
    const int best = amoeba::rprime_bruteforce(m, m.ground()).first;
    r.check(best == result.rprime, "dim-agreement", Json::array({result.rprime, best}));
    amoeba::Partition coarsest = amoeba::coarsest_bruteforce(m, m.ground());
    r.check(coarsest == result.partition, "coarsest-partition",
            Json::array({amoeba::partition_to_json(result.partition),
                         amoeba::partition_to_json(coarsest)}));
    failed |= !r.failures.empty();
    verifications["brute"] = r.to_json(bell_counts_json(n));
  }
  if ((opt.mode == "numeric" || mode_all) && inst.matrix) {
    SubReport r;
    int numeric = amoeba::amoeba_dim_numeric(*inst.matrix, opt.samples, opt.seed);
    r.check(numeric == result.rprime, "numeric-dim-agreement",
            Json::array({result.rprime, numeric}));
    failed |= !r.failures.empty();
    verifications["numeric"] = r.to_json(Json::array());
  }
  if (opt.mode == "axioms" || mode_all) {
    amoeba::AxiomReport report = amoeba::axiom_suite(m);
    failed |= !report.ok();
    verifications["axioms"] = amoeba::axiom_report_to_json(report, Json::array());
  }
  doc["verifications"] = std::move(verifications);
  emit(doc);
  return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_selftest(const Options& opt) {
  SubReport r;
  std::uint64_t total_calls = 0;
  std::uint64_t total_budget = 0;
  constexpr std::uint64_t kBudgetConstant = 16;

  auto budget = [](std::uint64_t n, std::uint64_t k) {
    const double log_term = std::log2(static_cast<double>(k + 2));
    return static_cast<std::uint64_t>(
        static_cast<double>(n * k) + static_cast<double>(k * k * k) * log_term);
  };
  auto check_budget = [&](const amoeba::OptimalPartitionResult& res, std::uint64_t n) {
    const std::uint64_t b =
        kBudgetConstant * std::max<std::uint64_t>(1, budget(n, static_cast<std::uint64_t>(res.rprime)));
    total_calls += res.rank_calls;
    total_budget += b;
    r.check(res.rank_calls <= b, "rank-call-budget", Json::array({res.rank_calls, b}));
  };

  {  // generic 4x7 pattern instance
    GRMatrix a = amoeba::nisse_matrix(opt.seed);
    OraclePtr m = amoeba::make_linear_oracle(a);
    auto res = amoeba::coarsest_optimal_partition(*m, m->ground());
    r.check(res.rprime == 6, "nisse-dim", Json::array({res.rprime, 6}));
    amoeba::Partition expected = amoeba::partition_from_json(
        Json::parse(R"([[1,2,5,6],[3],[4],[7]])"), 7);
    r.check(res.partition == expected, "nisse-partition",
            Json::array({amoeba::partition_to_json(res.partition)}));
    const int best = amoeba::rprime_bruteforce(*m, m->ground()).first;
    r.check(best == 6, "nisse-brute", Json::array({best, 6}));
    r.check(amoeba::amoeba_dim_numeric(a, 5, opt.seed) == 6, "nisse-numeric", Json::array());
    r.check(amoeba::axiom_suite(*m).ok(), "nisse-axioms", Json::array());
    check_budget(res, 7);
  }
  {  // identity and ones
    GRMatrix i5 = amoeba::identity_matrix(5);
    auto [dim_i, part_i] = amoeba::amoeba_dimension(i5);
    r.check(dim_i == 5 && part_i == amoeba::Partition::singletons(SubsetMask::full(5)),
            "identity-dim", Json::array({dim_i}));
    GRMatrix o4 = amoeba::ones_matrix(4);
    auto [dim_o, part_o] = amoeba::amoeba_dimension(o4);
    r.check(dim_o == 1 && part_o == amoeba::Partition::trivial(SubsetMask::full(4)),
            "ones-dim", Json::array({dim_o}));
  }
  {  // uniform U_{2,4}
    OraclePtr u = amoeba::make_uniform_oracle(2, 4);
    auto res = amoeba::coarsest_optimal_partition(*u, u->ground());
    r.check(res.rprime == 3 && res.partition == amoeba::Partition::trivial(u->ground()),
            "uniform-2-4", Json::array({res.rprime}));
  }
  {  // truncated sums, block partitions
    for (auto [c, k] : {std::pair{1, 4}, std::pair{1, 5}}) {
      OraclePtr m = amoeba::trunc_sum_oracle(c, k);
      auto res = amoeba::coarsest_optimal_partition(*m, m->ground());
      r.check(res.rprime == 2 * c * k - k, "trunc-sum-dim",
              Json::array({c, k, res.rprime, 2 * c * k - k}));
      r.check(res.partition == amoeba::trunc_sum_blocks(c, k), "trunc-sum-partition",
              Json::array({c, k}));
      check_budget(res, static_cast<std::uint64_t>(2 * c * k));
    }
  }
  // random corpus: algorithm vs brute force vs analytic rank, plus budgets
  for (std::uint64_t i = 0; i < 25; ++i) {
    GRMatrix a = amoeba::random_instance(1000 + i);
    OraclePtr m = amoeba::make_linear_oracle(a);
    auto res = amoeba::coarsest_optimal_partition(*m, m->ground());
    const int best = amoeba::rprime_bruteforce(*m, m->ground()).first;
    r.check(res.rprime == best, "random-brute-agreement", Json::array({i, res.rprime, best}));
    amoeba::Partition coarsest = amoeba::coarsest_bruteforce(*m, m->ground());
    r.check(res.partition == coarsest, "random-coarsest-agreement", Json::array({i}));
    int numeric = amoeba::amoeba_dim_numeric(a, 5, 9000 + i);
    r.check(numeric == res.rprime, "random-numeric-agreement",
            Json::array({i, res.rprime, numeric}));
    const int full_rank = m->rank(m->ground());
    r.check(res.rprime <= std::min(m->ground_size(), 2 * full_rank - 1), "random-upper-bound",
            Json::array({i, res.rprime}));
    check_budget(res, static_cast<std::uint64_t>(m->ground_size()));
  }

  Json doc = r.to_json(bell_counts_json(8));
  Json stats;
  stats["runs"] = 25 + 3;
  stats["total_rank_calls"] = total_calls;
  stats["total_budget"] = total_budget;
  stats["budget_constant"] = kBudgetConstant;
  doc["rank_call_stats"] = std::move(stats);
  emit(doc);
  return r.failures.empty() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"amoeba dimension of a linear subspace via its derived matroid"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--gen", opt.gen,
                    "builtin instance: nisse | identity N | ones N | uniform D N | trunc-sum C K");
    cmd->add_option("--matrix", opt.matrix_file, "matrix file");
    cmd->add_option("--format", opt.format, "matrix file format: text | json");
    cmd->add_option("--seed", opt.seed, "seed for generators and sampling");
  };

  CLI::App* dim = app.add_subcommand("dim", "amoeba dimension of the instance");
  add_common(dim);
  CLI::App* rank = app.add_subcommand("rank", "derived rank of a subset");
  add_common(rank);
  rank->add_option("--subset", opt.subset, "1-based comma-separated elements, e.g. 1,3,5");
  CLI::App* verify = app.add_subcommand("verify", "cross-check the algorithm on the instance");
  add_common(verify);
  verify->add_option("--mode", opt.mode, "brute | numeric | axioms | all");
  verify->add_option("--samples", opt.samples, "sample count for numeric verification");
  CLI::App* selftest = app.add_subcommand("selftest", "run the built-in regression corpus");
  selftest->add_option("--seed", opt.seed, "seed for the generic pattern instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (dim->parsed()) return cmd_dim(opt);
    if (rank->parsed()) return cmd_rank(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const Error& e) {
    std::cerr << "error (" << amoeba::errc_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
