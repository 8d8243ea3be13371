#include "amoeba/sfm.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "amoeba/errors.hpp"
#include "amoeba/gaussian.hpp"

namespace amoeba {

ScaledCunninghamFn::ScaledCunninghamFn(const RankOracle& m, const SubsetMask& b, int e)
    : m_(m), b_(b), e_(e), k_(b.count()) {
  if (e < 0 || e >= m.ground_size() || b.ground_size != m.ground_size())
    throw Error(Errc::InvalidParams, "element or base set outside the ground set");
  if (b.contains(e)) throw Error(Errc::InvalidParams, "e must lie outside B");
}

std::int64_t ScaledCunninghamFn::operator()(const SubsetMask& i) const {
  if (!i.subset_of(b_)) throw Error(Errc::NotSubsetOfB, "argument is not a subset of B");
  const std::int64_t r = m_.rank(i.with(e_));
  const std::int64_t card = i.count();
  return 2 * static_cast<std::int64_t>(k_) * (2 * r - 2 - card) - card;
}

SubsetMask minimize_brute(const ScaledCunninghamFn& f) {
  const SubsetMask b = f.ground_B();
  if (f.k() > kSfmBruteForceMaxK)
    throw Error(Errc::BTooLarge, "brute-force minimization is limited to |B| <= 22");

  std::int64_t best = 0;
  std::uint64_t arg_union = 0;
  bool first = true;
  for (std::uint64_t sub = b.bits;; sub = (sub - 1) & b.bits) {
    const std::int64_t v = f(SubsetMask(sub, b.ground_size));
    if (first || v < best) {
      best = v;
      arg_union = sub;
      first = false;
    } else if (v == best) {
      arg_union |= sub;
    }
    if (sub == 0) break;
  }
  // minimizers form a lattice, so their union is again a minimizer
  return SubsetMask(arg_union, b.ground_size);
}

namespace {

using RVec = std::vector<Rational>;

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Edmonds' greedy: the vertex of the base polytope minimizing <w, q>,
// filling marginals in ascending-w order (ties by position).
RVec greedy_vertex(const ScaledCunninghamFn& f, const std::vector<int>& elems, const RVec& w) {
  const std::size_t k = elems.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  RVec q(k);
  SubsetMask u = SubsetMask::empty(f.ground_B().ground_size);
  std::int64_t prev = f(u);
  for (std::size_t t : order) {
    u = u.with(elems[t]);
    const std::int64_t cur = f(u);
    q[t] = Rational(cur - prev);
    prev = cur;
  }
  return q;
}

// Affine minimizer of ||sum mu_i q_i||^2 subject to sum mu_i = 1, by the
// exact normal equations [G 1; 1^T 0] [mu; nu] = [0; 1].
bool affine_minimizer(const std::vector<RVec>& pts, RVec& mu) {
  const std::size_t m = pts.size();
  std::vector<RVec> a(m + 1, RVec(m + 2, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = dot(pts[i], pts[j]);
    a[i][m] = 1;
    a[i][m + 1] = 0;
  }
  for (std::size_t j = 0; j < m; ++j) a[m][j] = 1;
  a[m][m] = 0;
  a[m][m + 1] = 1;

  const std::size_t rows = m + 1;
  for (std::size_t col = 0; col < rows; ++col) {
    std::size_t piv = col;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) return false;
    std::swap(a[piv], a[col]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational factor = a[i][col] / a[col][col];
      for (std::size_t j = col; j < m + 2; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  mu.assign(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) mu[i] = a[i][m + 1] / a[i][i];
  return true;
}

}  // namespace

SubsetMask minimize_mnp(const ScaledCunninghamFn& f) {
  const SubsetMask b = f.ground_B();
  const std::vector<int> elems = b.elements();
  const std::size_t k = elems.size();
  if (k == 0) throw Error(Errc::InvalidParams, "minimize_mnp requires a nonempty B");

  // Wolfe's min-norm point over the base polytope of F.
  std::vector<RVec> pts;
  RVec lambda;
  RVec x = greedy_vertex(f, elems, RVec(k, Rational(0)));
  pts.push_back(x);
  lambda.push_back(Rational(1));

  const int max_major = 2000;
  bool converged = false;
  for (int major = 0; major < max_major; ++major) {
    RVec q = greedy_vertex(f, elems, x);
    if (dot(x, q) >= dot(x, x)) {
      converged = true;
      break;
    }
    pts.push_back(std::move(q));
    lambda.push_back(Rational(0));

    for (;;) {
      RVec mu;
      if (!affine_minimizer(pts, mu))
        throw Error(Errc::CertificationFailed, "degenerate affine subproblem in Wolfe iteration");
      bool interior = true;
      for (const auto& c : mu)
        if (c < 0) {
          interior = false;
          break;
        }
      if (interior) {
        RVec y(k, Rational(0));
        for (std::size_t i = 0; i < pts.size(); ++i)
          for (std::size_t j = 0; j < k; ++j) y[j] += mu[i] * pts[i][j];
        x = std::move(y);
        lambda = std::move(mu);
        // drop zero-weight points
        for (std::size_t i = pts.size(); i-- > 0;)
          if (lambda[i] == 0) {
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
            lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
          }
        break;
      }
      // step to the boundary of the simplex and drop a vanished point
      Rational theta(-1);
      for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) {
          Rational t = lambda[i] / (lambda[i] - mu[i]);
          if (theta < 0 || t < theta) theta = t;
        }
      }
      for (std::size_t i = 0; i < mu.size(); ++i)
        lambda[i] = lambda[i] + theta * (mu[i] - lambda[i]);
      RVec z(k, Rational(0));
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < k; ++j) z[j] += lambda[i] * pts[i][j];
      x = std::move(z);
      for (std::size_t i = pts.size(); i-- > 0;)
        if (lambda[i] <= 0) {
          pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
          lambda.erase(lambda.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }
  }
  if (!converged)
    throw Error(Errc::CertificationFailed, "Wolfe iteration did not converge");

  // Maximal minimizer from the min-norm point, then the greedy closure.
  SubsetMask j = SubsetMask::empty(b.ground_size);
  Rational dual_min(0);
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] <= 0) j = j.with(elems[i]);
    if (x[i] < 0) dual_min += x[i];
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (int e : (b - j).elements()) {
      if (f(j.with(e)) == f(j)) {
        j = j.with(e);
        grew = true;
      }
    }
  }

  // Certification: duality identity, empty-set baseline, local exchanges.
  const std::int64_t fj = f(j);
  if (Rational(fj) != dual_min)
    throw Error(Errc::CertificationFailed, "min-norm duality identity failed");
  if (fj > 0)
    throw Error(Errc::CertificationFailed, "minimizer exceeds the empty-set baseline");
  bool local_ok = true;
  j.for_each([&](int e) {
    if (f(j.without(e)) < fj) local_ok = false;
  });
  for (int e : (b - j).elements())
    if (f(j.with(e)) <= fj) local_ok = false;
  if (!local_ok)
    throw Error(Errc::CertificationFailed, "single-element exchange check failed");
  return j;
}

SubsetMask largest_feasible_J(const RankOracle& m, const SubsetMask& b, int e) {
  if (b.contains(e)) throw Error(Errc::InvalidParams, "e must lie outside B");
  if (b.is_empty()) return SubsetMask::empty(b.ground_size);
  ScaledCunninghamFn f(m, b, e);
  return b.count() <= kSfmBruteForceMaxK ? minimize_brute(f) : minimize_mnp(f);
}

}  // namespace amoeba
