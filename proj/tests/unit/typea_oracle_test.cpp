#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "abideal/typea_oracle.hpp"

using namespace abideal;

namespace {

using Matrix = std::vector<std::vector<int>>;

int mod(long long a, int q) { return static_cast<int>(((a % q) + q) % q); }

int inverse_mod(int a, int q) {
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::logic_error("no inverse");
}

Matrix multiply(const Matrix& a, const Matrix& b, int q) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], q);
  return c;
}

// Inverse of an invertible upper triangular matrix by back substitution.
Matrix upper_inverse(const Matrix& b, int q) {
  const int n = static_cast<int>(b.size());
  Matrix inv(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) {
    inv[j][j] = inverse_mod(b[j][j], q);
    for (int i = j - 1; i >= 0; --i) {
      long long s = 0;
      for (int k = i + 1; k <= j; ++k) s += static_cast<long long>(b[i][k]) * inv[k][j];
      inv[i][j] = mod(-s * inverse_mod(b[i][i], q), q);
    }
  }
  return inv;
}

// Every upper triangular matrix of determinant one over F_q.
std::vector<Matrix> borel(int n, int q) {
  std::vector<std::pair<int, int>> upper;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) upper.push_back({i, j});
  std::vector<Matrix> out;
  std::vector<int> diag(n, 1);
  std::function<void(int)> pick = [&](int k) {
    if (k == n) {
      long long det = 1;
      for (int d : diag) det = det * d % q;
      if (det != 1) return;
      long long total = 1;
      for (std::size_t u = 0; u < upper.size(); ++u) total *= q;
      for (long long code = 0; code < total; ++code) {
        Matrix b(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) b[i][i] = diag[i];
        long long c = code;
        for (const auto& [i, j] : upper) {
          b[i][j] = static_cast<int>(c % q);
          c /= q;
        }
        out.push_back(b);
      }
      return;
    }
    for (int d = 1; d < q; ++d) {
      diag[k] = d;
      pick(k + 1);
    }
  };
  pick(0);
  return out;
}

// Orbit sizes under full conjugation, keyed by the smallest code in each orbit.
std::map<long long, long long> orbits_by_conjugation(const MatrixIdealContext& ctx) {
  const auto group = borel(ctx.n, ctx.q);
  std::vector<Matrix> inverses;
  for (const auto& b : group) inverses.push_back(upper_inverse(b, ctx.q));
  const long long count = ctx.element_count();
  auto decode = [&](long long code) {
    Matrix x(ctx.n, std::vector<int>(ctx.n, 0));
    for (const auto& [i, j] : ctx.positions) {
      x[i - 1][j - 1] = static_cast<int>(code % ctx.q);
      code /= ctx.q;
    }
    return x;
  };
  auto encode = [&](const Matrix& x) {
    long long code = 0, scale = 1;
    for (const auto& [i, j] : ctx.positions) {
      code += x[i - 1][j - 1] * scale;
      scale *= ctx.q;
    }
    return code;
  };
  std::map<long long, long long> out;
  std::vector<bool> done(count, false);
  for (long long c = 0; c < count; ++c) {
    if (done[c]) continue;
    std::set<long long> orbit;
    const Matrix x = decode(c);
    for (std::size_t k = 0; k < group.size(); ++k) {
      const Matrix y = multiply(multiply(group[k], x, ctx.q), inverses[k], ctx.q);
      orbit.insert(encode(y));
    }
    for (long long o : orbit) done[o] = true;
    out[*orbit.begin()] = static_cast<long long>(orbit.size());
  }
  return out;
}

std::map<long long, long long> library_orbits(const OrbitPartition& part) {
  std::map<long long, long long> out;
  for (std::size_t k = 0; k < part.count(); ++k) out[part.representatives[k]] = part.sizes[k];
  return out;
}

}  // namespace

TEST_CASE("contexts") {
  const RootSystem a2(CartanType::A, 2);
  const auto ideals = enumerate_abelian_ideals(a2);
  const MatrixIdealContext ctx = make_matrix_context(a2, ideals[2], 2);
  CHECK(ctx.n == 3);
  CHECK(ctx.positions == std::vector<std::pair<int, int>>{{1, 3}, {1, 2}});
  CHECK(ctx.element_count() == 4);
  CHECK_THROWS_AS(make_matrix_context(a2, ideals[2], 4), std::invalid_argument);
  const RootSystem b2(CartanType::B, 2);
  CHECK_THROWS_AS(make_matrix_context(b2, enumerate_abelian_ideals(b2)[1], 2), std::invalid_argument);
}

TEST_CASE("n = 2 single slot") {
  const RootSystem rs(CartanType::A, 1);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const OracleRun q2 = run_typea_oracle(g, all[1].ideal, 2);
  CHECK(q2.partition.count() == 2);
  CHECK(q2.partition.sizes == std::vector<long long>{1, 1});
  // The determinant-one torus scales the slot by t^2, so over F_3 the two
  // nonzero values stay apart.
  const OracleRun q3 = run_typea_oracle(g, all[1].ideal, 3);
  CHECK(q3.partition.count() == 3);
  CHECK(q3.partition.sizes == std::vector<long long>{1, 1, 1});
  const OracleRun q5 = run_typea_oracle(g, all[1].ideal, 5);
  CHECK(q5.partition.count() == 3);
  CHECK(q5.partition.sizes == std::vector<long long>{1, 2, 2});
  const OracleRun q7 = run_typea_oracle(g, all[1].ideal, 7);
  const auto est = estimate_dimensions({q5, q7});
  REQUIRE(est.size() == 2);
  CHECK(est[0] == std::vector<int>{0});  // S empty: a fixed point
  CHECK(est[1] == std::vector<int>{1});  // L(s0) = 1
  CHECK(q7.L == std::vector<int>{0, 1});
  CHECK_THROWS_AS(estimate_dimensions({q5}), std::invalid_argument);
}

TEST_CASE("n = 3 two-slot ideal") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const OracleRun run = run_typea_oracle(g, all[2].ideal, 2);
  CHECK(run.partition.count() == 3);
  CHECK(run.sets.size() == 3);
  CHECK(run.separated);
  CHECK(run.closed);
  CHECK(format_slots(rs, run.sets[1]) == "{(1,2)}");
  CHECK(check_oracle({run}).passed());
}

TEST_CASE("generator orbits match full conjugation") {
  for (int n : {2, 3}) {
    const RootSystem rs(CartanType::A, n - 1);
    const AffineWeylGroup g(rs);
    for (const auto& m : enumerate_minuscule(g))
      for (int q : {2, 3, 5}) {
        if (n == 3 && q == 5) continue;
        CAPTURE(n);
        CAPTURE(q);
        const MatrixIdealContext ctx = make_matrix_context(rs, m.ideal, q);
        const OrbitPartition part = enumerate_orbits(ctx);
        CHECK(library_orbits(part) == orbits_by_conjugation(ctx));
        CHECK(generator_closed(ctx, part));
      }
  }
}

TEST_CASE("hard assertions for n = 4") {
  const RootSystem rs(CartanType::A, 3);
  const AffineWeylGroup g(rs);
  for (const auto& m : enumerate_minuscule(g)) {
    const std::vector<OracleRun> runs{run_typea_oracle(g, m.ideal, 2), run_typea_oracle(g, m.ideal, 3)};
    CHECK(check_oracle(runs).passed());
  }
}

TEST_CASE("report JSON") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const std::vector<OracleRun> runs{run_typea_oracle(g, all[2].ideal, 2), run_typea_oracle(g, all[2].ideal, 3)};
  const auto doc = nlohmann::json::parse(oracle_report_json(rs, 2, runs));
  CHECK(doc["n"] == 3);
  CHECK(doc["ideal_id"] == 2);
  CHECK(doc["ideal"] == nlohmann::json::parse("[[1,3],[1,2]]"));
  REQUIRE(doc["reports"].size() == 2);
  const auto& r = doc["reports"][0];
  CHECK(r["q"] == 2);
  CHECK(r["classes"] == 3);
  CHECK(r["combinatorial"] == 3);
  CHECK(r["dims"]["{}"] == 0);
  CHECK(r["dims"]["{(1,3)}"] == 1);
  CHECK(r["dims"]["{(1,2)}"] == 2);
  CHECK(r["separated"] == true);
  CHECK(doc["estimates"].contains("{(1,2)}"));
  CHECK(doc["estimates_match"].is_boolean());
}
