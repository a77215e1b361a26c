#include "abideal/typea_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace abideal {
namespace {

constexpr long long kElementCap = 10'000'000;

using Matrix = std::vector<std::vector<int>>;

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int primitive_root(int q) {
  if (q == 2) return 1;
  for (int t = 2; t < q; ++t) {
    int x = 1, order = 0;
    do {
      x = x * t % q;
      ++order;
    } while (x != 1);
    if (order == q - 1) return t;
  }
  throw std::logic_error("no primitive root");
}

int inverse_mod(int a, int q) {
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw std::logic_error("not invertible");
}

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply_mod(const Matrix& a, const Matrix& b, int q) {
  const int n = static_cast<int>(a.size());
  Matrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % q;
    }
  return c;
}

// Generators of B(F_q) in SL_n with their inverses.
std::vector<std::pair<Matrix, Matrix>> borel_generators(int n, int q) {
  std::vector<std::pair<Matrix, Matrix>> gens;
  const int t = primitive_root(q);
  if (t != 1)
    for (int k = 0; k + 1 < n; ++k) {
      Matrix h = identity_matrix(n), hi = identity_matrix(n);
      h[k][k] = t;
      h[k + 1][k + 1] = inverse_mod(t, q);
      hi[k][k] = inverse_mod(t, q);
      hi[k + 1][k + 1] = t;
      gens.emplace_back(h, hi);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Matrix x = identity_matrix(n), xi = identity_matrix(n);
      x[i][j] = 1;
      xi[i][j] = q - 1;
      gens.emplace_back(x, xi);
    }
  return gens;
}

Matrix decode(const MatrixIdealContext& ctx, long long code) {
  Matrix m(ctx.n, std::vector<int>(ctx.n, 0));
  for (const auto& [i, j] : ctx.positions) {
    m[i - 1][j - 1] = static_cast<int>(code % ctx.q);
    code /= ctx.q;
  }
  return m;
}

// Returns -1 when the matrix has entries outside the ideal slots.
long long encode(const MatrixIdealContext& ctx, const Matrix& m) {
  long long code = 0, place = 1;
  long long inside = 0;
  for (const auto& [i, j] : ctx.positions) {
    code += place * m[i - 1][j - 1];
    place *= ctx.q;
    if (m[i - 1][j - 1] != 0) ++inside;
  }
  long long nonzero = 0;
  for (const auto& row : m)
    for (int x : row) nonzero += x != 0;
  return nonzero == inside ? code : -1;
}

long long conjugate(const MatrixIdealContext& ctx, const std::pair<Matrix, Matrix>& gen, long long code) {
  const Matrix y = multiply_mod(multiply_mod(gen.first, decode(ctx, code), ctx.q), gen.second, ctx.q);
  return encode(ctx, y);
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::pair<int, int> slot_of(const RootSystem& rs, const Root& r) {
  // e_i - e_j = alpha_i + ... + alpha_{j-1}
  int i = -1, j = -1;
  for (int k = 0; k < rs.rank(); ++k)
    if (r.coeffs[k] != 0) {
      if (i < 0) i = k + 1;
      j = k + 2;
    }
  return {i, j};
}

}  // namespace

long long MatrixIdealContext::element_count() const {
  long long count = 1;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    count *= q;
    if (count > kElementCap) return count;
  }
  return count;
}

MatrixIdealContext make_matrix_context(const RootSystem& rs, const AbelianIdeal& ideal, int q) {
  if (rs.type() != CartanType::A) throw std::invalid_argument("matrix model needs type A");
  if (!is_prime(q)) throw std::invalid_argument("q must be a prime");
  MatrixIdealContext ctx;
  ctx.n = rs.rank() + 1;
  ctx.q = q;
  for (auto it = ideal.roots.rbegin(); it != ideal.roots.rend(); ++it)
    ctx.positions.push_back(slot_of(rs, rs.roots()[*it]));
  if (ctx.element_count() > kElementCap) throw std::invalid_argument("orbit enumeration exceeds 10^7 elements");
  return ctx;
}

OrbitPartition enumerate_orbits(const MatrixIdealContext& ctx) {
  const long long total = ctx.element_count();
  if (total > kElementCap) throw std::invalid_argument("orbit enumeration exceeds 10^7 elements");
  const auto gens = borel_generators(ctx.n, ctx.q);
  UnionFind uf(static_cast<std::size_t>(total));
  for (long long x = 0; x < total; ++x)
    for (const auto& gen : gens) {
      const long long y = conjugate(ctx, gen, x);
      if (y < 0) throw std::logic_error("conjugation leaves the ideal");
      uf.unite(static_cast<int>(x), static_cast<int>(y));
    }
  OrbitPartition part;
  part.class_of.assign(static_cast<std::size_t>(total), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(total), -1);
  for (long long x = 0; x < total; ++x) {
    const int root = uf.find(static_cast<int>(x));
    if (id_of_root[root] < 0) {
      id_of_root[root] = static_cast<int>(part.sizes.size());
      part.sizes.push_back(0);
      part.representatives.push_back(x);
    }
    part.class_of[x] = id_of_root[root];
    ++part.sizes[id_of_root[root]];
  }
  return part;
}

bool generator_closed(const MatrixIdealContext& ctx, const OrbitPartition& part) {
  const auto gens = borel_generators(ctx.n, ctx.q);
  for (long long x = 0; x < static_cast<long long>(part.class_of.size()); ++x)
    for (const auto& gen : gens) {
      const long long y = conjugate(ctx, gen, x);
      if (y < 0 || part.class_of[y] != part.class_of[x]) return false;
    }
  return true;
}

long long encode_root_set(const MatrixIdealContext& ctx, const RootSystem& rs, const OrthogonalSet& S) {
  Matrix m(ctx.n, std::vector<int>(ctx.n, 0));
  for (const AffineRoot& a : S.roots) {
    const auto [i, j] = slot_of(rs, a.finite);
    m[i - 1][j - 1] = 1;
  }
  const long long code = encode(ctx, m);
  if (code < 0) throw std::invalid_argument("root set is not inside the ideal");
  return code;
}

std::string format_slots(const RootSystem& rs, const OrthogonalSet& S) {
  std::vector<std::pair<int, int>> slots;
  for (const AffineRoot& a : S.roots) slots.push_back(slot_of(rs, a.finite));
  std::sort(slots.begin(), slots.end());
  std::string s = "{";
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(slots[k].first) + "," + std::to_string(slots[k].second) + ")";
  }
  return s + "}";
}

OracleRun run_typea_oracle(const AffineWeylGroup& g, const AbelianIdeal& ideal, int q) {
  const RootSystem& rs = g.root_system();
  OracleRun run;
  run.ctx = make_matrix_context(rs, ideal, q);
  run.partition = enumerate_orbits(run.ctx);
  run.closed = generator_closed(run.ctx, run.partition);
  std::vector<AffineRoot> pool;
  for (int id : ideal.roots) pool.push_back({rs.roots()[id], -1});
  run.sets = orthogonal_subsets(rs, pool);
  std::vector<int> seen;
  run.separated = true;
  for (const OrthogonalSet& S : run.sets) {
    run.L.push_back(involution_L(g, sigma_of(g, S)));
    const int cls = run.partition.class_of[encode_root_set(run.ctx, rs, S)];
    run.set_orbit_size.push_back(run.partition.sizes[cls]);
    if (std::find(seen.begin(), seen.end(), cls) != seen.end()) run.separated = false;
    seen.push_back(cls);
  }
  return run;
}

std::vector<std::vector<int>> estimate_dimensions(const std::vector<OracleRun>& runs) {
  if (runs.size() < 2) throw std::invalid_argument("dimension estimates need at least two primes");
  std::vector<std::vector<int>> out(runs.front().sets.size());
  for (std::size_t k = 0; k + 1 < runs.size(); ++k) {
    const double q1 = runs[k].ctx.q, q2 = runs[k + 1].ctx.q;
    for (std::size_t s = 0; s < out.size(); ++s) {
      const double ratio = static_cast<double>(runs[k + 1].set_orbit_size[s]) / runs[k].set_orbit_size[s];
      out[s].push_back(static_cast<int>(std::lround(std::log(ratio) / std::log(q2 / q1))));
    }
  }
  return out;
}

Report check_oracle(const std::vector<OracleRun>& runs) {
  Report r("oracle-typea");
  for (const OracleRun& run : runs) {
    const std::string at = " at q = " + std::to_string(run.ctx.q);
    r.check(run.separated, [&] { return "two e_S share a class" + at; });
    r.check(run.partition.count() >= run.sets.size(), [&] { return "fewer classes than orthogonal subsets" + at; });
    r.check(run.closed, [&] { return "partition not closed under the generators" + at; });
  }
  return r;
}

std::string oracle_report_json(const RootSystem& rs, int ideal_id, const std::vector<OracleRun>& runs) {
  using nlohmann::ordered_json;
  ordered_json out;
  if (runs.empty()) throw std::invalid_argument("no oracle runs");
  const MatrixIdealContext& first = runs.front().ctx;
  out["n"] = first.n;
  out["ideal_id"] = ideal_id;
  ordered_json ideal = ordered_json::array();
  for (const auto& [i, j] : first.positions) ideal.push_back({i, j});
  out["ideal"] = ideal;
  out["reports"] = ordered_json::array();
  for (const OracleRun& run : runs) {
    ordered_json jr;
    jr["n"] = run.ctx.n;
    jr["q"] = run.ctx.q;
    jr["ideal"] = ideal;
    jr["classes"] = run.partition.count();
    jr["combinatorial"] = run.sets.size();
    ordered_json dims = ordered_json::object();
    ordered_json sizes = ordered_json::object();
    for (std::size_t s = 0; s < run.sets.size(); ++s) {
      const std::string key = format_slots(rs, run.sets[s]);
      dims[key] = run.L[s];
      sizes[key] = run.set_orbit_size[s];
    }
    jr["dims"] = dims;
    jr["orbit_sizes"] = sizes;
    jr["separated"] = run.separated;
    jr["counts_equal"] = run.partition.count() == run.sets.size();
    out["reports"].push_back(std::move(jr));
  }
  if (runs.size() >= 2) {
    const auto est = estimate_dimensions(runs);
    ordered_json estimates = ordered_json::object();
    bool all_match = true;
    for (std::size_t s = 0; s < est.size(); ++s) {
      const int L = runs.front().L[s];
      ordered_json e;
      e["L"] = L;
      e["estimates"] = est[s];
      const bool match = std::all_of(est[s].begin(), est[s].end(), [L](int d) { return d == L; });
      e["match"] = match;
      all_match = all_match && match;
      estimates[format_slots(rs, runs.front().sets[s])] = e;
    }
    out["estimates"] = estimates;
    out["estimates_match"] = all_match;
  }
  return out.dump(2) + "\n";
}

}  // namespace abideal
