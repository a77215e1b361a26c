#include "abideal/involutions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "abideal/exact_linalg.hpp"

namespace abideal {

bool OrthogonalSet::contains(const AffineRoot& a) const {
  return std::binary_search(roots.begin(), roots.end(), a, AffineLess{});
}

bool are_orthogonal(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b) {
  return rs.inner(a.finite, b.finite) == 0;
}

bool orthogonal_to(const RootSystem& rs, const AffineRoot& beta, const OrthogonalSet& S) {
  return std::all_of(S.roots.begin(), S.roots.end(),
                     [&](const AffineRoot& a) { return are_orthogonal(rs, beta, a); });
}

OrthogonalSet make_orthogonal_set(const RootSystem& rs, std::vector<AffineRoot> roots) {
  std::sort(roots.begin(), roots.end(), AffineLess{});
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (!rs.is_root(roots[i].finite)) throw std::invalid_argument("orthogonal set: not a real root");
    for (std::size_t j = 0; j < i; ++j)
      if (roots[i] == roots[j] || !are_orthogonal(rs, roots[i], roots[j]))
        throw std::invalid_argument("orthogonal set: roots are not pairwise orthogonal");
  }
  return {std::move(roots)};
}

bool canonical_less(const OrthogonalSet& a, const OrthogonalSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.roots.begin(), a.roots.end(), b.roots.begin(), b.roots.end(), AffineLess{});
}

std::vector<OrthogonalSet> orthogonal_subsets(const RootSystem& rs, const std::vector<AffineRoot>& pool_in) {
  std::vector<AffineRoot> pool = pool_in;
  std::sort(pool.begin(), pool.end(), AffineLess{});
  const std::size_t n = pool.size();
  std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) orth[i][j] = are_orthogonal(rs, pool[i], pool[j]);

  std::vector<OrthogonalSet> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t start) {
    OrthogonalSet s;
    for (std::size_t k : chosen) s.roots.push_back(pool[k]);
    out.push_back(std::move(s));
    for (std::size_t j = start; j < n; ++j) {
      bool ok = true;
      for (std::size_t k : chosen)
        if (!orth[k][j]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(j);
      dfs(j + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  std::sort(out.begin(), out.end(), [](const OrthogonalSet& a, const OrthogonalSet& b) { return canonical_less(a, b); });
  return out;
}

AffineWeylElement sigma_of_ordered(const AffineWeylGroup& g, const std::vector<AffineRoot>& roots) {
  AffineWeylElement x = g.identity();
  for (const AffineRoot& a : roots) x = g.multiply(x, g.reflection(a));
  return x;
}

AffineWeylElement sigma_of(const AffineWeylGroup& g, const OrthogonalSet& S) { return sigma_of_ordered(g, S.roots); }

int reflection_rank(const AffineWeylGroup& g, const AffineWeylElement& x) {
  auto m = g.affine_lattice_matrix(x);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j ? 1 : 0) - m[i][j];
  return matrix_rank(to_rational(m));
}

bool is_involution(const AffineWeylGroup& g, const AffineWeylElement& x) {
  return g.is_identity(g.multiply(x, x));
}

int involution_L(const AffineWeylGroup& g, const AffineWeylElement& sigma) {
  const int total = g.length(sigma) + reflection_rank(g, sigma);
  if (total % 2 != 0) throw std::logic_error("involution_L: odd length plus rank");
  return total / 2;
}

AffineWeylElement circ(const AffineWeylGroup& g, int i, const AffineWeylElement& sigma) {
  const AffineWeylElement s = g.simple_reflection(i);
  const AffineWeylElement left = g.multiply(s, sigma);
  const AffineWeylElement right = g.multiply(sigma, s);
  if (left == right) return left;
  return g.multiply(left, s);
}

DescentKind descent_kind(const AffineWeylGroup& g, const AffineWeylElement& sigma, int i) {
  const AffineRoot a = g.simple_root(i);
  const AffineRoot image = g.act(sigma, a);
  if (image.is_positive()) return DescentKind::none;
  return image == -a ? DescentKind::real : DescentKind::complex;
}

const char* to_string(DescentKind k) {
  switch (k) {
    case DescentKind::none: return "none";
    case DescentKind::real: return "real";
    case DescentKind::complex: return "complex";
  }
  return "?";
}

const char* to_string(DescentLocus l) { return l == DescentLocus::finite ? "finite" : "affine"; }

bool is_admissible(const RootSystem& rs, const AdmissiblePair& p, const MinusculeElement& w) {
  if (!weak_order_leq(p.v, w)) return false;
  for (std::size_t i = 0; i < p.S.roots.size(); ++i) {
    const AffineRoot& a = p.S.roots[i];
    if (a.level != -1 || !a.finite.is_positive()) return false;
    const int id = rs.index_of(a.finite);
    if (!w.ideal.contains(id) || p.v.ideal.contains(id)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!are_orthogonal(rs, a, p.S.roots[j])) return false;
  }
  return true;
}

OrthogonalSet image_set(const AffineWeylGroup& g, const AffineWeylElement& v, const OrthogonalSet& S) {
  OrthogonalSet out;
  for (const AffineRoot& a : S.roots) out.roots.push_back(g.act(v, a));
  std::sort(out.roots.begin(), out.roots.end(), AffineLess{});
  return out;
}

AffineWeylElement pair_sigma(const AffineWeylGroup& g, const AdmissiblePair& p) {
  // sigma_{v(S)} = v sigma_S v^{-1}
  const AffineWeylElement& v = p.v.element;
  return g.multiply(g.multiply(v, sigma_of(g, p.S)), g.inverse(v));
}

int pair_L(const AffineWeylGroup& g, const AdmissiblePair& p) { return involution_L(g, pair_sigma(g, p)); }

DescentLocus descent_locus(const AffineWeylGroup& g, const AffineWeylElement& v, int i) {
  const AffineRoot beta = g.act_inverse(v, g.simple_root(i));
  if (beta.level == 0 && g.simple_index(beta) > 0) return DescentLocus::finite;
  if (beta.level == 1 && beta.finite.is_negative()) return DescentLocus::affine;
  throw std::invalid_argument("descent is neither of finite nor of affine type");
}

std::vector<PairDescent> pair_descents(const AffineWeylGroup& g, const AdmissiblePair& p) {
  const AffineWeylElement sigma = pair_sigma(g, p);
  std::vector<PairDescent> out;
  for (int i = 0; i <= g.rank(); ++i) {
    const DescentKind k = descent_kind(g, sigma, i);
    if (k == DescentKind::none) continue;
    out.push_back({i, k, descent_locus(g, p.v.element, i)});
  }
  return out;
}

std::vector<std::pair<AffineRoot, AffineRoot>> half_difference_pairs(const OrthogonalSet& S, const AffineRoot& beta) {
  const AffineRoot twice{beta.finite.scaled(2), 2 * beta.level};
  std::vector<std::pair<AffineRoot, AffineRoot>> out;
  for (const AffineRoot& g1 : S.roots)
    for (const AffineRoot& g2 : S.roots)
      if (g1 - g2 == twice) out.emplace_back(g1, g2);
  return out;
}

AdmissiblePair f_alpha(const AffineWeylGroup& g, const AdmissiblePair& p, int i) {
  const RootSystem& rs = g.root_system();
  const DescentKind kind = descent_kind(g, pair_sigma(g, p), i);
  if (kind == DescentKind::none) throw std::invalid_argument("f_alpha: not a descent");
  const DescentLocus locus = descent_locus(g, p.v.element, i);
  const AffineRoot beta = g.act_inverse(p.v.element, g.simple_root(i));

  if (locus == DescentLocus::affine) {
    auto next = extend(g, p.v, i);
    if (!next) throw std::logic_error("f_alpha: affine descent does not extend v");
    AdmissiblePair out{*next, p.S};
    if (kind == DescentKind::real) {
      auto it = std::find(out.S.roots.begin(), out.S.roots.end(), -beta);
      if (it == out.S.roots.end()) throw std::logic_error("f_alpha: real affine descent with -beta outside S");
      out.S.roots.erase(it);
    }
    return out;
  }

  if (kind == DescentKind::complex) {
    std::vector<AffineRoot> moved;
    for (const AffineRoot& a : p.S.roots) moved.push_back({rs.reflect(beta.finite, a.finite), a.level});
    return {p.v, make_orthogonal_set(rs, std::move(moved))};
  }

  const auto pairs = half_difference_pairs(p.S, beta);
  if (pairs.empty()) throw std::logic_error("f_alpha: real finite descent without decomposition");
  const auto& [g1, g2] = pairs.front();
  std::vector<AffineRoot> roots;
  for (const AffineRoot& a : p.S.roots)
    if (!(a == g1) && !(a == g2)) roots.push_back(a);
  roots.push_back(beta + g2);
  return {p.v, make_orthogonal_set(rs, std::move(roots))};
}

std::vector<AffineRoot> minus_fixed_roots(const AffineWeylGroup& g, const OrthogonalSet& S) {
  const RootSystem& rs = g.root_system();
  const AffineWeylElement sigma = sigma_of(g, S);
  std::vector<AffineRoot> out;
  // sigma(gamma + n delta) = w(gamma) + (n - <w gamma, lambda>) delta, so a -1
  // eigenroot needs w(gamma) = -gamma and 2n = -<gamma, lambda>.
  for (const Root& gamma : rs.roots()) {
    const Coeffs wg = sigma.w.apply(gamma.coeffs, rs.rank());
    if (!(Root{wg} == -gamma)) continue;
    const int c = rs.pairing_with_coweight(gamma.coeffs, sigma.lambda);
    if (c % 2 != 0) continue;
    out.push_back({gamma, -c / 2});
  }
  std::sort(out.begin(), out.end(), AffineLess{});
  return out;
}

Report minus_fixed_check(const AffineWeylGroup& g, const OrthogonalSet& S) {
  const RootSystem& rs = g.root_system();
  Report report("minus-fixed");
  for (const AffineRoot& a : minus_fixed_roots(g, S)) {
    const AffineRoot twice{a.finite.scaled(2), 2 * a.level};
    bool any = false, sum = false, diff = false;
    for (const AffineRoot& b : S.roots)
      for (const AffineRoot& b2 : S.roots)
        for (int s1 : {1, -1})
          for (int s2 : {1, -1}) {
            const AffineRoot combo{b.finite.scaled(s1) + b2.finite.scaled(s2), s1 * b.level + s2 * b2.level};
            if (!(combo == twice)) continue;
            any = true;
            if (s1 == 1 && s2 == 1) sum = true;
            if (s1 != s2) diff = true;
          }
    const auto label = [&] { return format_affine_root(rs, a) + " for S = " + format_set(rs, S); };
    report.check(any, [&] { return "not a half sum: " + label(); });
    if (a.level == -1 && a.finite.is_positive())
      report.check(sum, [&] { return "not of the form (b+b')/2: " + label(); });
    if (a.level == 0) report.check(diff, [&] { return "not of the form (b-b')/2: " + label(); });
  }
  return report;
}

const std::vector<int>& SigmaTable::with_sigma(const AffineWeylElement& x) const {
  static const std::vector<int> kEmpty;
  auto it = by_sigma.find(x);
  return it == by_sigma.end() ? kEmpty : it->second;
}

SigmaTable build_sigma_table(const AffineWeylGroup& g, const std::vector<AffineRoot>& pool) {
  SigmaTable t;
  t.sets = orthogonal_subsets(g.root_system(), pool);
  t.sigmas.reserve(t.sets.size());
  for (std::size_t k = 0; k < t.sets.size(); ++k) {
    t.sigmas.push_back(sigma_of(g, t.sets[k]));
    t.lengths.push_back(g.length(t.sigmas.back()));
    t.by_sigma[t.sigmas.back()].push_back(static_cast<int>(k));
  }
  return t;
}

Report injectivity_check(const AffineWeylGroup& g, const MinusculeElement& w, const SigmaTable& full) {
  const RootSystem& rs = g.root_system();
  Report report("injectivity");
  for (const OrthogonalSet& S : orthogonal_subsets(rs, inversion_set(rs, w))) {
    const AffineWeylElement sigma = sigma_of(g, S);
    const auto& same = full.with_sigma(sigma);
    report.check(!same.empty(), [&] { return "missing from table: " + format_set(rs, S); });
    for (int k : same)
      report.check(full.sets[k] == S, [&] {
        return "sigma of " + format_set(rs, full.sets[k]) + " equals sigma of " + format_set(rs, S);
      });
  }
  return report;
}

Report injectivity_check(const AffineWeylGroup& g, const MinusculeElement& w) {
  return injectivity_check(g, w, build_sigma_table(g, full_psi_hat(g.root_system())));
}

std::string orthogonal_set_to_json(const RootSystem& rs, const OrthogonalSet& S) {
  nlohmann::ordered_json j;
  j["roots"] = nlohmann::ordered_json::array();
  for (const AffineRoot& a : S.roots) j["roots"].push_back(format_affine_root(rs, a));
  return j.dump();
}

OrthogonalSet orthogonal_set_from_json(const RootSystem& rs, std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("orthogonal set JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("roots") || !j["roots"].is_array())
    throw std::invalid_argument("orthogonal set JSON: expected {\"roots\": [...]}");
  std::vector<AffineRoot> roots;
  for (const auto& r : j["roots"]) {
    if (!r.is_string()) throw std::invalid_argument("orthogonal set JSON: roots must be strings");
    roots.push_back(parse_affine_root(rs, r.get<std::string>()));
  }
  return make_orthogonal_set(rs, std::move(roots));
}

std::string format_set(const RootSystem& rs, const OrthogonalSet& S) {
  std::string s = "{";
  for (std::size_t i = 0; i < S.roots.size(); ++i) {
    if (i) s += ", ";
    s += format_affine_root(rs, S.roots[i]);
  }
  return s + "}";
}

}  // namespace abideal
