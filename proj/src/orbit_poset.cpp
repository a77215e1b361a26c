#include "abideal/orbit_poset.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include <json.hpp>

namespace abideal {
namespace {

struct SetLess {
  bool operator()(const OrthogonalSet& a, const OrthogonalSet& b) const { return canonical_less(a, b); }
};

using SetIndex = std::map<OrthogonalSet, int, SetLess>;

SetIndex index_sets(const std::vector<OrthogonalSet>& sets) {
  SetIndex idx;
  for (std::size_t k = 0; k < sets.size(); ++k) idx.emplace(sets[k], static_cast<int>(k));
  return idx;
}

std::vector<AffineRoot> difference_pool(const RootSystem& rs, const MinusculeElement& w, const MinusculeElement& v) {
  std::vector<AffineRoot> pool;
  for (int id : w.ideal.roots)
    if (!v.ideal.contains(id)) pool.push_back({rs.roots()[id], -1});
  return pool;
}

OrthogonalSet with_root(const OrthogonalSet& S, const AffineRoot& a) {
  OrthogonalSet out = S;
  out.roots.insert(std::lower_bound(out.roots.begin(), out.roots.end(), a, AffineLess{}), a);
  return out;
}

bool is_subset(const OrthogonalSet& a, const OrthogonalSet& b) {
  return std::includes(b.roots.begin(), b.roots.end(), a.roots.begin(), a.roots.end(), AffineLess{});
}

// Reflexive-transitive closure in place; returns true if anything was added.
bool close_transitively(std::vector<std::vector<bool>>& rel) {
  const std::size_t n = rel.size();
  bool changed = false;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (rel[k][j] && !rel[i][j]) {
          rel[i][j] = true;
          changed = true;
        }
    }
  return changed;
}

std::vector<MinusculeElement> elements_below(const AffineWeylGroup& g, const MinusculeElement& w) {
  std::vector<MinusculeElement> out;
  for (auto& m : enumerate_minuscule(g))
    if (weak_order_leq(m, w)) out.push_back(std::move(m));
  return out;
}

std::string describe_pair(const AffineWeylGroup& g, const MinusculeElement& v, const OrthogonalSet& S) {
  return "(v = " + format_word_tokens(g.reduced_word(v.element)) + ", S = " + format_set(g.root_system(), S) + ")";
}

// Affine root written over alpha_0..alpha_rank.
std::vector<int> affine_simple_coords(const RootSystem& rs, const AffineRoot& a) {
  std::vector<int> c(rs.rank() + 1);
  c[0] = a.level;
  for (int i = 1; i <= rs.rank(); ++i) c[i] = a.finite.coeffs[i - 1] + a.level * rs.marks()[i - 1];
  return c;
}

AffineRoot from_affine_simple_coords(const RootSystem& rs, const std::vector<int>& c) {
  AffineRoot a;
  a.level = c[0];
  for (int i = 1; i <= rs.rank(); ++i) a.finite.coeffs[i - 1] = c[i] - c[0] * rs.marks()[i - 1];
  return a;
}

}  // namespace

std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (int k = 0; k < n && covered; ++k)
        if (k != i && k != j && leq[i][k] && leq[k][j]) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

OrbitPoset build_orbit_poset(const AffineWeylGroup& g, const MinusculeElement& w, const MinusculeElement& v) {
  const RootSystem& rs = g.root_system();
  if (!weak_order_leq(v, w)) throw std::invalid_argument("build_orbit_poset: v is not below w");
  OrbitPoset p;
  p.w = w;
  p.v = v;
  const AffineWeylElement v_inv = g.inverse(v.element);
  for (OrthogonalSet& S : orthogonal_subsets(rs, difference_pool(rs, w, v))) {
    OrbitNode node;
    node.sigma = g.multiply(g.multiply(v.element, sigma_of(g, S)), v_inv);
    node.sigma_word = g.reduced_word(node.sigma);
    node.length = static_cast<int>(node.sigma_word.size());
    node.L = involution_L(g, node.sigma);
    node.dim = v.length() + node.L;
    node.S = std::move(S);
    p.nodes.push_back(std::move(node));
  }
  const std::size_t n = p.nodes.size();
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      p.leq[i][j] = i == j || (p.nodes[i].length < p.nodes[j].length &&
                               g.bruhat_leq(p.nodes[i].sigma, p.nodes[j].sigma));
  p.hasse = transitive_reduction(p.leq);
  return p;
}

bool closure_leq(const AffineWeylGroup& g, const AdmissiblePair& p, const AdmissiblePair& q) {
  if (!(p.v.element == q.v.element)) throw std::invalid_argument("closure_leq: pairs have different v");
  return g.bruhat_leq(pair_sigma(g, p), pair_sigma(g, q));
}

Report verify_poset_properties(const AffineWeylGroup& g, const OrbitPoset& p) {
  Report r("poset");
  const std::size_t n = p.nodes.size();
  const auto& leq = p.leq;
  const bool v_is_identity = p.v.length() == 0;
  const std::string ctx = " in poset " + describe_pair(g, p.v, {}) + " w = " +
                          format_word_tokens(g.reduced_word(p.w.element));

  for (std::size_t i = 0; i < n; ++i) {
    r.check(leq[i][i], [&] { return "not reflexive" + ctx; });
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j]) {
        r.check(!leq[j][i], [&] { return "not antisymmetric" + ctx; });
        r.check(p.nodes[i].L < p.nodes[j].L, [&] { return "grading fails" + ctx; });
      }
      if (is_subset(p.nodes[i].S, p.nodes[j].S))
        r.check(leq[i][j], [&] { return "inclusion not respected" + ctx; });
      for (std::size_t k = 0; k < n; ++k)
        if (leq[i][j] && leq[j][k]) r.check(leq[i][k], [&] { return "not transitive" + ctx; });
    }
  }

  // Extremal nodes: the empty set is the minimum, the node of largest L the maximum.
  int minimum = -1, maximum = -1, max_L = -1, max_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::all_of(leq[i].begin(), leq[i].end(), [](bool b) { return b; })) minimum = static_cast<int>(i);
    bool top = true;
    for (std::size_t j = 0; j < n; ++j) top = top && leq[j][i];
    if (top) maximum = static_cast<int>(i);
    if (p.nodes[i].L > max_L) {
      max_L = p.nodes[i].L;
      max_count = 1;
    } else if (p.nodes[i].L == max_L) {
      ++max_count;
    }
  }
  r.check(minimum == 0 && p.nodes[0].S.empty(), [&] { return "empty set is not the minimum" + ctx; });
  r.check(maximum >= 0 && max_count == 1 && p.nodes[maximum].L == max_L, [&] { return "no dense orbit" + ctx; });
  if (maximum >= 0)
    r.check(p.nodes[maximum].dim == p.w.length(), [&] { return "dense orbit dimension differs from l(w)" + ctx; });

  // Hasse diagram: its closure is the order and no edge is implied by the others.
  std::vector<std::vector<bool>> closure(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) closure[i][i] = true;
  for (const auto& [a, b] : p.hasse) closure[a][b] = true;
  close_transitively(closure);
  r.check(closure == leq, [&] { return "Hasse closure differs from order" + ctx; });
  for (const auto& [a, b] : p.hasse) {
    bool implied = false;
    for (std::size_t k = 0; k < n; ++k)
      if (static_cast<int>(k) != a && static_cast<int>(k) != b && leq[a][k] && leq[k][b]) implied = true;
    r.check(!implied, [&] { return "redundant Hasse edge" + ctx; });
  }

  for (const OrbitNode& node : p.nodes) {
    const std::string who = " at " + describe_pair(g, p.v, node.S);
    r.check(node.dim >= 0 && node.dim <= p.w.length(), [&] { return "dimension out of range" + who; });
    r.check(node.dim == p.v.length() + node.L, [&] { return "dim != l(v) + L" + who; });
    r.check(node.length == g.length(node.sigma), [&] { return "reduced word length mismatch" + who; });
    r.check(reflection_rank(g, node.sigma) == static_cast<int>(node.S.size()),
            [&] { return "rk(id - sigma) != |S|" + who; });
    if (v_is_identity)
      r.check(2 * node.dim == node.length + static_cast<int>(node.S.size()),
              [&] { return "dim != (l(sigma) + |S|) / 2" + who; });
  }
  return r;
}

Report verify_strong_form(const AffineWeylGroup& g) {
  const RootSystem& rs = g.root_system();
  Report r("strong-form");
  const SigmaTable table = build_sigma_table(g, full_psi_hat(rs));
  const SetIndex idx = index_sets(table.sets);
  std::vector<std::optional<std::vector<int>>> below(table.sets.size());

  for (const MinusculeElement& w : enumerate_minuscule(g)) {
    for (const OrthogonalSet& S : orthogonal_subsets(rs, inversion_set(rs, w))) {
      const int k = idx.at(S);
      if (!below[k]) {
        std::vector<int> down;
        for (std::size_t j = 0; j < table.sets.size(); ++j)
          if (table.lengths[j] <= table.lengths[k] && g.bruhat_leq(table.sigmas[j], table.sigmas[k]))
            down.push_back(static_cast<int>(j));
        below[k] = std::move(down);
      }
      for (int j : *below[k]) {
        const OrthogonalSet& R = table.sets[j];
        const bool inside = std::all_of(R.roots.begin(), R.roots.end(),
                                        [&](const AffineRoot& a) { return w.ideal.contains(rs.index_of(a.finite)); });
        r.check(inside, [&] {
          return "sigma_R <= sigma_S with R = " + format_set(rs, R) + " outside Psi(w), S = " + format_set(rs, S) +
                 ", w = " + format_word_tokens(g.reduced_word(w.element));
        });
      }
    }
  }
  return r;
}

Report verify_branch_recursion(const AffineWeylGroup& g, const MinusculeElement& w) {
  const RootSystem& rs = g.root_system();
  Report r("branch-recursion");
  for (const MinusculeElement& v : elements_below(g, w)) {
    for (int i = 0; i <= g.rank(); ++i) {
      const auto up = extend(g, v, i);
      if (!up || !weak_order_leq(*up, w)) continue;
      const AffineRoot beta = -g.act_inverse(v.element, g.simple_root(i));
      for (const OrthogonalSet& S : orthogonal_subsets(rs, difference_pool(rs, w, *up))) {
        const AdmissiblePair below{v, S};
        const AdmissiblePair above{*up, S};
        const AffineWeylElement sig_v = pair_sigma(g, below);
        const AffineWeylElement sig_up = pair_sigma(g, above);
        const int L_v = involution_L(g, sig_v);
        const int L_up = involution_L(g, sig_up);
        const std::string who = " at " + describe_pair(g, v, S) + " index " + std::to_string(i);
        r.check(is_admissible(rs, below, w) && is_admissible(rs, above, w), [&] { return "not admissible" + who; });
        if (!orthogonal_to(rs, beta, S)) {
          r.check(L_up == L_v - 1, [&] { return "case i: L(s_a v, S) != L(v, S) - 1" + who; });
          r.check(sig_up == circ(g, i, sig_v), [&] { return "case i: sigma(s_a v, S) != s_a o sigma(v, S)" + who; });
          r.check(g.length(sig_up) < g.length(sig_v) && g.bruhat_leq(sig_up, sig_v),
                  [&] { return "case i: sigma does not drop" + who; });
          r.check(up->length() + L_up == v.length() + L_v, [&] { return "case i: dimensions differ" + who; });
        } else {
          const AdmissiblePair bigger{v, with_root(S, beta)};
          const AffineWeylElement sig_big = pair_sigma(g, bigger);
          const int L_big = involution_L(g, sig_big);
          r.check(is_admissible(rs, bigger, w), [&] { return "case ii: S with beta not admissible" + who; });
          r.check(sig_up == sig_v, [&] { return "case ii: sigma(s_a v, S) != sigma(v, S)" + who; });
          r.check(sig_v == circ(g, i, sig_big), [&] { return "case ii: sigma(v, S) != s_a o sigma(v, S + beta)" + who; });
          r.check(L_up == L_v && L_v == L_big - 1, [&] { return "case ii: L identities fail" + who; });
          r.check(up->length() + L_up == v.length() + L_big && v.length() + L_big == v.length() + L_v + 1,
                  [&] { return "case ii: dimensions differ" + who; });
        }
      }
    }
  }
  return r;
}

Report verify_moves_vs_order(const AffineWeylGroup& g, const MinusculeElement& w) {
  const RootSystem& rs = g.root_system();
  Report r("moves-vs-order");

  struct Level {
    MinusculeElement v;
    std::vector<OrthogonalSet> nodes;
    SetIndex index;
    std::vector<AffineWeylElement> sigmas;
    std::vector<std::vector<bool>> rel;
  };

  std::vector<MinusculeElement> below = elements_below(g, w);
  std::sort(below.begin(), below.end(),
            [](const MinusculeElement& a, const MinusculeElement& b) { return a.length() > b.length(); });
  std::vector<Level> levels;
  std::map<std::vector<int>, std::size_t> level_of;  // ideal roots -> position in levels

  for (const MinusculeElement& v : below) {
    Level lv;
    lv.v = v;
    lv.nodes = orthogonal_subsets(rs, difference_pool(rs, w, v));
    lv.index = index_sets(lv.nodes);
    const std::size_t n = lv.nodes.size();
    lv.rel.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) lv.rel[i][i] = true;
    for (const OrthogonalSet& S : lv.nodes) lv.sigmas.push_back(pair_sigma(g, {v, S}));
    auto add = [&](const OrthogonalSet& a, const OrthogonalSet& b) {
      lv.rel[lv.index.at(a)][lv.index.at(b)] = true;
    };

    // Coverings v < s_a v <= w: degeneration and transport of relations.
    for (int i = 0; i <= g.rank(); ++i) {
      const auto up = extend(g, v, i);
      if (!up || !weak_order_leq(*up, w)) continue;
      const Level& upper = levels[level_of.at(up->ideal.roots)];
      const AffineRoot beta = -g.act_inverse(v.element, g.simple_root(i));
      auto top = [&](const OrthogonalSet& S) { return orthogonal_to(rs, beta, S) ? with_root(S, beta) : S; };
      for (const OrthogonalSet& S : upper.nodes)
        if (orthogonal_to(rs, beta, S)) add(S, with_root(S, beta));
      for (std::size_t a = 0; a < upper.nodes.size(); ++a)
        for (std::size_t b = 0; b < upper.nodes.size(); ++b) {
          if (!upper.rel[a][b]) continue;
          const OrthogonalSet& R = upper.nodes[a];
          const OrthogonalSet t = top(upper.nodes[b]);
          add(R, t);
          if (orthogonal_to(rs, beta, R)) add(with_root(R, beta), t);
        }
    }

    // Finite descents: F_alpha(v, S) lies below S.
    std::vector<std::vector<int>> image(g.rank() + 1, std::vector<int>(n, -1));
    for (std::size_t k = 0; k < n; ++k) {
      const AdmissiblePair pair{v, lv.nodes[k]};
      for (const PairDescent& d : pair_descents(g, pair)) {
        if (d.locus != DescentLocus::finite) continue;
        const AdmissiblePair moved = f_alpha(g, pair, d.index);
        const auto it = lv.index.find(moved.S);
        if (!r.check(it != lv.index.end(), [&] { return "F_alpha leaves the node set at " + describe_pair(g, v, pair.S); }))
          continue;
        image[d.index][k] = it->second;
        lv.rel[it->second][k] = true;
      }
    }

    // Lift relations through common finite descents until nothing changes.
    bool changed = true;
    while (changed) {
      changed = close_transitively(lv.rel);
      for (int i = 0; i <= g.rank(); ++i)
        for (std::size_t a = 0; a < n; ++a) {
          if (image[i][a] < 0) continue;
          for (std::size_t b = 0; b < n; ++b)
            if (image[i][b] >= 0 && !lv.rel[a][b] && lv.rel[image[i][a]][image[i][b]]) {
              lv.rel[a][b] = true;
              changed = true;
            }
        }
    }

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const bool bruhat = g.bruhat_leq(lv.sigmas[a], lv.sigmas[b]);
        r.check(bruhat == lv.rel[a][b], [&] {
          return std::string(bruhat ? "missing" : "extra") + " relation " + format_set(rs, lv.nodes[a]) + " <= " +
                 format_set(rs, lv.nodes[b]) + " at v = " + format_word_tokens(g.reduced_word(v.element));
        });
      }

    level_of[v.ideal.roots] = levels.size();
    levels.push_back(std::move(lv));
  }
  return r;
}

std::vector<int> mark_one_indices(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i)
    if (rs.marks()[i - 1] == 1) out.push_back(i);
  return out;
}

AffineWeylElement parabolic_longest(const AffineWeylGroup& g, int p) {
  AffineWeylElement x = g.identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int j = 1; j <= g.rank(); ++j) {
      if (j == p || g.is_right_descent(x, j)) continue;
      x = g.multiply(x, g.simple_reflection(j));
      grew = true;
    }
  }
  return x;
}

std::vector<int> phi_involution(const AffineWeylGroup& g, int p) {
  const RootSystem& rs = g.root_system();
  if (p < 1 || p > rs.rank()) throw std::invalid_argument("phi: simple index out of range");
  if (rs.marks()[p - 1] != 1) throw std::invalid_argument("phi: the simple root must have mark 1 in the highest root");
  const AffineWeylElement wp = parabolic_longest(g, p);
  std::vector<int> phi(rs.rank() + 1, -1);
  phi[0] = p;
  phi[p] = 0;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j == p) continue;
    const int k = g.simple_index(-g.act(wp, g.simple_root(j)));
    if (k <= 0 || k == p) throw std::logic_error("phi: -w_P(alpha_j) is not a simple root of the Levi");
    phi[j] = k;
  }
  return phi;
}

AffineWeylElement apply_phi(const AffineWeylGroup& g, const std::vector<int>& phi, const AffineWeylElement& x) {
  ReducedWord word = g.reduced_word(x);
  for (int& i : word) i = phi[i];
  return g.evaluate(word);
}

Report verify_phi_equivalence(const AffineWeylGroup& g, int p) {
  const RootSystem& rs = g.root_system();
  const int n = rs.rank();
  Report r("phi");
  const std::vector<int> phi = phi_involution(g, p);
  const std::string where = " for alpha_P = alpha_" + std::to_string(p);

  for (int i = 0; i <= n; ++i) {
    r.check(phi[phi[i]] == i, [&] { return "phi is not an involution" + where; });
    for (int j = 0; j <= n; ++j) {
      const auto pair_ij = rs.pairing_unchecked(g.simple_root(j).finite.coeffs, g.simple_root(i).finite.coeffs);
      const auto pair_phi =
          rs.pairing_unchecked(g.simple_root(phi[j]).finite.coeffs, g.simple_root(phi[i]).finite.coeffs);
      r.check(pair_ij == pair_phi, [&] { return "phi does not preserve the extended Cartan matrix" + where; });
    }
  }

  const AffineWeylElement wp = parabolic_longest(g, p);
  r.check(g.act(wp, g.simple_root(p)) == AffineRoot{rs.highest_root(), 0}, [&] { return "w_P(alpha_P) != theta" + where; });

  // phi as a linear map of the affine root lattice, on alpha_0..alpha_n coordinates.
  auto phi_root = [&](const AffineRoot& a) {
    const std::vector<int> c = affine_simple_coords(rs, a);
    std::vector<int> d(n + 1, 0);
    for (int i = 0; i <= n; ++i) d[phi[i]] = c[i];
    return from_affine_simple_coords(rs, d);
  };

  std::vector<AffineRoot> nilradical;
  for (const Root& b : rs.positive_roots())
    if (b.coeffs[p - 1] >= 1) {
      r.check(b.coeffs[p - 1] == 1, [&] { return "alpha_P occurs twice in " + format_root(rs, b) + where; });
      nilradical.push_back({b, 0});
    }

  std::vector<AffineWeylElement> finite_sigmas, affine_sigmas;
  const auto subsets = orthogonal_subsets(rs, nilradical);
  for (const OrthogonalSet& S : subsets) {
    std::vector<AffineRoot> moved, shifted;
    for (const AffineRoot& b : S.roots) {
      const AffineRoot wb = g.act(wp, b);
      moved.push_back(wb);
      shifted.push_back({b.finite, -1});
      r.check(phi_root(wb) == AffineRoot{-b.finite, 1},
              [&] { return "phi(w_P(beta)) != delta - beta for beta = " + format_root(rs, b.finite) + where; });
    }
    const AffineWeylElement tau = sigma_of_ordered(g, moved);
    const AffineWeylElement hat = sigma_of_ordered(g, shifted);
    const AffineWeylElement image = apply_phi(g, phi, tau);
    r.check(g.length(image) == g.length(tau), [&] { return "phi does not preserve length" + where; });
    r.check(image == hat, [&] { return "phi(sigma_{w_P(S)}) != sigma_{S - delta} for S = " + format_set(rs, S) + where; });
    finite_sigmas.push_back(tau);
    affine_sigmas.push_back(hat);
  }
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = 0; b < subsets.size(); ++b)
      r.check(g.bruhat_leq(finite_sigmas[a], finite_sigmas[b]) == g.bruhat_leq(affine_sigmas[a], affine_sigmas[b]),
              [&] { return "finite and affine orders differ" + where; });
  return r;
}

PosetDocument to_document(const RootSystem& rs, const OrbitPoset& p) {
  PosetDocument doc;
  doc.type = std::string(1, type_letter(rs.type()));
  doc.rank = rs.rank();
  doc.ideal_id = p.ideal_id;
  AffineWeylGroup g(rs);
  doc.v_word = format_word(g.reduced_word(p.v.element));
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const OrbitNode& node = p.nodes[i];
    PosetDocument::Node out;
    out.id = static_cast<int>(i);
    for (const AffineRoot& a : node.S.roots) out.S.push_back(format_affine_root(rs, a));
    out.sigma_word = format_word(node.sigma_word);
    out.length = node.length;
    out.L = node.L;
    out.dim = node.dim;
    doc.nodes.push_back(std::move(out));
  }
  doc.hasse = p.hasse;
  return doc;
}

std::string serialize(const PosetDocument& doc) {
  nlohmann::ordered_json j;
  j["context"] = {{"type", doc.type}, {"rank", doc.rank}, {"ideal_id", doc.ideal_id}, {"v_word", doc.v_word}};
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& node : doc.nodes) {
    nlohmann::ordered_json jn;
    jn["id"] = node.id;
    jn["S"] = node.S;
    jn["sigma_word"] = node.sigma_word;
    jn["length"] = node.length;
    jn["L"] = node.L;
    jn["dim"] = node.dim;
    j["nodes"].push_back(std::move(jn));
  }
  j["hasse"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : doc.hasse) j["hasse"].push_back({a, b});
  return j.dump(2) + "\n";
}

PosetDocument parse_poset_json(std::string_view text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    PosetDocument doc;
    const auto& ctx = j.at("context");
    doc.type = ctx.at("type").get<std::string>();
    doc.rank = ctx.at("rank").get<int>();
    doc.ideal_id = ctx.at("ideal_id").get<int>();
    doc.v_word = ctx.at("v_word").get<std::string>();
    for (const auto& jn : j.at("nodes")) {
      PosetDocument::Node node;
      node.id = jn.at("id").get<int>();
      node.S = jn.at("S").get<std::vector<std::string>>();
      node.sigma_word = jn.at("sigma_word").get<std::string>();
      node.length = jn.at("length").get<int>();
      node.L = jn.at("L").get<int>();
      node.dim = jn.at("dim").get<int>();
      doc.nodes.push_back(std::move(node));
    }
    for (const auto& e : j.at("hasse")) {
      const auto pair = e.get<std::vector<int>>();
      if (pair.size() != 2) throw std::invalid_argument("poset JSON: Hasse edges must have two ends");
      doc.hasse.emplace_back(pair[0], pair[1]);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("poset JSON: ") + e.what());
  }
}

std::string export_poset(const RootSystem& rs, const OrbitPoset& p, ExportFormat format) {
  if (format == ExportFormat::json) return serialize(to_document(rs, p));
  std::string out = "digraph {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + format_set(rs, p.nodes[i].S) + " / " +
           std::to_string(p.nodes[i].dim) + "\"];\n";
  for (const auto& [a, b] : p.hasse) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace abideal
