#include "abideal/suites.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "abideal/involutions.hpp"
#include "abideal/minuscule.hpp"
#include "abideal/orbit_poset.hpp"

namespace abideal {
namespace {

std::string word_of(const AffineWeylGroup& g, const AffineWeylElement& x) {
  return format_word_tokens(g.reduced_word(x));
}

bool has_finite_right_descent(const AffineWeylGroup& g, const AffineWeylElement& x) {
  for (int i = 1; i <= g.rank(); ++i)
    if (g.is_right_descent(x, i)) return true;
  return false;
}

// Elements below w in Bruhat order, as products of subwords of a reduced word.
std::vector<AffineWeylElement> bruhat_interval(const AffineWeylGroup& g, const AffineWeylElement& w) {
  std::vector<AffineWeylElement> level{g.identity()};
  for (int i : g.reduced_word(w)) {
    std::vector<AffineWeylElement> next = level;
    for (const auto& x : level) next.push_back(g.multiply(x, g.simple_reflection(i)));
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen(next.begin(), next.end());
    level.assign(seen.begin(), seen.end());
  }
  return level;
}

// Two orthogonal sets outside every Psi(w) with the same involution; they
// show that admissibility is needed for injectivity and the half-sum check.
void check_d4_twin_sets(const AffineWeylGroup& g, const std::vector<MinusculeElement>& all, Report& r) {
  const RootSystem& rs = g.root_system();
  auto parse = [&](const char* t) { return parse_affine_root(rs, t); };
  const OrthogonalSet S = make_orthogonal_set(rs, {parse("e1+e3-d"), parse("e1-e3-d"), parse("e2+e4-d"), parse("e2-e4-d")});
  const OrthogonalSet S2 = make_orthogonal_set(rs, {parse("e1+e4-d"), parse("e1-e4-d"), parse("e2+e3-d"), parse("e2-e3-d")});
  const AffineRoot alpha = parse("e1+e2-2d");
  const AffineWeylElement sigma = sigma_of(g, S);
  r.check(sigma == sigma_of(g, S2), "D4 twin sets: involutions differ");
  r.check(!(S == S2), "D4 twin sets coincide");
  r.check(g.act(sigma, alpha) == -alpha, "D4 twin sets: sigma_S(e1+e2-2d) != -(e1+e2-2d)");
  r.check(!minus_fixed_check(g, S).passed(), "D4 twin sets: half-sum check passes on a non-admissible set");
  for (const MinusculeElement& w : all) {
    const auto psi = inversion_set(rs, w);
    const bool holds = std::all_of(S.roots.begin(), S.roots.end(), [&](const AffineRoot& a) {
      return std::find(psi.begin(), psi.end(), a) != psi.end();
    });
    r.check(!holds, [&] { return "D4 twin set lies in Psi(w) for w = " + word_of(g, w.element); });
  }
}

}  // namespace

std::vector<AffineWeylElement> elements_up_to_length(const AffineWeylGroup& g, int max_length) {
  std::vector<AffineWeylElement> out{g.identity()};
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{g.identity()};
  std::size_t begin = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k)
      for (int i = 0; i <= g.rank(); ++i) {
        if (g.is_left_descent(out[k], i)) continue;
        AffineWeylElement y = g.left_multiply_simple(i, out[k]);
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    begin = end;
  }
  return out;
}

Report minuscule_suite(const AffineWeylGroup& g) {
  const RootSystem& rs = g.root_system();
  Report r("minuscule");
  const auto ideals = enumerate_abelian_ideals(rs);
  const auto all = enumerate_minuscule(g);
  r.check(ideals.size() == all.size(), "ideal and minuscule counts differ");
  if (ideals.size() != all.size()) return r;

  for (std::size_t k = 0; k < ideals.size(); ++k) {
    const MinusculeElement& m = all[k];
    const std::string who = " for ideal " + std::to_string(k);
    r.check(is_abelian_ideal(rs, ideals[k].roots), [&] { return "not an abelian ideal" + who; });
    r.check(m.ideal == ideals[k], [&] { return "enumeration orders disagree" + who; });
    try {
      const MinusculeElement built = ideal_to_element(g, ideals[k]);
      r.check(built.element == m.element, [&] { return "ideal_to_element mismatch" + who; });
    } catch (const std::exception& e) {
      r.check(false, [&] { return std::string(e.what()) + who; });
    }
    r.check(element_to_ideal(g, m.element) == ideals[k], [&] { return "element_to_ideal mismatch" + who; });
    r.check(g.length(m.element) == m.length(), [&] { return "length differs from ideal size" + who; });
    r.check(g.negative_inversions(m.element) == inversion_set(rs, m), [&] { return "inversion set mismatch" + who; });
    r.check(is_minuscule(g, m.element) && g.alcove_image_check(m.element),
            [&] { return "minuscule criteria reject an enumerated element" + who; });
    r.check(normalizer_simple_roots(g, m) == normalizer_by_ideal_stability(rs, m.ideal),
            [&] { return "normalizer criteria differ" + who; });
  }

  // Inversion and alcove criteria agree on a ball and on one-step extensions.
  for (const auto& x : elements_up_to_length(g, g.rank() <= 4 ? 6 : 3))
    r.check(is_minuscule(g, x) == g.alcove_image_check(x), [&] { return "criteria disagree on " + word_of(g, x); });
  for (const MinusculeElement& m : all)
    for (int i = 0; i <= g.rank(); ++i) {
      const AffineWeylElement x = g.left_multiply_simple(i, m.element);
      r.check(is_minuscule(g, x) == g.alcove_image_check(x), [&] { return "criteria disagree on " + word_of(g, x); });
    }

  // Weak order and Bruhat order agree.
  for (const MinusculeElement& a : all)
    for (const MinusculeElement& b : all)
      r.check(weak_order_leq(a, b) == g.bruhat_leq(a.element, b.element), [&] {
        return "weak and Bruhat order differ on " + word_of(g, a.element) + ", " + word_of(g, b.element);
      });

  for (const MinusculeElement& m : all) {
    const std::string who = " for w = " + word_of(g, m.element);
    // Minimal inversions are lifts of simple roots.
    for (int id : m.ideal.roots) {
      bool minimal = true;
      for (int other : m.ideal.roots)
        if (other != id && rs.dominance_leq(rs.roots()[other], rs.roots()[id])) minimal = false;
      if (!minimal) continue;
      const AffineRoot image = g.act(m.element, AffineRoot{rs.roots()[id], -1});
      const int i = g.simple_index(image);
      r.check(i >= 0, [&] { return "minimal inversion not sent to a simple root" + who; });
      if (i >= 0)
        r.check(g.length(g.left_multiply_simple(i, m.element)) == m.length() - 1,
                [&] { return "minimal inversion does not shorten" + who; });
    }
    // Left descents strip one inversion and stay minuscule.
    for (int i : g.left_descents(m.element)) {
      const AffineWeylElement down = g.left_multiply_simple(i, m.element);
      const AffineRoot beta = g.act_inverse(m.element, g.simple_root(i));
      r.check(is_minuscule(g, down), [&] { return "left descent leaves the minuscule set" + who; });
      auto smaller = g.negative_inversions(down);
      smaller.push_back(beta);
      std::sort(smaller.begin(), smaller.end(), AffineLess{});
      r.check(smaller == g.negative_inversions(m.element), [&] { return "descent does not remove one inversion" + who; });
    }
    // Orthogonal inversions are strongly orthogonal.
    const auto psi = inversion_set(rs, m);
    for (std::size_t a = 0; a < psi.size(); ++a)
      for (std::size_t b = a + 1; b < psi.size(); ++b) {
        if (!are_orthogonal(rs, psi[a], psi[b])) continue;
        r.check(!rs.is_root(psi[a].finite + psi[b].finite) && !rs.is_root(psi[a].finite - psi[b].finite),
                [&] { return "orthogonal but not strongly orthogonal" + who; });
      }
    // Bruhat-below minimal coset representatives are minuscule.
    if (g.rank() <= 4 && m.length() <= 12)
      for (const auto& u : bruhat_interval(g, m.element))
        if (!has_finite_right_descent(g, u))
          r.check(is_minuscule(g, u), [&] { return "non-minuscule representative " + word_of(g, u) + " below" + who; });
  }
  return r;
}

Report involutions_suite(const AffineWeylGroup& g) {
  const RootSystem& rs = g.root_system();
  Report r("involutions");
  const auto all = enumerate_minuscule(g);
  const SigmaTable full = build_sigma_table(g, full_psi_hat(rs));
  std::set<std::vector<int>> pair_involution_words;  // distinct sigma(v, S), for monotonicity below

  for (const MinusculeElement& w : all) {
    const std::string at_w = " for w = " + word_of(g, w.element);
    const auto psi = inversion_set(rs, w);
    const auto subsets = orthogonal_subsets(rs, psi);
    r.merge(injectivity_check(g, w, full));

    for (const OrthogonalSet& S : subsets) {
      const std::string who = " at S = " + format_set(rs, S) + at_w;
      const AffineWeylElement sigma = sigma_of(g, S);
      r.check(is_involution(g, sigma), [&] { return "sigma_S is not an involution" + who; });
      std::vector<AffineRoot> order = S.roots;
      for (std::size_t k = 0; k < order.size(); ++k) {
        std::rotate(order.begin(), order.begin() + 1, order.end());
        r.check(sigma_of_ordered(g, order) == sigma, [&] { return "sigma_S depends on the order" + who; });
      }
      std::reverse(order.begin(), order.end());
      r.check(sigma_of_ordered(g, order) == sigma, [&] { return "sigma_S depends on the order" + who; });
      const int len = g.length(sigma);
      r.check(reflection_rank(g, sigma) == static_cast<int>(S.size()), [&] { return "rk(id - sigma_S) != |S|" + who; });
      r.check((len + static_cast<int>(S.size())) % 2 == 0 && involution_L(g, sigma) * 2 == len + static_cast<int>(S.size()),
              [&] { return "L(sigma_S) != (l + |S|) / 2" + who; });

      Report half = minus_fixed_check(g, S);
      half.name.clear();
      r.merge(half);

      // At most one root of S can be raised by a given positive root.
      for (const Root& gamma : rs.positive_roots()) {
        int raised = 0;
        for (const AffineRoot& a : S.roots) raised += rs.is_root(a.finite + gamma) ? 1 : 0;
        r.check(raised <= 1, [&] { return "two roots of S raised by " + format_root(rs, gamma) + who; });
      }

      // Finite descents of sigma_S move S inside Psi(w); real exactly when S is fixed.
      for (int i = 1; i <= g.rank(); ++i) {
        const DescentKind kind = descent_kind(g, sigma, i);
        if (kind == DescentKind::none) continue;
        const Root beta = rs.simple_root(i);
        std::vector<AffineRoot> moved;
        for (const AffineRoot& a : S.roots) moved.push_back({rs.reflect(beta, a.finite), a.level});
        const bool inside = std::all_of(moved.begin(), moved.end(), [&](const AffineRoot& a) {
          return a.level == -1 && a.finite.is_positive() && w.ideal.contains(rs.index_of(a.finite));
        });
        r.check(inside, [&] { return "s_beta(S) leaves Psi(w) for beta = alpha_" + std::to_string(i) + who; });
        std::sort(moved.begin(), moved.end(), AffineLess{});
        r.check((moved == S.roots) == (kind == DescentKind::real),
                [&] { return "s_beta(S) = S does not match a real descent" + who; });
      }
    }

    // Admissible pairs (v, S) with v <= w.
    for (const MinusculeElement& v : all) {
      if (!weak_order_leq(v, w)) continue;
      const std::string v_word = word_of(g, v.element);
      std::vector<AffineRoot> pool;
      for (const AffineRoot& a : psi)
        if (!v.ideal.contains(rs.index_of(a.finite))) pool.push_back(a);
      for (const OrthogonalSet& S : orthogonal_subsets(rs, pool)) {
        const AdmissiblePair p{v, S};
        auto who = [&] { return " at (v = " + v_word + ", S = " + format_set(rs, S) + ")" + at_w; };
        r.check(is_admissible(rs, p, w), [&] { return "pair not admissible" + who(); });
        const AffineWeylElement sigma = pair_sigma(g, p);
        const AffineWeylElement sigma_S = sigma_of(g, S);
        const int L = involution_L(g, sigma);
        const int len = g.length(sigma);
        if (g.rank() <= 3) pair_involution_words.insert(g.reduced_word(sigma));

        for (int i = 0; i <= g.rank(); ++i) {
          const AffineWeylElement s = g.simple_reflection(i);
          const DescentKind kind = descent_kind(g, sigma, i);
          const bool descent = kind != DescentKind::none;
          const AffineWeylElement c = circ(g, i, sigma);
          auto at = [&] { return who() + " index " + std::to_string(i); };
          // Descent equivalences for involutions.
          r.check(descent == (g.length(g.multiply(s, sigma)) < len), [&] { return "descent vs l(s sigma)" + at(); });
          r.check(descent == (g.length(g.multiply(sigma, s)) < len), [&] { return "descent vs l(sigma s)" + at(); });
          r.check(descent == (g.length(c) < len && g.bruhat_leq(c, sigma)), [&] { return "descent vs circ" + at(); });
          r.check(descent == (involution_L(g, c) == L - 1), [&] { return "descent vs L drop" + at(); });
          r.check(circ(g, i, c) == sigma, [&] { return "circ is not self-inverse" + at(); });
          if (descent)
            r.check((kind == DescentKind::real) == (g.multiply(s, sigma) == g.multiply(sigma, s)),
                    [&] { return "real descent vs commuting" + at(); });

          const AffineRoot beta = g.act_inverse(v.element, g.simple_root(i));
          const bool affine_root_type = beta.level == 1 && beta.finite.is_negative() &&
                                        w.ideal.contains(rs.index_of(-beta.finite));
          if (affine_root_type) {
            // Affine descents are detected by orthogonality; real exactly on -S.
            const AffineRoot neg = -beta;
            r.check(descent == !orthogonal_to(rs, beta, S), [&] { return "affine descent vs orthogonality" + at(); });
            if (descent)
              r.check((kind == DescentKind::real) == S.contains(neg), [&] { return "affine real descent vs -S" + at(); });
          }
          if (!descent) continue;

          r.check(beta.is_positive(), [&] { return "v^{-1}(alpha) is negative" + at(); });
          DescentLocus locus;
          try {
            locus = descent_locus(g, v.element, i);
          } catch (const std::exception& e) {
            r.check(false, [&] { return std::string(e.what()) + at(); });
            continue;
          }
          if (locus == DescentLocus::affine) {
            r.check(affine_root_type, [&] { return "affine descent outside -Psi(w)" + at(); });
          } else {
            const int j = g.simple_index(beta);
            r.check(descent_kind(g, sigma_S, j) == kind, [&] { return "finite descent kind differs for sigma_S" + at(); });
          }

          // The move F_alpha.
          AdmissiblePair moved;
          try {
            moved = f_alpha(g, p, i);
          } catch (const std::exception& e) {
            r.check(false, [&] { return std::string(e.what()) + at(); });
            continue;
          }
          r.check(is_admissible(rs, moved, w), [&] { return "F_alpha is not admissible" + at(); });
          r.check(pair_sigma(g, moved) == c, [&] { return "sigma(F_alpha) != s_alpha o sigma" + at(); });
          r.check(pair_L(g, moved) == L - 1, [&] { return "L(F_alpha) != L - 1" + at(); });
          if (locus == DescentLocus::finite && kind == DescentKind::real) {
            const auto pairs = half_difference_pairs(S, beta);
            r.check(!pairs.empty(), [&] { return "no decomposition beta = (g1 - g2)/2" + at(); });
            for (const auto& [g1, g2] : pairs) {
              std::vector<AffineRoot> roots;
              for (const AffineRoot& a : S.roots)
                if (!(a == g1) && !(a == g2)) roots.push_back(a);
              roots.push_back(beta + g2);
              std::sort(roots.begin(), roots.end(), AffineLess{});
              r.check(roots == moved.S.roots, [&] { return "S_beta depends on the decomposition" + at(); });
            }
            r.check(c == g.multiply(g.simple_reflection(i), sigma), [&] { return "real finite: circ != s_alpha sigma" + at(); });
          }
        }
      }
    }
  }

  // Monotonicity of circ under Bruhat order, on involutions from admissible pairs.
  if (g.rank() <= 3) {
    std::vector<AffineWeylElement> invs;
    for (const auto& word : pair_involution_words) invs.push_back(g.evaluate(word));
    for (const auto& sigma : invs)
      for (const auto& tau : invs) {
        if (sigma == tau || !g.bruhat_leq(sigma, tau)) continue;
        for (int i = 0; i <= g.rank(); ++i) {
          const AffineWeylElement cs = circ(g, i, sigma), ct = circ(g, i, tau);
          const bool up_s = g.length(cs) > g.length(sigma), up_t = g.length(ct) > g.length(tau);
          auto at = [&] { return " for " + word_of(g, sigma) + " < " + word_of(g, tau) + " index " + std::to_string(i); };
          if (up_s == up_t)
            r.check(!(cs == ct) && g.bruhat_leq(cs, ct), [&] { return "circ not monotone" + at(); });
          else if (up_s)
            r.check(g.bruhat_leq(cs, tau) && g.bruhat_leq(sigma, ct), [&] { return "circ mixed case fails" + at(); });
        }
      }
  }

  // No abelian ideal of G2 holds two orthogonal roots.
  if (rs.type() == CartanType::G)
    for (const MinusculeElement& w : all)
      for (const OrthogonalSet& S : orthogonal_subsets(rs, inversion_set(rs, w)))
        r.check(S.size() <= 1, [&] { return "G2 ideal with two orthogonal roots"; });

  if (rs.type() == CartanType::D && rs.rank() == 4) check_d4_twin_sets(g, all, r);
  return r;
}

Report poset_suite(const AffineWeylGroup& g) {
  Report r("poset");
  const auto all = enumerate_minuscule(g);
  for (const MinusculeElement& w : all) {
    std::vector<const MinusculeElement*> below;
    std::vector<std::size_t> counts;
    for (const MinusculeElement& v : all) {
      if (!weak_order_leq(v, w)) continue;
      const OrbitPoset p = build_orbit_poset(g, w, v);
      Report props = verify_poset_properties(g, p);
      props.name.clear();
      r.merge(props);
      below.push_back(&v);
      counts.push_back(p.nodes.size());
    }
    for (std::size_t a = 0; a < below.size(); ++a)
      for (std::size_t b = 0; b < below.size(); ++b)
        if (weak_order_leq(*below[a], *below[b]))
          r.check(counts[a] >= counts[b], [&] { return "node count grows with v for w = " + word_of(g, w.element); });
    r.merge(verify_branch_recursion(g, w));
    r.merge(verify_moves_vs_order(g, w));
  }
  return r;
}

Report strong_form_suite(const AffineWeylGroup& g) { return verify_strong_form(g); }

Report phi_suite(const AffineWeylGroup& g) {
  const RootSystem& rs = g.root_system();
  Report r("phi");
  for (int p = 1; p <= rs.rank(); ++p) {
    if (rs.marks()[p - 1] == 1) {
      Report sub = verify_phi_equivalence(g, p);
      sub.name.clear();
      r.merge(sub);
      continue;
    }
    bool rejected = false;
    try {
      phi_involution(g, p);
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    r.check(rejected, [&] { return "phi accepted alpha_" + std::to_string(p) + " with mark >= 2"; });
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"minuscule", "involutions", "poset", "strong-form", "phi"};
  return names;
}

Report run_suite(const AffineWeylGroup& g, std::string_view name) {
  if (name == "minuscule") return minuscule_suite(g);
  if (name == "involutions") return involutions_suite(g);
  if (name == "poset") return poset_suite(g);
  if (name == "strong-form") return strong_form_suite(g);
  if (name == "phi") return phi_suite(g);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace abideal
