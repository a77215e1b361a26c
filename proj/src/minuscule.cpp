#include "abideal/minuscule.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace abideal {

bool AbelianIdeal::contains(int root_index) const {
  return std::binary_search(roots.begin(), roots.end(), root_index);
}

bool canonical_less(const AbelianIdeal& a, const AbelianIdeal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.roots < b.roots;
}

bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& ids) {
  const auto& roots = rs.roots();
  std::vector<bool> member(roots.size(), false);
  for (int id : ids) {
    if (id < 0 || id >= static_cast<int>(roots.size()) || !roots[id].is_positive()) return false;
    member[id] = true;
  }
  for (int id : ids) {
    for (int i = 1; i <= rs.rank(); ++i) {
      const int up = rs.index_of(roots[id] + rs.simple_root(i));
      if (up >= 0 && !member[up]) return false;
    }
    for (int other : ids)
      if (rs.index_of(roots[id] + roots[other]) >= 0) return false;
  }
  return true;
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const MinusculeElement& m) {
  std::vector<AffineRoot> out;
  out.reserve(m.ideal.size());
  for (int id : m.ideal.roots) out.push_back({rs.roots()[id], -1});
  return out;
}

std::vector<AffineRoot> full_psi_hat(const RootSystem& rs) {
  std::vector<AffineRoot> out;
  for (const Root& r : rs.positive_roots()) out.push_back({r, -1});
  return out;
}

std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs) {
  const auto& roots = rs.roots();
  std::vector<int> order;  // positive roots, highest first
  for (int id = static_cast<int>(roots.size()) - 1; id >= 0 && roots[id].is_positive(); --id) order.push_back(id);

  std::vector<AbelianIdeal> out;
  std::vector<bool> member(roots.size(), false);
  std::vector<int> chosen;

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == order.size()) {
      AbelianIdeal ideal{chosen};
      std::sort(ideal.roots.begin(), ideal.roots.end());
      out.push_back(std::move(ideal));
      return;
    }
    dfs(k + 1);
    const int id = order[k];
    const Root& beta = roots[id];
    for (int i = 1; i <= rs.rank(); ++i) {
      const int up = rs.index_of(beta + rs.simple_root(i));
      if (up >= 0 && !member[up]) return;
    }
    if (rs.is_root(beta.scaled(2))) return;
    for (int other : chosen)
      if (rs.index_of(beta + roots[other]) >= 0) return;
    member[id] = true;
    chosen.push_back(id);
    dfs(k + 1);
    chosen.pop_back();
    member[id] = false;
  };
  dfs(0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<MinusculeElement> extend(const AffineWeylGroup& g, const MinusculeElement& m, int i) {
  const RootSystem& rs = g.root_system();
  const AffineRoot pre = g.act_inverse(m.element, g.simple_root(i));
  if (!pre.is_positive()) return std::nullopt;
  const AffineRoot added = -pre;
  if (added.level != -1 || !added.finite.is_positive()) return std::nullopt;
  MinusculeElement next{g.left_multiply_simple(i, m.element), m.ideal};
  const int id = rs.index_of(added.finite);
  next.ideal.roots.insert(std::lower_bound(next.ideal.roots.begin(), next.ideal.roots.end(), id), id);
  return next;
}

std::vector<MinusculeElement> enumerate_minuscule(const AffineWeylGroup& g) {
  std::vector<MinusculeElement> out;
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen;
  std::deque<MinusculeElement> queue;
  MinusculeElement start{g.identity(), {}};
  seen.insert(start.element);
  queue.push_back(start);
  while (!queue.empty()) {
    MinusculeElement cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i <= g.rank(); ++i) {
      auto next = extend(g, cur, i);
      if (next && seen.insert(next->element).second) queue.push_back(*next);
    }
    out.push_back(std::move(cur));
  }
  std::sort(out.begin(), out.end(),
            [](const MinusculeElement& a, const MinusculeElement& b) { return canonical_less(a.ideal, b.ideal); });
  return out;
}

MinusculeElement ideal_to_element(const AffineWeylGroup& g, const AbelianIdeal& ideal) {
  const RootSystem& rs = g.root_system();
  if (!is_abelian_ideal(rs, ideal.roots)) throw std::invalid_argument("ideal_to_element: not an abelian ideal");
  MinusculeElement cur{g.identity(), {}};
  while (cur.ideal.size() < ideal.size()) {
    // Dominance-maximal root of the ideal still missing; first in canonical order.
    int pick = -1;
    for (int id : ideal.roots) {
      if (cur.ideal.contains(id)) continue;
      bool maximal = true;
      for (int other : ideal.roots) {
        if (other == id || cur.ideal.contains(other)) continue;
        if (rs.dominance_leq(rs.roots()[id], rs.roots()[other])) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        pick = id;
        break;
      }
    }
    const AffineRoot beta{rs.roots()[pick], -1};
    const int i = g.simple_index(-g.act(cur.element, beta));
    if (i < 0) throw std::logic_error("ideal_to_element: non-simple lift");
    auto next = extend(g, cur, i);
    if (!next || !next->ideal.contains(pick)) throw std::logic_error("ideal_to_element: lift left the minuscule set");
    cur = std::move(*next);
  }
  return cur;
}

AbelianIdeal element_to_ideal(const AffineWeylGroup& g, const AffineWeylElement& x) {
  const RootSystem& rs = g.root_system();
  AbelianIdeal ideal;
  for (const AffineRoot& a : g.negative_inversions(x)) {
    if (a.level != -1 || !a.finite.is_positive()) throw std::invalid_argument("element is not minuscule");
    ideal.roots.push_back(rs.index_of(a.finite));
  }
  std::sort(ideal.roots.begin(), ideal.roots.end());
  return ideal;
}

bool is_minuscule(const AffineWeylGroup& g, const AffineWeylElement& x) {
  for (const AffineRoot& a : g.negative_inversions(x))
    if (a.level != -1 || !a.finite.is_positive()) return false;
  return true;
}

std::vector<int> normalizer_simple_roots(const AffineWeylGroup& g, const MinusculeElement& m) {
  std::vector<int> out;
  for (int i = 1; i <= g.rank(); ++i)
    if (g.is_simple(g.act(m.element, g.simple_root(i)))) out.push_back(i);
  return out;
}

std::vector<int> normalizer_by_ideal_stability(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<int> out;
  for (int i = 1; i <= rs.rank(); ++i) {
    const Root a = rs.simple_root(i);
    if (ideal.contains(rs.index_of(a))) continue;
    bool stable = true;
    for (int id : ideal.roots) {
      const Root lowered = rs.roots()[id] - a;
      const int low = rs.index_of(lowered);
      if (low >= 0 && lowered.is_positive() && !ideal.contains(low)) {
        stable = false;
        break;
      }
    }
    if (stable) out.push_back(i);
  }
  return out;
}

bool weak_order_leq(const MinusculeElement& a, const MinusculeElement& b) {
  return std::includes(b.ideal.roots.begin(), b.ideal.roots.end(), a.ideal.roots.begin(), a.ideal.roots.end());
}

}  // namespace abideal
