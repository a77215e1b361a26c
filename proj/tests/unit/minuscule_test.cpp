#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "abideal/minuscule.hpp"

using namespace abideal;

namespace {

// Every subset of the positive roots, tested for upward closure and sum-freeness
// directly on coefficient vectors.
std::set<std::vector<int>> ideals_by_subsets(const RootSystem& rs) {
  const auto& pos = rs.positive_roots();
  const std::size_t n = pos.size();
  REQUIRE(n <= 16);
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1u)) continue;
      for (std::size_t b = 0; b < n && ok; ++b) {
        const Root sum = pos[a] + pos[b];
        const int k = rs.positive_index_of(sum);
        if (k < 0) continue;
        if (mask >> b & 1u) ok = false;             // two members adding to a root
        else if (!(mask >> k & 1u)) ok = false;     // not upward closed
      }
    }
    if (!ok) continue;
    std::vector<int> ids;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) ids.push_back(rs.index_of(pos[a]));
    std::sort(ids.begin(), ids.end());
    out.insert(ids);
  }
  return out;
}

AbelianIdeal ideal_of(const RootSystem& rs, std::initializer_list<const char*> roots) {
  AbelianIdeal out;
  for (const char* r : roots) out.roots.push_back(rs.index_of(parse_root(rs, r)));
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace

TEST_CASE("A1 and A2 enumerations") {
  const RootSystem a1(CartanType::A, 1);
  CHECK(enumerate_abelian_ideals(a1).size() == 2);
  CHECK(enumerate_minuscule(AffineWeylGroup(a1)).size() == 2);

  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto ideals = enumerate_abelian_ideals(rs);
  REQUIRE(ideals.size() == 4);
  CHECK(ideals[0] == AbelianIdeal{});
  CHECK(ideals[1] == ideal_of(rs, {"1,1"}));
  CHECK(ideals[2] == ideal_of(rs, {"1,1", "1,0"}));
  CHECK(ideals[3] == ideal_of(rs, {"1,1", "0,1"}));

  const auto elements = enumerate_minuscule(g);
  REQUIRE(elements.size() == 4);
  CHECK(g.reduced_word(elements[0].element).empty());
  CHECK(g.reduced_word(elements[1].element) == ReducedWord{0});
  CHECK(g.reduced_word(elements[2].element) == ReducedWord{2, 0});
  CHECK(g.reduced_word(elements[3].element) == ReducedWord{1, 0});
  for (std::size_t k = 0; k < 4; ++k) CHECK(elements[k].ideal == ideals[k]);
}

TEST_CASE("ideals match brute-force subsets") {
  for (auto [t, n] : {std::pair{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3}, {CartanType::A, 4},
                      {CartanType::B, 2}, {CartanType::B, 3}, {CartanType::C, 3}, {CartanType::D, 4},
                      {CartanType::G, 2}}) {
    const RootSystem rs(t, n);
    CAPTURE(rs.name());
    std::set<std::vector<int>> ours;
    for (const auto& i : enumerate_abelian_ideals(rs)) {
      CHECK(is_abelian_ideal(rs, i.roots));
      ours.insert(i.roots);
    }
    CHECK(ours == ideals_by_subsets(rs));
    CHECK(ours.size() == (1u << n));
  }
}

TEST_CASE("is_abelian_ideal rejects bad sets") {
  const RootSystem rs(CartanType::A, 2);
  CHECK_FALSE(is_abelian_ideal(rs, ideal_of(rs, {"1,0"}).roots));
  CHECK_FALSE(is_abelian_ideal(rs, ideal_of(rs, {"1,1", "1,0", "0,1"}).roots));
  CHECK(is_abelian_ideal(rs, {}));
}

TEST_CASE("ideal to element") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  CHECK(g.is_identity(ideal_to_element(g, {}).element));
  CHECK(ideal_to_element(g, ideal_of(rs, {"1,1"})).element == g.simple_reflection(0));
  CHECK(ideal_to_element(g, ideal_of(rs, {"1,1", "0,1"})).element == g.evaluate({1, 0}));
}

TEST_CASE("bijection round trip") {
  for (auto [t, n] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::C, 4}, {CartanType::D, 5},
                      {CartanType::F, 4}, {CartanType::E, 6}}) {
    const RootSystem rs(t, n);
    const AffineWeylGroup g(rs);
    CAPTURE(rs.name());
    const auto ideals = enumerate_abelian_ideals(rs);
    const auto elements = enumerate_minuscule(g);
    REQUIRE(ideals.size() == elements.size());
    CHECK(ideals.size() == (1u << n));
    for (std::size_t k = 0; k < ideals.size(); ++k) {
      CHECK(ideal_to_element(g, ideals[k]).element == elements[k].element);
      CHECK(element_to_ideal(g, elements[k].element) == ideals[k]);
      CHECK(g.length(elements[k].element) == static_cast<int>(ideals[k].size()));
    }
  }
}

TEST_CASE("A3 element s1 s3 s0") {
  const RootSystem rs(CartanType::A, 3);
  const AffineWeylGroup g(rs);
  const AffineWeylElement w = g.evaluate({1, 3, 0});
  REQUIRE(is_minuscule(g, w));
  const MinusculeElement m{w, element_to_ideal(g, w)};
  std::vector<AffineRoot> missing;
  for (const AffineRoot& a : full_psi_hat(rs))
    if (!m.ideal.contains(rs.index_of(a.finite))) missing.push_back(a);
  const std::vector<AffineRoot> expected{parse_affine_root(rs, "1,0,0-1d"), parse_affine_root(rs, "0,1,0-1d"),
                                         parse_affine_root(rs, "0,0,1-1d")};
  CHECK(missing == expected);
  CHECK(g.act(w, parse_affine_root(rs, "1,0,0-1d")) == AffineRoot{parse_root(rs, "-1,-1,0"), 0});
}

TEST_CASE("minuscule membership") {
  const RootSystem a2(CartanType::A, 2);
  const AffineWeylGroup g(a2);
  CHECK(is_minuscule(g, g.identity()));
  CHECK(is_minuscule(g, g.simple_reflection(0)));
  CHECK_FALSE(is_minuscule(g, g.evaluate({1, 2, 0})));
  CHECK_FALSE(is_minuscule(g, g.simple_reflection(1)));
  CHECK_THROWS_AS(element_to_ideal(g, g.evaluate({1, 2, 0})), std::invalid_argument);
  const RootSystem a3(CartanType::A, 3);
  const AffineWeylGroup g3(a3);
  CHECK(is_minuscule(g3, g3.evaluate({1, 3, 0})));
}

TEST_CASE("inversion set is the ideal shifted down") {
  const RootSystem rs(CartanType::B, 3);
  const AffineWeylGroup g(rs);
  for (const auto& m : enumerate_minuscule(g)) {
    const auto psi = inversion_set(rs, m);
    CHECK(psi == g.negative_inversions(m.element));
    for (const AffineRoot& a : psi) CHECK(a.level == -1);
  }
  CHECK(full_psi_hat(rs).size() == rs.positive_roots().size());
}

TEST_CASE("extend") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const auto up = extend(g, all[0], 0);
  REQUIRE(up.has_value());
  CHECK(up->element == g.simple_reflection(0));
  CHECK_FALSE(extend(g, all[0], 1).has_value());
  const auto two = extend(g, all[1], 1);
  REQUIRE(two.has_value());
  CHECK(two->ideal == all[3].ideal);
  CHECK_FALSE(extend(g, all[3], 2).has_value());
}

TEST_CASE("normalizer") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  CHECK(normalizer_simple_roots(g, all[0]) == std::vector<int>{1, 2});
  // s0(alpha_i) = delta - alpha_j is not simple, and theta - alpha_i leaves {theta}.
  CHECK(normalizer_simple_roots(g, all[1]).empty());
  CHECK(normalizer_by_ideal_stability(rs, all[1].ideal).empty());
  CHECK(normalizer_simple_roots(g, all[3]) == std::vector<int>{1});
  CHECK(normalizer_by_ideal_stability(rs, all[3].ideal) == std::vector<int>{1});
  CHECK(normalizer_simple_roots(g, all[2]) == std::vector<int>{2});
}

TEST_CASE("weak order") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  for (const auto& m : all) CHECK(weak_order_leq(all[0], m));
  CHECK(weak_order_leq(all[1], all[3]));
  CHECK_FALSE(weak_order_leq(all[3], all[2]));
  CHECK_FALSE(weak_order_leq(all[2], all[3]));
}
