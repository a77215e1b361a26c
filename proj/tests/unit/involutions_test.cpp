#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "abideal/involutions.hpp"

using namespace abideal;

namespace {

OrthogonalSet set_of(const RootSystem& rs, std::initializer_list<const char*> roots) {
  std::vector<AffineRoot> v;
  for (const char* r : roots) v.push_back(parse_affine_root(rs, r));
  return make_orthogonal_set(rs, v);
}

MinusculeElement minuscule_of(const AffineWeylGroup& g, const ReducedWord& word) {
  const AffineWeylElement x = g.evaluate(word);
  return {x, element_to_ideal(g, x)};
}

const PairDescent* find_descent(const std::vector<PairDescent>& ds, int i) {
  for (const auto& d : ds)
    if (d.index == i) return &d;
  return nullptr;
}

}  // namespace

TEST_CASE("orthogonal sets") {
  const RootSystem rs(CartanType::A, 3);
  const OrthogonalSet S = set_of(rs, {"1,1,1-1d", "0,1,0-1d"});
  CHECK(S.size() == 2);
  CHECK(S.roots.front() == parse_affine_root(rs, "0,1,0-1d"));
  CHECK(S.contains(parse_affine_root(rs, "1,1,1-1d")));
  CHECK_THROWS_AS(set_of(rs, {"1,1,0-1d", "0,1,0-1d"}), std::invalid_argument);
  CHECK(are_orthogonal(rs, parse_affine_root(rs, "1,1,0-1d"), parse_affine_root(rs, "0,1,1-1d")));
  CHECK_FALSE(are_orthogonal(rs, parse_affine_root(rs, "1,1,0-1d"), parse_affine_root(rs, "0,1,0-1d")));
  CHECK(are_orthogonal(rs, parse_affine_root(rs, "1,0,0-1d"), parse_affine_root(rs, "0,0,1-1d")));
  const auto subsets = orthogonal_subsets(rs, {parse_affine_root(rs, "1,1,0-1d"), parse_affine_root(rs, "0,1,1-1d"),
                                               parse_affine_root(rs, "1,1,1-1d")});
  CHECK(subsets.size() == 5);
  CHECK(subsets.back().size() == 2);
  CHECK(subsets.front().empty());
}

TEST_CASE("sigma of small sets") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  CHECK(g.is_identity(sigma_of(g, {})));
  CHECK(sigma_of(g, set_of(rs, {"1,1-1d"})) == g.simple_reflection(0));
  const auto s = sigma_of(g, set_of(rs, {"1,0-1d"}));
  CHECK(g.length(s) == 3);
  CHECK(involution_L(g, s) == 2);
  CHECK(reflection_rank(g, s) == 1);
  CHECK(reflection_rank(g, g.identity()) == 0);
  CHECK(reflection_rank(g, g.simple_reflection(0)) == 1);
  CHECK(involution_L(g, g.identity()) == 0);
  CHECK(is_involution(g, s));
  CHECK_FALSE(is_involution(g, g.evaluate({1, 0})));
}

TEST_CASE("D4 sets with a common involution") {
  const RootSystem rs(CartanType::D, 4);
  const AffineWeylGroup g(rs);
  const OrthogonalSet S = set_of(rs, {"e1+e3-d", "e1-e3-d", "e2+e4-d", "e2-e4-d"});
  const OrthogonalSet T = set_of(rs, {"e1+e4-d", "e1-e4-d", "e2+e3-d", "e2-e3-d"});
  const AffineRoot alpha = parse_affine_root(rs, "e1+e2-2d");
  CHECK_FALSE(S == T);
  CHECK(sigma_of(g, S) == sigma_of(g, T));
  CHECK(g.act(sigma_of(g, S), alpha) == -alpha);
  const Report r = minus_fixed_check(g, S);
  CHECK_FALSE(r.passed());
  const auto fixed = minus_fixed_roots(g, S);
  CHECK(std::find(fixed.begin(), fixed.end(), alpha) != fixed.end());
}

TEST_CASE("circ") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  CHECK(circ(g, 0, g.identity()) == g.simple_reflection(0));
  for (int i = 0; i <= 2; ++i) CHECK(g.is_identity(circ(g, i, g.simple_reflection(i))));
  CHECK(circ(g, 1, g.simple_reflection(0)) == g.evaluate({1, 0, 1}));
}

TEST_CASE("descent kinds") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  for (int i = 0; i <= 2; ++i) CHECK(descent_kind(g, g.identity(), i) == DescentKind::none);
  CHECK(descent_kind(g, g.simple_reflection(0), 0) == DescentKind::real);
  CHECK(descent_kind(g, g.evaluate({1, 0, 1}), 1) == DescentKind::complex);
  CHECK(std::string(to_string(DescentKind::complex)) == "complex");
  CHECK(std::string(to_string(DescentLocus::affine)) == "affine");
}

TEST_CASE("pair descents in A2") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const MinusculeElement e{g.identity(), {}};
  CHECK(pair_descents(g, {e, {}}).empty());

  const auto d1 = pair_descents(g, {e, set_of(rs, {"1,1-1d"})});
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].index == 0);
  CHECK(d1[0].kind == DescentKind::real);
  CHECK(d1[0].locus == DescentLocus::affine);

  // sigma = s_{delta - alpha_1}: alpha_1 -> 2 delta - alpha_1, alpha_2 -> theta - delta.
  const auto d2 = pair_descents(g, {e, set_of(rs, {"1,0-1d"})});
  CHECK(find_descent(d2, 1) == nullptr);
  const PairDescent* two = find_descent(d2, 2);
  REQUIRE(two);
  CHECK(two->kind == DescentKind::complex);
  CHECK(two->locus == DescentLocus::finite);
  const PairDescent* zero = find_descent(d2, 0);
  REQUIRE(zero);
  CHECK(zero->kind == DescentKind::complex);
  CHECK(zero->locus == DescentLocus::affine);
}

TEST_CASE("moves F_alpha in A2") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const MinusculeElement e{g.identity(), {}};
  const auto all = enumerate_minuscule(g);

  const AdmissiblePair real{e, set_of(rs, {"1,1-1d"})};
  const AdmissiblePair r1 = f_alpha(g, real, 0);
  CHECK(r1.v.element == g.simple_reflection(0));
  CHECK(r1.S.empty());

  const AdmissiblePair complex{e, set_of(rs, {"1,0-1d"})};
  REQUIRE(is_admissible(rs, complex, all[2]));
  const AdmissiblePair c1 = f_alpha(g, complex, 0);
  CHECK(c1.v.element == g.simple_reflection(0));
  CHECK(c1.S == set_of(rs, {"1,0-1d"}));
  CHECK(is_admissible(rs, c1, all[2]));
  CHECK(pair_sigma(g, c1) == circ(g, 0, pair_sigma(g, complex)));
  CHECK(pair_L(g, c1) == pair_L(g, complex) - 1);

  CHECK_THROWS_AS(f_alpha(g, complex, 1), std::invalid_argument);
}

TEST_CASE("real finite move in B2") {
  const RootSystem rs(CartanType::B, 2);
  const AffineWeylGroup g(rs);
  const MinusculeElement w = minuscule_of(g, {0, 2, 0});
  const MinusculeElement e{g.identity(), {}};
  const AdmissiblePair p{e, set_of(rs, {"1,0-1d", "1,2-1d"})};
  REQUIRE(is_admissible(rs, p, w));
  const PairDescent* d = find_descent(pair_descents(g, p), 2);
  REQUIRE(d);
  CHECK(d->kind == DescentKind::real);
  CHECK(d->locus == DescentLocus::finite);
  const AffineRoot beta = AffineRoot{rs.simple_root(2), 0};
  const auto halves = half_difference_pairs(p.S, beta);
  REQUIRE(halves.size() == 1);
  CHECK(halves[0].first == parse_affine_root(rs, "1,2-1d"));
  CHECK(halves[0].second == parse_affine_root(rs, "1,0-1d"));
  const AdmissiblePair m = f_alpha(g, p, 2);
  CHECK(g.is_identity(m.v.element));
  CHECK(m.S == set_of(rs, {"1,1-1d"}));
  CHECK(is_admissible(rs, m, w));
  CHECK(g.reduced_word(pair_sigma(g, p)) == ReducedWord{0, 2, 0, 2});
  CHECK(pair_sigma(g, m) == g.multiply(g.simple_reflection(2), pair_sigma(g, p)));
  CHECK(pair_L(g, p) == 3);
  CHECK(pair_L(g, m) == 2);
}

TEST_CASE("real finite move in C3") {
  const RootSystem rs(CartanType::C, 3);
  const AffineWeylGroup g(rs);
  const MinusculeElement w = minuscule_of(g, {0, 1, 0});
  const MinusculeElement e{g.identity(), {}};
  const AdmissiblePair p{e, set_of(rs, {"0,2,1-1d", "2,2,1-1d"})};
  REQUIRE(is_admissible(rs, p, w));
  const AdmissiblePair m = f_alpha(g, p, 1);
  CHECK(m.S == set_of(rs, {"1,2,1-1d"}));
  CHECK(pair_sigma(g, m) == circ(g, 1, pair_sigma(g, p)));
  CHECK(pair_sigma(g, m) == g.multiply(g.simple_reflection(1), pair_sigma(g, p)));
  CHECK(pair_L(g, m) == 2);
}

TEST_CASE("minus-fixed roots of a single reflection") {
  const RootSystem rs(CartanType::B, 3);
  const AffineWeylGroup g(rs);
  for (const AffineRoot& b : full_psi_hat(rs)) {
    const auto fixed = minus_fixed_roots(g, make_orthogonal_set(rs, {b}));
    REQUIRE(fixed.size() == 2);
    CHECK(std::find(fixed.begin(), fixed.end(), b) != fixed.end());
    CHECK(std::find(fixed.begin(), fixed.end(), -b) != fixed.end());
  }
}

TEST_CASE("half-sum check on admissible sets") {
  for (auto [t, n] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::C, 3}, {CartanType::D, 4}}) {
    const RootSystem rs(t, n);
    const AffineWeylGroup g(rs);
    CAPTURE(rs.name());
    for (const auto& w : enumerate_minuscule(g))
      for (const auto& S : orthogonal_subsets(rs, inversion_set(rs, w))) CHECK(minus_fixed_check(g, S).passed());
  }
}

TEST_CASE("injectivity") {
  for (auto [t, n] : {std::pair{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::D, 4}}) {
    const RootSystem rs(t, n);
    const AffineWeylGroup g(rs);
    const SigmaTable full = build_sigma_table(g, full_psi_hat(rs));
    for (const auto& w : enumerate_minuscule(g)) CHECK(injectivity_check(g, w, full).passed());
  }
}

TEST_CASE("admissibility") {
  const RootSystem rs(CartanType::A, 2);
  const AffineWeylGroup g(rs);
  const auto all = enumerate_minuscule(g);
  const OrthogonalSet theta = set_of(rs, {"1,1-1d"});
  CHECK(is_admissible(rs, {all[0], theta}, all[1]));
  CHECK_FALSE(is_admissible(rs, {all[1], theta}, all[3]));  // theta already inverted by v
  CHECK_FALSE(is_admissible(rs, {all[0], set_of(rs, {"0,1-1d"})}, all[2]));
  CHECK_FALSE(is_admissible(rs, {all[2], {}}, all[3]));
}

TEST_CASE("set JSON and text forms") {
  const RootSystem rs(CartanType::C, 3);
  const OrthogonalSet S = set_of(rs, {"0,2,1-1d", "2,2,1-1d"});
  CHECK(orthogonal_set_from_json(rs, orthogonal_set_to_json(rs, S)) == S);
  CHECK(format_set(rs, S) == "{0,2,1-1d, 2,2,1-1d}");
  CHECK(format_set(rs, {}) == "{}");
  CHECK_THROWS(orthogonal_set_from_json(rs, "{\"roots\": [\"1,0,0-1d\", \"1,1,0-1d\"]}"));
  CHECK_THROWS(orthogonal_set_from_json(rs, "[1,2"));
}
