#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abideal/affine_weyl.hpp"
#include "abideal/minuscule.hpp"
#include "abideal/report.hpp"

namespace abideal {

/// Pairwise orthogonal real affine roots, kept in canonical order.
struct OrthogonalSet {
  std::vector<AffineRoot> roots;

  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
  bool contains(const AffineRoot& a) const;
  bool operator==(const OrthogonalSet&) const = default;
};

/// Canonically sorted copy; throws std::invalid_argument if the roots are
/// not pairwise orthogonal.
OrthogonalSet make_orthogonal_set(const RootSystem& rs, std::vector<AffineRoot> roots);
bool are_orthogonal(const RootSystem& rs, const AffineRoot& a, const AffineRoot& b);
/// beta orthogonal to every root of S.
bool orthogonal_to(const RootSystem& rs, const AffineRoot& beta, const OrthogonalSet& S);

/// Size first, then elementwise canonical order.
bool canonical_less(const OrthogonalSet& a, const OrthogonalSet& b);

/// Every orthogonal subset of `pool` (which need not be sorted), in canonical
/// set order; the empty set comes first.
std::vector<OrthogonalSet> orthogonal_subsets(const RootSystem& rs, const std::vector<AffineRoot>& pool);

/// Product of the reflections in S.
AffineWeylElement sigma_of(const AffineWeylGroup& g, const OrthogonalSet& S);
/// Product in the given order; for orthogonal roots every order agrees.
AffineWeylElement sigma_of_ordered(const AffineWeylGroup& g, const std::vector<AffineRoot>& roots);

/// Rank of (id - x) on the affine root lattice, over the rationals.
int reflection_rank(const AffineWeylGroup& g, const AffineWeylElement& x);
bool is_involution(const AffineWeylGroup& g, const AffineWeylElement& x);
/// (l(sigma) + rk(id - sigma)) / 2; throws std::logic_error on odd numerator.
int involution_L(const AffineWeylGroup& g, const AffineWeylElement& sigma);

/// s_i o sigma: s_i sigma when they commute, s_i sigma s_i otherwise.
AffineWeylElement circ(const AffineWeylGroup& g, int i, const AffineWeylElement& sigma);

enum class DescentKind { none, real, complex };
enum class DescentLocus { finite, affine };

DescentKind descent_kind(const AffineWeylGroup& g, const AffineWeylElement& sigma, int i);
const char* to_string(DescentKind k);
const char* to_string(DescentLocus l);

/// (v, S): v minuscule, S orthogonal. The associated involution is sigma_{v(S)}.
struct AdmissiblePair {
  MinusculeElement v;
  OrthogonalSet S;
};

/// v <= w in weak order, S orthogonal and S inside Psi-hat(w) minus Psi-hat(v).
bool is_admissible(const RootSystem& rs, const AdmissiblePair& p, const MinusculeElement& w);
OrthogonalSet image_set(const AffineWeylGroup& g, const AffineWeylElement& v, const OrthogonalSet& S);
AffineWeylElement pair_sigma(const AffineWeylGroup& g, const AdmissiblePair& p);
int pair_L(const AffineWeylGroup& g, const AdmissiblePair& p);

struct PairDescent {
  int index = 0;
  DescentKind kind = DescentKind::none;
  DescentLocus locus = DescentLocus::finite;
};

/// Locus of a simple index for v: finite when v^{-1}(alpha_i) is a finite
/// simple root, affine when it lies in -Psi-hat; throws otherwise.
DescentLocus descent_locus(const AffineWeylGroup& g, const AffineWeylElement& v, int i);

/// All descents of the pair, by simple index. Throws std::invalid_argument when
/// a descent is neither finite nor affine (the pair is not admissible).
std::vector<PairDescent> pair_descents(const AffineWeylGroup& g, const AdmissiblePair& p);

/// Pairs (g1, g2) of S with g1 - g2 = 2 beta, in canonical order.
std::vector<std::pair<AffineRoot, AffineRoot>> half_difference_pairs(const OrthogonalSet& S,
                                                                     const AffineRoot& beta);

/// The move F_alpha along descent i. Throws std::invalid_argument when i is not
/// a descent, std::logic_error if a real finite descent has no decomposition.
AdmissiblePair f_alpha(const AffineWeylGroup& g, const AdmissiblePair& p, int i);

/// Every real root a with sigma_S(a) = -a, in canonical order.
std::vector<AffineRoot> minus_fixed_roots(const AffineWeylGroup& g, const OrthogonalSet& S);

/// Checks that every -1 eigenroot of sigma_S is a half sum (+-b +- b')/2 over S,
/// of the form (b+b')/2 inside Psi-hat and (b-b')/2 at level zero.
Report minus_fixed_check(const AffineWeylGroup& g, const OrthogonalSet& S);

/// All orthogonal subsets of a pool together with their involutions, indexed
/// by involution.
struct SigmaTable {
  std::vector<OrthogonalSet> sets;
  std::vector<AffineWeylElement> sigmas;
  std::vector<int> lengths;
  std::unordered_map<AffineWeylElement, std::vector<int>, AffineWeylElementHash> by_sigma;

  const std::vector<int>& with_sigma(const AffineWeylElement& x) const;
};
SigmaTable build_sigma_table(const AffineWeylGroup& g, const std::vector<AffineRoot>& pool);

/// For every orthogonal S in Psi-hat(w) and orthogonal S' in Psi-hat with equal
/// involutions, S' = S. `full` must be the table of the whole of Psi-hat.
Report injectivity_check(const AffineWeylGroup& g, const MinusculeElement& w, const SigmaTable& full);
Report injectivity_check(const AffineWeylGroup& g, const MinusculeElement& w);

/// {"roots": ["1,1-1d", ...]}
std::string orthogonal_set_to_json(const RootSystem& rs, const OrthogonalSet& S);
OrthogonalSet orthogonal_set_from_json(const RootSystem& rs, std::string_view text);
/// "{1,1-1d, 0,1-1d}", "{}" when empty.
std::string format_set(const RootSystem& rs, const OrthogonalSet& S);

}  // namespace abideal
