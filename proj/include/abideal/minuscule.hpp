#pragma once

#include <optional>
#include <vector>

#include "abideal/affine_weyl.hpp"
#include "abideal/root_system.hpp"

namespace abideal {

/// Combinatorial abelian ideal: an upward-closed, sum-free set of positive
/// roots. Stored as sorted indices into RootSystem::roots().
struct AbelianIdeal {
  std::vector<int> roots;

  bool contains(int root_index) const;
  std::size_t size() const { return roots.size(); }
  bool operator==(const AbelianIdeal&) const = default;
};

/// Size first, then lexicographic on the sorted root indices.
bool canonical_less(const AbelianIdeal& a, const AbelianIdeal& b);

bool is_abelian_ideal(const RootSystem& rs, const std::vector<int>& root_indices);

/// A minuscule element together with its ideal; the inversion set is the ideal
/// shifted by -delta.
struct MinusculeElement {
  AffineWeylElement element;
  AbelianIdeal ideal;

  int length() const { return static_cast<int>(ideal.size()); }
};

/// Psi-hat(w) = ideal - delta, in canonical order.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const MinusculeElement& m);
/// Psi-hat = Phi^+ - delta, in canonical order.
std::vector<AffineRoot> full_psi_hat(const RootSystem& rs);

/// All abelian ideals, ordered by size then lexicographically. The position
/// in this list is the ideal id.
std::vector<AbelianIdeal> enumerate_abelian_ideals(const RootSystem& rs);

/// Breadth-first search over the left weak order from the identity; the result
/// is ordered to match enumerate_abelian_ideals.
std::vector<MinusculeElement> enumerate_minuscule(const AffineWeylGroup& g);

/// Builds the minuscule element of an ideal by repeatedly lifting a
/// dominance-maximal missing root. Throws std::logic_error on a non-simple lift.
MinusculeElement ideal_to_element(const AffineWeylGroup& g, const AbelianIdeal& ideal);

/// Reads the ideal off the inversion set; throws std::invalid_argument when x
/// is not minuscule.
AbelianIdeal element_to_ideal(const AffineWeylGroup& g, const AffineWeylElement& x);

bool is_minuscule(const AffineWeylGroup& g, const AffineWeylElement& x);

/// s_i * m when it is minuscule and longer than m.
std::optional<MinusculeElement> extend(const AffineWeylGroup& g, const MinusculeElement& m, int i);

/// Simple indices i in [1, rank] with m(alpha_i) affine simple.
std::vector<int> normalizer_simple_roots(const AffineWeylGroup& g, const MinusculeElement& m);
/// Same set, read off the ideal: alpha_i is not in the ideal and lowering any
/// ideal root by alpha_i stays in the ideal whenever it stays positive.
std::vector<int> normalizer_by_ideal_stability(const RootSystem& rs, const AbelianIdeal& ideal);

/// Inclusion of inversion sets.
bool weak_order_leq(const MinusculeElement& a, const MinusculeElement& b);

}  // namespace abideal
