#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abideal/involutions.hpp"
#include "abideal/minuscule.hpp"
#include "abideal/report.hpp"

namespace abideal {

struct OrbitNode {
  OrthogonalSet S;
  AffineWeylElement sigma;  // sigma_{v(S)}
  ReducedWord sigma_word;
  int length = 0;  // l(sigma)
  int L = 0;
  int dim = 0;  // l(v) + L
};

struct OrbitPoset {
  MinusculeElement w;
  MinusculeElement v;
  int ideal_id = -1;  // informational, set by callers that know it
  std::vector<OrbitNode> nodes;
  std::vector<std::vector<bool>> leq;  // leq[i][j]: node i below node j
  std::vector<std::pair<int, int>> hasse;
};

/// Nodes are the orthogonal subsets of Psi-hat(w) minus Psi-hat(v) in canonical
/// order; the order compares the involutions in Bruhat order. Throws
/// std::invalid_argument unless v <= w.
OrbitPoset build_orbit_poset(const AffineWeylGroup& g, const MinusculeElement& w, const MinusculeElement& v);

/// Transitive reduction of a partial order matrix.
std::vector<std::pair<int, int>> transitive_reduction(const std::vector<std::vector<bool>>& leq);

/// Bruhat comparison of the associated involutions; both pairs must share v.
bool closure_leq(const AffineWeylGroup& g, const AdmissiblePair& p, const AdmissiblePair& q);

/// Order axioms, extremal nodes, monotonicity, grading, Hasse diagram and
/// dimension identities of a built poset.
Report verify_poset_properties(const AffineWeylGroup& g, const OrbitPoset& p);

/// For every minuscule w, orthogonal S in Psi-hat(w) and orthogonal R in
/// Psi-hat with sigma_R <= sigma_S: R lies in Psi-hat(w).
Report verify_strong_form(const AffineWeylGroup& g);

/// Orbit recursion along every covering v < s_a v <= w.
Report verify_branch_recursion(const AffineWeylGroup& g, const MinusculeElement& w);

/// Rebuilds the closure order for every v <= w from the elementary
/// degenerations, the F_alpha moves and transport along coverings, and
/// compares it with the Bruhat order of the involutions.
Report verify_moves_vs_order(const AffineWeylGroup& g, const MinusculeElement& w);

/// Simple indices with mark 1 in the highest root.
std::vector<int> mark_one_indices(const RootSystem& rs);
/// Longest element of the parabolic subgroup generated by all finite simple
/// reflections except s_p.
AffineWeylElement parabolic_longest(const AffineWeylGroup& g, int p);
/// phi on affine simple indices 0..rank: p <-> 0, j -> index of -w_P(alpha_j).
/// Throws std::invalid_argument when p does not have mark 1.
std::vector<int> phi_involution(const AffineWeylGroup& g, int p);
/// phi extended to the group through reduced words.
AffineWeylElement apply_phi(const AffineWeylGroup& g, const std::vector<int>& phi, const AffineWeylElement& x);
Report verify_phi_equivalence(const AffineWeylGroup& g, int p);

enum class ExportFormat { dot, json };
std::string export_poset(const RootSystem& rs, const OrbitPoset& p, ExportFormat format);

/// Plain mirror of the poset JSON document.
struct PosetDocument {
  struct Node {
    int id = 0;
    std::vector<std::string> S;
    std::string sigma_word;
    int length = 0;
    int L = 0;
    int dim = 0;
    bool operator==(const Node&) const = default;
  };
  std::string type;
  int rank = 0;
  int ideal_id = -1;
  std::string v_word;
  std::vector<Node> nodes;
  std::vector<std::pair<int, int>> hasse;
  bool operator==(const PosetDocument&) const = default;
};

PosetDocument to_document(const RootSystem& rs, const OrbitPoset& p);
std::string serialize(const PosetDocument& doc);
/// Throws std::invalid_argument on malformed input.
PosetDocument parse_poset_json(std::string_view text);

}  // namespace abideal
