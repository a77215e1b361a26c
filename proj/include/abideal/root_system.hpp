#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace abideal {

inline constexpr int kMaxRank = 8;

/// Integer coordinates over the simple roots (or simple coroots, depending on
/// context). Entries past the rank of the owning root system are zero.
using Coeffs = std::array<int, kMaxRank>;

/// A (finite) root, in simple-root coordinates.
struct Root {
  Coeffs coeffs{};

  int height() const;
  bool is_zero() const;
  bool is_positive() const;  // all coefficients >= 0 and not zero
  bool is_negative() const;

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  Root scaled(int k) const;

  bool operator==(const Root&) const = default;
};

/// Canonical root order: by height, then coefficient vectors in decreasing
/// lexicographic order (so alpha_1 precedes alpha_2 at equal height).
std::strong_ordering canonical_compare(const Root& a, const Root& b);

struct CanonicalLess {
  bool operator()(const Root& a, const Root& b) const { return canonical_compare(a, b) < 0; }
};

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

CartanType parse_cartan_type(std::string_view s);
char type_letter(CartanType t);

/// Type, rank and Cartan matrix (Bourbaki numbering and conventions).
/// cartan[i][j] = <alpha_j, alpha_i^vee>.
struct CartanDatum {
  CartanType type = CartanType::A;
  int rank = 1;
  std::vector<std::vector<int>> cartan;
  /// Half squared lengths of the simple roots, (alpha_i, alpha_i) = 2 d_i,
  /// normalised so the short roots have d = 1.
  std::vector<int> symmetrizer;

  /// Throws std::invalid_argument for an invalid (type, rank) combination.
  static CartanDatum make(CartanType type, int rank);
};

/// A finite irreducible reduced root system. Immutable after construction.
class RootSystem {
 public:
  explicit RootSystem(CartanDatum datum);
  RootSystem(CartanType type, int rank) : RootSystem(CartanDatum::make(type, rank)) {}

  const CartanDatum& datum() const { return datum_; }
  CartanType type() const { return datum_.type; }
  int rank() const { return datum_.rank; }

  /// All roots in canonical order (negative roots first).
  const std::vector<Root>& roots() const { return roots_; }
  /// Positive roots in canonical order.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }
  /// Coefficients m_i of the highest root.
  const Coeffs& marks() const { return highest_.coeffs; }

  Root simple_root(int i) const;  // 1-based, i in [1, rank]

  /// Index into roots(), or -1 when the coefficients are not a root.
  int index_of(const Root& r) const;
  int index_of(const Coeffs& c) const;
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  /// Index into positive_roots(), or -1.
  int positive_index_of(const Root& r) const;

  /// Symmetric form (beta, gamma) in units where short roots have (a, a) = 2.
  int inner(const Coeffs& beta, const Coeffs& gamma) const;
  int inner(const Root& beta, const Root& gamma) const { return inner(beta.coeffs, gamma.coeffs); }
  int squared_length(const Root& r) const { return inner(r, r); }

  /// <beta, gamma^vee>; gamma must be a root. Throws for non-root input.
  int pairing(const Root& beta, const Root& gamma) const;
  /// Unchecked pairing for a lattice vector against a root's coroot.
  int pairing_unchecked(const Coeffs& beta, const Coeffs& gamma) const;
  /// <beta, lambda> for lambda given in simple-coroot coordinates.
  int pairing_with_coweight(const Coeffs& beta, const Coeffs& lambda) const;

  /// s_gamma(beta) = beta - <beta, gamma^vee> gamma.
  Root reflect(const Root& gamma, const Root& beta) const;

  /// True iff b - a is a nonnegative combination of simple roots.
  bool dominance_leq(const Root& a, const Root& b) const;

  /// Coroot of gamma in simple-coroot coordinates.
  Coeffs coroot(const Root& gamma) const;

  /// Convert a root-space vector given in root coordinates to coroot
  /// coordinates (the identification via the symmetric form).
  Coeffs root_to_coroot_coords(const Coeffs& v) const;

  std::string name() const;

 private:
  CartanDatum datum_;
  std::vector<std::vector<int>> gram_;  // (alpha_i, alpha_j)
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  Root highest_;
  std::unordered_map<std::uint64_t, int> index_;
  int npos_ = 0;
};

std::uint64_t pack_coeffs(const Coeffs& c);

// Text forms. Simple-root form is "c1,c2,...,cn"; the classical epsilon form
// ("e1+e3", "e2-e4", "2e1") is accepted for types A-D.
std::string format_root(const RootSystem& rs, const Root& r);
Root parse_root(const RootSystem& rs, std::string_view text);

/// Epsilon-coordinate conversion layer (classical types only, Bourbaki).
bool has_epsilon_coordinates(CartanType t);
int epsilon_dimension(const RootSystem& rs);
std::vector<int> to_epsilon(const RootSystem& rs, const Root& r);
/// Throws std::invalid_argument if the vector is not a root.
Root from_epsilon(const RootSystem& rs, const std::vector<int>& eps);
std::string format_epsilon(const RootSystem& rs, const Root& r);

}  // namespace abideal
