#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "abideal/root_system.hpp"

namespace abideal {

/// Real affine root gamma + level * delta.
struct AffineRoot {
  Root finite;
  int level = 0;

  bool is_positive() const {
    return level > 0 || (level == 0 && finite.is_positive());
  }
  bool is_negative() const { return !is_positive(); }

  AffineRoot operator-() const { return {-finite, -level}; }
  AffineRoot operator+(const AffineRoot& o) const { return {finite + o.finite, level + o.level}; }
  AffineRoot operator-(const AffineRoot& o) const { return {finite - o.finite, level - o.level}; }

  bool operator==(const AffineRoot&) const = default;
};

/// Canonical affine-root order: by level, then canonical finite order.
std::strong_ordering canonical_compare(const AffineRoot& a, const AffineRoot& b);

struct AffineLess {
  bool operator()(const AffineRoot& a, const AffineRoot& b) const { return canonical_compare(a, b) < 0; }
};

/// Finite Weyl group element as an integer matrix on simple-root coordinates:
/// column j is the image of alpha_j. The inverse is carried along.
struct FiniteMatrix {
  std::array<Coeffs, kMaxRank> cols{};

  static FiniteMatrix identity(int rank);
  Coeffs apply(const Coeffs& v, int rank) const;
  FiniteMatrix compose(const FiniteMatrix& rhs, int rank) const;  // this * rhs
  bool operator==(const FiniteMatrix&) const = default;
};

/// x = t_lambda * w, acting by x(gamma + n delta) = w(gamma) + (n - <w(gamma), lambda>) delta.
/// lambda is an element of the coroot lattice in simple-coroot coordinates.
struct AffineWeylElement {
  FiniteMatrix w;
  FiniteMatrix w_inv;
  Coeffs lambda{};

  bool operator==(const AffineWeylElement& o) const { return w == o.w && lambda == o.lambda; }
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const;
};

using ReducedWord = std::vector<int>;

/// The affine Weyl group attached to a root system. Index 0 is the affine
/// simple reflection s_{delta - theta}; indices 1..rank are the finite ones.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  /// Affine simple root alpha_i, with alpha_0 = delta - theta.
  AffineRoot simple_root(int i) const;
  bool is_simple(const AffineRoot& a) const { return simple_index(a) >= 0; }
  /// Index in [0, rank] if a is an affine simple root, else -1.
  int simple_index(const AffineRoot& a) const;

  AffineWeylElement identity() const;
  bool is_identity(const AffineWeylElement& x) const;
  AffineWeylElement simple_reflection(int i) const;
  /// Reflection s_a for a real affine root a.
  AffineWeylElement reflection(const AffineRoot& a) const;

  AffineRoot act(const AffineWeylElement& x, const AffineRoot& a) const;
  AffineRoot act_inverse(const AffineWeylElement& x, const AffineRoot& a) const;
  AffineWeylElement multiply(const AffineWeylElement& x, const AffineWeylElement& y) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  AffineWeylElement left_multiply_simple(int i, const AffineWeylElement& x) const;

  /// W action on the coroot lattice (simple-coroot coordinates).
  Coeffs act_on_coweight(const FiniteMatrix& w, const Coeffs& lambda) const;

  /// Number of positive affine roots sent to negative ones.
  int length(const AffineWeylElement& x) const;

  /// Simple indices i with x(alpha_i) < 0 (right) or x^{-1}(alpha_i) < 0 (left).
  std::vector<int> right_descents(const AffineWeylElement& x) const;
  std::vector<int> left_descents(const AffineWeylElement& x) const;
  bool is_left_descent(const AffineWeylElement& x, int i) const;
  bool is_right_descent(const AffineWeylElement& x, int i) const;

  /// Greedy left-descent stripping, smallest index first.
  ReducedWord reduced_word(const AffineWeylElement& x) const;
  AffineWeylElement evaluate(const ReducedWord& word) const;

  /// Bruhat order via the lifting property.
  bool bruhat_leq(const AffineWeylElement& u, const AffineWeylElement& w) const;
  /// Subword-property oracle; throws std::invalid_argument if l(w) > 20.
  bool bruhat_leq_oracle(const AffineWeylElement& u, const AffineWeylElement& w) const;

  /// Inversion set {a in negative affine roots : x(a) positive}.
  std::vector<AffineRoot> negative_inversions(const AffineWeylElement& x) const;

  /// True iff x^{-1} maps the closed fundamental alcove into the closed doubled alcove.
  bool alcove_image_check(const AffineWeylElement& x) const;

  /// Matrix of x on the affine root lattice, basis (alpha_1..alpha_r, delta).
  std::vector<std::vector<int>> affine_lattice_matrix(const AffineWeylElement& x) const;

 private:
  Coeffs apply_finite(const FiniteMatrix& m, const Coeffs& v) const { return m.apply(v, rs_->rank()); }

  const RootSystem* rs_;
  std::vector<AffineWeylElement> simple_;
  int lcm_sym_ = 1;
};

std::string format_affine_root(const RootSystem& rs, const AffineRoot& a);
/// Grammar: coeffs(+-kd), e.g. "1,1-1d", or classical "e1+e3-d".
AffineRoot parse_affine_root(const RootSystem& rs, std::string_view text);

/// Space-separated indices, e.g. "1 3 0". Also accepts "s1 s3 s0".
ReducedWord parse_word(std::string_view text, int rank);
std::string format_word(const ReducedWord& w);           // "1 3 0"
std::string format_word_tokens(const ReducedWord& w);    // "s1 s3 s0", "e" when empty

/// Element JSON {"w": [[...]], "lambda": [...]} with w listed as images of the
/// simple roots.
std::string element_to_json(const AffineWeylGroup& g, const AffineWeylElement& x);
AffineWeylElement element_from_json(const AffineWeylGroup& g, std::string_view text);

}  // namespace abideal
