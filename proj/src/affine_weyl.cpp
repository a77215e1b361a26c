#include "abideal/affine_weyl.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "abideal/exact_linalg.hpp"

namespace abideal {

std::strong_ordering canonical_compare(const AffineRoot& a, const AffineRoot& b) {
  if (auto c = a.level <=> b.level; c != 0) return c;
  return canonical_compare(a.finite, b.finite);
}

FiniteMatrix FiniteMatrix::identity(int rank) {
  FiniteMatrix m;
  for (int i = 0; i < rank; ++i) m.cols[i][i] = 1;
  return m;
}

Coeffs FiniteMatrix::apply(const Coeffs& v, int rank) const {
  Coeffs out{};
  for (int j = 0; j < rank; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < rank; ++i) out[i] += v[j] * cols[j][i];
  }
  return out;
}

FiniteMatrix FiniteMatrix::compose(const FiniteMatrix& rhs, int rank) const {
  FiniteMatrix out;
  for (int j = 0; j < rank; ++j) out.cols[j] = apply(rhs.cols[j], rank);
  return out;
}

std::size_t AffineWeylElementHash::operator()(const AffineWeylElement& x) const {
  std::size_t h = std::hash<std::uint64_t>{}(pack_coeffs(x.lambda));
  for (const auto& c : x.w.cols) h = h * 1000003u ^ std::hash<std::uint64_t>{}(pack_coeffs(c));
  return h;
}

AffineWeylGroup::AffineWeylGroup(const RootSystem& rs) : rs_(&rs) {
  for (int d : rs.datum().symmetrizer) lcm_sym_ = std::lcm(lcm_sym_, d);
  for (int i = 0; i <= rs.rank(); ++i) simple_.push_back(reflection(simple_root(i)));
}

AffineRoot AffineWeylGroup::simple_root(int i) const {
  if (i < 0 || i > rank()) throw std::out_of_range("simple index out of range");
  if (i == 0) return {-rs_->highest_root(), 1};
  return {rs_->simple_root(i), 0};
}

int AffineWeylGroup::simple_index(const AffineRoot& a) const {
  if (a.level == 1 && a.finite == -rs_->highest_root()) return 0;
  if (a.level != 0) return -1;
  int found = -1;
  for (int i = 0; i < rank(); ++i) {
    const int c = a.finite.coeffs[i];
    if (c == 0) continue;
    if (c != 1 || found >= 0) return -1;
    found = i + 1;
  }
  return found;
}

AffineWeylElement AffineWeylGroup::identity() const {
  AffineWeylElement e;
  e.w = e.w_inv = FiniteMatrix::identity(rank());
  return e;
}

bool AffineWeylGroup::is_identity(const AffineWeylElement& x) const {
  return x.w == FiniteMatrix::identity(rank()) && x.lambda == Coeffs{};
}

AffineWeylElement AffineWeylGroup::simple_reflection(int i) const {
  if (i < 0 || i > rank()) throw std::out_of_range("simple reflection index out of range");
  return simple_[i];
}

AffineWeylElement AffineWeylGroup::reflection(const AffineRoot& a) const {
  const Root& g = a.finite;
  if (g.is_zero()) throw std::invalid_argument("reflection needs a real root");
  AffineWeylElement x;
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    Coeffs aj{};
    aj[j] = 1;
    const int p = rs_->pairing_unchecked(aj, g.coeffs);
    for (int i = 0; i < n; ++i) x.w.cols[j][i] = aj[i] - p * g.coeffs[i];
  }
  x.w_inv = x.w;
  const Coeffs cor = rs_->coroot(g);
  for (int i = 0; i < n; ++i) x.lambda[i] = -a.level * cor[i];
  return x;
}

Coeffs AffineWeylGroup::act_on_coweight(const FiniteMatrix& w, const Coeffs& lambda) const {
  const int n = rank();
  const auto& d = rs_->datum().symmetrizer;
  Coeffs scaled{};
  for (int j = 0; j < n; ++j) scaled[j] = lambda[j] * (lcm_sym_ / d[j]);
  const Coeffs r = w.apply(scaled, n);
  Coeffs out{};
  for (int i = 0; i < n; ++i) {
    const int num = d[i] * r[i];
    if (num % lcm_sym_ != 0) throw std::logic_error("coweight action left the coroot lattice");
    out[i] = num / lcm_sym_;
  }
  return out;
}

AffineRoot AffineWeylGroup::act(const AffineWeylElement& x, const AffineRoot& a) const {
  AffineRoot out;
  out.finite.coeffs = apply_finite(x.w, a.finite.coeffs);
  out.level = a.level - rs_->pairing_with_coweight(out.finite.coeffs, x.lambda);
  return out;
}

AffineRoot AffineWeylGroup::act_inverse(const AffineWeylElement& x, const AffineRoot& a) const {
  AffineRoot out;
  out.level = a.level + rs_->pairing_with_coweight(a.finite.coeffs, x.lambda);
  out.finite.coeffs = apply_finite(x.w_inv, a.finite.coeffs);
  return out;
}

AffineWeylElement AffineWeylGroup::multiply(const AffineWeylElement& x, const AffineWeylElement& y) const {
  const int n = rank();
  AffineWeylElement z;
  z.w = x.w.compose(y.w, n);
  z.w_inv = y.w_inv.compose(x.w_inv, n);
  const Coeffs moved = act_on_coweight(x.w, y.lambda);
  for (int i = 0; i < n; ++i) z.lambda[i] = x.lambda[i] + moved[i];
  return z;
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  AffineWeylElement z;
  z.w = x.w_inv;
  z.w_inv = x.w;
  const Coeffs moved = act_on_coweight(x.w_inv, x.lambda);
  for (int i = 0; i < rank(); ++i) z.lambda[i] = -moved[i];
  return z;
}

AffineWeylElement AffineWeylGroup::left_multiply_simple(int i, const AffineWeylElement& x) const {
  return multiply(simple_reflection(i), x);
}

int AffineWeylGroup::length(const AffineWeylElement& x) const {
  int total = 0;
  for (const Root& g : rs_->roots()) {
    const Coeffs wg = apply_finite(x.w, g.coeffs);
    const int c = rs_->pairing_with_coweight(wg, x.lambda);
    const int n_min = g.is_positive() ? 0 : 1;
    const bool wg_negative = Root{wg}.is_negative();
    total += std::max(0, c - n_min);
    if (wg_negative && c >= n_min) ++total;
  }
  return total;
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, int i) const {
  return act(x, simple_root(i)).is_negative();
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& x, int i) const {
  return act_inverse(x, simple_root(i)).is_negative();
}

std::vector<int> AffineWeylGroup::right_descents(const AffineWeylElement& x) const {
  std::vector<int> out;
  for (int i = 0; i <= rank(); ++i)
    if (is_right_descent(x, i)) out.push_back(i);
  return out;
}

std::vector<int> AffineWeylGroup::left_descents(const AffineWeylElement& x) const {
  std::vector<int> out;
  for (int i = 0; i <= rank(); ++i)
    if (is_left_descent(x, i)) out.push_back(i);
  return out;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  ReducedWord word;
  AffineWeylElement cur = x;
  while (!is_identity(cur)) {
    int i = 0;
    while (i <= rank() && !is_left_descent(cur, i)) ++i;
    if (i > rank()) throw std::logic_error("non-identity element without descents");
    word.push_back(i);
    cur = left_multiply_simple(i, cur);
  }
  return word;
}

AffineWeylElement AffineWeylGroup::evaluate(const ReducedWord& word) const {
  AffineWeylElement x = identity();
  for (int i : word) x = multiply(x, simple_reflection(i));
  return x;
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& u0, const AffineWeylElement& w0) const {
  AffineWeylElement u = u0;
  AffineWeylElement w = w0;
  int lu = length(u);
  int lw = length(w);
  while (true) {
    if (lu > lw) return false;
    if (lu == lw) return u == w;
    if (lu == 0) return true;
    int i = 0;
    while (!is_left_descent(w, i)) ++i;
    if (is_left_descent(u, i)) {
      u = left_multiply_simple(i, u);
      --lu;
    }
    w = left_multiply_simple(i, w);
    --lw;
  }
}

bool AffineWeylGroup::bruhat_leq_oracle(const AffineWeylElement& u, const AffineWeylElement& w) const {
  const ReducedWord word = reduced_word(w);
  if (word.size() > 20) throw std::invalid_argument("bruhat_leq_oracle: length cap (20) exceeded");
  // Depth-first over all subwords, carrying the prefix product.
  std::function<bool(std::size_t, const AffineWeylElement&)> dfs = [&](std::size_t pos,
                                                                       const AffineWeylElement& prefix) {
    if (pos == word.size()) return prefix == u;
    if (dfs(pos + 1, prefix)) return true;
    return dfs(pos + 1, multiply(prefix, simple_reflection(word[pos])));
  };
  return dfs(0, identity());
}

std::vector<AffineRoot> AffineWeylGroup::negative_inversions(const AffineWeylElement& x) const {
  std::vector<AffineRoot> out;
  for (const Root& g : rs_->roots()) {
    const Coeffs wg = apply_finite(x.w, g.coeffs);
    const int c = rs_->pairing_with_coweight(wg, x.lambda);
    const int n_max = g.is_positive() ? -1 : 0;
    for (int n = c + 1; n <= n_max; ++n) out.push_back({g, n});
    if (Root{wg}.is_positive() && c <= n_max) out.push_back({g, c});
  }
  std::sort(out.begin(), out.end(), AffineLess{});
  return out;
}

bool AffineWeylGroup::alcove_image_check(const AffineWeylElement& x) const {
  const int n = rank();
  const Coeffs& marks = rs_->marks();
  // Points of the coroot space are written through p_j = <alpha_j, v>.
  std::vector<std::vector<Rational>> vertices;
  vertices.emplace_back(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> v(n, Rational(0));
    v[i] = Rational(1, marks[i]);
    vertices.push_back(std::move(v));
  }
  for (const auto& p : vertices) {
    // x^{-1}(v) = w^{-1}(v - lambda), so <alpha_j, x^{-1} v> = <w alpha_j, v> - <w alpha_j, lambda>.
    Rational theta_value(0);
    for (int j = 0; j < n; ++j) {
      const Coeffs& wa = x.w.cols[j];
      Rational value(-rs_->pairing_with_coweight(wa, x.lambda));
      for (int k = 0; k < n; ++k) value += p[k] * wa[k];
      if (value < 0) return false;
      theta_value += value * marks[j];
    }
    if (theta_value > 2) return false;
  }
  return true;
}

std::vector<std::vector<int>> AffineWeylGroup::affine_lattice_matrix(const AffineWeylElement& x) const {
  const int n = rank();
  std::vector<std::vector<int>> m(n + 1, std::vector<int>(n + 1, 0));
  for (int j = 0; j < n; ++j) {
    const Coeffs& wa = x.w.cols[j];
    for (int i = 0; i < n; ++i) m[i][j] = wa[i];
    m[n][j] = -rs_->pairing_with_coweight(wa, x.lambda);
  }
  m[n][n] = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Text and JSON

std::string format_affine_root(const RootSystem& rs, const AffineRoot& a) {
  std::string s = format_root(rs, a.finite);
  if (a.level != 0) s += (a.level > 0 ? "+" : "-") + std::to_string(std::abs(a.level)) + "d";
  return s;
}

AffineRoot parse_affine_root(const RootSystem& rs, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  AffineRoot a;
  if (!s.empty() && s.back() == 'd') {
    const auto j = s.find_last_of("+-");
    if (j == std::string::npos || j == 0) throw std::invalid_argument("malformed affine root '" + s + "'");
    const std::string k = s.substr(j + 1, s.size() - j - 2);
    int level = 1;
    if (!k.empty()) {
      if (!std::all_of(k.begin(), k.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("malformed level in '" + s + "'");
      level = std::stoi(k);
    }
    a.level = s[j] == '-' ? -level : level;
    s.resize(j);
  }
  a.finite = parse_root(rs, s);
  return a;
}

ReducedWord parse_word(std::string_view text, int rank) {
  ReducedWord word;
  std::string cleaned(text);
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream is(cleaned);
  std::string tok;
  while (is >> tok) {
    if (tok == "e") continue;
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 's' || digits[0] == 'S')) digits.erase(0, 1);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw std::invalid_argument("malformed word token '" + tok + "'");
    const int i = std::stoi(digits);
    if (i < 0 || i > rank) throw std::invalid_argument("word letter out of range: " + tok);
    word.push_back(i);
  }
  return word;
}

std::string format_word(const ReducedWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(w[k]);
  }
  return s;
}

std::string format_word_tokens(const ReducedWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += "s" + std::to_string(w[k]);
  }
  return s;
}

std::string element_to_json(const AffineWeylGroup& g, const AffineWeylElement& x) {
  const int n = g.rank();
  nlohmann::ordered_json j;
  auto cols = nlohmann::json::array();
  for (int c = 0; c < n; ++c) cols.push_back(std::vector<int>(x.w.cols[c].begin(), x.w.cols[c].begin() + n));
  j["w"] = cols;
  j["lambda"] = std::vector<int>(x.lambda.begin(), x.lambda.begin() + n);
  return j.dump();
}

AffineWeylElement element_from_json(const AffineWeylGroup& g, std::string_view text) {
  const int n = g.rank();
  const RootSystem& rs = g.root_system();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("element JSON: ") + e.what());
  }
  if (!j.contains("w") || !j.contains("lambda")) throw std::invalid_argument("element JSON needs 'w' and 'lambda'");
  const auto cols = j["w"].get<std::vector<std::vector<int>>>();
  const auto lambda = j["lambda"].get<std::vector<int>>();
  if (static_cast<int>(cols.size()) != n || static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("element JSON has wrong dimensions");
  AffineWeylElement x;
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(cols[c].size()) != n) throw std::invalid_argument("element JSON has wrong dimensions");
    for (int r = 0; r < n; ++r) {
      x.w.cols[c][r] = cols[c][r];
      m[r][c] = cols[c][r];
    }
    x.lambda[c] = lambda[c];
  }
  const auto inv = invert(m);
  if (!inv) throw std::invalid_argument("finite part is singular");
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      if ((*inv)[r][c].denominator() != 1) throw std::invalid_argument("finite part is not unimodular");
      x.w_inv.cols[c][r] = static_cast<int>((*inv)[r][c].numerator());
    }
  for (const Root& rt : rs.roots()) {
    const Coeffs img = x.w.apply(rt.coeffs, n);
    if (!rs.is_root(Root{img})) throw std::invalid_argument("finite part does not permute the roots");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (rs.inner(x.w.cols[a], x.w.cols[b]) != rs.inner(rs.simple_root(a + 1), rs.simple_root(b + 1)))
        throw std::invalid_argument("finite part is not orthogonal");
  return x;
}

}  // namespace abideal
