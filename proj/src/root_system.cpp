#include "abideal/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "abideal/exact_linalg.hpp"
#include "text_util.hpp"

namespace abideal {

int Root::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c <= 0; });
}

Root Root::operator-() const { return scaled(-1); }

Root Root::operator+(const Root& other) const {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.coeffs[i] = coeffs[i] + other.coeffs[i];
  return r;
}

Root Root::operator-(const Root& other) const {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.coeffs[i] = coeffs[i] - other.coeffs[i];
  return r;
}

Root Root::scaled(int k) const {
  Root r;
  for (int i = 0; i < kMaxRank; ++i) r.coeffs[i] = k * coeffs[i];
  return r;
}

std::strong_ordering canonical_compare(const Root& a, const Root& b) {
  if (auto c = a.height() <=> b.height(); c != 0) return c;
  // Larger leading coefficients come first.
  return b.coeffs <=> a.coeffs;
}

std::uint64_t pack_coeffs(const Coeffs& c) {
  std::uint64_t key = 0;
  for (int i = 0; i < kMaxRank; ++i)
    key |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(c[i] + 128)) << (8 * i);
  return key;
}

CartanType parse_cartan_type(std::string_view s) {
  if (s.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(s[0]))) {
      case 'A': return CartanType::A;
      case 'B': return CartanType::B;
      case 'C': return CartanType::C;
      case 'D': return CartanType::D;
      case 'E': return CartanType::E;
      case 'F': return CartanType::F;
      case 'G': return CartanType::G;
      default: break;
    }
  }
  throw std::invalid_argument("unknown Cartan type '" + std::string(s) + "'");
}

char type_letter(CartanType t) { return static_cast<char>(t); }

CartanDatum CartanDatum::make(CartanType type, int rank) {
  const auto bad = [&] {
    return std::invalid_argument("invalid Cartan type " + std::string(1, type_letter(type)) +
                                 std::to_string(rank));
  };
  if (rank < 1 || rank > kMaxRank) throw bad();
  switch (type) {
    case CartanType::A: break;
    case CartanType::B:
    case CartanType::C:
      if (rank < 2) throw bad();
      break;
    case CartanType::D:
      if (rank < 3) throw bad();
      break;
    case CartanType::E:
      if (rank < 6) throw bad();
      break;
    case CartanType::F:
      if (rank != 4) throw bad();
      break;
    case CartanType::G:
      if (rank != 2) throw bad();
      break;
  }

  std::vector<int> d(rank, 1);
  std::vector<std::pair<int, int>> edges;  // 0-based
  switch (type) {
    case CartanType::A:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case CartanType::B:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      for (int i = 0; i + 1 < rank; ++i) d[i] = 2;
      break;
    case CartanType::C:
      for (int i = 0; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      d[rank - 1] = 2;
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < rank; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(rank - 3, rank - 1);
      break;
    case CartanType::E:
      edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < rank; ++i) edges.emplace_back(i, i + 1);
      break;
    case CartanType::F:
      edges = {{0, 1}, {1, 2}, {2, 3}};
      d = {2, 2, 1, 1};
      break;
    case CartanType::G:
      edges = {{0, 1}};
      d = {1, 3};
      break;
  }

  std::vector<std::vector<int>> gram(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) gram[i][i] = 2 * d[i];
  for (auto [i, j] : edges) gram[i][j] = gram[j][i] = -std::max(d[i], d[j]);

  CartanDatum datum;
  datum.type = type;
  datum.rank = rank;
  datum.symmetrizer = d;
  datum.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) datum.cartan[i][j] = gram[i][j] / d[i];
  return datum;
}

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  const int n = datum_.rank;
  if (n < 1 || n > kMaxRank || static_cast<int>(datum_.cartan.size()) != n ||
      static_cast<int>(datum_.symmetrizer.size()) != n)
    throw std::invalid_argument("malformed Cartan datum");
  gram_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    if (datum_.cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && datum_.cartan[i][j] > 0)
        throw std::invalid_argument("Cartan off-diagonal entries must be <= 0");
      gram_[i][j] = datum_.cartan[i][j] * datum_.symmetrizer[i];
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (gram_[i][j] != gram_[j][i]) throw std::invalid_argument("Cartan matrix not symmetrizable");

  // Closure of the simple roots under simple reflections.
  std::unordered_map<std::uint64_t, Root> seen;
  std::deque<Root> queue;
  for (int i = 1; i <= n; ++i) {
    Root r = simple_root(i);
    seen.emplace(pack_coeffs(r.coeffs), r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int k = 0; k < n; ++k) p += r.coeffs[k] * gram_[k][i];
      p /= datum_.symmetrizer[i];
      Root s = r;
      s.coeffs[i] -= p;
      if (seen.emplace(pack_coeffs(s.coeffs), s).second) queue.push_back(s);
    }
  }
  for (auto& [key, r] : seen) roots_.push_back(r);
  std::sort(roots_.begin(), roots_.end(), CanonicalLess{});
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const Root& r = roots_[i];
    if (!r.is_positive() && !r.is_negative()) throw std::logic_error("mixed-sign root generated");
    index_.emplace(pack_coeffs(r.coeffs), static_cast<int>(i));
    if (r.is_positive()) positive_.push_back(r);
  }
  npos_ = static_cast<int>(roots_.size() - positive_.size());
  highest_ = positive_.back();
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank()) throw std::out_of_range("simple root index out of range");
  Root r;
  r.coeffs[i - 1] = 1;
  return r;
}

int RootSystem::index_of(const Coeffs& c) const {
  auto it = index_.find(pack_coeffs(c));
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::index_of(const Root& r) const { return index_of(r.coeffs); }

int RootSystem::positive_index_of(const Root& r) const {
  const int i = index_of(r);
  return i < npos_ ? -1 : i - npos_;
}

int RootSystem::inner(const Coeffs& beta, const Coeffs& gamma) const {
  const int n = rank();
  int s = 0;
  for (int i = 0; i < n; ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < n; ++j) s += beta[i] * gram_[i][j] * gamma[j];
  }
  return s;
}

int RootSystem::pairing_unchecked(const Coeffs& beta, const Coeffs& gamma) const {
  return 2 * inner(beta, gamma) / inner(gamma, gamma);
}

int RootSystem::pairing(const Root& beta, const Root& gamma) const {
  if (!is_root(beta) || !is_root(gamma)) throw std::invalid_argument("pairing: non-root input");
  return pairing_unchecked(beta.coeffs, gamma.coeffs);
}

int RootSystem::pairing_with_coweight(const Coeffs& beta, const Coeffs& lambda) const {
  const int n = rank();
  int s = 0;
  for (int j = 0; j < n; ++j) {
    if (lambda[j] == 0) continue;
    int ip = 0;
    for (int i = 0; i < n; ++i) ip += beta[i] * gram_[i][j];
    s += lambda[j] * (ip / datum_.symmetrizer[j]);
  }
  return s;
}

Root RootSystem::reflect(const Root& gamma, const Root& beta) const {
  return beta - gamma.scaled(pairing(beta, gamma));
}

bool RootSystem::dominance_leq(const Root& a, const Root& b) const {
  for (int i = 0; i < kMaxRank; ++i)
    if (b.coeffs[i] < a.coeffs[i]) return false;
  return true;
}

Coeffs RootSystem::coroot(const Root& gamma) const {
  const int dg = squared_length(gamma) / 2;
  Coeffs out{};
  for (int i = 0; i < rank(); ++i) {
    const int num = gamma.coeffs[i] * datum_.symmetrizer[i];
    if (num % dg != 0) throw std::logic_error("non-integral coroot");
    out[i] = num / dg;
  }
  return out;
}

Coeffs RootSystem::root_to_coroot_coords(const Coeffs& v) const {
  Coeffs out{};
  for (int i = 0; i < rank(); ++i) out[i] = v[i] * datum_.symmetrizer[i];
  return out;
}

std::string RootSystem::name() const { return std::string(1, type_letter(type())) + std::to_string(rank()); }

// ---------------------------------------------------------------------------
// Text forms

bool has_epsilon_coordinates(CartanType t) {
  return t == CartanType::A || t == CartanType::B || t == CartanType::C || t == CartanType::D;
}

int epsilon_dimension(const RootSystem& rs) {
  if (!has_epsilon_coordinates(rs.type()))
    throw std::invalid_argument("epsilon coordinates only for classical types");
  return rs.type() == CartanType::A ? rs.rank() + 1 : rs.rank();
}

namespace {

std::vector<int> simple_root_epsilon(const RootSystem& rs, int i) {
  const int n = rs.rank();
  std::vector<int> e(epsilon_dimension(rs), 0);
  if (i < n || rs.type() == CartanType::A) {
    e[i - 1] = 1;
    e[i] = -1;
    return e;
  }
  switch (rs.type()) {
    case CartanType::B: e[n - 1] = 1; break;
    case CartanType::C: e[n - 1] = 2; break;
    case CartanType::D:
      e[n - 2] = 1;
      e[n - 1] = 1;
      break;
    default: break;
  }
  return e;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<int> to_epsilon(const RootSystem& rs, const Root& r) {
  std::vector<int> e(epsilon_dimension(rs), 0);
  for (int i = 1; i <= rs.rank(); ++i) {
    if (r.coeffs[i - 1] == 0) continue;
    const auto s = simple_root_epsilon(rs, i);
    for (std::size_t k = 0; k < e.size(); ++k) e[k] += r.coeffs[i - 1] * s[k];
  }
  return e;
}

Root from_epsilon(const RootSystem& rs, const std::vector<int>& eps) {
  const int dim = epsilon_dimension(rs);
  if (static_cast<int>(eps.size()) != dim) throw std::invalid_argument("epsilon vector has wrong dimension");
  RationalMatrix m(dim, std::vector<Rational>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i) {
    const auto s = simple_root_epsilon(rs, i);
    for (int k = 0; k < dim; ++k) m[k][i - 1] = s[k];
  }
  std::vector<Rational> rhs(eps.begin(), eps.end());
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) throw std::invalid_argument("epsilon vector not in the root lattice span");
  Root r;
  for (int i = 0; i < rs.rank(); ++i) {
    if ((*sol)[i].denominator() != 1) throw std::invalid_argument("epsilon vector not in the root lattice");
    r.coeffs[i] = static_cast<int>((*sol)[i].numerator());
  }
  if (!rs.is_root(r)) throw std::invalid_argument("epsilon vector is not a root");
  return r;
}

std::string format_epsilon(const RootSystem& rs, const Root& r) {
  const auto e = to_epsilon(rs, r);
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (e[k] < 0) os << '-';
    else if (!first) os << '+';
    if (std::abs(e[k]) != 1) os << std::abs(e[k]);
    os << 'e' << (k + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_root(const RootSystem& rs, const Root& r) {
  std::ostringstream os;
  for (int i = 0; i < rs.rank(); ++i) {
    if (i) os << ',';
    os << r.coeffs[i];
  }
  return os.str();
}

namespace detail {

// Parses a signed sum of epsilon terms such as "e1+e3" or "-2e4".
std::vector<int> parse_epsilon_terms(std::string_view text, int dim) {
  std::vector<int> e(dim, 0);
  std::size_t pos = 0;
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty epsilon expression");
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    int coef = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coef = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) coef = coef * 10 + (s[pos++] - '0');
    }
    if (pos >= s.size() || s[pos] != 'e') throw std::invalid_argument("malformed epsilon term in '" + s + "'");
    ++pos;
    int idx = 0;
    bool any = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      idx = idx * 10 + (s[pos++] - '0');
      any = true;
    }
    if (!any || idx < 1 || idx > dim) throw std::invalid_argument("epsilon index out of range in '" + s + "'");
    e[idx - 1] += sign * coef;
  }
  return e;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cur;
  const std::string s = trim(text);
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) {
    const std::string t = trim(cur);
    if (t.empty()) throw std::invalid_argument("malformed integer list '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer '" + t + "'");
    }
    if (used != t.size()) throw std::invalid_argument("malformed integer '" + t + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

Root parse_root(const RootSystem& rs, std::string_view text) {
  Root r;
  if (text.find('e') != std::string_view::npos) {
    r = from_epsilon(rs, detail::parse_epsilon_terms(text, epsilon_dimension(rs)));
  } else {
    const auto v = detail::parse_int_list(text);
    if (static_cast<int>(v.size()) != rs.rank())
      throw std::invalid_argument("root '" + std::string(text) + "' has wrong number of coefficients");
    for (int i = 0; i < rs.rank(); ++i) r.coeffs[i] = v[i];
  }
  if (!rs.is_root(r)) throw std::invalid_argument("'" + std::string(text) + "' is not a root of " + rs.name());
  return r;
}

}  // namespace abideal
