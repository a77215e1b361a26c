#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abideal/involutions.hpp"
#include "abideal/minuscule.hpp"
#include "abideal/report.hpp"

namespace abideal {

/// An abelian ideal of A_{n-1} realized as matrix slots: the root
/// e_i - e_j occupies slot (i, j), 1-based, i < j.
struct MatrixIdealContext {
  int n = 0;
  int q = 0;
  std::vector<std::pair<int, int>> positions;  // highest root first

  long long element_count() const;
};

/// rs must be of type A with rank n - 1. Throws std::invalid_argument when q is
/// not a prime or the element count exceeds 10^7.
MatrixIdealContext make_matrix_context(const RootSystem& rs, const AbelianIdeal& ideal, int q);

/// Orbits of B(F_q) in SL_n acting by conjugation. Elements are encoded in base
/// q over the positions, first position least significant.
struct OrbitPartition {
  std::vector<int> class_of;  // classes numbered by their smallest element
  std::vector<long long> sizes;
  std::vector<long long> representatives;  // smallest element of each class

  std::size_t count() const { return sizes.size(); }
};

OrbitPartition enumerate_orbits(const MatrixIdealContext& ctx);
/// Applying every generator keeps each element inside its class.
bool generator_closed(const MatrixIdealContext& ctx, const OrbitPartition& part);
/// Code of e_S: ones in the slots of S.
long long encode_root_set(const MatrixIdealContext& ctx, const RootSystem& rs, const OrthogonalSet& S);
std::string format_slots(const RootSystem& rs, const OrthogonalSet& S);

/// One finite field: the partition against the orthogonal subsets of the ideal.
struct OracleRun {
  MatrixIdealContext ctx;
  OrbitPartition partition;
  std::vector<OrthogonalSet> sets;  // orthogonal subsets of Psi-hat(w)
  std::vector<int> L;               // L(sigma_S)
  std::vector<long long> set_orbit_size;
  bool separated = false;  // the e_S lie in distinct classes
  bool closed = false;
};

OracleRun run_typea_oracle(const AffineWeylGroup& g, const AbelianIdeal& ideal, int q);

/// d = round(log(|O_q2| / |O_q1|) / log(q2 / q1)) for consecutive runs; one
/// row per set, one column per consecutive pair of fields.
std::vector<std::vector<int>> estimate_dimensions(const std::vector<OracleRun>& runs);

/// Hard assertions: separation, class count >= combinatorial count, closure.
Report check_oracle(const std::vector<OracleRun>& runs);

std::string oracle_report_json(const RootSystem& rs, int ideal_id, const std::vector<OracleRun>& runs);

}  // namespace abideal
