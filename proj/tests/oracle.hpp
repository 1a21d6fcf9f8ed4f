// Test-side oracles, independent of the Groebner path they check:
// graded linear algebra over the coefficient field, and a mod-p brute-force
// search for the cube-contact identity.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "selflink/ideal.hpp"

namespace selflink::oracle {

/// All monomials of total degree d in nvars variables, deterministic order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

/// Row-echelon basis (over the ring's field) of the span of the given
/// degree-d elements of the ideal piece I_d = span{ m * g }.
class Subspace {
public:
  Subspace(RingPtr ring, unsigned degree);

  void add(const Polynomial& p);
  std::size_t dim() const;
  bool contains(const Polynomial& p) const;
  bool subset_of(const Subspace& o) const;
  bool same_as(const Subspace& o) const;

  /// Residual of p after elimination against the row basis (canonical
  /// representative of p modulo the subspace).
  std::vector<Coeff> reduce(const std::vector<Coeff>& vec) const;
  std::vector<Coeff> to_vec(const Polynomial& p) const;

  const std::vector<Monomial>& basis_monomials() const { return monos_; }

private:
  RingPtr ring_;
  std::vector<Monomial> monos_;
  // rows in echelon form: each has a unique leading (pivot) column
  std::vector<std::vector<Coeff>> rows_;
};

/// Degree-d piece of the ideal generated by `gens` (span of monomial
/// multiples).
Subspace graded_piece(const Ideal& ideal, unsigned degree);

/// dim_k (R/I)_d by brute force: #monomials - dim I_d.
std::size_t quotient_dim(const Ideal& ideal, unsigned degree);

/// Degree-d piece of I : J by solving h * f_j in I_{d + deg f_j} for every
/// generator f_j, one linear system over the monomial basis.
Subspace colon_piece(const Ideal& i, const Ideal& j, unsigned degree);

/// Brute-force solvability of y^3 + L x^2 = eta^3 + M xi^2 over GF(p) in
/// independent linear forms, on raw integer coefficient vectors (no shared
/// machinery with the solver). Returns true iff a solution exists.
bool contact_brute_force(std::uint64_t p, std::uint64_t l0, std::uint64_t l1);

} // namespace selflink::oracle
