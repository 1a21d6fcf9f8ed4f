#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "selflink/hilbert.hpp"
#include "selflink/matrix.hpp"

namespace selflink {

/// The data of a split symmetric resolution: twists a_1..a_r with the two
/// degrees (d, m), a column lambda (r x 1), a symmetric block alpha (r x r)
/// and a corner gamma (zero unless d = m, where it is a scalar).
struct SymmetricDatum {
  RingPtr ring;
  GradedProfile profile;
  PolyMatrix lambda;
  PolyMatrix alpha;
  Polynomial gamma;
};

/// Machine-checkable verdict for self-linkage of C through the complete
/// intersection (f, g):
///   contains          f, g in I_C
///   regular_sequence  codim (f,g) = 2
///   colon_equal       (f,g) : I_C = I_C
///   square_contained  I_C^2 in (f,g)   (implied by colon_equal; recorded
///                     independently, `consistent` flags a violation)
/// verdict = contains && regular_sequence && colon_equal.
struct SelfLinkCertificate {
  RingPtr ring;
  std::vector<Polynomial> ideal_gens;
  Polynomial f, g;
  int d = 0, m = 0;
  bool swapped = false; // inputs arrived with deg f > deg g and were swapped
  bool contains = false;
  bool regular_sequence = false;
  bool colon_equal = false;
  bool square_contained = false;
  bool verdict = false;
  bool consistent = true;
  std::vector<Polynomial> colon_generators;
};

SelfLinkCertificate verify_selflinked(const Ideal& c, Polynomial f, Polynomial g);

struct ConstructResult {
  Polynomial f, g;
  Ideal ideal;
  SelfLinkCertificate certificate;
};

/// The converse construction: f = det border(gamma, lambda, alpha),
/// g = det alpha, I_C = ideal of maximal minors of (lambda | alpha).
/// Throws InputError for det alpha = 0, codimension != 2 (degenerate
/// datum) or a degree-profile violation.
ConstructResult construct(const SymmetricDatum& datum);

/// f_i * f_j in (f, g) for all maximal minors f_i of (lambda | alpha)?
bool minor_identity_check(const PolyMatrix& lambda, const PolyMatrix& alpha,
                          const Polynomial& f, const Polynomial& g);

/// I_C^2 subset (f, g)?
bool square_containment(const Ideal& c, const Polynomial& f, const Polynomial& g);

/// chi(O_{P^n}(h)) = (h+n)...(h+1) / n!, exact (always an integer).
Coeff euler_char(int n, long h);

enum class ParityStatus { vacuous, holds, fails };

/// The two parity congruences: for n = 1 mod 4 and d+m-n-1 = 2*rho,
///   chi(O(rho)) - chi(O(rho-d)) - chi(O_C(rho)) = 0 mod 2
///   chi(O(rho)) - chi(O(rho-m)) - chi(O_C(rho)) = 0 mod 2
/// with chi(O_C(rho)) read as the Hilbert polynomial value P_C(rho).
struct ParityReport {
  int n = 0, d = 0, m = 0;
  ParityStatus status = ParityStatus::vacuous;
  std::optional<long> rho;
  std::array<int, 2> residues{0, 0};
  Coeff chi_rho, chi_rho_minus_d, chi_rho_minus_m, chi_c_rho;
  bool dm_even = false;
};

ParityReport parity_check(int n, int d, int m, const HilbertData& c_data);

/// Compares two self-linkages of C sharing the generator g of higher
/// degree. Reports whether (f,g) = (h,g) and nothing more: equality can
/// fail for schemes that are not generically Gorenstein. Both linkages
/// must verify, else InputError.
struct CompareReport {
  bool equal = false;
  SelfLinkCertificate first;  // (f, g)
  SelfLinkCertificate second; // (h, g)
};

CompareReport compare_linkages(const Ideal& c, const Polynomial& g, const Polynomial& f,
                               const Polynomial& h);

/// Deterministic pseudo-random datum with dense entries of the prescribed
/// degrees over P^n; resamples until det alpha != 0 and the minor ideal has
/// codimension 2. Throws UnsupportedError for an impossible profile and
/// InputError when the retry budget runs out.
SymmetricDatum random_datum(const CoefficientField& field, int n, std::vector<int> twists,
                            int d, int m, std::uint64_t seed, int max_tries = 64);

} // namespace selflink
