#pragma once

#include "selflink/linkage.hpp"

namespace selflink {

/// The triple-point example: the ideal (x^2, xy, y^2) in the designated
/// first two variables, with its length-2 resolution matrices.
struct TriplePointData {
  Ideal ideal;
  PolyMatrix a; // 3 x 2 relation matrix
  PolyMatrix b; // 1 x 3 generator row
};

/// Requires a ring with at least 3 variables; the designated pair is the
/// first two.
TriplePointData example33(const RingPtr& ring);

/// True iff B * A = 0 identically and the ideal of 2x2 minors of A equals
/// I. Shapes must be 3x2 and 1x3.
bool hilbert_burch_check(const PolyMatrix& a, const PolyMatrix& b, const Ideal& ideal);

/// Classification of self-linkages of (x,y)^2: case i is f = (linear)^2,
/// case ii is f of rank 2; both must verify as self-linkages.
enum class Classify33Case { case_i, case_ii, rejected };

struct Classify33Result {
  Classify33Case result = Classify33Case::rejected;
  int rank = 0;       // rank of the binary quadric f (0 for rejected inputs)
  std::string detail; // failing check, for rejections
};

/// f, g must involve only the designated pair (first two variables).
Classify33Result classify33(const Polynomial& f, const Polynomial& g);

/// Canonical square/cube roots: exhaustive over GF(p), exact perfect-power
/// tests over QQ. The returned root is the smallest representative (GF) or
/// the non-negative / sign-preserving one (QQ).
std::optional<Coeff> sqrt_in_field(const CoefficientField& field, const Coeff& a);
std::optional<Coeff> cbrt_in_field(const CoefficientField& field, const Coeff& a);

enum class ContactBranch { l0_nonzero, l_zero, l0_zero_l1_nonzero };

/// A solution of y^3 + L x^2 = eta^3 + M xi^2 in linear forms xi, eta, M
/// with x,xi and xi,eta linearly independent. `via_sweep` marks solutions
/// found by the complete direction sweep rather than the closed-form
/// branch; `quartic_root` is set by the third branch's closed form.
struct ContactSolution {
  RingPtr ring; // k[x, y]
  Polynomial l;
  ContactBranch branch = ContactBranch::l_zero;
  bool via_sweep = false;
  std::optional<Coeff> quartic_root;
  Polynomial xi, eta, m_form;
  bool verified = false;
};

/// Solves the cube-contact identity for L = l0*x + l1*y. Closed-form
/// branches first; over a prime field a complete deterministic sweep of
/// directions backs them up, so failure means no solution exists. Over QQ
/// a missing root raises NoRootInField. Characteristic 3 is unsupported.
ContactSolution cube_contact(const CoefficientField& field, const Coeff& l0, const Coeff& l1);

/// The end-to-end non-uniqueness demonstration: f = x^2, g = y^3,
/// g_hat = g + L f, h = xi^2 in P^2.
struct Demo33Report {
  RingPtr ring; // k[x, y, z]
  Polynomial l, f, g, g_hat, h, xi, eta;
  bool selflinked_fg = false;         // C self-linked through (f, g)
  bool selflinked_hghat = false;      // C self-linked through (h, g_hat)
  bool hghat_is_xi2_eta3 = false;     // (h, g_hat) = (xi^2, eta^3)
  bool linkage_ideals_differ = false; // (f, g) != (h, g_hat)
  SelfLinkCertificate cert_fg, cert_hghat;
  bool verdict = false;
  // Not generically Gorenstein is a structural property of (x,y)^2 recorded
  // here as documentation; it is not computed.
  std::string gorenstein_note;
};

/// Requires L != 0 (the final inequality degenerates otherwise) and a
/// solvable contact identity; propagates NoRootInField.
Demo33Report demo33(const CoefficientField& field, const Coeff& l0, const Coeff& l1);

} // namespace selflink
