#include "selflink/contact.hpp"

namespace selflink {

TriplePointData example33(const RingPtr& ring) {
  if (ring->nvars() < 3)
    throw InputError("the triple-point example needs an ambient P^n with n >= 2");
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  Ideal ideal(ring, {x * x, x * y, y * y});
  PolyMatrix a = PolyMatrix::from_rows(ring, {{y, Polynomial::zero(ring)},
                                              {-x, y},
                                              {Polynomial::zero(ring), -x}});
  PolyMatrix b(ring, 1, 3);
  b.set(0, 0, x * x);
  b.set(0, 1, x * y);
  b.set(0, 2, y * y);
  return TriplePointData{std::move(ideal), std::move(a), std::move(b)};
}

bool hilbert_burch_check(const PolyMatrix& a, const PolyMatrix& b, const Ideal& ideal) {
  if (a.rows() != 3 || a.cols() != 2 || b.rows() != 1 || b.cols() != 3)
    throw InputError("hilbert_burch_check expects A of shape 3x2 and B of shape 1x3");
  if (!b.mul(a).is_zero()) return false;
  const RingPtr& ring = a.ring();
  // 2x2 minors of A (signs irrelevant for the generated ideal)
  std::vector<Polynomial> minors;
  for (std::size_t skip = 0; skip < 3; ++skip) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != skip) rows.push_back(i);
    minors.push_back(a.at(rows[0], 0) * a.at(rows[1], 1) - a.at(rows[0], 1) * a.at(rows[1], 0));
  }
  return ideal_equal(Ideal(ring, std::move(minors)), ideal);
}

Classify33Result classify33(const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = f.ring();
  require_same_ring(ring, g.ring());
  if (f.is_zero() || g.is_zero()) throw InputError("classify33 needs nonzero f, g");
  if (!f.uses_only_first(2) || !g.uses_only_first(2))
    throw InputError("classify33: f, g must involve only the designated pair of variables");

  Classify33Result res;
  if (!(f.is_homogeneous() && f.degree() == 2)) {
    res.detail = "f must be a binary quadric (degree rigidity forces d = 2)";
    return res;
  }
  if (!(g.is_homogeneous() && g.degree() == 3)) {
    res.detail = "g must be a binary cubic (degree rigidity forces m = 3)";
    return res;
  }

  // rank of f = a x^2 + b xy + c y^2 via the discriminant 4ac - b^2
  const auto& field = ring->field();
  auto coeff_of = [&](unsigned ex, unsigned ey) {
    for (const auto& t : f.terms())
      if (t.mono[0] == ex && t.mono[1] == ey) return t.coeff;
    return field.zero();
  };
  const Coeff a = coeff_of(2, 0), b = coeff_of(1, 1), c = coeff_of(0, 2);
  const Coeff disc =
      field.sub(field.mul(field.from_long(4), field.mul(a, c)), field.mul(b, b));
  res.rank = CoefficientField::is_zero(disc) ? 1 : 2;

  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  Ideal c_ideal(ring, {x * x, x * y, y * y});
  SelfLinkCertificate cert = verify_selflinked(c_ideal, f, g);
  if (!cert.verdict) {
    if (!cert.regular_sequence)
      res.detail = "(f,g) must be a regular sequence";
    else if (!cert.contains)
      res.detail = "f and g must lie in the ideal of C";
    else
      res.detail = "(f,g) : I_C differs from I_C";
    return res;
  }
  res.result = res.rank == 1 ? Classify33Case::case_i : Classify33Case::case_ii;
  return res;
}

// ---------------------------------------------------------------------------
// roots

std::optional<Coeff> sqrt_in_field(const CoefficientField& field, const Coeff& a) {
  const Coeff v = field.canon(a);
  if (CoefficientField::is_zero(v)) return field.zero();
  if (field.is_prime_field()) {
    for (unsigned long r = 1; r <= field.p() / 2; ++r) {
      Coeff cand = field.from_long(static_cast<long>(r));
      if (field.mul(cand, cand) == v) return cand;
    }
    return std::nullopt;
  }
  if (sgn(v) < 0) return std::nullopt;
  mpz_class num = v.get_num(), den = v.get_den(), rn, rd;
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Coeff(rn, rd);
}

std::optional<Coeff> cbrt_in_field(const CoefficientField& field, const Coeff& a) {
  const Coeff v = field.canon(a);
  if (CoefficientField::is_zero(v)) return field.zero();
  if (field.is_prime_field()) {
    for (unsigned long r = 1; r < field.p(); ++r) {
      Coeff cand = field.from_long(static_cast<long>(r));
      if (field.mul(cand, field.mul(cand, cand)) == v) return cand;
    }
    return std::nullopt;
  }
  mpz_class num = v.get_num(), den = v.get_den(), rn, rd;
  const bool negative = num < 0;
  mpz_class absnum = negative ? mpz_class(-num) : num;
  if (mpz_root(rn.get_mpz_t(), absnum.get_mpz_t(), 3) == 0) return std::nullopt;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 3) == 0) return std::nullopt;
  if (negative) rn = -rn;
  return Coeff(rn, rd);
}

// ---------------------------------------------------------------------------
// cube contact

namespace {

bool independent(const Polynomial& u, const Polynomial& v) {
  // 2x2 determinant of the (x, y) coefficients of two linear forms
  const auto& field = u.ring()->field();
  auto coeff_of = [&](const Polynomial& p, std::size_t var) {
    for (const auto& t : p.terms())
      if (t.mono[var] == 1 && t.mono.degree() == 1) return t.coeff;
    return field.zero();
  };
  const Coeff det = field.sub(field.mul(coeff_of(u, 0), coeff_of(v, 1)),
                              field.mul(coeff_of(u, 1), coeff_of(v, 0)));
  return !CoefficientField::is_zero(det);
}

struct BranchOutcome {
  bool found = false;
  Polynomial xi, eta, m_form;
  std::optional<Coeff> quartic_root;
  std::string missing_root; // when !found
  BranchOutcome(const RingPtr& ring)
      : xi(Polynomial::zero(ring)), eta(Polynomial::zero(ring)), m_form(Polynomial::zero(ring)) {}
};

// L0 != 0: eta = R' (x + L1/(3 L0) y), xi = y,
// M = -L1^2/(3 L0) x + (1 - L1^3/(27 L0^2)) y, with R'^3 = L0.
BranchOutcome branch_l0_nonzero(const RingPtr& ring, const Coeff& l0, const Coeff& l1) {
  BranchOutcome out(ring);
  const auto& field = ring->field();
  auto root = cbrt_in_field(field, l0);
  if (!root) {
    out.missing_root = "cube root of L0 = " + CoefficientField::str(l0);
    return out;
  }
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const Coeff inv3l0 = field.inv(field.mul(field.from_long(3), l0));
  out.eta = (*root) * (x + field.mul(l1, inv3l0) * y);
  out.xi = y;
  const Coeff l1sq = field.mul(l1, l1);
  const Coeff mx = field.neg(field.mul(l1sq, inv3l0));
  const Coeff inv27l0sq =
      field.inv(field.mul(field.from_long(27), field.mul(l0, l0)));
  const Coeff my = field.sub(field.one(), field.mul(field.mul(l1sq, l1), inv27l0sq));
  out.m_form = mx * x + my * y;
  out.found = true;
  return out;
}

// L0 = 0, L1 != 0: a with (3a^2 - L1)^2 = 12 a^4 via a^2 = L1 / (3 -+ 2 sqrt3),
// then xi = R'' (6a y + (3a^2 - L1) x) with R''^2 = (12 a)^{-1},
// eta = y + a x, M = -x. Both signs and both square roots are tried in a
// fixed order; the first full success wins.
BranchOutcome branch_quartic(const RingPtr& ring, const Coeff& l1) {
  BranchOutcome out(ring);
  const auto& field = ring->field();
  auto sqrt3 = sqrt_in_field(field, field.from_long(3));
  if (!sqrt3) {
    out.missing_root = "square root of 3";
    return out;
  }
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const Coeff three = field.from_long(3);
  const Coeff two = field.from_long(2);
  for (int sign = 0; sign < 2; ++sign) {
    const Coeff s = sign == 0 ? *sqrt3 : field.neg(*sqrt3);
    const Coeff denom = field.sub(three, field.mul(two, s));
    if (CoefficientField::is_zero(denom)) continue;
    const Coeff a_squared = field.div(l1, denom);
    if (CoefficientField::is_zero(a_squared)) continue;
    auto a_root = sqrt_in_field(field, a_squared);
    if (!a_root) continue;
    for (int which = 0; which < 2; ++which) {
      const Coeff a = which == 0 ? *a_root : field.neg(*a_root);
      const Coeff inv12a = field.inv(field.mul(field.from_long(12), a));
      auto r2 = sqrt_in_field(field, inv12a);
      if (!r2) continue;
      const Coeff six_a = field.mul(field.from_long(6), a);
      const Coeff xcoef = field.sub(field.mul(three, field.mul(a, a)), l1);
      out.xi = (*r2) * (six_a * y + xcoef * x);
      out.eta = y + a * x;
      out.m_form = -x;
      out.quartic_root = a;
      out.found = true;
      return out;
    }
  }
  out.missing_root = "square root for the contact quartic (a or (12a)^{-1/2})";
  return out;
}

// Complete decision procedure over a prime field: a solution with the
// required independences exists iff some direction v = (1, w) has
// c(v) = w^3 + L1 w + L0 a nonzero cube u^3; then
// eta = (c_x(v) x + c_y(v) y) / (3 u^2) and xi^2 divides c - eta^3 exactly.
BranchOutcome direction_sweep(const RingPtr& ring, const Polynomial& c) {
  BranchOutcome out(ring);
  const auto& field = ring->field();
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const Polynomial cx = c.derivative(0);
  const Polynomial cy = c.derivative(1);
  for (unsigned long w = 0; w < field.p(); ++w) {
    const Coeff wv = field.from_long(static_cast<long>(w));
    const std::array<Coeff, 2> v{field.one(), wv};
    const Coeff value = c.evaluate(v);
    if (CoefficientField::is_zero(value)) continue;
    auto u = cbrt_in_field(field, value);
    if (!u) continue;
    const Coeff scale = field.inv(field.mul(field.from_long(3), field.mul(*u, *u)));
    out.eta = scale * (cx.evaluate(v) * x + cy.evaluate(v) * y);
    out.xi = w == 0 ? y : x - field.inv(wv) * y; // monic form vanishing at (1, w)
    auto q = (c - out.eta.pow(3)).try_divide_exact(out.xi * out.xi);
    if (!q) throw Error("internal: direction sweep produced a non-divisible remainder");
    out.m_form = std::move(*q);
    out.found = true;
    return out;
  }
  out.missing_root = "no direction with a nonzero cube value (identity unsolvable)";
  return out;
}

} // namespace

ContactSolution cube_contact(const CoefficientField& field, const Coeff& l0_in,
                             const Coeff& l1_in) {
  if (field.is_prime_field() && field.p() == 3)
    throw UnsupportedError("cube contact is not available in characteristic 3");

  RingPtr ring = PolyRing::make(field, {"x", "y"});
  const Coeff l0 = field.canon(l0_in);
  const Coeff l1 = field.canon(l1_in);
  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  const Polynomial l = l0 * x + l1 * y;
  const Polynomial c = y.pow(3) + l * x * x;

  ContactSolution sol;
  sol.ring = ring;
  sol.l = l;
  sol.xi = Polynomial::zero(ring);
  sol.eta = Polynomial::zero(ring);
  sol.m_form = Polynomial::zero(ring);

  BranchOutcome out(ring);
  if (CoefficientField::is_zero(l0) && CoefficientField::is_zero(l1)) {
    sol.branch = ContactBranch::l_zero;
    out.eta = y;
    out.xi = x + y; // any form independent of both x and eta works; fixed
    out.m_form = Polynomial::zero(ring);
    out.found = true;
  } else if (!CoefficientField::is_zero(l0)) {
    sol.branch = ContactBranch::l0_nonzero;
    out = branch_l0_nonzero(ring, l0, l1);
  } else {
    sol.branch = ContactBranch::l0_zero_l1_nonzero;
    out = branch_quartic(ring, l1);
  }

  if (!out.found && field.is_prime_field()) {
    out = direction_sweep(ring, c);
    sol.via_sweep = out.found;
  }
  if (!out.found) throw NoRootInField(out.missing_root);

  sol.xi = out.xi;
  sol.eta = out.eta;
  sol.m_form = out.m_form;
  sol.quartic_root = out.quartic_root;

  const Polynomial residual = c - sol.eta.pow(3) - sol.m_form * sol.xi * sol.xi;
  sol.verified = residual.is_zero() && independent(x, sol.xi) && independent(sol.xi, sol.eta);
  if (!sol.verified)
    throw Error("internal: contact solution failed its symbolic re-verification");
  return sol;
}

// ---------------------------------------------------------------------------
// demo

namespace {

Polynomial widen(const Polynomial& p, const RingPtr& target) {
  // inject k[x,y] into k[x,y,z] by index
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) m[i] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

} // namespace

Demo33Report demo33(const CoefficientField& field, const Coeff& l0, const Coeff& l1) {
  if (CoefficientField::is_zero(field.canon(l0)) && CoefficientField::is_zero(field.canon(l1)))
    throw InputError("demo33 needs L != 0: with L = 0 the two linkage ideals coincide");

  ContactSolution sol = cube_contact(field, l0, l1);

  RingPtr ring = PolyRing::make(field, {"x", "y", "z"});
  Demo33Report rep;
  rep.ring = ring;
  rep.l = widen(sol.l, ring);
  rep.xi = widen(sol.xi, ring);
  rep.eta = widen(sol.eta, ring);

  const Polynomial x = Polynomial::variable(ring, 0);
  const Polynomial y = Polynomial::variable(ring, 1);
  rep.f = x * x;
  rep.g = y.pow(3);
  rep.g_hat = rep.g + rep.l * rep.f;
  rep.h = rep.xi * rep.xi;

  Ideal c(ring, {x * x, x * y, y * y});
  rep.cert_fg = verify_selflinked(c, rep.f, rep.g);
  rep.selflinked_fg = rep.cert_fg.verdict;
  rep.cert_hghat = verify_selflinked(c, rep.h, rep.g_hat);
  rep.selflinked_hghat = rep.cert_hghat.verdict;

  rep.hghat_is_xi2_eta3 = ideal_equal(Ideal(ring, {rep.h, rep.g_hat}),
                                      Ideal(ring, {rep.xi * rep.xi, rep.eta.pow(3)}));
  rep.linkage_ideals_differ =
      !ideal_equal(Ideal(ring, {rep.f, rep.g}), Ideal(ring, {rep.h, rep.g_hat}));

  rep.verdict = rep.selflinked_fg && rep.selflinked_hghat && rep.hghat_is_xi2_eta3 &&
                rep.linkage_ideals_differ;
  rep.gorenstein_note =
      "C is the triple point (x,y)^2, which is not generically Gorenstein; "
      "recorded as a structural fact, not computed";
  return rep;
}

} // namespace selflink
