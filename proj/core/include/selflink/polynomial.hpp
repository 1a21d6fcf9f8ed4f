#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "selflink/ring.hpp"

namespace selflink {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// A multivariate polynomial in canonical form: terms sorted descending by
/// the ring's monomial order, no zero coefficients, no duplicate monomials.
/// Two polynomials are equal iff their term lists are equal.
class Polynomial {
public:
  /// Empty state (no ring, zero); only assignment is valid on it.
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, Monomial m, const Coeff& c);

  /// Normalizes an arbitrary term list (sorts, merges, drops zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  /// Parses the polynomial grammar: terms joined by +/-; term =
  /// [coefficient '*'] factor ('*' factor)*; factor = variable ['^' n];
  /// coefficient = integer or a/b. Whitespace insignificant.
  static Polynomial parse(const RingPtr& ring, const std::string& text);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coeff& leading_coeff() const { return leading_term().coeff; }

  /// Total degree (max over terms); -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Coeff constant_value() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scale(const Coeff& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Leading coefficient scaled to 1; zero stays zero.
  Polynomial monic() const;

  /// Exact quotient this/d, or nullopt if d does not divide this exactly.
  std::optional<Polynomial> try_divide_exact(const Polynomial& d) const;

  /// Substitutes images[i] for variable i. All images must share one ring
  /// over the same coefficient field; the result lives in that ring.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Evaluates at a point (one coefficient per variable).
  Coeff evaluate(std::span<const Coeff> point) const;

  /// Partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const;

  /// Uses only variables with indices in [0, k)?
  bool uses_only_first(std::size_t k) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline Polynomial operator*(const Coeff& c, const Polynomial& p) { return p.scale(c); }

} // namespace selflink
