#pragma once

#include <vector>

#include "selflink/polynomial.hpp"

namespace selflink {

/// A reduced Groebner basis: monic leads, no lead divides another, tails
/// fully reduced, sorted ascending by leading monomial. Unique for a given
/// (ideal, order), so two bases are equal iff their lists are equal.
class GroebnerBasis {
public:
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  bool is_zero_ideal() const { return basis_.empty(); }
  bool is_unit_ideal() const {
    return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
  }

  bool operator==(const GroebnerBasis& o) const {
    return basis_ == o.basis_;
  }

private:
  friend GroebnerBasis buchberger(const RingPtr&, std::vector<Polynomial>);
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> basis)
      : ring_(std::move(ring)), basis_(std::move(basis)) {}

  RingPtr ring_;
  std::vector<Polynomial> basis_;
};

/// Buchberger's algorithm with the normal pair-selection strategy and the
/// product and chain criteria. Deterministic: permuting the generators
/// yields the identical reduced basis.
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators);

/// Remainder of division by a list of reducers (first applicable reducer
/// wins). No term of the result is divisible by any reducer's lead.
Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& reducers);

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// p is in the ideal iff its normal form vanishes.
bool ideal_member(const Polynomial& p, const GroebnerBasis& g);

} // namespace selflink
