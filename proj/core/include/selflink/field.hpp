#pragma once

#include <gmpxx.h>

#include <string>

#include "selflink/errors.hpp"

namespace selflink {

/// Exact coefficient value. Rationals use the full mpq range; prime fields
/// store the canonical representative 0..p-1 (denominator 1).
using Coeff = mpq_class;

/// The coefficient field: either QQ or GF(p) with p an odd prime.
/// All arithmetric is exact; there is no floating point anywhere.
class CoefficientField {
public:
  enum class Kind { rationals, prime };

  static CoefficientField rationals() { return CoefficientField(Kind::rationals, 0); }

  /// GF(p). Rejects p = 2, composite p.
  static CoefficientField prime(unsigned long p);

  Kind kind() const { return kind_; }
  unsigned long p() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }

  bool operator==(const CoefficientField& o) const = default;

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return canon(Coeff(1)); }
  Coeff from_long(long v) const { return canon(Coeff(v)); }

  /// Canonical form of an arbitrary rational in this field. For GF(p) this
  /// reduces num * den^-1 mod p into [0, p).
  Coeff canon(const Coeff& v) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Coeff& a) { return sgn(a) == 0; }

  /// "3", "-1/2"; GF(p) values print as their canonical representative.
  static std::string str(const Coeff& a);

  /// "QQ" or "GF(11)".
  std::string description() const;

  /// Parses "QQ" or "GF(p)".
  static CoefficientField parse(const std::string& text);

private:
  CoefficientField(Kind k, unsigned long p) : kind_(k), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

} // namespace selflink
