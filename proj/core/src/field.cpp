#include "selflink/field.hpp"

#include <sstream>

namespace selflink {

CoefficientField CoefficientField::prime(unsigned long p) {
  if (p == 2) throw InputError("characteristic 2 is not supported");
  mpz_class pz(static_cast<long>(p));
  if (p < 2 || mpz_probab_prime_p(pz.get_mpz_t(), 40) == 0) {
    std::ostringstream os;
    os << p << " is not an odd prime";
    throw InputError(os.str());
  }
  return CoefficientField(Kind::prime, p);
}

Coeff CoefficientField::canon(const Coeff& v) const {
  if (kind_ == Kind::rationals) {
    Coeff c = v;
    c.canonicalize();
    return c;
  }
  mpz_class p(static_cast<long>(p_));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw InputError("denominator vanishes mod " + std::to_string(p_));
  if (den != 1) {
    mpz_class dinv;
    mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = (num * dinv) % p;
  }
  return Coeff(num);
}

Coeff CoefficientField::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a + b;
  return canon(Coeff(a.get_num() + b.get_num()));
}

Coeff CoefficientField::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a - b;
  return canon(Coeff(a.get_num() - b.get_num()));
}

Coeff CoefficientField::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == Kind::rationals) return a * b;
  return canon(Coeff(a.get_num() * b.get_num()));
}

Coeff CoefficientField::neg(const Coeff& a) const {
  if (kind_ == Kind::rationals) return -a;
  return canon(Coeff(-a.get_num()));
}

Coeff CoefficientField::inv(const Coeff& a) const {
  if (is_zero(a)) throw InputError("division by zero");
  if (kind_ == Kind::rationals) return 1 / a;
  mpz_class p(static_cast<long>(p_)), r;
  mpz_class num = a.get_num() % p;
  if (num < 0) num += p;
  mpz_invert(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  return Coeff(r);
}

std::string CoefficientField::str(const Coeff& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

std::string CoefficientField::description() const {
  if (kind_ == Kind::rationals) return "QQ";
  return "GF(" + std::to_string(p_) + ")";
}

CoefficientField CoefficientField::parse(const std::string& text) {
  if (text == "QQ" || text == "Q") return rationals();
  if (text.size() > 4 && text.substr(0, 3) == "GF(" && text.back() == ')') {
    const std::string inner = text.substr(3, text.size() - 4);
    try {
      std::size_t used = 0;
      unsigned long p = std::stoul(inner, &used);
      if (used == inner.size()) return prime(p);
    } catch (const std::logic_error&) {
      // fall through to the error below
    }
  }
  throw InputError("cannot parse field '" + text + "' (expected QQ or GF(p))");
}

} // namespace selflink
