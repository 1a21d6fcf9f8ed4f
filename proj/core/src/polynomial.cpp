#include "selflink/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace selflink {

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  const Coeff cc = ring->field().canon(c);
  Polynomial p(ring);
  if (!CoefficientField::is_zero(cc)) p.terms_.push_back({Monomial::one(ring->nvars()), cc});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw InputError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->nvars(), i), ring->field().one()});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Coeff& c) {
  const Coeff cc = ring->field().canon(c);
  Polynomial p(ring);
  if (!CoefficientField::is_zero(cc)) p.terms_.push_back({std::move(m), cc});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  Polynomial p(ring);
  const auto& field = ring->field();
  for (auto& t : terms) {
    Coeff c = field.canon(t.coeff);
    if (CoefficientField::is_zero(c)) continue;
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      Coeff s = field.add(p.terms_.back().coeff, c);
      if (CoefficientField::is_zero(s))
        p.terms_.pop_back();
      else
        p.terms_.back().coeff = std::move(s);
    } else {
      p.terms_.push_back({std::move(t.mono), std::move(c)});
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_[0].mono.degree();
  for (const auto& t : terms_)
    if (t.mono.degree() != d) return false;
  return true;
}

Coeff Polynomial::constant_value() const {
  if (terms_.empty()) return Coeff(0);
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_[0].coeff;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& ord = ring_->order();
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Coeff s = field.add(terms_[i].coeff, o.terms_[j].coeff);
      if (!CoefficientField::is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-() const {
  const auto& field = ring_->field();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field.neg(t.coeff)});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  const auto& field = ring_->field();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      acc.push_back({a.mono.mul(b.mono), field.mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(acc));
}

Polynomial Polynomial::scale(const Coeff& c) const {
  const auto& field = ring_->field();
  const Coeff cc = field.canon(c);
  Polynomial r(ring_);
  if (CoefficientField::is_zero(cc)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field.mul(t.coeff, cc)});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Coeff(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return scale(ring_->field().inv(leading_coeff()));
}

std::optional<Polynomial> Polynomial::try_divide_exact(const Polynomial& d) const {
  require_same_ring(ring_, d.ring_);
  if (d.is_zero()) throw InputError("division by the zero polynomial");
  const auto& field = ring_->field();
  Polynomial rem = *this;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    auto m = rem.leading_monomial().try_div(d.leading_monomial());
    if (!m) return std::nullopt;
    Coeff c = field.div(rem.leading_coeff(), d.leading_coeff());
    Term t{std::move(*m), std::move(c)};
    rem = rem - d * monomial(ring_, t.mono, t.coeff);
    quot.push_back(std::move(t));
  }
  return from_terms(ring_, std::move(quot));
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != ring_->nvars())
    throw InputError("substitution needs one image per variable");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  for (const auto& im : images) require_same_ring(target, im.ring());
  if (!(target->field() == ring_->field()))
    throw InputError("substitution images live over a different coefficient field");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i]) prod = prod * images[i].pow(t.mono[i]);
    acc = acc + prod;
  }
  return acc;
}

Coeff Polynomial::evaluate(std::span<const Coeff> point) const {
  if (point.size() != ring_->nvars()) throw InputError("evaluation needs one value per variable");
  const auto& field = ring_->field();
  Coeff acc = field.zero();
  for (const auto& t : terms_) {
    Coeff prod = t.coeff;
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      for (unsigned k = 0; k < t.mono[i]; ++k) prod = field.mul(prod, point[i]);
    acc = field.add(acc, prod);
  }
  return acc;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  if (i >= ring_->nvars()) throw InputError("variable index out of range");
  const auto& field = ring_->field();
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    if (t.mono[i] == 0) continue;
    Monomial m = t.mono;
    Coeff c = field.mul(t.coeff, field.from_long(static_cast<long>(m[i])));
    m[i] -= 1;
    acc.push_back({std::move(m), std::move(c)});
  }
  return from_terms(ring_, std::move(acc));
}

bool Polynomial::uses_only_first(std::size_t k) const {
  for (const auto& t : terms_)
    for (std::size_t i = k; i < ring_->nvars(); ++i)
      if (t.mono[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// printing

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Coeff c = t.coeff;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (negative) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variables()[i];
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      os << CoefficientField::str(c);
    } else if (c == 1) {
      os << mono;
    } else {
      os << CoefficientField::str(c) << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string integer() {
    skip_ws();
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) out += s[pos++];
    if (out.empty()) throw InputError("expected an integer at position " + std::to_string(pos) + " in '" + s + "'");
    return out;
  }
  std::string identifier() {
    skip_ws();
    std::string out;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      out += s[pos++];
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_' || s[pos] == '\''))
        out += s[pos++];
    }
    return out;
  }
};

} // namespace

Polynomial Polynomial::parse(const RingPtr& ring, const std::string& text) {
  Lexer lx{text};
  if (lx.eof()) throw InputError("empty polynomial");
  const auto& field = ring->field();
  std::vector<Term> acc;

  bool first = true;
  while (!lx.eof()) {
    // sign
    bool negative = false;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      negative = true;
    } else if (!first) {
      throw InputError("expected '+' or '-' at position " + std::to_string(lx.pos) +
                       " in '" + text + "'");
    }
    first = false;

    // optional coefficient
    Coeff coeff(1);
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      std::string num = lx.integer();
      std::string den = "1";
      if (lx.accept('/')) den = lx.integer();
      mpz_class nz(num), dz(den);
      if (dz == 0) throw InputError("zero denominator in '" + text + "'");
      coeff = Coeff(nz, dz);
      coeff.canonicalize();
      have_coeff = true;
    }
    if (negative) coeff = -coeff;

    // factors
    Monomial mono = Monomial::one(ring->nvars());
    bool have_factor = false;
    bool expect_factor = false;
    if (have_coeff) {
      if (lx.accept('*'))
        expect_factor = true;
    } else {
      expect_factor = true;
    }
    while (true) {
      std::string id = lx.identifier();
      if (id.empty()) {
        if (expect_factor && !have_coeff)
          throw InputError("expected a variable at position " + std::to_string(lx.pos) +
                           " in '" + text + "'");
        if (expect_factor && have_coeff)
          throw InputError("dangling '*' in '" + text + "'");
        break;
      }
      auto idx = ring->index_of(id);
      if (!idx) throw InputError("unknown variable '" + id + "' in '" + text + "'");
      unsigned e = 1;
      if (lx.accept('^')) {
        std::string exp = lx.integer();
        try {
          unsigned long v = std::stoul(exp);
          if (v == 0 || v > 1u << 20) throw std::out_of_range("exp");
          e = static_cast<unsigned>(v);
        } catch (const std::logic_error&) {
          throw InputError("bad exponent '" + exp + "' in '" + text + "'");
        }
      }
      mono[*idx] += e;
      have_factor = true;
      if (lx.accept('*'))
        expect_factor = true;
      else {
        expect_factor = false;
        break;
      }
    }
    if (!have_coeff && !have_factor)
      throw InputError("expected a term at position " + std::to_string(lx.pos) + " in '" +
                       text + "'");
    acc.push_back({std::move(mono), field.canon(coeff)});
  }
  return from_terms(ring, std::move(acc));
}

} // namespace selflink
