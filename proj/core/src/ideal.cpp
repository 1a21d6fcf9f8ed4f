#include "selflink/ideal.hpp"

#include <sstream>

namespace selflink {

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->flag, [this] {
    cache_->gb = std::make_unique<GroebnerBasis>(buchberger(ring_, gens_));
  });
  return *cache_->gb;
}

bool Ideal::contains_ideal(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  if (gens_.empty()) os << "0";
  os << ")";
  return os.str();
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g * h);
  return Ideal(a.ring(), std::move(gens));
}

namespace {

// k[t, x...] with t in its own leading block, so that eliminating t is a
// matter of dropping basis elements involving it.
RingPtr extended_ring(const RingPtr& ring) {
  std::vector<std::string> names;
  names.reserve(ring->nvars() + 1);
  names.push_back("@t");
  for (const auto& n : ring->variables()) names.push_back(n);
  return PolyRing::make(ring->field(), std::move(names),
                        MonomialOrder::block_elimination(1));
}

Polynomial promote(const Polynomial& p, const RingPtr& ext) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m(ext->nvars());
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) m[i + 1] = t.mono[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ext, std::move(terms));
}

Polynomial demote(const Polynomial& p, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m(ring->nvars());
    for (std::size_t i = 0; i < ring->nvars(); ++i) m[i] = t.mono[i + 1];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

bool involves_aux(const Polynomial& p) {
  for (const auto& t : p.terms())
    if (t.mono[0]) return true;
  return false;
}

} // namespace

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const RingPtr& ring = a.ring();
  RingPtr ext = extended_ring(ring);
  const Polynomial t = Polynomial::variable(ext, 0);
  const Polynomial one_minus_t = Polynomial::constant(ext, Coeff(1)) - t;

  std::vector<Polynomial> gens;
  for (const auto& g : a.generators()) gens.push_back(t * promote(g, ext));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * promote(h, ext));

  GroebnerBasis gb = buchberger(ext, std::move(gens));
  std::vector<Polynomial> contracted;
  for (const auto& g : gb.basis())
    if (!involves_aux(g)) contracted.push_back(demote(g, ring));
  return Ideal(ring, std::move(contracted));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) throw InputError("colon by the zero ideal");
  const RingPtr& ring = a.ring();

  std::optional<Ideal> result;
  for (const auto& f : b.generators()) {
    Ideal cap = ideal_intersect(a, Ideal(ring, {f}));
    std::vector<Polynomial> quotients;
    for (const auto& g : cap.generators()) {
      auto q = g.try_divide_exact(f);
      if (!q) throw Error("internal: intersection with (f) produced a non-multiple of f");
      quotients.push_back(std::move(*q));
    }
    Ideal part(ring, std::move(quotients));
    result = result ? ideal_intersect(*result, part) : std::move(part);
  }
  return *result;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.groebner() == b.groebner();
}

} // namespace selflink
