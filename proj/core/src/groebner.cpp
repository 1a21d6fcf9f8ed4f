#include "selflink/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace selflink {

Polynomial reduce_by(const Polynomial& p, const std::vector<Polynomial>& reducers) {
  const RingPtr& ring = p.ring();
  const auto& field = ring->field();
  Polynomial work = p;
  std::vector<Term> remainder;
  while (!work.is_zero()) {
    const Term& lt = work.leading_term();
    const Polynomial* red = nullptr;
    std::optional<Monomial> q;
    for (const auto& g : reducers) {
      if (g.is_zero()) continue;
      q = lt.mono.try_div(g.leading_monomial());
      if (q) {
        red = &g;
        break;
      }
    }
    if (red) {
      Coeff c = field.div(lt.coeff, red->leading_coeff());
      work = work - (*red) * Polynomial::monomial(ring, std::move(*q), c);
    } else {
      remainder.push_back(lt);
      work = work - Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  return Polynomial::from_terms(ring, std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Reduced form of a basis whose leads already generate the lead ideal:
// drop redundant leads, then fully reduce each tail against the others.
std::vector<Polynomial> interreduce(const RingPtr& ring, std::vector<Polynomial> basis) {
  const auto& ord = ring->order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& h : minimal)
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    reduced.push_back(reduce_by(minimal[k], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_monomial(), b.leading_monomial());
  });
  return reduced;
}

} // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> generators) {
  const auto& ord = ring->order();

  std::vector<Polynomial> basis;
  for (auto& g : generators) {
    require_same_ring(ring, g.ring());
    if (!g.is_zero()) basis.push_back(g.monic());
  }
  // Deterministic start independent of the input permutation.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c) return c < 0;
    return a.term_count() < b.term_count();
  });

  if (basis.empty()) return GroebnerBasis(ring, {});

  auto pair_less = [&](const Pair& a, const Pair& b) {
    int c = ord.compare(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      queue.push_back({i, j, basis[i].leading_monomial().lcm(basis[j].leading_monomial())});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair pr = *it;
    queue.erase(it);
    treated.insert({pr.i, pr.j});

    const Monomial& li = basis[pr.i].leading_monomial();
    const Monomial& lj = basis[pr.j].leading_monomial();
    if (li.coprime(lj)) continue; // product criterion
    bool chained = false;         // chain criterion
    for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis[k].leading_monomial().divides(pr.lcm)) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (treated.count(key(pr.i, k)) && treated.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    const auto qi = pr.lcm.try_div(li);
    const auto qj = pr.lcm.try_div(lj);
    Polynomial spoly =
        basis[pr.i] * Polynomial::monomial(ring, *qi, ring->field().one()) -
        basis[pr.j] * Polynomial::monomial(ring, *qj, ring->field().one());
    Polynomial r = reduce_by(spoly, basis);
    if (!r.is_zero()) {
      basis.push_back(r.monic());
      push_pairs_for(basis.size() - 1);
    }
  }

  return GroebnerBasis(ring, interreduce(ring, std::move(basis)));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  require_same_ring(p.ring(), g.ring());
  return reduce_by(p, g.basis());
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& g) {
  return normal_form(p, g).is_zero();
}

} // namespace selflink
