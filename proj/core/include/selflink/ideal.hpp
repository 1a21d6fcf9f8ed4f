#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "selflink/groebner.hpp"

namespace selflink {

/// An ideal given by generators, with a lazily computed reduced Groebner
/// basis. The basis is computed at most once; copies share the cache and
/// concurrent queries against a computed basis are safe.
class Ideal {
public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const GroebnerBasis& groebner() const;

  bool contains(const Polynomial& p) const { return ideal_member(p, groebner()); }

  /// Every generator of `other` reduces to zero against this ideal?
  bool contains_ideal(const Ideal& other) const;

  std::string str() const;

private:
  struct Cache {
    std::once_flag flag;
    std::unique_ptr<GroebnerBasis> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Generated by all pairwise products of generators.
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// I cap J via elimination of an auxiliary variable t from t*I + (1-t)*J
/// under a block order.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// I : J = { h : h*J subset I }, computed as the intersection over the
/// generators f of J of (1/f)(I cap (f)). J must be nonzero.
Ideal ideal_colon(const Ideal& a, const Ideal& b);

/// Reduced bases identical.
bool ideal_equal(const Ideal& a, const Ideal& b);

} // namespace selflink
