#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "selflink/field.hpp"
#include "selflink/monomial.hpp"

namespace selflink {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// A polynomial ring k[x_0, ..., x_{n}] with a fixed monomial order.
/// Immutable once constructed; shared by reference between all values.
class PolyRing {
public:
  static RingPtr make(CoefficientField field, std::vector<std::string> names,
                      MonomialOrder order = MonomialOrder::grevlex());

  /// Parses "QQ[x,y,z]" or "GF(11)[x,y]".
  static RingPtr parse(const std::string& text,
                       MonomialOrder order = MonomialOrder::grevlex());

  const CoefficientField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return names_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return names_.size(); }

  std::optional<std::size_t> index_of(const std::string& name) const;

  /// Structural equality: same field, variables, and order.
  bool same(const PolyRing& o) const {
    return field_ == o.field_ && names_ == o.names_ && order_ == o.order_;
  }

  /// "GF(11)[x,y] grevlex"
  std::string description() const;

private:
  PolyRing(CoefficientField field, std::vector<std::string> names, MonomialOrder order)
      : field_(std::move(field)), names_(std::move(names)), order_(order) {}

  CoefficientField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw RingMismatchError();
}

} // namespace selflink
