#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace selflink {

/// Exponent vector of a monomial in a fixed number of variables.
class Monomial {
public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : e_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
  }

  std::size_t nvars() const { return e_.size(); }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned& operator[](std::size_t i) { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned x : e_) d += x;
    return d;
  }
  bool is_one() const {
    for (unsigned x : e_)
      if (x) return false;
    return true;
  }

  Monomial mul(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  std::optional<Monomial> try_div(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (r.e_[i] < o.e_[i]) return std::nullopt;
      r.e_[i] -= o.e_[i];
    }
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (o.e_[i] > r.e_[i]) r.e_[i] = o.e_[i];
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const = default;

private:
  std::vector<unsigned> e_;
};

/// A monomial order: grevlex, lex, or a two-block elimination order (each
/// block compared by grevlex, the first block dominating).
class MonomialOrder {
public:
  enum class Kind { grevlex, lex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder block_elimination(std::size_t split) {
    return MonomialOrder(Kind::block, split);
  }

  Kind kind() const { return kind_; }
  std::size_t split() const { return split_; }

  /// +1 if a > b, 0 if equal, -1 if a < b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const = default;

  std::string name() const;
  static MonomialOrder parse(const std::string& text);

private:
  MonomialOrder(Kind k, std::size_t s) : kind_(k), split_(s) {}

  Kind kind_;
  std::size_t split_;
};

} // namespace selflink
