#include "selflink/monomial.hpp"

#include "selflink/errors.hpp"

namespace selflink {

namespace {

// grevlex on the index range [lo, hi): higher total degree wins; on equal
// degree the monomial whose *last* differing exponent is smaller wins.
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  long da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::lex:
      return lex_range(a, b, 0, n);
    case Kind::block: {
      int c = grevlex_range(a, b, 0, split_);
      if (c) return c;
      return grevlex_range(a, b, split_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block:
      return "block(" + std::to_string(split_) + ")";
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(const std::string& text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  throw InputError("unknown monomial order '" + text + "'");
}

} // namespace selflink
