#include "selflink/ring.hpp"

#include <set>
#include <sstream>

namespace selflink {

RingPtr PolyRing::make(CoefficientField field, std::vector<std::string> names,
                       MonomialOrder order) {
  if (names.empty()) throw InputError("a polynomial ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InputError("empty variable name");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  if (order.kind() == MonomialOrder::Kind::block && order.split() >= names.size())
    throw InputError("block order split out of range");
  return RingPtr(new PolyRing(std::move(field), std::move(names), order));
}

RingPtr PolyRing::parse(const std::string& text, MonomialOrder order) {
  auto open = text.find('[');
  if (open == std::string::npos || text.back() != ']')
    throw InputError("cannot parse ring '" + text + "' (expected FIELD[vars])");
  CoefficientField field = CoefficientField::parse(text.substr(0, open));
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::vector<std::string> names;
  std::string cur;
  for (char c : inner + ",") {
    if (c == ',') {
      std::string trimmed;
      for (char t : cur)
        if (!isspace(static_cast<unsigned char>(t))) trimmed += t;
      if (trimmed.empty()) throw InputError("empty variable name in '" + text + "'");
      names.push_back(trimmed);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return make(field, std::move(names), order);
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string PolyRing::description() const {
  std::ostringstream os;
  os << field_.description() << "[";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) os << ",";
    os << names_[i];
  }
  os << "] " << order_.name();
  return os.str();
}

} // namespace selflink
