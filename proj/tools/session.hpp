#pragma once

#include <map>
#include <optional>
#include <string>

#include "selflink/matrix.hpp"

namespace selflink::cli {

/// Named objects declared in a session file, one declaration per line:
///   # comment
///   ring QQ[x,y,z] grevlex
///   poly f = x^2
///   ideal I = x^2, x*y, y^2
///   matrix A = [y, 0; -x, y; 0, -x]
/// One ring per session; every name is defined before use.
struct Session {
  RingPtr ring;
  std::map<std::string, Polynomial> polys;
  std::map<std::string, std::vector<Polynomial>> ideals;
  std::map<std::string, PolyMatrix> matrices;
};

Session parse_session(const std::string& text);
Session load_session(const std::string& path);

/// Resolution helpers: a flag value may name a session object or be a
/// literal to parse.
Polynomial resolve_poly(const Session& s, const std::string& value);
std::vector<Polynomial> resolve_ideal(const Session& s, const std::string& value);
PolyMatrix resolve_matrix(const Session& s, const std::string& value);

} // namespace selflink::cli
