#include "session.hpp"

#include <fstream>
#include <sstream>

namespace selflink::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + sep) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

} // namespace

Session parse_session(const std::string& text) {
  Session s;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    auto fail = [&](const std::string& msg) {
      throw InputError("session line " + std::to_string(lineno) + ": " + msg);
    };

    if (kind == "ring") {
      if (s.ring) fail("a session declares exactly one ring");
      std::string spec, ordname;
      ls >> spec >> ordname;
      MonomialOrder order =
          ordname.empty() ? MonomialOrder::grevlex() : MonomialOrder::parse(ordname);
      s.ring = PolyRing::parse(spec, order);
      continue;
    }

    if (!s.ring) fail("declare the ring before any object");
    std::string name, eq;
    ls >> name >> eq;
    if (eq != "=") fail("expected '" + kind + " NAME = ...'");
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);
    if (rest.empty()) fail("empty right-hand side");
    const bool taken =
        s.polys.count(name) || s.ideals.count(name) || s.matrices.count(name);
    if (taken) fail("name '" + name + "' is already defined");

    if (kind == "poly") {
      s.polys.emplace(name, Polynomial::parse(s.ring, rest));
    } else if (kind == "ideal") {
      std::vector<Polynomial> gens;
      for (const auto& part : split(rest, ','))
        if (!part.empty()) gens.push_back(Polynomial::parse(s.ring, part));
      s.ideals.emplace(name, std::move(gens));
    } else if (kind == "matrix") {
      s.matrices.emplace(name, PolyMatrix::parse(s.ring, rest));
    } else {
      fail("unknown declaration '" + kind + "' (ring|poly|ideal|matrix)");
    }
  }
  return s;
}

Session load_session(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open session file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_session(buf.str());
}

Polynomial resolve_poly(const Session& s, const std::string& value) {
  auto it = s.polys.find(trim(value));
  if (it != s.polys.end()) return it->second;
  if (!s.ring) throw InputError("no ring in scope");
  return Polynomial::parse(s.ring, value);
}

std::vector<Polynomial> resolve_ideal(const Session& s, const std::string& value) {
  auto it = s.ideals.find(trim(value));
  if (it != s.ideals.end()) return it->second;
  if (!s.ring) throw InputError("no ring in scope");
  std::vector<Polynomial> gens;
  for (const auto& part : split(value, ','))
    if (!part.empty()) gens.push_back(Polynomial::parse(s.ring, part));
  if (gens.empty()) throw InputError("empty ideal literal '" + value + "'");
  return gens;
}

PolyMatrix resolve_matrix(const Session& s, const std::string& value) {
  auto it = s.matrices.find(trim(value));
  if (it != s.matrices.end()) return it->second;
  if (!s.ring) throw InputError("no ring in scope");
  return PolyMatrix::parse(s.ring, value);
}

} // namespace selflink::cli
