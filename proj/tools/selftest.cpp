#include <functional>
#include <ostream>
#include <vector>

#include "cli.hpp"
#include "selflink/contact.hpp"

namespace selflink::cli {

namespace {

struct Entry {
  std::string name;
  std::function<bool()> check;
};

Ideal make_ideal(const RingPtr& ring, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(Polynomial::parse(ring, g));
  return Ideal(ring, std::move(ps));
}

std::vector<Entry> corpus() {
  std::vector<Entry> entries;
  auto add = [&](std::string name, std::function<bool()> check) {
    entries.push_back({std::move(name), std::move(check)});
  };

  add("triple point: resolution matrices and invariants", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
    auto data = example33(ring);
    return hilbert_burch_check(data.a, data.b, data.ideal) &&
           hilbert(data.ideal).degree == 3 && codim(data.ideal) == 2;
  });

  for (const char* vars : {"P2", "P3"}) {
    const bool p3 = std::string(vars) == "P3";
    add(std::string("triple point self-linked through (x^2, y^3) in ") + vars, [p3] {
      auto ring = p3 ? PolyRing::make(CoefficientField::rationals(), {"x", "y", "z", "w"})
                     : PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
      auto c = make_ideal(ring, {"x^2", "x*y", "y^2"});
      return verify_selflinked(c, Polynomial::parse(ring, "x^2"),
                               Polynomial::parse(ring, "y^3"))
          .verdict;
    });
    add(std::string("triple point self-linked through (xy, x^3-y^3) in ") + vars, [p3] {
      auto ring = p3 ? PolyRing::make(CoefficientField::rationals(), {"x", "y", "z", "w"})
                     : PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
      auto c = make_ideal(ring, {"x^2", "x*y", "y^2"});
      return verify_selflinked(c, Polynomial::parse(ring, "x*y"),
                               Polynomial::parse(ring, "x^3 - y^3"))
          .verdict;
    });
  }

  add("classification accepts the two families and rejects (x^2, xy^2)", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
    return classify33(Polynomial::parse(ring, "x^2"), Polynomial::parse(ring, "y^3"))
                   .result == Classify33Case::case_i &&
           classify33(Polynomial::parse(ring, "x*y"),
                      Polynomial::parse(ring, "x^3 - y^3"))
                   .result == Classify33Case::case_ii &&
           classify33(Polynomial::parse(ring, "x^2"), Polynomial::parse(ring, "x*y^2"))
                   .result == Classify33Case::rejected;
  });

  add("rank-one construction: lambda = (x), alpha = (y^3)", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
    SymmetricDatum datum{ring, GradedProfile{{1}, 2, 3}, PolyMatrix::parse(ring, "[x]"),
                         PolyMatrix::parse(ring, "[y^3]"), Polynomial::zero(ring)};
    auto res = construct(datum);
    return res.f == Polynomial::parse(ring, "-x^2") &&
           res.g == Polynomial::parse(ring, "y^3") && res.certificate.verdict;
  });

  add("rank-three construction recovers the triple point", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
    SymmetricDatum datum{ring, GradedProfile{{2, 2, 2}, 2, 3},
                         PolyMatrix::parse(ring, "[1; 0; 0]"),
                         PolyMatrix::parse(ring, "[0, x, 0; x, 0, y; 0, y, -x]"),
                         Polynomial::zero(ring)};
    auto res = construct(datum);
    return res.g == Polynomial::parse(ring, "x^3") &&
           res.f == Polynomial::parse(ring, "y^2") &&
           ideal_equal(res.ideal, make_ideal(ring, {"x^2", "x*y", "y^2"})) &&
           res.certificate.verdict &&
           minor_identity_check(datum.lambda, datum.alpha, res.f, res.g);
  });

  add("contact closed form over GF(11), L = y", [] {
    auto sol = cube_contact(CoefficientField::prime(11), Coeff(0), Coeff(1));
    return sol.quartic_root == Coeff(5) &&
           sol.xi == Polynomial::parse(sol.ring, "2*x + 2*y") &&
           sol.eta == Polynomial::parse(sol.ring, "y + 5*x") && sol.verified;
  });

  add("contact over QQ, L = x", [] {
    auto sol = cube_contact(CoefficientField::rationals(), Coeff(1), Coeff(0));
    return sol.eta == Polynomial::parse(sol.ring, "x") &&
           sol.xi == Polynomial::parse(sol.ring, "y") &&
           sol.m_form == Polynomial::parse(sol.ring, "y") && sol.verified;
  });

  add("contact over QQ, L = y reports the missing sqrt(3)", [] {
    try {
      cube_contact(CoefficientField::rationals(), Coeff(0), Coeff(1));
      return false;
    } catch (const NoRootInField&) {
      return true;
    }
  });

  add("non-uniqueness demonstration over GF(11), L = y", [] {
    return demo33(CoefficientField::prime(11), Coeff(0), Coeff(1)).verdict;
  });

  add("non-uniqueness demonstration over QQ, L = x", [] {
    return demo33(CoefficientField::rationals(), Coeff(1), Coeff(0)).verdict;
  });

  add("shared-F regression: (u^2-v^2, v) vs (u^2-v^2, u)", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"u", "v", "w"});
    auto line = make_ideal(ring, {"u", "v"});
    auto f = Polynomial::parse(ring, "u^2 - v^2");
    auto a = verify_selflinked(line, f, Polynomial::parse(ring, "v"));
    auto b = verify_selflinked(line, f, Polynomial::parse(ring, "u"));
    bool differ = !ideal_equal(Ideal(ring, {f, Polynomial::parse(ring, "v")}),
                               Ideal(ring, {f, Polynomial::parse(ring, "u")}));
    return a.verdict && b.verdict && differ;
  });

  add("line regression: shared g = x^2, f = y vs h = x + y", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z", "w"});
    auto line = make_ideal(ring, {"x", "y"});
    auto rep = compare_linkages(line, Polynomial::parse(ring, "x^2"),
                                Polynomial::parse(ring, "y"),
                                Polynomial::parse(ring, "x + y"));
    return rep.first.verdict && rep.second.verdict && !rep.equal;
  });

  add("parity holds for the (2,4) complete intersection in P^5", [] {
    auto ring =
        PolyRing::make(CoefficientField::rationals(), {"x0", "x1", "x2", "x3", "x4", "x5"});
    auto rep = parity_check(5, 4, 4, hilbert(make_ideal(ring, {"x0^2", "x1^4"})));
    return rep.status == ParityStatus::holds && rep.residues[0] == 0 && rep.residues[1] == 0;
  });

  add("parity is vacuous in P^3", [] {
    auto ring = PolyRing::make(CoefficientField::rationals(), {"x", "y", "z", "w"});
    auto rep = parity_check(3, 2, 3, hilbert(make_ideal(ring, {"x^2", "x*y", "y^2"})));
    return rep.status == ParityStatus::vacuous;
  });

  return entries;
}

} // namespace

int selftest(std::ostream& out) {
  int failures = 0;
  for (const auto& entry : corpus()) {
    bool ok = false;
    std::string note;
    try {
      ok = entry.check();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    out << (ok ? "ok   " : "FAIL ") << entry.name << note << "\n";
    if (!ok) ++failures;
  }
  out << (failures == 0 ? "selftest: all passed\n"
                        : "selftest: " + std::to_string(failures) + " failures\n");
  return failures == 0 ? 0 : 1;
}

} // namespace selflink::cli
