#include <doctest.h>

#include <functional>
#include <random>

#include "selflink/matrix.hpp"

using namespace selflink;

namespace {

RingPtr qq_xyz() {
  return PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
}

Polynomial random_form(const RingPtr& ring, unsigned deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dc(-3, 3);
  std::vector<Term> terms;
  std::vector<unsigned> exps(ring->nvars(), 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
    if (i + 1 == ring->nvars()) {
      exps[i] = rem;
      terms.push_back({Monomial(exps), Coeff(dc(rng))});
      return;
    }
    for (unsigned k = 0; k <= rem; ++k) {
      exps[i] = k;
      rec(i + 1, rem - k);
    }
  };
  rec(0, deg);
  return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

TEST_CASE("determinant examples") {
  auto ring = qq_xyz();
  auto one_by_one = PolyMatrix::parse(ring, "[x^2 - y]");
  CHECK(det(one_by_one) == Polynomial::parse(ring, "x^2 - y"));

  auto two = PolyMatrix::parse(ring, "[0, x; x, y^3]");
  CHECK(det(two) == Polynomial::parse(ring, "-x^2"));

  auto three = PolyMatrix::parse(ring, "[0, x, 0; x, 0, y; 0, y, -x]");
  CHECK(det(three) == Polynomial::parse(ring, "x^3"));

  CHECK_THROWS_AS(det(PolyMatrix::parse(ring, "[x, y; x, y; x, y]")), InputError);
}

TEST_CASE("adjugate examples") {
  auto ring = qq_xyz();
  auto m = PolyMatrix::parse(ring, "[x, y; y, z]");
  auto adj = adjugate(m);
  CHECK(adj == PolyMatrix::parse(ring, "[z, -y; -y, x]"));

  auto id = PolyMatrix::identity(ring, 3);
  CHECK(adjugate(id) == id);

  auto alpha = PolyMatrix::parse(ring, "[0, x, 0; x, 0, y; 0, y, -x]");
  auto prod = alpha.mul(adjugate(alpha));
  auto expect = PolyMatrix::identity(ring, 3);
  for (std::size_t i = 0; i < 3; ++i)
    expect.set(i, i, Polynomial::parse(ring, "x^3"));
  CHECK(prod == expect);
}

TEST_CASE("maximal minors") {
  auto ring = qq_xyz();
  // transpose of the triple point's relation matrix
  auto ta = PolyMatrix::parse(ring, "[y, -x, 0; 0, y, -x]");
  auto minors = maximal_minors(ta);
  REQUIRE(minors.size() == 3);
  CHECK(minors[0] == Polynomial::parse(ring, "x^2"));
  CHECK(minors[1] == Polynomial::parse(ring, "x*y"));
  CHECK(minors[2] == Polynomial::parse(ring, "y^2"));

  auto row = PolyMatrix::parse(ring, "[x, y^3]");
  auto m2 = maximal_minors(row);
  REQUIRE(m2.size() == 2);
  CHECK(m2[0] == Polynomial::parse(ring, "y^3")); // delete column 1: det(alpha)
  CHECK(m2[1] == Polynomial::parse(ring, "-x"));

  auto stacked = PolyMatrix::parse(ring, "[1, 0, x, 0; 0, x, 0, y; 0, 0, y, -x]");
  auto m3 = maximal_minors(stacked);
  REQUIRE(m3.size() == 4);
  CHECK(m3[0] == Polynomial::parse(ring, "x^3"));
  CHECK(m3[1] == Polynomial::parse(ring, "y^2"));
  CHECK(m3[2] == Polynomial::parse(ring, "-x^2"));
  CHECK(m3[3] == Polynomial::parse(ring, "-x*y"));

  CHECK_THROWS_AS(maximal_minors(PolyMatrix::parse(ring, "[x, y; y, x]")), InputError);
}

TEST_CASE("bordered matrix") {
  auto ring = qq_xyz();
  auto lam = PolyMatrix::parse(ring, "[x]");
  auto alpha = PolyMatrix::parse(ring, "[y^3]");
  auto b = border(Polynomial::zero(ring), lam, alpha);
  CHECK(b == PolyMatrix::parse(ring, "[0, x; x, y^3]"));
  CHECK(b.is_symmetric());

  auto asym = PolyMatrix::parse(ring, "[0, x; y, 0]");
  CHECK_THROWS_AS(border(Polynomial::zero(ring), PolyMatrix::parse(ring, "[x; y]"), asym),
                  InputError);
}

TEST_CASE("det properties on random instances") {
  auto ring = qq_xyz();
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<std::size_t> ds(2, 4);
  std::uniform_int_distribution<unsigned> dd(0, 2);
  for (int round = 0; round < 12; ++round) {
    const std::size_t n = ds(rng);
    PolyMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, random_form(ring, dd(rng), rng));

    auto d = det(m);
    CHECK(det(m.transpose()) == d);
    CHECK(det_bareiss(m) == d); // Laplace vs fraction-free elimination

    // swapping two rows negates the determinant
    PolyMatrix swapped = m;
    for (std::size_t j = 0; j < n; ++j) {
      auto tmp = swapped.at(0, j);
      swapped.set(0, j, swapped.at(1, j));
      swapped.set(1, j, tmp);
    }
    CHECK(det(swapped) == -d);

    // a repeated row kills the determinant
    PolyMatrix repeated = m;
    for (std::size_t j = 0; j < n; ++j) repeated.set(1, j, m.at(0, j));
    CHECK(det(repeated).is_zero());

    // adjugate identity on a symmetric matrix
    PolyMatrix sym(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        auto e = random_form(ring, dd(rng), rng);
        sym.set(i, j, e);
        sym.set(j, i, e);
      }
    auto prod = sym.mul(adjugate(sym));
    auto ds2 = det(sym);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        CHECK(prod.at(i, j) == (i == j ? ds2 : Polynomial::zero(ring)));
  }
}

TEST_CASE("bordered determinant identity") {
  auto ring = qq_xyz();
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dr(1, 3);
  std::uniform_int_distribution<unsigned> dd(0, 2);
  for (int round = 0; round < 10; ++round) {
    const std::size_t r = dr(rng);
    PolyMatrix lam(ring, r, 1);
    for (std::size_t i = 0; i < r; ++i) lam.set(i, 0, random_form(ring, dd(rng), rng));
    PolyMatrix alpha(ring, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        auto e = random_form(ring, dd(rng), rng);
        alpha.set(i, j, e);
        alpha.set(j, i, e);
      }
    auto lhs = det(border(Polynomial::zero(ring), lam, alpha));
    // -lambda^t adj(alpha) lambda
    auto rhs = -lam.transpose().mul(adjugate(alpha)).mul(lam).at(0, 0);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded profile checks") {
  auto ring = qq_xyz();
  SUBCASE("r=1, a=(1), d=2, m=3") {
    GradedProfile profile{{1}, 2, 3};
    auto lam = PolyMatrix::parse(ring, "[x]");
    auto alpha = PolyMatrix::parse(ring, "[y^3]");
    auto rep = check_graded(profile, lam, alpha);
    CHECK(rep.ok);
  }
  SUBCASE("r=3, a=(2,2,2), d=2, m=3") {
    GradedProfile profile{{2, 2, 2}, 2, 3};
    auto lam = PolyMatrix::parse(ring, "[1; 0; 0]");
    auto alpha = PolyMatrix::parse(ring, "[0, x, 0; x, 0, y; 0, y, -x]");
    auto rep = check_graded(profile, lam, alpha);
    CHECK(rep.ok);
  }
  SUBCASE("r=2, d=2, m=3 is impossible") {
    CHECK_FALSE(balanced_twists(2, 2, 3).has_value());
    GradedProfile profile{{1, 1}, 2, 3};
    auto lam = PolyMatrix::parse(ring, "[x; y]");
    auto alpha = PolyMatrix::parse(ring, "[x^3, y^3; y^3, x^3]");
    auto rep = check_graded(profile, lam, alpha);
    CHECK_FALSE(rep.ok);
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations[0].find("odd") != std::string::npos);
  }
  SUBCASE("wrong entry degree is reported") {
    GradedProfile profile{{1}, 2, 3};
    auto lam = PolyMatrix::parse(ring, "[x^2]");
    auto alpha = PolyMatrix::parse(ring, "[y^3]");
    auto rep = check_graded(profile, lam, alpha);
    CHECK_FALSE(rep.ok);
  }
  SUBCASE("gamma must vanish when d < m") {
    GradedProfile profile{{1}, 2, 3};
    auto lam = PolyMatrix::parse(ring, "[x]");
    auto alpha = PolyMatrix::parse(ring, "[y^3]");
    auto gamma = Polynomial::parse(ring, "1");
    auto rep = check_graded(profile, lam, alpha, &gamma);
    CHECK_FALSE(rep.ok);
  }
}

TEST_CASE("balanced twists") {
  auto t1 = balanced_twists(1, 2, 3);
  REQUIRE(t1.has_value());
  CHECK(*t1 == std::vector<int>{1});
  auto t3 = balanced_twists(3, 2, 3);
  REQUIRE(t3.has_value());
  CHECK(*t3 == std::vector<int>{2, 2, 2});
}
