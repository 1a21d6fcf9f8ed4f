#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "selflink/ideal.hpp"

using namespace selflink;

namespace {

RingPtr qq_xyz() {
  return PolyRing::make(CoefficientField::rationals(), {"x", "y", "z"});
}

Ideal make_ideal(const RingPtr& ring, std::vector<std::string> gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(Polynomial::parse(ring, g));
  return Ideal(ring, std::move(ps));
}

// random homogeneous monomial/binomial generators over GF(7), <= 3 vars
Ideal random_graded_ideal(const RingPtr& ring, std::mt19937_64& rng, int max_gens = 3) {
  std::uniform_int_distribution<int> ng(1, max_gens), kind(0, 1);
  std::uniform_int_distribution<unsigned> dd(1, 3);
  std::uniform_int_distribution<long> dc(1, 6);
  std::vector<Polynomial> gens;
  const int n = ng(rng);
  for (int i = 0; i < n; ++i) {
    const unsigned d = dd(rng);
    auto monos = oracle::monomials_of_degree(ring->nvars(), d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::vector<Term> terms;
    terms.push_back({monos[pick(rng)], ring->field().canon(Coeff(dc(rng)))});
    if (kind(rng)) terms.push_back({monos[pick(rng)], ring->field().canon(Coeff(dc(rng)))});
    auto p = Polynomial::from_terms(ring, std::move(terms));
    if (!p.is_zero()) gens.push_back(p);
  }
  return Ideal(ring, std::move(gens));
}

} // namespace

TEST_CASE("ideal product examples") {
  auto ring = qq_xyz();
  auto xy = make_ideal(ring, {"x", "y"});
  auto sq = ideal_product(xy, xy);
  CHECK(ideal_equal(sq, make_ideal(ring, {"x^2", "x*y", "y^2"})));

  auto i = make_ideal(ring, {"x^2", "y"});
  CHECK(ideal_equal(ideal_product(i, make_ideal(ring, {"1"})), i));
  CHECK(ideal_equal(ideal_product(make_ideal(ring, {"x"}), make_ideal(ring, {"y"})),
                    make_ideal(ring, {"x*y"})));
}

TEST_CASE("ideal intersection examples") {
  auto ring = qq_xyz();
  CHECK(ideal_equal(ideal_intersect(make_ideal(ring, {"x"}), make_ideal(ring, {"y"})),
                    make_ideal(ring, {"x*y"})));
  CHECK(ideal_equal(ideal_intersect(make_ideal(ring, {"x^2", "y"}), make_ideal(ring, {"x"})),
                    make_ideal(ring, {"x^2", "x*y"})));
  auto i = make_ideal(ring, {"x^2", "x*y + z^2"});
  CHECK(ideal_equal(ideal_intersect(i, i), i));
}

TEST_CASE("ideal colon examples") {
  auto ring = qq_xyz();
  // the triple point: (x^2, y^3) : (x^2, xy, y^2) = (x^2, xy, y^2)
  auto colon = ideal_colon(make_ideal(ring, {"x^2", "y^3"}),
                           make_ideal(ring, {"x^2", "x*y", "y^2"}));
  CHECK(ideal_equal(colon, make_ideal(ring, {"x^2", "x*y", "y^2"})));

  auto i = make_ideal(ring, {"x^2", "y", "z^3"});
  CHECK(ideal_equal(ideal_colon(i, make_ideal(ring, {"1"})), i));

  CHECK(ideal_equal(ideal_colon(make_ideal(ring, {"x^2", "y^2"}), make_ideal(ring, {"x", "y"})),
                    make_ideal(ring, {"x^2", "x*y", "y^2"})));

  CHECK_THROWS_AS(ideal_colon(i, Ideal(ring, {})), InputError);
}

TEST_CASE("colon and intersection laws on random ideals") {
  auto ring = PolyRing::make(CoefficientField::prime(7), {"x", "y", "z"});
  std::mt19937_64 rng(31415);
  for (int round = 0; round < 20; ++round) {
    Ideal i = random_graded_ideal(ring, rng);
    Ideal j = random_graded_ideal(ring, rng);
    Ideal k = random_graded_ideal(ring, rng);
    if (j.is_zero() || k.is_zero()) continue;

    Ideal cap = ideal_intersect(i, j);
    CHECK(i.contains_ideal(cap));
    CHECK(j.contains_ideal(cap));
    CHECK(cap.contains_ideal(ideal_product(i, j)));

    Ideal quot = ideal_colon(i, j);
    CHECK(quot.contains_ideal(i));                       // I subset I:J
    CHECK(i.contains_ideal(ideal_product(quot, j)));     // (I:J) J subset I

    // I : (J K) = (I : J) : K
    Ideal jk = ideal_product(j, k);
    if (!jk.is_zero())
      CHECK(ideal_equal(ideal_colon(i, jk), ideal_colon(quot, k)));
  }
}

TEST_CASE("colon and intersection match the graded linear-algebra oracle") {
  auto ring = PolyRing::make(CoefficientField::prime(7), {"x", "y", "z"});
  std::mt19937_64 rng(271828);
  int rounds = 0;
  for (int round = 0; round < 12; ++round) {
    Ideal i = random_graded_ideal(ring, rng);
    Ideal j = random_graded_ideal(ring, rng, 2);
    if (i.is_zero() || j.is_zero()) continue;
    ++rounds;
    Ideal colon = ideal_colon(i, j);
    Ideal cap = ideal_intersect(i, j);
    for (unsigned d = 0; d <= 6; ++d) {
      auto colon_truth = oracle::colon_piece(i, j, d);
      auto colon_ours = oracle::graded_piece(colon, d);
      CHECK(colon_truth.same_as(colon_ours));

      auto cap_ours = oracle::graded_piece(cap, d);
      auto i_piece = oracle::graded_piece(i, d);
      auto j_piece = oracle::graded_piece(j, d);
      // intersection of graded pieces, via dim + containment
      CHECK(cap_ours.dim() <= i_piece.dim());
      for (const auto& g : cap.generators())
        if (g.is_homogeneous() && g.degree() >= 0 && static_cast<unsigned>(g.degree()) <= d)
          CHECK((i.contains(g) && j.contains(g)));
      // dim check: dim(I_d) + dim(J_d) - dim((I+J)_d) = dim((I cap J)_d)
      Ideal sum(ring, [&] {
        auto gens = i.generators();
        for (const auto& g : j.generators()) gens.push_back(g);
        return gens;
      }());
      auto sum_piece = oracle::graded_piece(sum, d);
      CHECK(cap_ours.dim() == i_piece.dim() + j_piece.dim() - sum_piece.dim());
    }
  }
  CHECK(rounds >= 6); // the sampler must not degenerate
}
