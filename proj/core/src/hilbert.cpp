#include "selflink/hilbert.hpp"

#include <algorithm>

namespace selflink {

namespace {

using Numer = std::vector<long long>; // integer polynomial in t, ascending

Numer numer_mul(const Numer& a, const Numer& b) {
  if (a.empty() || b.empty()) return {};
  Numer r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Numer numer_add_shifted(Numer a, const Numer& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// minimal generating set of a monomial ideal
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

// Hilbert series numerator of R/(monomial ideal) over (1-t)^nvars, by
// splitting on a pivot variable: N(I) = N(I + (x)) + t * N(I : x).
Numer monomial_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& m : gens)
    if (m.is_one()) return {}; // unit ideal: series 0

  // pure powers x_i^{a_i}: product of (1 - t^{a_i})
  bool all_pure = true;
  for (const auto& m : gens) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++support;
    if (support > 1) {
      all_pure = false;
      break;
    }
  }
  if (all_pure) {
    Numer r{1};
    for (const auto& m : gens) {
      Numer f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] = -1;
      r = numer_mul(r, f);
    }
    return r;
  }

  // pivot: the most frequent variable among those occurring in a mixed
  // generator (lowest index on ties)
  std::vector<bool> in_mixed(nvars, false);
  for (const auto& m : gens) {
    std::size_t support = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++support;
    if (support > 1)
      for (std::size_t i = 0; i < nvars; ++i)
        if (m[i]) in_mixed[i] = true;
  }
  std::vector<std::size_t> freq(nvars, 0);
  for (const auto& m : gens)
    for (std::size_t i = 0; i < nvars; ++i)
      if (m[i]) ++freq[i];
  std::size_t pivot = nvars;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (!in_mixed[i]) continue;
    if (pivot == nvars || freq[i] > freq[pivot]) pivot = i;
  }

  std::vector<Monomial> plus;  // I + (x_pivot)
  std::vector<Monomial> colon; // I : x_pivot
  plus.push_back(Monomial::variable(nvars, pivot));
  for (const auto& m : gens) {
    if (m[pivot] == 0) plus.push_back(m);
    Monomial q = m;
    if (q[pivot] > 0) q[pivot] -= 1;
    colon.push_back(std::move(q));
  }
  Numer a = monomial_numerator(std::move(plus), nvars);
  Numer b = monomial_numerator(std::move(colon), nvars);
  return numer_add_shifted(std::move(a), b, 1);
}

// binomial-coefficient polynomial C(t + off, k) in t, ascending mpq coeffs
std::vector<Coeff> binom_poly(long off, unsigned k) {
  std::vector<Coeff> p{Coeff(1)}; // product of (t + off - i) / (i + 1)
  for (unsigned i = 0; i < k; ++i) {
    std::vector<Coeff> q(p.size() + 1, Coeff(0));
    const Coeff c(off - static_cast<long>(i));
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j] * c;
      q[j + 1] += p[j];
    }
    const Coeff denom(static_cast<long>(i) + 1);
    for (auto& x : q) x /= denom;
    p = std::move(q);
  }
  return p;
}

} // namespace

Coeff HilbertData::eval(long t) const {
  Coeff acc(0);
  Coeff power(1);
  for (const auto& c : polynomial) {
    acc += c * power;
    power *= t;
  }
  return acc;
}

HilbertData hilbert(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous())
      throw InputError("hilbert requires homogeneous generators, got " + g.str());

  const std::size_t nvars = ring->nvars();
  HilbertData data;
  data.nvars = nvars;

  const GroebnerBasis& gb = ideal.groebner();
  if (gb.is_unit_ideal()) {
    // empty scheme conventions
    data.series_numerator = {};
    data.dimension = -1;
    data.degree = 0;
    data.stability = 0;
    return data;
  }

  std::vector<Monomial> leads;
  for (const auto& g : gb.basis()) leads.push_back(g.leading_monomial());
  Numer numer = monomial_numerator(std::move(leads), nvars);
  data.series_numerator = numer;

  // cancel (1-t)^k: repeatedly divide while numer(1) == 0
  std::size_t cancelled = 0;
  auto value_at_one = [](const Numer& n) {
    long long s = 0;
    for (long long c : n) s += c;
    return s;
  };
  Numer q = numer;
  while (!q.empty() && value_at_one(q) == 0) {
    Numer next(q.size() - 1, 0);
    long long run = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      next[i] = run;
    }
    q = std::move(next);
    ++cancelled;
  }
  const std::size_t depth = nvars - cancelled; // Krull dimension of R/I

  if (depth == 0) {
    data.dimension = -1; // finite length: empty subscheme of projective space
    data.degree = 0;
    data.stability = static_cast<int>(q.size()); // deg q + 1
    return data;
  }

  // P(t) = sum_i q_i * C(t - i + depth - 1, depth - 1)
  std::vector<Coeff> poly;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    auto b = binom_poly(static_cast<long>(depth) - 1 - static_cast<long>(i),
                        static_cast<unsigned>(depth - 1));
    if (poly.size() < b.size()) poly.resize(b.size(), Coeff(0));
    const Coeff qi(static_cast<long>(q[i]));
    for (std::size_t j = 0; j < b.size(); ++j) poly[j] += qi * b[j];
  }
  while (!poly.empty() && CoefficientField::is_zero(poly.back())) poly.pop_back();
  data.polynomial = poly;
  data.dimension = static_cast<int>(depth) - 1;

  // degree = (leading coefficient) * dim!
  Coeff lead = poly.empty() ? Coeff(0) : poly.back();
  mpz_class fact(1);
  for (int i = 2; i <= data.dimension; ++i) fact *= i;
  Coeff deg = lead * Coeff(fact);
  if (deg.get_den() != 1) throw Error("internal: non-integral scheme degree");
  data.degree = deg.get_num();

  const long degq = static_cast<long>(q.size()) - 1;
  data.stability = static_cast<int>(std::max(0L, degq - static_cast<long>(depth) + 1));
  return data;
}

int codim(const Ideal& ideal) {
  HilbertData h = hilbert(ideal);
  const int n = static_cast<int>(ideal.ring()->nvars()) - 1;
  return n - h.dimension;
}

} // namespace selflink
