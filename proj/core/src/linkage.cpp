#include "selflink/linkage.hpp"

#include <functional>
#include <random>
#include <sstream>

namespace selflink {

SelfLinkCertificate verify_selflinked(const Ideal& c, Polynomial f, Polynomial g) {
  require_same_ring(c.ring(), f.ring());
  require_same_ring(c.ring(), g.ring());
  if (f.is_zero() || g.is_zero())
    throw InputError("verify_selflinked needs nonzero hypersurface equations");
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw InputError("hypersurface equations must be homogeneous");

  SelfLinkCertificate cert;
  cert.ring = c.ring();
  cert.swapped = f.degree() > g.degree();
  if (cert.swapped) std::swap(f, g);
  cert.f = f;
  cert.g = g;
  cert.d = f.degree();
  cert.m = g.degree();
  cert.ideal_gens = c.generators();

  cert.contains = c.contains(f) && c.contains(g);

  Ideal x(c.ring(), {f, g});
  cert.regular_sequence = codim(x) == 2;

  Ideal colon = ideal_colon(x, c);
  cert.colon_generators = colon.groebner().basis();
  cert.colon_equal = ideal_equal(colon, c);

  cert.square_contained = square_containment(c, f, g);

  cert.verdict = cert.contains && cert.regular_sequence && cert.colon_equal;
  cert.consistent = !cert.colon_equal || cert.square_contained;
  return cert;
}

ConstructResult construct(const SymmetricDatum& datum) {
  const RingPtr& ring = datum.ring;
  require_same_ring(ring, datum.lambda.ring());
  require_same_ring(ring, datum.alpha.ring());

  GradedReport graded = check_graded(datum.profile, datum.lambda, datum.alpha, &datum.gamma);
  if (!graded.ok) {
    std::ostringstream os;
    os << "degree-profile violation:";
    for (const auto& v : graded.violations) os << " " << v << ";";
    throw InputError(os.str());
  }

  Polynomial g = det(datum.alpha);
  if (g.is_zero()) throw InputError("degenerate datum: det(alpha) = 0");
  if (g.degree() != datum.profile.m) {
    std::ostringstream os;
    os << "det(alpha) has degree " << g.degree() << ", expected m = " << datum.profile.m;
    throw InputError(os.str());
  }

  Polynomial f = det(border(datum.gamma, datum.lambda, datum.alpha));

  const std::size_t r = datum.alpha.rows();
  PolyMatrix stacked(ring, r, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    stacked.set(i, 0, datum.lambda.at(i, 0));
    for (std::size_t j = 0; j < r; ++j) stacked.set(i, j + 1, datum.alpha.at(i, j));
  }
  Ideal c(ring, maximal_minors(stacked));
  if (codim(c) != 2) {
    std::ostringstream os;
    os << "degenerate datum: the minor ideal has codimension " << codim(c) << ", not 2";
    throw InputError(os.str());
  }

  SelfLinkCertificate cert = verify_selflinked(c, f, g);
  return ConstructResult{std::move(f), std::move(g), std::move(c), std::move(cert)};
}

bool minor_identity_check(const PolyMatrix& lambda, const PolyMatrix& alpha,
                          const Polynomial& f, const Polynomial& g) {
  const RingPtr& ring = alpha.ring();
  const std::size_t r = alpha.rows();
  if (lambda.rows() != r || lambda.cols() != 1)
    throw InputError("minor identity check: lambda must be r x 1");
  PolyMatrix stacked(ring, r, r + 1);
  for (std::size_t i = 0; i < r; ++i) {
    stacked.set(i, 0, lambda.at(i, 0));
    for (std::size_t j = 0; j < r; ++j) stacked.set(i, j + 1, alpha.at(i, j));
  }
  std::vector<Polynomial> minors = maximal_minors(stacked);
  Ideal x(ring, {f, g});
  for (std::size_t i = 0; i < minors.size(); ++i)
    for (std::size_t j = i; j < minors.size(); ++j)
      if (!x.contains(minors[i] * minors[j])) return false;
  return true;
}

bool square_containment(const Ideal& c, const Polynomial& f, const Polynomial& g) {
  Ideal x(c.ring(), {f, g});
  return x.contains_ideal(ideal_product(c, c));
}

Coeff euler_char(int n, long h) {
  if (n < 1) throw InputError("euler_char needs n >= 1");
  Coeff num(1);
  for (int i = 1; i <= n; ++i) num *= Coeff(h + i);
  mpz_class fact(1);
  for (int i = 2; i <= n; ++i) fact *= i;
  return num / Coeff(fact);
}

ParityReport parity_check(int n, int d, int m, const HilbertData& c_data) {
  if (d < 1 || m < 1) throw InputError("parity_check needs d, m >= 1");
  if (c_data.nvars != static_cast<std::size_t>(n) + 1)
    throw InputError("inconsistent ambient dimension: Hilbert data lives in " +
                     std::to_string(c_data.nvars) + " variables, expected n+1 = " +
                     std::to_string(n + 1));
  ParityReport report;
  report.n = n;
  report.d = d;
  report.m = m;
  report.dm_even = (static_cast<long>(d) * m) % 2 == 0;

  if (n % 4 != 1 || (d + m - n - 1) % 2 != 0) {
    report.status = ParityStatus::vacuous;
    return report;
  }
  const long rho = (d + m - n - 1) / 2;
  report.rho = rho;
  report.chi_rho = euler_char(n, rho);
  report.chi_rho_minus_d = euler_char(n, rho - d);
  report.chi_rho_minus_m = euler_char(n, rho - m);
  report.chi_c_rho = c_data.eval(rho);

  auto residue = [](const Coeff& v) {
    if (v.get_den() != 1) throw Error("internal: non-integral Euler characteristic");
    mpz_class r = v.get_num() % 2;
    if (r < 0) r += 2;
    return static_cast<int>(r.get_si());
  };
  report.residues[0] = residue(report.chi_rho - report.chi_rho_minus_d - report.chi_c_rho);
  report.residues[1] = residue(report.chi_rho - report.chi_rho_minus_m - report.chi_c_rho);
  report.status = (report.residues[0] == 0 && report.residues[1] == 0) ? ParityStatus::holds
                                                                       : ParityStatus::fails;
  return report;
}

CompareReport compare_linkages(const Ideal& c, const Polynomial& g, const Polynomial& f,
                               const Polynomial& h) {
  if (f.degree() > g.degree() || h.degree() > g.degree())
    throw InputError("compare_linkages expects deg f, deg h <= deg g");
  CompareReport report;
  report.first = verify_selflinked(c, f, g);
  report.second = verify_selflinked(c, h, g);
  if (!report.first.verdict)
    throw InputError("compare_linkages: C is not self-linked through (f, g)");
  if (!report.second.verdict)
    throw InputError("compare_linkages: C is not self-linked through (h, g)");
  report.equal = ideal_equal(Ideal(c.ring(), {f, g}), Ideal(c.ring(), {h, g}));
  return report;
}

namespace {

std::vector<std::string> projective_names(int n) {
  static const char* letters[] = {"x", "y", "z", "w", "u", "v", "s", "r"};
  std::vector<std::string> names;
  if (n + 1 <= 8) {
    for (int i = 0; i <= n; ++i) names.push_back(letters[i]);
  } else {
    for (int i = 0; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

// dense homogeneous polynomial of the given degree with uniform coefficients
Polynomial random_form(const RingPtr& ring, int degree, std::mt19937_64& rng) {
  if (degree < 0) return Polynomial::zero(ring);
  const auto& field = ring->field();
  const std::size_t n = ring->nvars();
  std::vector<Term> terms;
  // enumerate all exponent vectors of total degree `degree`
  std::vector<unsigned> e(n, 0);
  e[0] = static_cast<unsigned>(degree);
  auto emit = [&](const std::vector<unsigned>& exps) {
    Coeff c;
    if (field.is_prime_field()) {
      std::uniform_int_distribution<unsigned long> dist(0, field.p() - 1);
      c = field.from_long(static_cast<long>(dist(rng)));
    } else {
      std::uniform_int_distribution<int> dist(-9, 9);
      c = Coeff(dist(rng));
    }
    if (!CoefficientField::is_zero(c)) terms.push_back({Monomial(exps), c});
  };
  // iterative composition enumeration
  std::vector<unsigned> exps(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned rem) {
    if (i + 1 == n) {
      exps[i] = rem;
      emit(exps);
      return;
    }
    for (unsigned k = 0; k <= rem; ++k) {
      exps[i] = k;
      rec(i + 1, rem - k);
    }
  };
  rec(0, static_cast<unsigned>(degree));
  return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

SymmetricDatum random_datum(const CoefficientField& field, int n, std::vector<int> twists,
                            int d, int m, std::uint64_t seed, int max_tries) {
  const std::size_t r = twists.size();
  if (r == 0) throw InputError("random_datum needs at least one twist");
  const long needed = static_cast<long>(r) * (d + m) - m;
  if (needed % 2 != 0) {
    std::ostringstream os;
    os << "impossible degree profile: r(d+m)-m = " << needed
       << " is odd, no integer twist vector exists";
    throw UnsupportedError(os.str());
  }
  long sum = 0;
  for (int a : twists) sum += a;
  if (2 * sum != needed) {
    std::ostringstream os;
    os << "impossible degree profile: twist sum " << sum << " != (r(d+m)-m)/2 = "
       << needed / 2;
    throw UnsupportedError(os.str());
  }

  RingPtr ring = PolyRing::make(field, projective_names(n));
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < max_tries; ++attempt) {
    PolyMatrix lambda(ring, r, 1);
    for (std::size_t i = 0; i < r; ++i)
      lambda.set(i, 0, random_form(ring, d - twists[i], rng));
    PolyMatrix alpha(ring, r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) {
        Polynomial entry = random_form(ring, d + m - twists[i] - twists[j], rng);
        alpha.set(i, j, entry);
        alpha.set(j, i, entry);
      }
    Polynomial gamma = d == m ? random_form(ring, 0, rng) : Polynomial::zero(ring);

    if (det(alpha).is_zero()) continue;
    PolyMatrix stacked(ring, r, r + 1);
    for (std::size_t i = 0; i < r; ++i) {
      stacked.set(i, 0, lambda.at(i, 0));
      for (std::size_t j = 0; j < r; ++j) stacked.set(i, j + 1, alpha.at(i, j));
    }
    Ideal c(ring, maximal_minors(stacked));
    if (codim(c) != 2) continue;

    return SymmetricDatum{ring, GradedProfile{twists, d, m}, std::move(lambda),
                          std::move(alpha), std::move(gamma)};
  }
  throw InputError("random_datum: retry budget exhausted without a nondegenerate datum");
}

} // namespace selflink
