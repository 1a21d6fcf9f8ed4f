#include "cli.hpp"

#include <CLI11.hpp>

#include "selflink/report.hpp"
#include "session.hpp"

namespace selflink::cli {

namespace {

struct Common {
  std::string ring_spec;
  std::string order_name = "grevlex";
  std::string file;
  bool json = false;

  Session session() const {
    if (!file.empty()) {
      Session s = load_session(file);
      if (!ring_spec.empty())
        throw InputError("--ring conflicts with --file (the session declares the ring)");
      return s;
    }
    Session s;
    if (!ring_spec.empty())
      s.ring = PolyRing::parse(ring_spec, MonomialOrder::parse(order_name));
    return s;
  }

  RingPtr require_ring(const Session& s) const {
    if (!s.ring) throw InputError("no ring given: pass --ring or --file");
    return s.ring;
  }
};

void add_common(CLI::App* cmd, Common& common, bool with_ring = true) {
  if (with_ring) {
    cmd->add_option("--ring", common.ring_spec, "ring, e.g. QQ[x,y,z] or GF(11)[x,y]");
    cmd->add_option("--order", common.order_name, "monomial order: grevlex|lex")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    cmd->add_option("--file", common.file, "session file declaring ring and named objects");
  }
  cmd->add_flag("--json", common.json, "print the machine-readable report");
}

void emit(const Common& common, std::ostream& out, const nlohmann::json& doc,
          const std::string& human) {
  if (common.json)
    out << doc.dump(2) << "\n";
  else
    out << human;
}

std::string verdict_line(const SelfLinkCertificate& cert) {
  std::ostringstream os;
  os << "self-linked: " << (cert.verdict ? "yes" : "no") << "\n"
     << "  contains(f,g in I_C)  " << (cert.contains ? "yes" : "no") << "\n"
     << "  regular sequence      " << (cert.regular_sequence ? "yes" : "no") << "\n"
     << "  (f,g):I_C = I_C       " << (cert.colon_equal ? "yes" : "no") << "\n"
     << "  I_C^2 in (f,g)        " << (cert.square_contained ? "yes" : "no") << "\n"
     << "  colon generators:";
  for (const auto& g : cert.colon_generators) os << " " << g.str() << ";";
  os << "\n";
  return os.str();
}

// parse "1,2,3"
std::vector<int> parse_twists(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (out.empty()) throw InputError("empty twist list");
  return out;
}

// L = L0 x + L1 y from a linear-form literal in the designated variables
std::pair<Coeff, Coeff> parse_contact_form(const CoefficientField& field,
                                           const std::string& text) {
  RingPtr ring = PolyRing::make(field, {"x", "y"});
  Polynomial l = Polynomial::parse(ring, text);
  if (!l.is_zero() && !(l.is_homogeneous() && l.degree() == 1))
    throw InputError("L must be a linear form in x, y (or 0)");
  Coeff l0 = field.zero(), l1 = field.zero();
  for (const auto& t : l.terms()) {
    if (t.mono[0] == 1) l0 = t.coeff;
    if (t.mono[1] == 1) l1 = t.coeff;
  }
  return {l0, l1};
}

int run_checked(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  try {
    return run_checked(argc, argv, out, err);
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << "\n";
    return 3;
  } catch (const CLI::ParseError&) {
    throw; // handled inside run_checked
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

namespace {

int run_checked(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"selflink: exact verification and construction of self-linked "
               "codimension-2 subschemes via symmetric determinantal data"};
  app.require_subcommand(1);

  // ---- gb / nf / colon / intersect / hilbert ------------------------------
  Common c_gb;
  std::string gb_ideal;
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis of an ideal");
  add_common(gb, c_gb);
  gb->add_option("--ideal", gb_ideal, "comma-separated generators or a session name")
      ->required();

  Common c_nf;
  std::string nf_ideal, nf_poly;
  auto* nf = app.add_subcommand("nf", "normal form of a polynomial");
  add_common(nf, c_nf);
  nf->add_option("--ideal", nf_ideal)->required();
  nf->add_option("--poly", nf_poly)->required();

  Common c_colon;
  std::string colon_ideal, colon_by;
  auto* colon = app.add_subcommand("colon", "colon ideal I : J");
  add_common(colon, c_colon);
  colon->add_option("--ideal", colon_ideal)->required();
  colon->add_option("--by", colon_by)->required();

  Common c_cap;
  std::string cap_ideal, cap_with;
  auto* cap = app.add_subcommand("intersect", "ideal intersection");
  add_common(cap, c_cap);
  cap->add_option("--ideal", cap_ideal)->required();
  cap->add_option("--with", cap_with)->required();

  Common c_hilb;
  std::string hilb_ideal;
  auto* hilb = app.add_subcommand("hilbert", "Hilbert series / polynomial / degree");
  add_common(hilb, c_hilb);
  hilb->add_option("--ideal", hilb_ideal)->required();

  // ---- det / minors -------------------------------------------------------
  Common c_det;
  std::string det_matrix;
  auto* detc = app.add_subcommand("det", "exact determinant");
  add_common(detc, c_det);
  detc->add_option("--matrix", det_matrix, "[a, b; c, d] literal or session name")
      ->required();

  Common c_min;
  std::string min_matrix;
  auto* minors = app.add_subcommand("minors", "signed maximal minors of an r x (r+1) matrix");
  add_common(minors, c_min);
  minors->add_option("--matrix", min_matrix)->required();

  // ---- verify / construct / compare / parity ------------------------------
  Common c_verify;
  std::string v_ideal, v_f, v_g;
  auto* verify = app.add_subcommand("verify", "verify self-linkage of C through (f, g)");
  add_common(verify, c_verify);
  verify->add_option("--ideal", v_ideal)->required();
  verify->add_option("--f", v_f)->required();
  verify->add_option("--g", v_g)->required();

  Common c_cons;
  std::string cons_twists, cons_lambda, cons_alpha, cons_gamma;
  int cons_d = -1, cons_m = -1;
  auto* cons = app.add_subcommand(
      "construct", "build (f, g, I_C) from symmetric determinantal data and verify");
  add_common(cons, c_cons);
  cons->add_option("--twists", cons_twists, "comma-separated twists a_1..a_r")->required();
  cons->add_option("--lambda", cons_lambda, "r x 1 column")->required();
  cons->add_option("--alpha", cons_alpha, "r x r symmetric block")->required();
  cons->add_option("--gamma", cons_gamma, "corner entry (only for d = m)");
  cons->add_option("--d", cons_d, "degree of f (inferred when omitted)");
  cons->add_option("--m", cons_m, "degree of g (inferred when omitted)");

  Common c_cmp;
  std::string cmp_ideal, cmp_f, cmp_g, cmp_h;
  auto* cmp = app.add_subcommand(
      "compare", "compare two self-linkages of C sharing the higher-degree generator g");
  cmp->set_help_flag("--help", "print help"); // frees -h for the second hypersurface
  add_common(cmp, c_cmp);
  cmp->add_option("--ideal", cmp_ideal)->required();
  cmp->add_option("--g", cmp_g)->required();
  cmp->add_option("--f", cmp_f)->required();
  cmp->add_option("--h", cmp_h)->required();

  Common c_par;
  std::string par_ideal;
  int par_d = 0, par_m = 0;
  auto* par = app.add_subcommand("parity", "the two parity congruences for C in P^n");
  add_common(par, c_par);
  par->add_option("--ideal", par_ideal, "homogeneous ideal of C")->required();
  par->add_option("--d", par_d)->required();
  par->add_option("--m", par_m)->required();

  // ---- contact / demo33 ---------------------------------------------------
  Common c_contact;
  std::string contact_field = "QQ", contact_l;
  auto* contact =
      app.add_subcommand("contact", "solve y^3 + L x^2 = eta^3 + M xi^2 in linear forms");
  add_common(contact, c_contact, /*with_ring=*/false);
  contact->add_option("--field", contact_field, "QQ or GF(p)");
  contact->add_option("--L", contact_l, "linear form in x, y")->required();

  Common c_demo;
  std::string demo_field = "QQ", demo_l;
  auto* demo = app.add_subcommand(
      "demo33", "the non-uniqueness demonstration: two distinct linkages of one scheme");
  add_common(demo, c_demo, /*with_ring=*/false);
  demo->add_option("--field", demo_field, "QQ or GF(p)");
  demo->add_option("--L", demo_l, "nonzero linear form in x, y")->required();

  auto* st = app.add_subcommand("selftest", "run the example regression corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (gb->parsed()) {
    Session s = c_gb.session();
    Ideal ideal(c_gb.require_ring(s), resolve_ideal(s, gb_ideal));
    const auto& basis = ideal.groebner().basis();
    nlohmann::json doc{{"report", "groebner"}, {"ring", ring_to_json(*ideal.ring())}};
    doc["basis"] = nlohmann::json::array();
    std::ostringstream human;
    human << "reduced Groebner basis (" << basis.size() << " elements):\n";
    for (const auto& g : basis) {
      doc["basis"].push_back(g.str());
      human << "  " << g.str() << "\n";
    }
    emit(c_gb, out, doc, human.str());
    return 0;
  }

  if (nf->parsed()) {
    Session s = c_nf.session();
    Ideal ideal(c_nf.require_ring(s), resolve_ideal(s, nf_ideal));
    Polynomial p = resolve_poly(s, nf_poly);
    Polynomial r = normal_form(p, ideal.groebner());
    emit(c_nf, out,
         nlohmann::json{{"report", "normal-form"}, {"poly", p.str()}, {"normal_form", r.str()}},
         "normal form: " + r.str() + "\n");
    return 0;
  }

  if (colon->parsed()) {
    Session s = c_colon.session();
    RingPtr ring = c_colon.require_ring(s);
    Ideal result =
        ideal_colon(Ideal(ring, resolve_ideal(s, colon_ideal)),
                    Ideal(ring, resolve_ideal(s, colon_by)));
    const auto& basis = result.groebner().basis();
    nlohmann::json doc{{"report", "colon"}};
    doc["generators"] = nlohmann::json::array();
    std::ostringstream human;
    human << "I : J =";
    for (const auto& g : basis) {
      doc["generators"].push_back(g.str());
      human << " " << g.str() << ";";
    }
    human << "\n";
    emit(c_colon, out, doc, human.str());
    return 0;
  }

  if (cap->parsed()) {
    Session s = c_cap.session();
    RingPtr ring = c_cap.require_ring(s);
    Ideal result = ideal_intersect(Ideal(ring, resolve_ideal(s, cap_ideal)),
                                   Ideal(ring, resolve_ideal(s, cap_with)));
    const auto& basis = result.groebner().basis();
    nlohmann::json doc{{"report", "intersect"}};
    doc["generators"] = nlohmann::json::array();
    std::ostringstream human;
    human << "I cap J =";
    for (const auto& g : basis) {
      doc["generators"].push_back(g.str());
      human << " " << g.str() << ";";
    }
    human << "\n";
    emit(c_cap, out, doc, human.str());
    return 0;
  }

  if (hilb->parsed()) {
    Session s = c_hilb.session();
    Ideal ideal(c_hilb.require_ring(s), resolve_ideal(s, hilb_ideal));
    HilbertData h = hilbert(ideal);
    std::ostringstream human;
    human << "dimension " << h.dimension << ", degree " << h.degree.get_str()
          << ", Hilbert polynomial";
    if (h.polynomial.empty()) human << " 0";
    for (std::size_t i = 0; i < h.polynomial.size(); ++i)
      human << (i ? " + " : " ") << CoefficientField::str(h.polynomial[i]) << "*t^" << i;
    human << "\n";
    emit(c_hilb, out, to_json(h), human.str());
    return 0;
  }

  if (detc->parsed()) {
    Session s = c_det.session();
    Polynomial d = det(resolve_matrix(s, det_matrix));
    emit(c_det, out, nlohmann::json{{"report", "det"}, {"det", d.str()}},
         "det = " + d.str() + "\n");
    return 0;
  }

  if (minors->parsed()) {
    Session s = c_min.session();
    auto ms = maximal_minors(resolve_matrix(s, min_matrix));
    nlohmann::json doc{{"report", "minors"}};
    doc["minors"] = nlohmann::json::array();
    std::ostringstream human;
    human << "maximal minors:";
    for (const auto& m : ms) {
      doc["minors"].push_back(m.str());
      human << " " << m.str() << ";";
    }
    human << "\n";
    emit(c_min, out, doc, human.str());
    return 0;
  }

  if (verify->parsed()) {
    Session s = c_verify.session();
    RingPtr ring = c_verify.require_ring(s);
    auto cert = verify_selflinked(Ideal(ring, resolve_ideal(s, v_ideal)),
                                  resolve_poly(s, v_f), resolve_poly(s, v_g));
    emit(c_verify, out, to_json(cert), verdict_line(cert));
    return cert.verdict ? 0 : 1;
  }

  if (cons->parsed()) {
    Session s = c_cons.session();
    RingPtr ring = c_cons.require_ring(s);
    PolyMatrix lambda = resolve_matrix(s, cons_lambda);
    PolyMatrix alpha = resolve_matrix(s, cons_alpha);
    std::vector<int> twists = parse_twists(cons_twists);
    Polynomial gamma =
        cons_gamma.empty() ? Polynomial::zero(ring) : resolve_poly(s, cons_gamma);
    int m = cons_m;
    if (m < 0) {
      Polynomial da = det(alpha);
      if (da.is_zero()) throw InputError("degenerate datum: det(alpha) = 0");
      m = da.degree();
    }
    int d = cons_d;
    if (d < 0) {
      for (std::size_t i = 0; i < lambda.rows() && d < 0; ++i)
        if (!lambda.at(i, 0).is_zero())
          d = lambda.at(i, 0).degree() + twists[i];
      if (d < 0) throw InputError("cannot infer d: the column is zero; pass --d");
    }
    SymmetricDatum datum{ring, GradedProfile{twists, d, m}, std::move(lambda),
                         std::move(alpha), std::move(gamma)};
    auto res = construct(datum);
    std::ostringstream human;
    human << "f = " << res.f.str() << "\ng = " << res.g.str() << "\nI_C = "
          << res.ideal.str() << "\n"
          << verdict_line(res.certificate);
    emit(c_cons, out, to_json(res), human.str());
    return res.certificate.verdict ? 0 : 1;
  }

  if (cmp->parsed()) {
    Session s = c_cmp.session();
    RingPtr ring = c_cmp.require_ring(s);
    auto rep = compare_linkages(Ideal(ring, resolve_ideal(s, cmp_ideal)),
                                resolve_poly(s, cmp_g), resolve_poly(s, cmp_f),
                                resolve_poly(s, cmp_h));
    std::ostringstream human;
    human << "both linkages verify; (f,g) " << (rep.equal ? "=" : "!=") << " (h,g)\n";
    emit(c_cmp, out, to_json(rep), human.str());
    return rep.equal ? 0 : 1;
  }

  if (par->parsed()) {
    Session s = c_par.session();
    RingPtr ring = c_par.require_ring(s);
    Ideal ideal(ring, resolve_ideal(s, par_ideal));
    const int n = static_cast<int>(ring->nvars()) - 1;
    auto rep = parity_check(n, par_d, par_m, hilbert(ideal));
    std::ostringstream human;
    human << "parity: "
          << (rep.status == ParityStatus::vacuous
                  ? "vacuous"
                  : (rep.status == ParityStatus::holds ? "holds" : "fails"));
    if (rep.rho)
      human << " (rho = " << *rep.rho << ", residues " << rep.residues[0] << ", "
            << rep.residues[1] << ")";
    human << "\n";
    emit(c_par, out, to_json(rep), human.str());
    return rep.status == ParityStatus::fails ? 1 : 0;
  }

  if (contact->parsed()) {
    auto field = CoefficientField::parse(contact_field);
    auto [l0, l1] = parse_contact_form(field, contact_l);
    auto sol = cube_contact(field, l0, l1);
    std::ostringstream human;
    human << "xi = " << sol.xi.str() << ", eta = " << sol.eta.str()
          << ", M = " << sol.m_form.str() << "\n";
    emit(c_contact, out, to_json(sol), human.str());
    return 0;
  }

  if (demo->parsed()) {
    auto field = CoefficientField::parse(demo_field);
    auto [l0, l1] = parse_contact_form(field, demo_l);
    auto rep = demo33(field, l0, l1);
    std::ostringstream human;
    human << "f = " << rep.f.str() << ", g = " << rep.g.str()
          << ", g_hat = " << rep.g_hat.str() << ", h = " << rep.h.str() << "\n"
          << "self-linked through (f,g):      " << (rep.selflinked_fg ? "yes" : "no") << "\n"
          << "self-linked through (h,g_hat):  " << (rep.selflinked_hghat ? "yes" : "no")
          << "\n"
          << "(h,g_hat) = (xi^2,eta^3):       " << (rep.hghat_is_xi2_eta3 ? "yes" : "no")
          << "\n"
          << "(f,g) != (h,g_hat):             "
          << (rep.linkage_ideals_differ ? "yes" : "no") << "\n";
    emit(c_demo, out, to_json(rep), human.str());
    return rep.verdict ? 0 : 1;
  }

  if (st->parsed()) return selftest(out);

  err << "no subcommand\n";
  return 2;
}

} // namespace

} // namespace selflink::cli
