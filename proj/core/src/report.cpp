#include "selflink/report.hpp"

namespace selflink {

using nlohmann::json;

namespace {

json polys_to_json(const std::vector<Polynomial>& ps) {
  json arr = json::array();
  for (const auto& p : ps) arr.push_back(p.str());
  return arr;
}

std::string coeff_str(const Coeff& c) { return CoefficientField::str(c); }

} // namespace

json ring_to_json(const PolyRing& ring) {
  return json{{"field", ring.field().description()},
              {"variables", ring.variables()},
              {"order", ring.order().name()}};
}

RingPtr ring_from_json(const json& j) {
  CoefficientField field = CoefficientField::parse(j.at("field").get<std::string>());
  std::vector<std::string> names = j.at("variables").get<std::vector<std::string>>();
  MonomialOrder order = MonomialOrder::parse(j.at("order").get<std::string>());
  return PolyRing::make(std::move(field), std::move(names), order);
}

json to_json(const SelfLinkCertificate& cert) {
  return json{{"report", "selflink-certificate"},
              {"ring", ring_to_json(*cert.ring)},
              {"ideal", polys_to_json(cert.ideal_gens)},
              {"f", cert.f.str()},
              {"g", cert.g.str()},
              {"d", cert.d},
              {"m", cert.m},
              {"swapped", cert.swapped},
              {"contains", cert.contains},
              {"regular_sequence", cert.regular_sequence},
              {"colon_equal", cert.colon_equal},
              {"square_contained", cert.square_contained},
              {"verdict", cert.verdict},
              {"consistent", cert.consistent},
              {"colon_generators", polys_to_json(cert.colon_generators)}};
}

VerifyInputs verify_inputs_from_json(const json& j) {
  RingPtr ring = ring_from_json(j.at("ring"));
  VerifyInputs in{ring, {}, Polynomial::zero(ring), Polynomial::zero(ring)};
  for (const auto& s : j.at("ideal"))
    in.ideal_gens.push_back(Polynomial::parse(ring, s.get<std::string>()));
  in.f = Polynomial::parse(ring, j.at("f").get<std::string>());
  in.g = Polynomial::parse(ring, j.at("g").get<std::string>());
  return in;
}

json to_json(const ParityReport& r) {
  json j{{"report", "parity"},
         {"n", r.n},
         {"d", r.d},
         {"m", r.m},
         {"dm_even", r.dm_even},
         {"parity_status", r.status == ParityStatus::vacuous
                               ? "vacuous"
                               : (r.status == ParityStatus::holds ? "holds" : "fails")}};
  if (r.rho) {
    j["rho"] = *r.rho;
    j["residues"] = json::array({r.residues[0], r.residues[1]});
    j["chi"] = json{{"rho", coeff_str(r.chi_rho)},
                    {"rho_minus_d", coeff_str(r.chi_rho_minus_d)},
                    {"rho_minus_m", coeff_str(r.chi_rho_minus_m)},
                    {"C_rho", coeff_str(r.chi_c_rho)}};
  }
  return j;
}

json to_json(const HilbertData& h) {
  json poly = json::array();
  for (const auto& c : h.polynomial) poly.push_back(coeff_str(c));
  return json{{"report", "hilbert"},
              {"series_numerator", h.series_numerator},
              {"polynomial", poly},
              {"dimension", h.dimension},
              {"degree", h.degree.get_str()},
              {"stability", h.stability},
              {"nvars", h.nvars}};
}

json to_json(const CompareReport& r) {
  return json{{"report", "compare"},
              {"equal", r.equal},
              {"first", to_json(r.first)},
              {"second", to_json(r.second)}};
}

json to_json(const ContactSolution& s) {
  const char* branch = s.branch == ContactBranch::l0_nonzero
                           ? "L0_nonzero"
                           : (s.branch == ContactBranch::l_zero ? "L_zero" : "L0_zero_L1_nonzero");
  json j{{"report", "contact"},
         {"ring", ring_to_json(*s.ring)},
         {"L", s.l.str()},
         {"branch", branch},
         {"via_sweep", s.via_sweep},
         {"xi", s.xi.str()},
         {"eta", s.eta.str()},
         {"M", s.m_form.str()},
         {"verified", s.verified}};
  if (s.quartic_root) j["a"] = coeff_str(*s.quartic_root);
  return j;
}

json to_json(const Demo33Report& r) {
  return json{{"report", "demo33"},
              {"ring", ring_to_json(*r.ring)},
              {"L", r.l.str()},
              {"f", r.f.str()},
              {"g", r.g.str()},
              {"g_hat", r.g_hat.str()},
              {"h", r.h.str()},
              {"xi", r.xi.str()},
              {"eta", r.eta.str()},
              {"selflinked_fg", r.selflinked_fg},
              {"selflinked_hghat", r.selflinked_hghat},
              {"hghat_is_xi2_eta3", r.hghat_is_xi2_eta3},
              {"linkage_ideals_differ", r.linkage_ideals_differ},
              {"verdict", r.verdict},
              {"certificate_fg", to_json(r.cert_fg)},
              {"certificate_hghat", to_json(r.cert_hghat)},
              {"gorenstein_note", r.gorenstein_note}};
}

json to_json(const ConstructResult& r) {
  return json{{"report", "construct"},
              {"f", r.f.str()},
              {"g", r.g.str()},
              {"ideal", polys_to_json(r.ideal.generators())},
              {"certificate", to_json(r.certificate)}};
}

json to_json(const GradedReport& r) {
  return json{{"report", "graded"}, {"ok", r.ok}, {"violations", r.violations}};
}

} // namespace selflink
