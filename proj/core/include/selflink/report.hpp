#pragma once

#include <json.hpp>

#include "selflink/contact.hpp"

namespace selflink {

/// Machine-readable reports. Field names are stable: `verdict`,
/// `colon_equal`, `regular_sequence`, `square_contained`, `parity_status`,
/// `rho`, `residues`.
nlohmann::json to_json(const SelfLinkCertificate& cert);
nlohmann::json to_json(const ParityReport& report);
nlohmann::json to_json(const HilbertData& data);
nlohmann::json to_json(const CompareReport& report);
nlohmann::json to_json(const ContactSolution& sol);
nlohmann::json to_json(const Demo33Report& report);
nlohmann::json to_json(const ConstructResult& result);
nlohmann::json to_json(const GradedReport& report);

nlohmann::json ring_to_json(const PolyRing& ring);
RingPtr ring_from_json(const nlohmann::json& j);

/// The inputs a verification report carries, re-parsed; feeding them back
/// through verify_selflinked must reproduce the same verdicts.
struct VerifyInputs {
  RingPtr ring;
  std::vector<Polynomial> ideal_gens;
  Polynomial f, g;
};
VerifyInputs verify_inputs_from_json(const nlohmann::json& j);

} // namespace selflink
