#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degen/graph.hpp"
#include "degen/reducer.hpp"

namespace degen {

// {"gamma":"p/q","events":[{"op":"collect","v":3},...],"deletions":[...]} on one line.
std::string certificate_to_json(const ExtractionCertificate& cert);

// Throws FormatError on malformed JSON or schema mismatches.
ExtractionCertificate certificate_from_json(std::string_view text);

// JSON lines; blank lines and {"header": ...} lines are skipped.
std::vector<ExtractionCertificate> read_certificates(std::istream& in);

struct CertificateReport {
  bool ok = false;
  std::optional<std::size_t> event;  // index of the offending event, if any
  std::string message;
};

// Replays the certificate from scratch against g: gamma, budget, legality of
// every event, emptiness at the end and 4-degeneracy of the survivors.
CertificateReport verify_certificate(const Graph& g, const ExtractionCertificate& cert);

}  // namespace degen
