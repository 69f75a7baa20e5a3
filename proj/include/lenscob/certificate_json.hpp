#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "lenscob/errors.hpp"
#include "lenscob/witness.hpp"

namespace lenscob {

/// Malformed certificate document (bad JSON, missing fields, wrong shapes).
class CertificateFormatError : public Error {
 public:
  using Error::Error;
};

/// {p, q, n, a, t, l, det, valid, trace?}. Every integer is a decimal string.
nlohmann::json certificate_to_json(const Certificate& certificate);

/// Reads back the stored fields verbatim; det and valid are *not* recomputed.
/// Throws CertificateFormatError on any schema violation.
Certificate certificate_from_json(const nlohmann::json& doc);

Certificate parse_certificate(std::string_view text);

nlohmann::json trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const nlohmann::json& doc);

}  // namespace lenscob
