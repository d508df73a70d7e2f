#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hypeuler/field_table.hpp"
#include "hypeuler/search.hpp"

namespace hypeuler {

using Json = nlohmann::ordered_json;

inline constexpr const char* kCertificateFormat = "hypeuler-certificate v1";

/// SHA-256 of the canonical maximal-type formulas, one per line.
std::string maximal_type_fingerprint();

/// Assembles the certificate. Key order is fixed and no field depends on
/// time or scheduling, so equal inputs give equal bytes.
Json build_certificate(const std::vector<CertificateSection>& sections, const FieldTable& table, long bits);

/// Certificate for a run that failed before any section could be computed.
Json failed_certificate(const std::string& error, long bits);

/// Pretty-printed, newline-terminated.
std::string serialize_certificate(const Json& cert);

/// "nonexistence certified" only if every section is; "failed" if any
/// failed; "inconclusive" otherwise. "failed" for an empty list.
Verdict overall_verdict(const std::vector<CertificateSection>& sections);

/// 0 certified, 2 inconclusive, 1 failed.
int exit_code(Verdict v);

Verdict parse_verdict(const std::string& text);

}  // namespace hypeuler
