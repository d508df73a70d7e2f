#pragma once

#include <filesystem>
#include <string>

#include "hypeuler/certificate.hpp"
#include "hypeuler/field_table.hpp"

namespace hypeuler {

struct VerifyResult {
    bool ok = false;
    std::string divergence;  // first claim that did not check out
    long checks = 0;         // claims re-derived before stopping
};

/// Re-derives every claim of the certificate from the dataset alone. Only
/// the exact arithmetic layer and the dataset loader are shared with the
/// certifier: characters, Bernoulli sums, lambda closed forms, bounds and
/// candidate lists are recomputed here by separate code.
VerifyResult verify_certificate(const Json& cert, const FieldTable& table);

/// Parses `path` first; a parse failure is reported as a divergence.
VerifyResult verify_certificate_file(const std::filesystem::path& path, const FieldTable& table);

}  // namespace hypeuler
