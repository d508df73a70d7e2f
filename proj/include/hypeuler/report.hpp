#pragma once

#include <string>

#include "hypeuler/certificate.hpp"

namespace hypeuler {

/// Plain-text summary of a certificate: per-n verdicts, bounds, candidate
/// fields with their special values and witnesses, and a table of all
/// special values by field. A certificate without sections yields only the
/// header.
std::string render_report(const Json& cert);

}  // namespace hypeuler
