#pragma once

// JSON documents for the CLI. Every document is an object whose "kind" is
// one of "element", "matrix", "report", "pairing_table"; scalars and
// algebra elements appear as their plain printed strings.

#include <nlohmann/json.hpp>

#include <span>
#include <string>

#include "slq/chern.hpp"
#include "slq/projectors.hpp"
#include "slq/report.hpp"

namespace slq {

using Json = nlohmann::ordered_json;

Json element_json(const AlgebraElement& x);
Json matrix_json(const AlgebraMatrix& m);
Json matrix_json(const ScalarMatrix& m);
Json report_json(const VerificationReport& r);
Json pairing_json(const PairingResult& p);
Json pairing_table_json(std::span<const PairingResult> rows);

std::string serialize_report(const VerificationReport& r);
std::string serialize_report(std::span<const PairingResult> rows);
std::string serialize_report(const AlgebraMatrix& m);

}  // namespace slq
