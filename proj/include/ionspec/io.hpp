// io.hpp — Artifact serialization: CSV spectra and JSON documents

#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "ionspec/spectra.hpp"

namespace ionspec {

// The pinned artifact number format: 12 significant digits, scientific.
std::string format_number(double x);

// Header `delta,chi_prime,chi_double_prime`, one row per grid point.
// Byte-identical output for identical input.
void write_spectrum_csv(const SpectrumResult& spectrum, std::ostream& out);
std::string spectrum_csv(const SpectrumResult& spectrum);

// JSON documents carry a schema_version field ("1") and the full resolved
// parameter set, so a figure is reproducible from the artifact alone.
extern const char* const kSchemaVersion;

nlohmann::json to_json(const ModelParams& p);
nlohmann::json to_json(const SweepConfig& config);
nlohmann::json to_json(const Diagnostics& d);
nlohmann::json to_json(const DipMetrics& m);
nlohmann::json to_json(const PoleStructure& ps);
nlohmann::json to_json(const SpectrumResult& spectrum);

} // namespace ionspec
