#pragma once

// Document formats: the system-description schema, configuration and
// cylinder literals, verdict/report serialization, and the CSV trace
// emitted by the simulate command. Parse failures throw ParseError with the
// offending document path.

#include <string>

#include <json.hpp>

#include "wgs/classify.hpp"
#include "wgs/dynamics.hpp"
#include "wgs/oracle.hpp"
#include "wgs/system.hpp"
#include "wgs/witness.hpp"

namespace wgs {

using Json = nlohmann::json;

RingSpec parse_ring_spec(const Json& j, const std::string& path);
Json ring_spec_json(const RingSpec& spec);

System parse_system(const Json& j);
System parse_system_text(const std::string& text);
System load_system_file(const std::string& file);
Json system_json(const System& sys);

SetDescriptor parse_set(const Json& j, const std::string& path);
Json set_json(const SetDescriptor& s);

Config parse_config(const System& sys, const Json& j, const std::string& path);
Json config_json(const System& sys, const Config& c);

Cylinder parse_cylinder(const System& sys, const Json& j, const std::string& path);

Json verdict_json(const Verdict& v);
Json report_json(const ChaosReport& r);
Json sweep_report_json(int n, const RingSpec& ring, const SweepReport& r);

// Rows 0..steps of the coordinate window [wlo, whi); header "n,c0,c1,…".
std::string simulate_csv(const System& sys, const Config& x, long long steps,
                         Index wlo, Index whi);

}  // namespace wgs
