#pragma once

#include "oddedge/bricks.hpp"
#include "oddedge/cuboids.hpp"
#include "oddedge/biquad.hpp"

#include <json.hpp>

#include <string>

namespace oddedge {

// One search result per JSONL line.  Every record is self-contained: it
// carries the witness, the constructed solid when one exists, primitivity,
// the anomaly flag, and the fingerprint of the producing configuration, so
// an archive can be re-verified without the run that produced it.
inline constexpr int SCHEMA_VERSION = 1;

using ordered_json = nlohmann::ordered_json;

ordered_json brick_record(const BrickWitness& w, const std::string& fingerprint);
ordered_json cuboid_record(const CuboidWitness& w, const std::string& fingerprint);
ordered_json biquad_record(const BiquadHit& h, const std::string& fingerprint);

// classify records cover both outcomes: a witness with its primitive brick,
// or a status explaining why the input is not a classified Euler brick.
ordered_json classify_record(u64 x, u64 y, u64 z, const ClassifyResult& r,
                             const std::string& fingerprint);

// Recompute every claim a record makes and compare field by field.
// Any mismatch, missing key, or malformed value yields false.
bool verify_record(const ordered_json& rec);

} // namespace oddedge
