#pragma once

#include "oddedge/records.hpp"

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

namespace oddedge {

// A result that fails independent re-verification, whether freshly produced
// or loaded back from disk.  Callers map this to the verification-failure
// exit code; it must never be downgraded to a warning.
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchConfig {
    std::string task;                       // "bricks" | "cuboids" | "biquad"
    u64 n_min = 3, n_max = 3;               // odd-edge range (bricks, cuboids)
    unsigned conjectures = ALL_CONJECTURES; // cuboids: bit k set = family k scanned
    int family = 1;                         // biquad family 1..3
    u64 bound = 0;                          // biquad: max of P,Q,R,S; scan key is P
    u64 scale_bound = 1;                    // biquad: max scale a, b
    bool strict = false;                    // bricks/cuboids: demand f > 1 in reps
    bool relax_notes = false;               // biquad: admit U or V = 1 in annotations
    unsigned shard_index = 0, shard_count = 1;
    unsigned workers = 1;
    u64 checkpoint_stride = 64; // values completed between checkpoint writes
    std::string out_path;       // empty: records to stdout
    std::string summary_path;   // empty: no CSV written
    std::string checkpoint_path;
    bool overwrite = false;
    bool resume = false;
    u64 interrupt_after = 0;  // test seam: stop after completing this value
    u64 inject_forged_at = 0; // test seam: push a forged cuboid witness at this value
};

struct SearchSummary {
    u64 values_scanned = 0;
    u64 records = 0;
    u64 primitive_records = 0;
    u64 anomalies = 0;
    std::map<std::string, u64> counts; // per brick type / conjecture, annotations
    u64 max_multiplicity = 0;          // most witnesses seen on one scanned value
    u64 max_multiplicity_at = 0;       // smallest value attaining it
    bool interrupted = false;
    u64 wall_ms = 0;
    std::string fingerprint;

    int exit_code() const { return anomalies ? 3 : 0; }
    std::string csv(const SearchConfig& cfg) const; // key,value rows
};

// Hash of the parameters that define what is being computed: task, schema,
// range or bounds, family selection, strictness.  Shard layout, worker count,
// stride, and paths deliberately stay out so shard unions and reruns with
// different parallelism produce byte-identical records.
std::string config_fingerprint(const SearchConfig& cfg);

// Small JSON checkpoint, written to a temp file and renamed into place.
void write_checkpoint(const std::string& path, const std::string& fingerprint,
                      unsigned shard_index, unsigned shard_count, u64 last_value,
                      u64 record_count);

// Scan the configured range, write one JSONL record per witness in
// (value, canonical witness) order, checkpoint at the configured stride,
// and return the run summary.  With resume set, validates the checkpoint
// fingerprint, re-verifies every persisted record, truncates the output to
// the checkpointed count, and continues after the last completed value.
// Throws std::invalid_argument for unusable configurations (usage errors)
// and IntegrityError when any result fails re-verification.
SearchSummary run_search(const SearchConfig& cfg);

// Re-scan [3, 999] and check the eleven known primitive bricks with odd edge
// below 1000 row by row, printing one PASS/FAIL line per row plus the census
// totals.  Returns 0 on full agreement, 2 on any mismatch.
int report_census(std::ostream& os);

} // namespace oddedge
