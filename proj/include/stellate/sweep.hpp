#ifndef STELLATE_SWEEP_HPP
#define STELLATE_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "stellate/analyze.hpp"

namespace stellate {

// Verdict buckets of the conjecture sweep.  "both" refers to the two sides of
// the equivalence: quadratic generation, and freedom from even antiholes and
// odd stretchers.
struct SweepTallies {
    long long both_true = 0;
    long long both_false = 0;
    long long counterexample_a = 0; // quadratic yet a forbidden structure is present
    long long counterexample_b = 0; // clean yet not quadratic
    long long skipped = 0;          // a side hit its budget
    long long conjecture1_checked = 0;
    long long conjecture1_failed = 0;
    long long total() const {
        return both_true + both_false + counterexample_a + counterexample_b + skipped;
    }
};

struct SweepCounterexample {
    std::string kind; // "COUNTEREXAMPLE-A", "COUNTEREXAMPLE-B", "CONJECTURE-1"
    std::string graph6;
};

struct SweepOptions {
    int max_n = 6;              // internal enumeration of connected graphs on 1..max_n vertices
    std::string input_path;     // newline-delimited graph6 file; overrides internal enumeration
    bool check_conjecture1 = false;
    int jobs = 1;
    long long stop_after = -1;  // graphs to consume this run; < 0 means all
    long long checkpoint_every = 64;
    std::string checkpoint_path; // checkpoint file to keep updated ("" = none)
    std::string resume_path;     // checkpoint to resume from ("" = fresh start)
    std::string report_path;     // newline-delimited JSON, one object per graph ("" = none)
    std::uint64_t seed = 0;
    Budgets budgets;
};

struct SweepState {
    std::string source;
    long long cursor = 0; // graphs consumed so far
    SweepTallies tallies;
    std::vector<SweepCounterexample> counterexamples;
    Budgets budgets;
    std::string rng_state; // seed echo; the enumeration itself draws no randomness
    bool check_conjecture1 = false;
    bool finished = false; // the whole source was consumed
};

// Run (or resume) a sweep.  Deterministic: tallies and counterexamples depend
// only on the source and budgets, never on jobs or interruption points.
SweepState run_sweep(const SweepOptions& opts);

nlohmann::json sweep_state_to_json(const SweepState& state);
SweepState sweep_state_from_json(const nlohmann::json& j);

} // namespace stellate

#endif
