#pragma once

#include "json_io.hpp"
#include "kinematics.hpp"

namespace grassfold {

// Reference data for Gr(4,9) transcribed from the paper's two quiver figures,
// in the drawn orientation (globally reversed relative to the arrow-list
// convention used by the engine).

// All 21 labels as drawn in the initial-seed figure; two of them differ from
// the text formulas.
std::map<GridPos, std::vector<int>> gr49_figure1_labels();

// The 12 mutable labels of the folded seed.
std::map<GridPos, std::vector<int>> gr49_figure2_labels();

// The 17 arrows among mutable vertices of the folded seed, as drawn.
std::vector<std::pair<GridPos, GridPos>> gr49_figure2_arrows();

// Mutation order in the folded-seed figure caption.
std::vector<int> gr49_caption_sequence();

// Structured comparison of the engine output against the predictions and the
// Gr(4,9) reference figures; "pass" aggregates the gating checks.
Json verify_seed_report(int k, int n);

// Exact exchange verification along the schedule on random rational points.
Json verify_exchange_report(int k, int n, ScheduleVariant variant, int trials,
                            uint64_t rng_seed);

Json kinematics_report_to_json(const kin::ResidualReport& rep);

// {"schedule", "seed", "equations"} for the fold CLI output.
Json fold_report(int k, int n, ScheduleVariant variant);

} // namespace grassfold
