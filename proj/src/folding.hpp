#pragma once

#include <map>
#include <vector>

#include "seed.hpp"

namespace grassfold {

// Sorted distinct index tuple in [1, n]; the sign produced by mod-n reduction
// and sorting is reported separately by canonicalize().
struct PluckerSymbol {
    std::vector<int> indices;

    bool operator==(const PluckerSymbol&) const = default;
    auto operator<=>(const PluckerSymbol&) const = default;

    std::string str() const;
};

struct CanonicalSymbol {
    PluckerSymbol symbol;
    int sign = 1; // 0 for a degenerate (repeated-index) tuple
};

// Reduces indices mod n into [1, n], sorts, and records the permutation sign.
CanonicalSymbol canonicalize(std::vector<int> indices, int n);

// Multiplicative equation, stored as the Laurent word lhs/rhs; net_sign is the
// product of the canonicalization signs raised to their exponents.
struct EquationForm {
    std::map<PluckerSymbol, int> exponents; // zero-free
    int net_sign = 1;

    void multiply(const CanonicalSymbol& s, int exponent);

    bool operator==(const EquationForm&) const = default;
};

// True iff the exponent maps are equal or exponent-negated (the global
// arrow-reversal freedom).
bool equations_equal(const EquationForm& a, const EquationForm& b);

enum class ScheduleVariant { Uniform, Literal };

struct ScheduleRun {
    int column = 0;
    int target = 0;
};

struct Schedule {
    std::vector<int> vertex_ids;
    std::vector<ScheduleRun> runs; // provenance, empty runs omitted
};

// Mutation run from the top of the given column down to the target row;
// empty when target <= 0.
std::vector<int> column_run(int column, int target, int k, int n);

// The mutation schedule taking the initial seed to the foldable seed. The
// Uniform variant runs blocks b = 1, 2, ... with column j mutated down to
// l - max(0, 2b - j + 1), l = n - k - 1, until the first all-empty block; the
// Literal variant instead decrements the late-phase rows by one per row.
Schedule fold_schedule(int k, int n, ScheduleVariant variant = ScheduleVariant::Uniform);

// Applies the schedule to the initial seed and checks the square-mesh and
// column-reflection properties of the mutable part.
Seed foldable_seed(int k, int n, ScheduleVariant variant = ScheduleVariant::Uniform);

// Predicted foldable-seed label at mutable position (i,j) for even k: the
// first-column recursion plus the parity column rules, intervals cyclic mod n.
PluckerSymbol predicted_label(int i, int j, int k, int n);

// Closed-form predictions for k = 4 in columns 1 and 3.
PluckerSymbol predicted_label_gr4(int i, int col, int n);

// (a, c) with c - a = i + 3 used by the Gr(4,n) label and equation formulas.
std::pair<int, int> gr4_position(int n, int i);

// Folding equations of a foldable Gr(4,n) seed, obtained by identifying the
// cluster X-coordinates at positions (i,1) and (i,3); the second-column
// variables must cancel.
std::vector<EquationForm> x_identification_equations(const Seed& s);

// The n-5 closed-form folding equations
//   P_{a,a+1,a+2,c} P_{a-1,a,a+1,c+1} / P_{a-1,a,a+1,a+2}
//     = P_{a+1,c-1,c,c+1} P_{a,c,c+1,c+2} / P_{c-1,c,c+1,c+2}
// at (a, c) = gr4_position(n, i), i in [0, n-6].
std::vector<EquationForm> closed_form_equations(int n);

// Mutable part is a grid of unit oriented 4-cycles with alternating
// orientation and no diagonal or long arrows.
bool is_square_mesh(const Quiver& q);

// (i, j) -> (i, k - j) is an automorphism of the mutable subquiver.
bool has_column_reflection_symmetry(const Quiver& q);

// Exchange matches the three-term Plucker relation on shifted cyclic interval
// pairs [a,b] u [c,d].
bool is_three_term_plucker(const ExchangeRecord& rec, int n);

} // namespace grassfold
