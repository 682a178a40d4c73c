#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "quiver.hpp"
#include "rational.hpp"
#include "tableau.hpp"

namespace grassfold {

struct ExchangeRecord {
    int vertex = 0;
    Tableau old_label;
    Tableau new_label;
    std::vector<Tableau> in_labels;  // with arrow multiplicity
    std::vector<Tableau> out_labels;
};

// A seed of C[Gr(k,n)]: quiver plus a tableau label at every vertex.
class Seed {
public:
    Seed() = default;
    Seed(int k, int n, Quiver quiver, std::map<int, Tableau> labels);

    int k() const { return k_; }
    int n() const { return n_; }
    const Quiver& quiver() const { return quiver_; }
    const std::map<int, Tableau>& labels() const { return labels_; }
    const Tableau& label(int id) const;

    // True when every label is a single column (a Plucker coordinate).
    bool all_labels_single_column() const;

    bool operator==(const Seed&) const = default;

private:
    int k_ = 0, n_ = 0;
    Quiver quiver_;
    std::map<int, Tableau> labels_;
};

// Vertex ids of the Scott grid: (0,0) -> 0; mutable (i,j) column-major
// id = (j-1)(n-k-1)+i; frozen vertices numbered after the mutable block.
int grid_vertex_id(int row, int col, int k, int n);
GridPos grid_vertex_pos(int id, int k, int n);
bool grid_vertex_frozen(int row, int col, int k, int n);

// Single-column label {1,...,k-b} u {k-b+a+1,...,k+a} at grid position (a,b);
// (0,0) carries {1,...,k}.
Tableau initial_label(int a, int b, int k, int n);

// Scott initial seed of C[Gr(k,n)].
Seed initial_seed(int k, int n);

// Tableau-labelled seed mutation: the new label is the quotient of the
// dominance maximum of the in- and out-arrow unions by the old label.
std::pair<Seed, ExchangeRecord> mutate_seed(const Seed& s, int v);

// Left-to-right composition with the full exchange trace.
std::pair<Seed, std::vector<ExchangeRecord>> apply_sequence(const Seed& s,
                                                            const std::vector<int>& vs);

// Exact check of eval(new) * eval(old) == prod(in) + prod(out) on a rational
// point; requires single-column labels.
bool verify_exchange(const ExchangeRecord& rec, const RationalMatrix& m);

// Random integer matrix, resampled until every Plucker coordinate appearing
// in the records is nonzero.
RationalMatrix random_trial_matrix(int k, int n, const std::vector<ExchangeRecord>& records,
                                   std::mt19937_64& rng);

} // namespace grassfold
