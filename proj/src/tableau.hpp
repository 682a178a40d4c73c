#pragma once

#include <compare>
#include <string>
#include <vector>

#include "error.hpp"

namespace grassfold {

// Weakly decreasing sequence of nonnegative parts; trailing zeros trimmed.
using Partition = std::vector<int>;

enum class DominanceRelation { LessEq, GreaterEq, Equal, Incomparable };

// Semistandard Young tableau with a fixed number of rows. Labels stored in
// seeds are rectangular; ragged rows appear only as outputs of restrict().
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(int k) : rows_(k) {}
    Tableau(int k, std::vector<std::vector<int>> rows);

    // Single column with the given strictly increasing entries.
    static Tableau column(const std::vector<int>& entries);

    int k() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    const std::vector<int>& row(int i) const { return rows_.at(i); }

    bool empty() const;
    int columns() const; // requires rectangular
    bool is_rectangular() const;
    bool is_semistandard() const;
    int max_entry() const; // 0 when empty

    Partition shape() const;

    // Entries of a single-column tableau, top to bottom.
    std::vector<int> column_entries() const;

    bool operator==(const Tableau&) const = default;
    auto operator<=>(const Tableau&) const = default;

    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Row-wise multiset union; result of two semistandard rectangular tableaux is
// again semistandard (CDFL Lemma 3.6).
Tableau tableau_union(const Tableau& s, const Tableau& t);

// True iff every row of s is a sub-multiset of the corresponding row of t.
bool is_factor(const Tableau& s, const Tableau& t);

// Row-wise multiset difference t minus s; requires is_factor(s, t).
Tableau quotient(const Tableau& t, const Tableau& s);

// Sub-tableau of entries <= bound, rows left-justified (possibly ragged).
Tableau restrict(const Tableau& t, int bound);

// Prefix-sum comparison of partitions (not restricted to equal weight).
DominanceRelation dominance_compare(const Partition& a, const Partition& b);

// Dominance order on same-shape tableaux: prefix-sum comparison of the
// restricted shapes sh(T[i]) for every threshold i.
DominanceRelation dominance_compare(const Tableau& t, const Tableau& u);

} // namespace grassfold
