#include "tableau.hpp"

#include <algorithm>
#include <sstream>

namespace grassfold {

Tableau::Tableau(int k, std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != k)
        fail(ErrorCode::InvalidArgument, "tableau row count does not match k");
    for (auto& row : rows_)
        if (!std::is_sorted(row.begin(), row.end()))
            fail(ErrorCode::InvalidArgument, "tableau rows must be weakly increasing");
}

Tableau Tableau::column(const std::vector<int>& entries) {
    Tableau t(static_cast<int>(entries.size()));
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i] >= entries[i + 1])
            fail(ErrorCode::InvalidArgument, "column entries must be strictly increasing");
    for (size_t i = 0; i < entries.size(); ++i) t.rows_[i].push_back(entries[i]);
    return t;
}

bool Tableau::empty() const {
    for (const auto& row : rows_)
        if (!row.empty()) return false;
    return true;
}

int Tableau::columns() const {
    if (!is_rectangular()) fail(ErrorCode::InvalidArgument, "tableau is not rectangular");
    return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
}

bool Tableau::is_rectangular() const {
    for (const auto& row : rows_)
        if (row.size() != rows_[0].size()) return false;
    return true;
}

bool Tableau::is_semistandard() const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (!std::is_sorted(rows_[i].begin(), rows_[i].end())) return false;
        if (i == 0) continue;
        // Column-strict on the overlap of consecutive rows.
        size_t overlap = std::min(rows_[i - 1].size(), rows_[i].size());
        for (size_t j = 0; j < overlap; ++j)
            if (rows_[i - 1][j] >= rows_[i][j]) return false;
    }
    return true;
}

int Tableau::max_entry() const {
    int m = 0;
    for (const auto& row : rows_)
        for (int e : row) m = std::max(m, e);
    return m;
}

Partition Tableau::shape() const {
    Partition p;
    for (const auto& row : rows_) p.push_back(static_cast<int>(row.size()));
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

std::vector<int> Tableau::column_entries() const {
    std::vector<int> out;
    for (const auto& row : rows_) {
        if (row.size() != 1) fail(ErrorCode::Evaluation, "tableau is not a single column");
        out.push_back(row[0]);
    }
    return out;
}

std::string Tableau::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << ";";
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) os << ",";
            os << rows_[i][j];
        }
    }
    os << "]";
    return os.str();
}

Tableau tableau_union(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k()) fail(ErrorCode::InvalidArgument, "tableau union requires equal row counts");
    std::vector<std::vector<int>> rows(s.k());
    for (int i = 0; i < s.k(); ++i) {
        std::merge(s.row(i).begin(), s.row(i).end(), t.row(i).begin(), t.row(i).end(),
                   std::back_inserter(rows[i]));
    }
    return Tableau(s.k(), std::move(rows));
}

bool is_factor(const Tableau& s, const Tableau& t) {
    if (s.k() != t.k()) fail(ErrorCode::InvalidArgument, "factor test requires equal row counts");
    for (int i = 0; i < s.k(); ++i) {
        if (!std::includes(t.row(i).begin(), t.row(i).end(), s.row(i).begin(), s.row(i).end()))
            return false;
    }
    return true;
}

Tableau quotient(const Tableau& t, const Tableau& s) {
    if (!is_factor(s, t)) fail(ErrorCode::NotAFactor, "quotient requires s to be a factor of t");
    std::vector<std::vector<int>> rows(t.k());
    for (int i = 0; i < t.k(); ++i) {
        std::set_difference(t.row(i).begin(), t.row(i).end(), s.row(i).begin(), s.row(i).end(),
                            std::back_inserter(rows[i]));
    }
    return Tableau(t.k(), std::move(rows));
}

Tableau restrict(const Tableau& t, int bound) {
    std::vector<std::vector<int>> rows(t.k());
    for (int i = 0; i < t.k(); ++i)
        for (int e : t.row(i))
            if (e <= bound) rows[i].push_back(e);
    return Tableau(t.k(), std::move(rows));
}

DominanceRelation dominance_compare(const Partition& a, const Partition& b) {
    size_t len = std::max(a.size(), b.size());
    bool le = true, ge = true;
    long sa = 0, sb = 0;
    for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) le = false;
        if (sa < sb) ge = false;
    }
    if (le && ge) return DominanceRelation::Equal;
    if (le) return DominanceRelation::LessEq;
    if (ge) return DominanceRelation::GreaterEq;
    return DominanceRelation::Incomparable;
}

DominanceRelation dominance_compare(const Tableau& t, const Tableau& u) {
    if (t.shape() != u.shape())
        fail(ErrorCode::InvalidArgument, "dominance order requires equal shapes");
    bool le = true, ge = true;
    int bound = std::max(t.max_entry(), u.max_entry());
    for (int i = 1; i <= bound; ++i) {
        switch (dominance_compare(restrict(t, i).shape(), restrict(u, i).shape())) {
            case DominanceRelation::Equal: break;
            case DominanceRelation::LessEq: ge = false; break;
            case DominanceRelation::GreaterEq: le = false; break;
            case DominanceRelation::Incomparable: le = ge = false; break;
        }
        if (!le && !ge) return DominanceRelation::Incomparable;
    }
    if (le && ge) return DominanceRelation::Equal;
    return le ? DominanceRelation::LessEq : DominanceRelation::GreaterEq;
}

} // namespace grassfold
