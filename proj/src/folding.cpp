#include "folding.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grassfold {

std::string PluckerSymbol::str() const {
    std::ostringstream os;
    os << "P_{";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) os << ",";
        os << indices[i];
    }
    os << "}";
    return os.str();
}

CanonicalSymbol canonicalize(std::vector<int> indices, int n) {
    if (n < 1) fail(ErrorCode::InvalidArgument, "n must be positive");
    for (int& x : indices) x = ((x - 1) % n + n) % n + 1;
    int sign = 1;
    // insertion sort, tracking the permutation parity
    for (size_t i = 1; i < indices.size(); ++i)
        for (size_t j = i; j > 0 && indices[j - 1] > indices[j]; --j) {
            std::swap(indices[j - 1], indices[j]);
            sign = -sign;
        }
    for (size_t i = 1; i < indices.size(); ++i)
        if (indices[i - 1] == indices[i]) return {PluckerSymbol{std::move(indices)}, 0};
    return {PluckerSymbol{std::move(indices)}, sign};
}

void EquationForm::multiply(const CanonicalSymbol& s, int exponent) {
    if (s.sign == 0)
        fail(ErrorCode::Structure, "degenerate Plucker symbol " + s.symbol.str() + " in equation");
    if (exponent == 0) return;
    int& e = exponents[s.symbol];
    e += exponent;
    if (e == 0) exponents.erase(s.symbol);
    if (s.sign < 0 && exponent % 2 != 0) net_sign = -net_sign;
}

bool equations_equal(const EquationForm& a, const EquationForm& b) {
    if (a.net_sign != b.net_sign) return false;
    if (a.exponents == b.exponents) return true;
    if (a.exponents.size() != b.exponents.size()) return false;
    for (const auto& [sym, e] : a.exponents) {
        auto it = b.exponents.find(sym);
        if (it == b.exponents.end() || it->second != -e) return false;
    }
    return true;
}

std::vector<int> column_run(int column, int target, int k, int n) {
    if (column < 1 || column > k - 1)
        fail(ErrorCode::InvalidArgument, "column must lie in [k-1]");
    if (target > n - k - 1)
        fail(ErrorCode::InvalidArgument, "target exceeds the mutable rows");
    std::vector<int> ids;
    for (int i = 1; i <= target; ++i) ids.push_back(grid_vertex_id(i, column, k, n));
    return ids;
}

static void check_fold_kn(int k, int n) {
    if (k < 4 || k % 2 != 0 || n < k + 2)
        fail(ErrorCode::InvalidArgument, "fold schedule requires even k >= 4 and n >= k+2");
}

Schedule fold_schedule(int k, int n, ScheduleVariant variant) {
    check_fold_kn(k, n);
    int l = n - k - 1;
    Schedule sched;
    auto add_row = [&](auto&& target_of) {
        bool any = false;
        for (int j = k - 1; j >= 1; --j) {
            int t = target_of(j);
            if (t <= 0) continue;
            any = true;
            sched.runs.push_back({j, t});
            auto ids = column_run(j, t, k, n);
            sched.vertex_ids.insert(sched.vertex_ids.end(), ids.begin(), ids.end());
        }
        return any;
    };
    if (variant == ScheduleVariant::Uniform) {
        for (int b = 1;; ++b)
            if (!add_row([&](int j) { return l - std::max(0, 2 * b - j + 1); })) break;
    } else {
        for (int r = 1; r <= (k - 2) / 2; ++r)
            add_row([&](int j) { return l - std::max(0, 2 * r - j + 1); });
        for (int p = 1;; ++p)
            if (!add_row([&](int j) { return l - (k - 1 - j) - p; })) break;
    }
    return sched;
}

Seed foldable_seed(int k, int n, ScheduleVariant variant) {
    Schedule sched = fold_schedule(k, n, variant);
    auto [seed, trace] = apply_sequence(initial_seed(k, n), sched.vertex_ids);
    if (!is_square_mesh(seed.quiver()))
        fail(ErrorCode::Structure, "mutable part of the folded quiver is not a square mesh");
    if (!has_column_reflection_symmetry(seed.quiver()))
        fail(ErrorCode::Structure, "folded quiver lacks column-reflection symmetry");
    return seed;
}

namespace {

// Formal cyclic interval [lo, hi] of length hi - lo + 1 >= 0 (indices mod n).
struct Interval {
    int lo = 0, hi = 0;
    int length() const { return hi - lo + 1; }
};

struct IntervalPair {
    Interval first, second;
};

void append_interval(std::vector<int>& out, const Interval& iv, int n) {
    for (int x = iv.lo; x <= iv.hi; ++x) out.push_back(((x - 1) % n + n) % n + 1);
}

// Index set of the union; empty when the two intervals collide mod n.
std::vector<int> interval_pair_set(const IntervalPair& p, int n) {
    std::vector<int> out;
    append_interval(out, p.first, n);
    append_interval(out, p.second, n);
    std::sort(out.begin(), out.end());
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] == out[i]) return {};
    return out;
}

IntervalPair first_column_pair(int i, int k, int n) {
    int l = (n - k) / 2;
    IntervalPair initial{{1, k - 1}, {k + i, k + i}};
    if (i == 1) return {{l, l + k - 2}, {l + k, l + k}};
    if ((n - k) % 2 == 0) {
        int s = i / 2;
        if (l - s <= 1) return initial;
        int last = (i % 2 == 0) ? l + k + s - 1 : l + k + s;
        return {{l - s, l + k - 2 - s}, {last, last}};
    }
    if (i == 2) return {{l, l + k - 2}, {l + k + 1, l + k + 1}};
    int s = (i - 1) / 2;
    if (l - s <= 1) return initial;
    int last = (i % 2 == 1) ? l + k + s : l + k + s + 1;
    return {{l - s, l + k - 2 - s}, {last, last}};
}

IntervalPair predicted_pair(int i, int j, int k, int n) {
    IntervalPair p = first_column_pair(i, k, n);
    bool even_nk = (n - k) % 2 == 0;
    for (int col = 2; col <= j; ++col) {
        bool cond0 = (i + col + 1) % 2 == 0;
        if (even_nk == cond0) {
            p = {{p.first.lo, p.first.hi - 1}, {p.second.lo - 1, p.second.hi}};
        } else {
            p = {{p.first.lo + 1, p.first.hi}, {p.second.lo, p.second.hi + 1}};
        }
    }
    return p;
}

} // namespace

PluckerSymbol predicted_label(int i, int j, int k, int n) {
    if (i < 1 || i > n - k - 1 || j < 1 || j > k - 1)
        fail(ErrorCode::InvalidArgument, "position is not mutable");
    auto set = interval_pair_set(predicted_pair(i, j, k, n), n);
    if (static_cast<int>(set.size()) != k)
        fail(ErrorCode::Structure, "predicted intervals collide mod n");
    return PluckerSymbol{std::move(set)};
}

std::pair<int, int> gr4_position(int n, int i) {
    if (n % 2 == 0) return {n / 2 - i / 2 - 2, n / 2 + (i + 3) / 2};
    return {(n - 1) / 2 - (i + 3) / 2, (n - 1) / 2 + i / 2 + 2};
}

PluckerSymbol predicted_label_gr4(int i, int col, int n) {
    if (i < 1 || i > n - 5) fail(ErrorCode::InvalidArgument, "row out of range");
    auto [a, c] = gr4_position(n, i);
    CanonicalSymbol s;
    if (col == 1)
        s = canonicalize({a, a + 1, a + 2, c}, n);
    else if (col == 3)
        s = canonicalize({a + 1, c - 1, c, c + 1}, n);
    else
        fail(ErrorCode::InvalidArgument, "column must be 1 or 3");
    if (s.sign == 0) fail(ErrorCode::Structure, "degenerate predicted label");
    return s.symbol;
}

std::vector<EquationForm> x_identification_equations(const Seed& s) {
    if (s.k() != 4)
        fail(ErrorCode::InvalidArgument, "X-coordinate identification applies to Gr(4,n) seeds");
    int n = s.n();
    auto symbol_at = [&](int id) { return PluckerSymbol{s.label(id).column_entries()}; };
    std::set<PluckerSymbol> second_column;
    for (int i = 1; i <= n - 5; ++i)
        second_column.insert(symbol_at(grid_vertex_id(i, 2, 4, n)));

    std::vector<EquationForm> eqs;
    for (int i = 1; i <= n - 5; ++i) {
        EquationForm eq;
        for (const auto& [vid, e] : x_coordinate(s.quiver(), grid_vertex_id(i, 1, 4, n)))
            eq.multiply({symbol_at(vid), 1}, e);
        for (const auto& [vid, e] : x_coordinate(s.quiver(), grid_vertex_id(i, 3, 4, n)))
            eq.multiply({symbol_at(vid), 1}, -e);
        for (const auto& sym : second_column)
            if (eq.exponents.count(sym))
                fail(ErrorCode::Structure,
                     "second-column variable " + sym.str() + " survives in equation " +
                         std::to_string(i));
        eqs.push_back(std::move(eq));
    }
    return eqs;
}

static EquationForm closed_form_at(int a, int c, int n) {
    EquationForm eq;
    eq.multiply(canonicalize({a, a + 1, a + 2, c}, n), 1);
    eq.multiply(canonicalize({a - 1, a, a + 1, c + 1}, n), 1);
    eq.multiply(canonicalize({a - 1, a, a + 1, a + 2}, n), -1);
    eq.multiply(canonicalize({a + 1, c - 1, c, c + 1}, n), -1);
    eq.multiply(canonicalize({a, c, c + 1, c + 2}, n), -1);
    eq.multiply(canonicalize({c - 1, c, c + 1, c + 2}, n), 1);
    return eq;
}

std::vector<EquationForm> closed_form_equations(int n) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "closed-form equations require n >= 6");
    std::vector<EquationForm> eqs;
    for (int i = 0; i <= n - 6; ++i) {
        auto [a, c] = gr4_position(n, i);
        EquationForm eq = closed_form_at(a, c, n);
        if (eq.net_sign != 1)
            fail(ErrorCode::Structure, "net sign of folding equation is not +1");
        eqs.push_back(std::move(eq));
    }
    // The family member at (a,c) = (n-2,1) restates the equation obtained by
    // identifying positions (n-5,1) and (n-5,3), with sides interchanged.
    EquationForm at_n5;
    at_n5.multiply(canonicalize({1, 2, 3, n - 2}, n), 1);
    at_n5.multiply(canonicalize({1, 2, n - 1, n}, n), 1);
    at_n5.multiply(canonicalize({1, 2, 3, n}, n), -1);
    at_n5.multiply(canonicalize({2, n - 3, n - 2, n - 1}, n), -1);
    at_n5.multiply(canonicalize({1, n - 2, n - 1, n}, n), -1);
    at_n5.multiply(canonicalize({n - 3, n - 2, n - 1, n}, n), 1);
    if (!equations_equal(closed_form_at(n - 2, 1, n), at_n5))
        fail(ErrorCode::Structure,
             "closed form at (n-2,1) does not restate the (n-5)-row identification");
    return eqs;
}

namespace {

struct MutableGrid {
    std::map<GridPos, int> at;       // position -> id
    std::map<int, GridPos> pos_of;   // id -> position
};

MutableGrid mutable_grid(const Quiver& q) {
    MutableGrid g;
    for (const auto& v : q.vertices()) {
        if (v.frozen) continue;
        if (!v.pos) fail(ErrorCode::InvalidArgument, "mutable vertex lacks a grid position");
        g.at[*v.pos] = v.id;
        g.pos_of[v.id] = *v.pos;
    }
    return g;
}

} // namespace

bool is_square_mesh(const Quiver& q) {
    MutableGrid g = mutable_grid(q);
    // unit arrows between grid neighbours only
    for (const auto& [u, pu] : g.pos_of)
        for (const auto& [v, pv] : g.pos_of) {
            if (u >= v) continue;
            int b = q.b(u, v);
            int dist = std::abs(pu.first - pv.first) + std::abs(pu.second - pv.second);
            if (b == 0) {
                if (dist == 1) return false; // mesh edge missing
            } else if (dist != 1 || std::abs(b) != 1) {
                return false;
            }
        }
    // cells are oriented 4-cycles with checkerboard orientation
    int pattern = 0;
    for (const auto& [pos, id] : g.at) {
        auto [i, j] = pos;
        auto s = g.at.find({i + 1, j});
        auto e = g.at.find({i, j + 1});
        auto se = g.at.find({i + 1, j + 1});
        if (s == g.at.end() || e == g.at.end() || se == g.at.end()) continue;
        int b1 = q.b(id, s->second);
        int b2 = q.b(s->second, se->second);
        int b3 = q.b(se->second, e->second);
        int b4 = q.b(e->second, id);
        if (b1 != b2 || b2 != b3 || b3 != b4) return false;
        int orient = b1 * ((i + j) % 2 == 0 ? 1 : -1);
        if (pattern == 0)
            pattern = orient;
        else if (orient != pattern)
            return false;
    }
    return true;
}

bool has_column_reflection_symmetry(const Quiver& q) {
    MutableGrid g = mutable_grid(q);
    if (g.at.empty()) return true;
    int min_col = g.at.begin()->first.second, max_col = min_col;
    for (const auto& [pos, id] : g.at) {
        min_col = std::min(min_col, pos.second);
        max_col = std::max(max_col, pos.second);
    }
    int sum = min_col + max_col;
    for (const auto& [u, pu] : g.pos_of)
        for (const auto& [v, pv] : g.pos_of) {
            auto ru = g.at.find({pu.first, sum - pu.second});
            auto rv = g.at.find({pv.first, sum - pv.second});
            if (ru == g.at.end() || rv == g.at.end()) return false;
            if (q.b(u, v) != q.b(ru->second, rv->second)) return false;
        }
    return true;
}

namespace {

std::vector<int> sorted_entries(const Tableau& t) {
    auto v = t.column_entries();
    std::sort(v.begin(), v.end());
    return v;
}

using LabelSet = std::vector<int>;
using LabelPair = std::vector<LabelSet>; // sorted pair

LabelPair make_pair_sorted(LabelSet a, LabelSet b) {
    LabelPair p{std::move(a), std::move(b)};
    std::sort(p.begin(), p.end());
    return p;
}

bool match_three_term(const LabelSet& base, const LabelSet& shifted, const LabelPair& ms_in,
                      const LabelPair& ms_out, int n) {
    int k = static_cast<int>(base.size());
    std::set<int> base_set(base.begin(), base.end());
    auto in_base = [&](int x) { return base_set.count(((x - 1) % n + n) % n + 1) != 0; };
    for (int len1 = 1; len1 <= k - 1; ++len1) {
        int len2 = k - len1;
        for (int a : base) {
            // candidate first interval [a, a+len1-1]
            bool ok = true;
            for (int x = a; x < a + len1; ++x)
                if (!in_base(x)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            auto sym1 = interval_pair_set({{a, a + len1 - 1}, {a, a - 1}}, n);
            if (static_cast<int>(sym1.size()) != len1) continue;
            LabelSet rest;
            std::set_difference(base.begin(), base.end(), sym1.begin(), sym1.end(),
                                std::back_inserter(rest));
            // remainder must be one cyclic interval [c, c+len2-1]
            int c = 0;
            bool found = false;
            for (int x : rest) {
                std::set<int> rset(rest.begin(), rest.end());
                if (!rset.count(((x - 2) % n + n) % n + 1)) {
                    c = x;
                    found = true;
                    break;
                }
            }
            if (!found) continue; // remainder is the full cycle; impossible here
            if (interval_pair_set({{c, c + len2 - 1}, {c, c - 1}}, n) != rest) continue;
            int b = a + len1 - 1, d = c + len2 - 1;
            if (interval_pair_set({{a + 1, b + 1}, {c + 1, d + 1}}, n) != shifted) continue;
            auto t1 = interval_pair_set({{a + 1, b + 1}, {c, d}}, n);
            auto t2 = interval_pair_set({{a, b}, {c + 1, d + 1}}, n);
            auto t3 = interval_pair_set({{a, b + 1}, {c + 1, d}}, n);
            auto t4 = interval_pair_set({{a + 1, b}, {c, d + 1}}, n);
            if (static_cast<int>(t1.size()) != k || static_cast<int>(t2.size()) != k ||
                static_cast<int>(t3.size()) != k || static_cast<int>(t4.size()) != k)
                continue;
            LabelPair p1 = make_pair_sorted(std::move(t1), std::move(t2));
            LabelPair p2 = make_pair_sorted(std::move(t3), std::move(t4));
            if ((ms_in == p1 && ms_out == p2) || (ms_in == p2 && ms_out == p1)) return true;
        }
    }
    return false;
}

} // namespace

bool is_three_term_plucker(const ExchangeRecord& rec, int n) {
    if (rec.in_labels.size() != 2 || rec.out_labels.size() != 2) return false;
    for (const auto& t : rec.in_labels)
        if (t.columns() != 1) return false;
    for (const auto& t : rec.out_labels)
        if (t.columns() != 1) return false;
    if (rec.old_label.columns() != 1 || rec.new_label.columns() != 1) return false;

    LabelSet old_set = sorted_entries(rec.old_label);
    LabelSet new_set = sorted_entries(rec.new_label);
    LabelPair ms_in =
        make_pair_sorted(sorted_entries(rec.in_labels[0]), sorted_entries(rec.in_labels[1]));
    LabelPair ms_out =
        make_pair_sorted(sorted_entries(rec.out_labels[0]), sorted_entries(rec.out_labels[1]));
    return match_three_term(old_set, new_set, ms_in, ms_out, n) ||
           match_three_term(new_set, old_set, ms_in, ms_out, n);
}

} // namespace grassfold
