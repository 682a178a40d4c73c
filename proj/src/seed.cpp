#include "seed.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace grassfold {

Seed::Seed(int k, int n, Quiver quiver, std::map<int, Tableau> labels)
    : k_(k), n_(n), quiver_(std::move(quiver)), labels_(std::move(labels)) {
    for (const auto& v : quiver_.vertices()) {
        auto it = labels_.find(v.id);
        if (it == labels_.end())
            fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(v.id) + " has no label");
        if (it->second.k() != k_)
            fail(ErrorCode::InvalidArgument, "label row count must equal k");
        if (it->second.max_entry() > n_)
            fail(ErrorCode::InvalidArgument, "label entries must lie in [n]");
    }
}

const Tableau& Seed::label(int id) const {
    auto it = labels_.find(id);
    if (it == labels_.end())
        fail(ErrorCode::InvalidArgument, "unknown vertex id " + std::to_string(id));
    return it->second;
}

bool Seed::all_labels_single_column() const {
    for (const auto& [id, t] : labels_)
        if (t.columns() != 1) return false;
    return true;
}

static void check_kn(int k, int n) {
    if (k < 2 || n - k < 2)
        fail(ErrorCode::InvalidArgument, "initial seed requires 2 <= k <= n-2");
}

bool grid_vertex_frozen(int row, int col, int k, int n) {
    if (row == 0 && col == 0) return true;
    return row == n - k || col == k;
}

int grid_vertex_id(int row, int col, int k, int n) {
    check_kn(k, n);
    if (row == 0 && col == 0) return 0;
    if (row < 1 || row > n - k || col < 1 || col > k)
        fail(ErrorCode::InvalidArgument, "grid position out of range");
    if (!grid_vertex_frozen(row, col, k, n)) return (col - 1) * (n - k - 1) + row;
    int id = (k - 1) * (n - k - 1);
    for (int b = 1; b <= k; ++b)
        for (int a = 1; a <= n - k; ++a) {
            if (!grid_vertex_frozen(a, b, k, n)) continue;
            ++id;
            if (a == row && b == col) return id;
        }
    fail(ErrorCode::InvalidArgument, "grid position out of range");
}

GridPos grid_vertex_pos(int id, int k, int n) {
    check_kn(k, n);
    if (id == 0) return {0, 0};
    for (int b = 1; b <= k; ++b)
        for (int a = 1; a <= n - k; ++a)
            if (grid_vertex_id(a, b, k, n) == id) return {a, b};
    fail(ErrorCode::InvalidArgument, "unknown vertex id " + std::to_string(id));
}

Tableau initial_label(int a, int b, int k, int n) {
    check_kn(k, n);
    bool origin = a == 0 && b == 0;
    if (!origin && (a < 1 || a > n - k || b < 1 || b > k))
        fail(ErrorCode::InvalidArgument, "grid position out of range");
    std::vector<int> idx;
    for (int i = 1; i <= k - b; ++i) idx.push_back(i);
    for (int i = k - b + a + 1; i <= k + a; ++i) idx.push_back(i);
    return Tableau::column(idx);
}

Seed initial_seed(int k, int n) {
    check_kn(k, n);
    std::vector<Vertex> vertices;
    std::map<int, Tableau> labels;
    vertices.push_back({0, GridPos{0, 0}, true});
    labels.emplace(0, initial_label(0, 0, k, n));
    for (int b = 1; b <= k; ++b)
        for (int a = 1; a <= n - k; ++a) {
            int id = grid_vertex_id(a, b, k, n);
            vertices.push_back({id, GridPos{a, b}, grid_vertex_frozen(a, b, k, n)});
            labels.emplace(id, initial_label(a, b, k, n));
        }
    Quiver q(std::move(vertices));
    auto id = [&](int a, int b) { return grid_vertex_id(a, b, k, n); };
    q.add_arrows(0, id(1, 1));
    for (int b = 1; b <= k; ++b)
        for (int a = 2; a <= n - k; ++a) q.add_arrows(id(a - 1, b), id(a, b));
    for (int b = 2; b <= k; ++b)
        for (int a = 1; a <= n - k; ++a) q.add_arrows(id(a, b - 1), id(a, b));
    for (int b = 1; b <= k - 1; ++b)
        for (int a = 1; a <= n - k - 1; ++a) q.add_arrows(id(a + 1, b + 1), id(a, b));
    return Seed(k, n, std::move(q), std::move(labels));
}

std::pair<Seed, ExchangeRecord> mutate_seed(const Seed& s, int v) {
    const Quiver& q = s.quiver();
    if (!q.has_vertex(v) || q.is_frozen(v))
        fail(ErrorCode::InvalidMutation, "mutation at invalid vertex " + std::to_string(v));

    ExchangeRecord rec;
    rec.vertex = v;
    rec.old_label = s.label(v);
    Tableau u_in(s.k()), u_out(s.k());
    for (const auto& u : q.vertices()) {
        int m = q.b(u.id, v);
        for (int i = 0; i < m; ++i) {
            rec.in_labels.push_back(s.label(u.id));
            u_in = tableau_union(u_in, s.label(u.id));
        }
        for (int i = 0; i < -m; ++i) {
            rec.out_labels.push_back(s.label(u.id));
            u_out = tableau_union(u_out, s.label(u.id));
        }
    }

    if (u_in.shape() != u_out.shape())
        fail(ErrorCode::Incomparable, "in/out unions at vertex " + std::to_string(v) +
                                          " have different shapes");
    Tableau max = u_out;
    switch (dominance_compare(u_in, u_out)) {
        case DominanceRelation::GreaterEq:
        case DominanceRelation::Equal: max = u_in; break;
        case DominanceRelation::LessEq: break;
        case DominanceRelation::Incomparable:
            fail(ErrorCode::Incomparable,
                 "in/out unions at vertex " + std::to_string(v) + " are dominance-incomparable");
    }
    if (!is_factor(rec.old_label, max))
        fail(ErrorCode::NotAFactor,
             "old label at vertex " + std::to_string(v) + " does not divide the dominance max");
    rec.new_label = quotient(max, rec.old_label);

    auto labels = s.labels();
    labels[v] = rec.new_label;
    return {Seed(s.k(), s.n(), mutate_quiver(q, v), std::move(labels)), std::move(rec)};
}

std::pair<Seed, std::vector<ExchangeRecord>> apply_sequence(const Seed& s,
                                                            const std::vector<int>& vs) {
    Seed cur = s;
    std::vector<ExchangeRecord> trace;
    for (size_t step = 0; step < vs.size(); ++step) {
        try {
            auto [next, rec] = mutate_seed(cur, vs[step]);
            cur = std::move(next);
            trace.push_back(std::move(rec));
        } catch (const Error& e) {
            fail(e.code(), "step " + std::to_string(step) + " (vertex " +
                               std::to_string(vs[step]) + "): " + e.what());
        }
    }
    return {std::move(cur), std::move(trace)};
}

static Rational eval_label(const Tableau& t, const RationalMatrix& m) {
    if (t.columns() != 1)
        fail(ErrorCode::Evaluation, "numeric evaluation supports single-column labels only");
    return plucker_eval(m, t.column_entries());
}

bool verify_exchange(const ExchangeRecord& rec, const RationalMatrix& m) {
    Rational lhs = eval_label(rec.new_label, m) * eval_label(rec.old_label, m);
    Rational in_prod = 1, out_prod = 1;
    for (const auto& t : rec.in_labels) in_prod *= eval_label(t, m);
    for (const auto& t : rec.out_labels) out_prod *= eval_label(t, m);
    return lhs == in_prod + out_prod;
}

RationalMatrix random_trial_matrix(int k, int n, const std::vector<ExchangeRecord>& records,
                                   std::mt19937_64& rng) {
    std::set<std::vector<int>> needed;
    for (const auto& rec : records) {
        needed.insert(rec.old_label.column_entries());
        needed.insert(rec.new_label.column_entries());
        for (const auto& t : rec.in_labels) needed.insert(t.column_entries());
        for (const auto& t : rec.out_labels) needed.insert(t.column_entries());
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        RationalMatrix m = RationalMatrix::random(k, n, rng);
        bool ok = true;
        for (const auto& idx : needed)
            if (plucker_eval(m, idx) == 0) {
                ok = false;
                break;
            }
        if (ok) return m;
    }
    fail(ErrorCode::Sampling, "failed to sample a matrix with all required Pluckers nonzero");
}

} // namespace grassfold
