#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace grassfold {

using GridPos = std::pair<int, int>; // (row, col)

struct Vertex {
    int id = 0;
    std::optional<GridPos> pos;
    bool frozen = false;

    bool operator==(const Vertex&) const = default;
};

// Exponent map keyed by vertex id; zero exponents are never stored.
using Monomial = std::map<int, int>;

// Cluster quiver: no loops, no 2-cycles, arrows stored as a signed
// skew-symmetric multiplicity matrix. Arrows between two frozen vertices are
// discarded (they never affect mutation or X-coordinates).
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(std::vector<Vertex> vertices);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(int id) const;
    bool has_vertex(int id) const;
    bool is_frozen(int id) const { return vertex(id).frozen; }
    std::vector<int> mutable_ids() const;

    // Signed arrow multiplicity u -> v (negative means arrows v -> u).
    int b(int u, int v) const;

    // Adds m to b[u][v] (and -m to b[v][u]); frozen-frozen pairs are ignored.
    void add_arrows(int u, int v, int m = 1);

    // Sorted list of (u, v, m) with m = b(u, v) > 0.
    std::vector<std::tuple<int, int, int>> arrows() const;
    int arrow_count() const;

    bool operator==(const Quiver& other) const;

    std::string to_dot(const std::map<int, std::string>& node_labels = {}) const;

private:
    int index_of(int id) const;

    std::vector<Vertex> vertices_;
    std::map<int, int> index_;         // id -> row index in b_
    std::vector<std::vector<int>> b_;  // dense signed multiplicities
};

// Quiver mutation at a mutable vertex (the three-step rule).
Quiver mutate_quiver(const Quiver& q, int v);

// Reverses every arrow.
Quiver reverse(const Quiver& q);

// Exponents of the cluster X-coordinate at a mutable vertex v: +b(u,v) for
// every neighbour u (arrows into v count positively, arrows out negatively).
Monomial x_coordinate(const Quiver& q, int v);

} // namespace grassfold
