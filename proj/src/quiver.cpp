#include "quiver.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace grassfold {

Quiver::Quiver(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (size_t i = 0; i < vertices_.size(); ++i) {
        if (index_.count(vertices_[i].id))
            fail(ErrorCode::InvalidArgument, "duplicate vertex id");
        index_[vertices_[i].id] = static_cast<int>(i);
    }
    b_.assign(vertices_.size(), std::vector<int>(vertices_.size(), 0));
}

int Quiver::index_of(int id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        fail(ErrorCode::InvalidArgument, "unknown vertex id " + std::to_string(id));
    return it->second;
}

const Vertex& Quiver::vertex(int id) const { return vertices_[index_of(id)]; }

bool Quiver::has_vertex(int id) const { return index_.count(id) != 0; }

std::vector<int> Quiver::mutable_ids() const {
    std::vector<int> ids;
    for (const auto& v : vertices_)
        if (!v.frozen) ids.push_back(v.id);
    return ids;
}

int Quiver::b(int u, int v) const { return b_[index_of(u)][index_of(v)]; }

void Quiver::add_arrows(int u, int v, int m) {
    if (u == v) fail(ErrorCode::InvalidArgument, "loops are not allowed");
    int iu = index_of(u), iv = index_of(v);
    if (vertices_[iu].frozen && vertices_[iv].frozen) return;
    b_[iu][iv] += m;
    b_[iv][iu] -= m;
}

std::vector<std::tuple<int, int, int>> Quiver::arrows() const {
    std::vector<std::tuple<int, int, int>> out;
    for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = 0; j < vertices_.size(); ++j)
            if (b_[i][j] > 0) out.emplace_back(vertices_[i].id, vertices_[j].id, b_[i][j]);
    return out;
}

int Quiver::arrow_count() const {
    int total = 0;
    for (const auto& [u, v, m] : arrows()) total += m;
    return total;
}

bool Quiver::operator==(const Quiver& other) const {
    return vertices_ == other.vertices_ && b_ == other.b_;
}

Quiver mutate_quiver(const Quiver& q, int v) {
    if (!q.has_vertex(v))
        fail(ErrorCode::InvalidMutation, "mutation at unknown vertex " + std::to_string(v));
    if (q.is_frozen(v))
        fail(ErrorCode::InvalidMutation, "mutation at frozen vertex " + std::to_string(v));
    Quiver out(q.vertices());
    for (const auto& a : q.vertices()) {
        for (const auto& b : q.vertices()) {
            if (a.id >= b.id) continue;
            int m = q.b(a.id, b.id);
            if (a.id == v || b.id == v) {
                // (ii) reverse arrows incident to v
                m = -m;
            } else {
                // (i) compose paths through v; (iii) is the implicit 2-cycle
                // cancellation in the signed sum
                int bav = q.b(a.id, v), bvb = q.b(v, b.id);
                m += (std::abs(bav) * bvb + bav * std::abs(bvb)) / 2;
            }
            if (m != 0) out.add_arrows(a.id, b.id, m);
        }
    }
    return out;
}

Quiver reverse(const Quiver& q) {
    Quiver out(q.vertices());
    for (const auto& [u, v, m] : q.arrows()) out.add_arrows(v, u, m);
    return out;
}

Monomial x_coordinate(const Quiver& q, int v) {
    if (q.is_frozen(v))
        fail(ErrorCode::InvalidArgument, "X-coordinate is defined at mutable vertices only");
    Monomial exps;
    for (const auto& u : q.vertices()) {
        if (u.id == v) continue;
        int e = q.b(u.id, v);
        if (e != 0) exps[u.id] = e;
    }
    return exps;
}

std::string Quiver::to_dot(const std::map<int, std::string>& node_labels) const {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const auto& v : vertices_) {
        os << "  n" << v.id << " [";
        auto it = node_labels.find(v.id);
        os << "label=\"" << (it != node_labels.end() ? it->second : std::to_string(v.id)) << "\"";
        if (v.frozen) os << ", shape=box";
        if (v.pos) os << ", pos=\"" << v.pos->second << ",-" << v.pos->first << "!\"";
        os << "];\n";
    }
    for (const auto& [u, v, m] : arrows())
        for (int i = 0; i < m; ++i) os << "  n" << u << " -> n" << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace grassfold
