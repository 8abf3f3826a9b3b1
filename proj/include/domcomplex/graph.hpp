#ifndef DOMCOMPLEX_GRAPH_HPP
#define DOMCOMPLEX_GRAPH_HPP

// Labeled graphs on {1..n}, lexicographic edge indexing and the
// domination-number oracle.  A graph is stored as a bit-mask over edge
// indices; the same mask identifies the graph as a simplex of D_{n,k}.

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace domcomplex {

using EdgeMask = unsigned __int128;
using VertexMask = std::uint32_t;

inline constexpr int kMaxVertices = 16;

inline constexpr EdgeMask edge_bit(int index) { return EdgeMask{1} << index; }

inline constexpr int popcount(EdgeMask m)
{
    return std::popcount(static_cast<std::uint64_t>(m)) +
           std::popcount(static_cast<std::uint64_t>(m >> 64));
}

// Index of the lowest set bit; -1 for the empty mask.
inline constexpr int lowest_edge(EdgeMask m)
{
    const auto lo = static_cast<std::uint64_t>(m);
    if (lo != 0)
        return std::countr_zero(lo);
    const auto hi = static_cast<std::uint64_t>(m >> 64);
    if (hi != 0)
        return 64 + std::countr_zero(hi);
    return -1;
}

struct MaskHash {
    std::size_t operator()(EdgeMask m) const noexcept
    {
        const auto lo = static_cast<std::uint64_t>(m);
        const auto hi = static_cast<std::uint64_t>(m >> 64);
        std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL;
        h ^= (hi + 0x632be59bd9b4e019ULL) + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Calls fn(index) for every set bit of m in increasing order.
template <class Fn>
inline void for_each_edge(EdgeMask m, Fn&& fn)
{
    auto lo = static_cast<std::uint64_t>(m);
    while (lo != 0) {
        fn(std::countr_zero(lo));
        lo &= lo - 1;
    }
    auto hi = static_cast<std::uint64_t>(m >> 64);
    while (hi != 0) {
        fn(64 + std::countr_zero(hi));
        hi &= hi - 1;
    }
}

/// Number of labeled vertices, validated against the single-word edge mask cap.
class VertexCount {
public:
    constexpr VertexCount() = default;
    constexpr explicit VertexCount(int n) : n_(n)
    {
        if (n < 0 || n > kMaxVertices)
            throw InvalidVertexCount("vertex count " + std::to_string(n) + " outside [0, " +
                                     std::to_string(kMaxVertices) + "]");
    }
    constexpr int value() const noexcept { return n_; }
    constexpr operator int() const noexcept { return n_; }
    constexpr int edge_count() const noexcept { return n_ * (n_ - 1) / 2; }

private:
    int n_ = 0;
};

/// Unordered edge ij, stored with i < j.
struct Edge {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(const Edge&, const Edge&) = default;
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr int edge_count(int n) { return n * (n - 1) / 2; }

/// Rank of (i,j) in the lexicographic order of all pairs 1 <= i < j <= n.
inline int edge_index(int i, int j, int n)
{
    if (n < 2 || n > kMaxVertices || i < 1 || j > n || i >= j)
        throw InvalidEdge("invalid edge (" + std::to_string(i) + "," + std::to_string(j) +
                          ") for n=" + std::to_string(n));
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

namespace detail {

struct EdgeTable {
    int n = 0;
    std::array<Edge, 120> endpoints{};
    std::array<std::array<int, kMaxVertices + 1>, kMaxVertices + 1> index{};
};

inline const EdgeTable& edge_table(int n)
{
    static const auto tables = [] {
        std::array<EdgeTable, kMaxVertices + 1> t{};
        for (int m = 0; m <= kMaxVertices; ++m) {
            t[m].n = m;
            for (auto& row : t[m].index)
                row.fill(-1);
            int idx = 0;
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j) {
                    t[m].endpoints[idx] = Edge{i, j};
                    t[m].index[i][j] = t[m].index[j][i] = idx;
                    ++idx;
                }
        }
        return t;
    }();
    return tables[n];
}

} // namespace detail

/// Inverse of edge_index.
inline Edge edge_from_index(int index, int n)
{
    if (n < 2 || n > kMaxVertices || index < 0 || index >= edge_count(n))
        throw InvalidEdge("edge index " + std::to_string(index) + " out of range for n=" +
                          std::to_string(n));
    return detail::edge_table(n).endpoints[index];
}

/// A graph on vertices {1..n}; doubles as a simplex identifier.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(VertexCount n, EdgeMask edges) : n_(n), edges_(edges)
    {
        const int m = n_.edge_count();
        if (m < 128 && (edges >> m) != 0)
            throw InvalidEdge("edge mask has bits beyond C(n,2) for n=" + std::to_string(n_.value()));
    }

    static LabeledGraph from_edges(VertexCount n, const std::vector<Edge>& edges)
    {
        EdgeMask m = 0;
        for (const auto& e : edges)
            m |= edge_bit(edge_index(std::min(e.i, e.j), std::max(e.i, e.j), n));
        return LabeledGraph(n, m);
    }

    // Parses the `13|14|23|24` notation.  For n >= 10 each edge is written `i-j`.
    static LabeledGraph parse(std::string_view text, VertexCount n)
    {
        std::vector<Edge> edges;
        std::size_t pos = 0;
        while (pos <= text.size() && !text.empty()) {
            const auto bar = text.find('|', pos);
            const auto tok = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
            Edge e;
            const auto dash = tok.find('-');
            try {
                if (dash != std::string_view::npos) {
                    e.i = std::stoi(std::string(tok.substr(0, dash)));
                    e.j = std::stoi(std::string(tok.substr(dash + 1)));
                } else if (tok.size() == 2 && std::isdigit(static_cast<unsigned char>(tok[0])) &&
                           std::isdigit(static_cast<unsigned char>(tok[1]))) {
                    e.i = tok[0] - '0';
                    e.j = tok[1] - '0';
                } else {
                    throw InvalidEdge("cannot parse edge token '" + std::string(tok) + "'");
                }
            } catch (const std::logic_error&) {
                throw InvalidEdge("cannot parse edge token '" + std::string(tok) + "'");
            }
            if (e.i > e.j)
                std::swap(e.i, e.j);
            edges.push_back(e);
            if (bar == std::string_view::npos)
                break;
            pos = bar + 1;
        }
        return from_edges(n, edges);
    }

    VertexCount n() const noexcept { return n_; }
    EdgeMask edges() const noexcept { return edges_; }
    int size() const noexcept { return popcount(edges_); }
    // Simplex dimension: one less than the number of edges.
    int dimension() const noexcept { return size() - 1; }
    bool has_edge(int index) const noexcept { return ((edges_ >> index) & 1) != 0; }

    LabeledGraph plus(int index) const { return LabeledGraph(n_, edges_ | edge_bit(index)); }

    std::vector<Edge> edge_list() const
    {
        std::vector<Edge> out;
        const auto& t = detail::edge_table(n_);
        for_each_edge(edges_, [&](int idx) { out.push_back(t.endpoints[idx]); });
        return out;
    }

    std::vector<int> degrees() const
    {
        std::vector<int> deg(n_ + 1, 0);
        for (const auto& e : edge_list()) {
            ++deg[e.i];
            ++deg[e.j];
        }
        return deg;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& e : edge_list()) {
            if (!s.empty())
                s += '|';
            if (n_ <= 9)
                s += std::to_string(e.i) + std::to_string(e.j);
            else
                s += std::to_string(e.i) + "-" + std::to_string(e.j);
        }
        return s;
    }

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b)
    {
        return a.n_.value() == b.n_.value() && a.edges_ == b.edges_;
    }

private:
    VertexCount n_{};
    EdgeMask edges_ = 0;
};

/// Closed neighborhoods N[v] as vertex bit-masks (bit v-1 for vertex v).
class NeighborhoodTable {
public:
    NeighborhoodTable() = default;
    explicit NeighborhoodTable(int n) : n_(n)
    {
        for (int v = 1; v <= n; ++v)
            closed_[v - 1] = VertexMask{1} << (v - 1);
    }
    explicit NeighborhoodTable(const LabeledGraph& g) : NeighborhoodTable(g.n().value())
    {
        for (const auto& e : g.edge_list())
            add_edge(e.i, e.j);
    }

    void add_edge(int i, int j) noexcept
    {
        closed_[i - 1] |= VertexMask{1} << (j - 1);
        closed_[j - 1] |= VertexMask{1} << (i - 1);
    }

    int n() const noexcept { return n_; }
    VertexMask all() const noexcept { return n_ == 0 ? 0 : (VertexMask{1} << n_) - 1; }
    VertexMask closed(int v) const noexcept { return closed_[v - 1]; }

    VertexMask cover(VertexMask set) const noexcept
    {
        VertexMask c = 0;
        while (set != 0) {
            c |= closed_[std::countr_zero(set)];
            set &= set - 1;
        }
        return c;
    }

private:
    int n_ = 0;
    std::array<VertexMask, kMaxVertices> closed_{};
};

/// True iff the closed neighborhoods of `set` cover every vertex.
inline bool dominates(VertexMask set, const NeighborhoodTable& nb) noexcept
{
    return nb.cover(set) == nb.all();
}

inline bool dominates(VertexMask set, const LabeledGraph& g) { return dominates(set, NeighborhoodTable(g)); }

namespace detail {

// True iff some vertex set of exactly `size` elements dominates.
inline bool some_set_of_size_dominates(const NeighborhoodTable& nb, int size) noexcept
{
    const int n = nb.n();
    if (size == 0)
        return nb.all() == 0;
    if (size >= n)
        return true;
    VertexMask set = (VertexMask{1} << size) - 1;
    const VertexMask limit = VertexMask{1} << n;
    while (set < limit) {
        if (dominates(set, nb))
            return true;
        // Gosper's hack: next subset with the same popcount.
        const VertexMask c = set & (~set + 1);
        const VertexMask r = set + c;
        set = (((r ^ set) >> 2) / c) | r;
    }
    return false;
}

} // namespace detail

/// gamma(g): the minimum size of a dominating set.
inline int domination_number(const NeighborhoodTable& nb) noexcept
{
    for (int s = 0; s <= nb.n(); ++s)
        if (detail::some_set_of_size_dominates(nb, s))
            return s;
    return nb.n();
}

inline int domination_number(const LabeledGraph& g) { return domination_number(NeighborhoodTable(g)); }

/// gamma(g) >= k.  Supersets of dominating sets dominate, so only sets of
/// size exactly k-1 need to be tried; the scan stops at the first hit.
inline bool domination_at_least(const NeighborhoodTable& nb, int k) noexcept
{
    if (k <= 0)
        return true;
    return !detail::some_set_of_size_dominates(nb, std::min(k - 1, nb.n()));
}

inline bool domination_at_least(const LabeledGraph& g, int k)
{
    return domination_at_least(NeighborhoodTable(g), k);
}

} // namespace domcomplex

#endif // DOMCOMPLEX_GRAPH_HPP
