#ifndef DOMCOMPLEX_COMPLEX_HPP
#define DOMCOMPLEX_COMPLEX_HPP

// Enumeration of D_{n,k}: the simplicial complex whose d-simplices are the
// (d+1)-edge graphs on n labeled vertices with domination number >= k.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace domcomplex {

inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;

struct ComplexSpec {
    VertexCount n;
    int k = 0;

    ComplexSpec(VertexCount n_, int k_) : n(n_), k(k_)
    {
        if (n.value() < 2)
            throw InvalidVertexCount("complexes need n >= 2, got " + std::to_string(n.value()));
        if (k_ < 0)
            throw UnsupportedSpec("threshold k must be non-negative");
    }
};

struct EnumerateOptions {
    std::uint64_t budget = kDefaultCellBudget;
    unsigned jobs = 1;
};

struct CellId {
    int dim = -1;
    std::size_t ordinal = 0;

    friend bool operator==(const CellId&, const CellId&) = default;
};

/// Simplices grouped by dimension, each group sorted by edge mask.  Lookups
/// are binary searches, so no separate hash index is kept.
class CellTable {
public:
    CellTable() = default;

    // k < 0 marks an arbitrary family of cells that is not a D_{n,k}.
    CellTable(VertexCount n, int k, std::vector<std::vector<EdgeMask>> by_dim)
        : n_(n), k_(k), by_dim_(std::move(by_dim))
    {
        for (auto& cells : by_dim_) {
            std::sort(cells.begin(), cells.end());
            cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        }
        while (!by_dim_.empty() && by_dim_.back().empty())
            by_dim_.pop_back();
    }

    static CellTable from_cells(VertexCount n, const std::vector<EdgeMask>& cells, int k = -1)
    {
        std::vector<std::vector<EdgeMask>> by_dim;
        for (const auto c : cells) {
            const int d = popcount(c) - 1;
            if (d < 0)
                throw InvalidEdge("the empty graph is not a cell");
            LabeledGraph(n, c); // validates the mask
            if (static_cast<int>(by_dim.size()) <= d)
                by_dim.resize(d + 1);
            by_dim[d].push_back(c);
        }
        return CellTable(n, k, std::move(by_dim));
    }

    VertexCount n() const noexcept { return n_; }
    int k() const noexcept { return k_; }
    bool is_domination_complex() const noexcept { return k_ >= 0; }

    // -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
    bool empty() const noexcept { return by_dim_.empty(); }

    const std::vector<EdgeMask>& cells(int d) const
    {
        static const std::vector<EdgeMask> none;
        return d >= 0 && d < static_cast<int>(by_dim_.size()) ? by_dim_[d] : none;
    }

    std::size_t size() const noexcept
    {
        std::size_t s = 0;
        for (const auto& c : by_dim_)
            s += c.size();
        return s;
    }

    std::optional<CellId> id(EdgeMask m) const
    {
        const int d = popcount(m) - 1;
        const auto& v = cells(d);
        const auto it = std::lower_bound(v.begin(), v.end(), m);
        if (it == v.end() || *it != m)
            return std::nullopt;
        return CellId{d, static_cast<std::size_t>(it - v.begin())};
    }

    bool contains(EdgeMask m) const
    {
        const auto& v = cells(popcount(m) - 1);
        return std::binary_search(v.begin(), v.end(), m);
    }

    EdgeMask at(CellId id) const { return by_dim_.at(id.dim).at(id.ordinal); }

    // Every cell, dimension-major then by mask.
    std::vector<EdgeMask> all() const
    {
        std::vector<EdgeMask> out;
        out.reserve(size());
        for (const auto& c : by_dim_)
            out.insert(out.end(), c.begin(), c.end());
        return out;
    }

    friend bool operator==(const CellTable& a, const CellTable& b)
    {
        return a.n_.value() == b.n_.value() && a.k_ == b.k_ && a.by_dim_ == b.by_dim_;
    }

private:
    VertexCount n_{};
    int k_ = -1;
    std::vector<std::vector<EdgeMask>> by_dim_;
};

/// Per-dimension cell counts c_0..c_dim.
struct FVector {
    std::vector<std::uint64_t> c;

    int dimension() const noexcept { return static_cast<int>(c.size()) - 1; }

    std::int64_t euler() const noexcept
    {
        std::int64_t chi = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c[i]);
        return chi;
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

struct ComplexStats {
    FVector f;
    std::int64_t euler = 0;
    int dim = -1;
    std::map<int, std::size_t> facet_count_by_dim;
};

namespace detail {

// Depth-first walk of the subset tree below the single-edge root `first`.
// Children add edges of larger index; a branch is cut as soon as the graph
// leaves D_{n,k}, which is sound because the complex is closed under faces.
template <class Visit>
void walk_branch(const NeighborhoodTable& nb, EdgeMask mask, int dim, int next, int k, const EdgeTable& t,
                 int m, Visit& visit)
{
    for (int e = next; e < m; ++e) {
        NeighborhoodTable child = nb;
        child.add_edge(t.endpoints[e].i, t.endpoints[e].j);
        if (!domination_at_least(child, k))
            continue;
        const EdgeMask cm = mask | edge_bit(e);
        visit(cm, dim + 1);
        walk_branch(child, cm, dim + 1, e + 1, k, t, m, visit);
    }
}

template <class Visit>
void walk_first_edge(int n, int k, int first, Visit& visit)
{
    const auto& t = edge_table(n);
    NeighborhoodTable nb(n);
    nb.add_edge(t.endpoints[first].i, t.endpoints[first].j);
    if (!domination_at_least(nb, k))
        return;
    visit(edge_bit(first), 0);
    walk_branch(nb, edge_bit(first), 0, first + 1, k, t, edge_count(n), visit);
}

// Runs make_visitor(thread)-produced visitors over disjoint first-edge
// branches; branch e goes to worker e % jobs.
template <class MakeVisitor>
void parallel_walk(const ComplexSpec& spec, unsigned jobs, MakeVisitor&& make_visitor)
{
    const int n = spec.n.value();
    const int m = edge_count(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max(m, 1))));
    if (spec.k > n)
        return;
    auto work = [&](unsigned worker) {
        auto visit = make_visitor(worker);
        for (int e = static_cast<int>(worker); e < m; e += static_cast<int>(jobs))
            walk_first_edge(n, spec.k, e, visit);
    };
    if (jobs == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        threads.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& th : threads)
        th.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
}

} // namespace detail

/// Materializes every simplex of D_{n,k}.  Throws SizeLimitExceeded once the
/// cell count passes options.budget.
inline CellTable enumerate(const ComplexSpec& spec, const EnumerateOptions& options = {})
{
    const unsigned jobs = std::max(1u, options.jobs);
    std::vector<std::vector<std::vector<EdgeMask>>> per_worker(jobs);
    std::atomic<std::uint64_t> total{0};
    detail::parallel_walk(spec, jobs, [&](unsigned worker) {
        return [&, worker](EdgeMask cell, int dim) {
            if (total.fetch_add(1, std::memory_order_relaxed) + 1 > options.budget)
                throw SizeLimitExceeded("D_{" + std::to_string(spec.n.value()) + "," + std::to_string(spec.k) +
                                        "} has more than " + std::to_string(options.budget) +
                                        " cells; raise the budget or use streaming mode");
            auto& mine = per_worker[worker];
            if (static_cast<int>(mine.size()) <= dim)
                mine.resize(dim + 1);
            mine[dim].push_back(cell);
        };
    });
    std::vector<std::vector<EdgeMask>> by_dim;
    for (auto& w : per_worker) {
        if (w.size() > by_dim.size())
            by_dim.resize(w.size());
        for (std::size_t d = 0; d < w.size(); ++d)
            by_dim[d].insert(by_dim[d].end(), w[d].begin(), w[d].end());
    }
    return CellTable(spec.n, spec.k, std::move(by_dim));
}

/// Per-dimension counts without materializing cells.
inline FVector count_cells(const ComplexSpec& spec, unsigned jobs = 1)
{
    jobs = std::max(1u, jobs);
    std::vector<std::vector<std::uint64_t>> per_worker(jobs);
    detail::parallel_walk(spec, jobs, [&](unsigned worker) {
        return [&, worker](EdgeMask, int dim) {
            auto& mine = per_worker[worker];
            if (static_cast<int>(mine.size()) <= dim)
                mine.resize(dim + 1, 0);
            ++mine[dim];
        };
    });
    FVector f;
    for (const auto& w : per_worker) {
        if (w.size() > f.c.size())
            f.c.resize(w.size(), 0);
        for (std::size_t d = 0; d < w.size(); ++d)
            f.c[d] += w[d];
    }
    return f;
}

inline FVector f_vector(const CellTable& table)
{
    FVector f;
    for (int d = 0; d <= table.dimension(); ++d)
        f.c.push_back(table.cells(d).size());
    return f;
}

/// Streaming alternating sum of cell counts; 0 for the empty complex.
inline std::int64_t euler_characteristic(const ComplexSpec& spec, unsigned jobs = 1)
{
    return count_cells(spec, jobs).euler();
}

/// floor((n-k+2)(n-k)/2) - 1, valid for 2 <= k <= n.
inline int vizing_dimension(int n, int k) { return (n - k + 2) * (n - k) / 2 - 1; }

/// Maximal cells, ordered by dimension then mask.
inline std::vector<LabeledGraph> facets(const CellTable& table)
{
    std::vector<LabeledGraph> out;
    const int m = table.n().edge_count();
    for (int d = 0; d <= table.dimension(); ++d) {
        for (const auto c : table.cells(d)) {
            bool maximal = true;
            for (int e = 0; e < m && maximal; ++e)
                if (((c >> e) & 1) == 0 && table.contains(c | edge_bit(e)))
                    maximal = false;
            if (maximal)
                out.emplace_back(table.n(), c);
        }
    }
    return out;
}

inline ComplexStats complex_stats(const CellTable& table)
{
    ComplexStats s;
    s.f = f_vector(table);
    s.euler = s.f.euler();
    s.dim = table.dimension();
    for (const auto& g : facets(table))
        ++s.facet_count_by_dim[g.dimension()];
    return s;
}

/// X_e = { sigma : sigma + e is a cell } and its complement R_e.
struct EdgeSplit {
    std::vector<EdgeMask> x;
    std::vector<EdgeMask> r;
};

inline EdgeSplit split_by_edge(const CellTable& table, int edge)
{
    EdgeSplit s;
    for (const auto c : table.all()) {
        if (table.contains(c | edge_bit(edge)))
            s.x.push_back(c);
        else
            s.r.push_back(c);
    }
    return s;
}

/// The X_12 / R_12 partition of D_{n,n-2}.
inline EdgeSplit x12_r12_split(const CellTable& table)
{
    if (!table.is_domination_complex() || table.k() != table.n().value() - 2)
        throw UnsupportedSpec("the X12/R12 split is defined for D_{n,n-2} only");
    return split_by_edge(table, edge_index(1, 2, table.n()));
}

/// Reinterprets the edge set on one more vertex (the new vertex, labeled
/// n_new, is isolated).
inline EdgeMask embed_add_isolated(EdgeMask mask, int n_old)
{
    const auto& from = detail::edge_table(n_old);
    const auto& to = detail::edge_table(n_old + 1);
    EdgeMask out = 0;
    for_each_edge(mask, [&](int idx) {
        const Edge e = from.endpoints[idx];
        out |= edge_bit(to.index[e.i][e.j]);
    });
    return out;
}

inline LabeledGraph embed_add_isolated(const LabeledGraph& g, VertexCount n_new)
{
    if (n_new.value() != g.n().value() + 1)
        throw InvalidVertexCount("embedding adds exactly one vertex");
    return LabeledGraph(n_new, embed_add_isolated(g.edges(), g.n().value()));
}

} // namespace domcomplex

#endif // DOMCOMPLEX_COMPLEX_HPP
