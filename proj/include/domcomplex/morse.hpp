#ifndef DOMCOMPLEX_MORSE_HPP
#define DOMCOMPLEX_MORSE_HPP

// Discrete Morse matchings on families of cells: storage, well-formedness,
// acyclicity (gradient-path cycle search), critical census and the
// restriction checks used when comparing D_{n,n-2} against D_{n-1,n-3}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cache_io.hpp"
#include "complex.hpp"

namespace domcomplex {

using CellSet = std::unordered_set<EdgeMask, MaskHash>;

/// A pair (lower, upper) with lower a facet of upper.
struct MatchedPair {
    EdgeMask lower = 0;
    EdgeMask upper = 0;

    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

inline bool is_facet(EdgeMask lower, EdgeMask upper)
{
    return (lower & ~upper) == 0 && popcount(upper) == popcount(lower) + 1;
}

/// Partial pairing of d-cells with (d+1)-cofacets.  Cells are identified by
/// their edge mask; the two maps are kept mutually inverse.
class Matching {
public:
    void add(EdgeMask lower, EdgeMask upper)
    {
        if (!is_facet(lower, upper))
            throw MatchingConflict("pair is not a facet/cofacet pair");
        if (is_matched(lower))
            throw MatchingConflict("cell with mask " + to_hex(lower, 32) + " is already matched");
        if (is_matched(upper))
            throw MatchingConflict("cell with mask " + to_hex(upper, 32) + " is already matched");
        up_.emplace(lower, upper);
        down_.emplace(upper, lower);
    }

    void remove(EdgeMask cell)
    {
        if (auto it = up_.find(cell); it != up_.end()) {
            down_.erase(it->second);
            up_.erase(it);
        } else if (auto jt = down_.find(cell); jt != down_.end()) {
            up_.erase(jt->second);
            down_.erase(jt);
        }
    }

    bool is_matched(EdgeMask cell) const { return up_.count(cell) != 0 || down_.count(cell) != 0; }

    // Cofacet this cell is matched up to, if any.
    std::optional<EdgeMask> up(EdgeMask cell) const
    {
        const auto it = up_.find(cell);
        return it == up_.end() ? std::nullopt : std::optional<EdgeMask>(it->second);
    }

    std::optional<EdgeMask> down(EdgeMask cell) const
    {
        const auto it = down_.find(cell);
        return it == down_.end() ? std::nullopt : std::optional<EdgeMask>(it->second);
    }

    std::optional<EdgeMask> partner(EdgeMask cell) const
    {
        if (auto u = up(cell))
            return u;
        return down(cell);
    }

    std::size_t size() const noexcept { return up_.size(); }
    bool empty() const noexcept { return up_.empty(); }

    /// Pairs sorted by dimension, then by the lower mask.
    std::vector<MatchedPair> pairs() const
    {
        std::vector<MatchedPair> out;
        out.reserve(up_.size());
        for (const auto& [lo, hi] : up_)
            out.push_back({lo, hi});
        std::sort(out.begin(), out.end(), [](const MatchedPair& a, const MatchedPair& b) {
            const int da = popcount(a.lower), db = popcount(b.lower);
            return da != db ? da < db : a.lower < b.lower;
        });
        return out;
    }

    friend bool operator==(const Matching& a, const Matching& b) { return a.up_ == b.up_; }

private:
    std::unordered_map<EdgeMask, EdgeMask, MaskHash> up_;
    std::unordered_map<EdgeMask, EdgeMask, MaskHash> down_;
};

/// Union of matchings with pairwise disjoint domains.
inline Matching assemble(const std::vector<Matching>& parts)
{
    Matching out;
    for (const auto& part : parts)
        for (const auto& p : part.pairs())
            out.add(p.lower, p.upper); // throws MatchingConflict on overlap
    return out;
}

/// Every paired cell belongs to `cells` and every pair is a facet relation.
inline bool is_well_formed(const Matching& m, const CellTable& cells)
{
    CellSet seen;
    for (const auto& p : m.pairs()) {
        if (!is_facet(p.lower, p.upper) || !cells.contains(p.lower) || !cells.contains(p.upper))
            return false;
        if (!seen.insert(p.lower).second || !seen.insert(p.upper).second)
            return false;
        if (m.up(p.lower) != p.upper || m.down(p.upper) != p.lower)
            return false;
    }
    return true;
}

/// Gradient path tau_0 -> sigma_1 -> tau_1 -> ... -> tau_k with tau_0 = tau_k.
struct VPath {
    std::vector<EdgeMask> lower; // tau_0 .. tau_k
    std::vector<EdgeMask> upper; // sigma_1 .. sigma_k

    std::size_t length() const noexcept { return upper.size(); }
};

struct CycleReport {
    bool acyclic = true;
    std::optional<VPath> witness;
    // Longest path (number of matched-up steps) found in the searched region.
    std::size_t max_path_length = 0;
};

/// Re-validates a cycle witness from raw face relations only.
inline bool validate_witness(const VPath& w, const Matching& m, const CellTable& cells)
{
    const std::size_t k = w.upper.size();
    if (k == 0 || w.lower.size() != k + 1 || w.lower.front() != w.lower.back())
        return false;
    CellSet inner;
    for (std::size_t l = 1; l <= k; ++l) {
        const EdgeMask from = w.lower[l - 1], sigma = w.upper[l - 1], to = w.lower[l];
        if (!cells.contains(from) || !cells.contains(sigma) || !cells.contains(to))
            return false;
        if (m.up(from) != sigma || !is_facet(to, sigma) || to == from)
            return false;
        inner.insert(to);
    }
    return inner.size() == k;
}

namespace detail {

// Arcs tau -> tau' of the modified Hasse diagram restricted to one dimension:
// tau is matched up to sigma and tau' != tau is a facet of sigma in the region.
template <class InRegion>
std::vector<EdgeMask> gradient_successors(EdgeMask tau, const Matching& m, const CellTable& cells,
                                          const InRegion& in_region)
{
    std::vector<EdgeMask> out;
    const auto sigma = m.up(tau);
    if (!sigma)
        return out;
    for_each_edge(*sigma, [&](int e) {
        const EdgeMask face = *sigma & ~edge_bit(e);
        if (face != tau && cells.contains(face) && in_region(face))
            out.push_back(face);
    });
    return out;
}

// Iterative three-colour DFS over the gradient graph of every dimension.
// Also computes the longest path, in matched-up steps, when no cycle exists.
template <class InRegion>
CycleReport find_gradient_cycle(const Matching& m, const CellTable& cells, const InRegion& in_region)
{
    enum class Color : std::uint8_t { white, grey, black };
    CycleReport report;
    std::unordered_map<EdgeMask, Color, MaskHash> color;
    std::unordered_map<EdgeMask, std::size_t, MaskHash> longest;

    struct Frame {
        EdgeMask cell;
        std::vector<EdgeMask> next;
        std::size_t pos = 0;
    };

    for (int d = 0; d <= cells.dimension(); ++d) {
        for (const auto root : cells.cells(d)) {
            if (!in_region(root) || !m.up(root) || color[root] != Color::white)
                continue;
            std::vector<Frame> stack;
            stack.push_back({root, gradient_successors(root, m, cells, in_region)});
            color[root] = Color::grey;
            while (!stack.empty()) {
                Frame& top = stack.back();
                if (top.pos == top.next.size()) {
                    std::size_t best = 0;
                    for (const auto nx : top.next)
                        best = std::max(best, 1 + (m.up(nx) ? longest[nx] : 0));
                    longest[top.cell] = best;
                    report.max_path_length = std::max(report.max_path_length, best);
                    color[top.cell] = Color::black;
                    stack.pop_back();
                    continue;
                }
                const EdgeMask nx = top.next[top.pos++];
                if (!m.up(nx))
                    continue;
                const Color c = color[nx];
                if (c == Color::grey) {
                    // Unwind the stack from nx to the top to form the cycle.
                    VPath w;
                    std::size_t start = 0;
                    while (stack[start].cell != nx)
                        ++start;
                    for (std::size_t i = start; i < stack.size(); ++i) {
                        w.lower.push_back(stack[i].cell);
                        w.upper.push_back(*m.up(stack[i].cell));
                    }
                    w.lower.push_back(nx);
                    report.acyclic = false;
                    report.witness = std::move(w);
                    return report;
                }
                if (c == Color::white) {
                    color[nx] = Color::grey;
                    stack.push_back({nx, gradient_successors(nx, m, cells, in_region)});
                }
            }
        }
    }
    return report;
}

} // namespace detail

/// Searches every dimension layer for a closed gradient path.
inline CycleReport verify_acyclic(const Matching& m, const CellTable& cells)
{
    return detail::find_gradient_cycle(m, cells, [](EdgeMask) { return true; });
}

/// Cycle search restricted to cells outside `inside`; also reports the
/// longest gradient path that stays outside.
inline CycleReport verify_no_outside_cycles(const Matching& m, const CellTable& cells, const CellSet& inside)
{
    return detail::find_gradient_cycle(m, cells, [&](EdgeMask c) { return inside.count(c) == 0; });
}

struct MorseCensus {
    std::vector<std::uint64_t> critical; // per dimension
    std::vector<EdgeMask> critical_cells; // dimension-major, by mask
    std::uint64_t matched_pairs = 0;
};

inline MorseCensus critical_census(const Matching& m, const CellTable& cells)
{
    MorseCensus c;
    c.critical.assign(static_cast<std::size_t>(std::max(cells.dimension() + 1, 0)), 0);
    for (int d = 0; d <= cells.dimension(); ++d)
        for (const auto cell : cells.cells(d))
            if (!m.is_matched(cell)) {
                ++c.critical[d];
                c.critical_cells.push_back(cell);
            }
    c.matched_pairs = m.size();
    return c;
}

/// Image of a D_{n-1,...} cell family under the add-isolated-vertex embedding.
inline CellSet embedded_cells(const CellTable& small)
{
    CellSet out;
    for (const auto c : small.all())
        out.insert(embed_add_isolated(c, small.n().value()));
    return out;
}

/// (a) every small pair maps to a big pair and (b) no embedded cell is
/// big-paired with a cell outside the embedding.
inline bool verify_restriction(const Matching& big, const Matching& small, const CellTable& small_cells)
{
    const int n_small = small_cells.n().value();
    for (const auto& p : small.pairs()) {
        const EdgeMask lo = embed_add_isolated(p.lower, n_small);
        const EdgeMask hi = embed_add_isolated(p.upper, n_small);
        if (big.up(lo) != hi)
            return false;
    }
    const CellSet image = embedded_cells(small_cells);
    for (const auto c : image)
        if (const auto other = big.partner(c); other && image.count(*other) == 0)
            return false;
    return true;
}

struct MatchingEnumeration {
    std::vector<Matching> acyclic;
    std::uint64_t total = 0; // acyclicity not required
};

/// All matchings inside `family` that pair every bottom-dimensional cell with
/// a cofacet and every top-dimensional cell with a facet, all partners drawn
/// from the middle dimension and pairwise distinct.  Requires exactly three
/// consecutive dimensions.
inline MatchingEnumeration enumerate_complete_matchings(const CellTable& family)
{
    const int top = family.dimension();
    const int bottom = top - 2;
    if (bottom < 0 || family.cells(bottom).empty())
        throw UnsupportedSpec("enumeration needs a family spanning three consecutive dimensions");
    for (int d = 0; d < bottom; ++d)
        if (!family.cells(d).empty())
            throw UnsupportedSpec("enumeration needs a family spanning three consecutive dimensions");

    struct Slot {
        EdgeMask cell;
        bool goes_up;
        std::vector<EdgeMask> options;
    };
    std::vector<Slot> slots;
    const auto& mid = family.cells(bottom + 1);
    for (const auto c : family.cells(bottom)) {
        Slot s{c, true, {}};
        for (const auto mcell : mid)
            if (is_facet(c, mcell))
                s.options.push_back(mcell);
        slots.push_back(std::move(s));
    }
    for (const auto c : family.cells(top)) {
        Slot s{c, false, {}};
        for (const auto mcell : mid)
            if (is_facet(mcell, c))
                s.options.push_back(mcell);
        slots.push_back(std::move(s));
    }

    MatchingEnumeration result;
    std::vector<EdgeMask> chosen(slots.size());
    CellSet used;
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == slots.size()) {
            ++result.total;
            Matching m;
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if (slots[s].goes_up)
                    m.add(slots[s].cell, chosen[s]);
                else
                    m.add(chosen[s], slots[s].cell);
            }
            if (verify_acyclic(m, family).acyclic)
                result.acyclic.push_back(std::move(m));
            return;
        }
        for (const auto opt : slots[i].options) {
            if (used.count(opt))
                continue;
            used.insert(opt);
            chosen[i] = opt;
            self(self, i + 1);
            used.erase(opt);
        }
    };
    recurse(recurse, 0);
    return result;
}

/// Text export: `d <tau-hex> <sigma-hex>` per pair, sorted by dimension then mask.
inline void write_matching(std::ostream& os, const Matching& m, int n)
{
    const int w = hex_width(n);
    for (const auto& p : m.pairs())
        os << popcount(p.lower) - 1 << ' ' << to_hex(p.lower, w) << ' ' << to_hex(p.upper, w) << '\n';
}

} // namespace domcomplex

#endif // DOMCOMPLEX_MORSE_HPP
