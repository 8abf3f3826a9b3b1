#ifndef DOMCOMPLEX_CONSTRUCTION_HPP
#define DOMCOMPLEX_CONSTRUCTION_HPP

// The explicit matchings on D_{n,n-2}: inclusion-exclusion of the edge 12 on
// X_12, then Q^2_1 (1-cells of R_12 up to 2-cells) and Q^3_2 (3-cells of R_12
// down to their free faces).

#include <algorithm>
#include <string>
#include <vector>

#include "complex.hpp"
#include "morse.hpp"

namespace domcomplex {

/// Pairs sigma (without e) with sigma + e whenever both lie in `family`.
inline Matching inclusion_exclusion_matching(int edge, const CellSet& family)
{
    Matching m;
    const EdgeMask bit = edge_bit(edge);
    for (const auto c : family)
        if ((c & bit) == 0 && family.count(c | bit))
            m.add(c, c | bit);
    return m;
}

inline CellSet to_cell_set(const std::vector<EdgeMask>& cells) { return CellSet(cells.begin(), cells.end()); }

/// Matches each 1-cell sigma of R_12 with sigma + ij for the first edge ij
/// (lexicographic, i < j < n) keeping the graph inside R_12.
inline Matching q12_matching(const CellSet& r12, int n)
{
    Matching m;
    const auto& t = detail::edge_table(n);
    std::vector<EdgeMask> ones;
    for (const auto c : r12)
        if (popcount(c) == 2)
            ones.push_back(c);
    std::sort(ones.begin(), ones.end());
    for (const auto sigma : ones) {
        bool found = false;
        for (int e = 0; e < edge_count(n) && !found; ++e) {
            if (t.endpoints[e].j >= n || ((sigma >> e) & 1) != 0)
                continue;
            const EdgeMask up = sigma | edge_bit(e);
            if (r12.count(up)) {
                m.add(sigma, up);
                found = true;
            }
        }
        if (!found)
            throw ViolatedLemma("1-cell " + LabeledGraph(VertexCount(n), sigma).to_string() +
                                " of R12 has no admissible cofacet in R12");
    }
    return m;
}

/// Matches each 3-cell of R_12 with the 2-cell obtained by deleting its
/// lexicographically first edge.
inline Matching q23_matching(const CellSet& r12, int n)
{
    Matching m;
    for (const auto sigma : r12) {
        if (popcount(sigma) != 4)
            continue;
        const EdgeMask face = sigma & ~edge_bit(lowest_edge(sigma));
        if (!r12.count(face))
            throw ViolatedLemma("free face of " + LabeledGraph(VertexCount(n), sigma).to_string() +
                                " is not in R12");
        m.add(face, sigma);
    }
    return m;
}

/// The pieces of the D_{n,n-2} matching, kept separate so that each can be
/// checked on its own.
struct DominationMatching {
    CellTable cells;
    EdgeSplit split; // X_12 / R_12
    Matching p12;
    Matching q12;
    Matching q23;
    Matching full; // p12 + q12 + q23
};

inline DominationMatching build_domination_matching(CellTable cells)
{
    DominationMatching dm;
    dm.split = x12_r12_split(cells);
    const int n = cells.n().value();
    const int e12 = edge_index(1, 2, n);
    dm.p12 = inclusion_exclusion_matching(e12, to_cell_set(cells.all()));
    const CellSet r12 = to_cell_set(dm.split.r);
    dm.q12 = q12_matching(r12, n);
    dm.q23 = q23_matching(r12, n);
    dm.full = assemble({dm.p12, dm.q12, dm.q23});
    dm.cells = std::move(cells);
    return dm;
}

inline DominationMatching build_domination_matching(VertexCount n, const EnumerateOptions& options = {})
{
    if (n.value() < 4)
        throw UnsupportedSpec("the D_{n,n-2} matching needs n >= 4");
    return build_domination_matching(enumerate(ComplexSpec(n, n.value() - 2), options));
}

/// Q_12 paths confined to R_12 minus the image of D_{n-1,n-3}: reports
/// cycles and the longest path there.
inline CycleReport q12_outside_embedding(const DominationMatching& big, const CellTable& small_cells)
{
    CellSet excluded = embedded_cells(small_cells);
    for (const auto c : big.split.x)
        excluded.insert(c);
    return verify_no_outside_cycles(big.q12, big.cells, excluded);
}

} // namespace domcomplex

#endif // DOMCOMPLEX_CONSTRUCTION_HPP
