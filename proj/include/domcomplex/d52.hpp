#ifndef DOMCOMPLEX_D52_HPP
#define DOMCOMPLEX_D52_HPP

// Reference data and matching for D_{5,2}: the R_12 cells grouped by the
// facet that contributes them, the labeled R_34 family, and the hand-built
// matching on R_34 that leaves four critical 5-cells.

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "construction.hpp"
#include "morse.hpp"

namespace domcomplex::d52 {

inline constexpr int kN = 5;
inline constexpr int kK = 2;

/// One facet of D_{5,2} together with the R_12 cells it contributes that no
/// earlier facet in the list already contributed.
struct FacetContribution {
    std::string_view facet;
    std::vector<std::string_view> cells;
};

inline const std::vector<FacetContribution>& r12_contributions()
{
    static const std::vector<FacetContribution> tables = {
        // K4 + (1) facets.
        {"23|24|25|34|35|45",
         {"23|24|25", "23|24|25|34", "23|24|25|35", "23|24|25|45", "23|24|25|34|35", "23|24|25|34|45",
          "23|24|25|35|45", "23|24|25|34|35|45"}},
        {"13|14|15|34|35|45",
         {"13|14|15", "13|14|15|34", "13|14|15|35", "13|14|15|45", "13|14|15|34|35", "13|14|15|34|45",
          "13|14|15|35|45", "13|14|15|34|35|45"}},
        // Complements of a 3-path plus a disjoint edge, each containing 12.
        {"14|15|23|24|25|34|35",
         {"14|23|24|25", "15|23|24|25", "14|15|23|24|25", "14|23|24|25|34", "14|23|24|25|35", "15|23|24|25|34",
          "15|23|24|25|35", "14|15|23|24|25|34", "14|15|23|24|25|35", "14|23|24|25|34|35", "15|23|24|25|34|35",
          "14|15|23|24|25|34|35"}},
        {"13|15|23|24|25|34|45",
         {"13|23|24|25", "13|15|23|24|25", "13|23|24|25|34", "13|23|24|25|45", "15|23|24|25|45",
          "13|15|23|24|25|34", "13|15|23|24|25|45", "13|23|24|25|34|45", "15|23|24|25|34|45",
          "13|15|23|24|25|34|45"}},
        {"13|14|23|24|25|35|45",
         {"13|14|23|24|25", "13|23|24|25|35", "14|23|24|25|45", "13|14|23|24|25|35", "13|14|23|24|25|45",
          "13|23|24|25|35|45", "14|23|24|25|35|45", "13|14|23|24|25|35|45"}},
        {"13|14|15|24|25|34|35",
         {"13|14|15|24", "13|14|15|25", "13|14|15|24|25", "13|14|15|24|34", "13|14|15|24|35", "13|14|15|25|34",
          "13|14|15|25|35", "13|14|15|24|25|34", "13|14|15|24|25|35", "13|14|15|24|34|35", "13|14|15|25|34|35",
          "13|14|15|24|25|34|35"}},
        {"13|14|15|23|25|34|45",
         {"13|14|15|23", "13|14|15|23|25", "13|14|15|23|34", "13|14|15|23|45", "13|14|15|25|45",
          "13|14|15|23|25|34", "13|14|15|23|25|45", "13|14|15|23|34|45", "13|14|15|25|34|45",
          "13|14|15|23|25|34|45"}},
        {"13|14|15|23|24|35|45",
         {"13|14|15|23|24", "13|14|15|23|35", "13|14|15|24|45", "13|14|15|23|24|35", "13|14|15|23|24|45",
          "13|14|15|23|35|45", "13|14|15|24|35|45", "13|14|15|23|24|35|45"}},
        {"13|14|15|23|24|25|45",
         {"13|14|15|23|24|25", "13|14|15|24|25|45", "14|15|23|24|25|45", "13|14|15|23|24|25|45"}},
        {"13|14|15|23|24|25|34", {"13|14|15|23|24|34", "13|14|23|24|25|34", "13|14|15|23|24|25|34"}},
        {"13|14|15|23|24|25|35", {"13|14|15|23|25|35", "13|15|23|24|25|35", "13|14|15|23|24|25|35"}},
    };
    return tables;
}

struct LabeledCell {
    char label;
    std::string_view cell;
};

/// The twenty cells of R_34 with their single-letter names (l is written ell
/// in print).
inline constexpr std::array<LabeledCell, 20> kR34 = {{
    {'a', "13|14|15|23|35"},    {'b', "13|14|15|24|45"},    {'c', "13|23|24|25|35"},
    {'d', "14|23|24|25|45"},    {'e', "13|14|15|23|24|35"}, {'f', "13|14|15|23|24|45"},
    {'g', "13|14|15|23|25|35"}, {'h', "13|14|15|23|35|45"}, {'i', "13|14|15|24|25|45"},
    {'j', "13|14|15|24|35|45"}, {'k', "13|14|23|24|25|35"}, {'l', "13|14|23|24|25|45"},
    {'m', "13|15|23|24|25|35"}, {'n', "13|23|24|25|35|45"}, {'p', "14|15|23|24|25|45"},
    {'q', "14|23|24|25|35|45"}, {'r', "13|14|15|23|24|25|35"}, {'s', "13|14|15|23|24|25|45"},
    {'t', "13|14|15|23|24|35|45"}, {'u', "13|14|23|24|25|35|45"},
}};

/// The default R_34 matching, as (lower, upper) label pairs.
inline constexpr std::array<std::pair<char, char>, 8> kR34Pairs = {{
    {'a', 'e'}, {'b', 'f'}, {'c', 'k'}, {'d', 'l'}, {'g', 'r'}, {'i', 's'}, {'j', 't'}, {'n', 'u'},
}};

inline EdgeMask cell(std::string_view text) { return LabeledGraph::parse(text, VertexCount(kN)).edges(); }

inline EdgeMask r34_cell(char label)
{
    for (const auto& lc : kR34)
        if (lc.label == label)
            return cell(lc.cell);
    throw std::out_of_range(std::string("no R34 cell labeled ") + label);
}

inline char r34_label(EdgeMask m)
{
    for (const auto& lc : kR34)
        if (cell(lc.cell) == m)
            return lc.label;
    return '?';
}

inline Matching default_r34_matching()
{
    Matching m;
    for (const auto& [lo, hi] : kR34Pairs)
        m.add(r34_cell(lo), r34_cell(hi));
    return m;
}

/// Pieces of the D_{5,2} matching P_12 + P_34 + R_34.
struct D52Matching {
    CellTable cells;
    EdgeSplit split12;
    Matching p12;
    Matching p34;
    std::vector<EdgeMask> r34; // R_12 cells left unmatched by P_34
    Matching r34_matching;
    Matching full;
};

inline D52Matching build_matching(const Matching& r34_matching = default_r34_matching())
{
    D52Matching dm;
    dm.cells = enumerate(ComplexSpec(VertexCount(kN), kK));
    dm.split12 = split_by_edge(dm.cells, edge_index(1, 2, kN));
    dm.p12 = inclusion_exclusion_matching(edge_index(1, 2, kN), to_cell_set(dm.cells.all()));
    const CellSet r12 = to_cell_set(dm.split12.r);
    dm.p34 = inclusion_exclusion_matching(edge_index(3, 4, kN), r12);
    for (const auto c : dm.split12.r)
        if (!dm.p34.is_matched(c))
            dm.r34.push_back(c);
    dm.r34_matching = r34_matching;
    dm.full = assemble({dm.p12, dm.p34, dm.r34_matching});
    return dm;
}

} // namespace domcomplex::d52

#endif // DOMCOMPLEX_D52_HPP
