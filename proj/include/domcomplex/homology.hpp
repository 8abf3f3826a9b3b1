#ifndef DOMCOMPLEX_HOMOLOGY_HPP
#define DOMCOMPLEX_HOMOLOGY_HPP

// Simplicial boundary matrices and Betti numbers, over the two-element field
// or over the integers (ranks and elementary divisors by Smith elimination).

#include <algorithm>
#include <cstdint>
#include <future>
#include <numeric>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "complex.hpp"

namespace domcomplex {

enum class HomologyMode { gf2, integer };

inline std::string to_string(HomologyMode m) { return m == HomologyMode::gf2 ? "gf2" : "int"; }

/// Sparse matrix of the boundary map from d-cells (columns) to (d-1)-cells
/// (rows).  Entries carry the alternating sign; gf2 consumers ignore it.
struct BoundaryMatrix {
    struct Entry {
        std::uint32_t row;
        std::int8_t sign;
    };

    int d = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;
};

/// Deleting the r-th smallest edge (r from 0) contributes sign (-1)^r.
inline BoundaryMatrix boundary_matrix(const CellTable& cells, int d)
{
    if (d < 1 || d > cells.dimension())
        throw UnsupportedSpec("boundary dimension " + std::to_string(d) + " outside [1, " +
                              std::to_string(cells.dimension()) + "]");
    BoundaryMatrix b;
    b.d = d;
    b.rows = cells.cells(d - 1).size();
    b.cols = cells.cells(d).size();
    b.columns.reserve(b.cols);
    for (const auto sigma : cells.cells(d)) {
        std::vector<BoundaryMatrix::Entry> col;
        int r = 0;
        for_each_edge(sigma, [&](int e) {
            if (const auto id = cells.id(sigma & ~edge_bit(e)))
                col.push_back({static_cast<std::uint32_t>(id->ordinal), static_cast<std::int8_t>(r % 2 == 0 ? 1 : -1)});
            ++r;
        });
        std::sort(col.begin(), col.end(), [](const auto& x, const auto& y) { return x.row < y.row; });
        b.columns.push_back(std::move(col));
    }
    return b;
}

/// Column reduction with a pivot table, columns kept as sorted row lists.
inline std::size_t rank_gf2_sparse(const BoundaryMatrix& b)
{
    constexpr std::uint32_t none = UINT32_MAX;
    std::vector<std::uint32_t> pivot_owner(b.rows, none);
    std::vector<std::vector<std::uint32_t>> reduced(b.cols);
    std::size_t rank = 0;
    std::vector<std::uint32_t> scratch;
    for (std::size_t j = 0; j < b.cols; ++j) {
        auto& col = reduced[j];
        for (const auto& e : b.columns[j])
            col.push_back(e.row);
        while (!col.empty()) {
            const std::uint32_t low = col.back();
            const std::uint32_t owner = pivot_owner[low];
            if (owner == none) {
                pivot_owner[low] = static_cast<std::uint32_t>(j);
                ++rank;
                break;
            }
            const auto& other = reduced[owner];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                          std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return rank;
}

/// Bit-packed Gaussian elimination; rows are the packed dimension.
inline std::size_t rank_gf2_dense(const BoundaryMatrix& b)
{
    const std::size_t words = (b.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivots(b.rows);
    std::vector<std::uint64_t> col(words);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < b.cols; ++j) {
        std::fill(col.begin(), col.end(), 0);
        for (const auto& e : b.columns[j])
            col[e.row / 64] |= std::uint64_t{1} << (e.row % 64);
        for (std::size_t w = words; w-- > 0;) {
            while (col[w] != 0) {
                const std::size_t low = w * 64 + 63 - static_cast<std::size_t>(std::countl_zero(col[w]));
                if (pivots[low].empty()) {
                    pivots[low] = col;
                    ++rank;
                    goto next_column;
                }
                for (std::size_t x = 0; x <= w; ++x)
                    col[x] ^= pivots[low][x];
            }
        }
    next_column:;
    }
    return rank;
}

inline constexpr std::size_t kDenseGf2MaxColumns = std::size_t{1} << 16;
inline constexpr std::size_t kDenseGf2MaxBits = std::size_t{1} << 30;

inline std::size_t rank_gf2(const BoundaryMatrix& b)
{
    if (b.cols <= kDenseGf2MaxColumns && b.rows * b.cols <= kDenseGf2MaxBits)
        return rank_gf2_dense(b);
    return rank_gf2_sparse(b);
}

struct IntegerOverflow {};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;

template <class T>
inline constexpr bool is_builtin_int_v = std::is_same_v<T, std::int64_t> || std::is_same_v<T, __int128>;

template <class T>
T checked_sub_mul(T a, T q, T b)
{
    if constexpr (is_builtin_int_v<T>) {
        T prod, out;
        if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out))
            throw IntegerOverflow{};
        return out;
    } else {
        return a - q * b;
    }
}

template <class T>
T abs_value(const T& v)
{
    return v < 0 ? T(-v) : v;
}

template <class T>
std::string decimal(const T& v)
{
    if constexpr (std::is_same_v<T, BigInt>) {
        return v.str();
    } else {
        BigInt b = 0;
        const bool neg = v < 0;
        unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        BigInt place = 1;
        while (u != 0) {
            b += place * static_cast<unsigned>(u % 10);
            place *= 10;
            u /= 10;
        }
        return (neg ? "-" : "") + b.str();
    }
}

// Diagonalizes a dense copy of the matrix by unimodular row and column
// operations; returns the absolute diagonal entries.
template <class T>
std::vector<T> diagonalize(const BoundaryMatrix& b)
{
    const std::size_t rows = b.rows, cols = b.cols;
    std::vector<T> a(rows * cols, T(0));
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& e : b.columns[j])
            a[e.row * cols + j] = T(e.sign);
    auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * cols + j]; };

    std::vector<T> diagonal;
    std::size_t active_cols = cols;
    std::size_t t = 0;
    while (t < rows && t < active_cols) {
        // Pivot: first column with a nonzero entry below t, smallest entry in it.
        std::size_t pj = t, pi = rows;
        while (pj < active_cols) {
            for (std::size_t i = t; i < rows; ++i)
                if (at(i, pj) != 0 && (pi == rows || abs_value(at(i, pj)) < abs_value(at(pi, pj)))) {
                    pi = i;
                    if (abs_value(at(i, pj)) == 1)
                        break;
                }
            if (pi != rows)
                break;
            // All-zero column: park it at the end.
            --active_cols;
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(at(i, pj), at(i, active_cols));
        }
        if (pi == rows)
            break;
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(at(i, pj), at(i, t));
        if (pi != t)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(at(pi, j), at(t, j));

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (at(i, t) == 0)
                    continue;
                const T q = at(i, t) / at(t, t);
                for (std::size_t j = t; j < active_cols; ++j)
                    if (at(t, j) != 0)
                        at(i, j) = checked_sub_mul(at(i, j), q, at(t, j));
                if (at(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < active_cols; ++j) {
                if (at(t, j) == 0)
                    continue;
                const T q = at(t, j) / at(t, t);
                for (std::size_t i = t; i < rows; ++i)
                    if (at(i, t) != 0)
                        at(i, j) = checked_sub_mul(at(i, j), q, at(i, t));
                if (at(t, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
            // A remainder smaller than the pivot survived; make it the pivot.
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (at(i, t) != 0 && abs_value(at(i, t)) < abs_value(at(bi, bj))) {
                    bi = i;
                    bj = t;
                }
            for (std::size_t j = t + 1; j < active_cols; ++j)
                if (at(t, j) != 0 && abs_value(at(t, j)) < abs_value(at(bi, bj))) {
                    bi = t;
                    bj = j;
                }
            if (bi != t)
                for (std::size_t j = 0; j < cols; ++j)
                    std::swap(at(bi, j), at(t, j));
            if (bj != t)
                for (std::size_t i = 0; i < rows; ++i)
                    std::swap(at(i, bj), at(i, t));
        }
        diagonal.push_back(abs_value(at(t, t)));
        ++t;
    }
    return diagonal;
}

} // namespace detail

struct SmithResult {
    std::size_t rank = 0;
    std::vector<std::string> torsion; // elementary divisors > 1, ascending
};

inline constexpr std::size_t kIntegerEntryBudget = 25'000'000;

/// Rank and elementary divisors over the integers.  Starts with 64-bit
/// arithmetic and widens on overflow.
inline SmithResult smith_form(const BoundaryMatrix& b, std::size_t entry_budget = kIntegerEntryBudget)
{
    if (b.rows * b.cols > entry_budget)
        throw SizeLimitExceeded("integer elimination of a " + std::to_string(b.rows) + "x" + std::to_string(b.cols) +
                                " boundary matrix exceeds the budget; use gf2 mode or the Euler characteristic");
    std::vector<detail::BigInt> diag;
    try {
        for (const auto v : detail::diagonalize<std::int64_t>(b))
            diag.emplace_back(v);
    } catch (const IntegerOverflow&) {
        try {
            diag.clear();
            for (const auto v : detail::diagonalize<__int128>(b))
                diag.emplace_back(detail::decimal(v));
        } catch (const IntegerOverflow&) {
            diag = detail::diagonalize<detail::BigInt>(b);
        }
    }
    // Units are neutral; normalize the rest to divisibility order with
    // (x, y) -> (gcd, lcm).
    std::vector<detail::BigInt> rest;
    for (const auto& v : diag)
        if (v > 1)
            rest.push_back(v);
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
            const detail::BigInt g = boost::multiprecision::gcd(rest[i], rest[j]);
            if (g != rest[i]) {
                const detail::BigInt l = rest[i] / g * rest[j];
                rest[i] = g;
                rest[j] = l;
            }
        }
    SmithResult r;
    r.rank = diag.size();
    for (const auto& v : rest)
        if (v > 1)
            r.torsion.push_back(v.str());
    return r;
}

inline std::size_t rank_integer(const BoundaryMatrix& b) { return smith_form(b).rank; }

struct BettiVector {
    std::vector<std::int64_t> b;
    HomologyMode mode = HomologyMode::gf2;
    // Integer mode: torsion[d] lists the elementary divisors > 1 of H_d.
    std::vector<std::vector<std::string>> torsion;

    std::int64_t euler() const noexcept
    {
        std::int64_t chi = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            chi += (i % 2 == 0 ? 1 : -1) * b[i];
        return chi;
    }

    bool has_torsion() const noexcept
    {
        return std::any_of(torsion.begin(), torsion.end(), [](const auto& t) { return !t.empty(); });
    }
};

struct HomologyOptions {
    std::uint64_t cell_budget = kDefaultCellBudget;
    std::size_t integer_entry_budget = kIntegerEntryBudget;
    unsigned jobs = 1;
};

/// b_d = c_d - rank d_d - rank d_{d+1}; b_0 counts connected components.
inline BettiVector betti(const CellTable& cells, HomologyMode mode, const HomologyOptions& options = {})
{
    if (cells.size() > options.cell_budget)
        throw SizeLimitExceeded("complex has " + std::to_string(cells.size()) +
                                " cells, above the homology budget; use Euler-characteristic mode");
    BettiVector out;
    out.mode = mode;
    const int dim = cells.dimension();
    if (dim < 0)
        return out;

    // ranks[d] = rank of the boundary d -> d-1, for d = 1..dim.
    std::vector<std::size_t> ranks(dim + 2, 0);
    std::vector<std::vector<std::string>> divisors(dim + 2);
    auto work = [&](int d) {
        const auto bm = boundary_matrix(cells, d);
        if (mode == HomologyMode::gf2) {
            ranks[d] = rank_gf2(bm);
        } else {
            auto s = smith_form(bm, options.integer_entry_budget);
            ranks[d] = s.rank;
            divisors[d] = std::move(s.torsion);
        }
    };
    if (options.jobs > 1 && dim > 1) {
        std::vector<std::future<void>> pending;
        for (int d = 1; d <= dim; ++d) {
            if (pending.size() >= options.jobs) {
                pending.front().get();
                pending.erase(pending.begin());
            }
            pending.push_back(std::async(std::launch::async, work, d));
        }
        for (auto& f : pending)
            f.get();
    } else {
        for (int d = 1; d <= dim; ++d)
            work(d);
    }

    for (int d = 0; d <= dim; ++d)
        out.b.push_back(static_cast<std::int64_t>(cells.cells(d).size()) - static_cast<std::int64_t>(ranks[d]) -
                        static_cast<std::int64_t>(ranks[d + 1]));
    if (mode == HomologyMode::integer) {
        out.torsion.resize(dim + 1);
        for (int d = 0; d <= dim; ++d)
            out.torsion[d] = divisors[d + 1];
    }
    return out;
}

} // namespace domcomplex

#endif // DOMCOMPLEX_HOMOLOGY_HPP
