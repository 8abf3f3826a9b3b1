#ifndef DOMCOMPLEX_TESTS_ORACLES_HPP
#define DOMCOMPLEX_TESTS_ORACLES_HPP

// Slow, independent reference computations used only by the tests.  Nothing
// here reuses the library's bit tricks or pruning.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// All pairs (i,j), 1 <= i < j <= n, lexicographically.
inline EdgeList all_pairs(int n)
{
    EdgeList out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.emplace_back(i, j);
    return out;
}

// Domination number by trying every vertex subset.
inline int gamma(int n, const EdgeList& edges)
{
    int best = n;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        std::set<int> chosen;
        for (int v = 1; v <= n; ++v)
            if (s & (1u << (v - 1)))
                chosen.insert(v);
        if (static_cast<int>(chosen.size()) >= best)
            continue;
        bool ok = true;
        for (int v = 1; v <= n && ok; ++v) {
            if (chosen.count(v))
                continue;
            bool adj = false;
            for (const auto& [a, b] : edges)
                if ((a == v && chosen.count(b)) || (b == v && chosen.count(a)))
                    adj = true;
            ok = adj;
        }
        if (ok)
            best = static_cast<int>(chosen.size());
    }
    return best;
}

inline EdgeList edges_of(std::uint64_t subset, const EdgeList& pairs)
{
    EdgeList out;
    for (std::size_t b = 0; b < pairs.size(); ++b)
        if (subset & (std::uint64_t{1} << b))
            out.push_back(pairs[b]);
    return out;
}

// Every nonempty edge subset with gamma >= k, by exhaustive search.  The
// returned bit patterns use the same lexicographic edge order.
inline std::vector<std::uint64_t> complex_cells(int n, int k)
{
    const auto pairs = all_pairs(n);
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << pairs.size()); ++s)
        if (gamma(n, edges_of(s, pairs)) >= k)
            out.push_back(s);
    return out;
}

inline std::int64_t binom(std::int64_t n, std::int64_t r)
{
    if (r < 0 || r > n)
        return 0;
    std::int64_t v = 1;
    for (std::int64_t i = 1; i <= r; ++i)
        v = v * (n - r + i) / i;
    return v;
}

// N_n = (n-2)(n-3)(3n^2-7n-2)/12.
inline std::int64_t wedge_count(std::int64_t n) { return (n - 2) * (n - 3) * (3 * n * n - 7 * n - 2) / 12; }

// Closed-form f-vector of D_{n,n-2}.
inline std::vector<std::uint64_t> dnn2_f_vector(std::int64_t n)
{
    const auto c0 = binom(n, 2);
    return {static_cast<std::uint64_t>(c0), static_cast<std::uint64_t>(binom(c0, 2)),
            static_cast<std::uint64_t>(binom(n, 3) + 12 * binom(n, 4)), static_cast<std::uint64_t>(3 * binom(n, 4))};
}

} // namespace oracle

#endif // DOMCOMPLEX_TESTS_ORACLES_HPP
