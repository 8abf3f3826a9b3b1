#ifndef DOMCOMPLEX_CACHE_IO_HPP
#define DOMCOMPLEX_CACHE_IO_HPP

// Text cache format for an enumerated D_{n,k}:
//
//   domcomplex v1 n=<n> k=<k> dims=<c0>,<c1>,...
//   <hex mask>
//   ...
//
// Masks are lowercase, zero padded to ceil(C(n,2)/4) digits and sorted
// ascending.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "complex.hpp"

namespace domcomplex {

inline int hex_width(int n) { return (edge_count(n) + 3) / 4; }

inline std::string to_hex(EdgeMask m, int width)
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = width - 1; i >= 0 && m != 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[static_cast<int>(m & 0xf)];
        m >>= 4;
    }
    return s;
}

inline EdgeMask from_hex(const std::string& s)
{
    if (s.empty() || s.size() > 32)
        throw FormatError("bad hex mask '" + s + "'");
    EdgeMask m = 0;
    for (const char ch : s) {
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else
            throw FormatError("bad hex digit in '" + s + "'");
        m = (m << 4) | static_cast<EdgeMask>(v);
    }
    return m;
}

inline void write_cache(std::ostream& os, const CellTable& table)
{
    if (!table.is_domination_complex())
        throw UnsupportedSpec("only D_{n,k} tables can be exported");
    const int n = table.n().value();
    os << "domcomplex v1 n=" << n << " k=" << table.k() << " dims=";
    for (int d = 0; d <= table.dimension(); ++d)
        os << (d ? "," : "") << table.cells(d).size();
    os << '\n';
    auto cells = table.all();
    std::sort(cells.begin(), cells.end());
    const int w = hex_width(n);
    for (const auto c : cells)
        os << to_hex(c, w) << '\n';
}

namespace detail {

inline int parse_field(const std::string& tok, const std::string& key)
{
    if (tok.rfind(key + "=", 0) != 0)
        throw FormatError("expected '" + key + "=' in cache header, got '" + tok + "'");
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok.substr(key.size() + 1), &used);
        if (used != tok.size() - key.size() - 1)
            throw FormatError("bad number in '" + tok + "'");
        return v;
    } catch (const std::logic_error&) {
        throw FormatError("bad number in '" + tok + "'");
    }
}

} // namespace detail

/// Loads a cache file, checking the header counts, ordering, mask width and
/// that every cell really lies in D_{n,k}.
inline CellTable read_cache(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw FormatError("empty cache file");
    std::istringstream hs(line);
    std::string magic, version, ntok, ktok, dtok, extra;
    hs >> magic >> version >> ntok >> ktok >> dtok;
    if (magic != "domcomplex")
        throw FormatError("not a domcomplex cache file");
    if (version != "v1")
        throw VersionError("unsupported cache version '" + version + "'");
    if (hs >> extra)
        throw FormatError("trailing header field '" + extra + "'");
    const int n = detail::parse_field(ntok, "n");
    const int k = detail::parse_field(ktok, "k");
    const ComplexSpec spec(VertexCount(n), k);
    if (dtok.rfind("dims=", 0) != 0)
        throw FormatError("expected 'dims=' in cache header");
    std::vector<std::uint64_t> counts;
    {
        std::istringstream ds(dtok.substr(5));
        std::string c;
        while (std::getline(ds, c, ','))
            counts.push_back(static_cast<std::uint64_t>(detail::parse_field("d=" + c, "d")));
    }

    const int w = hex_width(n);
    std::vector<std::vector<EdgeMask>> by_dim(counts.size());
    EdgeMask prev = 0;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        if (static_cast<int>(line.size()) != w)
            throw FormatError("mask '" + line + "' has width " + std::to_string(line.size()) + ", expected " +
                              std::to_string(w));
        const EdgeMask m = from_hex(line);
        if (!first && m <= prev)
            throw FormatError("cells are not strictly ascending");
        first = false;
        prev = m;
        if (w * 4 > edge_count(n) && (m >> edge_count(n)) != 0)
            throw FormatError("mask '" + line + "' has bits beyond C(n,2)");
        const LabeledGraph g(VertexCount(n), m);
        if (g.size() == 0 || g.dimension() >= static_cast<int>(counts.size()))
            throw FormatError("cell " + line + " has a dimension absent from the header");
        if (!domination_at_least(g, k))
            throw FormatError("cell " + g.to_string() + " is not in D_{" + std::to_string(n) + "," +
                              std::to_string(k) + "}");
        by_dim[g.dimension()].push_back(m);
    }
    for (std::size_t d = 0; d < counts.size(); ++d)
        if (by_dim[d].size() != counts[d])
            throw FormatError("dimension " + std::to_string(d) + " has " + std::to_string(by_dim[d].size()) +
                              " cells, header says " + std::to_string(counts[d]));
    return CellTable(spec.n, k, std::move(by_dim));
}

} // namespace domcomplex

#endif // DOMCOMPLEX_CACHE_IO_HPP
