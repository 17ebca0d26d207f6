#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "matkit/fixture_data.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// ---------------------------------------------------------------------------
// Named constructions
// ---------------------------------------------------------------------------

/// U(r,n): every r-subset of an n-element ground set is a basis.
inline Matroid uniform(int r, int n) {
    if (r < 0 || n < 0 || r > n || n > kMaxElements)
        throw PreconditionError("uniform(r,n) needs 0 <= r <= n <= 16");
    std::vector<ElemSet> bases;
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < total; ++mask)
        if (std::popcount(mask) == r) bases.push_back(ElemSet(mask));
    return Matroid(n, std::move(bases), "U(" + std::to_string(r) + "," + std::to_string(n) + ")",
                   Matroid::Check::trust);
}

namespace detail {

/// Spanning trees of the k-spoked wheel graph.  Element 2i is the spoke from
/// the hub to rim vertex i; element 2i+1 is the rim edge from rim vertex i to
/// rim vertex i+1 (mod k).
inline std::vector<ElemSet> wheel_spanning_trees(int k) {
    struct Edge {
        int u, v;
    };
    std::vector<Edge> edges(static_cast<std::size_t>(2 * k));
    for (int i = 0; i < k; ++i) {
        edges[static_cast<std::size_t>(2 * i)] = {0, 1 + i};
        edges[static_cast<std::size_t>(2 * i + 1)] = {1 + i, 1 + (i + 1) % k};
    }
    const int vertices = k + 1;
    std::vector<ElemSet> trees;
    const std::uint32_t total = std::uint32_t{1} << (2 * k);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) != k) continue;
        std::vector<int> parent(static_cast<std::size_t>(vertices));
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        bool acyclic = true;
        for_each_element(ElemSet(mask), [&](int e) {
            const int ru = root(edges[static_cast<std::size_t>(e)].u);
            const int rv = root(edges[static_cast<std::size_t>(e)].v);
            if (ru == rv)
                acyclic = false;
            else
                parent[static_cast<std::size_t>(ru)] = rv;
        });
        if (acyclic) trees.push_back(ElemSet(mask));
    }
    return trees;
}

}  // namespace detail

/// M(W_k), the cycle matroid of the k-spoked wheel; rank k on 2k elements.
inline Matroid wheel(int k) {
    if (k < 3 || 2 * k > kMaxElements) throw PreconditionError("wheel(k) needs 3 <= k <= 8");
    return Matroid(2 * k, detail::wheel_spanning_trees(k), "Wheel(" + std::to_string(k) + ")",
                   Matroid::Check::trust);
}

/// The rank-k whirl: relax the rim of the wheel, which is a circuit-hyperplane.
inline Matroid whirl(int k) {
    if (k < 3 || 2 * k > kMaxElements) throw PreconditionError("whirl(k) needs 3 <= k <= 8");
    std::vector<ElemSet> bases = detail::wheel_spanning_trees(k);
    ElemSet rim;
    for (int i = 0; i < k; ++i) rim = rim.with(2 * i + 1);
    bases.push_back(rim);
    return Matroid(2 * k, std::move(bases), "Whirl(" + std::to_string(k) + ")",
                   Matroid::Check::trust);
}

/// The rank-r tipless free spike: legs L_i = {2i, 2i+1}; an r-subset is a
/// basis unless it contains two full legs.
inline Matroid tipless_free_spike(int r) {
    if (r < 3 || 2 * r > kMaxElements)
        throw PreconditionError("tipless_free_spike(r) needs 3 <= r <= 8");
    std::vector<ElemSet> bases;
    const std::uint32_t total = std::uint32_t{1} << (2 * r);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        if (std::popcount(mask) != r) continue;
        int full_legs = 0;
        for (int i = 0; i < r; ++i) {
            const std::uint32_t leg = 0b11u << (2 * i);
            if ((mask & leg) == leg) ++full_legs;
        }
        if (full_legs <= 1) bases.push_back(ElemSet(mask));
    }
    return Matroid(2 * r, std::move(bases), "TiplessSpike(" + std::to_string(r) + ")",
                   Matroid::Check::trust);
}

/// The Vamos matroid V8: rank 4 on pairs a={0,1}, b={2,3}, c={4,5}, d={6,7};
/// the non-bases are the five 4-sets ab, ac, ad, bc, bd.
inline Matroid vamos() {
    const std::array<std::uint32_t, 5> nonbases = {
        0b00001111u, 0b00110011u, 0b11000011u, 0b00111100u, 0b11001100u};
    std::vector<ElemSet> bases;
    for (std::uint32_t mask = 0; mask < (1u << 8); ++mask) {
        if (std::popcount(mask) != 4) continue;
        bool skip = false;
        for (std::uint32_t nb : nonbases) skip = skip || (mask == nb);
        if (!skip) bases.push_back(ElemSet(mask));
    }
    return Matroid(8, std::move(bases), "Vamos", Matroid::Check::trust);
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------
//
//   MATROID <name>        name: [A-Za-z0-9_()+,-]+
//   ELEMENTS <n>          0 <= n <= 16
//   RANK <r>
//   BASES <count>
//   <count> lines of space-separated ascending element indices,
//   sorted lexicographically as byte strings.  Lines starting '#' are
//   comments.  LF line endings, no trailing whitespace.

namespace detail {

inline bool valid_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '(' || c == ')' ||
                        c == '+' || c == ',' || c == '-';
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

inline std::string serialize_matroid(const Matroid& m) {
    if (!detail::valid_name(m.name()))
        throw PreconditionError("matroid name '" + m.name() + "' not serialisable");
    std::string out;
    out += "MATROID " + m.name() + "\n";
    out += "ELEMENTS " + std::to_string(m.size()) + "\n";
    out += "RANK " + std::to_string(m.rank()) + "\n";
    out += "BASES " + std::to_string(m.bases().size()) + "\n";
    std::vector<std::string> lines;
    lines.reserve(m.bases().size());
    for (ElemSet b : m.bases()) {
        std::string line;
        bool first = true;
        for (int e : b.elements()) {
            if (!first) line += ' ';
            line += std::to_string(e);
            first = false;
        }
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) out += line + "\n";
    return out;
}

inline Matroid parse_matroid(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;  // (line number, content)
    {
        int lineno = 0;
        std::string cur;
        std::istringstream in(text);
        while (std::getline(in, cur)) {
            ++lineno;
            if (!cur.empty() && cur.back() == '\r')
                throw ParseError("CR line ending; format requires LF only", lineno,
                                 static_cast<int>(cur.size()));
            if (cur.empty() || cur[0] == '#') continue;
            if (cur.back() == ' ' || cur.back() == '\t')
                throw ParseError("trailing whitespace", lineno, static_cast<int>(cur.size()));
            lines.emplace_back(lineno, cur);
        }
    }
    std::size_t pos = 0;
    auto next_line = [&](const char* what) -> std::pair<int, std::string> {
        if (pos >= lines.size())
            throw ParseError(std::string("unexpected end of input, expected ") + what,
                             lines.empty() ? 1 : lines.back().first, 1);
        return lines[pos++];
    };
    auto keyword_int = [&](const std::string& key, long min, long max) -> long {
        auto [lineno, line] = next_line(key.c_str());
        if (line.rfind(key + " ", 0) != 0)
            throw ParseError("expected '" + key + " <value>'", lineno, 1);
        const std::string rest = line.substr(key.size() + 1);
        std::size_t used = 0;
        long value = 0;
        try {
            value = std::stol(rest, &used);
        } catch (const std::exception&) {
            throw ParseError("expected integer after '" + key + "'", lineno,
                             static_cast<int>(key.size() + 2));
        }
        if (used != rest.size())
            throw ParseError("junk after integer", lineno,
                             static_cast<int>(key.size() + 2 + used));
        if (value < min || value > max)
            throw ParseError(key + " value " + std::to_string(value) + " out of range",
                             lineno, static_cast<int>(key.size() + 2));
        return value;
    };

    auto [name_lineno, name_line] = next_line("MATROID <name>");
    if (name_line.rfind("MATROID ", 0) != 0)
        throw ParseError("expected 'MATROID <name>'", name_lineno, 1);
    const std::string name = name_line.substr(8);
    if (!detail::valid_name(name))
        throw ParseError("invalid matroid name '" + name + "'", name_lineno, 9);

    const int n = static_cast<int>(keyword_int("ELEMENTS", 0, kMaxElements));
    const int r = static_cast<int>(keyword_int("RANK", 0, n));
    const long count = keyword_int("BASES", 1, 1L << 20);

    std::vector<ElemSet> bases;
    bases.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        auto [lineno, line] = next_line("basis line");
        ElemSet b;
        int prev = -1;
        int col = 1;
        std::size_t at = 0;
        while (at < line.size()) {
            std::size_t end = line.find(' ', at);
            if (end == std::string::npos) end = line.size();
            const std::string tok = line.substr(at, end - at);
            if (tok.empty()) throw ParseError("empty token", lineno, col);
            std::size_t used = 0;
            long e = 0;
            try {
                e = std::stol(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("expected element index", lineno, col);
            }
            if (used != tok.size()) throw ParseError("junk in element index", lineno, col);
            if (e < 0 || e >= n)
                throw ParseError("element " + std::to_string(e) + " out of range 0.." +
                                     std::to_string(n - 1),
                                 lineno, col);
            if (e <= prev)
                throw ParseError("element indices must be strictly ascending", lineno, col);
            prev = static_cast<int>(e);
            b = b.with(static_cast<int>(e));
            col += static_cast<int>(tok.size()) + 1;
            at = end + 1;
        }
        if (b.count() != r)
            throw ParseError("basis has " + std::to_string(b.count()) +
                                 " elements but RANK is " + std::to_string(r),
                             lineno, 1);
        bases.push_back(b);
    }
    if (pos != lines.size())
        throw ParseError("trailing content after basis list", lines[pos].first, 1);
    try {
        return Matroid(n, std::move(bases), name, Matroid::Check::validate);
    } catch (const AxiomError&) {
        throw;
    }
}

// ---------------------------------------------------------------------------
// Built-in catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
    std::string name;
    Matroid matroid;
    std::set<std::string> tags;
    std::string provenance;  // "construction" or "file(<path>)"
};

/// The deterministic catalog used by the test suites: uniforms U(r,n) for
/// r <= 4, n <= 9; wheels and whirls up to 5 spokes; tipless free spikes up
/// to rank 5; the Vamos matroid; duals of all of those; and the committed
/// separator fixture files.
inline std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&](Matroid m, std::set<std::string> tags) {
        out.push_back(CatalogEntry{m.name(), std::move(m), std::move(tags), "construction"});
    };
    for (int r = 0; r <= 4; ++r)
        for (int n = std::max(r, 1); n <= 9; ++n) add(uniform(r, n), {"uniform"});
    for (int k = 3; k <= 5; ++k) add(wheel(k), {"wheel"});
    for (int k = 3; k <= 5; ++k) add(whirl(k), {"whirl"});
    for (int r = 3; r <= 5; ++r) add(tipless_free_spike(r), {"spike"});
    add(vamos(), {"vamos"});
    const std::size_t primal = out.size();
    for (std::size_t i = 0; i < primal; ++i) {
        Matroid d = dual(out[i].matroid);
        std::set<std::string> tags = out[i].tags;
        tags.insert("dual");
        out.push_back(CatalogEntry{d.name(), std::move(d), std::move(tags), "construction"});
    }
    for (const FixtureSource& fx : fixture_sources()) {
        Matroid m = parse_matroid(fx.text);
        out.push_back(CatalogEntry{m.name(), std::move(m),
                                   {std::string("fixture:") + fx.kind},
                                   std::string("file(") + fx.path + ")"});
    }
    return out;
}

}  // namespace matkit
