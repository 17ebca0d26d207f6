#pragma once

// Test-only reference implementations, deliberately naive and kept
// independent of the library code paths they are used to check.  Everything
// here works on a plain (n, basis mask list) pair.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

using Masks = std::vector<std::uint32_t>;

inline int rank(const Masks& bases, std::uint32_t s) {
    int best = 0;
    for (std::uint32_t b : bases) best = std::max(best, std::popcount(b & s));
    return best;
}

inline int full_rank(const Masks& bases) { return std::popcount(bases.at(0)); }

inline bool independent(const Masks& bases, std::uint32_t s) {
    return rank(bases, s) == std::popcount(s);
}

inline int lambda(int n, const Masks& bases, std::uint32_t x) {
    const std::uint32_t ground = (1u << n) - 1u;
    return rank(bases, x) + rank(bases, ground & ~x) - full_rank(bases);
}

inline std::uint32_t closure(int n, const Masks& bases, std::uint32_t s) {
    std::uint32_t out = s;
    for (int e = 0; e < n; ++e)
        if (rank(bases, s | (1u << e)) == rank(bases, s)) out |= (1u << e);
    return out;
}

inline Masks circuits(int n, const Masks& bases) {
    Masks out;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        if (independent(bases, s)) continue;
        bool minimal = true;
        for (int e = 0; e < n; ++e)
            if ((s >> e) & 1u)
                if (!independent(bases, s & ~(1u << e))) minimal = false;
        if (minimal) out.push_back(s);
    }
    return out;
}

inline Masks dual_bases(int n, const Masks& bases) {
    const std::uint32_t ground = (1u << n) - 1u;
    Masks out;
    for (std::uint32_t b : bases) out.push_back(ground & ~b);
    std::sort(out.begin(), out.end());
    return out;
}

inline Masks cocircuits(int n, const Masks& bases) {
    return circuits(n, dual_bases(n, bases));
}

/// Bases of M / con \ del, on the survivors re-indexed in ascending order.
inline std::pair<int, Masks> minor(int n, const Masks& bases, std::uint32_t del,
                                   std::uint32_t con) {
    std::vector<int> survivors;
    for (int e = 0; e < n; ++e)
        if (!((del >> e) & 1u) && !((con >> e) & 1u)) survivors.push_back(e);
    const int n2 = static_cast<int>(survivors.size());
    auto expand = [&](std::uint32_t c) {
        std::uint32_t out = 0;
        for (int i = 0; i < n2; ++i)
            if ((c >> i) & 1u) out |= (1u << survivors[static_cast<std::size_t>(i)]);
        return out;
    };
    const int rcon = rank(bases, con);
    int r2 = 0;
    for (std::uint32_t c = 0; c < (1u << n2); ++c)
        if (rank(bases, expand(c) | con) - rcon == std::popcount(c))
            r2 = std::max(r2, std::popcount(c));
    Masks out;
    for (std::uint32_t c = 0; c < (1u << n2); ++c)
        if (std::popcount(c) == r2 && rank(bases, expand(c) | con) - rcon == r2)
            out.push_back(c);
    return {n2, out};
}

/// Same basis family under some bijection of ground sets, by trying all
/// permutations.
inline bool isomorphic(int n1, const Masks& b1, int n2, const Masks& b2) {
    if (n1 != n2 || b1.size() != b2.size()) return false;
    Masks sorted2 = b2;
    std::sort(sorted2.begin(), sorted2.end());
    std::vector<int> perm(static_cast<std::size_t>(n1));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Masks mapped;
        mapped.reserve(b1.size());
        for (std::uint32_t b : b1) {
            std::uint32_t img = 0;
            for (int e = 0; e < n1; ++e)
                if ((b >> e) & 1u) img |= (1u << perm[static_cast<std::size_t>(e)]);
            mapped.push_back(img);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == sorted2) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Exhaustive N-minor test with no pruning beyond sizes.
inline bool has_minor(int n, const Masks& bases, int nn, const Masks& nbases) {
    if (nn > n) return false;
    const int removals = n - nn;
    for (std::uint32_t rm = 0; rm < (1u << n); ++rm) {
        if (std::popcount(rm) != removals) continue;
        for (std::uint32_t con = rm;; con = (con - 1) & rm) {
            auto [n2, mb] = minor(n, bases, rm & ~con, con);
            if (full_rank(mb) == full_rank(nbases) && isomorphic(n2, mb, nn, nbases))
                return true;
            if (con == 0) break;
        }
    }
    return false;
}

/// Spanning trees of the complete graph K4 as 3-subsets of its 6 edges,
/// edge order (01,02,03,12,13,23); used as the independent route to M(K4).
inline Masks k4_spanning_trees() {
    const int endpoints[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    Masks out;
    for (std::uint32_t s = 0; s < 64; ++s) {
        if (std::popcount(s) != 3) continue;
        std::vector<int> parent = {0, 1, 2, 3};
        auto root = [&](int v) {
            while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
            return v;
        };
        bool acyclic = true;
        for (int e = 0; e < 6; ++e) {
            if (!((s >> e) & 1u)) continue;
            int a = root(endpoints[e][0]), b = root(endpoints[e][1]);
            if (a == b)
                acyclic = false;
            else
                parent[static_cast<std::size_t>(a)] = b;
        }
        if (acyclic) out.push_back(s);
    }
    return out;
}

}  // namespace oracle
