#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "matkit/matroid.hpp"

namespace matkit {

/// Connectivity function: lambda(X) = r(X) + r(E-X) - r(M).
inline int lambda(const Matroid& m, ElemSet x) {
    return m.rank_of(x) + m.rank_of(m.ground() - x) - m.rank();
}

/// Local connectivity between X and Y (not necessarily disjoint):
/// r(X) + r(Y) - r(X u Y).  When (X,Y) partitions E this equals lambda(X).
inline int local_connectivity(const Matroid& m, ElemSet x, ElemSet y) {
    return m.rank_of(x) + m.rank_of(y) - m.rank_of(x | y);
}

/// lambda(X) <= k-1.  No size condition; see is_k_separation for the one
/// with it.  The paper uses both notions.
inline bool is_k_separating(const Matroid& m, ElemSet x, int k) {
    return lambda(m, x) <= k - 1;
}

inline bool is_exactly_k_separating(const Matroid& m, ElemSet x, int k) {
    return lambda(m, x) == k - 1;
}

/// k-separating with both sides of size at least k.
inline bool is_k_separation(const Matroid& m, ElemSet x, int k) {
    return is_k_separating(m, x, k) && x.count() >= k && (m.ground() - x).count() >= k;
}

struct Separation {
    ElemSet side;  // canonical side, contains element 0
    int lambda;
    bool exact;  // lambda == k-1 for the queried k
    int k;
};

/// All k-separations, one side per complementary pair (the side containing
/// element 0), sorted by (|X|, ascending mask).
inline std::vector<Separation> enumerate_k_separations(const Matroid& m, int k) {
    if (k < 1) throw PreconditionError("separation order must be >= 1");
    std::vector<Separation> out;
    if (m.size() == 0) return out;
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; mask += 2) {  // bit 0 always set
        ElemSet x(mask);
        if (x.count() < k || (m.ground() - x).count() < k) continue;
        const int l = lambda(m, x);
        if (l <= k - 1) out.push_back(Separation{x, l, l == k - 1, k});
    }
    std::sort(out.begin(), out.end(), [](const Separation& a, const Separation& b) {
        return std::pair(a.side.count(), a.side) < std::pair(b.side.count(), b.side);
    });
    return out;
}

/// n-connected: no k-separation for any k < n.
inline bool is_n_connected(const Matroid& m, int n) {
    if (n < 2) throw PreconditionError("connectivity order must be >= 2");
    if (m.size() == 0) return true;
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total - 1; mask += 2) {
        ElemSet x(mask);
        const int min_side = std::min(x.count(), m.size() - x.count());
        if (lambda(m, x) + 1 <= std::min(min_side, n - 1)) return false;
    }
    return true;
}

/// A partition (X, {z}, Y) with the §3 rank/closure conditions; z is the
/// guts element (vertical) or coguts element (cyclic).
struct GutsSeparation {
    enum class Kind { vertical, cyclic };
    Kind kind;
    ElemSet x;
    int z;
    ElemSet y;
};

namespace detail {

inline void require_3connected(const Matroid& m, const char* op) {
    for (int k = 1; k <= 2; ++k) {
        auto seps = enumerate_k_separations(m, k);
        if (!seps.empty())
            throw PreconditionError(std::string(op) + " needs a 3-connected matroid; " +
                                    seps.front().side.to_string() + " gives a " +
                                    std::to_string(k) + "-separation");
    }
}

inline std::vector<GutsSeparation> vertical_3_separations_impl(const Matroid& m,
                                                               GutsSeparation::Kind kind) {
    require_3connected(m, kind == GutsSeparation::Kind::vertical
                              ? "vertical_3_separations"
                              : "cyclic_3_separations");
    std::vector<GutsSeparation> out;
    for (int z = 0; z < m.size(); ++z) {
        const ElemSet rest = m.ground().without(z);
        if (rest.empty()) continue;
        const int anchor = rest.lowest();
        for_each_subset(rest, [&](ElemSet x) {
            if (!x.contains(anchor)) return;  // canonical: X holds min(E - z)
            const ElemSet y = rest - x;
            const ElemSet zs = ElemSet::single(z);
            if (x.count() < 3 || y.count() < 3) return;
            if (m.rank_of(x) < 3 || m.rank_of(y) < 3) return;
            if (lambda(m, x) > 2 || lambda(m, x | zs) > 2) return;
            if (!m.closure(x).contains(z) || !m.closure(y).contains(z)) return;
            out.push_back(GutsSeparation{kind, x, z, y});
        });
    }
    std::sort(out.begin(), out.end(), [](const GutsSeparation& a, const GutsSeparation& b) {
        return std::pair(a.z, a.x) < std::pair(b.z, b.x);
    });
    return out;
}

}  // namespace detail

/// All vertical 3-separations (X, {z}, Y): both (X u z, Y) and (X, Y u z)
/// are vertical 3-separations and z lies in cl(X) n cl(Y).
inline std::vector<GutsSeparation> vertical_3_separations(const Matroid& m) {
    return detail::vertical_3_separations_impl(m, GutsSeparation::Kind::vertical);
}

/// Cyclic 3-separations of M = vertical 3-separations of M*.
inline std::vector<GutsSeparation> cyclic_3_separations(const Matroid& m) {
    return detail::vertical_3_separations_impl(dual(m), GutsSeparation::Kind::cyclic);
}

/// fcl(X): alternate closure and coclosure until a fixpoint; the smallest
/// set containing X that is both closed and coclosed.
inline ElemSet full_closure(const Matroid& m, ElemSet x) {
    ElemSet cur = x;
    while (true) {
        ElemSet next = m.coclosure(m.closure(cur));
        if (next == cur) return cur;
        cur = next;
    }
}

inline SetFamily find_triangles(const Matroid& m) {
    SetFamily fam{SetFamily::Kind::circuits, {}};
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask)
        if (std::popcount(mask) == 3 && m.is_circuit(ElemSet(mask)))
            fam.members.push_back(ElemSet(mask));
    return fam;
}

inline SetFamily find_triads(const Matroid& m) {
    SetFamily fam{SetFamily::Kind::cocircuits, {}};
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask)
        if (std::popcount(mask) == 3 && m.is_cocircuit(ElemSet(mask)))
            fam.members.push_back(ElemSet(mask));
    return fam;
}

/// A triangle and a triad whose union has exactly four elements.
struct Fan4 {
    ElemSet triangle;
    ElemSet triad;
};

inline std::vector<Fan4> find_fans4(const Matroid& m) {
    std::vector<Fan4> out;
    const SetFamily triangles = find_triangles(m);
    const SetFamily triads = find_triads(m);
    for (ElemSet t : triangles.members)
        for (ElemSet s : triads.members)
            if ((t | s).count() == 4) out.push_back(Fan4{t, s});
    return out;
}

/// 4-element sets that are both a circuit and a cocircuit.
inline SetFamily find_quads(const Matroid& m) {
    SetFamily fam{SetFamily::Kind::circuits, {}};
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (std::popcount(mask) != 4) continue;
        ElemSet s(mask);
        if (m.is_circuit(s) && m.is_cocircuit(s)) fam.members.push_back(s);
    }
    return fam;
}

namespace detail {

inline bool is_segment_set(const Matroid& m, ElemSet s) {
    if (s.count() < 3 || m.rank_of(s) != 2) return false;
    bool simple_inside = true;
    for_each_element(s, [&](int e) {
        for_each_element(s, [&](int f) {
            if (e < f && m.rank_of(ElemSet{e, f}) != 2) simple_inside = false;
        });
    });
    return simple_inside;
}

}  // namespace detail

/// Maximal S with M|S isomorphic to U(2,|S|), |S| >= max(k,3).
inline std::vector<ElemSet> find_segments(const Matroid& m, int k) {
    const int least = std::max(k, 3);
    std::vector<ElemSet> out;
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        ElemSet s(mask);
        if (s.count() < least || !detail::is_segment_set(m, s)) continue;
        bool maximal = true;
        for_each_element(m.ground() - s, [&](int e) {
            if (detail::is_segment_set(m, s.with(e))) maximal = false;
        });
        if (maximal) out.push_back(s);
    }
    return out;
}

inline std::vector<ElemSet> find_cosegments(const Matroid& m, int k) {
    return find_segments(dual(m), k);
}

/// A partition of E into three 3-separating parts with pairwise local
/// connectivity 2 (§4; only 3-petal paddles are used).
struct Paddle {
    std::array<ElemSet, 3> parts;
};

inline std::vector<Paddle> find_paddles(const Matroid& m) {
    std::vector<Paddle> out;
    if (m.size() < 3) return out;
    const ElemSet ground = m.ground();
    for_each_subset(ground, [&](ElemSet p1) {
        if (p1.empty() || !p1.contains(0) || p1 == ground) return;
        if (lambda(m, p1) > 2) return;
        const ElemSet rest = ground - p1;
        const int anchor = rest.lowest();
        for_each_subset(rest, [&](ElemSet p2) {
            if (p2.empty() || !p2.contains(anchor)) return;
            const ElemSet p3 = rest - p2;
            if (p3.empty()) return;
            if (lambda(m, p2) > 2 || lambda(m, p3) > 2) return;
            if (local_connectivity(m, p1, p2) != 2 ||
                local_connectivity(m, p1, p3) != 2 ||
                local_connectivity(m, p2, p3) != 2)
                return;
            out.push_back(Paddle{{p1, p2, p3}});
        });
    });
    std::sort(out.begin(), out.end(), [](const Paddle& a, const Paddle& b) {
        return std::pair(a.parts[0], a.parts[1]) < std::pair(b.parts[0], b.parts[1]);
    });
    return out;
}

struct BixbyClassification {
    bool si_contract_3conn;  // si(M/e) is 3-connected
    bool co_delete_3conn;    // co(M\e) is 3-connected
};

/// Evaluates both halves of Bixby's Lemma for one element.  At least one
/// flag is true for a 3-connected input; a violation would contradict the
/// lemma and raises InternalInconsistencyError.
inline BixbyClassification bixby_classify(const Matroid& m, int e) {
    if (e < 0 || e >= m.size())
        throw InvalidElementError("element " + std::to_string(e) + " outside ground set");
    detail::require_3connected(m, "bixby_classify");
    const Matroid si_contract = simplify(contract_elements(m, ElemSet::single(e)).matroid).matroid;
    const Matroid co_delete = cosimplify(delete_elements(m, ElemSet::single(e)).matroid).matroid;
    BixbyClassification result{is_n_connected(si_contract, 3), is_n_connected(co_delete, 3)};
    if (!result.si_contract_3conn && !result.co_delete_3conn)
        throw InternalInconsistencyError("Bixby's Lemma fails for element " +
                                         std::to_string(e) + " of " + m.name());
    return result;
}

/// d blocks X (X exactly 3-separating in M\d) when X is not 3-separating
/// in M; d fully blocks X when X u d is not 3-separating in M either.
inline bool blocks(const Matroid& m, int d, ElemSet x) {
    MinorResult del = delete_elements(m, ElemSet::single(d));
    if (lambda(del.matroid, del.map.preimage(x)) != 2)
        throw PreconditionError("blocks: X must be exactly 3-separating in M\\d");
    return lambda(m, x) > 2;
}

inline bool fully_blocks(const Matroid& m, int d, ElemSet x) {
    return blocks(m, d, x) && lambda(m, x.with(d)) > 2;
}

}  // namespace matkit
