#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matkit/connectivity.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// Detectors for the particular 3-separators of §2 and the Vamos-like
// 3-separator of §5.  Each definition lists the circuits and cocircuits of
// M contained in P; the lists are exhaustive, so a detector compares the
// full circuit/cocircuit families inside P against the definitional
// pattern over all labellings and reports the first labelling found.

enum class SeparatorKind {
    spike_like,
    skew_whiff,
    elongated_quad,
    double_quad,
    twisted_cube_like,
    vamos_like,
};

inline const char* to_string(SeparatorKind k) {
    switch (k) {
        case SeparatorKind::spike_like: return "spike-like";
        case SeparatorKind::skew_whiff: return "skew-whiff";
        case SeparatorKind::elongated_quad: return "elongated-quad";
        case SeparatorKind::double_quad: return "double-quad";
        case SeparatorKind::twisted_cube_like: return "twisted-cube-like";
        case SeparatorKind::vamos_like: return "vamos-like";
    }
    return "?";
}

struct SeparatorReport {
    SeparatorKind kind;
    ElemSet p;
    std::vector<std::pair<std::string, ElemSet>> roles;
    bool dual_side = false;  // twisted cube-like detected in M* rather than M
};

/// Either a report or the reason there is none.
struct DetectResult {
    std::optional<SeparatorReport> report;
    std::string reason;

    explicit operator bool() const { return report.has_value(); }
    static DetectResult absent(std::string why) { return DetectResult{std::nullopt, std::move(why)}; }
    static DetectResult found(SeparatorReport r) { return DetectResult{std::move(r), ""}; }
};

namespace detail {

inline std::vector<ElemSet> circuits_inside(const Matroid& m, ElemSet p) {
    std::vector<ElemSet> out;
    for_each_subset(p, [&](ElemSet s) {
        if (m.is_circuit(s)) out.push_back(s);
    });
    return out;
}

inline std::vector<ElemSet> cocircuits_inside(const Matroid& m, ElemSet p) {
    std::vector<ElemSet> out;
    for_each_subset(p, [&](ElemSet s) {
        if (m.is_cocircuit(s)) out.push_back(s);
    });
    return out;
}

inline bool same_family(std::vector<ElemSet> a, std::vector<ElemSet> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

inline std::optional<std::string> basic_absence(const Matroid& m, ElemSet p, int want_size) {
    if (!p.subset_of(m.ground())) return "P leaves the ground set";
    if (want_size > 0 && p.count() != want_size)
        return "|P| = " + std::to_string(p.count()) + ", needs " + std::to_string(want_size);
    if (lambda(m, p) != 2)
        return "lambda(P) = " + std::to_string(lambda(m, p)) + ", needs exactly 2";
    return std::nullopt;
}

/// Tries every labelling of the six elements of P (720 permutations, in
/// lexicographic order) and hands it to `check`; the first accepted
/// labelling wins.
template <typename Check>
inline std::optional<std::vector<int>> first_labelling6(ElemSet p, Check&& check) {
    std::vector<int> perm = p.elements();
    std::sort(perm.begin(), perm.end());
    do {
        if (check(perm)) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace detail

/// Def. spike-like: a partition of P into 2-element legs, every two of
/// which union to a quad.  |P| = 2t, t >= 3; searched over all perfect
/// matchings of P (feasible for |P| <= 12).
inline DetectResult detect_spike_like(const Matroid& m, ElemSet p) {
    if (auto why = detail::basic_absence(m, p, 0)) return DetectResult::absent(*why);
    if (p.count() % 2 != 0 || p.count() < 6)
        return DetectResult::absent("|P| must be even and at least 6");
    // pair_ok[a][b]: {a,b} u {c,d} forms a quad is checked pairwise below.
    auto is_quad = [&](ElemSet s) { return m.is_circuit(s) && m.is_cocircuit(s); };
    std::vector<ElemSet> legs;
    std::vector<ElemSet> best;
    auto dfs = [&](auto&& self, ElemSet rest) -> bool {
        if (rest.empty()) {
            best = legs;
            return true;
        }
        const int e = rest.lowest();
        bool done = false;
        for_each_element(rest.without(e), [&](int f) {
            if (done) return;
            const ElemSet leg = ElemSet{e, f};
            bool compatible = true;
            for (ElemSet other : legs)
                if (!is_quad(leg | other)) compatible = false;
            if (!compatible) return;
            legs.push_back(leg);
            if (self(self, rest - leg)) done = true;
            legs.pop_back();
        });
        return done;
    };
    if (!dfs(dfs, p)) return DetectResult::absent("no leg partition with all pair unions quads");
    SeparatorReport report{SeparatorKind::spike_like, p, {}, false};
    for (std::size_t i = 0; i < best.size(); ++i)
        report.roles.emplace_back("L" + std::to_string(i + 1), best[i]);
    return DetectResult::found(std::move(report));
}

/// Def. skew-whiff: labelling {s1,s2,t1,t2,u1,u2} with circuits inside P
/// exactly {s1,s2,t2,u1}, {s1,t1,t2,u2}, {s2,t1,u1,u2} and cocircuits
/// exactly {s1,s2,t1,t2}, {s1,s2,u1,u2}, {t1,t2,u1,u2}.
inline DetectResult detect_skew_whiff(const Matroid& m, ElemSet p) {
    if (auto why = detail::basic_absence(m, p, 6)) return DetectResult::absent(*why);
    const auto circ = detail::circuits_inside(m, p);
    const auto cocirc = detail::cocircuits_inside(m, p);
    if (circ.size() != 3 || cocirc.size() != 3)
        return DetectResult::absent("needs exactly 3 circuits and 3 cocircuits inside P");
    auto found = detail::first_labelling6(p, [&](const std::vector<int>& v) {
        const int s1 = v[0], s2 = v[1], t1 = v[2], t2 = v[3], u1 = v[4], u2 = v[5];
        return detail::same_family(circ, {ElemSet{s1, s2, t2, u1}, ElemSet{s1, t1, t2, u2},
                                          ElemSet{s2, t1, u1, u2}}) &&
               detail::same_family(cocirc, {ElemSet{s1, s2, t1, t2}, ElemSet{s1, s2, u1, u2},
                                            ElemSet{t1, t2, u1, u2}});
    });
    if (!found) return DetectResult::absent("no labelling realises the skew-whiff lists");
    const auto& v = *found;
    SeparatorReport report{SeparatorKind::skew_whiff, p, {}, false};
    const char* names[] = {"s1", "s2", "t1", "t2", "u1", "u2"};
    for (int i = 0; i < 6; ++i)
        report.roles.emplace_back(names[i], ElemSet::single(v[static_cast<std::size_t>(i)]));
    return DetectResult::found(std::move(report));
}

/// Def. elongated-quad: P = Q u {p1,p2} with Q a quad; circuits inside P
/// exactly {p1,p2,q1,q2}, {p1,p2,q3,q4} and Q; cocircuits inside P exactly
/// {p1,p2,q1,q3}, {p1,p2,q2,q4} and Q.
inline DetectResult detect_elongated_quad(const Matroid& m, ElemSet p) {
    if (auto why = detail::basic_absence(m, p, 6)) return DetectResult::absent(*why);
    const auto circ = detail::circuits_inside(m, p);
    const auto cocirc = detail::cocircuits_inside(m, p);
    if (circ.size() != 3 || cocirc.size() != 3)
        return DetectResult::absent("needs exactly 3 circuits and 3 cocircuits inside P");
    auto found = detail::first_labelling6(p, [&](const std::vector<int>& v) {
        const int p1 = v[0], p2 = v[1], q1 = v[2], q2 = v[3], q3 = v[4], q4 = v[5];
        const ElemSet quad{q1, q2, q3, q4};
        return detail::same_family(circ, {quad, ElemSet{p1, p2, q1, q2}, ElemSet{p1, p2, q3, q4}}) &&
               detail::same_family(cocirc,
                                   {quad, ElemSet{p1, p2, q1, q3}, ElemSet{p1, p2, q2, q4}});
    });
    if (!found) return DetectResult::absent("no labelling realises the elongated-quad lists");
    const auto& v = *found;
    SeparatorReport report{SeparatorKind::elongated_quad, p, {}, false};
    report.roles.emplace_back("Q", ElemSet{v[2], v[3], v[4], v[5]});
    const char* names[] = {"p1", "p2", "q1", "q2", "q3", "q4"};
    for (int i = 0; i < 6; ++i)
        report.roles.emplace_back(names[i], ElemSet::single(v[static_cast<std::size_t>(i)]));
    return DetectResult::found(std::move(report));
}

/// Def. double-quad: P = Q1 u Q2, disjoint quads, with the four crossing
/// circuits {p1,p2|p3,p4} x {q1,q2|q3,q4} and the four crossing cocircuits
/// {p1,p3|p2,p4} x {q1,q3|q2,q4} exhaustive inside P.
inline DetectResult detect_double_quad(const Matroid& m, ElemSet p) {
    if (auto why = detail::basic_absence(m, p, 8)) return DetectResult::absent(*why);
    const auto circ = detail::circuits_inside(m, p);
    const auto cocirc = detail::cocircuits_inside(m, p);
    if (circ.size() != 6 || cocirc.size() != 6)
        return DetectResult::absent("needs exactly 6 circuits and 6 cocircuits inside P");
    std::vector<int> perm = p.elements();
    std::sort(perm.begin(), perm.end());
    do {
        const int p1 = perm[0], p2 = perm[1], p3 = perm[2], p4 = perm[3];
        const int q1 = perm[4], q2 = perm[5], q3 = perm[6], q4 = perm[7];
        const ElemSet quad1{p1, p2, p3, p4};
        const ElemSet quad2{q1, q2, q3, q4};
        const bool ok =
            detail::same_family(circ, {quad1, quad2, ElemSet{p1, p2, q1, q2},
                                       ElemSet{p1, p2, q3, q4}, ElemSet{p3, p4, q1, q2},
                                       ElemSet{p3, p4, q3, q4}}) &&
            detail::same_family(cocirc, {quad1, quad2, ElemSet{p1, p3, q1, q3},
                                         ElemSet{p1, p3, q2, q4}, ElemSet{p2, p4, q1, q3},
                                         ElemSet{p2, p4, q2, q4}});
        if (ok) {
            SeparatorReport report{SeparatorKind::double_quad, p, {}, false};
            report.roles.emplace_back("Q1", quad1);
            report.roles.emplace_back("Q2", quad2);
            const char* names[] = {"p1", "p2", "p3", "p4", "q1", "q2", "q3", "q4"};
            for (int i = 0; i < 8; ++i)
                report.roles.emplace_back(names[i], ElemSet::single(perm[static_cast<std::size_t>(i)]));
            return DetectResult::found(std::move(report));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return DetectResult::absent("no labelling realises the double-quad lists");
}

namespace detail {

inline DetectResult twisted_cube_one_side(const Matroid& m, ElemSet p, bool dual_side) {
    if (auto why = basic_absence(m, p, 6)) return DetectResult::absent(*why);
    const auto circ = circuits_inside(m, p);
    const auto cocirc = cocircuits_inside(m, p);
    if (circ.size() != 3 || cocirc.size() != 4)
        return DetectResult::absent("needs exactly 3 circuits and 4 cocircuits inside P");
    auto found = first_labelling6(p, [&](const std::vector<int>& v) {
        const int p1 = v[0], p2 = v[1], q1 = v[2], q2 = v[3], s1 = v[4], s2 = v[5];
        return same_family(circ, {ElemSet{p1, p2, s1, s2}, ElemSet{q1, q2, s1, s2},
                                  ElemSet{p1, p2, q1, q2}}) &&
               same_family(cocirc, {ElemSet{p1, q1, s1, s2}, ElemSet{p2, q2, s1, s2},
                                    ElemSet{p1, p2, q1, q2, s1}, ElemSet{p1, p2, q1, q2, s2}});
    });
    if (!found) return DetectResult::absent("no labelling realises the twisted cube-like lists");
    const auto& v = *found;
    SeparatorReport report{SeparatorKind::twisted_cube_like, p, {}, dual_side};
    const char* names[] = {"p1", "p2", "q1", "q2", "s1", "s2"};
    for (int i = 0; i < 6; ++i)
        report.roles.emplace_back(names[i], ElemSet::single(v[static_cast<std::size_t>(i)]));
    return DetectResult::found(std::move(report));
}

}  // namespace detail

/// Twisted cube-like 3-separator.  Unlike the other §2 separators this one
/// is not closed under duality, so the check runs in M and, failing that,
/// in M* with dual_side set.
inline DetectResult detect_twisted_cube(const Matroid& m, ElemSet p, bool try_dual = true) {
    DetectResult primal = detail::twisted_cube_one_side(m, p, false);
    if (primal || !try_dual) return primal;
    DetectResult in_dual = detail::twisted_cube_one_side(dual(m), p, true);
    if (in_dual) return in_dual;
    return DetectResult::absent("in M: " + primal.reason + "; in M*: " + in_dual.reason);
}

/// §5 Vamos-like: 6-element, rank-4, corank-4, exactly 3-separating, with
/// {p1,p2,s1,s2} and {q1,q2,s1,s2} quads, circuit {p1,p2,q1,q2} and the two
/// 5-element cocircuits P - s2, P - s1; all lists exhaustive inside P.
inline DetectResult detect_vamos_like(const Matroid& m, ElemSet p) {
    if (auto why = detail::basic_absence(m, p, 6)) return DetectResult::absent(*why);
    if (m.rank_of(p) != 4)
        return DetectResult::absent("r(P) = " + std::to_string(m.rank_of(p)) + ", needs 4");
    if (m.corank_of(p) != 4)
        return DetectResult::absent("r*(P) = " + std::to_string(m.corank_of(p)) + ", needs 4");
    const auto circ = detail::circuits_inside(m, p);
    const auto cocirc = detail::cocircuits_inside(m, p);
    if (circ.size() != 3 || cocirc.size() != 4)
        return DetectResult::absent("needs exactly 3 circuits and 4 cocircuits inside P");
    auto found = detail::first_labelling6(p, [&](const std::vector<int>& v) {
        const int p1 = v[0], p2 = v[1], q1 = v[2], q2 = v[3], s1 = v[4], s2 = v[5];
        return detail::same_family(circ, {ElemSet{p1, p2, s1, s2}, ElemSet{q1, q2, s1, s2},
                                          ElemSet{p1, p2, q1, q2}}) &&
               detail::same_family(cocirc, {ElemSet{p1, p2, s1, s2}, ElemSet{q1, q2, s1, s2},
                                            ElemSet{p1, p2, q1, q2, s1},
                                            ElemSet{p1, p2, q1, q2, s2}});
    });
    if (!found) return DetectResult::absent("no labelling realises the Vamos-like lists");
    const auto& v = *found;
    SeparatorReport report{SeparatorKind::vamos_like, p, {}, false};
    const char* names[] = {"p1", "p2", "q1", "q2", "s1", "s2"};
    for (int i = 0; i < 6; ++i)
        report.roles.emplace_back(names[i], ElemSet::single(v[static_cast<std::size_t>(i)]));
    return DetectResult::found(std::move(report));
}

/// Runs every detector over all exactly 3-separating sets of admissible
/// size (optionally restricted to supersets of `must_contain`); reports in
/// (P, kind) order.
inline std::vector<SeparatorReport> scan_all_separators(
    const Matroid& m, std::optional<ElemSet> must_contain = std::nullopt) {
    std::vector<SeparatorReport> out;
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const ElemSet p(mask);
        const int size = p.count();
        if (size < 6 || size % 2 != 0 || size > 12) continue;
        if (must_contain && !must_contain->subset_of(p)) continue;
        if (lambda(m, p) != 2) continue;
        if (size == 6) {
            if (auto r = detect_spike_like(m, p)) out.push_back(std::move(*r.report));
            if (auto r = detect_skew_whiff(m, p)) out.push_back(std::move(*r.report));
            if (auto r = detect_elongated_quad(m, p)) out.push_back(std::move(*r.report));
            if (auto r = detect_twisted_cube(m, p)) out.push_back(std::move(*r.report));
            if (auto r = detect_vamos_like(m, p)) out.push_back(std::move(*r.report));
        } else if (size == 8) {
            if (auto r = detect_spike_like(m, p)) out.push_back(std::move(*r.report));
            if (auto r = detect_double_quad(m, p)) out.push_back(std::move(*r.report));
        } else {
            if (auto r = detect_spike_like(m, p)) out.push_back(std::move(*r.report));
        }
    }
    std::sort(out.begin(), out.end(), [](const SeparatorReport& a, const SeparatorReport& b) {
        return std::tuple(a.p, static_cast<int>(a.kind), a.dual_side) <
               std::tuple(b.p, static_cast<int>(b.kind), b.dual_side);
    });
    return out;
}

}  // namespace matkit
