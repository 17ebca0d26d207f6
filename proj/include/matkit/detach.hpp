#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "matkit/connectivity.hpp"
#include "matkit/matroid.hpp"
#include "matkit/minors.hpp"
#include "matkit/separators.hpp"

namespace matkit {

/// A pair {x1,x2} such that deleting both or contracting both leaves a
/// 3-connected matroid with an N-minor.  The witness sets are in M's
/// labels; the witness iso maps the final re-indexed minor onto E(N).
struct DetachablePair {
    enum class Mode { delete_both, contract_both };
    ElemSet pair;
    Mode mode;
    MinorWitness witness;
    bool conn_certificate;  // the 2-element removal is 3-connected
};

inline const char* to_string(DetachablePair::Mode mode) {
    return mode == DetachablePair::Mode::delete_both ? "delete" : "contract";
}

/// All N-detachable pairs of M, pairs in ascending order, deletion mode
/// before contraction mode.  An empty list means "no N-detachable pair".
inline std::vector<DetachablePair> find_detachable_pairs(const Matroid& m, const Matroid& n) {
    if (!is_n_connected(m, 3)) throw PreconditionError("find_detachable_pairs: M is not 3-connected");
    if (!is_n_connected(n, 3)) throw PreconditionError("find_detachable_pairs: N is not 3-connected");
    if (n.size() < 4) throw PreconditionError("find_detachable_pairs: |E(N)| must be at least 4");
    std::vector<DetachablePair> out;
    for (int x1 = 0; x1 < m.size(); ++x1) {
        for (int x2 = x1 + 1; x2 < m.size(); ++x2) {
            const ElemSet pair{x1, x2};
            for (const auto mode :
                 {DetachablePair::Mode::delete_both, DetachablePair::Mode::contract_both}) {
                const bool deleting = mode == DetachablePair::Mode::delete_both;
                MinorResult reduced = deleting ? delete_elements(m, pair)
                                               : contract_elements(m, pair);
                if (!is_n_connected(reduced.matroid, 3)) continue;
                auto witness = has_minor(reduced.matroid, n);
                if (!witness) continue;
                MinorWitness lifted{reduced.map.apply(witness->delete_set),
                                    reduced.map.apply(witness->contract_set), witness->iso};
                out.push_back(DetachablePair{pair, mode, std::move(lifted), true});
            }
        }
    }
    return out;
}

struct HypothesisCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/// Outcome of checking the Theorem usefulonep2 setup for one (M, N, d, d').
/// feasible_y lists every side Y (in M's labels) of a cyclic 3-separation
/// (Y, {d'}, Z) of M\d with |Y| >= 4 such that M\d\d' keeps an N-minor
/// meeting Y in at most one surviving element.
struct HypothesisReport {
    bool ok = false;
    std::vector<HypothesisCheck> checks;
    std::vector<ElemSet> feasible_y;
};

namespace detail {

inline void push_check(HypothesisReport& r, std::string name, bool pass,
                       std::string detail = "") {
    r.checks.push_back(HypothesisCheck{std::move(name), pass, std::move(detail)});
}

/// Shared d'-independent hypotheses of the main theorems.
inline bool common_hypotheses(HypothesisReport& r, const Matroid& m, const Matroid& n, int d) {
    const bool m3 = is_n_connected(m, 3);
    push_check(r, "m_3connected", m3);
    const bool n3 = is_n_connected(n, 3);
    push_check(r, "n_3connected", n3);
    const bool nsize = n.size() >= 4;
    push_check(r, "n_size_at_least_4", nsize, "|E(N)| = " + std::to_string(n.size()));
    const bool grounded = m3 && n3 ? all_triangles_triads_grounded(m, n) : false;
    push_check(r, "triangles_triads_grounded", grounded);
    bool md3 = false;
    if (d >= 0 && d < m.size()) {
        md3 = is_n_connected(delete_elements(m, ElemSet::single(d)).matroid, 3);
    }
    push_check(r, "mdelete_d_3connected", md3);
    return m3 && n3 && nsize && grounded && md3;
}

/// Feasible Y sides for a fixed coguts element d' (all labels are M's).
inline std::vector<ElemSet> feasible_y_sides(const Matroid& m, const Matroid& n, int d, int dp) {
    std::vector<ElemSet> out;
    MinorResult md = delete_elements(m, ElemSet::single(d));
    const ElemSet dp_minor = md.map.preimage(ElemSet::single(dp));
    if (dp_minor.empty()) return out;
    const int z = dp_minor.lowest();
    MinorResult mdd = minor(m, ElemSet{d, dp}, {});
    for (const GutsSeparation& sep : cyclic_3_separations(md.matroid)) {
        if (sep.z != z) continue;
        for (const ElemSet side : {sep.x, sep.y}) {
            if (side.count() < 4) continue;
            const ElemSet y_old = md.map.apply(side);
            const ElemSet y_reduced = mdd.map.preimage(y_old);
            const bool minor_ok =
                has_minor_if(mdd.matroid, n, [&](ElemSet del, ElemSet con) {
                    return (y_reduced - del - con).count() <= 1;
                }).has_value();
            if (minor_ok) out.push_back(y_old);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/// Evaluates every hypothesis of Theorem usefulonep2 for the pair (d, d');
/// failures are data, not exceptions.
inline HypothesisReport check_hypotheses(const Matroid& m, const Matroid& n, int d, int dp) {
    if (d < 0 || d >= m.size() || dp < 0 || dp >= m.size())
        throw InvalidElementError("d and d' must be elements of E(M)");
    if (d == dp) throw PreconditionError("d and d' must be distinct");
    HypothesisReport report;
    const bool common = detail::common_hypotheses(report, m, n, d);
    if (common) {
        report.feasible_y = detail::feasible_y_sides(m, n, d, dp);
        detail::push_check(report, "cyclic_3separation_with_minor",
                           !report.feasible_y.empty(),
                           std::to_string(report.feasible_y.size()) + " feasible Y");
    } else {
        detail::push_check(report, "cyclic_3separation_with_minor", false,
                           "not evaluated; earlier hypothesis failed");
    }
    report.ok = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const HypothesisCheck& c) { return c.pass; });
    return report;
}

/// Per-element certificate behind a StructuredX.
struct StructuredXCertificate {
    int element;
    bool co_delete_3conn;   // co(M\d\x) is 3-connected
    bool contract_3conn;    // M\d/x is 3-connected
    bool doubly_labelled;   // x is N-deletable and N-contractible in M\d
};

/// A 3-separating X <= Y, |X| >= 4, all of whose elements satisfy the
/// Theorem basilica conditions (a)-(c).  Labels are M's.
struct StructuredX {
    ElemSet x;
    std::vector<StructuredXCertificate> certificates;
    bool minimal;
    bool contains_triad;  // X contains a triad of M\d
};

/// All structured X inside Y for (M, N, d); minimal flags mark the
/// inclusion-minimal members of the returned list.
inline std::vector<StructuredX> find_structured_X(const Matroid& m, const Matroid& n, int d,
                                                  ElemSet y) {
    if (d < 0 || d >= m.size()) throw InvalidElementError("d must be an element of E(M)");
    if (y.contains(d) || !y.subset_of(m.ground()))
        throw PreconditionError("Y must be a subset of E(M) - d");
    MinorResult md = delete_elements(m, ElemSet::single(d));
    const Matroid& dm = md.matroid;
    const NLabelTable labels = n_labels(dm, n);
    std::vector<StructuredXCertificate> certs(static_cast<std::size_t>(dm.size()));
    ElemSet qualifying_minor;
    for (int e = 0; e < dm.size(); ++e) {
        if (!y.contains(md.map(e))) continue;
        StructuredXCertificate c{md.map(e), false, false, false};
        c.co_delete_3conn =
            is_n_connected(cosimplify(delete_elements(dm, ElemSet::single(e)).matroid).matroid, 3);
        c.contract_3conn = is_n_connected(contract_elements(dm, ElemSet::single(e)).matroid, 3);
        c.doubly_labelled = labels.doubly(e);
        certs[static_cast<std::size_t>(e)] = c;
        if (c.co_delete_3conn && c.contract_3conn && c.doubly_labelled)
            qualifying_minor = qualifying_minor.with(e);
    }
    const SetFamily triads = find_triads(dm);
    std::vector<StructuredX> out;
    for_each_subset(qualifying_minor, [&](ElemSet x_minor) {
        if (x_minor.count() < 4) return;
        if (lambda(dm, x_minor) > 2) return;
        StructuredX sx{md.map.apply(x_minor), {}, false, false};
        for_each_element(x_minor,
                         [&](int e) { sx.certificates.push_back(certs[static_cast<std::size_t>(e)]); });
        for (ElemSet t : triads.members)
            if (t.subset_of(x_minor)) sx.contains_triad = true;
        out.push_back(std::move(sx));
    });
    std::sort(out.begin(), out.end(),
              [](const StructuredX& a, const StructuredX& b) { return a.x < b.x; });
    for (StructuredX& sx : out) {
        sx.minimal = std::none_of(out.begin(), out.end(), [&](const StructuredX& other) {
            return other.x != sx.x && other.x.subset_of(sx.x);
        });
    }
    return out;
}

/// Outcome of the Theorem usefulonep2 check for one (M, N, d).
struct DichotomyVerdict {
    enum class Branch { pair_found, separator_found, hypothesis_failed, counterexample };
    Branch branch;
    std::optional<DetachablePair> pair;
    std::optional<SeparatorReport> separator;
    std::optional<int> c;  // the coclosure element of the separator branch
    HypothesisReport hypotheses;
    std::string diagnostics;  // filled only for counterexample
};

inline const char* to_string(DichotomyVerdict::Branch b) {
    switch (b) {
        case DichotomyVerdict::Branch::pair_found: return "pair-found";
        case DichotomyVerdict::Branch::separator_found: return "separator-found";
        case DichotomyVerdict::Branch::hypothesis_failed: return "hypothesis-failed";
        case DichotomyVerdict::Branch::counterexample: return "counterexample";
    }
    return "?";
}

namespace detail {

/// Does the report match the Theorem usefulonep2 separator shape for some
/// feasible Y: an allowed kind on P = X u {c,d} (or X u Q for double-quad)
/// with c in cl*_{M\d}(X) - X and X <= Y?
inline std::optional<int> matches_dichotomy_shape(const Matroid& m, int d,
                                                  const SeparatorReport& report,
                                                  const std::vector<ElemSet>& feasible_y) {
    if (report.kind == SeparatorKind::vamos_like) return std::nullopt;
    if (!report.p.contains(d)) return std::nullopt;
    MinorResult md = delete_elements(m, ElemSet::single(d));
    auto check_xc = [&](ElemSet x, int c) -> bool {
        if (x.contains(c) || x.contains(d)) return false;
        bool inside_some_y = false;
        for (ElemSet y : feasible_y)
            if (x.subset_of(y)) inside_some_y = true;
        if (!inside_some_y) return false;
        const ElemSet x_minor = md.map.preimage(x);
        const ElemSet costar = md.matroid.coclosure(x_minor);
        const ElemSet c_minor = md.map.preimage(ElemSet::single(c));
        return !c_minor.empty() && costar.contains(c_minor.lowest()) &&
               !x_minor.contains(c_minor.lowest());
    };
    if (report.kind == SeparatorKind::double_quad) {
        for (const auto& [role, members] : report.roles) {
            if (role != "Q1" && role != "Q2") continue;
            const ElemSet q = members;
            if (!q.contains(d)) continue;
            const ElemSet x = report.p - q;
            std::vector<int> cs = (q - ElemSet::single(d)).elements();
            for (int c : cs)
                if (check_xc(x, c)) return c;
        }
        return std::nullopt;
    }
    for (int c : (report.p - ElemSet::single(d)).elements()) {
        const ElemSet x = report.p - ElemSet{c, d};
        if (check_xc(x, c)) return c;
    }
    return std::nullopt;
}

inline std::string counterexample_dump(const Matroid& m, const Matroid& n, int d,
                                       const std::vector<ElemSet>& feasible_y) {
    std::ostringstream out;
    out << "counterexample candidate: M=" << m.name() << " n=" << m.size()
        << " rank=" << m.rank() << " N=" << n.name() << " d=" << d << "\n";
    out << "feasible Y:";
    for (ElemSet y : feasible_y) out << " " << y.to_string();
    out << "\nlambda table (sides containing element 0):\n";
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; mask += 2)
        out << "  " << ElemSet(mask).to_string() << " -> " << lambda(m, ElemSet(mask)) << "\n";
    out << "circuits:";
    for (ElemSet c : circuits(m).members) out << " " << c.to_string();
    out << "\ncocircuits:";
    for (ElemSet c : cocircuits(m).members) out << " " << c.to_string();
    const NLabelTable labels = n_labels(m, n);
    out << "\nN-labels:";
    for (int e = 0; e < m.size(); ++e)
        out << " " << e << (labels.deletable[static_cast<std::size_t>(e)] ? ":d" : ":-")
            << (labels.contractible[static_cast<std::size_t>(e)] ? "c" : "-");
    out << "\n";
    return out.str();
}

}  // namespace detail

/// Theorem usefulonep2, mechanically: hypotheses are evaluated over every
/// admissible d'; if some pass, M must have an N-detachable pair or a
/// listed particular 3-separator around d.  A counterexample verdict would
/// falsify the theorem and is dumped in full.
inline DichotomyVerdict verify_dichotomy(const Matroid& m, const Matroid& n, int d) {
    if (d < 0 || d >= m.size()) throw InvalidElementError("d must be an element of E(M)");
    DichotomyVerdict verdict{DichotomyVerdict::Branch::hypothesis_failed, std::nullopt,
                             std::nullopt,  std::nullopt,
                             {},            ""};
    const bool common = detail::common_hypotheses(verdict.hypotheses, m, n, d);
    std::vector<ElemSet> feasible_y;
    if (common) {
        for (int dp = 0; dp < m.size(); ++dp) {
            if (dp == d) continue;
            for (ElemSet y : detail::feasible_y_sides(m, n, d, dp)) feasible_y.push_back(y);
        }
        std::sort(feasible_y.begin(), feasible_y.end());
        feasible_y.erase(std::unique(feasible_y.begin(), feasible_y.end()), feasible_y.end());
        detail::push_check(verdict.hypotheses, "cyclic_3separation_with_minor",
                           !feasible_y.empty(),
                           std::to_string(feasible_y.size()) + " feasible Y over all d'");
    } else {
        detail::push_check(verdict.hypotheses, "cyclic_3separation_with_minor", false,
                           "not evaluated; earlier hypothesis failed");
    }
    verdict.hypotheses.ok = std::all_of(verdict.hypotheses.checks.begin(),
                                        verdict.hypotheses.checks.end(),
                                        [](const HypothesisCheck& c) { return c.pass; });
    verdict.hypotheses.feasible_y = feasible_y;
    if (!verdict.hypotheses.ok) {
        verdict.branch = DichotomyVerdict::Branch::hypothesis_failed;
        return verdict;
    }
    auto pairs = find_detachable_pairs(m, n);
    if (!pairs.empty()) {
        verdict.branch = DichotomyVerdict::Branch::pair_found;
        verdict.pair = pairs.front();
        return verdict;
    }
    for (const SeparatorReport& report : scan_all_separators(m, ElemSet::single(d))) {
        if (auto c = detail::matches_dichotomy_shape(m, d, report, feasible_y)) {
            verdict.branch = DichotomyVerdict::Branch::separator_found;
            verdict.separator = report;
            verdict.c = *c;
            return verdict;
        }
    }
    verdict.branch = DichotomyVerdict::Branch::counterexample;
    verdict.diagnostics = detail::counterexample_dump(m, n, d, feasible_y);
    return verdict;
}

/// Outcome of checking Theorem basilica / mosque on one instance.
struct TheoremReport {
    bool preconditions_ok = false;
    std::vector<HypothesisCheck> preconditions;
    bool conclusion_ok = false;
    std::string detail;
};

namespace detail {

/// Preconditions shared by the triad and non-triad theorems: the Theorem
/// basilica setting for (M, N, d) plus X being a structured 3-separating
/// subset of a feasible Y.
inline bool structured_preconditions(TheoremReport& report, const Matroid& m, const Matroid& n,
                                     int d, ElemSet x) {
    HypothesisReport hy;
    const bool common = common_hypotheses(hy, m, n, d);
    report.preconditions = hy.checks;
    bool x_in_feasible_y = false;
    if (common) {
        for (int dp = 0; dp < m.size() && !x_in_feasible_y; ++dp) {
            if (dp == d) continue;
            for (ElemSet y : feasible_y_sides(m, n, d, dp))
                if (x.subset_of(y)) x_in_feasible_y = true;
        }
    }
    report.preconditions.push_back(
        HypothesisCheck{"x_inside_feasible_y", x_in_feasible_y, ""});
    bool x_structured = false;
    if (common && x_in_feasible_y && x.count() >= 4 && !x.contains(d)) {
        MinorResult md = delete_elements(m, ElemSet::single(d));
        const ElemSet x_minor = md.map.preimage(x);
        if (lambda(md.matroid, x_minor) <= 2) {
            const NLabelTable labels = n_labels(md.matroid, n);
            x_structured = true;
            for_each_element(x_minor, [&](int e) {
                if (!is_n_connected(
                        cosimplify(delete_elements(md.matroid, ElemSet::single(e)).matroid).matroid,
                        3))
                    x_structured = false;
                else if (!is_n_connected(contract_elements(md.matroid, ElemSet::single(e)).matroid,
                                         3))
                    x_structured = false;
                else if (!labels.doubly(e))
                    x_structured = false;
            });
        }
    }
    report.preconditions.push_back(HypothesisCheck{
        "x_structured", x_structured, "|X| >= 4, 3-separating in M\\d, (a)-(c) for every x"});
    return common && x_in_feasible_y && x_structured;
}

inline bool x_contains_triad(const Matroid& m, int d, ElemSet x) {
    MinorResult md = delete_elements(m, ElemSet::single(d));
    const ElemSet x_minor = md.map.preimage(x);
    for (ElemSet t : find_triads(md.matroid).members)
        if (t.subset_of(x_minor)) return true;
    return false;
}

/// Minimality of X among structured sets: no proper subset of X of size at
/// least 4 is 3-separating in M\d (element certificates are monotone).
inline bool x_is_minimal(const Matroid& m, int d, ElemSet x) {
    MinorResult md = delete_elements(m, ElemSet::single(d));
    const ElemSet x_minor = md.map.preimage(x);
    bool minimal = true;
    for_each_subset(x_minor, [&](ElemSet sub) {
        if (sub == x_minor || sub.count() < 4) return;
        if (lambda(md.matroid, sub) <= 2) minimal = false;
    });
    return minimal;
}

}  // namespace detail

/// Theorem basilica: if a minimal structured X contains a triad of M\d,
/// then M has an N-detachable pair.
inline TheoremReport verify_triad_theorem(const Matroid& m, const Matroid& n, int d, ElemSet x) {
    TheoremReport report;
    bool ok = detail::structured_preconditions(report, m, n, d, x);
    const bool has_triad = ok ? detail::x_contains_triad(m, d, x) : false;
    report.preconditions.push_back(HypothesisCheck{"x_contains_triad", has_triad, ""});
    const bool minimal = ok ? detail::x_is_minimal(m, d, x) : false;
    report.preconditions.push_back(HypothesisCheck{"x_minimal", minimal, ""});
    report.preconditions_ok = ok && has_triad && minimal;
    if (!report.preconditions_ok) {
        report.detail = "preconditions not met";
        return report;
    }
    auto pairs = find_detachable_pairs(m, n);
    report.conclusion_ok = !pairs.empty();
    report.detail = report.conclusion_ok
                        ? "detachable pair " + pairs.front().pair.to_string() + " (" +
                              to_string(pairs.front().mode) + ")"
                        : "no detachable pair found; theorem violated";
    return report;
}

/// Theorem mosque: if a structured X contains no triad of M\d, then M has
/// an N-detachable pair or X u {c,d} extends to one of the four listed
/// separators for some c in cl*_{M\d}(X) - X.
inline TheoremReport verify_nontriad_theorem(const Matroid& m, const Matroid& n, int d,
                                             ElemSet x) {
    TheoremReport report;
    bool ok = detail::structured_preconditions(report, m, n, d, x);
    const bool no_triad = ok ? !detail::x_contains_triad(m, d, x) : false;
    report.preconditions.push_back(HypothesisCheck{"x_contains_no_triad", no_triad, ""});
    report.preconditions_ok = ok && no_triad;
    if (!report.preconditions_ok) {
        report.detail = "preconditions not met";
        return report;
    }
    auto pairs = find_detachable_pairs(m, n);
    if (!pairs.empty()) {
        report.conclusion_ok = true;
        report.detail = "detachable pair " + pairs.front().pair.to_string() + " (" +
                        to_string(pairs.front().mode) + ")";
        return report;
    }
    MinorResult md = delete_elements(m, ElemSet::single(d));
    const ElemSet x_minor = md.map.preimage(x);
    const ElemSet candidates = md.map.apply(md.matroid.coclosure(x_minor) - x_minor);
    bool found = false;
    std::string how;
    for_each_element(candidates, [&](int c) {
        if (found) return;
        const ElemSet p = x | ElemSet{c, d};
        for (auto* detect : {&detect_spike_like, &detect_elongated_quad}) {
            if (auto r = (*detect)(m, p)) {
                found = true;
                how = std::string(to_string(r.report->kind)) + " at " + p.to_string();
                return;
            }
        }
        if (auto r = detect_twisted_cube(m, p, /*try_dual=*/false)) {
            found = true;
            how = std::string("twisted-cube-like at ") + p.to_string();
            return;
        }
        if (x.count() == 4) {
            for_each_subset(m.ground() - x - ElemSet{c, d}, [&](ElemSet extra) {
                if (found || extra.count() != 2) return;
                const ElemSet q = extra | ElemSet{c, d};
                if (auto r = detect_double_quad(m, x | q)) {
                    for (const auto& [role, members] : r.report->roles) {
                        if ((role == "Q1" || role == "Q2") && members == q) {
                            found = true;
                            how = "double-quad at " + (x | q).to_string() +
                                  " with partition {X, " + q.to_string() + "}";
                        }
                    }
                }
            });
        }
    });
    report.conclusion_ok = found;
    report.detail = found ? how : "no pair and no listed separator; theorem violated";
    return report;
}

}  // namespace matkit
