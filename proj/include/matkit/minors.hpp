#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matkit/connectivity.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

/// Certificate that M has an N-minor: delete delete_set and contract
/// contract_set (both in M's labels), re-index the survivors densely in
/// ascending label order, and iso maps that minor's elements onto E(N)
/// carrying bases to bases.
struct MinorWitness {
    ElemSet delete_set;
    ElemSet contract_set;
    ElementMap iso;

    ElemSet survivors(const Matroid& m) const {
        return m.ground() - delete_set - contract_set;
    }
};

namespace detail {

/// Bases of M \ del / con without building intermediate matroids:
/// B' is a basis iff |B'| = r(M) - r(con) and r(B' u con) = r(M).
inline Matroid minor_matroid(const Matroid& m, ElemSet del, ElemSet con,
                             const std::vector<int>& survivors) {
    const int n2 = static_cast<int>(survivors.size());
    const int r_con = m.rank_of(con);
    const int r2 = m.rank_of(m.ground() - del) - r_con;
    std::vector<ElemSet> bases2;
    const std::uint32_t total = std::uint32_t{1} << n2;
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        ElemSet c(mask);
        if (c.count() != r2) continue;
        if (m.rank_of(expand(c, survivors) | con) == r_con + r2) bases2.push_back(c);
    }
    return Matroid(n2, std::move(bases2), "", Matroid::Check::trust);
}

inline bool cheap_invariants_match(const Matroid& a, const Matroid& b) {
    if (a.rank() != b.rank() || a.bases().size() != b.bases().size()) return false;
    std::vector<int> da(static_cast<std::size_t>(a.size()), 0);
    std::vector<int> db(static_cast<std::size_t>(b.size()), 0);
    for (ElemSet x : a.bases()) for_each_element(x, [&](int e) { da[static_cast<std::size_t>(e)]++; });
    for (ElemSet x : b.bases()) for_each_element(x, [&](int e) { db[static_cast<std::size_t>(e)]++; });
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    return da == db;
}

}  // namespace detail

/// Exhaustive N-minor test.  Searches removal sets in ascending mask order
/// and contract subsets in ascending mask order within each; the result as
/// a yes/no answer is order-independent, and the first witness found is
/// returned.  An optional filter restricts which (delete, contract) splits
/// are admissible.
template <typename Filter>
inline std::optional<MinorWitness> has_minor_if(const Matroid& m, const Matroid& n,
                                                Filter&& admissible) {
    if (n.size() > m.size() || n.rank() > m.rank() ||
        n.size() - n.rank() > m.size() - m.rank())
        return std::nullopt;
    const int removals = m.size() - n.size();
    const int contracts = m.rank() - n.rank();
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t rmask = 0; rmask < total; ++rmask) {
        if (std::popcount(rmask) != removals) continue;
        const ElemSet removed(rmask);
        bool found = false;
        std::optional<MinorWitness> witness;
        for_each_subset(removed, [&](ElemSet con) {
            if (found || con.count() != contracts) return;
            const ElemSet del = removed - con;
            if (!m.is_independent(con)) return;
            if (m.rank_of(m.ground() - del) != m.rank()) return;
            if (!admissible(del, con)) return;
            const auto survivors = detail::survivor_list(m, removed);
            const Matroid minor_m = detail::minor_matroid(m, del, con, survivors);
            if (!detail::cheap_invariants_match(minor_m, n)) return;
            if (auto iso = find_isomorphism(minor_m, n)) {
                witness = MinorWitness{del, con, *iso};
                found = true;
            }
        });
        if (witness) return witness;
    }
    return std::nullopt;
}

inline std::optional<MinorWitness> has_minor(const Matroid& m, const Matroid& n) {
    return has_minor_if(m, n, [](ElemSet, ElemSet) { return true; });
}

/// Per-element N-labels of M (§3): e is N-deletable when M\e keeps an
/// N-minor, N-contractible when M/e does, doubly labelled when both.
struct NLabelTable {
    std::vector<bool> deletable;
    std::vector<bool> contractible;

    bool doubly(int e) const {
        return deletable[static_cast<std::size_t>(e)] && contractible[static_cast<std::size_t>(e)];
    }
};

inline NLabelTable n_labels(const Matroid& m, const Matroid& n) {
    NLabelTable t;
    t.deletable.resize(static_cast<std::size_t>(m.size()));
    t.contractible.resize(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) {
        const ElemSet s = ElemSet::single(e);
        t.deletable[static_cast<std::size_t>(e)] =
            has_minor(delete_elements(m, s).matroid, n).has_value();
        t.contractible[static_cast<std::size_t>(e)] =
            has_minor(contract_elements(m, s).matroid, n).has_value();
    }
    return t;
}

namespace detail {

inline bool grounded_impl(const Matroid& m, const Matroid& n, ElemSet t) {
    const auto elems = t.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const ElemSet a = ElemSet::single(elems[i]);
            const ElemSet b = ElemSet::single(elems[j]);
            if (has_minor(minor(m, {}, a | b).matroid, n)) return false;   // M/a/b
            if (has_minor(minor(m, a | b, {}).matroid, n)) return false;   // M\a\b
            if (has_minor(minor(m, b, a).matroid, n)) return false;        // M/a\b
            if (has_minor(minor(m, a, b).matroid, n)) return false;        // M\a/b
        }
    }
    return true;
}

}  // namespace detail

/// T is N-grounded when no mixed removal of two of its elements keeps an
/// N-minor (§1).
inline bool is_grounded_triangle(const Matroid& m, const Matroid& n, ElemSet t) {
    if (t.count() != 3 || !m.is_circuit(t))
        throw PreconditionError(t.to_string() + " is not a triangle");
    return detail::grounded_impl(m, n, t);
}

inline bool is_grounded_triad(const Matroid& m, const Matroid& n, ElemSet t) {
    if (t.count() != 3 || !m.is_cocircuit(t))
        throw PreconditionError(t.to_string() + " is not a triad");
    return detail::grounded_impl(m, n, t);
}

inline bool all_triangles_triads_grounded(const Matroid& m, const Matroid& n) {
    for (ElemSet t : find_triangles(m).members)
        if (!is_grounded_triangle(m, n, t)) return false;
    for (ElemSet t : find_triads(m).members)
        if (!is_grounded_triad(m, n, t)) return false;
    return true;
}

/// Outcome of checking Lemma doublylabelII on one instance.  Hypothesis
/// failures are data, not exceptions; a conclusion violation would be an
/// internal-inconsistency finding.
struct DoublyLabelReport {
    bool hypotheses_ok = false;
    std::vector<std::string> hypothesis_failures;
    bool conclusions_ok = false;
    std::vector<std::string> violations;
    ElemSet x_prime;  // X - cl*(Y), the N-deletable part of conclusion (i)
};

/// Verifies Lemma doublylabelII: for a cyclic 3-separation (X, {z}, Y) of a
/// 3-connected M where M\z has an N-minor meeting X in at most one element,
/// (i) each element of X' = X - cl*(Y) is N-deletable, and (ii) at most one
/// element of cl*(X) - z is not N-contractible, with the stated location.
inline DoublyLabelReport check_doubly_label_lemma(const Matroid& m, const Matroid& n,
                                                  const GutsSeparation& sep) {
    DoublyLabelReport report;
    auto fail = [&](const std::string& why) { report.hypothesis_failures.push_back(why); };

    if (!is_n_connected(m, 3)) fail("M is not 3-connected");
    if (!is_n_connected(n, 3)) fail("N is not 3-connected");
    if (sep.kind != GutsSeparation::Kind::cyclic) fail("separation is not cyclic");
    const ElemSet x = sep.x, y = sep.y;
    const int z = sep.z;
    if ((x | y).with(z) != m.ground() || x.intersects(y) || x.contains(z) || y.contains(z))
        fail("(X,{z},Y) is not a partition of E");
    if (report.hypothesis_failures.empty()) {
        const Matroid d = dual(m);
        const bool cyclic_ok = x.count() >= 3 && y.count() >= 3 && d.rank_of(x) >= 3 &&
                               d.rank_of(y) >= 3 && lambda(d, x) <= 2 &&
                               lambda(d, x.with(z)) <= 2 && d.closure(x).contains(z) &&
                               d.closure(y).contains(z);
        if (!cyclic_ok) fail("(X,{z},Y) is not a cyclic 3-separation of M");
    }
    if (report.hypothesis_failures.empty()) {
        MinorResult mz = delete_elements(m, ElemSet::single(z));
        const ElemSet x_minor = mz.map.preimage(x);
        const auto witness = has_minor_if(mz.matroid, n, [&](ElemSet del, ElemSet con) {
            return (x_minor - del - con).count() <= 1;
        });
        if (!witness) fail("M\\z has no N-minor meeting X in at most one element");
    }
    report.hypotheses_ok = report.hypothesis_failures.empty();
    if (!report.hypotheses_ok) return report;

    const NLabelTable labels = n_labels(m, n);
    const ElemSet costar_y = m.coclosure(y);
    const ElemSet x_prime = x - costar_y;
    report.x_prime = x_prime;
    for_each_element(x_prime, [&](int e) {
        if (!labels.deletable[static_cast<std::size_t>(e)])
            report.violations.push_back("element " + std::to_string(e) +
                                        " of X' is not N-deletable");
    });
    const ElemSet costar_x = m.coclosure(x).without(z);
    ElemSet not_contractible;
    for_each_element(costar_x, [&](int e) {
        if (!labels.contractible[static_cast<std::size_t>(e)])
            not_contractible = not_contractible.with(e);
    });
    if (not_contractible.count() > 1) {
        report.violations.push_back("elements " + not_contractible.to_string() +
                                    " of cl*(X)-z are not N-contractible");
    } else if (not_contractible.count() == 1) {
        const int bad = not_contractible.lowest();
        const ElemSet y_prime = m.coclosure(y).without(z);
        if (!x_prime.contains(bad) || !m.closure(y_prime).contains(bad))
            report.violations.push_back("exceptional element " + std::to_string(bad) +
                                        " is not in X' n cl(Y')");
        if (!m.coclosure(x_prime.without(bad)).contains(z))
            report.violations.push_back("z is not in cl*(X' - x) for exceptional x=" +
                                        std::to_string(bad));
    }
    report.conclusions_ok = report.violations.empty();
    return report;
}

}  // namespace matkit
