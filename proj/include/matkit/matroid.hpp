#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matkit/elemset.hpp"
#include "matkit/error.hpp"

namespace matkit {

/// Total injective map between ground sets: image[src] = dst.
/// Minors and si/co map surviving (re-indexed) elements back to the labels
/// of the matroid they came from; isomorphisms map E(M1) onto E(M2).
struct ElementMap {
    std::vector<int> image;

    int operator()(int e) const { return image.at(static_cast<std::size_t>(e)); }
    int size() const { return static_cast<int>(image.size()); }

    static ElementMap identity(int n) {
        ElementMap m;
        m.image.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) m.image[static_cast<std::size_t>(i)] = i;
        return m;
    }

    ElemSet apply(ElemSet s) const {
        ElemSet out;
        for_each_element(s, [&](int e) { out = out.with(image[static_cast<std::size_t>(e)]); });
        return out;
    }

    /// Source-side elements whose image lies in `s`.
    ElemSet preimage(ElemSet s) const {
        ElemSet out;
        for (int i = 0; i < size(); ++i)
            if (s.contains(image[static_cast<std::size_t>(i)])) out = out.with(i);
        return out;
    }

    friend bool operator==(const ElementMap&, const ElementMap&) = default;
};

constexpr int kMaxElements = 16;

/// A matroid on ground set {0..n-1}, n <= 16, given by its family of bases.
///
/// The basis family is the single source of rank truth; a full subset->rank
/// table is precomputed at construction, so rank queries, closures and the
/// connectivity function are O(1) or O(n) lookups.  Instances are immutable
/// after construction and safe to share across threads.
class Matroid {
public:
    enum class Check { validate, trust };

    Matroid(int n, std::vector<ElemSet> bases, std::string name = "",
            Check check = Check::validate)
        : n_(n), bases_(std::move(bases)), name_(std::move(name)) {
        if (n_ < 0 || n_ > kMaxElements)
            throw AxiomError("element count " + std::to_string(n_) + " outside 0..16");
        if (bases_.empty()) throw AxiomError("basis family is empty");
        std::sort(bases_.begin(), bases_.end());
        bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
        rank_ = bases_.front().count();
        const ElemSet ground = ElemSet::full(n_);
        for (ElemSet b : bases_) {
            if (!b.subset_of(ground))
                throw AxiomError("basis " + b.to_string() + " leaves the ground set");
            if (b.count() != rank_)
                throw AxiomError("bases " + bases_.front().to_string() + " and " +
                                 b.to_string() + " have different sizes");
        }
        if (check == Check::validate) check_exchange();
        build_rank_table();
    }

    int size() const { return n_; }
    int rank() const { return rank_; }
    ElemSet ground() const { return ElemSet::full(n_); }
    const std::vector<ElemSet>& bases() const { return bases_; }
    const std::string& name() const { return name_; }
    void rename(std::string name) { name_ = std::move(name); }

    /// r(S) = size of a largest independent subset of S.
    int rank_of(ElemSet s) const {
        require_valid(s);
        return rank_tbl_[s.bits];
    }

    /// r*(S) = |S| + r(E-S) - r(M), the rank of S in the dual.
    int corank_of(ElemSet s) const {
        require_valid(s);
        return s.count() + rank_tbl_[(ground() - s).bits] - rank_;
    }

    bool is_independent(ElemSet s) const { return rank_of(s) == s.count(); }
    bool is_coindependent(ElemSet s) const { return corank_of(s) == s.count(); }
    bool is_basis(ElemSet s) const {
        return std::binary_search(bases_.begin(), bases_.end(), s);
    }
    bool spans(ElemSet s) const { return rank_of(s) == rank_; }

    bool is_circuit(ElemSet s) const {
        if (s.empty() || is_independent(s)) return false;
        bool minimal = true;
        for_each_element(s, [&](int e) {
            if (!is_independent(s.without(e))) minimal = false;
        });
        return minimal;
    }

    bool is_cocircuit(ElemSet s) const {
        require_valid(s);
        if (s.empty() || spans(ground() - s)) return false;
        bool minimal = true;
        for_each_element(s, [&](int e) {
            if (!spans((ground() - s).with(e))) minimal = false;
        });
        return minimal;
    }

    /// cl(S) = S plus every element whose addition does not raise the rank.
    ElemSet closure(ElemSet s) const {
        const int r = rank_of(s);
        ElemSet out = s;
        for_each_element(ground() - s, [&](int e) {
            if (rank_tbl_[s.with(e).bits] == r) out = out.with(e);
        });
        return out;
    }

    /// cl*(S), the closure in the dual matroid.
    ElemSet coclosure(ElemSet s) const {
        require_valid(s);
        const ElemSet rest = ground() - s;
        const int r_rest = rank_tbl_[rest.bits];
        ElemSet out = s;
        for_each_element(rest, [&](int e) {
            if (rank_tbl_[rest.without(e).bits] == r_rest - 1) out = out.with(e);
        });
        return out;
    }

    bool is_loop(int e) const { return rank_of(ElemSet::single(e)) == 0; }
    bool is_coloop(int e) const { return !spans(ground().without(e)); }

    /// Re-checks the basis-exchange axiom; throws AxiomError on violation.
    void check_exchange() const {
        for (ElemSet b1 : bases_) {
            for (ElemSet b2 : bases_) {
                if (b1 == b2) continue;
                bool bad = false;
                for_each_element(b1 - b2, [&](int x) {
                    bool found = false;
                    for_each_element(b2 - b1, [&](int y) {
                        if (!found && is_basis(b1.without(x).with(y))) found = true;
                    });
                    if (!found) bad = true;
                });
                if (bad)
                    throw AxiomError("basis exchange fails between " + b1.to_string() +
                                     " and " + b2.to_string());
            }
        }
    }

    friend bool operator==(const Matroid& a, const Matroid& b) {
        return a.n_ == b.n_ && a.bases_ == b.bases_;
    }

private:
    void require_valid(ElemSet s) const {
        if (!s.subset_of(ground()))
            throw InvalidElementError("set " + s.to_string() + " contains an element >= " +
                                      std::to_string(n_));
    }

    void build_rank_table() {
        const std::size_t total = std::size_t{1} << n_;
        std::vector<bool> indep(total, false);
        for (ElemSet b : bases_)
            for_each_subset(b, [&](ElemSet s) { indep[s.bits] = true; });
        rank_tbl_.assign(total, 0);
        for (std::uint32_t m = 1; m < total; ++m) {
            if (indep[m]) {
                rank_tbl_[m] = static_cast<std::uint8_t>(std::popcount(m));
            } else {
                std::uint8_t best = 0;
                for (std::uint32_t b = m; b != 0; b &= b - 1) {
                    const std::uint32_t sub = m & ~(b & (~b + 1));
                    best = std::max(best, rank_tbl_[sub]);
                }
                rank_tbl_[m] = best;
            }
        }
    }

    int n_;
    int rank_;
    std::vector<ElemSet> bases_;
    std::string name_;
    std::vector<std::uint8_t> rank_tbl_;
};

/// A family of like-tagged subsets (kept sorted by mask).
struct SetFamily {
    enum class Kind { bases, circuits, cocircuits, flats };
    Kind kind;
    std::vector<ElemSet> members;

    bool contains(ElemSet s) const {
        return std::binary_search(members.begin(), members.end(), s);
    }

    /// Circuit/cocircuit families are antichains: no member contains another.
    bool is_antichain() const {
        for (ElemSet a : members)
            for (ElemSet b : members)
                if (a != b && a.subset_of(b)) return false;
        return true;
    }
};

inline Matroid dual(const Matroid& m) {
    std::vector<ElemSet> cobases;
    cobases.reserve(m.bases().size());
    for (ElemSet b : m.bases()) cobases.push_back(m.ground() - b);
    std::string name = m.name().empty() ? std::string() : "dual(" + m.name() + ")";
    return Matroid(m.size(), std::move(cobases), std::move(name), Matroid::Check::trust);
}

struct MinorResult {
    Matroid matroid;
    ElementMap map;  // new label -> original label
};

namespace detail {

inline std::vector<int> survivor_list(const Matroid& m, ElemSet removed) {
    std::vector<int> out;
    for_each_element(m.ground() - removed, [&](int e) { out.push_back(e); });
    return out;
}

inline ElemSet expand(ElemSet compressed, const std::vector<int>& survivors) {
    ElemSet out;
    for_each_element(compressed, [&](int i) { out = out.with(survivors[static_cast<std::size_t>(i)]); });
    return out;
}

}  // namespace detail

/// M \ S, with elements re-indexed densely; map sends new labels to old.
inline MinorResult delete_elements(const Matroid& m, ElemSet s) {
    if (!s.subset_of(m.ground()))
        throw InvalidElementError("delete set " + s.to_string() + " leaves the ground set");
    const std::vector<int> survivors = detail::survivor_list(m, s);
    const int n2 = static_cast<int>(survivors.size());
    const int r2 = m.rank_of(m.ground() - s);
    std::vector<ElemSet> bases2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n2); ++mask) {
        ElemSet c(mask);
        if (c.count() != r2) continue;
        if (m.is_independent(detail::expand(c, survivors))) bases2.push_back(c);
    }
    ElementMap map{survivors};
    return MinorResult{Matroid(n2, std::move(bases2), "", Matroid::Check::trust),
                       std::move(map)};
}

/// M / S; equals dual(delete(dual(M), S)) by minor calculus.
inline MinorResult contract_elements(const Matroid& m, ElemSet s) {
    if (!s.subset_of(m.ground()))
        throw InvalidElementError("contract set " + s.to_string() + " leaves the ground set");
    const std::vector<int> survivors = detail::survivor_list(m, s);
    const int n2 = static_cast<int>(survivors.size());
    const int r2 = m.rank() - m.rank_of(s);
    std::vector<ElemSet> bases2;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n2); ++mask) {
        ElemSet c(mask);
        if (c.count() != r2) continue;
        if (m.rank_of(detail::expand(c, survivors) | s) == m.rank()) bases2.push_back(c);
    }
    ElementMap map{survivors};
    return MinorResult{Matroid(n2, std::move(bases2), "", Matroid::Check::trust),
                       std::move(map)};
}

/// Convenience: delete D and contract C in one step (D and C disjoint).
inline MinorResult minor(const Matroid& m, ElemSet del, ElemSet con) {
    if (del.intersects(con))
        throw PreconditionError("delete and contract sets intersect");
    MinorResult first = contract_elements(m, con);
    ElemSet del2;
    for (int i = 0; i < first.matroid.size(); ++i)
        if (del.contains(first.map(i))) del2 = del2.with(i);
    MinorResult second = delete_elements(first.matroid, del2);
    ElementMap composed;
    composed.image.reserve(static_cast<std::size_t>(second.matroid.size()));
    for (int i = 0; i < second.matroid.size(); ++i)
        composed.image.push_back(first.map(second.map(i)));
    return MinorResult{std::move(second.matroid), std::move(composed)};
}

/// Minimal dependent sets, in ascending mask order.
inline SetFamily circuits(const Matroid& m) {
    SetFamily fam{SetFamily::Kind::circuits, {}};
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (m.is_circuit(ElemSet(mask))) fam.members.push_back(ElemSet(mask));
    }
    return fam;
}

/// Circuits of the dual, i.e. complements of hyperplanes.
inline SetFamily cocircuits(const Matroid& m) {
    SetFamily fam{SetFamily::Kind::cocircuits, {}};
    const std::uint32_t total = std::uint32_t{1} << m.size();
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        if (m.is_cocircuit(ElemSet(mask))) fam.members.push_back(ElemSet(mask));
    }
    return fam;
}

/// si(M): drop loops and all but the lowest-labelled element of each
/// parallel class.  The map sends surviving labels to original labels.
inline MinorResult simplify(const Matroid& m) {
    ElemSet removed;
    ElemSet kept;
    for (int e = 0; e < m.size(); ++e) {
        if (m.is_loop(e)) {
            removed = removed.with(e);
            continue;
        }
        bool parallel_to_kept = false;
        for_each_element(kept, [&](int f) {
            if (m.rank_of(ElemSet{e, f}) == 1) parallel_to_kept = true;
        });
        if (parallel_to_kept)
            removed = removed.with(e);
        else
            kept = kept.with(e);
    }
    return delete_elements(m, removed);
}

/// co(M) = dual(si(dual(M))): collapse series classes, drop coloop-parallel
/// debris on the dual side.  Same map convention as simplify.
inline MinorResult cosimplify(const Matroid& m) {
    MinorResult r = simplify(dual(m));
    return MinorResult{dual(r.matroid), std::move(r.map)};
}

namespace detail {

/// Per-element invariants preserved by isomorphism: the number of bases
/// through the element and the sorted profile of pair counts.
struct ElemSignature {
    int degree = 0;
    std::vector<int> pair_profile;
    friend bool operator==(const ElemSignature&, const ElemSignature&) = default;
    friend auto operator<=>(const ElemSignature&, const ElemSignature&) = default;
};

inline std::vector<std::vector<int>> pair_degrees(const Matroid& m) {
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(m.size()),
                                      std::vector<int>(static_cast<std::size_t>(m.size()), 0));
    for (ElemSet b : m.bases())
        for_each_element(b, [&](int e) {
            for_each_element(b, [&](int f) { deg[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]++; });
        });
    return deg;
}

inline std::vector<ElemSignature> signatures(const Matroid& m) {
    auto pd = pair_degrees(m);
    std::vector<ElemSignature> sig(static_cast<std::size_t>(m.size()));
    for (int e = 0; e < m.size(); ++e) {
        auto& s = sig[static_cast<std::size_t>(e)];
        s.degree = pd[static_cast<std::size_t>(e)][static_cast<std::size_t>(e)];
        for (int f = 0; f < m.size(); ++f)
            if (f != e) s.pair_profile.push_back(pd[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)]);
        std::sort(s.pair_profile.begin(), s.pair_profile.end());
    }
    return sig;
}

struct IsoSearch {
    const Matroid& m1;
    const Matroid& m2;
    std::vector<ElemSignature> sig1, sig2;
    std::vector<std::vector<int>> pd1, pd2;
    std::vector<int> image;   // m1 element -> m2 element, -1 unset
    std::vector<bool> used;   // m2 elements already hit
    std::vector<int> order;   // m1 elements in assignment order

    bool dfs(std::size_t depth) {
        if (depth == order.size()) return verify();
        const int e = order[depth];
        for (int f = 0; f < m2.size(); ++f) {
            if (used[static_cast<std::size_t>(f)]) continue;
            if (sig1[static_cast<std::size_t>(e)] != sig2[static_cast<std::size_t>(f)]) continue;
            bool consistent = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const int e2 = order[d];
                if (pd1[static_cast<std::size_t>(e)][static_cast<std::size_t>(e2)] !=
                    pd2[static_cast<std::size_t>(f)][static_cast<std::size_t>(image[static_cast<std::size_t>(e2)])]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            image[static_cast<std::size_t>(e)] = f;
            used[static_cast<std::size_t>(f)] = true;
            if (dfs(depth + 1)) return true;
            image[static_cast<std::size_t>(e)] = -1;
            used[static_cast<std::size_t>(f)] = false;
        }
        return false;
    }

    bool verify() const {
        ElementMap map{image};
        for (ElemSet b : m1.bases())
            if (!m2.is_basis(map.apply(b))) return false;
        return true;
    }
};

}  // namespace detail

/// A rank-preserving bijection mapping bases onto bases, or absent.
/// Backtracking over element assignments, pruned by basis-degree and
/// pair-degree signatures; the first bijection in search order is returned.
inline std::optional<ElementMap> find_isomorphism(const Matroid& m1, const Matroid& m2) {
    if (m1.size() != m2.size() || m1.rank() != m2.rank() ||
        m1.bases().size() != m2.bases().size())
        return std::nullopt;
    if (m1.size() == 0) return ElementMap{};
    detail::IsoSearch search{m1,
                             m2,
                             detail::signatures(m1),
                             detail::signatures(m2),
                             detail::pair_degrees(m1),
                             detail::pair_degrees(m2),
                             std::vector<int>(static_cast<std::size_t>(m1.size()), -1),
                             std::vector<bool>(static_cast<std::size_t>(m2.size()), false),
                             {}};
    {
        auto sorted1 = search.sig1;
        auto sorted2 = search.sig2;
        std::sort(sorted1.begin(), sorted1.end());
        std::sort(sorted2.begin(), sorted2.end());
        if (sorted1 != sorted2) return std::nullopt;
    }
    search.order.resize(static_cast<std::size_t>(m1.size()));
    for (int i = 0; i < m1.size(); ++i) search.order[static_cast<std::size_t>(i)] = i;
    // Assign rare signature classes first; cheap and cuts the search a lot.
    std::stable_sort(search.order.begin(), search.order.end(), [&](int a, int b) {
        int ca = 0, cb = 0;
        for (const auto& s : search.sig1) {
            if (s == search.sig1[static_cast<std::size_t>(a)]) ++ca;
            if (s == search.sig1[static_cast<std::size_t>(b)]) ++cb;
        }
        return ca < cb;
    });
    if (search.dfs(0)) return ElementMap{search.image};
    return std::nullopt;
}

inline bool is_isomorphic(const Matroid& m1, const Matroid& m2) {
    return find_isomorphism(m1, m2).has_value();
}

}  // namespace matkit
