#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace matkit {

/// A set of elements over a ground set {0..n-1}, n <= 16, packed into one
/// machine word.  Bit i set means element i is present.
struct ElemSet {
    std::uint32_t bits = 0;

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint32_t b) : bits(b) {}
    ElemSet(std::initializer_list<int> elems) {
        for (int e : elems) bits |= (1u << e);
    }

    static constexpr ElemSet full(int n) { return ElemSet((n >= 32) ? ~0u : ((1u << n) - 1u)); }
    static constexpr ElemSet single(int e) { return ElemSet(1u << e); }

    constexpr bool contains(int e) const { return (bits >> e) & 1u; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }
    constexpr int lowest() const { return std::countr_zero(bits); }

    constexpr ElemSet with(int e) const { return ElemSet(bits | (1u << e)); }
    constexpr ElemSet without(int e) const { return ElemSet(bits & ~(1u << e)); }

    constexpr bool subset_of(ElemSet o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(ElemSet o) const { return (bits & o.bits) != 0; }

    friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits | b.bits); }
    friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits & b.bits); }
    friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits & ~b.bits); }
    friend constexpr ElemSet operator^(ElemSet a, ElemSet b) { return ElemSet(a.bits ^ b.bits); }
    friend constexpr bool operator==(ElemSet a, ElemSet b) = default;
    friend constexpr auto operator<=>(ElemSet a, ElemSet b) { return a.bits <=> b.bits; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }
};

/// Iterates the elements of a set without materialising a vector.
template <typename F>
inline void for_each_element(ElemSet s, F&& f) {
    for (std::uint32_t b = s.bits; b != 0; b &= b - 1) f(std::countr_zero(b));
}

/// Iterates all subsets of `mask` in ascending mask order, from the empty
/// set up to `mask` itself.
template <typename F>
inline void for_each_subset(ElemSet mask, F&& f) {
    std::uint32_t s = 0;
    while (true) {
        f(ElemSet(s));
        if (s == mask.bits) break;
        s = (s - mask.bits) & mask.bits;
    }
}

}  // namespace matkit
