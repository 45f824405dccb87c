#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "nlflow/error.hpp"

namespace nlflow {

using ArcIndex = std::size_t;

/// Subset of the arc index range [0, m) of a fixed digraph (or of the ground
/// set of a matroid). Packed bitset; all binary operations require equal
/// universe sizes.
class ArcSet {
public:
    ArcSet() = default;

    explicit ArcSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    ArcSet(std::size_t universe, std::initializer_list<ArcIndex> members)
        : ArcSet(universe) {
        for (ArcIndex a : members) insert(a);
    }

    ArcSet(std::size_t universe, const std::vector<ArcIndex>& members)
        : ArcSet(universe) {
        for (ArcIndex a : members) insert(a);
    }

    static ArcSet full(std::size_t universe) {
        ArcSet s(universe);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Low `universe` bits of `mask`; universe must be at most 64.
    static ArcSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > 64) throw DomainError("ArcSet::from_mask needs universe <= 64");
        ArcSet s(universe);
        if (universe > 0) s.words_[0] = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(ArcIndex a) const {
        return a < universe_ && ((words_[a / 64] >> (a % 64)) & 1U) != 0;
    }

    void insert(ArcIndex a) {
        check_index(a);
        words_[a / 64] |= std::uint64_t{1} << (a % 64);
    }

    void erase(ArcIndex a) {
        check_index(a);
        words_[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Members in increasing order.
    std::vector<ArcIndex> indices() const {
        std::vector<ArcIndex> out;
        out.reserve(size());
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w != 0) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::uint64_t mask() const {
        if (universe_ > 64) throw DomainError("ArcSet::mask needs universe <= 64");
        return words_.empty() ? 0 : words_[0];
    }

    ArcSet complement() const {
        ArcSet s = *this;
        for (auto& w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    ArcSet& operator|=(const ArcSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
    ArcSet& operator&=(const ArcSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
    ArcSet& operator-=(const ArcSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

    friend ArcSet operator|(ArcSet a, const ArcSet& b) { return a |= b; }
    friend ArcSet operator&(ArcSet a, const ArcSet& b) { return a &= b; }
    friend ArcSet operator-(ArcSet a, const ArcSet& b) { return a -= b; }

    bool is_subset_of(const ArcSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    bool intersects(const ArcSet& o) const {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0) return true;
        return false;
    }

    friend bool operator==(const ArcSet&, const ArcSet&) = default;

    /// Lexicographic order on the sorted index lists.
    friend bool lex_less(const ArcSet& a, const ArcSet& b) {
        auto x = a.indices();
        auto y = b.indices();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

    std::size_t hash() const noexcept {
        std::size_t h = std::hash<std::size_t>{}(universe_);
        for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    /// `{0,3,4}` style rendering.
    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (auto a : indices()) {
            if (!first) s += ",";
            s += std::to_string(a);
            first = false;
        }
        return s + "}";
    }

private:
    void check_index(ArcIndex a) const {
        if (a >= universe_)
            throw DomainError("arc index " + std::to_string(a) + " outside [0," +
                              std::to_string(universe_) + ")");
    }

    void require_same_universe(const ArcSet& o) const {
        if (o.universe_ != universe_) throw DomainError("ArcSet universe mismatch");
    }

    template <class Op>
    ArcSet& combine(const ArcSet& o, Op op) {
        require_same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
        return *this;
    }

    void trim() {
        if (universe_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace nlflow

template <>
struct std::hash<nlflow::ArcSet> {
    std::size_t operator()(const nlflow::ArcSet& s) const noexcept { return s.hash(); }
};
