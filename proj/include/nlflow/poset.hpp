#pragma once

// Finite posets given by an element list and an order predicate, and the
// Moebius function
//
//   mu(x,y) = 0                         if not x <= y
//           = 1                         if x == y
//           = -sum_{x <= z < y} mu(x,z) otherwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "nlflow/error.hpp"

namespace nlflow {

template <class T>
class FinitePoset {
public:
    using Order = std::function<bool(const T&, const T&)>;

    FinitePoset(std::vector<T> elements, Order leq)
        : elements_(std::move(elements)), leq_(std::move(leq)) {}

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<T>& elements() const noexcept { return elements_; }
    const T& operator[](std::size_t i) const { return elements_.at(i); }

    bool leq(std::size_t i, std::size_t j) const { return leq_(elements_[i], elements_[j]); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    /// Reflexive, antisymmetric, transitive. O(|P|^3).
    bool is_partial_order() const {
        const auto n = size();
        for (std::size_t i = 0; i < n; ++i) {
            if (!leq(i, i)) return false;
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j && leq(i, j) && leq(j, i)) return false;
                if (!leq(i, j)) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (leq(j, k) && !leq(i, k)) return false;
            }
        }
        return true;
    }

    /// Index of the unique element below everything, if any.
    std::optional<std::size_t> minimum() const {
        for (std::size_t i = 0; i < size(); ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < size() && ok; ++j) ok = leq(i, j);
            if (ok) return i;
        }
        return std::nullopt;
    }

private:
    std::vector<T> elements_;
    Order leq_;
};

/// Memoized Moebius function of one poset. The memo belongs to this object;
/// use one instance per evaluation context.
template <class T>
class Mobius {
public:
    explicit Mobius(const FinitePoset<T>& poset) : poset_(poset) {}

    std::int64_t operator()(std::size_t x, std::size_t y) {
        if (!poset_.leq(x, y)) return 0;
        if (x == y) return 1;
        if (auto it = memo_.find({x, y}); it != memo_.end()) return it->second;
        std::int64_t sum = 0;
        for (std::size_t z = 0; z < poset_.size(); ++z)
            if (poset_.leq(x, z) && poset_.less(z, y)) sum += (*this)(x, z);
        memo_.emplace(std::pair{x, y}, -sum);
        return -sum;
    }

    /// mu(x, y) for every y, in a single O(|P|^2) sweep over the up-set of x.
    std::vector<std::int64_t> row(std::size_t x) {
        const auto n = poset_.size();
        std::vector<std::size_t> up;
        for (std::size_t y = 0; y < n; ++y)
            if (poset_.leq(x, y)) up.push_back(y);
        // Height within [x, .) is a linear extension of the interval order.
        std::vector<std::size_t> height(n, 0);
        for (auto y : up)
            for (auto z : up)
                if (poset_.less(z, y)) ++height[y];
        std::sort(up.begin(), up.end(), [&](auto a, auto b) { return height[a] < height[b]; });

        std::vector<std::int64_t> mu(n, 0);
        for (auto y : up) {
            if (y == x) {
                mu[y] = 1;
                continue;
            }
            std::int64_t sum = 0;
            for (auto z : up)
                if (poset_.less(z, y)) sum += mu[z];
            mu[y] = -sum;
        }
        for (auto y : up) memo_.emplace(std::pair{x, y}, mu[y]);
        return mu;
    }

private:
    const FinitePoset<T>& poset_;
    std::map<std::pair<std::size_t, std::size_t>, std::int64_t> memo_;
};

template <class T>
std::int64_t mobius(const FinitePoset<T>& poset, std::size_t x, std::size_t y) {
    return Mobius<T>(poset)(x, y);
}

/// Both sides of Moebius inversion from above, evaluated independently:
///   zeta:    f(x) = sum_{y >= x} g(y)          for all x
///   inverse: g(x) = sum_{y >= x} mu(x,y) f(y)   for all x
struct InversionCheck {
    bool zeta_holds = false;
    bool inverse_holds = false;

    /// The equivalence itself: the two statements agree.
    bool equivalent() const noexcept { return zeta_holds == inverse_holds; }
};

template <class T, class Value>
InversionCheck mobius_inversion_check(const FinitePoset<T>& poset,
                                      const std::vector<Value>& f,
                                      const std::vector<Value>& g) {
    if (f.size() != poset.size() || g.size() != poset.size())
        throw PreconditionError("function tables must have one value per poset element");
    Mobius<T> mu(poset);
    InversionCheck check{true, true};
    for (std::size_t x = 0; x < poset.size(); ++x) {
        Value zeta{0};
        Value inverse{0};
        auto row = mu.row(x);
        for (std::size_t y = 0; y < poset.size(); ++y) {
            if (!poset.leq(x, y)) continue;
            zeta += g[y];
            inverse += Value(row[y]) * f[y];
        }
        if (!(zeta == f[x])) check.zeta_holds = false;
        if (!(inverse == g[x])) check.inverse_holds = false;
    }
    return check;
}

}  // namespace nlflow
