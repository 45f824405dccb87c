#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nlflow/error.hpp"

namespace nlflow {

/// Element of an AbelianGroup, encoded as a mixed-radix index in [0, order).
using GroupElement = std::uint32_t;

/// Finite abelian group Z_{d1} x ... x Z_{dr}. Factors of order 1 are
/// dropped; the empty product is the trivial group.
class AbelianGroup {
public:
    AbelianGroup() = default;

    explicit AbelianGroup(std::vector<unsigned> factors) {
        std::uint64_t order = 1;
        for (unsigned d : factors) {
            if (d == 0) throw DomainError("cyclic factor of order 0");
            if (d == 1) continue;
            factors_.push_back(d);
            order *= d;
            if (order > (1U << 20)) throw ResourceError("group order above 2^20");
        }
        order_ = static_cast<std::uint32_t>(order);
        add_.resize(static_cast<std::size_t>(order_) * order_);
        neg_.resize(order_);
        for (GroupElement a = 0; a < order_; ++a) {
            auto ra = residues(a);
            std::vector<unsigned> rn(ra.size());
            for (std::size_t i = 0; i < ra.size(); ++i) rn[i] = (factors_[i] - ra[i]) % factors_[i];
            neg_[a] = element(rn);
            for (GroupElement b = 0; b < order_; ++b) {
                auto rb = residues(b);
                std::vector<unsigned> rs(ra.size());
                for (std::size_t i = 0; i < ra.size(); ++i) rs[i] = (ra[i] + rb[i]) % factors_[i];
                add_[static_cast<std::size_t>(a) * order_ + b] = element(rs);
            }
        }
    }

    static AbelianGroup cyclic(unsigned k) { return AbelianGroup({k}); }

    /// `z4`, `z2xz2`, `z3xz9`; `z1` is the trivial group.
    static AbelianGroup parse(const std::string& spec) {
        std::vector<unsigned> factors;
        std::size_t pos = 0;
        while (true) {
            if (pos >= spec.size() || (spec[pos] != 'z' && spec[pos] != 'Z'))
                throw ParseError("group spec '" + spec + "': expected 'z<order>' factors joined by 'x'");
            ++pos;
            std::size_t end = pos;
            while (end < spec.size() && spec[end] >= '0' && spec[end] <= '9') ++end;
            if (end == pos || end - pos > 7) throw ParseError("group spec '" + spec + "': bad factor order");
            unsigned d = static_cast<unsigned>(std::stoul(spec.substr(pos, end - pos)));
            if (d == 0) throw ParseError("group spec '" + spec + "': factor of order 0");
            factors.push_back(d);
            pos = end;
            if (pos == spec.size()) break;
            if (spec[pos] != 'x') throw ParseError("group spec '" + spec + "': expected 'x' between factors");
            ++pos;
        }
        return AbelianGroup(factors);
    }

    std::uint32_t order() const noexcept { return order_; }
    const std::vector<unsigned>& factors() const noexcept { return factors_; }

    GroupElement zero() const noexcept { return 0; }
    GroupElement add(GroupElement a, GroupElement b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
    GroupElement neg(GroupElement a) const { return neg_[a]; }
    GroupElement sub(GroupElement a, GroupElement b) const { return add(a, neg(b)); }

    /// Element with the given residue in each factor.
    GroupElement element(const std::vector<unsigned>& residues) const {
        if (residues.size() != factors_.size()) throw DomainError("residue tuple has wrong length");
        GroupElement e = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (residues[i] >= factors_[i]) throw DomainError("residue out of range");
            e = e * factors_[i] + residues[i];
        }
        return e;
    }

    std::vector<unsigned> residues(GroupElement e) const {
        std::vector<unsigned> r(factors_.size());
        for (std::size_t i = factors_.size(); i-- > 0;) {
            r[i] = e % factors_[i];
            e /= factors_[i];
        }
        return r;
    }

    /// Image of an integer under Z -> G, n |-> n * (1,...,1). Used for
    /// matrix entries in {0, +-1}.
    GroupElement times(long long n, GroupElement a) const {
        GroupElement acc = zero();
        GroupElement step = n >= 0 ? a : neg(a);
        for (long long i = 0; i < (n >= 0 ? n : -n); ++i) acc = add(acc, step);
        return acc;
    }

    std::string to_string() const {
        if (factors_.empty()) return "z1";
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) s += (i ? "xz" : "z") + std::to_string(factors_[i]);
        return s;
    }

private:
    std::vector<unsigned> factors_;
    std::uint32_t order_ = 1;
    std::vector<GroupElement> add_{0};
    std::vector<GroupElement> neg_{0};
};

/// Every factorisation of k into cyclic factors >= 2 (non-increasing), so
/// every abelian group of order k appears at least once. k = 1 yields the
/// trivial group.
inline std::vector<AbelianGroup> groups_of_order(unsigned k) {
    if (k == 0) throw DomainError("group order must be positive");
    std::vector<AbelianGroup> out;
    std::vector<unsigned> factors;
    std::function<void(unsigned, unsigned)> split = [&](unsigned rest, unsigned max_factor) {
        if (rest == 1) {
            out.emplace_back(factors);
            return;
        }
        for (unsigned d = std::min(rest, max_factor); d >= 2; --d) {
            if (rest % d != 0) continue;
            factors.push_back(d);
            split(rest / d, d);
            factors.pop_back();
        }
    };
    split(k, k);
    return out;
}

}  // namespace nlflow
