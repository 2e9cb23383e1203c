#ifndef ASEP_RING_HPP
#define ASEP_RING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asep/errors.hpp"

namespace asep {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A ring context: the fixed, totally ordered list of variable names over
// which polynomials live.  Variable order is the list order and determines
// the lexicographic term order used everywhere (canonical rendering, sign
// normalization).  Immutable after creation.
class Ring {
public:
    static RingPtr create(std::vector<std::string> names) {
        return RingPtr(new Ring(std::move(names)));
    }

    std::size_t size() const noexcept { return names_.size(); }

    const std::string& name(std::size_t i) const { return names_.at(i); }

    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t require(std::string_view name) const {
        auto idx = find(name);
        if (!idx) throw RingMismatchError("unknown variable '" + std::string(name) + "' in ring");
        return *idx;
    }

    // Structural equality; rings created independently with the same
    // variable list are interchangeable.
    bool same_as(const Ring& other) const {
        return this == &other || names_ == other.names_;
    }

private:
    explicit Ring(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw Error("empty variable name");
            if (!index_.emplace(names_[i], i).second)
                throw Error("duplicate variable name '" + names_[i] + "'");
        }
    }

    std::vector<std::string> names_;
    std::map<std::string, std::size_t> index_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || !a->same_as(*b))
        throw RingMismatchError("operands belong to different rings");
}

// The parameter rings used by the built-in models.
namespace rings {

inline RingPtr open3() { return Ring::create({"alpha", "beta", "q"}); }
inline RingPtr open5() { return Ring::create({"alpha", "beta", "gamma", "delta", "q"}); }
inline RingPtr masep() { return Ring::create({"t"}); }
inline RingPtr single_q() { return Ring::create({"q"}); }

// x_lo..x_hi (and optionally y_lo..y_hi) for the ring-lattice models;
// indices are particle types, so lo is usually 1.
inline RingPtr xy(int lo, int hi, bool with_y) {
    std::vector<std::string> names;
    for (int i = lo; i <= hi; ++i) names.push_back("x" + std::to_string(i));
    if (with_y)
        for (int i = lo; i <= hi; ++i) names.push_back("y" + std::to_string(i));
    return Ring::create(std::move(names));
}

inline RingPtr xy(int n, bool with_y) { return xy(1, n, with_y); }

} // namespace rings

} // namespace asep

#endif
