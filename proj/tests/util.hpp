#ifndef ASEP_TESTS_UTIL_HPP
#define ASEP_TESTS_UTIL_HPP

#include <random>

#include "asep/poly.hpp"

namespace asep::testutil {

inline MultiPoly P(const RingPtr& ring, const std::string& s) {
    return MultiPoly::parse(ring, s);
}

// Small random polynomials with a fixed-seed engine; enough structure to
// exercise carries, cancellations and multi-variable terms.
class PolyGen {
public:
    explicit PolyGen(RingPtr ring, unsigned seed = 20240811)
        : ring_(std::move(ring)), rng_(seed) {}

    MultiPoly next(int max_terms = 5, int max_exp = 3, int max_coeff = 9) {
        std::uniform_int_distribution<int> nterms(0, max_terms);
        std::uniform_int_distribution<int> exp(0, max_exp);
        std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
        MultiPoly p = MultiPoly::zero(ring_);
        int k = nterms(rng_);
        for (int t = 0; t < k; ++t) {
            MultiPoly::Exponents e(ring_->size());
            for (auto& x : e) x = static_cast<std::uint32_t>(exp(rng_));
            p += MultiPoly::monomial(ring_, std::move(e), coeff(rng_));
        }
        return p;
    }

    MultiPoly next_nonzero(int max_terms = 5, int max_exp = 3, int max_coeff = 9) {
        while (true) {
            MultiPoly p = next(max_terms, max_exp, max_coeff);
            if (!p.is_zero()) return p;
        }
    }

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng_);
    }

    std::mt19937& engine() { return rng_; }

private:
    RingPtr ring_;
    std::mt19937 rng_;
};

} // namespace asep::testutil

#endif
