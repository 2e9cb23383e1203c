#include <doctest.h>

#include "asep/matrix.hpp"
#include "asep/models.hpp"
#include "asep/reference_tables.hpp"
#include "util.hpp"

using namespace asep;
using testutil::P;

TEST_CASE("left kernel of a two-state balance matrix") {
    RingPtr r3 = rings::open3();
    PolyMatrix m(r3, 2, 2);
    m.at(0, 0) = P(r3, "-alpha");
    m.at(0, 1) = P(r3, "alpha");
    m.at(1, 0) = P(r3, "beta");
    m.at(1, 1) = P(r3, "-beta");
    auto v = left_kernel(m);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == P(r3, "beta"));
    CHECK(v[1] == P(r3, "alpha"));
}

TEST_CASE("left kernel of a unit-rate cycle is uniform") {
    RingPtr rq = rings::single_q();
    PolyMatrix m(rq, 3, 3);
    for (int i = 0; i < 3; ++i) {
        m.at(i, i) = P(rq, "-1");
        m.at(i, (i + 1) % 3) = P(rq, "1");
    }
    auto v = left_kernel(m);
    for (int i = 0; i < 3; ++i) CHECK(v[i] == P(rq, "1"));
}

TEST_CASE("left kernel of the demo rate matrix is proportional to its compact form") {
    ChainPtr chain = build_five_state_demo();
    auto v = left_kernel(chain->rate_matrix());
    const RingPtr& rq = chain->ring();
    std::vector<MultiPoly> compact;
    for (const auto& [state, poly] : tables::demo5_compact_measure())
        compact.push_back(P(rq, poly));
    // Cross-multiplication against the anchored entry.
    for (std::size_t i = 1; i < v.size(); ++i)
        CHECK(v[i] * compact[0] == v[0] * compact[i]);
    // Collective integer content 1.
    Int g = 0;
    for (const auto& p : v) {
        Int c = p.integer_content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    CHECK(g == 1);
    // The kernel identity itself.
    PolyMatrix q = chain->rate_matrix();
    for (std::size_t j = 0; j < v.size(); ++j) {
        MultiPoly s = MultiPoly::zero(rq);
        for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * q.at(i, j);
        CHECK(s.is_zero());
    }
}

TEST_CASE("kernel rank errors") {
    RingPtr rq = rings::single_q();
    // Two disconnected two-state blocks: kernel dimension 2.
    PolyMatrix m(rq, 4, 4);
    for (int b = 0; b < 2; ++b) {
        int o = 2 * b;
        m.at(o, o) = P(rq, "-1");
        m.at(o, o + 1) = P(rq, "1");
        m.at(o + 1, o) = P(rq, "1");
        m.at(o + 1, o + 1) = P(rq, "-1");
    }
    CHECK_THROWS_AS(left_kernel(m), KernelRankError);
    try {
        left_kernel(m);
    } catch (const KernelRankError& e) {
        CHECK(e.rank == 2);
    }
    // Full-rank matrix: kernel dimension 0.
    PolyMatrix id(rq, 2, 2);
    id.at(0, 0) = id.at(1, 1) = P(rq, "1");
    CHECK_THROWS_AS(left_kernel(id), KernelRankError);
    PolyMatrix rect(rq, 2, 3);
    CHECK_THROWS_AS(left_kernel(rect), Error);
}

TEST_CASE("determinants") {
    RingPtr r2 = Ring::create({"u", "v"});
    PolyMatrix m(r2, 2, 2);
    m.at(0, 0) = P(r2, "u");
    m.at(0, 1) = P(r2, "v");
    m.at(1, 0) = P(r2, "1");
    m.at(1, 1) = P(r2, "u + v");
    CHECK(determinant(m) == P(r2, "u^2 + u*v - v"));

    // Vandermonde in three symbols.
    RingPtr r3 = Ring::create({"a", "b", "c"});
    PolyMatrix vard(r3, 3, 3);
    const char* names[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) {
        vard.at(i, 0) = P(r3, "1");
        vard.at(i, 1) = P(r3, names[i]);
        vard.at(i, 2) = P(r3, names[i]) * P(r3, names[i]);
    }
    CHECK(determinant(vard) ==
          (P(r3, "b - a")) * (P(r3, "c - a")) * (P(r3, "c - b")));

    // Singular matrix.
    PolyMatrix s(r2, 2, 2);
    s.at(0, 0) = P(r2, "u");
    s.at(0, 1) = P(r2, "u");
    s.at(1, 0) = P(r2, "v");
    s.at(1, 1) = P(r2, "v");
    CHECK(determinant(s).is_zero());
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    RingPtr r2 = Ring::create({"u", "v"});
    testutil::PolyGen gen(r2, 31);
    auto cofactor_det = [&](auto&& self, const PolyMatrix& m) -> MultiPoly {
        if (m.rows() == 1) return m.at(0, 0);
        MultiPoly sum = MultiPoly::zero(r2);
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m.at(0, k).is_zero()) continue;
            PolyMatrix minor(r2, m.rows() - 1, m.cols() - 1);
            for (std::size_t i = 1; i < m.rows(); ++i)
                for (std::size_t j = 0, jj = 0; j < m.cols(); ++j) {
                    if (j == k) continue;
                    minor.at(i - 1, jj++) = m.at(i, j);
                }
            MultiPoly term = m.at(0, k) * self(self, minor);
            sum += (k % 2 == 0) ? term : -term;
        }
        return sum;
    };
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 3 + rep % 2;
        PolyMatrix m(r2, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = gen.next(2, 2, 3);
        CHECK(determinant(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("rational determinant") {
    std::vector<std::vector<Rat>> m{{Rat(1, 2), Rat(1)}, {Rat(1), Rat(3)}};
    CHECK(determinant_rational(m) == Rat(1, 2));
    std::vector<std::vector<Rat>> s{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK(determinant_rational(s) == 0);
}
