#include <doctest.h>

#include "asep/ansatz.hpp"
#include "asep/tableaux.hpp"
#include "util.hpp"

using namespace asep;
using testutil::P;

TEST_CASE("truncation entries match the closed form") {
    AnsatzTruncation t = build_truncation(4);
    const RingPtr& r = t.ring;
    CHECK(t.D.at(0, 1) == P(r, "alpha"));
    CHECK(t.D.at(1, 2) == P(r, "alpha"));
    CHECK(t.D.at(0, 0).is_zero());
    CHECK(t.D.at(1, 0).is_zero());

    CHECK(t.E.at(0, 0) == P(r, "beta"));
    CHECK(t.E.at(1, 0) == P(r, "beta^2"));
    CHECK(t.E.at(1, 1) == P(r, "alpha*beta + beta*q"));
    CHECK(t.E.at(2, 1) == P(r, "alpha*beta^2 + 2*beta^2*q"));
    CHECK(t.E.at(2, 2) == P(r, "alpha*beta*q + alpha*beta + beta*q^2"));
    CHECK(t.E.at(3, 0) == P(r, "beta^4"));
    CHECK(t.E.at(3, 1) == P(r, "alpha*beta^3 + 3*beta^3*q"));
    CHECK(t.E.at(3, 2) == P(r, "2*alpha*beta^2*q + alpha*beta^2 + 3*beta^2*q^2"));
    CHECK(t.E.at(0, 1).is_zero());
    CHECK(t.E.at(1, 2).is_zero());

    CHECK(t.W[0].is_one());
    CHECK(t.W[1].is_zero());
    for (const auto& v : t.V) CHECK(v.is_one());
}

TEST_CASE("defining relations hold with the product constant") {
    CHECK(check_relations(2));
    CHECK(check_relations(4));
    CHECK(check_relations(8));
}

TEST_CASE("defining relations fail with constant 1") {
    RingPtr r = rings::open3();
    CHECK(!check_relations_with_constant(4, MultiPoly::constant(r, 1)));
}

TEST_CASE("transfer products for small words") {
    RingPtr r = rings::open3();
    CHECK(transfer_psi({0}) == P(r, "beta"));
    CHECK(transfer_psi({1}) == P(r, "alpha"));
    CHECK(transfer_psi({1, 0}) == P(r, "alpha^2*beta + alpha*beta^2 + alpha*beta*q"));
    CHECK(transfer_psi({1, 1}) == P(r, "alpha^2"));
    CHECK(transfer_psi({0, 1}) == P(r, "alpha*beta"));
    CHECK(transfer_psi({0, 0}) == P(r, "beta^2"));
}

TEST_CASE("transfer product equals the tableaux sum for the worked word") {
    Word w{0, 1, 0, 1, 1, 0, 1};
    RingPtr r = rings::open3();
    CHECK(transfer_psi(w) == psi_tableaux(7, w, TableauMode::two_letter, r));
}

TEST_CASE("transfer products equal tableaux sums for all words up to n=4") {
    RingPtr r = rings::open3();
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : open_words(n))
            CHECK(transfer_psi(w) == psi_tableaux(n, w, TableauMode::two_letter, r));
}

TEST_CASE("truncation is exact beyond the working dimension") {
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : open_words(n))
            CHECK(transfer_psi(w) == transfer_psi_at_dim(w, n + 4));
}

TEST_CASE("summing transfer products gives the transfer partition function") {
    RingPtr r = rings::open3();
    for (int n = 1; n <= 4; ++n) {
        MultiPoly sum = MultiPoly::zero(r);
        for (const Word& w : open_words(n)) sum += transfer_psi(w);
        CHECK(sum == transfer_partition_function(n));
        CHECK(sum == partition_function(n, TableauMode::two_letter, r));
    }
}
