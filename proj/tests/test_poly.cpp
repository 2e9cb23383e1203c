#include <doctest.h>

#include "asep/poly.hpp"
#include "util.hpp"

using namespace asep;
using testutil::P;

TEST_CASE("product expansions") {
    RingPtr rq = rings::single_q();
    CHECK(P(rq, "q + 1") * P(rq, "q - 1") == P(rq, "q^2 - 1"));
    CHECK(P(rq, "q + 1") * P(rq, "2*q^2 - q + 2") == P(rq, "2*q^3 + q^2 + q + 2"));

    RingPtr r3 = rings::open3();
    MultiPoly s = P(r3, "alpha*beta") + P(r3, "alpha*beta*q");
    REQUIRE(s.term_count() == 2);
    CHECK(s == P(r3, "alpha*beta*q + alpha*beta"));
    CHECK(s == P(r3, "alpha*beta") * P(r3, "1 + q"));
}

TEST_CASE("exact division") {
    RingPtr rq = rings::single_q();
    CHECK(P(rq, "2*q^3 + q^2 + q + 2").exact_div(P(rq, "q + 1")) == P(rq, "2*q^2 - q + 2"));

    MultiPoly a = P(rq, "7*q^4 - 3*q + 5");
    CHECK(a.exact_div(MultiPoly::constant(rq, 1)) == a);

    CHECK_THROWS_AS(P(rq, "q^2 - 1").exact_div(P(rq, "q + 2")), NotDivisibleError);
    CHECK_THROWS_AS(a.exact_div(MultiPoly::zero(rq)), Error);
}

TEST_CASE("gcd") {
    RingPtr rq = rings::single_q();
    CHECK(MultiPoly::gcd(P(rq, "2*q^3 + q^2 + q + 2"), P(rq, "q^3 + q^2 + 2*q + 2")) ==
          P(rq, "q + 1"));
    CHECK(MultiPoly::gcd(P(rq, "q^2 - 1"), P(rq, "q^2 + 2*q + 1")) == P(rq, "q + 1"));

    // gcd with zero is the primitive part, sign-normalized.
    CHECK(MultiPoly::gcd(P(rq, "-4*q^2 - 2"), MultiPoly::zero(rq)) == P(rq, "2*q^2 + 1"));
    CHECK_THROWS_AS(MultiPoly::gcd(MultiPoly::zero(rq), MultiPoly::zero(rq)), Error);

    RingPtr r3 = rings::open3();
    CHECK(MultiPoly::gcd(P(r3, "alpha^2*beta"), P(r3, "alpha*beta^2")) == P(r3, "alpha*beta"));
    CHECK(MultiPoly::gcd(P(r3, "alpha^2 - beta^2"), P(r3, "alpha^2 + 2*alpha*beta + beta^2")) ==
          P(r3, "alpha + beta"));
}

TEST_CASE("evaluate") {
    RingPtr r3 = rings::open3();
    MultiPoly z2 = P(r3, "alpha^2 + alpha^2*beta + alpha*beta^2 + alpha*beta*q + alpha*beta + beta^2");
    std::map<std::string, Rat> ones{{"alpha", 1}, {"beta", 1}, {"q", 1}};
    CHECK(z2.evaluate(ones) == 6);
    CHECK(MultiPoly::zero(r3).evaluate({}) == 0);

    std::map<std::string, Rat> point{{"alpha", Rat(1, 2)}, {"beta", 2}, {"q", Rat(1, 3)}};
    CHECK(P(r3, "alpha*beta").evaluate(point) == 1);
    CHECK(P(r3, "q^2").evaluate(point) == Rat(1, 9));

    CHECK_THROWS_AS(P(r3, "alpha").evaluate({{"beta", Rat(1)}}), Error);
}

TEST_CASE("canonical rendering is decreasing lex and parses back") {
    RingPtr r3 = rings::open3();
    CHECK(P(r3, "alpha*beta*q + alpha*beta^2 + alpha^2*beta").to_string() ==
          "alpha^2*beta + alpha*beta^2 + alpha*beta*q");
    CHECK(P(r3, "beta - alpha").to_string() == "-alpha + beta");
    CHECK(MultiPoly::zero(r3).to_string() == "0");
    CHECK(MultiPoly::constant(r3, -7).to_string() == "-7");
    CHECK(P(r3, "0").is_zero());

    RingPtr rq = rings::single_q();
    CHECK(P(rq, "2*q^3 + q^2 + q + 2").to_string() == "2*q^3 + q^2 + q + 2");
    CHECK(P(rq, "2*q^2 - q + 2").to_string() == "2*q^2 - q + 2");

    CHECK_THROWS_AS(P(rq, "alpha + 1"), ParseError);
    CHECK_THROWS_AS(P(rq, ""), ParseError);
    CHECK_THROWS_AS(P(rq, "q +"), ParseError);
}

TEST_CASE("substitute and ring mapping") {
    RingPtr r5 = rings::open5();
    MultiPoly p = P(r5, "alpha*beta + gamma*q + delta^2 + alpha");
    MultiPoly q = p.substitute(r5->require("gamma"), 0).substitute(r5->require("delta"), 0);
    CHECK(q == P(r5, "alpha*beta + alpha"));
    RingPtr r3 = rings::open3();
    CHECK(q.map_to(r3) == P(r3, "alpha*beta + alpha"));
    CHECK_THROWS_AS(p.map_to(r3), RingMismatchError);
    CHECK(P(r3, "alpha + q").map_to(r5) == P(r5, "alpha + q"));

    CHECK(p.substitute(r5->require("q"), 2) == P(r5, "alpha*beta + delta^2 + 2*gamma + alpha"));
}

TEST_CASE("ring mismatch is reported") {
    RingPtr a = rings::open3();
    RingPtr b = rings::single_q();
    CHECK_THROWS_AS(P(a, "q") + P(b, "q"), RingMismatchError);
    // Structurally equal rings are interchangeable.
    RingPtr c = Ring::create({"alpha", "beta", "q"});
    CHECK(P(a, "alpha") + P(c, "beta") == P(a, "alpha + beta"));
}

TEST_CASE("ring axioms on random polynomials") {
    RingPtr r3 = rings::open3();
    testutil::PolyGen gen(r3);
    for (int i = 0; i < 80; ++i) {
        MultiPoly a = gen.next(), b = gen.next(), c = gen.next();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == MultiPoly::zero(r3));
    }
}

TEST_CASE("exact_div round trip on random products") {
    RingPtr r3 = rings::open3();
    testutil::PolyGen gen(r3, 7);
    for (int i = 0; i < 80; ++i) {
        MultiPoly a = gen.next();
        MultiPoly b = gen.next_nonzero();
        CHECK((a * b).exact_div(b) == a);
    }
}

TEST_CASE("gcd divides both inputs and respects common factors") {
    RingPtr r2 = Ring::create({"u", "v"});
    testutil::PolyGen gen(r2, 99);
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = gen.next(3, 2, 4);
        MultiPoly b = gen.next_nonzero(3, 2, 4);
        if (a.is_zero()) continue;
        MultiPoly g = MultiPoly::gcd(a, b);
        CHECK(a.divisible_by(g));
        CHECK(b.divisible_by(g));
        MultiPoly common = gen.next_nonzero(2, 2, 3).normalized();
        MultiPoly lhs = MultiPoly::gcd(a * common, b * common);
        MultiPoly rhs = (g * common).normalized();
        // Equal up to sign; both sides are normalized with positive lead.
        CHECK(lhs == rhs);
    }
}

TEST_CASE("render/parse round trip on random polynomials") {
    RingPtr r5 = rings::open5();
    testutil::PolyGen gen(r5, 1234);
    for (int i = 0; i < 60; ++i) {
        MultiPoly a = gen.next(6, 4, 30);
        CHECK(MultiPoly::parse(r5, a.to_string()) == a);
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    RingPtr r3 = rings::open3();
    testutil::PolyGen gen(r3, 5150);
    std::map<std::string, Rat> pt{{"alpha", Rat(2, 3)}, {"beta", Rat(-1, 2)}, {"q", 3}};
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = gen.next(), b = gen.next();
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    }
}
