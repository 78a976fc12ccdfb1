#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semistab/polynomial.hpp"
#include "semistab/prime_field.hpp"
#include "semistab/rational.hpp"
#include "test_util.hpp"

using namespace semistab;
using testutil::pq;
using testutil::xyz;

TEST_CASE("monomial order is degrevlex with the last variable smallest") {
    auto ms = monomials_of_degree(3, 2);
    REQUIRE(ms.size() == 6);
    std::vector<std::string> expect{"z^2", "y*z", "x*z", "y^2", "x*y", "x^2"};
    for (size_t i = 0; i < ms.size(); ++i)
        CHECK(monomial_to_string(ms[i], xyz()) == expect[i]);

    auto d1 = monomials_of_degree(3, 1);
    REQUIRE(d1.size() == 3);
    CHECK(monomial_to_string(d1[0], xyz()) == "z");
    CHECK(monomial_to_string(d1[1], xyz()) == "y");
    CHECK(monomial_to_string(d1[2], xyz()) == "x");

    CHECK(monomials_of_degree(3, -1).empty());
}

TEST_CASE("monomial counts match binomial coefficients") {
    for (int v = 1; v <= 5; ++v)
        for (int d = 0; d <= 12; ++d)
            CHECK(monomials_of_degree(v, d).size() ==
                  binomial(static_cast<uint64_t>(d + v - 1),
                           static_cast<uint64_t>(v - 1)));
}

TEST_CASE("addition") {
    CHECK((pq("x^2") + pq("-x^2")).is_zero());
    CHECK(pq("x^4") + pq("y^3*z+z^4") == pq("x^4+y^3z+z^4"));
    CHECK(pq("x+y") + pq("x+y") == pq("2x+2y"));
}

TEST_CASE("multiplication") {
    CHECK(pq("x+y") * pq("x+y") == pq("x^2+2*x*y+y^2"));
    CHECK(pq("z") * pq("z^2") == pq("z^3"));
    CHECK(pq("2") * pq("x^3") == pq("2*x^3"));
    CHECK((pq("x+y") * pq("x-y")) == pq("x^2-y^2"));
}

TEST_CASE("degrees add for homogeneous products") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        auto p = testutil::random_homogeneous(Rationals{}, 3, 2 + trial % 3, rng);
        auto q = testutil::random_homogeneous(Rationals{}, 3, 1 + trial % 4, rng);
        if (p.is_zero() || q.is_zero()) continue;
        auto prod = p * q;
        REQUIRE(!prod.is_zero()); // integral domain
        CHECK(prod.degree() == p.degree() + q.degree());
        CHECK(prod.is_homogeneous());
    }
}

TEST_CASE("ring axioms on random homogeneous polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = testutil::random_homogeneous(Rationals{}, 3, 3, rng);
        auto b = testutil::random_homogeneous(Rationals{}, 3, 3, rng);
        auto c = testutil::random_homogeneous(Rationals{}, 3, 2, rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(c * (a + b) == c * a + c * b);
    }
}

TEST_CASE("text syntax round trip is bit exact") {
    std::vector<std::string> cases{
        "x^4+y^3*z+z^4", "-y^3*z-z^4", "2*x^3", "x^2+2*x*y+y^2",
        "1/2*x^2-3/7*y*z", "0", "5", "-x",
    };
    for (const auto& s : cases) {
        auto p = pq(s);
        CHECK(to_string(p, xyz()) == s);
    }
    // implicit '*' and whitespace are accepted on input
    CHECK(pq("y^3z") == pq("y^3*z"));
    CHECK(pq(" x ^ 2 + y z ") == pq("x^2+y*z"));
    CHECK(pq("3x") == pq("3*x"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(pq("x^2 + w"), parse_error);
    CHECK_THROWS_AS(pq(""), parse_error);
    CHECK_THROWS_AS(pq("x +"), parse_error);
}

TEST_CASE("field mismatch is rejected") {
    auto a = pq("x");
    auto b = testutil::pf(7, "x");
    // different arity
    auto c = semistab::parse_polynomial(Rationals{}, {"x", "y", "z", "w"}, "w");
    CHECK_THROWS_AS((void)(a + c), error);
}

TEST_CASE("prime field arithmetic") {
    PrimeField f7(7);
    CHECK(f7.add(3, 5) == 1);
    CHECK(f7.mul(3, 5) == 1);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.from_long(-1) == 6);
    CHECK(f7.from_fraction(mpz_class(1), mpz_class(2)) == 4);
    CHECK_THROWS_AS(PrimeField(6), error);
    auto p = testutil::pf(7, "x^2+6*y^2");
    CHECK(p + p == testutil::pf(7, "2x^2+5y^2"));
}

TEST_CASE("homogeneous degree tracking") {
    CHECK(pq("x^2+y*z").homogeneous_degree() == 2);
    CHECK(!pq("x^2+y").homogeneous_degree().has_value());
    CHECK(!pq("0").homogeneous_degree().has_value());
    CHECK(pq("x^2+y").is_homogeneous() == false);
}

TEST_CASE("derivative") {
    CHECK(pq("x^4+y^3*z+z^4").derivative(0) == pq("4x^3"));
    CHECK(pq("x^4+y^3*z+z^4").derivative(1) == pq("3y^2z"));
    CHECK(pq("x^4+y^3*z+z^4").derivative(2) == pq("y^3+4z^3"));
    // exponent factors reduce into the field in characteristic p
    CHECK(testutil::pf(3, "y^3z").derivative(1).is_zero());
}
