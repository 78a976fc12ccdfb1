#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semistab/curve.hpp"
#include "test_util.hpp"

using namespace semistab;
using testutil::pq;
using testutil::xyz;

namespace {

uint64_t eval_fp(const Polynomial<PrimeField>& f, uint64_t a, uint64_t b,
                 uint64_t c) {
    const PrimeField& F = f.field();
    uint64_t acc = 0;
    for (const auto& [m, coef] : f.terms()) {
        uint64_t t = coef;
        t = F.mul(t, F.pow(a, static_cast<unsigned long>(m.exponent(0))));
        t = F.mul(t, F.pow(b, static_cast<unsigned long>(m.exponent(1))));
        t = F.mul(t, F.pow(c, static_cast<unsigned long>(m.exponent(2))));
        acc = F.add(acc, t);
    }
    return acc;
}

// brute-force search for a singular point of a plane curve over F_p
bool has_singular_point(uint64_t p, const std::string& eq) {
    PrimeField F(p);
    auto f = testutil::pf(p, eq);
    auto fx = f.derivative(0), fy = f.derivative(1), fz = f.derivative(2);
    for (uint64_t a = 0; a < p; ++a)
        for (uint64_t b = 0; b < p; ++b)
            for (uint64_t c = 0; c < p; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                if (eval_fp(f, a, b, c) == 0 && eval_fp(fx, a, b, c) == 0 &&
                    eval_fp(fy, a, b, c) == 0 && eval_fp(fz, a, b, c) == 0)
                    return true;
            }
    return false;
}

const std::vector<std::string>& segre_vars() {
    static const std::vector<std::string> v{"z00", "z01", "z10", "z11"};
    return v;
}

RingPtr<Rationals> segre_ring() {
    return make_ring(Rationals{}, segre_vars(),
                     {pq("z11*z00-z10*z01", segre_vars()),
                      pq("z00^3+z00^2*z01+z10^2*z11+2*z10*z11^2", segre_vars()),
                      pq("z00^2*z01+z00*z01^2+z10*z11^2+2*z11^3", segre_vars())});
}

} // namespace

TEST_CASE("curve invariants of the named fixtures") {
    auto quartic = make_ring(Rationals{}, xyz(), {pq("x^4+y^3*z+z^4")});
    auto i1 = curve_invariants(*quartic);
    CHECK(i1.degree == 4);
    CHECK(i1.genus == 3);

    auto dec = make_ring(Rationals{}, xyz(), {pq("x^10+y^9*z+z^10")});
    auto i2 = curve_invariants(*dec);
    CHECK(i2.degree == 10);
    CHECK(i2.genus == 36);

    auto i3 = curve_invariants(*segre_ring());
    CHECK(i3.degree == 5);
    CHECK(i3.genus == 2);
}

TEST_CASE("invariants do not depend on generator order") {
    auto a = make_ring(Rationals{}, segre_vars(),
                       {pq("z00^2*z01+z00*z01^2+z10*z11^2+2*z11^3", segre_vars()),
                        pq("z11*z00-z10*z01", segre_vars()),
                        pq("z00^3+z00^2*z01+z10^2*z11+2*z10*z11^2", segre_vars())});
    auto ia = curve_invariants(*a);
    auto ib = curve_invariants(*segre_ring());
    CHECK(ia.degree == ib.degree);
    CHECK(ia.genus == ib.genus);
}

TEST_CASE("non-curves are rejected") {
    // Artinian quotient: slope 0
    auto pt = make_ring(Rationals{}, xyz(), {pq("x"), pq("y"), pq("z")});
    CHECK_THROWS_AS(curve_invariants(*pt), validation_error);
}

TEST_CASE("smoothness of the quadric") {
    auto conic = make_ring(Rationals{}, xyz(), {pq("x^2+y^2+z^2")});
    auto r = check_smooth(*conic);
    CHECK(r.ok);
    CHECK(!has_singular_point(7, "x^2+y^2+z^2"));
}

TEST_CASE("cuspidal cubic is flagged with a witness degree") {
    auto cusp = make_ring(Rationals{}, xyz(), {pq("y^2*z-x^3")});
    auto r = check_smooth(*cusp);
    CHECK(!r.ok);
    REQUIRE(r.witness_degree.has_value());
    CHECK(*r.witness_degree >= 0);
    // cross-check: the cusp exists over a small finite field
    CHECK(has_singular_point(7, "y^2*z-x^3"));
}

TEST_CASE("the Segre curve is smooth") {
    auto r = check_smooth(*segre_ring());
    CHECK(r.ok);
}

TEST_CASE("smooth plane curves match the genus formula") {
    for (int64_t delta : {2, 3, 4, 5, 9, 10}) {
        auto f = pq("x^" + std::to_string(delta)) +
                 pq("y^" + std::to_string(delta)) +
                 pq("z^" + std::to_string(delta));
        auto ring = make_ring(Rationals{}, xyz(), {f});
        CHECK(check_smooth(*ring).ok);
        auto inv = curve_invariants(*ring);
        CHECK(inv.genus == (delta - 1) * (delta - 2) / 2);
    }
}
