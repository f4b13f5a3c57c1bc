/*
   Copyright 2026 The drinfeld-al Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "drinfeld/literal.hpp"
#include "oracles.hpp"

using namespace drinfeld;
using oracle::lit;

namespace {

const Field* F2() { return make_field(2, 1); }
const Field* F3() { return make_field(3, 1); }
const Field* F4() { return make_field(2, 2, "x^2+x+1"); }

}  // namespace

TEST(Field, FrobeniusFixesEveryElement) {
    for (auto* F : {F2(), F3(), F4(), make_field(5, 1), make_field(2, 3, "x^3+x+1"), make_field(3, 2, "x^2+1"),
                    make_field(2, 4, "x^4+x+1")}) {
        for (int a = 0; a < F->q(); ++a) EXPECT_EQ(F->pow(static_cast<Field::Elem>(a), F->q()), a) << F->q();
    }
}

TEST(Field, InversesAndDistributivity) {
    const Field* F = F4();
    for (int a = 1; a < 4; ++a) EXPECT_EQ(F->mul(a, F->inv(a)), 1);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) EXPECT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
}

TEST(Field, RejectsReducibleModulus) { EXPECT_THROW(make_field(2, 2, "x^2+1"), Error); }

TEST(Poly, DegreeIsAdditive) {
    std::mt19937_64 rng(7);
    for (auto* F : {F2(), F3(), F4()})
        for (int i = 0; i < 50; ++i) {
            Poly f = oracle::random_poly(F, 5, rng), g = oracle::random_poly(F, 4, rng);
            if (f.is_zero() || g.is_zero()) continue;
            EXPECT_EQ((f * g).degree(), f.degree() + g.degree());
        }
}

TEST(Poly, MonicNormalize) {
    const Field* F = F3();
    Poly f = lit(F, "2*t^2+t+1");
    auto [u, m] = f.monic_normalize();
    EXPECT_TRUE(m.is_monic());
    EXPECT_EQ(m.scaled(u), f);
}

TEST(Poly, LiteralRoundTrip) {
    for (const char* s : {"t^2+2*t+1", "t", "2", "0", "t^5+t"}) EXPECT_EQ(format_poly(lit(F3(), s)), s);
    EXPECT_EQ(format_poly(lit(F4(), "t^2+x*t+x+1")), "t^2+x*t+x+1");
}

TEST(GcdBezout, Examples) {
    const Field* F = F3();
    auto b = gcd_bezout(lit(F, "t"), lit(F, "t+1"));
    EXPECT_EQ(b.g, lit(F, "1"));
    EXPECT_EQ(b.u, lit(F, "2"));
    EXPECT_EQ(b.v, lit(F, "1"));
    auto c = gcd_bezout(lit(F, "t^2"), lit(F, "t"));
    EXPECT_EQ(c.g, lit(F, "t"));
    EXPECT_EQ(c.u, lit(F, "0"));
    EXPECT_EQ(c.v, lit(F, "1"));
    EXPECT_EQ(gcd_bezout(lit(F, "t^2+1"), lit(F, "t+2")).g, lit(F, "1"));
}

TEST(GcdBezout, ZeroInputsThrow) { EXPECT_THROW(gcd_bezout(Poly(F3()), Poly(F3())), Error); }

TEST(GcdBezout, RandomIdentityAndCommonDivisors) {
    std::mt19937_64 rng(11);
    for (auto* F : {F2(), F3(), F4()})
        for (int i = 0; i < 60; ++i) {
            Poly a = oracle::random_poly(F, 4, rng), b = oracle::random_poly(F, 3, rng);
            Poly c = oracle::random_poly(F, 2, rng);
            if (c.is_zero()) continue;
            a = a * c;
            b = b * c;
            if (a.is_zero() && b.is_zero()) continue;
            auto r = gcd_bezout(a, b);
            EXPECT_EQ(r.u * a + r.v * b, r.g);
            EXPECT_TRUE(r.g.is_monic());
            EXPECT_TRUE(r.g.divides(a));
            EXPECT_TRUE(r.g.divides(b));
            EXPECT_TRUE(c.monic().divides(r.g));
        }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible(lit(F3(), "t^2+1")));
    EXPECT_FALSE(is_irreducible(lit(F3(), "t^2")));
    EXPECT_TRUE(is_irreducible(lit(F2(), "t^2+t+1")));
    EXPECT_THROW(is_irreducible(lit(F3(), "2")), Error);
}

TEST(Irreducible, AgreesWithTrialDivision) {
    for (auto* F : {F2(), F3(), F4()})
        for (int d = 1; d <= (F->q() == 2 ? 6 : 4); ++d)
            for (auto& f : monic_polys_of_degree(F, d)) EXPECT_EQ(is_irreducible(f), oracle::irreducible(f)) << format_poly(f);
}

TEST(Valuation, Examples) {
    const Field* F = F3();
    EXPECT_EQ(vp_rational(RatFunc(lit(F, "t^3"), lit(F, "t+1")), lit(F, "t")), 3);
    EXPECT_EQ(vp_rational(RatFunc(lit(F, "1"), lit(F, "t+1").pow(2)), lit(F, "t+1")), -2);
    EXPECT_EQ(vp_rational(RatFunc(lit(F, "2")), lit(F, "t")), 0);
    EXPECT_EQ(vp_rational(RatFunc(F), lit(F, "t")), kInfinity);
    EXPECT_THROW(vp_rational(RatFunc(lit(F, "t")), lit(F, "t^2")), Error);
}

TEST(Valuation, AdditiveAndUltrametric) {
    std::mt19937_64 rng(5);
    const Field* F = F3();
    Poly P = lit(F, "t^2+1");
    for (int i = 0; i < 100; ++i) {
        Poly a = oracle::random_poly(F, 5, rng), b = oracle::random_poly(F, 5, rng);
        Poly c = oracle::random_poly(F, 3, rng), d = oracle::random_poly(F, 3, rng);
        if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero()) continue;
        RatFunc x(a * P, c), y(b, d * P);
        EXPECT_EQ(vp_rational(x * y, P), vp_rational(x, P) + vp_rational(y, P));
        if (!(x + y).is_zero()) EXPECT_GE(vp_rational(x + y, P), std::min(vp_rational(x, P), vp_rational(y, P)));
    }
}

TEST(RatFunc, CanonicalFormIsIdempotent) {
    const Field* F = F3();
    RatFunc x(lit(F, "2*t^2+2*t"), lit(F, "2*t+2"));
    EXPECT_EQ(x.num(), lit(F, "t"));
    EXPECT_EQ(x.den(), lit(F, "1"));
    RatFunc y(x.num(), x.den());
    EXPECT_EQ(x, y);
    EXPECT_TRUE(RatFunc(lit(F, "t"), lit(F, "2*t+1")).den().is_monic());
}

TEST(IdealA, ExactDivisors) {
    const Field* F = F3();
    IdealA n(lit(F, "t^3+t^2"));  // t^2 (t+1)
    EXPECT_TRUE(IdealA(lit(F, "t^2")).exactly_divides(n));
    EXPECT_FALSE(IdealA(lit(F, "t")).exactly_divides(n));
    EXPECT_EQ(n.exact_divisors().size(), 4u);
    EXPECT_EQ(IdealA(lit(F, "2*t+2")).gen(), lit(F, "t+1"));
}
