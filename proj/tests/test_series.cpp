#include <doctest.h>

#include "operjet/rng.hpp"
#include "operjet/series.hpp"

using namespace operjet;

namespace {

SeriesQ from_coeffs(long long val, long long prec, std::vector<long long> cs) {
    std::vector<Rational> v(cs.begin(), cs.end());
    return SeriesQ(val, prec, std::move(v));
}

SeriesQ random_series(SplitMix64& rng, long long val, long long prec) {
    std::vector<Rational> cs;
    for (long long k = val; k < prec; ++k) cs.push_back(rng.rational(8, 5));
    return SeriesQ(val, prec, std::move(cs));
}

}  // namespace

TEST_CASE("add: cancellation and window bookkeeping") {
    SeriesQ a = SeriesQ::monomial(0, 1) + SeriesQ::monomial(1, 1);    // 1 + t
    SeriesQ b = SeriesQ::monomial(0, -1) + SeriesQ::monomial(1, 1);   // -1 + t
    SeriesQ sum = a + b;
    CHECK(sum == SeriesQ::monomial(1, 2));  // 2t

    SeriesQ c = SeriesQ::monomial(-1, 1) + SeriesQ::monomial(1, 1);
    CHECK(c.valuation() == -1);
    CHECK(c.at(-1) == 1);
    CHECK(c.at(0) == 0);
    CHECK(c.at(1) == 1);

    SeriesQ p3 = from_coeffs(0, 3, {1, 1, 1});
    SeriesQ p5 = from_coeffs(0, 5, {1, 0, 0, 0, 0});
    CHECK((p3 + p5).precision() == 3);
}

TEST_CASE("mul: truncation and geometric inverse") {
    SeriesQ one_plus = from_coeffs(0, 4, {1, 1, 0, 0});
    SeriesQ one_minus = from_coeffs(0, 4, {1, -1, 0, 0});
    SeriesQ prod = one_plus * one_minus;
    CHECK(prod.at(0) == 1);
    CHECK(prod.at(1) == 0);
    CHECK(prod.at(2) == -1);
    CHECK(prod.precision() == 4);

    CHECK(SeriesQ::monomial(-2, 1) * SeriesQ::monomial(3, 1) == SeriesQ::monomial(1, 1));

    SeriesQ geo = from_coeffs(0, 5, {1, 1, 1, 1, 1});
    SeriesQ lin = SeriesQ::monomial(0, 1) - SeriesQ::monomial(1, 1);
    SeriesQ unit = geo * lin;
    CHECK(unit.precision() == 5);
    for (long long k = 0; k < 5; ++k) CHECK(unit.at(k) == (k == 0 ? 1 : 0));
}

TEST_CASE("derivative") {
    CHECK(SeriesQ::monomial(2, 1).derivative() == SeriesQ::monomial(1, 2));
    CHECK(SeriesQ::monomial(-1, 1).derivative() == SeriesQ::monomial(-2, -1));
    SeriesQ c = SeriesQ::monomial(0, 7);
    CHECK(c.derivative().is_zero_on_window());
    // precision drops by one
    CHECK(from_coeffs(0, 4, {1, 2, 3, 4}).derivative().precision() == 3);
}

TEST_CASE("residue coefficient extraction") {
    CHECK(SeriesQ::monomial(-1, 1).residue_coeff() == 1);
    CHECK(SeriesQ::monomial(2, 1).residue_coeff() == 0);
    SeriesQ s = SeriesQ::monomial(-1, Rational(3, 2)) + SeriesQ::monomial(1, 5);
    CHECK(s.residue_coeff() == Rational(3, 2));
    // below the valuation the coefficient is known-zero, above the precision
    // it is unknown and must be rejected
    SeriesQ late = from_coeffs(0, 2, {1, 1});
    CHECK(late.residue_coeff() == 0);
    CHECK_THROWS_AS(from_coeffs(-4, -1, {1, 1, 1}).residue_coeff(), PrecisionError);
}

TEST_CASE("ev_jet") {
    SeriesQ s = from_coeffs(0, 3, {1, 2, 3});
    auto j2 = ev_jet(s, 2);
    CHECK(j2.coeffs == std::vector<Rational>{1, 2});
    auto j1 = ev_jet(SeriesQ::monomial(1, 1), 1);
    CHECK(j1.coeffs == std::vector<Rational>{0});
    CHECK_THROWS_AS(ev_jet(from_coeffs(0, 2, {1, 2}), 3), PrecisionError);
    CHECK_THROWS_AS(ev_jet(SeriesQ::monomial(-1, 1), 2), std::domain_error);
}

TEST_CASE("ring axioms on random windows") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        SeriesQ a = random_series(rng, rng.range(-2, 1), rng.range(3, 6));
        SeriesQ b = random_series(rng, rng.range(-2, 1), rng.range(3, 6));
        SeriesQ c = random_series(rng, rng.range(-2, 1), rng.range(3, 6));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(agree_on_common_window((a * b) * c, a * (b * c)));
        CHECK(agree_on_common_window(a * (b + c), a * b + a * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("Leibniz rule and residue of derivatives") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        SeriesQ a = random_series(rng, rng.range(-2, 0), rng.range(3, 6));
        SeriesQ b = random_series(rng, rng.range(-2, 0), rng.range(3, 6));
        CHECK(agree_on_common_window((a * b).derivative(),
                                     a.derivative() * b + a * b.derivative()));
        if (a.derivative().known(-1)) CHECK(a.derivative().residue_coeff() == 0);
    }
}

TEST_CASE("vector-coefficient series reuse the same engine") {
    using VSeries = TruncLaurent<VecQ>;
    VSeries a = VSeries::monomial(0, VecQ{1, 2}) + VSeries::monomial(1, VecQ{0, 1});
    VSeries b = a + (-a);
    CHECK(b.is_zero_on_window());
    auto dot = [](const VecQ& x, const VecQ& y) {
        Rational s = 0;
        for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };
    SeriesQ prod = convolve_mul<Rational>(a, a, dot);
    CHECK(prod.at(0) == 5);
    CHECK(prod.at(1) == 4);
    CHECK(prod.at(2) == 1);
}
