#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "arlat/forms.hpp"
#include "arlat/instances.hpp"
#include "arlat/io.hpp"

using namespace arlat;

namespace {

HomogeneousForm var(int t, int i) {
    Exponents e(t + 1, 0);
    e[i] = 1;
    return HomogeneousForm::monomial(t, e);
}

// independent oracle: the double sum evaluated term by term
mpq_class stoll_oracle(int t) {
    mpq_class s = 0;
    for (int k = 1; k <= t; ++k)
        for (int m = 1; m <= k; ++m) s += mpq_class(1, m);
    return s / 2;
}

}  // namespace

TEST_CASE("stoll numbers") {
    CHECK(stoll_number(1) == mpq_class(1, 2));
    CHECK(stoll_number(2) == mpq_class(5, 4));
    CHECK(stoll_number(3) == mpq_class(13, 6));
    for (int t = 0; t <= 8; ++t) CHECK(stoll_number(t) == stoll_oracle(t));
    CHECK(stoll_number(0) == 0);  // explicit convention
}

TEST_CASE("monomial norms") {
    CHECK(monomial_norm_sq({2, 0}) == mpq_class(1, 3));
    CHECK(monomial_norm_sq({0, 0}) == 1);
    CHECK(monomial_norm_sq({1, 1, 0}) == mpq_class(1, 12));
    // 0 < |X^I|^2 <= 1 with equality iff D = 0
    for (int t = 1; t <= 3; ++t)
        for (int d = 0; d <= 6; ++d)
            for (const auto& e : monomials(t, d)) {
                mpq_class w = monomial_norm_sq(e);
                CHECK(w > 0);
                CHECK(w <= 1);
                CHECK((w == 1) == (d == 0));
            }
}

TEST_CASE("l2 inner product") {
    auto x0 = var(1, 0), x1 = var(1, 1);
    CHECK(l2_inner_product(x0, x1) == 0);
    CHECK(l2_inner_product(x0, x0) == mpq_class(1, 2));
    CHECK(l2_inner_product(x0 + x1, x0 - x1) == 0);
    CHECK_THROWS_AS(l2_inner_product(x0, var(2, 0)), shape_error);
    CHECK(l2_norm_sq(HomogeneousForm(1, 3)) == 0);
    SplitStream rng(11, 0);
    for (int i = 0; i < 20; ++i) {
        HomogeneousForm f = random_integral_form(2, 3, 5, rng);
        CHECK((l2_norm_sq(f) == 0) == f.is_zero());
    }
}

TEST_CASE("form product") {
    auto x0 = var(1, 0), x1 = var(1, 1);
    CHECK(form_product(x0, x1) == HomogeneousForm::monomial(1, {1, 1}));
    CHECK(form_product(x0 + x1, x0 - x1) ==
          HomogeneousForm::monomial(1, {2, 0}) - HomogeneousForm::monomial(1, {0, 2}));
    auto one = HomogeneousForm::monomial(1, {0, 0});
    HomogeneousForm f = x0 + x1.scaled(3);
    CHECK(form_product(f, one) == f);
    CHECK_THROWS_AS(form_product(x0, var(2, 1)), shape_error);
}

TEST_CASE("coefficient sup bound") {
    auto x0 = var(1, 0), x1 = var(1, 1);
    CHECK(coefficient_sup_bound(x0) == doctest::Approx(0.0));
    CHECK(coefficient_sup_bound(x0 - x1) == doctest::Approx(std::log(2.0)));
    CHECK(coefficient_sup_bound(HomogeneousForm::monomial(1, {2, 0}, 3)) ==
          doctest::Approx(std::log(3.0)));
    CHECK(coefficient_sup_bound(HomogeneousForm(1, 2)) ==
          -std::numeric_limits<double>::infinity());
}

TEST_CASE("norm of products: exact binomial-level bounds") {
    // upper: |fg|^2 C(D+t,t) C(D'+t,t) <= |f|^2 |g|^2 C(D+D'+t,t)
    // lower: |fg|^2 C(D+D'+t,t) C(D+D',D) >= |f|^2 |g|^2 C(D+t,t) C(D'+t,t)
    SplitStream rng(7, 0);
    for (int t = 1; t <= 3; ++t)
        for (int trial = 0; trial < 12; ++trial) {
            int d1 = 1 + static_cast<int>(rng.next_u64() % (t < 3 ? 6 : 3));
            int d2 = 1 + static_cast<int>(rng.next_u64() % (t < 3 ? 6 : 3));
            HomogeneousForm f = random_integral_form(t, d1, 6, rng);
            HomogeneousForm g = random_integral_form(t, d2, 6, rng);
            mpq_class nf = l2_norm_sq(f), ng = l2_norm_sq(g);
            mpq_class np = l2_norm_sq(form_product(f, g));
            mpq_class cd = binomial(d1 + t, t), cd2 = binomial(d2 + t, t);
            mpq_class cs = binomial(d1 + d2 + t, t);
            CHECK(np * cd * cd2 <= nf * ng * cs);
            CHECK(np * cs * binomial(d1 + d2, d1) >= nf * ng * cd * cd2);
        }
}

TEST_CASE("sum of log norms vs sigma_t asymptotics (t=1)") {
    double sigma1 = stoll_number(1).get_d();
    for (int d = 32; d <= 128; ++d) {
        double sum = 0;
        for (const auto& e : monomials(1, d)) sum += 0.5 * log_mpq(monomial_norm_sq(e));
        CHECK(sum < 0);
        double ratio = sum / (sigma1 * d * d / 2.0);
        CHECK(ratio >= -1.25);
        CHECK(ratio <= -0.75);
    }
}

TEST_CASE("form json round trip, graded-lex order") {
    SplitStream rng(3, 0);
    for (int i = 0; i < 10; ++i) {
        HomogeneousForm f = random_integral_form(2, 4, 9, rng);
        json j = form_to_json(f);
        CHECK(form_from_json(j) == f);
        // keys in graded-lex order: lexicographically decreasing exponents
        Exponents prev;
        for (const auto& ent : j["coeffs"]) {
            Exponents e = ent[0].get<Exponents>();
            if (!prev.empty()) CHECK(e < prev);
            prev = e;
        }
    }
    // rationals as strings survive
    HomogeneousForm f(1, 2, {{{2, 0}, mpq_class(-7, 3)}, {{1, 1}, mpq_class(1, 2)}});
    CHECK(form_from_json(form_to_json(f)) == f);
}

TEST_CASE("evaluation and derivatives") {
    // f = x0^2 - 2 x0 x1: f(3, 1) = 9 - 6 = 3, df/dx0 = 2x0 - 2x1 -> 4
    HomogeneousForm f =
        HomogeneousForm::monomial(1, {2, 0}) - HomogeneousForm::monomial(1, {1, 1}, 2);
    CHECK(f.evaluate({3, 1}) == 3);
    CHECK(f.derivative_at({1, 0}, {3, 1}) == 4);
    CHECK(f.derivative_at({0, 1}, {3, 1}) == -6);
    CHECK(f.derivative_at({2, 0}, {3, 1}) == 2);
}
