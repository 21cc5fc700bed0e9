#pragma once

#include "arlat/schemes.hpp"

namespace arlat {

struct ArithHilbertValue {
    int t = 0;
    int degree_d = 0;
    std::string metric_kind;  // "l2_ambient_quotient" or "l2_on_X"
    double value = 0;
    mpq_class det_gram = 1;  // value = -1/2 log det_gram
};

// deg of Gamma(P^t, O(D)) with the L2 monomial metric:
// -sum_I log |X^I| = 1/2 sum_I log C(D+t, I).
ArithHilbertValue arith_hilbert_ambient(int t, int d);

// deg of the quotient E_D / I_X(D) carrying the projected L2 metric;
// satisfies the exact identity  ambient = deg I_X(D) + value.
ArithHilbertValue arith_hilbert(const SchemeSpec& x, int d);

// deg of F_X(D) with the evaluation metric sum_x f(x) g(x) / |x|^{2D};
// reduced rational points only.
ArithHilbertValue arith_hilbert_on_x(const SchemeSpec& x, int d);

// Exact heights of the points of a reduced scheme: sum of (1/2) log |v|^2.
double scheme_point_height_sum(const SchemeSpec& x);

BoundReport check_arHilbert_part1(const SchemeSpec& x, int d);

// Hard exact part: additivity identity and deg G_X(D) <= H_X(D) (the
// orthogonal-complement inequality); constant-bearing outer bounds are
// reported as an empirical constant c_hat with |c_hat| <= 10 asserted.
BoundReport check_arHilbert_parts23(const SchemeSpec& x, int d);

// -deg(I_Y cap I_X^perp) <= -deg I_Y - deg I_X + 2 ambient, for Y inside X.
BoundReport check_3bew(const SchemeSpec& y, const SchemeSpec& x, int d);

// H_Y(D) >= 0, decided at the exact determinant level.
BoundReport check_mlnull(const SchemeSpec& y, int d);

}  // namespace arlat
