#pragma once

#include <complex>

#include "arlat/report.hpp"
#include "arlat/schemes.hpp"

namespace arlat {

struct HeightEstimate {
    double value = 0;
    double stderr_ = 0;
    long samples = 0;
    bool exact = false;
    uint64_t seed = 0;
    bool normalized_input = false;  // set when a non-primitive input was normalized

    json to_json() const {
        return json{{"value", value},   {"stderr", stderr_}, {"samples", samples},
                    {"exact", exact},   {"seed", seed}};
    }
};

// log euclidean norm of a primitive integer point; exact.
HeightEstimate point_height(const ZVec& v);

// Monte-Carlo estimate of int_{P^t} log(|f(z)| / |z|^D) d mu^t by uniform
// sampling on the unit sphere of C^{t+1}; seed-deterministic.
HeightEstimate fs_log_integral(const HomogeneousForm& f, long samples, uint64_t seed);

// h(div f) = D sigma_t + int log |f| mu^t for a primitive integral form.
HeightEstimate divisor_height(const HomogeneousForm& f, long samples, uint64_t seed);

// Exact height of a split squarefree binary form as the sum of the heights
// of its supplied roots; the factorization is verified exactly.
HeightEstimate split_divisor_height_oracle(const HomogeneousForm& f,
                                           const std::vector<ZVec>& roots);

// One proper-intersection cycle for the Bezout checker.
struct IntersectionPoint {
    ZVec point;
    int multiplicity = 1;
};

// h(X.Y) <= deg Y h(X) + deg X h(Y) + ((t+1-p-q)/2) log 2 deg X deg Y on
// desk-scale instances: coordinate/linear hypersurfaces and point cycles in
// P^t (t <= 2) and coprime binary-form pairs on P^1 (the intersection cycle
// is then the resultant and the list must be empty).
BoundReport bezout_check(const SchemeSpec& x, const SchemeSpec& y,
                         const std::vector<IntersectionPoint>& intersection, long samples,
                         uint64_t seed, double tolerance_sigma = 3.0);

// X the coordinate subspace {x_j = 0 : j in zeroed_vars}; checks the sharp
// Bezout inequality with the exact orthogonal projection of f off I_X(D) and
// reports the empirical constant.
BoundReport sharp_bezout_check(const std::vector<int>& zeroed_vars, const HomogeneousForm& f,
                               long samples, uint64_t seed);

struct TranscendenceProfile {
    std::complex<double> theta0;
    std::complex<double> theta1;
    int degree_d = 0;
    double budget_h = 0;
    double achieved = 0;
    double rhs_paper = 0;
    bool non_generic = false;
    HomogeneousForm witness_form{1, 0};
    double witness_log_norm = 0;
};

std::pair<std::complex<double>, std::complex<double>> random_unit_theta(uint64_t seed);

// Lattice search over Gamma(D, H) = {integral f : log |f|_L2 <= H} for small
// |f(theta)| on P^1; achieved = -log |f(theta)| for the best witness found.
TranscendenceProfile transcendence_profile(std::complex<double> theta0,
                                           std::complex<double> theta1, int d, double h,
                                           uint64_t seed);

}  // namespace arlat
