#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "arlat/instances.hpp"
#include "arlat/io.hpp"
#include "arlat/lattice.hpp"

using namespace arlat;

namespace {

ZVec zv(std::initializer_list<long> xs) {
    ZVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// independent oracle: complete box enumeration of coefficient vectors
// |y_i| <= ceil(2 e^bound |dual_i|), exact minimum squared length
mpq_class brute_force_min_sq(const MetrizedLattice& l) {
    size_t r = l.rank();
    QMat ginv = inverse(l.gram());
    double radius = 2.0 * std::exp(minkowski_bound(l));
    std::vector<long> box(r);
    for (size_t i = 0; i < r; ++i)
        box[i] = static_cast<long>(std::ceil(radius * std::sqrt(ginv[i][i].get_d()))) + 1;
    mpq_class best = -1;
    std::vector<long> y(r, 0);
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == r) {
            bool zero = std::all_of(y.begin(), y.end(), [](long v) { return v == 0; });
            if (zero) return;
            mpq_class n = 0;
            for (size_t a = 0; a < r; ++a)
                for (size_t b = 0; b < r; ++b)
                    if (y[a] && y[b]) n += mpq_class(y[a]) * mpq_class(y[b]) * l.gram()[a][b];
            if (best < 0 || n < best) best = n;
            return;
        }
        for (long v = -box[i]; v <= box[i]; ++v) {
            y[i] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return best;
}

}  // namespace

TEST_CASE("saturate") {
    auto l = saturate({zv({2, 0})}, 2);
    CHECK(l.rank() == 1);
    CHECK(l.basis()[0] == zv({1, 0}));

    auto l2 = saturate({zv({1, 1}), zv({1, -1})}, 2);
    CHECK(l2.rank() == 2);
    CHECK(l2.basis() == z_identity(2));  // index-1 lattice is all of Z^2

    CHECK(saturate({}, 3).rank() == 0);

    // saturation divides out finite index: <(2,0),(0,3)> saturates to Z^2
    auto l3 = saturate({zv({2, 0}), zv({0, 3})}, 2);
    CHECK(l3.basis() == z_identity(2));
}

TEST_CASE("saturate is idempotent and order independent") {
    SplitStream rng(5, 0);
    for (int trial = 0; trial < 25; ++trial) {
        int ambient = 3 + static_cast<int>(rng.next_u64() % 6);
        int count = 1 + static_cast<int>(rng.next_u64() % 4);
        std::vector<ZVec> gens;
        for (int i = 0; i < count; ++i) {
            ZVec v(ambient);
            for (auto& x : v) x = static_cast<long>(rng.next_u64() % 15) - 7;
            gens.push_back(v);
        }
        auto a = saturate(gens, ambient);
        std::reverse(gens.begin(), gens.end());
        auto b = saturate(gens, ambient);
        CHECK(a.basis() == b.basis());
        std::vector<ZVec> again(a.basis().begin(), a.basis().end());
        CHECK(saturate(again, ambient).basis() == a.basis());
    }
}

TEST_CASE("arith degree") {
    MetrizedLattice z2(2, AmbientMetric::identity(2), z_identity(2));
    CHECK(arith_degree(z2).degree == doctest::Approx(0.0));

    MetrizedLattice forms(2, AmbientMetric::l2_forms(1, 1), z_identity(2));
    CHECK(arith_degree(forms).det_gram == mpq_class(1, 4));
    CHECK(arith_degree(forms).degree == doctest::Approx(std::log(2.0)));

    MetrizedLattice two_z(1, AmbientMetric::identity(1), {zv({2})});
    CHECK(arith_degree(two_z).degree == doctest::Approx(-std::log(2.0)));

    CHECK(arith_degree(saturate({}, 2)).degree == 0.0);
}

TEST_CASE("quotient lattice") {
    MetrizedLattice e(2, AmbientMetric::identity(2), z_identity(2));

    MetrizedLattice f1(2, AmbientMetric::identity(2), {zv({1, 0})});
    auto q1 = quotient_lattice(e, f1);
    CHECK(q1.rank() == 1);
    CHECK(arith_degree(q1).degree == doctest::Approx(0.0));

    MetrizedLattice f2(2, AmbientMetric::identity(2), {zv({1, 1})});
    auto q2 = quotient_lattice(e, f2);
    CHECK(q2.gram()[0][0] == mpq_class(1, 2));
    CHECK(arith_degree(q2).degree == doctest::Approx(0.5 * std::log(2.0)));

    CHECK(quotient_lattice(e, e).rank() == 0);

    MetrizedLattice outside(2, AmbientMetric::identity(2), {zv({1, 0}), zv({0, 3})});
    CHECK_THROWS_AS(quotient_lattice(outside, e), containment_error);
    MetrizedLattice unsat(2, AmbientMetric::identity(2), {zv({2, 0})});
    CHECK_THROWS_AS(quotient_lattice(e, unsat), saturation_error);
}

TEST_CASE("orthogonal complement lattice") {
    MetrizedLattice e(2, AmbientMetric::identity(2), z_identity(2));
    MetrizedLattice f1(2, AmbientMetric::identity(2), {zv({1, 0})});
    auto g1 = orth_complement_lattice(e, f1);
    CHECK(g1.basis()[0] == zv({0, 1}));
    CHECK(arith_degree(g1).degree == doctest::Approx(0.0));

    MetrizedLattice f2(2, AmbientMetric::identity(2), {zv({1, 1})});
    auto g2 = orth_complement_lattice(e, f2);
    CHECK(g2.basis()[0] == zv({1, -1}));
    CHECK(arith_degree(g2).degree == doctest::Approx(-0.5 * std::log(2.0)));

    auto g3 = orth_complement_lattice(e, saturate({}, 2));
    CHECK(g3.rank() == 2);
}

TEST_CASE("multiplicativity and eq orth on random chains") {
    SplitStream rng(17, 0);
    for (int trial = 0; trial < 100; ++trial) {
        int ambient = 4 + static_cast<int>(rng.next_u64() % 5);
        int re = 2 + static_cast<int>(rng.next_u64() % std::min(ambient - 1, 7));
        MetrizedLattice e = random_saturated_lattice(re, ambient, 10, rng);
        if (e.rank() < 2) continue;
        // F = saturation of a random combination of E's basis vectors
        std::vector<ZVec> combo;
        size_t fcount = 1 + rng.next_u64() % (e.rank() - 1);
        for (size_t i = 0; i < fcount; ++i) {
            ZVec v(ambient, 0);
            for (size_t k = 0; k < e.rank(); ++k) {
                long c = static_cast<long>(rng.next_u64() % 5) - 2;
                for (int j = 0; j < ambient; ++j) v[j] += c * e.basis()[k][j];
            }
            combo.push_back(v);
        }
        MetrizedLattice f = saturate(combo, ambient);
        if (f.rank() == 0 || f.rank() >= e.rank()) continue;

        MetrizedLattice q = quotient_lattice(e, f);
        // exact determinant multiplicativity
        CHECK(e.gram_det() == f.gram_det() * q.gram_det());
        // eq orth: deg G <= deg quotient, i.e. det G >= det quotient
        MetrizedLattice g = orth_complement_lattice(e, f);
        CHECK(g.gram_det() >= q.gram_det());
    }
}

TEST_CASE("minkowski bound") {
    MetrizedLattice z2(2, AmbientMetric::identity(2), z_identity(2));
    CHECK(minkowski_bound(z2) == doctest::Approx(0.5 * std::log(2.0)));

    MetrizedLattice forms(2, AmbientMetric::l2_forms(1, 1), z_identity(2));
    CHECK(minkowski_bound(forms) == doctest::Approx(0.0));

    MetrizedLattice rank1(2, AmbientMetric::identity(2), {zv({3, 4})});
    CHECK(minkowski_bound(rank1) == doctest::Approx(std::log(5.0)));

    CHECK_THROWS_AS(minkowski_bound(saturate({}, 2)), precondition_error);
}

TEST_CASE("short vector: examples") {
    MetrizedLattice z2(2, AmbientMetric::identity(2), z_identity(2));
    auto sv = short_vector(z2);
    CHECK(sv.length_sq == 1);
    CHECK(sv.log_length <= minkowski_bound(z2) + 1e-12);

    MetrizedLattice skew(2, AmbientMetric::identity(2), {zv({1, 0}), zv({0, 2})});
    auto sv2 = short_vector(skew);
    CHECK(sv2.vector == zv({1, 0}));
    CHECK(sv2.log_length == doctest::Approx(0.0));
    CHECK(minkowski_bound(skew) == doctest::Approx(std::log(2.0)));

    MetrizedLattice forms(2, AmbientMetric::l2_forms(1, 1), z_identity(2));
    auto sv3 = short_vector(forms);
    CHECK(sv3.length_sq == mpq_class(1, 2));
    CHECK(sv3.log_length == doctest::Approx(-0.5 * std::log(2.0)));
    CHECK(sv3.log_length <= 0.0 + 1e-12);
}

TEST_CASE("short vector: exact certificate and oracle equivalence") {
    SplitStream rng(23, 0);
    for (int trial = 0; trial < 60; ++trial) {
        int ambient = 3 + static_cast<int>(rng.next_u64() % 6);
        int rank = 1 + static_cast<int>(rng.next_u64() % 4);
        MetrizedLattice l = random_saturated_lattice(rank, ambient, 9, rng);
        auto sv = short_vector(l);
        size_t r = l.rank();
        // certificate, exact: (|v|^2)^r <= r^r det
        mpq_class lhs = pow_q(sv.length_sq, static_cast<unsigned long>(r));
        mpq_class rhs = l.gram_det();
        for (size_t i = 0; i < r; ++i) rhs *= static_cast<unsigned long>(r);
        CHECK(lhs <= rhs);
        // the vector really lies in the lattice and has the claimed length
        CHECK(l.contains_vector(sv.vector));
        CHECK(l.metric().ip(sv.vector, sv.vector) == sv.length_sq);
        // oracle equivalence at rank <= 4 with identity metric
        CHECK(sv.length_sq == brute_force_min_sq(l));
    }
}

TEST_CASE("short vector: deterministic") {
    SplitStream rng(29, 0);
    MetrizedLattice l = random_saturated_lattice(4, 7, 9, rng);
    auto a = short_vector(l);
    auto b = short_vector(l);
    CHECK(a.vector == b.vector);
    CHECK(a.method == b.method);
}

TEST_CASE("lll reduces a classic basis") {
    // the standard 2d example: (201, 37), (1648, 297) has shortest vector far
    // below the inputs
    ZMat basis{zv({201, 37}), zv({1648, 297})};
    lll_reduce(basis, AmbientMetric::identity(2));
    auto norm = [](const ZVec& v) { return v[0] * v[0] + v[1] * v[1]; };
    CHECK(norm(basis[0]) <= 2500);
}

TEST_CASE("lattice json round trip") {
    SplitStream rng(31, 0);
    MetrizedLattice l = random_saturated_lattice(3, 6, 8, rng);
    MetrizedLattice back = lattice_from_json(lattice_to_json(l));
    CHECK(back.basis() == l.basis());
    CHECK(back.ambient_dim() == l.ambient_dim());

    MetrizedLattice forms(3, AmbientMetric::l2_forms(1, 2), {zv({0, 1, 0}), zv({0, 0, 1})});
    MetrizedLattice back2 = lattice_from_json(lattice_to_json(forms));
    CHECK(back2.gram() == forms.gram());
    CHECK(back2.metric().l2_forms_tag == forms.metric().l2_forms_tag);
}
