#include "arlat/instances.hpp"

namespace arlat {

namespace {

long pick(SplitStream& rng, long lo, long hi) {
    return lo + static_cast<long>(rng.next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

ZVec random_primitive_point(int t, int coord_range, SplitStream& rng) {
    while (true) {
        ZVec v(t + 1);
        for (int i = 0; i <= t; ++i) v[i] = pick(rng, -coord_range, coord_range);
        if (!is_zero(v)) return primitive_part(v);
    }
}

SchemeSpec random_point_scheme(int t, int max_points, int coord_range, SplitStream& rng) {
    SchemeSpec s(t);
    int n = static_cast<int>(pick(rng, 1, max_points));
    int guard = 0;
    while (static_cast<int>(s.fat_points().size()) < n && guard++ < 200) {
        ZVec p = random_primitive_point(t, coord_range, rng);
        bool dup = false;
        for (const auto& q : s.fat_points())
            if (q.point == p) dup = true;
        if (!dup) s.add_point(std::move(p));
    }
    return s;
}

SchemeSpec random_fat_point_scheme(int t, int max_points, int max_order, int coord_range,
                                   SplitStream& rng) {
    SchemeSpec base = random_point_scheme(t, max_points, coord_range, rng);
    SchemeSpec s(t);
    for (const auto& p : base.fat_points())
        s.add_point(p.point, static_cast<int>(pick(rng, 1, max_order)));
    return s;
}

HomogeneousForm random_integral_form(int t, int d, int coeff_range, SplitStream& rng) {
    while (true) {
        auto mons = monomials(t, d);
        ZVec c(mons.size());
        for (auto& x : c) x = pick(rng, -coeff_range, coeff_range);
        if (is_zero(c)) continue;
        return HomogeneousForm::from_coefficient_vector(t, d, c).primitive();
    }
}

SchemeSpec random_mixed_scheme(int t, int max_points, int max_degree, int coord_range,
                               SplitStream& rng) {
    SchemeSpec s = random_point_scheme(t, max_points, coord_range, rng);
    int d = static_cast<int>(pick(rng, 1, max_degree));
    s.add_hypersurface(random_integral_form(t, d, coord_range, rng));
    return s;
}

MetrizedLattice random_saturated_lattice(int rank, int ambient, int entry_range,
                                         SplitStream& rng) {
    while (true) {
        std::vector<ZVec> gens;
        for (int i = 0; i < rank; ++i) {
            ZVec v(ambient);
            for (auto& x : v) x = pick(rng, -entry_range, entry_range);
            gens.push_back(std::move(v));
        }
        MetrizedLattice l = saturate(gens, ambient);
        if (l.rank() >= 1) return l;
    }
}

LinearBezoutInstance random_linear_bezout_instance(int coord_range, SplitStream& rng) {
    while (true) {
        ZVec a = random_primitive_point(2, coord_range, rng);
        ZVec b = random_primitive_point(2, coord_range, rng);
        // intersection of the lines a.x = 0 and b.x = 0 is the cross product
        ZVec cross{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                   a[0] * b[1] - a[1] * b[0]};
        if (is_zero(cross)) continue;  // proportional forms
        LinearBezoutInstance inst;
        QVec qa(3), qb(3);
        for (int i = 0; i < 3; ++i) {
            qa[i] = a[i];
            qb[i] = b[i];
        }
        inst.f = HomogeneousForm::linear(qa);
        inst.g = HomogeneousForm::linear(qb);
        inst.intersection = primitive_part(cross);
        return inst;
    }
}

SplitFormInstance random_split_binary_form(int nroots, int coord_range, SplitStream& rng) {
    SplitFormInstance inst;
    while (static_cast<int>(inst.roots.size()) < nroots) {
        ZVec r = random_primitive_point(1, coord_range, rng);
        bool dup = false;
        for (const auto& q : inst.roots)
            if (q == r) dup = true;
        if (!dup) inst.roots.push_back(std::move(r));
    }
    HomogeneousForm f = HomogeneousForm::monomial(1, {0, 0});
    for (const auto& r : inst.roots)
        f = form_product(f, HomogeneousForm::linear({mpq_class(r[1]), mpq_class(-r[0])}));
    inst.f = f.primitive();
    return inst;
}

}  // namespace arlat
