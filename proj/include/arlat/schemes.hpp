#pragma once

#include <optional>
#include <vector>

#include "arlat/forms.hpp"
#include "arlat/lattice.hpp"
#include "arlat/report.hpp"

namespace arlat {

// Rational point with an imposed vanishing order; order 1 is the reduced
// point. Coordinates are normalized primitive with positive leading entry.
struct FatPoint {
    ZVec point;
    int order = 1;

    FatPoint(ZVec p, int n);
};

// Finite union of fat points and hypersurfaces in P^t. The empty spec stands
// for P^t itself.
class SchemeSpec {
  public:
    explicit SchemeSpec(int t) : t_(t) {
        if (t < 1) throw shape_error("scheme: t must be >= 1");
    }

    int t() const { return t_; }
    const std::vector<FatPoint>& fat_points() const { return points_; }
    const std::vector<HomogeneousForm>& hypersurfaces() const { return hyps_; }
    const std::optional<std::vector<int>>& lci_witness_degrees() const { return lci_witness_; }

    void add_point(ZVec coords, int order = 1);
    void add_hypersurface(const HomogeneousForm& f);
    void set_lci_witness(std::vector<int> degrees);

    bool empty() const { return points_.empty() && hyps_.empty(); }
    size_t component_count() const { return points_.size() + hyps_.size(); }

    // sum of C(n+t-1, t) over fat points plus hypersurface degrees; 1 for P^t
    mpz_class degree() const;
    // max component dimension: t for P^t, t-1 with hypersurfaces, else 0
    int dim() const;

    SchemeSpec union_with(const SchemeSpec& other) const;
    SchemeSpec component(size_t i) const;

  private:
    int t_;
    std::vector<FatPoint> points_;
    std::vector<HomogeneousForm> hyps_;
    std::optional<std::vector<int>> lci_witness_;
};

// Saturated lattice of integral degree-D forms vanishing on X (all jets of
// order < n at each fat point, divisible by each hypersurface form), with the
// ambient L2 metric.
MetrizedLattice vanishing_lattice(const SchemeSpec& x, int d);

// H_X(D) = C(D+t, t) - rk I_X(D)
long hilbert_fn(const SchemeSpec& x, int d);

// Upper bound deg X * C(D + dim X, dim X); lower bound via the complete
// intersection witness when the spec carries one.
BoundReport check_alHilbert(const SchemeSpec& x, int d);

// Fat-point configurations in P^t: H_{V_n}(D) <= deg Y * C(n+t-1, t).
BoundReport check_alHilbinf(const SchemeSpec& y, int d);

// Integer coefficients 0 <= m_i <= n making sum m_i v_i componentwise
// nonzero, given that v_i has nonzero i-th component.
std::vector<int> combine_avoiding_zeros(const std::vector<QVec>& vectors);

struct InterpolationResult {
    HomogeneousForm form{1, 0};
    double log_norm = 0;
    double minkowski_rhs = 0;
    mpq_class norm_sq;
    std::vector<mpq_class> nonvanishing_witness;  // one exact value per component of X
    std::vector<int> combination;
};

// Finds an integral form vanishing on Y and nonzero on every component of X:
// per component a short vector of I_Y(D) cap (I_{Y u X_i}(D))^perp, combined
// with combine_avoiding_zeros.
InterpolationResult interpolate(const SchemeSpec& y, const SchemeSpec& x, int d);

struct ChainStep {
    HomogeneousForm hypersurface;
    int degree;              // D_i
    mpz_class cycle_degree;  // deg X_i
    double hilbert_ratio;    // H_Y(D_i - 1) / (deg X_i * C(D_i + t - i, t - i))
};

struct ChainResult {
    std::vector<ChainStep> steps;
    bool complete = false;
    std::string message;
};

// Desk-scale chain builder in P^2 for a reduced point set Y: H_1 = div(f_1)
// at the minimal degree with I_Y nonzero, then a coprime f_2 (exact
// coprimality certificate), degrees by Bezout.
ChainResult build_chain(const SchemeSpec& y, int degree_cap);

// Nontrivial-kernel test for a f + b g = 0: exact gcd-nontriviality
// certificate for two forms over Q.
bool forms_coprime(const HomogeneousForm& f, const HomogeneousForm& g);

}  // namespace arlat
