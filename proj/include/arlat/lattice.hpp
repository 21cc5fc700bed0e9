#pragma once

#include <optional>
#include <string>

#include "arlat/linalg.hpp"

namespace arlat {

// Positive-definite rational inner product on the ambient Z^N.
struct AmbientMetric {
    enum class Kind { identity, diagonal, dense };

    Kind kind = Kind::identity;
    int dim = 0;
    QVec diag;
    QMat dense;
    // set when the diagonal is the L2 monomial metric of Gamma(P^t, O(d))
    std::optional<std::pair<int, int>> l2_forms_tag;

    static AmbientMetric identity(int n);
    static AmbientMetric diagonal(QVec w);
    static AmbientMetric dense_gram(QMat g);
    static AmbientMetric l2_forms(int t, int d);

    mpq_class ip(const ZVec& x, const ZVec& y) const;
    QMat gram_of(const ZMat& basis) const;
    // lcm of all denominators; scaling by it makes every ip integral
    mpz_class denominator_lcm() const;
};

// Integer lattice of rank r inside (Q^N, metric); basis rows are stored
// HNF-reduced, the Gram matrix is cached exactly.
class MetrizedLattice {
  public:
    MetrizedLattice(int ambient_dim, AmbientMetric metric, ZMat basis);

    int ambient_dim() const { return ambient_dim_; }
    size_t rank() const { return basis_.size(); }
    const AmbientMetric& metric() const { return metric_; }
    const ZMat& basis() const { return basis_; }
    const QMat& gram() const { return gram_; }

    mpq_class gram_det() const;
    bool contains_vector(const ZVec& v) const;
    // integer coordinates of the rows of other w.r.t. this basis, if contained
    std::optional<ZMat> coordinates_of(const ZMat& vectors) const;
    bool contains_lattice(const MetrizedLattice& other) const;
    bool same_lattice(const MetrizedLattice& other) const;

  private:
    int ambient_dim_;
    AmbientMetric metric_;
    ZMat basis_;
    QMat gram_;
};

struct DegreeValue {
    mpq_class det_gram;
    double degree;
};

struct ShortVectorCertificate {
    ZVec vector;
    double log_length;
    double minkowski_rhs;
    mpq_class length_sq;
    std::string method;  // "lll" or "enumeration"
};

// (Q-span of the input) intersected with Z^N, HNF basis. Deterministic.
MetrizedLattice saturate(const std::vector<ZVec>& vectors, int ambient_dim,
                         const AmbientMetric& metric);
MetrizedLattice saturate(const std::vector<ZVec>& vectors, int ambient_dim);

DegreeValue arith_degree(const MetrizedLattice& l);

// Metrized quotient E/F: complementary basis vectors of E projected
// orthogonally off F (Schur complement Gram). deg E = deg F + deg(E/F).
MetrizedLattice quotient_lattice(const MetrizedLattice& e, const MetrizedLattice& f);

// G = E cap F^perp (integer vectors of E orthogonal to F under the metric).
MetrizedLattice orth_complement_lattice(const MetrizedLattice& e, const MetrizedLattice& f);

// -(1/r) deg + (1/2) log r
double minkowski_bound(const MetrizedLattice& l);

// Shortest nonzero vector: LLL (delta = 99/100, exact arithmetic) followed by
// exact enumeration inside the LLL ball; certificate checked exactly via
// (|v|^2)^r <= r^r det(Gram).
ShortVectorCertificate short_vector(const MetrizedLattice& l);

// Exact LLL with delta = 99/100 on basis rows under the metric. Returns the
// unimodular transform U with new = U * old.
ZMat lll_reduce(ZMat& basis, const AmbientMetric& metric);

}  // namespace arlat
