#pragma once

#include <map>

#include "fmk/matrix.hpp"
#include "fmk/multi_index.hpp"
#include "fmk/rational.hpp"

namespace fmk {

// A state known through its moments up to a truncation degree. Values are
// stored sparsely; absent indices are zero. Construction enforces phi[1] = 1
// and compatibility with the involution, phi[x_u] = phi[x_{reversed u}].
// Positivity is deliberately not an invariant; check_positivity tests it.
class MomentFunctional {
public:
    MomentFunctional(int d, int max_degree,
                     std::map<MultiIndex, Rational, GradedLess> values);

    int dimension() const { return d_; }
    int max_degree() const { return max_degree_; }
    const std::map<MultiIndex, Rational, GradedLess>& values() const { return values_; }

    Rational operator()(const MultiIndex& u) const;

private:
    int d_;
    int max_degree_;
    std::map<MultiIndex, Rational, GradedLess> values_;
};

// The free cumulant functional: same shape, with R[1] = 0; first-order
// values are stored explicitly (they are the means, zero for centered
// states).
class CumulantFunctional {
public:
    CumulantFunctional(int d, int max_degree,
                       std::map<MultiIndex, Rational, GradedLess> values);

    int dimension() const { return d_; }
    int max_degree() const { return max_degree_; }
    const std::map<MultiIndex, Rational, GradedLess>& values() const { return values_; }

    Rational operator()(const MultiIndex& u) const;

private:
    int d_;
    int max_degree_;
    std::map<MultiIndex, Rational, GradedLess> values_;
};

// The defining recursion: R[x_u] = phi[x_u] - sum over non-crossing
// partitions pi != 1-hat of products of lower-order cumulants over blocks.
CumulantFunctional moments_to_cumulants(const MomentFunctional& m);

// Its exact inverse: phi[x_u] = sum over all of NC(n) of block products.
MomentFunctional cumulants_to_moments(const CumulantFunctional& r);

// The free product of d one-dimensional states: mixed cumulants vanish
// and each variable keeps its own univariate cumulant sequence.
MomentFunctional free_product(const std::vector<MomentFunctional>& one_dim_factors,
                              int max_degree);

// General form used by tests and the free-multinomial cross-check: factors
// of arbitrary dimensions, concatenated into one functional in which the
// factor families are freely independent.
MomentFunctional free_product_joint(const std::vector<MomentFunctional>& factors,
                                    int max_degree);

// Free convolution power: every cumulant scales by t. Positivity of the
// result is not asserted here.
MomentFunctional boxplus_power(const MomentFunctional& m, const Rational& t);

// True iff the Gram matrix G[u,v] = phi[x_{reversed u} x_v], |u|,|v| <= k,
// is positive semidefinite (exact LDL).
bool check_positivity(const MomentFunctional& m, int k);

// True iff all moments are invariant under cyclic rotation of the index.
bool is_tracial(const MomentFunctional& m);
// Same test applied to a cumulant functional.
bool is_cyclically_invariant(const CumulantFunctional& r);

// Linear change of variables: phi^A[P(x)] = phi[P(A^T x)], expanded
// multilinearly. A must be invertible. Diagonal A gives dilations,
// orthogonal A rotations.
MomentFunctional transform(const MomentFunctional& m, const Matrix& a);

}  // namespace fmk
