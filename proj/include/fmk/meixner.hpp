#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fmk/fock.hpp"
#include "fmk/moment_functional.hpp"
#include "fmk/ncpoly.hpp"

namespace fmk {

// Monic orthogonal polynomial family indexed by multi-indices up to a degree.
struct MopsFamily {
    int d = 0;
    int degree = 0;
    std::map<MultiIndex, NcPolynomial, GradedLess> polys;  // includes the empty index -> 1

    const NcPolynomial& at(const MultiIndex& u) const;
};

// One named check with an optional witness (a multi-index pair, a matrix
// entry, ...) describing the first failure.
struct CheckItem {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

// The constant-coefficient recursion, with B_{ij}^k read off as (T_i)_{kj}:
//   P_empty = 1,  P_i = x_i,
//   P_{(i,j)}   = x_i P_j - sum_k B_{ij}^k P_k - delta_{ij},
//   P_{(i,j,u)} = x_i P_{(j,u)} - sum_k B_{ij}^k P_{(k,u)}
//                 - delta_{ij} (1 + C_{i,u(1)}) P_u.
MopsFamily mops_from_data(const MeixnerData& data, int N);

// Checks phi[P_u^* P_v] = 0 for u != v, phi[P_u^* P_u] = gram_inner(u,u),
// and P_u(X) applied to the vacuum = e_u, for |u|,|v| <= N.
CheckReport verify_orthogonality(const MeixnerData& data, const MopsFamily& fam, int N);

// Evaluates a polynomial at the operator tuple, acting on a vector.
FockVector evaluate_at_operators(const MeixnerData& data, const NcPolynomial& p,
                                 const FockVector& v);

// The cumulant generating series of the data up to max_degree.
NcSeries cumulant_series(const MeixnerData& data, int max_degree);

// LHS - RHS of
//   D_i D_j R = delta_ij + sum_k B_{ij}^k D_k R + C_{ij} (D_i R)(D_j R),
// truncated at degree N; identically zero for valid data.
NcSeries pde_residual(const MeixnerData& data, int i, int j, int N);

// Coefficient-by-coefficient comparison of the resolvent generating function
//   (1 - x . (DR)^{<-1>}(z) + R((DR)^{<-1>}(z)))^{-1}
// against the recursion family, for all |u| <= N. Also reconstructs the
// (F, U) form: F = (1 + R(h))^{-1} must be 1 + (degree >= 2), U_i = h_i F
// must have identity linear part, and F (1 - x.U)^{-1} must reproduce the
// same family.
CheckReport generating_function_check(const MeixnerData& data, int N);

// Orthogonalization of monomials against an arbitrary moment functional in
// graded-lex order. Lower-degree projections always exist (zero-seminorm
// directions are skipped and reported); a MOPS exists iff the candidates of
// equal degree come out pairwise orthogonal. On success the level-dependent
// recursion data is extracted by inner products:
//   x_i P_u = P_{(i,u)} + sum_{|w|=|u|} B[i,w,u] P_w
//             + delta_{i,u(1)} Cu[u] P_{(u(2),...)},
// plus a flag for cross terms that violate this shape.
struct GramSchmidtOracle {
    bool mops_exists = true;
    std::string obstruction;            // first failing pair, when not
    MopsFamily family;                  // candidates up to N (even on failure)
    std::vector<MultiIndex> degenerate; // zero-seminorm directions, excluded
    // B keyed by (i, w, u) with |w| = |u| <= N (top level needs 2N+1 moments);
    // Cu keyed by the full index u of x_{u(1)} P_{(u(2),...)}, 2 <= |u| <= N.
    std::map<std::tuple<int, MultiIndex, MultiIndex>, Rational> B;
    std::map<MultiIndex, Rational, GradedLess> Cu;
    bool shape_ok = true;               // no coefficients outside the recursion shape
    std::string shape_witness;

    // True iff the extracted data collapses to constant coefficients:
    // B[i,(k,u),(j,w)] = B0[i](k,j) delta_{u,w} and Cu[(i,j,u)] = Cpair(i,j),
    // returning those tables.
    bool collapsed(Matrix* Cpair, std::vector<Matrix>* B0, std::string* witness) const;
};

GramSchmidtOracle gram_schmidt_oracle(const MomentFunctional& m, int N);

// Vacuum moment of the operators X_i^(t); equals the cumulant-scaling route.
Rational boxplus_fock_moment(const MeixnerData& data, const Rational& t,
                             const MultiIndex& u);

// The two matrix identities necessary for traciality,
//   T_i e_j = T_j e_i,
//   T_i T_j - T_j T_i = C_{ji} E_{ij} - C_{ij} E_{ji},
// plus a brute cyclic-invariance check of the moments to length 6. The
// report flags any disagreement between the matrix verdict and the cyclic
// verdict (the identities are necessary always, sufficient for constant C).
CheckReport tracial_conditions(const MeixnerData& data, int cyclic_length = 6);

// Finds, for tracial data with C diagonal as a d x d matrix, the rotation
// taking the data to free-product form T_{f_j} = alpha_j E_{f_j f_j}. The
// eigen-decomposition runs over the rationals only; irrational eigenvalues
// or non-square norms yield the partial verdict without a matrix.
struct ProductDetection {
    enum class Verdict { already_product, rotation_found, rotation_irrational };
    Verdict verdict = Verdict::already_product;
    Matrix rotation;               // orthogonal O with columns f_j (when found)
    std::vector<Rational> alpha;   // T_{f_j} = alpha_j E_{f_j f_j}
    std::string note;
};

ProductDetection free_product_detector(const MeixnerData& data);

// Dilated-recursion check, exactly as displayed:
//   x_i Q_{(j,u)} = Q_{(i,j,u)} + sum_k t_i B_{ij}^k Q_{(k,u)}
//                   + delta_ij t_i^2 (1 + C_{i,u(1)}) Q_u
// for Q_u(x) = t_u P_u(x/t). Valid whenever B_{ij}^k != 0 implies t_j = t_k
// (in particular for equal dilation factors or diagonal T).
CheckReport dilated_recursion_check(const MeixnerData& data,
                                    const std::vector<Rational>& t, int N);

}  // namespace fmk
