#pragma once

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fmk/matrix.hpp"
#include "fmk/moment_functional.hpp"
#include "fmk/multi_index.hpp"
#include "fmk/nc_partition.hpp"
#include "fmk/rational.hpp"

namespace fmk {

// The data (C, {T_i}) of a Fock state. C is stored as the d x d table of its
// diagonal entries: C_{ij} is the eigenvalue of the two-site operator on
// e_i (x) e_j. Validation enforces
//   1 + C_{ij} >= 0,
//   each T_i symmetric,
//   (T_i)_{mk} (C_{kl} - C_{ml}) = 0  (the two-site commutation relation).
struct MeixnerData {
    int d = 0;
    Matrix C;                 // d x d table of diagonal entries
    std::vector<Matrix> T;    // d symmetric d x d matrices

    static MeixnerData validated(int d, Matrix C, std::vector<Matrix> T);

    // Throws InvariantViolation with a message naming the failed inequality.
    void check() const;
};

// Formal linear combination of basis words e_u with |u| <= level_cap;
// the empty word is the vacuum.
class FockVector {
public:
    FockVector(int d, int level_cap) : d_(d), level_cap_(level_cap) {}
    static FockVector vacuum(int d, int level_cap);
    static FockVector basis_word(int d, int level_cap, const MultiIndex& u);

    int dimension() const { return d_; }
    int level_cap() const { return level_cap_; }
    const std::map<MultiIndex, Rational, GradedLess>& terms() const { return terms_; }

    Rational coefficient(const MultiIndex& u) const;
    void add_term(const MultiIndex& u, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    FockVector& operator+=(const FockVector& o);
    FockVector scaled(const Rational& s) const;

private:
    int d_;
    int level_cap_;
    std::map<MultiIndex, Rational, GradedLess> terms_;
};

enum class LetterKind { create, annihilate, tee, tilde };

struct Letter {
    LetterKind kind;
    int index;  // 1..d

    bool operator==(const Letter& o) const { return kind == o.kind && index == o.index; }
};

// A word of operator letters at positions 1..n; position n acts on the
// vacuum first, position 1 acts last.
using LetterWord = std::vector<Letter>;

std::string letter_to_string(const Letter& l);
std::string word_to_string(const LetterWord& w);
LetterWord word_from_string(const std::string& text);

// One operator letter applied to a vector:
//   create      e_u -> e_{(i,u)}                      (cap error at the top level)
//   annihilate  e_u -> delta_{i,u(1)} e_{(u(2),...)},  vacuum -> 0
//   tee         T_i on the first slot, vacuum -> 0
//   tilde       e_u -> delta_{i,u(1)} C_{u(1),u(2)} e_{(u(2),...)} for |u| >= 2,
//               zero on the vacuum and on level one
FockVector apply(const MeixnerData& data, const Letter& l, const FockVector& v);

// Applies X_i = a_i^+ + a_i^- + T_i + a~_i.
FockVector apply_x(const MeixnerData& data, int i, const FockVector& v);
// Applies S_i = a_i^+ + T_i + a~_i = X_i - a_i^-.
FockVector apply_s(const MeixnerData& data, int i, const FockVector& v);
// Applies X_i^(t) = a_i^+ + T_i + t a_i^- + a~_i (free convolution power model).
FockVector apply_x_t(const MeixnerData& data, int i, const Rational& t, const FockVector& v);

// phi[x_u]: the vacuum coefficient of X_{u(1)} ... X_{u(n)} applied to the
// vacuum. Works at level cap |u|.
Rational fock_moment(const MeixnerData& data, const MultiIndex& u);

// All moments with |u| <= max_degree, sharing suffix vectors across indices.
MomentFunctional fock_moment_table(const MeixnerData& data, int max_degree);

// R[x_u] for |u| >= 2: the coefficient of e_{u(1)} in
// S_{u(2)} ... S_{u(n-1)} e_{u(n)}; delta for |u| = 2.
Rational fock_cumulant(const MeixnerData& data, const MultiIndex& u);

// All cumulants with 1 <= |u| <= max_degree (first order is zero).
CumulantFunctional fock_cumulant_table(const MeixnerData& data, int max_degree);

// <e_u, e_v> under the kernel inner product:
// delta_{u,v} * prod_j (1 + C_{u(j),u(j+1)}).
Rational gram_inner(const MeixnerData& data, const MultiIndex& u, const MultiIndex& v);

// Vacuum coefficient of the word applied right to left to the vacuum.
Rational word_value(const MeixnerData& data, const LetterWord& w);

enum class WordClass { W, Wprime };

inline constexpr int kDefaultWordCap = 12;

// All letter words over the index pattern u that can reach the vacuum with a
// nonzero value: the walk-shape conditions (never annihilate below the
// vacuum, end balanced, return steps to the vacuum only by a plain
// annihilator). Wprime additionally requires the only plain annihilator to
// sit at position 1 and position n to create.
std::vector<LetterWord> enumerate_words(const MultiIndex& u, WordClass cls,
                                        int cap = kDefaultWordCap);

// The partition-to-word map: pi in NC_0 of {1..n} (blocks V_j), sigmas[j] in
// NC_0'(V_j). Letter at position i:
//   a^+  if i = max of its sigma-block,
//   a^-  if i = min of its pi-block,
//   a~   if i = min of its sigma-block but not of its pi-block,
//   T    otherwise.
LetterWord beta(const MultiIndex& u, const NcPartition& pi,
                const std::vector<NcPartition>& sigmas);

// Inverse of beta on the word class W_n(u): recover the pair partition by
// stack matching right to left, attach every position to its innermost
// enclosing plain-annihilator arc to get pi, and within each block to its
// innermost enclosing arc to get sigma. Throws if w is not in the class.
std::pair<NcPartition, std::vector<NcPartition>> beta_inverse(const MultiIndex& u,
                                                              const LetterWord& w);

// Theta(sigma; V, u) = vacuum value of beta((V), sigma). sigma carries its
// ground set V; u lists the letter indices of V's elements in order. When
// C is a constant matrix the closed-form product formula is evaluated too
// and the two must agree (checked, throws on mismatch).
Rational theta(const MeixnerData& data, const NcPartition& sigma, const MultiIndex& u);

// A rational m with m > max(|C|_inf, max_i |T_i|_inf); the moment growth
// bound |phi[x_u]| < (16 m)^{|u|} is checked against it.
Rational growth_bound_base(const MeixnerData& data);

// Seeded generator of valid data used by the randomized suites. Draws one of
// four shapes, all of which satisfy the commutation relation by construction:
//   0: constant C_{ij} = c with random symmetric T_i (entries in -2..2),
//   1: C = 0 with random symmetric T_i,
//   2: C_{ij} = delta_{ij} c_i with T_i = b_i E_{ii},
//   3: C_{ij} = c_i with T_i = b_i I,
// where every c lies in {-1, -1/2, 0, 1/2, 1, 2} and every b in -2..2.
MeixnerData random_meixner_data(std::mt19937_64& rng, int d);

}  // namespace fmk
