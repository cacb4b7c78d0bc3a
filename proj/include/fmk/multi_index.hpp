#pragma once

#include <string>
#include <vector>

#include "fmk/errors.hpp"

namespace fmk {

// A multi-index is a finite word over the alphabet {1,...,d}; it labels the
// non-commutative monomial x_{u(1)} x_{u(2)} ... x_{u(k)}. The empty word
// labels the constant monomial. The dimension d is carried by the containers
// (polynomials, functionals), not by the index itself.
using MultiIndex = std::vector<int>;

inline std::size_t length(const MultiIndex& u) { return u.size(); }

inline MultiIndex concat(const MultiIndex& u, const MultiIndex& v) {
    MultiIndex r = u;
    r.insert(r.end(), v.begin(), v.end());
    return r;
}

inline MultiIndex reversed(const MultiIndex& u) {
    return MultiIndex(u.rbegin(), u.rend());
}

// Sub-multi-index picked out by 1-based positions (which must be increasing).
inline MultiIndex restrict_to(const MultiIndex& u, const std::vector<int>& positions) {
    MultiIndex r;
    r.reserve(positions.size());
    for (int p : positions) {
        if (p < 1 || static_cast<std::size_t>(p) > u.size())
            throw Error("restrict_to: position out of range");
        r.push_back(u[static_cast<std::size_t>(p) - 1]);
    }
    return r;
}

inline MultiIndex rotated_left(const MultiIndex& u) {
    if (u.size() < 2) return u;
    MultiIndex r(u.begin() + 1, u.end());
    r.push_back(u.front());
    return r;
}

inline void check_entries(const MultiIndex& u, int d) {
    for (int e : u)
        if (e < 1 || e > d) throw DimensionMismatch("multi-index entry out of 1..d");
}

// Graded order: shorter words first, lexicographic within a length. This is
// the order used for deterministic serialization and Gram matrices.
struct GradedLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

// Canonical text form "1,2,1"; the empty word prints as "".
std::string multi_index_to_string(const MultiIndex& u);
MultiIndex multi_index_from_string(const std::string& text);

// All d^n multi-indices of exact length n, in lexicographic order.
std::vector<MultiIndex> all_indices_of_length(int d, int n);

// All multi-indices of length min_len..max_len, in graded order.
std::vector<MultiIndex> all_indices_up_to(int d, int max_len, int min_len = 0);

}  // namespace fmk
