#pragma once

#include <map>
#include <utility>
#include <vector>

#include "fmk/multi_index.hpp"
#include "fmk/rational.hpp"

namespace fmk {

template <class K>
class NcPolynomialT;

// Coefficient-ring hooks. K must support +=, -, *, ==; these supply the
// constants, the zero test, and inversion of units (needed by series
// inversion). Never construct ring constants as K(0)/K(1): for nested
// polynomial coefficients an integer argument is a dimension, not a value.
template <class K>
struct CoefficientTraits;

template <>
struct CoefficientTraits<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static Rational negate(const Rational& c) { return -c; }
    static Rational invert_unit(const Rational& c) {
        if (sgn(c) == 0) throw Error("inverting zero scalar");
        return Rational(1) / c;
    }
};

// ---------------------------------------------------------------------------
// Polynomials in d non-commuting variables over K, sparse on monomials.
// Dimension 0 marks a value holding at most a constant term; such values are
// dimension-agnostic and binary operations let the concrete dimension win.
// ---------------------------------------------------------------------------
template <class K>
class NcPolynomialT {
public:
    using TermMap = std::map<MultiIndex, K>;

    NcPolynomialT() : d_(0) {}
    explicit NcPolynomialT(int d) : d_(d) {}

    static NcPolynomialT monomial(int d, const MultiIndex& u, K coeff) {
        check_entries(u, d);
        NcPolynomialT p(d);
        if (!CoefficientTraits<K>::is_zero(coeff)) p.terms_[u] = std::move(coeff);
        return p;
    }
    static NcPolynomialT constant(int d, K c) { return monomial(d, {}, std::move(c)); }
    static NcPolynomialT variable(int d, int i) {
        return monomial(d, MultiIndex{i}, CoefficientTraits<K>::one());
    }

    int dimension() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {  // degree of 0 is -1
        int deg = -1;
        for (const auto& [u, c] : terms_) deg = std::max<int>(deg, (int)u.size());
        return deg;
    }

    K coefficient(const MultiIndex& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? CoefficientTraits<K>::zero() : it->second;
    }

    void add_term(const MultiIndex& u, const K& c) {
        if (CoefficientTraits<K>::is_zero(c)) return;
        if (!u.empty() && d_ == 0)
            throw DimensionMismatch("term with variables in a dimension-0 polynomial");
        check_entries(u, d_);
        auto [it, inserted] = terms_.emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (CoefficientTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    NcPolynomialT& operator+=(const NcPolynomialT& o) {
        adopt_dimension(o);
        for (const auto& [u, c] : o.terms_) add_term(u, c);
        return *this;
    }
    NcPolynomialT& operator-=(const NcPolynomialT& o) {
        adopt_dimension(o);
        for (const auto& [u, c] : o.terms_) add_term(u, CoefficientTraits<K>::negate(c));
        return *this;
    }
    friend NcPolynomialT operator+(NcPolynomialT a, const NcPolynomialT& b) { return a += b; }
    friend NcPolynomialT operator-(NcPolynomialT a, const NcPolynomialT& b) { return a -= b; }

    friend NcPolynomialT operator*(const NcPolynomialT& a, const NcPolynomialT& b) {
        NcPolynomialT out(merged_dimension(a.d_, b.d_));
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) out.add_term(concat(u, v), cu * cv);
        return out;
    }

    NcPolynomialT scaled(const K& s) const {
        NcPolynomialT out(d_);
        if (CoefficientTraits<K>::is_zero(s)) return out;
        for (const auto& [u, c] : terms_) out.add_term(u, c * s);
        return out;
    }

    bool operator==(const NcPolynomialT& o) const { return terms_ == o.terms_; }
    bool operator!=(const NcPolynomialT& o) const { return !(*this == o); }

private:
    static int merged_dimension(int a, int b) {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a != b) throw DimensionMismatch("polynomial op: dimension mismatch");
        return a;
    }
    void adopt_dimension(const NcPolynomialT& o) { d_ = merged_dimension(d_, o.d_); }

    int d_;
    TermMap terms_;
};

using NcPolynomial = NcPolynomialT<Rational>;

template <>
struct CoefficientTraits<NcPolynomial> {
    static NcPolynomial zero() { return NcPolynomial(); }
    static NcPolynomial one() { return NcPolynomial::constant(0, Rational(1)); }
    static bool is_zero(const NcPolynomial& p) { return p.is_zero(); }
    static NcPolynomial negate(const NcPolynomial& p) { return zero() - p; }
    static NcPolynomial invert_unit(const NcPolynomial& p) {
        if (p.terms().size() != 1 || !p.terms().begin()->first.empty())
            throw Error("series inversion: constant term is not a scalar unit");
        return NcPolynomial::constant(
            0, CoefficientTraits<Rational>::invert_unit(p.terms().begin()->second));
    }
};

// The involution (x_u)^* = x_{reversed u}, extended linearly over the reals.
inline NcPolynomial star(const NcPolynomial& p) {
    NcPolynomial out(p.dimension());
    for (const auto& [u, c] : p.terms()) out.add_term(reversed(u), c);
    return out;
}

// ---------------------------------------------------------------------------
// Truncated power series: same sparse storage plus a truncation degree that
// every binary operation must agree on. There is no silent coercion; use
// truncated_to for intentional degree changes.
// ---------------------------------------------------------------------------
template <class K>
class NcSeriesT {
public:
    using TermMap = std::map<MultiIndex, K>;

    NcSeriesT(int d, int max_degree) : d_(d), max_degree_(max_degree) {
        if (max_degree < 0) throw Error("negative truncation degree");
    }

    static NcSeriesT monomial(int d, int max_degree, const MultiIndex& u, K coeff) {
        NcSeriesT s(d, max_degree);
        s.add_term(u, coeff);
        return s;
    }
    static NcSeriesT constant(int d, int max_degree, K c) {
        return monomial(d, max_degree, {}, std::move(c));
    }
    static NcSeriesT variable(int d, int max_degree, int i) {
        return monomial(d, max_degree, MultiIndex{i}, CoefficientTraits<K>::one());
    }

    int dimension() const { return d_; }
    int max_degree() const { return max_degree_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    K coefficient(const MultiIndex& u) const {
        auto it = terms_.find(u);
        return it == terms_.end() ? CoefficientTraits<K>::zero() : it->second;
    }
    K constant_term() const { return coefficient({}); }

    void add_term(const MultiIndex& u, const K& c) {
        if ((int)u.size() > max_degree_) return;  // truncation contract
        if (CoefficientTraits<K>::is_zero(c)) return;
        check_entries(u, d_);
        auto [it, inserted] = terms_.emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (CoefficientTraits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    NcSeriesT& operator+=(const NcSeriesT& o) {
        require_compatible(o);
        for (const auto& [u, c] : o.terms_) add_term(u, c);
        return *this;
    }
    NcSeriesT& operator-=(const NcSeriesT& o) {
        require_compatible(o);
        for (const auto& [u, c] : o.terms_) add_term(u, CoefficientTraits<K>::negate(c));
        return *this;
    }
    friend NcSeriesT operator+(NcSeriesT a, const NcSeriesT& b) { return a += b; }
    friend NcSeriesT operator-(NcSeriesT a, const NcSeriesT& b) { return a -= b; }

    friend NcSeriesT operator*(const NcSeriesT& a, const NcSeriesT& b) {
        a.require_compatible(b);
        NcSeriesT out(a.d_, a.max_degree_);
        for (const auto& [u, cu] : a.terms_) {
            const int room = a.max_degree_ - (int)u.size();
            for (const auto& [v, cv] : b.terms_) {
                if ((int)v.size() > room) continue;
                out.add_term(concat(u, v), cu * cv);
            }
        }
        return out;
    }

    NcSeriesT scaled(const K& s) const {
        NcSeriesT out(d_, max_degree_);
        if (CoefficientTraits<K>::is_zero(s)) return out;
        for (const auto& [u, c] : terms_) out.add_term(u, c * s);
        return out;
    }

    bool operator==(const NcSeriesT& o) const {
        return d_ == o.d_ && max_degree_ == o.max_degree_ && terms_ == o.terms_;
    }
    bool operator!=(const NcSeriesT& o) const { return !(*this == o); }

private:
    void require_compatible(const NcSeriesT& o) const {
        if (d_ != o.d_) throw DimensionMismatch("series op: dimension mismatch");
        if (max_degree_ != o.max_degree_)
            throw DimensionMismatch("series op: truncation degree mismatch");
    }

    int d_;
    int max_degree_;
    TermMap terms_;
};

using NcSeries = NcSeriesT<Rational>;

template <class K>
struct SeriesTupleT {
    std::vector<NcSeriesT<K>> components;  // shared d and max_degree

    int dimension() const { return components.empty() ? 0 : components[0].dimension(); }
    int max_degree() const { return components.empty() ? 0 : components[0].max_degree(); }

    void validate() const {
        for (const auto& s : components)
            if (s.dimension() != dimension() || s.max_degree() != max_degree())
                throw DimensionMismatch("series tuple: inconsistent components");
    }
};

using SeriesTuple = SeriesTupleT<Rational>;

// Explicit re-truncation to a lower (or equal) degree.
template <class K>
NcSeriesT<K> truncated_to(const NcSeriesT<K>& s, int max_degree) {
    NcSeriesT<K> out(s.dimension(), max_degree);
    for (const auto& [u, c] : s.terms()) out.add_term(u, c);
    return out;
}

template <class K>
NcSeriesT<K> series_from_polynomial(const NcPolynomialT<K>& p, int d, int max_degree) {
    NcSeriesT<K> out(d, max_degree);
    for (const auto& [u, c] : p.terms()) out.add_term(u, c);
    return out;
}

// Left partial derivative: D_i z_u = delta_{i,u(1)} z_{(u(2),...,u(n))},
// D_i 1 = 0. Satisfies sum_i z_i D_i G = G for G with zero constant term.
template <class K>
NcSeriesT<K> left_derivative(int i, const NcSeriesT<K>& g) {
    if (i < 1 || i > g.dimension()) throw DimensionMismatch("left_derivative: bad index");
    NcSeriesT<K> out(g.dimension(), g.max_degree());
    for (const auto& [u, c] : g.terms()) {
        if (u.empty() || u.front() != i) continue;
        out.add_term(MultiIndex(u.begin() + 1, u.end()), c);
    }
    return out;
}

// Multiplicative inverse of a series with unit constant term, solved degree
// by degree: c r_m = -sum_{j=1..m} g_j r_{m-j}. The constant term must be a
// central unit (a nonzero scalar), so left and right inverses coincide; the
// round trip is asserted in the tests.
template <class K>
NcSeriesT<K> mul_inverse(const NcSeriesT<K>& g) {
    const K c_inv = CoefficientTraits<K>::invert_unit(g.constant_term());
    const int N = g.max_degree();
    NcSeriesT<K> r(g.dimension(), N);
    r.add_term({}, c_inv);
    std::vector<std::vector<std::pair<MultiIndex, K>>> by_deg(N + 1);
    for (const auto& [u, c] : g.terms())
        if (!u.empty()) by_deg[u.size()].emplace_back(u, c);
    for (int m = 1; m <= N; ++m) {
        std::map<MultiIndex, K> acc;
        for (int j = 1; j <= m; ++j) {
            for (const auto& [u, cu] : by_deg[j]) {
                for (const auto& [v, cv] : r.terms()) {
                    if ((int)v.size() != m - j) continue;
                    auto [it, fresh] = acc.emplace(concat(u, v), cu * cv);
                    if (!fresh) it->second += cu * cv;
                }
            }
        }
        for (const auto& [u, c] : acc)
            r.add_term(u, CoefficientTraits<K>::negate(c) * c_inv);
    }
    return r;
}

// Substitution g(h_1,...,h_d): each monomial coefficient multiplies the
// ordered product of the h's from the left. Every h_i must have zero
// constant term so the result is well-defined under truncation.
template <class K>
NcSeriesT<K> compose(const NcSeriesT<K>& g, const SeriesTupleT<K>& h) {
    h.validate();
    if ((int)h.components.size() != g.dimension())
        throw DimensionMismatch("compose: tuple size != series dimension");
    if (!h.components.empty() && h.components[0].max_degree() != g.max_degree())
        throw DimensionMismatch("compose: truncation degree mismatch");
    for (const auto& s : h.components)
        if (!CoefficientTraits<K>::is_zero(s.constant_term()))
            throw InvariantViolation("compose: substituted series has nonzero constant term");

    const int N = g.max_degree();
    const int hd = h.components.empty() ? g.dimension() : h.components[0].dimension();
    NcSeriesT<K> out(hd, N);
    for (const auto& [u, c] : g.terms()) {
        NcSeriesT<K> prod = NcSeriesT<K>::constant(hd, N, c);
        for (int letter : u) {
            prod = prod * h.components[static_cast<std::size_t>(letter) - 1];
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

// Compositional inverse of a tuple whose components are z_i + higher order.
// Fixed-point iteration g := z - hhat(g) settles one degree per pass.
template <class K>
SeriesTupleT<K> comp_inverse(const SeriesTupleT<K>& h) {
    h.validate();
    const int d = h.dimension();
    const int N = h.max_degree();
    if ((int)h.components.size() != d)
        throw DimensionMismatch("comp_inverse: tuple size != dimension");
    SeriesTupleT<K> hhat;  // h_i - z_i, must have only degree >= 2 terms
    for (int i = 1; i <= d; ++i) {
        NcSeriesT<K> t = h.components[i - 1] - NcSeriesT<K>::variable(d, N, i);
        for (const auto& [u, c] : t.terms())
            if ((int)u.size() < 2)
                throw InvariantViolation("comp_inverse: linear part is not the identity");
        hhat.components.push_back(std::move(t));
    }
    SeriesTupleT<K> g;
    for (int i = 1; i <= d; ++i) g.components.push_back(NcSeriesT<K>::variable(d, N, i));
    for (int pass = 0; pass < N; ++pass) {
        SeriesTupleT<K> next;
        for (int i = 1; i <= d; ++i)
            next.components.push_back(NcSeriesT<K>::variable(d, N, i) -
                                      compose(hhat.components[i - 1], g));
        g = std::move(next);
    }
    return g;
}

template <class K>
SeriesTupleT<K> identity_tuple(int d, int max_degree) {
    SeriesTupleT<K> t;
    for (int i = 1; i <= d; ++i)
        t.components.push_back(NcSeriesT<K>::variable(d, max_degree, i));
    return t;
}

}  // namespace fmk
