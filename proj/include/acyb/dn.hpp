#pragma once

#include <map>

#include "acyb/series.hpp"

namespace acyb {

/// Element of D_n(A) = A((z)) x A[z]/z^n A[z], truncated: the Laurent part
/// carries an explicit window, the right part is a representative of degree < n.
struct DnElement {
    MetricHandle M;
    int n = 0;
    Laurent1<Element> left;
    std::vector<Element> right; // size n

    DnElement() = default;
    DnElement(MetricHandle alg, int order) : M(std::move(alg)), n(order), right(order, Element(M->dim())) {
        left.lo = 0;
        left.hi = kExact;
    }
};

inline void dn_check_compatible(const DnElement& x, const DnElement& y) {
    if (x.n != y.n || !x.M || !y.M || !metric_eq(*x.M, *y.M))
        throw ParameterMismatch("operands live in different D_n(A)");
}

inline DnElement dn_add(const DnElement& x, const DnElement& y) {
    dn_check_compatible(x, y);
    DnElement out = x;
    out.left = l1_add(x.left, y.left);
    for (int j = 0; j < x.n; ++j) out.right[j] = el_add(x.right[j], y.right[j]);
    return out;
}

inline DnElement dn_scale(const Scalar& s, const DnElement& x) {
    DnElement out = x;
    out.left = l1_scale(s, x.left);
    for (auto& r : out.right) r = el_scale(s, r);
    return out;
}

inline DnElement dn_sub(const DnElement& x, const DnElement& y) { return dn_add(x, dn_scale(Scalar(-1), y)); }

inline bool dn_is_zero(const DnElement& x) {
    if (!x.left.is_zero()) return false;
    for (const auto& r : x.right)
        if (!el_is_zero(r)) return false;
    return true;
}

inline bool dn_eq(const DnElement& x, const DnElement& y) {
    dn_check_compatible(x, y);
    if (!l1_eq(x.left, y.left)) return false;
    for (int j = 0; j < x.n; ++j)
        if (x.right[j] != y.right[j]) return false;
    return true;
}

/// Componentwise product; the right component is reduced mod z^n.
inline DnElement dn_mul(const DnElement& x, const DnElement& y) {
    dn_check_compatible(x, y);
    const Algebra& A = x.M->algebra();
    DnElement out(x.M, x.n);
    out.left = l1_mul(x.left, y.left, [&](const Element& a, const Element& b) { return A.mul(a, b); });
    for (int j = 0; j < x.n; ++j)
        for (int k = 0; k + j < x.n; ++k) out.right[j + k] = el_add(out.right[j + k], A.mul(x.right[j], y.right[k]));
    return out;
}

/// Diagonal embedding of a power series tail a(z): a -> (a, [a]).
inline DnElement dn_diag(const MetricHandle& M, int n, const Laurent1<Element>& a) {
    if (a.lo < 0) throw ParameterMismatch("diagonal embedding needs a power series");
    DnElement out(M, n);
    out.left = a;
    for (const auto& [e, c] : a.terms)
        if (e < n) out.right[e] = c;
    return out;
}

inline Laurent1<Element> el_monomial(const Element& a, int e) {
    Laurent1<Element> f(e, kExact);
    f.set(e, a);
    return f;
}

/// Coefficient of z^{-1}.
inline Scalar residue(const Laurent1<Scalar>& f) {
    if (f.lo > -1) return Scalar(0); // window lies above the residue exponent
    if (f.hi != kExact && f.hi < -1)
        throw WindowTooSmall("residue needs exponent -1, window ends at " + std::to_string(f.hi));
    if (const Scalar* c = f.get(-1)) return *c;
    return Scalar(0);
}

/// res_0 z^{-n} lambda^{-1} f for a unit series lambda.
inline Scalar twisted_residue(const Series1<Scalar>& lambda, int n, const Laurent1<Scalar>& f) {
    if (f.is_zero()) return Scalar(0);
    if (f.hi != kExact && f.hi < n - 1)
        throw WindowTooSmall("pairing needs degree " + std::to_string(n - 1) + ", window ends at " +
                             std::to_string(f.hi));
    int depth = n - 1 - f.lo;
    if (depth < 0) return Scalar(0);
    if (lambda.trunc != kExact && lambda.trunc < depth)
        throw WindowTooSmall("lambda known through degree " + std::to_string(lambda.trunc) + ", pairing needs " +
                             std::to_string(depth));
    Series1<Scalar> li = invert_unit(lambda, depth);
    Scalar acc;
    for (const auto& [e, c] : f.terms) {
        if (e > n - 1) continue;
        if (const Scalar* l = li.get(n - 1 - e)) acc += *l * c;
    }
    return acc;
}

/// The residue pairing beta_{(n,lambda)} on D_n(A), with the one-sided forms.
class ResiduePairing {
public:
    ResiduePairing(MetricHandle M, int n, Series1<Scalar> lambda)
        : M_(std::move(M)), n_(n), lambda_(std::move(lambda)) {
        const Scalar* c0 = lambda_.get(0);
        if (!c0 || c0->is_zero()) throw NotAUnit();
    }

    static ResiduePairing standard(MetricHandle M, int n) {
        Series1<Scalar> one;
        one.set(0, Scalar(1));
        return ResiduePairing(std::move(M), n, std::move(one));
    }

    const MetricAlgebra& metric() const { return *M_; }
    const MetricHandle& handle() const { return M_; }
    int n() const { return n_; }
    const Series1<Scalar>& lambda() const { return lambda_; }
    bool lambda_is_one() const { return lambda_.terms.size() == 1 && lambda_.get(0) && lambda_.get(0)->is_one(); }

    /// res_0 z^{-n} lambda^{-1} f.
    Scalar twisted_residue(const Laurent1<Scalar>& f) const { return acyb::twisted_residue(lambda_, n_, f); }

    Scalar beta_plus(const Laurent1<Element>& a, const Laurent1<Element>& b) const {
        return twisted_residue(l1_mul(a, b, [&](const Element& x, const Element& y) { return M_->beta(x, y); }));
    }

    Scalar beta_minus(const std::vector<Element>& a, const std::vector<Element>& b) const {
        Laurent1<Scalar> f(0, kExact);
        for (size_t j = 0; j < a.size(); ++j)
            for (size_t k = 0; k < b.size(); ++k) f.accumulate(static_cast<int>(j + k), M_->beta(a[j], b[k]));
        return twisted_residue(f);
    }

    /// beta_{(n,lambda)}(x, y) = res_0 z^{-n} lambda^{-1} (beta(x_l, y_l) - beta(x_r, y_r)).
    Scalar pair(const DnElement& x, const DnElement& y) const {
        dn_check_compatible(x, y);
        if (!metric_eq(*x.M, *M_)) throw ParameterMismatch("pairing and elements use different algebras");
        Laurent1<Scalar> f = l1_mul(x.left, y.left, [&](const Element& a, const Element& b) { return M_->beta(a, b); });
        for (size_t j = 0; j < x.right.size(); ++j)
            for (size_t k = 0; k < y.right.size(); ++k)
                f.accumulate(static_cast<int>(j + k), -M_->beta(x.right[j], y.right[k]));
        return twisted_residue(f);
    }

private:
    MetricHandle M_;
    int n_;
    Series1<Scalar> lambda_;
};

/// Expansion of 1/(x - y) in D_n(A)((y)) for a unital algebra: coefficient of
/// y^e is (0, -[u x^{-e-1}]) for -n <= e < 0 and (u x^{-e-1}, 0) for e >= 0.
inline std::map<int, DnElement> pole_expansion(const MetricHandle& M, int n, int y_hi) {
    auto rep = category_predicates(M->algebra());
    if (!rep.unital) throw CategoryMismatch("pole expansion needs a unital algebra");
    Element u = *rep.unit;
    std::map<int, DnElement> out;
    for (int e = -n; e <= y_hi; ++e) {
        DnElement c(M, n);
        if (e < 0) {
            c.right[-e - 1] = el_scale(Scalar(-1), u);
        } else {
            c.left = el_monomial(u, -e - 1);
        }
        out.emplace(e, std::move(c));
    }
    return out;
}

/// w_{k,i}: right part -[b_i^* x^{n-1-k}] for k < n, left part b_i^* x^{n-1-k} for k >= n.
inline DnElement w_generator(const MetricHandle& M, int n, int k, int i) {
    if (k < 0 || i < 0 || i >= M->dim()) throw IndexOutOfRange("w generator index");
    DnElement w(M, n);
    Element dual = M->dual_basis(i);
    if (k < n) {
        w.right[n - 1 - k] = el_scale(Scalar(-1), dual);
    } else {
        w.left = el_monomial(dual, n - 1 - k);
    }
    return w;
}

/// Lagrangian-complement data in normal form: the family {w_{k,i} + t_{k,i}}
/// with diagonal polynomial tails vanishing for k >= tail_bound.
struct WBasis {
    MetricHandle M;
    int n = 0;
    int tail_bound = 0;
    // tails[k][i]: polynomial tail in A[z] (window lo >= 0), zero beyond tail_bound
    std::vector<std::vector<Laurent1<Element>>> tails;

    WBasis() = default;
    WBasis(MetricHandle alg, int order, int bound)
        : M(std::move(alg)), n(order), tail_bound(bound),
          tails(bound, std::vector<Laurent1<Element>>(M->dim(), Laurent1<Element>(0, kExact))) {}

    const Laurent1<Element>* tail(int k, int i) const {
        if (k < 0 || k >= tail_bound) return nullptr;
        return &tails[k][i];
    }
};

/// Generator w_{k,i} + t_{k,i}, with the w part twisted by the unit series
/// lambda (type (n,lambda) data; lambda = 1 gives the plain normal form).
inline DnElement wbasis_generator(const WBasis& W, const Series1<Scalar>& lambda, int k, int i) {
    const MetricAlgebra& M = *W.M;
    int n = W.n;
    DnElement g(W.M, n);
    Element dual = M.dual_basis(i);
    if (k < n) {
        // right part: -[lambda(x) x^{n-1-k} b_i^*]
        for (const auto& [j, lj] : lambda.terms) {
            int e = n - 1 - k + j;
            if (e < n) g.right[e] = el_add(g.right[e], el_scale(-lj, dual));
        }
        if (lambda.trunc != kExact && lambda.trunc < k)
            throw WindowTooSmall("lambda known through degree " + std::to_string(lambda.trunc) +
                                 ", generator needs " + std::to_string(k));
    } else {
        Laurent1<Element> l(n - 1 - k, sat_add(lambda.trunc, n - 1 - k));
        for (const auto& [j, lj] : lambda.terms) l.set(n - 1 - k + j, el_scale(lj, dual));
        g.left = l;
    }
    if (const Laurent1<Element>* t = W.tail(k, i)) {
        if (!t->is_zero()) g = dn_add(g, dn_diag(W.M, n, *t));
    }
    return g;
}

/// Result of splitting an element along D_n(A) = A[[z]] (+) W.
struct DnDecomposition {
    std::map<std::pair<int, int>, Scalar> w_coeffs; // (k, i) -> coefficient
    Laurent1<Element> diagonal;                     // the A[[z]] part, window [0, valid_hi]
    bool in_w = false;                              // diagonal vanishes through the window
};

/// Split x = diagonal + sum c_{k,i} (lambda-twisted w_{k,i} + t_{k,i}); the
/// generator family is triangular in the valuation with unit leading
/// coefficient lambda(0), so the split is computed by back substitution.
inline DnDecomposition dn_decompose(const WBasis& W, const Series1<Scalar>& lambda, const DnElement& x) {
    const MetricAlgebra& M = *W.M;
    const Algebra& A = M.algebra();
    int d = M.dim();
    int n = W.n;
    const Scalar* l0p = lambda.get(0);
    if (!l0p || l0p->is_zero()) throw NotAUnit();
    Scalar l0inv = l0p->inv();

    DnDecomposition out;
    DnElement rest = x;

    auto dual_coords = [&](const Element& v) {
        // v = sum_i alpha_i b_i^*  with  alpha_i = beta(v, b_i)
        Vec alpha(d);
        for (int i = 0; i < d; ++i) alpha[i] = M.beta(v, A.basis(i));
        return alpha;
    };

    // principal part: generators with k >= n, triangular from the valuation up
    for (int e = rest.left.lo; e < 0; ++e) {
        const Element* c = rest.left.get(e);
        if (!c) continue;
        Vec alpha = dual_coords(*c);
        int k = n - 1 - e;
        for (int i = 0; i < d; ++i) {
            if (alpha[i].is_zero()) continue;
            Scalar coeff = alpha[i] * l0inv;
            out.w_coeffs[{k, i}] = coeff;
            rest = dn_sub(rest, dn_scale(coeff, wbasis_generator(W, lambda, k, i)));
        }
    }

    // right-minus-left discrepancy picks out the k < n generators, lowest
    // right exponent first
    for (int j = 0; j < n; ++j) {
        Element disc = rest.right[j];
        if (const Element* l = rest.left.get(j)) disc = el_sub(disc, *l);
        if (el_is_zero(disc)) continue;
        Vec alpha = dual_coords(disc);
        int k = n - 1 - j;
        for (int i = 0; i < d; ++i) {
            if (alpha[i].is_zero()) continue;
            Scalar coeff = -alpha[i] * l0inv;
            out.w_coeffs[{k, i}] = coeff;
            rest = dn_sub(rest, dn_scale(coeff, wbasis_generator(W, lambda, k, i)));
        }
    }

    // what is left must be diagonal: left part with no negative exponents,
    // right = left mod z^n
    for (const auto& [e, c] : rest.left.terms) {
        if (e < 0 && !el_is_zero(c))
            throw NotComplementary("principal part survives decomposition at degree " + std::to_string(e));
    }
    for (int j = 0; j < n; ++j) {
        Element disc = rest.right[j];
        if (const Element* l = rest.left.get(j)) disc = el_sub(disc, *l);
        if (!el_is_zero(disc)) throw NotComplementary("right component survives decomposition");
    }
    out.diagonal = rest.left;
    out.diagonal.lo = 0;
    out.in_w = rest.left.is_zero();
    return out;
}

/// Coordinates of an element over the window [lo, hi]: left coefficients
/// degree by degree, then the right components.
inline Vec dn_coords(const DnElement& x, int lo, int hi) {
    if (x.left.hi != kExact && x.left.hi < hi)
        throw WindowTooSmall("element known through degree " + std::to_string(x.left.hi) + ", window needs " +
                             std::to_string(hi));
    int d = x.M->dim();
    Vec v;
    v.reserve(static_cast<size_t>(d) * (hi - lo + 1 + x.n));
    for (int e = lo; e <= hi; ++e) {
        const Element* c = x.left.get(e);
        for (int p = 0; p < d; ++p) v.push_back(c ? (*c)[p] : Scalar(0));
    }
    for (int j = 0; j < x.n; ++j)
        for (int p = 0; p < d; ++p) v.push_back(x.right[j][p]);
    return v;
}

/// Report of the Manin-triple conditions for span{w_{k,i} + t_{k,i}}.
struct SpanReport {
    bool isotropic = false;
    bool complementary = false;
    bool subalgebra = false;
    int window_lo = 0, window_hi = 0;
    std::vector<int> rank_per_degree;          // cumulative rank, degrees window_lo..window_hi
    std::string first_isotropy_failure;        // empty when isotropic
    std::string first_closure_failure;         // empty when closed
};

/// Checks isotropy, complementarity and closure of the normal-form family
/// inside the window [lo, hi] (z-degrees).
inline SpanReport wbasis_span_check(const WBasis& W, const ResiduePairing& P, int lo, int hi) {
    if (W.n != P.n() || !metric_eq(*W.M, P.metric())) throw ParameterMismatch("basis and pairing disagree");
    const MetricAlgebra& M = *W.M;
    int d = M.dim();
    int n = W.n;
    if (hi < std::max(0, W.tail_bound - 1) || lo > -1)
        throw WindowTooSmall("window does not cover the tails and one principal degree");
    SpanReport rep;
    rep.window_lo = lo;
    rep.window_hi = hi;

    int kmax = n - 1 - lo; // generators with valuation >= lo
    std::vector<std::pair<int, int>> idx;
    std::vector<DnElement> gens;
    for (int k = 0; k <= kmax; ++k)
        for (int i = 0; i < d; ++i) {
            idx.push_back({k, i});
            gens.push_back(wbasis_generator(W, P.lambda(), k, i));
        }

    // isotropy
    rep.isotropic = true;
    for (size_t a = 0; a < gens.size() && rep.isotropic; ++a)
        for (size_t b = a; b < gens.size(); ++b) {
            Scalar v = P.pair(gens[a], gens[b]);
            if (!v.is_zero()) {
                rep.isotropic = false;
                rep.first_isotropy_failure = "beta(g_{" + std::to_string(idx[a].first) + "," +
                                             std::to_string(idx[a].second) + "}, g_{" + std::to_string(idx[b].first) +
                                             "," + std::to_string(idx[b].second) + "}) = " + v.str();
                break;
            }
        }

    // complementarity: coordinates over the window, generators plus diagonal monomials
    auto coords = [&](const DnElement& xel) { return dn_coords(xel, lo, hi); };
    Mat family;
    std::vector<int> valuations;
    for (size_t a = 0; a < gens.size(); ++a) {
        family.push_back(coords(gens[a]));
        valuations.push_back(n - 1 - idx[a].first);
    }
    for (int j = 0; j <= hi; ++j)
        for (int p = 0; p < d; ++p) {
            family.push_back(coords(dn_diag(W.M, n, el_monomial(M.algebra().basis(p), j))));
            valuations.push_back(j);
        }
    // cumulative rank by valuation degree
    Mat sorted;
    for (int e = lo; e <= hi; ++e) {
        for (size_t a = 0; a < family.size(); ++a)
            if (valuations[a] == e) sorted.push_back(family[a]);
        rep.rank_per_degree.push_back(static_cast<int>(mat_rank(sorted)));
    }
    rep.complementary = rep.rank_per_degree.back() == static_cast<int>(family.size()) &&
                        family.size() == static_cast<size_t>(d) * (hi - lo + 1 + n);

    // closure: every pairwise product decomposes with zero diagonal part
    rep.subalgebra = true;
    for (size_t a = 0; a < gens.size() && rep.subalgebra; ++a)
        for (size_t b = 0; b < gens.size(); ++b) {
            DnElement prod = dn_mul(gens[a], gens[b]);
            DnDecomposition dec = dn_decompose(W, P.lambda(), prod);
            if (!dec.in_w) {
                rep.subalgebra = false;
                rep.first_closure_failure = "g_{" + std::to_string(idx[a].first) + "," + std::to_string(idx[a].second) +
                                            "} g_{" + std::to_string(idx[b].first) + "," + std::to_string(idx[b].second) +
                                            "} leaves the span";
                break;
            }
        }
    return rep;
}

// Trace extensions ------------------------------------------------------------

/// R_n = k((z)) x k[z]/(z^n) with trace t_{(n,lambda)}(a,[b]) = res_0 (a-b)/(z^n lambda).
struct TraceExtensionRn {
    int n;
    Series1<Scalar> lambda;

    struct Elem {
        Laurent1<Scalar> left;
        std::vector<Scalar> right; // size n
    };

    Elem make(Laurent1<Scalar> l, std::vector<Scalar> r) const {
        r.resize(n, Scalar(0));
        return Elem{std::move(l), std::move(r)};
    }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem out;
        out.left = l1_mul(a.left, b.left, [](const Scalar& x, const Scalar& y) { return x * y; });
        out.right.assign(n, Scalar(0));
        for (int j = 0; j < n; ++j)
            for (int k = 0; k + j < n; ++k) out.right[j + k] += a.right[j] * b.right[k];
        return out;
    }

    Scalar trace(const Elem& a) const {
        Laurent1<Scalar> f = a.left;
        for (int j = 0; j < n; ++j) f.accumulate(j, -a.right[j]);
        return twisted_residue(lambda, n, f);
    }
};

/// R_infinity truncated at an index bound: k[[z]] (+) span{a_0..a_{bound-1}}
/// with a_j a_k = 0, a_j z^k = a_{j-k} (k <= j, else 0), t(a_j) = delta_{j0}.
struct TraceExtensionRInf {
    int bound;

    struct Elem {
        Series1<Scalar> series;
        std::vector<Scalar> a; // coefficients of a_0..a_{bound-1}
    };

    Elem make(Series1<Scalar> s, std::vector<Scalar> acoeffs) const {
        acoeffs.resize(bound, Scalar(0));
        return Elem{std::move(s), std::move(acoeffs)};
    }

    Elem mul(const Elem& x, const Elem& y) const {
        Elem out;
        out.series = s1_mul(x.series, y.series);
        out.a.assign(bound, Scalar(0));
        for (int m = 0; m < bound; ++m) {
            Scalar acc;
            for (int k = 0; m + k < bound; ++k) {
                if (const Scalar* c = y.series.get(k)) acc += x.a[m + k] * *c;
                if (const Scalar* c = x.series.get(k)) acc += y.a[m + k] * *c;
            }
            out.a[m] = acc;
        }
        return out;
    }

    Scalar trace(const Elem& x) const { return bound > 0 ? x.a[0] : Scalar(0); }
};

} // namespace acyb
