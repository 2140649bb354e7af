#pragma once

#include "acyb/standard_form.hpp"

namespace acyb {

// Tensor3 leg actions and the componentwise tensor-algebra product.
// Conventions: a^{(i)} multiplies the i-th leg on the left, (.)a^{(i)} on the
// right; products of tensors multiply matching legs.

inline Tensor3 act3_left(const Algebra& A, int leg, const Element& a, const Tensor3& t) {
    Tensor3 out(t.d);
    int d = t.d;
    std::vector<Element> table(d);
    for (int p = 0; p < d; ++p) table[p] = A.mul(a, A.basis(p));
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int s = 0; s < d; ++s) {
                const Scalar& c = t.at(p, q, s);
                if (c.is_zero()) continue;
                int src = leg == 0 ? p : (leg == 1 ? q : s);
                for (int r = 0; r < d; ++r) {
                    if (table[src][r].is_zero()) continue;
                    int u = leg == 0 ? r : p;
                    int v = leg == 1 ? r : q;
                    int w = leg == 2 ? r : s;
                    out.at(u, v, w) += table[src][r] * c;
                }
            }
    return out;
}

inline Tensor3 act3_right(const Algebra& A, int leg, const Tensor3& t, const Element& a) {
    Tensor3 out(t.d);
    int d = t.d;
    std::vector<Element> table(d);
    for (int p = 0; p < d; ++p) table[p] = A.mul(A.basis(p), a);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int s = 0; s < d; ++s) {
                const Scalar& c = t.at(p, q, s);
                if (c.is_zero()) continue;
                int src = leg == 0 ? p : (leg == 1 ? q : s);
                for (int r = 0; r < d; ++r) {
                    if (table[src][r].is_zero()) continue;
                    int u = p, v = q, w = s;
                    if (leg == 0)
                        u = r;
                    else if (leg == 1)
                        v = r;
                    else
                        w = r;
                    out.at(u, v, w) += table[src][r] * c;
                }
            }
    return out;
}

/// Componentwise product in A (x) A (x) A.
inline Tensor3 t3_mul(const Algebra& A, const Tensor3& x, const Tensor3& y) {
    int d = x.d;
    Tensor3 out(d);
    for (int p = 0; p < d; ++p)
        for (int q = 0; q < d; ++q)
            for (int s = 0; s < d; ++s) {
                const Scalar& cx = x.at(p, q, s);
                if (cx.is_zero()) continue;
                for (int p2 = 0; p2 < d; ++p2)
                    for (int q2 = 0; q2 < d; ++q2)
                        for (int s2 = 0; s2 < d; ++s2) {
                            const Scalar& cy = y.at(p2, q2, s2);
                            if (cy.is_zero()) continue;
                            Element l1 = A.mul(A.basis(p), A.basis(p2));
                            Element l2 = A.mul(A.basis(q), A.basis(q2));
                            Element l3 = A.mul(A.basis(s), A.basis(s2));
                            Scalar c = cx * cy;
                            for (int u = 0; u < d; ++u) {
                                if (l1[u].is_zero()) continue;
                                for (int v = 0; v < d; ++v) {
                                    if (l2[v].is_zero()) continue;
                                    for (int w = 0; w < d; ++w)
                                        if (!l3[w].is_zero()) out.at(u, v, w) += c * l1[u] * l2[v] * l3[w];
                                }
                            }
                        }
            }
    return out;
}

inline Tensor3 swap23(const Tensor3& t) { // 1 (x) tau
    Tensor3 out(t.d);
    for (int p = 0; p < t.d; ++p)
        for (int q = 0; q < t.d; ++q)
            for (int s = 0; s < t.d; ++s) out.at(p, s, q) = t.at(p, q, s);
    return out;
}

/// Finite-dimensional bialgebra: an algebra with a comultiplication table.
struct FiniteBialgebra {
    Algebra A;
    std::vector<Tensor2> delta; // delta[i] = delta(b_i)

    Tensor2 apply(const Element& v) const {
        Tensor2 out(A.dim());
        for (int i = 0; i < A.dim(); ++i)
            if (!v[i].is_zero()) out = t_add(out, t_scale(v[i], delta[i]));
        return out;
    }
};

/// Topological cobracket given by generator images: images[k][i] = delta(b_i z^k).
struct Cocycle {
    MetricHandle M;
    int trunc = 0;
    std::vector<std::vector<Series2<Tensor2>>> images; // [k][i], 0 <= k <= trunc

    const Series2<Tensor2>& image(int k, int i) const {
        if (k < 0 || k > trunc) throw IndexOutOfRange("cobracket generator degree");
        return images[k][i];
    }
};

inline Cocycle constant_cocycle(MetricHandle M, const std::vector<Tensor2>& delta) {
    Cocycle c;
    c.M = std::move(M);
    c.trunc = 0;
    c.images.resize(1, std::vector<Series2<Tensor2>>(c.M->dim(), Series2<Tensor2>(kExact)));
    for (int i = 0; i < c.M->dim(); ++i)
        if (!t_is_zero(delta[i])) c.images[0][i].set(0, 0, delta[i]);
    return c;
}

/// delta_r(a) = r a(x)^{(1)} - a(y)^{(2)} r for a = b_i z^k; the pole cancels
/// by exact diagonal division.
inline Cocycle delta_from_r(const StandardFormSeries& r, int N) {
    const MetricAlgebra& M = *r.M;
    const Algebra& A = M.algebra();
    Series2<Tensor2> R = numerator(r);
    if (R.trunc != kExact && R.trunc < N + 1)
        throw TruncationTooSmall("cobracket through degree " + std::to_string(N) + " needs the numerator through " +
                                 std::to_string(N + 1));
    Cocycle out;
    out.M = r.M;
    out.trunc = N;
    out.images.resize(N + 1, std::vector<Series2<Tensor2>>(M.dim()));
    for (int i = 0; i < M.dim(); ++i) {
        Element a = A.basis(i);
        Series2<Tensor2> ra(R.trunc), ar(R.trunc);
        for (const auto& [e, T] : R.terms) {
            ra.set(e.first, e.second, act1_right(A, T, a)); // R a^{(1)}
            ar.set(e.first, e.second, act2_left(A, a, T));  // a^{(2)} R
        }
        for (int k = 0; k <= N; ++k) {
            Series2<Tensor2> num = s2_sub(s2_shift(ra, k, 0), s2_shift(ar, 0, k));
            Series2<Tensor2> img;
            try {
                img = divide_by_diagonal(num);
            } catch (const NotDivisible& e) {
                throw PoleDoesNotCancel(std::string("generator (") + std::to_string(k) + "," + std::to_string(i) +
                                        "): " + e.what());
            }
            out.images[k][i] = s2_truncate(std::move(img), N);
        }
    }
    return out;
}

/// tau on a two-variable tensor series: swap legs and variables.
inline Series2<Tensor2> cotau(const Series2<Tensor2>& f) {
    Series2<Tensor2> out(f.trunc);
    for (const auto& [e, T] : f.terms) out.set(e.second, e.first, flip(T));
    return out;
}

namespace detail {

struct CocycleOps {
    const Algebra* A;

    Series2<Tensor2> act1l(const Element& a, int k, const Series2<Tensor2>& f) const {
        Series2<Tensor2> out(f.trunc);
        for (const auto& [e, T] : f.terms) out.set(e.first, e.second, act1_left(*A, a, T));
        return s2_shift(std::move(out), k, 0);
    }
    Series2<Tensor2> act2l(const Element& a, int k, const Series2<Tensor2>& f) const {
        Series2<Tensor2> out(f.trunc);
        for (const auto& [e, T] : f.terms) out.set(e.first, e.second, act2_left(*A, a, T));
        return s2_shift(std::move(out), 0, k);
    }
    Series2<Tensor2> act1r(const Series2<Tensor2>& f, const Element& a, int k) const {
        Series2<Tensor2> out(f.trunc);
        for (const auto& [e, T] : f.terms) out.set(e.first, e.second, act1_right(*A, T, a));
        return s2_shift(std::move(out), k, 0);
    }
    Series2<Tensor2> act2r(const Series2<Tensor2>& f, const Element& a, int k) const {
        Series2<Tensor2> out(f.trunc);
        for (const auto& [e, T] : f.terms) out.set(e.first, e.second, act2_right(*A, T, a));
        return s2_shift(std::move(out), 0, k);
    }
};

// delta(ab) for basis generators a = b_i z^k, b = b_j z^l by linearity.
inline Series2<Tensor2> cocycle_of_product(const Cocycle& c, int i, int k, int j, int l) {
    const Algebra& A = c.M->algebra();
    Element prod = A.mul(A.basis(i), A.basis(j));
    Series2<Tensor2> out(kExact);
    bool first = true;
    for (int m = 0; m < A.dim(); ++m) {
        if (prod[m].is_zero()) continue;
        Series2<Tensor2> part = s2_scale(prod[m], c.image(k + l, m));
        out = first ? part : s2_add(out, part);
        first = false;
    }
    if (first) out = Series2<Tensor2>(c.image(0, 0).trunc);
    return out;
}

} // namespace detail

/// delta(ab) = (a^{(1)} + a^{(2)}) delta(b) + delta(a)(b^{(1)} + b^{(2)}) on
/// generator pairs with k + l <= window.
inline bool check_lie_cocycle(const Cocycle& c, int window) {
    const MetricAlgebra& M = *c.M;
    if (!category_predicates(M.algebra()).lie) throw CategoryMismatch("lie cocycle needs a Lie algebra");
    detail::CocycleOps ops{&M.algebra()};
    for (int k = 0; k + 0 <= window; ++k)
        for (int l = 0; k + l <= window; ++l)
            for (int i = 0; i < M.dim(); ++i)
                for (int j = 0; j < M.dim(); ++j) {
                    Element a = M.algebra().basis(i), b = M.algebra().basis(j);
                    Series2<Tensor2> lhs = detail::cocycle_of_product(c, i, k, j, l);
                    Series2<Tensor2> rhs = s2_add(
                        s2_add(ops.act1l(a, k, c.image(l, j)), ops.act2l(a, k, c.image(l, j))),
                        s2_add(ops.act1r(c.image(k, i), b, l), ops.act2r(c.image(k, i), b, l)));
                    if (!s2_eq(lhs, rhs)) return false;
                }
    return true;
}

/// delta(ab) = a^{(1)} delta(b) + delta(a) b^{(2)} on generator pairs.
inline bool check_associative_cocycle(const Cocycle& c, int window) {
    const MetricAlgebra& M = *c.M;
    if (!category_predicates(M.algebra()).associative)
        throw CategoryMismatch("infinitesimal cocycle needs an associative algebra");
    detail::CocycleOps ops{&M.algebra()};
    for (int k = 0; k <= window; ++k)
        for (int l = 0; k + l <= window; ++l)
            for (int i = 0; i < M.dim(); ++i)
                for (int j = 0; j < M.dim(); ++j) {
                    Element a = M.algebra().basis(i), b = M.algebra().basis(j);
                    Series2<Tensor2> lhs = detail::cocycle_of_product(c, i, k, j, l);
                    Series2<Tensor2> rhs =
                        s2_add(ops.act1l(a, k, c.image(l, j)), ops.act2r(c.image(k, i), b, l));
                    if (!s2_eq(lhs, rhs)) return false;
                }
    return true;
}

/// a1^{(1)} tau delta(a2) + a2^{(2)} delta(a1) = delta(a1) a2^{(1)} + tau delta(a2) a1^{(2)}.
inline bool check_balanced(const Cocycle& c, int window) {
    const MetricAlgebra& M = *c.M;
    if (!category_predicates(M.algebra()).associative)
        throw CategoryMismatch("balance condition needs an associative algebra");
    detail::CocycleOps ops{&M.algebra()};
    for (int k = 0; k <= window; ++k)
        for (int l = 0; k + l <= window; ++l)
            for (int i = 0; i < M.dim(); ++i)
                for (int j = 0; j < M.dim(); ++j) {
                    Element a1 = M.algebra().basis(i), a2 = M.algebra().basis(j);
                    Series2<Tensor2> td2 = cotau(c.image(l, j));
                    Series2<Tensor2> lhs = s2_add(ops.act1l(a1, k, td2), ops.act2l(a2, l, c.image(k, i)));
                    Series2<Tensor2> rhs = s2_add(ops.act1r(c.image(k, i), a2, l), ops.act2r(td2, a1, k));
                    if (!s2_eq(lhs, rhs)) return false;
                }
    return true;
}

/// The three Jordan bialgebra identities for a constant cobracket on a unital
/// Jordan algebra; a runs over quadratic polarization probes, b over the basis.
inline bool check_jordan_identities(const FiniteBialgebra& B) {
    const Algebra& A = B.A;
    int d = A.dim();
    auto rep = category_predicates(A);
    if (!rep.jordan) throw CategoryMismatch("Jordan identities need a Jordan algebra");
    if (!rep.unital) throw CategoryMismatch("the identities use the unit of the algebra");
    Element unit = *rep.unit;

    auto d1 = [&](const Tensor2& t) { // (delta (x) 1)
        Tensor3 out(d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                if (t.at(p, q).is_zero()) continue;
                const Tensor2& dp = B.delta[p];
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < d; ++v)
                        if (!dp.at(u, v).is_zero()) out.at(u, v, q) += t.at(p, q) * dp.at(u, v);
            }
        return out;
    };
    auto d2 = [&](const Tensor2& t) { // (1 (x) delta)
        Tensor3 out(d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                if (t.at(p, q).is_zero()) continue;
                const Tensor2& dq = B.delta[q];
                for (int u = 0; u < d; ++u)
                    for (int v = 0; v < d; ++v)
                        if (!dq.at(u, v).is_zero()) out.at(p, u, v) += t.at(p, q) * dq.at(u, v);
            }
        return out;
    };
    auto ten3 = [&](const Tensor2& t, bool unit_last) { // t (x) 1 or 1 (x) t
        Tensor3 out(d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                if (t.at(p, q).is_zero()) continue;
                for (int w = 0; w < d; ++w) {
                    if (unit[w].is_zero()) continue;
                    if (unit_last)
                        out.at(p, q, w) += t.at(p, q) * unit[w];
                    else
                        out.at(w, p, q) += t.at(p, q) * unit[w];
                }
            }
        return out;
    };

    std::vector<Element> probes = detail::polarization_probes(A, 2);
    for (const Element& a : probes) {
        Element a2 = A.mul(a, a);
        Tensor2 da = B.apply(a);
        Tensor2 da2 = B.apply(a2);

        // first identity
        Tensor3 lhs1 = t_scale(Scalar(1, 2), t_sub(d1(da2), d2(da2)));
        Tensor3 rhs1 = act3_left(A, 1, a, t_sub(d1(da), d2(da)));
        Tensor3 mixed = swap23(d1(da));
        rhs1 = t_add(rhs1, t_sub(act3_left(A, 2, a, mixed), act3_left(A, 0, a, mixed)));
        rhs1 = t_add(rhs1, t3_mul(A, t_sub(ten3(da, true), ten3(da, false)), swap23(ten3(da, true))));
        if (!t_eq(lhs1, rhs1)) return false;

        // second identity
        Tensor2 arg = t_add(act2_left(A, a, da), act1_left(A, a, da)); // (1 (x) a + a (x) 1) delta(a)
        Tensor3 lhs2 = t_add(t_add(d1(arg), d2(arg)), swap23(d1(arg)));
        Tensor3 rhs2 = t_scale(Scalar(2), act3_left(A, 1, a, d2(da)));
        rhs2 = t_add(rhs2, act3_left(A, 0, a, swap23(d1(da))));
        rhs2 = t_add(rhs2, t3_mul(A, ten3(da, false), swap23(ten3(da, true))));
        rhs2 = t_add(rhs2, d1(da2));
        if (!t_eq(lhs2, rhs2)) return false;

        // third identity
        for (int j = 0; j < d; ++j) {
            Element b = A.basis(j);
            Tensor2 db = B.delta[j];
            Tensor2 acc = B.apply(A.mul(a2, b));
            acc = t_sub(acc, act1_right(A, da2, b));
            acc = t_sub(acc, act2_right(A, db, a2));
            acc = t_add(acc, t_scale(Scalar(2), act2_right(A, act1_right(A, db, a), a)));
            acc = t_sub(acc, t_scale(Scalar(2), act1_right(A, B.apply(A.mul(a, b)), a)));
            acc = t_add(acc, t_scale(Scalar(2), act1_right(A, act1_right(A, da, b), a)));
            acc = t_add(acc, t_scale(Scalar(2), act2_right(A, act2_right(A, da, b), a)));
            acc = t_sub(acc, t_scale(Scalar(2), act2_right(A, da, A.mul(a, b))));
            if (!t_is_zero(acc)) return false;
        }
    }
    return true;
}

/// The classical double D(A, delta) on A (+) A^*.
struct Double {
    Algebra algebra; // dimension 2d; indices [0,d) = A, [d,2d) = A^*
    Mat ev;          // evaluation pairing gram matrix
    int base_dim = 0;
    CategoryReport category;
    bool ev_metric_ok = false;
    bool halves_isotropic = false;
    bool delta_determined = false;
};

inline Double build_double(const FiniteBialgebra& B) {
    const Algebra& A = B.A;
    int d = A.dim();
    int D = 2 * d;
    std::vector<Scalar> sc(static_cast<size_t>(D) * D * D);
    auto at = [&](int i, int j, int k) -> Scalar& { return sc[(static_cast<size_t>(i) * D + j) * D + k]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // b_i b_j in A
            for (int k = 0; k < d; ++k) at(i, j, k) = A.sc(i, j, k);
            // b^i b^j = sum_m delta(b_m)^{ij} b^m
            for (int m = 0; m < d; ++m) at(d + i, d + j, d + m) = B.delta[m].at(i, j);
            // b_i b^j = sum_q delta(b_i)^{jq} b_q + sum_m C[m][i][j] b^m
            for (int q = 0; q < d; ++q) at(i, d + j, q) = B.delta[i].at(j, q);
            for (int m = 0; m < d; ++m) at(i, d + j, d + m) = A.sc(m, i, j);
            // b^j b_i = sum_p delta(b_i)^{pj} b_p + sum_m C[i][m][j] b^m
            for (int p = 0; p < d; ++p) at(d + j, i, p) = B.delta[i].at(p, j);
            for (int m = 0; m < d; ++m) at(d + j, i, d + m) = A.sc(i, m, j);
        }
    std::vector<std::string> labels = A.labels();
    for (int i = 0; i < d; ++i) labels.push_back(A.labels()[i] + "*");

    Double out;
    out.base_dim = d;
    out.algebra = Algebra(D, std::move(sc), std::move(labels));
    out.ev = mat_zero(D, D);
    for (int i = 0; i < d; ++i) {
        out.ev[i][d + i] = Scalar(1);
        out.ev[d + i][i] = Scalar(1);
    }
    out.category = category_predicates(out.algebra);
    try {
        MetricAlgebra check(out.algebra, out.ev);
        out.ev_metric_ok = true;
    } catch (const InvalidMetric&) {
        out.ev_metric_ok = false;
    }
    out.halves_isotropic = true;
    for (int i = 0; i < d && out.halves_isotropic; ++i)
        for (int j = 0; j < d; ++j)
            if (!out.ev[i][j].is_zero() || !out.ev[d + i][d + j].is_zero()) {
                out.halves_isotropic = false;
                break;
            }
    // determined comultiplication: ev^{x2}(delta'(a), b^p (x) b^q) = ev(a, b^p b^q)
    out.delta_determined = true;
    for (int i = 0; i < d && out.delta_determined; ++i)
        for (int p = 0; p < d && out.delta_determined; ++p)
            for (int q = 0; q < d; ++q) {
                Scalar rhs; // ev(b_i, b^p b^q)
                for (int m = 0; m < d; ++m) rhs += out.algebra.sc(d + p, d + q, d + m) * (m == i ? Scalar(1) : Scalar(0));
                if (!(rhs == B.delta[i].at(p, q))) {
                    out.delta_determined = false;
                    break;
                }
            }
    return out;
}

/// Windowed Manin-triple check for ((D_n(A), beta_{(n,lambda)}), A[[z]], W).
struct ManinReport {
    SpanReport span;        // isotropy/complementarity/closure of W
    bool diagonal_isotropic = false;
    bool ok() const { return span.isotropic && span.complementary && span.subalgebra && diagonal_isotropic; }
};

inline ManinReport manin_triple_check(const WBasis& W, const ResiduePairing& P, int lo, int hi) {
    ManinReport rep;
    rep.span = wbasis_span_check(W, P, lo, hi);
    rep.diagonal_isotropic = true;
    const MetricAlgebra& M = P.metric();
    for (int j = 0; j <= hi && rep.diagonal_isotropic; ++j)
        for (int k = 0; k <= hi && rep.diagonal_isotropic; ++k)
            for (int p = 0; p < M.dim() && rep.diagonal_isotropic; ++p)
                for (int q = 0; q < M.dim(); ++q) {
                    DnElement a = dn_diag(P.handle(), P.n(), el_monomial(M.algebra().basis(p), j));
                    DnElement b = dn_diag(P.handle(), P.n(), el_monomial(M.algebra().basis(q), k));
                    if (!P.pair(a, b).is_zero()) {
                        rep.diagonal_isotropic = false;
                        break;
                    }
                }
    return rep;
}

/// The comultiplication determined by the triple: delta(a) is recovered from
/// beta^{x2}(delta(a), w1 (x) w2) = beta(a, w1 w2) through generator degree kmax.
/// Requires lambda = 1, where generators pair dually to the diagonal monomials.
inline Cocycle determined_delta(const WBasis& W, const ResiduePairing& P, int kmax, int gen_window) {
    if (!P.lambda_is_one())
        throw ParameterMismatch("determined_delta needs the normalized pairing lambda = 1");
    const MetricAlgebra& M = P.metric();
    int d = M.dim();
    Cocycle out;
    out.M = P.handle();
    out.trunc = kmax;
    out.images.resize(kmax + 1, std::vector<Series2<Tensor2>>(d, Series2<Tensor2>(gen_window)));

    std::vector<std::vector<DnElement>> gens(gen_window + 1);
    for (int k = 0; k <= gen_window; ++k)
        for (int i = 0; i < d; ++i) gens[k].push_back(wbasis_generator(W, P.lambda(), k, i));

    for (int k = 0; k <= kmax; ++k)
        for (int i = 0; i < d; ++i) {
            DnElement a = dn_diag(P.handle(), P.n(), el_monomial(M.algebra().basis(i), k));
            Series2<Tensor2>& img = out.images[k][i];
            for (int k2 = 0; k2 <= gen_window; ++k2)
                for (int k3 = 0; k2 + k3 <= gen_window; ++k3) {
                    Tensor2 T(d);
                    bool nonzero = false;
                    for (int i2 = 0; i2 < d; ++i2)
                        for (int i3 = 0; i3 < d; ++i3) {
                            Scalar c = P.pair(a, dn_mul(gens[k2][i2], gens[k3][i3]));
                            if (!c.is_zero()) {
                                T.at(i2, i3) = c;
                                nonzero = true;
                            }
                        }
                    if (nonzero) img.set(k2, k3, T);
                }
        }
    return out;
}

} // namespace acyb
