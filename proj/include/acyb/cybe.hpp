#pragma once

#include "acyb/bialgebra.hpp"

namespace acyb {

namespace detail {

// tau-twisted numerator: bar(r) = tau R(y,x) / (x-y).
inline Series2<Tensor2> bar_numerator(const Series2<Tensor2>& R) {
    Series2<Tensor2> out(R.trunc);
    for (const auto& [e, T] : R.terms) out.set(e.second, e.first, flip(T));
    return out;
}

// multiply a trivariate series by (z_i - z_j)
template <class C>
Series3<C> mul_linear(const Series3<C>& f, int i, int j) {
    Series3<C> out(sat_add(f.trunc, 1));
    for (const auto& [e, c] : f.terms) {
        auto e1 = e;
        e1[i] += 1;
        out.accumulate(e1, c);
        auto e2 = e;
        e2[j] += 1;
        out.accumulate(e2, coeff_neg(c));
    }
    return out;
}

} // namespace detail

/// Value of the equation evaluators: a power series part plus, for CYB on
/// non-skew input, a genuine first-order pole along z1 = z3:
/// value = regular + polar(z2, z3)/(z1 - z3).
struct CybResult {
    Series3<Tensor3> regular;
    Series2<Tensor3> polar;

    bool is_zero() const { return regular.is_zero() && polar.is_zero(); }
};

/// CYB(r) = r13 r12 - r12 r23 + r23 r13 and GCYB(r) with bar(r)23 in the last
/// term, evaluated exactly through total degree N. Strategy: expand the
/// numerator over the common denominator (z1-z2)(z1-z3)(z2-z3); the factors
/// (z1-z2) and (z2-z3) always divide out by the invariance of gamma, while the
/// (z1-z3) division leaves the skew defect as a remainder.
inline CybResult cyb_eval(const StandardFormSeries& r, int N, bool generalized) {
    const MetricAlgebra& M = *r.M;
    Series2<Tensor2> R = numerator(r);
    if (R.trunc != kExact && R.trunc < N + 2)
        throw TruncationTooSmall("verification through degree " + std::to_string(N) +
                                 " needs the series through degree " + std::to_string(N + 2));
    R = s2_truncate(R, N + 2);
    R.trunc = N + 2;
    Series2<Tensor2> L = generalized ? detail::bar_numerator(R) : R;
    LegEngine legs(M.algebra());

    Series3<Tensor3> p13_12(N + 2), p12_23(N + 2), p23_13(N + 2);
    for (const auto& [ef, Tf] : R.terms) {
        for (const auto& [eg, Tg] : R.terms) {
            // R13(z1,z3) R12(z1,z2) at z1^{a+a'} z2^{b'} z3^{c}
            if (ef.first + eg.first + eg.second + ef.second <= N + 2)
                p13_12.accumulate({ef.first + eg.first, eg.second, ef.second}, legs.p13_12(Tf, Tg));
            // R12(z1,z2) R23(z2,z3) at z1^{a} z2^{b+b'} z3^{c'}
            if (ef.first + ef.second + eg.first + eg.second <= N + 2)
                p12_23.accumulate({ef.first, ef.second + eg.first, eg.second}, legs.p12_23(Tf, Tg));
        }
        // L23(z2,z3) R13(z1,z3) at z1^{a'} z2^{b} z3^{c+c'}
    }
    for (const auto& [ef, Tf] : L.terms)
        for (const auto& [eg, Tg] : R.terms) {
            if (ef.first + ef.second + eg.first + eg.second <= N + 2)
                p23_13.accumulate({eg.first, ef.first, ef.second + eg.second}, legs.p23_13(Tf, Tg));
        }

    Series3<Tensor3> numer = s3_sub(detail::mul_linear(p13_12, 1, 2), detail::mul_linear(p12_23, 0, 2));
    numer = s3_add(numer, detail::mul_linear(p23_13, 0, 1));
    numer.trunc = N + 3;
    Series3<Tensor3> q = s3_divide_linear(s3_divide_linear(numer, 0, 1), 1, 2);
    auto [regular, rem] = s3_divide_linear_rem(q, 0, 2);
    CybResult out;
    out.regular = std::move(regular);
    out.regular.trunc = N;
    for (auto it = out.regular.terms.begin(); it != out.regular.terms.end();) {
        if (it->first[0] + it->first[1] + it->first[2] > N)
            it = out.regular.terms.erase(it);
        else
            ++it;
    }
    out.polar = Series2<Tensor3>(rem.trunc == kExact ? kExact : rem.trunc);
    for (const auto& [e, T] : rem.terms) out.polar.set(e[1], e[2], T);
    if (generalized && !out.polar.is_zero())
        throw NotDivisible("generalized evaluator produced a pole; the input is not of standard form");
    return out;
}

inline CybResult cyb(const StandardFormSeries& r, int N) { return cyb_eval(r, N, false); }
inline CybResult gcyb(const StandardFormSeries& r, int N) { return cyb_eval(r, N, true); }

/// A(r): the tails t_{k,i} read off from the tail series; requires polynomial
/// tails, i.e. no nonzero coefficient at the truncation boundary.
inline WBasis series_to_subspace(const StandardFormSeries& r) {
    const MetricAlgebra& M = *r.M;
    int d = M.dim();
    int bound = 0;
    for (const auto& [e, T] : r.tail.terms) {
        if (t_is_zero(T)) continue;
        if (r.tail.trunc != kExact && e.first + e.second >= r.tail.trunc)
            throw NonPolynomialTail("tail coefficient at the truncation boundary (" + std::to_string(e.first) + "," +
                                    std::to_string(e.second) + ")");
        bound = std::max(bound, e.second + 1);
    }
    WBasis W(r.M, r.n, bound);
    for (const auto& [e, T] : r.tail.terms) {
        for (int i = 0; i < d; ++i) {
            Element c(d);
            bool nz = false;
            for (int p = 0; p < d; ++p) {
                c[p] = T.at(p, i);
                nz = nz || !c[p].is_zero();
            }
            if (nz) W.tails[e.second][i].accumulate(e.first, c);
        }
    }
    return W;
}

/// r = y^n lambda(x) gamma/(x-y) + sum t_{k,i} (x) b_i y^k.
inline StandardFormSeries subspace_to_series(const WBasis& W, Series1<Scalar> lambda, int N) {
    const MetricAlgebra& M = *W.M;
    int d = M.dim();
    Series2<Tensor2> tail(kExact);
    for (int k = 0; k < W.tail_bound; ++k)
        for (int i = 0; i < d; ++i)
            for (const auto& [j, c] : W.tails[k][i].terms) {
                Tensor2 T(d);
                for (int p = 0; p < d; ++p) T.at(p, i) = c[p];
                if (!t_is_zero(T)) {
                    Series2<Tensor2> single(kExact);
                    single.set(j, k, T);
                    tail = s2_add(tail, single);
                }
            }
    return StandardFormSeries(W.M, W.n, std::move(lambda), std::move(tail), N);
}

/// Orthogonality of the attached families: the pairing table of A(r) against A(bar r)
/// vanishes in the window and the bar family is complementary per degree.
inline bool orthogonality_check(const StandardFormSeries& r, const ResiduePairing& P, int lo, int hi) {
    WBasis Wr = series_to_subspace(r);
    StandardFormSeries rb = bar(r);
    WBasis Wb = series_to_subspace(rb);
    int kmax = P.n() - 1 - lo;
    for (int k1 = 0; k1 <= kmax; ++k1)
        for (int i1 = 0; i1 < P.metric().dim(); ++i1) {
            DnElement g1 = wbasis_generator(Wr, r.lambda, k1, i1);
            for (int k2 = 0; k2 <= kmax; ++k2)
                for (int i2 = 0; i2 < P.metric().dim(); ++i2) {
                    DnElement g2 = wbasis_generator(Wb, rb.lambda, k2, i2);
                    if (!P.pair(g1, g2).is_zero()) return false;
                }
        }
    SpanReport rep = wbasis_span_check(Wb, P, lo, hi);
    return rep.complementary;
}

/// beta^{x3}(bar r_{k1,i1} (x) r_{k2,i2} (x) r_{k3,i3}, GCYB(r)) =
/// beta_{(n,lambda)}(bar r_{k1,i1}, r_{k3,i3} r_{k2,i2}) for all generator
/// triples with k <= kmax. Holds for every series of the right shape, solution
/// or not.
inline bool gcyb_pairing_identity(const StandardFormSeries& r, const ResiduePairing& P, int kmax) {
    const MetricAlgebra& M = P.metric();
    int d = M.dim();
    int N = 3 * kmax;
    Series3<Tensor3> phi = gcyb(r, N).regular;

    WBasis Wr = series_to_subspace(r);
    StandardFormSeries rb = bar(r);
    WBasis Wb = series_to_subspace(rb);

    // pairing tables against diagonal monomials: gen x (p, e) -> scalar
    auto table = [&](const DnElement& g) {
        std::vector<std::vector<Scalar>> t(d, std::vector<Scalar>(N + 1));
        for (int p = 0; p < d; ++p)
            for (int e = 0; e <= N; ++e)
                t[p][e] = P.pair(g, dn_diag(P.handle(), P.n(), el_monomial(M.algebra().basis(p), e)));
        return t;
    };
    std::vector<std::vector<DnElement>> gr(kmax + 1), gb(kmax + 1);
    std::vector<std::vector<std::vector<std::vector<Scalar>>>> tr(kmax + 1), tb(kmax + 1);
    for (int k = 0; k <= kmax; ++k)
        for (int i = 0; i < d; ++i) {
            gr[k].push_back(wbasis_generator(Wr, r.lambda, k, i));
            gb[k].push_back(wbasis_generator(Wb, rb.lambda, k, i));
            tr[k].push_back(table(gr[k][i]));
            tb[k].push_back(table(gb[k][i]));
        }

    for (int k1 = 0; k1 <= kmax; ++k1)
        for (int i1 = 0; i1 < d; ++i1)
            for (int k2 = 0; k2 <= kmax; ++k2)
                for (int i2 = 0; i2 < d; ++i2)
                    for (int k3 = 0; k3 <= kmax; ++k3)
                        for (int i3 = 0; i3 < d; ++i3) {
                            Scalar lhs;
                            for (const auto& [e, T] : phi.terms) {
                                for (int p = 0; p < d; ++p) {
                                    const Scalar& c1 = tb[k1][i1][p][e[0]];
                                    if (c1.is_zero()) continue;
                                    for (int q = 0; q < d; ++q) {
                                        const Scalar& c2 = tr[k2][i2][q][e[1]];
                                        if (c2.is_zero()) continue;
                                        for (int s = 0; s < d; ++s) {
                                            const Scalar& c3 = tr[k3][i3][s][e[2]];
                                            if (c3.is_zero()) continue;
                                            const Scalar& cc = T.at(p, q, s);
                                            if (!cc.is_zero()) lhs += c1 * c2 * c3 * cc;
                                        }
                                    }
                                }
                            }
                            Scalar rhs = P.pair(gb[k1][i1], dn_mul(gr[k3][i3], gr[k2][i2]));
                            if (!(lhs == rhs)) return false;
                        }
    return true;
}

} // namespace acyb
