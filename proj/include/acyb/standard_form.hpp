#pragma once

#include "acyb/dn.hpp"

namespace acyb {

/// Series of type (n, lambda): r(x,y) = y^n lambda(x) gamma / (x-y) + t(x,y),
/// stored through the rational representation r = R/(x-y) with
/// R = y^n lambda(x) gamma + (x-y) t.
struct StandardFormSeries {
    MetricHandle M;
    int n = 0;
    Series1<Scalar> lambda;
    Series2<Tensor2> tail;
    int trunc = 0;

    StandardFormSeries() = default;
    StandardFormSeries(MetricHandle alg, int order, Series1<Scalar> lam, Series2<Tensor2> t, int N)
        : M(std::move(alg)), n(order), lambda(std::move(lam)), tail(std::move(t)), trunc(N) {
        const Scalar* c0 = lambda.get(0);
        if (!c0 || c0->is_zero()) throw NotAUnit();
        if (order < 0) throw IndexOutOfRange("pole order must be nonnegative");
    }
};

inline Series1<Scalar> one_series() {
    Series1<Scalar> one;
    one.set(0, Scalar(1));
    return one;
}

inline Series1<Scalar> poly_z() {
    Series1<Scalar> z;
    z.set(1, Scalar(1));
    return z;
}

/// R = y^n lambda(x) gamma + (x - y) t.
inline Series2<Tensor2> numerator(const StandardFormSeries& r) {
    Tensor2 gamma = casimir_gamma(*r.M);
    Series2<Tensor2> pole(sat_add(r.lambda.trunc, r.n));
    for (const auto& [j, lj] : r.lambda.terms) pole.set(j, r.n, t_scale(lj, gamma));
    Series2<Scalar> xmy;
    xmy.set(1, 0, Scalar(1));
    xmy.set(0, 1, Scalar(-1));
    auto shifted = s2_mul(xmy, r.tail, [](const Scalar& s, const Tensor2& t) { return t_scale(s, t); });
    return s2_add(pole, shifted);
}

/// Reads (n, lambda, t) back from a numerator series: the diagonal must be
/// z^n lambda(z) gamma with lambda a unit.
inline StandardFormSeries from_numerator(const MetricHandle& M, const Series2<Tensor2>& R) {
    Tensor2 gamma = casimir_gamma(*M);
    int p0 = -1, q0 = -1;
    for (int p = 0; p < gamma.d && p0 < 0; ++p)
        for (int q = 0; q < gamma.d; ++q)
            if (!gamma.at(p, q).is_zero()) {
                p0 = p;
                q0 = q;
                break;
            }
    Series1<Tensor2> diag = s2_diagonal(R);
    Series1<Scalar> scalar_diag(diag.trunc);
    for (const auto& [e, T] : diag.terms) {
        Scalar c = T.at(p0, q0) / gamma.at(p0, q0);
        if (!t_eq(T, t_scale(c, gamma)))
            throw IncompatibleCoefficients("numerator diagonal is not a multiple of gamma at degree " +
                                           std::to_string(e));
        scalar_diag.set(e, c);
    }
    if (scalar_diag.is_zero()) throw DiagonalVanishes();
    int n = scalar_diag.terms.begin()->first;
    Series1<Scalar> lambda(scalar_diag.trunc == kExact ? kExact : scalar_diag.trunc - n);
    for (const auto& [e, c] : scalar_diag.terms) lambda.set(e - n, c);

    Series2<Tensor2> pole(sat_add(lambda.trunc, n));
    for (const auto& [j, lj] : lambda.terms) pole.set(j, n, t_scale(lj, gamma));
    Series2<Tensor2> tail = divide_by_diagonal(s2_sub(R, pole));
    int trunc = sat_min(tail.trunc, sat_add(lambda.trunc, n));
    return StandardFormSeries(M, n, std::move(lambda), std::move(tail), trunc);
}

/// Unique representation of a(x,y) gamma/(x-y) + s(x,y) as a type (n, lambda)
/// series: a(z,z) = z^n lambda(z), tail = b gamma + s with a - y^n lambda(x) =
/// (x-y) b.
inline StandardFormSeries normalize_type(const MetricHandle& M, const Series2<Scalar>& a,
                                         const Series2<Tensor2>& s) {
    Series1<Scalar> diag = s2_diagonal(a);
    if (diag.is_zero()) throw DiagonalVanishes();
    int n = diag.terms.begin()->first;
    Series1<Scalar> lambda(diag.trunc == kExact ? kExact : diag.trunc - n);
    for (const auto& [e, c] : diag.terms) lambda.set(e - n, c);

    Series2<Scalar> pole(sat_add(lambda.trunc, n));
    for (const auto& [j, lj] : lambda.terms) pole.set(j, n, lj);
    Series2<Scalar> b = divide_by_diagonal(s2_sub(a, pole));
    Tensor2 gamma = casimir_gamma(*M);
    Series2<Tensor2> bg(b.trunc);
    for (const auto& [e, c] : b.terms) bg.set(e.first, e.second, t_scale(c, gamma));
    Series2<Tensor2> tail = s2_add(bg, s);
    return StandardFormSeries(M, n, std::move(lambda), std::move(tail), sat_min(tail.trunc, sat_add(lambda.trunc, n)));
}

/// bar(r)(x,y) = -tau r(y,x); a series of the same type (n, lambda).
inline StandardFormSeries bar(const StandardFormSeries& r) {
    Series2<Tensor2> R = numerator(r);
    Series2<Tensor2> flipped(R.trunc);
    for (const auto& [e, T] : R.terms) flipped.set(e.second, e.first, flip(T));
    return from_numerator(r.M, flipped);
}

/// r is skew-symmetric when r = bar(r) through the common truncation.
inline bool is_skew(const StandardFormSeries& r) {
    StandardFormSeries rb = bar(r);
    if (r.n != rb.n) return false;
    return s1_eq(r.lambda, rb.lambda) && s2_eq(r.tail, rb.tail);
}

/// Constant-in-z algebra automorphism data for the trigonometric emitter:
/// sigma of order m, a primitive m-th root eps, and the eigencomponents of
/// gamma with (sigma (x) 1) gamma_j = eps^j gamma_j.
struct TrigFormData {
    unsigned m = 1;
    Mat sigma;                   // d x d matrix of the automorphism
    Scalar eps;                  // primitive m-th root of unity
    std::vector<Tensor2> gammas; // size m
    // finite Laurent tail in the loop variables: (a, b) -> coefficient of w1^a w2^b
    std::map<std::pair<int, int>, Tensor2> loop_tail;
};

inline Tensor2 apply_leg1(const Mat& phi, const Tensor2& t) {
    Tensor2 out(t.d);
    for (int p = 0; p < t.d; ++p)
        for (int q = 0; q < t.d; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (int r = 0; r < t.d; ++r)
                if (!phi[r][p].is_zero()) out.at(r, q) += phi[r][p] * t.at(p, q);
        }
    return out;
}

inline Tensor2 apply_leg2(const Mat& phi, const Tensor2& t) {
    Tensor2 out(t.d);
    for (int p = 0; p < t.d; ++p)
        for (int q = 0; q < t.d; ++q) {
            if (t.at(p, q).is_zero()) continue;
            for (int r = 0; r < t.d; ++r)
                if (!phi[r][q].is_zero()) out.at(p, r) += phi[r][q] * t.at(p, q);
        }
    return out;
}

namespace detail {

inline void validate_trig_data(const MetricAlgebra& M, const TrigFormData& data) {
    int d = M.dim();
    const Algebra& A = M.algebra();
    if (data.gammas.size() != data.m) throw EigencomponentMismatch("need one eigencomponent per residue class");
    if (!(data.eps.pow(data.m) == Scalar(1))) throw EigencomponentMismatch("eps^m != 1");
    for (unsigned j = 1; j < data.m; ++j)
        if (data.eps.pow(j) == Scalar(1)) throw EigencomponentMismatch("eps is not primitive");
    // sigma multiplicative and of order m
    auto apply = [&](const Element& x) {
        Element out(d);
        for (int r = 0; r < d; ++r)
            for (int p = 0; p < d; ++p) out[r] += data.sigma[r][p] * x[p];
        return out;
    };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Element lhs = apply(A.mul(A.basis(i), A.basis(j)));
            Element rhs = A.mul(apply(A.basis(i)), apply(A.basis(j)));
            if (lhs != rhs) throw EigencomponentMismatch("sigma is not multiplicative");
        }
    Mat power = mat_identity(d);
    for (unsigned k = 0; k < data.m; ++k) power = mat_mul(data.sigma, power);
    if (!(power == mat_identity(d))) throw EigencomponentMismatch("sigma does not have order m");

    Tensor2 gamma = casimir_gamma(M);
    Tensor2 sum(d);
    for (unsigned j = 0; j < data.m; ++j) {
        sum = t_add(sum, data.gammas[j]);
        Tensor2 lhs = apply_leg1(data.sigma, data.gammas[j]);
        Tensor2 rhs = t_scale(data.eps.pow(j), data.gammas[j]);
        if (!t_eq(lhs, rhs)) throw EigencomponentMismatch("gamma_" + std::to_string(j) + " eigenspace check failed");
    }
    if (!t_eq(sum, gamma)) throw EigencomponentMismatch("eigencomponents do not sum to gamma");
}

// (x-y)^k expanded as an exact two-variable polynomial.
inline Series2<Scalar> xmy_power(int k) {
    Series2<Scalar> out;
    mpz_class binom = 1;
    for (int j = 0; j <= k; ++j) {
        Scalar c = Scalar(mpq_class(binom));
        if (j % 2 == 1) c = -c;
        out.set(k - j, j, c);
        binom = binom * (k - j) / (j + 1);
    }
    return out;
}

} // namespace detail

/// Emitters for the four standard forms. The emitters construct candidate
/// series only; solutionhood is decided by the equation evaluators.
inline StandardFormSeries emit_rational(const MetricHandle& M, Series2<Tensor2> t, int N) {
    return StandardFormSeries(M, 0, one_series(), s2_truncate(std::move(t), N), N);
}

inline StandardFormSeries emit_quasi_trigonometric(const MetricHandle& M, Series2<Tensor2> t, int N) {
    return StandardFormSeries(M, 1, one_series(), s2_truncate(std::move(t), N), N);
}

inline StandardFormSeries emit_quasi_rational(const MetricHandle& M, Series2<Tensor2> t, int N) {
    return StandardFormSeries(M, 2, one_series(), s2_truncate(std::move(t), N), N);
}

/// Trigonometric candidate: (1/(e^{x-y}-1)) sum_j e^{j'(x-y)/m} gamma_j +
/// t(e^{x/m}, e^{y/m}) with j' = m for the 0-th eigencomponent and j' = j
/// otherwise, expanded exactly as a type (0, lambda) series.
inline StandardFormSeries emit_trigonometric(const MetricHandle& M, const TrigFormData& data, int N) {
    detail::validate_trig_data(*M, data);
    int m = static_cast<int>(data.m);
    Laurent1<Scalar> bern = bernoulli_expansion(N + 1);
    Series2<Tensor2> tail(N);

    for (int j = 0; j < m; ++j) {
        if (t_is_zero(data.gammas[j])) continue;
        int jj = (j == 0) ? m : j;
        // f_j(u) = e^{jj u / m} / (e^u - 1) on the window [-1, N]
        Series1<Scalar> numer = substitute(exp_series(N + 1), s1_scale(Scalar(jj, m), poly_z()), N + 1);
        Laurent1<Scalar> numer_l(0, N + 1);
        for (const auto& [e, c] : numer.terms) numer_l.set(e, c);
        Laurent1<Scalar> fj = l1_mul(bern, numer_l, [](const Scalar& a, const Scalar& b) { return a * b; });
        // principal part must be gamma_j / (x - y): coefficient of u^{-1} is 1
        const Scalar* res = fj.get(-1);
        if (!res || !(*res == Scalar(1))) throw EigencomponentMismatch("pole coefficient is not 1");
        for (const auto& [k, c] : fj.terms) {
            if (k < 0 || k > N) continue;
            Series2<Scalar> pw = detail::xmy_power(k);
            for (const auto& [e, b] : pw.terms) tail.accumulate(e.first, e.second, t_scale(c * b, data.gammas[j]));
        }
    }

    for (const auto& [ab, T] : data.loop_tail) {
        // w1^a w2^b -> e^{a x / m} e^{b y / m}
        Series1<Scalar> ex = substitute(exp_series(N), s1_scale(Scalar(ab.first, m), poly_z()), N);
        Series1<Scalar> ey = substitute(exp_series(N), s1_scale(Scalar(ab.second, m), poly_z()), N);
        for (const auto& [p, cp] : ex.terms)
            for (const auto& [q, cq] : ey.terms) {
                if (p + q > N) continue;
                tail.accumulate(p, q, t_scale(cp * cq, T));
            }
    }
    return StandardFormSeries(M, 0, one_series(), std::move(tail), N);
}

/// Reparametrization and constant-free automorphism action:
/// (phi(x) (x) phi(y)) r(u(x), u(y)).
struct GaugeData {
    std::vector<std::vector<Series1<Scalar>>> phi; // d x d matrix of series in z
    Series1<Scalar> u;                             // u(0) = 0, u'(0) != 0
};

namespace detail {

inline void validate_gauge(const MetricAlgebra& M, const GaugeData& g, int N) {
    if (const Scalar* c = g.u.get(0); c && !c->is_zero()) throw NonvanishingConstantTerm();
    const Scalar* u1 = g.u.get(1);
    if (!u1 || u1->is_zero()) throw NotAUnit();
    int d = M.dim();
    const Algebra& A = M.algebra();
    // phi(z) applied to an element, as an element-valued series
    auto apply = [&](int i) {
        Series1<Element> out(N);
        for (int r = 0; r < d; ++r)
            for (const auto& [e, c] : g.phi[r][i].terms) {
                if (e > N) continue;
                Element v(d);
                v[r] = c;
                out.accumulate(e, v);
            }
        return out;
    };
    auto mulel = [&](const Element& a, const Element& b) { return A.mul(a, b); };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            // phi(b_i) phi(b_j) = phi(b_i b_j) through degree N
            Series1<Element> lhs = s1_mul(apply(i), apply(j), mulel);
            Series1<Element> rhs(N);
            Element prod = A.mul(A.basis(i), A.basis(j));
            for (int k = 0; k < d; ++k) {
                if (prod[k].is_zero()) continue;
                for (int r = 0; r < d; ++r)
                    for (const auto& [e, c] : g.phi[r][k].terms) {
                        if (e > N) continue;
                        Element v(d);
                        v[r] = c * prod[k];
                        rhs.accumulate(e, v);
                    }
            }
            if (!s1_eq(s1_truncate(lhs, N), rhs))
                throw ParameterMismatch("phi is not multiplicative through degree " + std::to_string(N));
        }
}

} // namespace detail

/// Substitute x <- u(x), y <- u(y) in the rational representation and apply
/// phi (x) phi; the image is renormalized to a type (n, lambda) series.
inline StandardFormSeries gauge_transform(const StandardFormSeries& r, const GaugeData& g, int N) {
    const MetricAlgebra& M = *r.M;
    detail::validate_gauge(M, g, N);
    Series2<Tensor2> R = numerator(r);
    Series2<Tensor2> Rsub = s2_substitute_xy(R, g.u, N + 1);
    // u(x) - u(y) = (x - y) q with q a two-variable unit
    Series2<Scalar> du(g.u.trunc);
    for (const auto& [e, c] : g.u.terms) {
        du.accumulate(e, 0, c);
        du.accumulate(0, e, -c);
    }
    Series2<Scalar> q = divide_by_diagonal(du);
    Series2<Scalar> qinv = s2_invert_unit(q, N + 1);
    Series2<Tensor2> R2 = s2_mul(qinv, Rsub, [](const Scalar& s, const Tensor2& t) { return t_scale(s, t); });

    // apply phi to both legs with the matching variable shifts
    int d = M.dim();
    Series2<Tensor2> R3(R2.trunc);
    for (const auto& [e, T] : R2.terms) {
        // leg 1 with series in x
        std::map<int, Tensor2> partial; // x-shift -> tensor
        for (int p = 0; p < d; ++p)
            for (int q2 = 0; q2 < d; ++q2) {
                if (T.at(p, q2).is_zero()) continue;
                for (int rr = 0; rr < d; ++rr)
                    for (const auto& [j, c] : g.phi[rr][p].terms) {
                        auto [it, fresh] = partial.try_emplace(j, Tensor2(d));
                        it->second.at(rr, q2) += c * T.at(p, q2);
                    }
            }
        for (const auto& [j, TP] : partial) {
            // leg 2 with series in y
            for (int p = 0; p < d; ++p)
                for (int q2 = 0; q2 < d; ++q2) {
                    if (TP.at(p, q2).is_zero()) continue;
                    for (int rr = 0; rr < d; ++rr)
                        for (const auto& [k, c] : g.phi[rr][q2].terms) {
                            Tensor2 unitt(d);
                            unitt.at(p, rr) = c * TP.at(p, q2);
                            R3.accumulate(e.first + j, e.second + k, unitt);
                        }
                }
        }
    }
    return from_numerator(r.M, R3);
}

} // namespace acyb
