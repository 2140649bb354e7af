#pragma once

#include <array>
#include <limits>
#include <map>

#include "acyb/algebra.hpp"

namespace acyb {

/// Truncation sentinel: the series is known (and stored) at every degree.
constexpr int kExact = std::numeric_limits<int>::max();

inline int sat_add(int a, int b) {
    if (a == kExact || b == kExact) return kExact;
    long s = static_cast<long>(a) + b;
    if (s >= kExact) return kExact;
    return static_cast<int>(s);
}

inline int sat_min(int a, int b) { return a < b ? a : b; }

// Coefficient operations, overloaded per coefficient space.
inline Scalar coeff_add(const Scalar& a, const Scalar& b) { return a + b; }
inline Scalar coeff_neg(const Scalar& a) { return -a; }
inline Scalar coeff_scale(const Scalar& s, const Scalar& a) { return s * a; }
inline bool coeff_is_zero(const Scalar& a) { return a.is_zero(); }
inline bool coeff_eq(const Scalar& a, const Scalar& b) { return a == b; }

inline Element coeff_add(const Element& a, const Element& b) { return el_add(a, b); }
inline Element coeff_neg(const Element& a) { return el_scale(Scalar(-1), a); }
inline Element coeff_scale(const Scalar& s, const Element& a) { return el_scale(s, a); }
inline bool coeff_is_zero(const Element& a) { return el_is_zero(a); }
inline bool coeff_eq(const Element& a, const Element& b) { return a == b; }

inline Tensor2 coeff_add(const Tensor2& a, const Tensor2& b) { return t_add(a, b); }
inline Tensor2 coeff_neg(const Tensor2& a) { return t_neg(a); }
inline Tensor2 coeff_scale(const Scalar& s, const Tensor2& a) { return t_scale(s, a); }
inline bool coeff_is_zero(const Tensor2& a) { return t_is_zero(a); }
inline bool coeff_eq(const Tensor2& a, const Tensor2& b) { return t_eq(a, b); }

inline Tensor3 coeff_add(const Tensor3& a, const Tensor3& b) { return t_add(a, b); }
inline Tensor3 coeff_neg(const Tensor3& a) { return t_neg(a); }
inline Tensor3 coeff_scale(const Scalar& s, const Tensor3& a) { return t_scale(s, a); }
inline bool coeff_is_zero(const Tensor3& a) { return t_is_zero(a); }
inline bool coeff_eq(const Tensor3& a, const Tensor3& b) { return t_eq(a, b); }

/// Truncated power series in one variable: coefficients of degree <= trunc are
/// stored (zero if absent); degrees beyond trunc are unknown unless trunc is
/// kExact.
template <class C>
struct Series1 {
    std::map<int, C> terms;
    int trunc = kExact;

    Series1() = default;
    explicit Series1(int t) : trunc(t) {}

    void set(int e, C c) {
        if (coeff_is_zero(c)) {
            terms.erase(e);
        } else {
            terms[e] = std::move(c);
        }
    }
    void accumulate(int e, const C& c) {
        if (e > trunc) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!coeff_is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = coeff_add(it->second, c);
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
    const C* get(int e) const {
        auto it = terms.find(e);
        return it == terms.end() ? nullptr : &it->second;
    }
    int valuation_bound() const { // degree below which nothing can be nonzero
        if (!terms.empty()) return terms.begin()->first;
        return trunc == kExact ? kExact : sat_add(trunc, 1);
    }
    bool is_zero() const { return terms.empty(); }
};

template <class C>
Series1<C> s1_truncate(Series1<C> f, int N) {
    f.trunc = sat_min(f.trunc, N);
    for (auto it = f.terms.begin(); it != f.terms.end();) {
        if (it->first > f.trunc)
            it = f.terms.erase(it);
        else
            ++it;
    }
    return f;
}

template <class C>
Series1<C> s1_add(const Series1<C>& f, const Series1<C>& g) {
    Series1<C> out(sat_min(f.trunc, g.trunc));
    for (const auto& [e, c] : f.terms)
        if (e <= out.trunc) out.accumulate(e, c);
    for (const auto& [e, c] : g.terms)
        if (e <= out.trunc) out.accumulate(e, c);
    return out;
}

template <class C>
Series1<C> s1_neg(Series1<C> f) {
    for (auto& [e, c] : f.terms) c = coeff_neg(c);
    return f;
}

template <class C>
Series1<C> s1_sub(const Series1<C>& f, const Series1<C>& g) { return s1_add(f, s1_neg(g)); }

template <class C>
Series1<C> s1_scale(const Scalar& s, Series1<C> f) {
    if (s.is_zero()) return Series1<C>(f.trunc);
    for (auto& [e, c] : f.terms) c = coeff_scale(s, c);
    return f;
}

template <class A, class B, class Mul>
auto s1_mul(const Series1<A>& f, const Series1<B>& g, Mul mul) -> Series1<decltype(mul(f.terms.begin()->second, g.terms.begin()->second))> {
    using C = decltype(mul(f.terms.begin()->second, g.terms.begin()->second));
    Series1<C> out(sat_min(sat_add(f.trunc, g.valuation_bound()), sat_add(g.trunc, f.valuation_bound())));
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            if (out.trunc != kExact && e1 + e2 > out.trunc) continue;
            out.accumulate(e1 + e2, mul(c1, c2));
        }
    return out;
}

inline Series1<Scalar> s1_mul(const Series1<Scalar>& f, const Series1<Scalar>& g) {
    return s1_mul(f, g, [](const Scalar& a, const Scalar& b) { return a * b; });
}

template <class C>
bool s1_eq(const Series1<C>& f, const Series1<C>& g) { // up to the common truncation
    int t = sat_min(f.trunc, g.trunc);
    for (const auto& [e, c] : f.terms) {
        if (e > t) continue;
        const C* o = g.get(e);
        if (!o ? !coeff_is_zero(c) : !coeff_eq(c, *o)) return false;
    }
    for (const auto& [e, c] : g.terms) {
        if (e > t) continue;
        if (!f.get(e) && !coeff_is_zero(c)) return false;
    }
    return true;
}

/// g with f * g = 1 through degree N. Requires an invertible constant term.
inline Series1<Scalar> invert_unit(const Series1<Scalar>& f, int N) {
    const Scalar* c0 = f.get(0);
    if (!c0 || c0->is_zero()) throw NotAUnit();
    int t = sat_min(N, f.trunc);
    Series1<Scalar> g(t);
    Scalar inv0 = c0->inv();
    g.set(0, inv0);
    for (int e = 1; e <= t; ++e) {
        Scalar acc;
        for (const auto& [k, fk] : f.terms) {
            if (k < 1 || k > e) continue;
            if (const Scalar* ge = g.get(e - k)) acc += fk * *ge;
        }
        if (!acc.is_zero()) g.set(e, -inv0 * acc);
    }
    return g;
}

/// Composition f(u(z)) through degree N; u must have zero constant term.
template <class C>
Series1<C> substitute(const Series1<C>& f, const Series1<Scalar>& u, int N) {
    if (const Scalar* c = u.get(0); c && !c->is_zero()) throw NonvanishingConstantTerm();
    int vu = 1;
    if (!u.terms.empty()) vu = std::max(1, u.terms.begin()->first);
    int bound = sat_min(N, u.trunc);
    if (f.trunc != kExact) bound = sat_min(bound, sat_add(f.trunc == kExact ? kExact : f.trunc * vu, vu - 1));
    Series1<C> out(bound);
    Series1<Scalar> upow;
    upow.set(0, Scalar(1)); // u^0
    int kmax = f.terms.empty() ? 0 : f.terms.rbegin()->first;
    for (int k = 0; k <= kmax; ++k) {
        if (bound != kExact && k > bound) break; // u^k has valuation >= k
        if (const C* fk = f.get(k)) {
            for (const auto& [e, c] : upow.terms) {
                if (bound != kExact && e > bound) continue;
                out.accumulate(e, coeff_scale(c, *fk));
            }
        }
        upow = s1_truncate(s1_mul(upow, u), bound);
    }
    return out;
}

/// exp(z) through degree N.
inline Series1<Scalar> exp_series(int N) {
    Series1<Scalar> f(N);
    mpq_class fact(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        f.set(k, Scalar(mpq_class(1) / fact));
    }
    return f;
}

/// Laurent window [lo, hi]: exponents below lo are known to vanish, above hi
/// are unknown (hi == kExact: known everywhere).
template <class C>
struct Laurent1 {
    std::map<int, C> terms;
    int lo = 0;
    int hi = kExact;

    Laurent1() = default;
    Laurent1(int l, int h) : lo(l), hi(h) {}

    void set(int e, C c) {
        if (coeff_is_zero(c)) {
            terms.erase(e);
        } else {
            if (e < lo) lo = e;
            terms[e] = std::move(c);
        }
    }
    void accumulate(int e, const C& c) {
        if (hi != kExact && e > hi) return;
        if (e < lo) lo = e;
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!coeff_is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = coeff_add(it->second, c);
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
    const C* get(int e) const {
        auto it = terms.find(e);
        return it == terms.end() ? nullptr : &it->second;
    }
    int valuation_bound() const {
        if (!terms.empty()) return terms.begin()->first;
        return hi == kExact ? kExact : sat_add(hi, 1);
    }
    bool is_zero() const { return terms.empty(); }
};

template <class C>
Laurent1<C> l1_add(const Laurent1<C>& f, const Laurent1<C>& g) {
    Laurent1<C> out(std::min(f.lo, g.lo), sat_min(f.hi, g.hi));
    for (const auto& [e, c] : f.terms)
        if (out.hi == kExact || e <= out.hi) out.accumulate(e, c);
    for (const auto& [e, c] : g.terms)
        if (out.hi == kExact || e <= out.hi) out.accumulate(e, c);
    return out;
}

template <class C>
Laurent1<C> l1_neg(Laurent1<C> f) {
    for (auto& [e, c] : f.terms) c = coeff_neg(c);
    return f;
}

template <class C>
Laurent1<C> l1_scale(const Scalar& s, Laurent1<C> f) {
    if (s.is_zero()) return Laurent1<C>(f.lo, f.hi);
    for (auto& [e, c] : f.terms) c = coeff_scale(s, c);
    return f;
}

template <class C>
Laurent1<C> l1_shift(Laurent1<C> f, int k) {
    std::map<int, C> shifted;
    for (auto& [e, c] : f.terms) shifted.emplace(e + k, std::move(c));
    f.terms = std::move(shifted);
    f.lo += k;
    f.hi = sat_add(f.hi, k);
    return f;
}

template <class A, class B, class Mul>
auto l1_mul(const Laurent1<A>& f, const Laurent1<B>& g, Mul mul) -> Laurent1<decltype(mul(f.terms.begin()->second, g.terms.begin()->second))> {
    using C = decltype(mul(f.terms.begin()->second, g.terms.begin()->second));
    // window algebra: attainable upper bounds compose as lo + hi
    Laurent1<C> out(f.lo + g.lo, sat_min(sat_add(f.lo, g.hi), sat_add(g.lo, f.hi)));
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            if (out.hi != kExact && e1 + e2 > out.hi) continue;
            out.accumulate(e1 + e2, mul(c1, c2));
        }
    return out;
}

template <class C>
bool l1_eq(const Laurent1<C>& f, const Laurent1<C>& g) {
    int hi = sat_min(f.hi, g.hi);
    for (const auto& [e, c] : f.terms) {
        if (hi != kExact && e > hi) continue;
        const C* o = g.get(e);
        if (!o ? !coeff_is_zero(c) : !coeff_eq(c, *o)) return false;
    }
    for (const auto& [e, c] : g.terms) {
        if (hi != kExact && e > hi) continue;
        if (!f.get(e) && !coeff_is_zero(c)) return false;
    }
    return true;
}

/// Laurent expansion of 1/(exp(z) - 1) on the window [-1, N].
inline Laurent1<Scalar> bernoulli_expansion(int N) {
    // (exp(z) - 1)/z is a unit with constant term 1; its inverse g gives
    // 1/(exp(z)-1) = z^{-1} g(z).
    Series1<Scalar> h(N + 1);
    mpq_class fact(1);
    for (int k = 0; k <= N + 1; ++k) {
        fact *= (k + 1);
        h.set(k, Scalar(mpq_class(1) / fact));
    }
    Series1<Scalar> g = invert_unit(h, N + 1);
    Laurent1<Scalar> out(-1, N);
    for (const auto& [e, c] : g.terms)
        if (e - 1 <= N) out.set(e - 1, c);
    return out;
}

/// Truncated series in two variables; trunc bounds the total degree.
template <class C>
struct Series2 {
    std::map<std::pair<int, int>, C> terms;
    int trunc = kExact;

    Series2() = default;
    explicit Series2(int t) : trunc(t) {}

    void set(int a, int b, C c) {
        if (coeff_is_zero(c)) {
            terms.erase({a, b});
        } else {
            terms[{a, b}] = std::move(c);
        }
    }
    void accumulate(int a, int b, const C& c) {
        if (trunc != kExact && a + b > trunc) return;
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            if (!coeff_is_zero(c)) terms.emplace(key, c);
        } else {
            it->second = coeff_add(it->second, c);
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
    const C* get(int a, int b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? nullptr : &it->second;
    }
    int valuation_bound() const {
        if (terms.empty()) return trunc == kExact ? kExact : sat_add(trunc, 1);
        int v = kExact;
        for (const auto& [e, c] : terms) v = std::min(v, e.first + e.second);
        return v;
    }
    bool is_zero() const { return terms.empty(); }
};

template <class C>
Series2<C> s2_truncate(Series2<C> f, int N) {
    f.trunc = sat_min(f.trunc, N);
    for (auto it = f.terms.begin(); it != f.terms.end();) {
        if (it->first.first + it->first.second > f.trunc)
            it = f.terms.erase(it);
        else
            ++it;
    }
    return f;
}

template <class C>
Series2<C> s2_add(const Series2<C>& f, const Series2<C>& g) {
    Series2<C> out(sat_min(f.trunc, g.trunc));
    for (const auto& [e, c] : f.terms) out.accumulate(e.first, e.second, c);
    for (const auto& [e, c] : g.terms) out.accumulate(e.first, e.second, c);
    return out;
}

template <class C>
Series2<C> s2_neg(Series2<C> f) {
    for (auto& [e, c] : f.terms) c = coeff_neg(c);
    return f;
}

template <class C>
Series2<C> s2_sub(const Series2<C>& f, const Series2<C>& g) { return s2_add(f, s2_neg(g)); }

template <class C>
Series2<C> s2_scale(const Scalar& s, Series2<C> f) {
    if (s.is_zero()) return Series2<C>(f.trunc);
    for (auto& [e, c] : f.terms) c = coeff_scale(s, c);
    return f;
}

template <class C>
Series2<C> s2_shift(Series2<C> f, int dx, int dy) {
    std::map<std::pair<int, int>, C> shifted;
    for (auto& [e, c] : f.terms) shifted.emplace(std::make_pair(e.first + dx, e.second + dy), std::move(c));
    f.terms = std::move(shifted);
    f.trunc = sat_add(f.trunc, dx + dy);
    return f;
}

template <class A, class B, class Mul>
auto s2_mul(const Series2<A>& f, const Series2<B>& g, Mul mul) -> Series2<decltype(mul(f.terms.begin()->second, g.terms.begin()->second))> {
    using C = decltype(mul(f.terms.begin()->second, g.terms.begin()->second));
    Series2<C> out(sat_min(sat_add(f.trunc, g.valuation_bound()), sat_add(g.trunc, f.valuation_bound())));
    for (const auto& [e1, c1] : f.terms)
        for (const auto& [e2, c2] : g.terms) {
            int a = e1.first + e2.first, b = e1.second + e2.second;
            if (out.trunc != kExact && a + b > out.trunc) continue;
            out.accumulate(a, b, mul(c1, c2));
        }
    return out;
}

template <class C>
bool s2_eq(const Series2<C>& f, const Series2<C>& g) {
    int t = sat_min(f.trunc, g.trunc);
    for (const auto& [e, c] : f.terms) {
        if (t != kExact && e.first + e.second > t) continue;
        const C* o = g.get(e.first, e.second);
        if (!o ? !coeff_is_zero(c) : !coeff_eq(c, *o)) return false;
    }
    for (const auto& [e, c] : g.terms) {
        if (t != kExact && e.first + e.second > t) continue;
        if (!f.get(e.first, e.second) && !coeff_is_zero(c)) return false;
    }
    return true;
}

/// Restriction to the diagonal x = y = z.
template <class C>
Series1<C> s2_diagonal(const Series2<C>& f) {
    Series1<C> out(f.trunc);
    for (const auto& [e, c] : f.terms) out.accumulate(e.first + e.second, c);
    return out;
}

/// The unique g with (x - y) g = f; requires f(z,z) = 0 through the truncation.
template <class C>
Series2<C> divide_by_diagonal(const Series2<C>& f) {
    Series2<C> g(f.trunc == kExact ? kExact : f.trunc - 1);
    int maxdeg = 0;
    for (const auto& [e, c] : f.terms) maxdeg = std::max(maxdeg, e.first + e.second);
    if (f.trunc != kExact) maxdeg = std::min(maxdeg, f.trunc);
    for (int D = 0; D <= maxdeg; ++D) {
        // f_{a, D-a} = g_{a-1, D-a} - g_{a, D-a-1}; solve top down
        C acc{};
        bool have = false;
        for (int a = D; a >= 1; --a) {
            const C* fc = f.get(a, D - a);
            if (fc) {
                acc = have ? coeff_add(acc, *fc) : *fc;
                have = true;
            }
            if (have && !coeff_is_zero(acc)) g.set(a - 1, D - a, acc);
        }
        // consistency at a = 0: f_{0,D} + g_{0,D-1} = 0
        const C* f0 = f.get(0, D);
        const C* g0 = g.get(0, D - 1);
        bool ok;
        if (!f0 && !g0)
            ok = true;
        else if (f0 && g0)
            ok = coeff_eq(*f0, coeff_neg(*g0));
        else
            ok = f0 ? coeff_is_zero(*f0) : coeff_is_zero(*g0);
        if (!ok) throw NotDivisible("diagonal restriction nonzero at total degree " + std::to_string(D));
    }
    return g;
}

/// f = (x - y) g + rem(y) with rem = f(z,z) placed at x-exponent 0; exact.
template <class C>
std::pair<Series2<C>, Series1<C>> divide_by_diagonal_rem(const Series2<C>& f) {
    Series2<C> g(f.trunc == kExact ? kExact : f.trunc - 1);
    Series1<C> rem(f.trunc);
    int maxdeg = 0;
    for (const auto& [e, c] : f.terms) maxdeg = std::max(maxdeg, e.first + e.second);
    if (f.trunc != kExact) maxdeg = std::min(maxdeg, f.trunc);
    for (int D = 0; D <= maxdeg; ++D) {
        C acc{};
        bool have = false;
        for (int a = D; a >= 1; --a) {
            const C* fc = f.get(a, D - a);
            if (fc) {
                acc = have ? coeff_add(acc, *fc) : *fc;
                have = true;
            }
            if (have && !coeff_is_zero(acc)) g.set(a - 1, D - a, acc);
        }
        // rem_D = f_{0,D} + g_{0,D-1} = f(z,z) coefficient at degree D
        const C* f0 = f.get(0, D);
        const C* g0 = g.get(0, D - 1);
        if (f0 && g0)
            rem.set(D, coeff_add(*f0, *g0));
        else if (f0)
            rem.set(D, *f0);
        else if (g0)
            rem.set(D, *g0);
    }
    return {std::move(g), std::move(rem)};
}

/// Substitute u(z) (zero constant term) into both variables through total degree N.
template <class C>
Series2<C> s2_substitute_xy(const Series2<C>& f, const Series1<Scalar>& u, int N) {
    if (const Scalar* c = u.get(0); c && !c->is_zero()) throw NonvanishingConstantTerm();
    int vu = 1;
    if (!u.terms.empty()) vu = std::max(1, u.terms.begin()->first);
    int bound = sat_min(N, u.trunc);
    if (f.trunc != kExact) bound = sat_min(bound, sat_add(f.trunc * vu, vu - 1));
    int amax = 0;
    for (const auto& [e, c] : f.terms) amax = std::max({amax, e.first, e.second});
    std::vector<Series1<Scalar>> pw(1);
    pw[0].set(0, Scalar(1));
    for (int k = 1; k <= amax; ++k) pw.push_back(s1_truncate(s1_mul(pw[k - 1], u), bound));
    Series2<C> out(bound);
    for (const auto& [e, c] : f.terms) {
        for (const auto& [p, cp] : pw[e.first].terms)
            for (const auto& [q, cq] : pw[e.second].terms) {
                if (bound != kExact && p + q > bound) continue;
                out.accumulate(p, q, coeff_scale(cp * cq, c));
            }
    }
    return out;
}

/// g with q g = 1 through total degree N; q(0,0) must be invertible.
inline Series2<Scalar> s2_invert_unit(const Series2<Scalar>& q, int N) {
    const Scalar* q00 = q.get(0, 0);
    if (!q00 || q00->is_zero()) throw NotAUnit();
    int t = sat_min(N, q.trunc);
    Scalar inv0 = q00->inv();
    Series2<Scalar> g(t);
    g.set(0, 0, inv0);
    for (int D = 1; D <= t; ++D)
        for (int a = 0; a <= D; ++a) {
            int b = D - a;
            Scalar acc;
            for (const auto& [e, qc] : q.terms) {
                if (e.first == 0 && e.second == 0) continue;
                if (e.first > a || e.second > b) continue;
                if (const Scalar* gc = g.get(a - e.first, b - e.second)) acc += qc * *gc;
            }
            if (!acc.is_zero()) g.set(a, b, -inv0 * acc);
        }
    return g;
}

/// Truncated series in three variables; trunc bounds the total degree.
template <class C>
struct Series3 {
    std::map<std::array<int, 3>, C> terms;
    int trunc = kExact;

    Series3() = default;
    explicit Series3(int t) : trunc(t) {}

    void set(std::array<int, 3> e, C c) {
        if (coeff_is_zero(c)) {
            terms.erase(e);
        } else {
            terms[e] = std::move(c);
        }
    }
    void accumulate(std::array<int, 3> e, const C& c) {
        if (trunc != kExact && e[0] + e[1] + e[2] > trunc) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            if (!coeff_is_zero(c)) terms.emplace(e, c);
        } else {
            it->second = coeff_add(it->second, c);
            if (coeff_is_zero(it->second)) terms.erase(it);
        }
    }
    const C* get(std::array<int, 3> e) const {
        auto it = terms.find(e);
        return it == terms.end() ? nullptr : &it->second;
    }
    bool is_zero() const { return terms.empty(); }
};

template <class C>
Series3<C> s3_add(const Series3<C>& f, const Series3<C>& g) {
    Series3<C> out(sat_min(f.trunc, g.trunc));
    for (const auto& [e, c] : f.terms) out.accumulate(e, c);
    for (const auto& [e, c] : g.terms) out.accumulate(e, c);
    return out;
}

template <class C>
Series3<C> s3_neg(Series3<C> f) {
    for (auto& [e, c] : f.terms) c = coeff_neg(c);
    return f;
}

template <class C>
Series3<C> s3_sub(const Series3<C>& f, const Series3<C>& g) { return s3_add(f, s3_neg(g)); }

template <class C>
bool s3_eq(const Series3<C>& f, const Series3<C>& g) {
    int t = sat_min(f.trunc, g.trunc);
    for (const auto& [e, c] : f.terms) {
        if (t != kExact && e[0] + e[1] + e[2] > t) continue;
        const C* o = g.get(e);
        if (!o ? !coeff_is_zero(c) : !coeff_eq(c, *o)) return false;
    }
    for (const auto& [e, c] : g.terms) {
        if (t != kExact && e[0] + e[1] + e[2] > t) continue;
        if (!f.get(e) && !coeff_is_zero(c)) return false;
    }
    return true;
}

/// First nonzero coefficient in (total degree, lexicographic) order, if any.
template <class C>
std::optional<std::pair<std::array<int, 3>, C>> s3_first_nonzero(const Series3<C>& f) {
    std::optional<std::array<int, 3>> best;
    for (const auto& [e, c] : f.terms) {
        if (coeff_is_zero(c)) continue;
        if (!best) {
            best = e;
            continue;
        }
        int de = e[0] + e[1] + e[2], db = (*best)[0] + (*best)[1] + (*best)[2];
        if (de < db || (de == db && e < *best)) best = e;
    }
    if (!best) return std::nullopt;
    return std::make_pair(*best, f.terms.at(*best));
}

/// Divide by (z_i - z_j): slices over the remaining exponent reduce to the
/// two-variable case. Errors name the offending diagonal and degree.
template <class C>
Series3<C> s3_divide_linear(const Series3<C>& f, int i, int j) {
    int other = 3 - i - j;
    Series3<C> g(f.trunc == kExact ? kExact : f.trunc - 1);
    // group terms by (exponent of the other variable)
    std::map<int, Series2<C>> slices;
    for (const auto& [e, c] : f.terms) {
        Series2<C>& sl = slices.try_emplace(e[other], Series2<C>(kExact)).first->second;
        sl.set(e[i], e[j], c);
    }
    for (auto& [eo, sl] : slices) {
        if (f.trunc != kExact) sl.trunc = f.trunc - eo;
        Series2<C> q;
        try {
            q = divide_by_diagonal(sl);
        } catch (const NotDivisible& err) {
            throw NotDivisible("z" + std::to_string(i + 1) + " = z" + std::to_string(j + 1) +
                               " slice: " + err.what());
        }
        for (const auto& [e2, c] : q.terms) {
            std::array<int, 3> e{};
            e[i] = e2.first;
            e[j] = e2.second;
            e[other] = eo;
            g.accumulate(e, c);
        }
    }
    return g;
}

/// Divide by (z_i - z_j) with remainder: f = (z_i - z_j) g + rem where rem has
/// zero exponent in z_i (the z_i = z_j restriction).
template <class C>
std::pair<Series3<C>, Series3<C>> s3_divide_linear_rem(const Series3<C>& f, int i, int j) {
    int other = 3 - i - j;
    Series3<C> g(f.trunc == kExact ? kExact : f.trunc - 1);
    Series3<C> rem(f.trunc);
    std::map<int, Series2<C>> slices;
    for (const auto& [e, c] : f.terms) {
        Series2<C>& sl = slices.try_emplace(e[other], Series2<C>(kExact)).first->second;
        sl.set(e[i], e[j], c);
    }
    for (auto& [eo, sl] : slices) {
        if (f.trunc != kExact) sl.trunc = f.trunc - eo;
        auto [q, r] = divide_by_diagonal_rem(sl);
        for (const auto& [e2, c] : q.terms) {
            std::array<int, 3> e{};
            e[i] = e2.first;
            e[j] = e2.second;
            e[other] = eo;
            g.accumulate(e, c);
        }
        for (const auto& [ej, c] : r.terms) {
            std::array<int, 3> e{};
            e[i] = 0;
            e[j] = ej;
            e[other] = eo;
            rem.accumulate(e, c);
        }
    }
    return {std::move(g), std::move(rem)};
}

/// G with (z1-z2)(z1-z3)(z2-z3) G = F; F must vanish on all three diagonals.
template <class C>
Series3<C> vandermonde_divide(const Series3<C>& F) {
    return s3_divide_linear(s3_divide_linear(s3_divide_linear(F, 0, 1), 0, 2), 1, 2);
}

} // namespace acyb
