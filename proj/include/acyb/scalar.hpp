#pragma once

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "acyb/errors.hpp"

namespace acyb {

inline unsigned euler_phi(unsigned m) {
    unsigned result = m, k = m;
    for (unsigned p = 2; p * p <= k; ++p) {
        if (k % p == 0) {
            result -= result / p;
            while (k % p == 0) k /= p;
        }
    }
    if (k > 1) result -= result / k;
    return result;
}

namespace detail {

using QPoly = std::vector<mpq_class>; // coefficients, low degree first

inline void qpoly_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo monic m.
inline QPoly qpoly_mod(QPoly a, const QPoly& m) {
    qpoly_trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        mpq_class lead = a.back();
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
        a.pop_back();
        qpoly_trim(a);
    }
    return a;
}

// Exact quotient a / b, both trimmed, b nonzero. Remainder must vanish.
inline QPoly qpoly_divexact(QPoly a, const QPoly& b) {
    qpoly_trim(a);
    if (a.empty()) return {};
    QPoly q(a.size() - b.size() + 1, mpq_class(0));
    while (a.size() >= b.size()) {
        mpq_class c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        qpoly_trim(a);
        if (a.empty()) break;
    }
    return q;
}

inline QPoly& cyclotomic_fill(unsigned m, std::map<unsigned, QPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    QPoly p(m + 1, mpq_class(0)); // z^m - 1
    p[0] = -1;
    p[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        p = qpoly_divexact(std::move(p), cyclotomic_fill(d, cache));
    }
    return cache.emplace(m, std::move(p)).first->second;
}

// m-th cyclotomic polynomial, monic, degree phi(m). Cached.
inline const QPoly& cyclotomic_polynomial(unsigned m) {
    static std::map<unsigned, QPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    return cyclotomic_fill(m, cache);
}

// Extended Euclid: returns u with u*f = 1 mod phi. f nonzero mod phi, phi irreducible.
inline QPoly qpoly_invmod(QPoly f, const QPoly& phi) {
    QPoly r0 = phi, r1 = qpoly_mod(std::move(f), phi);
    QPoly s0 = {}, s1 = {mpq_class(1)};
    qpoly_trim(r1);
    while (!r1.empty() && r1.size() > 1) {
        // r0 = q*r1 + r2
        QPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, mpq_class(0));
        QPoly r2 = r0;
        while (r2.size() >= r1.size()) {
            mpq_class c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) r2[shift + i] -= c * r1[i];
            qpoly_trim(r2);
            if (r2.empty()) break;
        }
        // s2 = s0 - q*s1
        QPoly qs(q.size() + (s1.empty() ? 0 : s1.size() - 1) + 1, mpq_class(0));
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
        QPoly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), mpq_class(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qpoly_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw DivisionByZero();
    // r1 is a nonzero constant: gcd = r1[0]
    QPoly u = std::move(s1);
    for (auto& c : u) c /= r1[0];
    return qpoly_mod(std::move(u), phi);
}

} // namespace detail

/// Exact field element: a rational, or an element of Q(zeta_m) in the power
/// basis of a primitive m-th root of unity, reduced mod the m-th cyclotomic
/// polynomial. Values are immutable; cyclotomic elements whose higher power
/// basis coefficients vanish are demoted to rationals, so equality is plain
/// componentwise comparison within one order.
class Scalar {
public:
    Scalar() : rat_(0) {}
    Scalar(long n) : rat_(n) {}
    Scalar(long n, long d) : rat_(n, d) {
        if (d == 0) throw DivisionByZero();
        rat_.canonicalize();
    }
    explicit Scalar(mpq_class q) : rat_(std::move(q)) { rat_.canonicalize(); }

    /// Cyclotomic element of Q(zeta_m) from power-basis coefficients (any length).
    Scalar(unsigned m, std::vector<mpq_class> coeffs) {
        for (auto& c : coeffs) c.canonicalize();
        if (m <= 1) { // zeta_1 = 1: evaluate
            rat_ = 0;
            for (auto& c : coeffs) rat_ += c;
            return;
        }
        auto red = detail::qpoly_mod(std::move(coeffs), detail::cyclotomic_polynomial(m));
        set_reduced(m, std::move(red));
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }

    /// zeta_m with zeta_m^m = 1 and no smaller power equal to 1.
    static Scalar primitive_root(unsigned m) {
        if (m == 0) throw IndexOutOfRange("primitive_root requires m >= 1");
        std::vector<mpq_class> c(2, mpq_class(0));
        c[1] = 1;
        return Scalar(m, std::move(c));
    }

    bool is_rational() const { return order_ == 1; }
    bool is_zero() const { return order_ == 1 && rat_ == 0; }
    bool is_one() const { return order_ == 1 && rat_ == 1; }
    unsigned order() const { return order_; }

    const mpq_class& rat() const {
        if (order_ != 1) throw IncompatibleCoefficients("cyclotomic value used as rational");
        return rat_;
    }

    /// Power-basis coefficients, length phi(order()); rationals report {value}.
    std::vector<mpq_class> coeffs() const {
        if (order_ == 1) return {rat_};
        auto c = cyc_;
        c.resize(euler_phi(order_), mpq_class(0));
        return c;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.order_ == 1 && b.order_ == 1) return Scalar(mpq_class(a.rat_ + b.rat_));
        auto [x, y, m] = promote(a, b);
        if (x.size() < y.size()) x.resize(y.size(), mpq_class(0));
        for (size_t i = 0; i < y.size(); ++i) x[i] += y[i];
        Scalar r;
        r.set_reduced(m, std::move(x));
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    Scalar operator-() const {
        Scalar r = *this;
        if (r.order_ == 1) {
            r.rat_ = -r.rat_;
        } else {
            for (auto& c : r.cyc_) c = -c;
        }
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.order_ == 1 && b.order_ == 1) return Scalar(mpq_class(a.rat_ * b.rat_));
        if (a.is_zero() || b.is_zero()) return Scalar();
        auto [x, y, m] = promote(a, b);
        detail::QPoly prod(x.size() + y.size() - 1, mpq_class(0));
        for (size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
        }
        Scalar r;
        r.set_reduced(m, detail::qpoly_mod(std::move(prod), detail::cyclotomic_polynomial(m)));
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        if (order_ == 1) return Scalar(mpq_class(1 / rat_));
        Scalar r;
        r.set_reduced(order_, detail::qpoly_invmod(cyc_, detail::cyclotomic_polynomial(order_)));
        return r;
    }

    Scalar pow(long e) const {
        if (e < 0) return inv().pow(-e);
        Scalar base = *this, acc = Scalar::one();
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.order_ == 1 && b.order_ == 1) return a.rat_ == b.rat_;
        if (a.order_ == b.order_) return a.cyc_ == b.cyc_;
        if (a.order_ == 1 || b.order_ == 1) return false; // canonical form: demoted when rational
        if (a.order_ % b.order_ == 0 || b.order_ % a.order_ == 0) {
            auto [x, y, m] = promote(a, b);
            (void)m;
            return x == y;
        }
        // Proper extensions of incomparable order meet only in Q; both values
        // are non-rational by canonical demotion, hence distinct.
        return false;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical string: "p" or "p/q" for rationals, "[c0,c1,...]@zeta_m" otherwise.
    std::string str() const {
        if (order_ == 1) return rat_str(rat_);
        std::string s = "[";
        auto c = coeffs();
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += rat_str(c[i]);
        }
        s += "]@zeta_" + std::to_string(order_);
        return s;
    }

    static Scalar parse(const std::string& s) {
        auto at = s.find('@');
        if (at == std::string::npos) {
            try {
                mpq_class q(s);
                q.canonicalize();
                return Scalar(std::move(q));
            } catch (const std::invalid_argument&) {
                throw ParseError("bad scalar '" + s + "'");
            }
        }
        if (s.empty() || s[0] != '[') throw ParseError("bad scalar '" + s + "'");
        auto close = s.find(']');
        if (close == std::string::npos || close > at) throw ParseError("bad scalar '" + s + "'");
        std::string tag = s.substr(at + 1);
        if (tag.rfind("zeta_", 0) != 0) throw ParseError("bad cyclotomic tag '" + tag + "'");
        unsigned m = 0;
        try {
            m = static_cast<unsigned>(std::stoul(tag.substr(5)));
        } catch (...) {
            throw ParseError("bad cyclotomic order in '" + s + "'");
        }
        std::vector<mpq_class> cs;
        std::string body = s.substr(1, close - 1);
        size_t pos = 0;
        while (pos <= body.size()) {
            auto comma = body.find(',', pos);
            std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!piece.empty()) {
                try {
                    mpq_class q(piece);
                    q.canonicalize();
                    cs.push_back(std::move(q));
                } catch (const std::invalid_argument&) {
                    throw ParseError("bad scalar coefficient '" + piece + "'");
                }
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Scalar(m, std::move(cs));
    }

private:
    static std::string rat_str(const mpq_class& q) {
        if (q.get_den() == 1) return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }

    // Install an already phi-reduced coefficient vector, demoting constants.
    void set_reduced(unsigned m, detail::QPoly c) {
        bool constant = true;
        for (size_t i = 1; i < c.size(); ++i)
            if (c[i] != 0) {
                constant = false;
                break;
            }
        if (constant) {
            order_ = 1;
            rat_ = c.empty() ? mpq_class(0) : std::move(c[0]);
            cyc_.clear();
        } else {
            order_ = m;
            cyc_ = std::move(c);
            cyc_.resize(euler_phi(m), mpq_class(0));
        }
    }

    // Common-order coefficient vectors. Requires one order to divide the other.
    static std::tuple<detail::QPoly, detail::QPoly, unsigned> promote(const Scalar& a, const Scalar& b) {
        unsigned m;
        if (a.order_ == 1)
            m = b.order_;
        else if (b.order_ == 1 || a.order_ == b.order_)
            m = a.order_;
        else if (a.order_ % b.order_ == 0)
            m = a.order_;
        else if (b.order_ % a.order_ == 0)
            m = b.order_;
        else
            throw IncompatibleCyclotomicOrders(a.order_, b.order_);
        return {promote_to(a, m), promote_to(b, m), m};
    }

    static detail::QPoly promote_to(const Scalar& x, unsigned m) {
        if (x.order_ == 1) {
            detail::QPoly c(euler_phi(m), mpq_class(0));
            if (!c.empty()) c[0] = x.rat_;
            return c;
        }
        if (x.order_ == m) {
            auto c = x.cyc_;
            c.resize(euler_phi(m), mpq_class(0));
            return c;
        }
        // zeta_{x.order} = zeta_m^{m / x.order}
        unsigned step = m / x.order_;
        detail::QPoly lifted((x.cyc_.size() - 1) * step + 1, mpq_class(0));
        for (size_t i = 0; i < x.cyc_.size(); ++i) lifted[i * step] = x.cyc_[i];
        auto red = detail::qpoly_mod(std::move(lifted), detail::cyclotomic_polynomial(m));
        red.resize(euler_phi(m), mpq_class(0));
        return red;
    }

    mpq_class rat_;
    unsigned order_ = 1;
    detail::QPoly cyc_; // size phi(order_) when order_ > 1
};

inline Scalar primitive_root(unsigned m) { return Scalar::primitive_root(m); }

} // namespace acyb
