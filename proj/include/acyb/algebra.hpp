#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "acyb/linalg.hpp"

namespace acyb {

using Element = Vec; // coefficients in the distinguished basis

/// Finite-dimensional algebra given by structure constants:
/// b_i b_j = sum_k sc(i,j,k) b_k. No law is assumed; predicates are computed.
class Algebra {
public:
    Algebra() = default;
    Algebra(int dim, std::vector<Scalar> structure, std::vector<std::string> labels = {})
        : dim_(dim), sc_(std::move(structure)), labels_(std::move(labels)) {
        if (sc_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
            throw DimensionMismatch("structure constant table has wrong size");
        if (labels_.empty()) {
            for (int i = 0; i < dim_; ++i) labels_.push_back("b" + std::to_string(i + 1));
        }
    }

    int dim() const { return dim_; }
    const Scalar& sc(int i, int j, int k) const { return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    Scalar& sc(int i, int j, int k) { return sc_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
    const std::vector<std::string>& labels() const { return labels_; }

    Element mul(const Element& x, const Element& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw DimensionMismatch("element size does not match algebra dimension");
        Element out(dim_);
        for (int i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                for (int k = 0; k < dim_; ++k) {
                    if (!sc(i, j, k).is_zero()) out[k] += c * sc(i, j, k);
                }
            }
        }
        return out;
    }

    Element basis(int i) const {
        Element e(dim_);
        e[i] = Scalar(1);
        return e;
    }

    /// L_a as a matrix: (L_a x) = a x.
    Mat left_mul(const Element& a) const {
        Mat m = mat_zero(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Element col = mul(a, basis(j));
            for (int k = 0; k < dim_; ++k) m[k][j] = col[k];
        }
        return m;
    }

    /// R_a as a matrix: (R_a x) = x a.
    Mat right_mul(const Element& a) const {
        Mat m = mat_zero(dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            Element col = mul(basis(j), a);
            for (int k = 0; k < dim_; ++k) m[k][j] = col[k];
        }
        return m;
    }

private:
    int dim_ = 0;
    std::vector<Scalar> sc_;
    std::vector<std::string> labels_;
};

inline Element el_add(const Element& a, const Element& b) {
    Element c = a;
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return c;
}

inline Element el_sub(const Element& a, const Element& b) {
    Element c = a;
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return c;
}

inline Element el_scale(const Scalar& s, const Element& a) {
    Element c = a;
    for (auto& x : c) x *= s;
    return c;
}

inline bool el_is_zero(const Element& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

struct CategoryReport {
    bool associative = false;
    bool lie = false;
    bool jordan = false;
    bool commutative = false;
    bool unital = false;
    std::optional<Element> unit;
};

namespace detail {

// a ranges over sums of up to `arity` distinct basis elements: enough to pin a
// polynomial identity of that degree in a over a field of characteristic 0.
inline std::vector<Element> polarization_probes(const Algebra& A, int arity) {
    std::vector<Element> probes;
    int d = A.dim();
    for (int i = 0; i < d; ++i) probes.push_back(A.basis(i));
    if (arity >= 2) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) probes.push_back(el_add(A.basis(i), A.basis(j)));
    }
    if (arity >= 3) {
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k)
                    probes.push_back(el_add(A.basis(i), el_add(A.basis(j), A.basis(k))));
    }
    return probes;
}

} // namespace detail

inline CategoryReport category_predicates(const Algebra& A) {
    CategoryReport rep;
    int d = A.dim();

    rep.associative = true;
    for (int i = 0; i < d && rep.associative; ++i)
        for (int j = 0; j < d && rep.associative; ++j)
            for (int k = 0; k < d; ++k) {
                Element lhs = A.mul(A.mul(A.basis(i), A.basis(j)), A.basis(k));
                Element rhs = A.mul(A.basis(i), A.mul(A.basis(j), A.basis(k)));
                if (!el_is_zero(el_sub(lhs, rhs))) {
                    rep.associative = false;
                    break;
                }
            }

    rep.commutative = true;
    for (int i = 0; i < d && rep.commutative; ++i)
        for (int j = 0; j < d; ++j) {
            if (!el_is_zero(el_sub(A.mul(A.basis(i), A.basis(j)), A.mul(A.basis(j), A.basis(i))))) {
                rep.commutative = false;
                break;
            }
        }

    // Lie: alternating product plus Jacobi.
    rep.lie = true;
    for (int i = 0; i < d && rep.lie; ++i) {
        if (!el_is_zero(A.mul(A.basis(i), A.basis(i)))) rep.lie = false;
        for (int j = 0; j < d && rep.lie; ++j) {
            if (!el_is_zero(el_add(A.mul(A.basis(i), A.basis(j)), A.mul(A.basis(j), A.basis(i))))) rep.lie = false;
        }
    }
    for (int i = 0; i < d && rep.lie; ++i)
        for (int j = 0; j < d && rep.lie; ++j)
            for (int k = 0; k < d; ++k) {
                Element jac = el_add(A.mul(A.mul(A.basis(i), A.basis(j)), A.basis(k)),
                                     el_add(A.mul(A.mul(A.basis(j), A.basis(k)), A.basis(i)),
                                            A.mul(A.mul(A.basis(k), A.basis(i)), A.basis(j))));
                if (!el_is_zero(jac)) {
                    rep.lie = false;
                    break;
                }
            }

    // Jordan: commutative and (a^2 b) a = a^2 (b a). The identity is cubic in a,
    // so a runs over polarization probes of arity 3 and b over the basis.
    rep.jordan = rep.commutative;
    if (rep.jordan) {
        for (const auto& a : detail::polarization_probes(A, 3)) {
            Element a2 = A.mul(a, a);
            for (int j = 0; j < d; ++j) {
                Element b = A.basis(j);
                Element lhs = A.mul(A.mul(a2, b), a);
                Element rhs = A.mul(a2, A.mul(b, a));
                if (!el_is_zero(el_sub(lhs, rhs))) {
                    rep.jordan = false;
                    break;
                }
            }
            if (!rep.jordan) break;
        }
    }

    // Unit: solve u b_i = b_i u = b_i for all i. Any solution is a two-sided unit.
    {
        Mat sys;
        Vec rhs;
        for (int i = 0; i < d; ++i) {
            for (int k = 0; k < d; ++k) {
                Vec rowl(d), rowr(d);
                for (int p = 0; p < d; ++p) {
                    rowl[p] = A.sc(p, i, k);
                    rowr[p] = A.sc(i, p, k);
                }
                sys.push_back(std::move(rowl));
                rhs.push_back(i == k ? Scalar(1) : Scalar(0));
                sys.push_back(std::move(rowr));
                rhs.push_back(i == k ? Scalar(1) : Scalar(0));
            }
        }
        if (d == 0) {
            rep.unital = false;
        } else if (auto u = solve(std::move(sys), std::move(rhs))) {
            rep.unital = true;
            rep.unit = *u;
        }
    }
    return rep;
}

/// U = A + k with the adjoined element acting as a two-sided unit.
inline Algebra unitalize(const Algebra& A) {
    int d = A.dim();
    int du = d + 1;
    std::vector<Scalar> sc(static_cast<size_t>(du) * du * du);
    auto at = [&](int i, int j, int k) -> Scalar& { return sc[(static_cast<size_t>(i) * du + j) * du + k]; };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) at(i, j, k) = A.sc(i, j, k);
    for (int i = 0; i < d; ++i) {
        at(d, i, i) = Scalar(1);
        at(i, d, i) = Scalar(1);
    }
    at(d, d, d) = Scalar(1);
    auto labels = A.labels();
    labels.push_back("1");
    return Algebra(du, std::move(sc), std::move(labels));
}

/// Algebra with a verified algebra metric: symmetric, non-degenerate,
/// associative in the sense beta(ab, c) = beta(a, bc).
class MetricAlgebra {
public:
    MetricAlgebra() = default;
    MetricAlgebra(Algebra algebra, Mat gram, std::string name = "")
        : alg_(std::move(algebra)), gram_(std::move(gram)), name_(std::move(name)) {
        int d = alg_.dim();
        if (static_cast<int>(gram_.size()) != d) throw InvalidMetric("gram matrix has wrong size");
        for (const auto& row : gram_)
            if (static_cast<int>(row.size()) != d) throw InvalidMetric("gram matrix has wrong size");
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                if (gram_[i][j] != gram_[j][i]) throw InvalidMetric("gram matrix is not symmetric");
        try {
            gram_inv_ = mat_inverse(gram_);
        } catch (const SingularSystem&) {
            throw InvalidMetric("gram matrix is degenerate");
        }
        // beta(b_i b_j, b_k) = beta(b_i, b_j b_k) on all basis triples
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) {
                    Scalar lhs, rhs;
                    for (int m = 0; m < d; ++m) {
                        if (!alg_.sc(i, j, m).is_zero()) lhs += alg_.sc(i, j, m) * gram_[m][k];
                        if (!alg_.sc(j, k, m).is_zero()) rhs += alg_.sc(j, k, m) * gram_[i][m];
                    }
                    if (lhs != rhs) throw InvalidMetric("form is not associative on basis triple");
                }
    }

    const Algebra& algebra() const { return alg_; }
    int dim() const { return alg_.dim(); }
    const Mat& gram() const { return gram_; }
    const Mat& gram_inv() const { return gram_inv_; }
    const std::string& name() const { return name_; }

    Scalar beta(const Element& x, const Element& y) const {
        Scalar s;
        int d = alg_.dim();
        for (int i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < d; ++j) {
                if (!y[j].is_zero() && !gram_[i][j].is_zero()) s += x[i] * gram_[i][j] * y[j];
            }
        }
        return s;
    }

    /// b_i^* with beta(b_i^*, b_j) = delta_ij.
    Element dual_basis(int i) const {
        Element e(alg_.dim());
        for (int p = 0; p < alg_.dim(); ++p) e[p] = gram_inv_[i][p];
        return e;
    }

private:
    Algebra alg_;
    Mat gram_;
    Mat gram_inv_;
    std::string name_;
};

inline std::vector<Element> dual_basis(const MetricAlgebra& M) {
    std::vector<Element> out;
    for (int i = 0; i < M.dim(); ++i) out.push_back(M.dual_basis(i));
    return out;
}

/// Shared handle used by every value that refers to an ambient metric algebra.
using MetricHandle = std::shared_ptr<const MetricAlgebra>;

inline MetricHandle share(MetricAlgebra M) { return std::make_shared<const MetricAlgebra>(std::move(M)); }

/// Same metric algebra: pointer identity with a structural fallback, so values
/// built through different handles of the same algebra mix freely.
inline bool metric_eq(const MetricAlgebra& a, const MetricAlgebra& b) {
    if (&a == &b) return true;
    if (a.dim() != b.dim()) return false;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (a.gram()[i][j] != b.gram()[i][j]) return false;
            for (int k = 0; k < a.dim(); ++k)
                if (a.algebra().sc(i, j, k) != b.algebra().sc(i, j, k)) return false;
        }
    return true;
}

/// Dense coefficient array over b_p (x) b_q.
struct Tensor2 {
    int d = 0;
    std::vector<Scalar> v; // v[p*d+q]

    Tensor2() = default;
    explicit Tensor2(int dim) : d(dim), v(static_cast<size_t>(dim) * dim) {}
    const Scalar& at(int p, int q) const { return v[static_cast<size_t>(p) * d + q]; }
    Scalar& at(int p, int q) { return v[static_cast<size_t>(p) * d + q]; }
};

/// Dense coefficient array over b_p (x) b_q (x) b_s.
struct Tensor3 {
    int d = 0;
    std::vector<Scalar> v;

    Tensor3() = default;
    explicit Tensor3(int dim) : d(dim), v(static_cast<size_t>(dim) * dim * dim) {}
    const Scalar& at(int p, int q, int s) const { return v[(static_cast<size_t>(p) * d + q) * d + s]; }
    Scalar& at(int p, int q, int s) { return v[(static_cast<size_t>(p) * d + q) * d + s]; }
};

template <class T>
inline T t_add(const T& a, const T& b) {
    if (a.d != b.d) throw DimensionMismatch("tensor addition");
    T c = a;
    for (size_t i = 0; i < b.v.size(); ++i) c.v[i] += b.v[i];
    return c;
}

template <class T>
inline T t_sub(const T& a, const T& b) {
    if (a.d != b.d) throw DimensionMismatch("tensor subtraction");
    T c = a;
    for (size_t i = 0; i < b.v.size(); ++i) c.v[i] -= b.v[i];
    return c;
}

template <class T>
inline T t_neg(const T& a) {
    T c = a;
    for (auto& x : c.v) x = -x;
    return c;
}

template <class T>
inline T t_scale(const Scalar& s, const T& a) {
    T c = a;
    for (auto& x : c.v) x *= s;
    return c;
}

template <class T>
inline bool t_is_zero(const T& a) {
    for (const auto& x : a.v)
        if (!x.is_zero()) return false;
    return true;
}

template <class T>
inline bool t_eq(const T& a, const T& b) {
    return a.d == b.d && a.v == b.v;
}

inline Tensor2 flip(const Tensor2& t) {
    Tensor2 out(t.d);
    for (int p = 0; p < t.d; ++p)
        for (int q = 0; q < t.d; ++q) out.at(q, p) = t.at(p, q);
    return out;
}

inline Tensor2 tensor_of(const Element& a, const Element& b) {
    Tensor2 t(static_cast<int>(a.size()));
    for (int p = 0; p < t.d; ++p) {
        if (a[p].is_zero()) continue;
        for (int q = 0; q < t.d; ++q)
            if (!b[q].is_zero()) t.at(p, q) = a[p] * b[q];
    }
    return t;
}

// a^{(1)} t, t a^{(1)}, a^{(2)} t, t a^{(2)}: multiply one tensor leg by a.
inline Tensor2 act1_left(const Algebra& A, const Element& a, const Tensor2& t) {
    Tensor2 out(t.d);
    for (int p = 0; p < t.d; ++p) {
        Element ap = A.mul(a, A.basis(p));
        for (int r = 0; r < t.d; ++r) {
            if (ap[r].is_zero()) continue;
            for (int q = 0; q < t.d; ++q)
                if (!t.at(p, q).is_zero()) out.at(r, q) += ap[r] * t.at(p, q);
        }
    }
    return out;
}

inline Tensor2 act1_right(const Algebra& A, const Tensor2& t, const Element& a) {
    Tensor2 out(t.d);
    for (int p = 0; p < t.d; ++p) {
        Element pa = A.mul(A.basis(p), a);
        for (int r = 0; r < t.d; ++r) {
            if (pa[r].is_zero()) continue;
            for (int q = 0; q < t.d; ++q)
                if (!t.at(p, q).is_zero()) out.at(r, q) += pa[r] * t.at(p, q);
        }
    }
    return out;
}

inline Tensor2 act2_left(const Algebra& A, const Element& a, const Tensor2& t) {
    Tensor2 out(t.d);
    for (int q = 0; q < t.d; ++q) {
        Element aq = A.mul(a, A.basis(q));
        for (int r = 0; r < t.d; ++r) {
            if (aq[r].is_zero()) continue;
            for (int p = 0; p < t.d; ++p)
                if (!t.at(p, q).is_zero()) out.at(p, r) += aq[r] * t.at(p, q);
        }
    }
    return out;
}

inline Tensor2 act2_right(const Algebra& A, const Tensor2& t, const Element& a) {
    Tensor2 out(t.d);
    for (int q = 0; q < t.d; ++q) {
        Element qa = A.mul(A.basis(q), a);
        for (int r = 0; r < t.d; ++r) {
            if (qa[r].is_zero()) continue;
            for (int p = 0; p < t.d; ++p)
                if (!t.at(p, q).is_zero()) out.at(p, r) += qa[r] * t.at(p, q);
        }
    }
    return out;
}

/// gamma = sum_i b_i^* (x) b_i; symmetric and basis independent.
inline Tensor2 casimir_gamma(const MetricAlgebra& M) {
    int d = M.dim();
    Tensor2 g(d);
    for (int i = 0; i < d; ++i) {
        Element dual = M.dual_basis(i);
        for (int p = 0; p < d; ++p) g.at(p, i) += dual[p];
    }
    return g;
}

/// a^{(1)} gamma = gamma a^{(2)} and a^{(2)} gamma = gamma a^{(1)} on the basis.
inline bool check_gamma_invariance(const MetricAlgebra& M, const Tensor2& gamma) {
    const Algebra& A = M.algebra();
    for (int i = 0; i < M.dim(); ++i) {
        Element a = A.basis(i);
        if (!t_eq(act1_left(A, a, gamma), act2_right(A, gamma, a))) return false;
        if (!t_eq(act2_left(A, a, gamma), act1_right(A, gamma, a))) return false;
    }
    return true;
}

inline bool check_gamma_invariance(const MetricAlgebra& M) { return check_gamma_invariance(M, casimir_gamma(M)); }

/// Leg products of two-tensors placed in three tensor slots, computed inside
/// the unitalization and projected back after checking no unit leg survives.
class LegEngine {
public:
    explicit LegEngine(const Algebra& A) : d_(A.dim()), U_(unitalize(A)) {}

    const Algebra& unital() const { return U_; }

    // (t13)(s12): (a (x) 1 (x) b)(c (x) e (x) 1) = ac (x) e (x) b
    Tensor3 p13_12(const Tensor2& t, const Tensor2& s) const {
        Tensor3 out(d_);
        for (int p = 0; p < d_; ++p)
            for (int q = 0; q < d_; ++q) {
                if (t.at(p, q).is_zero()) continue;
                for (int r = 0; r < d_; ++r) {
                    Element prod = mul_U(p, r);
                    for (int x = 0; x <= d_; ++x) {
                        if (prod[x].is_zero()) continue;
                        check_in_base(x);
                        for (int s2 = 0; s2 < d_; ++s2)
                            if (!s.at(r, s2).is_zero()) out.at(x, s2, q) += t.at(p, q) * s.at(r, s2) * prod[x];
                    }
                }
            }
        return out;
    }

    // (t12)(s23): (a (x) b (x) 1)(1 (x) c (x) e) = a (x) bc (x) e
    Tensor3 p12_23(const Tensor2& t, const Tensor2& s) const {
        Tensor3 out(d_);
        for (int q = 0; q < d_; ++q)
            for (int r = 0; r < d_; ++r) {
                Element prod = mul_U(q, r);
                for (int y = 0; y <= d_; ++y) {
                    if (prod[y].is_zero()) continue;
                    check_in_base(y);
                    for (int p = 0; p < d_; ++p) {
                        if (t.at(p, q).is_zero()) continue;
                        for (int s2 = 0; s2 < d_; ++s2)
                            if (!s.at(r, s2).is_zero()) out.at(p, y, s2) += t.at(p, q) * s.at(r, s2) * prod[y];
                    }
                }
            }
        return out;
    }

    // (t23)(s13): (1 (x) a (x) b)(c (x) 1 (x) e) = c (x) a (x) be
    Tensor3 p23_13(const Tensor2& t, const Tensor2& s) const {
        Tensor3 out(d_);
        for (int q = 0; q < d_; ++q)
            for (int s2 = 0; s2 < d_; ++s2) {
                Element prod = mul_U(q, s2);
                for (int z = 0; z <= d_; ++z) {
                    if (prod[z].is_zero()) continue;
                    check_in_base(z);
                    for (int p = 0; p < d_; ++p) {
                        if (t.at(p, q).is_zero()) continue;
                        for (int r = 0; r < d_; ++r)
                            if (!s.at(r, s2).is_zero()) out.at(r, p, z) += t.at(p, q) * s.at(r, s2) * prod[z];
                    }
                }
            }
        return out;
    }

private:
    Element mul_U(int i, int j) const { return U_.mul(U_.basis(i), U_.basis(j)); }

    void check_in_base(int idx) const {
        if (idx == d_)
            throw IncompatibleCoefficients("leg product leaves the base algebra inside the unitalization");
    }

    int d_;
    Algebra U_;
};

// Named algebras ------------------------------------------------------------

namespace detail {

inline Element expand_in(const std::vector<Element>& basis, const Element& x) {
    Mat sys = mat_zero(x.size(), basis.size());
    for (size_t b = 0; b < basis.size(); ++b)
        for (size_t r = 0; r < x.size(); ++r) sys[r][b] = basis[b][r];
    auto sol = solve(std::move(sys), x);
    if (!sol) throw DimensionMismatch("element outside the spanned subspace");
    return *sol;
}

// Structure constants of the span of `basis` under `prod` on ambient coordinates.
template <class Prod>
inline Algebra span_algebra(const std::vector<Element>& basis, Prod prod, std::vector<std::string> labels) {
    int d = static_cast<int>(basis.size());
    std::vector<Scalar> sc(static_cast<size_t>(d) * d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Element coeffs = expand_in(basis, prod(basis[i], basis[j]));
            for (int k = 0; k < d; ++k) sc[(static_cast<size_t>(i) * d + j) * d + k] = coeffs[k];
        }
    return Algebra(d, std::move(sc), std::move(labels));
}

} // namespace detail

/// Full matrix algebra M_n with the trace form beta(a,b) = tr(ab).
inline MetricAlgebra matrix_algebra(int n) {
    int d = n * n;
    std::vector<Scalar> sc(static_cast<size_t>(d) * d * d);
    std::vector<std::string> labels;
    auto idx = [n](int a, int b) { return a * n + b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            labels.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
            for (int c = 0; c < n; ++c)
                for (int e = 0; e < n; ++e)
                    if (b == c) sc[(static_cast<size_t>(idx(a, b)) * d + idx(c, e)) * d + idx(a, e)] = Scalar(1);
        }
    Mat gram = mat_zero(d, d);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gram[idx(a, b)][idx(b, a)] = Scalar(1); // tr(e_ab e_cd) = d_bc d_da
    return MetricAlgebra(Algebra(d, std::move(sc), std::move(labels)), std::move(gram), "matrix:" + std::to_string(n));
}

/// sl_n as a bracket algebra with the Killing form computed from the structure
/// constants: K(i,j) = tr(ad_i ad_j).
inline MetricAlgebra sl_algebra(int n) {
    int amb = n * n;
    std::vector<Element> basis;
    std::vector<std::string> labels;
    auto unit = [&](int a, int b) {
        Element e(amb);
        e[a * n + b] = Scalar(1);
        return e;
    };
    if (n == 2) { // classical e, h, f order
        basis = {unit(0, 1), el_sub(unit(0, 0), unit(1, 1)), unit(1, 0)};
        labels = {"e", "h", "f"};
    } else {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b) continue;
                basis.push_back(unit(a, b));
                labels.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
            }
        for (int a = 0; a + 1 < n; ++a) {
            basis.push_back(el_sub(unit(a, a), unit(a + 1, a + 1)));
            labels.push_back("h" + std::to_string(a + 1));
        }
    }
    Algebra amb_alg = matrix_algebra(n).algebra();
    auto bracket = [&](const Element& x, const Element& y) {
        return el_sub(amb_alg.mul(x, y), amb_alg.mul(y, x));
    };
    Algebra L = detail::span_algebra(basis, bracket, std::move(labels));
    int d = L.dim();
    Mat killing = mat_zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Scalar k;
            for (int p = 0; p < d; ++p)
                for (int q = 0; q < d; ++q) k += L.sc(i, p, q) * L.sc(j, q, p);
            killing[i][j] = k;
        }
    return MetricAlgebra(std::move(L), std::move(killing), "lie:sl_" + std::to_string(n));
}

/// Symmetric n x n matrices under a o b = (ab + ba)/2 with beta(a,b) = tr(ab).
inline MetricAlgebra jordan_sym_algebra(int n) {
    int amb = n * n;
    std::vector<Element> basis;
    std::vector<std::string> labels;
    auto unit = [&](int a, int b) {
        Element e(amb);
        e[a * n + b] = Scalar(1);
        return e;
    };
    for (int a = 0; a < n; ++a) {
        basis.push_back(unit(a, a));
        labels.push_back("E" + std::to_string(a + 1) + std::to_string(a + 1));
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            basis.push_back(el_add(unit(a, b), unit(b, a)));
            labels.push_back("F" + std::to_string(a + 1) + std::to_string(b + 1));
        }
    MetricAlgebra Mamb = matrix_algebra(n);
    const Algebra& amb_alg = Mamb.algebra();
    auto jordan = [&](const Element& x, const Element& y) {
        return el_scale(Scalar(1, 2), el_add(amb_alg.mul(x, y), amb_alg.mul(y, x)));
    };
    Algebra J = detail::span_algebra(basis, jordan, std::move(labels));
    int d = J.dim();
    Mat gram = mat_zero(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gram[i][j] = Mamb.beta(basis[i], basis[j]);
    return MetricAlgebra(std::move(J), std::move(gram), "jordan:sym_" + std::to_string(n));
}

/// Named specs: "matrix:n", "lie:sl_n", "jordan:sym_n".
inline MetricAlgebra named_algebra(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        try {
            if (kind == "matrix") return matrix_algebra(std::stoi(rest));
            if (kind == "lie" && rest.rfind("sl_", 0) == 0) return sl_algebra(std::stoi(rest.substr(3)));
            if (kind == "jordan" && rest.rfind("sym_", 0) == 0) return jordan_sym_algebra(std::stoi(rest.substr(4)));
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw ParseError("bad named algebra '" + spec + "'");
        }
    }
    throw ParseError("unknown named algebra '" + spec + "'");
}

} // namespace acyb
