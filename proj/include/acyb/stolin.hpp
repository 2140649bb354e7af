#pragma once

#include "acyb/cybe.hpp"

namespace acyb {

/// Subalgebra S of M_n together with a skew form chi over the S basis.
struct StolinPair {
    int n = 0;
    int k = 0;
    std::vector<Element> S; // basis vectors in the matrix-unit coordinates
    Mat chi;                // chi over the S basis
};

struct StolinReport {
    bool closed = false;
    bool complements_parabolic = false;
    bool chi_skew = false;
    bool chi_cocycle = false;
    bool chi_nondegenerate = false; // on S cap P_k
    std::string failure;

    bool ok() const { return closed && complements_parabolic && chi_skew && chi_cocycle && chi_nondegenerate; }
};

/// Matrix units spanning the block parabolic P_k (vanishing lower-left block
/// with diagonal blocks of sizes n-k and k).
inline std::vector<Element> parabolic_basis(int n, int k) {
    if (k < 0 || k >= n) throw IndexOutOfRange("parabolic type must satisfy 0 <= k <= n-1");
    std::vector<Element> out;
    int d = n * n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a >= n - k && b < n - k) continue; // lower-left block
            Element e(d);
            e[a * n + b] = Scalar(1);
            out.push_back(std::move(e));
        }
    return out;
}

/// Top allowed z-exponent of the (a,b) entry inside N_k = d_k^{-1} M_n[z^{-1}] d_k.
inline int nk_entry_bound(int n, int k, int a, int b) {
    if (k < 0 || k > n) throw IndexOutOfRange("order type must satisfy 0 <= k <= n");
    bool arow = a >= n - k, bcol = b >= n - k;
    if (!arow && bcol) return 1;  // upper-right block: z M_{(n-k) x k}(k[z^-1])
    if (arow && !bcol) return -1; // lower-left block: z^-1 M_{k x (n-k)}(k[z^-1])
    return 0;
}

/// Membership of a Laurent matrix tail in N_k, coefficient-wise in the window.
inline bool nk_contains(int n, int k, const Laurent1<Element>& f) {
    for (const auto& [e, c] : f.terms)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (!c[a * n + b].is_zero() && e > nk_entry_bound(n, k, a, b)) return false;
    return true;
}

/// Spanning monomials e_{ab} z^e of N_k (or of z^{-2} N_k with shift = -2)
/// with exponents in [lo, bound + shift].
inline std::vector<Laurent1<Element>> nk_monomials(int n, int k, int lo, int shift = 0) {
    std::vector<Laurent1<Element>> out;
    int d = n * n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int e = lo; e <= nk_entry_bound(n, k, a, b) + shift; ++e) {
                Element c(d);
                c[a * n + b] = Scalar(1);
                out.push_back(el_monomial(c, e));
            }
    return out;
}

namespace detail {

inline Mat column_matrix(const std::vector<Vec>& cols) {
    if (cols.empty()) return {};
    Mat m = mat_zero(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) m[i][j] = cols[j][i];
    return m;
}

// coefficients of v in the span of basis, or nullopt
inline std::optional<Vec> in_span(const std::vector<Element>& basis, const Element& v) {
    if (basis.empty()) {
        if (el_is_zero(v)) return Vec{};
        return std::nullopt;
    }
    return solve(column_matrix(std::vector<Vec>(basis.begin(), basis.end())), v);
}

} // namespace detail

/// Basis of the beta-orthogonal complement of span(S).
inline std::vector<Element> orthogonal_complement(const MetricAlgebra& M, const std::vector<Element>& S) {
    if (S.empty()) {
        std::vector<Element> all;
        for (int i = 0; i < M.dim(); ++i) all.push_back(M.algebra().basis(i));
        return all;
    }
    Mat rows;
    for (const auto& s : S) {
        Vec row(M.dim());
        for (int j = 0; j < M.dim(); ++j) row[j] = M.beta(s, M.algebra().basis(j));
        rows.push_back(std::move(row));
    }
    return nullspace(std::move(rows));
}

inline StolinReport check_stolin_pair(const StolinPair& p) {
    StolinReport rep;
    MetricAlgebra M = matrix_algebra(p.n);
    const Algebra& A = M.algebra();
    size_t m = p.S.size();

    rep.closed = true;
    std::vector<std::vector<Vec>> prod_coords(m, std::vector<Vec>(m));
    for (size_t a = 0; a < m && rep.closed; ++a)
        for (size_t b = 0; b < m; ++b) {
            auto c = detail::in_span(p.S, A.mul(p.S[a], p.S[b]));
            if (!c) {
                rep.closed = false;
                rep.failure = "S is not closed under multiplication";
                break;
            }
            prod_coords[a][b] = *c;
        }

    {
        Mat family;
        for (const auto& s : p.S) family.push_back(s);
        for (const auto& e : parabolic_basis(p.n, p.k)) family.push_back(e);
        rep.complements_parabolic = mat_rank(std::move(family)) == static_cast<size_t>(p.n) * p.n;
        if (!rep.complements_parabolic && rep.failure.empty()) rep.failure = "S + P_k is a proper subspace";
    }

    rep.chi_skew = true;
    for (size_t a = 0; a < m && rep.chi_skew; ++a)
        for (size_t b = a; b < m; ++b)
            if (!(p.chi[a][b] == -p.chi[b][a])) {
                rep.chi_skew = false;
                rep.failure = "chi is not skew-symmetric";
                break;
            }

    rep.chi_cocycle = rep.closed && rep.chi_skew;
    if (rep.chi_cocycle) {
        auto chi_of = [&](const Vec& x, size_t c) {
            Scalar acc;
            for (size_t i = 0; i < m; ++i)
                if (!x[i].is_zero()) acc += x[i] * p.chi[i][c];
            return acc;
        };
        for (size_t a = 0; a < m && rep.chi_cocycle; ++a)
            for (size_t b = 0; b < m && rep.chi_cocycle; ++b)
                for (size_t c = 0; c < m; ++c) {
                    Scalar total = chi_of(prod_coords[a][b], c) + chi_of(prod_coords[b][c], a) +
                                   chi_of(prod_coords[c][a], b);
                    if (!total.is_zero()) {
                        rep.chi_cocycle = false;
                        rep.failure = "chi fails the Connes cocycle identity";
                        break;
                    }
                }
    }

    // S cap P_k and non-degeneracy of chi on it
    {
        std::vector<Element> pk = parabolic_basis(p.n, p.k);
        // solve S-coefficients x with sum x_i S_i in span(P_k)
        size_t rows = static_cast<size_t>(p.n) * p.n;
        Mat pkmat = detail::column_matrix(std::vector<Vec>(pk.begin(), pk.end()));
        // columns: S coefficients then P_k coefficients; nullspace rows restricted to S part
        Mat combined = mat_zero(rows, m + pk.size());
        for (size_t i = 0; i < rows; ++i) {
            for (size_t j = 0; j < m; ++j) combined[i][j] = p.S[j][i];
            for (size_t j = 0; j < pk.size(); ++j) combined[i][m + j] = -pkmat[i][j];
        }
        auto null = nullspace(std::move(combined));
        std::vector<Vec> cap; // S-coordinates of a basis of S cap P_k
        for (const auto& v : null) cap.emplace_back(v.begin(), v.begin() + m);
        Mat capm = detail::column_matrix(cap);
        size_t caprank = cap.empty() ? 0 : mat_rank(capm);
        // restrict chi to the intersection
        Mat gram = mat_zero(cap.size(), cap.size());
        for (size_t a = 0; a < cap.size(); ++a)
            for (size_t b = 0; b < cap.size(); ++b) {
                Scalar acc;
                for (size_t i = 0; i < m; ++i)
                    for (size_t j = 0; j < m; ++j)
                        if (!cap[a][i].is_zero() && !cap[b][j].is_zero()) acc += cap[a][i] * p.chi[i][j] * cap[b][j];
                gram[a][b] = acc;
            }
        rep.chi_nondegenerate = mat_rank(gram) == caprank;
        if (!rep.chi_nondegenerate && rep.failure.empty()) rep.failure = "chi is degenerate on S cap P_k";
    }
    return rep;
}

/// The epsilon double D_eps = A (+) eps A with beta_eps(a1 + eps a2, b1 + eps b2)
/// = beta(a1, b2) + beta(a2, b1); elements are stored as coordinate pairs.
struct EpsilonDouble {
    MetricHandle M; // the base matrix algebra

    using Elem = std::pair<Element, Element>; // (a1, a2) = a1 + eps a2

    Elem mul(const Elem& x, const Elem& y) const {
        return {M->algebra().mul(x.first, y.first),
                el_add(M->algebra().mul(x.first, y.second), M->algebra().mul(x.second, y.first))};
    }
    Scalar beta_eps(const Elem& x, const Elem& y) const {
        return M->beta(x.first, y.second) + M->beta(x.second, y.first);
    }
    Vec coords(const Elem& x) const {
        Vec v(x.first);
        v.insert(v.end(), x.second.begin(), x.second.end());
        return v;
    }
};

/// The Lagrangian subalgebra V = {a + eps f(a) | a in S} (+) eps S^perp built
/// from the pair; f is the representative determined by chi against the dual
/// vectors of the (greedily extended) S basis.
struct LagrangianData {
    EpsilonDouble D;
    std::vector<EpsilonDouble::Elem> V;    // basis of V
    std::vector<Element> f_rep;            // f(s_a) representatives, aligned with p.S
    std::vector<Element> s_perp;           // basis of S^perp
};

inline LagrangianData pair_to_lagrangian(const StolinPair& p) {
    StolinReport rep = check_stolin_pair(p);
    if (!rep.ok()) throw InvalidPair(rep.failure.empty() ? "pair fails validation" : rep.failure);
    LagrangianData out{EpsilonDouble{share(matrix_algebra(p.n))}, {}, {}, {}};
    const MetricAlgebra& M = *out.D.M;
    const Algebra& A = M.algebra();
    int d = M.dim();
    size_t m = p.S.size();

    // extend the S basis by matrix units, then take the beta-dual basis; the
    // duals of the S part give the deterministic complement of S^perp
    std::vector<Element> ext = p.S;
    for (int i = 0; i < d && static_cast<int>(ext.size()) < d; ++i) {
        Element cand = A.basis(i);
        Mat fam;
        for (const auto& v : ext) fam.push_back(v);
        fam.push_back(cand);
        if (mat_rank(fam) == ext.size() + 1) ext.push_back(cand);
    }
    if (static_cast<int>(ext.size()) != d) throw InvalidPair("S basis is linearly dependent");
    // dual vectors: beta(y_a, ext_b) = delta_ab
    Mat gram = mat_zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) gram[a][b] = M.beta(ext[a], ext[b]);
    Mat ginv = mat_inverse(gram);
    std::vector<Element> duals(d, Element(d));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) duals[a] = el_add(duals[a], el_scale(ginv[a][b], ext[b]));

    for (size_t a = 0; a < m; ++a) {
        Element fa(d);
        for (size_t b = 0; b < m; ++b)
            if (!p.chi[a][b].is_zero()) fa = el_add(fa, el_scale(p.chi[a][b], duals[b]));
        out.f_rep.push_back(fa);
        out.V.push_back({p.S[a], fa});
    }
    out.s_perp = orthogonal_complement(M, p.S);
    for (const auto& u : out.s_perp) out.V.push_back({Element(d), u});

    // derivation property f(ab) - f(a) b - a f(b) in S^perp on all basis pairs
    for (size_t a = 0; a < m; ++a)
        for (size_t b = 0; b < m; ++b) {
            Element prod = A.mul(p.S[a], p.S[b]);
            auto cs = detail::in_span(p.S, prod);
            Element fab(d);
            for (size_t i = 0; i < m; ++i)
                if (!(*cs)[i].is_zero()) fab = el_add(fab, el_scale((*cs)[i], out.f_rep[i]));
            Element defect = el_sub(fab, el_add(A.mul(out.f_rep[a], p.S[b]), A.mul(p.S[a], out.f_rep[b])));
            for (const auto& s : p.S)
                if (!M.beta(defect, s).is_zero()) throw InvalidPair("f is not a derivation modulo S^perp");
        }
    // V is beta_eps isotropic of half dimension
    for (size_t a = 0; a < out.V.size(); ++a)
        for (size_t b = a; b < out.V.size(); ++b)
            if (!out.D.beta_eps(out.V[a], out.V[b]).is_zero()) throw InvalidPair("V is not isotropic");
    if (out.V.size() != static_cast<size_t>(d)) throw InvalidPair("V does not have half dimension");
    // D_eps = (P_k (+) eps P_k^perp) (+) V
    {
        Mat fam;
        for (const auto& e : parabolic_basis(p.n, p.k)) {
            EpsilonDouble::Elem x{e, Element(d)};
            fam.push_back(out.D.coords(x));
        }
        for (const auto& e : orthogonal_complement(M, parabolic_basis(p.n, p.k))) {
            EpsilonDouble::Elem x{Element(d), e};
            fam.push_back(out.D.coords(x));
        }
        for (const auto& v : out.V) fam.push_back(out.D.coords(v));
        if (mat_rank(fam) != static_cast<size_t>(2 * d)) throw InvalidPair("V does not complement P_k + eps P_k^perp");
    }
    return out;
}

namespace detail {

// Extract normal-form tails from a window spanning family of W: each target
// w_{k,i} decomposes as diag(a) + w with w in W; the tail is -a.
inline WBasis tails_from_spanning(const MetricHandle& M, int n, const std::vector<DnElement>& spanning, int kmax,
                                  int lo, int hi) {
    int d = M->dim();
    std::vector<Vec> cols;
    for (int j = 0; j <= hi; ++j)
        for (int p = 0; p < d; ++p)
            cols.push_back(dn_coords(dn_diag(M, n, el_monomial(M->algebra().basis(p), j)), lo, hi));
    size_t diag_count = cols.size();
    for (const auto& w : spanning) cols.push_back(dn_coords(w, lo, hi));
    Mat sys = column_matrix(cols);

    int bound = 0;
    std::vector<std::vector<Laurent1<Element>>> tails(kmax + 1,
                                                      std::vector<Laurent1<Element>>(d, Laurent1<Element>(0, kExact)));
    for (int k = 0; k <= kmax; ++k)
        for (int i = 0; i < d; ++i) {
            auto sol = solve(sys, dn_coords(w_generator(M, n, k, i), lo, hi));
            if (!sol) throw NotComplementary("normal form target is outside the spanning family window");
            Laurent1<Element> tail(0, kExact);
            for (size_t c = 0; c < diag_count; ++c) {
                if ((*sol)[c].is_zero()) continue;
                int j = static_cast<int>(c) / d;
                int pp = static_cast<int>(c) % d;
                tail.accumulate(j, el_scale(-(*sol)[c], M->algebra().basis(pp)));
            }
            if (!tail.is_zero()) bound = std::max(bound, k + 1);
            tails[k][i] = std::move(tail);
        }
    if (bound > kmax)
        throw WindowTooSmall("tails persist to the probe bound k = " + std::to_string(kmax));
    WBasis W(M, n, bound);
    for (int k = 0; k < bound; ++k)
        for (int i = 0; i < d; ++i) W.tails[k][i] = tails[k][i];
    return W;
}

} // namespace detail

/// Rational solution attached to the pair: lift V through N_k/z^{-2}N_k,
/// extract the tail-corrected family, and assemble gamma/(x-y) + t.
inline StandardFormSeries rational_from_pair(const StolinPair& p, int N) {
    LagrangianData L = pair_to_lagrangian(p);
    const MetricHandle& M = L.D.M;
    int d = M->dim();
    const int kmax = 3, lo = -kmax - 2, hi = 2;

    std::vector<DnElement> spanning;
    for (const auto& v : L.V) {
        // lift a1 + eps a2 to d_k^{-1}(a1 + z^{-1} a2)d_k: entry (a,b) sits at
        // exponent -s_ab and -s_ab - 1 with s_ab the block shift
        DnElement w(M, 0);
        Laurent1<Element> left(lo, kExact);
        for (int a = 0; a < p.n; ++a)
            for (int b = 0; b < p.n; ++b) {
                int s = (a >= p.n - p.k ? 1 : 0) - (b >= p.n - p.k ? 1 : 0);
                int idx = a * p.n + b;
                if (!v.first[idx].is_zero()) {
                    Element c(d);
                    c[idx] = v.first[idx];
                    left.accumulate(-s, c);
                }
                if (!v.second[idx].is_zero()) {
                    Element c(d);
                    c[idx] = v.second[idx];
                    left.accumulate(-s - 1, c);
                }
            }
        w.left = left;
        w.left.lo = lo;
        if (!nk_contains(p.n, p.k, w.left)) throw InvalidPair("lift leaves N_k");
        spanning.push_back(std::move(w));
    }
    for (const auto& mono : nk_monomials(p.n, p.k, lo, -2)) {
        DnElement w(M, 0);
        w.left = mono;
        w.left.lo = lo;
        spanning.push_back(std::move(w));
    }
    WBasis W = detail::tails_from_spanning(M, 0, spanning, kmax, lo, hi);
    StandardFormSeries r = subspace_to_series(W, one_series(), N);
    if (!cyb(r, std::min(N - 2, 6)).is_zero()) throw InvalidPair("constructed rational series fails the equation");
    return r;
}

/// Quasi-rational solution attached to the pair: W = N_k x W_- inside D_2
/// with W_- the Lagrangian complement built from the same pair data.
inline StandardFormSeries quasi_rational_from_pair(const StolinPair& p, int N) {
    LagrangianData L = pair_to_lagrangian(p);
    const MetricHandle& M = L.D.M;
    const int kmax = 4, lo = 1 - kmax, hi = 2;

    std::vector<DnElement> spanning;
    for (const auto& mono : nk_monomials(p.n, p.k, lo, 0)) {
        DnElement w(M, 2);
        w.left = mono;
        w.left.lo = lo;
        spanning.push_back(std::move(w));
    }
    for (const auto& v : L.V) {
        // W_- = V inside A[z]/z^2 A[z] via eps = -[z]; the sign is fixed by the
        // requirement that the rational and quasi-rational series of the same
        // pair share their constant tail
        DnElement w(M, 2);
        w.left = Laurent1<Element>(lo, kExact);
        w.right[0] = v.first;
        w.right[1] = el_scale(Scalar(-1), v.second);
        spanning.push_back(std::move(w));
    }
    WBasis W = detail::tails_from_spanning(M, 2, spanning, kmax, lo, hi);
    StandardFormSeries r = subspace_to_series(W, one_series(), N);
    if (!cyb(r, std::min(N - 2, 6)).is_zero()) throw InvalidPair("constructed quasi-rational series fails the equation");
    return r;
}

/// Reverses the construction: reduce A(r) mod z^{-2}N_k (rational) or project
/// onto the finite component (quasi-rational) and read off (S, chi).
inline StolinPair pair_from_solution(const StandardFormSeries& r, int k) {
    const MetricAlgebra& M = *r.M;
    int nmat = 0;
    while (nmat * nmat < M.dim()) ++nmat;
    if (nmat * nmat != M.dim()) throw InvalidPair("solution does not live over a matrix algebra");
    WBasis W = series_to_subspace(r);
    int d = M.dim();
    std::vector<EpsilonDouble::Elem> images;

    if (r.n == 0) {
        int kuse = std::max(W.tail_bound + 1, 3);
        for (int kk = 0; kk <= kuse; ++kk)
            for (int i = 0; i < d; ++i) {
                DnElement g = wbasis_generator(W, r.lambda, kk, i);
                if (!nk_contains(nmat, k, g.left)) throw NotInOrder("generator leaves N_k");
                Element a1(d), a2(d);
                bool nz = false;
                for (int a = 0; a < nmat; ++a)
                    for (int b = 0; b < nmat; ++b) {
                        int s = (a >= nmat - k ? 1 : 0) - (b >= nmat - k ? 1 : 0);
                        int idx = a * nmat + b;
                        if (const Element* c = g.left.get(-s)) a1[idx] = (*c)[idx];
                        if (const Element* c = g.left.get(-s - 1)) a2[idx] = (*c)[idx];
                        nz = nz || !a1[idx].is_zero() || !a2[idx].is_zero();
                    }
                if (nz) images.push_back({a1, a2});
            }
    } else if (r.n == 2) {
        int kuse = std::max(W.tail_bound + 1, 3);
        for (int kk = 0; kk <= kuse; ++kk)
            for (int i = 0; i < d; ++i) {
                DnElement g = wbasis_generator(W, r.lambda, kk, i);
                if (!nk_contains(nmat, k, g.left)) throw NotInOrder("generator leaves N_k");
                if (!el_is_zero(g.right[0]) || !el_is_zero(g.right[1]))
                    images.push_back({g.right[0], el_scale(Scalar(-1), g.right[1])});
            }
    } else {
        throw InvalidPair("only rational (n = 0) and quasi-rational (n = 2) solutions reduce to pairs");
    }

    // row reduce the images to a basis of V, then S = projection at eps = 0
    EpsilonDouble D{share(matrix_algebra(nmat))};
    Mat rows;
    for (const auto& v : images) rows.push_back(D.coords(v));
    auto pivots = row_reduce(rows);
    std::vector<EpsilonDouble::Elem> vbasis;
    for (size_t rr = 0; rr < pivots.size(); ++rr) {
        Element a1(rows[rr].begin(), rows[rr].begin() + d);
        Element a2(rows[rr].begin() + d, rows[rr].end());
        vbasis.push_back({a1, a2});
    }
    if (vbasis.size() != static_cast<size_t>(d)) throw InvalidPair("reduced family is not Lagrangian of half dimension");

    // S basis: independent eps = 0 projections; chi(a, b) = beta(f(a), b)
    StolinPair out;
    out.n = nmat;
    out.k = k;
    std::vector<EpsilonDouble::Elem> svecs;
    Mat sofar;
    for (const auto& v : vbasis) {
        if (el_is_zero(v.first)) continue;
        Mat fam = sofar;
        fam.push_back(v.first);
        if (mat_rank(fam) == sofar.size() + 1) {
            sofar.push_back(v.first);
            svecs.push_back(v);
        }
    }
    for (const auto& v : svecs) out.S.push_back(v.first);
    out.chi = mat_zero(svecs.size(), svecs.size());
    for (size_t a = 0; a < svecs.size(); ++a)
        for (size_t b = 0; b < svecs.size(); ++b) out.chi[a][b] = D.M->beta(svecs[a].second, svecs[b].first);
    StolinReport rep = check_stolin_pair(out);
    if (!rep.ok()) throw InvalidPair("recovered data fails validation: " + rep.failure);
    return out;
}

/// Same subspace with the same form: the spans agree and chi values match on
/// the first pair's basis expressed in the second.
inline bool pairs_equivalent(const StolinPair& a, const StolinPair& b) {
    if (a.n != b.n || a.k != b.k || a.S.size() != b.S.size()) return false;
    std::vector<Vec> coords;
    for (const auto& s : a.S) {
        auto c = detail::in_span(b.S, s);
        if (!c) return false;
        coords.push_back(*c);
    }
    for (size_t x = 0; x < a.S.size(); ++x)
        for (size_t y = 0; y < a.S.size(); ++y) {
            Scalar expect;
            for (size_t i = 0; i < b.S.size(); ++i)
                for (size_t j = 0; j < b.S.size(); ++j)
                    if (!coords[x][i].is_zero() && !coords[y][j].is_zero())
                        expect += coords[x][i] * b.chi[i][j] * coords[y][j];
            if (!(expect == a.chi[x][y])) return false;
        }
    return true;
}

/// Brute-force search over subalgebras spanned by subsets of matrix units
/// (practical for n <= 2): for each closed subset complementing P_k, solve the
/// cocycle equations and scan small integer combinations for non-degeneracy.
inline std::vector<StolinPair> enumerate_stolin_pairs(int n, int k) {
    if (n > 2) throw IndexOutOfRange("enumerator is limited to n <= 2");
    MetricAlgebra M = matrix_algebra(n);
    const Algebra& A = M.algebra();
    int d = n * n;
    std::vector<StolinPair> found;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Element> S;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) S.push_back(A.basis(i));
        if (S.empty() && k != 0) continue;
        // closed under multiplication?
        bool closed = true;
        for (size_t a = 0; a < S.size() && closed; ++a)
            for (size_t b = 0; b < S.size(); ++b)
                if (!detail::in_span(S, A.mul(S[a], S[b]))) {
                    closed = false;
                    break;
                }
        if (!closed) continue;
        StolinPair cand{n, k, S, mat_zero(S.size(), S.size())};
        // chi space: skew forms satisfying the cocycle identity
        size_t m = S.size();
        std::vector<std::pair<size_t, size_t>> slots;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = a + 1; b < m; ++b) slots.push_back({a, b});
        auto set_chi = [&](const Vec& vals) {
            for (size_t t = 0; t < slots.size(); ++t) {
                cand.chi[slots[t].first][slots[t].second] = vals[t];
                cand.chi[slots[t].second][slots[t].first] = -vals[t];
            }
        };
        // cocycle constraints are linear in the slot values
        Mat sys;
        for (size_t a = 0; a < m; ++a)
            for (size_t b = 0; b < m; ++b)
                for (size_t c = 0; c < m; ++c) {
                    Vec row(slots.size());
                    auto add_chi_row = [&](const Vec& x, size_t yidx, const Scalar& sign) {
                        for (size_t t = 0; t < slots.size(); ++t) {
                            auto [u, v] = slots[t];
                            // chi(e_u, e_v) slot contributes x_u at (u -> yidx) pairs
                            if (yidx == v) row[t] += sign * x[u];
                            if (yidx == u) row[t] -= sign * x[v];
                        }
                    };
                    auto cab = detail::in_span(S, A.mul(S[a], S[b]));
                    auto cbc = detail::in_span(S, A.mul(S[b], S[c]));
                    auto cca = detail::in_span(S, A.mul(S[c], S[a]));
                    add_chi_row(*cab, c, Scalar(1));
                    add_chi_row(*cbc, a, Scalar(1));
                    add_chi_row(*cca, b, Scalar(1));
                    sys.push_back(std::move(row));
                }
        std::vector<Vec> basis = slots.empty() ? std::vector<Vec>{} : nullspace(std::move(sys));
        // scan small combinations for a chi passing the full validation
        std::vector<Vec> candidates;
        if (slots.empty()) candidates.push_back({});
        for (const auto& v : basis) candidates.push_back(v);
        for (size_t i = 0; i < basis.size(); ++i)
            for (size_t j = i + 1; j < basis.size(); ++j) {
                Vec sum(slots.size());
                for (size_t t = 0; t < slots.size(); ++t) sum[t] = basis[i][t] + basis[j][t];
                candidates.push_back(std::move(sum));
            }
        if (m == 0) candidates.push_back({});
        for (const auto& v : candidates) {
            set_chi(v);
            if (check_stolin_pair(cand).ok()) {
                found.push_back(cand);
                break;
            }
        }
    }
    return found;
}

} // namespace acyb
