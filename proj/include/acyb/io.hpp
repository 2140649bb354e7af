#pragma once

#include <json.hpp>

#include "acyb/stolin.hpp"

namespace acyb {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s) { return s.str(); }

inline Scalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return Scalar(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw ParseError("scalar must be a string or an integer");
}

inline Json to_json(const Element& e) {
    Json out = Json::array();
    for (const auto& c : e) out.push_back(to_json(c));
    return out;
}

inline Element element_from_json(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("element has wrong length");
    Element e(dim);
    for (int i = 0; i < dim; ++i) e[i] = scalar_from_json(j[i]);
    return e;
}

inline Json to_json(const Tensor2& t) {
    Json out = Json::array();
    for (int p = 0; p < t.d; ++p) {
        Json row = Json::array();
        for (int q = 0; q < t.d; ++q) row.push_back(to_json(t.at(p, q)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Tensor2 tensor2_from_json(const Json& j, int dim) {
    Tensor2 t(dim);
    if (!j.is_array() || static_cast<int>(j.size()) != dim) throw ParseError("tensor has wrong shape");
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) t.at(p, q) = scalar_from_json(j.at(p).at(q));
    return t;
}

inline Json to_json(const Tensor3& t) {
    Json out = Json::array();
    for (int p = 0; p < t.d; ++p) {
        Json plane = Json::array();
        for (int q = 0; q < t.d; ++q) {
            Json row = Json::array();
            for (int s = 0; s < t.d; ++s) row.push_back(to_json(t.at(p, q, s)));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

// Algebras -------------------------------------------------------------------

inline bool is_named_spec(const std::string& name) {
    return name.rfind("matrix:", 0) == 0 || name.rfind("lie:sl_", 0) == 0 || name.rfind("jordan:sym_", 0) == 0;
}

inline Json algebra_to_json(const MetricAlgebra& M) {
    if (is_named_spec(M.name())) return Json{{"named", M.name()}};
    Json out;
    if (!M.name().empty()) out["name"] = M.name();
    out["dim"] = M.dim();
    Json structure = Json::array();
    for (int i = 0; i < M.dim(); ++i) {
        Json plane = Json::array();
        for (int j = 0; j < M.dim(); ++j) {
            Json row = Json::array();
            for (int k = 0; k < M.dim(); ++k) row.push_back(to_json(M.algebra().sc(i, j, k)));
            plane.push_back(std::move(row));
        }
        structure.push_back(std::move(plane));
    }
    out["structure"] = std::move(structure);
    Json gram = Json::array();
    for (int i = 0; i < M.dim(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.dim(); ++j) row.push_back(to_json(M.gram()[i][j]));
        gram.push_back(std::move(row));
    }
    out["gram"] = std::move(gram);
    out["labels"] = M.algebra().labels();
    return out;
}

inline MetricHandle algebra_from_json(const Json& j) {
    try {
        if (j.is_string()) return share(named_algebra(j.get<std::string>()));
        if (j.contains("named")) return share(named_algebra(j["named"].get<std::string>()));
        int dim = j.at("dim").get<int>();
        std::vector<Scalar> sc;
        sc.reserve(static_cast<size_t>(dim) * dim * dim);
        for (int i = 0; i < dim; ++i)
            for (int p = 0; p < dim; ++p)
                for (int k = 0; k < dim; ++k) sc.push_back(scalar_from_json(j.at("structure").at(i).at(p).at(k)));
        Mat gram = mat_zero(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int p = 0; p < dim; ++p) gram[i][p] = scalar_from_json(j.at("gram").at(i).at(p));
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
        std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
        return share(MetricAlgebra(Algebra(dim, std::move(sc), std::move(labels)), std::move(gram), name));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("algebra: ") + e.what());
    }
}

// Series ----------------------------------------------------------------------

inline Json series1_to_json(const Series1<Scalar>& f, int default_trunc) {
    Json out;
    out["vars"] = Json::array({"z"});
    out["trunc"] = f.trunc == kExact ? default_trunc : f.trunc;
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms) terms.push_back(Json{{"exp", Json::array({e})}, {"coeff", to_json(c)}});
    out["terms"] = std::move(terms);
    return out;
}

inline Series1<Scalar> series1_from_json(const Json& j) {
    try {
        Series1<Scalar> f(j.at("trunc").get<int>());
        for (const auto& term : j.at("terms")) f.set(term.at("exp").at(0).get<int>(), scalar_from_json(term.at("coeff")));
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
}

inline Json series2_to_json(const Series2<Tensor2>& f, int default_trunc) {
    Json out;
    out["vars"] = Json::array({"x", "y"});
    out["trunc"] = f.trunc == kExact ? default_trunc : f.trunc;
    Json terms = Json::array();
    for (const auto& [e, c] : f.terms)
        terms.push_back(Json{{"exp", Json::array({e.first, e.second})}, {"coeff", to_json(c)}});
    out["terms"] = std::move(terms);
    return out;
}

inline Series2<Tensor2> series2_from_json(const Json& j, int dim) {
    try {
        Series2<Tensor2> f(j.at("trunc").get<int>());
        for (const auto& term : j.at("terms"))
            f.set(term.at("exp").at(0).get<int>(), term.at("exp").at(1).get<int>(), tensor2_from_json(term.at("coeff"), dim));
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("series: ") + e.what());
    }
}

// Solutions --------------------------------------------------------------------

inline Json solution_to_json(const StandardFormSeries& r) {
    Json out;
    out["algebra"] = algebra_to_json(*r.M);
    out["n"] = r.n;
    out["lambda"] = series1_to_json(r.lambda, r.trunc == kExact ? 16 : r.trunc);
    out["tail"] = series2_to_json(r.tail, r.trunc == kExact ? 16 : r.trunc);
    out["trunc"] = r.trunc == kExact ? 16 : r.trunc;
    return out;
}

inline StandardFormSeries solution_from_json(const Json& j) {
    try {
        MetricHandle M = algebra_from_json(j.at("algebra"));
        int n = j.at("n").get<int>();
        Series1<Scalar> lambda = series1_from_json(j.at("lambda"));
        Series2<Tensor2> tail = series2_from_json(j.at("tail"), M->dim());
        int trunc = j.at("trunc").get<int>();
        return StandardFormSeries(M, n, std::move(lambda), std::move(tail), trunc);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("solution: ") + e.what());
    }
}

// Lagrangian-complement families -----------------------------------------------

inline Json wbasis_to_json(const WBasis& W) {
    Json out;
    out["n"] = W.n;
    out["tail_bound"] = W.tail_bound;
    Json tails = Json::object();
    for (int k = 0; k < W.tail_bound; ++k)
        for (int i = 0; i < W.M->dim(); ++i) {
            if (W.tails[k][i].is_zero()) continue;
            Json poly = Json::array();
            int top = W.tails[k][i].terms.empty() ? -1 : W.tails[k][i].terms.rbegin()->first;
            for (int e = 0; e <= top; ++e) {
                const Element* c = W.tails[k][i].get(e);
                poly.push_back(c ? to_json(*c) : to_json(Element(W.M->dim())));
            }
            tails[std::to_string(k) + "," + std::to_string(i)] = std::move(poly);
        }
    out["tails"] = std::move(tails);
    return out;
}

inline WBasis wbasis_from_json(const Json& j, const MetricHandle& M) {
    try {
        WBasis W(M, j.at("n").get<int>(), j.at("tail_bound").get<int>());
        for (const auto& [key, poly] : j.at("tails").items()) {
            auto comma = key.find(',');
            int k = std::stoi(key.substr(0, comma));
            int i = std::stoi(key.substr(comma + 1));
            if (k < 0 || k >= W.tail_bound || i < 0 || i >= M->dim()) throw ParseError("tail index out of range");
            Laurent1<Element> tail(0, kExact);
            for (size_t e = 0; e < poly.size(); ++e) tail.set(static_cast<int>(e), element_from_json(poly[e], M->dim()));
            W.tails[k][i] = std::move(tail);
        }
        return W;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("wbasis: ") + e.what());
    }
}

// Stolin pairs -------------------------------------------------------------------

inline Json pair_to_json(const StolinPair& p) {
    Json out;
    out["n"] = p.n;
    out["k"] = p.k;
    Json basis = Json::array();
    for (const auto& s : p.S) {
        Json matrix = Json::array();
        for (int a = 0; a < p.n; ++a) {
            Json row = Json::array();
            for (int b = 0; b < p.n; ++b) row.push_back(to_json(s[a * p.n + b]));
            matrix.push_back(std::move(row));
        }
        basis.push_back(std::move(matrix));
    }
    out["S_basis"] = std::move(basis);
    Json chi = Json::array();
    for (size_t a = 0; a < p.S.size(); ++a) {
        Json row = Json::array();
        for (size_t b = 0; b < p.S.size(); ++b) row.push_back(to_json(p.chi[a][b]));
        chi.push_back(std::move(row));
    }
    out["chi"] = std::move(chi);
    return out;
}

inline StolinPair pair_from_json(const Json& j) {
    try {
        StolinPair p;
        p.n = j.at("n").get<int>();
        p.k = j.at("k").get<int>();
        for (const auto& matrix : j.at("S_basis")) {
            Element e(p.n * p.n);
            for (int a = 0; a < p.n; ++a)
                for (int b = 0; b < p.n; ++b) e[a * p.n + b] = scalar_from_json(matrix.at(a).at(b));
            p.S.push_back(std::move(e));
        }
        p.chi = mat_zero(p.S.size(), p.S.size());
        for (size_t a = 0; a < p.S.size(); ++a)
            for (size_t b = 0; b < p.S.size(); ++b) p.chi[a][b] = scalar_from_json(j.at("chi").at(a).at(b));
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("pair: ") + e.what());
    }
}

// Cobrackets and finite bialgebras ------------------------------------------------

inline Json cocycle_to_json(const Cocycle& c) {
    Json out;
    Json gens = Json::object();
    for (int k = 0; k <= c.trunc; ++k)
        for (int i = 0; i < c.M->dim(); ++i) {
            if (c.images[k][i].is_zero()) continue;
            gens[std::to_string(k) + "," + std::to_string(i)] = series2_to_json(c.images[k][i], c.trunc);
        }
    out["generators"] = std::move(gens);
    out["trunc"] = c.trunc;
    return out;
}

inline Json bialgebra_to_json(const MetricAlgebra& M, const std::vector<Tensor2>& delta) {
    Json out;
    out["algebra"] = algebra_to_json(M);
    Json d = Json::array();
    for (const auto& t : delta) d.push_back(to_json(t));
    out["delta"] = std::move(d);
    return out;
}

inline std::pair<MetricHandle, std::vector<Tensor2>> bialgebra_from_json(const Json& j) {
    try {
        MetricHandle M = algebra_from_json(j.at("algebra"));
        std::vector<Tensor2> delta;
        for (const auto& t : j.at("delta")) delta.push_back(tensor2_from_json(t, M->dim()));
        if (static_cast<int>(delta.size()) != M->dim()) throw ParseError("delta table has wrong length");
        return {M, std::move(delta)};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bialgebra: ") + e.what());
    }
}

} // namespace acyb
