#pragma once

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "bihom/algebra.hpp"
#include "bihom/representation.hpp"

namespace bihom {

enum class AlgebraKind { lie, associative };

/**
 * On-disk form of an algebra: structure tensor and twist matrices with every
 * scalar an exact "p/q" string. The same record carries Bihom-Lie brackets,
 * Bihom-associative products and raw pre-twist Lie data; "kind" says which
 * checker applies.
 */
struct AlgebraFile {
    std::string name; // optional, empty when absent
    AlgebraKind kind = AlgebraKind::lie;
    std::size_t dim = 0;
    StructureTensor tensor;
    Matrix alpha;
    Matrix beta;

    bool operator==(const AlgebraFile& o) const {
        return name == o.name && kind == o.kind && dim == o.dim &&
               tensor == o.tensor && alpha == o.alpha && beta == o.beta;
    }

    BihomLieAlgebra as_lie() const {
        if (kind != AlgebraKind::lie)
            throw ParseError("algebra file holds kind \"associative\", expected \"lie\"");
        return {dim, tensor, alpha, beta};
    }

    BihomAssociativeAlgebra as_associative() const {
        if (kind != AlgebraKind::associative)
            throw ParseError("algebra file holds kind \"lie\", expected \"associative\"");
        return {dim, tensor, alpha, beta};
    }
};

struct RepresentationFile {
    std::string algebra_ref; // optional path of the underlying algebra file
    std::size_t mdim = 0;
    std::vector<Matrix> rho;
    Matrix alpha_m;
    Matrix beta_m;

    bool operator==(const RepresentationFile& o) const {
        return algebra_ref == o.algebra_ref && mdim == o.mdim && rho == o.rho &&
               alpha_m == o.alpha_m && beta_m == o.beta_m;
    }

    Representation bind(const BihomLieAlgebra& L) const {
        if (rho.size() != L.dim)
            throw DimensionMismatchError(
                "representation file has " + std::to_string(rho.size()) +
                " action matrices for an algebra of dimension " + std::to_string(L.dim));
        return {L, mdim, rho, alpha_m, beta_m};
    }
};

namespace detail {

using nlohmann::json;

inline const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + '"');
    return *it;
}

inline Rational scalar_at(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError(where + ": expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

inline Matrix matrix_at(const json& j, std::size_t rows, std::size_t cols,
                        const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != cols)
            throw ParseError(where + "[" + std::to_string(i) + "]: expected " +
                             std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = scalar_at(row[k], where + "[" + std::to_string(i) + "][" +
                                            std::to_string(k) + "]");
    }
    return m;
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
    using detail::field;
    const auto j = detail::parse_json(text);
    AlgebraFile f;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("name: expected a string");
        f.name = j["name"].get<std::string>();
    }
    const std::string kind = field(j, "kind").is_string()
                                 ? field(j, "kind").get<std::string>()
                                 : throw ParseError("kind: expected a string");
    if (kind == "lie")
        f.kind = AlgebraKind::lie;
    else if (kind == "associative")
        f.kind = AlgebraKind::associative;
    else
        throw ParseError("kind: expected \"lie\" or \"associative\", got \"" + kind + '"');
    if (field(j, "field") != "rational")
        throw ParseError("field: only \"rational\" is supported");
    if (!field(j, "dim").is_number_unsigned())
        throw ParseError("dim: expected a nonnegative integer");
    f.dim = field(j, "dim").get<std::size_t>();

    const auto& br = field(j, "bracket");
    if (!br.is_array() || br.size() != f.dim)
        throw ParseError("bracket: expected " + std::to_string(f.dim) + " rows");
    f.tensor = StructureTensor(f.dim);
    for (std::size_t i = 0; i < f.dim; ++i) {
        if (!br[i].is_array() || br[i].size() != f.dim)
            throw ParseError("bracket[" + std::to_string(i) + "]: expected " +
                             std::to_string(f.dim) + " entries");
        for (std::size_t jj = 0; jj < f.dim; ++jj) {
            const auto& cell = br[i][jj];
            if (!cell.is_array() || cell.size() != f.dim)
                throw ParseError("bracket[" + std::to_string(i) + "][" +
                                 std::to_string(jj) + "]: expected a vector of length " +
                                 std::to_string(f.dim));
            for (std::size_t k = 0; k < f.dim; ++k)
                f.tensor.entry(i, jj, k) =
                    detail::scalar_at(cell[k], "bracket[" + std::to_string(i) + "][" +
                                                   std::to_string(jj) + "][" +
                                                   std::to_string(k) + "]");
        }
    }
    f.alpha = detail::matrix_at(field(j, "alpha"), f.dim, f.dim, "alpha");
    f.beta = detail::matrix_at(field(j, "beta"), f.dim, f.dim, "beta");
    return f;
}

inline std::string emit_algebra(const AlgebraFile& f) {
    using detail::json;
    json j;
    if (!f.name.empty()) j["name"] = f.name;
    j["kind"] = f.kind == AlgebraKind::lie ? "lie" : "associative";
    j["field"] = "rational";
    j["dim"] = f.dim;
    json br = json::array();
    for (std::size_t i = 0; i < f.dim; ++i) {
        json row = json::array();
        for (std::size_t jj = 0; jj < f.dim; ++jj) {
            json cell = json::array();
            for (std::size_t k = 0; k < f.dim; ++k)
                cell.push_back(to_string(f.tensor.entry(i, jj, k)));
            row.push_back(std::move(cell));
        }
        br.push_back(std::move(row));
    }
    j["bracket"] = std::move(br);
    j["alpha"] = detail::matrix_to_json(f.alpha);
    j["beta"] = detail::matrix_to_json(f.beta);
    return j.dump(2) + "\n";
}

inline RepresentationFile parse_representation(const std::string& text) {
    using detail::field;
    const auto j = detail::parse_json(text);
    RepresentationFile f;
    if (j.contains("algebra")) {
        if (!j["algebra"].is_string()) throw ParseError("algebra: expected a string");
        f.algebra_ref = j["algebra"].get<std::string>();
    }
    if (!field(j, "mdim").is_number_unsigned())
        throw ParseError("mdim: expected a nonnegative integer");
    f.mdim = field(j, "mdim").get<std::size_t>();
    const auto& rho = field(j, "rho");
    if (!rho.is_array()) throw ParseError("rho: expected an array of matrices");
    for (std::size_t i = 0; i < rho.size(); ++i)
        f.rho.push_back(detail::matrix_at(rho[i], f.mdim, f.mdim,
                                          "rho[" + std::to_string(i) + "]"));
    f.alpha_m = detail::matrix_at(field(j, "alpha_M"), f.mdim, f.mdim, "alpha_M");
    f.beta_m = detail::matrix_at(field(j, "beta_M"), f.mdim, f.mdim, "beta_M");
    return f;
}

inline std::string emit_representation(const RepresentationFile& f) {
    using detail::json;
    json j;
    if (!f.algebra_ref.empty()) j["algebra"] = f.algebra_ref;
    j["mdim"] = f.mdim;
    json rho = json::array();
    for (const auto& m : f.rho) rho.push_back(detail::matrix_to_json(m));
    j["rho"] = std::move(rho);
    j["alpha_M"] = detail::matrix_to_json(f.alpha_m);
    j["beta_M"] = detail::matrix_to_json(f.beta_m);
    return j.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << text;
}

inline AlgebraFile load_algebra(const std::string& path) {
    try {
        return parse_algebra(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

inline RepresentationFile load_representation(const std::string& path) {
    try {
        return parse_representation(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

/// Bare JSON 2D array of rational strings, used for derivation matrices,
/// extension cocycles and linear forms on the command line.
inline Matrix parse_matrix(const std::string& text) {
    const auto j = detail::parse_json(text);
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw ParseError("expected a JSON 2D array of rational strings");
    return detail::matrix_at(j, j.size(), j[0].size(), "matrix");
}

inline Vec parse_vector(const std::string& text) {
    const auto j = detail::parse_json(text);
    if (!j.is_array()) throw ParseError("expected a JSON array of rational strings");
    Vec v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v[i] = detail::scalar_at(j[i], "[" + std::to_string(i) + "]");
    return v;
}

using Params = std::map<std::string, Rational>;

namespace detail {

inline Rational require_param(const Params& p, const std::string& key,
                              const std::string& generator) {
    const auto it = p.find(key);
    if (it == p.end())
        throw InvalidParamsError(generator + ": missing parameter \"" + key + '"');
    return it->second;
}

inline void reject_unknown(const Params& p, std::initializer_list<const char*> known,
                           const std::string& generator) {
    for (const auto& [key, _] : p) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) { ok = true; break; }
        if (!ok)
            throw InvalidParamsError(generator + ": unknown parameter \"" + key + '"');
    }
}

inline StructureTensor sl2_bracket() {
    // basis (X, Y, H): [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y
    StructureTensor c(3);
    c.entry(0, 1, 2) = 1;
    c.entry(1, 0, 2) = -1;
    c.entry(2, 0, 0) = 2;
    c.entry(0, 2, 0) = -2;
    c.entry(2, 1, 1) = -2;
    c.entry(1, 2, 1) = 2;
    return c;
}

inline Matrix sl2_twist_map(const Rational& k) {
    // columns are the images of X, Y, H
    Matrix m = Matrix::identity(3);
    m(0, 1) = -k * k;
    m(2, 1) = k;
    m(0, 2) = -2 * k;
    return m;
}

} // namespace detail

/**
 * Parameter-instantiated example generators.
 *
 *   assoc2d    m, n      the 2-dimensional Bihom-associative algebra with
 *                        μ(e_i, e_j) scaled by m or n and a shear α
 *                        (rejects m = 0, n = 0, n = 1)
 *   sl2_twist  k, l      raw sl(2) bracket with the one-parameter twist maps
 *                        attached; feed to the Yau twist to get the
 *                        Bihom-Lie algebra
 *   sl2_remark k         the already-twisted bracket {a,b} = [α(a), b]
 *                        with β = id
 *   abelian    dim       zero bracket with identity twists
 */
inline AlgebraFile generate_example(const std::string& name, const Params& params) {
    using detail::require_param;
    AlgebraFile f;
    if (name == "assoc2d") {
        detail::reject_unknown(params, {"m", "n"}, name);
        const Rational m = require_param(params, "m", name);
        const Rational n = require_param(params, "n", name);
        if (m == 0 || n == 0 || n == 1)
            throw InvalidParamsError("assoc2d: requires m != 0, n != 0, n != 1");
        f.name = "assoc2d(m=" + to_string(m) + ",n=" + to_string(n) + ")";
        f.kind = AlgebraKind::associative;
        f.dim = 2;
        f.tensor = StructureTensor(2);
        f.tensor.entry(0, 0, 0) = m; // e1 e1 = m e1
        f.tensor.entry(0, 1, 1) = m; // e1 e2 = m e2
        f.tensor.entry(1, 0, 0) = n; // e2 e1 = n e1
        f.tensor.entry(1, 1, 1) = n; // e2 e2 = n e2
        f.alpha = Matrix::identity(2);
        f.alpha(0, 1) = 1 / m;
        f.alpha(1, 1) = (n - 1) / n;
        f.beta = Matrix::identity(2);
        return f;
    }
    if (name == "sl2_twist") {
        detail::reject_unknown(params, {"k", "l"}, name);
        Rational k(0), l(0);
        if (auto it = params.find("k"); it != params.end()) k = it->second;
        if (auto it = params.find("l"); it != params.end()) l = it->second;
        f.name = "sl2_twist(k=" + to_string(k) + ",l=" + to_string(l) + ")";
        f.kind = AlgebraKind::lie;
        f.dim = 3;
        f.tensor = detail::sl2_bracket();
        f.alpha = detail::sl2_twist_map(k);
        f.beta = detail::sl2_twist_map(l);
        return f;
    }
    if (name == "sl2_remark") {
        detail::reject_unknown(params, {"k"}, name);
        const Rational k = require_param(params, "k", name);
        f.name = "sl2_remark(k=" + to_string(k) + ")";
        f.kind = AlgebraKind::lie;
        f.dim = 3;
        const StructureTensor lie = detail::sl2_bracket();
        const Matrix a = detail::sl2_twist_map(k);
        f.tensor = StructureTensor(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                f.tensor.set_basis(i, j, lie.apply(a.col(i), unit_vec(3, j)));
        f.alpha = a;
        f.beta = Matrix::identity(3);
        return f;
    }
    if (name == "abelian") {
        detail::reject_unknown(params, {"dim"}, name);
        const Rational d = require_param(params, "dim", name);
        if (denominator(d) != 1 || d < 0 || d > 32)
            throw InvalidParamsError("abelian: dim must be an integer in 0..32");
        const auto n = static_cast<std::size_t>(numerator(d).convert_to<long>());
        f.name = "abelian(dim=" + to_string(d) + ")";
        f.kind = AlgebraKind::lie;
        f.dim = n;
        f.tensor = StructureTensor(n);
        f.alpha = Matrix::identity(n);
        f.beta = Matrix::identity(n);
        return f;
    }
    throw InvalidParamsError("unknown example \"" + name +
                             "\"; available: assoc2d, sl2_twist, sl2_remark, abelian");
}

} // namespace bihom
