#pragma once

#include <fstream>

#include <json.hpp>

#include "tubal/tensor.hpp"

namespace tubal {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tensor files are JSON documents:
//   matrix: {"n": n, "p": p, "slices": [S_1, ..., S_p]} with S_k an n x n
//           nested row-major array holding frontal slice k
//   vector: {"n": n, "p": p, "tubes": [[p numbers], ... n of them]}
// Doubles serialize as shortest round-trip decimals, so save/load is
// bit-exact for finite values.

namespace detail {

inline double finite_number(const nlohmann::json& j, const std::string& where) {
    if (!j.is_number()) throw ParseError(where + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(where + ": non-finite value");
    return v;
}

inline std::pair<std::size_t, std::size_t> read_dims(const nlohmann::json& j,
                                                     const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    if (!j.contains("n") || !j.contains("p"))
        throw ParseError(where + ": missing \"n\" or \"p\"");
    if (!j["n"].is_number_unsigned() || !j["p"].is_number_unsigned())
        throw ParseError(where + ": \"n\" and \"p\" must be nonnegative integers");
    const std::size_t n = j["n"].get<std::size_t>(), p = j["p"].get<std::size_t>();
    if (n == 0 || p == 0) throw ParseError(where + ": \"n\" and \"p\" must be at least 1");
    return {n, p};
}

}  // namespace detail

inline bool is_vector_json(const nlohmann::json& j) {
    return j.is_object() && j.contains("tubes");
}

inline TubalMatrix<double> matrix_from_json(const nlohmann::json& j,
                                            const std::string& where = "tensor") {
    const auto [n, p] = detail::read_dims(j, where);
    if (!j.contains("slices") || !j["slices"].is_array() || j["slices"].size() != p)
        throw ParseError(where + ": \"slices\" must be an array of p slices");
    TubalMatrix<double> a(n, p);
    for (std::size_t k = 0; k < p; ++k) {
        const nlohmann::json& sk = j["slices"][k];
        const std::string sw = where + ": slice " + std::to_string(k + 1);
        if (!sk.is_array() || sk.size() != n) throw ParseError(sw + ": expected n rows");
        for (std::size_t i = 0; i < n; ++i) {
            if (!sk[i].is_array() || sk[i].size() != n)
                throw ParseError(sw + ", row " + std::to_string(i + 1) + ": expected n numbers");
            for (std::size_t jj = 0; jj < n; ++jj)
                a.at(i, jj, k) = detail::finite_number(
                    sk[i][jj], sw + ", row " + std::to_string(i + 1));
        }
    }
    return a;
}

inline TubalVector<double> vector_from_json(const nlohmann::json& j,
                                            const std::string& where = "tensor") {
    const auto [n, p] = detail::read_dims(j, where);
    if (!j.contains("tubes") || !j["tubes"].is_array() || j["tubes"].size() != n)
        throw ParseError(where + ": \"tubes\" must be an array of n tubes");
    TubalVector<double> x(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        const nlohmann::json& ti = j["tubes"][i];
        const std::string tw = where + ": tube " + std::to_string(i + 1);
        if (!ti.is_array() || ti.size() != p) throw ParseError(tw + ": expected p numbers");
        for (std::size_t k = 0; k < p; ++k) x.at(i, k) = detail::finite_number(ti[k], tw);
    }
    return x;
}

inline nlohmann::json to_json(const TubalMatrix<double>& a) {
    nlohmann::json j;
    j["n"] = a.n();
    j["p"] = a.tube_length();
    nlohmann::json slices = nlohmann::json::array();
    for (std::size_t k = 0; k < a.tube_length(); ++k) {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < a.n(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t jj = 0; jj < a.n(); ++jj) {
                if (!std::isfinite(a.at(i, jj, k)))
                    throw ParseError("to_json: non-finite value in tensor");
                row.push_back(a.at(i, jj, k));
            }
            rows.push_back(std::move(row));
        }
        slices.push_back(std::move(rows));
    }
    j["slices"] = std::move(slices);
    return j;
}

inline nlohmann::json to_json(const TubalVector<double>& x) {
    nlohmann::json j;
    j["n"] = x.n();
    j["p"] = x.tube_length();
    nlohmann::json tubes = nlohmann::json::array();
    for (std::size_t i = 0; i < x.n(); ++i) {
        nlohmann::json tube = nlohmann::json::array();
        for (std::size_t k = 0; k < x.tube_length(); ++k) {
            if (!std::isfinite(x.at(i, k))) throw ParseError("to_json: non-finite value in tensor");
            tube.push_back(x.at(i, k));
        }
        tubes.push_back(std::move(tube));
    }
    j["tubes"] = std::move(tubes);
    return j;
}

namespace detail {

inline nlohmann::json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

}  // namespace detail

inline TubalMatrix<double> load_matrix(const std::string& path) {
    return matrix_from_json(detail::parse_file(path), path);
}

inline TubalVector<double> load_vector(const std::string& path) {
    return vector_from_json(detail::parse_file(path), path);
}

template <typename X>
void save(const X& x, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path + ": cannot open file for writing");
    out << to_json(x).dump(2) << "\n";
}

}  // namespace tubal
