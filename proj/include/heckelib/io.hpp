#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "heckelib/complex_torus.hpp"
#include "heckelib/errors.hpp"
#include "heckelib/torus_bundles.hpp"

namespace hecke::io {

using json = nlohmann::ordered_json;

/// Parse "a+bi" / "a-bi" / "a" / "bi" / "i" (no whitespace).
inline cdouble parse_complex(const std::string& text) {
    auto to_double = [](std::string s) {
        if (s.empty() || s == "+") s = "1";
        if (s == "-") s = "-1";
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw error("bad complex literal");
        return v;
    };
    if (text.empty()) throw error("empty complex literal");
    if (text.back() != 'i') return cdouble(to_double(text), 0.0);

    const std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not an exponent sign and not leading.
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') &&
            body[p - 1] != 'e' && body[p - 1] != 'E')
            return cdouble(to_double(body.substr(0, p)), to_double(body.substr(p)));
    }
    return cdouble(0.0, to_double(body));
}

inline std::string format_complex(cdouble z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

/// Period matrix JSON: {"genus": g, "omega": [[{"re":..,"im":..},..],..]}.
inline RiemannMatrix parse_period_matrix(const json& j) {
    const int g = j.at("genus").get<int>();
    const auto& rows = j.at("omega");
    if (static_cast<int>(rows.size()) != g)
        throw not_symmetric("omega row count does not match genus");
    Eigen::MatrixXcd omega(g, g);
    for (int i = 0; i < g; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != g)
            throw not_symmetric("omega column count does not match genus");
        for (int k = 0; k < g; ++k)
            omega(i, k) = cdouble(row.at(k).at("re").get<double>(),
                                  row.at(k).at("im").get<double>());
    }
    return RiemannMatrix::validate(omega);
}

inline RiemannMatrix load_period_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open period matrix file: " + path);
    json j;
    in >> j;
    return parse_period_matrix(j);
}

inline json period_matrix_to_json(const RiemannMatrix& lattice) {
    json rows = json::array();
    const int g = lattice.genus();
    for (int i = 0; i < g; ++i) {
        json row = json::array();
        for (int k = 0; k < g; ++k)
            row.push_back({{"re", lattice.omega()(i, k).real()},
                           {"im", lattice.omega()(i, k).imag()}});
        rows.push_back(row);
    }
    return json{{"genus", g}, {"omega", rows}};
}

/// Torus data JSON: {"rank": r, "pairing": [[..],..]}.
inline TorusData parse_torus_data(const json& j) {
    const int r = j.at("rank").get<int>();
    Eigen::MatrixXi pairing(r, r);
    const auto& rows = j.at("pairing");
    if (static_cast<int>(rows.size()) != r)
        throw shape_mismatch("pairing row count does not match rank");
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) pairing(i, k) = rows.at(i).at(k).get<int>();
    return make_torus(pairing);
}

inline std::string omega_csv_field(const RiemannMatrix& lattice) {
    std::ostringstream os;
    os.precision(17);
    const int g = lattice.genus();
    for (int i = 0; i < g; ++i)
        for (int k = 0; k < g; ++k) {
            if (i || k) os << ';';
            const cdouble z = lattice.omega()(i, k);
            os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        }
    return os.str();
}

inline std::string int_vector_csv_field(const Eigen::VectorXi& v) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) os << ';';
        os << v[i];
    }
    return os.str();
}

} // namespace hecke::io
