#include "hankelmonde/serialize.hpp"

#include "hankelmonde/errors.hpp"

#include <sstream>

namespace hankelmonde {

using nlohmann::json;

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const Rational& c : p.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) {
        throw ParseError("polynomial must be a list of coefficient strings");
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) {
        if (!c.is_string()) {
            throw ParseError("coefficient must be a string such as \"-3/2\"");
        }
        coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    return Poly(std::move(coeffs));
}

json matrix_to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(poly_to_json(m(i, j)));
        }
        entries.push_back(std::move(row));
    }
    return json{{"format_version", kFormatVersion}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

PolyMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ParseError("matrix object needs rows, cols and entries");
    }
    if (j.contains("format_version") && j.at("format_version") != kFormatVersion) {
        throw ParseError("unsupported format_version " + j.at("format_version").dump());
    }
    const json& jr = j.at("rows");
    const json& jc = j.at("cols");
    if (!jr.is_number_unsigned() || !jc.is_number_unsigned()) {
        throw ParseError("rows and cols must be non-negative integers");
    }
    const auto rows = jr.get<std::size_t>();
    const auto cols = jc.get<std::size_t>();
    const json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows) {
        throw ParseError("entries must list exactly " + std::to_string(rows) + " rows");
    }
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = poly_from_json(row[k]);
        }
    }
    return m;
}

std::string matrix_to_csv(const PolyMatrix& m) {
    if (!m.is_constant()) {
        throw InvalidArgument("CSV output needs a constant matrix; pass an evaluation point");
    }
    std::ostringstream out;
    out << "# " << m.rows() << 'x' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << to_string(m(i, j).coeff(0));
        }
        out << '\n';
    }
    return out.str();
}

PolyMatrix matrix_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t rows = 0;
    std::size_t cols = 0;
    char x = 0;
    char hash = 0;
    if (!std::getline(in, line)) {
        throw ParseError("empty CSV input");
    }
    std::istringstream header(line);
    if (!(header >> hash >> rows >> x >> cols) || hash != '#' || x != 'x') {
        throw ParseError("CSV must start with a \"# RxC\" header");
    }
    PolyMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!std::getline(in, line)) {
            throw ParseError("CSV has fewer than " + std::to_string(rows) + " rows");
        }
        std::istringstream cells(line);
        std::string cell;
        std::size_t j = 0;
        while (std::getline(cells, cell, ',')) {
            if (j >= cols) {
                throw ParseError("CSV row " + std::to_string(i) + " has too many cells");
            }
            m(i, j++) = Poly(parse_rational(cell));
        }
        if (j != cols) {
            throw ParseError("CSV row " + std::to_string(i) + " has too few cells");
        }
    }
    while (std::getline(in, line)) {
        if (!line.empty()) {
            throw ParseError("trailing data after the last CSV row");
        }
    }
    return m;
}

} // namespace hankelmonde
