#include "glmn/io.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "glmn/error.hpp"

namespace glmn {

namespace {

int read_dimension(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer \"") + key + "\"");
    }
    const auto value = doc[key].get<std::int64_t>();
    if (value < 0) {
        throw ParseError(std::string("\"") + key + "\" must be non-negative");
    }
    return static_cast<int>(value);
}

Rational cell_to_rational(const nlohmann::json& cell) {
    if (cell.is_number_integer()) {
        return Rational(Integer(std::to_string(cell.get<std::int64_t>())));
    }
    if (cell.is_string()) {
        const auto parsed = parse_rational(cell.get<std::string>());
        if (!parsed) {
            throw ParseError("malformed rational \"" + cell.get<std::string>() + "\"");
        }
        return *parsed;
    }
    throw ParseError("matrix cells must be integers or \"p/q\" strings");
}

nlohmann::json rational_to_cell(const Rational& q) {
    if (is_integer(q)) {
        const Integer& num = q.get_num();
        if (num.fits_slong_p()) {
            return nlohmann::json(static_cast<std::int64_t>(num.get_si()));
        }
    }
    return nlohmann::json(to_string(q));
}

std::vector<int> read_int_list(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) {
        return {};
    }
    if (!doc[key].is_array()) {
        throw ParseError(std::string("\"") + key + "\" must be an array of integers");
    }
    std::vector<int> values;
    for (const auto& cell : doc[key]) {
        if (!cell.is_number_integer()) {
            throw ParseError(std::string("\"") + key + "\" must be an array of integers");
        }
        values.push_back(static_cast<int>(cell.get<std::int64_t>()));
    }
    return values;
}

} // namespace

SuperMatrix matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ParseError("matrix document must be a JSON object");
    }
    const int m = read_dimension(doc, "m");
    const int n = read_dimension(doc, "n");
    const int d = m + n;
    if (!doc.contains("entries") || !doc["entries"].is_array() ||
        static_cast<int>(doc["entries"].size()) != d) {
        throw ParseError("\"entries\" must be an array of " + std::to_string(d) + " rows");
    }
    SuperMatrix g(m, n);
    for (int i = 0; i < d; ++i) {
        const auto& row = doc["entries"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != d) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(d) +
                             " cells");
        }
        for (int j = 0; j < d; ++j) {
            g.set(i, j, cell_to_rational(row[j]));
        }
    }
    return g;
}

nlohmann::json matrix_to_json(const SuperMatrix& g) {
    nlohmann::json doc;
    doc["m"] = g.even_dim();
    doc["n"] = g.odd_dim();
    auto rows = nlohmann::json::array();
    for (int i = 0; i < g.dim(); ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < g.dim(); ++j) {
            row.push_back(rational_to_cell(g.at(i, j)));
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc;
}

OrbitParams params_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ParseError("parameter document must be a JSON object");
    }
    const int m = read_dimension(doc, "m");
    const int n = read_dimension(doc, "n");
    const auto k = read_int_list(doc, "k");
    const auto column_list = read_int_list(doc, "column_marked");
    const auto row_list = read_int_list(doc, "row_marked");
    std::set<int> column_marked(column_list.begin(), column_list.end());
    std::set<int> row_marked(row_list.begin(), row_list.end());
    if (column_marked.size() != column_list.size() || row_marked.size() != row_list.size()) {
        throw BadMarker("duplicate marker positions");
    }
    int s = 0;
    if (doc.contains("s")) {
        if (!doc["s"].is_number_integer()) {
            throw ParseError("\"s\" must be an integer");
        }
        s = static_cast<int>(doc["s"].get<std::int64_t>());
    }
    return OrbitParams::validate(m, n, k, column_marked, row_marked, s);
}

nlohmann::json params_to_json(const OrbitParams& p) {
    nlohmann::json doc;
    doc["m"] = p.even_dim();
    doc["n"] = p.odd_dim();
    doc["k"] = p.k();
    doc["column_marked"] = std::vector<int>(p.column_marked().begin(), p.column_marked().end());
    doc["row_marked"] = std::vector<int>(p.row_marked().begin(), p.row_marked().end());
    doc["s"] = p.tail();
    return doc;
}

std::string matrix_to_text(const SuperMatrix& g) {
    const int d = g.dim();
    std::vector<std::vector<std::string>> cells(d, std::vector<std::string>(d));
    std::size_t width = 1;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            cells[i][j] = to_string(g.at(i, j));
            width = std::max(width, cells[i][j].size());
        }
    }
    std::string out;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (j > 0) {
                out += ' ';
            }
            out += std::string(width - cells[i][j].size(), ' ');
            out += cells[i][j];
        }
        out += '\n';
    }
    return out;
}

std::string params_to_text(const OrbitParams& p) {
    std::string out = "m=" + std::to_string(p.even_dim()) + " n=" + std::to_string(p.odd_dim());
    out += " k=[";
    for (std::size_t i = 0; i < p.k().size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(p.k()[i]);
    }
    out += "] column_marked=[";
    bool first = true;
    for (int pos : p.column_marked()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(pos);
        first = false;
    }
    out += "] row_marked=[";
    first = true;
    for (int pos : p.row_marked()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(pos);
        first = false;
    }
    out += "] s=" + std::to_string(p.tail());
    return out;
}

} // namespace glmn
