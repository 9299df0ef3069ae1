#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "uqsl2/matrix.hpp"
#include "uqsl2/recognize.hpp"
#include "uqsl2/report.hpp"
#include "uqsl2/scalar_text.hpp"

namespace uqsl2 {

using nlohmann::json;

template <class S>
json matrix_to_json(const ExactMatrix<S>& m) {
    json rows = json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <class S>
ExactMatrix<S> matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix document needs fields rows, cols, entries");
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const json& e = j.at("entries");
    if (!e.is_array() || e.size() != rows)
        throw ParseError("entries must be an array of " + std::to_string(rows) + " rows");
    ExactMatrix<S> m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const json& row = e.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (size_t jj = 0; jj < cols; ++jj)
            m.at(i, jj) = parse_scalar<S>(row.at(jj).get<std::string>());
    }
    return m;
}

template <class S>
json triple_to_json(const ShapeTriple<S>& t) {
    return json{{"d", t.d},
                {"x", matrix_to_json(t.X)},
                {"y", matrix_to_json(t.Y)},
                {"z", matrix_to_json(t.Z)}};
}

template <class S>
ShapeTriple<S> triple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("x") || !j.contains("y") ||
        !j.contains("z"))
        throw ParseError("triple document needs fields d, x, y, z");
    ShapeTriple<S> t;
    t.d = j.at("d").get<long>();
    t.X = matrix_from_json<S>(j.at("x"));
    t.Y = matrix_from_json<S>(j.at("y"));
    t.Z = matrix_from_json<S>(j.at("z"));
    return t;
}

inline json report_to_json(const Report& r) {
    json checks = json::array();
    for (auto& c : r.checks) {
        json item{{"check", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(std::move(item));
    }
    return checks;
}

template <class S>
json recognition_to_json(const RecognitionResult<S>& r) {
    json out{{"branch", branch_name(r.branch)},
             {"certificate", report_to_json(r.certificate)}};
    if (r.b) out["b"] = r.b->str();
    if (r.q) out["q"] = r.q->str();
    if (r.branch == Branch::quantum) {
        out["y_diag_reversed"] = r.y_diag_reversed;
        out["z_diag_reversed"] = r.z_diag_reversed;
    }
    if (r.branch != Branch::underdetermined)
        out["normalized"] = json{{"x", matrix_to_json(r.X)},
                                 {"y", matrix_to_json(r.Y)},
                                 {"z", matrix_to_json(r.Z)}};
    return out;
}

/// Aligned human-readable rendering; advisory output, not round-trippable.
template <class S>
std::string matrix_to_table(const ExactMatrix<S>& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::vector<size_t> width(m.cols(), 0);
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = m.at(i, j).str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    std::ostringstream os;
    for (size_t i = 0; i < m.rows(); ++i) {
        os << "[ ";
        for (size_t j = 0; j < m.cols(); ++j) {
            os << cells[i][j] << std::string(width[j] - cells[i][j].size(), ' ');
            os << (j + 1 < m.cols() ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace uqsl2
