#include "nradius/matrix_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nradius {

std::string matrix_to_json(const CMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    nlohmann::json doc;
    doc["dim"] = m.dim();
    doc["entries"] = std::move(rows);
    return doc.dump();
}

CMatrix matrix_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("matrix JSON parse error: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
        throw std::runtime_error("matrix JSON must be an object with dim and entries");
    if (!doc["dim"].is_number_unsigned())
        throw std::runtime_error("matrix JSON dim must be a non-negative integer");
    const std::size_t dim = doc["dim"].get<std::size_t>();
    if (dim == 0 || dim > kMaxDim)
        throw std::runtime_error("matrix JSON dim out of range [1, " +
                                 std::to_string(kMaxDim) + "]");
    const auto& rows = doc["entries"];
    if (!rows.is_array() || rows.size() != dim)
        throw std::runtime_error("matrix JSON entries must hold dim rows");
    std::vector<Complex> data;
    data.reserve(dim * dim);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != dim)
            throw std::runtime_error("matrix JSON rows must hold dim cells");
        for (const auto& cell : row) {
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
                throw std::runtime_error("matrix JSON cells must be [re, im] numbers");
            const double re = cell[0].get<double>();
            const double im = cell[1].get<double>();
            if (!std::isfinite(re) || !std::isfinite(im))
                throw std::runtime_error("matrix JSON entries must be finite");
            data.emplace_back(re, im);
        }
    }
    return CMatrix(dim, std::move(data));
}

CMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

void save_matrix_file(const CMatrix& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix file: " + path);
    out << matrix_to_json(m) << '\n';
}

}  // namespace nradius
