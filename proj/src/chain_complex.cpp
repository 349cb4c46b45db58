#include "chain_complex.hpp"

#include <json.hpp>
#include <limits>

#include "ints.hpp"

namespace dp {

using nlohmann::json;

ChainComplex::ChainComplex(std::vector<std::int64_t> r, std::vector<IntMatrix> d)
    : ranks(std::move(r)), differentials(std::move(d)) {
    validate();
}

IntMatrix ChainComplex::differential(int k) const {
    if (k >= 1 && k <= length()) return differentials[k - 1];
    return IntMatrix(static_cast<std::size_t>(rank(k - 1)), static_cast<std::size_t>(rank(k)));
}

void ChainComplex::validate() const {
    for (auto r : ranks)
        if (r < 0) throw validation_error("ranks: negative rank");
    std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
    if (differentials.size() != expected)
        throw validation_error("differentials: expected " + std::to_string(expected) +
                               " matrices, got " + std::to_string(differentials.size()));
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const auto& m = differentials[k - 1];
        if (m.rows() != static_cast<std::size_t>(ranks[k - 1]) ||
            m.cols() != static_cast<std::size_t>(ranks[k]))
            throw validation_error("differentials[" + std::to_string(k - 1) + "]: shape " +
                                   std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                   ", expected " + std::to_string(ranks[k - 1]) + "x" +
                                   std::to_string(ranks[k]));
    }
    for (std::size_t k = 2; k < ranks.size(); ++k)
        if (!(differentials[k - 2] * differentials[k - 1]).is_zero())
            throw validation_error("differentials: d_" + std::to_string(k - 1) + " o d_" +
                                   std::to_string(k) + " != 0");
}

ChainComplex ChainComplex::trimmed() const {
    std::size_t top = ranks.size();
    while (top > 1 && ranks[top - 1] == 0) --top;  // keep degree 0 even when zero
    ChainComplex out;
    out.ranks.assign(ranks.begin(), ranks.begin() + top);
    if (top > 1)
        out.differentials.assign(differentials.begin(), differentials.begin() + (top - 1));
    return out;
}

namespace {

IntMatrix matrix_from_json(const json& rows, const char* where) {
    if (!rows.is_array()) throw validation_error(std::string(where) + ": expected an array of rows");
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows[0].size() : 0;
    IntMatrix m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != ncols)
            throw validation_error(std::string(where) + ": ragged row " + std::to_string(i));
        for (std::size_t j = 0; j < ncols; ++j) {
            const auto& v = row[j];
            if (v.is_number_integer())
                m.at(i, j) = Int(v.get<std::int64_t>());
            else if (v.is_string())
                m.at(i, j) = Int(v.get<std::string>());
            else
                throw validation_error(std::string(where) + ": non-integer entry at row " +
                                       std::to_string(i));
        }
    }
    return m;
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Int& v = m.at(i, j);
            if (v >= std::numeric_limits<std::int64_t>::min() &&
                v <= std::numeric_limits<std::int64_t>::max())
                row.push_back(v.convert_to<std::int64_t>());
            else
                row.push_back(v.str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

ChainComplex complex_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("complex: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw validation_error("complex: expected a JSON object");
    if (!j.contains("ranks")) throw validation_error("complex: missing field \"ranks\"");
    if (!j["ranks"].is_array()) throw validation_error("complex: \"ranks\" must be an array");

    ChainComplex c;
    for (const auto& v : j["ranks"]) {
        if (!v.is_number_integer()) throw validation_error("ranks: non-integer entry");
        c.ranks.push_back(v.get<std::int64_t>());
    }
    if (c.ranks.size() > 1) {
        if (!j.contains("differentials"))
            throw validation_error("complex: missing field \"differentials\"");
        const auto& ds = j["differentials"];
        if (!ds.is_array()) throw validation_error("complex: \"differentials\" must be an array");
        for (std::size_t k = 0; k < ds.size(); ++k) {
            std::string where = "differentials[" + std::to_string(k) + "]";
            auto m = matrix_from_json(ds[k], where.c_str());
            // a rank-0 target serializes as [], losing the column count; restore it
            if (m.rows() == 0 && k + 1 < c.ranks.size())
                m = IntMatrix(0, static_cast<std::size_t>(c.ranks[k + 1]));
            c.differentials.push_back(std::move(m));
        }
    } else if (j.contains("differentials") && !j["differentials"].empty()) {
        throw validation_error("complex: differentials present but no consecutive degrees");
    }
    c.validate();
    return c;
}

std::string complex_to_json(const ChainComplex& c) {
    json j;
    j["ranks"] = c.ranks;
    json ds = json::array();
    for (const auto& m : c.differentials) ds.push_back(matrix_to_json(m));
    j["differentials"] = std::move(ds);
    return j.dump(2) + "\n";
}

}  // namespace dp
