#include "hgfam/io.hpp"

#include "hgfam/hypergeometric.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hgfam {

namespace {

nlohmann::json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max()) {
        return x.convert_to<std::int64_t>();
    }
    return x.str();
}

Int int_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Int(j.get<std::string>());
    return Int(j.get<std::int64_t>());
}

}  // namespace

nlohmann::json matrix_to_json(const IntegerMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

IntegerMatrix matrix_from_json(const nlohmann::json& j) {
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    std::vector<std::vector<Int>> e;
    for (const auto& row : j.at("entries")) {
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(int_from_json(v));
        e.push_back(std::move(r));
    }
    return IntegerMatrix(rows, cols, std::move(e));
}

IntegerMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty matrix file");
    if (text[first] == '{') return matrix_from_json(nlohmann::json::parse(text));
    return parse_matrix(text);
}

std::string to_string(const Rational& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    return Rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
}

std::vector<Int> parse_int_csv(const std::string& text) {
    std::vector<Int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.emplace_back(tok);
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

ParameterVector parse_rational_csv(const std::string& text) {
    ParameterVector out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
    if (out.empty()) throw std::invalid_argument("empty vector");
    return out;
}

nlohmann::json instance_to_json(const FamilyInstance& instance) {
    nlohmann::json beta = nlohmann::json::array();
    for (const auto& q : instance.parameter) beta.push_back(to_string(q));
    nlohmann::json glue = nlohmann::json::array();
    for (const auto& g : instance.added_columns) {
        nlohmann::json col = nlohmann::json::array();
        for (const auto& x : g.column) col.push_back(int_to_json(x));
        glue.push_back(nlohmann::json{{"position", g.position},
                                      {"base_index", g.base_index},
                                      {"column", col},
                                      {"identities",
                                       {"a1 + a" + std::to_string(g.base_index),
                                        "(a2 + a" + std::to_string(g.base_index + 1) +
                                            ") / 2"}}});
    }
    const PredictedStats stats = predicted_stats(instance);
    nlohmann::json predicted{{"volume", int_to_json(stats.volume)},
                             {"rank", int_to_json(stats.rank)},
                             {"jump", int_to_json(stats.jump)},
                             {"sst_bound", int_to_json(stats.sst_bound)},
                             {"provenance", stats.provenance},
                             {"rank_is_lower_bound", stats.rank_is_lower_bound}};
    if (stats.laurent_dim) {
        predicted["laurent_dim"] = int_to_json(*stats.laurent_dim);
    }
    return nlohmann::json{{"variant", to_string(instance.variant)},
                          {"d", instance.d},
                          {"r", instance.r},
                          {"s", instance.s},
                          {"beta", beta},
                          {"matrix", matrix_to_json(instance.matrix)},
                          {"glue_columns", glue},
                          {"predicted", predicted}};
}

}  // namespace hgfam
