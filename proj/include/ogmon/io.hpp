#pragma once

// JSON encoding. Integers are written as decimal strings so that consumers
// never truncate entries to 64 bits.

#include "word.hpp"

#include <nlohmann/json.hpp>

namespace ogmon {

using json = nlohmann::json;

inline json to_json(const IntVector& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

inline json to_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Integer integer_from_json(const json& x)
{
    if (x.is_string())
        return parse_integer(x.get<std::string>());
    if (x.is_number_integer())
        return Integer(std::to_string(x.get<long long>()));
    throw std::invalid_argument("expected an integer as a decimal string");
}

inline IntVector vector_from_json(const json& a)
{
    if (!a.is_array())
        throw std::invalid_argument("expected a JSON array");
    IntVector v;
    for (const auto& x : a)
        v.push_back(integer_from_json(x));
    return v;
}

inline IntMatrix matrix_from_json(const json& rows)
{
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("expected a non-empty array of rows");
    std::vector<IntVector> r;
    for (const auto& row : rows)
        r.push_back(vector_from_json(row));
    return IntMatrix::from_rows(r, r.front().size());
}

inline json to_json(const Lattice& l)
{
    json j{{"rank", l.rank()}, {"gram", to_json(l.gram())}};
    j["labels"] = l.labels();
    if (!l.name().empty())
        j["name"] = l.name();
    return j;
}

inline json to_json(const LatVector& x)
{
    const std::string& name = x.lattice().name();
    return {{"lattice", name.empty() ? to_json(x.lattice()) : json(name)}, {"coords", to_json(x.coords())}};
}

inline json to_json(const Factor& f)
{
    json j{{"tag", f.tag()}};
    if (f.z)
        j["z"] = to_json(f.z->coords());
    if (f.a)
        j["a"] = to_json(f.a->coords());
    if (f.vector)
        j["vector"] = to_json(f.vector->coords());
    j["matrix"] = to_json(f.g.matrix());
    return j;
}

inline json to_json(const GeneratorWord& w)
{
    json factors = json::array();
    for (const auto& f : w.factors())
        factors.push_back(to_json(f));
    return {{"factors", std::move(factors)}, {"product", to_json(w.product().matrix())}};
}

/// {"lattice": name, "matrix": [[...]]}
inline json matrix_file(const std::string& lattice, const IntMatrix& m)
{
    return {{"lattice", lattice}, {"matrix", to_json(m)}};
}

} // namespace ogmon
