#pragma once

#include <json.hpp>

#include "qmc/algebra.hpp"
#include "qmc/partition.hpp"

namespace qmc {

// Wire formats: partitions as decreasing integer arrays, permutations as
// 1-based one-line arrays, algebra elements as
// {"terms": [{"perm": [...], "coeff": "p/q"}]}.

inline nlohmann::json to_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

inline nlohmann::json to_json(const Permutation& pi) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : pi.one_line_1based()) arr.push_back(v);
    return arr;
}

inline nlohmann::json to_json(const AlgebraElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [pi, coeff] : x.terms()) {
        Rat c = coeff;
        c.canonicalize();
        terms.push_back({{"perm", to_json(pi)}, {"coeff", c.get_str()}});
    }
    return {{"n", x.n()}, {"terms", terms}};
}

inline Partition partition_from_json(const nlohmann::json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

inline Permutation permutation_from_json(const nlohmann::json& j) {
    std::vector<int> img;
    for (const auto& v : j) img.push_back(v.get<int>() - 1);
    return Permutation(std::move(img));
}

inline AlgebraElement algebra_from_json(const nlohmann::json& j) {
    AlgebraElement x(j.at("n").get<int>());
    for (const auto& term : j.at("terms"))
        x.add_term(permutation_from_json(term.at("perm")),
                   Rat(term.at("coeff").get<std::string>()));
    return x;
}

}  // namespace qmc
