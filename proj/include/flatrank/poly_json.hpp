#pragma once

#include <string>

#include <json.hpp>

#include "flatrank/polynomial.hpp"

namespace flatrank {

// Wire format: {"n": int, "terms": [{"exp": [int,...], "num": "...", "den": "..."}]}
// with num/den decimal strings (canonical: lowest terms, positive denominator).
inline nlohmann::json poly_to_json(const RatPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [a, c] : p.terms()) {
        nlohmann::json t;
        t["exp"] = a.exps();
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"n", p.vars()}, {"terms", std::move(terms)}};
}

inline RatPoly poly_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("terms"))
        throw PreconditionViolation("polynomial JSON needs fields 'n' and 'terms'");
    int n = j.at("n").get<int>();
    RatPoly p(n);
    for (const auto& t : j.at("terms")) {
        std::vector<int> exps = t.at("exp").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != n)
            throw PreconditionViolation("exponent vector has wrong length");
        Int num(t.at("num").get<std::string>());
        Int den(t.at("den").get<std::string>());
        if (den == 0) throw PreconditionViolation("zero denominator in polynomial JSON");
        Rational c(num, den);
        c.canonicalize();
        p.add_term(MultiIndex(std::move(exps)), std::move(c));
    }
    return p;
}

}  // namespace flatrank
