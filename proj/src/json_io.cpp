#include "motivic/json_io.hpp"

namespace motivic {

std::string exponent_string(int e2) {
    if (e2 % 2 == 0) return std::to_string(e2 / 2);
    return std::to_string(e2) + "/2";
}

int parse_exponent_string(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return 2 * std::stoi(s);
    if (s.substr(slash + 1) != "2")
        throw std::invalid_argument("parse_exponent_string: denominator must be 2 in '" + s + "'");
    return std::stoi(s.substr(0, slash));
}

ojson class_to_json(const EPoly& c) {
    ojson arr = ojson::array();
    for (const auto& [k, v] : c.terms()) {
        ojson rec;
        rec["p"] = exponent_string(k.first);
        rec["q"] = exponent_string(k.second);
        rec["c"] = v.get_str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

EPoly class_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("class_from_json: expected an array");
    EPoly c;
    for (const auto& rec : j) {
        const int p2 = parse_exponent_string(rec.at("p").get<std::string>());
        const int q2 = parse_exponent_string(rec.at("q").get<std::string>());
        c.add_term(p2, q2, mpz_class(rec.at("c").get<std::string>()));
    }
    return c;
}

ojson ylaurent_to_json(const YLaurent& c) {
    ojson arr = ojson::array();
    for (const auto& [e, v] : c.terms()) {
        ojson rec;
        rec["e"] = exponent_string(e);
        rec["c"] = v.get_str();
        arr.push_back(std::move(rec));
    }
    return arr;
}

YLaurent ylaurent_from_json(const ojson& j) {
    if (!j.is_array()) throw std::invalid_argument("ylaurent_from_json: expected an array");
    YLaurent c;
    for (const auto& rec : j)
        c.add_term(parse_exponent_string(rec.at("e").get<std::string>()),
                   mpz_class(rec.at("c").get<std::string>()));
    return c;
}

} // namespace motivic
