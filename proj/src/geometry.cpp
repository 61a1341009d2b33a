#include "motivic/geometry.hpp"

#include <fstream>

#include <json.hpp>

namespace motivic {

EPoly curve_class(int genus) {
    EPoly e = EPoly::one();
    e.add_term(2, 0, -genus);
    e.add_term(0, 2, -genus);
    e.add_term(2, 2, 1);
    return e;
}

EPoly projective_space(int n) {
    EPoly e;
    for (int i = 0; i <= n; ++i) e.add_term(2 * i, 2 * i, 1);
    return e;
}

EPoly abelian_class(int g) {
    return curve_class(1).pow(static_cast<unsigned>(g));
}

EPoly GeometrySpec::abelianE() const { return abelian_class(g); }

EPoly GeometrySpec::abelianE_vir() const {
    return EPoly::lefschetz(-g) * abelianE();
}

EPoly GeometrySpec::totalE() const { return fiberE * abelianE(); }

namespace {

GeometrySpec make(EPoly e, int r, bool projective) {
    GeometrySpec s;
    s.fiberE = std::move(e);
    s.r = r;
    s.projective = projective;
    s.connected = true;
    s.h00 = static_cast<int>(h00(s.fiberE).get_si());
    return s;
}

EPoly k3_class() {
    EPoly e = EPoly::one();
    e.add_term(4, 0, 1);
    e.add_term(0, 4, 1);
    e.add_term(2, 2, 20);
    e.add_term(4, 4, 1);
    return e;
}

GeometrySpec from_diamond_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownPreset("load_geometry: no preset or readable file named '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw MalformedDiamond("load_geometry: " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("hodge") ||
        !j["hodge"].is_array() || !j["dim"].is_number_integer())
        throw MalformedDiamond("load_geometry: " + path +
                               ": expected {\"name\", \"dim\", \"hodge\": [[int]]}");
    const int dim = j["dim"].get<int>();
    const auto& grid = j["hodge"];
    if (grid.empty()) throw MalformedDiamond("load_geometry: empty hodge grid");
    size_t width = 0;
    EPoly e;
    for (size_t p = 0; p < grid.size(); ++p) {
        if (!grid[p].is_array()) throw MalformedDiamond("load_geometry: hodge rows must be arrays");
        if (p == 0) width = grid[p].size();
        if (grid[p].size() != width)
            throw MalformedDiamond("load_geometry: non-rectangular hodge grid");
        for (size_t q = 0; q < width; ++q) {
            if (!grid[p][q].is_number_integer())
                throw MalformedDiamond("load_geometry: hodge entries must be integers");
            const long h = grid[p][q].get<long>();
            if (h < 0) throw MalformedDiamond("load_geometry: negative hodge number");
            const mpz_class sign = ((p + q) % 2 == 0) ? 1 : -1;
            e.add_term(2 * static_cast<int>(p), 2 * static_cast<int>(q), sign * h);
        }
    }
    // A Hodge grid describes a smooth projective variety.
    GeometrySpec s = make(std::move(e), dim, true);
    s.connected = (s.h00 == 1);
    if (s.projective && s.connected && s.h00 != 1)
        throw MalformedDiamond("load_geometry: projective connected input must have h^{0,0} = 1");
    return s;
}

} // namespace

GeometrySpec load_geometry(const std::string& source) {
    if (source == "point") return make(EPoly::one(), 0, true);
    if (source == "affine1") return make(EPoly::lefschetz(2), 1, false);
    if (source == "affine3") return make(EPoly::lefschetz(6), 3, false);
    if (source == "p1") return make(projective_space(1), 1, true);
    if (source == "p2") return make(projective_space(2), 2, true);
    if (source == "p3") return make(projective_space(3), 3, true);
    if (source == "elliptic") return make(curve_class(1), 1, true);
    if (source == "k3") return make(k3_class(), 2, true);
    if (source.rfind("abelian:", 0) == 0) {
        const int g = std::stoi(source.substr(8));
        if (g < 1) throw UnknownPreset("load_geometry: abelian:g needs g >= 1");
        return make(abelian_class(g), g, true);
    }
    if (source.rfind("genus:", 0) == 0) {
        const int h = std::stoi(source.substr(6));
        if (h < 0) throw UnknownPreset("load_geometry: genus:h needs h >= 0");
        return make(curve_class(h), 1, true);
    }
    return from_diamond_file(source);
}

} // namespace motivic
