#include "bracekit/presets.hpp"

#include "bracekit/error.hpp"

#include <map>

namespace bracekit {

namespace {

GroupLaw make_law(std::size_t dim, const std::vector<std::string>& lets,
                  const std::vector<std::string>& components) {
    std::map<std::string, ExprPtr> bound;
    for (const auto& line : lets) {
        const auto eq = line.find('=');
        std::string name = line.substr(0, eq);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        bound[name] = parse_expression(line.substr(eq + 1), dim, bound);
    }
    std::vector<ExprPtr> parsed;
    parsed.reserve(components.size());
    for (const auto& c : components) parsed.push_back(parse_expression(c, dim, bound));
    return GroupLaw(dim, std::move(parsed));
}

GroupLaw abelian_law(std::size_t dim) {
    std::vector<std::string> comps;
    for (std::size_t i = 1; i <= dim; ++i)
        comps.push_back("a" + std::to_string(i) + " + b" + std::to_string(i));
    return make_law(dim, {}, comps);
}

}  // namespace

FiniteGroup group_preset(const std::string& name) {
    if (name.size() > 1 && name[0] == 'c' &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        const unsigned long n = std::stoul(name.substr(1));
        if (n >= 1 && n <= 60) return cyclic_group(n);
    }
    if (name == "c2xc2") return direct_product(cyclic_group(2), cyclic_group(2));
    if (name == "c2xc4") return direct_product(cyclic_group(2), cyclic_group(4));
    if (name == "c2xc2xc2")
        return direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2)));
    if (name == "c3xc3") return direct_product(cyclic_group(3), cyclic_group(3));
    if (name == "c3xc2cubed")
        return direct_product(
            cyclic_group(3),
            direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
    if (name == "s3") return symmetric_group(3);
    if (name == "s4") return symmetric_group(4);
    if (name == "a4") return alternating_group(4);
    if (name == "a5") return alternating_group(5);
    if (name == "d4") return dihedral_group(4);
    if (name == "d5") return dihedral_group(5);
    if (name == "d6") return dihedral_group(6);
    if (name == "q8") return quaternion_group();
    throw Error("UnknownPreset", "no group preset named '" + name + "'");
}

std::vector<std::string> group_preset_names() {
    return {"c1",  "c2",  "c3",  "c4",  "c5",  "c6",  "c7",       "c8",
            "c9",  "c10", "c11", "c12", "c2xc2", "c2xc4", "c2xc2xc2", "c3xc3",
            "c3xc2cubed", "s3", "s4", "a4", "a5", "d4", "d5", "d6", "q8"};
}

GroupLaw law_preset(const std::string& name) {
    if (name == "abelian_1") return abelian_law(1);
    if (name == "abelian_2") return abelian_law(2);
    if (name == "abelian_3") return abelian_law(3);
    if (name == "abelian_4") return abelian_law(4);
    if (name == "affine2d_circ")
        return make_law(2, {}, {"a1 + exp(a2)*b1", "a2 + b2"});
    if (name == "a1_1_circ")
        // the (X,Y,Z)-chart law with s = X - YZ
        return make_law(3, {"s = a1 - a2*a3"},
                        {"a1 + b1 + a3*exp(s)*b2 + a2*exp(-s)*b3", "a2 + exp(s)*b2",
                         "a3 + exp(-s)*b3"});
    if (name == "a1_1_circ_semidirect")
        return make_law(3, {}, {"a1 + b1", "a2 + exp(a1)*b2", "a3 + exp(-a1)*b3"});
    if (name == "a1_1_dot_semidirect")
        // vector addition transported through (X,Y,Z) -> (X - YZ, Y, Z)
        return make_law(3, {}, {"a1 + b1 - a2*b3 - b2*a3", "a2 + b2", "a3 + b3"});
    throw Error("UnknownPreset", "no law preset named '" + name + "'");
}

std::vector<std::string> law_preset_names() {
    return {"abelian_1", "abelian_2",     "abelian_3",           "abelian_4",
            "affine2d_circ", "a1_1_circ", "a1_1_circ_semidirect", "a1_1_dot_semidirect"};
}

std::pair<GroupLaw, GroupLaw> brace_law_preset(const std::string& name) {
    if (name == "a1_1_model") return {law_preset("abelian_3"), law_preset("a1_1_circ")};
    if (name == "a1_1_semidirect")
        return {law_preset("a1_1_dot_semidirect"), law_preset("a1_1_circ_semidirect")};
    if (name == "affine2d") return {law_preset("abelian_2"), law_preset("affine2d_circ")};
    if (name == "affine2d_almost_trivial")
        // (dot, dot-opposite): the circ law is the dot law with arguments swapped
        return {law_preset("affine2d_circ"), make_law(2, {}, {"b1 + exp(b2)*a1", "b2 + a2"})};
    if (name == "abelian_2") return {abelian_law(2), abelian_law(2)};
    if (name == "abelian_3") return {abelian_law(3), abelian_law(3)};
    throw Error("UnknownPreset", "no brace-law preset named '" + name + "'");
}

std::vector<std::string> brace_law_preset_names() {
    return {"a1_1_model", "a1_1_semidirect", "affine2d", "affine2d_almost_trivial",
            "abelian_2",  "abelian_3"};
}

}  // namespace bracekit
