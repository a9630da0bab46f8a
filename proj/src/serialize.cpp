#include "qdk/serialize.hpp"

namespace qdk {

Json scalar_row_json(const QRow& r, std::size_t dim) {
    Json out = Json::array();
    auto d = dense(r, dim);
    for (const auto& x : d) out.push_back(to_string(x));
    return out;
}

QRow scalar_row_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) throw ParseError("relation row has wrong length");
    std::vector<Scalar> d;
    d.reserve(dim);
    for (const auto& x : j) {
        if (x.is_string()) d.push_back(parse_scalar(x.get<std::string>()));
        else if (x.is_number_integer()) d.emplace_back(x.get<long>());
        else throw ParseError("scalar must be a \"p/q\" string");
    }
    return qrow_from_dense(d);
}

Json graded_to_json(const GradedSpace& v) {
    Json g = Json::array();
    for (const auto& b : v.basis()) g.push_back({{"label", b.label}, {"degree", b.degree}});
    return g;
}

GradedSpace graded_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("generators must be an array");
    std::vector<Generator> gens;
    for (const auto& g : j) gens.push_back({g.at("label").get<std::string>(), g.at("degree").get<int>()});
    return GradedSpace(std::move(gens));
}

Json qd_to_json(const QuadraticData& q) {
    Json j;
    j["flavor"] = flavor_name(q.flavor);
    j["generators"] = graded_to_json(q.v);
    Json rel = Json::array();
    for (const auto& r : q.r.qrows()) rel.push_back(scalar_row_json(r, q.square->dim()));
    j["relations"] = rel;
    return j;
}

QuadraticData qd_from_json(const Json& j) {
    try {
        Flavor f = parse_flavor(j.at("flavor").get<std::string>());
        GradedSpace v = graded_from_json(j.at("generators"));
        std::size_t n2 = v.dim() * v.dim();
        std::vector<QRow> rows;
        for (const auto& r : j.at("relations")) rows.push_back(scalar_row_from_json(r, n2));
        return make_qd(f, std::move(v), rows);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad quadratic data document: ") + e.what());
    }
}

}  // namespace qdk
