#include "tcplan/algebra_io.hpp"

#include <fstream>

namespace tcplan::coh {

namespace {

using nlohmann::json;

Coeff parse_coeff(const json& j) {
    if (j.is_number_integer()) return Coeff(j.get<long long>());
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        const long long num = j[0].get<long long>();
        const long long den = j[1].get<long long>();
        if (den == 0) throw ParseError("coefficient with zero denominator");
        return Coeff(num) / den;
    }
    throw ParseError("coefficient must be an integer or a [num, den] pair");
}

std::size_t require_index(const GradedAlgebra& alg, const std::string& label,
                          const char* what) {
    const auto idx = alg.index_of(label);
    if (!idx)
        throw ParseError(std::string(what) + " references unknown basis class '" + label +
                         "'");
    return *idx;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

AlgebraPtr load_algebra(const json& j) {
    if (!j.is_object()) throw ParseError("algebra presentation must be a JSON object");
    const std::string field_name = j.value("field", "");
    Field field;
    if (field_name == "gf2")
        field = Field::GF2;
    else if (field_name == "rational")
        field = Field::Rational;
    else
        throw ParseError("field must be \"gf2\" or \"rational\"");

    if (!j.contains("basis") || !j["basis"].is_array())
        throw ParseError("presentation needs a basis array");
    std::vector<BasisClass> basis;
    for (const auto& b : j["basis"]) {
        if (!b.is_object() || !b.contains("label") || !b.contains("degree"))
            throw ParseError("basis entries need label and degree");
        basis.push_back({b["label"].get<std::string>(), b["degree"].get<int>()});
    }

    // indices are resolved against a throwaway label table before make()
    auto label_index = [&basis](const std::string& label) -> std::size_t {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (basis[i].label == label) return i;
        throw ParseError("product references unknown basis class '" + label + "'");
    };

    std::map<std::pair<std::size_t, std::size_t>, SparseVec> products;
    for (const auto& p : j.value("products", json::array())) {
        if (!p.is_object() || !p.contains("left") || !p.contains("right"))
            throw ParseError("product entries need left and right");
        const std::size_t l = label_index(p["left"].get<std::string>());
        const std::size_t r = label_index(p["right"].get<std::string>());
        SparseVec result;
        for (const auto& t : p.value("result", json::array())) {
            if (!t.is_object() || !t.contains("basis") || !t.contains("coeff"))
                throw ParseError("product terms need basis and coeff");
            result.push_back({label_index(t["basis"].get<std::string>()),
                              parse_coeff(t["coeff"])});
        }
        if (products.count({l, r}))
            throw ParseError("duplicate product entry for (" +
                             p["left"].get<std::string>() + ", " +
                             p["right"].get<std::string>() + ")");
        products[{l, r}] = std::move(result);
    }
    return GradedAlgebra::make(field, std::move(basis), products);
}

AlgebraPtr load_algebra_file(const std::filesystem::path& path) {
    return load_algebra(read_json_file(path));
}

AlgebraMap load_map(const json& j, const AlgebraPtr& source,
                    const std::filesystem::path& base_dir) {
    if (!j.is_object() || !j.contains("target"))
        throw ParseError("map file needs a target algebra");
    AlgebraPtr target;
    if (j["target"].is_string())
        target = load_algebra_file(base_dir / j["target"].get<std::string>());
    else
        target = load_algebra(j["target"]);

    std::vector<Element> images;
    images.reserve(source->dim());
    for (std::size_t i = 0; i < source->dim(); ++i)
        images.push_back(i == source->unit_index() ? Element::unit(target)
                                                   : Element::zero(target));
    for (const auto& [label, terms] : j.value("images", json::object()).items()) {
        const std::size_t src_idx = require_index(*source, label, "map image");
        std::vector<Coeff> c(target->dim(), Coeff(0));
        for (const auto& t : terms) {
            if (!t.is_object() || !t.contains("basis") || !t.contains("coeff"))
                throw ParseError("image terms need basis and coeff");
            c[require_index(*target, t["basis"].get<std::string>(), "map image")] =
                parse_coeff(t["coeff"]);
        }
        images[src_idx] = Element(target, std::move(c));
    }
    return AlgebraMap(source, target, std::move(images));
}

AlgebraMap load_map_file(const std::filesystem::path& path, const AlgebraPtr& source) {
    return load_map(read_json_file(path), source, path.parent_path());
}

}  // namespace tcplan::coh
