#include "torickit/io.hpp"

#include "torickit/error.hpp"

namespace torickit {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

void check_schema_version(const Json& doc) {
    if (doc.contains("schema_version") && doc["schema_version"] != kSchemaVersion)
        parse_fail("unsupported schema_version " + doc["schema_version"].dump());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0) parse_fail("malformed integer " + j.dump());
        return x;
    }
    parse_fail("expected an integer, got " + j.dump());
}

}  // namespace

Json integer_to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json int_vector_to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(integer_to_json(x));
    return out;
}

Json index_set_to_json(IndexSet s) {
    Json out = Json::array();
    for (auto i : s.indices()) out.push_back(i + 1);
    return out;
}

FanDocument parse_fan_document(const std::string& text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) parse_fail("fan document must be a JSON object");
    check_schema_version(doc);
    for (const char* key : {"dimension", "generators", "maximal_cones"})
        if (!doc.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
    if (!doc["dimension"].is_number_unsigned()) parse_fail("\"dimension\" must be a nonnegative integer");
    const auto n = doc["dimension"].get<std::size_t>();
    if (!doc["generators"].is_array()) parse_fail("\"generators\" must be an array");
    if (!doc["maximal_cones"].is_array()) parse_fail("\"maximal_cones\" must be an array");

    std::vector<LatticeVector> rays;
    for (const auto& g : doc["generators"]) {
        if (!g.is_array()) parse_fail("each generator must be an integer array");
        IntVector v;
        for (const auto& x : g) v.push_back(integer_from_json(x));
        LatticeVector p = [&] {
            try {
                return primitivize(v);
            } catch (const Error&) {
                parse_fail("generator " + g.dump() + " is zero");
            }
        }();
        if (p.coords() != v) parse_fail("generator " + g.dump() + " is not primitive");
        rays.push_back(std::move(p));
    }
    if (rays.size() > kMaxRays) throw Error(ErrorCode::RLimitExceeded, "more than 64 rays");

    std::vector<IndexSet> maximal;
    for (const auto& c : doc["maximal_cones"]) {
        if (!c.is_array()) parse_fail("each maximal cone must be an index array");
        IndexSet s;
        for (const auto& i : c) {
            if (!i.is_number_unsigned() || i.get<std::size_t>() < 1 || i.get<std::size_t>() > rays.size())
                parse_fail("cone index " + i.dump() + " outside 1.." + std::to_string(rays.size()));
            s = s.with(i.get<std::size_t>() - 1);
        }
        maximal.push_back(s);
    }
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    return {std::move(name), Fan::from_maximal_cones(n, std::move(rays), maximal)};
}

Json fan_to_json(const Fan& f, const std::string& name) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    if (!name.empty()) doc["name"] = name;
    doc["dimension"] = f.dimension();
    Json gens = Json::array();
    for (const auto& g : f.generators()) gens.push_back(int_vector_to_json(g.coords()));
    doc["generators"] = gens;
    Json cones = Json::array();
    for (auto m : f.maximal_faces())
        if (m.size() >= 2) cones.push_back(index_set_to_json(m));
    doc["maximal_cones"] = cones;
    return doc;
}

Json coefficient_to_json(const GaussianRational& c) {
    return Json::array({to_string(c.real()), to_string(c.imag()) + "*i"});
}

GaussianRational coefficient_from_json(const Json& j) {
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational(Rational(integer_from_json(j)));
    if (j.is_array() && j.size() == 2 && j[0].is_string() && j[1].is_string()) {
        GaussianRational re = GaussianRational::parse(j[0].get<std::string>());
        std::string im_text = j[1].get<std::string>();
        if (im_text.empty() || im_text.back() != 'i') im_text += "*i";
        GaussianRational im = GaussianRational::parse(im_text);
        if (re.imag() != 0 || im.real() != 0) parse_fail("coefficient pair " + j.dump() + " mixes parts");
        return {re.real(), im.imag()};
    }
    parse_fail("malformed coefficient " + j.dump());
}

Json polynomial_to_json(const Polynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.lower_coefficients()) coeffs.push_back(coefficient_to_json(c));
    return Json{{"coefficients", coeffs}};
}

PolyTuple parse_poly_tuple(const std::string& text) {
    const Json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("polynomials") || !doc["polynomials"].is_array())
        parse_fail("tuple document needs a \"polynomials\" array");
    check_schema_version(doc);
    std::vector<Polynomial> polys;
    for (const auto& p : doc["polynomials"]) {
        if (!p.is_object() || !p.contains("coefficients") || !p["coefficients"].is_array())
            parse_fail("each polynomial needs a \"coefficients\" array");
        std::vector<GaussianRational> lower;
        for (const auto& c : p["coefficients"]) lower.push_back(coefficient_from_json(c));
        polys.push_back(Polynomial::monic(std::move(lower)));
    }
    return PolyTuple(std::move(polys));
}

Json poly_tuple_to_json(const PolyTuple& t) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    Json polys = Json::array();
    for (const auto& p : t.polys()) polys.push_back(polynomial_to_json(p));
    doc["polynomials"] = polys;
    return doc;
}

}  // namespace torickit
