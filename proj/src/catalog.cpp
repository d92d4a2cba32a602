#include "torickit/catalog.hpp"

#include "torickit/error.hpp"
#include "torickit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace torickit {

Fan cp_fan(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::DimensionMismatch, "CP^n needs n >= 1");
    std::vector<LatticeVector> rays;
    for (std::size_t k = 0; k < n; ++k) {
        IntVector e(n, Integer(0));
        e[k] = 1;
        rays.push_back(primitivize(e));
    }
    rays.push_back(primitivize(IntVector(n, Integer(-1))));
    std::vector<IndexSet> maximal;
    for (std::size_t skip = 0; skip <= n; ++skip) maximal.push_back(IndexSet::full(n + 1).without(skip));
    return Fan::from_maximal_cones(n, std::move(rays), maximal);
}

Fan hirzebruch_fan(long k) {
    std::vector<LatticeVector> rays{
        primitivize(make_int_vector({1, 0})),
        primitivize(make_int_vector({0, 1})),
        primitivize(make_int_vector({-1, k})),
        primitivize(make_int_vector({0, -1})),
    };
    return Fan::from_maximal_cones(2, std::move(rays), {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
}

Fan c2_fan() {
    return Fan::from_maximal_cones(2, {primitivize(make_int_vector({1, 0})), primitivize(make_int_vector({0, 1}))}, {});
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<CatalogEntry> out;
    for (const auto& path : files) {
        std::ifstream in(path);
        std::stringstream buf;
        buf << in.rdbuf();
        auto doc = parse_fan_document(buf.str());
        auto raw = nlohmann::json::parse(buf.str());
        out.push_back({doc.name.empty() ? path.stem().string() : doc.name, std::move(doc.fan),
                       raw.value("expected", nlohmann::json::object()).dump()});
    }
    return out;
}

}  // namespace torickit
