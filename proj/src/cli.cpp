#include "torickit/cli.hpp"

#include "torickit/cox.hpp"
#include "torickit/error.hpp"
#include "torickit/fan.hpp"
#include "torickit/holmap.hpp"
#include "torickit/io.hpp"
#include "torickit/lattice.hpp"
#include "torickit/stability.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace torickit::cli {

namespace {

struct Options {
    std::string output = "json";
    std::string fan_path;
    std::string tuple_path;
    std::string degrees;
    std::string free;
    std::string increment;
    std::string points;
    bool classify = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::size_t max_rays() {
    if (const char* env = std::getenv("TORICKIT_MAX_R")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, std::string("TORICKIT_MAX_R is not a number: ") + env);
        }
    }
    return kMaterializeLimit;
}

FanDocument load_fan(const std::string& path) {
    FanDocument doc = parse_fan_document(read_file(path));
    const std::size_t cap = max_rays();
    if (doc.fan.ray_count() > cap)
        throw Error(ErrorCode::RLimitExceeded, "fan has " + std::to_string(doc.fan.ray_count()) +
                                                   " rays; TORICKIT_MAX_R is " + std::to_string(cap));
    return doc;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

IntVector parse_integer_list(const std::string& text, const std::string& flag) {
    IntVector out;
    for (const auto& item : split(text, ',')) {
        Integer x;
        if (item.empty() || x.set_str(item, 10) != 0)
            throw Error(ErrorCode::ParseError, flag + ": malformed integer \"" + item + "\"");
        out.push_back(x);
    }
    return out;
}

std::map<std::size_t, Integer> parse_free_list(const std::string& text, std::size_t r) {
    std::map<std::size_t, Integer> out;
    for (const auto& item : split(text, ',')) {
        const auto eq = item.find('=');
        Integer index, value;
        if (eq == std::string::npos || index.set_str(item.substr(0, eq), 10) != 0 ||
            value.set_str(item.substr(eq + 1), 10) != 0)
            throw Error(ErrorCode::ParseError, "--free: expected i=d, got \"" + item + "\"");
        if (index < 1 || index > static_cast<long>(r))
            throw Error(ErrorCode::IndexOutOfRange, "--free: index " + index.get_str() + " outside 1.." + std::to_string(r));
        out[index.get_ui() - 1] = value;
    }
    return out;
}

Json violations_json(const ValidationReport& report) {
    Json out = Json::array();
    for (const auto& v : report.violations) {
        Json witness = Json::array();
        for (auto s : v.witness) witness.push_back(index_set_to_json(s));
        out.push_back(Json{{"axiom", to_string(v.axiom)}, {"witness", witness}});
    }
    return out;
}

Json collections_json(const std::vector<IndexSet>& sets) {
    Json out = Json::array();
    for (auto s : sets) out.push_back(index_set_to_json(s));
    return out;
}

Json cox_json(const CoxGroupReport& cox) {
    Json kernel = Json::array();
    for (const auto& v : cox.kernel_basis) kernel.push_back(int_vector_to_json(v));
    return Json{
        {"free_rank", cox.free_rank},
        {"finite_part", int_vector_to_json(cox.finite_part)},
        {"condition_span", cox.condition_span},
        {"condition_positive_degree", cox.condition_positive_degree},
        {"witness_degree", cox.witness_degree ? int_vector_to_json(cox.witness_degree->entries()) : Json(nullptr)},
        {"pi2_rank", cox.pi2_rank ? Json(*cox.pi2_rank) : Json(nullptr)},
        {"kernel_basis", kernel},
    };
}

void emit(const Json& doc, const Options& opt, std::ostream& out) {
    if (opt.output == "text") {
        for (const auto& [key, value] : doc.items())
            out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    } else {
        out << doc.dump(2) << '\n';
    }
}

// ------------------------------------------------------------------ commands

int cmd_analyze(const Options& opt, std::ostream& out) {
    const auto doc = load_fan(opt.fan_path);
    const Fan& f = doc.fan;
    Json report;
    report["name"] = doc.name;
    report["dimension"] = f.dimension();
    report["rays"] = f.ray_count();
    const auto validation = validate_fan(f);
    report["valid"] = validation.valid();
    report["violations"] = violations_json(validation);
    if (!validation.valid()) {
        emit(report, opt, out);
        return kInvalidFan;
    }
    report["smooth"] = is_smooth(f);
    report["complete"] = is_complete(f);
    const auto pc = primitive_collections(f);
    report["primitive_collections"] = collections_json(pc);
    report["r_min"] = pc.empty() ? Json(nullptr) : Json(r_min(f));
    report["cox"] = cox_json(cox_report(f));
    emit(report, opt, out);
    return kOk;
}

int cmd_stability(const Options& opt, std::ostream& out) {
    const auto doc = load_fan(opt.fan_path);
    const Fan& f = doc.fan;
    require_standing_conditions(f);
    if (!opt.degrees.empty() && !opt.free.empty())
        throw Error(ErrorCode::ParseError, "--degrees and --free are mutually exclusive");

    IntVector entries;
    std::string source;
    if (!opt.degrees.empty()) {
        entries = parse_integer_list(opt.degrees, "--degrees");
        source = "explicit";
    } else if (!opt.free.empty()) {
        entries = complete_degrees(f.generator_matrix(), parse_free_list(opt.free, f.ray_count()));
        source = "completed";
    } else {
        entries = cox_report(f).witness_degree->entries();
        source = "witness";
    }
    const DegreeVector d = degree_of(f, entries);
    const StabilityReport s = stability_report(f, d);

    Json report;
    report["name"] = doc.name;
    report["degrees"] = int_vector_to_json(d.entries());
    report["degree_source"] = source;
    report["primitive_collections"] = collections_json(primitive_collections(f));
    report["r_min"] = s.r_min;
    report["d_min"] = s.d_min;
    report["N_D"] = integer_to_json(d.total());
    report["stability_dim"] = s.stability_dim;
    report["kind"] = to_string(s.kind);
    report["connectivity"] = s.connectivity;
    report["vanishing_line"] = s.vanishing_line;
    report["oracle_dim"] = s.oracle_dim;
    report["statement"] = s.statement();
    emit(report, opt, out);
    return kOk;
}

int cmd_holcheck(const Options& opt, std::ostream& out) {
    const auto doc = load_fan(opt.fan_path);
    const PolyTuple t = parse_poly_tuple(read_file(opt.tuple_path));
    const auto m = check_membership(t, doc.fan);
    Json report;
    report["member"] = m.member;
    report["degrees"] = int_vector_to_json(t.degrees());
    if (m.witness)
        report["witness"] = Json{{"collection", index_set_to_json(*m.witness)},
                                 {"common_factor", polynomial_to_json(m.common_factor)}};
    else
        report["witness"] = nullptr;
    emit(report, opt, out);
    return kOk;
}

int cmd_stabilize(const Options& opt, std::ostream& out) {
    const auto doc = load_fan(opt.fan_path);
    const PolyTuple t = parse_poly_tuple(read_file(opt.tuple_path));
    const IntVector a = parse_integer_list(opt.increment, "--increment");
    std::optional<std::vector<GaussianRational>> points;
    if (!opt.points.empty()) {
        points.emplace();
        for (const auto& p : split(opt.points, ',')) points->push_back(GaussianRational::parse(p));
    }
    const bool before = is_member(t, doc.fan);
    const auto s = stabilize(t, doc.fan, a, points);
    Json pts = Json::array();
    for (const auto& p : s.points) pts.push_back(coefficient_to_json(p));
    Json report;
    report["input_degrees"] = int_vector_to_json(t.degrees());
    report["increment"] = int_vector_to_json(a);
    report["degrees"] = int_vector_to_json(s.tuple.degrees());
    report["points"] = pts;
    report["member_before"] = before;
    report["member"] = s.member;
    report["tuple"] = poly_tuple_to_json(s.tuple);
    emit(report, opt, out);
    return kOk;
}

int cmd_subfans(const Options& opt, std::ostream& out) {
    const auto doc = load_fan(opt.fan_path);
    const auto validation = validate_fan(doc.fan);
    if (!validation.valid()) {
        Json report{{"valid", false}, {"violations", violations_json(validation)}};
        emit(report, opt, out);
        return kInvalidFan;
    }
    const auto subfans = enumerate_subfans(doc.fan);
    Json list = Json::array();
    for (const auto& s : subfans) {
        const auto pc = primitive_collections(s);
        list.push_back(Json{
            {"maximal_cones", fan_to_json(s)["maximal_cones"]},
            {"valid", validate_fan(s).valid()},
            {"smooth", is_smooth(s)},
            {"complete", is_complete(s)},
            {"r_min", pc.empty() ? Json(nullptr) : Json(r_min(s))},
        });
    }
    Json report;
    report["name"] = doc.name;
    report["count"] = subfans.size();
    report["subfans"] = list;
    if (opt.classify) {
        // Greedy grouping: each subfan joins the first class whose
        // representative is isomorphic to it.
        std::vector<std::vector<std::size_t>> classes;
        for (std::size_t i = 0; i < subfans.size(); ++i) {
            bool placed = false;
            for (auto& cls : classes)
                if (fan_isomorphism(subfans[cls.front()], subfans[i])) {
                    cls.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) classes.push_back({i});
        }
        Json cls_json = Json::array();
        for (const auto& cls : classes) {
            Json members = Json::array();
            for (auto i : cls) members.push_back(i + 1);
            cls_json.push_back(members);
        }
        report["classes"] = cls_json;
        report["class_count"] = classes.size();
        report["collision"] = classes.size() != subfans.size();
    }
    emit(report, opt, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Toric fan analysis, holomorphic map membership and stability dimensions", "torickit"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* analyze = app.add_subcommand("analyze", "Validate a fan and report its invariants");
    analyze->add_option("fan", opt.fan_path, "Fan JSON file")->required();

    auto* stability = app.add_subcommand("stability", "Stability dimension of Hol*_D -> Omega^2_D");
    stability->add_option("fan", opt.fan_path, "Fan JSON file")->required();
    stability->add_option("--degrees", opt.degrees, "Full degree vector d1,...,dr");
    stability->add_option("--free", opt.free, "Pinned degrees i=d,... (1-based) to complete");

    auto* holcheck = app.add_subcommand("holcheck", "Decide membership of a polynomial tuple");
    holcheck->add_option("fan", opt.fan_path, "Fan JSON file")->required();
    holcheck->add_option("tuple", opt.tuple_path, "Polynomial tuple JSON file")->required();

    auto* stab = app.add_subcommand("stabilize", "Apply the stabilization map to a polynomial tuple");
    stab->add_option("fan", opt.fan_path, "Fan JSON file")->required();
    stab->add_option("tuple", opt.tuple_path, "Polynomial tuple JSON file")->required();
    stab->add_option("--increment", opt.increment, "Positive kernel vector a1,...,ar")->required();
    stab->add_option("--points", opt.points, "Distinct points x1,...,xr (e.g. 7/2,1+i)");

    auto* subfans = app.add_subcommand("subfans", "Enumerate proper subfans containing every ray");
    subfans->add_option("fan", opt.fan_path, "Fan JSON file")->required();
    subfans->add_flag("--classify", opt.classify, "Group subfans into GL(n,Z) classes");

    for (auto* sub : {analyze, stability, holcheck, stab, subfans})
        sub->add_option("--output", opt.output, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::vector<const char*> argv{"torickit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(opt, out);
        if (stability->parsed()) return cmd_stability(opt, out);
        if (holcheck->parsed()) return cmd_holcheck(opt, out);
        if (stab->parsed()) return cmd_stabilize(opt, out);
        return cmd_subfans(opt, out);
    } catch (const Error& e) {
        emit(Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, opt, out);
        err << "torickit: " << to_string(e.code()) << ": " << e.what() << '\n';
        if (e.code() == ErrorCode::ParseError) return kParseError;
        return e.code() == ErrorCode::InvalidFan ? kInvalidFan : kDomainError;
    }
}

}  // namespace torickit::cli
