#include "drg/cli.hpp"

#include "drg/families.hpp"
#include "drg/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace drg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json ints_json(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

ordered_json check_json(const CheckVerdict& c) {
    ordered_json j;
    j["name"] = c.name;
    j["status"] = status_str(c.status);
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["witness"] = c.witness;
    return j;
}

ordered_json array_json(const IntersectionArray& arr) {
    return ordered_json{{"b", ints_json(arr.b)}, {"c", ints_json(arr.c)}};
}

ordered_json geo_json(const GeometricArray& geo) {
    return ordered_json{
        {"phi", ints_json(geo.phi)}, {"tau", ints_json(geo.tau)}, {"beta", int_str(geo.beta)}};
}

ordered_json spectrum_json(const SpectrumData& sp) {
    ordered_json a = ordered_json::array();
    for (size_t i = 0; i < sp.theta.size(); ++i)
        a.push_back(ordered_json{{"theta", sp.theta[i].str()},
                                 {"multiplicity", sp.mult[i].str()}});
    return a;
}

std::string overall_str(const FeasibilityReport& rep) {
    if (!rep.overall_pass()) return "fail";
    if (rep.has_indeterminate()) return "indeterminate";
    return "pass";
}

int report_exit(const FeasibilityReport& rep) {
    if (!rep.overall_pass()) return 1;
    if (rep.has_indeterminate()) return 3;
    return 0;
}

ordered_json report_body(const FeasibilityReport& rep) {
    ordered_json j;
    j["input"] = ordered_json{{"kind", rep.input_kind}, {"text", rep.input}};
    ordered_json d = ordered_json::object();
    if (rep.geo) d["geometric"] = geo_json(*rep.geo);
    if (rep.cp)
        d["classical"] = ordered_json{{"D", rep.cp->D},
                                      {"b", rat_str(rep.cp->b)},
                                      {"alpha", rat_str(rep.cp->alpha)},
                                      {"beta", rat_str(rep.cp->beta)}};
    if (rep.arr) {
        d["array"] = array_json(*rep.arr);
        if (auto counts = derive_counts(*rep.arr); counts.ok()) d["n"] = int_str(counts->n);
        if (rep.arr->D >= 2) {
            if (auto b = b_parameter(*rep.arr); b.ok()) d["b-parameter"] = b->str();
        }
    }
    j["derived"] = d;
    j["spectrum"] = rep.spectrum ? spectrum_json(*rep.spectrum) : ordered_json::array();
    ordered_json cs = ordered_json::array();
    for (const auto& c : rep.checks) cs.push_back(check_json(c));
    j["checks"] = cs;
    j["branch"] = rep.branch;
    j["overall"] = overall_str(rep);
    return j;
}

std::optional<long> to_long(const std::string& s) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<std::vector<Int>> parse_int_csv(const std::string& s) {
    std::vector<Int> out;
    if (s.empty()) return out;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start);
        auto v = parse_int(tok);
        if (!v) return std::nullopt;
        out.push_back(*v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

// family constructions reachable from the command line; throws on bad params
std::pair<Graph, std::optional<LineCover>> build_from_params(
    const std::string& family, const std::vector<std::string>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            throw std::invalid_argument(family + " takes " + std::to_string(count) +
                                        " parameters, got " + std::to_string(params.size()));
    };
    auto num = [&](size_t i) {
        auto v = to_long(params[i]);
        if (!v) throw std::invalid_argument("parameter '" + params[i] + "' is not an integer");
        if (*v < 0 || *v > 1000000) throw std::invalid_argument("parameter out of range");
        return static_cast<int>(*v);
    };
    if (family == "johnson") {
        need(2);
        FamilyGraph f = build_johnson(num(0), num(1));
        return {std::move(f.graph), std::move(f.cover)};
    }
    if (family == "grassmann") {
        need(3);
        FamilyGraph f = build_grassmann(num(0), num(1), num(2));
        return {std::move(f.graph), std::move(f.cover)};
    }
    if (family == "hamming") {
        need(2);
        FamilyGraph f = build_hamming(num(0), num(1));
        return {std::move(f.graph), std::move(f.cover)};
    }
    if (family == "bilinear") {
        need(3);
        FamilyGraph f = build_bilinear(num(0), num(1), num(2));
        return {std::move(f.graph), std::move(f.cover)};
    }
    if (family == "grid") {
        need(2);
        return {build_grid(num(0), num(1)), std::nullopt};
    }
    if (family == "clique-extension") {
        if (params.size() < 2)
            throw std::invalid_argument("clique-extension takes s and a base family");
        int s = num(0);
        std::vector<std::string> rest(params.begin() + 2, params.end());
        auto base = build_from_params(params[1], rest);
        return {clique_extension(base.first, s), std::nullopt};
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

int cmd_build(const std::string& family, const std::vector<std::string>& params,
              const std::string& out_dir, std::ostream& out, std::ostream& err) {
    Graph g;
    std::optional<LineCover> cover;
    try {
        auto built = build_from_params(family, params);
        g = std::move(built.first);
        cover = std::move(built.second);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    DistanceData dd = all_distances(g);
    out << "n=" << g.n << " k=" << (g.n ? g.degree(0) : 0) << " D=" << dd.diameter << "\n";
    std::string name = family;
    for (const auto& p : params) name += "-" + p;
    std::string gpath = out_dir + "/" + name + ".graph";
    std::ofstream gs(gpath);
    if (!gs) {
        err << "cannot write " << gpath << "\n";
        return 2;
    }
    write_graph(gs, g);
    out << "wrote " << gpath << "\n";
    if (cover) {
        std::string cpath = out_dir + "/" + name + ".cover";
        std::ofstream cs(cpath);
        if (!cs) {
            err << "cannot write " << cpath << "\n";
            return 2;
        }
        write_cover(cs, *cover);
        out << "wrote " << cpath << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& cover_path, long sigma_cap,
               bool exhaustive, std::ostream& out, std::ostream& err) {
    std::string error;
    std::ifstream gs(graph_path);
    if (!gs) {
        err << "cannot open " << graph_path << "\n";
        return 2;
    }
    auto g = read_graph(gs, &error);
    if (!g) {
        err << graph_path << ": " << error << "\n";
        return 2;
    }
    std::ifstream cs(cover_path);
    if (!cs) {
        err << "cannot open " << cover_path << "\n";
        return 2;
    }
    auto cover = read_cover(cs, g->n, &error);
    if (!cover) {
        err << cover_path << ": " << error << "\n";
        return 2;
    }
    FeasibilityReport rep = verify_graph_full(*g, *cover, sigma_cap, exhaustive);
    out << report_body(rep).dump(2) << "\n";
    return report_exit(rep);
}

int cmd_spectrum(const std::string& text, std::ostream& out, std::ostream& err) {
    auto arr = parse_intersection_array(text);
    if (!arr) {
        err << "cannot parse intersection array, expected {b0,...;c1,...}\n";
        return 2;
    }
    if (auto f = validate(*arr)) {
        err << f->str() << "\n";
        return 1;
    }
    auto sp = eigenvalues(*arr);
    if (!sp.ok()) {
        err << sp.failure().str() << "\n";
        return 1;
    }
    ordered_json j;
    j["array"] = array_json(*arr);
    j["n"] = int_str(sp->n);
    j["charpoly"] = poly_str(sp->charpoly);
    j["source"] = sp->source;
    j["order"] = sp->order;
    j["spectrum"] = spectrum_json(*sp);
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_geo2array(const std::string& text, const std::string& beta_text, std::ostream& out,
                  std::ostream& err) {
    auto beta = parse_int(beta_text);
    if (!beta) {
        err << "beta must be an integer\n";
        return 2;
    }
    auto geo = parse_geometric_array(text, *beta);
    if (!geo) {
        err << "cannot parse geometric array, expected {phi0,...;tau1,...}\n";
        return 2;
    }
    if (auto f = validate(*geo)) {
        err << f->str() << "\n";
        return 1;
    }
    auto arr = geometric_to_array(*geo);
    if (!arr.ok()) {
        err << arr.failure().str() << "\n";
        return 1;
    }
    ordered_json j;
    j["geometric"] = geo_json(*geo);
    j["array"] = array_json(*arr);
    if (auto counts = derive_counts(*arr); counts.ok()) j["n"] = int_str(counts->n);
    j["k"] = int_str(arr->k());
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_array2geo(const std::string& text, const std::string& r_text, std::ostream& out,
                  std::ostream& err) {
    auto arr = parse_intersection_array(text);
    if (!arr) {
        err << "cannot parse intersection array, expected {b0,...;c1,...}\n";
        return 2;
    }
    if (auto f = validate(*arr)) {
        err << f->str() << "\n";
        return 1;
    }
    Int r;
    if (!r_text.empty()) {
        auto v = parse_int(r_text);
        if (!v) {
            err << "r must be an integer\n";
            return 2;
        }
        r = *v;
    } else {
        auto sp = eigenvalues(*arr);
        if (!sp.ok()) {
            err << sp.failure().str() << "\n";
            return 1;
        }
        const AlgReal& tmin = sp->theta.back();
        if (!tmin.exact || !is_integer(tmin.value) || tmin.value >= 0) {
            err << "least eigenvalue " << tmin.str() << " is not a negative integer\n";
            return 1;
        }
        r = to_integer(Rat(-tmin.value));
    }
    auto geo = array_to_geometric(*arr, r);
    if (!geo.ok()) {
        err << geo.failure().str() << "\n";
        return 1;
    }
    ordered_json j;
    j["array"] = array_json(*arr);
    j["r"] = int_str(r);
    j["geometric"] = geo_json(*geo);
    out << j.dump(2) << "\n";
    return 0;
}

int cmd_filter(const std::string& geo_text, const std::string& beta_text,
               const std::string& array_text, const std::string& classical_text,
               std::ostream& out, std::ostream& err) {
    int given = (!geo_text.empty()) + (!array_text.empty()) + (!classical_text.empty());
    if (given != 1) {
        err << "give exactly one of --geo (with --beta), --array, --classical\n";
        return 2;
    }
    FeasibilityReport rep;
    if (!geo_text.empty()) {
        auto beta = parse_int(beta_text);
        if (!beta) {
            err << "--geo needs an integer --beta\n";
            return 2;
        }
        auto geo = parse_geometric_array(geo_text, *beta);
        if (!geo) {
            err << "cannot parse geometric array\n";
            return 2;
        }
        rep = run_battery(*geo);
    } else if (!array_text.empty()) {
        auto arr = parse_intersection_array(array_text);
        if (!arr) {
            err << "cannot parse intersection array\n";
            return 2;
        }
        rep = run_battery(*arr);
    } else {
        auto parts = parse_int_csv(classical_text);
        ClassicalParameterSet cp;
        bool ok = false;
        if (parts && parts->size() == 4) {
            cp.D = static_cast<int>((*parts)[0].get_si());
            cp.b = Rat((*parts)[1]);
            cp.alpha = Rat((*parts)[2]);
            cp.beta = Rat((*parts)[3]);
            ok = true;
        } else {
            // rationals allowed: D,b,alpha,beta with slashes
            std::vector<Rat> vals;
            size_t start = 0;
            bool bad = false;
            const std::string& s = classical_text;
            for (int i = 0; i < 4 && !bad; ++i) {
                size_t comma = s.find(',', start);
                if ((i < 3) != (comma != std::string::npos)) bad = true;
                std::string tok = s.substr(start, comma == std::string::npos
                                                      ? std::string::npos
                                                      : comma - start);
                auto v = parse_rat(tok);
                if (!v) bad = true;
                else vals.push_back(*v);
                start = comma + 1;
            }
            if (!bad && is_integer(vals[0])) {
                cp.D = static_cast<int>(to_integer(vals[0]).get_si());
                cp.b = vals[1];
                cp.alpha = vals[2];
                cp.beta = vals[3];
                ok = true;
            }
        }
        if (!ok) {
            err << "cannot parse classical parameters, expected D,b,alpha,beta\n";
            return 2;
        }
        rep = run_battery(cp);
    }
    out << report_body(rep).dump(2) << "\n";
    return report_exit(rep);
}

int cmd_classify(const std::string& geo_text, const std::string& beta_text, std::ostream& out,
                 std::ostream& err) {
    auto beta = parse_int(beta_text);
    if (!beta) {
        err << "--beta must be an integer\n";
        return 2;
    }
    auto geo = parse_geometric_array(geo_text, *beta);
    if (!geo) {
        err << "cannot parse geometric array\n";
        return 2;
    }
    if (auto f = validate(*geo)) {
        err << f->str() << "\n";
        return 1;
    }
    Classification cl = classify_main2(*geo);
    ordered_json j;
    j["input"] = geo->str();
    j["branch"] = cl.branch;
    ordered_json cs = ordered_json::array();
    for (const auto& c : cl.checks) cs.push_back(check_json(c));
    j["checks"] = cs;
    out << j.dump(2) << "\n";
    if (cl.branch == "none") return 1;
    if (cl.branch == "not-applicable") return 3;
    return 0;
}

struct EnumerateArgs {
    long d_min = 3, d_max = 3;
    std::string taud_min = "2", taud_max = "2";
    std::string beta_min = "1", beta_max = "1";
    std::string phi_prefix, tau_prefix;
    int workers = 1;
    std::string out_path;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream& err) {
    EnumerationSpec spec;
    spec.d_min = static_cast<int>(a.d_min);
    spec.d_max = static_cast<int>(a.d_max);
    auto fill = [&](const std::string& text, Int& slot) {
        auto v = parse_int(text);
        if (!v) return false;
        slot = *v;
        return true;
    };
    if (!fill(a.taud_min, spec.taud_min) || !fill(a.taud_max, spec.taud_max) ||
        !fill(a.beta_min, spec.beta_min) || !fill(a.beta_max, spec.beta_max)) {
        err << "range bounds must be integers\n";
        return 2;
    }
    auto pp = parse_int_csv(a.phi_prefix);
    auto tp = parse_int_csv(a.tau_prefix);
    if (!pp || !tp) {
        err << "prefixes must be comma-separated integers\n";
        return 2;
    }
    spec.phi_prefix = *pp;
    spec.tau_prefix = *tp;
    if (a.workers < 1) {
        err << "--workers must be at least 1\n";
        return 2;
    }
    if (auto bad = validate(spec)) {
        err << *bad << "\n";
        return 2;
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) {
            err << "cannot write " << a.out_path << "\n";
            return 2;
        }
        sink = &file;
    }
    for (const auto& rec : enumerate_candidates(spec, a.workers))
        *sink << record_json(rec.report) << "\n";
    return 0;
}

}  // namespace

std::string report_json(const FeasibilityReport& rep, int indent) {
    return report_body(rep).dump(indent);
}

std::string record_json(const FeasibilityReport& rep) { return report_body(rep).dump(); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"parameter calculus and verification for geometric distance-regular graphs",
                 "drgtool"};
    app.require_subcommand(0, 1);

    auto* build = app.add_subcommand("build", "construct a named family graph and line cover");
    std::string build_family;
    std::vector<std::string> build_params;
    std::string build_dir = ".";
    build->add_option("family", build_family,
                      "johnson | grassmann | hamming | bilinear | grid | clique-extension")
        ->required();
    build->add_option("params", build_params, "family parameters");
    build->add_option("--out-dir", build_dir, "directory for the output files");

    auto* verify = app.add_subcommand("verify", "run every structural check on a graph and cover");
    std::string verify_graph, verify_cover;
    long sigma_cap = 50;
    bool exhaustive = false;
    verify->add_option("graph", verify_graph, "graph file")->required();
    verify->add_option("cover", verify_cover, "line cover file")->required();
    verify->add_option("--sigma-cap", sigma_cap, "distance-2 pairs to expand (default 50)");
    verify->add_flag("--exhaustive", exhaustive, "expand every distance-2 pair");

    auto* spectrum = app.add_subcommand("spectrum", "exact eigenvalues and multiplicities");
    std::string spectrum_text;
    spectrum->add_option("array", spectrum_text, "intersection array {b0,...;c1,...}")->required();

    auto* g2a = app.add_subcommand("geo2array", "derive the intersection array");
    std::string g2a_text, g2a_beta;
    g2a->add_option("geometric", g2a_text, "geometric array {phi0,...;tau1,...}")->required();
    g2a->add_option("beta", g2a_beta, "line size minus one")->required();

    auto* a2g = app.add_subcommand("array2geo", "derive the geometric parameters");
    std::string a2g_text, a2g_r;
    a2g->add_option("array", a2g_text, "intersection array {b0,...;c1,...}")->required();
    a2g->add_option("r", a2g_r, "line count per vertex (default: -theta_min)");

    auto* filter = app.add_subcommand("filter", "run the feasibility battery");
    std::string f_geo, f_beta, f_array, f_classical;
    filter->add_option("--geo", f_geo, "geometric array {phi0,...;tau1,...}");
    filter->add_option("--beta", f_beta, "line size minus one, with --geo");
    filter->add_option("--array", f_array, "intersection array {b0,...;c1,...}");
    filter->add_option("--classical", f_classical, "classical parameters D,b,alpha,beta");

    auto* classify = app.add_subcommand("classify", "assign the classification branch");
    std::string c_geo, c_beta;
    classify->add_option("--geo", c_geo, "geometric array {phi0,...;tau1,...}")->required();
    classify->add_option("--beta", c_beta, "line size minus one")->required();

    auto* enumerate = app.add_subcommand("enumerate", "emit every surviving candidate as JSONL");
    EnumerateArgs ea;
    enumerate->add_option("--d-min", ea.d_min, "smallest diameter (default 3)");
    enumerate->add_option("--d-max", ea.d_max, "largest diameter (default 3)");
    enumerate->add_option("--taud-min", ea.taud_min, "smallest tau_D (default 2)");
    enumerate->add_option("--taud-max", ea.taud_max, "largest tau_D (default 2)");
    enumerate->add_option("--beta-min", ea.beta_min, "smallest beta (default 1)");
    enumerate->add_option("--beta-max", ea.beta_max, "largest beta (default 1)");
    enumerate->add_option("--phi-prefix", ea.phi_prefix, "pin leading phi values, e.g. 1,2");
    enumerate->add_option("--tau-prefix", ea.tau_prefix, "pin leading tau values, e.g. 1,3");
    enumerate->add_option("--workers", ea.workers, "worker threads (default 1)");
    enumerate->add_option("--out", ea.out_path, "output file (default stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    if (build->parsed()) return cmd_build(build_family, build_params, build_dir, out, err);
    if (verify->parsed()) return cmd_verify(verify_graph, verify_cover, sigma_cap, exhaustive, out, err);
    if (spectrum->parsed()) return cmd_spectrum(spectrum_text, out, err);
    if (g2a->parsed()) return cmd_geo2array(g2a_text, g2a_beta, out, err);
    if (a2g->parsed()) return cmd_array2geo(a2g_text, a2g_r, out, err);
    if (filter->parsed()) return cmd_filter(f_geo, f_beta, f_array, f_classical, out, err);
    if (classify->parsed()) return cmd_classify(c_geo, c_beta, out, err);
    if (enumerate->parsed()) return cmd_enumerate(ea, out, err);

    err << app.help();
    return 2;
}

}  // namespace drg
