#include "gkz/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace gkz::cli {

using lattice::Int;
using lattice::IntVec;
using lattice::parse_rat;
using lattice::Rat;
using lattice::rat_to_string;
using lattice::RatVec;

std::string version() { return "gkz 0.1.0"; }

namespace {

constexpr const char* kCommands[] = {"fan",   "chamber",      "k0",
                                     "collection", "orlov",  "curves-count",
                                     "curves-abyss"};

json rat_vec_json(const RatVec& v) {
    json arr = json::array();
    for (const Rat& q : v) arr.push_back(rat_to_string(q));
    return arr;
}

json int_vec_json(const IntVec& v) {
    json arr = json::array();
    for (const Int& x : v) arr.push_back(x.get_si());
    return arr;
}

json int_json(const Int& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

RatVec parse_rat_array(const json& arr, const std::string& field) {
    if (!arr.is_array()) throw SchemaError(field, "expected an array of rationals");
    RatVec out;
    for (const auto& el : arr) {
        if (el.is_string()) out.push_back(parse_rat(el.get<std::string>()));
        else if (el.is_number_integer()) out.push_back(Rat(el.get<long>()));
        else throw SchemaError(field, "entries must be integers or \"p/q\" strings");
    }
    return out;
}

ToricInput parse_toric(const json& t) {
    if (!t.contains("rank") || !t["rank"].is_number_integer())
        throw SchemaError("toric.rank", "expected an integer");
    int rank = t["rank"].get<int>();
    if (rank < 0) throw SchemaError("toric.rank", "must be nonnegative");
    if (!t.contains("weights") || !t["weights"].is_array())
        throw SchemaError("toric.weights", "expected an array of integer columns");
    std::vector<IntVec> cols;
    for (const auto& col : t["weights"]) {
        if (!col.is_array() || col.size() != std::size_t(rank))
            throw SchemaError("toric.weights", "each column must have `rank` integers");
        IntVec c;
        for (const auto& x : col) {
            if (!x.is_number_integer())
                throw SchemaError("toric.weights", "entries must be integers");
            c.emplace_back(x.get<long>());
        }
        cols.push_back(std::move(c));
    }
    if (!t.contains("character"))
        throw SchemaError("toric.character", "missing");
    RatVec chi = parse_rat_array(t["character"], "toric.character");
    if (chi.size() != std::size_t(rank))
        throw SchemaError("toric.character", "length must equal rank");
    ToricInput in;
    in.problem.weights = lattice::IntegerMatrix::from_columns(cols, std::size_t(rank));
    in.character = std::move(chi);
    if (t.contains("twist_d")) {
        if (!t["twist_d"].is_number_integer())
            throw SchemaError("toric.twist_d", "expected an integer");
        in.twist_d = Int(t["twist_d"].get<long>());
    }
    return in;
}

json toric_echo(const ToricInput& in) {
    json t;
    t["rank"] = in.problem.rank();
    json cols = json::array();
    for (const auto& c : in.problem.weights.columns()) cols.push_back(int_vec_json(c));
    t["weights"] = std::move(cols);
    t["character"] = rat_vec_json(in.character);
    t["twist_d"] = int_json(in.twist_d);
    return json{{"toric", t}};
}

OrlovInput parse_orlov(const json& o) {
    if (!o.contains("n") || !o["n"].is_number_integer())
        throw SchemaError("orlov.n", "expected an integer");
    OrlovInput in;
    in.spec.n = o["n"].get<int>();
    if (in.spec.n < 1) throw SchemaError("orlov.n", "must be positive");
    if (!o.contains("degrees") || !o["degrees"].is_array())
        throw SchemaError("orlov.degrees", "expected an array of integers");
    for (const auto& d : o["degrees"]) {
        if (!d.is_number_integer() || d.get<long>() < 1)
            throw SchemaError("orlov.degrees", "entries must be positive integers");
        in.spec.degrees.push_back(d.get<int>());
    }
    return in;
}

json orlov_echo(const OrlovInput& in) {
    return json{{"orlov", {{"n", in.spec.n}, {"degrees", in.spec.degrees}}}};
}

CurvesPnInput parse_curves_pn(const json& c) {
    CurvesPnInput in;
    if (!c.contains("weights")) throw SchemaError("curves_pn.weights", "missing");
    in.weights = parse_rat_array(c["weights"], "curves_pn.weights");
    if (c.contains("group")) {
        std::string g = c["group"].get<std::string>();
        if (g == "SL2") in.group = curves::Group::SL2;
        else if (g == "PGL2") in.group = curves::Group::PGL2;
        else throw SchemaError("curves_pn.group", "must be SL2 or PGL2");
    }
    return in;
}

json curves_pn_echo(const CurvesPnInput& in) {
    json c;
    c["weights"] = rat_vec_json(in.weights);
    c["group"] = in.group == curves::Group::SL2 ? "SL2" : "PGL2";
    return json{{"curves_pn", c}};
}

CurvesFmInput parse_curves_fm(const json& c) {
    if (!c.contains("j") || !c["j"].is_number_integer())
        throw SchemaError("curves_fm.j", "expected an integer blow-up stage");
    if (!c.contains("weights")) throw SchemaError("curves_fm.weights", "missing");
    RatVec d = parse_rat_array(c["weights"], "curves_fm.weights");
    int n = int(d.size());
    std::map<curves::Subset, Rat> a;
    if (c.contains("a")) {
        if (!c["a"].is_array())
            throw SchemaError("curves_fm.a", "expected a list of {subset, value} pairs");
        for (const auto& entry : c["a"]) {
            if (!entry.contains("subset") || !entry["subset"].is_array())
                throw SchemaError("curves_fm.a.subset", "expected a sorted integer array");
            curves::Subset s;
            for (const auto& i : entry["subset"]) {
                if (!i.is_number_integer())
                    throw SchemaError("curves_fm.a.subset", "marks must be integers");
                s.push_back(i.get<int>());
            }
            if (!entry.contains("value"))
                throw SchemaError("curves_fm.a.value", "missing");
            Rat val = entry["value"].is_string()
                          ? parse_rat(entry["value"].get<std::string>())
                          : Rat(entry["value"].get<long>());
            if (!a.emplace(std::move(s), val).second)
                throw SchemaError("curves_fm.a.subset", "duplicate subset");
        }
    }
    CurvesFmInput in;
    in.lin = curves::FmLinearization::make(n, c["j"].get<int>(), std::move(d), std::move(a));
    if (c.contains("divisor_bound")) in.lin.divisor_bound = c["divisor_bound"].get<int>();
    if (c.contains("mu_bound")) in.lin.mu_bound = c["mu_bound"].get<int>();
    return in;
}

json curves_fm_echo(const CurvesFmInput& in) {
    json c;
    c["j"] = in.lin.stage;
    c["weights"] = rat_vec_json(in.lin.weights);
    json a = json::array();
    for (const auto& [s, val] : in.lin.divisor_coeffs)
        a.push_back({{"subset", s}, {"value", rat_to_string(val)}});
    c["a"] = std::move(a);
    c["divisor_bound"] = in.lin.divisor_bound;
    c["mu_bound"] = in.lin.mu_bound;
    return json{{"curves_fm", c}};
}

long param_long(const std::vector<std::string>& params, std::size_t i,
                const std::string& preset) {
    if (i >= params.size())
        throw SchemaError("preset.parameters", preset + ": missing parameter");
    try {
        return std::stol(params[i]);
    } catch (const std::exception&) {
        throw SchemaError("preset.parameters", preset + ": expected an integer");
    }
}

ToricInput toric_from_columns(std::vector<IntVec> cols, std::size_t rank, RatVec chi) {
    ToricInput in;
    in.problem.weights = lattice::IntegerMatrix::from_columns(cols, rank);
    in.character = std::move(chi);
    return in;
}

}  // namespace

ProblemFile resolve_preset(const std::string& name,
                           const std::vector<std::string>& parameters) {
    ProblemFile pf;
    if (name == "projective-space") {
        long n = param_long(parameters, 0, name);
        if (n < 1) throw SchemaError("preset.parameters", "dimension must be positive");
        std::vector<IntVec> cols(std::size_t(n) + 1, IntVec{Int(1)});
        ToricInput in = toric_from_columns(cols, 1, RatVec{Rat(1)});
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (name == "weighted-projective") {
        if (parameters.size() < 2)
            throw SchemaError("preset.parameters", "need at least two weights");
        std::vector<IntVec> cols;
        for (std::size_t i = 0; i < parameters.size(); ++i)
            cols.push_back(IntVec{Int(param_long(parameters, i, name))});
        ToricInput in = toric_from_columns(cols, 1, RatVec{Rat(1)});
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (name == "hirzebruch") {
        long a = param_long(parameters, 0, name);
        std::vector<IntVec> cols = {{Int(1), Int(0)},
                                    {Int(1), Int(0)},
                                    {Int(-a), Int(1)},
                                    {Int(0), Int(1)}};
        ToricInput in = toric_from_columns(cols, 2, RatVec{Rat(1), Rat(1)});
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (name == "blowup-P2") {
        std::vector<IntVec> cols = {{Int(1), Int(0)},
                                    {Int(1), Int(0)},
                                    {Int(0), Int(1)},
                                    {Int(1), Int(1)}};
        ToricInput in = toric_from_columns(cols, 2, RatVec{Rat(2), Rat(1)});
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (name == "product-P1-P1") {
        std::vector<IntVec> cols = {{Int(1), Int(0)},
                                    {Int(1), Int(0)},
                                    {Int(0), Int(1)},
                                    {Int(0), Int(1)}};
        ToricInput in = toric_from_columns(cols, 2, RatVec{Rat(1), Rat(1)});
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (name == "orlov") {
        OrlovInput in;
        in.spec.n = int(param_long(parameters, 0, name));
        for (std::size_t i = 1; i < parameters.size(); ++i)
            in.spec.degrees.push_back(int(param_long(parameters, i, name)));
        pf.echo = orlov_echo(in);
        pf.payload = std::move(in);
    } else if (name == "pn-curves") {
        CurvesPnInput in;
        for (const std::string& p : parameters) in.weights.push_back(parse_rat(p));
        in.group = curves::Group::PGL2;
        pf.echo = curves_pn_echo(in);
        pf.payload = std::move(in);
    } else if (name == "hassett") {
        long n = param_long(parameters, 0, name);
        long j = param_long(parameters, 1, name);
        CurvesFmInput in;
        in.lin = curves::hassett_preset(int(n), int(j));
        pf.echo = curves_fm_echo(in);
        pf.payload = std::move(in);
    } else {
        throw SchemaError("preset.name", "unknown preset '" + name + "'");
    }
    return pf;
}

ProblemFile parse_input(const json& doc) {
    if (!doc.is_object()) throw SchemaError("$", "expected a JSON object");
    if (doc.contains("preset")) {
        const json& p = doc["preset"];
        if (!p.contains("name") || !p["name"].is_string())
            throw SchemaError("preset.name", "expected a string");
        std::vector<std::string> params;
        if (p.contains("parameters")) {
            for (const auto& el : p["parameters"]) {
                if (el.is_string()) params.push_back(el.get<std::string>());
                else if (el.is_number_integer())
                    params.push_back(std::to_string(el.get<long>()));
                else throw SchemaError("preset.parameters",
                                       "entries must be integers or strings");
            }
        }
        return resolve_preset(p["name"].get<std::string>(), params);
    }
    ProblemFile pf;
    if (doc.contains("toric")) {
        ToricInput in = parse_toric(doc["toric"]);
        pf.echo = toric_echo(in);
        pf.payload = std::move(in);
    } else if (doc.contains("orlov")) {
        OrlovInput in = parse_orlov(doc["orlov"]);
        pf.echo = orlov_echo(in);
        pf.payload = std::move(in);
    } else if (doc.contains("curves_pn")) {
        CurvesPnInput in = parse_curves_pn(doc["curves_pn"]);
        pf.echo = curves_pn_echo(in);
        pf.payload = std::move(in);
    } else if (doc.contains("curves_fm")) {
        CurvesFmInput in = parse_curves_fm(doc["curves_fm"]);
        pf.echo = curves_fm_echo(in);
        pf.payload = std::move(in);
    } else {
        throw SchemaError("$", "expected one of: toric, orlov, curves_pn, curves_fm, preset");
    }
    return pf;
}

ProblemFile parse_input_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw SchemaError("$", "invalid JSON");
    return parse_input(doc);
}

namespace {

json tree_json(const toric::SodTree& tree) {
    switch (tree.kind) {
        case toric::SodTree::Kind::UnitLeaf:
            return json{{"kind", "unit"}};
        case toric::SodTree::Kind::EmptyChamber:
            return json{{"kind", "empty"}};
        case toric::SodTree::Kind::Node:
            break;
    }
    json node;
    node["kind"] = "node";
    node["witness"] = rat_vec_json(tree.chamber_witness);
    json blocks = json::array();
    for (const auto& block : tree.blocks) {
        const toric::WallCrossing& wc = block.crossing.crossing;
        json b;
        b["lambda"] = int_vec_json(wc.lambda);
        b["mu"] = int_json(wc.mu);
        b["t_plus"] = int_json(wc.t_plus);
        b["t_minus"] = int_json(wc.t_minus);
        b["fixed_columns"] = wc.fixed;
        b["twist_lift"] = int_vec_json(wc.twist_lift);
        b["wall_point"] = rat_vec_json(block.crossing.wall_point);
        json twists = json::array();
        for (const Int& j : block.twists) twists.push_back(int_json(j));
        b["twists"] = std::move(twists);
        json children = json::array();
        for (const auto& child : block.children) children.push_back(tree_json(child));
        b["children"] = std::move(children);
        blocks.push_back(std::move(b));
    }
    node["blocks"] = std::move(blocks);
    return node;
}

json leaves_json(const std::vector<toric::ExceptionalObject>& objs) {
    json arr = json::array();
    for (const auto& obj : objs) {
        json steps = json::array();
        for (const auto& step : obj.chain)
            steps.push_back({{"lambda", int_vec_json(step.lambda)},
                             {"fixed_columns", step.fixed},
                             {"twist", int_json(step.twist)}});
        arr.push_back({{"chain", std::move(steps)},
                       {"character", int_vec_json(obj.character)}});
    }
    return arr;
}

const ToricInput& require_toric(const ProblemFile& pf, const std::string& command) {
    if (const auto* t = std::get_if<ToricInput>(&pf.payload)) return *t;
    throw SchemaError("$", "command '" + command + "' requires a toric input");
}

json run_fan(const ToricInput& in, const RunOptions& opts) {
    auto p = toric::validate(in.problem);
    json result;
    json hyperplanes = json::array();
    for (const auto& nrm : toric::candidate_wall_normals(p))
        hyperplanes.push_back(int_vec_json(nrm));
    result["hyperplanes"] = std::move(hyperplanes);

    auto path = toric::generic_path(p, in.character, opts.seed);
    json nodes = json::array();
    json edges = json::array();
    nodes.push_back({{"witness", rat_vec_json(in.character)}, {"empty", false}});
    RatVec previous = in.character;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const RatVec& wall = path[k].wall_point;
        // sample the open segment after this crossing: the midpoint to the
        // next wall point, or one step past the last one
        RatVec probe(previous.size());
        for (std::size_t i = 0; i < probe.size(); ++i) {
            if (k + 1 < path.size()) probe[i] = (wall[i] + path[k + 1].wall_point[i]) / 2;
            else probe[i] = wall[i] + (wall[i] - previous[i]);
        }
        bool outside = lattice::cone_member(p.columns(), probe) ==
                       lattice::ConeMembership::Outside;
        json node;
        node["witness"] = rat_vec_json(probe);
        node["empty"] = outside;
        nodes.push_back(std::move(node));
        edges.push_back({{"from", k},
                         {"to", k + 1},
                         {"lambda", int_vec_json(path[k].crossing.lambda)},
                         {"mu", int_json(path[k].crossing.mu)}});
        previous = wall;
        if (outside) break;  // everything beyond is the empty chamber
    }
    result["nodes"] = std::move(nodes);
    result["edges"] = std::move(edges);
    return result;
}

json run_chamber(const ToricInput& in) {
    auto p = toric::validate(in.problem);
    auto sig = toric::chamber_signature(p, in.character);
    json result;
    result["signature"] = sig;
    json cones = json::array();
    for (const auto& sc : toric::sigma_bases(p, in.character))
        cones.push_back({{"columns", sc.columns}, {"index", int_json(sc.index)}});
    result["sigma_cones"] = std::move(cones);
    result["k0"] = int_json(toric::k0_rank(p, in.character));
    return result;
}

json run_collection(const ToricInput& in, const RunOptions& opts) {
    auto p = toric::validate(in.problem);
    Int d = opts.twist_d != 0 ? opts.twist_d : in.twist_d;
    auto tree = toric::exceptional_collection(p, in.character, d, opts.seed);
    auto objs = toric::flatten(tree);
    json result;
    result["tree"] = tree_json(tree);
    result["leaves"] = leaves_json(objs);
    result["length"] = objs.size();
    result["k0_check"] = int_json(toric::k0_rank(p, in.character));
    result["twist_anchor"] = int_json(d);
    return result;
}

json run_orlov(const OrlovInput& in, const RunOptions& opts) {
    auto rep = orlov::orlov_report(in.spec, opts.twist_d);
    json result;
    result["a"] = int_json(rep.a);
    result["case"] = orlov::case_name(rep.which);
    result["engine_mu"] = int_json(rep.engine_mu);
    result["sigma_side_objects"] = rep.sigma_side_objects;
    result["lg_side_objects"] = rep.lg_side_objects;
    result["sigma_side"] = rep.sigma_side_desc;
    result["lg_side"] = rep.lg_side_desc;
    return result;
}

json run_curves_count(const CurvesPnInput& in) {
    auto pc = curves::collection_count_pn(in.weights);
    json result;
    result["sl2"] = json::array({int_json(pc.even), int_json(pc.odd)});
    try {
        result["pgl2"] = int_json(curves::pgl2_count(in.weights));
    } catch (const NotPGL2LinearizableError&) {
        if (in.group == curves::Group::PGL2) throw;
        result["pgl2"] = nullptr;
    }
    return result;
}

json run_curves_abyss(const CurvesFmInput& in, const RunOptions& opts) {
    auto cert = curves::find_abyss_path(in.lin, opts.seed);
    json result;
    json crossings = json::array();
    for (const auto& c : cert.crossings)
        crossings.push_back({{"subset", c.oriented},
                             {"weights", rat_vec_json(c.crossing_weights)},
                             {"mu", int_json(c.mu)}});
    result["crossings"] = std::move(crossings);
    result["terminal"] = rat_vec_json(cert.terminal_weights);
    result["empty_witness"] = cert.empty_witness;
    return result;
}

}  // namespace

json run(const ProblemFile& problem, const std::string& command, const RunOptions& opts) {
    json result;
    if (command == "fan") result = run_fan(require_toric(problem, command), opts);
    else if (command == "chamber") result = run_chamber(require_toric(problem, command));
    else if (command == "k0") {
        const auto& in = require_toric(problem, command);
        auto p = toric::validate(in.problem);
        result["k0"] = int_json(toric::k0_rank(p, in.character));
    } else if (command == "collection")
        result = run_collection(require_toric(problem, command), opts);
    else if (command == "orlov") {
        const auto* in = std::get_if<OrlovInput>(&problem.payload);
        if (!in) throw SchemaError("$", "command 'orlov' requires an orlov input");
        result = run_orlov(*in, opts);
    } else if (command == "curves-count") {
        const auto* in = std::get_if<CurvesPnInput>(&problem.payload);
        if (!in) throw SchemaError("$", "command 'curves-count' requires a curves_pn input");
        result = run_curves_count(*in);
    } else if (command == "curves-abyss") {
        const auto* in = std::get_if<CurvesFmInput>(&problem.payload);
        if (!in) throw SchemaError("$", "command 'curves-abyss' requires a curves_fm input");
        result = run_curves_abyss(*in, opts);
    } else {
        throw SchemaError("command", "unknown command '" + command + "'");
    }

    json report;
    report["command"] = command;
    report["input"] = problem.echo;
    report["result"] = std::move(result);
    report["provenance"] = {
        {"seed", opts.seed},
        {"perturbations", "prime-reciprocal tilts, schedule index = seed"},
        {"version", version()},
    };
    return report;
}

namespace {

void text_lines(const json& value, const std::string& prefix, std::ostream& out) {
    if (value.is_object()) {
        for (const auto& [key, sub] : value.items())
            text_lines(sub, prefix.empty() ? key : prefix + "." + key, out);
    } else if (value.is_array()) {
        bool scalar = true;
        for (const auto& el : value)
            if (el.is_object() || el.is_array()) scalar = false;
        if (scalar) {
            out << prefix << " =";
            for (const auto& el : value) out << " " << el.dump();
            out << "\n";
        } else {
            std::size_t i = 0;
            for (const auto& el : value) text_lines(el, prefix + "[" + std::to_string(i++) + "]", out);
        }
    } else {
        out << prefix << " = " << value.dump() << "\n";
    }
}

std::string emit_dot(const json& report) {
    if (report["command"] != "fan")
        throw UnsupportedFormatError("dot output is only available for the fan command");
    const json& result = report["result"];
    std::ostringstream out;
    out << "graph chambers {\n";
    for (std::size_t i = 0; i < result["nodes"].size(); ++i) {
        const json& node = result["nodes"][i];
        bool empty = node["empty"].get<bool>();
        out << "  c" << i << " [label=\"" << (empty ? "empty" : "chamber " + std::to_string(i))
            << "\"];\n";
    }
    for (const auto& edge : result["edges"]) {
        out << "  c" << edge["from"].get<std::size_t>() << " -- c"
            << edge["to"].get<std::size_t>() << " [label=\"mu=" << edge["mu"].dump()
            << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string emit(const json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "text") {
        std::ostringstream out;
        out << report["command"].get<std::string>() << " report (" << version() << ")\n";
        text_lines(report["result"], "", out);
        return out.str();
    }
    if (format == "dot") return emit_dot(report);
    throw UnsupportedFormatError("unknown format '" + format + "'");
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wall-crossing engine for variations of GIT on linear torus actions"};
    std::string command, input_path, format = "json";
    std::vector<std::string> preset;
    int seed = 0;
    long twist_d = 0;
    app.add_option("command", command, "one of: fan chamber k0 collection orlov curves-count curves-abyss")
        ->required();
    app.add_option("--input", input_path, "JSON problem file, or - for stdin");
    app.add_option("--preset", preset, "preset name followed by its parameters")
        ->expected(-1);
    app.add_option("--format", format, "json, text, or dot");
    app.add_option("--seed", seed, "deterministic perturbation schedule index");
    app.add_option("--twist-d", twist_d, "window anchor d");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 64;
    }

    bool known = false;
    for (const char* c : kCommands) known = known || command == c;
    if (!known) {
        err << "usage error: unknown command '" << command << "'\n";
        return 64;
    }
    if (input_path.empty() == preset.empty()) {
        err << "usage error: provide exactly one of --input or --preset\n";
        return 64;
    }

    try {
        ProblemFile pf;
        if (!preset.empty()) {
            std::vector<std::string> params(preset.begin() + 1, preset.end());
            pf = resolve_preset(preset.front(), params);
        } else {
            std::string text;
            if (input_path == "-") {
                std::ostringstream buf;
                buf << std::cin.rdbuf();
                text = buf.str();
            } else {
                std::ifstream file(input_path);
                if (!file) throw DomainError("cannot open input file '" + input_path + "'");
                std::ostringstream buf;
                buf << file.rdbuf();
                text = buf.str();
            }
            pf = parse_input_text(text);
        }
        RunOptions opts;
        opts.seed = seed;
        opts.twist_d = Int(twist_d);
        json report = run(pf, command, opts);
        out << emit(report, format);
        return 0;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gkz::cli
