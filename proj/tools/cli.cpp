#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "steiner/catalog.hpp"
#include "steiner/roundtrip.hpp"
#include "steiner/serialize.hpp"

namespace steiner::cli {

namespace {

struct Options {
    bool json = false;
    std::string file;
    int max_dim = -1;
    std::size_t max_cells = EnumerationCaps{}.max_cells;
    std::int64_t max_coeff = EnumerationCaps{}.max_coeff;
    std::string dot;
    std::string name;
    std::vector<int> params;
    std::string out;
    std::string form;
    int dim = 0;
    std::int64_t cap = 3;
};

Document load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::parse, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

Adc complex_of(const Document& doc)
{
    if (const auto* P = std::get_if<Presentation>(&doc))
        return lambda_presentation(*P);
    return std::get<Adc>(doc);
}

EnumerationCaps caps_of(const Options& o)
{
    return {o.max_cells, o.max_coeff};
}

std::string join(const std::vector<Name>& names, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? sep : "") + names[i];
    return s;
}

std::string dot_graph(const RelationGraph& g, const std::map<Name, int>& dims)
{
    std::ostringstream os;
    os << "digraph preorder {\n";
    for (const auto& n : g.nodes())
        os << "  \"" << n << "\" [label=\"" << n << ":" << dims.at(n) << "\"];\n";
    for (const auto& [from, to] : g.edges())
        os << "  \"" << from << "\" -> \"" << to << "\";\n";
    os << "}\n";
    return os.str();
}

int check(const Options& o, std::ostream& out)
{
    Document doc = load(o.file);
    if (const auto* P = std::get_if<Presentation>(&doc)) {
        Verdict v = classify(*P);
        if (o.json)
            out << to_json(v).dump(2) << "\n";
        else
            out << v.to_string();
        return v.strong_steiner ? ok : negative;
    }
    const Adc& c = std::get<Adc>(doc);
    auto unital = is_unital(c);
    auto loops = loop_free_report(c);
    const bool strong = unital.unital && loops.is_partial_order;
    if (o.json) {
        Json j = {{"unital", unital.unital}, {"loop_free", loops.is_partial_order}, {"strong_steiner", strong},
                  {"preorder", to_json(loops.graph)}};
        if (unital.witness)
            j["unitality_witness"] = *unital.witness;
        if (loops.cycle_witness)
            j["cycle"] = *loops.cycle_witness;
        out << j.dump(2) << "\n";
    } else {
        out << "unital: " << (unital.unital ? "yes" : "no") << "\n";
        if (unital.witness)
            out << "  fails at " << *unital.witness << "\n";
        out << "strongly loop-free: " << (loops.is_partial_order ? "yes" : "no") << "\n";
        if (loops.cycle_witness)
            out << "  cycle: " << join(*loops.cycle_witness, " <= ") << "\n";
        out << "strong Steiner: " << (strong ? "yes" : "no") << "\n";
    }
    return strong ? ok : negative;
}

int enumerate(const Options& o, std::ostream& out)
{
    Adc c = complex_of(load(o.file));
    const int max_dim = o.max_dim >= 0 ? o.max_dim : c.top_degree();
    auto e = enumerate_nu(c, max_dim, caps_of(o));
    Json counts = Json::array();
    for (int q = 0; q <= max_dim; ++q) {
        const std::size_t total = e.cells[static_cast<std::size_t>(q)].size();
        const std::size_t nontrivial = e.nontrivial_count(q);
        counts.push_back({{"dim", q}, {"cells", total}, {"nontrivial", q == 0 ? total : nontrivial}});
        if (o.json)
            continue;
        if (q == 0)
            out << "dim 0: " << total << "\n";
        else
            out << "dim " << q << " nontrivial: " << nontrivial << " (" << total << " cells)\n";
    }
    if (o.json)
        out << counts.dump(2) << "\n";
    return ok;
}

int lambda(const Options& o, std::ostream& out)
{
    Document doc = load(o.file);
    if (const auto* P = std::get_if<Presentation>(&doc)) {
        out << serialize(lambda_presentation(*P));
        return ok;
    }
    const Adc& c = std::get<Adc>(doc);
    auto e = enumerate_nu(c, c.top_degree(), caps_of(o));
    out << serialize(lambda_of_enumerated(e).complex);
    return ok;
}

int preorder(const Options& o, std::ostream& out)
{
    Document doc = load(o.file);
    RelationGraph g;
    std::map<Name, int> dims;
    if (const auto* P = std::get_if<Presentation>(&doc)) {
        g = preorder_report(*P).full;
        for (const auto& n : P->all_generators())
            dims[n] = P->dim_of(n);
    } else {
        const Adc& c = std::get<Adc>(doc);
        g = loop_free_report(c).graph;
        for (const auto& n : c.generators())
            dims[n] = c.degree_of(n);
    }
    auto total = g.as_total_order();
    auto cycle = g.is_antisymmetric() ? std::nullopt : g.cycle_witness();
    if (o.json) {
        Json j = to_json(g);
        j["antisymmetric"] = !cycle.has_value();
        if (total)
            j["total_order"] = *total;
        if (cycle)
            j["cycle"] = *cycle;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [from, to] : g.edges())
            out << from << " <= " << to << "\n";
        out << "antisymmetric: " << (cycle ? "no" : "yes") << "\n";
        if (cycle)
            out << "cycle: " << join(*cycle, " <= ") << "\n";
        if (total)
            out << "total order: " << join(*total, " <= ") << "\n";
    }
    if (!o.dot.empty()) {
        std::ofstream f(o.dot);
        if (!f)
            throw Error(ErrorKind::parse, "cannot write " + o.dot);
        f << dot_graph(g, dims);
    }
    return ok;
}

int roundtrip(const Options& o, std::ostream& out)
{
    Adc c = complex_of(load(o.file));
    auto report = verify_equivalence(c, caps_of(o));
    if (o.json) {
        Json j = {{"ok", report.ok}, {"message", report.message}};
        if (report.mismatch)
            j["mismatch"] = *report.mismatch;
        out << j.dump(2) << "\n";
    } else {
        out << (report.ok ? "round trip: ok" : "round trip: failed") << "\n" << report.message << "\n";
    }
    return report.ok ? ok : negative;
}

int catalog(const Options& o, std::ostream& out)
{
    CatalogEntry entry = build(o.name, o.params);
    std::string text;
    const bool want_complex = o.form == "complex" || (o.form.empty() && !entry.presentation);
    if (want_complex) {
        if (!entry.complex)
            throw Error(ErrorKind::bad_params, o.name + " has no complex form");
        text = serialize(*entry.complex);
    } else {
        if (!entry.presentation)
            throw Error(ErrorKind::bad_params, o.name + " has no presentation form for these parameters");
        text = serialize(*entry.presentation);
    }
    if (o.out.empty()) {
        out << text;
        return ok;
    }
    std::ofstream f(o.out);
    if (!f)
        throw Error(ErrorKind::parse, "cannot write " + o.out);
    f << text;
    return ok;
}

int oracle(const Options& o, std::ostream& out)
{
    Adc c = complex_of(load(o.file));
    auto tables = brute_force_nu(c, o.dim, o.cap);
    if (o.json) {
        Json j = Json::array();
        for (const auto& t : tables)
            j.push_back(to_json(t));
        out << Json{{"dim", o.dim}, {"cap", o.cap}, {"count", tables.size()}, {"tables", j}}.dump(2) << "\n";
    } else {
        out << "valid " << o.dim << "-tables with coefficients <= " << o.cap << ": " << tables.size() << "\n";
        for (const auto& t : tables)
            out << (is_identity(t) ? "identity\n" : "cell\n") << t.to_string();
    }
    return ok;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::schema: return bad_input;
    case ErrorKind::validation:
    case ErrorKind::not_composable:
    case ErrorKind::dim: return invalid;
    case ErrorKind::bad_params: return usage;
    default: return computation;
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Strict omega-categories, directed complexes and polygraphs"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "machine-readable output");

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-cells", o.max_cells, "enumeration cap on the number of cells");
        sub->add_option("--max-coeff", o.max_coeff, "enumeration cap on table coefficients");
    };

    auto* c_check = app.add_subcommand("check", "classify a presentation or complex");
    c_check->add_option("FILE", o.file)->required();
    auto* c_enum = app.add_subcommand("enumerate", "count the cells of the table category");
    c_enum->add_option("FILE", o.file)->required();
    c_enum->add_option("--max-dim", o.max_dim, "highest dimension (default: top degree)");
    add_caps(c_enum);
    auto* c_lambda = app.add_subcommand("lambda", "print the linearisation");
    c_lambda->add_option("FILE", o.file)->required();
    add_caps(c_lambda);
    auto* c_pre = app.add_subcommand("preorder", "print the generating preorder");
    c_pre->add_option("FILE", o.file)->required();
    c_pre->add_option("--dot", o.dot, "write the relation as a DOT graph");
    auto* c_rt = app.add_subcommand("roundtrip", "enumerate, linearise and compare");
    c_rt->add_option("FILE", o.file)->required();
    add_caps(c_rt);
    auto* c_cat = app.add_subcommand("catalog", "export a catalog entry");
    c_cat->add_option("NAME", o.name)->required();
    c_cat->add_option("PARAMS", o.params);
    c_cat->add_option("--out", o.out, "output file (default: stdout)");
    c_cat->add_option("--form", o.form, "presentation or complex")->check(CLI::IsMember({"presentation", "complex"}));
    auto* c_oracle = app.add_subcommand("oracle", "exhaustive search for valid tables");
    c_oracle->add_option("FILE", o.file)->required();
    c_oracle->add_option("--dim", o.dim)->required();
    c_oracle->add_option("--cap", o.cap, "coefficient cap")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage;
    }

    try {
        if (c_check->parsed()) return check(o, out);
        if (c_enum->parsed()) return enumerate(o, out);
        if (c_lambda->parsed()) return lambda(o, out);
        if (c_pre->parsed()) return preorder(o, out);
        if (c_rt->parsed()) return roundtrip(o, out);
        if (c_cat->parsed()) return catalog(o, out);
        if (c_oracle->parsed()) return oracle(o, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code(e.kind());
    }
    return usage;
}

} // namespace steiner::cli
