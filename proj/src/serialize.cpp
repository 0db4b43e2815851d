#include "steiner/serialize.hpp"

namespace steiner {

namespace {

[[noreturn]] void schema(const std::string& what)
{
    throw Error(ErrorKind::schema, what);
}

const Json& field(const Json& obj, const char* key)
{
    if (!obj.is_object())
        schema("expected an object");
    auto it = obj.find(key);
    if (it == obj.end())
        schema(std::string("missing field \"") + key + "\"");
    return *it;
}

Name name_field(const Json& obj)
{
    const Json& n = field(obj, "name");
    if (!n.is_string())
        schema("\"name\" must be a string");
    return n.get<std::string>();
}

int dim_field(const Json& obj)
{
    const Json& d = field(obj, "dim");
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0)
        schema("\"dim\" must be a non-negative integer");
    return d.get<int>();
}

const Json& generators_field(const Json& doc)
{
    const Json& gens = field(doc, "generators");
    if (!gens.is_array())
        schema("\"generators\" must be an array");
    return gens;
}

} // namespace

Json to_json(const IntVector& v)
{
    Json j = Json::object();
    for (const auto& [name, coeff] : v)
        j[name] = coeff;
    return j;
}

Json to_json(const Adc& complex)
{
    Json gens = Json::array();
    for (const auto& name : complex.generators()) {
        const int q = complex.degree_of(name);
        Json g = {{"name", name}, {"dim", q}};
        if (q == 0)
            g["augmentation"] = complex.augmentation(name);
        else
            g["boundary"] = to_json(complex.boundary(name));
        gens.push_back(std::move(g));
    }
    return {{"kind", "adc"}, {"generators", std::move(gens)}};
}

Json to_json(const Presentation& P, const CellExpr& e)
{
    switch (e.kind()) {
    case CellExpr::Kind::gen: return {{"gen", e.name()}};
    case CellExpr::Kind::id: return {{"id", to_json(P, e.inner())}};
    case CellExpr::Kind::comp:
        return {{"comp", Json::array({e.level(), to_json(P, e.left()), to_json(P, e.right())})}};
    }
    return nullptr;
}

Json to_json(const Presentation& P)
{
    Json gens = Json::array();
    for (const auto& name : P.all_generators()) {
        const int q = P.dim_of(name);
        Json g = {{"name", name}, {"dim", q}};
        if (q > 0) {
            g["src"] = to_json(P, P.boundary(name, Sign::minus));
            g["tgt"] = to_json(P, P.boundary(name, Sign::plus));
        }
        gens.push_back(std::move(g));
    }
    return {{"kind", "polygraph"}, {"generators", std::move(gens)}};
}

Json to_json(const NuTable& t)
{
    Json rows = Json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"minus", to_json(r.minus)}, {"plus", to_json(r.plus)}});
    return {{"dim", t.dim()}, {"rows", std::move(rows)}};
}

Json to_json(const RelationGraph& g)
{
    Json edges = Json::array();
    for (const auto& [from, to] : g.edges())
        edges.push_back(Json::array({from, to}));
    return {{"nodes", g.nodes()}, {"edges", std::move(edges)}};
}

Json to_json(const Verdict& v)
{
    Json j = {
        {"is_polygraphic", v.is_polygraphic},
        {"is_atomic", v.is_atomic},
        {"codim1_antisymmetric", v.codim1_antisymmetric},
        {"strongly_loop_free_categorical", v.strongly_loop_free_categorical},
        {"strongly_loop_free_algebraic", v.strongly_loop_free_algebraic},
        {"lambda_unital", v.lambda_unital},
        {"steiner_orderable", v.steiner_orderable},
        {"strong_steiner", v.strong_steiner},
        {"preorder_codim1", to_json(v.preorder_codim1)},
        {"preorder_full", to_json(v.preorder_full)},
    };
    if (v.atomicity_witness)
        j["atomicity_witness"] = {{"generator", v.atomicity_witness->generator},
                                  {"level", v.atomicity_witness->level},
                                  {"intersection", v.atomicity_witness->intersection}};
    if (v.categorical_cycle)
        j["categorical_cycle"] = *v.categorical_cycle;
    if (v.algebraic_cycle)
        j["algebraic_cycle"] = *v.algebraic_cycle;
    if (v.steiner_order)
        j["steiner_order"] = *v.steiner_order;
    if (v.steiner_cycle)
        j["steiner_cycle"] = *v.steiner_cycle;
    return j;
}

std::string serialize(const Adc& complex)
{
    return to_json(complex).dump(2) + "\n";
}

std::string serialize(const Presentation& P)
{
    return to_json(P).dump(2) + "\n";
}

std::string serialize(const Document& doc)
{
    return std::visit([](const auto& x) { return serialize(x); }, doc);
}

Adc adc_from_json(const Json& doc)
{
    Adc c;
    for (const Json& g : generators_field(doc)) {
        const Name name = name_field(g);
        const int q = dim_field(g);
        IntVector boundary;
        if (auto it = g.find("boundary"); it != g.end()) {
            if (!it->is_object())
                schema("boundary of " + name + " must be an object");
            for (const auto& [k, v] : it->items()) {
                if (!v.is_number_integer())
                    schema("boundary coefficient of " + name + " at " + k + " must be an integer");
                boundary.add_to(k, v.get<std::int64_t>());
            }
        }
        std::int64_t eps = 1;
        if (auto it = g.find("augmentation"); it != g.end()) {
            if (!it->is_number_integer())
                schema("augmentation of " + name + " must be an integer");
            if (q != 0)
                schema("augmentation given for " + name + " of dimension " + std::to_string(q));
            eps = it->get<std::int64_t>();
        }
        c.add_generator(name, q, boundary, eps);
    }
    auto report = validate_adc(c);
    if (!report.boundary_squared_zero)
        throw Error(ErrorKind::validation, "boundary of " + *report.dd_witness + " has non-zero boundary");
    if (!report.augmentation_compatible)
        throw Error(ErrorKind::validation, "augmentation of the boundary of " + *report.augmentation_witness +
                                               " is non-zero");
    return c;
}

CellExpr expr_from_json(const Presentation& P, const Json& j)
{
    if (!j.is_object() || j.size() != 1)
        schema("expression must be an object with exactly one of gen, id, comp");
    if (auto it = j.find("gen"); it != j.end()) {
        if (!it->is_string())
            schema("\"gen\" must name a generator");
        const Name name = it->get<std::string>();
        if (!P.contains(name))
            schema("expression references unknown generator " + name);
        return P.gen(name);
    }
    if (auto it = j.find("id"); it != j.end())
        return CellExpr::id(expr_from_json(P, *it));
    if (auto it = j.find("comp"); it != j.end()) {
        if (!it->is_array() || it->size() != 3 || !(*it)[0].is_number_integer())
            schema("\"comp\" must be [level, EXPR, EXPR]");
        try {
            return CellExpr::comp((*it)[0].get<int>(), expr_from_json(P, (*it)[1]), expr_from_json(P, (*it)[2]));
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::dim)
                schema(e.detail());
            throw;
        }
    }
    schema("expression must be an object with exactly one of gen, id, comp");
}

Presentation presentation_from_json(const Json& doc)
{
    Presentation P;
    for (const Json& g : generators_field(doc)) {
        const Name name = name_field(g);
        const int q = dim_field(g);
        if (q == 0) {
            if (g.contains("src") || g.contains("tgt"))
                schema("point " + name + " cannot have a boundary");
            P.add_point(name);
            continue;
        }
        CellExpr src = expr_from_json(P, field(g, "src"));
        CellExpr tgt = expr_from_json(P, field(g, "tgt"));
        if (src.dim() != q - 1 || tgt.dim() != q - 1)
            schema("boundary of " + name + " must have dimension " + std::to_string(q - 1));
        try {
            P.add_generator(name, src, tgt);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::not_composable)
                throw Error(ErrorKind::validation, e.detail());
            throw;
        }
    }
    return P;
}

Document parse_document(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::parse, "at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    const Json& kind = field(doc, "kind");
    if (kind == "adc")
        return adc_from_json(doc);
    if (kind == "polygraph")
        return presentation_from_json(doc);
    schema("\"kind\" must be \"adc\" or \"polygraph\"");
}

} // namespace steiner
