#include "steiner/polygraph.hpp"

#include <sstream>

namespace steiner {

// ----------------------------------------------------------------- CellExpr

struct CellExpr::Node {
    Kind kind;
    int dim;
    Name name;
    int level = 0;
    std::vector<CellExpr> children;
};

CellExpr CellExpr::gen(const Name& name, int dim)
{
    if (dim < 0)
        throw Error(ErrorKind::dim, "negative dimension for " + name);
    return CellExpr(std::make_shared<const Node>(Node{Kind::gen, dim, name, 0, {}}));
}

CellExpr CellExpr::id(const CellExpr& inner)
{
    return CellExpr(std::make_shared<const Node>(Node{Kind::id, inner.dim() + 1, {}, 0, {inner}}));
}

CellExpr CellExpr::comp(int level, const CellExpr& left, const CellExpr& right)
{
    if (left.dim() != right.dim())
        throw Error(ErrorKind::dim, "composite of a " + std::to_string(left.dim()) + "-cell with a " +
                                        std::to_string(right.dim()) + "-cell");
    if (level < 0 || level >= left.dim())
        throw Error(ErrorKind::dim, "composition level " + std::to_string(level) + " not below dimension " +
                                        std::to_string(left.dim()));
    return CellExpr(std::make_shared<const Node>(Node{Kind::comp, left.dim(), {}, level, {left, right}}));
}

CellExpr::Kind CellExpr::kind() const { return node_->kind; }
int CellExpr::dim() const { return node_->dim; }
const Name& CellExpr::name() const { return node_->name; }
const CellExpr& CellExpr::inner() const { return node_->children.at(0); }
int CellExpr::level() const { return node_->level; }
const CellExpr& CellExpr::left() const { return node_->children.at(0); }
const CellExpr& CellExpr::right() const { return node_->children.at(1); }

std::string CellExpr::to_string() const
{
    switch (kind()) {
    case Kind::gen: return name();
    case Kind::id: return "id(" + inner().to_string() + ")";
    case Kind::comp:
        return "(" + left().to_string() + " *" + std::to_string(level()) + " " + right().to_string() + ")";
    }
    return {};
}

bool operator==(const CellExpr& a, const CellExpr& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind() || a.dim() != b.dim())
        return false;
    switch (a.kind()) {
    case CellExpr::Kind::gen: return a.name() == b.name();
    case CellExpr::Kind::id: return a.inner() == b.inner();
    case CellExpr::Kind::comp: return a.level() == b.level() && a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

CellExpr id_to(const CellExpr& e, int dim)
{
    CellExpr out = e;
    while (out.dim() < dim)
        out = CellExpr::id(out);
    return out;
}

// ------------------------------------------------------------- Presentation

bool Presentation::contains(const Name& name) const
{
    return dims_.contains(name);
}

int Presentation::dim_of(const Name& name) const
{
    auto it = dims_.find(name);
    if (it == dims_.end())
        throw Error(ErrorKind::schema, "unknown generator " + name);
    return it->second;
}

CellExpr Presentation::gen(const Name& name) const
{
    return CellExpr::gen(name, dim_of(name));
}

const CellExpr& Presentation::boundary(const Name& name, Sign sign) const
{
    auto it = boundaries_.find(name);
    if (it == boundaries_.end())
        throw Error(ErrorKind::dim, "generator " + name + " has no boundary");
    return sign == Sign::minus ? it->second.src : it->second.tgt;
}

const std::vector<Name>& Presentation::generators(int dim) const
{
    static const std::vector<Name> empty;
    if (dim < 0 || static_cast<std::size_t>(dim) >= generators_.size())
        return empty;
    return generators_[static_cast<std::size_t>(dim)];
}

std::vector<Name> Presentation::all_generators() const
{
    std::vector<Name> out;
    for (const auto& level : generators_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

void Presentation::record(const Name& name, int dim)
{
    if (name.empty())
        throw Error(ErrorKind::schema, "empty generator name");
    if (dims_.contains(name))
        throw Error(ErrorKind::schema, "duplicate generator " + name);
    if (static_cast<std::size_t>(dim) >= generators_.size())
        generators_.resize(static_cast<std::size_t>(dim) + 1);
    generators_[static_cast<std::size_t>(dim)].push_back(name);
    dims_.emplace(name, dim);
}

void Presentation::add_point(const Name& name)
{
    record(name, 0);
}

void Presentation::check_expr(const CellExpr& e) const
{
    switch (e.kind()) {
    case CellExpr::Kind::gen: {
        auto it = dims_.find(e.name());
        if (it == dims_.end())
            throw Error(ErrorKind::schema, "expression references unknown generator " + e.name());
        if (it->second != e.dim())
            throw Error(ErrorKind::schema, "generator " + e.name() + " used with the wrong dimension");
        return;
    }
    case CellExpr::Kind::id: check_expr(e.inner()); return;
    case CellExpr::Kind::comp: {
        check_expr(e.left());
        check_expr(e.right());
        const int k = e.level();
        if (!cells_equal(*this, face_expr(*this, e.left(), k, Sign::plus), face_expr(*this, e.right(), k, Sign::minus)))
            throw Error(ErrorKind::not_composable, "in " + e.to_string() + ": target_" + std::to_string(k) +
                                                       " of the left factor differs from source_" + std::to_string(k) +
                                                       " of the right factor");
        return;
    }
    }
}

void Presentation::add_generator(const Name& name, const CellExpr& src, const CellExpr& tgt)
{
    if (src.dim() != tgt.dim())
        throw Error(ErrorKind::schema, "source and target of " + name + " have different dimensions");
    check_expr(src);
    check_expr(tgt);
    const int q = src.dim() + 1;
    if (q >= 2) {
        for (Sign s : {Sign::minus, Sign::plus})
            if (!cells_equal(*this, face_expr(*this, src, q - 2, s), face_expr(*this, tgt, q - 2, s)))
                throw Error(ErrorKind::validation, "source and target of " + name + " are not parallel");
    }
    record(name, q);
    boundaries_.emplace(name, Boundary{src, tgt});
}

bool operator==(const Presentation& a, const Presentation& b)
{
    if (a.generators_ != b.generators_)
        return false;
    for (const auto& [name, bd] : a.boundaries_) {
        auto it = b.boundaries_.find(name);
        if (it == b.boundaries_.end() || !(it->second.src == bd.src) || !(it->second.tgt == bd.tgt))
            return false;
    }
    return a.boundaries_.size() == b.boundaries_.size();
}

// ------------------------------------------------------- expression algebra

CellExpr face_expr(const Presentation& P, const CellExpr& e, int p, Sign sign)
{
    const int q = e.dim();
    if (p < 0 || p >= q)
        throw Error(ErrorKind::dim, "face level " + std::to_string(p) + " not below dimension " + std::to_string(q));
    switch (e.kind()) {
    case CellExpr::Kind::gen: {
        const CellExpr& b = P.boundary(e.name(), sign);
        return p == q - 1 ? b : face_expr(P, b, p, sign);
    }
    case CellExpr::Kind::id: return p == q - 1 ? e.inner() : face_expr(P, e.inner(), p, sign);
    case CellExpr::Kind::comp: {
        const int k = e.level();
        if (p <= k)
            return sign == Sign::minus ? face_expr(P, e.left(), p, sign) : face_expr(P, e.right(), p, sign);
        return CellExpr::comp(k, face_expr(P, e.left(), p, sign), face_expr(P, e.right(), p, sign));
    }
    }
    throw Error(ErrorKind::dim, "malformed expression");
}

IntVector linearize(const Presentation& P, const CellExpr& e)
{
    switch (e.kind()) {
    case CellExpr::Kind::gen: P.dim_of(e.name()); return IntVector::unit(e.name());
    case CellExpr::Kind::id: return {};
    case CellExpr::Kind::comp: return linearize(P, e.left()) + linearize(P, e.right());
    }
    return {};
}

Chain linearize_chain(const Presentation& P, const CellExpr& e)
{
    return {e.dim(), linearize(P, e)};
}

NuTable unit_table(const Presentation& P, const CellExpr& e)
{
    NuTable t;
    for (int p = 0; p < e.dim(); ++p)
        t.rows.push_back({linearize(P, face_expr(P, e, p, Sign::minus)), linearize(P, face_expr(P, e, p, Sign::plus))});
    IntVector top = linearize(P, e);
    t.rows.push_back({top, top});
    return t;
}

std::vector<Name> path_word(const Presentation& P, const CellExpr& e)
{
    if (e.dim() != 1)
        throw Error(ErrorKind::dim, "path_word needs a 1-cell expression");
    switch (e.kind()) {
    case CellExpr::Kind::gen: return {e.name()};
    case CellExpr::Kind::id: return {};
    case CellExpr::Kind::comp: {
        auto w = path_word(P, e.left());
        auto r = path_word(P, e.right());
        w.insert(w.end(), r.begin(), r.end());
        return w;
    }
    }
    return {};
}

bool cells_equal(const Presentation& P, const CellExpr& a, const CellExpr& b)
{
    if (a.dim() != b.dim())
        return false;
    if (a.dim() == 0)
        return a.name() == b.name();
    if (a.dim() == 1)
        return path_word(P, a) == path_word(P, b) &&
               face_expr(P, a, 0, Sign::minus).name() == face_expr(P, b, 0, Sign::minus).name() &&
               face_expr(P, a, 0, Sign::plus).name() == face_expr(P, b, 0, Sign::plus).name();
    return unit_table(P, a) == unit_table(P, b);
}

Adc lambda_presentation(const Presentation& P)
{
    Adc c;
    for (const auto& name : P.all_generators()) {
        const int q = P.dim_of(name);
        if (q == 0) {
            c.add_generator(name, 0, {}, 1);
            continue;
        }
        c.add_generator(name, q,
                        linearize(P, P.boundary(name, Sign::plus)) - linearize(P, P.boundary(name, Sign::minus)));
    }
    return c;
}

NameSet support_expr(const Presentation& P, const CellExpr& e)
{
    return linearize(P, e).support();
}

// --------------------------------------------------------------- verdicts

namespace {

NameSet intersection(const NameSet& a, const NameSet& b)
{
    NameSet out;
    for (const auto& x : a)
        if (b.contains(x))
            out.insert(x);
    return out;
}

NameSet face_support(const Presentation& P, const Name& b, int p, Sign sign)
{
    return support_expr(P, face_expr(P, P.gen(b), p, sign));
}

std::string join(const std::vector<Name>& names, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i)
        out += (i ? sep : "") + names[i];
    return out;
}

std::string join(const NameSet& names)
{
    return "{" + join(std::vector<Name>(names.begin(), names.end()), ", ") + "}";
}

} // namespace

AtomicityResult is_atomic(const Presentation& P)
{
    for (const auto& y : P.all_generators()) {
        const int q = P.dim_of(y);
        for (int p = 0; p < q; ++p) {
            auto common = intersection(face_support(P, y, p, Sign::minus), face_support(P, y, p, Sign::plus));
            if (!common.empty())
                return {false, AtomicityViolation{y, p, common}};
        }
    }
    return {};
}

PreorderReport preorder_report(const Presentation& P)
{
    PreorderReport r;
    for (const auto& name : P.all_generators()) {
        r.codim1.add_node(name);
        r.full.add_node(name);
    }
    for (const auto& b : P.all_generators()) {
        const int q = P.dim_of(b);
        if (q == 0)
            continue;
        // a <= b for a in supp(s_{q-1} b); b <= c for c in supp(t_{q-1} b)
        for (const auto& a : face_support(P, b, q - 1, Sign::minus))
            r.codim1.add_edge(a, b);
        for (const auto& c : face_support(P, b, q - 1, Sign::plus))
            r.codim1.add_edge(b, c);
        // every level: a <= b for a in supp(s_{dim a} b); b <= c for c in supp(t_{dim c} b)
        for (int p = 0; p < q; ++p) {
            for (const auto& a : face_support(P, b, p, Sign::minus))
                r.full.add_edge(a, b);
            for (const auto& c : face_support(P, b, p, Sign::plus))
                r.full.add_edge(b, c);
        }
    }
    r.codim1_antisymmetric = r.codim1.is_antisymmetric();
    r.full_antisymmetric = r.full.is_antisymmetric();
    if (!r.codim1_antisymmetric)
        r.codim1_cycle = r.codim1.cycle_witness();
    if (!r.full_antisymmetric)
        r.full_cycle = r.full.cycle_witness();
    return r;
}

bool is_algebraically_loop_free(const Presentation& P)
{
    return loop_free_report(lambda_presentation(P)).is_partial_order;
}

SteinerOrderResult is_steiner_orderable(const Presentation& P)
{
    SteinerOrderResult r;
    for (const auto& name : P.all_generators())
        r.constraints.add_node(name);
    for (const auto& e : P.all_generators()) {
        const int dim = P.dim_of(e);
        for (int q = 0; q < dim; ++q) {
            auto below = face_support(P, e, q, Sign::minus);
            auto above = face_support(P, e, q, Sign::plus);
            for (const auto& u : below)
                for (const auto& v : above)
                    r.constraints.add_edge(u, v);
        }
    }
    // u < u is unsatisfiable, so a self-loop is already a cycle
    std::optional<Name> self_loop;
    for (const auto& [u, v] : r.constraints.edges())
        if (u == v && !self_loop)
            self_loop = u;
    if (self_loop) {
        r.orderable = false;
        r.cycle = std::vector<Name>{*self_loop, *self_loop};
        return r;
    }
    r.order = r.constraints.topological_order();
    r.orderable = r.order.has_value();
    if (!r.orderable)
        r.cycle = r.constraints.cycle_witness();
    return r;
}

Verdict classify(const Presentation& P)
{
    Verdict v;
    auto atomic = is_atomic(P);
    v.is_atomic = atomic.atomic;
    v.atomicity_witness = atomic.witness;

    auto pre = preorder_report(P);
    v.preorder_codim1 = pre.codim1;
    v.preorder_full = pre.full;
    v.codim1_antisymmetric = pre.codim1_antisymmetric;
    v.strongly_loop_free_categorical = pre.full_antisymmetric;
    v.categorical_cycle = pre.full_cycle;

    Adc lambda = lambda_presentation(P);
    auto loops = loop_free_report(lambda);
    v.strongly_loop_free_algebraic = loops.is_partial_order;
    v.algebraic_cycle = loops.cycle_witness;
    v.lambda_unital = is_unital(lambda).unital;

    auto order = is_steiner_orderable(P);
    v.steiner_orderable = order.orderable;
    v.steiner_order = order.order;
    v.steiner_cycle = order.cycle;

    v.strong_steiner = v.strongly_loop_free_categorical;

    auto fail = [](const std::string& what) { throw Error(ErrorKind::inconsistent, what); };
    if (v.strongly_loop_free_categorical && !v.is_atomic)
        fail("strongly loop-free but not atomic");
    if (v.strongly_loop_free_categorical != (v.is_atomic && v.strongly_loop_free_algebraic))
        fail("categorical loop-freeness differs from atomic + algebraic loop-freeness");
    if (v.is_atomic && !v.lambda_unital)
        fail("atomic basis with a non-unital linearisation");
    if (v.strong_steiner && !v.steiner_orderable)
        fail("strong Steiner presentation without a compatible linear order");
    return v;
}

std::string Verdict::to_string() const
{
    std::ostringstream os;
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "polygraphic: " << yes(is_polygraphic) << "\n";
    os << "atomic: " << yes(is_atomic) << "\n";
    if (atomicity_witness)
        os << "  atomicity violated at (" << atomicity_witness->generator << ", " << atomicity_witness->level
           << "): " << join(atomicity_witness->intersection) << "\n";
    os << "codimension-1 preorder antisymmetric: " << yes(codim1_antisymmetric) << "\n";
    os << "strongly loop-free (categorical): " << yes(strongly_loop_free_categorical) << "\n";
    if (categorical_cycle)
        os << "  cycle: " << join(*categorical_cycle, " <= ") << "\n";
    os << "strongly loop-free (algebraic): " << yes(strongly_loop_free_algebraic) << "\n";
    if (algebraic_cycle)
        os << "  cycle: " << join(*algebraic_cycle, " <= ") << "\n";
    os << "linearisation unital: " << yes(lambda_unital) << "\n";
    os << "Steiner orderable: " << yes(steiner_orderable) << "\n";
    if (steiner_order && !steiner_order->empty())
        os << "  order: " << join(*steiner_order, " < ") << "\n";
    if (steiner_cycle)
        os << "  cycle: " << join(*steiner_cycle, " < ") << "\n";
    os << "strong Steiner: " << yes(strong_steiner) << "\n";
    return os.str();
}

NuTable eval_table(const Presentation& P, const CellExpr& e)
{
    switch (e.kind()) {
    case CellExpr::Kind::gen: return atom_table(lambda_presentation(P), e.name());
    case CellExpr::Kind::id: return identity(eval_table(P, e.inner()));
    case CellExpr::Kind::comp: return compose(eval_table(P, e.left()), eval_table(P, e.right()), e.level());
    }
    throw Error(ErrorKind::dim, "malformed expression");
}

} // namespace steiner
