#include "steiner/adc.hpp"

#include <sstream>

namespace steiner {

std::string Table::to_string() const
{
    std::ostringstream os;
    for (int p = dim(); p >= 0; --p) {
        const auto& r = row(p);
        os << "  " << p << ": (" << r.minus.to_string() << " | " << r.plus.to_string() << ")\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------- Adc

void Adc::add_generator(const Name& name, int degree, const IntVector& boundary, std::int64_t augmentation)
{
    if (name.empty())
        throw Error(ErrorKind::schema, "empty generator name");
    if (degree < 0)
        throw Error(ErrorKind::schema, "negative degree for " + name);
    if (degree_.contains(name))
        throw Error(ErrorKind::schema, "duplicate generator " + name);
    if (degree == 0 && !boundary.is_zero())
        throw Error(ErrorKind::schema, "degree-0 generator " + name + " has a boundary");
    for (const auto& [g, coeff] : boundary) {
        auto it = degree_.find(g);
        if (it == degree_.end())
            throw Error(ErrorKind::schema, "boundary of " + name + " references unknown generator " + g);
        if (it->second != degree - 1)
            throw Error(ErrorKind::schema, "boundary of " + name + " references " + g + " of the wrong degree");
    }
    if (static_cast<std::size_t>(degree) >= basis_.size())
        basis_.resize(static_cast<std::size_t>(degree) + 1);
    basis_[static_cast<std::size_t>(degree)].push_back(name);
    degree_.emplace(name, degree);
    boundary_.emplace(name, boundary);
    if (degree == 0)
        augmentation_.emplace(name, augmentation);
}

const std::vector<Name>& Adc::basis(int degree) const
{
    static const std::vector<Name> empty;
    if (degree < 0 || static_cast<std::size_t>(degree) >= basis_.size())
        return empty;
    return basis_[static_cast<std::size_t>(degree)];
}

std::vector<Name> Adc::generators() const
{
    std::vector<Name> out;
    for (const auto& level : basis_)
        out.insert(out.end(), level.begin(), level.end());
    return out;
}

int Adc::degree_of(const Name& name) const
{
    auto it = degree_.find(name);
    if (it == degree_.end())
        throw Error(ErrorKind::schema, "unknown generator " + name);
    return it->second;
}

const IntVector& Adc::boundary(const Name& name) const
{
    auto it = boundary_.find(name);
    if (it == boundary_.end())
        throw Error(ErrorKind::schema, "unknown generator " + name);
    return it->second;
}

std::int64_t Adc::augmentation(const Name& name) const
{
    auto it = augmentation_.find(name);
    if (it == augmentation_.end())
        throw Error(ErrorKind::schema, "no augmentation for " + name);
    return it->second;
}

IntVector Adc::differential(const IntVector& c, int degree) const
{
    IntVector out;
    if (degree <= 0)
        return out;
    for (const auto& [name, coeff] : c)
        out += boundary(name).scaled(coeff);
    return out;
}

std::int64_t Adc::augment(const IntVector& c0) const
{
    std::int64_t total = 0;
    for (const auto& [name, coeff] : c0)
        total = checked_add(total, checked_mul(coeff, augmentation(name)));
    return total;
}

bool Adc::is_chain_of_degree(const IntVector& c, int degree) const
{
    for (const auto& [name, coeff] : c) {
        auto it = degree_.find(name);
        if (it == degree_.end() || it->second != degree)
            return false;
    }
    return true;
}

bool operator==(const Adc& a, const Adc& b)
{
    return a.basis_ == b.basis_ && a.boundary_ == b.boundary_ && a.augmentation_ == b.augmentation_;
}

// --------------------------------------------------------------- operations

std::string ValidationReport::to_string() const
{
    std::ostringstream os;
    os << "dd = 0: " << (boundary_squared_zero ? "pass" : "fail at " + *dd_witness) << "\n";
    os << "e d = 0: " << (augmentation_compatible ? "pass" : "fail at " + *augmentation_witness) << "\n";
    return os.str();
}

ValidationReport validate_adc(const Adc& c)
{
    ValidationReport report;
    for (int q = 1; q <= c.top_degree(); ++q) {
        for (const auto& name : c.basis(q)) {
            const IntVector& d = c.boundary(name);
            if (q >= 2 && report.boundary_squared_zero && !c.differential(d, q - 1).is_zero()) {
                report.boundary_squared_zero = false;
                report.dd_witness = name;
            }
            if (q == 1 && report.augmentation_compatible && c.augment(d) != 0) {
                report.augmentation_compatible = false;
                report.augmentation_witness = name;
            }
        }
    }
    return report;
}

Decomposition decompose(const IntVector& c)
{
    Decomposition out;
    for (const auto& [name, coeff] : c) {
        if (coeff > 0) {
            out.pos.set(name, coeff);
            out.supp_pos.insert(name);
        } else {
            out.neg.set(name, checked_sub(0, coeff));
            out.supp_neg.insert(name);
        }
        out.supp.insert(name);
    }
    return out;
}

IntVector boundary_part(const Adc& complex, const IntVector& c, int degree, Sign sign)
{
    auto parts = decompose(complex.differential(c, degree));
    return sign == Sign::minus ? parts.neg : parts.pos;
}

AtomTable atom_table(const Adc& complex, const IntVector& c, int degree)
{
    AtomTable t;
    t.rows.resize(static_cast<std::size_t>(degree) + 1);
    t.rows.back() = {c, c};
    for (int p = degree - 1; p >= 0; --p) {
        const auto& above = t.rows[static_cast<std::size_t>(p) + 1];
        t.rows[static_cast<std::size_t>(p)] = {boundary_part(complex, above.minus, p + 1, Sign::minus),
                                               boundary_part(complex, above.plus, p + 1, Sign::plus)};
    }
    return t;
}

AtomTable atom_table(const Adc& complex, const Name& generator)
{
    return atom_table(complex, IntVector::unit(generator), complex.degree_of(generator));
}

UnitalityResult is_unital(const Adc& complex)
{
    for (const auto& name : complex.generators()) {
        auto atom = atom_table(complex, name);
        const auto& bottom = atom.row(0);
        if (complex.augment(bottom.minus) != 1 || complex.augment(bottom.plus) != 1)
            return {false, name};
    }
    return {};
}

namespace {

RelationGraph nodes_only(const Adc& complex)
{
    RelationGraph g;
    for (const auto& name : complex.generators())
        g.add_node(name);
    return g;
}

void add_negative_clause(const Adc& complex, RelationGraph& g)
{
    for (const auto& b : complex.generators()) {
        int q = complex.degree_of(b);
        if (q == 0)
            continue;
        for (const auto& a : boundary_part(complex, IntVector::unit(b), q, Sign::minus).support())
            g.add_edge(a, b);
    }
}

void add_positive_clause(const Adc& complex, RelationGraph& g)
{
    for (const auto& a : complex.generators()) {
        int p = complex.degree_of(a);
        if (p == 0)
            continue;
        for (const auto& b : boundary_part(complex, IntVector::unit(a), p, Sign::plus).support())
            g.add_edge(a, b);
    }
}

} // namespace

RelationGraph loop_free_graph_negative_clause(const Adc& complex)
{
    auto g = nodes_only(complex);
    add_negative_clause(complex, g);
    return g;
}

RelationGraph loop_free_graph_positive_clause(const Adc& complex)
{
    auto g = nodes_only(complex);
    add_positive_clause(complex, g);
    return g;
}

LoopFreeReport loop_free_report(const Adc& complex)
{
    LoopFreeReport report;
    report.graph = nodes_only(complex);
    add_negative_clause(complex, report.graph);
    add_positive_clause(complex, report.graph);
    report.is_partial_order = report.graph.is_antisymmetric();
    if (!report.is_partial_order)
        report.cycle_witness = report.graph.cycle_witness();
    return report;
}

Adc truncate_adc(const Adc& complex, int n)
{
    Adc out;
    for (int q = 0; q <= std::min(n, complex.top_degree()); ++q)
        for (const auto& name : complex.basis(q))
            out.add_generator(name, q, complex.boundary(name), q == 0 ? complex.augmentation(name) : 1);
    return out;
}

bool is_strong_steiner_complex(const Adc& complex)
{
    return is_unital(complex).unital && loop_free_report(complex).is_partial_order;
}

} // namespace steiner
