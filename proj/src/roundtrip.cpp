#include "steiner/roundtrip.hpp"

#include <algorithm>

namespace steiner {

const Name& QuotientLambda::name_of(const NuTable& cell) const
{
    const int q = cell.dim();
    if (q < 0 || static_cast<std::size_t>(q) >= names.size())
        throw Error(ErrorKind::not_closed, "cell of dimension " + std::to_string(q) + " outside the enumeration");
    auto it = names[static_cast<std::size_t>(q)].find(cell);
    if (it == names[static_cast<std::size_t>(q)].end())
        throw Error(ErrorKind::not_closed, "cell missing from the enumeration:\n" + cell.to_string());
    return it->second;
}

IntVector QuotientLambda::class_of(const NuTable& cell) const
{
    const Name& name = name_of(cell);
    return quotients[static_cast<std::size_t>(cell.dim())].project(IntVector::unit(name));
}

QuotientLambda lambda_of_enumerated(const EnumeratedOmegaCat& e)
{
    QuotientLambda out;
    out.source = e;
    const std::size_t levels = e.cells.size();
    out.names.resize(levels);

    std::vector<std::vector<Name>> ambient(levels);
    for (std::size_t q = 0; q < levels; ++q) {
        // atoms first, in basis order, so the greedy basis choice lands on them
        for (const auto& atom : e.atoms(static_cast<int>(q))) {
            if (!e.cells[q].contains(atom))
                continue;
            const Name& name = e.atom_names.at(atom);
            out.names[q].emplace(atom, name);
            ambient[q].push_back(name);
        }
        std::size_t i = 0;
        for (const auto& cell : e.cells[q]) {
            if (out.names[q].contains(cell))
                continue;
            Name name = "c" + std::to_string(q) + "_" + std::to_string(i++);
            out.names[q].emplace(cell, name);
            ambient[q].push_back(name);
        }
    }

    for (std::size_t q = 0; q < levels; ++q) {
        const auto& level = e.cells[q];
        const std::vector<NuTable> cells(level.begin(), level.end());
        std::set<IntVector> relations;
        for (int p = 0; p < static_cast<int>(q); ++p)
            for (const auto& x : cells)
                for (const auto& y : cells) {
                    if (!composable(x, y, p))
                        continue;
                    NuTable xy = compose(x, y, p);
                    auto it = out.names[q].find(xy);
                    if (it == out.names[q].end())
                        continue;
                    IntVector r = IntVector::unit(it->second);
                    r -= IntVector::unit(out.names[q].at(x));
                    r -= IntVector::unit(out.names[q].at(y));
                    if (!r.is_zero())
                        relations.insert(r);
                }
        out.quotients.push_back(
            quotient_free_basis(ambient[q], std::vector<IntVector>(relations.begin(), relations.end())));
    }

    for (std::size_t q = 0; q < levels; ++q) {
        const QuotientBasis& quotient = out.quotients[q];
        for (std::size_t i = 0; i < quotient.basis.size(); ++i) {
            const Name& name = quotient.basis[i];
            const IntVector& section = quotient.section[i];
            if (q == 0) {
                std::int64_t eps = 0;
                for (const auto& [cell, coeff] : section)
                    eps = checked_add(eps, coeff);
                out.complex.add_generator(name, 0, {}, eps);
                continue;
            }
            // [f] |-> [t f] - [s f], extended linearly along the section
            std::map<Name, NuTable> by_name;
            for (const auto& [cell, cell_name] : out.names[q])
                if (section[cell_name] != 0)
                    by_name.emplace(cell_name, cell);
            IntVector d;
            for (const auto& [cell_name, coeff] : section) {
                const NuTable& cell = by_name.at(cell_name);
                const int lower = static_cast<int>(q) - 1;
                IntVector diff = out.class_of(face(cell, lower, Sign::plus)) - out.class_of(face(cell, lower, Sign::minus));
                d += diff.scaled(coeff);
            }
            out.complex.add_generator(name, static_cast<int>(q), d);
        }
    }
    return out;
}

std::set<NuTable> atom_cells(const EnumeratedOmegaCat& e)
{
    std::set<NuTable> out;
    for (int q = 0; q <= e.max_dim; ++q)
        for (const auto& atom : e.atoms(q))
            out.insert(atom);
    return out;
}

OmegaBasisCheck check_omega_basis(const QuotientLambda& lambda, const std::set<NuTable>& candidate,
                                  const EnumerationCaps& caps)
{
    const EnumeratedOmegaCat& e = lambda.source;
    auto fail = [](int bullet, std::string detail) { return OmegaBasisCheck{false, bullet, std::move(detail)}; };

    for (const auto& c : candidate)
        if (!e.contains(c))
            return fail(1, "candidate cell outside the enumeration");
    auto closure = close_under_operations(std::vector<NuTable>(candidate.begin(), candidate.end()), e.max_dim, caps);
    if (closure != e.cells)
        return fail(1, "candidate does not generate every cell");

    for (int q = 0; q <= e.max_dim; ++q) {
        std::vector<std::pair<Name, IntVector>> gens;
        std::set<IntVector> seen;
        for (const auto& c : candidate) {
            if (c.dim() != q)
                continue;
            IntVector cls = lambda.class_of(c);
            if (!seen.insert(cls).second)
                return fail(2, "two candidate cells share the class " + cls.to_string());
            gens.emplace_back(lambda.name_of(c), cls);
        }

        const auto& basis = lambda.quotients[static_cast<std::size_t>(q)].basis;
        if (gens.size() != basis.size())
            return fail(3, "dimension " + std::to_string(q) + ": " + std::to_string(gens.size()) +
                               " candidate classes for a group of rank " + std::to_string(basis.size()));
        if (!basis.empty()) {
            IntMatrix m(basis.size(), gens.size());
            for (std::size_t j = 0; j < gens.size(); ++j)
                for (std::size_t i = 0; i < basis.size(); ++i)
                    m(i, j) = gens[j].second[basis[i]];
            const std::int64_t det = m.determinant();
            if (det != 1 && det != -1)
                return fail(3, "dimension " + std::to_string(q) + ": candidate classes have determinant " +
                                   std::to_string(det));
        }

        for (const auto& cell : e.cells[static_cast<std::size_t>(q)]) {
            std::optional<std::map<Name, std::int64_t>> coords;
            try {
                coords = monoid_coordinates(lambda.class_of(cell), gens);
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::ambiguous)
                    throw;
                return fail(4, "ambiguous coordinates for " + lambda.name_of(cell));
            }
            if (!coords)
                return fail(4, "class of " + lambda.name_of(cell) + " is not a non-negative combination");
        }
    }
    return {};
}

EquivalenceReport compare_by_names(const Adc& expected, const Adc& actual)
{
    EquivalenceReport report;
    const int top = std::max(expected.top_degree(), actual.top_degree());
    for (int q = 0; q <= top; ++q) {
        const auto& want = expected.basis(q);
        const auto& got = actual.basis(q);
        if (NameSet(want.begin(), want.end()) != NameSet(got.begin(), got.end())) {
            for (const auto& name : want)
                if (std::find(got.begin(), got.end(), name) == got.end()) {
                    report.mismatch = name;
                    break;
                }
            if (!report.mismatch)
                for (const auto& name : got)
                    if (std::find(want.begin(), want.end(), name) == want.end()) {
                        report.mismatch = name;
                        break;
                    }
            report.message = "basis differs in degree " + std::to_string(q) + " at " + *report.mismatch;
            return report;
        }
        for (const auto& name : want) {
            if (expected.boundary(name) != actual.boundary(name)) {
                report.mismatch = name;
                report.message = "boundary of " + name + ": expected " + expected.boundary(name).to_string() +
                                 ", got " + actual.boundary(name).to_string();
                return report;
            }
            if (q == 0 && expected.augmentation(name) != actual.augmentation(name)) {
                report.mismatch = name;
                report.message = "augmentation of " + name + ": expected " +
                                 std::to_string(expected.augmentation(name)) + ", got " +
                                 std::to_string(actual.augmentation(name));
                return report;
            }
        }
    }
    report.ok = true;
    report.message = "isomorphic by atom names";
    return report;
}

EquivalenceReport verify_equivalence(const Adc& complex, const EnumerationCaps& caps, Execution exec)
{
    if (!is_strong_steiner_complex(complex))
        return {false, std::nullopt, "not strong Steiner"};
    auto e = enumerate_nu(complex, complex.top_degree(), caps, exec);
    auto lambda = lambda_of_enumerated(e);
    return compare_by_names(complex, lambda.complex);
}

} // namespace steiner
