#include "steiner/nu.hpp"

#include <algorithm>
#include <exception>

namespace steiner {

TableCheck is_valid_table(const Adc& complex, const NuTable& t)
{
    const int q = t.dim();
    if (q < 0)
        return {false, 1, 0};
    for (int p = 0; p <= q; ++p) {
        for (Sign s : {Sign::minus, Sign::plus}) {
            const IntVector& x = t.row(p)[s];
            if (!x.is_nonnegative() || !complex.is_chain_of_degree(x, p))
                return {false, 1, p};
        }
    }
    for (int p = 1; p <= q; ++p) {
        IntVector expected = t.row(p - 1).plus - t.row(p - 1).minus;
        for (Sign s : {Sign::minus, Sign::plus})
            if (complex.differential(t.row(p)[s], p) != expected)
                return {false, 2, p};
    }
    for (Sign s : {Sign::minus, Sign::plus})
        if (complex.augment(t.row(0)[s]) != 1)
            return {false, 3, 0};
    if (t.row(q).minus != t.row(q).plus)
        return {false, 4, q};
    return {};
}

NuTable point(const Name& name)
{
    auto v = IntVector::unit(name);
    return NuTable{{TableRow{v, v}}};
}

NuTable face(const NuTable& t, int p, Sign sign)
{
    if (p < 0 || p >= t.dim())
        throw Error(ErrorKind::dim, "face level " + std::to_string(p) + " out of range for a " +
                                        std::to_string(t.dim()) + "-cell");
    NuTable out;
    out.rows.assign(t.rows.begin(), t.rows.begin() + p);
    const IntVector& x = t.row(p)[sign];
    out.rows.push_back({x, x});
    return out;
}

bool composable(const NuTable& x, const NuTable& y, int p)
{
    if (x.dim() != y.dim() || p < 0 || p >= x.dim())
        return false;
    if (x.row(p).plus != y.row(p).minus)
        return false;
    for (int r = 0; r < p; ++r)
        if (x.row(r) != y.row(r))
            return false;
    return true;
}

NuTable compose(const NuTable& x, const NuTable& y, int p)
{
    if (!composable(x, y, p))
        throw Error(ErrorKind::not_composable, "target_" + std::to_string(p) + " of the first cell differs from source_" +
                                                   std::to_string(p) + " of the second");
    NuTable out;
    out.rows.reserve(x.rows.size());
    for (int r = 0; r < p; ++r)
        out.rows.push_back(x.row(r));
    out.rows.push_back({x.row(p).minus, y.row(p).plus});
    for (int r = p + 1; r <= x.dim(); ++r)
        out.rows.push_back({x.row(r).minus + y.row(r).minus, x.row(r).plus + y.row(r).plus});
    return out;
}

NuTable identity(const NuTable& t)
{
    NuTable out = t;
    out.rows.push_back({});
    return out;
}

NuTable identity_to(const NuTable& t, int dim)
{
    NuTable out = t;
    while (out.dim() < dim)
        out.rows.push_back({});
    return out;
}

bool is_identity(const NuTable& t)
{
    return t.dim() > 0 && t.top().is_zero();
}

// ------------------------------------------------------------- enumeration

std::size_t EnumeratedOmegaCat::cell_count() const
{
    std::size_t n = 0;
    for (const auto& level : cells)
        n += level.size();
    return n;
}

std::size_t EnumeratedOmegaCat::nontrivial_count(int q) const
{
    if (q < 0 || static_cast<std::size_t>(q) >= cells.size())
        return 0;
    return static_cast<std::size_t>(std::count_if(cells[static_cast<std::size_t>(q)].begin(),
                                                  cells[static_cast<std::size_t>(q)].end(),
                                                  [](const NuTable& t) { return !is_identity(t); }));
}

bool EnumeratedOmegaCat::contains(const NuTable& t) const
{
    int q = t.dim();
    return q >= 0 && static_cast<std::size_t>(q) < cells.size() && cells[static_cast<std::size_t>(q)].contains(t);
}

std::vector<NuTable> EnumeratedOmegaCat::atoms(int q) const
{
    std::vector<NuTable> out;
    for (const auto& name : source.basis(q))
        out.push_back(atom_table(source, name));
    return out;
}

namespace {

std::int64_t max_coefficient(const NuTable& t)
{
    std::int64_t m = 0;
    for (const auto& r : t.rows)
        m = std::max({m, r.minus.max_abs(), r.plus.max_abs()});
    return m;
}

class CapGuard {
public:
    explicit CapGuard(const EnumerationCaps& caps) : caps_(caps) {}

    void admit(const NuTable& t)
    {
        if (++count_ > caps_.max_cells)
            throw Error(ErrorKind::enum_cap, "more than " + std::to_string(caps_.max_cells) + " cells");
        if (max_coefficient(t) > caps_.max_coeff)
            throw Error(ErrorKind::enum_cap, "coefficient above " + std::to_string(caps_.max_coeff) + " in\n" +
                                                 t.to_string());
    }

private:
    const EnumerationCaps& caps_;
    std::size_t count_ = 0;
};

void composites_of(const NuTable& c, const std::vector<NuTable>& known, std::vector<NuTable>& out)
{
    const int q = c.dim();
    for (const auto& d : known)
        for (int p = 0; p < q; ++p) {
            if (composable(c, d, p))
                out.push_back(compose(c, d, p));
            if (composable(d, c, p))
                out.push_back(compose(d, c, p));
        }
}

// Worklist closure: every pair is examined when its later member is popped.
void close_level_serial(std::set<NuTable>& level, std::vector<NuTable> frontier, CapGuard& guard)
{
    std::vector<NuTable> known(level.begin(), level.end());
    std::vector<NuTable> found;
    while (!frontier.empty()) {
        NuTable c = std::move(frontier.back());
        frontier.pop_back();
        found.clear();
        composites_of(c, known, found);
        for (auto& t : found) {
            if (level.contains(t))
                continue;
            guard.admit(t);
            level.insert(t);
            known.push_back(t);
            frontier.push_back(std::move(t));
        }
    }
}

// Round-based closure: the frontier's composites with everything known are
// computed in parallel, then merged in frontier order.
void close_level_parallel(std::set<NuTable>& level, std::vector<NuTable> frontier, CapGuard& guard)
{
    std::vector<NuTable> known(level.begin(), level.end());
    while (!frontier.empty()) {
        const auto n = static_cast<std::ptrdiff_t>(frontier.size());
        std::vector<std::vector<NuTable>> results(frontier.size());
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                composites_of(frontier[static_cast<std::size_t>(i)], known, results[static_cast<std::size_t>(i)]);
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);

        std::vector<NuTable> next;
        for (auto& batch : results)
            for (auto& t : batch) {
                if (level.contains(t))
                    continue;
                guard.admit(t);
                level.insert(t);
                next.push_back(t);
            }
        known.insert(known.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
}

} // namespace

std::vector<std::set<NuTable>> close_under_operations(const std::vector<NuTable>& seeds, int max_dim,
                                                      const EnumerationCaps& caps, Execution exec)
{
    std::vector<std::set<NuTable>> cells(static_cast<std::size_t>(std::max(max_dim, -1) + 1));
    CapGuard guard(caps);
    for (int q = 0; q <= max_dim; ++q) {
        auto& level = cells[static_cast<std::size_t>(q)];
        std::vector<NuTable> frontier;
        auto admit = [&](NuTable t) {
            if (level.contains(t))
                return;
            guard.admit(t);
            level.insert(t);
            frontier.push_back(std::move(t));
        };
        for (const auto& s : seeds)
            if (s.dim() == q)
                admit(s);
        if (q > 0)
            for (const auto& lower : cells[static_cast<std::size_t>(q) - 1])
                admit(identity(lower));
        if (exec == Execution::parallel)
            close_level_parallel(level, std::move(frontier), guard);
        else
            close_level_serial(level, std::move(frontier), guard);
    }
    return cells;
}

EnumeratedOmegaCat enumerate_nu(const Adc& complex, int max_dim, const EnumerationCaps& caps, Execution exec)
{
    EnumeratedOmegaCat e;
    e.source = complex;
    e.max_dim = max_dim;
    std::vector<NuTable> seeds;
    for (int q = 0; q <= std::min(max_dim, complex.top_degree()); ++q)
        for (const auto& name : complex.basis(q)) {
            auto atom = atom_table(complex, name);
            e.atom_names.emplace(atom, name);
            seeds.push_back(std::move(atom));
        }
    e.cells = close_under_operations(seeds, max_dim, caps, exec);
    return e;
}

// ------------------------------------------------------------- brute force

namespace {

/// All N-combinations of `names` with coefficients in [0, cap].
std::vector<IntVector> bounded_chains(const std::vector<Name>& names, std::int64_t cap)
{
    std::vector<IntVector> out;
    std::vector<std::int64_t> digits(names.size(), 0);
    for (;;) {
        IntVector v;
        for (std::size_t i = 0; i < names.size(); ++i)
            v.set(names[i], digits[i]);
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == cap)
            digits[i++] = 0;
        if (i == digits.size())
            break;
        ++digits[i];
    }
    return out;
}

bool within_cap(const IntVector& v, std::int64_t cap)
{
    return std::all_of(v.begin(), v.end(), [cap](const auto& e) { return e.second >= 0 && e.second <= cap; });
}

struct TableSearch {
    const Adc& complex;
    std::int64_t cap;
    const std::vector<std::vector<IntVector>>& candidates; // by degree

    // rows[p+1..q] are fixed; fill row p.
    void descend(NuTable& t, int p, std::vector<NuTable>& out) const
    {
        if (p < 0) {
            out.push_back(t);
            return;
        }
        const auto& above = t.rows[static_cast<std::size_t>(p) + 1];
        IntVector d_minus = complex.differential(above.minus, p + 1);
        IntVector d_plus = complex.differential(above.plus, p + 1);
        if (d_minus != d_plus)
            return;
        for (const auto& lower : candidates[static_cast<std::size_t>(p)]) {
            IntVector upper = lower + d_minus;
            if (!within_cap(upper, cap))
                continue;
            if (p == 0 && (complex.augment(lower) != 1 || complex.augment(upper) != 1))
                continue;
            t.rows[static_cast<std::size_t>(p)] = {lower, upper};
            descend(t, p - 1, out);
        }
        t.rows[static_cast<std::size_t>(p)] = {};
    }
};

} // namespace

std::set<NuTable> brute_force_nu(const Adc& complex, int q, std::int64_t coeff_cap, Execution exec)
{
    std::vector<std::vector<IntVector>> candidates;
    for (int p = 0; p <= q; ++p)
        candidates.push_back(bounded_chains(complex.basis(p), coeff_cap));
    TableSearch search{complex, coeff_cap, candidates};

    const auto& tops = candidates[static_cast<std::size_t>(q)];
    std::vector<std::vector<NuTable>> found(tops.size());
    const auto n = static_cast<std::ptrdiff_t>(tops.size());
    auto run_one = [&](std::size_t i) {
        NuTable t;
        t.rows.resize(static_cast<std::size_t>(q) + 1);
        t.rows.back() = {tops[i], tops[i]};
        if (q == 0) {
            if (complex.augment(tops[i]) == 1)
                found[i].push_back(t);
            return;
        }
        search.descend(t, q - 1, found[i]);
    };

    if (exec == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            try {
                run_one(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!failure)
                    failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (std::size_t i = 0; i < tops.size(); ++i)
            run_one(i);
    }

    std::set<NuTable> out;
    for (auto& batch : found)
        out.insert(batch.begin(), batch.end());
    return out;
}

// --------------------------------------------------------- indecomposables

std::vector<std::set<NuTable>> indecomposables(const EnumeratedOmegaCat& e)
{
    std::vector<std::set<NuTable>> out(e.cells.size());
    for (std::size_t q = 0; q < e.cells.size(); ++q) {
        const auto& level = e.cells[q];
        if (q == 0) {
            out[0] = level;
            continue;
        }
        std::map<IntVector, std::vector<const NuTable*>> by_top;
        for (const auto& t : level)
            by_top[t.top()].push_back(&t);

        for (const auto& t : level) {
            if (is_identity(t))
                continue;
            // a factor equal to t itself means the other one is a unit
            bool decomposable = false;
            for (const auto& [u_top, us] : by_top) {
                IntVector rest = t.top() - u_top;
                if (!rest.is_nonnegative())
                    continue;
                auto vs = by_top.find(rest);
                if (vs == by_top.end())
                    continue;
                for (const NuTable* u : us) {
                    if (*u == t)
                        continue;
                    for (const NuTable* v : vs->second) {
                        if (*v == t)
                            continue;
                        for (int p = 0; p < static_cast<int>(q) && !decomposable; ++p)
                            decomposable = composable(*u, *v, p) && compose(*u, *v, p) == t;
                    }
                    if (decomposable)
                        break;
                }
                if (decomposable)
                    break;
            }
            if (!decomposable)
                out[q].insert(t);
        }
    }
    return out;
}

} // namespace steiner
