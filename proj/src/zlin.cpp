#include "steiner/zlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace steiner {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(ErrorKind::overflow, "integer addition out of 64-bit range");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Error(ErrorKind::overflow, "integer subtraction out of 64-bit range");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorKind::overflow, "integer multiplication out of 64-bit range");
    return r;
}

namespace {

std::int64_t checked_abs(std::int64_t a)
{
    return a < 0 ? checked_sub(0, a) : a;
}

std::vector<Name> index_names(std::size_t n)
{
    std::vector<Name> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return names;
}

} // namespace

// ---------------------------------------------------------------- IntVector

IntVector::IntVector(std::initializer_list<std::pair<const Name, std::int64_t>> init)
{
    for (const auto& [name, value] : init)
        add_to(name, value);
}

std::int64_t IntVector::operator[](const Name& name) const
{
    auto it = entries_.find(name);
    return it == entries_.end() ? 0 : it->second;
}

void IntVector::set(const Name& name, std::int64_t value)
{
    if (value == 0)
        entries_.erase(name);
    else
        entries_[name] = value;
}

void IntVector::add_to(const Name& name, std::int64_t delta)
{
    if (delta == 0)
        return;
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        entries_.emplace(name, delta);
        return;
    }
    it->second = checked_add(it->second, delta);
    if (it->second == 0)
        entries_.erase(it);
}

bool IntVector::is_nonnegative() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second > 0; });
}

std::int64_t IntVector::l1_norm() const
{
    std::int64_t total = 0;
    for (const auto& [name, value] : entries_)
        total = checked_add(total, checked_abs(value));
    return total;
}

std::int64_t IntVector::max_abs() const
{
    std::int64_t m = 0;
    for (const auto& [name, value] : entries_)
        m = std::max(m, checked_abs(value));
    return m;
}

NameSet IntVector::support() const
{
    NameSet s;
    for (const auto& [name, value] : entries_)
        s.insert(name);
    return s;
}

IntVector& IntVector::operator+=(const IntVector& other)
{
    for (const auto& [name, value] : other.entries_)
        add_to(name, value);
    return *this;
}

IntVector& IntVector::operator-=(const IntVector& other)
{
    for (const auto& [name, value] : other.entries_)
        add_to(name, checked_sub(0, value));
    return *this;
}

IntVector IntVector::operator-() const
{
    return scaled(-1);
}

IntVector IntVector::scaled(std::int64_t factor) const
{
    IntVector out;
    if (factor == 0)
        return out;
    for (const auto& [name, value] : entries_)
        out.entries_.emplace(name, checked_mul(value, factor));
    return out;
}

std::string IntVector::to_string() const
{
    if (entries_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, value] : entries_) {
        if (value < 0)
            os << (first ? "-" : " - ");
        else if (!first)
            os << " + ";
        std::int64_t mag = value < 0 ? -value : value;
        if (mag != 1)
            os << mag << "*";
        os << name;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::vector<Name> rows, std::vector<Name> cols)
    : row_names_(std::move(rows)), col_names_(std::move(cols)), data_(row_names_.size() * col_names_.size(), 0)
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : IntMatrix(index_names(rows), index_names(cols)) {}

IntMatrix IntMatrix::identity(const std::vector<Name>& names)
{
    IntMatrix m(names, names);
    for (std::size_t i = 0; i < names.size(); ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    return identity(index_names(n));
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows)
{
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != ncols)
            throw Error(ErrorKind::dim, "ragged matrix rows");
        for (std::size_t c = 0; c < ncols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

std::map<std::pair<Name, Name>, std::int64_t> IntMatrix::entries() const
{
    std::map<std::pair<Name, Name>, std::int64_t> out;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (auto v = (*this)(r, c); v != 0)
                out.emplace(std::pair{row_names_[r], col_names_[c]}, v);
    return out;
}

IntVector IntMatrix::row_vector(std::size_t r) const
{
    IntVector v;
    for (std::size_t c = 0; c < cols(); ++c)
        v.set(col_names_[c], (*this)(r, c));
    return v;
}

IntVector IntMatrix::column_vector(std::size_t c) const
{
    IntVector v;
    for (std::size_t r = 0; r < rows(); ++r)
        v.set(row_names_[r], (*this)(r, c));
    return v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::dim, "matrix product shape mismatch");
    IntMatrix out(a.row_names(), b.col_names());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::int64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    return out;
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    IntVector out;
    for (std::size_t c = 0; c < cols(); ++c) {
        std::int64_t x = v[col_names_[c]];
        if (x == 0)
            continue;
        for (std::size_t r = 0; r < rows(); ++r)
            if ((*this)(r, c) != 0)
                out.add_to(row_names_[r], checked_mul((*this)(r, c), x));
    }
    return out;
}

std::int64_t IntMatrix::determinant() const
{
    if (!is_square())
        throw Error(ErrorKind::dim, "determinant of a non-square matrix");
    const std::size_t n = rows();
    if (n == 0)
        return 1;
    std::vector<std::int64_t> m(data_);
    auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return m[r * n + c]; };
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(at(k, c), at(swap_row, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                at(i, j) = checked_sub(checked_mul(at(i, j), at(k, k)), checked_mul(at(i, k), at(k, j))) / prev;
        prev = at(k, k);
    }
    return checked_mul(sign, at(n - 1, n - 1));
}

bool IntMatrix::same_values(const IntMatrix& other) const
{
    return rows() == other.rows() && cols() == other.cols() && data_ == other.data_;
}

// ---------------------------------------------------------------- Smith form

namespace {

/// In-place Smith reduction of `a`. Row operations are mirrored into `u`,
/// column operations into `v` and their inverses (as row operations) into
/// `v_inv`; any of the three may be null.
void reduce_to_smith(IntMatrix& a, IntMatrix* u, IntMatrix* v, IntMatrix* v_inv)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    auto swap_rows = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        if (u)
            for (std::size_t c = 0; c < m; ++c)
                std::swap((*u)(i, c), (*u)(j, c));
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t r = 0; r < m; ++r)
            std::swap(a(r, i), a(r, j));
        if (v)
            for (std::size_t r = 0; r < n; ++r)
                std::swap((*v)(r, i), (*v)(r, j));
        if (v_inv)
            for (std::size_t c = 0; c < n; ++c)
                std::swap((*v_inv)(i, c), (*v_inv)(j, c));
    };
    // row_dst -= q * row_src
    auto axpy_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < n; ++c)
            if (a(src, c) != 0)
                a(dst, c) = checked_sub(a(dst, c), checked_mul(q, a(src, c)));
        if (u)
            for (std::size_t c = 0; c < m; ++c)
                if ((*u)(src, c) != 0)
                    (*u)(dst, c) = checked_sub((*u)(dst, c), checked_mul(q, (*u)(src, c)));
    };
    // col_dst -= q * col_src
    auto axpy_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < m; ++r)
            if (a(r, src) != 0)
                a(r, dst) = checked_sub(a(r, dst), checked_mul(q, a(r, src)));
        if (v)
            for (std::size_t r = 0; r < n; ++r)
                if ((*v)(r, src) != 0)
                    (*v)(r, dst) = checked_sub((*v)(r, dst), checked_mul(q, (*v)(r, src)));
        // inverse of the column operation: row_src += q * row_dst
        if (v_inv)
            for (std::size_t c = 0; c < n; ++c)
                if ((*v_inv)(dst, c) != 0)
                    (*v_inv)(src, c) = checked_add((*v_inv)(src, c), checked_mul(q, (*v_inv)(dst, c)));
    };

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest non-zero |entry| of the trailing block, row-major ties
            std::size_t pr = m, pc = n;
            std::int64_t best = 0;
            for (std::size_t r = t; r < m; ++r)
                for (std::size_t c = t; c < n; ++c) {
                    std::int64_t x = a(r, c);
                    if (x == 0)
                        continue;
                    std::int64_t ax = checked_abs(x);
                    if (pr == m || ax < best) {
                        best = ax;
                        pr = r;
                        pc = c;
                    }
                }
            if (pr == m)
                return;
            swap_rows(t, pr);
            swap_cols(t, pc);

            bool cleared = true;
            const std::int64_t pivot = a(t, t);
            for (std::size_t r = t + 1; r < m; ++r) {
                if (a(r, t) == 0)
                    continue;
                axpy_row(r, t, a(r, t) / pivot);
                if (a(r, t) != 0)
                    cleared = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (a(t, c) == 0)
                    continue;
                axpy_col(c, t, a(t, c) / pivot);
                if (a(t, c) != 0)
                    cleared = false;
            }
            if (!cleared)
                continue;

            // divisibility: fold an offending row into row t and go again
            std::size_t bad_row = m;
            for (std::size_t r = t + 1; r < m && bad_row == m; ++r)
                for (std::size_t c = t + 1; c < n; ++c)
                    if (a(r, c) % pivot != 0) {
                        bad_row = r;
                        break;
                    }
            if (bad_row == m)
                break;
            axpy_row(t, bad_row, -1);
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < n; ++c)
                a(t, c) = checked_sub(0, a(t, c));
            if (u)
                for (std::size_t c = 0; c < m; ++c)
                    (*u)(t, c) = checked_sub(0, (*u)(t, c));
        }
    }
}

std::vector<std::int64_t> diagonal_of(const IntMatrix& d)
{
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        out.push_back(d(i, i));
    return out;
}

} // namespace

std::vector<std::int64_t> SmithDecomposition::invariant_factors() const
{
    std::vector<std::int64_t> out;
    for (auto x : diagonal_of(D))
        if (x != 0)
            out.push_back(x);
    return out;
}

std::size_t SmithDecomposition::rank() const
{
    return invariant_factors().size();
}

SmithDecomposition smith_normal_form(const IntMatrix& a)
{
    SmithDecomposition s{IntMatrix::identity(a.row_names()), a, IntMatrix::identity(a.col_names())};
    reduce_to_smith(s.D, &s.U, &s.V, nullptr);
    return s;
}

std::vector<std::int64_t> smith_diagonal(const IntMatrix& a)
{
    IntMatrix d = a;
    reduce_to_smith(d, nullptr, nullptr, nullptr);
    return diagonal_of(d);
}

// ------------------------------------------------------- monoid coordinates

namespace {

struct CoordinateSearch {
    const std::vector<std::pair<Name, IntVector>>& gens;
    bool all_nonnegative;
    std::int64_t total_bound;
    std::vector<NameSet> covered_from; // support of gens[i..]
    std::vector<std::int64_t> coeffs;
    std::vector<std::vector<std::int64_t>> solutions;

    void run(std::size_t idx, const IntVector& residual, std::int64_t total)
    {
        if (solutions.size() >= 2)
            return;
        for (const auto& [name, value] : residual)
            if (!covered_from[idx].contains(name))
                return;
        if (idx == gens.size()) {
            solutions.push_back(coeffs);
            return;
        }
        const IntVector& g = gens[idx].second;
        IntVector r = residual;
        for (std::int64_t c = 0; total + c <= total_bound; ++c) {
            // with non-negative generators the residual can only shrink
            if (all_nonnegative && !r.is_nonnegative())
                break;
            coeffs[idx] = c;
            run(idx + 1, r, total + c);
            if (solutions.size() >= 2)
                break;
            r -= g;
        }
        coeffs[idx] = 0;
    }
};

} // namespace

std::optional<std::map<Name, std::int64_t>> monoid_coordinates(
    const IntVector& v, const std::vector<std::pair<Name, IntVector>>& gens)
{
    std::vector<std::pair<Name, IntVector>> nonzero;
    bool has_zero_gen = false;
    for (const auto& g : gens) {
        if (g.second.is_zero())
            has_zero_gen = true;
        else
            nonzero.push_back(g);
    }
    bool all_nonneg = std::all_of(nonzero.begin(), nonzero.end(), [](const auto& g) { return g.second.is_nonnegative(); });

    CoordinateSearch search{nonzero, all_nonneg, v.l1_norm(), {}, std::vector<std::int64_t>(nonzero.size(), 0), {}};
    search.covered_from.resize(nonzero.size() + 1);
    for (std::size_t i = nonzero.size(); i-- > 0;) {
        search.covered_from[i] = search.covered_from[i + 1];
        for (const auto& [name, value] : nonzero[i].second)
            search.covered_from[i].insert(name);
    }
    search.run(0, v, 0);

    if (search.solutions.empty())
        return std::nullopt;
    if (search.solutions.size() > 1 || has_zero_gen)
        throw Error(ErrorKind::ambiguous, "two distinct N-combinations give " + v.to_string());
    std::map<Name, std::int64_t> out;
    for (const auto& g : gens)
        out[g.first] = 0;
    for (std::size_t i = 0; i < nonzero.size(); ++i)
        out[nonzero[i].first] = search.solutions.front()[i];
    return out;
}

// ------------------------------------------------------------ free quotient

IntVector QuotientBasis::project(const IntVector& v) const
{
    return projection.apply(v);
}

namespace {

/// Columns with all invariant factors equal to 1 span a direct summand.
bool is_primitive(const IntMatrix& cols)
{
    auto diag = smith_diagonal(cols);
    if (diag.size() < cols.cols())
        return false;
    return std::all_of(diag.begin(), diag.end(), [](std::int64_t d) { return d == 1; });
}

IntMatrix select_columns(const IntMatrix& m, const std::vector<std::size_t>& which)
{
    IntMatrix out(m.rows(), which.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < which.size(); ++k)
            out(r, k) = m(r, which[k]);
    return out;
}

} // namespace

QuotientBasis quotient_free_basis(const std::vector<Name>& ambient, const std::vector<IntVector>& relations)
{
    const std::size_t n = ambient.size();
    std::map<Name, std::size_t> index;
    for (std::size_t j = 0; j < n; ++j)
        index.emplace(ambient[j], j);
    IntMatrix rel(relations.size(), n);
    for (std::size_t r = 0; r < relations.size(); ++r) {
        for (const auto& [name, value] : relations[r]) {
            auto it = index.find(name);
            if (it == index.end())
                throw Error(ErrorKind::schema, "relation references unknown generator " + name);
            rel(r, it->second) = value;
        }
    }

    IntMatrix v = IntMatrix::identity(n);
    IntMatrix v_inv = IntMatrix::identity(n);
    reduce_to_smith(rel, nullptr, &v, &v_inv);

    std::size_t rank = 0;
    for (std::size_t i = 0; i < std::min(rel.rows(), rel.cols()); ++i) {
        std::int64_t d = rel(i, i);
        if (d == 0)
            break;
        if (d != 1)
            throw Error(ErrorKind::torsion, "quotient has invariant factor " + std::to_string(d));
        ++rank;
    }

    // Free coordinates are columns rank..n-1 of V.
    const std::size_t free_rank = n - rank;
    IntMatrix raw(free_rank, n);
    for (std::size_t i = 0; i < free_rank; ++i)
        for (std::size_t j = 0; j < n; ++j)
            raw(i, j) = v(j, rank + i);

    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < n && chosen.size() < free_rank; ++j) {
        bool nonzero = false;
        for (std::size_t i = 0; i < free_rank; ++i)
            nonzero = nonzero || raw(i, j) != 0;
        if (!nonzero)
            continue;
        auto trial = chosen;
        trial.push_back(j);
        if (is_primitive(select_columns(raw, trial)))
            chosen = std::move(trial);
    }

    QuotientBasis out;
    if (chosen.size() == free_rank) {
        IntMatrix m = select_columns(raw, chosen);
        SmithDecomposition s = smith_normal_form(m); // U m V = I
        IntMatrix m_inv = s.V * s.U;
        IntMatrix p = m_inv * raw;
        for (std::size_t k : chosen) {
            out.basis.push_back(ambient[k]);
            out.section.push_back(IntVector::unit(ambient[k]));
        }
        out.projection = IntMatrix(out.basis, ambient);
        for (std::size_t i = 0; i < free_rank; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out.projection(i, j) = p(i, j);
        return out;
    }

    for (std::size_t i = 0; i < free_rank; ++i) {
        out.basis.push_back("q" + std::to_string(i));
        IntVector sec;
        for (std::size_t j = 0; j < n; ++j)
            sec.set(ambient[j], v_inv(rank + i, j));
        out.section.push_back(std::move(sec));
    }
    out.projection = IntMatrix(out.basis, ambient);
    for (std::size_t i = 0; i < free_rank; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.projection(i, j) = raw(i, j);
    return out;
}

} // namespace steiner
