#include "arrlab/subspace.hpp"

#include <algorithm>

namespace arrlab {

namespace {

std::size_t pivot_of(const IntVec& row, std::size_t ambient) {
    std::size_t p = 0;
    while (p < ambient && row[p] == 0)
        ++p;
    return p;
}

// row <- row * a - other * b, then primitive
void combine(IntVec& row, Int a, const IntVec& other, Int b) {
    for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = narrow(static_cast<__int128>(row[i]) * a - static_cast<__int128>(other[i]) * b);
    make_primitive(row);
}

enum class AddResult { Added, Redundant, Inconsistent };

void reduce(const std::vector<IntVec>& rows, std::size_t ambient, IntVec& row) {
    for (const IntVec& r : rows) {
        std::size_t p = pivot_of(r, ambient);
        if (row[p] != 0)
            combine(row, r[p], r, row[p]);
    }
}

bool reduces_to_zero(const std::vector<IntVec>& rows, std::size_t ambient, IntVec row) {
    reduce(rows, ambient, row);
    return std::all_of(row.begin(), row.end(), [](Int x) { return x == 0; });
}

AddResult reduce_and_insert(std::vector<IntVec>& rows, std::size_t ambient, IntVec row) {
    reduce(rows, ambient, row);
    std::size_t q = pivot_of(row, ambient);
    if (q == ambient)
        return row[ambient] == 0 ? AddResult::Redundant : AddResult::Inconsistent;
    make_primitive(row);
    if (row[q] < 0)
        for (Int& x : row)
            x = -x;
    for (IntVec& r : rows)
        if (r[q] != 0)
            combine(r, row[q], row, r[q]);
    auto pos = std::find_if(rows.begin(), rows.end(), [&](const IntVec& r) { return pivot_of(r, ambient) > q; });
    rows.insert(pos, std::move(row));
    return AddResult::Added;
}

IntVec as_row(const Hyperplane& h) {
    IntVec row = h.normal;
    row.push_back(h.offset);
    return row;
}

} // namespace

bool Subspace::add_row(IntVec row) {
    return reduce_and_insert(rows_, ambient_, std::move(row)) != AddResult::Inconsistent;
}

std::optional<Subspace> Subspace::solve(std::size_t ambient, const std::vector<Hyperplane>& eqs) {
    Subspace s(ambient);
    for (const Hyperplane& h : eqs)
        if (!s.add_row(as_row(h)))
            return std::nullopt;
    return s;
}

std::vector<std::size_t> Subspace::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const IntVec& r : rows_)
        out.push_back(pivot_of(r, ambient_));
    return out;
}

std::vector<std::size_t> Subspace::parameters() const {
    std::vector<std::size_t> piv = pivots();
    std::vector<std::size_t> out;
    for (std::size_t i = 0, k = 0; i < ambient_; ++i) {
        if (k < piv.size() && piv[k] == i)
            ++k;
        else
            out.push_back(i);
    }
    return out;
}

std::optional<Subspace> Subspace::meet(const Hyperplane& h) const {
    Subspace s = *this;
    if (!s.add_row(as_row(h)))
        return std::nullopt;
    return s;
}

std::optional<Subspace> Subspace::meet(const Subspace& other) const {
    Subspace s = *this;
    for (const IntVec& r : other.rows_)
        if (!s.add_row(r))
            return std::nullopt;
    return s;
}

bool Subspace::inside(const Hyperplane& h) const { return reduces_to_zero(rows_, ambient_, as_row(h)); }

bool Subspace::inside(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [&](const IntVec& r) { return reduces_to_zero(rows_, ambient_, r); });
}

Subspace::Trace Subspace::trace(const Hyperplane& h) const {
    std::vector<std::size_t> params = parameters();
    std::vector<std::size_t> piv = pivots();
    RatVec coeffs;
    coeffs.reserve(params.size());
    for (std::size_t f : params) {
        Rational c = h.normal[f];
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (h.normal[piv[r]] != 0 && rows_[r][f] != 0)
                c -= Rational(h.normal[piv[r]]) * Rational(rows_[r][f], rows_[r][piv[r]]);
        coeffs.push_back(c);
    }
    Rational offset = h.offset;
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (h.normal[piv[r]] != 0 && rows_[r][ambient_] != 0)
            offset -= Rational(h.normal[piv[r]]) * Rational(rows_[r][ambient_], rows_[r][piv[r]]);
    bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c.is_zero(); });
    if (zero)
        return {offset.is_zero() ? Incidence::Contains : Incidence::Disjoint, {}};
    return {Incidence::Cuts, normalize(coeffs, offset)};
}

Hyperplane Subspace::lift(const Hyperplane& h) const {
    std::vector<std::size_t> params = parameters();
    IntVec n(ambient_, 0);
    for (std::size_t k = 0; k < params.size(); ++k)
        n[params[k]] = h.normal[k];
    return normalize(std::move(n), h.offset);
}

Subspace Subspace::lift(const Subspace& inner) const {
    Subspace s = *this;
    for (const Hyperplane& h : inner.equations())
        s.add_row(as_row(lift(h)));
    return s;
}

std::vector<Hyperplane> Subspace::equations() const {
    std::vector<Hyperplane> out;
    out.reserve(rows_.size());
    for (const IntVec& r : rows_)
        out.push_back(Hyperplane{IntVec(r.begin(), r.end() - 1), r.back()});
    return out;
}

std::size_t SubspaceHash::operator()(const Subspace& s) const noexcept {
    std::size_t h = s.ambient();
    for (const IntVec& r : s.rows())
        h = hash_ints(r, h);
    return h;
}

} // namespace arrlab
