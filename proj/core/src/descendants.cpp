#include "arrlab/descendants.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <iterator>
#include <fmt/format.h>

namespace arrlab {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

// x_var = c z in the cone of an arrangement in R^{dim - 1}.
Hyperplane level_cut(std::size_t dim, std::size_t var, Int c) {
    IntVec v(dim, 0);
    v[var] = 1;
    v[dim - 1] = -c;
    return normalize(std::move(v), 0);
}

// x_i - x_j = c z.
Hyperplane difference_cut(std::size_t dim, std::size_t i, std::size_t j, Int c) {
    IntVec v(dim, 0);
    v[i] = 1;
    v[j] = -1;
    v[dim - 1] = -c;
    return normalize(std::move(v), 0);
}

std::vector<std::size_t> first_vertices(std::size_t l) {
    std::vector<std::size_t> vars(l);
    for (std::size_t i = 0; i < l; ++i)
        vars[i] = i;
    return vars;
}

// The H-family recursion on the variables `vars`, in the cone of R^{dim - 1}.
std::vector<Hyperplane> h_cuts(std::vector<std::size_t> vars, std::size_t dim, std::size_t p, Int m, Int a,
                               Int n) {
    std::vector<Hyperplane> cuts;
    while (vars.size() > 1) {
        const std::size_t l = vars.size();
        if (p == l && m > 0) {
            p = 0;
            m -= 1;
            continue;
        }
        if (p == l) {
            cuts.push_back(level_cut(dim, vars.back(), n * a - 1));
            n += 1;
            vars.pop_back();
            p = l - 1;
            continue;
        }
        cuts.push_back(level_cut(dim, vars[p], -(m + 1)));
        vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(p));
        m += a;
    }
    return cuts;
}

std::vector<Hyperplane> e_cuts(std::vector<std::size_t> vars, std::size_t dim, std::size_t p, Int n, Int a,
                               Int m) {
    std::vector<Hyperplane> cuts;
    while (vars.size() > 1) {
        if (p == 0) {
            p = vars.size();
            m += 1;
        }
        cuts.push_back(level_cut(dim, vars.front(), -n * a));
        vars.erase(vars.begin());
        p -= 1;
        n += 1;
    }
    return cuts;
}

std::optional<AccuracyWitness> checked(const Arrangement& a, const std::vector<Hyperplane>& cuts,
                                       const SearchOptions& options) {
    auto w = witness_from_cuts(a, cuts, WitnessKind::IndFlag, options);
    if (!w || !check_witness(a, *w, nullptr, options))
        return std::nullopt;
    return w;
}

// Lower end c_i and upper end d_i of the origin weights.
Int catalan_upper(const DescendantSpec& s, std::size_t i) { return i < s.p ? s.m : s.m + 1; }
Int shi_lower(const DescendantSpec& s, std::size_t i) { return i < s.p ? -s.m : -s.m - 1; }

} // namespace

std::string_view genealogy_name(Genealogy g) { return g == Genealogy::Shi ? "shi" : "catalan"; }

std::optional<Genealogy> genealogy_from_name(std::string_view name) {
    if (name == "shi")
        return Genealogy::Shi;
    if (name == "catalan")
        return Genealogy::Catalan;
    return std::nullopt;
}

std::string to_string(const DescendantSpec& s) {
    if (s.genealogy == Genealogy::Shi)
        return fmt::format("shi(l={}, p={}, k={}, m={}, d={})", s.l, s.p, s.k, s.m, s.d);
    return fmt::format("{}(l={}, p={}, k={}, c={}, m={})", s.hat ? "catalan-hat" : "catalan", s.l, s.p, s.k, s.c,
                       s.m);
}

void validate(const DescendantSpec& s) {
    auto fail = [&](std::string_view why) { throw InputError(fmt::format("{}: {}", to_string(s), why)); };
    if (s.l < 1)
        fail("needs l >= 1");
    if (s.p > s.l)
        fail("needs p <= l");
    if (s.k < 1 || s.k > s.l)
        fail("needs 1 <= k <= l");
    if (s.genealogy == Genealogy::Shi) {
        if (s.hat)
            fail("hat cells exist only in the Catalan genealogy");
        if (s.m < 0 || s.d < 0)
            fail("needs m, d >= 0");
        return;
    }
    if (s.hat && s.k > s.l - 1)
        fail("hat cells need k <= l - 1");
    if (s.c < 1 || s.m < 0)
        fail("needs c >= 1 and m >= 0");
}

WeightedDigraph descendant_digraph(const DescendantSpec& s) {
    validate(s);
    WeightedDigraph g;
    g.n = s.l;
    const std::size_t l = s.l, k = s.k;
    if (s.genealogy == Genealogy::Shi) {
        for (std::size_t i = 0; i + k < l; ++i)
            for (std::size_t j = i + 1; j + k <= l; ++j)
                g.arcs.insert({i, j});
        for (std::size_t i = 0; i < l; ++i) {
            const Int low = as_int(std::min(l - i, k));
            g.weights.push_back(VertexWeight::interval(1 - low + shi_lower(s, i), s.d));
        }
        return g;
    }
    if (!s.hat) {
        for (std::size_t i = 0; i + k <= l; ++i)
            for (std::size_t j = 0; j + k <= l; ++j)
                if (i != j)
                    g.arcs.insert({i, j});
        for (std::size_t i = 0; i < l; ++i) {
            const Int low = as_int(std::min(l - i, k));
            g.weights.push_back(VertexWeight::interval(1 - low - s.c, catalan_upper(s, i) + low - 1));
        }
        return g;
    }
    const std::size_t top = l - k; // vertices 0..top-1 form a complete digraph, top is a source
    for (std::size_t i = 0; i < top; ++i) {
        for (std::size_t j = 0; j < top; ++j)
            if (i != j)
                g.arcs.insert({i, j});
        g.arcs.insert({top, i});
    }
    for (std::size_t i = 0; i < l; ++i) {
        if (i < top)
            g.weights.push_back(VertexWeight::interval(-as_int(k) - s.c, catalan_upper(s, i) + as_int(k) - 1));
        else
            g.weights.push_back(
                VertexWeight::interval(-as_int(l - i) + 1 - s.c, catalan_upper(s, i) + as_int(l - i) - 1));
    }
    return g;
}

WeightedDigraph replay_descendant(const DescendantSpec& s) {
    validate(s);
    DescendantSpec origin = s;
    origin.k = 1;
    origin.hat = false;
    WeightedDigraph g = descendant_digraph(origin);
    for (std::size_t step = 1; step < s.k || (s.hat && step == s.k); ++step) {
        const std::size_t v = s.l - step; // vertex l - step + 1 in the text
        if (s.genealogy == Genealogy::Shi) {
            g = mutate_sink(g, v, v + 1);
            continue;
        }
        g = mutate_sink(g, v, v + 1);
        if (s.hat && step == s.k)
            break;
        g = mutate_source(g, v, v + 1);
    }
    return g;
}

Arrangement build_descendant(const DescendantSpec& s) { return digraphic_arrangement(descendant_digraph(s)); }

std::vector<DescendantSpec> descendant_row(const DescendantSpec& s) {
    validate(s);
    std::vector<DescendantSpec> row;
    for (std::size_t k = 1; k <= s.l; ++k) {
        DescendantSpec cell = s;
        cell.k = k;
        cell.hat = false;
        row.push_back(cell);
        if (s.genealogy == Genealogy::Catalan && k < s.l) {
            cell.hat = true;
            row.push_back(cell);
        }
    }
    return row;
}

Exponents descendant_expected_exponents(const DescendantSpec& s) {
    validate(s);
    const Int l = as_int(s.l), p = as_int(s.p);
    Exponents e{1};
    if (s.genealogy == Genealogy::Shi) {
        for (Int i = 0; i < l; ++i)
            e.push_back(l + s.m + s.d + (i < p ? 0 : 1));
    } else {
        const Int shift = s.m + l + s.c - 1;
        e.push_back(l - p + 1 + shift);
        for (Int i = 2; i <= l; ++i)
            e.push_back(i + shift);
    }
    std::sort(e.begin(), e.end());
    return e;
}

DeformationSpec descendant_origin(const DescendantSpec& s) {
    validate(s);
    DeformationSpec d;
    d.l = s.l;
    d.p = s.p;
    d.a = 1;
    d.m = s.m;
    if (s.genealogy == Genealogy::Shi) {
        d.family = Family::Hfam;
        d.n = s.d + 1;
    } else {
        d.family = Family::Efam;
        d.n = s.c;
    }
    return d;
}

Arrangement shi_ish(std::size_t l, std::size_t k) {
    if (l < 1 || k < 1 || k > l)
        throw InputError(fmt::format("shi-ish needs 1 <= k <= l, got l={}, k={}", l, k));
    k = std::max<std::size_t>(k, 2);
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            hs.push_back(difference_hyperplane(l, i, j, 0));
            if (i + 1 < k)
                hs.push_back(difference_hyperplane(l, 0, j, as_int(i + 1)));
            if (i + 1 >= k)
                hs.push_back(difference_hyperplane(l, i, j, 1));
        }
    return Arrangement(l, std::move(hs));
}

Exponents shi_ish_exponents(std::size_t l) {
    Exponents e{0, 1};
    e.insert(e.end(), l - 1, as_int(l));
    return e;
}

std::vector<Hyperplane> hfam_cuts(std::size_t p, std::size_t l, Int m, Int a, Int n) {
    return h_cuts(first_vertices(l), l + 1, p, m, a, n);
}

std::vector<Hyperplane> efam_cuts(std::size_t p, std::size_t l, Int n, Int a, Int m) {
    return e_cuts(first_vertices(l), l + 1, p, n, a, m);
}

std::vector<Hyperplane> descendant_cuts(const DescendantSpec& s) {
    validate(s);
    const std::size_t l = s.l, k = s.k, dim = l + 1;
    if (s.genealogy == Genealogy::Shi) {
        // The non-isolated part is an H-family origin with m + k - 1 in place of m.
        const std::size_t size = l - k + 1;
        return h_cuts(first_vertices(size), dim, std::min(s.p, size), s.m + as_int(k) - 1, 1, s.d + 1);
    }
    if (!s.hat && k == 1)
        return efam_cuts(s.p, l, s.c, 1, s.m);
    std::vector<Hyperplane> cuts;
    if (!s.hat && k == l) {
        // Nested N-Ish: the lowest weight of vertex i is missing from all later vertices.
        for (std::size_t i = 0; i + 1 < l; ++i)
            cuts.push_back(level_cut(dim, i, -s.c - as_int(l - i) + 1));
        return cuts;
    }
    cuts.push_back(level_cut(dim, 0, (s.hat ? 0 : 1) - s.c - as_int(k)));
    for (std::size_t j = 1; j < l - k; ++j)
        cuts.push_back(difference_cut(dim, j - 1, j, 1));
    return cuts;
}

std::optional<AccuracyWitness> hfam_witness(std::size_t p, std::size_t l, Int m, Int a, Int n,
                                            const SearchOptions& options) {
    DeformationSpec d;
    d.family = Family::Hfam;
    d.p = p;
    d.l = l;
    d.m = m;
    d.a = a;
    d.n = n;
    return checked(cone(build(d).arrangement), hfam_cuts(p, l, m, a, n), options);
}

std::optional<AccuracyWitness> efam_witness(std::size_t p, std::size_t l, Int n, Int a, Int m,
                                            const SearchOptions& options) {
    DeformationSpec d;
    d.family = Family::Efam;
    d.p = p;
    d.l = l;
    d.n = n;
    d.a = a;
    d.m = m;
    return checked(cone(build(d).arrangement), efam_cuts(p, l, n, a, m), options);
}

std::optional<AccuracyWitness> descendant_witness(const DescendantSpec& s, const SearchOptions& options) {
    return checked(cone(build_descendant(s)), descendant_cuts(s), options);
}

std::optional<AccuracyWitness> cat_witness(const RootSystem& phi, Int m, const SearchOptions& options) {
    DeformationSpec d;
    d.family = Family::ExtCat;
    d.base = phi.label;
    d.m = m;
    Arrangement a = cone(build(d).arrangement);
    std::vector<Hyperplane> cuts;
    for (std::size_t s = 0; s + 1 < phi.rank; ++s) {
        Hyperplane h = phi.hyperplane(s, m);
        IntVec v = h.normal;
        v.push_back(-h.offset);
        cuts.push_back(normalize(std::move(v), 0));
    }
    return checked(a, cuts, options);
}

std::vector<Hyperplane> nish_cuts(const std::vector<std::vector<Int>>& sets) {
    auto nesting = nishi_nested(sets);
    if (!nesting || !nesting->strict)
        return {};
    const std::size_t dim = sets.size() + 1;
    std::vector<Hyperplane> cuts;
    for (std::size_t i = 0; i + 1 < sets.size(); ++i) {
        auto big = VertexWeight::set(sets[nesting->order[i]]).values;
        auto small = VertexWeight::set(sets[nesting->order[i + 1]]).values;
        std::vector<Int> gap;
        std::set_difference(big.begin(), big.end(), small.begin(), small.end(), std::back_inserter(gap));
        cuts.push_back(level_cut(dim, nesting->order[i], gap.front()));
    }
    return cuts;
}

std::optional<AccuracyWitness> nish_witness(const std::vector<std::vector<Int>>& sets, const SearchOptions& options) {
    auto nesting = nishi_nested(sets);
    if (!nesting || !nesting->strict)
        return std::nullopt;
    return checked(cone(digraphic_arrangement(nish(sets))), nish_cuts(sets), options);
}

bool RowReport::ok() const noexcept {
    return chi_invariant && std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.ok(); });
}

RowReport validate_row(const DescendantSpec& s, const SearchOptions& options) {
    RowReport report;
    for (const auto& cell : descendant_row(s)) {
        CellReport r;
        r.spec = cell;
        Arrangement a = cone(build_descendant(cell));
        r.hyperplanes = a.size();
        r.chi = char_poly(a, options.poset);
        r.expected = descendant_expected_exponents(cell);
        r.chi_matches = r.chi == Polynomial::from_roots(r.expected);
        r.replay_matches = descendant_digraph(cell) == replay_descendant(cell);
        auto w = checked(a, descendant_cuts(cell), options);
        r.witness_ok = w.has_value();
        if (!r.chi_matches)
            r.note = "characteristic polynomial does not split with the expected exponents";
        else if (!r.replay_matches)
            r.note = "closed form differs from the mutation replay";
        else if (!r.witness_ok)
            r.note = "constructed flag does not extend to a validated witness";
        report.cells.push_back(std::move(r));
    }
    report.chi_invariant = std::all_of(report.cells.begin(), report.cells.end(),
                                       [&](const CellReport& c) { return c.chi == report.cells.front().chi; });
    return report;
}

} // namespace arrlab
