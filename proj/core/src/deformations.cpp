#include "arrlab/deformations.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>

namespace arrlab {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 11> kFamilies{{
    {Family::ExtShi, "extshi"},
    {Family::ExtCat, "extcat"},
    {Family::IdealShi, "idealshi"},
    {Family::ShiMinusSimples, "shiminus"},
    {Family::Bfam, "bfam"},
    {Family::Cfam, "cfam"},
    {Family::Ctilde, "ctilde"},
    {Family::Dfam, "dfam"},
    {Family::Ffam, "ffam"},
    {Family::Hfam, "hfam"},
    {Family::Efam, "efam"},
}};

bool root_based(Family f) {
    return f == Family::ExtShi || f == Family::ExtCat || f == Family::IdealShi || f == Family::ShiMinusSimples;
}

// Collects the listed equations c . x = j for j in the given values.
class Display {
public:
    explicit Display(std::size_t dim) : dim_(dim) {}

    void add(const IntVec& normal, Int lo, Int hi) {
        for (Int j = lo; j <= hi; ++j)
            add(normal, j);
    }
    void add(const IntVec& normal, Int j) { hs_.push_back(normalize(normal, j)); }

    IntVec coord(std::size_t i, Int c = 1) const {
        IntVec v(dim_, 0);
        v[i] = c;
        return v;
    }
    IntVec pair(std::size_t i, std::size_t j, Int sign) const {
        IntVec v(dim_, 0);
        v[i] = 1;
        v[j] = sign;
        return v;
    }

    Deformation finish() {
        std::size_t listed = hs_.size();
        return {Arrangement(dim_, std::move(hs_)), listed};
    }

private:
    std::size_t dim_;
    std::vector<Hyperplane> hs_;
};

Deformation build_b_or_c(const DeformationSpec& s, Int coefficient) {
    Display d(s.l);
    for (std::size_t i = 0; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j) {
            d.add(d.pair(i, j, -1), -s.a, s.a);
            d.add(d.pair(i, j, 1), -s.a, s.a);
        }
    for (std::size_t i = 0; i < s.l; ++i)
        d.add(d.coord(i, coefficient), i < s.p ? 1 - s.m : -s.m, s.m);
    return d.finish();
}

Deformation build_ctilde(const DeformationSpec& s) {
    Display d(s.l);
    for (std::size_t i = 0; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j) {
            d.add(d.pair(i, j, -1), -s.a, s.a);
            d.add(d.pair(i, j, 1), -s.a, s.a);
        }
    for (std::size_t i = 0; i < s.l; ++i) {
        d.add(d.coord(i, 2), -s.m, s.m);
        for (Int t = 1; t <= s.n * s.a; ++t) {
            d.add(d.coord(i, 2), s.m + 2 * t);
            d.add(d.coord(i, 2), -(s.m + 2 * t));
        }
    }
    return d.finish();
}

Deformation build_d(const DeformationSpec& s) {
    Display d(s.l);
    const Int a = s.a;
    for (std::size_t i = 0; i < s.r; ++i)
        d.add(d.coord(i, 2), -2 * a, 0);
    for (std::size_t i = 0; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j) {
            if (j < s.r) {
                d.add(d.pair(i, j, 1), -3 * a, a);
                d.add(d.pair(i, j, -1), -2 * a, 2 * a);
            } else if (i < s.r) {
                d.add(d.pair(i, j, 1), -2 * a, a);
                d.add(d.pair(i, j, -1), -2 * a, a);
            } else {
                d.add(d.pair(i, j, 1), -a, a);
                d.add(d.pair(i, j, -1), -a, a);
            }
        }
    return d.finish();
}

Deformation build_f(const DeformationSpec& s) {
    Display d(s.l);
    const Int a = s.a, n = s.n;
    d.add(d.coord(0, 2), -(4 * n + 3) * a, a);
    for (std::size_t i = 1; i < s.l; ++i)
        d.add(d.coord(i, 2), -a, a);
    for (std::size_t i = 1; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j) {
            d.add(d.pair(i, j, -1), -2 * a, 2 * a);
            d.add(d.pair(i, j, 1), -2 * a, 2 * a);
        }
    for (std::size_t i = 1; i < s.l; ++i) {
        d.add(d.pair(0, i, -1), -(2 * n + 3) * a, 2 * a);
        d.add(d.pair(0, i, 1), -(2 * n + 3) * a, 2 * a);
    }
    return d.finish();
}

Deformation build_h(const DeformationSpec& s) {
    Display d(s.l);
    for (std::size_t i = 0; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j)
            d.add(d.pair(i, j, -1), 1 - s.a, s.a);
    for (std::size_t i = 0; i < s.l; ++i)
        d.add(d.coord(i), i < s.p ? -s.m : -s.m - 1, s.n * s.a - 1);
    return d.finish();
}

Deformation build_e(const DeformationSpec& s) {
    Display d(s.l);
    for (std::size_t i = 0; i < s.l; ++i)
        for (std::size_t j = i + 1; j < s.l; ++j)
            d.add(d.pair(i, j, -1), -s.a, s.a);
    for (std::size_t i = 0; i < s.l; ++i)
        d.add(d.coord(i), -s.n * s.a, i < s.p ? s.m : s.m + 1);
    return d.finish();
}

Exponents cone_exponents(Exponents tail, std::size_t cone_dim) {
    tail.push_back(1);
    return pad_exponents(std::move(tail), cone_dim);
}

Exponents shifted(Exponents e, Int by) {
    for (auto& x : e)
        x += by;
    return e;
}

} // namespace

std::string_view family_name(Family f) {
    for (auto& [fam, name] : kFamilies)
        if (fam == f)
            return name;
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (auto& [fam, n] : kFamilies)
        if (n == name)
            return fam;
    return std::nullopt;
}

std::string to_string(const DeformationSpec& s) {
    switch (s.family) {
    case Family::ExtShi:
    case Family::ExtCat:
        return fmt::format("{}({}, m={})", family_name(s.family), s.base, s.m);
    case Family::IdealShi:
        return fmt::format("idealshi({}, m={}, I=[{}])", s.base, s.m, fmt::join(s.ideal, ","));
    case Family::ShiMinusSimples:
        return fmt::format("shiminus({}, m={}, S=[{}])", s.base, s.m, fmt::join(s.simples, ","));
    case Family::Bfam:
    case Family::Cfam:
        return fmt::format("{}(p={}, l={}, m={}, a={})", family_name(s.family), s.p, s.l, s.m, s.a);
    case Family::Ctilde:
        return fmt::format("ctilde(l={}, m={}, a={}, n={})", s.l, s.m, s.a, s.n);
    case Family::Dfam:
        return fmt::format("dfam(r={}, l={}, a={})", s.r, s.l, s.a);
    case Family::Ffam:
        return fmt::format("ffam(l={}, a={}, n={})", s.l, s.a, s.n);
    case Family::Hfam:
        return fmt::format("hfam(p={}, l={}, m={}, a={}, n={})", s.p, s.l, s.m, s.a, s.n);
    case Family::Efam:
        return fmt::format("efam(p={}, l={}, n={}, a={}, m={})", s.p, s.l, s.n, s.a, s.m);
    }
    return "?";
}

void validate_parameters(const DeformationSpec& s) {
    auto fail = [&](std::string_view why) {
        throw InputError(fmt::format("{}: {}", to_string(s), why));
    };
    if (root_based(s.family)) {
        RootSystem phi = build_root_system(s.base);
        Int lowest = s.family == Family::ExtCat ? 0 : 1;
        if (s.m < lowest)
            fail(fmt::format("needs m >= {}", lowest));
        if (s.family == Family::IdealShi && !is_ideal(phi, s.ideal))
            fail("not an order ideal");
        if (s.family == Family::ShiMinusSimples) {
            std::vector<std::size_t> seen = s.simples;
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
                (!seen.empty() && seen.back() >= phi.rank))
                fail("simple roots must be distinct indices below the rank");
        }
        return;
    }
    if (s.l < 1)
        fail("needs l >= 1");
    if (s.a < 0 || s.m < 0 || s.n < 0)
        fail("parameters must be nonnegative");
    switch (s.family) {
    case Family::Bfam:
    case Family::Cfam:
        if (s.p > s.l)
            fail("needs p <= l");
        break;
    case Family::Dfam:
        if (s.r > s.l)
            fail("needs r <= l");
        break;
    case Family::Hfam:
        if (s.p > s.l || s.a < 1 || s.n < 1)
            fail("needs a, n >= 1 and p <= l");
        break;
    case Family::Efam:
        if (s.p > s.l || s.n < 1)
            fail("needs n >= 1 and p <= l");
        break;
    default:
        break;
    }
}

Arrangement deformed_weyl(const RootSystem& phi, Int lo, Int hi) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < phi.size(); ++i)
        for (Int j = lo; j <= hi; ++j)
            hs.push_back(phi.hyperplane(i, j));
    return Arrangement::strict(phi.ambient, std::move(hs));
}

Deformation build(const DeformationSpec& s) {
    validate_parameters(s);
    switch (s.family) {
    case Family::ExtShi:
    case Family::ExtCat:
    case Family::IdealShi:
    case Family::ShiMinusSimples: {
        RootSystem phi = build_root_system(s.base);
        Display d(phi.ambient);
        for (std::size_t i = 0; i < phi.size(); ++i) {
            Int lo = 1 - s.m, hi = s.m;
            if (s.family == Family::ExtCat ||
                (s.family == Family::IdealShi && std::count(s.ideal.begin(), s.ideal.end(), i)))
                lo = -s.m;
            if (s.family == Family::ShiMinusSimples && std::count(s.simples.begin(), s.simples.end(), i))
                --hi;
            for (Int j = lo; j <= hi; ++j)
                d.add(phi.roots[i], checked_mul(j, phi.denominator));
        }
        return d.finish();
    }
    case Family::Bfam:
        return build_b_or_c(s, 1);
    case Family::Cfam:
        return build_b_or_c(s, 2);
    case Family::Ctilde:
        return build_ctilde(s);
    case Family::Dfam:
        return build_d(s);
    case Family::Ffam:
        return build_f(s);
    case Family::Hfam:
        return build_h(s);
    case Family::Efam:
        return build_e(s);
    }
    throw InputError("unknown family");
}

std::string_view provenance_name(Provenance p) {
    return p == Provenance::TheoremBacked ? "theorem-backed" : "conjectured";
}

ExpectedExponents expected_exponents(const DeformationSpec& s) {
    validate_parameters(s);
    const Int l = static_cast<Int>(s.l);
    if (root_based(s.family)) {
        RootSystem phi = build_root_system(s.base);
        const Int mh = s.m * phi.coxeter_number;
        const std::size_t dim = phi.ambient + 1;
        Exponents tail(phi.rank, mh);
        switch (s.family) {
        case Family::ExtCat:
            tail = shifted(phi.exponents(), mh);
            break;
        case Family::IdealShi: {
            std::map<int, std::size_t> blocks;
            for (std::size_t r : s.ideal)
                ++blocks[phi.heights[r]];
            std::vector<std::size_t> sizes;
            for (auto& [h, c] : blocks)
                sizes.push_back(c);
            tail = shifted(dual_partition_exponents(sizes, phi.rank), mh);
            break;
        }
        case Family::ShiMinusSimples:
            for (std::size_t i = 0; i < s.simples.size(); ++i)
                tail[i] = mh - 1;
            break;
        default:
            break;
        }
        return {cone_exponents(std::move(tail), dim), Provenance::TheoremBacked};
    }

    const std::size_t dim = s.l + 1;
    const Int p = static_cast<Int>(s.p);
    Exponents tail;
    Provenance provenance = Provenance::TheoremBacked;
    auto odd_run = [&](Int first) {
        for (Int i = 1; i <= l - 1; ++i)
            tail.push_back(2 * i - 1);
        tail.insert(tail.begin(), first);
    };
    switch (s.family) {
    case Family::Bfam:
    case Family::Cfam:
        odd_run(2 * l - p - 1);
        tail = shifted(tail, 2 * s.m + 2 * s.a * l - 2 * s.a);
        break;
    case Family::Ctilde:
        for (Int i = 1; i <= l; ++i)
            tail.push_back(2 * s.m + 2 * s.a * (l + s.n - 1) + 2 * i - 1);
        break;
    case Family::Dfam:
        odd_run(l + static_cast<Int>(s.r) - 1);
        tail = shifted(tail, 2 * s.a * l + 2 * s.a * static_cast<Int>(s.r) - 2 * s.a);
        if (s.r != 0 && s.r != s.l)
            provenance = Provenance::Conjectured;
        break;
    case Family::Ffam:
        for (Int i = 1; i <= l; ++i)
            tail.push_back(4 * s.a * (l + s.n) + 2 * i - 1);
        provenance = Provenance::Conjectured;
        break;
    case Family::Hfam:
        for (Int i = 0; i < l; ++i)
            tail.push_back((i < p ? 0 : 1) + s.m + s.a * (l + s.n - 1));
        break;
    case Family::Efam:
        tail.push_back(l - p + 1);
        for (Int i = 2; i <= l; ++i)
            tail.push_back(i);
        tail = shifted(tail, s.m + s.a * (l + s.n - 1));
        break;
    default:
        break;
    }
    return {cone_exponents(std::move(tail), dim), provenance};
}

Hyperplane apply(const AffineMove& move, const Hyperplane& h) {
    const std::size_t n = h.dim();
    if (move.permutation.size() != n || move.shift.size() != n)
        throw InputError(fmt::format("move '{}' does not act on dimension {}", move.name, n));
    RatVec normal(n);
    Rational offset = h.offset;
    for (std::size_t i = 0; i < n; ++i) {
        normal[move.permutation[i]] = h.normal[i];
        offset += Rational(h.normal[i]) * move.shift[i];
    }
    return normalize(normal, offset);
}

Arrangement apply(const AffineMove& move, const Arrangement& a) {
    std::vector<Hyperplane> hs;
    for (const auto& h : a)
        hs.push_back(apply(move, h));
    return Arrangement(a.dim(), std::move(hs));
}

AffineMove d_to_c_move(std::size_t l, Int a) {
    AffineMove m{"x_i -> x_i - a/2", {}, RatVec(l, Rational(a, 2))};
    for (std::size_t i = 0; i < l; ++i)
        m.permutation.push_back(i);
    return m;
}

AffineMove d_to_f_move(std::size_t l, Int a) {
    if (l < 2)
        throw InputError("d_to_f_move needs l >= 2");
    AffineMove m{"x_i -> x_{i+1} - a/2, x_l -> x_1 - a/2", {}, RatVec(l - 1, Rational(a, 2))};
    for (std::size_t i = 0; i + 2 < l; ++i)
        m.permutation.push_back(i + 1);
    m.permutation.push_back(0);
    return m;
}

} // namespace arrlab
