#include "arrlab/roots.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fmt/format.h>
#include <map>
#include <set>

namespace arrlab {

namespace {

IntVec unit(std::size_t n, std::size_t i, Int c = 1) {
    IntVec v(n, 0);
    v[i] = c;
    return v;
}

IntVec sum(IntVec a, const IntVec& b, Int c = 1) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = checked_add(a[i], checked_mul(c, b[i]));
    return a;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

// Simple roots as numerators over `den`, ordered as in Bourbaki's tables.
std::vector<IntVec> simple_roots(char type, std::size_t n, std::size_t& ambient, Int& den) {
    std::vector<IntVec> s;
    den = 1;
    auto chain = [&](std::size_t count, std::size_t dim, Int scale) {
        for (std::size_t i = 0; i < count; ++i)
            s.push_back(sum(unit(dim, i, scale), unit(dim, i + 1, scale), -1));
    };
    switch (type) {
    case 'A':
        ambient = n + 1;
        chain(n, ambient, 1);
        break;
    case 'B':
    case 'C':
    case 'D':
        ambient = n;
        chain(n - 1, n, 1);
        if (type == 'B')
            s.push_back(unit(n, n - 1));
        else if (type == 'C')
            s.push_back(unit(n, n - 1, 2));
        else
            s.push_back(sum(unit(n, n - 2), unit(n, n - 1)));
        break;
    case 'G':
        ambient = 3;
        s = {{1, -1, 0}, {-2, 1, 1}};
        break;
    case 'F':
        ambient = 4;
        den = 2;
        s = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
        break;
    case 'E': {
        ambient = 8;
        den = 2;
        std::vector<IntVec> e8 = {{1, -1, -1, -1, -1, -1, -1, 1}, {2, 2, 0, 0, 0, 0, 0, 0}};
        for (std::size_t i = 0; i < 6; ++i)
            e8.push_back(sum(unit(8, i + 1, 2), unit(8, i, 2), -1));
        s.assign(e8.begin(), e8.begin() + static_cast<std::ptrdiff_t>(n));
        break;
    }
    }
    return s;
}

bool valid_label(char type, std::size_t n) {
    switch (type) {
    case 'A':
        return n >= 1 && n <= 8;
    case 'B':
    case 'C':
        return n >= 2 && n <= 8;
    case 'D':
        return n >= 4 && n <= 8;
    case 'E':
        return n >= 6 && n <= 8;
    case 'F':
        return n == 4;
    case 'G':
        return n == 2;
    }
    return false;
}

} // namespace

Exponents RootSystem::exponents() const {
    std::map<int, std::size_t> count;
    for (int h : heights)
        ++count[h];
    std::vector<std::size_t> sizes;
    for (auto& [h, c] : count)
        sizes.push_back(c);
    return dual_partition_exponents(sizes, rank);
}

Hyperplane RootSystem::hyperplane(std::size_t i, Int j) const {
    return normalize(roots.at(i), checked_mul(j, denominator));
}

RootSystem build_root_system(std::string_view label) {
    std::size_t n = 0;
    if (label.size() < 2 ||
        std::from_chars(label.data() + 1, label.data() + label.size(), n).ptr != label.data() + label.size())
        throw InputError(fmt::format("unknown root system label '{}'", label));
    char type = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (!valid_label(type, n))
        throw InputError(fmt::format("unknown root system label '{}'", label));

    RootSystem phi;
    phi.label = fmt::format("{}{}", type, n);
    phi.type = type;
    phi.rank = n;
    std::vector<IntVec> simple = simple_roots(type, n, phi.ambient, phi.denominator);

    // Closure of the simple roots under simple reflections, tracking simple coefficients.
    std::map<IntVec, IntVec> found;
    std::vector<IntVec> queue;
    for (std::size_t i = 0; i < n; ++i) {
        found.emplace(simple[i], unit(n, i));
        queue.push_back(simple[i]);
    }
    while (!queue.empty()) {
        IntVec c = std::move(queue.back());
        queue.pop_back();
        IntVec coeff = found.at(c);
        for (std::size_t i = 0; i < n; ++i) {
            Int k = 2 * dot(c, simple[i]) / dot(simple[i], simple[i]);
            if (k == 0)
                continue;
            IntVec r = sum(c, simple[i], -k);
            if (found.count(r))
                continue;
            IntVec rc = coeff;
            rc[i] -= k;
            found.emplace(r, rc);
            queue.push_back(std::move(r));
        }
    }

    struct Entry {
        int height;
        IntVec coeff;
        IntVec root;
    };
    std::vector<Entry> positive;
    for (auto& [root, coeff] : found)
        if (std::all_of(coeff.begin(), coeff.end(), [](Int x) { return x >= 0; })) {
            Int h = 0;
            for (Int x : coeff)
                h += x;
            positive.push_back({static_cast<int>(h), coeff, root});
        }
    std::sort(positive.begin(), positive.end(), [](const Entry& a, const Entry& b) {
        return a.height != b.height ? a.height < b.height : a.coeff > b.coeff;
    });

    std::map<IntVec, std::size_t> index;
    for (auto& e : positive) {
        index.emplace(e.coeff, phi.roots.size());
        phi.roots.push_back(e.root);
        phi.coefficients.push_back(e.coeff);
        phi.heights.push_back(e.height);
    }
    phi.below.resize(phi.size());
    for (std::size_t r = 0; r < phi.size(); ++r)
        for (std::size_t i = 0; i < n; ++i) {
            IntVec c = phi.coefficients[r];
            if (c[i] == 0)
                continue;
            --c[i];
            if (auto it = index.find(c); it != index.end())
                phi.below[r].push_back(it->second);
        }
    phi.coxeter_number = phi.heights.back() + 1;
    return phi;
}

bool is_ideal(const RootSystem& phi, const OrderIdeal& ideal) {
    std::vector<char> in(phi.size(), 0);
    for (std::size_t r : ideal) {
        if (r >= phi.size() || in[r])
            return false;
        in[r] = 1;
    }
    for (std::size_t r : ideal)
        for (std::size_t b : phi.below[r])
            if (!in[b])
                return false;
    return true;
}

std::size_t enumerate_ideals(const RootSystem& phi, const std::function<bool(const OrderIdeal&)>& visit) {
    // Roots are sorted by height, so every cover of root i is decided before i.
    std::vector<char> in(phi.size(), 0);
    OrderIdeal current;
    std::size_t visited = 0;
    bool stop = false;
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (stop)
            return;
        if (i == phi.size()) {
            ++visited;
            stop = !visit(current);
            return;
        }
        walk(i + 1);
        if (std::all_of(phi.below[i].begin(), phi.below[i].end(), [&](std::size_t b) { return in[b] != 0; })) {
            in[i] = 1;
            current.push_back(i);
            walk(i + 1);
            current.pop_back();
            in[i] = 0;
        }
    };
    walk(0);
    return visited;
}

std::vector<OrderIdeal> all_ideals(const RootSystem& phi) {
    std::vector<OrderIdeal> out;
    enumerate_ideals(phi, [&](const OrderIdeal& i) {
        out.push_back(i);
        return true;
    });
    return out;
}

IdealArrangement ideal_arrangement(const RootSystem& phi, const OrderIdeal& ideal) {
    if (!is_ideal(phi, ideal))
        throw InputError("not an order ideal of " + phi.label);
    OrderIdeal sorted = ideal;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Hyperplane> hs;
    MatPartition pi;
    for (std::size_t r : sorted) {
        std::size_t block = static_cast<std::size_t>(phi.heights[r] - 1);
        if (pi.blocks.size() <= block)
            pi.blocks.resize(block + 1);
        pi.blocks[block].push_back(hs.size());
        hs.push_back(phi.hyperplane(r));
    }
    return {Arrangement::strict(phi.ambient, std::move(hs)), std::move(pi)};
}

Arrangement weyl_arrangement(const RootSystem& phi) {
    OrderIdeal all(phi.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return ideal_arrangement(phi, all).arrangement;
}

void validate(const IntermediateType& t) {
    if (t.l < 2 || t.r < 2 || t.k > t.l)
        throw InputError(fmt::format("A^k_l(r) needs l, r >= 2 and 0 <= k <= l (got k={}, l={}, r={})", t.k, t.l, t.r));
}

Exponents intermediate_expected_exponents(const IntermediateType& t) {
    validate(t);
    Int l = static_cast<Int>(t.l), r = static_cast<Int>(t.r), k = static_cast<Int>(t.k);
    Exponents e;
    for (Int i = 0; i <= l - 2; ++i)
        e.push_back(i * r + 1);
    e.push_back((l - 1) * r - l + k + 1);
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<IntermediateType> intermediate_restriction_types(const IntermediateType& t) {
    validate(t);
    std::set<std::size_t> ks;
    if (t.k == 0) {
        ks.insert(1);
    } else if (t.k == t.l) {
        ks.insert(t.l - 1);
    } else {
        if (t.k >= 2)
            ks.insert(t.k - 1);
        ks.insert(t.k);
        if (t.l - t.k >= 2)
            ks.insert(t.k + 1);
        ks.insert(t.l - 1);
    }
    std::vector<IntermediateType> out;
    for (std::size_t k : ks)
        out.push_back({k, t.l - 1, t.r});
    return out;
}

bool intermediate_flag_accurate(const IntermediateType& t) {
    validate(t);
    if (t.l <= 2)
        return true;
    Exponents target = intermediate_expected_exponents(t);
    target.pop_back();
    for (const auto& s : intermediate_restriction_types(t))
        if (s.l >= 2 && intermediate_expected_exponents(s) == target && intermediate_flag_accurate(s))
            return true;
    return false;
}

Arrangement intermediate_arrangement_r2(std::size_t k, std::size_t l) {
    validate({k, l, 2});
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < k; ++i)
        hs.push_back(coordinate_hyperplane(l, i, 0));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            hs.push_back(difference_hyperplane(l, i, j, 0));
            IntVec n(l, 0);
            n[i] = n[j] = 1;
            hs.push_back(normalize(n, 0));
        }
    return Arrangement::strict(l, std::move(hs));
}

} // namespace arrlab
