#include "arrlab/properties.hpp"

#include "arrlab/accuracy.hpp"
#include "arrlab/descendants.hpp"
#include "arrlab/errors.hpp"
#include "arrlab/freeness.hpp"
#include "arrlab/io.hpp"
#include "arrlab/poset.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>

namespace arrlab {

namespace {

Polynomial linear_factor(Int root) { return Polynomial::from_roots({root}); }

// Removes one copy of each entry of `part` from `whole`; nullopt unless part is a sub-multiset.
std::optional<IntVec> multiset_minus(IntVec whole, const IntVec& part) {
    for (Int x : part) {
        auto it = std::find(whole.begin(), whole.end(), x);
        if (it == whole.end())
            return std::nullopt;
        whole.erase(it);
    }
    return whole;
}

std::optional<Exponents> certified_exponents(const Arrangement& a) {
    SearchOptions options;
    options.max_nodes = 20'000;
    auto v = certify_free(a, Method::Auto, options);
    if (const auto* c = certificate_of(v))
        return pad_exponents(c->exponents, a.dim());
    return std::nullopt;
}

} // namespace

Arrangement random_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& o) {
    std::uniform_int_distribution<std::size_t> dim_dist(1, o.max_dim), count_dist(0, o.max_hyperplanes);
    std::uniform_int_distribution<Int> coeff(-o.max_coeff, o.max_coeff);
    const std::size_t dim = dim_dist(rng), count = count_dist(rng);
    std::vector<Hyperplane> hs;
    while (hs.size() < count) {
        IntVec normal(dim);
        for (auto& x : normal)
            x = coeff(rng);
        if (std::all_of(normal.begin(), normal.end(), [](Int x) { return x == 0; }))
            continue;
        hs.push_back(normalize(std::move(normal), o.central ? 0 : coeff(rng)));
    }
    return Arrangement(dim, std::move(hs));
}

PropertyReport check_coning_identity(std::size_t count, std::uint64_t seed, const RandomArrangementOptions& options) {
    PropertyReport r{.name = "coning-identity"};
    std::mt19937_64 rng(seed);
    const Polynomial t_minus_1 = linear_factor(1);
    for (std::size_t i = 0; i < count; ++i) {
        Arrangement a = random_arrangement(rng, options);
        ++r.sampled;
        ++r.cases;
        Polynomial lhs = char_poly(cone(a));
        Polynomial rhs = t_minus_1 * char_poly(a);
        if (lhs != rhs)
            r.failures.push_back(fmt::format("{}: chi(cone) = {} but (t-1) chi = {}", to_string(a), lhs.str(), rhs.str()));
    }
    return r;
}

PropertyReport check_terao_factorization(std::size_t count, std::uint64_t seed) {
    PropertyReport r{.name = "terao-factorization"};
    std::mt19937_64 rng(seed);
    const RandomArrangementOptions options{4, 8, 1, true};
    const Polynomial t = Polynomial::monomial(1);
    for (std::size_t i = 0; i < count; ++i) {
        Arrangement a = random_arrangement(rng, options);
        ++r.sampled;
        auto poset = IntersectionPoset::build(a);
        const Polynomial chi = poset.char_poly();
        bool said = false;
        for (auto x : modular_coatoms(poset)) {
            said = true;
            Arrangement local = localize(a, poset.space(x));
            Polynomial lhs = t * chi;
            Polynomial rhs = linear_factor(static_cast<Int>(a.size() - local.size())) * char_poly(local);
            if (lhs != rhs)
                r.failures.push_back(fmt::format("{}: modular coatom identity fails at flat {}", to_string(a), x));
        }
        if (auto chain = supersolvable(poset)) {
            said = true;
            if (chi != Polynomial::from_roots(chain->exponents))
                r.failures.push_back(fmt::format("{}: supersolvable exponents do not factor chi", to_string(a)));
        }
        if (auto e = certified_exponents(a)) {
            said = true;
            if (chi != Polynomial::from_roots(*e))
                r.failures.push_back(fmt::format("{}: certified exponents do not factor chi", to_string(a)));
        }
        if (said)
            ++r.cases;
    }
    return r;
}

PropertyReport check_addition_deletion(std::size_t count, std::uint64_t seed) {
    PropertyReport r{.name = "addition-deletion"};
    std::mt19937_64 rng(seed);
    const RandomArrangementOptions options{4, 7, 1, true};
    for (std::size_t i = 0; i < count; ++i) {
        Arrangement a = random_arrangement(rng, options);
        ++r.sampled;
        if (a.empty())
            continue;
        ++r.cases;
        const Polynomial chi = char_poly(a);
        const auto exp_a = certified_exponents(a);
        for (std::size_t h = 0; h < a.size(); ++h) {
            Arrangement del = a.without(h), res = restrict(a, h);
            const Polynomial chi_del = char_poly(del), chi_res = char_poly(res);
            if (chi != chi_del - chi_res) {
                r.failures.push_back(fmt::format("{}: deletion-restriction fails at {}", to_string(a), h));
                continue;
            }
            auto exp_res = certified_exponents(res);
            if (!exp_res)
                continue;
            // Deletion: exp(A'') inside exp(A) forces chi(A') = chi(A'') (t - (e - 1)).
            if (exp_a) {
                if (auto rest = multiset_minus(*exp_a, *exp_res); rest && rest->size() == 1) {
                    if (chi_del != chi_res * linear_factor((*rest)[0] - 1))
                        r.failures.push_back(fmt::format("{}: deletion bookkeeping fails at {}", to_string(a), h));
                }
            }
            // Addition: exp(A'') inside exp(A') forces chi(A) = chi(A'') (t - (e + 1)).
            if (auto exp_del = certified_exponents(del)) {
                if (auto rest = multiset_minus(*exp_del, *exp_res); rest && rest->size() == 1) {
                    if (chi != chi_res * linear_factor((*rest)[0] + 1))
                        r.failures.push_back(fmt::format("{}: addition bookkeeping fails at {}", to_string(a), h));
                    if (!exp_a)
                        r.failures.push_back(fmt::format("{}: addition predicts freeness, search found none", to_string(a)));
                }
            }
        }
    }
    return r;
}

PropertyReport check_witness_determinism(std::size_t count, std::uint64_t seed) {
    PropertyReport r{.name = "witness-determinism"};
    std::mt19937_64 rng(seed);
    const RandomArrangementOptions options{3, 7, 1, true};
    for (std::size_t i = 0; i < count; ++i) {
        Arrangement a = random_arrangement(rng, options);
        ++r.sampled;
        try {
            auto first = flag_accuracy(a), second = flag_accuracy(a);
            std::string d1 = first ? dump(to_json(*first)) : "null";
            std::string d2 = second ? dump(to_json(*second)) : "null";
            if (d1 != d2)
                r.failures.push_back(fmt::format("{}: flag witness differs between runs", to_string(a)));
            if (first) {
                AccuracyWitness back = witness_from_json(Json::parse(d1), a.dim());
                std::string why;
                if (dump(to_json(back)) != d1)
                    r.failures.push_back(fmt::format("{}: witness JSON does not round-trip", to_string(a)));
                if (!check_witness(a, back, &why))
                    r.failures.push_back(fmt::format("{}: emitted witness fails replay: {}", to_string(a), why));
            }
            if (dump(to_json(accuracy_profile(a))) != dump(to_json(accuracy_profile(a))))
                r.failures.push_back(fmt::format("{}: accuracy report differs between runs", to_string(a)));
            ++r.cases;
        } catch (const InputError&) {
            // not free, or not certifiably so: nothing to replay
        } catch (const BudgetExceeded&) {
        }
    }
    return r;
}

PropertyReport check_mutation_rows(std::size_t max_l) {
    PropertyReport r{.name = "mutation-rows"};
    std::vector<DescendantSpec> origins;
    for (std::size_t l = 1; l <= max_l; ++l)
        for (std::size_t p = 0; p <= l; ++p) {
            for (auto [m, d] : std::array<std::pair<Int, Int>, 3>{{{0, 0}, {1, 0}, {0, 1}}})
                origins.push_back({Genealogy::Shi, l, p, 1, m, d, 1, false});
            for (auto [c, m] : std::array<std::pair<Int, Int>, 3>{{{1, 0}, {2, 0}, {1, 1}}})
                origins.push_back({Genealogy::Catalan, l, p, 1, m, 0, c, false});
        }
    for (const auto& origin : origins) {
        ++r.sampled;
        ++r.cases;
        std::optional<Polynomial> chi;
        for (const auto& cell : descendant_row(origin)) {
            if (descendant_digraph(cell) != replay_descendant(cell))
                r.failures.push_back(fmt::format("{}: replay differs from the closed form", to_string(cell)));
            Polynomial c = char_poly(cone(build_descendant(cell)));
            if (!chi)
                chi = c;
            else if (c != *chi)
                r.failures.push_back(fmt::format("{}: cone chi {} differs from the row's {}", to_string(cell), c.str(),
                                                 chi->str()));
        }
    }
    return r;
}

std::vector<std::string_view> property_names() {
    return {"coning-identity", "terao-factorization", "addition-deletion", "witness-determinism", "mutation-rows"};
}

PropertyReport run_property(std::string_view name, std::size_t count, std::uint64_t seed, std::size_t max_l) {
    if (name == "coning-identity")
        return check_coning_identity(count, seed);
    if (name == "terao-factorization")
        return check_terao_factorization(count, seed);
    if (name == "addition-deletion")
        return check_addition_deletion(count, seed);
    if (name == "witness-determinism")
        return check_witness_determinism(count, seed);
    if (name == "mutation-rows")
        return check_mutation_rows(max_l);
    throw InputError(fmt::format("unknown property '{}'", name));
}

} // namespace arrlab
