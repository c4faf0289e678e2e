#include "arrlab/freeness.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace arrlab {

Exponents pad_exponents(Exponents e, std::size_t dim) {
    if (e.size() < dim)
        e.insert(e.begin(), dim - e.size(), 0);
    std::sort(e.begin(), e.end());
    return e;
}

Exponents dual_partition_exponents(const std::vector<std::size_t>& block_sizes, std::size_t dim) {
    Exponents e;
    for (std::size_t i = 1; i <= dim; ++i)
        e.push_back(static_cast<Int>(std::count_if(block_sizes.begin(), block_sizes.end(),
                                                   [&](std::size_t s) { return s >= dim - i + 1; })));
    std::sort(e.begin(), e.end());
    return e;
}

std::string_view kind_name(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::Supersolvable:
        return "Supersolvable";
    case CertificateKind::Inductive:
        return "Inductive";
    case CertificateKind::Recursive:
        return "Recursive";
    case CertificateKind::Divisional:
        return "Divisional";
    case CertificateKind::MAT:
        return "MAT";
    }
    return "?";
}

std::optional<CertificateKind> kind_from_name(std::string_view name) {
    for (auto k : {CertificateKind::Supersolvable, CertificateKind::Inductive, CertificateKind::Recursive,
                   CertificateKind::Divisional, CertificateKind::MAT})
        if (kind_name(k) == name)
            return k;
    return std::nullopt;
}

CertificateKind FreenessCertificate::kind() const {
    return static_cast<CertificateKind>(derivation.index());
}

const FreenessCertificate* certificate_of(const FreenessVerdict& v) {
    if (auto* c = std::get_if<FreeCertified>(&v))
        return &c->certificate;
    return nullptr;
}

std::string describe(const FreenessVerdict& v) {
    if (auto* c = std::get_if<FreeCertified>(&v))
        return fmt::format("free ({}) with exponents ({})", kind_name(c->certificate.kind()),
                           fmt::join(c->certificate.exponents, ","));
    if (auto* n = std::get_if<NotFree>(&v))
        return "not free: " + n->reason;
    return "unknown: " + std::get<Unknown>(v).reason;
}

Arrangement canonical_form(const Arrangement& a) { return essentialize(a).sorted(); }

namespace {

std::optional<Exponents> nonnegative_roots(const Polynomial& chi) {
    auto r = integer_roots(chi);
    if (!r || std::any_of(r->begin(), r->end(), [](Int x) { return x < 0; }))
        return std::nullopt;
    return r;
}

void require_central(const Arrangement& a) {
    if (!a.is_central())
        throw InputError("freeness is certified for central arrangements; cone the input first");
}

Exponents leaf_exponents(const Arrangement& a) {
    std::size_t r = a.rank();
    Exponents e;
    if (r >= 1)
        e.push_back(1);
    if (r == 2)
        e.push_back(static_cast<Int>(a.size()) - 1);
    return pad_exponents(e, a.dim());
}

// Multiset difference big - small when it is a single element.
std::optional<Int> single_extra(Exponents big, const Exponents& small) {
    for (Int x : small) {
        auto it = std::find(big.begin(), big.end(), x);
        if (it == big.end())
            return std::nullopt;
        big.erase(it);
    }
    if (big.size() != 1)
        return std::nullopt;
    return big.front();
}

// Addition-deletion bookkeeping for the triple (A, A', A'') with A' = A \ H and A'' = A^H.
bool triple_consistent(const Exponents& whole, const Exponents& deleted, const Exponents& restricted) {
    auto k = single_extra(whole, restricted);
    auto k1 = single_extra(deleted, restricted);
    return k && k1 && *k1 == *k - 1;
}

std::string node_key(const Arrangement& a, std::size_t extra) {
    std::string key = fmt::format("{}#{}:", a.dim(), extra);
    for (const Hyperplane& h : a)
        key += fmt::format("{},{};", fmt::join(h.normal, ","), h.offset);
    return key;
}

std::vector<Hyperplane> trace_pool(const std::vector<Hyperplane>& pool, const Subspace& x) {
    std::vector<Hyperplane> out;
    for (const Hyperplane& h : pool) {
        auto t = x.trace(h);
        if (t.incidence == Subspace::Incidence::Cuts && std::find(out.begin(), out.end(), t.hyperplane) == out.end())
            out.push_back(std::move(t.hyperplane));
    }
    return out;
}

class DerivationSearch {
public:
    DerivationSearch(const SearchOptions& options, bool essential) : options_(options), essential_(essential) {}

    Arrangement node_form(const Arrangement& a) const { return essential_ ? canonical_form(a) : a.sorted(); }

    const Polynomial& chi(const Arrangement& a) {
        std::string key = node_key(a, 0);
        auto it = chi_.find(key);
        if (it != chi_.end())
            return it->second;
        return chi_.emplace(key, char_poly(a, options_.poset)).first->second;
    }

    DerivationRef solve(const Arrangement& a, const std::vector<Hyperplane>& pool, std::size_t additions) {
        std::string key = node_key(a, essential_ ? 0 : additions);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        if (active_.contains(key))
            return nullptr;
        if (++nodes_ > options_.max_nodes)
            throw BudgetExceeded(fmt::format("derivation search exceeded {} nodes", options_.max_nodes), nodes_);

        if (a.rank() <= 2) {
            auto leaf = std::make_shared<DerivationNode>();
            leaf->exponents = leaf_exponents(a);
            return memo_[key] = leaf;
        }
        auto roots = nonnegative_roots(chi(a));
        if (!roots)
            return memo_[key] = nullptr;
        Exponents exps = pad_exponents(*roots, a.dim());

        active_.insert(key);
        DerivationRef found = by_deletion(a, pool, additions, exps);
        if (!found && additions > 0)
            found = by_addition(a, pool, additions, exps);
        active_.erase(key);
        return memo_[key] = found;
    }

private:
    DerivationRef by_deletion(const Arrangement& a, const std::vector<Hyperplane>& pool, std::size_t additions,
                              const Exponents& exps) {
        struct Candidate {
            std::size_t index;
            Arrangement restricted;
            Subspace plane;
        };
        std::vector<Candidate> cands;
        cands.reserve(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            Subspace plane = *Subspace(a.dim()).meet(a[i]);
            cands.push_back({i, node_form(restrict(a, plane)), std::move(plane)});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& l, const Candidate& r) { return l.restricted.size() < r.restricted.size(); });
        const Polynomial whole = chi(a);
        for (const Candidate& c : cands) {
            if (!whole.divide(chi(c.restricted)))
                continue;
            DerivationRef restricted = solve(c.restricted, trace_pool(pool, c.plane), additions);
            if (!restricted)
                continue;
            DerivationRef deleted = solve(node_form(a.without(c.index)), pool, additions);
            if (!deleted)
                continue;
            auto node = std::make_shared<DerivationNode>();
            node->step = DerivationNode::Step::Delete;
            node->hyperplane = c.index;
            node->first = deleted;
            node->restriction = restricted;
            node->exponents = exps;
            return node;
        }
        return nullptr;
    }

    DerivationRef by_addition(const Arrangement& a, const std::vector<Hyperplane>& pool, std::size_t additions,
                              const Exponents& exps) {
        for (const Hyperplane& h : pool) {
            if (a.contains(h))
                continue;
            Arrangement bigger = node_form(a.with(h));
            Subspace plane = *Subspace(a.dim()).meet(h);
            Arrangement restricted = node_form(restrict(bigger, plane));
            if (!chi(bigger).divide(chi(restricted)))
                continue;
            DerivationRef up = solve(bigger, pool, additions - 1);
            if (!up)
                continue;
            DerivationRef down = solve(restricted, trace_pool(pool, plane), additions - 1);
            if (!down)
                continue;
            auto node = std::make_shared<DerivationNode>();
            node->step = DerivationNode::Step::Add;
            node->added = h;
            node->first = up;
            node->restriction = down;
            node->exponents = exps;
            return node;
        }
        return nullptr;
    }

    SearchOptions options_;
    bool essential_;
    std::size_t nodes_ = 0;
    std::unordered_map<std::string, DerivationRef> memo_;
    std::unordered_map<std::string, Polynomial> chi_;
    std::unordered_set<std::string> active_;
};

FreenessVerdict failure_verdict(const Arrangement& a, const PosetOptions& poset, const std::string& what) {
    if (!nonnegative_roots(char_poly(a, poset)))
        return NotFree{"characteristic polynomial does not split over Z with nonnegative roots"};
    return Unknown{what, true};
}

FreenessVerdict derivation_verdict(const Arrangement& a, const SearchOptions& options, bool essential,
                                   const std::vector<Hyperplane>& pool, std::size_t additions) {
    require_central(a);
    DerivationSearch search(options, essential);
    try {
        Arrangement start = search.node_form(a);
        DerivationRef root = search.solve(start, pool, additions);
        if (!root)
            return failure_verdict(a, options.poset,
                                   essential ? "no inductive derivation exists"
                                             : "no recursive derivation found within the addition bound");
        FreenessCertificate cert{a, pad_exponents(root->exponents, a.dim()), {}};
        if (essential)
            cert.derivation = InductiveDerivation{root};
        else
            cert.derivation = RecursiveDerivation{root};
        return FreeCertified{std::move(cert)};
    } catch (const BudgetExceeded& e) {
        return Unknown{e.what()};
    }
}

} // namespace

FreenessVerdict inductively_free(const Arrangement& a, const SearchOptions& options) {
    return derivation_verdict(a, options, true, {}, 0);
}

FreenessVerdict recursively_free(const Arrangement& a, const std::vector<Hyperplane>& pool, std::size_t max_additions,
                                 const SearchOptions& options) {
    return derivation_verdict(a, options, false, pool, max_additions);
}

FreenessVerdict supersolvable_free(const Arrangement& a, const SearchOptions& options) {
    require_central(a);
    try {
        auto poset = IntersectionPoset::build(a, options.poset);
        if (auto chain = supersolvable(poset)) {
            Exponents e = chain->exponents;
            return FreeCertified{FreenessCertificate{a, std::move(e), std::move(*chain)}};
        }
        if (!nonnegative_roots(poset.char_poly()))
            return NotFree{"characteristic polynomial does not split over Z with nonnegative roots"};
        return Unknown{"not supersolvable", true};
    } catch (const BudgetExceeded& e) {
        return Unknown{e.what()};
    }
}

FreenessVerdict divisionally_free(const IntersectionPoset& p) {
    const Arrangement& a = p.arrangement();
    require_central(a);
    auto roots = nonnegative_roots(p.char_poly());
    if (!roots)
        return NotFree{"characteristic polynomial does not split over Z with nonnegative roots"};
    using Id = IntersectionPoset::Id;
    Id center = p.level(p.levels() - 1).front();
    std::unordered_map<Id, Polynomial> chis;
    auto chi = [&](Id x) -> const Polynomial& {
        auto it = chis.find(x);
        if (it == chis.end())
            it = chis.emplace(x, p.restriction_char_poly(x)).first;
        return it->second;
    };
    std::vector<signed char> state(p.size(), -1);
    std::vector<Id> next(p.size(), 0);
    std::function<bool(Id)> dfs = [&](Id x) -> bool {
        if (x == center)
            return true;
        if (state[x] >= 0)
            return state[x] == 1;
        for (Id y : p.children(x))
            if (chi(x).divide(chi(y)) && dfs(y)) {
                next[x] = y;
                return (state[x] = 1) == 1;
            }
        state[x] = 0;
        return false;
    };
    if (!dfs(0))
        return Unknown{"no divisional flag exists", true};
    std::vector<Id> chain{0};
    while (chain.back() != center)
        chain.push_back(next[chain.back()]);
    DivisionalFlag flag;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        if (*it == 0)
            continue;
        flag.flats.push_back(p.space(*it));
    }
    for (std::size_t i = chain.size() - 1; i > 0; --i)
        flag.quotients.push_back(*chi(chain[i - 1]).divide(chi(chain[i])));
    return FreeCertified{FreenessCertificate{a, pad_exponents(*roots, a.dim()), std::move(flag)}};
}

FreenessVerdict divisionally_free(const Arrangement& a, const SearchOptions& options) {
    require_central(a);
    try {
        return divisionally_free(IntersectionPoset::build(a, options.poset));
    } catch (const BudgetExceeded& e) {
        return Unknown{e.what()};
    }
}

namespace {

void check_partition(const Arrangement& a, const MatPartition& pi) {
    std::vector<int> seen(a.size(), 0);
    for (const auto& block : pi.blocks) {
        if (block.empty())
            throw InputError("MAT partition has an empty block");
        for (std::size_t i : block) {
            if (i >= a.size())
                throw InputError(fmt::format("MAT partition names hyperplane {} of {}", i, a.size()));
            if (seen[i]++)
                throw InputError(fmt::format("hyperplane {} appears twice in the MAT partition", i));
        }
    }
    if (std::count(seen.begin(), seen.end(), 0) != 0)
        throw InputError("MAT partition does not cover every hyperplane");
}

// Identifies H_i n H_j across pairs so that |(B u {H})^H| is a count of distinct ids.
class TraceTable {
public:
    explicit TraceTable(const Arrangement& a) : n_(a.size()), ids_(n_ * n_, -1) {
        std::unordered_map<Subspace, int, SubspaceHash> index;
        for (std::size_t i = 0; i < n_; ++i) {
            Subspace hi = *Subspace(a.dim()).meet(a[i]);
            for (std::size_t j = 0; j < n_; ++j) {
                if (i == j)
                    continue;
                auto w = hi.meet(a[j]);
                if (!w)
                    continue;
                auto [it, fresh] = index.emplace(*w, static_cast<int>(index.size()));
                ids_[i * n_ + j] = it->second;
            }
        }
    }

    // |B| - |(B u {H})^H| for the index set B not containing h
    std::size_t deficit(std::size_t h, const std::vector<std::size_t>& b) const {
        std::vector<int> ids;
        for (std::size_t j : b)
            if (ids_[h * n_ + j] >= 0)
                ids.push_back(ids_[h * n_ + j]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return b.size() - ids.size();
    }

private:
    std::size_t n_;
    std::vector<int> ids_;
};

bool block_conditions(const Arrangement& a, const std::vector<std::size_t>& block, const std::vector<std::size_t>& before) {
    Subspace x(a.dim());
    for (std::size_t i : block) {
        auto next = x.meet(a[i]);
        if (!next || next->codim() != x.codim() + 1)
            return false;
        x = std::move(*next);
    }
    return std::none_of(before.begin(), before.end(), [&](std::size_t j) { return x.inside(a[j]); });
}

} // namespace

std::optional<Exponents> verify_mat_partition(const Arrangement& a, const MatPartition& pi) {
    require_central(a);
    check_partition(a, pi);
    TraceTable table(a);
    std::vector<std::size_t> before;
    std::vector<std::size_t> sizes;
    for (std::size_t k = 0; k < pi.blocks.size(); ++k) {
        const auto& block = pi.blocks[k];
        if (!block_conditions(a, block, before))
            return std::nullopt;
        for (std::size_t h : block)
            if (table.deficit(h, before) != k)
                return std::nullopt;
        before.insert(before.end(), block.begin(), block.end());
        sizes.push_back(block.size());
    }
    return dual_partition_exponents(sizes, a.dim());
}

MatSearch mat_free_search(const Arrangement& a, const SearchOptions& options) {
    require_central(a);
    MatSearch out;
    if (a.empty()) {
        out.outcome = MatSearch::Outcome::Found;
        return out;
    }
    auto roots = nonnegative_roots(char_poly(a, options.poset));
    if (!roots) {
        out.outcome = MatSearch::Outcome::None;
        out.note = "characteristic polynomial does not split, so the arrangement is not free";
        return out;
    }
    Int top = roots->back();
    std::vector<std::size_t> sizes;
    for (Int k = 1; k <= top; ++k)
        sizes.push_back(static_cast<std::size_t>(std::count_if(roots->begin(), roots->end(), [&](Int e) { return e >= k; })));

    TraceTable table(a);
    std::size_t nodes = 0;
    std::unordered_set<std::string> dead;
    std::vector<char> used(a.size(), 0);
    std::vector<std::size_t> before;

    std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
        if (k == sizes.size())
            return before.size() == a.size();
        std::string key(used.begin(), used.end());
        if (dead.contains(key))
            return false;
        std::vector<std::size_t> cands;
        for (std::size_t h = 0; h < a.size(); ++h)
            if (!used[h] && table.deficit(h, before) == k)
                cands.push_back(h);
        std::vector<std::size_t> block;
        std::function<bool(std::size_t, const Subspace&)> choose = [&](std::size_t from, const Subspace& x) -> bool {
            if (++nodes > options.max_nodes)
                throw BudgetExceeded(fmt::format("MAT search exceeded {} nodes", options.max_nodes), nodes);
            if (block.size() == sizes[k]) {
                if (std::any_of(before.begin(), before.end(), [&](std::size_t j) { return x.inside(a[j]); }))
                    return false;
                std::size_t mark = before.size();
                for (std::size_t h : block) {
                    used[h] = 1;
                    before.push_back(h);
                }
                out.partition.blocks.push_back(block);
                if (place(k + 1))
                    return true;
                out.partition.blocks.pop_back();
                for (std::size_t h : block)
                    used[h] = 0;
                before.resize(mark);
                return false;
            }
            for (std::size_t c = from; c + (sizes[k] - block.size()) <= cands.size(); ++c) {
                auto next = x.meet(a[cands[c]]);
                if (!next || next->codim() != x.codim() + 1)
                    continue;
                block.push_back(cands[c]);
                if (choose(c + 1, *next))
                    return true;
                block.pop_back();
            }
            return false;
        };
        if (choose(0, Subspace(a.dim())))
            return true;
        dead.insert(std::move(key));
        return false;
    };

    try {
        if (place(0)) {
            out.outcome = MatSearch::Outcome::Found;
        } else {
            out.outcome = MatSearch::Outcome::None;
            out.partition.blocks.clear();
            out.note = "exhaustive search found no MAT partition";
        }
    } catch (const BudgetExceeded& e) {
        out.outcome = MatSearch::Outcome::Unknown;
        out.partition.blocks.clear();
        out.note = e.what();
    }
    return out;
}

FreenessVerdict certify_free(const Arrangement& a, Method method, const SearchOptions& options) {
    require_central(a);
    switch (method) {
    case Method::Supersolvable:
        return supersolvable_free(a, options);
    case Method::Inductive:
        return inductively_free(a, options);
    case Method::Divisional:
        return divisionally_free(a, options);
    case Method::MAT: {
        MatSearch s = mat_free_search(a, options);
        if (s.outcome == MatSearch::Outcome::Found) {
            auto e = verify_mat_partition(a, s.partition);
            return FreeCertified{FreenessCertificate{a, *e, std::move(s.partition)}};
        }
        if (s.outcome == MatSearch::Outcome::Unknown)
            return Unknown{s.note};
        return failure_verdict(a, options.poset, s.note);
    }
    case Method::Auto:
        break;
    }
    FreenessVerdict v = supersolvable_free(a, options);
    if (!std::holds_alternative<Unknown>(v))
        return v;
    v = inductively_free(a, options);
    if (!std::holds_alternative<Unknown>(v))
        return v;
    return divisionally_free(a, options);
}

std::optional<ExponentReport> exponents(const Arrangement& a, const SearchOptions& options) {
    FreenessVerdict v = certify_free(a, Method::Auto, options);
    if (auto* c = certificate_of(v))
        return ExponentReport{c->exponents, c->kind()};
    if (std::holds_alternative<NotFree>(v))
        return std::nullopt;
    auto roots = nonnegative_roots(char_poly(a, options.poset));
    if (!roots)
        return std::nullopt;
    return ExponentReport{pad_exponents(*roots, a.dim()), std::nullopt};
}

namespace {

class Replayer {
public:
    Replayer(const PosetOptions& options, bool essential) : options_(options), essential_(essential) {}

    Arrangement node_form(const Arrangement& a) const { return essential_ ? canonical_form(a) : a.sorted(); }

    // Verifies the subtree rooted at n for arrangement a; throws a message on failure.
    void check(const DerivationRef& n, const Arrangement& a) {
        if (!n)
            throw std::runtime_error("missing derivation node");
        std::string key = node_key(a, 0) + fmt::format("@{}", static_cast<const void*>(n.get()));
        if (done_.contains(key))
            return;
        switch (n->step) {
        case DerivationNode::Step::Leaf:
            if (!a.is_central() || a.rank() > 2)
                throw std::runtime_error("leaf is not a central arrangement of rank at most 2");
            if (leaf_exponents(a) != n->exponents)
                throw std::runtime_error("leaf exponents do not match");
            break;
        case DerivationNode::Step::Delete: {
            if (n->hyperplane >= a.size())
                throw std::runtime_error("deletion index out of range");
            Arrangement deleted = node_form(a.without(n->hyperplane));
            Arrangement restricted = node_form(restrict(a, n->hyperplane));
            check(n->first, deleted);
            check(n->restriction, restricted);
            if (!triple_consistent(n->exponents, pad_exponents(n->first->exponents, a.dim()),
                                   pad_exponents(n->restriction->exponents, a.dim() - 1)))
                throw std::runtime_error(fmt::format("addition-deletion bookkeeping fails at {}",
                                                     to_string(a[n->hyperplane])));
            break;
        }
        case DerivationNode::Step::Add: {
            if (essential_)
                throw std::runtime_error("inductive derivations may not add hyperplanes");
            if (a.contains(n->added) || n->added.dim() != a.dim())
                throw std::runtime_error("added hyperplane is already present or has the wrong dimension");
            Arrangement bigger = node_form(a.with(n->added));
            Arrangement restricted = node_form(restrict(bigger, *Subspace(a.dim()).meet(n->added)));
            check(n->first, bigger);
            check(n->restriction, restricted);
            if (!triple_consistent(n->first->exponents, n->exponents,
                                   pad_exponents(n->restriction->exponents, a.dim() - 1)))
                throw std::runtime_error("addition bookkeeping fails");
            break;
        }
        }
        if (n->exponents.size() != a.dim())
            throw std::runtime_error("exponent multiset has the wrong length");
        done_.insert(std::move(key));
    }

private:
    PosetOptions options_;
    bool essential_;
    std::unordered_set<std::string> done_;
};

void replay_chain(const FreenessCertificate& c, const ModularChain& chain, const PosetOptions& options) {
    auto p = IntersectionPoset::build(c.arrangement, options);
    std::vector<std::size_t> previous;
    std::size_t prev_rank = 0;
    Exponents e;
    for (const auto& loc : chain.localizations) {
        if (!std::includes(loc.begin(), loc.end(), previous.begin(), previous.end()))
            throw std::runtime_error("M-chain localizations are not nested");
        auto x = meet(c.arrangement, loc);
        if (!x || x->generators != loc || x->space.codim() != prev_rank + 1)
            throw std::runtime_error("M-chain member is not a localization of the right rank");
        auto id = p.find(x->space);
        if (!id)
            throw std::runtime_error("M-chain flat not found in the lattice");
        if (!previous.empty()) {
            // previous must be modular inside A_X
            std::vector<std::size_t> rest;
            std::set_difference(loc.begin(), loc.end(), previous.begin(), previous.end(), std::back_inserter(rest));
            for (std::size_t i = 0; i < rest.size(); ++i)
                for (std::size_t j = i + 1; j < rest.size(); ++j) {
                    auto w = p.pair_meet(rest[i], rest[j]);
                    const auto& g = p.generators(*w);
                    if (std::none_of(g.begin(), g.end(), [&](std::size_t h) {
                            return std::binary_search(previous.begin(), previous.end(), h);
                        }))
                        throw std::runtime_error("M-chain member is not a modular coatom of the next one");
                }
        }
        e.push_back(static_cast<Int>(loc.size() - previous.size()));
        previous = loc;
        prev_rank += 1;
    }
    if (previous.size() != c.arrangement.size())
        throw std::runtime_error("M-chain does not end at the whole arrangement");
    if (pad_exponents(e, c.arrangement.dim()) != c.exponents)
        throw std::runtime_error("M-chain exponents do not match the certificate");
}

void replay_divisional(const FreenessCertificate& c, const DivisionalFlag& flag, const PosetOptions& options) {
    const Arrangement& a = c.arrangement;
    std::size_t r = a.rank();
    if (flag.flats.size() != r || flag.quotients.size() != r)
        throw std::runtime_error("divisional flag has the wrong length");
    std::vector<Polynomial> chis;
    for (std::size_t i = 0; i < flag.flats.size(); ++i) {
        const Subspace& x = flag.flats[i];
        if (!as_flat(a, x))
            throw std::runtime_error("divisional flag member is not a flat");
        if (x.dim() != a.dim() - r + i)
            throw std::runtime_error("divisional flag member has the wrong dimension");
        if (i > 0 && !flag.flats[i - 1].inside(x))
            throw std::runtime_error("divisional flag is not nested");
        chis.push_back(char_poly(restrict(a, x), options));
    }
    chis.push_back(char_poly(a, options));
    for (std::size_t i = 0; i + 1 < chis.size(); ++i) {
        auto q = chis[i + 1].divide(chis[i]);
        if (!q || *q != flag.quotients[i])
            throw std::runtime_error(fmt::format("divisibility fails at flag level {}", i + 1));
    }
}

} // namespace

Replay replay(const FreenessCertificate& c, const PosetOptions& options) {
    try {
        require_central(c.arrangement);
        if (c.exponents.size() != c.arrangement.dim())
            throw std::runtime_error("exponent multiset has the wrong length");
        std::visit(
            [&](const auto& d) {
                using D = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<D, ModularChain>) {
                    replay_chain(c, d, options);
                } else if constexpr (std::is_same_v<D, InductiveDerivation> || std::is_same_v<D, RecursiveDerivation>) {
                    constexpr bool essential = std::is_same_v<D, InductiveDerivation>;
                    Replayer r(options, essential);
                    Arrangement start = r.node_form(c.arrangement);
                    r.check(d.root, start);
                    if (pad_exponents(d.root->exponents, c.arrangement.dim()) != c.exponents)
                        throw std::runtime_error("root exponents do not match the certificate");
                } else if constexpr (std::is_same_v<D, DivisionalFlag>) {
                    replay_divisional(c, d, options);
                } else {
                    auto e = verify_mat_partition(c.arrangement, d);
                    if (!e)
                        throw std::runtime_error("MAT partition fails a block condition");
                    if (*e != c.exponents)
                        throw std::runtime_error("MAT exponents do not match the certificate");
                }
            },
            c.derivation);
        if (char_poly(c.arrangement, options) != Polynomial::from_roots(c.exponents))
            throw std::runtime_error("characteristic polynomial is not the product of (t - e_i)");
    } catch (const std::exception& e) {
        return Replay{false, e.what()};
    }
    return Replay{true, "ok"};
}

} // namespace arrlab
