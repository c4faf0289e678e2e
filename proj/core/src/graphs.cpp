#include "arrlab/graphs.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <map>
#include <numeric>

namespace arrlab {

SimpleGraph::SimpleGraph(std::size_t n) : adj_(n, std::vector<char>(n, 0)) {}

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges)
        add_edge(u, v);
}

std::vector<std::size_t> SimpleGraph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < size(); ++u)
        if (adj_[v][u])
            out.push_back(u);
    return out;
}

std::size_t SimpleGraph::degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count(adj_[v].begin(), adj_[v].end(), 1));
}

std::vector<Edge> SimpleGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v)
            if (adj_[u][v])
                out.emplace_back(u, v);
    return out;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= size() || v >= size())
        throw InputError(fmt::format("edge ({}, {}) out of range for {} vertices", u, v, size()));
    if (u == v)
        throw InputError(fmt::format("loop at vertex {}", u));
    if (!adj_[u][v])
        ++edges_;
    adj_[u][v] = adj_[v][u] = 1;
}

std::size_t SimpleGraph::add_vertex() {
    for (auto& row : adj_)
        row.push_back(0);
    adj_.emplace_back(adj_.size() + 1, 0);
    return adj_.size() - 1;
}

SimpleGraph SimpleGraph::induced(const std::vector<std::size_t>& vertices) const {
    SimpleGraph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                h.add_edge(i, j);
    return h;
}

std::vector<std::vector<std::size_t>> SimpleGraph::components() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<char> seen(size(), 0);
    for (std::size_t s = 0; s < size(); ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (std::size_t u : neighbors(comp[i]))
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::string to_string(const SimpleGraph& g) {
    std::vector<std::string> es;
    for (auto [u, v] : g.edges())
        es.push_back(fmt::format("{}-{}", u, v));
    return fmt::format("n={} [{}]", g.size(), fmt::join(es, " "));
}

Arrangement graphic_arrangement(const SimpleGraph& g) {
    std::vector<Hyperplane> hs;
    for (auto [u, v] : g.edges())
        hs.push_back(difference_hyperplane(g.size(), u, v, 0));
    return Arrangement(g.size(), hs);
}

SimpleGraph complete_graph(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph cycle_graph(std::size_t n) {
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

namespace {

std::vector<std::size_t> lex_bfs(const SimpleGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<std::size_t>> label(n);
    std::vector<char> done(n, 0);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && (best == n || label[v] > label[best]))
                best = v;
        done[best] = 1;
        order.push_back(best);
        for (std::size_t u : g.neighbors(best))
            if (!done[u])
                label[u].push_back(n - step);
    }
    return order;
}

// Chordless cycle through v, u, ..., w where u, w are non-adjacent neighbors of v.
std::vector<std::size_t> cycle_through(const SimpleGraph& g, std::size_t v, std::size_t u, std::size_t w) {
    const std::size_t n = g.size();
    std::vector<char> blocked(n, 0);
    blocked[v] = 1;
    for (std::size_t x : g.neighbors(v))
        blocked[x] = 1;
    blocked[u] = blocked[w] = 0;
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t> queue{u};
    parent[u] = u;
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        if (x == w)
            break;
        for (std::size_t y : g.neighbors(x))
            if (!blocked[y] && parent[y] == n) {
                parent[y] = x;
                queue.push_back(y);
            }
    }
    if (parent[w] == n)
        return {};
    std::vector<std::size_t> path;
    for (std::size_t x = w; x != u; x = parent[x])
        path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    path.insert(path.begin(), v);
    return path;
}

std::vector<std::size_t> find_chordless_cycle(const SimpleGraph& g) {
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (!g.adjacent(nb[i], nb[j]))
                    if (auto c = cycle_through(g, v, nb[i], nb[j]); !c.empty())
                        return c;
    }
    return {};
}

} // namespace

ChordalityCertificate chordality(const SimpleGraph& g) {
    const std::size_t n = g.size();
    auto visit = lex_bfs(g);
    std::vector<std::size_t> peo(visit.rbegin(), visit.rend());
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[peo[i]] = i;
    for (std::size_t v : peo) {
        std::vector<std::size_t> later;
        for (std::size_t u : g.neighbors(v))
            if (pos[u] > pos[v])
                later.push_back(u);
        if (later.empty())
            continue;
        std::size_t first = *std::min_element(later.begin(), later.end(),
                                              [&](std::size_t a, std::size_t b) { return pos[a] < pos[b]; });
        for (std::size_t w : later)
            if (w != first && !g.adjacent(first, w)) {
                auto c = cycle_through(g, v, first, w);
                if (c.empty())
                    c = find_chordless_cycle(g);
                return {{}, c};
            }
    }
    return {peo, {}};
}

std::optional<std::vector<std::size_t>> is_chordal(const SimpleGraph& g) {
    auto c = chordality(g);
    if (!c.chordal())
        return std::nullopt;
    return c.peo;
}

std::optional<std::vector<std::size_t>> strong_elimination_ordering(const SimpleGraph& g) {
    const std::size_t n = g.size();
    std::vector<char> alive(n, 1);
    auto closed = [&](std::size_t v) {
        std::vector<char> s(n, 0);
        s[v] = 1;
        for (std::size_t u : g.neighbors(v))
            if (alive[u])
                s[u] = 1;
        return s;
    };
    auto subset = [&](const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] && !b[i])
                return false;
        return true;
    };
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        bool found = false;
        for (std::size_t v = 0; v < n && !found; ++v) {
            if (!alive[v])
                continue;
            std::vector<std::vector<char>> sets;
            auto nv = closed(v);
            for (std::size_t u = 0; u < n; ++u)
                if (alive[u] && nv[u])
                    sets.push_back(closed(u));
            std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
                return std::count(a.begin(), a.end(), 1) < std::count(b.begin(), b.end(), 1);
            });
            bool chain = true;
            for (std::size_t i = 0; i + 1 < sets.size() && chain; ++i)
                chain = subset(sets[i], sets[i + 1]);
            if (chain) {
                alive[v] = 0;
                order.push_back(v);
                found = true;
            }
        }
        if (!found)
            return std::nullopt;
    }
    return order;
}

bool is_strongly_chordal(const SimpleGraph& g) { return strong_elimination_ordering(g).has_value(); }

Exponents graphic_exponents(const SimpleGraph& g) {
    auto peo = is_chordal(g);
    if (!peo)
        throw InputError("graphic exponents need a chordal graph");
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < peo->size(); ++i)
        pos[(*peo)[i]] = i;
    Exponents e;
    for (std::size_t v = 0; v < g.size(); ++v) {
        Int later = 0;
        for (std::size_t u : g.neighbors(v))
            later += pos[u] > pos[v];
        e.push_back(later);
    }
    std::sort(e.begin(), e.end());
    return e;
}

SimpleGraph build_q_family(const QSpec& spec) {
    const std::size_t l = spec.l;
    if (l < 2)
        throw InputError("Q family needs l >= 2");
    if (spec.weights.size() != l * (l - 1) / 2)
        throw InputError(fmt::format("Q family with l = {} needs {} weights", l, l * (l - 1) / 2));
    SimpleGraph g = complete_graph(l);
    std::size_t k = 0;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j, ++k) {
            if (spec.weights[k] < 0)
                throw InputError("Q family weights must be nonnegative");
            for (Int t = 0; t < spec.weights[k]; ++t) {
                std::size_t w = g.add_vertex();
                g.add_edge(i, w);
                g.add_edge(j, w);
            }
        }
    return g;
}

SimpleGraph build_sun(std::size_t n) {
    if (n < 3)
        throw InputError("suns need n >= 3");
    QSpec spec{n, std::vector<Int>(n * (n - 1) / 2, 0)};
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++k)
            if (j == i + 1 || (i == 0 && j == n - 1))
                spec.weights[k] = 1;
    return build_q_family(spec);
}

SimpleGraph build_q4_ext(std::size_t k) {
    if (k < 1)
        throw InputError("Q4 extension needs k >= 1");
    SimpleGraph g = build_q_family({4, std::vector<Int>(6, static_cast<Int>(k))});
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t v = g.add_vertex();
        for (std::size_t j = 0; j < 3; ++j)
            g.add_edge(j, v);
    }
    return g;
}

SimpleGraph example_not_accurate() {
    return SimpleGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 9}, {2, 9}, {4, 9}, {0, 2},
                            {2, 4}, {4, 0}, {2, 7}, {7, 9}, {4, 8}, {8, 9}, {0, 6}, {6, 9}});
}

SimpleGraph example_not_accurate_extended() {
    SimpleGraph g = example_not_accurate();
    std::size_t v = g.add_vertex();
    for (std::size_t u : {0, 1, 2, 9})
        g.add_edge(u, v);
    return g;
}

SimpleGraph example_strong_not_g() {
    return SimpleGraph(6, {{0, 1}, {1, 2}, {2, 5}, {5, 4}, {4, 3}, {3, 0}, {3, 1}, {1, 4}, {4, 2}});
}

SimpleGraph contract(const SimpleGraph& g, Edge e) {
    auto [u, v] = e;
    if (u >= g.size() || v >= g.size() || !g.adjacent(u, v))
        throw InputError(fmt::format("({}, {}) is not an edge", u, v));
    const std::size_t keep = std::min(u, v), drop = std::max(u, v);
    auto index = [&](std::size_t x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
    SimpleGraph h(g.size() - 1);
    for (auto [a, b] : g.edges())
        if (index(a) != index(b))
            h.add_edge(index(a), index(b));
    return h;
}

SimpleGraph add_dominating_vertex(const SimpleGraph& g) {
    SimpleGraph h = g;
    std::size_t v = h.add_vertex();
    for (std::size_t u = 0; u < v; ++u)
        h.add_edge(u, v);
    return h;
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
    SimpleGraph h(a.size() + b.size());
    for (auto [u, v] : a.edges())
        h.add_edge(u, v);
    for (auto [u, v] : b.edges())
        h.add_edge(a.size() + u, a.size() + v);
    return h;
}

SimpleGraph identify_vertices(const SimpleGraph& a, std::size_t u, const SimpleGraph& b, std::size_t v) {
    if (u >= a.size() || v >= b.size())
        throw InputError("identified vertex out of range");
    auto index = [&](std::size_t x) { return x == v ? u : a.size() + x - (x > v ? 1 : 0); };
    SimpleGraph h(a.size() + b.size() - 1);
    for (auto [x, y] : a.edges())
        h.add_edge(x, y);
    for (auto [x, y] : b.edges())
        h.add_edge(index(x), index(y));
    return h;
}

namespace {

// The class is closed under induced subgraphs, so the decomposition below is forced: a member
// with at least two vertices is disconnected, has a cut vertex, or has a dominating vertex,
// and the pieces are again members.
std::optional<ClassGDerivation> derive(const SimpleGraph& g, const std::vector<std::size_t>& vs) {
    using R = ClassGDerivation::Rule;
    if (vs.size() == 1)
        return ClassGDerivation{R::Vertex, vs, vs[0], {}};
    SimpleGraph h = g.induced(vs);
    auto comps = h.components();
    auto lift = [&](const std::vector<std::size_t>& local) {
        std::vector<std::size_t> out;
        for (std::size_t x : local)
            out.push_back(vs[x]);
        return out;
    };
    auto combine = [&](R rule, std::size_t pivot, const std::vector<std::vector<std::size_t>>& parts)
        -> std::optional<ClassGDerivation> {
        ClassGDerivation d{rule, vs, pivot, {}};
        for (const auto& p : parts) {
            auto sub = derive(g, p);
            if (!sub)
                return std::nullopt;
            d.parts.push_back(std::move(*sub));
        }
        return d;
    };
    if (comps.size() > 1) {
        std::vector<std::vector<std::size_t>> parts;
        for (const auto& c : comps)
            parts.push_back(lift(c));
        return combine(R::Union, 0, parts);
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (h.degree(i) + 1 == vs.size()) {
            std::vector<std::size_t> rest;
            for (std::size_t j = 0; j < vs.size(); ++j)
                if (j != i)
                    rest.push_back(vs[j]);
            return combine(R::Dominate, vs[i], {rest});
        }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < vs.size(); ++j)
            if (j != i)
                rest.push_back(j);
        auto sub = h.induced(rest).components();
        if (sub.size() < 2)
            continue;
        std::vector<std::vector<std::size_t>> parts;
        for (const auto& c : sub) {
            std::vector<std::size_t> part{vs[i]};
            for (std::size_t x : c)
                part.push_back(vs[rest[x]]);
            std::sort(part.begin(), part.end());
            parts.push_back(std::move(part));
        }
        return combine(R::Identify, vs[i], parts);
    }
    return std::nullopt;
}

} // namespace

std::optional<ClassGDerivation> class_g_derivation(const SimpleGraph& g) {
    if (g.size() == 0)
        return std::nullopt;
    std::vector<std::size_t> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    return derive(g, all);
}

bool in_class_g(const SimpleGraph& g) { return class_g_derivation(g).has_value(); }

std::string to_string(const ClassGDerivation& d) {
    using R = ClassGDerivation::Rule;
    std::vector<std::string> parts;
    for (const auto& p : d.parts)
        parts.push_back(to_string(p));
    switch (d.rule) {
    case R::Vertex:
        return fmt::format("K1({})", d.pivot);
    case R::Union:
        return fmt::format("union({})", fmt::join(parts, ", "));
    case R::Identify:
        return fmt::format("identify@{}({})", d.pivot, fmt::join(parts, ", "));
    case R::Dominate:
        return fmt::format("dominate@{}({})", d.pivot, parts.front());
    }
    return "?";
}

SimpleGraph canonical_form(const SimpleGraph& g) {
    const std::size_t n = g.size();
    // Vertices grouped by degree; only orders within a group are tried.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && g.degree(order[j]) == g.degree(order[i]))
            ++j;
        groups.emplace_back(i, j);
        i = j;
    }
    auto code = [&](const std::vector<std::size_t>& ord) {
        std::vector<char> c;
        c.reserve(n * n / 2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                c.push_back(g.adjacent(ord[i], ord[j]));
        return c;
    };
    for (auto [a, b] : groups)
        std::sort(order.begin() + static_cast<std::ptrdiff_t>(a), order.begin() + static_cast<std::ptrdiff_t>(b));
    std::vector<std::size_t> best = order;
    std::vector<char> best_code = code(order);
    // Odometer over the permutations of each group.
    while (true) {
        std::size_t gi = groups.size();
        while (gi > 0) {
            auto [a, b] = groups[gi - 1];
            if (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(a),
                                      order.begin() + static_cast<std::ptrdiff_t>(b)))
                break;
            --gi;
        }
        if (gi == 0)
            break;
        auto c = code(order);
        if (c > best_code) {
            best_code = std::move(c);
            best = order;
        }
    }
    return g.induced(best);
}

std::vector<SimpleGraph> graphs_up_to_isomorphism(std::size_t n) {
    std::vector<SimpleGraph> current{SimpleGraph(0)};
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::vector<Edge>, SimpleGraph> seen;
        for (const auto& g : current)
            for (std::size_t mask = 0; mask < (std::size_t{1} << (k - 1)); ++mask) {
                SimpleGraph h = g;
                std::size_t v = h.add_vertex();
                for (std::size_t u = 0; u < v; ++u)
                    if (mask >> u & 1)
                        h.add_edge(u, v);
                SimpleGraph c = canonical_form(h);
                seen.emplace(c.edges(), c);
            }
        current.clear();
        for (auto& [key, g] : seen)
            current.push_back(std::move(g));
    }
    return current;
}

namespace {

VertexPartition normalize_partition(const VertexPartition& p) {
    std::vector<std::size_t> relabel(p.size(), p.size());
    VertexPartition out(p.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (relabel[p[i]] == p.size())
            relabel[p[i]] = next++;
        out[i] = relabel[p[i]];
    }
    return out;
}

std::size_t block_count(const VertexPartition& p) {
    return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
}

} // namespace

SimpleGraph quotient(const SimpleGraph& g, const VertexPartition& p) {
    if (p.size() != g.size())
        throw InputError("partition size does not match the graph");
    SimpleGraph q(block_count(p));
    for (auto [u, v] : g.edges())
        if (p[u] != p[v])
            q.add_edge(p[u], p[v]);
    return q;
}

Subspace partition_flat(const VertexPartition& p) {
    const std::size_t n = p.size();
    std::vector<Hyperplane> hs;
    std::vector<std::size_t> first(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (first[p[i]] == n)
            first[p[i]] = i;
        else
            hs.push_back(difference_hyperplane(n, first[p[i]], i, 0));
    }
    return *Subspace::solve(n, hs);
}

namespace {

Exponents take(const Exponents& e, std::size_t d) { return Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d)); }

bool sub_multiset(Exponents small, Exponents big) {
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

class GraphEngine {
public:
    GraphEngine(const SimpleGraph& g, Exponents e, std::size_t max_flats)
        : g_(g), e_(std::move(e)), max_flats_(max_flats) {
        n_ = g.size();
        lo_ = std::max<std::size_t>(1, g.components().size());
        VertexPartition top(n_);
        std::iota(top.begin(), top.end(), 0);
        levels_.push_back({top});
    }

    std::size_t lo() const { return lo_; }
    std::size_t n() const { return n_; }

    // Flats of dimension d, generated by merging adjacent blocks from the top down.
    const std::vector<VertexPartition>& flats(std::size_t d) {
        while (n_ - d >= levels_.size()) {
            std::set<VertexPartition> next;
            for (const auto& p : levels_.back())
                for (auto& c : children(p))
                    next.insert(std::move(c));
            if (next.size() > max_flats_)
                throw BudgetExceeded(fmt::format("more than {} flats of dimension {}", max_flats_, n_ - levels_.size()),
                                     next.size());
            levels_.emplace_back(next.begin(), next.end());
        }
        return levels_[n_ - d];
    }

    std::vector<VertexPartition> children(const VertexPartition& p) const {
        std::vector<VertexPartition> out;
        SimpleGraph q = quotient(g_, p);
        for (auto [a, b] : q.edges()) {
            VertexPartition c = p;
            for (auto& x : c)
                if (x == b)
                    x = a;
            out.push_back(normalize_partition(c));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Exponents of the contraction when it is chordal.
    const std::optional<Exponents>& exps(const VertexPartition& p) {
        auto it = exps_.find(p);
        if (it == exps_.end()) {
            SimpleGraph q = quotient(g_, p);
            std::optional<Exponents> e;
            if (is_chordal(q))
                e = graphic_exponents(q);
            it = exps_.emplace(p, std::move(e)).first;
        }
        return it->second;
    }

    bool matches(const VertexPartition& p) {
        const auto& e = exps(p);
        return e && *e == take(e_, block_count(p));
    }

    bool good(const VertexPartition& p) {
        auto it = good_.find(p);
        if (it != good_.end())
            return it->second;
        bool ok = matches(p) && (block_count(p) <= lo_ || good_child(p).has_value());
        good_[p] = ok;
        return ok;
    }

    std::optional<VertexPartition> good_child(const VertexPartition& p) {
        for (auto& c : children(p))
            if (good(c))
                return c;
        return std::nullopt;
    }

    WitnessLevel level(const VertexPartition& p, CertificateKind kind) {
        return {partition_flat(p), *exps(p), kind};
    }

    std::vector<WitnessLevel> chain(VertexPartition p, CertificateKind kind) {
        std::vector<WitnessLevel> out;
        while (true) {
            out.push_back(level(p, kind));
            if (block_count(p) <= lo_)
                break;
            p = *good_child(p);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    WitnessLevel top(CertificateKind kind) const { return {Subspace(n_), e_, kind}; }

private:
    const SimpleGraph& g_;
    Exponents e_;
    std::size_t max_flats_;
    std::size_t n_ = 0;
    std::size_t lo_ = 1;
    std::vector<std::vector<VertexPartition>> levels_;
    std::map<VertexPartition, std::optional<Exponents>> exps_;
    std::map<VertexPartition, bool> good_;
};

} // namespace

AccuracyReport graphic_accuracy(const SimpleGraph& g, const AccuracyOptions& options) {
    auto chordal = chordality(g);
    if (!chordal.chordal())
        throw InputError(fmt::format("accuracy needs a free arrangement; the graph has the chordless cycle {}",
                                     fmt::join(chordal.cycle, "-")));
    AccuracyReport report;
    report.exponents = graphic_exponents(g);
    report.exponent_source = std::string(kind_name(CertificateKind::Supersolvable));
    const auto top_kind = CertificateKind::Supersolvable;
    GraphEngine eng(g, report.exponents, options.search.poset.max_flats);
    const std::size_t l = eng.n();
    const std::size_t lo = eng.lo();

    std::optional<AccuracyWitness> flag;
    if (l <= lo) {
        flag = AccuracyWitness{WitnessKind::Flag, l, {eng.top(top_kind)}, {}};
    } else {
        for (const auto& p : eng.flats(l - 1))
            if (eng.good(p)) {
                flag = AccuracyWitness{WitnessKind::Flag, l, eng.chain(p, CertificateKind::Divisional), {}};
                flag->levels.push_back(eng.top(top_kind));
                break;
            }
    }
    report.flag = flag ? Decision::Yes : Decision::No;

    // Top-down: the first dimension with a good flat is k, provided each level above has a
    // chordal contraction with the prefix exponents.
    std::vector<WitnessLevel> upper;
    if (flag) {
        report.accurate = Decision::Yes;
        report.k = l > lo ? l - 1 : l;
    } else {
        for (std::size_t d = l - 1; d >= lo; --d) {
            std::optional<VertexPartition> candidate, chain_start;
            for (const auto& p : eng.flats(d)) {
                if (!eng.matches(p))
                    continue;
                if (!candidate)
                    candidate = p;
                if (eng.good(p)) {
                    chain_start = p;
                    break;
                }
            }
            if (chain_start) {
                report.accurate = Decision::Yes;
                report.k = d;
                auto levels = eng.chain(*chain_start, CertificateKind::Divisional);
                std::reverse(upper.begin(), upper.end());
                levels.insert(levels.end(), upper.begin(), upper.end());
                levels.push_back(eng.top(top_kind));
                upper = std::move(levels);
                break;
            }
            if (!candidate) {
                report.accurate = Decision::No;
                Frontier f;
                f.dim = d;
                f.flats = eng.flats(d).size();
                f.note = "no contraction is chordal with the prefix exponents";
                report.frontier.push_back(std::move(f));
                break;
            }
            upper.push_back(eng.level(*candidate, CertificateKind::Supersolvable));
            if (d == lo)
                break;
        }
    }
    if (report.k)
        report.coaccuracy = l - *report.k;

    if (report.accurate == Decision::Yes) {
        AccuracyWitness w = flag ? *flag : AccuracyWitness{WitnessKind::Accurate, 0, upper, {}};
        for (auto kind : {WitnessKind::Accurate, WitnessKind::KAccurate, WitnessKind::KCoaccurate}) {
            w.kind = kind;
            w.k = kind == WitnessKind::KAccurate ? *report.k : kind == WitnessKind::KCoaccurate ? *report.coaccuracy : 0;
            report.witnesses.push_back(w);
        }
        if (flag)
            report.witnesses.push_back(*flag);
    }

    if (options.almost) {
        if (report.accurate == Decision::Yes) {
            report.almost = Decision::Yes;
            AccuracyWitness w = *report.witness(WitnessKind::Accurate);
            w.kind = WitnessKind::Almost;
            report.witnesses.push_back(std::move(w));
        } else {
            AccuracyWitness w{WitnessKind::Almost, 0, {}, {}};
            report.almost = Decision::Yes;
            for (std::size_t d = lo; d < l; ++d) {
                auto& level = eng.flats(d);
                auto it = std::find_if(level.begin(), level.end(), [&](const VertexPartition& p) {
                    const auto& e = eng.exps(p);
                    return e && sub_multiset(*e, report.exponents);
                });
                if (it == level.end()) {
                    report.almost = Decision::No;
                    break;
                }
                w.levels.push_back(eng.level(*it, CertificateKind::Supersolvable));
            }
            if (report.almost == Decision::Yes) {
                w.levels.push_back(eng.top(top_kind));
                report.witnesses.push_back(std::move(w));
            }
        }
    }

    if (options.ind_flag) {
        // Chordal contractions are supersolvable, hence inductively free.
        report.ind_flag = report.flag;
        if (flag) {
            AccuracyWitness w = *flag;
            w.kind = WitnessKind::IndFlag;
            for (auto& lv : w.levels)
                lv.certificate = CertificateKind::Inductive;
            report.witnesses.push_back(std::move(w));
        }
    }
    report.notes.push_back("decided on contractions of the graph");
    return report;
}

bool check_graphic_witness(const SimpleGraph& g, const AccuracyWitness& w, std::string* why) {
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    const std::size_t n = g.size();
    if (!is_chordal(g))
        return fail("graph is not chordal");
    const Exponents e = graphic_exponents(g);
    const std::size_t lo = std::max<std::size_t>(1, g.components().size());
    if (w.levels.empty() || w.levels.back().flat.dim() != n || w.levels.back().exponents != e)
        return fail("last level must be the ambient space with the exponents of the graph");
    if (w.levels.size() != n - lo + 1 && n > lo)
        return fail(fmt::format("expected {} levels, got {}", n - lo + 1, w.levels.size()));
    const std::size_t top = w.chain_top(n);
    for (std::size_t i = 0; i < w.levels.size(); ++i) {
        const auto& lv = w.levels[i];
        const std::size_t d = n > lo ? lo + i : n;
        if (lv.flat.ambient() != n || lv.flat.dim() != d)
            return fail(fmt::format("level {} has the wrong dimension", i));
        // Recover the partition from the flat and check the flat is exactly its span.
        VertexPartition p(n);
        std::iota(p.begin(), p.end(), 0);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                if (lv.flat.inside(difference_hyperplane(n, a, b, 0)))
                    p[b] = std::min(p[b], p[a]);
        p = normalize_partition(p);
        if (!(partition_flat(p) == lv.flat))
            return fail(fmt::format("level of dimension {} is not a partition flat", d));
        for (std::size_t b = 0; b < block_count(p); ++b) {
            std::vector<std::size_t> block;
            for (std::size_t v = 0; v < n; ++v)
                if (p[v] == b)
                    block.push_back(v);
            if (g.induced(block).components().size() != 1)
                return fail(fmt::format("level of dimension {} is not a flat of the graphic arrangement", d));
        }
        SimpleGraph q = quotient(g, p);
        if (!is_chordal(q) || graphic_exponents(q) != lv.exponents)
            return fail(fmt::format("exponents at dimension {} disagree with the contraction", d));
        if (w.kind == WitnessKind::Almost ? !sub_multiset(lv.exponents, e) : lv.exponents != take(e, d))
            return fail(fmt::format("exponents at dimension {} are not admissible", d));
        if (i > 0 && d <= top && !w.levels[i - 1].flat.inside(lv.flat))
            return fail(fmt::format("levels {} and {} are not nested", d - 1, d));
    }
    return true;
}

VertexWeight VertexWeight::interval(Int lo, Int hi) {
    if (lo > hi)
        throw InputError(fmt::format("empty interval [{}, {}]", lo, hi));
    VertexWeight w;
    for (Int x = lo; x <= hi; ++x)
        w.values.push_back(x);
    return w;
}

VertexWeight VertexWeight::set(std::vector<Int> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return {std::move(values)};
}

bool VertexWeight::is_interval() const {
    return !values.empty() && values.back() - values.front() + 1 == static_cast<Int>(values.size());
}

void validate(const WeightedDigraph& d) {
    if (d.weights.size() != d.n)
        throw InputError(fmt::format("digraph has {} vertices but {} weights", d.n, d.weights.size()));
    for (auto [i, j] : d.arcs) {
        if (i >= d.n || j >= d.n)
            throw InputError(fmt::format("arc ({}, {}) out of range", i, j));
        if (i == j)
            throw InputError(fmt::format("loop at vertex {}", i));
    }
}

std::string to_string(const WeightedDigraph& d) {
    std::vector<std::string> arcs, ws;
    for (auto [i, j] : d.arcs)
        arcs.push_back(fmt::format("{}->{}", i, j));
    for (const auto& w : d.weights)
        ws.push_back(w.is_interval() ? fmt::format("[{},{}]", w.values.front(), w.values.back())
                                     : fmt::format("{{{}}}", fmt::join(w.values, ",")));
    return fmt::format("n={} arcs [{}] weights {}", d.n, fmt::join(arcs, " "), fmt::join(ws, " "));
}

Arrangement digraphic_arrangement(const WeightedDigraph& d) {
    validate(d);
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < d.n; ++i)
        for (std::size_t j = i + 1; j < d.n; ++j)
            hs.push_back(difference_hyperplane(d.n, i, j, 0));
    for (auto [i, j] : d.arcs)
        hs.push_back(difference_hyperplane(d.n, i, j, 1));
    for (std::size_t i = 0; i < d.n; ++i)
        for (Int x : d.weights[i].values)
            hs.push_back(coordinate_hyperplane(d.n, i, x));
    return Arrangement(d.n, hs);
}

namespace {

WeightedDigraph mutate(const WeightedDigraph& d, std::size_t v, std::size_t scope, bool sink) {
    validate(d);
    const std::size_t s = scope == 0 ? d.n : scope;
    const char* what = sink ? "sink" : "source";
    if (s > d.n || v >= s)
        throw InputError(fmt::format("vertex {} outside the mutation scope {}", v, s));
    for (auto [i, j] : d.arcs)
        if (i >= s || j >= s)
            throw InputError(fmt::format("vertex outside the scope {} is not isolated", s));
    for (std::size_t u = 0; u < s; ++u) {
        if (u == v)
            continue;
        Edge need = sink ? Edge{u, v} : Edge{v, u};
        if (!d.arcs.count(need))
            throw InputError(fmt::format("vertex {} is not a {} of the induced subgraph", v, what));
        if (!d.weights[u].is_interval())
            throw InputError(fmt::format("weight of vertex {} is not an interval", u));
    }
    if (!d.weights[v].is_interval())
        throw InputError(fmt::format("weight of vertex {} is not an interval", v));
    WeightedDigraph out = d;
    for (std::size_t u = 0; u < s; ++u) {
        if (u == v)
            continue;
        out.arcs.erase(sink ? Edge{u, v} : Edge{v, u});
        const auto& w = d.weights[u].values;
        out.weights[u] = sink ? VertexWeight::interval(w.front() - 1, w.back())
                              : VertexWeight::interval(w.front(), w.back() + 1);
    }
    return out;
}

} // namespace

WeightedDigraph mutate_sink(const WeightedDigraph& d, std::size_t v, std::size_t scope) {
    return mutate(d, v, scope, true);
}

WeightedDigraph mutate_source(const WeightedDigraph& d, std::size_t v, std::size_t scope) {
    return mutate(d, v, scope, false);
}

WeightedDigraph nish(const std::vector<std::vector<Int>>& sets) {
    WeightedDigraph d;
    d.n = sets.size();
    for (const auto& s : sets)
        d.weights.push_back(VertexWeight::set(s));
    return d;
}

std::optional<Nesting> nishi_nested(const std::vector<std::vector<Int>>& sets) {
    std::vector<VertexWeight> ws;
    for (const auto& s : sets)
        ws.push_back(VertexWeight::set(s));
    Nesting out;
    out.order.resize(sets.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return ws[a].size() > ws[b].size(); });
    out.strict = true;
    for (std::size_t i = 1; i < out.order.size(); ++i) {
        const auto& big = ws[out.order[i - 1]].values;
        const auto& small = ws[out.order[i]].values;
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end()))
            return std::nullopt;
        if (big.size() == small.size())
            out.strict = false;
    }
    return out;
}

Exponents nish_cone_exponents(const std::vector<std::vector<Int>>& sets, const Nesting& nesting) {
    Exponents e{1};
    for (std::size_t i = 0; i < nesting.order.size(); ++i)
        e.push_back(static_cast<Int>(VertexWeight::set(sets[nesting.order[i]]).size() + i));
    std::sort(e.begin(), e.end());
    return e;
}

Subspace simplicial_flat(const WeightedDigraph& d, std::size_t v) {
    validate(d);
    if (v >= d.n)
        throw InputError("vertex out of range");
    const std::size_t dim = d.n + 1;
    std::vector<Hyperplane> hs{coordinate_hyperplane(dim, d.n, 0)};
    for (std::size_t i = 0; i < d.n; ++i)
        if (i != v)
            hs.push_back(coordinate_hyperplane(dim, i, 0));
    return *Subspace::solve(dim, hs);
}

} // namespace arrlab
