#include "arrlab/accuracy.hpp"

#include "arrlab/errors.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <unordered_map>

namespace arrlab {

namespace {

using Id = IntersectionPoset::Id;

constexpr std::array<std::pair<WitnessKind, std::string_view>, 6> kKinds{{
    {WitnessKind::Almost, "almost"},
    {WitnessKind::Accurate, "accurate"},
    {WitnessKind::KAccurate, "k-accurate"},
    {WitnessKind::KCoaccurate, "k-coaccurate"},
    {WitnessKind::Flag, "flag"},
    {WitnessKind::IndFlag, "ind-flag"},
}};

Exponents prefix(const Exponents& e, std::size_t d) { return Exponents(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(d)); }

bool sub_multiset(Exponents small, Exponents big) {
    std::sort(small.begin(), small.end());
    std::sort(big.begin(), big.end());
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Three-valued logic with No < Undecided < Yes.
Decision any_of(Decision a, Decision b) {
    if (a == Decision::Yes || b == Decision::Yes)
        return Decision::Yes;
    if (a == Decision::Undecided || b == Decision::Undecided)
        return Decision::Undecided;
    return Decision::No;
}
Decision all_of(Decision a, Decision b) {
    if (a == Decision::No || b == Decision::No)
        return Decision::No;
    if (a == Decision::Undecided || b == Decision::Undecided)
        return Decision::Undecided;
    return Decision::Yes;
}

Decision decide(const FreenessVerdict& v) {
    if (certified(v))
        return Decision::Yes;
    if (auto* u = std::get_if<Unknown>(&v); u && !u->exhausted)
        return Decision::Undecided;
    return Decision::No;
}

std::string outcome_text(const FreenessVerdict& v) {
    if (auto* u = std::get_if<Unknown>(&v))
        return "freeness not certified: " + u->reason;
    return describe(v);
}

// Searches over the lattice of one central arrangement with known exponents.
class Engine {
public:
    Engine(const Arrangement& a, Exponents e, const SearchOptions& options)
        : a_(a), e_(std::move(e)), options_(options), poset_(IntersectionPoset::build(a, options.poset)) {
        ambient_ = a.dim();
        center_ = poset_.level(poset_.levels() - 1).front();
        lo_ = std::max<std::size_t>(1, poset_.dim(center_));
        good_.assign(poset_.size(), -1);
        ind_.assign(poset_.size(), -1);
    }

    const IntersectionPoset& poset() const { return poset_; }
    std::size_t lo() const { return lo_; }
    std::size_t ambient() const { return ambient_; }
    Id center() const { return center_; }

    std::vector<Id> flats_of_dim(std::size_t d) const {
        if (d > ambient_ || ambient_ - d >= poset_.levels())
            return {};
        auto level = poset_.level(ambient_ - d);
        return {level.begin(), level.end()};
    }

    const Polynomial& chi(Id x) {
        auto it = chis_.find(x);
        if (it == chis_.end())
            it = chis_.emplace(x, poset_.restriction_char_poly(x)).first;
        return it->second;
    }

    bool matches(Id x) {
        std::size_t d = poset_.dim(x);
        if (targets_.size() <= d)
            targets_.resize(d + 1);
        if (!targets_[d])
            targets_[d] = Polynomial::from_roots(prefix(e_, d));
        return chi(x) == *targets_[d];
    }

    // Flag-accurate restriction with the prefix exponents, via a chain down to dimension lo.
    bool good(Id x) {
        if (good_[x] >= 0)
            return good_[x] == 1;
        bool ok = matches(x) && (poset_.dim(x) <= lo_ || good_child(x).has_value());
        good_[x] = ok;
        return ok;
    }
    std::optional<Id> good_child(Id x) {
        for (Id y : poset_.children(x))
            if (good(y))
                return y;
        return std::nullopt;
    }

    Decision inductive(Id x) {
        auto it = if_.find(x);
        if (it == if_.end()) {
            Arrangement r = restrict(a_, poset_.space(x));
            it = if_.emplace(x, decide(inductively_free(r, options_))).first;
        }
        return it->second;
    }

    Decision ind_good(Id x) {
        if (ind_[x] >= 0)
            return static_cast<Decision>(ind_[x]);
        Decision d = Decision::No;
        if (good(x)) {
            d = inductive(x);
            if (d != Decision::No && poset_.dim(x) > lo_) {
                Decision below = Decision::No;
                for (Id y : poset_.children(x)) {
                    below = any_of(below, ind_good(y));
                    if (below == Decision::Yes)
                        break;
                }
                d = all_of(d, below);
            }
        }
        ind_[x] = static_cast<signed char>(d);
        return d;
    }
    std::optional<Id> ind_child(Id x) {
        for (Id y : poset_.children(x))
            if (ind_good(y) == Decision::Yes)
                return y;
        return std::nullopt;
    }

    FreenessVerdict freeness(Id x) {
        auto it = free_.find(x);
        if (it == free_.end())
            it = free_.emplace(x, certify_free(restrict(a_, poset_.space(x)), Method::Auto, options_)).first;
        return it->second;
    }

    WitnessLevel level(Id x, std::optional<CertificateKind> kind) {
        auto roots = integer_roots(chi(x));
        return {poset_.space(x), roots ? pad_exponents(*roots, poset_.dim(x)) : Exponents{}, kind};
    }

    // Chain levels from x down to dimension lo, in increasing dimension.
    std::vector<WitnessLevel> chain(Id x, bool inductive_chain) {
        std::vector<WitnessLevel> out;
        auto kind = inductive_chain ? CertificateKind::Inductive : CertificateKind::Divisional;
        while (true) {
            out.push_back(level(x, kind));
            if (poset_.dim(x) <= lo_)
                break;
            x = *(inductive_chain ? ind_child(x) : good_child(x));
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    WitnessLevel top(std::optional<CertificateKind> kind) const {
        return {Subspace(ambient_), e_, kind};
    }

    const Arrangement& arrangement() const { return a_; }
    const Exponents& exponents() const { return e_; }

private:
    const Arrangement& a_;
    Exponents e_;
    SearchOptions options_;
    IntersectionPoset poset_;
    std::size_t ambient_ = 0;
    std::size_t lo_ = 1;
    Id center_ = 0;
    std::unordered_map<Id, Polynomial> chis_;
    std::vector<std::optional<Polynomial>> targets_;
    std::vector<signed char> good_;
    std::vector<signed char> ind_;
    std::unordered_map<Id, Decision> if_;
    std::unordered_map<Id, FreenessVerdict> free_;
};

void require_central(const Arrangement& a) {
    if (!a.is_central())
        throw InputError("accuracy needs a central arrangement; cone the input first");
}

Frontier frontier_of(Engine& eng, std::size_t d, std::string note) {
    Frontier f;
    f.dim = d;
    f.flats = eng.flats_of_dim(d).size();
    f.note = std::move(note);
    return f;
}

// Flag witness if one exists: a good flat of dimension ambient - 1 (or nothing to do).
std::optional<AccuracyWitness> flag_witness(Engine& eng, std::optional<CertificateKind> top_kind) {
    const std::size_t l = eng.ambient();
    AccuracyWitness w;
    w.kind = WitnessKind::Flag;
    w.k = l;
    if (l <= eng.lo()) {
        w.levels.push_back(eng.top(top_kind));
        return w;
    }
    for (Id x : eng.flats_of_dim(l - 1))
        if (eng.good(x)) {
            w.levels = eng.chain(x, false);
            w.levels.push_back(eng.top(top_kind));
            return w;
        }
    return std::nullopt;
}

std::size_t lowest_level(const Arrangement& a) {
    std::size_t c0 = a.dim() - a.rank();
    return std::max<std::size_t>(1, c0);
}

Subspace center_of(const Arrangement& a) {
    auto s = Subspace::solve(a.dim(), a.hyperplanes());
    return *s;
}

} // namespace

std::string_view witness_kind_name(WitnessKind k) {
    for (auto& [kind, name] : kKinds)
        if (kind == k)
            return name;
    return "?";
}

std::optional<WitnessKind> witness_kind_from_name(std::string_view name) {
    for (auto& [kind, n] : kKinds)
        if (n == name)
            return kind;
    return std::nullopt;
}

std::string_view decision_name(Decision d) {
    switch (d) {
    case Decision::Yes:
        return "yes";
    case Decision::No:
        return "no";
    case Decision::Undecided:
        return "undecided";
    }
    return "?";
}

std::size_t AccuracyWitness::chain_top(std::size_t ambient) const {
    switch (kind) {
    case WitnessKind::Flag:
    case WitnessKind::IndFlag:
        return ambient;
    case WitnessKind::KAccurate:
        return k;
    case WitnessKind::KCoaccurate:
        return ambient - k;
    default:
        return 0;
    }
}

const AccuracyWitness* AccuracyReport::witness(WitnessKind kind) const {
    for (const auto& w : witnesses)
        if (w.kind == kind)
            return &w;
    return nullptr;
}

AccuracyReport accuracy_profile(const Arrangement& a, const AccuracyOptions& options,
                                const std::optional<Exponents>& asserted) {
    require_central(a);
    AccuracyReport report;
    std::optional<CertificateKind> top_kind;
    std::optional<FreenessVerdict> top_verdict;
    if (asserted) {
        report.exponents = pad_exponents(*asserted, a.dim());
        report.exponent_source = "asserted";
        if (char_poly(a, options.search.poset) != Polynomial::from_roots(report.exponents))
            throw InputError("asserted exponents do not match the characteristic polynomial");
    } else {
        top_verdict = certify_free(a, Method::Auto, options.search);
        if (auto* n = std::get_if<NotFree>(&*top_verdict))
            throw InputError("accuracy needs a free arrangement; " + n->reason);
        if (auto* u = std::get_if<Unknown>(&*top_verdict))
            throw BudgetExceeded("freeness of the arrangement is undecided: " + u->reason, 0);
        const auto* c = certificate_of(*top_verdict);
        report.exponents = c->exponents;
        top_kind = c->kind();
        report.exponent_source = std::string(kind_name(*top_kind));
    }

    Engine eng(a, report.exponents, options.search);
    const std::size_t l = a.dim();
    const std::size_t lo = eng.lo();

    // Flag-accuracy is decided by the lattice alone: a chain with the prefix characteristic
    // polynomials is a divisional flag, so every level along it is free.
    auto flag = flag_witness(eng, top_kind);
    report.flag = flag ? Decision::Yes : Decision::No;
    if (!flag && l >= 1) {
        Frontier f = frontier_of(eng, l - 1, "no hyperplane restriction extends to a full chain");
        for (Id x : eng.flats_of_dim(l - 1))
            if (eng.matches(x))
                f.entries.push_back({eng.poset().generators(x), "exponents match, no chain below"});
        report.frontier.push_back(std::move(f));
    }

    // Maximal k: the highest dimension carrying a good flat, provided every level above it
    // has some free restriction with the prefix exponents.
    if (options.levels) {
        AccuracyWitness w;
        std::vector<WitnessLevel> upper;
        bool done = false;
        if (l <= lo) {
            report.accurate = Decision::Yes;
            report.k = l;
            w.levels.push_back(eng.top(top_kind));
            done = true;
        }
        for (std::size_t d = l - 1; !done && d >= lo; --d) {
            std::vector<Id> candidates;
            for (Id x : eng.flats_of_dim(d))
                if (eng.matches(x))
                    candidates.push_back(x);
            auto g = std::find_if(candidates.begin(), candidates.end(), [&](Id x) { return eng.good(x); });
            if (g != candidates.end()) {
                report.accurate = Decision::Yes;
                report.k = d;
                w.levels = eng.chain(*g, false);
                done = true;
                break;
            }
            Frontier f = frontier_of(eng, d, "");
            Decision level = Decision::No;
            for (Id x : candidates) {
                auto v = eng.freeness(x);
                Decision dx = decide(v);
                if (dx == Decision::Yes) {
                    upper.push_back(eng.level(x, certificate_of(v)->kind()));
                    level = Decision::Yes;
                    break;
                }
                // Exhausted searches do not refute freeness of a single restriction.
                level = Decision::Undecided;
                f.entries.push_back({eng.poset().generators(x), outcome_text(v)});
            }
            if (level != Decision::Yes) {
                report.accurate = candidates.empty() ? Decision::No : Decision::Undecided;
                f.note = candidates.empty() ? "no flat has the prefix exponents"
                                            : "no candidate restriction could be certified free";
                report.frontier.push_back(std::move(f));
                done = true;
                break;
            }
            if (d == lo)
                break;
        }
        if (report.accurate == Decision::Yes) {
            std::reverse(upper.begin(), upper.end());
            w.levels.insert(w.levels.end(), upper.begin(), upper.end());
            if (w.levels.empty() || w.levels.back().flat.dim() != l)
                w.levels.push_back(eng.top(top_kind));
            report.coaccuracy = l - *report.k;
            w.kind = WitnessKind::Accurate;
            report.witnesses.push_back(w);
            w.kind = WitnessKind::KAccurate;
            w.k = *report.k;
            report.witnesses.push_back(w);
            w.kind = WitnessKind::KCoaccurate;
            w.k = *report.coaccuracy;
            report.witnesses.push_back(w);
        }
    } else if (flag) {
        report.accurate = Decision::Yes;
    }
    if (flag) {
        // Flag-accurate means (l - 1)-accurate; a chain through all levels gives k = l - 1
        // in the definition's counting since X_l = V is always included.
        report.accurate = Decision::Yes;
        report.witnesses.push_back(*flag);
        if (!report.k) {
            report.k = l > lo ? l - 1 : l;
            report.coaccuracy = l - *report.k;
        }
    }

    if (options.almost) {
        if (report.accurate == Decision::Yes) {
            report.almost = Decision::Yes;
            AccuracyWitness w = report.witness(WitnessKind::Accurate) ? *report.witness(WitnessKind::Accurate) : *flag;
            w.kind = WitnessKind::Almost;
            w.k = 0;
            report.witnesses.push_back(std::move(w));
        } else {
            AccuracyWitness w;
            w.kind = WitnessKind::Almost;
            Decision all = Decision::Yes;
            for (std::size_t d = lo; d < l && all != Decision::No; ++d) {
                Decision level = Decision::No;
                for (Id x : eng.flats_of_dim(d)) {
                    auto roots = integer_roots(eng.chi(x));
                    if (!roots || !sub_multiset(*roots, report.exponents))
                        continue;
                    auto v = eng.freeness(x);
                    if (certified(v)) {
                        w.levels.push_back(eng.level(x, certificate_of(v)->kind()));
                        level = Decision::Yes;
                        break;
                    }
                    level = Decision::Undecided;
                }
                all = all_of(all, level);
            }
            report.almost = all;
            if (all == Decision::Yes) {
                w.levels.push_back(eng.top(top_kind));
                report.witnesses.push_back(std::move(w));
            }
        }
    }

    if (options.ind_flag) {
        if (!flag) {
            report.ind_flag = Decision::No;
        } else {
            Decision top = top_kind == CertificateKind::Inductive ? Decision::Yes
                                                                   : decide(inductively_free(a, options.search));
            Decision below = Decision::Yes;
            std::optional<Id> start;
            if (l > lo) {
                below = Decision::No;
                for (Id x : eng.flats_of_dim(l - 1)) {
                    Decision dx = eng.ind_good(x);
                    below = any_of(below, dx);
                    if (dx == Decision::Yes) {
                        start = x;
                        break;
                    }
                }
            }
            report.ind_flag = all_of(top, below);
            if (report.ind_flag == Decision::Yes) {
                AccuracyWitness w;
                w.kind = WitnessKind::IndFlag;
                w.k = l;
                if (start)
                    w.levels = eng.chain(*start, true);
                w.levels.push_back(eng.top(CertificateKind::Inductive));
                report.witnesses.push_back(std::move(w));
            } else {
                report.notes.push_back(top == Decision::No
                                           ? "flag-accurate, but the arrangement is not inductively free"
                                           : "flag-accurate, but no flag with inductively free restrictions was certified");
            }
        }
    }
    return report;
}

std::optional<AccuracyWitness> flag_accuracy(const Arrangement& a, const SearchOptions& options) {
    require_central(a);
    auto roots = integer_roots(char_poly(a, options.poset));
    if (!roots || std::any_of(roots->begin(), roots->end(), [](Int x) { return x < 0; }))
        return std::nullopt;
    Engine eng(a, pad_exponents(*roots, a.dim()), options);
    return flag_witness(eng, CertificateKind::Divisional);
}

bool check_witness(const Arrangement& a, const AccuracyWitness& w, std::string* why, const SearchOptions& options) {
    auto fail = [&](std::string msg) {
        if (why)
            *why = std::move(msg);
        return false;
    };
    try {
        require_central(a);
        const std::size_t l = a.dim();
        const std::size_t lo = lowest_level(a);
        if (w.levels.empty())
            return fail("witness has no levels");
        const Exponents& e = w.levels.back().exponents;
        if (w.levels.back().flat.dim() != l)
            return fail("last level must be the ambient space");
        if (e.size() != l || char_poly(a, options.poset) != Polynomial::from_roots(e))
            return fail("top exponents do not match the characteristic polynomial");
        if (w.levels.size() != l - lo + 1 && l > lo)
            return fail(fmt::format("expected {} levels, got {}", l - lo + 1, w.levels.size()));

        const std::size_t top = w.chain_top(l);
        if (w.kind == WitnessKind::KAccurate && (w.k < lo || w.k > l))
            return fail("k out of range");
        if (w.kind == WitnessKind::KCoaccurate && w.k > l - lo)
            return fail("k out of range");

        for (std::size_t i = 0; i < w.levels.size(); ++i) {
            const WitnessLevel& lv = w.levels[i];
            const std::size_t d = l > lo ? lo + i : l;
            if (lv.flat.ambient() != l || lv.flat.dim() != d)
                return fail(fmt::format("level {} has the wrong dimension", i));
            if (!as_flat(a, lv.flat))
                return fail(fmt::format("level of dimension {} is not a flat", d));
            Arrangement r = restrict(a, lv.flat);
            Polynomial chi = char_poly(r, options.poset);
            if (chi != Polynomial::from_roots(lv.exponents) || lv.exponents.size() != d)
                return fail(fmt::format("exponents at dimension {} disagree with the restriction", d));
            if (w.kind == WitnessKind::Almost) {
                if (!sub_multiset(lv.exponents, e))
                    return fail(fmt::format("exponents at dimension {} are not a sub-multiset", d));
            } else if (lv.exponents != prefix(e, d)) {
                return fail(fmt::format("exponents at dimension {} are not the initial segment", d));
            }
            if (i > 0 && d <= top && !w.levels[i - 1].flat.inside(lv.flat))
                return fail(fmt::format("levels {} and {} are not nested", d - 1, d));
            // Levels inside the chain are free by divisibility; others need a certificate.
            bool chained = d <= top && w.kind != WitnessKind::Almost;
            if (!chained && d < l) {
                auto v = certify_free(r, Method::Auto, options);
                if (!certified(v))
                    return fail(fmt::format("restriction at dimension {} is not certified free: {}", d, describe(v)));
                if (certificate_of(v)->exponents != lv.exponents)
                    return fail(fmt::format("certified exponents differ at dimension {}", d));
            }
            if (w.kind == WitnessKind::IndFlag && !certified(inductively_free(r, options)))
                return fail(fmt::format("restriction at dimension {} is not inductively free", d));
        }

        if (w.kind == WitnessKind::Flag || w.kind == WitnessKind::IndFlag) {
            DivisionalFlag flag;
            if (a.rank() > 0 && l - a.rank() == 0)
                flag.flats.push_back(center_of(a));
            for (std::size_t i = 0; i + 1 < w.levels.size(); ++i)
                flag.flats.push_back(w.levels[i].flat);
            std::vector<Polynomial> chis;
            for (const auto& x : flag.flats)
                chis.push_back(char_poly(restrict(a, x), options.poset));
            chis.push_back(char_poly(a, options.poset));
            for (std::size_t i = 0; i + 1 < chis.size(); ++i) {
                auto q = chis[i + 1].divide(chis[i]);
                if (!q)
                    return fail("flag is not a divisional flag");
                flag.quotients.push_back(*q);
            }
            auto r = replay(FreenessCertificate{a, e, flag}, options.poset);
            if (!r.ok)
                return fail("flag is not a divisional flag: " + r.message);
        } else {
            auto v = certify_free(a, Method::Auto, options);
            if (!certified(v))
                return fail("arrangement is not certified free: " + describe(v));
        }
        return true;
    } catch (const InputError& ex) {
        return fail(std::string("malformed witness: ") + ex.what());
    }
}

std::optional<AccuracyWitness> witness_from_cuts(const Arrangement& a, const std::vector<Hyperplane>& cuts,
                                                 WitnessKind kind, const SearchOptions& options) {
    require_central(a);
    auto roots = integer_roots(char_poly(a, options.poset));
    if (!roots)
        return std::nullopt;
    Engine eng(a, pad_exponents(*roots, a.dim()), options);
    Subspace x(a.dim());
    std::vector<WitnessLevel> upper;
    for (const auto& h : cuts) {
        if (h.dim() != a.dim())
            return std::nullopt;
        auto y = x.meet(h);
        if (!y || y->dim() + 1 != x.dim())
            return std::nullopt;
        x = *y;
        auto id = eng.poset().find(x);
        if (!id || !eng.matches(*id))
            return std::nullopt;
        if (x.dim() < eng.lo())
            return std::nullopt;
        upper.push_back(eng.level(*id, CertificateKind::Divisional));
    }
    auto id = eng.poset().find(x);
    if (!id || !eng.good(*id))
        return std::nullopt;
    AccuracyWitness w;
    w.kind = kind;
    w.k = a.dim();
    w.cuts = cuts;
    w.levels = eng.chain(*id, false);
    if (!upper.empty()) {
        upper.pop_back(); // x itself already closes the chain
        std::reverse(upper.begin(), upper.end());
        w.levels.insert(w.levels.end(), upper.begin(), upper.end());
        w.levels.push_back(eng.top(CertificateKind::Divisional));
    }
    if (kind == WitnessKind::IndFlag)
        for (auto& lv : w.levels)
            lv.certificate = CertificateKind::Inductive;
    return w;
}

std::optional<AccuracyWitness> simple_root_witness(const Arrangement& cone, const RootSystem& phi,
                                                   const SearchOptions& options) {
    require_central(cone);
    if (cone.dim() != phi.ambient + 1)
        throw InputError(fmt::format("expected the cone of a deformation of {} in dimension {}", phi.label,
                                     phi.ambient + 1));
    IntVec infinity(cone.dim(), 0);
    infinity.back() = 1;
    if (!cone.contains(normalize(infinity, 0)))
        throw InputError("arrangement does not contain the hyperplane at infinity");

    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < cone.size(); ++i) {
        IntVec linear(cone[i].normal.begin(), cone[i].normal.end() - 1);
        if (std::all_of(linear.begin(), linear.end(), [](Int v) { return v == 0; }))
            continue;
        Hyperplane lin = normalize(linear, 0);
        for (std::size_t s = 0; s < phi.rank; ++s)
            if (lin == phi.hyperplane(s)) {
                candidates.push_back(i);
                break;
            }
    }
    if (candidates.empty())
        throw InputError("no hyperplane of the cone is a translate of a simple root hyperplane");

    auto roots = integer_roots(char_poly(cone, options.poset));
    if (!roots)
        return std::nullopt;
    Engine eng(cone, pad_exponents(*roots, cone.dim()), options);
    const std::size_t steps = phi.rank - 1;
    std::vector<char> dead(eng.poset().size(), 0);
    std::vector<Hyperplane> cuts;
    std::function<bool(const Subspace&, std::size_t)> dfs = [&](const Subspace& x, std::size_t depth) -> bool {
        auto id = eng.poset().find(x);
        if (!id || dead[*id])
            return false;
        if (depth == steps) {
            if (eng.good(*id))
                return true;
            dead[*id] = 1;
            return false;
        }
        for (std::size_t i : candidates) {
            auto y = x.meet(cone[i]);
            if (!y || y->dim() + 1 != x.dim())
                continue;
            auto yid = eng.poset().find(*y);
            if (!yid || !eng.matches(*yid))
                continue;
            cuts.push_back(cone[i]);
            if (dfs(*y, depth + 1))
                return true;
            cuts.pop_back();
        }
        dead[*id] = 1;
        return false;
    };
    if (!dfs(Subspace(cone.dim()), 0))
        return std::nullopt;
    return witness_from_cuts(cone, cuts, WitnessKind::Flag, options);
}

} // namespace arrlab
