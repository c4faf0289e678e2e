#include "arrlab/polynomial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <fmt/format.h>
#include <stdexcept>

namespace arrlab {

Polynomial::Polynomial(IntVec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree) {
    IntVec c(degree + 1, 0);
    c.back() = 1;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_roots(const IntVec& roots) {
    Polynomial p({1});
    for (Int r : roots)
        p = p * Polynomial({-r, 1});
    return p;
}

Int Polynomial::eval(Int t) const {
    Int v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        v = checked_add(checked_mul(v, t), *it);
    return v;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    IntVec c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked_add(a.coeff(i), b.coeff(i));
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    IntVec c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = checked_sub(a.coeff(i), b.coeff(i));
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    IntVec c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& monic) const {
    if (monic.is_zero() || monic.leading() != 1)
        throw std::invalid_argument("polynomial division needs a monic divisor");
    IntVec rem = coeffs_;
    int dd = monic.degree();
    if (degree() < dd)
        return {Polynomial(), *this};
    IntVec quot(static_cast<std::size_t>(degree() - dd + 1), 0);
    for (int i = degree(); i >= dd; --i) {
        Int q = rem[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q == 0)
            continue;
        for (int j = 0; j <= dd; ++j) {
            auto k = static_cast<std::size_t>(i - dd + j);
            rem[k] = checked_sub(rem[k], checked_mul(q, monic.coeffs_[static_cast<std::size_t>(j)]));
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> Polynomial::divide(const Polynomial& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

std::string Polynomial::str() const {
    if (coeffs_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Int c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Int a = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (a != 1 || i == 0)
            out += std::to_string(a);
        if (i >= 1)
            out += "t";
        if (i >= 2)
            out += "^" + std::to_string(i);
    }
    return out;
}

namespace {

// Root test without overflow concerns: Horner in arbitrary precision.
bool is_root(const Polynomial& p, Int t) {
    boost::multiprecision::cpp_int v = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        v = v * t + *it;
    return v == 0;
}

} // namespace

std::optional<IntVec> integer_roots(const Polynomial& p) {
    if (p.is_zero() || p.leading() != 1)
        return std::nullopt;
    IntVec roots;
    Polynomial rest = p;
    // zero roots first
    while (rest.degree() > 0 && rest.coeff(0) == 0) {
        roots.push_back(0);
        rest = rest.divmod(Polynomial({0, 1})).first;
    }
    while (rest.degree() > 0) {
        Int c0 = rest.coeff(0);
        Int a = c0 < 0 ? -c0 : c0;
        bool found = false;
        for (Int d = 1; d * d <= a && !found; ++d) {
            if (a % d != 0)
                continue;
            for (Int cand : {d, -d, a / d, -(a / d)}) {
                if (is_root(rest, cand)) {
                    roots.push_back(cand);
                    rest = rest.divmod(Polynomial({-cand, 1})).first;
                    found = true;
                    break;
                }
            }
        }
        if (!found)
            return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string factored(const IntVec& roots) {
    std::string out;
    std::size_t i = 0;
    while (i < roots.size()) {
        std::size_t j = i;
        while (j < roots.size() && roots[j] == roots[i])
            ++j;
        std::string f = roots[i] == 0 ? "t" : roots[i] > 0 ? fmt::format("(t - {})", roots[i]) : fmt::format("(t + {})", -roots[i]);
        out += f;
        if (j - i > 1)
            out += fmt::format("^{}", j - i);
        i = j;
    }
    return out.empty() ? "1" : out;
}

} // namespace arrlab
