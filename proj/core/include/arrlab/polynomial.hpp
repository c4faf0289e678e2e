#pragma once

#include "arrlab/rational.hpp"

#include <optional>
#include <string>
#include <utility>

namespace arrlab {

// Integer polynomial in t; coeffs[i] is the coefficient of t^i, no trailing zeros.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(IntVec coeffs);

    static Polynomial monomial(std::size_t degree);
    // prod (t - r) over the listed roots
    static Polynomial from_roots(const IntVec& roots);

    const IntVec& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    Int leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Int eval(Int t) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    // Exact division by a monic divisor: (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& monic) const;
    // Quotient if `divisor` divides exactly; the divisor must be monic.
    std::optional<Polynomial> divide(const Polynomial& divisor) const;

    std::string str() const;

private:
    void trim();
    IntVec coeffs_;
};

// Integer roots with multiplicity, ascending, when the polynomial is monic and splits over Z.
std::optional<IntVec> integer_roots(const Polynomial& p);

std::string factored(const IntVec& roots);

} // namespace arrlab
