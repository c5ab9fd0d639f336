#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qls/field.hpp"

namespace qls {

/// Degree of the zero polynomial: a sentinel strictly below every real
/// degree, chosen far from INT_MIN so degree sums never overflow. It absorbs
/// under addition in the formula code paths that never see it anyway.
constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

/// Element of F_q[Y]. Coefficients are stored lowest degree first with no
/// trailing (leading) zeros, so the representation is canonical.
class Poly {
  public:
    Poly() = default;  // detached placeholder; any arithmetic on it asserts
    explicit Poly(const FieldCtx& f) : field_(&f) {}

    static Poly zero(const FieldCtx& f) { return Poly(f); }
    static Poly constant(const FieldCtx& f, FieldElement c);
    static Poly monomial(const FieldCtx& f, FieldElement c, int degree);
    static Poly variable(const FieldCtx& f) { return monomial(f, 1, 1); }
    /// Coefficients lowest degree first; trailing zeros are trimmed.
    static Poly from_coeffs(const FieldCtx& f, std::vector<FieldElement> coeffs);

    const FieldCtx& field() const { return *field_; }
    bool bound() const { return field_ != nullptr; }

    int deg() const { return coeffs_.empty() ? kNegInfDeg : int(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    FieldElement coeff(int k) const {
        return (k < 0 || k >= int(coeffs_.size())) ? FieldElement(0) : coeffs_[std::size_t(k)];
    }
    FieldElement leading() const { return coeffs_.empty() ? FieldElement(0) : coeffs_.back(); }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly negated() const;
    Poly scaled(FieldElement a) const;
    Poly shifted(int k) const;  // multiply by Y^k, k >= 0

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    /// Total order: by degree, then by coefficient codes from the top down.
    bool operator<(const Poly& o) const;

  private:
    void trim();

    const FieldCtx* field_ = nullptr;
    std::vector<FieldElement> coeffs_;
};

/// Euclidean division: a = quot * b + rem with deg rem < deg b. Throws
/// DivisionByZero when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// Monic gcd via the Euclidean divmod chain; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// All nonconstant polynomials with min_deg <= deg <= max_deg, each exactly
/// once, ordered by degree and then by coefficient codes (the base-q integer
/// whose digits are the coefficients, ascending). Requires 1 <= min_deg.
std::vector<Poly> enumerate_polys(const FieldCtx& f, int min_deg, int max_deg);

/// Grammar: terms `c`, `c*Y`, `c*Y^k`, `Y`, `Y^k` joined by `+`; coefficients
/// are integer codes in [0, q); whitespace is ignored. Like terms combine in
/// the field, so e.g. "Y+Y" over F_2 parses to the zero polynomial.
Poly parse_poly(const std::string& text, const FieldCtx& f);

/// Canonical descending-degree form, e.g. "Y^2+1", "2*Y+2", "0".
std::string format_poly(const Poly& p);

}  // namespace qls
