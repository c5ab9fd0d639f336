#pragma once

#include <string>
#include <vector>

#include "qls/cfword.hpp"
#include "qls/poly.hpp"

namespace qls {

/// Truncated formal Laurent series in Y^-1 over F_q.
///
/// Stores the coefficients of every degree in [prec, top]; all stored
/// coefficients are exact, anything below prec is unknown. The leading
/// stored coefficient is nonzero unless the series is zero down to its
/// precision, in which case nothing is stored and only |f| < q^prec is
/// known. Precision propagates through arithmetic so a value is never
/// reported more accurately than it is trusted.
class LaurentSeries {
  public:
    static LaurentSeries zero_to_prec(const FieldCtx& f, int prec);
    /// Exact polynomial, truncated at (trusted down to) prec.
    static LaurentSeries from_poly(const Poly& p, int prec);
    /// num / den expanded down to degree prec. Throws DivisionByZero.
    static LaurentSeries from_rational(const Poly& num, const Poly& den, int prec);

    const FieldCtx& field() const { return *field_; }
    int prec() const { return prec_; }
    bool known_nonzero() const { return !coeffs_.empty(); }
    bool is_zero_to_prec() const { return coeffs_.empty(); }

    /// Degree of the leading (certified nonzero) term. Throws
    /// InsufficientPrecision when the series is zero to its precision.
    int top_deg() const;
    /// v(f) = -top_deg, so |f| = q^(-valuation).
    int valuation() const { return -top_deg(); }

    /// Coefficient at degree d; exact zero above top, throws below prec.
    FieldElement coeff(int d) const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries negated() const;
    /// Multiplicative inverse; requires a certified nonzero leading term.
    LaurentSeries inverse() const;
    /// Forgets everything below new_prec (no-op when already shallower).
    LaurentSeries truncated(int new_prec) const;

    /// Sum of the terms of degree >= 0. Requires prec <= 0.
    Poly polynomial_part() const;

    /// Rendered as `c*Y^k + ...` down to the precision floor.
    std::string to_string() const;

  private:
    LaurentSeries(const FieldCtx& f, int top, int prec, std::vector<FieldElement> coeffs);

    const FieldCtx* field_ = nullptr;
    int top_ = 0;   // degree of coeffs_[0]; meaningful only when nonempty
    int prec_ = 0;  // lowest trusted degree
    std::vector<FieldElement> coeffs_;  // descending degrees top_ .. prec_
};

/// Evaluates a continued-fraction word to a series trusted down to prec.
/// Unrolls letters until the convergent error falls below the target, then
/// divides the exact convergent pair.
LaurentSeries series_from_cf(const CFWord& w, int prec);

/// Continued-fraction extraction from a truncated series: repeatedly split
/// off the polynomial part and invert the remainder while each step is
/// certified by the available precision.
struct CfExtraction {
    std::vector<Poly> terms;  // a_0, a_1, ...; a_0 is the polynomial part
    bool hit_max_terms;       // false when precision ran out first
};
CfExtraction cf_from_series(const LaurentSeries& f, int max_terms);

/// -log_q |f - g| as an exact integer; throws InsufficientPrecision when the
/// difference is zero down to the common precision.
int distance_valuation(const LaurentSeries& f, const LaurentSeries& g);

/// Retry `fn(prec)` with doubled precision depth while it reports
/// InsufficientPrecision, up to cap_len coefficients.
template <class Fn>
auto with_deepening(int initial_len, int cap_len, Fn&& fn) {
    int len = std::max(initial_len, 8);
    for (;;) {
        try {
            return fn(len);
        } catch (const InsufficientPrecision&) {
            if (len >= cap_len) throw;
            len = std::min(len * 2, cap_len);
        }
    }
}

constexpr int kDeepeningCapLen = 1 << 14;

}  // namespace qls
