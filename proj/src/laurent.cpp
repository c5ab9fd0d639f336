#include "qls/laurent.hpp"

#include <algorithm>
#include <cassert>

#include "qls/errors.hpp"

namespace qls {

LaurentSeries::LaurentSeries(const FieldCtx& f, int top, int prec, std::vector<FieldElement> coeffs)
    : field_(&f), top_(top), prec_(prec), coeffs_(std::move(coeffs)) {
    // normalize: strip zero leading coefficients
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + long(lead));
        top_ -= int(lead);
    }
    if (coeffs_.empty()) top_ = prec_ - 1;
    assert(coeffs_.empty() || int(coeffs_.size()) == top_ - prec_ + 1);
}

LaurentSeries LaurentSeries::zero_to_prec(const FieldCtx& f, int prec) {
    return LaurentSeries(f, prec - 1, prec, {});
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int prec) {
    const FieldCtx& f = p.field();
    if (p.is_zero() || p.deg() < prec) return zero_to_prec(f, prec);
    std::vector<FieldElement> c;
    c.reserve(std::size_t(p.deg() - prec + 1));
    for (int d = p.deg(); d >= prec; --d) c.push_back(p.coeff(d));
    return LaurentSeries(f, p.deg(), prec, std::move(c));
}

int LaurentSeries::top_deg() const {
    if (coeffs_.empty()) throw InsufficientPrecision("leading term not certified at this precision");
    return top_;
}

FieldElement LaurentSeries::coeff(int d) const {
    if (d < prec_) throw InsufficientPrecision("coefficient below trusted precision");
    if (coeffs_.empty() || d > top_) return 0;
    return coeffs_[std::size_t(top_ - d)];
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    assert(field_->same(*o.field_));
    const int prec = std::max(prec_, o.prec_);
    const int hi = std::max(coeffs_.empty() ? prec - 1 : top_, o.coeffs_.empty() ? prec - 1 : o.top_);
    if (hi < prec) return zero_to_prec(*field_, prec);
    std::vector<FieldElement> c;
    c.reserve(std::size_t(hi - prec + 1));
    for (int d = hi; d >= prec; --d) c.push_back(field_->add(coeff(d), o.coeff(d)));
    return LaurentSeries(*field_, hi, prec, std::move(c));
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries r = *this;
    for (FieldElement& x : r.coeffs_) x = field_->neg(x);
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o.negated(); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    assert(field_->same(*o.field_));
    // error terms: |f|·q^(prec_g - 1) and |g|·q^(prec_f - 1)
    const int top_f = coeffs_.empty() ? prec_ - 1 : top_;
    const int top_g = o.coeffs_.empty() ? o.prec_ - 1 : o.top_;
    const int prec = std::max(top_f + o.prec_, top_g + prec_);
    if (coeffs_.empty() || o.coeffs_.empty()) return zero_to_prec(*field_, prec);
    const int hi = top_ + o.top_;
    if (hi < prec) return zero_to_prec(*field_, prec);
    std::vector<FieldElement> c(std::size_t(hi - prec + 1), 0);
    const std::size_t imax = std::min(coeffs_.size(), c.size());
    for (std::size_t i = 0; i < imax; ++i) {
        if (coeffs_[i] == 0) continue;
        const std::size_t jmax = std::min(o.coeffs_.size(), c.size() - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (o.coeffs_[j] == 0) continue;
            c[i + j] = field_->add(c[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
        }
    }
    return LaurentSeries(*field_, hi, prec, std::move(c));
}

LaurentSeries LaurentSeries::inverse() const {
    if (coeffs_.empty()) throw InsufficientPrecision("cannot invert: leading term not certified");
    const FieldCtx& f = *field_;
    const int t = top_;
    const std::size_t len = coeffs_.size();
    // long division of 1 by the reduced series with unit leading term
    const FieldElement lead_inv = f.inv(coeffs_[0]);
    std::vector<FieldElement> g(len, 0);
    g[0] = lead_inv;
    for (std::size_t n = 1; n < len; ++n) {
        FieldElement acc = 0;
        for (std::size_t k = 1; k <= n; ++k)
            acc = f.add(acc, f.mul(coeffs_[k], g[n - k]));
        g[n] = f.neg(f.mul(lead_inv, acc));
    }
    // relative precision is preserved: trusted down to prec - 2*top
    return LaurentSeries(f, -t, prec_ - 2 * t, std::move(g));
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
    if (new_prec <= prec_) return *this;
    if (coeffs_.empty() || top_ < new_prec) return zero_to_prec(*field_, new_prec);
    std::vector<FieldElement> c(coeffs_.begin(), coeffs_.begin() + (top_ - new_prec + 1));
    return LaurentSeries(*field_, top_, new_prec, std::move(c));
}

Poly LaurentSeries::polynomial_part() const {
    if (prec_ > 0) throw InsufficientPrecision("degree-0 coefficient not trusted");
    const FieldCtx& f = *field_;
    if (coeffs_.empty() || top_ < 0) return Poly::zero(f);
    std::vector<FieldElement> c(std::size_t(top_) + 1, 0);
    for (int d = 0; d <= top_; ++d) c[std::size_t(d)] = coeff(d);
    return Poly::from_coeffs(f, std::move(c));
}

std::string LaurentSeries::to_string() const {
    if (coeffs_.empty()) return "O(Y^" + std::to_string(prec_ - 1) + ")";
    std::string out;
    for (int d = top_; d >= prec_; --d) {
        const FieldElement c = coeff(d);
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c);
            out += '*';
        }
        out += "Y^" + std::to_string(d);
    }
    if (out.empty()) out = "0";
    out += " + O(Y^" + std::to_string(prec_ - 1) + ")";
    return out;
}

LaurentSeries LaurentSeries::from_rational(const Poly& num, const Poly& den, int prec) {
    if (den.is_zero()) throw DivisionByZero();
    const FieldCtx& f = den.field();
    if (num.is_zero()) return zero_to_prec(f, prec);
    // generous working depth, then cut back to the requested precision
    const int work = prec - num.deg() - 2 * den.deg() - 4;
    return (from_poly(num, work) * from_poly(den, work).inverse()).truncated(prec);
}

LaurentSeries series_from_cf(const CFWord& w_in, int prec) {
    const CFWord w = canonicalize(w_in);
    // |value - p_n/q_n| = q^-(deg q_n + deg q_{n+1}); unroll until that is
    // below the target, then divide the exact convergent pair
    Convergents cv = convergents_of_letters(w.a0, {});
    long n = 0;
    long degq = 0, degq_next;
    for (;;) {
        if (n >= w.letter_count()) {
            // finite expansion: exact rational value
            return LaurentSeries::from_rational(cv.p(n), cv.q(n), prec);
        }
        const Poly& next = w.letter(n + 1);
        degq_next = degq + next.deg();
        if (degq + degq_next >= 1 - prec) break;
        const std::size_t sz = cv.ps.size();
        cv.ps.push_back(next * cv.ps[sz - 1] + cv.ps[sz - 2]);
        cv.qs.push_back(next * cv.qs[sz - 1] + cv.qs[sz - 2]);
        degq = degq_next;
        ++n;
    }
    LaurentSeries approx = LaurentSeries::from_rational(cv.p(n), cv.q(n), prec);
    // the dropped tail only touches degrees < prec
    return approx;
}

CfExtraction cf_from_series(const LaurentSeries& f_in, int max_terms) {
    CfExtraction out{{}, false};
    if (max_terms <= 0) {
        out.hit_max_terms = true;
        return out;
    }
    LaurentSeries x = f_in;
    for (;;) {
        if (x.prec() > 0) return out;  // integer part not certified
        const Poly a = x.polynomial_part();
        out.terms.push_back(a);
        if (int(out.terms.size()) >= max_terms) {
            out.hit_max_terms = true;
            return out;
        }
        const LaurentSeries rem = x - LaurentSeries::from_poly(a, x.prec());
        if (rem.is_zero_to_prec()) return out;  // exact end or below precision
        x = rem.inverse();
    }
}

int distance_valuation(const LaurentSeries& f, const LaurentSeries& g) {
    return (f - g).valuation();
}

}  // namespace qls
