#include "qls/poly.hpp"

#include <cassert>
#include <cctype>

namespace qls {

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const FieldCtx& f, FieldElement c) {
    Poly p(f);
    if (c != 0) p.coeffs_ = {c};
    return p;
}

Poly Poly::monomial(const FieldCtx& f, FieldElement c, int degree) {
    assert(degree >= 0);
    Poly p(f);
    if (c != 0) {
        p.coeffs_.assign(std::size_t(degree) + 1, 0);
        p.coeffs_.back() = c;
    }
    return p;
}

Poly Poly::from_coeffs(const FieldCtx& f, std::vector<FieldElement> coeffs) {
    Poly p(f);
    p.coeffs_ = std::move(coeffs);
    for (FieldElement c : p.coeffs_)
        if (c >= f.q()) throw CoefficientOutOfRange(c, f.q());
    p.trim();
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    assert(field_ && field_->same(*o.field_));
    Poly r(*field_);
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = field_->add(coeff(int(i)), o.coeff(int(i)));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.negated(); }

Poly Poly::operator*(const Poly& o) const {
    assert(field_ && field_->same(*o.field_));
    Poly r(*field_);
    if (is_zero() || o.is_zero()) return r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r.coeffs_[i + j] = field_->add(r.coeffs_[i + j], field_->mul(coeffs_[i], o.coeffs_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::negated() const {
    Poly r = *this;
    for (FieldElement& c : r.coeffs_) c = field_->neg(c);
    return r;
}

Poly Poly::scaled(FieldElement a) const {
    Poly r(*field_);
    if (a == 0) return r;
    r.coeffs_ = coeffs_;
    for (FieldElement& c : r.coeffs_) c = field_->mul(c, a);
    return r;
}

Poly Poly::shifted(int k) const {
    assert(k >= 0);
    if (is_zero()) return *this;
    Poly r(*field_);
    r.coeffs_.assign(std::size_t(k), 0);
    r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
    return false;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    const FieldCtx& f = b.field();
    Poly quot(f), rem = a;
    const FieldElement lead_inv = f.inv(b.leading());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        const int shift = rem.deg() - b.deg();
        const FieldElement c = f.mul(rem.leading(), lead_inv);
        quot = quot + Poly::monomial(f, c, shift);
        rem = rem - b.scaled(c).shifted(shift);
    }
    return {quot, rem};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.field().inv(a.leading()));
    return a;
}

std::vector<Poly> enumerate_polys(const FieldCtx& f, int min_deg, int max_deg) {
    if (min_deg < 1 || min_deg > max_deg) throw Error("enumerate_polys requires 1 <= min_deg <= max_deg");
    std::vector<Poly> out;
    const unsigned q = f.q();
    for (int d = min_deg; d <= max_deg; ++d) {
        // all q^d choices of the lower coefficients, for each nonzero leader
        std::size_t lower = 1;
        for (int i = 0; i < d; ++i) lower *= q;
        for (unsigned lead = 1; lead < q; ++lead) {
            for (std::size_t n = 0; n < lower; ++n) {
                std::vector<FieldElement> c(std::size_t(d) + 1, 0);
                std::size_t rest = n;
                for (int i = 0; i < d; ++i) {
                    c[std::size_t(i)] = FieldElement(rest % q);
                    rest /= q;
                }
                c.back() = FieldElement(lead);
                out.push_back(Poly::from_coeffs(f, std::move(c)));
            }
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    unsigned number() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw SyntaxError("expected a number", i);
        unsigned long v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + unsigned(s[i] - '0');
            if (v > 100000) throw SyntaxError("number too large", i);
            ++i;
        }
        return unsigned(v);
    }
};

}  // namespace

Poly parse_poly(const std::string& text, const FieldCtx& f) {
    Cursor c{text};
    Poly acc(f);
    bool first = true;
    while (true) {
        if (c.done()) {
            if (first) throw SyntaxError("empty polynomial", c.i);
            break;
        }
        if (!first) {
            if (c.peek() != '+') throw SyntaxError("expected '+'", c.i);
            ++c.i;
        }
        first = false;

        // term: coefficient and/or Y power
        unsigned coef = 1;
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            std::size_t at = c.i;
            coef = c.number();
            have_coef = true;
            if (coef >= f.q()) throw CoefficientOutOfRange(coef, f.q());
            (void)at;
        }
        int degree = 0;
        if (c.peek() == '*') {
            if (!have_coef) throw SyntaxError("'*' without coefficient", c.i);
            ++c.i;
            if (c.peek() != 'Y') throw SyntaxError("expected 'Y'", c.i);
        }
        if (c.peek() == 'Y') {
            ++c.i;
            degree = 1;
            if (c.peek() == '^') {
                ++c.i;
                degree = int(c.number());
            }
        } else if (!have_coef) {
            throw SyntaxError("expected term", c.i);
        }
        acc = acc + Poly::monomial(f, FieldElement(coef), degree);
    }
    return acc;
}

std::string format_poly(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = p.deg(); k >= 0; --k) {
        FieldElement c = p.coeff(k);
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 'Y';
            if (k > 1) {
                out += '^';
                out += std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace qls
