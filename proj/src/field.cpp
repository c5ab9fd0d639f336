#include "qls/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace qls {

namespace {

constexpr unsigned kMaxOrder = 1024;

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Digits = std::vector<unsigned>;  // coefficients over F_p, lowest first, not normalized

Digits digits_of(unsigned code, unsigned p, unsigned e) {
    Digits d(e, 0);
    for (unsigned i = 0; i < e; ++i) {
        d[i] = code % p;
        code /= p;
    }
    return d;
}

int digits_deg(const Digits& d) {
    for (int i = int(d.size()) - 1; i >= 0; --i)
        if (d[std::size_t(i)] != 0) return i;
    return -1;
}

// remainder of a by b over F_p; b monic-normalizable (leading nonzero)
Digits digits_mod(Digits a, const Digits& b, unsigned p) {
    int db = digits_deg(b);
    unsigned blead = b[std::size_t(db)];
    // inverse of blead mod p by scan (p <= 31 here)
    unsigned binv = 1;
    for (unsigned x = 1; x < p; ++x)
        if (x * blead % p == 1) { binv = x; break; }
    for (int da = digits_deg(a); da >= db; da = digits_deg(a)) {
        unsigned factor = a[std::size_t(da)] * binv % p;
        for (int i = 0; i <= db; ++i) {
            unsigned sub = factor * b[std::size_t(i)] % p;
            std::size_t k = std::size_t(da - db + i);
            a[k] = (a[k] + p - sub) % p;
        }
    }
    return a;
}

Digits digits_mulmod(const Digits& a, const Digits& b, const Digits& modulus, unsigned p) {
    Digits prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return digits_mod(std::move(prod), modulus, p);
}

unsigned code_of(const Digits& d, unsigned p, unsigned e) {
    unsigned code = 0;
    for (unsigned i = e; i-- > 0;) code = code * p + (i < d.size() ? d[i] : 0);
    return code;
}

bool is_irreducible(const Digits& modulus, unsigned p, unsigned e) {
    // trial division by every monic polynomial of degree 1..e-1
    for (unsigned d = 1; d < e; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;  // choices for the non-leading coefficients
        for (unsigned n = 0; n < count; ++n) {
            Digits divisor = digits_of(n, p, d);
            divisor.resize(d + 1, 0);
            divisor[d] = 1;
            if (digits_deg(digits_mod(modulus, divisor, p)) < 0) return false;
        }
    }
    return true;
}

Digits default_modulus(unsigned p, unsigned e) {
    unsigned count = 1;
    for (unsigned i = 0; i < e; ++i) count *= p;
    for (unsigned n = 0; n < count; ++n) {
        Digits cand = digits_of(n, p, e);
        cand.resize(e + 1, 0);
        cand[e] = 1;
        if (is_irreducible(cand, p, e)) return cand;
    }
    throw Error("no irreducible modulus found");  // unreachable: irreducibles exist for every (p, e)
}

}  // namespace

FieldCtx::FieldCtx(unsigned p, unsigned e) : p_(p), e_(e) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (e < 1) throw Error("extension degree must be >= 1");
    unsigned q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error("field order exceeds 1024");
    }
    q_ = q;
    if (e == 1) {
        modulus_ = {0, 1};
    } else {
        Digits m = default_modulus(p, e);
        modulus_.assign(m.begin(), m.end());
    }
    build_tables();
}

FieldCtx::FieldCtx(unsigned p, unsigned e, const std::vector<FieldElement>& modulus) : p_(p), e_(e) {
    if (!is_prime(p)) throw Error("field characteristic must be prime");
    if (e < 2) throw Error("explicit modulus requires extension degree >= 2");
    unsigned q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error("field order exceeds 1024");
    }
    q_ = q;
    if (modulus.size() != e + 1 || modulus[e] != 1) throw Error("modulus must be monic of degree e");
    Digits m(modulus.begin(), modulus.end());
    for (unsigned c : m)
        if (c >= p) throw Error("modulus coefficients must lie in [0, p)");
    if (!is_irreducible(m, p, e)) throw Error("modulus is reducible over F_p");
    modulus_ = modulus;
    build_tables();
}

FieldCtx FieldCtx::from_order(unsigned q) {
    if (q < 2 || q > kMaxOrder) throw Error("field order must lie in [2, 1024]");
    for (unsigned p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        unsigned e = 0, rest = q;
        while (rest % p == 0) { rest /= p; ++e; }
        if (rest != 1) break;
        return FieldCtx(p, e);
    }
    throw Error("field order " + std::to_string(q) + " is not a prime power");
}

void FieldCtx::build_tables() {
    const unsigned q = q_;
    Digits mod(modulus_.begin(), modulus_.end());

    neg_.resize(q);
    add_.resize(std::size_t(q) * q);
    mul_.resize(std::size_t(q) * q);
    inv_.assign(q, 0);

    for (unsigned a = 0; a < q; ++a) {
        Digits da = digits_of(a, p_, e_);
        Digits dn(e_);
        for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = FieldElement(code_of(dn, p_, e_));
        for (unsigned b = 0; b <= a; ++b) {
            Digits db = digits_of(b, p_, e_);
            Digits ds(e_);
            for (unsigned i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
            FieldElement s = FieldElement(code_of(ds, p_, e_));
            add_[std::size_t(a) * q + b] = s;
            add_[std::size_t(b) * q + a] = s;
            FieldElement m = FieldElement(code_of(digits_mulmod(da, db, mod, p_), p_, e_));
            mul_[std::size_t(a) * q + b] = m;
            mul_[std::size_t(b) * q + a] = m;
        }
    }
    // inverses via x^(q-2)
    for (unsigned a = 1; a < q; ++a) {
        FieldElement r = 1, base = FieldElement(a);
        unsigned n = q - 2;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        inv_[a] = r;
    }
}

FieldElement FieldCtx::pow(FieldElement a, long long n) const {
    if (n < 0) {
        a = inv(a);
        n = -n;
    }
    FieldElement r = 1;
    while (n) {
        if (n & 1) r = mul(r, a);
        a = mul(a, a);
        n >>= 1;
    }
    return r;
}

}  // namespace qls
