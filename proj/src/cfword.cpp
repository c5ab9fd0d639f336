#include "qls/cfword.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>

#include "qls/errors.hpp"

namespace qls {

const Poly& CFWord::letter(long i) const {
    assert(i >= 1);
    if (i <= long(preperiod.size())) return preperiod[std::size_t(i - 1)];
    assert(!period.empty());
    return period[std::size_t((i - long(preperiod.size()) - 1) % long(period.size()))];
}

long CFWord::letter_count() const {
    return period.empty() ? long(preperiod.size()) : LONG_MAX / 2;
}

namespace {

// smallest period of the letter list via the KMP border array
std::size_t primitive_root_length(const std::vector<Poly>& w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t b = border[i - 1];
        while (b > 0 && w[i] != w[b]) b = border[b - 1];
        if (w[i] == w[b]) ++b;
        border[i] = b;
    }
    const std::size_t p = n - border[n - 1];
    return (n % p == 0) ? p : n;
}

void require_nonconstant(const std::vector<Poly>& letters) {
    for (const Poly& x : letters)
        if (x.deg() < 1) throw ConstantPartialQuotient();
}

}  // namespace

CFWord canonicalize(CFWord w) {
    require_nonconstant(w.preperiod);
    require_nonconstant(w.period);
    if (!w.period.empty()) {
        const std::size_t root = primitive_root_length(w.period);
        if (root < w.period.size()) w.period.resize(root);
        // absorb a_r = b_s: drop the preperiod letter, rotate the period right
        while (!w.preperiod.empty() && w.preperiod.back() == w.period.back()) {
            w.preperiod.pop_back();
            std::rotate(w.period.begin(), w.period.end() - 1, w.period.end());
        }
    }
    return w;
}

bool is_canonical(const CFWord& w) {
    for (const Poly& x : w.preperiod)
        if (x.deg() < 1) return false;
    for (const Poly& x : w.period)
        if (x.deg() < 1) return false;
    if (w.period.empty()) return true;
    if (primitive_root_length(w.period) != w.period.size()) return false;
    return w.preperiod.empty() || w.preperiod.back() != w.period.back();
}

bool is_purely_periodic(const CFWord& w) {
    return w.quadratic() && w.preperiod.empty() && w.a0 == w.period.back();
}

CFWord negated(const CFWord& w) {
    CFWord r = w;
    r.a0 = r.a0.negated();
    for (Poly& x : r.preperiod) x = x.negated();
    for (Poly& x : r.period) x = x.negated();
    return r;
}

CFWord twist(const CFWord& w, FieldElement a, Parity start_parity) {
    const FieldCtx& f = w.field();
    if (a == 0) throw InversionOfZero();
    const FieldElement ainv = f.inv(a);
    // scale factor for the letter at absolute index i
    auto factor = [&](long i) {
        bool plus = (i % 2 == 0);
        if (start_parity == Parity::Odd) plus = !plus;
        return plus ? a : ainv;
    };
    CFWord r;
    r.a0 = w.a0.scaled(factor(0));
    r.preperiod.reserve(w.preperiod.size());
    long idx = 1;
    for (const Poly& x : w.preperiod) r.preperiod.push_back(x.scaled(factor(idx++)));
    std::vector<Poly> period = w.period;
    if (period.size() % 2 == 1 && a != ainv) {
        // the alternation has period 2; unroll so the twisted block closes
        period.insert(period.end(), w.period.begin(), w.period.end());
    }
    r.period.reserve(period.size());
    for (const Poly& x : period) r.period.push_back(x.scaled(factor(idx++)));
    return canonicalize(std::move(r));
}

std::vector<Poly> tau_period(const std::vector<Poly>& base_period, const TwistSpec& spec) {
    assert(!base_period.empty());
    const FieldCtx& f = base_period.front().field();
    if (spec.a == 0) throw InversionOfZero();
    const FieldElement ainv = f.inv(spec.a);
    const long s = long(base_period.size());
    const long len = (base_period.size() % 2 == 1 && spec.a != ainv) ? 2 * s : s;

    std::vector<Poly> out;
    out.reserve(std::size_t(len));
    for (long k = 0; k < len; ++k) {
        // forward: b_{j+k} twisted a^{(-1)^k}; mirrored: b_{j-1-k} twisted a^{(-1)^{k+1}}
        long idx = spec.mirrored ? (spec.j - 2 - k) : (spec.j - 1 + k);
        idx %= s;
        if (idx < 0) idx += s;
        const bool plus = spec.mirrored ? (k % 2 == 1) : (k % 2 == 0);
        out.push_back(base_period[std::size_t(idx)].scaled(plus ? spec.a : ainv));
    }
    // reduce to the primitive root (a twist can merge letters)
    const std::size_t root = primitive_root_length(out);
    if (root < out.size()) out.resize(root);
    return out;
}

CFWord select_tau(const std::vector<Poly>& base_period, const TwistSpec& spec) {
    std::vector<Poly> cyc = tau_period(base_period, spec);
    CFWord w;
    w.a0 = cyc.front();
    w.period.assign(cyc.begin() + 1, cyc.end());
    w.period.push_back(cyc.front());
    return canonicalize(std::move(w));
}

Convergents convergents_of_letters(const Poly& a0, const std::vector<Poly>& letters) {
    const FieldCtx& f = a0.field();
    Convergents c;
    c.ps.reserve(letters.size() + 2);
    c.qs.reserve(letters.size() + 2);
    c.ps.push_back(Poly::constant(f, 1));
    c.qs.push_back(Poly::zero(f));
    c.ps.push_back(a0);
    c.qs.push_back(Poly::constant(f, 1));
    for (const Poly& a : letters) {
        const std::size_t n = c.ps.size();
        c.ps.push_back(a * c.ps[n - 1] + c.ps[n - 2]);
        c.qs.push_back(a * c.qs[n - 1] + c.qs[n - 2]);
    }
    return c;
}

Convergents convergents(const CFWord& w, long n) {
    if (n < 0) throw Error("convergents index must be >= 0");
    if (n > w.letter_count()) throw Error("finite word has too few letters");
    std::vector<Poly> letters;
    letters.reserve(std::size_t(n));
    for (long i = 1; i <= n; ++i) letters.push_back(w.letter(i));
    return convergents_of_letters(w.a0, letters);
}

CFWord galois_conjugate_period(const CFWord& w) {
    if (!is_purely_periodic(w)) throw NotPurelyPeriodic();
    // cyclic sequence t_0 = a0, t_1, ..., t_{s-1} = period without its last letter
    std::vector<Poly> cyc;
    cyc.reserve(w.period.size());
    cyc.push_back(w.a0);
    cyc.insert(cyc.end(), w.period.begin(), w.period.end() - 1);
    CFWord r;
    r.a0 = Poly::zero(w.field());
    r.period.reserve(cyc.size());
    for (std::size_t i = cyc.size(); i-- > 0;) r.period.push_back(cyc[i].negated());
    return canonicalize(std::move(r));
}

QuadraticMinPoly minimal_polynomial(const CFWord& w_in) {
    CFWord w = canonicalize(w_in);
    if (!w.quadratic()) throw NotQuadratic();
    const FieldCtx& f = w.field();

    // purely periodic core tau = [b_1; ov(b_2 ... b_s b_1)] of the tail:
    // with P_s/Q_s the convergents of [0; b_1 ... b_s],
    //   Q: A0 t^2 + B0 t + C0 = 0,  A0 = P_s, B0 = P_{s-1} - Q_s, C0 = -Q_{s-1}.
    const Convergents core = convergents_of_letters(Poly::zero(f), w.period);
    const long s = long(w.period.size());
    const Poly A0 = core.p(s);
    const Poly B0 = core.p(s - 1) - core.q(s);
    const Poly C0 = core.q(s - 1).negated();

    // transport through alpha = (P_r t + P_{r-1}) / (Q_r t + Q_{r-1})
    const long r = long(w.preperiod.size());
    const Convergents cv = convergents(w, r);
    const Poly &Pr = cv.p(r), &Pr1 = cv.p(r - 1), &Qr = cv.q(r), &Qr1 = cv.q(r - 1);

    const Poly two = Poly::constant(f, f.add(1, 1));
    QuadraticMinPoly m;
    m.A = A0 * Qr1 * Qr1 - B0 * Qr1 * Qr + C0 * Qr * Qr;
    m.B = (Pr1 * Qr + Pr * Qr1) * B0 - two * (A0 * Pr1 * Qr1 + C0 * Pr * Qr);
    m.C = A0 * Pr1 * Pr1 - B0 * Pr1 * Pr + C0 * Pr * Pr;

    Poly g = poly_gcd(poly_gcd(m.A, m.B), m.C);
    if (g.deg() > 0) {
        m.A = poly_divmod(m.A, g).first;
        m.B = poly_divmod(m.B, g).first;
        m.C = poly_divmod(m.C, g).first;
    }
    assert(!m.A.is_zero());
    // in characteristic 2 an irreducible A x^2 + C is inseparable, so B != 0
    assert(f.p() != 2 || !m.B.is_zero());
    const FieldElement scale = f.inv(m.A.leading());
    m.A = m.A.scaled(scale);
    m.B = m.B.scaled(scale);
    m.C = m.C.scaled(scale);
    return m;
}

int height_exponent(const CFWord& w_in) {
    CFWord w = canonicalize(w_in);
    if (!w.quadratic()) throw NotQuadratic();
    const long r = long(w.preperiod.size());
    if (r == 0) return -w.period.back().deg();
    int sum = 0;
    for (const Poly& x : w.preperiod) sum += x.deg();
    const Poly& ar = w.preperiod.back();
    const Poly& bs = w.period.back();
    const Poly diff = ar - bs;
    assert(!diff.is_zero());
    return 2 * sum - ar.deg() - bs.deg() + diff.deg();
}

std::optional<int> distance_exponent(const CFWord& f_in, const CFWord& g_in) {
    CFWord f = canonicalize(f_in), g = canonicalize(g_in);
    if (f == g) return std::nullopt;
    if (f.a0 != g.a0) {
        const Poly d = f.a0 - g.a0;
        return -d.deg();  // |f - g| = |a0 difference|, a unit-sized value when constant
    }
    // stream tail letters to the first mismatch; bound guarantees detection
    const long pf = f.period.empty() ? 1 : long(f.period.size());
    const long pg = g.period.empty() ? 1 : long(g.period.size());
    const long bound = long(std::max(f.preperiod.size(), g.preperiod.size())) + std::lcm(pf, pg) + 1;
    int sum = 0;
    for (long i = 1; i <= bound + 1; ++i) {
        const bool hf = i <= f.letter_count();
        const bool hg = i <= g.letter_count();
        if (!hf && !hg) return std::nullopt;  // identical finite expansions
        if (hf != hg) {
            // one expansion ended: the other keeps a letter of positive degree
            const Poly& next = hf ? f.letter(i) : g.letter(i);
            return 2 * sum + next.deg();
        }
        const Poly &a = f.letter(i), &b = g.letter(i);
        if (a != b) {
            const Poly d = a - b;
            return 2 * sum + a.deg() + b.deg() - d.deg();
        }
        sum += a.deg();
    }
    return std::nullopt;  // streams agreed past the periodicity bound: same series
}

std::vector<std::vector<Poly>> orbit_tail_periods(const std::vector<Poly>& period) {
    const FieldCtx& f = period.front().field();
    std::vector<std::vector<Poly>> out;
    for (int mirrored = 0; mirrored < 2; ++mirrored) {
        for (int j = 1; j <= int(period.size()); ++j) {
            for (FieldElement a = 1; a < f.q(); ++a) {
                std::vector<Poly> tau = tau_period(period, TwistSpec{j, a, mirrored == 1});
                if (std::find(out.begin(), out.end(), tau) == out.end()) out.push_back(std::move(tau));
            }
        }
    }
    return out;
}

bool equivalent(const CFWord& f_in, const CFWord& g_in) {
    CFWord f = canonicalize(f_in), g = canonicalize(g_in);
    if (!f.quadratic() || !g.quadratic()) throw NotQuadratic();
    for (const auto& tau : orbit_tail_periods(g.period))
        if (tau == f.period) return true;
    return false;
}

WordStats cf_stats(const CFWord& w_in) {
    CFWord w = canonicalize(w_in);
    if (!w.quadratic()) throw NotQuadratic();
    WordStats st{0, 0, INT_MAX};
    const std::size_t s = w.period.size();
    for (std::size_t i = 0; i < s; ++i) {
        const int d = w.period[i].deg();
        const int dn = w.period[(i + 1) % s].deg();
        st.M = std::max(st.M, d);
        st.m = std::min(st.m, d);
        st.M2 = std::max(st.M2, d + dn);
    }
    return st;
}

CFWord parse_cfword(const std::string& text, const FieldCtx& f) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[') throw SyntaxError("expected '['", i);
    ++i;
    const std::size_t close = text.rfind(']');
    if (close == std::string::npos || close < i) throw SyntaxError("expected ']'", text.size());
    for (std::size_t k = close + 1; k < text.size(); ++k)
        if (!std::isspace(static_cast<unsigned char>(text[k]))) throw SyntaxError("trailing text after ']'", k);
    const std::string body = text.substr(i, close - i);
    const std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw SyntaxError("expected ';'", i);

    CFWord w;
    w.a0 = parse_poly(body.substr(0, semi), f);

    std::string rest = body.substr(semi + 1);
    const std::size_t bar = rest.find('|');
    auto parse_list = [&](const std::string& part) {
        std::vector<std::string> items;
        std::size_t start = 0;
        for (std::size_t k = 0; k <= part.size(); ++k) {
            if (k == part.size() || part[k] == ',') {
                items.push_back(part.substr(start, k - start));
                start = k + 1;
            }
        }
        std::vector<Poly> out;
        if (items.size() == 1 && items[0].find_first_not_of(" \t") == std::string::npos)
            return out;  // empty list
        for (const std::string& item : items) out.push_back(parse_poly(item, f));
        return out;
    };
    if (bar == std::string::npos) {
        w.preperiod = parse_list(rest);
    } else {
        w.preperiod = parse_list(rest.substr(0, bar));
        w.period = parse_list(rest.substr(bar + 1));
        if (w.period.empty()) throw SyntaxError("empty period after '|'", close);
    }
    return w;
}

std::string format_cfword(const CFWord& w) {
    std::string out = "[" + format_poly(w.a0) + ";";
    for (std::size_t i = 0; i < w.preperiod.size(); ++i) {
        if (i) out += ',';
        out += format_poly(w.preperiod[i]);
    }
    if (!w.period.empty()) {
        out += '|';
        for (std::size_t i = 0; i < w.period.size(); ++i) {
            if (i) out += ',';
            out += format_poly(w.period[i]);
        }
    }
    out += ']';
    return out;
}

std::vector<Poly> de_bruijn_word(const std::vector<Poly>& alphabet, int order) {
    if (alphabet.empty() || order < 1) throw Error("de_bruijn_word requires letters and order >= 1");
    const std::size_t n = alphabet.size();
    // FKM: concatenate Lyndon words whose length divides `order`
    std::vector<std::size_t> a(std::size_t(order) + 1, 0);
    std::vector<std::size_t> seq;
    auto db = [&](auto&& self, std::size_t t, std::size_t p) -> void {
        if (t > std::size_t(order)) {
            if (std::size_t(order) % p == 0)
                for (std::size_t i = 1; i <= p; ++i) seq.push_back(a[i]);
        } else {
            a[t] = a[t - p];
            self(self, t + 1, p);
            for (std::size_t j = a[t - p] + 1; j < n; ++j) {
                a[t] = j;
                self(self, t + 1, t);
            }
        }
    };
    db(db, 1, 1);
    std::vector<Poly> out;
    out.reserve(seq.size());
    for (std::size_t idx : seq) out.push_back(alphabet[idx]);
    return out;
}

std::vector<Poly> de_bruijn_word(const FieldCtx& f, int k, int order) {
    if (k < 1) throw Error("de_bruijn_word requires k >= 1");
    return de_bruijn_word(enumerate_polys(f, k, k), order);
}

std::vector<Poly> necklace_twist_key(const std::vector<Poly>& period) {
    const FieldCtx& f = period.front().field();
    const std::size_t s = period.size();
    std::vector<Poly> best;
    std::vector<Poly> cand(s);
    for (std::size_t rot = 0; rot < s; ++rot) {
        for (FieldElement a = 1; a < f.q(); ++a) {
            const FieldElement ainv = f.inv(a);
            // an alternating twist keeps the period length only when the
            // alternation closes; odd lengths with a != a^-1 would double
            if (s % 2 == 1 && a != ainv) continue;
            for (std::size_t k = 0; k < s; ++k)
                cand[k] = period[(rot + k) % s].scaled(k % 2 == 0 ? a : ainv);
            if (best.empty() || std::lexicographical_compare(cand.begin(), cand.end(), best.begin(), best.end()))
                best = cand;
        }
    }
    return best;
}

}  // namespace qls
