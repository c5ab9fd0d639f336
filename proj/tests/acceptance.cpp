// Acceptance suite: one self-contained check per criterion, each printing a
// single PASS/FAIL line. Run with no arguments for all criteria, or select
// with --criterion N (repeatable). --workers and --seed tune execution.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qls/cfword.hpp"
#include "qls/errors.hpp"
#include "qls/laurent.hpp"
#include "qls/oracle.hpp"
#include "qls/parallel.hpp"
#include "qls/spectrum.hpp"

using namespace qls;

namespace {

struct Settings {
    unsigned workers = std::max(2u, default_worker_count());
    std::uint64_t seed = 20240817;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw CheckFailure(what);
}

template <class T, class U>
void expect_eq(const T& got, const U& want, const std::string& what) {
    if (!(got == T(want))) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        throw CheckFailure(os.str());
    }
}

CFWord word(const FieldCtx& f, const std::string& text) { return canonicalize(parse_cfword(text, f)); }

CFWord from_period(const FieldCtx& f, std::vector<Poly> period) {
    CFWord w;
    w.a0 = Poly::zero(f);
    w.period = std::move(period);
    return canonicalize(std::move(w));
}

Poly rand_poly(const FieldCtx& f, std::mt19937_64& rng, int min_deg, int max_deg) {
    std::uniform_int_distribution<int> degree(min_deg, max_deg);
    std::uniform_int_distribution<unsigned> code(0, f.q() - 1);
    std::uniform_int_distribution<unsigned> lead(1, f.q() - 1);
    const int d = degree(rng);
    std::vector<FieldElement> c(std::size_t(d) + 1);
    for (int i = 0; i < d; ++i) c[std::size_t(i)] = FieldElement(code(rng));
    c.back() = FieldElement(lead(rng));
    return Poly::from_coeffs(f, std::move(c));
}

CFWord rand_periodic_word(const FieldCtx& f, std::mt19937_64& rng, int max_period, int min_deg, int max_deg) {
    std::uniform_int_distribution<int> len(1, max_period);
    std::vector<Poly> period;
    const int s = len(rng);
    for (int i = 0; i < s; ++i) period.push_back(rand_poly(f, rng, min_deg, max_deg));
    return from_period(f, std::move(period));
}

// ---- criterion 1: full spectra of period-1 words ---------------------------

void criterion_spectrum_period_one(const Settings& st) {
    for (unsigned q : {2u, 3u}) {
        FieldCtx f = FieldCtx::from_order(q);
        const CFWord alpha = word(f, "[0;|Y]");
        const SpectrumReport rep = spectrum(alpha, 5, st.workers);
        expect_eq(rep.hurwitz_exponent, 2, "hurwitz exponent at q=" + std::to_string(q));
        // every exponent in [2, hall_start + margin] present: below-bound part
        // must be the full integer range, and spectrum() has already verified
        // the ray part (it throws on any gap there)
        for (int m = 2; m < rep.hall_start; ++m)
            expect(std::count(rep.exponents_below_bound.begin(), rep.exponents_below_bound.end(), m) == 1,
                   "exponent " + std::to_string(m) + " missing below the Hall bound at q=" + std::to_string(q));
    }
}

// ---- criterion 2: proof-value families g_m, h_m -----------------------------

void criterion_proof_values(const Settings& st) {
    (void)st;
    for (unsigned q : {2u, 3u}) {
        FieldCtx f = FieldCtx::from_order(q);
        std::vector<Poly> ps{Poly::variable(f)};
        if (q == 3) ps.push_back(parse_poly("2*Y+2", f));
        for (const Poly& p : ps) {
            const CFWord alpha = from_period(f, {p});
            const Poly y2 = Poly::monomial(f, 1, 2);
            const Poly p1 = p + Poly::constant(f, 1);
            for (int m = 0; m <= 5; ++m) {
                std::vector<Poly> g{y2, y2};
                for (int i = 0; i < m; ++i) g.push_back(p);
                expect_eq(approx_constant_exponent(alpha, from_period(f, g)), 2 * m + 2,
                          "c(g_" + std::to_string(m) + ") at q=" + std::to_string(q));
                std::vector<Poly> h{y2, y2, p1};
                for (int i = 0; i < m; ++i) h.push_back(p);
                expect_eq(approx_constant_exponent(alpha, from_period(f, h)), 2 * m + 3,
                          "c(h_" + std::to_string(m) + ") at q=" + std::to_string(q));
            }
        }
    }
}

// ---- criterion 3: the interleaved counterexample table ----------------------

CFWord interleaved_alpha(const FieldCtx& f) {
    // all degree-1 letters, each followed by a distinct degree-4 letter
    const std::vector<Poly> ones = enumerate_polys(f, 1, 1);
    std::vector<Poly> period;
    for (std::size_t i = 0; i < ones.size(); ++i) {
        period.push_back(ones[i]);
        period.push_back(Poly::from_coeffs(f, {FieldElement(i % f.q()), 0, 0, 0, 1}));
    }
    return from_period(f, std::move(period));
}

void criterion_counterexample_table(const Settings& st) {
    FieldCtx f(2);
    const CFWord alpha = interleaved_alpha(f);
    auto probe = [&](const Poly& p) { return approx_constant_exponent(alpha, from_period(f, {p})); };
    for (const Poly& p : enumerate_polys(f, 1, 1)) expect_eq(probe(p), 4, "deg-1 probe " + format_poly(p));
    for (const Poly& p : enumerate_polys(f, 2, 2)) expect_eq(probe(p), 3, "deg-2 probe " + format_poly(p));
    for (const Poly& p : enumerate_polys(f, 3, 3)) expect_eq(probe(p), 4, "deg-3 probe " + format_poly(p));
    for (const Poly& p : enumerate_polys(f, 4, 4))
        expect(probe(p) >= 5, "deg-4 probe " + format_poly(p) + " below 5");
    for (const Poly& p : enumerate_polys(f, 5, 5)) expect_eq(probe(p), 5, "deg-5 probe " + format_poly(p));
    int sampled = 0;
    for (const Poly& p : enumerate_polys(f, 6, 6)) {
        if (++sampled > 4) break;
        expect_eq(probe(p), 5, "deg-6 probe " + format_poly(p));
    }
    expect_eq(hurwitz_exponent(alpha, st.workers), 3, "hurwitz of the interleaved word");
}

// ---- criterion 4: short periods at q=3 force hurwitz 2 ----------------------

void criterion_short_periods(const Settings& st) {
    FieldCtx f(3);
    std::mt19937_64 rng(st.seed + 4);
    for (int it = 0; it < 50; ++it) {
        const CFWord alpha = rand_periodic_word(f, rng, 2, 1, 3);
        expect_eq(hurwitz_exponent(alpha, st.workers), 2,
                  "hurwitz of " + format_cfword(alpha) + " (iteration " + std::to_string(it) + ")");
    }
}

// ---- criterion 5: degree-separated regimes ----------------------------------

void criterion_degree_regimes(const Settings& st) {
    std::mt19937_64 rng(st.seed + 5);
    for (int it = 0; it < 200; ++it) {
        FieldCtx f(it % 2 == 0 ? 2 : 3);
        // branch 1: every f-letter degree above every alpha-letter degree
        CFWord alpha = rand_periodic_word(f, rng, 3, 1, 2);
        const int M = cf_stats(alpha).M;
        CFWord probe = rand_periodic_word(f, rng, 2, M + 1, M + 3);
        expect_eq(approx_constant_exponent(alpha, probe), cf_stats(alpha).M2, "branch 1, iteration " + std::to_string(it));

        // branch 2: every f-letter degree below every alpha-letter degree
        CFWord lo = rand_periodic_word(f, rng, 2, 1, 2);
        const int Mf = cf_stats(lo).M;
        CFWord hi = rand_periodic_word(f, rng, 3, Mf + 1, Mf + 3);
        expect_eq(approx_constant_exponent(hi, lo), cf_stats(lo).M2, "branch 2, iteration " + std::to_string(it));
    }
    for (int it = 0; it < 200; ++it) {
        FieldCtx f(it % 2 == 0 ? 2 : 3);
        // branch 3: M(alpha) = 1 or m(alpha) >= 2 forces hurwitz 2
        const CFWord alpha = (it % 4 < 2) ? rand_periodic_word(f, rng, 3, 1, 1)
                                          : rand_periodic_word(f, rng, 2, 2, 3);
        expect_eq(hurwitz_exponent(alpha, st.workers), 2, "branch 3, iteration " + std::to_string(it));
    }
}

// ---- criterion 6: every finite constant sits at exponent >= 2 ---------------

void criterion_exponent_floor(const Settings& st) {
    std::mt19937_64 rng(st.seed + 6);
    int done = 0;
    while (done < 1000) {
        FieldCtx f(done % 2 == 0 ? 2 : 3);
        const CFWord alpha = rand_periodic_word(f, rng, 3, 1, 3);
        CFWord probe = rand_periodic_word(f, rng, 3, 1, 3);
        std::uniform_int_distribution<int> pre(0, 2);
        const int r = pre(rng);
        CFWord g;
        g.a0 = Poly::zero(f);
        for (int i = 0; i < r; ++i) g.preperiod.push_back(rand_poly(f, rng, 1, 3));
        g.period = probe.period;
        g = canonicalize(g);
        if (equivalent(alpha, g)) continue;
        ++done;
        expect(approx_constant_exponent(alpha, g) >= 2, "constant below q^-2 at iteration " + std::to_string(done));
    }
    (void)st;
}

// ---- criterion 7: prescribed Hurwitz values ---------------------------------

void criterion_prescribed_hurwitz(const Settings& st) {
    FieldCtx f(2);
    // block-covering word over the degree <= 2 alphabet (every length-1 block)
    const CFWord cover = from_period(f, enumerate_polys(f, 1, 2));
    expect_eq(hurwitz_exponent(cover, st.workers), 4, "hurwitz of the block-covering word");

    // even-length word over the same alphabet, all six letters, degrees alternating
    const CFWord gamma = word(f, "[0;|Y,Y^2,Y+1,Y^2+1,Y,Y^2+Y,Y+1,Y^2+Y+1]");
    expect_eq(approx_constant_exponent(gamma, word(f, "[0;|Y^3]")), 3, "witness value c_gamma([0;ov(Y^3)])");
    expect_eq(hurwitz_exponent(gamma, st.workers), 3, "hurwitz of the alternating word");
}

// ---- criterion 8: a single gap above the de Bruijn word ---------------------

void criterion_single_gap(const Settings& st) {
    FieldCtx f(2);
    const CFWord alpha = from_period(f, de_bruijn_word(f, 2, 1));
    expect(membership(alpha, 2, st.workers), "exponent 2 missing");
    expect(membership(alpha, 3, st.workers), "exponent 3 missing");
    expect(membership(alpha, 4, st.workers), "exponent 4 missing");
    expect(!membership(alpha, 5, st.workers), "exponent 5 unexpectedly present");
}

// ---- criterion 9: height against the series oracle --------------------------

void criterion_height_oracle(const Settings& st) {
    std::mt19937_64 rng(st.seed + 9);
    const unsigned qs[] = {2, 3, 4};
    int done = 0;
    while (done < 100) {
        FieldCtx f = FieldCtx::from_order(qs[std::size_t(done) % 3]);
        CFWord w;
        w.a0 = rand_poly(f, rng, 0, 2);
        std::uniform_int_distribution<int> pre(0, 2), per(1, 4);
        const int r = pre(rng), s = per(rng);
        for (int i = 0; i < r; ++i) w.preperiod.push_back(rand_poly(f, rng, 1, 3));
        for (int i = 0; i < s; ++i) w.period.push_back(rand_poly(f, rng, 1, 3));
        w = canonicalize(w);
        ++done;

        const QuadraticMinPoly mp = minimal_polynomial(w);
        const int measured = with_deepening(64, kDeepeningCapLen, [&](int len) {
            const int prec = -len;
            const LaurentSeries a = series_from_cf(w, prec);
            const LaurentSeries sigma = LaurentSeries::from_rational(mp.B.negated(), mp.A, prec) - a;
            return (a - sigma).valuation();
        });
        expect_eq(height_exponent(w), measured, "height mismatch for " + format_cfword(w));
    }
}

// ---- criterion 10: brute-force orbit verification ---------------------------

void criterion_brute_force(const Settings& st) {
    FieldCtx f(2);
    const CFWord alpha = word(f, "[0;|Y]");
    const struct {
        const char* text;
        int expected;
    } probes[] = {
        {"[0;|Y^2]", 2},        {"[0;|Y^3]", 2},         {"[0;|Y+1]", 4},
        {"[0;|Y^2,Y]", 4},      {"[0;|Y+1,Y^2]", 3},     {"[0;|Y^2,Y^3]", 2},
        {"[0;|Y+1,Y^3]", 3},    {"[0;|Y^3,Y]", 4},       {"[0;|Y^2,Y+1]", 3},
        {"[0;|Y^2,Y,Y+1]", 5},
    };
    for (const auto& probe : probes) {
        const CFWord g = word(f, probe.text);
        const BruteForceOutcome out = brute_force_check(alpha, g, 3, {0, 10}, st.workers);
        expect_eq(out.fast_exponent, probe.expected, std::string("fast path for ") + probe.text);
        expect(out.verdict == BruteForceOutcome::Verdict::Pass,
               std::string("brute force verdict for ") + probe.text + " is not PASS (min ratio exponent " +
                   (out.min_ratio_exponent ? std::to_string(*out.min_ratio_exponent) : std::string("none")) + ")");
    }
}

// ---- criterion 11: Hall-ray certification -----------------------------------

void criterion_hall_ray(const Settings& st) {
    FieldCtx f(2);
    // direct membership drive on the smallest sample
    const CFWord small = word(f, "[0;|Y]");
    const HallBound hb = hall_bound(small);
    for (int m = hb.refined; m <= hb.refined + 5; ++m)
        expect(membership(small, m, st.workers), "ray exponent " + std::to_string(m) + " missing for [0;|Y]");

    // spectrum() certifies [refined, refined+5] internally and throws on gaps
    for (const CFWord& alpha : {small, word(f, "[0;|Y^2]"), interleaved_alpha(f)}) {
        try {
            (void)spectrum(alpha, 5, st.workers);
        } catch (const HallBoundViolation& e) {
            throw CheckFailure("Hall bound violation for " + format_cfword(alpha) + ": " + e.what());
        }
    }
}

// ---- criterion 12: structural property suites -------------------------------

void criterion_structural(const Settings& st) {
    std::mt19937_64 rng(st.seed + 12);
    const unsigned qs[] = {2, 3, 4};

    // convergent determinants and the mirror identities
    for (int it = 0; it < 500; ++it) {
        FieldCtx f = FieldCtx::from_order(qs[std::size_t(it) % 3]);
        std::uniform_int_distribution<int> len(1, 8);
        const int s = len(rng);
        std::vector<Poly> letters;
        for (int i = 0; i < s; ++i) letters.push_back(rand_poly(f, rng, 1, 3));
        const Convergents a = convergents_of_letters(Poly::zero(f), letters);
        for (long k = 0; k <= s; ++k) {
            const Poly det = a.p(k) * a.q(k - 1) - a.p(k - 1) * a.q(k);
            expect(det.deg() == 0 && !det.is_zero(), "determinant not a unit");
        }
        std::vector<Poly> rev(letters.rbegin(), letters.rend());
        const Convergents b = convergents_of_letters(Poly::zero(f), rev);
        expect(b.p(s) == a.q(s - 1) && b.q(s) == a.q(s) && b.p(s - 1) == a.p(s - 1) && b.q(s - 1) == a.p(s),
               "mirror identities broken");
    }

    // ultrametric triples
    int triples = 0;
    while (triples < 500) {
        FieldCtx f = FieldCtx::from_order(qs[std::size_t(triples) % 3]);
        auto mk = [&] {
            CFWord w;
            w.a0 = rand_poly(f, rng, 0, 1);
            std::uniform_int_distribution<int> pre(0, 1), per(1, 2);
            for (int i = 0, r = pre(rng); i < r; ++i) w.preperiod.push_back(rand_poly(f, rng, 1, 2));
            for (int i = 0, s = per(rng); i < s; ++i) w.period.push_back(rand_poly(f, rng, 1, 2));
            return canonicalize(w);
        };
        const CFWord x = mk(), y = mk(), z = mk();
        const auto xy = distance_exponent(x, y), yz = distance_exponent(y, z), xz = distance_exponent(x, z);
        if (!xy || !yz || !xz) continue;
        ++triples;
        expect(*xz >= std::min(*xy, *yz), "ultrametric inequality broken");
        if (*xy != *yz) expect(*xz == std::min(*xy, *yz), "ultrametric equality case broken");
    }

    // canonicalize idempotence (and value preservation on a subsample)
    for (int it = 0; it < 500; ++it) {
        FieldCtx f = FieldCtx::from_order(qs[std::size_t(it) % 3]);
        CFWord raw;
        raw.a0 = rand_poly(f, rng, 0, 2);
        std::uniform_int_distribution<int> pre(0, 2), per(1, 2), copies(1, 2);
        for (int i = 0, r = pre(rng); i < r; ++i) raw.preperiod.push_back(rand_poly(f, rng, 1, 2));
        std::vector<Poly> block;
        for (int i = 0, s = per(rng); i < s; ++i) block.push_back(rand_poly(f, rng, 1, 2));
        for (int c = 0, n = copies(rng); c < n; ++c) raw.period.insert(raw.period.end(), block.begin(), block.end());
        const CFWord c1 = canonicalize(raw);
        expect(canonicalize(c1) == c1, "canonicalize not idempotent");
        if (it % 5 == 0)
            expect((series_from_cf(raw, -25) - series_from_cf(c1, -25)).is_zero_to_prec(),
                   "canonicalize changed the value of " + format_cfword(raw));
    }

    // equivalence laws: reflexivity, symmetry, transitivity, invariances
    for (int it = 0; it < 500; ++it) {
        FieldCtx f = FieldCtx::from_order(qs[std::size_t(it) % 3]);
        const CFWord w = rand_periodic_word(f, rng, 3, 1, 2);
        expect(equivalent(w, w), "equivalence not reflexive");

        auto orbit_relative = [&](const CFWord& base) {
            CFWord v;
            v.a0 = rand_poly(f, rng, 0, 1);
            std::uniform_int_distribution<int> pre(0, 1);
            for (int i = 0, r = pre(rng); i < r; ++i) v.preperiod.push_back(rand_poly(f, rng, 1, 2));
            v.period = base.period;
            std::rotate(v.period.begin(), v.period.begin() + long(rng() % v.period.size()), v.period.end());
            std::uniform_int_distribution<unsigned> unit(1, f.q() - 1);
            return twist(canonicalize(v), FieldElement(unit(rng)), rng() % 2 ? Parity::Even : Parity::Odd);
        };
        const CFWord u = orbit_relative(w), v = orbit_relative(w);
        expect(equivalent(u, w) && equivalent(w, u), "equivalence not symmetric on orbit pairs");
        expect(equivalent(u, v), "equivalence not transitive across orbit relatives");

        const CFWord other = rand_periodic_word(f, rng, 3, 1, 2);
        expect(equivalent(w, other) == equivalent(other, w), "equivalence asymmetric");
        if (equivalent(w, other)) expect(equivalent(u, other), "transitivity with external word broken");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(const Settings&)> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> table = {
        {1, "period-1 spectra are the full ray plus zero", criterion_spectrum_period_one},
        {2, "proof-value families hit 2m+2 and 2m+3", criterion_proof_values},
        {3, "interleaved-word constant table and hurwitz 3", criterion_counterexample_table},
        {4, "length <= q-1 periods at q=3 give hurwitz 2", criterion_short_periods},
        {5, "degree-separated regimes pin the constant", criterion_degree_regimes},
        {6, "1000-case exponent floor at 2", criterion_exponent_floor},
        {7, "prescribed hurwitz values q^-4 and q^-3", criterion_prescribed_hurwitz},
        {8, "single gap at exponent 5 over the de Bruijn word", criterion_single_gap},
        {9, "height formula equals the series oracle", criterion_height_oracle},
        {10, "brute-force orbit check passes on 10 probes", criterion_brute_force},
        {11, "Hall-ray certification on 3 samples", criterion_hall_ray},
        {12, "structural property suites (500+ cases each)", criterion_structural},
    };
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    Settings st;
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&]() -> std::string {
            if (i + 1 >= argc) {
                std::cerr << "missing value for " << arg << "\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--criterion")
            selected.push_back(std::stoi(next()));
        else if (arg == "--workers")
            st.workers = unsigned(std::stoul(next()));
        else if (arg == "--seed")
            st.seed = std::stoull(next());
        else {
            std::cerr << "usage: acceptance [--criterion N]... [--workers N] [--seed S]\n";
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& c : criteria()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run(st);
        } catch (const std::exception& e) {
            failure = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char line[512];
        std::snprintf(line, sizeof(line), "[%s] criterion %2d: %s (%.1fs)%s%s",
                      failure.empty() ? "PASS" : "FAIL", c.id, c.title, secs,
                      failure.empty() ? "" : " -- ", failure.c_str());
        std::cout << line << std::endl;
        if (!failure.empty()) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
