#include "qls/oracle.hpp"

#include <array>
#include <atomic>
#include <cassert>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <random>

#include "qls/errors.hpp"
#include "qls/parallel.hpp"

namespace qls {

namespace {

// matrices are indexed by four base-(q^(deg_bound+1)) digits, each digit
// encoding one polynomial entry through its coefficient codes
struct MatrixSpace {
    const FieldCtx* field;
    int deg_bound;
    std::uint64_t per_entry;  // q^(deg_bound+1)

    MatrixSpace(const FieldCtx& f, int db) : field(&f), deg_bound(db) {
        per_entry = 1;
        for (int i = 0; i <= db; ++i) per_entry *= f.q();
    }
    std::uint64_t total() const { return per_entry * per_entry * per_entry * per_entry; }

    Poly entry(std::uint64_t code) const {
        std::vector<FieldElement> c(std::size_t(deg_bound) + 1);
        for (int i = 0; i <= deg_bound; ++i) {
            c[std::size_t(i)] = FieldElement(code % field->q());
            code /= field->q();
        }
        return Poly::from_coeffs(*field, std::move(c));
    }

    // unit determinant plus projective normalization: the first nonzero
    // coefficient across A,B,C,D (coefficients in ascending degree) is 1
    std::optional<std::array<Poly, 4>> decode(std::uint64_t index) const {
        std::array<Poly, 4> m;
        for (int k = 0; k < 4; ++k) {
            m[std::size_t(k)] = entry(index % per_entry);
            index /= per_entry;
        }
        const Poly det = m[0] * m[3] - m[1] * m[2];
        if (det.is_zero() || det.deg() != 0) return std::nullopt;
        for (const Poly& p : m) {
            for (int d = 0; d <= p.deg(); ++d) {
                const FieldElement c = p.coeff(d);
                if (c != 0) return c == 1 ? std::optional(m) : std::nullopt;
            }
        }
        return std::nullopt;  // zero matrix has zero determinant; unreachable
    }
};

struct RootSeries {
    LaurentSeries alpha, alpha_sigma, f;
};

// series for alpha, alpha^sigma = -B/A - alpha, and f, trusted to depth len
RootSeries root_series(const CFWord& alpha, const QuadraticMinPoly& mp, const CFWord& f, int len) {
    const int prec = -len;
    RootSeries rs{series_from_cf(alpha, prec),
                  LaurentSeries::zero_to_prec(alpha.field(), prec),
                  series_from_cf(f, prec)};
    rs.alpha_sigma = LaurentSeries::from_rational(mp.B.negated(), mp.A, prec) - rs.alpha;
    return rs;
}

// depth-keyed series store shared by the workers; deepening is rare so the
// lock only guards the map itself
class SeriesCache {
  public:
    SeriesCache(const CFWord& alpha, const QuadraticMinPoly& mp, const CFWord& f)
        : alpha_(alpha), mp_(mp), f_(f) {}

    std::shared_ptr<const RootSeries> at(int len) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = by_len_.find(len);
        if (it == by_len_.end())
            it = by_len_.emplace(len, std::make_shared<RootSeries>(root_series(alpha_, mp_, f_, len))).first;
        return it->second;
    }

  private:
    const CFWord& alpha_;
    const QuadraticMinPoly& mp_;
    const CFWord& f_;
    std::mutex mutex_;
    std::map<int, std::shared_ptr<const RootSeries>> by_len_;
};

struct Measured {
    OrbitElement elem;
    int ratio_exponent;  // e(beta) = -log_q(|f-beta| / |beta-beta^sigma|)
    bool in_window;
};

// measure_ratio = false builds the element without touching |f - beta|
// (needed when beta may equal the reference series itself)
Measured measure(const std::array<Poly, 4>& m, bool conjugate_root, const RootSeries& rs,
                 const OrbitWindow& window, bool measure_ratio) {
    const LaurentSeries& root = conjugate_root ? rs.alpha_sigma : rs.alpha;
    const LaurentSeries& coroot = conjugate_root ? rs.alpha : rs.alpha_sigma;
    const int prec = root.prec();
    auto moebius = [&](const LaurentSeries& x) {
        const LaurentSeries num = LaurentSeries::from_poly(m[0], prec) * x + LaurentSeries::from_poly(m[1], prec);
        const LaurentSeries den = LaurentSeries::from_poly(m[2], prec) * x + LaurentSeries::from_poly(m[3], prec);
        return num * den.inverse();
    };
    Measured out{{m[0], m[1], m[2], m[3], conjugate_root, moebius(root), moebius(coroot), 0}, 0, false};
    out.elem.height_exponent = (out.elem.beta - out.elem.beta_sigma).valuation();
    out.in_window = window.lo <= out.elem.height_exponent && out.elem.height_exponent <= window.hi;
    if (out.in_window && measure_ratio) {
        const int dist = distance_valuation(rs.f, out.elem.beta);
        out.ratio_exponent = dist - out.elem.height_exponent;
    }
    return out;
}

int base_series_len(const CFWord& alpha, const CFWord& f, int deg_bound) {
    auto mass = [](const CFWord& w) {
        int sum = std::max(w.a0.deg(), 0);
        for (const Poly& x : w.preperiod) sum += x.deg();
        for (const Poly& x : w.period) sum += x.deg();
        return sum;
    };
    return 4 * (deg_bound + mass(alpha) + mass(f)) + 32;
}

BruteForceOutcome run_check(const CFWord& alpha_in, const CFWord& f_in, int deg_bound,
                            OrbitWindow window, unsigned workers,
                            const std::vector<std::uint64_t>* sample_indices) {
    if (deg_bound < 0 || deg_bound > 4) throw Error("orbit enumeration requires 0 <= deg_bound <= 4");
    const CFWord alpha = canonicalize(alpha_in);
    const CFWord f = canonicalize(f_in);
    if (!alpha.quadratic() || !f.quadratic()) throw NotQuadratic();
    if (equivalent(f, alpha)) throw InTheta();

    BruteForceOutcome out;
    out.fast_exponent = approx_constant_exponent(alpha, f);
    out.exhaustive = sample_indices == nullptr;

    const QuadraticMinPoly mp = minimal_polynomial(alpha);
    const MatrixSpace space(alpha.field(), deg_bound);
    const int len0 = base_series_len(alpha, f, deg_bound);

    const std::uint64_t total = sample_indices ? sample_indices->size() : space.total();

    struct Best {
        int exponent;
        std::uint64_t order;  // enumeration index * 2 + conjugate bit, for deterministic ties
        OrbitElement elem;
    };
    std::mutex mtx;
    std::optional<Best> best;
    std::size_t population = 0;

    SeriesCache cache(alpha, mp, f);
    parallel_for(std::size_t(total), workers, [&](std::size_t i) {
        const std::uint64_t index = sample_indices ? (*sample_indices)[i] : std::uint64_t(i);
        const auto matrix = space.decode(index);
        if (!matrix) return;
        for (int conj = 0; conj < 2; ++conj) {
            const Measured m = with_deepening(len0, kDeepeningCapLen, [&](int len) {
                return measure(*matrix, conj == 1, *cache.at(len), window, true);
            });
            if (!m.in_window) continue;
            std::lock_guard<std::mutex> lock(mtx);
            ++population;
            const std::uint64_t order = index * 2 + std::uint64_t(conj);
            if (!best || m.ratio_exponent > best->exponent ||
                (m.ratio_exponent == best->exponent && order < best->order))
                best = Best{m.ratio_exponent, order, m.elem};
        }
    });

    out.window_population = population;
    if (!best) {
        out.verdict = BruteForceOutcome::Verdict::EmptyWindow;
        return out;
    }
    out.min_ratio_exponent = best->exponent;
    out.witness = best->elem;
    const bool sound = best->exponent <= out.fast_exponent;
    const bool attained = best->exponent == out.fast_exponent;
    out.verdict = (sound && (attained || !out.exhaustive)) ? BruteForceOutcome::Verdict::Pass
                                                           : BruteForceOutcome::Verdict::Fail;
    return out;
}

}  // namespace

std::vector<OrbitElement> enumerate_orbit(const CFWord& alpha_in, int deg_bound) {
    if (deg_bound < 0 || deg_bound > 4) throw Error("orbit enumeration requires 0 <= deg_bound <= 4");
    const CFWord alpha = canonicalize(alpha_in);
    if (!alpha.quadratic()) throw NotQuadratic();
    const QuadraticMinPoly mp = minimal_polynomial(alpha);
    const MatrixSpace space(alpha.field(), deg_bound);
    const int len0 = base_series_len(alpha, alpha, deg_bound);
    const OrbitWindow everything{std::numeric_limits<int>::min() / 2, std::numeric_limits<int>::max() / 2};

    std::vector<OrbitElement> out;
    SeriesCache cache(alpha, mp, alpha);
    for (std::uint64_t index = 0; index < space.total(); ++index) {
        const auto matrix = space.decode(index);
        if (!matrix) continue;
        for (int conj = 0; conj < 2; ++conj) {
            Measured m = with_deepening(len0, kDeepeningCapLen, [&](int len) {
                return measure(*matrix, conj == 1, *cache.at(len), everything, false);
            });
            out.push_back(std::move(m.elem));
        }
    }
    return out;
}

BruteForceOutcome brute_force_check(const CFWord& alpha, const CFWord& f, int deg_bound,
                                    OrbitWindow window, unsigned workers) {
    return run_check(alpha, f, deg_bound, window, workers, nullptr);
}

BruteForceOutcome brute_force_sample(const CFWord& alpha, const CFWord& f, int deg_bound,
                                     OrbitWindow window, std::size_t samples, std::uint64_t seed,
                                     unsigned workers) {
    if (deg_bound < 0 || deg_bound > 4) throw Error("orbit enumeration requires 0 <= deg_bound <= 4");
    const MatrixSpace space(canonicalize(alpha).field(), deg_bound);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> pick(0, space.total() - 1);
    std::vector<std::uint64_t> indices(samples);
    for (std::uint64_t& x : indices) x = pick(rng);
    return run_check(alpha, f, deg_bound, window, workers, &indices);
}

}  // namespace qls
