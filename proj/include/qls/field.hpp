#pragma once

#include <cstdint>
#include <vector>

#include "qls/errors.hpp"

namespace qls {

/// A field element is an integer code in [0, q); the base-p digits of the
/// code are the coordinates in the polynomial basis of F_q over F_p.
using FieldElement = std::uint16_t;

/// Exact arithmetic context for F_q with q = p^e <= 1024.
///
/// Extension fields are F_p[g]/(modulus) for a monic irreducible modulus of
/// degree e over F_p; irreducibility is verified at construction by trial
/// division against every lower-degree monic polynomial. Multiplication and
/// inversion are table-driven so the enumeration loops stay branch-free.
/// Immutable after construction and shareable across threads.
class FieldCtx {
  public:
    /// Prime field (e = 1) or extension with the built-in default modulus:
    /// the first monic irreducible of degree e in coefficient-code order.
    explicit FieldCtx(unsigned p, unsigned e = 1);

    /// Extension with a caller-supplied monic modulus, coefficients over F_p
    /// listed lowest degree first (length e + 1, leading coefficient 1).
    FieldCtx(unsigned p, unsigned e, const std::vector<FieldElement>& modulus);

    /// Factors q into p^e. Throws if q is not a prime power or q > 1024.
    static FieldCtx from_order(unsigned q);

    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    unsigned q() const { return q_; }
    /// Modulus coefficients, lowest first; {0,1} placeholder when e = 1.
    const std::vector<FieldElement>& modulus() const { return modulus_; }

    FieldElement add(FieldElement a, FieldElement b) const { return add_[std::size_t(a) * q_ + b]; }
    FieldElement mul(FieldElement a, FieldElement b) const { return mul_[std::size_t(a) * q_ + b]; }
    FieldElement neg(FieldElement a) const { return neg_[a]; }
    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
    FieldElement inv(FieldElement a) const {
        if (a == 0) throw InversionOfZero();
        return inv_[a];
    }
    FieldElement pow(FieldElement a, long long n) const;

    /// Contexts are compared by identity: all values built from a context
    /// keep a pointer to it and must not be mixed across instances.
    bool same(const FieldCtx& other) const { return this == &other; }

  private:
    void build_tables();

    unsigned p_ = 0, e_ = 0, q_ = 0;
    std::vector<FieldElement> modulus_;
    std::vector<FieldElement> add_, mul_, neg_, inv_;
};

}  // namespace qls
