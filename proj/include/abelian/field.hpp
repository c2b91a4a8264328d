#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "abelian/errors.hpp"

namespace abelian {

/// Trial-division primality test. Intended for desk-scale moduli.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime factors of n, ascending. prime_factors(1) is empty.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// The prime field GF(p) with canonical representatives 0..p-1.
///
/// Elements are plain uint64_t residues; all arithmetic goes through the
/// field object. p is capped well below 2^32 so that products of residues
/// never overflow 64 bits.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 31))
            throw Overflow("prime modulus too large: " + std::to_string(p));
        if (!is_prime(p))
            throw NotPrime("not a prime modulus: " + std::to_string(p));
    }

    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept { return p_; }
    std::uint64_t size() const noexcept { return p_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    bool is_zero(Element a) const noexcept { return a == 0; }
    bool is_one(Element a) const noexcept { return a == 1; }

    /// Reduce an arbitrary signed integer into [0, p).
    Element from_integer(std::int64_t v) const noexcept {
        std::int64_t m = v % static_cast<std::int64_t>(p_);
        if (m < 0) m += static_cast<std::int64_t>(p_);
        return static_cast<Element>(m);
    }

    /// Accepts a residue already in [0, p).
    Element from_residue(std::uint64_t v) const {
        if (v >= p_)
            throw CoefficientOutOfField("residue " + std::to_string(v) +
                                        " outside GF(" + std::to_string(p_) + ")");
        return v;
    }

    Element add(Element a, Element b) const noexcept { return (a + b) % p_; }
    Element sub(Element a, Element b) const noexcept { return (a + p_ - b) % p_; }
    Element mul(Element a, Element b) const noexcept { return (a * b) % p_; }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }

    Element inv(Element a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in GF(" + std::to_string(p_) + ")");
        // extended Euclid on (a, p)
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        return from_integer(t);
    }

    Element pow(Element base, std::uint64_t e) const noexcept {
        Element acc = 1;
        base %= p_;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::string coeff_to_string(Element a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

namespace detail {

/// Dense univariate polynomial over GF(p), coefficients low-to-high,
/// no trailing zeros (the zero polynomial is the empty vector).
using DensePoly = std::vector<std::uint64_t>;

inline void strip(DensePoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Remainder of a by b (b nonzero). Works in place on a copy.
inline DensePoly poly_rem(DensePoly a, const DensePoly& b, const PrimeField& F) {
    strip(a);
    const std::size_t db = b.size() - 1;
    const std::uint64_t lead_inv = F.inv(b.back());
    while (a.size() > db) {
        const std::uint64_t c = F.mul(a.back(), lead_inv);
        const std::size_t shift = a.size() - 1 - db;
        if (c != 0)
            for (std::size_t j = 0; j <= db; ++j)
                a[shift + j] = F.sub(a[shift + j], F.mul(c, b[j]));
        a.pop_back();
        strip(a);
        if (a.empty()) break;
    }
    return a;
}

/// Trial division against every monic polynomial of degree <= deg(f)/2.
/// Fine at desk scale; degrees here stay small.
inline bool is_irreducible(const DensePoly& f, const PrimeField& F) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    const std::uint64_t p = F.modulus();
    for (std::size_t dd = 1; dd <= d / 2; ++dd) {
        // enumerate monic divisors of degree dd by their coefficient value
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            DensePoly g(dd + 1, 0);
            std::uint64_t vv = v;
            for (std::size_t i = 0; i < dd; ++i) {
                g[i] = vv % p;
                vv /= p;
            }
            g[dd] = 1;
            if (poly_rem(f, g, F).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// The extension field GF(p^k) in polynomial basis over GF(p).
///
/// Elements are coefficient vectors of length exactly k, low degree first.
/// The modulus is a monic irreducible of degree k, verified at construction.
/// The canonical primitive element is the first field element, ordered by
/// the base-p integer value of its coefficient vector, whose multiplicative
/// order is p^k - 1; it is found once at construction and anchors every
/// "deterministic root of unity" guarantee downstream.
class ExtensionField {
public:
    using Element = std::vector<std::uint64_t>;

    /// modulus: monic, degree >= 1, coefficients low-to-high in [0, p).
    ExtensionField(PrimeField base, std::vector<std::uint64_t> modulus) {
        auto data = std::make_shared<Data>(make_data(base, std::move(modulus)));
        d_ = data;
        data->generator = find_generator();  // arithmetic is live once d_ is set
    }

    /// The deterministic construction: smallest irreducible modulus of the
    /// given degree, coefficient vectors read as base-p integers.
    static ExtensionField with_first_irreducible(PrimeField base, std::size_t degree) {
        if (degree == 0) throw Error("extension degree must be >= 1");
        const std::uint64_t p = base.modulus();
        std::uint64_t count = checked_pow(p, degree);
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<std::uint64_t> mod(degree + 1, 0);
            std::uint64_t vv = v;
            for (std::size_t i = 0; i < degree; ++i) {
                mod[i] = vv % p;
                vv /= p;
            }
            mod[degree] = 1;
            if (detail::is_irreducible(mod, base)) return ExtensionField(base, std::move(mod));
        }
        throw Error("no irreducible modulus found");  // unreachable: they exist for every degree
    }

    const PrimeField& base() const noexcept { return d_->base; }
    std::size_t degree() const noexcept { return d_->degree; }
    const std::vector<std::uint64_t>& modulus() const noexcept { return d_->modulus; }
    std::uint64_t size() const noexcept { return d_->size; }
    std::uint64_t characteristic() const noexcept { return d_->base.modulus(); }

    Element zero() const { return Element(d_->degree, 0); }
    Element one() const {
        Element e(d_->degree, 0);
        e[0] = 1;
        return e;
    }

    bool is_zero(const Element& a) const {
        check(a);
        for (auto c : a)
            if (c) return false;
        return true;
    }

    bool is_one(const Element& a) const {
        check(a);
        if (a[0] != 1) return false;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i]) return false;
        return true;
    }

    /// GF(p) sits inside as the constant vectors.
    Element embed(PrimeField::Element c) const {
        Element e(d_->degree, 0);
        e[0] = c % d_->base.modulus();
        return e;
    }

    Element from_residue(std::uint64_t v) const { return embed(d_->base.from_residue(v)); }

    bool in_base_field(const Element& a) const {
        check(a);
        for (std::size_t i = 1; i < a.size(); ++i)
            if (a[i]) return false;
        return true;
    }

    PrimeField::Element to_base(const Element& a) const {
        if (!in_base_field(a))
            throw NotInBaseField("element has components outside the prime subfield");
        return a[0];
    }

    Element add(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Element out(d_->degree);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = d_->base.add(a[i], b[i]);
        return out;
    }

    Element sub(const Element& a, const Element& b) const {
        check(a);
        check(b);
        Element out(d_->degree);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = d_->base.sub(a[i], b[i]);
        return out;
    }

    Element neg(const Element& a) const {
        check(a);
        Element out(d_->degree);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = d_->base.neg(a[i]);
        return out;
    }

    Element mul(const Element& a, const Element& b) const {
        check(a);
        check(b);
        const std::size_t k = d_->degree;
        const PrimeField& F = d_->base;
        std::vector<std::uint64_t> prod(2 * k - 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < k; ++j)
                if (b[j]) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
        }
        // fold degrees >= k down through the monic modulus
        for (std::size_t i = prod.size(); i-- > k;) {
            const std::uint64_t c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (std::size_t j = 0; j < k; ++j)
                prod[i - k + j] = F.sub(prod[i - k + j], F.mul(c, d_->modulus[j]));
        }
        prod.resize(k);
        return prod;
    }

    Element pow(const Element& a, std::uint64_t e) const {
        check(a);
        Element acc = one();
        Element base = a;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    Element inv(const Element& a) const {
        if (is_zero(a)) throw DivisionByZero("inverse of zero in GF(" + std::to_string(size()) + ")");
        return pow(a, d_->size - 2);
    }

    /// Coefficient vector read as a base-p integer; the total order used for
    /// every "smallest element" tie-break.
    std::uint64_t value_of(const Element& a) const {
        check(a);
        std::uint64_t v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = v * d_->base.modulus() + a[i];
        return v;
    }

    Element element_from_value(std::uint64_t v) const {
        if (v >= d_->size) throw IndexOutOfRange("element value outside field");
        Element e(d_->degree);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = v % d_->base.modulus();
            v /= d_->base.modulus();
        }
        return e;
    }

    /// The canonical primitive element.
    const Element& generator() const noexcept { return d_->generator; }

    /// g^((|L|-1)/r) for the canonical generator g; has order exactly r.
    Element primitive_root(std::uint64_t r) const {
        if (r == 0 || (d_->size - 1) % r != 0)
            throw OrderUnavailable("no element of order " + std::to_string(r) + " in GF(" +
                                   std::to_string(size()) + ")");
        return pow(d_->generator, (d_->size - 1) / r);
    }

    std::uint64_t multiplicative_order(const Element& a) const {
        if (is_zero(a)) throw DivisionByZero("zero has no multiplicative order");
        std::uint64_t o = d_->size - 1;
        for (std::uint64_t f : d_->group_prime_factors)
            while (o % f == 0 && is_one(pow(a, o / f))) o /= f;
        return o;
    }

    std::string coeff_to_string(const Element& a) const {
        if (in_base_field(a)) return std::to_string(a[0]);
        std::string s = "[";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a[i]);
        }
        return s + "]";
    }

    bool operator==(const ExtensionField& o) const {
        return d_ == o.d_ ||
               (d_->base == o.d_->base && d_->modulus == o.d_->modulus);
    }

private:
    struct Data {
        PrimeField base;
        std::size_t degree;
        std::vector<std::uint64_t> modulus;
        std::uint64_t size;
        Element generator;
        std::vector<std::uint64_t> group_prime_factors;  // of size - 1
    };

    std::shared_ptr<const Data> d_;

    static std::uint64_t checked_pow(std::uint64_t p, std::size_t k) {
        std::uint64_t v = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (v > (std::uint64_t{1} << 62) / p)
                throw Overflow("field size p^k exceeds desk scale");
            v *= p;
        }
        return v;
    }

    static Data make_data(PrimeField base, std::vector<std::uint64_t> modulus) {
        if (modulus.size() < 2) throw Error("modulus must have degree >= 1");
        if (modulus.back() != 1) throw Error("modulus must be monic");
        for (auto c : modulus)
            if (c >= base.modulus()) throw CoefficientOutOfField("modulus coefficient outside GF(p)");
        if (!detail::is_irreducible(modulus, base)) throw Error("modulus is reducible");

        Data d{base, modulus.size() - 1, std::move(modulus), 0, {}, {}};
        d.size = checked_pow(base.modulus(), d.degree);
        d.group_prime_factors = prime_factors(d.size - 1);
        return d;
    }

    Element find_generator() const {
        const std::uint64_t N = d_->size - 1;
        for (std::uint64_t v = 1; v < d_->size; ++v) {
            Element e = element_from_value(v);
            bool primitive = true;
            for (std::uint64_t f : d_->group_prime_factors)
                if (is_one(pow(e, N / f))) {
                    primitive = false;
                    break;
                }
            if (primitive) return e;
        }
        throw Error("no primitive element found");  // unreachable: the group is cyclic
    }

    void check(const Element& a) const {
        if (a.size() != d_->degree)
            throw FieldMismatch("element has " + std::to_string(a.size()) +
                                " coordinates, field expects " + std::to_string(d_->degree));
    }
};

/// Least common multiple with an overflow guard.
inline std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    if (b != 0 && q > (std::uint64_t{1} << 62) / b)
        throw Overflow("lcm of radices exceeds desk scale");
    return q * b;
}

/// Multiplicative order of q modulo m (m >= 1, gcd(q, m) = 1).
inline std::uint64_t multiplicative_order_mod(std::uint64_t q, std::uint64_t m) {
    if (m == 1) return 1;
    std::uint64_t x = q % m, t = 1;
    while (x != 1) {
        x = (x * q) % m;
        if (++t > m) throw Error("order computation did not terminate; gcd(q, m) != 1?");
    }
    return t;
}

/// Smallest field GF(q^d) containing a primitive r_i-th root of unity for
/// every radix: d is the multiplicative order of q modulo lcm(r_1..r_s).
/// Restricted to prime alphabets; prime-power q is an extension point.
inline ExtensionField splitting_field(const PrimeField& base,
                                      const std::vector<std::uint32_t>& radices) {
    const std::uint64_t p = base.modulus();
    std::uint64_t l = 1;
    for (auto r : radices) {
        if (r == 0) throw Error("radices must be positive");
        if (std::gcd<std::uint64_t>(r, p) != 1)
            throw NonCoprime("radix " + std::to_string(r) + " shares a factor with q = " +
                             std::to_string(p));
        l = checked_lcm(l, r);
    }
    const std::uint64_t d = multiplicative_order_mod(p, l);
    return ExtensionField::with_first_irreducible(base, d);
}

/// The fixed point alpha = (alpha_1, ..., alpha_s), alpha_i a primitive
/// r_i-th root of unity in L.
struct RootTuple {
    std::vector<ExtensionField::Element> components;
};

inline RootTuple make_root_tuple(const ExtensionField& L,
                                 const std::vector<std::uint32_t>& radices) {
    RootTuple t;
    t.components.reserve(radices.size());
    for (auto r : radices) {
        ExtensionField::Element a = L.primitive_root(r);
        // order must be exactly r, not a proper divisor
        if (!L.is_one(L.pow(a, r))) throw Error("root of unity corrupt: a^r != 1");
        for (std::uint64_t f : prime_factors(r))
            if (L.is_one(L.pow(a, r / f))) throw Error("root of unity corrupt: order below r");
        t.components.push_back(std::move(a));
    }
    return t;
}

}  // namespace abelian
