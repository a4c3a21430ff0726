#ifndef HOPFEQ_FIELD_HPP
#define HOPFEQ_FIELD_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace hopfeq {

// Exact field element. Over Q an arbitrary rational in lowest terms with
// positive denominator; over F_p an integer residue in [0, p).
using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

enum class FieldKind { Rationals, PrimeField };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;

    static FieldSpec Q() { return FieldSpec{FieldKind::Rationals, 0}; }
    static FieldSpec Fp(long prime) {
        if (!is_prime(prime)) throw PreconditionError("FieldSpec: p must be prime");
        return FieldSpec{FieldKind::PrimeField, prime};
    }

    bool operator==(const FieldSpec&) const = default;

    std::string to_string() const {
        return kind == FieldKind::Rationals ? "Q" : "F" + std::to_string(p);
    }
};

// Arithmetic context. All scalar operations go through a Field; values of
// different fields must never be mixed in one computation.
class Field {
  public:
    Field() : spec_(FieldSpec::Q()) {}
    explicit Field(FieldSpec spec) : spec_(spec) {
        if (spec_.kind == FieldKind::PrimeField && !is_prime(spec_.p))
            throw PreconditionError("Field: p must be prime");
    }

    const FieldSpec& spec() const { return spec_; }
    long characteristic() const { return spec_.kind == FieldKind::Rationals ? 0 : spec_.p; }
    bool is_rationals() const { return spec_.kind == FieldKind::Rationals; }

    Scalar zero() const { return Scalar(0); }
    Scalar one() const { return Scalar(1); }

    Scalar from_long(long v) const { return reduce(Scalar(v)); }

    // Canonical representative: identity over Q, residue in [0, p) over F_p.
    Scalar reduce(const Scalar& x) const {
        if (spec_.kind == FieldKind::Rationals) return x;
        mpz_class num = x.get_num(), den = x.get_den(), p(spec_.p);
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        if (den != 1) {
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw PreconditionError("Field: denominator not invertible mod p");
            r = (r * dinv) % p;
            if (r < 0) r += p;
        }
        return Scalar(r);
    }

    Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
    Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
    Scalar neg(const Scalar& a) const { return reduce(-a); }

    Scalar inv(const Scalar& a) const {
        if (is_zero(a)) throw PreconditionError("Field: division by zero");
        if (spec_.kind == FieldKind::Rationals) return Scalar(1) / a;
        mpz_class v = reduce(a).get_num(), p(spec_.p), r;
        mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
        return Scalar(r);
    }

    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    Scalar pow(const Scalar& a, long e) const {
        if (e < 0) return pow(inv(a), -e);
        Scalar acc = one(), base = reduce(a);
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool is_zero(const Scalar& a) const {
        if (spec_.kind == FieldKind::Rationals) return a == 0;
        return reduce(a) == 0;
    }

    bool eq(const Scalar& a, const Scalar& b) const { return is_zero(sub(a, b)); }

    // Accepts "3", "-1/2" and plain integer strings.
    Scalar parse(const std::string& s) const {
        try {
            Scalar v(s);
            v.canonicalize();
            return reduce(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad scalar literal: " + s);
        }
    }

    std::string to_string(const Scalar& a) const { return reduce(a).get_str(); }

    void require_same(const Field& other) const {
        if (!(spec_ == other.spec_))
            throw PreconditionError("mixed fields: " + spec_.to_string() + " vs " +
                                    other.spec_.to_string());
    }

  private:
    FieldSpec spec_;
};

}  // namespace hopfeq

#endif
