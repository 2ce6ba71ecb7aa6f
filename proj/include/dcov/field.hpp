#ifndef DCOV_FIELD_HPP
#define DCOV_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "dcov/error.hpp"

namespace dcov {

enum class FieldKind { rational, prime };

// Runtime description of the coefficient field; carried by RingCtx so that
// serialized data identifies its field without template machinery.
struct FieldDesc {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0; // meaningful iff kind == prime

    bool operator==(const FieldDesc&) const = default;
};

inline FieldDesc rational_field() { return FieldDesc{FieldKind::rational, 0}; }

inline FieldDesc prime_field(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t(1) << 31))
        fail(ErrorCode::bad_argument, "prime field characteristic out of range: " + std::to_string(p));
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0)
            fail(ErrorCode::bad_argument, std::to_string(p) + " is not prime");
    return FieldDesc{FieldKind::prime, p};
}

inline std::string field_name(const FieldDesc& f) {
    return f.kind == FieldKind::rational ? "Q" : "F" + std::to_string(f.p);
}

// Exact rationals, always canonical (lowest terms, positive denominator):
// mpq_class arithmetic keeps results canonical; only string construction
// needs an explicit canonicalize.
struct QField {
    using Elem = mpq_class;

    static FieldDesc desc() { return rational_field(); }
    std::uint64_t characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    Elem neg(const Elem& a) const { return Elem(-a); }

    Elem inv(const Elem& a) const {
        if (a == 0) fail(ErrorCode::bad_argument, "division by zero in Q");
        return Elem(1 / a);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Accepts "num", "num/den"; re-reduces non-canonical input.
    Elem parse(const std::string& s) const {
        try {
            Elem v(s);
            if (v.get_den() == 0) fail(ErrorCode::parse_error, "zero denominator: " + s);
            v.canonicalize();
            return v;
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::parse_error, "bad rational literal: " + s);
        }
    }
    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const QField&) const = default;
};

// Prime field F_p, residues stored in [0, p). p < 2^31 so products fit
// comfortably in __int128 intermediates.
struct ZpField {
    using Elem = std::uint64_t;

    std::uint64_t p = 2;

    ZpField() = default;
    explicit ZpField(std::uint64_t prime) : p(prime) {}
    static ZpField from_desc(const FieldDesc& d) { return ZpField(d.p); }

    FieldDesc desc() const { return FieldDesc{FieldKind::prime, p}; }
    std::uint64_t characteristic() const { return p; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(long v) const {
        long long r = static_cast<long long>(v) % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r = one(), base = a;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    Elem inv(Elem a) const {
        if (a == 0) fail(ErrorCode::bad_argument, "division by zero in F_" + std::to_string(p));
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    // Accepts decimal integers (any sign, any size) and "num/den".
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            Elem num = parse(s.substr(0, slash));
            Elem den = parse(s.substr(slash + 1));
            return div(num, den);
        }
        try {
            mpz_class z(s);
            mpz_class r = z % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            return r.get_ui();
        } catch (const std::invalid_argument&) {
            fail(ErrorCode::parse_error, "bad integer literal: " + s);
        }
    }
    std::string to_string(Elem a) const { return std::to_string(a); }

    bool operator==(const ZpField&) const = default;
};

} // namespace dcov

#endif
