// Exact field scalars: arbitrary-precision rationals and prime fields F_p.
// All arithmetic is exact; equality is structural equality of canonical forms.
#pragma once

#include <gmpxx.h>

#include <cctype>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace psmash {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Rational number backed by GMP. Canonical form (reduced, positive
// denominator) is maintained by the mpq layer; raw constructions
// canonicalize explicitly.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, unsigned long den) : v_(num, den) {
        if (den == 0) throw error("Rat: zero denominator");
        v_.canonicalize();
    }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long n) { return Rat(n); }
    static const char* field_name() { return "Q"; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { Rat r; r.v_ = -v_; return r; }
    Rat operator+(const Rat& o) const { Rat r; r.v_ = v_ + o.v_; return r; }
    Rat operator-(const Rat& o) const { Rat r; r.v_ = v_ - o.v_; return r; }
    Rat operator*(const Rat& o) const { Rat r; r.v_ = v_ * o.v_; return r; }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw error("Rat: division by zero");
        Rat r; r.v_ = v_ / o.v_; return r;
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw error("Rat: inverse of zero");
        Rat r; r.v_ = 1 / v_; return r;
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    // Serialized as "p/q" with q > 0 and gcd(|p|, q) = 1; "/1" is omitted.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    static Rat parse(const std::string& s) {
        if (s.empty()) throw error("Rat: empty coefficient string");
        for (char c : s)
            if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
                throw error("Rat: bad coefficient string '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw error("Rat: bad coefficient string '" + s + "'");
        if (q.get_den() == 0) throw error("Rat: zero denominator in '" + s + "'");
        q.canonicalize();
        Rat r; r.v_ = q; return r;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

// Prime field F_p with the modulus declared once per session. Residues live
// in [0, p); p is required to be an odd-or-even prime below 2^31 so products
// fit in unsigned 64-bit arithmetic.
class Fp {
public:
    Fp() : v_(0) { require_modulus(); }
    Fp(long n) { require_modulus(); v_ = reduce(n); }

    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ull << 31)) throw error("Fp: modulus out of range");
        if (!probable_prime(p)) throw error("Fp: modulus " + std::to_string(p) + " is not prime");
        p_ = p;
    }
    static std::uint64_t modulus() { require_modulus(); return p_; }
    static bool has_modulus() { return p_ != 0; }

    static Fp zero() { return Fp(0); }
    static Fp one() { return Fp(1); }
    static Fp from_int(long n) { return Fp(n); }
    static std::string field_name() { return "F" + std::to_string(modulus()); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_); }
    Fp operator+(const Fp& o) const { std::uint64_t s = v_ + o.v_; return make(s >= p_ ? s - p_ : s); }
    Fp operator-(const Fp& o) const { return make(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_); }
    Fp operator*(const Fp& o) const { return make((v_ * o.v_) % p_); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    Fp inverse() const {
        if (v_ == 0) throw error("Fp: inverse of zero");
        return pow(*this, p_ - 2);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_; }
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

    static Fp parse(const std::string& s) {
        if (s.empty()) throw error("Fp: empty coefficient string");
        size_t pos = 0;
        long long n;
        try {
            n = std::stoll(s, &pos);
        } catch (const std::exception&) {
            throw error("Fp: bad coefficient string '" + s + "'");
        }
        if (pos != s.size()) throw error("Fp: bad coefficient string '" + s + "'");
        return Fp(static_cast<long>(n));
    }

    std::uint64_t residue() const { return v_; }

private:
    static Fp make(std::uint64_t v) { Fp r; r.v_ = v; return r; }
    static std::uint64_t reduce(long n) {
        long long m = static_cast<long long>(n) % static_cast<long long>(p_);
        if (m < 0) m += static_cast<long long>(p_);
        return static_cast<std::uint64_t>(m);
    }
    static Fp pow(Fp b, std::uint64_t e) {
        Fp acc = make(1);
        while (e) {
            if (e & 1) acc *= b;
            b *= b;
            e >>= 1;
        }
        return acc;
    }
    static bool probable_prime(std::uint64_t p) {
        if (p < 4) return p == 2 || p == 3;
        if (p % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }
    static void require_modulus() {
        if (p_ == 0) throw error("Fp: modulus not set (call Fp::set_modulus)");
    }

    static inline std::uint64_t p_ = 0;
    std::uint64_t v_;
};

template <class K>
concept Field = requires(const K& a, const K& b) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_int(1L) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
    { K::parse(std::string{}) } -> std::same_as<K>;
};

static_assert(Field<Rat>);
static_assert(Field<Fp>);

template <Field K>
K half() {
    K two = K::from_int(2);
    if (two.is_zero()) throw error("field has characteristic 2");
    return two.inverse();
}

} // namespace psmash
