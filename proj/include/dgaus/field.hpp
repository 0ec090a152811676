#ifndef DGAUS_FIELD_HPP
#define DGAUS_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dgaus {

// Which ground field a computation runs over.  characteristic == 0 means Q,
// otherwise a prime p < 2^31.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::int64_t characteristic = 0;

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime(std::int64_t p) {
        if (p < 2 || p >= (std::int64_t(1) << 31) || !is_prime(p))
            throw std::invalid_argument("FieldSpec: characteristic must be a prime < 2^31");
        return FieldSpec{Kind::PrimeField, p};
    }
    static bool is_prime(std::int64_t p) {
        if (p < 2) return false;
        for (std::int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
    std::string name() const {
        return kind == Kind::Rationals ? std::string("Q") : "F" + std::to_string(characteristic);
    }
    bool operator==(const FieldSpec&) const = default;
};

// Exact rational scalar.  Reduced fractions with arbitrary-precision integers.
class Rat {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d) : v_(rep(n) / d) {}
    explicit Rat(rep v) : v_(std::move(v)) {}

    static FieldSpec field() { return FieldSpec::rationals(); }
    static Rat from_int(std::int64_t n) { return Rat(static_cast<long>(n)); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator+(const Rat& o) const { return Rat(v_ + o.v_); }
    Rat operator-(const Rat& o) const { return Rat(v_ - o.v_); }
    Rat operator*(const Rat& o) const { return Rat(v_ * o.v_); }
    Rat operator-() const { return Rat(-v_); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(v_ / o.v_);
    }
    Rat inv() const { return Rat(1) / *this; }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }

    std::string str() const { return v_.str(); }
    const rep& raw() const { return v_; }

private:
    rep v_;
};

// Element of F_p with p carried at runtime.  p == 0 marks an unbound zero:
// it combines with any modulus, so default-constructed scalars behave like 0.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(std::int64_t v, std::int64_t p) : p_(p) {
        if (p == 0) {
            // unbound: only 0 and +-1 are representable without a modulus
            v_ = v;
            if (v_ < -1 || v_ > 1)
                throw std::domain_error("Fp: nonunit value with unbound modulus");
        } else {
            v_ = v % p;
            if (v_ < 0) v_ += p;
        }
    }
    static Fp one_unbound() { return Fp(1, 0); }

    static Fp zero(std::int64_t p) { return Fp(0, p); }
    std::int64_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, join(o)); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, join(o)); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, join(o)); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp operator/(const Fp& o) const { return *this * o.inv(); }
    Fp inv() const {
        if (is_zero()) throw std::domain_error("Fp: inverse of zero");
        if (p_ == 0) return *this;  // +-1
        // extended Euclid
        std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return Fp(x0, p_);
    }
    Fp& operator+=(const Fp& o) { *this = *this + o; return *this; }
    Fp& operator-=(const Fp& o) { *this = *this - o; return *this; }
    Fp& operator*=(const Fp& o) { *this = *this * o; return *this; }

    bool operator==(const Fp& o) const { return v_ == o.v_ && (v_ == 0 || p_ == o.p_ || p_ == 0 || o.p_ == 0); }
    bool operator!=(const Fp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    std::int64_t join(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw std::domain_error("Fp: mixed moduli");
        return p_ != 0 ? p_ : o.p_;
    }
    std::int64_t v_;
    std::int64_t p_;
};

// Scalar factory bound to a FieldSpec; templates below take the scalar type,
// runtime dispatch happens once at the CLI boundary.
template <class K>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static Rat zero(const FieldSpec&) { return Rat(); }
    static Rat one(const FieldSpec&) { return Rat(1); }
    static Rat from_int(const FieldSpec&, std::int64_t n) { return Rat::from_int(n); }
};

template <>
struct ScalarOps<Fp> {
    static Fp zero(const FieldSpec& f) { return Fp(0, f.characteristic); }
    static Fp one(const FieldSpec& f) { return Fp(1, f.characteristic); }
    static Fp from_int(const FieldSpec& f, std::int64_t n) { return Fp(n, f.characteristic); }
};

}  // namespace dgaus

#endif
