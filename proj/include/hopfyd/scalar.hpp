/// @file scalar.hpp
/// @brief Exact field scalars: arbitrary-precision rationals or prime-field residues.
///
/// Every value carries its field tag ("Q" or "Fp(p)").  Arithmetic is exact;
/// mixing scalars from different fields is a hard error.  Rationals are kept
/// reduced with positive denominator (mpq canonical form); residues lie in [0,p).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfyd {

/// Thrown when operands from different ground fields are combined.
struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on division by zero or inversion of a non-invertible element.
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

/// An exact scalar in Q (p == 0) or in the prime field F_p (p > 0).
class Scalar {
public:
    /// Zero of the given field.
    explicit Scalar(long p = 0) : p_(p), v_(0) {}

    /// Integer constant in the given field.
    static Scalar integer(long n, long p) {
        Scalar s(p);
        s.v_ = n;
        s.normalize();
        return s;
    }

    /// Rational constant num/den (den must be invertible in the field).
    static Scalar rational(long num, long den, long p) {
        if (den == 0) throw NotInvertible("scalar: zero denominator");
        Scalar s(p);
        s.v_ = mpq_class(num, den);
        s.v_.canonicalize();
        s.normalize();
        return s;
    }

    static Scalar zero(long p) { return Scalar(p); }
    static Scalar one(long p) { return integer(1, p); }

    /// Parse "a" or "a/b" (arbitrary precision).  Throws std::invalid_argument.
    static Scalar parse(const std::string& text, long p);

    long field() const { return p_; }
    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }

    Scalar operator-() const {
        Scalar r(*this);
        r.v_ = -r.v_;
        r.normalize();
        return r;
    }
    Scalar operator+(const Scalar& o) const {
        checkField(o);
        Scalar r(*this);
        r.v_ += o.v_;
        r.normalize();
        return r;
    }
    Scalar operator-(const Scalar& o) const {
        checkField(o);
        Scalar r(*this);
        r.v_ -= o.v_;
        r.normalize();
        return r;
    }
    Scalar operator*(const Scalar& o) const {
        checkField(o);
        Scalar r(*this);
        r.v_ *= o.v_;
        r.normalize();
        return r;
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws NotInvertible on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return p_ == o.p_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text: "a" for integers, "a/b" otherwise (residues print as integers).
    std::string str() const;

    /// Field tag for display: "Q" or "Fp(<p>)".
    std::string fieldName() const {
        return p_ == 0 ? std::string("Q") : "Fp(" + std::to_string(p_) + ")";
    }

private:
    void checkField(const Scalar& o) const {
        if (p_ != o.p_)
            throw FieldMismatch("scalar field mismatch: " + fieldName() + " vs " + o.fieldName());
    }
    /// Reduce residues into [0,p) (clearing denominators modulo p).
    void normalize();

    long p_;       ///< 0 for Q, otherwise the prime.
    mpq_class v_;  ///< canonical rational; for F_p an integer in [0,p).
};

}  // namespace hopfyd
