#include "hopfyd/scalar.hpp"

namespace hopfyd {

namespace {

/// Modular inverse of a (already reduced into [0,p)) modulo prime p.
mpz_class modInverse(const mpz_class& a, long p) {
    if (a == 0) throw NotInvertible("scalar: inverse of zero");
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw NotInvertible("scalar: not invertible mod " + std::to_string(p));
    return inv;
}

}  // namespace

void Scalar::normalize() {
    v_.canonicalize();
    if (p_ == 0) return;
    mpz_class num = v_.get_num(), den = v_.get_den(), mod(p_);
    num %= mod;
    if (num < 0) num += mod;
    if (den != 1) {
        den %= mod;
        if (den < 0) den += mod;
        num = (num * modInverse(den, p_)) % mod;
    }
    v_ = mpq_class(num);
}

Scalar Scalar::inverse() const {
    if (isZero()) throw NotInvertible("scalar: inverse of zero");
    Scalar r(p_);
    if (p_ == 0) {
        r.v_ = 1 / v_;
    } else {
        r.v_ = mpq_class(modInverse(v_.get_num(), p_));
    }
    r.normalize();
    return r;
}

Scalar Scalar::parse(const std::string& text, long p) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            mpz_class n(text);
            Scalar s(p);
            s.v_ = mpq_class(n);
            s.normalize();
            return s;
        }
        mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
        if (den == 0) throw NotInvertible("scalar: zero denominator in '" + text + "'");
        Scalar s(p);
        s.v_ = mpq_class(num, den);
        s.v_.canonicalize();
        s.normalize();
        return s;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("scalar: cannot parse '" + text + "'");
    }
}

std::string Scalar::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace hopfyd
