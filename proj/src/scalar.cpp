#include "dgop/scalar.hpp"

namespace dgop {

void Field::validate() const {
    if (p == 0)
        return;
    if (p < 2)
        throw Error("field characteristic must be a prime >= 2 or 0 for Q");
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw Error("field characteristic " + std::to_string(p) + " is not prime");
}

static long long mod_pos(long long n, long long p) {
    long long r = n % p;
    return r < 0 ? r + p : r;
}

Scalar Scalar::of(Field f, long long n) {
    Scalar s(f);
    if (f.is_rational())
        s.rat_ = n;
    else
        s.rep_ = mod_pos(n, f.p);
    return s;
}

Scalar Scalar::of(Field f, const Rational& q) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = q;
    } else {
        using boost::multiprecision::cpp_int;
        cpp_int num = numerator(q), den = denominator(q);
        cpp_int pn(f.p);
        long long n = static_cast<long long>(num % pn);
        long long d = static_cast<long long>(den % pn);
        if (d == 0)
            throw Error("denominator not invertible mod " + std::to_string(f.p));
        return of(f, n) / of(f, d);
    }
    return s;
}

Scalar Scalar::parse(Field f, const std::string& s) {
    return of(f, Rational(s));
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : rep_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : rep_ == 1;
}

void Scalar::check_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw Error("scalar field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_field(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = rat_ + o.rat_;
    else
        s.rep_ = mod_pos(rep_ + o.rep_, field_.p);
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_field(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = rat_ - o.rat_;
    else
        s.rep_ = mod_pos(rep_ - o.rep_, field_.p);
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_field(o);
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = rat_ * o.rat_;
    else
        s.rep_ = mod_pos(rep_ * o.rep_, field_.p);
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero())
        throw Error("division by zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = 1 / rat_;
    } else {
        // extended Euclid
        long long a = rep_, b = field_.p, x0 = 1, x1 = 0;
        while (b != 0) {
            long long q = a / b;
            long long t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        s.rep_ = mod_pos(x0, field_.p);
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.rep_ = mod_pos(-rep_, field_.p);
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_field(o);
    return field_.is_rational() ? rat_ == o.rat_ : rep_ == o.rep_;
}

std::string Scalar::to_string() const {
    if (field_.is_rational())
        return rat_.str();
    return std::to_string(rep_);
}

Scalar sign_pow(Field f, long long k) {
    return (k % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
}

}  // namespace dgop
