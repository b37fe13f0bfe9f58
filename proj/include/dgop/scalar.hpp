#ifndef DGOP_SCALAR_HPP
#define DGOP_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dgop {

using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The ground field: a prime field F_p (p >= 2) or the rationals (p == 0).
struct Field {
    long long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field& o) const { return p == o.p; }
    bool operator!=(const Field& o) const { return p != o.p; }

    void validate() const;
    std::string to_string() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
};

/// An exact field element with a canonical representative: residue in 0..p-1
/// for prime fields, reduced fraction for the rationals.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(Field f) : field_(f) {}

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return of(f, 1); }
    static Scalar of(Field f, long long n);
    static Scalar of(Field f, const Rational& q);
    static Scalar parse(Field f, const std::string& s);

    Field field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Field field_;
    long long rep_ = 0;  // prime mode
    Rational rat_ = 0;   // rational mode

    void check_field(const Scalar& o) const;
};

/// Sign helper: (-1)^k as a Scalar.
Scalar sign_pow(Field f, long long k);

}  // namespace dgop

#endif
