#pragma once

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>

namespace polyhull {

// Exact element of Q(i): rational real and imaginary parts with
// arbitrary-precision numerators and denominators.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = mpq_class(0))
        : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational ratio(long num, long den);
    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_imaginary() const { return re_ == 0 && im_ != 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    // Squared modulus re^2 + im^2, an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Deterministic total order (real part, then imaginary part); used only
    // for canonical sorting, not a ring order.
    int compare(const GaussianRational& o) const;

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical text form: "0", "3", "-1/2", "i", "-2/3*i", "1/2+3*i", "1/2-i".
    std::string str() const;

private:
    mpq_class re_, im_;
};

// Nearest rational p/q with q <= den_bound via continued fractions; returns
// false when no convergent approximates x to within tol.
bool rational_round(double x, unsigned long den_bound, double tol, mpq_class& out);

// Complex variant applied to both parts.
bool rational_round(std::complex<double> v, unsigned long den_bound, double tol,
                    GaussianRational& out);

}  // namespace polyhull
