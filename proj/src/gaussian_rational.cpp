#include "polyhull/gaussian_rational.hpp"

#include <cmath>
#include <cstdlib>

namespace polyhull {

GaussianRational GaussianRational::ratio(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(std::move(q));
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class n = norm();
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

int GaussianRational::compare(const GaussianRational& o) const {
    int c = cmp(re_, o.re_);
    if (c != 0) return c;
    return cmp(im_, o.im_);
}

namespace {

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

// |q| rendered with a trailing "*i", collapsing magnitude 1 to plain "i".
std::string imag_magnitude_str(const mpq_class& q) {
    mpq_class a = abs(q);
    if (a == 1) return "i";
    return a.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    if (im_ == 0) return rational_str(re_);
    std::string im_part = imag_magnitude_str(im_);
    if (re_ == 0) return (im_ < 0 ? "-" : "") + im_part;
    return rational_str(re_) + (im_ < 0 ? "-" : "+") + im_part;
}

bool rational_round(double x, unsigned long den_bound, double tol, mpq_class& out) {
    if (!std::isfinite(x) || std::abs(x) > 1e12) return false;
    // continued fraction convergents p_k/q_k of x
    double v = x;
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::llround(std::floor(v)));
    long long q_cur = 1;
    for (int iter = 0; iter < 64; ++iter) {
        if (std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur)) <= tol) {
            out = mpq_class(static_cast<long>(p_cur), static_cast<long>(q_cur));
            out.canonicalize();
            return true;
        }
        double frac = v - std::floor(v);
        if (frac < 1e-15) break;
        v = 1.0 / frac;
        double a_d = std::floor(v);
        if (!std::isfinite(a_d) || a_d > 4e6 + static_cast<double>(den_bound)) break;
        long long a = static_cast<long long>(a_d);
        long long p_next = a * p_cur + p_prev;
        long long q_next = a * q_cur + q_prev;
        if (q_next > static_cast<long long>(den_bound) || q_next <= 0) break;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    if (std::abs(x - static_cast<double>(p_cur) / static_cast<double>(q_cur)) <= tol) {
        out = mpq_class(static_cast<long>(p_cur), static_cast<long>(q_cur));
        out.canonicalize();
        return true;
    }
    return false;
}

bool rational_round(std::complex<double> v, unsigned long den_bound, double tol,
                    GaussianRational& out) {
    mpq_class re, im;
    if (!rational_round(v.real(), den_bound, tol, re)) return false;
    if (!rational_round(v.imag(), den_bound, tol, im)) return false;
    out = GaussianRational(std::move(re), std::move(im));
    return true;
}

}  // namespace polyhull
