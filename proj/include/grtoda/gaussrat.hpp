#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace grtoda {

// Exact Gaussian rational a + b*i. All symbolic coefficients in this
// project live here; no floating point enters the symbolic layer.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(long num, long den) : re_(mpq_class(num, den)), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_rational() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r); im_ = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("GaussRat: division by zero");
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r); im_ = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // total order used only for canonical sorting
    friend int cmp3(const GaussRat& a, const GaussRat& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c;
        return cmp(a.im_, b.im_);
    }

    double re_double() const { return re_.get_d(); }
    double im_double() const { return im_.get_d(); }

    std::string str() const;
    static GaussRat parse(const std::string& s);

private:
    mpq_class re_, im_;
};

std::string rat_str(const mpq_class& q);
mpq_class rat_parse(const std::string& s);

} // namespace grtoda
