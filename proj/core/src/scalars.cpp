#include "apolab/scalars.hpp"

namespace apolab {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const {
    return q_.get_str();
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational n = norm();
    return {re / n, -im / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (im.is_zero()) return re.to_string();
    std::string itail = (im == Rational(1)) ? "i" : (im == Rational(-1)) ? "-i" : im.to_string() + "i";
    if (re.is_zero()) return itail;
    // mixed value: (a+bi) / (a-bi)
    std::string out = "(" + re.to_string();
    if (im.sign() > 0) {
        out += "+";
        out += (im.is_one() ? "i" : im.to_string() + "i");
    } else {
        Rational a = -im;
        out += "-";
        out += (a.is_one() ? "i" : a.to_string() + "i");
    }
    return out + ")";
}

}  // namespace apolab
