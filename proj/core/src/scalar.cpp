#include "sea/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <cctype>

#include "sea/error.hpp"

namespace sea {

void check_discriminant(long disc) {
    if (disc == 0 || disc == 1) {
        throw PreconditionError("quadratic extension discriminant must not be 0 or 1");
    }
    long v = std::labs(disc);
    for (long p = 2; p * p <= v; ++p) {
        if (v % (p * p) == 0) {
            throw PreconditionError("quadratic extension discriminant " + std::to_string(disc) +
                                    " is not squarefree");
        }
    }
}

Scalar Scalar::quadratic(Rational rational, Rational radical, long disc) {
    check_discriminant(disc);
    Scalar s;
    s.rational_ = std::move(rational);
    s.radical_ = std::move(radical);
    s.rational_.canonicalize();
    s.radical_.canonicalize();
    s.disc_ = disc;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (sgn(radical_) == 0) disc_ = 0;
}

long Scalar::common_disc(const Scalar& a, const Scalar& b) {
    if (a.disc_ == 0) return b.disc_;
    if (b.disc_ == 0 || a.disc_ == b.disc_) return a.disc_;
    throw FieldMismatchError("cannot combine scalars from Q(sqrt " + std::to_string(a.disc_) +
                             ") and Q(sqrt " + std::to_string(b.disc_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    if (disc_ == 0 && rhs.disc_ == 0) {
        rational_ += rhs.rational_;
        return *this;
    }
    disc_ = common_disc(*this, rhs);
    rational_ += rhs.rational_;
    radical_ += rhs.radical_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    if (disc_ == 0 && rhs.disc_ == 0) {
        rational_ -= rhs.rational_;
        return *this;
    }
    disc_ = common_disc(*this, rhs);
    rational_ -= rhs.rational_;
    radical_ -= rhs.radical_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    if (disc_ == 0 && rhs.disc_ == 0) {
        rational_ *= rhs.rational_;
        return *this;
    }
    const long d = common_disc(*this, rhs);
    Rational re = rational_ * rhs.rational_ + radical_ * rhs.radical_ * d;
    Rational im = rational_ * rhs.radical_ + radical_ * rhs.rational_;
    rational_ = std::move(re);
    radical_ = std::move(im);
    disc_ = d;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    if (rhs.is_zero()) throw PreconditionError("division by zero scalar");
    if (disc_ == 0 && rhs.disc_ == 0) {
        rational_ /= rhs.rational_;
        return *this;
    }
    common_disc(*this, rhs);
    const Rational n = rhs.norm();
    Scalar inv = rhs.conjugate();
    inv.rational_ /= n;
    inv.radical_ /= n;
    return *this *= inv;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.rational_ = -s.rational_;
    s.radical_ = -s.radical_;
    return s;
}

Scalar Scalar::pow(unsigned exponent) const {
    Scalar result(1);
    Scalar base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

Scalar Scalar::conjugate() const {
    Scalar s = *this;
    s.radical_ = -s.radical_;
    return s;
}

Rational Scalar::norm() const {
    return rational_ * rational_ - radical_ * radical_ * disc_;
}

namespace {

std::string rational_str(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) {
        for (char c : text) {
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') text_.push_back(c);
        }
    }

    Scalar parse() {
        if (text_.empty()) fail("empty scalar");
        Scalar total;
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = next() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Scalar term = parse_term();
            total += sign < 0 ? -term : term;
            first = false;
        }
        return total;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("malformed scalar \"" + text_ + "\": " + why);
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char next() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    bool starts_with(std::string_view s) const { return std::string_view(text_).substr(pos_).starts_with(s); }

    Integer parse_uint() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(text_.substr(start, pos_ - start));
    }

    long parse_sqrt() {
        pos_ += 5;  // "sqrt("
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        Integer d = parse_uint();
        if (next() != ')') fail("expected ')'");
        if (!d.fits_slong_p()) fail("discriminant too large");
        return neg ? -d.get_si() : d.get_si();
    }

    Scalar parse_term() {
        if (starts_with("sqrt(")) return Scalar::sqrt_of(parse_sqrt());
        Rational q(parse_uint());
        if (peek() == '/') {
            ++pos_;
            Integer den = parse_uint();
            if (den == 0) fail("zero denominator");
            q = Rational(q.get_num(), den);
            q.canonicalize();
        }
        if (peek() == '*') {
            ++pos_;
            if (!starts_with("sqrt(")) fail("expected sqrt(...) after '*'");
            return Scalar::quadratic(0, q, parse_sqrt());
        }
        return Scalar(q);
    }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::string Scalar::str() const {
    if (disc_ == 0) return rational_str(rational_);
    std::string out;
    if (sgn(rational_) != 0) out = rational_str(rational_);
    const bool negative = sgn(radical_) < 0;
    if (negative) {
        out += "-";
    } else if (!out.empty()) {
        out += "+";
    }
    Rational mag = abs(radical_);
    if (mag != 1) out += rational_str(mag) + "*";
    out += "sqrt(" + std::to_string(disc_) + ")";
    return out;
}

double Scalar::approx_real() const {
    double re = rational_.get_d();
    if (disc_ > 0) re += radical_.get_d() * std::sqrt(static_cast<double>(disc_));
    return re;
}

double Scalar::approx_imag() const {
    if (disc_ >= 0) return 0.0;
    return radical_.get_d() * std::sqrt(static_cast<double>(-disc_));
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace sea
