#include "rom_mis/rational.hpp"

#include <ostream>

namespace rommis {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw ContractViolation("Rational: zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ == 1)
        return;
    BigInt g = mp::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { throw ParseError("Rational: cannot parse '" + std::string(text) + "'"); };
    if (text.empty())
        bad();
    std::size_t slash = text.find('/');
    auto parse_int = [&](std::string_view s, bool allow_sign) {
        if (s.empty())
            bad();
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            bad();
        for (std::size_t j = i; j < s.size(); ++j)
            if (s[j] < '0' || s[j] > '9')
                bad();
        return BigInt(std::string(s));
    };
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, true));
    BigInt p = parse_int(text.substr(0, slash), true);
    BigInt q = parse_int(text.substr(slash + 1), false);
    if (q.is_zero())
        bad();
    return Rational(std::move(p), std::move(q));
}

Rational Rational::pow2(int e) {
    if (e < 0)
        throw ContractViolation("Rational::pow2: negative exponent");
    return Rational(BigInt(1) << e);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
        return Rational(a.num_ + b.num_);
    if (a.den_ == b.den_) {
        Rational r;
        r.num_ = a.num_ + b.num_;
        r.den_ = a.den_;
        r.normalize();
        return r;
    }
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
        return Rational(a.num_ - b.num_);
    if (a.den_ == b.den_) {
        Rational r;
        r.num_ = a.num_ - b.num_;
        r.den_ = a.den_;
        r.normalize();
        return r;
    }
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.den_ == 1 && b.den_ == 1)
        return Rational(a.num_ * b.num_);
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero())
        throw ContractViolation("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

int compare(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_)
        return a.num_.compare(b.num_);
    int sa = a.num_.sign(), sb = b.num_.sign();
    if (sa != sb)
        return sa < sb ? -1 : 1;
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    return lhs.compare(rhs);
}

BigInt Rational::floor() const {
    if (den_ == 1)
        return num_;
    BigInt q = num_ / den_; // truncates toward zero
    if (num_.sign() < 0)
        --q; // non-integral negative: truncation rounded up
    return q;
}

BigInt Rational::ceil() const {
    if (den_ == 1)
        return num_;
    BigInt q = num_ / den_;
    if (num_.sign() > 0)
        ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

double Rational::to_double() const {
    return num_.convert_to<double>() / den_.convert_to<double>();
}

std::size_t Rational::hash() const {
    std::size_t seed = boost::hash<BigInt>{}(num_);
    boost::hash_combine(seed, boost::hash<BigInt>{}(den_));
    return seed;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

BigInt floor_div(const Rational& a, const Rational& b) {
    if (b.sign() <= 0)
        throw ContractViolation("floor_div: divisor must be positive");
    BigInt n = a.num() * b.den();
    BigInt d = a.den() * b.num();
    BigInt q = n / d;
    if (n.sign() < 0 && q * d != n)
        --q;
    return q;
}

} // namespace rommis
