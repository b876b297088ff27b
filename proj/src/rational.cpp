#include "lsra/rational.hpp"

namespace lsra {

Rational::Rational(long num, long den) {
    LSRA_REQUIRE(den != 0, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& o) const {
    LSRA_REQUIRE(!o.is_zero(), "division by zero rational");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::reciprocal() const {
    LSRA_REQUIRE(!is_zero(), "reciprocal of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rational(r);
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::from_string(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    LSRA_REQUIRE(!s.empty(), "empty numeric literal");
    auto dot = s.find('.');
    mpq_class q;
    if (dot == std::string::npos) {
        // integer or p/q
        q = mpq_class(s, 10);
        q.canonicalize();
        LSRA_REQUIRE(sgn(q.get_den()) > 0, "zero denominator in literal");
    } else {
        // d.e -> (d * 10^k + e) / 10^k, k = |e|
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        LSRA_REQUIRE(!ip.empty() && !fp.empty(), "malformed decimal literal");
        mpz_class scaled(ip.empty() ? "0" : ip);
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, fp.size());
        scaled = scaled * pow10 + mpz_class(fp);
        q = mpq_class(scaled, pow10);
        q.canonicalize();
    }
    if (neg) q = -q;
    return Rational(q);
}

Rational mediant(const Rational& lo, const Rational& hi) {
    LSRA_REQUIRE(lo < hi, "mediant requires lo < hi");
    mpq_class m(lo.num() + hi.num(), lo.den() + hi.den());
    m.canonicalize();
    return Rational(m);
}

} // namespace lsra
