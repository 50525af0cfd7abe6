#include "pfa/rational.hpp"

namespace pfa {

Rational ratio(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational ratio(long num, long den) { return ratio(Int(num), Int(den)); }

Rational parse_rational(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty rational token");
    const auto slash = token.find('/');
    const std::string num_s = token.substr(0, slash);
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational '" + token + "'");
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("malformed rational '" + token + "'");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("malformed rational '" + token + "'");
    };
    check_int(num_s);
    Int num(num_s);
    if (slash == std::string::npos) return Rational(num);
    const std::string den_s = token.substr(slash + 1);
    check_int(den_s);
    Int den(den_s);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + token + "'");
    return ratio(num, den);
}

std::string format_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

unsigned long bins(const Int& n) {
    if (n < 1) throw std::invalid_argument("bins requires n >= 1");
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

Int ceil_rational(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Int floor_rational(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Rational pow_rational(const Rational& base, const Int& exp) {
    if (exp < 0) throw std::invalid_argument("pow_rational requires exp >= 0");
    if (!exp.fits_ulong_p())
        throw std::overflow_error("exponent too large to materialize the power");
    const unsigned long e = exp.get_ui();
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    // base is canonical and den > 0, so num^e/den^e is canonical too.
    Rational r;
    r.get_num() = num;
    r.get_den() = den;
    return r;
}

}  // namespace pfa
