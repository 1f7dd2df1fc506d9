#include "hochcalc/rational.hpp"

namespace hochcalc {

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw input_error("empty rational literal");
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (den.empty()) throw input_error("malformed rational: " + s);
    }
    auto check = [&](const std::string& part) {
        if (part.empty()) throw input_error("malformed rational: " + s);
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw input_error("malformed rational: " + s);
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw input_error("malformed rational: " + s);
    };
    check(num);
    check(den);
    mpq_class v(num + "/" + den);
    if (sgn(v.get_den()) == 0) throw input_error("zero denominator: " + s);
    v.canonicalize();
    Rational r;
    r.v_ = v;
    return r;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace hochcalc
