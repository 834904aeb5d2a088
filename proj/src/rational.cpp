#include "pmet/rational.hpp"

#include <cctype>

namespace pmet {

std::string rationalStr(const Rational& v) {
    const auto num = boost::multiprecision::numerator(v);
    const auto den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parseRational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    auto digits = [](const std::string& s) {
        if (s.empty()) return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!digits(text)) throw InputError("malformed rational: " + text);
        return Rational(boost::multiprecision::cpp_int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!digits(num) || !digits(den)) throw InputError("malformed rational: " + text);
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw InputError("zero denominator: " + text);
    return Rational(boost::multiprecision::cpp_int(num), d);
}

std::string UnitRat::str() const { return rationalStr(v_); }

UnitRat UnitRat::parse(const std::string& text) { return UnitRat(parseRational(text)); }

std::string ExtNonneg::str() const { return inf_ ? "inf" : rationalStr(v_); }

ExtNonneg ExtNonneg::parse(const std::string& text) {
    if (text == "inf") return infinity();
    return ExtNonneg(parseRational(text));
}

}  // namespace pmet
