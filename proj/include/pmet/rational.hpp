#pragma once

#include <compare>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pmet {

using Rational = boost::multiprecision::cpp_rational;

/// Thrown on malformed or out-of-range textual input.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Rational in [0,1], kept in lowest terms by the backing representation.
class UnitRat {
public:
    UnitRat() : v_(0) {}
    explicit UnitRat(Rational v) : v_(std::move(v)) {
        if (v_ < 0 || v_ > 1)
            throw InputError("unit rational out of [0,1]: " + str());
    }
    UnitRat(long num, long den) : UnitRat(Rational(num, den)) {}

    static UnitRat zero() { return UnitRat(); }
    static UnitRat one() { return UnitRat(Rational(1)); }

    const Rational& value() const { return v_; }
    bool isZero() const { return v_ == 0; }
    bool isOne() const { return v_ == 1; }

    /// 1 - value.
    UnitRat complement() const { return UnitRat(Rational(1) - v_); }

    friend bool operator==(const UnitRat& a, const UnitRat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const UnitRat& a, const UnitRat& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;
    static UnitRat parse(const std::string& text);

private:
    Rational v_;
};

/// Non-negative rational extended with a distinguished infinity.
/// Infinity compares above every finite value; addition absorbs it.
class ExtNonneg {
public:
    ExtNonneg() : inf_(false), v_(0) {}
    explicit ExtNonneg(Rational v) : inf_(false), v_(std::move(v)) {
        if (v_ < 0) throw InputError("negative extended value: " + str());
    }
    ExtNonneg(long num, long den) : ExtNonneg(Rational(num, den)) {}

    static ExtNonneg zero() { return ExtNonneg(); }
    static ExtNonneg infinity() {
        ExtNonneg e;
        e.inf_ = true;
        return e;
    }

    bool isInfinite() const { return inf_; }
    bool isZero() const { return !inf_ && v_ == 0; }

    /// Finite value; undefined when infinite.
    const Rational& finiteValue() const { return v_; }

    friend ExtNonneg operator+(const ExtNonneg& a, const ExtNonneg& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtNonneg(a.v_ + b.v_);
    }

    friend ExtNonneg min(const ExtNonneg& a, const ExtNonneg& b) { return a <= b ? a : b; }
    friend ExtNonneg max(const ExtNonneg& a, const ExtNonneg& b) { return a <= b ? b : a; }

    friend bool operator==(const ExtNonneg& a, const ExtNonneg& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const ExtNonneg& a, const ExtNonneg& b) {
        if (a.inf_ && b.inf_) return std::strong_ordering::equal;
        if (a.inf_) return std::strong_ordering::greater;
        if (b.inf_) return std::strong_ordering::less;
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const;
    /// Accepts "p", "p/q" or "inf".
    static ExtNonneg parse(const std::string& text);

private:
    bool inf_;
    Rational v_;
};

/// Lowest-terms "p" / "p/q" rendering shared by both value types.
std::string rationalStr(const Rational& v);
Rational parseRational(const std::string& text);

}  // namespace pmet
