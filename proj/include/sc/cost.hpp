#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sc {

/// Exact rational cost. All cut costs, flow values and alpha parameters are
/// instances of this type; no floating point enters any algorithm.
class Cost {
public:
    Cost() : v_(0) {}
    Cost(long n) : v_(n) {}  // NOLINT: implicit by design, integers are costs
    Cost(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Cost: zero denominator");
        v_.canonicalize();
    }
    explicit Cost(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Accepts "7", "-3/4" and plain decimals like "0.25" (converted exactly).
    static Cost parse(const std::string& text);

    Cost& operator+=(const Cost& o) { v_ += o.v_; return *this; }
    Cost& operator-=(const Cost& o) { v_ -= o.v_; return *this; }
    Cost& operator*=(const Cost& o) { v_ *= o.v_; return *this; }
    Cost& operator/=(const Cost& o) {
        if (o.v_ == 0) throw std::domain_error("Cost: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Cost operator+(Cost a, const Cost& b) { return a += b; }
    friend Cost operator-(Cost a, const Cost& b) { return a -= b; }
    friend Cost operator*(Cost a, const Cost& b) { return a *= b; }
    friend Cost operator/(Cost a, const Cost& b) { return a /= b; }
    Cost operator-() const { return Cost(mpq_class(-v_)); }

    friend bool operator==(const Cost& a, const Cost& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Cost& a, const Cost& b) {
        int c = cmp(a.v_, b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bool positive() const { return sgn(v_) > 0; }
    bool negative() const { return sgn(v_) < 0; }
    bool zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Canonical "num/den" rendering, or just "num" when den == 1.
    std::string str() const;

    double to_double() const { return v_.get_d(); }
    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

inline Cost abs(const Cost& c) { return c.negative() ? -c : c; }

}  // namespace sc
