#pragma once

#include <gmpxx.h>

#include <string>

#include "grex/errors.hpp"

namespace grex {

/// Element a + b*sqrt(2) of Q(sqrt 2), exact.
struct QSqrt2 {
    mpq_class a, b;

    QSqrt2() : a(0), b(0) {}
    QSqrt2(long v) : a(v), b(0) {} // NOLINT: implicit on purpose
    QSqrt2(mpq_class a_, mpq_class b_) : a(std::move(a_)), b(std::move(b_)) {
        a.canonicalize();
        b.canonicalize();
    }

    static QSqrt2 sqrt2() { return QSqrt2(mpq_class(0), mpq_class(1)); }
    static QSqrt2 half_sqrt2() { return QSqrt2(mpq_class(0), mpq_class(1, 2)); }

    bool is_zero() const { return a == 0 && b == 0; }

    friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return QSqrt2(x.a + y.a, x.b + y.b); }
    friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return QSqrt2(x.a - y.a, x.b - y.b); }
    friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
        return QSqrt2(x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    QSqrt2 operator-() const { return QSqrt2(-a, -b); }
    bool operator==(const QSqrt2&) const = default;

    QSqrt2 inverse() const {
        // (a - b sqrt2) / (a^2 - 2 b^2); the norm vanishes only at 0.
        mpq_class norm = a * a - 2 * b * b;
        if (norm == 0)
            throw UsageError("QSqrt2::inverse of zero");
        return QSqrt2(a / norm, -b / norm);
    }

    std::string str() const {
        if (b == 0)
            return a.get_str();
        std::string s = (a == 0) ? "" : a.get_str() + (b > 0 ? "+" : "");
        return s + b.get_str() + "*sqrt2";
    }
};

} // namespace grex
