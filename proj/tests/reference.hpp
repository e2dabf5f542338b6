#pragma once

// Test-only reference arithmetic: a literal, loop-based transcription of
// Einstein addition in long double, sharing no code with the library.

#include <cmath>
#include <cstddef>
#include <vector>

namespace reference {

using Point = std::vector<long double>;

inline long double dot(const Point& a, const Point& b) {
    long double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point einstein_add(const Point& u, const Point& v) {
    const long double uv = dot(u, v);
    const long double gu = 1.0L / std::sqrt(1.0L - dot(u, u));
    Point out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        out[i] = (u[i] + v[i] / gu + gu / (1.0L + gu) * uv * u[i]) / (1.0L + uv);
    return out;
}

inline Point negate(Point p) {
    for (auto& x : p) x = -x;
    return p;
}

inline Point gyration(const Point& u, const Point& v, const Point& w) {
    return einstein_add(negate(einstein_add(u, v)), einstein_add(u, einstein_add(v, w)));
}

template <class Vec>
Point from(const Vec& v) {
    Point p(static_cast<std::size_t>(v.size()));
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = v[static_cast<decltype(v.size())>(i)];
    return p;
}

}  // namespace reference
