#include "halfgrids/polynomial.hpp"

#include <stdexcept>

namespace halfgrids::polyq {

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly &p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Poly &p) { return p.empty(); }

Poly add(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

Poly sub(const Poly &a, const Poly &b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Poly mul(const Poly &a, const Poly &b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly scale(const Poly &a, const Rat &s) {
    if (s == 0) return {};
    Poly r(a);
    for (auto &c : r) c *= s;
    return r;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    Poly rem(a), quot;
    int db = degree(b);
    if (degree(a) >= db) quot.assign(a.size() - b.size() + 1, Rat(0));
    const Rat &lead = b.back();
    while (degree(rem) >= db) {
        int k = degree(rem) - db;
        Rat c = rem.back() / lead;
        quot[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        trim(rem);
    }
    trim(quot);
    return {quot, rem};
}

Rat eval(const Poly &p, const Rat &x) {
    Rat r(0);
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

Poly monomial(int n, const Rat &c) {
    if (c == 0) return {};
    Poly p(n + 1, Rat(0));
    p[n] = c;
    return p;
}

ExtGcd ext_gcd(const Poly &a, const Poly &b) {
    // Invariants: s0*a + t0*b = r0, s1*a + t1*b = r1.
    Poly r0 = a, r1 = b;
    Poly s0 = {Rat(1)}, s1 = {};
    Poly t0 = {}, t1 = {Rat(1)};
    while (!is_zero(r1)) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        Poly t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rat inv = Rat(1) / r0.back();
        r0 = scale(r0, inv);
        s0 = scale(s0, inv);
        t0 = scale(t0, inv);
    }
    return {r0, s0, t0};
}

} // namespace halfgrids::polyq
