#include "halfgrids/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace halfgrids {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

const Poly &cyclotomic_polynomial(long n) {
    static std::map<long, Poly> cache;
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1
    Poly xn1(n + 1, Rat(0));
    xn1[0] = -1;
    xn1[n] = 1;
    Poly divisor = {Rat(1)};
    for (long d = 1; d < n; ++d)
        if (n % d == 0) divisor = polyq::mul(divisor, cyclotomic_polynomial(d));
    auto [q, r] = polyq::divmod(xn1, divisor);
    if (!polyq::is_zero(r))
        throw std::logic_error("cyclotomic_polynomial: nonzero remainder");
    return cache.emplace(n, std::move(q)).first->second;
}

const FieldContext &field_context(long conductor) {
    static std::map<long, FieldContext> cache;
    if (conductor < 1) throw std::invalid_argument("field_context: conductor must be positive");
    auto it = cache.find(conductor);
    if (it != cache.end()) return it->second;
    FieldContext ctx;
    ctx.conductor = conductor;
    ctx.phi = cyclotomic_polynomial(conductor);
    ctx.degree = polyq::degree(ctx.phi);
    long top = std::max<long>(2 * ctx.degree - 2, conductor);
    ctx.xpow.resize(top + 1);
    Poly cur = {Rat(1)};
    for (long k = 0; k <= top; ++k) {
        ctx.xpow[k] = cur;
        cur.insert(cur.begin(), Rat(0)); // multiply by x
        if (polyq::degree(cur) >= ctx.degree) {
            auto [q, r] = polyq::divmod(cur, ctx.phi);
            cur = r;
        }
    }
    return cache.emplace(conductor, std::move(ctx)).first->second;
}

namespace {

// Reduce an arbitrary-degree representative mod Phi_N into the power basis.
std::vector<Rat> reduce_poly(const Poly &p, const FieldContext &ctx) {
    std::vector<Rat> out(ctx.degree, Rat(0));
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        const Poly *rep;
        Poly tmp;
        if (static_cast<long>(k) < static_cast<long>(ctx.xpow.size())) {
            rep = &ctx.xpow[k];
        } else {
            auto [q, r] = polyq::divmod(polyq::monomial(static_cast<int>(k)), ctx.phi);
            tmp = r;
            rep = &tmp;
        }
        for (size_t i = 0; i < rep->size(); ++i) out[i] += p[k] * (*rep)[i];
    }
    return out;
}

Poly as_poly(const std::vector<Rat> &c) {
    Poly p(c);
    polyq::trim(p);
    return p;
}

} // namespace

CycElem::CycElem(long conductor, std::vector<Rat> coeffs) : conductor_(conductor) {
    const FieldContext &ctx = field_context(conductor);
    if (static_cast<int>(coeffs.size()) == ctx.degree) {
        c_ = std::move(coeffs);
    } else {
        c_ = reduce_poly(as_poly(coeffs), ctx);
    }
}

CycElem CycElem::zero(long conductor) {
    return CycElem(conductor, std::vector<Rat>(field_context(conductor).degree, Rat(0)));
}

CycElem CycElem::one(long conductor) { return rational(Rat(1), conductor); }

CycElem CycElem::rational(const Rat &r, long conductor) {
    std::vector<Rat> c(field_context(conductor).degree, Rat(0));
    c[0] = r;
    return CycElem(conductor, std::move(c));
}

CycElem CycElem::root_of_unity(long conductor, long k) {
    k %= conductor;
    if (k < 0) k += conductor;
    const FieldContext &ctx = field_context(conductor);
    return CycElem(conductor, reduce_poly(polyq::monomial(static_cast<int>(k)), ctx));
}

bool CycElem::is_zero() const {
    for (const auto &x : c_)
        if (x != 0) return false;
    return true;
}

bool CycElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> CycElem::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

CycElem CycElem::operator-() const {
    CycElem r(*this);
    for (auto &x : r.c_) x = -x;
    return r;
}

CycElem CycElem::inv() const {
    if (is_zero()) throw std::domain_error("CycElem: division by zero");
    const FieldContext &ctx = field_context(conductor_);
    auto eg = polyq::ext_gcd(as_poly(c_), ctx.phi);
    if (polyq::degree(eg.g) != 0)
        throw std::logic_error("CycElem::inv: representative not coprime to Phi_N");
    CycElem r(*this);
    r.c_ = reduce_poly(eg.s, ctx);
    return r;
}

namespace {

std::pair<CycElem, CycElem> unify(const CycElem &a, const CycElem &b) {
    if (a.conductor() == b.conductor()) return {a, b};
    long m = std::lcm(a.conductor(), b.conductor());
    return {embed(a, m), embed(b, m)};
}

} // namespace

CycElem operator+(const CycElem &a, const CycElem &b) {
    auto [x, y] = unify(a, b);
    std::vector<Rat> c(x.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
    return CycElem(x.conductor(), std::move(c));
}

CycElem operator-(const CycElem &a, const CycElem &b) {
    auto [x, y] = unify(a, b);
    std::vector<Rat> c(x.coeffs());
    for (size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs()[i];
    return CycElem(x.conductor(), std::move(c));
}

CycElem operator*(const CycElem &a, const CycElem &b) {
    auto [x, y] = unify(a, b);
    const FieldContext &ctx = field_context(x.conductor());
    Poly prod = polyq::mul(as_poly(x.coeffs()), as_poly(y.coeffs()));
    return CycElem(x.conductor(), reduce_poly(prod, ctx));
}

CycElem operator/(const CycElem &a, const CycElem &b) { return a * b.inv(); }

bool operator==(const CycElem &a, const CycElem &b) {
    auto [x, y] = unify(a, b);
    return x.coeffs() == y.coeffs();
}

CycElem embed(const CycElem &a, long conductor) {
    if (a.conductor() == conductor) return a;
    if (conductor % a.conductor() != 0)
        throw std::invalid_argument("embed: source conductor does not divide target");
    long step = conductor / a.conductor();
    const FieldContext &ctx = field_context(conductor);
    Poly src = as_poly(a.coeffs());
    Poly img;
    img.resize(src.empty() ? 0 : (src.size() - 1) * step + 1, Rat(0));
    for (size_t i = 0; i < src.size(); ++i) img[i * step] = src[i];
    return CycElem(conductor, reduce_poly(img, ctx));
}

CycElem galois_apply(const CycElem &a, long k) {
    long n = a.conductor();
    k %= n;
    if (k < 0) k += n;
    if (std::gcd(k, n) != 1)
        throw std::invalid_argument("galois_apply: exponent not coprime to conductor");
    const FieldContext &ctx = field_context(n);
    Poly img(static_cast<size_t>(n), Rat(0));
    const auto &c = a.coeffs();
    for (size_t i = 0; i < c.size(); ++i) img[(i * k) % n] += c[i];
    return CycElem(n, reduce_poly(img, ctx));
}

std::optional<CycElem> try_descend(const CycElem &a, long conductor) {
    long n = a.conductor();
    if (n % conductor != 0)
        throw std::invalid_argument("try_descend: target conductor must divide source");
    if (n == conductor) return a;
    const FieldContext &sub = field_context(conductor);
    // Columns: images of the subfield power basis; solve by plain elimination
    // over Q on the augmented matrix.
    int rows = field_context(n).degree;
    int cols = sub.degree;
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (int j = 0; j < cols; ++j) {
        CycElem bj = embed(CycElem::root_of_unity(conductor, j), n);
        for (int i = 0; i < rows; ++i) m[i][j] = bj.coeffs()[i];
    }
    for (int i = 0; i < rows; ++i) m[i][cols] = a.coeffs()[i];
    std::vector<int> pivot_col;
    int r = 0;
    for (int jc = 0; jc < cols && r < rows; ++jc) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][jc] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        Rat inv = Rat(1) / m[r][jc];
        for (int j = jc; j <= cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][jc] == 0) continue;
            Rat f = m[i][jc];
            for (int j = jc; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(jc);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt; // inconsistent: not in the subfield
    std::vector<Rat> sol(cols, Rat(0));
    for (int i = 0; i < r; ++i) sol[pivot_col[i]] = m[i][cols];
    return CycElem(conductor, std::move(sol));
}

namespace {

int legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long result = 1, base = a, e = (p - 1) / 2;
    while (e > 0) {
        if (e & 1) result = (result * base) % p;
        base = (base * base) % p;
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

// Quadratic Gauss sum in Q(zeta_p); squares to p for p = 1 mod 4
// and to -p for p = 3 mod 4.
CycElem gauss_sum(long p) {
    Poly rep(static_cast<size_t>(p), Rat(0));
    for (long k = 1; k < p; ++k) rep[k] = Rat(legendre_symbol(k, p));
    return CycElem(p, std::vector<Rat>(rep.begin(), rep.end()));
}

} // namespace

std::optional<CycElem> sqrt_in_field(const Rat &r, long conductor) {
    if (r == 0) return CycElem::zero(conductor);
    bool negative = r < 0;
    mpz_class num = abs(r.get_num());
    mpz_class den = r.get_den();
    mpz_class n = num * den; // sqrt(r) = sqrt(num*den)/den up to sign of r
    // Squarefree decomposition n = f^2 * d by trial division.
    mpz_class f = 1, d = 1, rem = n;
    for (mpz_class p = 2; p * p <= rem; p += 1) {
        int e = 0;
        while (rem % p == 0) { rem /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) f *= p;
        if (e % 2) d *= p;
    }
    d *= rem;
    long dl = d.get_si();
    long m = negative ? -dl : dl; // signed squarefree part
    Rat scalar = Rat(f) / Rat(den);
    if (m == 1) return CycElem::rational(scalar, conductor);
    // Q(sqrt(m)) lies in Q(zeta_c) exactly when c is a multiple of the
    // conductor of the quadratic field: |m| if m = 1 mod 4, else 4|m|.
    long mod4 = ((m % 4) + 4) % 4;
    long cond = (mod4 == 1) ? std::abs(m) : 4 * std::abs(m);
    if (conductor % cond != 0) return std::nullopt;
    CycElem cand = CycElem::one(cond);
    long todo = std::abs(m);
    if (todo % 2 == 0) {
        // sqrt(2) = zeta_8 + zeta_8^-1
        CycElem s2 = CycElem::root_of_unity(8) + CycElem::root_of_unity(8, 7);
        cand = cand * embed(s2, cond);
        todo /= 2;
    }
    for (long p = 3; p <= todo; p += 2) {
        if (todo % p == 0) {
            cand = cand * embed(gauss_sum(p), cond);
            todo /= p;
        }
    }
    CycElem sq = cand * cand;
    CycElem target = CycElem::rational(Rat(m), cond);
    if (sq == -target) {
        if (cond % 4 != 0)
            throw std::logic_error("sqrt_in_field: sign correction outside field");
        cand = cand * embed(CycElem::root_of_unity(4), cond);
        sq = cand * cand;
    }
    if (sq != target) throw std::logic_error("sqrt_in_field: candidate verification failed");
    return embed(cand, conductor) * CycElem::rational(scalar, conductor);
}

} // namespace halfgrids
