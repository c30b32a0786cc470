#include "halfgrids/geproci.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace halfgrids {

namespace {

struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned long long seed) : state(seed) {}
    long next(long lo, long hi) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return lo + static_cast<long>((state >> 33) %
                                      static_cast<unsigned long long>(hi - lo + 1));
    }
};

// Exponent triples of degree d in graded-lex order over x, y, z.
std::vector<std::array<int, 3>> monomials(int d) {
    std::vector<std::array<int, 3>> out;
    for (int i = d; i >= 0; --i)
        for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
    return out;
}

CycElem power(const CycElem &x, int e) {
    CycElem r = CycElem::one(x.conductor());
    for (int k = 0; k < e; ++k) r = r * x;
    return r;
}

// f(1, 0, lambda) for a dense degree-d coefficient vector.
CycElem eval_1_0_l(const Vec &coeffs, int d, long lambda) {
    CycElem l = CycElem::rational(Rat(lambda));
    CycElem s = CycElem::zero(1);
    auto mons = monomials(d);
    for (size_t t = 0; t < mons.size(); ++t) {
        if (mons[t][1] != 0) continue;
        s = s + coeffs[t] * power(l, mons[t][2]);
    }
    return s;
}

// Univariate poly in x: f(x, y0, 1 + lambda x), dense coefficients low to
// high, padded to degree d (the x^d coefficient is f(1, 0, lambda)).
std::vector<CycElem> univariate_slice(const Vec &coeffs, int d, long lambda, long y0) {
    std::vector<CycElem> out(d + 1, CycElem::zero(1));
    CycElem l = CycElem::rational(Rat(lambda));
    CycElem y = CycElem::rational(Rat(y0));
    auto mons = monomials(d);
    for (size_t t = 0; t < mons.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        int i = mons[t][0], j = mons[t][1], k = mons[t][2];
        CycElem base = coeffs[t] * power(y, j);
        // (1 + lambda x)^k expands with binomial coefficients
        Rat binom(1);
        CycElem lp = CycElem::one(1);
        for (int s = 0; s <= k; ++s) {
            out[i + s] = out[i + s] + base * CycElem::rational(binom) * lp;
            binom = binom * Rat(k - s) / Rat(s + 1);
            lp = lp * l;
        }
    }
    return out;
}

CycElem sylvester_resultant(const std::vector<CycElem> &f, const std::vector<CycElem> &g) {
    int a = static_cast<int>(f.size()) - 1;
    int b = static_cast<int>(g.size()) - 1;
    int n = a + b;
    Matrix syl(n, Vec(n, CycElem::zero(1)));
    for (int r = 0; r < b; ++r)
        for (int c = 0; c <= a; ++c) syl[r][r + c] = f[a - c];
    for (int r = 0; r < a; ++r)
        for (int c = 0; c <= b; ++c) syl[b + r][r + c] = g[b - c];
    return linalg::determinant(syl);
}

// Coefficients of fa * g where g runs over the degree-(b-a) monomials:
// columns of the multiplication map, used for the membership test.
Matrix multiplication_matrix(const Vec &fa, int a, int b) {
    auto mons_a = monomials(a);
    auto mons_g = monomials(b - a);
    auto mons_b = monomials(b);
    std::map<std::array<int, 3>, int> index_b;
    for (size_t t = 0; t < mons_b.size(); ++t) index_b[mons_b[t]] = static_cast<int>(t);
    Matrix m(mons_b.size(), Vec(mons_g.size(), CycElem::zero(1)));
    for (size_t i = 0; i < mons_a.size(); ++i) {
        if (fa[i].is_zero()) continue;
        for (size_t j = 0; j < mons_g.size(); ++j) {
            std::array<int, 3> e = {mons_a[i][0] + mons_g[j][0], mons_a[i][1] + mons_g[j][1],
                                    mons_a[i][2] + mons_g[j][2]};
            m[index_b[e]][j] = m[index_b[e]][j] + fa[i];
        }
    }
    return m;
}

} // namespace

int monomial_count(int d) { return (d + 1) * (d + 2) / 2; }

PlanarConfig project(const Config &z, const ProjPoint &center, const Plane3 &plane) {
    CycElem ch = dot(plane.h, center.v);
    if (ch.is_zero()) throw std::invalid_argument("project: center lies on the image plane");
    // Coordinate frame of the plane: a kernel basis of its equation.
    auto basis = linalg::kernel(Matrix{plane.h});
    if (basis.size() != 3) throw std::invalid_argument("project: degenerate plane");
    Matrix frame(4, Vec(3, CycElem::zero(1)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) frame[i][j] = basis[j][i];
    PlanarConfig out;
    out.center = center;
    out.plane = plane;
    long n = 1;
    for (const auto &lp : z.points) {
        if (proj_eq(lp.pt, center))
            throw std::invalid_argument("project: center belongs to the configuration");
        CycElem ph = dot(plane.h, lp.pt.v);
        Vec image(4, CycElem::zero(1));
        for (int i = 0; i < 4; ++i) image[i] = ch * lp.pt.v[i] - ph * center.v[i];
        auto coords = linalg::solve(frame, image);
        if (!coords) throw std::logic_error("project: image off the plane frame");
        out.points.push_back(ProjPoint::from_coords(*coords));
        out.labels.push_back(lp.label);
        for (const auto &c : out.points.back().v) n = std::lcm(n, c.conductor());
    }
    out.conductor = n;
    for (size_t i = 0; i < out.points.size(); ++i)
        for (size_t j = i + 1; j < out.points.size(); ++j)
            if (proj_eq(out.points[i], out.points[j]))
                throw std::invalid_argument("project: center lies on a secant of the set");
    return out;
}

CycElem eval_form(const Vec &coeffs, int d, const ProjPoint &p) {
    auto mons = monomials(d);
    if (coeffs.size() != mons.size())
        throw std::invalid_argument("eval_form: wrong coefficient count");
    CycElem s = CycElem::zero(1);
    for (size_t t = 0; t < mons.size(); ++t) {
        if (coeffs[t].is_zero()) continue;
        s = s + coeffs[t] * power(p.v[0], mons[t][0]) * power(p.v[1], mons[t][1]) *
                    power(p.v[2], mons[t][2]);
    }
    return s;
}

std::vector<Vec> vanishing_forms(const PlanarConfig &s, int d) {
    if (d < 1) throw std::invalid_argument("vanishing_forms: degree must be >= 1");
    auto mons = monomials(d);
    Matrix m;
    for (const auto &p : s.points) {
        Vec row;
        row.reserve(mons.size());
        for (const auto &e : mons)
            row.push_back(power(p.v[0], e[0]) * power(p.v[1], e[1]) * power(p.v[2], e[2]));
        m.push_back(std::move(row));
    }
    return linalg::kernel(m);
}

std::optional<TrialRecord> ci_certify(const PlanarConfig &s, int a, int b) {
    if (a > b) throw std::invalid_argument("ci_certify: expects a <= b");
    if (static_cast<long>(s.points.size()) != static_cast<long>(a) * b)
        throw std::invalid_argument("ci_certify: |S| != a*b");
    auto ker_a = vanishing_forms(s, a);
    if (ker_a.empty()) return std::nullopt;
    Vec fa = ker_a[0];
    auto ker_b = vanishing_forms(s, b);
    Matrix mult = multiplication_matrix(fa, a, b);
    auto is_multiple = [&](const Vec &fb) { return linalg::solve(mult, fb).has_value(); };
    // Candidates: the kernel basis plus power-weighted combinations of it.
    // A basis vector can share a component with fa even when the pencil
    // contains a coprime form, so combinations are a required fallback.
    std::vector<Vec> candidates = ker_b;
    for (long t = 1; t <= 2 * (a + b) && ker_b.size() > 1; ++t) {
        Vec comb(ker_b[0].size(), CycElem::zero(1));
        CycElem w = CycElem::one(1);
        CycElem tc = CycElem::rational(Rat(t));
        for (const auto &kb : ker_b) {
            for (size_t i = 0; i < comb.size(); ++i) comb[i] = comb[i] + w * kb[i];
            w = w * tc;
        }
        candidates.push_back(std::move(comb));
    }
    for (const auto &fb : candidates) {
        if (is_multiple(fb)) continue;
        long lambda = 0;
        for (long l = 1; l <= 4 * (a + b) && lambda == 0; ++l)
            if (!eval_1_0_l(fa, a, l).is_zero() && !eval_1_0_l(fb, b, l).is_zero())
                lambda = l;
        if (lambda == 0) continue;
        for (long y0 = 0; y0 <= static_cast<long>(a) * b; ++y0) {
            CycElem res = sylvester_resultant(univariate_slice(fa, a, lambda, y0),
                                              univariate_slice(fb, b, lambda, y0));
            if (!res.is_zero()) {
                TrialRecord rec;
                rec.center = s.center;
                rec.a = a;
                rec.b = b;
                rec.fa = fa;
                rec.fb = fb;
                rec.shear_lambda = lambda;
                rec.resultant_y0 = y0;
                rec.resultant = res;
                return rec;
            }
        }
        // resultant identically zero: fa and fb share a component; try the
        // next kernel element
    }
    return std::nullopt;
}

GeprociResult is_geproci(const Config &z, int a, int b, int trials,
                         unsigned long long seed) {
    if (trials < 1) throw std::invalid_argument("is_geproci: trials must be >= 1");
    if (static_cast<long>(z.points.size()) != static_cast<long>(a) * b)
        throw std::invalid_argument("is_geproci: |Z| != a*b");
    GeprociResult out;
    out.cert.a = a;
    out.cert.b = b;
    out.cert.seed = seed;
    Plane3 plane = Plane3::of(0, 0, 0, 1);
    Lcg rng(seed);
    for (int t = 0; t < trials; ++t) {
        // A geproci set projects to a complete intersection from general
        // centers only, so a degenerate or special center is resampled; a
        // non-geproci set fails from every center, so a small failure budget
        // suffices to refute.
        std::optional<TrialRecord> rec;
        int ci_failures = 0;
        for (int attempt = 0; attempt < 100 && !rec; ++attempt) {
            ProjPoint center = ProjPoint::p3i(rng.next(-997, 997), rng.next(-997, 997),
                                              rng.next(-997, 997), rng.next(-997, 997));
            bool zero = true;
            for (const auto &c : center.v) zero = zero && c.is_zero();
            if (zero) continue;
            PlanarConfig s;
            try {
                s = project(z, center, plane);
            } catch (const std::invalid_argument &) {
                continue;
            }
            rec = ci_certify(s, a, b);
            if (!rec && ++ci_failures >= 8) break;
        }
        if (!rec) {
            out.reason = ci_failures > 0
                             ? "no sampled projection center yields a transverse (a,b) "
                               "complete intersection"
                             : "projection retry budget exhausted";
            return out;
        }
        out.cert.trials.push_back(std::move(*rec));
    }
    out.geproci = true;
    return out;
}

bool validate_certificate(const Config &z, const GeprociCert &cert, std::string *why) {
    auto fail = [&](const std::string &msg) {
        if (why) *why = msg;
        return false;
    };
    if (cert.trials.empty()) return fail("certificate holds no trials");
    Plane3 plane = Plane3::of(0, 0, 0, 1);
    for (const auto &trial : cert.trials) {
        if (trial.a != cert.a || trial.b != cert.b) return fail("trial type mismatch");
        PlanarConfig s;
        try {
            s = project(z, trial.center, plane);
        } catch (const std::invalid_argument &e) {
            return fail(std::string("projection failed: ") + e.what());
        }
        if (static_cast<long>(s.points.size()) !=
            static_cast<long>(cert.a) * cert.b)
            return fail("image size mismatch");
        if (trial.fa.size() != static_cast<size_t>(monomial_count(cert.a)) ||
            trial.fb.size() != static_cast<size_t>(monomial_count(cert.b)))
            return fail("coefficient vector size mismatch");
        for (const auto &p : s.points) {
            if (!eval_form(trial.fa, cert.a, p).is_zero())
                return fail("f_a does not vanish at an image point");
            if (!eval_form(trial.fb, cert.b, p).is_zero())
                return fail("f_b does not vanish at an image point");
        }
        if (trial.resultant.is_zero()) return fail("stored resultant witness is zero");
        CycElem res = sylvester_resultant(
            univariate_slice(trial.fa, cert.a, trial.shear_lambda, trial.resultant_y0),
            univariate_slice(trial.fb, cert.b, trial.shear_lambda, trial.resultant_y0));
        if (res != trial.resultant) return fail("resultant recomputation disagrees");
    }
    return true;
}

} // namespace halfgrids
