#ifndef HALFGRIDS_CYCLOTOMIC_HPP
#define HALFGRIDS_CYCLOTOMIC_HPP

#include <optional>
#include <vector>

#include "halfgrids/polynomial.hpp"
#include "halfgrids/rat.hpp"

namespace halfgrids {

long euler_phi(long n);

// Phi_N, computed by dividing x^N - 1 by the product of Phi_d over proper
// divisors d of N. Monic of degree phi(N). Results are memoized.
const Poly &cyclotomic_polynomial(long n);

// Shared data for arithmetic in Q(zeta_N): Phi_N plus a table of
// x^k mod Phi_N for every power a reduction can meet.
struct FieldContext {
    long conductor;
    int degree; // phi(N)
    Poly phi;   // Phi_N
    std::vector<Poly> xpow; // x^k mod Phi_N, k = 0 .. max(2*degree-2, N)
};

const FieldContext &field_context(long conductor);

// An element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1),
// fully reduced mod Phi_N. Equality at one conductor is coefficient-wise;
// mixed conductors are compared after embedding into the lcm.
class CycElem {
  public:
    CycElem() : conductor_(1), c_(1, Rat(0)) {}
    CycElem(long conductor, std::vector<Rat> coeffs);

    static CycElem zero(long conductor = 1);
    static CycElem one(long conductor = 1);
    static CycElem rational(const Rat &r, long conductor = 1);
    // zeta_N^k
    static CycElem root_of_unity(long conductor, long k = 1);

    long conductor() const { return conductor_; }
    const std::vector<Rat> &coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    std::optional<Rat> as_rational() const;

    CycElem operator-() const;
    CycElem inv() const; // throws on zero

    friend CycElem operator+(const CycElem &a, const CycElem &b);
    friend CycElem operator-(const CycElem &a, const CycElem &b);
    friend CycElem operator*(const CycElem &a, const CycElem &b);
    friend CycElem operator/(const CycElem &a, const CycElem &b);
    friend bool operator==(const CycElem &a, const CycElem &b);
    friend bool operator!=(const CycElem &a, const CycElem &b) { return !(a == b); }

    CycElem &operator+=(const CycElem &o) { return *this = *this + o; }
    CycElem &operator-=(const CycElem &o) { return *this = *this - o; }
    CycElem &operator*=(const CycElem &o) { return *this = *this * o; }

  private:
    long conductor_;
    std::vector<Rat> c_;
};

// Image of a under zeta_N -> zeta_M^(M/N). Requires conductor(a) | M.
CycElem embed(const CycElem &a, long conductor);

// Galois action zeta_N -> zeta_N^k, gcd(k, N) = 1.
CycElem galois_apply(const CycElem &a, long k);

// Rewrite a at conductor M | conductor(a) when a lies in Q(zeta_M).
std::optional<CycElem> try_descend(const CycElem &a, long conductor);

// Exact square root of a rational inside Q(zeta_N), when one exists.
// Existence is decided by the conductor of Q(sqrt(r)); the root itself is
// assembled from quadratic Gauss sums and verified by squaring.
std::optional<CycElem> sqrt_in_field(const Rat &r, long conductor);

} // namespace halfgrids

#endif
