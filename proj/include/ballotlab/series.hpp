#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ballotlab {

/// The four series variables, in storage order.
enum class Var : int { X = 0, Y = 1, T = 2, Z = 3 };
inline constexpr int kNumVars = 4;
char var_letter(Var v);

/// Exponent vector of one monomial x^a y^b t^c z^d.
struct Exps {
    std::array<int, kNumVars> e{0, 0, 0, 0};

    int operator[](Var v) const { return e[static_cast<size_t>(v)]; }
    int& operator[](Var v) { return e[static_cast<size_t>(v)]; }
    int total() const { return e[0] + e[1] + e[2] + e[3]; }
    auto operator<=>(const Exps&) const = default;
};

inline Exps exps(int x, int y = 0, int t = 0, int z = 0) { return Exps{{x, y, t, z}}; }

/// Per-variable truncation bounds plus the number of extra orders the
/// builders keep internally so that valuation-shifting divisions stay
/// exact down to the nominal bounds.
struct TruncationBox {
    std::array<int, kNumVars> bounds{10, 10, 10, 10};
    int guard = 4;

    TruncationBox() = default;
    TruncationBox(int nx, int ny, int nt, int nz, int g = 4)
        : bounds{nx, ny, nt, nz}, guard(g) {}

    int bound(Var v) const { return bounds[static_cast<size_t>(v)]; }
    bool contains(const Exps& m) const {
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[static_cast<size_t>(i)] > bounds[static_cast<size_t>(i)]) return false;
        return true;
    }
    /// Componentwise min of bounds, min of guards.
    TruncationBox intersect(const TruncationBox& o) const;
    /// y,t,z bounds raised by guard; x is never divided by, so its bound
    /// stays put.
    TruncationBox inflated() const;
    bool operator==(const TruncationBox&) const = default;
};

/// Truncated formal power series in x,y,t,z with exact rational
/// coefficients. Zero coefficients are never stored; monomials outside
/// the box are discarded by every operation, and all surviving
/// coefficients are exact. Values are immutable in spirit: operations
/// return new series.
class Series {
public:
    Series() = default;
    explicit Series(TruncationBox box) : box_(box) {}
    Series(TruncationBox box, const mpq_class& constant);

    static Series zero(const TruncationBox& box) { return Series(box); }
    static Series one(const TruncationBox& box) { return Series(box, 1); }
    static Series monomial(const TruncationBox& box, const Exps& m, const mpq_class& c);
    /// The variable v itself (zero if the box cannot hold it).
    static Series var(const TruncationBox& box, Var v);

    const TruncationBox& box() const { return box_; }
    const std::map<Exps, mpq_class>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    mpq_class coeff(const Exps& m) const;
    mpq_class constant_term() const { return coeff(Exps{}); }
    /// Adds c to the coefficient of m (dropped when outside the box).
    void add_term(const Exps& m, const mpq_class& c);

    Series truncated(const TruncationBox& box) const;

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const mpq_class& c, Series a);
    friend Series operator+(Series a, const mpq_class& c);
    friend Series operator-(Series a, const mpq_class& c);

private:
    TruncationBox box_;
    std::map<Exps, mpq_class> coeffs_;
};

/// Multiplicative inverse; requires a nonzero constant term.
Series inverse(const Series& b);

/// Exact quotient a/b where b factors as (monomial)·(unit). Every
/// monomial of a must be divisible by that monomial factor; otherwise the
/// division is inexact and std::domain_error is thrown. Each unit of
/// valuation shift consumes one guard order of the affected variable.
Series div_exact(const Series& a, const Series& b);

/// Square root with positive constant term; the constant term of a must
/// be the square of a nonzero rational.
Series sqrt_series(const Series& a);

/// exp of a series with zero constant term.
Series exp_series(const Series& a);

/// ln(1+a) for a with zero constant term.
Series ln1p_series(const Series& a);

/// Termwise antiderivative in x with zero constant of integration.
Series integrate_x(const Series& a);

/// Termwise d/dx. The result is only meaningful up to x-degree
/// bound(x)-1; callers compare with that bound.
Series derive_x(const Series& a);

/// x^n y^k t^d z^e -> x^n y^k t^{d+n} z^e. Throws std::domain_error when
/// a shifted exponent overflows the t bound (the box is too small to
/// represent the image).
Series twist_xt(const Series& a);

/// x^n y^k t^d z^e -> x^n y^k t^{n-d} z^e; requires e_t <= e_x on every
/// stored monomial; an involution on that domain.
Series reflect_t(const Series& a);

/// Keeps exactly the monomials with 2·e(small) <= e(big) - 1. Idempotent
/// and commutes with specializing the other variables.
Series d_trunc(const Series& a, Var small, Var big);
/// The discarded half: monomials with 2·e(small) > e(big) - 1.
Series d_trunc_complement(const Series& a, Var small, Var big);

/// Substitutes var := value (an exact rational).
Series specialize(const Series& a, Var v, const mpq_class& value);

/// Coefficient times e_x!; throws std::domain_error when that is not an
/// integer (an EGF whose counts are not integral signals a broken
/// identity).
mpz_class egf_count(const Series& a, const Exps& m);

/// Canonical dump: a header line recording box and guard, then one line
/// per monomial "e_x e_y e_t e_z numerator/denominator" in lexicographic
/// exponent order.
std::string dump(const Series& a);

}  // namespace ballotlab
