// Symmetric q-arithmetic on top of MPFR.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace suq {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using Rat = boost::rational<std::int64_t>;
using Exact = boost::multiprecision::mpq_rational;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Lower parameter of a series vanishes before the series terminates.
struct PoleError : DomainError {
    PoleError(int param, int k, const std::string& what) : DomainError(what), param_index(param), k(k) {}
    int param_index;
    int k;
};

class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int value) : twice_(2 * value) {}

    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    // Accepts "3", "-2", "3/2", "-1/2". Decimal forms are rejected.
    static HalfInt parse(std::string_view text);

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    Rat rat() const { return Rat(twice_, 2); }
    int to_int() const;
    std::string str() const;

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
    constexpr auto operator<=>(const HalfInt&) const = default;

private:
    int twice_ = 0;
};

inline Rat R(HalfInt h) { return h.rat(); }
inline Rat R(int v) { return Rat(v); }
bool is_integer(const Rat& r);
int to_int(const Rat& r);  // throws std::logic_error on non-integers
std::string rat_str(const Rat& r);

// Deformation parameter (held exactly) and target precision in decimal digits.
class QContext {
public:
    explicit QContext(std::string_view q_decimal, int digits = 50);
    QContext(Exact q, int digits);

    const Exact& q() const { return q_; }
    int digits() const { return digits_; }
    const std::string& q_text() const { return text_; }
    QContext inverse() const;
    QContext with_digits(int d) const;

private:
    Exact q_;
    int digits_;
    std::string text_;
};

// Sets the MPFR default precision for the lifetime of the object.
// The default is process-wide in Boost 1.74, so scopes must not interleave across threads.
class PrecisionScope {
public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

// Value of a finite sum together with the sum of absolute values of its terms.
struct Sum {
    Real value;
    Real scale;

    void add(const Real& t) {
        value += t;
        scale += abs(t);
    }
};

Sum operator*(const Real& c, const Sum& s);

// Cached q-arithmetic at one fixed working precision.
// Instances are obtained from arith() inside a PrecisionScope of matching digits.
class QArith {
public:
    QArith(const Exact& q, int digits);

    int digits() const { return digits_; }
    const Real& q() const { return q_; }

    Real num(const Rat& x) const;
    Real num(const Real& x) const;
    Real num(int x) const { return num(Rat(x)); }
    Real fact(const Rat& n) const;
    Real fact_recip(const Rat& n) const;
    Real poch(const Rat& a, int n) const;
    Real pow(const Rat& e) const;
    Real sqrt(const Real& x) const;

    // sum_k prod (a)_k / prod (b)_k z^k / [k]!
    Sum hyper(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Real& z) const;
    // Same series with lower[reg] replaced by the factor 1/[lower[reg]+k-1]!,
    // i.e. the series divided by Gamma-like [lower[reg]-1]! and continued through its poles.
    Sum hyper_reg(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int reg,
                  const Real& z) const;

private:
    int digits_;
    Real q_;
    Real log_q_;
    Real q_minus_inv_;
    mutable std::unordered_map<int, Real> num_half_;
    mutable std::vector<Real> fact_;
    mutable std::map<std::pair<std::int64_t, std::int64_t>, Real> pow_;
};

// Arithmetic cache for (q, digits). Call only inside a PrecisionScope of the same digits.
const QArith& arith(const Exact& q, int digits);

// Runs f at ctx.digits()+guard and grows the guard until the cancellation seen
// in the returned Sum fits inside it.
Real adaptive(const QContext& ctx, const std::function<Sum(const QArith&)>& f);

// Number of significant digits lost to cancellation in s.
double cancellation_digits(const Sum& s);

Real to_real(const Exact& x);
Real parse_real(std::string_view text);
std::string format_real(const Real& x, int digits);

struct HypSeriesSpec {
    std::vector<Rat> upper;
    std::vector<Rat> lower;
    Real z;
    std::optional<Rat> z_qpow;  // when set, z = q^{z_qpow} at working precision
};

// Index of the last nonzero term, from the nonpositive integer upper parameters.
int termination_index(const std::vector<Rat>& upper);

Real qnum(const Rat& x, const QContext& ctx);
Real qnum(const Real& x, const QContext& ctx);
Real qfact(int n, const QContext& ctx);
Real qfact_recip(int n, const QContext& ctx);
Real qpoch(const Rat& a, int n, const QContext& ctx);
Real qhyper(const HypSeriesSpec& spec, const QContext& ctx);

}  // namespace suq
