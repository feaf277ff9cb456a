#include "suq/qcore.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace suq {

namespace {

bool parse_int(std::string_view s, long long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
    auto bad = [&] {
        return DomainError("label '" + std::string(text) + "' is not an integer or p/2");
    };
    auto slash = text.find('/');
    long long p = 0;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, p)) throw bad();
        return HalfInt(static_cast<int>(p));
    }
    if (text.substr(slash + 1) != "2" || !parse_int(text.substr(0, slash), p)) throw bad();
    return from_twice(static_cast<int>(p));
}

int HalfInt::to_int() const {
    if (!is_integer()) throw std::logic_error("half-integer used where an integer is required");
    return twice_ / 2;
}

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

bool is_integer(const Rat& r) { return r.denominator() == 1; }

int to_int(const Rat& r) {
    if (r.denominator() != 1) throw std::logic_error("non-integer " + rat_str(r) + " used as an integer");
    return static_cast<int>(r.numerator());
}

std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---- QContext ----

namespace {

Exact parse_decimal(std::string_view s) {
    auto bad = [&] { return DomainError("q must be a positive decimal, got '" + std::string(s) + "'"); };
    std::string mant;
    long long exp10 = 0;
    std::size_t i = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            mant += c;
            seen_digit = true;
            if (seen_point) --exp10;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw bad();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') throw bad();
        long long e = 0;
        auto rest = s.substr(i + 1);
        if (!rest.empty() && rest[0] == '+') rest.remove_prefix(1);
        if (!parse_int(rest, e)) throw bad();
        exp10 += e;
    }
    using boost::multiprecision::mpz_int;
    // a leading zero would make the string octal
    mant.erase(0, std::min(mant.find_first_not_of('0'), mant.size() - 1));
    mpz_int m(mant);
    mpz_int p = boost::multiprecision::pow(mpz_int(10), static_cast<unsigned>(std::llabs(exp10)));
    return exp10 >= 0 ? Exact(m * p) : Exact(m, p);
}

}  // namespace

QContext::QContext(std::string_view q_decimal, int digits) : QContext(parse_decimal(q_decimal), digits) {
    text_ = std::string(q_decimal);
}

QContext::QContext(Exact q, int digits) : q_(std::move(q)), digits_(digits) {
    if (q_ <= 0 || q_ == 1) throw DomainError("q must be positive and different from 1");
    if (digits_ < 20) throw DomainError("digits must be at least 20");
    text_ = q_.str();
}

QContext QContext::inverse() const { return QContext(Exact(1) / q_, digits_); }

QContext QContext::with_digits(int d) const {
    QContext c(q_, d);
    c.text_ = text_;
    return c;
}

// ---- precision ----

PrecisionScope::PrecisionScope(int digits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(digits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Sum operator*(const Real& c, const Sum& s) { return Sum{c * s.value, abs(c) * s.scale}; }

double cancellation_digits(const Sum& s) {
    if (s.scale == 0) return 0.0;
    if (s.value == 0) return std::numeric_limits<double>::infinity();
    Real r = s.scale / abs(s.value);
    return static_cast<double>(log10(r));
}

Real to_real(const Exact& x) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Real(numerator(x).str()) / Real(denominator(x).str());
}

Real parse_real(std::string_view text) { return Real(std::string(text)); }

std::string format_real(const Real& x, int digits) {
    if (x == 0) return "0";
    return x.str(digits, std::ios_base::scientific);
}

// ---- QArith ----

QArith::QArith(const Exact& q, int digits) : digits_(digits), q_(to_real(q)) {
    log_q_ = log(q_);
    q_minus_inv_ = q_ - 1 / q_;
    fact_.push_back(Real(1));
}

Real QArith::num(const Real& x) const {
    Real e = exp(x * log_q_);
    return (e - 1 / e) / q_minus_inv_;
}

Real QArith::num(const Rat& x) const {
    if (x.denominator() <= 2) {
        int t = static_cast<int>(x.numerator() * (2 / x.denominator()));
        auto it = num_half_.find(t);
        if (it != num_half_.end()) return it->second;
        if (t == 0) return num_half_.emplace(t, Real(0)).first->second;
        Real e = pow(x);
        return num_half_.emplace(t, (e - 1 / e) / q_minus_inv_).first->second;
    }
    Real e = pow(x);
    return (e - 1 / e) / q_minus_inv_;
}

Real QArith::fact(const Rat& n) const {
    int k = to_int(n);
    if (k < 0) throw DomainError("q-factorial of negative integer " + std::to_string(k));
    while (static_cast<int>(fact_.size()) <= k) {
        int m = static_cast<int>(fact_.size());
        fact_.push_back(fact_.back() * num(Rat(m)));
    }
    return fact_[k];
}

Real QArith::fact_recip(const Rat& n) const {
    if (to_int(n) < 0) return Real(0);
    return 1 / fact(n);
}

Real QArith::poch(const Rat& a, int n) const {
    Real r(1);
    for (int m = 0; m < n; ++m) r *= num(a + m);
    return r;
}

Real QArith::pow(const Rat& e) const {
    if (e.numerator() == 0) return Real(1);
    auto key = std::make_pair(e.numerator(), e.denominator());
    auto it = pow_.find(key);
    if (it != pow_.end()) return it->second;
    Real v = exp(log_q_ * Real(e.numerator()) / Real(e.denominator()));
    return pow_.emplace(key, v).first->second;
}

Real QArith::sqrt(const Real& x) const {
    if (x < 0) throw DomainError("square root of a negative quantity");
    return boost::multiprecision::sqrt(x);
}

int termination_index(const std::vector<Rat>& upper) {
    std::optional<int> n;
    for (const auto& a : upper)
        if (is_integer(a) && a <= 0) n = std::min(n.value_or(std::numeric_limits<int>::max()), to_int(-a));
    if (!n) throw DomainError("series does not terminate: no nonpositive integer upper parameter");
    return *n;
}

namespace {

void check_poles(const std::vector<Rat>& lower, int n, int skip) {
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        const Rat& b = lower[i];
        if (is_integer(b) && b <= 0 && to_int(-b) < n) {
            int k = to_int(-b) + 1;
            throw PoleError(static_cast<int>(i), k,
                            "pole before termination: lower parameter " + std::to_string(i) + " = " +
                                rat_str(b) + " vanishes at k=" + std::to_string(k));
        }
    }
}

}  // namespace

Sum QArith::hyper(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Real& z) const {
    int n = termination_index(upper);
    check_poles(lower, n, -1);
    Sum s;
    Real t(1);
    s.add(t);
    for (int k = 1; k <= n; ++k) {
        for (const auto& a : upper) t *= num(a + (k - 1));
        for (const auto& b : lower) t /= num(b + (k - 1));
        t *= z / num(Rat(k));
        s.add(t);
    }
    return s;
}

Sum QArith::hyper_reg(const std::vector<Rat>& upper, const std::vector<Rat>& lower, int reg,
                      const Real& z) const {
    int n = termination_index(upper);
    check_poles(lower, n, reg);
    Sum s;
    Real t(1);
    for (int k = 0; k <= n; ++k) {
        if (k > 0) {
            for (const auto& a : upper) t *= num(a + (k - 1));
            for (std::size_t i = 0; i < lower.size(); ++i)
                if (static_cast<int>(i) != reg) t /= num(lower[i] + (k - 1));
            t *= z / num(Rat(k));
        }
        s.add(t * fact_recip(lower[reg] + (k - 1)));
    }
    return s;
}

const QArith& arith(const Exact& q, int digits) {
    static std::map<std::pair<std::string, int>, std::unique_ptr<QArith>> cache;
    auto key = std::make_pair(q.str(), digits);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<QArith>(q, digits)).first;
    return *it->second;
}

Real adaptive(const QContext& ctx, const std::function<Sum(const QArith&)>& f) {
    int guard = 20;
    for (int attempt = 0;; ++attempt) {
        int work = ctx.digits() + guard;
        PrecisionScope scope(work);
        Sum s = f(arith(ctx.q(), work));
        double loss = cancellation_digits(s);
        if (loss <= guard - 5 || attempt == 3) return s.value;
        guard = std::isfinite(loss) ? static_cast<int>(loss) + 20 : 2 * guard;
        if (guard > 400) return s.value;
    }
}

// ---- public scalar API ----

Real qnum(const Rat& x, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    return arith(ctx.q(), ctx.digits()).num(x);
}

Real qnum(const Real& x, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    return arith(ctx.q(), ctx.digits()).num(x);
}

Real qfact(int n, const QContext& ctx) {
    if (n < 0) throw DomainError("qfact requires n >= 0, got " + std::to_string(n));
    PrecisionScope scope(ctx.digits());
    return arith(ctx.q(), ctx.digits()).fact(Rat(n));
}

Real qfact_recip(int n, const QContext& ctx) {
    PrecisionScope scope(ctx.digits());
    return arith(ctx.q(), ctx.digits()).fact_recip(Rat(n));
}

Real qpoch(const Rat& a, int n, const QContext& ctx) {
    if (n < 0) throw DomainError("qpoch requires n >= 0");
    PrecisionScope scope(ctx.digits());
    return arith(ctx.q(), ctx.digits()).poch(a, n);
}

Real qhyper(const HypSeriesSpec& spec, const QContext& ctx) {
    if (spec.upper.size() != spec.lower.size() + 1)
        throw DomainError("qhyper expects p+1 upper and p lower parameters");
    return adaptive(ctx, [&](const QArith& A) {
        Real z = spec.z_qpow ? A.pow(*spec.z_qpow) : Real(spec.z);
        return A.hyper(spec.upper, spec.lower, z);
    });
}

}  // namespace suq
