#include "qons/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace qons {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentPoly LaurentPoly::q_power(int exp, const Rational& c) {
    LaurentPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw Error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw Error("max_exp of zero polynomial");
    return terms_.back().first;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return Rational(0);
}

const Rational& LaurentPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
    return terms_.back().second;
}

void LaurentPoly::add_term(int exp, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {exp, c});
    }
}

LaurentPoly LaurentPoly::shifted(int by) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.first += by;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, c);
            ++a, ++b;
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (terms_.size() == 1) {
        LaurentPoly r = o.shifted(terms_[0].first);
        if (terms_[0].second != 1)
            for (auto& t : r.terms_) t.second *= terms_[0].second;
        return r;
    }
    if (o.terms_.size() == 1) return o * *this;
    // dense accumulation over the exponent span
    const int lo = min_exp() + o.min_exp();
    const int hi = max_exp() + o.max_exp();
    std::vector<Rational> acc(size_t(hi - lo + 1));
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) acc[size_t(ea + eb - lo)] += ca * cb;
    LaurentPoly r;
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) r.terms_.emplace_back(lo + int(i), std::move(acc[i]));
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest exponent first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rational c = it->second;
        int e = it->first;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (e == 0) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

namespace {

// ordinary polynomials as dense coefficient arrays, index = exponent
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
    Dense v(size_t(p.max_exp()) + 1);
    for (const auto& [e, c] : p.terms()) v[size_t(e)] = c;
    return v;
}

int dense_deg(const Dense& v) {
    for (size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return int(i);
    return -1;
}

LaurentPoly from_dense(const Dense& v) {
    LaurentPoly p;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(int(i), v[i]);
    return p;
}

// a -= (lead(a)/lead(b)) q^shift * b, repeatedly; quotient optionally collected
void dense_divmod(Dense& a, const Dense& b, int db, Dense* quot) {
    int da = dense_deg(a);
    while (da >= db) {
        Rational f = a[size_t(da)] / b[size_t(db)];
        if (quot) (*quot)[size_t(da - db)] = f;
        for (int i = 0; i <= db; ++i) {
            if (b[size_t(i)] != 0) a[size_t(da - db + i)] -= f * b[size_t(i)];
        }
        a[size_t(da)] = 0;
        da = dense_deg(a);
    }
}

}  // namespace

LaurentPoly poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly* remainder) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) {
        if (remainder) *remainder = LaurentPoly();
        return LaurentPoly();
    }
    Dense da = to_dense(a), db = to_dense(b);
    int degb = dense_deg(db);
    Dense quot(size_t(std::max(dense_deg(da) - degb + 1, 1)));
    dense_divmod(da, db, degb, &quot);
    if (remainder) *remainder = from_dense(da);
    return from_dense(quot);
}

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Dense x = to_dense(a), y = to_dense(b);
    int dx = dense_deg(x), dy = dense_deg(y);
    while (dy >= 0) {
        dense_divmod(x, y, dy, nullptr);
        std::swap(x, y);
        std::swap(dx, dy);
        dy = dense_deg(y);
        dx = dense_deg(x);
    }
    LaurentPoly g = from_dense(x);
    return g * (Rational(1) / g.leading_coeff());
}

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize(false);
}

Scalar Scalar::canonicalized() const {
    Scalar c = *this;
    c.normalize(false);
    return c;
}

void Scalar::shrink() {
    if (den_.term_count() > 10 || (!den_.is_zero() && den_.max_exp() - den_.min_exp() > 24))
        normalize(false);
}

void Scalar::normalize(bool coprime) {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.term_count() == 1) {
        const auto& [e, c] = den_.terms()[0];
        if (e != 0 || c != 1) {
            num_ = num_.shifted(-e);
            if (c != 1) num_ = num_ * (Rational(1) / c);
            den_ = LaurentPoly(1);
        }
        return;
    }
    // pull q-powers out of both sides; the shift lands in the numerator
    int e = num_.min_exp() - den_.min_exp();
    LaurentPoly n0 = num_.shifted(-num_.min_exp());
    LaurentPoly d0 = den_.shifted(-den_.min_exp());
    if (!coprime && n0.term_count() > 1) {
        LaurentPoly g = poly_gcd(n0, d0);
        if (!g.is_one() && g.max_exp() > 0) {
            n0 = poly_divmod(n0, g, nullptr);
            d0 = poly_divmod(d0, g, nullptr);
        }
    }
    if (d0.term_count() == 1) {
        const Rational& c = d0.terms()[0].second;
        num_ = n0.shifted(e);
        if (c != 1) num_ = num_ * (Rational(1) / c);
        den_ = LaurentPoly(1);
        return;
    }
    // scale so the denominator is integer-primitive with positive lead
    mpz_class lcm_den(1), gcd_num(0);
    for (const auto& [exp, c] : d0.terms()) {
        (void)exp;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    for (const auto& [exp, c] : d0.terms()) {
        (void)exp;
        mpz_class scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational factor(lcm_den, gcd_num);
    factor.canonicalize();
    if (d0.leading_coeff() < 0) factor = -factor;
    num_ = n0.shifted(e) * factor;
    den_ = d0 * factor;
}

bool Scalar::is_one() const {
    if (num_.is_one() && den_.is_one()) return true;
    return num_ == den_;
}

const Scalar& Scalar::zero() {
    static const Scalar z;
    return z;
}

const Scalar& Scalar::one() {
    static const Scalar o(1);
    return o;
}

bool Scalar::operator==(const Scalar& o) const {
    if (num_.is_zero()) return o.num_.is_zero();
    if (o.num_.is_zero()) return false;
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Scalar r;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else if (den_.is_one()) {
        r.num_ = num_ * o.den_ + o.num_;
        r.den_ = o.den_;
    } else if (o.den_.is_one()) {
        r.num_ = num_ + o.num_ * den_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    if (r.num_.is_zero()) return Scalar();
    r.shrink();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    // a monomial factor cannot create polynomial content
    if (den_.is_one() && num_.term_count() == 1) {
        Scalar r = o;
        r.num_ = r.num_.shifted(num_.terms()[0].first);
        const Rational& c = num_.terms()[0].second;
        if (c != 1) r.num_ = r.num_ * c;
        return r;
    }
    if (o.den_.is_one() && o.num_.term_count() == 1) return o * *this;
    Scalar r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.shrink();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize(false);
    return r;
}

std::string Scalar::str() const {
    Scalar c = canonicalized();
    if (c.den_.is_one()) {
        if (c.num_.term_count() <= 1) return c.num_.str();
        return "(" + c.num_.str() + ")";
    }
    return "(" + c.num_.str() + ")/(" + c.den_.str() + ")";
}

Scalar scalar_arith(const Scalar& lhs, const Scalar& rhs, ScalarOp op) {
    switch (op) {
        case ScalarOp::add: return lhs + rhs;
        case ScalarOp::sub: return lhs - rhs;
        case ScalarOp::mul: return lhs * rhs;
        case ScalarOp::div: return lhs / rhs;
    }
    throw Error("bad scalar op");
}

Scalar q_bracket(unsigned n) {
    LaurentPoly p;
    for (unsigned i = 0; i < n; ++i) p.add_term(int(n) - 1 - 2 * int(i), Rational(1));
    return Scalar(std::move(p));
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
    if (a % p == 0) throw DivisionByZero();
    return pow_mod(a % p, p - 2, p);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ModularPoint ModularPoint::make(uint64_t prime, uint64_t q_value, unsigned unity_order_bound) {
    if (!is_prime(prime)) throw ConfigError("modulus is not prime");
    q_value %= prime;
    if (q_value == 0) throw ConfigError("q must be invertible mod p");
    uint64_t pw = 1;
    for (unsigned k = 1; k <= unity_order_bound; ++k) {
        pw = mul_mod(pw, q_value, prime);
        if (pw == 1) throw ConfigError("q is a low-order root of unity mod p");
    }
    return ModularPoint{prime, q_value};
}

ModularPoint ModularPoint::random(std::mt19937_64& rng, unsigned unity_order_bound) {
    for (;;) {
        uint64_t p = (rng() >> 4) | (1ull << 59) | 1ull;
        while (!is_prime(p)) p += 2;
        uint64_t q = rng() % (p - 2) + 2;
        try {
            return make(p, q, unity_order_bound);
        } catch (const ConfigError&) {
            // resample
        }
    }
}

namespace {
std::optional<uint64_t> rational_mod(const Rational& c, uint64_t p) {
    uint64_t den = mpz_fdiv_ui(c.get_den().get_mpz_t(), p);
    if (den == 0) return std::nullopt;
    uint64_t num = mpz_fdiv_ui(c.get_num().get_mpz_t(), p);
    return mul_mod(num, inv_mod(den, p), p);
}
}  // namespace

std::optional<uint64_t> eval_mod(const LaurentPoly& x, const ModularPoint& pt) {
    const uint64_t p = pt.prime;
    uint64_t qinv = inv_mod(pt.q_value, p);
    uint64_t acc = 0;
    for (const auto& [e, c] : x.terms()) {
        auto cm = rational_mod(c, p);
        if (!cm) return std::nullopt;
        uint64_t qe = e >= 0 ? pow_mod(pt.q_value, uint64_t(e), p) : pow_mod(qinv, uint64_t(-int64_t(e)), p);
        acc = (acc + mul_mod(*cm, qe, p)) % p;
    }
    return acc;
}

std::optional<uint64_t> eval_mod(const Scalar& x, const ModularPoint& pt) {
    Scalar c = x.canonicalized();
    auto d = eval_mod(c.den(), pt);
    if (!d || *d == 0) return std::nullopt;
    auto n = eval_mod(c.num(), pt);
    if (!n) return std::nullopt;
    return mul_mod(*n, inv_mod(*d, pt.prime), pt.prime);
}

}  // namespace qons
