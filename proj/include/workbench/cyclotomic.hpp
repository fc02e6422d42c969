#pragma once

// Exact arithmetic in Z[zeta_N], the ring of integers of the N-th cyclotomic
// field.  Elements are integer vectors over the basis {zeta^i : 0 <= i < phi(N)},
// reduced modulo the N-th cyclotomic polynomial, so equality of coefficient
// vectors is equality of field elements.

#include "workbench/intx.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <vector>

namespace workbench {

namespace detail {

inline std::mutex& cyclotomic_cache_mutex() {
    static std::mutex m;
    return m;
}

// Cyclotomic polynomial Phi_n, dense coefficient vector, constant term first.
// (callers hold the cache mutex through power_table / the public interface)
inline IntVec cyclotomic_polynomial_locked(unsigned long n) {
    static std::map<unsigned long, IntVec> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1
    IntVec num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;
    // divide by Phi_d for every proper divisor d of n
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        IntVec phi_d = cyclotomic_polynomial_locked(d);
        // exact polynomial long division (phi_d is monic)
        IntVec q(num.size() - phi_d.size() + 1, Int(0));
        IntVec rem = num;
        for (long i = long(q.size()) - 1; i >= 0; --i) {
            Int c = rem[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (size_t j = 0; j < phi_d.size(); ++j)
                rem[i + j] -= c * phi_d[j];
        }
        for (const Int& c : rem)
            if (c != 0) throw error("cyclotomic_polynomial: inexact division");
        num = q;
    }
    cache[n] = num;
    return num;
}

// zeta^m expressed in the basis {zeta^i, i < phi(N)}, for 0 <= m < 2N.
inline const std::vector<IntVec>& power_table(unsigned long n) {
    static std::map<unsigned long, std::vector<IntVec>> cache;
    std::scoped_lock lock(cyclotomic_cache_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    IntVec phi = cyclotomic_polynomial_locked(n);
    size_t deg = phi.size() - 1;  // = euler_phi(n)
    std::vector<IntVec> tab(2 * n, IntVec(deg, Int(0)));
    for (size_t m = 0; m < 2 * n; ++m) {
        if (m < deg) {
            tab[m][m] = 1;
        } else {
            // zeta^m = zeta * zeta^{m-1}, then reduce the top coefficient
            IntVec prev = tab[m - 1];
            IntVec cur(deg, Int(0));
            Int top = prev[deg - 1];
            for (size_t i = 1; i < deg; ++i) cur[i] = prev[i - 1];
            if (top != 0) {
                // zeta^deg = -(phi[0] + phi[1] zeta + ...)/phi[deg] with phi monic
                for (size_t i = 0; i < deg; ++i) cur[i] -= top * phi[i];
            }
            tab[m] = cur;
        }
    }
    cache[n] = std::move(tab);
    return cache[n];
}

}  // namespace detail

class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1, Int(0)) {}
    explicit Cyclotomic(Int rational) : n_(1), c_(1, std::move(rational)) {}
    Cyclotomic(unsigned long n, IntVec coeffs) : n_(n), c_(std::move(coeffs)) {
        if (c_.size() != euler_phi(n_)) throw error("Cyclotomic: wrong coefficient count");
    }

    static Cyclotomic zero(unsigned long n) { return Cyclotomic(n, IntVec(euler_phi(n), Int(0))); }
    static Cyclotomic one(unsigned long n) {
        IntVec c(euler_phi(n), Int(0));
        c[0] = 1;
        return Cyclotomic(n, std::move(c));
    }
    static Cyclotomic integer(unsigned long n, Int v) {
        IntVec c(euler_phi(n), Int(0));
        c[0] = std::move(v);
        return Cyclotomic(n, std::move(c));
    }
    // zeta_N^k
    static Cyclotomic root(unsigned long n, long k) {
        long m = k % long(n);
        if (m < 0) m += long(n);
        const auto& tab = detail::power_table(n);
        return Cyclotomic(n, tab[size_t(m)]);
    }

    unsigned long modulus() const { return n_; }
    const IntVec& coeffs() const { return c_; }

    bool is_zero() const {
        for (const Int& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    // The coefficient of zeta^0; only meaningful as "the rational value" when
    // is_rational() holds, which callers assert.
    const Int& rational_part() const { return c_[0]; }
    Int rational_value() const {
        if (!is_rational()) throw error("Cyclotomic: value is not rational");
        return c_[0];
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        return a.embedded(coerced_modulus(a.n_, b.n_)).c_ ==
               b.embedded(coerced_modulus(a.n_, b.n_)).c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Embed into Q(zeta_m) for n | m via zeta_n = zeta_m^{m/n}.
    Cyclotomic embedded(unsigned long m) const {
        if (m == n_) return *this;
        if (m % n_ != 0) throw error("Cyclotomic: incompatible modulus coercion");
        unsigned long step = m / n_;
        Cyclotomic r = zero(m);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Cyclotomic t = root(m, long(i * step));
            for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += c_[i] * t.c_[j];
        }
        return r;
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = coerce(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
        return x;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = coerce(a, b);
        for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
        return x;
    }
    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (Int& x : r.c_) x = -x;
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        auto [x, y] = coerce(a, b);
        size_t deg = x.c_.size();
        IntVec conv(2 * deg - 1, Int(0));
        for (size_t i = 0; i < deg; ++i) {
            if (x.c_[i] == 0) continue;
            for (size_t j = 0; j < deg; ++j) {
                if (y.c_[j] == 0) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        const auto& tab = detail::power_table(x.n_);
        IntVec out(deg, Int(0));
        for (size_t m = 0; m < conv.size(); ++m) {
            if (conv[m] == 0) continue;
            for (size_t i = 0; i < deg; ++i) out[i] += conv[m] * tab[m][i];
        }
        return Cyclotomic(x.n_, std::move(out));
    }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

    friend Cyclotomic operator*(const Int& k, const Cyclotomic& a) {
        Cyclotomic r = a;
        for (Int& x : r.c_) x *= k;
        return r;
    }

    // zeta |-> zeta^k (a Galois automorphism when gcd(k,N)=1).
    Cyclotomic galois_power(long k) const {
        long m = k % long(n_);
        if (m < 0) m += long(n_);
        Cyclotomic r = zero(n_);
        const auto& tab = detail::power_table(n_);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            size_t e = (i * size_t(m)) % n_;
            for (size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += c_[i] * tab[e][j];
        }
        return r;
    }

    Cyclotomic conj() const { return galois_power(long(n_) - 1); }

    // Exact division by an integer; throws when inexact.
    Cyclotomic divided_by(const Int& k) const {
        Cyclotomic r = *this;
        for (Int& x : r.c_) x = divide_exact(x, k);
        return r;
    }

    // Printable form "a0 + a1*z + a2*z^2", z = zeta_N.
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Int v = c_[i];
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            first = false;
            if (i == 0) {
                os << v.get_str();
            } else {
                if (v != 1) os << v.get_str() << "*";
                os << "z";
                if (i > 1) os << "^" << i;
            }
        }
        if (first) os << "0";
        return os.str();
    }

    static Cyclotomic parse(unsigned long n, const std::string& text);

private:
    static unsigned long coerced_modulus(unsigned long a, unsigned long b) {
        Int m = lcm(Int(a), Int(b));
        if (m > 1000000) throw error("Cyclotomic: modulus coercion overflow");
        return m.get_ui();
    }

    static std::pair<Cyclotomic, Cyclotomic> coerce(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.n_ == b.n_) return {a, b};
        unsigned long m = coerced_modulus(a.n_, b.n_);
        return {a.embedded(m), b.embedded(m)};
    }

    unsigned long n_;
    IntVec c_;
};

inline Cyclotomic Cyclotomic::parse(unsigned long n, const std::string& text) {
    Cyclotomic out = Cyclotomic::zero(n);
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        std::string digits;
        while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        Int coef = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) coef = -coef;
        long expo = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && s[i] == 'z') {
            ++i;
            expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                while (i < s.size() && isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
                if (e.empty()) throw error("Cyclotomic::parse: missing exponent");
                expo = std::stol(e);
            }
        } else if (digits.empty()) {
            throw error("Cyclotomic::parse: bad term in '" + text + "'");
        }
        out += coef * Cyclotomic::root(n, expo);
    }
    return out;
}

}  // namespace workbench
