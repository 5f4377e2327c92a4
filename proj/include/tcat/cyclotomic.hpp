#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNumber is stored as a coefficient vector over the power basis
// 1, z, ..., z^(phi(N)-1) of Q(zeta_N), reduced modulo the N-th cyclotomic
// polynomial.  Values are kept in a canonical form: the conductor is the
// smallest M (never congruent to 2 mod 4) such that the value lies in
// Q(zeta_M).  Two values are equal iff their canonical forms are identical,
// so equality is plain field-by-field comparison.

#include "tcat/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcat {

namespace detail {

using RPoly = std::vector<Rat>;  // dense, c[i] = coefficient of x^i

inline void rp_trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RPoly rp_mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    rp_trim(r);
    return r;
}

inline RPoly rp_sub(RPoly a, const RPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rp_trim(a);
    return a;
}

// Remainder of a modulo b; b need not be monic.
inline RPoly rp_rem(RPoly a, const RPoly& b) {
    rp_trim(a);
    if (b.empty()) throw std::logic_error("division by zero polynomial");
    while (a.size() >= b.size()) {
        Rat q = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

// Exact quotient; remainder must vanish.
inline RPoly rp_div_exact(RPoly a, const RPoly& b) {
    rp_trim(a);
    RPoly q;
    if (b.empty()) throw std::logic_error("division by zero polynomial");
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
    while (a.size() >= b.size()) {
        Rat c = a.back() / b.back();
        size_t off = a.size() - b.size();
        q[off] = c;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        rp_trim(a);
    }
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    rp_trim(q);
    return q;
}

inline long euler_phi(long n) {
    long r = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

inline const RPoly& cyclotomic_poly(long n) {
    static std::map<long, RPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // inside the same lock.
    std::vector<long> todo{n};
    while (!todo.empty()) {
        long m = todo.back();
        if (cache.count(m)) { todo.pop_back(); continue; }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) { todo.push_back(d); ready = false; }
        if (!ready) continue;
        todo.pop_back();
        RPoly num(m + 1, Rat(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = rp_div_exact(num, cache.at(d));
        cache.emplace(m, std::move(num));
    }
    return cache.at(n);
}

// Reduce a polynomial mod Phi_n and pad to length phi(n).
inline std::vector<Rat> reduce_mod_cyclotomic(RPoly p, long n) {
    p = rp_rem(std::move(p), cyclotomic_poly(n));
    p.resize(static_cast<size_t>(euler_phi(n)), Rat(0));
    return p;
}

// Solve A y = rhs over Q by Gaussian elimination.  Columns of A are given
// explicitly; returns the solution vector or nullopt when inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(
        std::vector<std::vector<Rat>> cols, std::vector<Rat> rhs) {
    size_t k = cols.size();
    size_t m = rhs.size();
    std::vector<int> pivot_col(m, -1);
    size_t row = 0;
    std::vector<size_t> col_of_row;
    for (size_t c = 0; c < k && row < m; ++c) {
        size_t pr = row;
        while (pr < m && cols[c][pr] == 0) ++pr;
        if (pr == m) continue;
        if (pr != row) {
            for (size_t cc = c; cc < k; ++cc) std::swap(cols[cc][pr], cols[cc][row]);
            std::swap(rhs[pr], rhs[row]);
        }
        Rat inv = Rat(1) / cols[c][row];
        for (size_t cc = c; cc < k; ++cc) cols[cc][row] *= inv;
        rhs[row] *= inv;
        for (size_t r = 0; r < m; ++r) {
            if (r == row || cols[c][r] == 0) continue;
            Rat f = cols[c][r];
            for (size_t cc = c; cc < k; ++cc) cols[cc][r] -= f * cols[cc][row];
            rhs[r] -= f * rhs[row];
        }
        pivot_col[row] = static_cast<int>(c);
        col_of_row.push_back(c);
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (rhs[r] != 0) return std::nullopt;
    std::vector<Rat> y(k, Rat(0));
    for (size_t r = 0; r < row; ++r) y[static_cast<size_t>(pivot_col[r])] = rhs[r];
    return y;
}

}  // namespace detail

class CycNumber {
public:
    CycNumber() : cond_(1), coef_{Rat(0)} {}
    explicit CycNumber(const Rat& r) : cond_(1), coef_{r} {}
    explicit CycNumber(long v) : cond_(1), coef_{Rat(v)} {}

    // zeta_n^k in canonical reduced form.  Rejects n < 1.
    static CycNumber zeta(long n, long k = 1) {
        if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
        k %= n;
        if (k < 0) k += n;
        if (n % 4 == 2) {
            // Q(zeta_{2m}) = Q(zeta_m) for odd m: zeta_{2m} = -zeta_m^{(m+1)/2}
            long m = n / 2;
            CycNumber z = zeta(m, (k % m) * ((m + 1) / 2) % m);
            if (k % 2 == 1) z = z.negated();
            return z;
        }
        detail::RPoly p(static_cast<size_t>(k) + 1, Rat(0));
        p[static_cast<size_t>(k)] = 1;
        return CycNumber(n, detail::reduce_mod_cyclotomic(std::move(p), n));
    }

    long conductor() const { return cond_; }
    const std::vector<Rat>& coefficients() const { return coef_; }

    bool is_zero() const {
        for (const auto& c : coef_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return cond_ == 1 && coef_[0] == 1; }
    bool is_rational() const { return cond_ == 1; }
    Rat rational_value() const {
        if (cond_ != 1) throw std::invalid_argument("value is not rational");
        return coef_[0];
    }

    friend CycNumber operator+(const CycNumber& a, const CycNumber& b) {
        long L = lcm_long(a.cond_, b.cond_);
        auto pa = a.lift_poly(L), pb = b.lift_poly(L);
        if (pa.size() < pb.size()) pa.resize(pb.size(), Rat(0));
        for (size_t i = 0; i < pb.size(); ++i) pa[i] += pb[i];
        return CycNumber(L, detail::reduce_mod_cyclotomic(std::move(pa), L));
    }

    friend CycNumber operator-(const CycNumber& a, const CycNumber& b) {
        return a + b.negated();
    }

    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        long L = lcm_long(a.cond_, b.cond_);
        auto p = detail::rp_mul(a.lift_poly(L), b.lift_poly(L));
        return CycNumber(L, detail::reduce_mod_cyclotomic(std::move(p), L));
    }

    CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
    CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    CycNumber negated() const {
        CycNumber r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }
    friend CycNumber operator-(const CycNumber& a) { return a.negated(); }

    // Multiplicative inverse via extended Euclid mod Phi_N.  Rejects 0.
    CycNumber inverse() const {
        if (is_zero()) throw std::invalid_argument("inverse of zero");
        if (cond_ == 1) return CycNumber(Rat(1) / coef_[0]);
        detail::RPoly a(coef_.begin(), coef_.end());
        detail::rp_trim(a);
        detail::RPoly b = detail::cyclotomic_poly(cond_);
        // u*a + v*b = gcd; track u only.
        detail::RPoly r0 = b, r1 = a;
        detail::RPoly u0, u1{Rat(1)};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            detail::RPoly q;
            detail::RPoly r2 = r0;
            if (r2.size() >= r1.size()) q.assign(r2.size() - r1.size() + 1, Rat(0));
            while (r2.size() >= r1.size()) {
                Rat c = r2.back() / r1.back();
                size_t off = r2.size() - r1.size();
                q[off] = c;
                for (size_t i = 0; i < r1.size(); ++i) r2[off + i] -= c * r1[i];
                r2.pop_back();
                detail::rp_trim(r2);
            }
            detail::RPoly u2 = detail::rp_sub(u0, detail::rp_mul(q, u1));
            r0 = std::move(r1); r1 = std::move(r2);
            u0 = std::move(u1); u1 = std::move(u2);
        }
        if (r0.size() != 1) throw std::logic_error("non-unit gcd in cyclotomic inverse");
        Rat scale = Rat(1) / r0[0];
        for (auto& c : u0) c *= scale;
        return CycNumber(cond_, detail::reduce_mod_cyclotomic(std::move(u0), cond_));
    }

    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) {
        return a * b.inverse();
    }

    CycNumber pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CycNumber acc(Rat(1));
        CycNumber base = *this;
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        return a.cond_ == b.cond_ && a.coef_ == b.coef_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }
    friend bool operator<(const CycNumber& a, const CycNumber& b) {
        if (a.cond_ != b.cond_) return a.cond_ < b.cond_;
        for (size_t i = 0; i < a.coef_.size(); ++i)
            if (a.coef_[i] != b.coef_[i]) return a.coef_[i] < b.coef_[i];
        return false;
    }

    // Least n >= 1 with value^n = 1, or nullopt when the value is not a root
    // of unity.  Roots of unity in Q(zeta_N) have order dividing 2N, so the
    // bounded scan is complete.
    std::optional<long> multiplicative_order() const {
        if (is_zero()) throw std::invalid_argument("order of zero");
        CycNumber acc = *this;
        long bound = 2 * cond_;
        for (long n = 1; n <= bound; ++n) {
            if (acc.is_one()) return n;
            acc *= *this;
        }
        return std::nullopt;
    }

    bool is_root_of_unity() const {
        return !is_zero() && multiplicative_order().has_value();
    }

    // Express a root of unity as zeta_m^j with m its exact order.
    std::pair<long, long> root_of_unity_form() const {
        auto ord = multiplicative_order();
        if (!ord) throw std::invalid_argument("not a root of unity");
        long m = *ord;
        for (long j = 0; j < m; ++j)
            if (gcd_long(j, m) == 1 || m == 1)
                if (zeta(m, j) == *this) return {m, j};
        throw std::logic_error("root of unity scan failed");
    }

    std::string str() const {
        if (cond_ == 1) return rat_to_string(coef_[0]);
        if (*this == zeta(4, 1)) return "i";
        if (*this == zeta(4, 3)) return "-i";
        if (is_root_of_unity()) {
            auto [m, j] = root_of_unity_form();
            if (j == 1) return "z" + std::to_string(m);
            return "z" + std::to_string(m) + "^" + std::to_string(j);
        }
        std::string s;
        for (size_t i = 0; i < coef_.size(); ++i) {
            if (coef_[i] == 0) continue;
            Rat c = coef_[i];
            std::string term;
            if (i == 0) {
                term = rat_to_string(c);
            } else {
                std::string var = "z" + std::to_string(cond_) +
                                  (i > 1 ? "^" + std::to_string(i) : "");
                if (c == 1) term = var;
                else if (c == -1) term = "-" + var;
                else term = rat_to_string(c) + "*" + var;
            }
            if (!s.empty() && term[0] != '-') s += "+";
            s += term;
        }
        return s.empty() ? "0" : s;
    }

    // Construct from an explicit (conductor, coefficient vector) pair; the
    // vector length must be phi(N).  Used by the file-format layer.
    static CycNumber from_parts(long n, std::vector<Rat> coeffs) {
        if (n < 1) throw std::invalid_argument("conductor must be >= 1");
        if (static_cast<long>(coeffs.size()) != detail::euler_phi(n))
            throw std::invalid_argument("coefficient vector has wrong length");
        if (n % 4 == 2) {
            // Re-express over the odd conductor.
            CycNumber acc;
            for (size_t i = 0; i < coeffs.size(); ++i)
                acc += CycNumber(coeffs[i]) * zeta(n, static_cast<long>(i));
            return acc;
        }
        detail::RPoly p(coeffs.begin(), coeffs.end());
        return CycNumber(n, detail::reduce_mod_cyclotomic(std::move(p), n));
    }

private:
    CycNumber(long cond, std::vector<Rat> reduced) : cond_(cond), coef_(std::move(reduced)) {
        canonicalize();
    }

    // Coefficients as exponent polynomial in zeta_L, L a multiple of cond_.
    detail::RPoly lift_poly(long L) const {
        long step = L / cond_;
        detail::RPoly p(static_cast<size_t>((coef_.size() - 1) * step + 1), Rat(0));
        for (size_t i = 0; i < coef_.size(); ++i) p[i * static_cast<size_t>(step)] = coef_[i];
        detail::rp_trim(p);
        return p;
    }

    // Descend to the minimal conductor (never 2 mod 4).
    void canonicalize() {
        bool changed = true;
        while (changed && cond_ > 1) {
            changed = false;
            for (long p : detail::prime_factors(cond_)) {
                long m = cond_ / p;
                if (m % 4 == 2) m /= 2;
                if (m == cond_) continue;
                size_t phi_m = static_cast<size_t>(detail::euler_phi(m));
                std::vector<std::vector<Rat>> cols(phi_m);
                for (size_t i = 0; i < phi_m; ++i) {
                    detail::RPoly e(static_cast<size_t>(i) * (cond_ / m) + 1, Rat(0));
                    e.back() = 1;
                    cols[i] = detail::reduce_mod_cyclotomic(std::move(e), cond_);
                }
                auto sol = detail::solve_rational(std::move(cols), coef_);
                if (sol) {
                    cond_ = m;
                    coef_ = std::move(*sol);
                    changed = true;
                    break;
                }
            }
        }
    }

    long cond_;
    std::vector<Rat> coef_;
};

// Discrete log of a root of unity u in the cyclic group of R-th roots:
// the k with u = zeta_R^k.  R must be a multiple of the order of u.
inline long dlog_root_of_unity(const CycNumber& u, long R) {
    auto [m, j] = u.root_of_unity_form();
    if (R % m != 0)
        throw std::invalid_argument("dlog: modulus not a multiple of the order");
    return j * (R / m) % R;
}

}  // namespace tcat
