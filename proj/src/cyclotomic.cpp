#include "sarkisov/cyclotomic.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace sarkisov {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// x^n - 1 = prod_{d | n} Phi_d(x); compute Phi_n by exact integer division.
std::vector<Int> compute_cyclotomic(long n, const std::map<long, std::vector<Int>>& lower) {
    std::vector<Int> num(static_cast<size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = lower.at(d);
        // num /= phi_d (both monic up to the leading coefficient of phi_d = 1)
        std::vector<Int> quot(num.size() - phi_d.size() + 1, Int(0));
        std::vector<Int> rem = num;
        for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
            Int c = rem[static_cast<size_t>(i) + phi_d.size() - 1];
            quot[static_cast<size_t>(i)] = c;
            if (c != 0) {
                for (size_t j = 0; j < phi_d.size(); ++j)
                    rem[static_cast<size_t>(i) + j] -= c * phi_d[j];
            }
        }
        num = quot;
    }
    return num;
}

std::map<long, std::vector<Int>>& phi_cache() {
    static std::map<long, std::vector<Int>> cache;
    return cache;
}
std::mutex& phi_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(long n) {
    std::lock_guard<std::mutex> lock(phi_mutex());
    auto& cache = phi_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0 && !cache.count(d))
            cache[d] = compute_cyclotomic(d, cache);
    }
    return cache.at(n);
}

namespace {

// Reduce a polynomial in zeta_n modulo Phi_n, returning phi(n) coefficients.
std::vector<Rational> reduce_mod_phi(long n, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_poly(n);
    size_t deg = phi.size() - 1;  // = euler_phi(n)
    if (poly.size() < deg) poly.resize(deg, Rational(0));
    for (size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];
        if (c == 0) continue;
        poly[i] = 0;
        for (size_t j = 0; j < phi.size() - 1; ++j)
            poly[i - deg + j] -= c * Rational(phi[j]);
    }
    poly.resize(deg);
    return poly;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

}  // namespace

void CycNum::canonicalize() {
    // First drop N = 2 mod 4: zeta_{2m} = -zeta_m^{(m+1)/2}-style folding is
    // handled uniformly by the Galois-descent loop below, so just try all
    // divisors in increasing order.
    if (n_ == 1) return;
    for (long d = 1; d < n_; ++d) {
        if (n_ % d != 0) continue;
        if (d % 4 == 2) continue;  // canonical conductors avoid 2 mod 4
        // Invariance under Gal(Q(zeta_n)/Q(zeta_d)) = {k = 1 mod d, gcd(k,n)=1}
        bool invariant = true;
        for (long k = 1 + d; k < n_ && invariant; k += d) {
            if (gcd_long(k, n_) != 1) continue;
            if (galois_raw(k) != c_) invariant = false;
        }
        if (!invariant) continue;
        // Express in the zeta_d power basis: solve  B x = c  where column j of
        // B is zeta_d^j written in the zeta_n basis.
        long phi_d = euler_phi(d);
        long phi_n = static_cast<long>(c_.size());
        std::vector<std::vector<Rational>> basis(static_cast<size_t>(phi_d));
        for (long j = 0; j < phi_d; ++j) {
            std::vector<Rational> poly(static_cast<size_t>(j) * (n_ / d) + 1, Rational(0));
            poly.back() = 1;
            basis[static_cast<size_t>(j)] = reduce_mod_phi(n_, std::move(poly));
        }
        // Gaussian solve (phi_n equations, phi_d unknowns).
        std::vector<std::vector<Rational>> aug(static_cast<size_t>(phi_n),
                                               std::vector<Rational>(static_cast<size_t>(phi_d) + 1));
        for (long i = 0; i < phi_n; ++i) {
            for (long j = 0; j < phi_d; ++j) aug[i][j] = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
            aug[static_cast<size_t>(i)][static_cast<size_t>(phi_d)] = c_[static_cast<size_t>(i)];
        }
        std::vector<Rational> x(static_cast<size_t>(phi_d), Rational(0));
        long row = 0;
        std::vector<long> pivot_col;
        for (long col = 0; col < phi_d && row < phi_n; ++col) {
            long pr = -1;
            for (long r = row; r < phi_n; ++r)
                if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(aug[static_cast<size_t>(row)], aug[static_cast<size_t>(pr)]);
            Rational inv = Rational(1) / aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (auto& v : aug[static_cast<size_t>(row)]) v *= inv;
            for (long r = 0; r < phi_n; ++r) {
                if (r == row) continue;
                Rational f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (f == 0) continue;
                for (long cidx = col; cidx <= phi_d; ++cidx)
                    aug[static_cast<size_t>(r)][static_cast<size_t>(cidx)] -=
                        f * aug[static_cast<size_t>(row)][static_cast<size_t>(cidx)];
            }
            pivot_col.push_back(col);
            ++row;
        }
        bool consistent = true;
        for (long r = row; r < phi_n; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(phi_d)] != 0) consistent = false;
        if (!consistent) continue;  // should not happen if invariance held
        for (long r = 0; r < row; ++r)
            x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
                aug[static_cast<size_t>(r)][static_cast<size_t>(phi_d)];
        n_ = d;
        c_ = std::move(x);
        return;  // d was the smallest valid divisor
    }
}

// Coefficients of galois(k) before canonicalization; helper for descent.
std::vector<Rational> CycNum::galois_raw(long k) const {
    std::vector<Rational> poly(static_cast<size_t>(n_), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        long e = static_cast<long>((static_cast<unsigned long>(i) * static_cast<unsigned long>(k)) % static_cast<unsigned long>(n_));
        poly[static_cast<size_t>(e)] += c_[i];
    }
    return reduce_mod_phi(n_, std::move(poly));
}

CycNum CycNum::from_rational(const Rational& q) {
    CycNum x;
    x.c_[0] = q;
    return x;
}

CycNum CycNum::root_of_unity(long n, long k) {
    if (n <= 0) throw invalid_parameter("root_of_unity: n must be positive");
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> poly(static_cast<size_t>(k) + 1, Rational(0));
    poly.back() = 1;
    CycNum x = raw(n, reduce_mod_phi(n, std::move(poly)));
    x.canonicalize();
    return x;
}

CycNum CycNum::from_coeffs(long n, std::vector<Rational> coeffs) {
    if (n <= 0) throw invalid_parameter("from_coeffs: n must be positive");
    CycNum x = raw(n, reduce_mod_phi(n, std::move(coeffs)));
    x.canonicalize();
    return x;
}

bool CycNum::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

CycNum CycNum::lifted_to(long m) const {
    if (m == n_) return *this;
    long step = m / n_;
    std::vector<Rational> poly(static_cast<size_t>(m), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) poly[i * static_cast<size_t>(step)] += c_[i];
    return raw(m, reduce_mod_phi(m, std::move(poly)));
}

CycNum CycNum::operator+(const CycNum& o) const {
    long m = std::lcm(n_, o.n_);
    CycNum a = lifted_to(m), b = o.lifted_to(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.canonicalize();
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator-() const {
    CycNum x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

CycNum CycNum::operator*(const CycNum& o) const {
    long m = std::lcm(n_, o.n_);
    CycNum a = lifted_to(m), b = o.lifted_to(m);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CycNum x = raw(m, reduce_mod_phi(m, std::move(prod)));
    x.canonicalize();
    return x;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw invalid_parameter("CycNum: division by zero");
    if (n_ == 1) return from_rational(Rational(1) / c_[0]);
    // Solve (mult-by-this) x = 1 over the power basis.
    long deg = static_cast<long>(c_.size());
    std::vector<std::vector<Rational>> aug(static_cast<size_t>(deg),
                                           std::vector<Rational>(static_cast<size_t>(deg) + 1, Rational(0)));
    for (long j = 0; j < deg; ++j) {
        // column j = this * zeta^j
        std::vector<Rational> poly(c_.size() + static_cast<size_t>(j), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) poly[i + static_cast<size_t>(j)] = c_[i];
        auto col = reduce_mod_phi(n_, std::move(poly));
        for (long i = 0; i < deg; ++i) aug[static_cast<size_t>(i)][static_cast<size_t>(j)] = col[static_cast<size_t>(i)];
    }
    aug[0][static_cast<size_t>(deg)] = 1;
    // Gaussian elimination.
    for (long col = 0, row = 0; col < deg && row < deg; ++col) {
        long pr = -1;
        for (long r = row; r < deg; ++r)
            if (aug[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(aug[static_cast<size_t>(row)], aug[static_cast<size_t>(pr)]);
        Rational inv = Rational(1) / aug[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (auto& v : aug[static_cast<size_t>(row)]) v *= inv;
        for (long r = 0; r < deg; ++r) {
            if (r == row) continue;
            Rational f = aug[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (long c2 = col; c2 <= deg; ++c2)
                aug[static_cast<size_t>(r)][static_cast<size_t>(c2)] -=
                    f * aug[static_cast<size_t>(row)][static_cast<size_t>(c2)];
        }
        ++row;
    }
    std::vector<Rational> x(static_cast<size_t>(deg));
    for (long i = 0; i < deg; ++i) x[static_cast<size_t>(i)] = aug[static_cast<size_t>(i)][static_cast<size_t>(deg)];
    CycNum r = raw(n_, std::move(x));
    r.canonicalize();
    return r;
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum acc = one();
    CycNum base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

CycNum CycNum::galois(long k) const {
    k %= n_;
    if (k < 0) k += n_;
    if (gcd_long(k, n_) != 1) throw invalid_parameter("galois: k not coprime to conductor");
    CycNum x = raw(n_, galois_raw(k));
    x.canonicalize();
    return x;
}

std::optional<long> CycNum::root_of_unity_order() const {
    if (is_zero()) return std::nullopt;
    // A root of unity in Q(zeta_N) has order dividing lcm(2, N).
    long bound = std::lcm(2L, n_);
    CycNum p = *this;
    for (long k = 1; k <= bound; ++k) {
        if (p == one()) return k;
        p = p * *this;
    }
    return std::nullopt;
}

std::string CycNum::str() const {
    std::ostringstream os;
    os << "z" << n_ << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

bool CycNum::operator<(const CycNum& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

}  // namespace sarkisov
