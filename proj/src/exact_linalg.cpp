#include "sarkisov/exact_linalg.hpp"

#include "sarkisov/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sarkisov {

ProjPoint::ProjPoint(std::vector<CycNum> coords) : v_(std::move(coords)) {
    size_t first = v_.size();
    for (size_t i = 0; i < v_.size(); ++i) {
        if (!v_[i].is_zero()) { first = i; break; }
    }
    if (first == v_.size()) throw invalid_parameter("ProjPoint: zero vector");
    CycNum inv = v_[first].inverse();
    for (auto& c : v_) c = c * inv;
}

ProjPoint ProjPoint::of(std::initializer_list<int> ints) {
    std::vector<CycNum> v;
    for (int x : ints) v.push_back(CycNum::from_rational(Rational(x)));
    return ProjPoint(std::move(v));
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (size_t i = 0; i < std::min(v_.size(), o.v_.size()); ++i) {
        if (v_[i] != o.v_[i]) return v_[i] < o.v_[i];
    }
    return v_.size() < o.v_.size();
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ":";
        os << v_[i].str();
    }
    os << "]";
    return os.str();
}

Mat::Mat(size_t dim, std::vector<CycNum> entries) : dim_(dim), e_(std::move(entries)) {
    if (e_.size() != dim_ * dim_) throw invalid_parameter("Mat: entry count");
    if (det().is_zero()) throw invalid_parameter("Mat: singular matrix");
}

Mat Mat::identity(size_t dim) {
    std::vector<CycNum> e(dim * dim, CycNum::zero());
    for (size_t i = 0; i < dim; ++i) e[i * dim + i] = CycNum::one();
    return Mat(dim, std::move(e));
}

Mat Mat::diag(std::vector<CycNum> d) {
    size_t n = d.size();
    std::vector<CycNum> e(n * n, CycNum::zero());
    for (size_t i = 0; i < n; ++i) e[i * n + i] = d[i];
    return Mat(n, std::move(e));
}

Mat Mat::of(size_t dim, std::initializer_list<int> ints) {
    std::vector<CycNum> e;
    for (int x : ints) e.push_back(CycNum::from_rational(Rational(x)));
    return Mat(dim, std::move(e));
}

CycNum Mat::det() const {
    if (dim_ == 2) return e_[0] * e_[3] - e_[1] * e_[2];
    if (dim_ == 3) {
        return e_[0] * (e_[4] * e_[8] - e_[5] * e_[7]) - e_[1] * (e_[3] * e_[8] - e_[5] * e_[6]) +
               e_[2] * (e_[3] * e_[7] - e_[4] * e_[6]);
    }
    throw invalid_parameter("Mat::det: dim must be 2 or 3");
}

Mat Mat::operator*(const Mat& o) const {
    if (dim_ != o.dim_) throw invalid_parameter("Mat::mul: dim mismatch");
    std::vector<CycNum> r(dim_ * dim_, CycNum::zero());
    for (size_t i = 0; i < dim_; ++i)
        for (size_t k = 0; k < dim_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < dim_; ++j) r[i * dim_ + j] = r[i * dim_ + j] + at(i, k) * o.at(k, j);
        }
    Mat m;
    m.dim_ = dim_;
    m.e_ = std::move(r);
    return m;
}

Mat Mat::inverse() const {
    CycNum d = det();
    CycNum di = d.inverse();
    if (dim_ == 2) {
        std::vector<CycNum> e = {e_[3] * di, -e_[1] * di, -e_[2] * di, e_[0] * di};
        Mat m;
        m.dim_ = 2;
        m.e_ = std::move(e);
        return m;
    }
    if (dim_ == 3) {
        auto cof = [&](size_t r, size_t c) {
            size_t r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
            return at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1);
        };
        std::vector<CycNum> e(9, CycNum::zero());
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) e[i * 3 + j] = cof(j, i) * di;
        Mat m;
        m.dim_ = 3;
        m.e_ = std::move(e);
        return m;
    }
    throw invalid_parameter("Mat::inverse: dim must be 2 or 3");
}

Mat Mat::transpose() const {
    Mat m;
    m.dim_ = dim_;
    m.e_.resize(dim_ * dim_);
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) m.e_[j * dim_ + i] = e_[i * dim_ + j];
    return m;
}

Mat Mat::scaled(const CycNum& c) const {
    Mat m;
    m.dim_ = dim_;
    m.e_.reserve(e_.size());
    for (const auto& x : e_) m.e_.push_back(x * c);
    return m;
}

ProjPoint Mat::apply(const ProjPoint& p) const {
    return ProjPoint(apply_vec(p.coords()));
}

std::vector<CycNum> Mat::apply_vec(const std::vector<CycNum>& v) const {
    if (v.size() != dim_) throw invalid_parameter("Mat::apply: dim mismatch");
    std::vector<CycNum> r(dim_, CycNum::zero());
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + at(i, j) * v[j];
    return r;
}

Mat Mat::proj_canonical() const {
    for (const auto& x : e_) {
        if (!x.is_zero()) return scaled(x.inverse());
    }
    throw invalid_parameter("Mat: zero matrix");
}

bool Mat::is_scalar() const {
    for (size_t i = 0; i < dim_; ++i)
        for (size_t j = 0; j < dim_; ++j) {
            if (i == j) {
                if (at(i, j) != at(0, 0)) return false;
            } else if (!at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

std::optional<long> Mat::proj_order(long cap) const {
    Mat p = *this;
    for (long k = 1; k <= cap; ++k) {
        if (p.is_scalar()) return k;
        p = p * *this;
    }
    return std::nullopt;
}

std::string Mat::str() const {
    std::ostringstream os;
    Mat c = proj_canonical();
    os << "M" << dim_ << "(";
    for (size_t i = 0; i < c.e_.size(); ++i) {
        if (i) os << ";";
        os << c.e_[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

// Writes x as q * zeta_m^k with q rational, when possible. All determinants
// arising from the realized matrix groups have this shape.
struct RationalTimesRoot {
    Rational q;
    long m = 1;
    long k = 0;
};

std::optional<RationalTimesRoot> as_rational_times_root(const CycNum& x) {
    if (x.is_zero()) return std::nullopt;
    long m = std::lcm(2L, x.conductor());
    for (long k = 0; k < m; ++k) {
        CycNum cand = x * CycNum::root_of_unity(m, m - k);
        if (cand.is_rational()) return RationalTimesRoot{cand.rational_value(), m, k};
    }
    return std::nullopt;
}

// sqrt(p) for a prime p, via the quadratic Gauss sum.
CycNum sqrt_prime(long p) {
    if (p == 2) return CycNum::root_of_unity(8) + CycNum::root_of_unity(8, 7);
    CycNum g = CycNum::zero();
    for (long k = 1; k < p; ++k) {
        // Legendre symbol by Euler's criterion
        long e = 1, base = k % p, exp = (p - 1) / 2;
        while (exp > 0) {
            if (exp & 1) e = (e * base) % p;
            base = (base * base) % p;
            exp >>= 1;
        }
        bool residue = (e == 1);
        g = residue ? g + CycNum::root_of_unity(p, k) : g - CycNum::root_of_unity(p, k);
    }
    // g^2 = p for p = 1 mod 4, -p for p = 3 mod 4
    if (p % 4 == 1) return g;
    return g * CycNum::root_of_unity(4, 3);  // divide by i
}

CycNum sqrt_positive_int(Int n) {
    CycNum out = CycNum::one();
    for (long p = 2; Int(p) * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e == 0) continue;
        for (int i = 0; i < e / 2; ++i) out = out * CycNum::from_rational(Rational(p));
        if (e % 2) out = out * sqrt_prime(p);
    }
    if (n > 1) {
        long p = static_cast<long>(n);
        out = out * sqrt_prime(p);
    }
    return out;
}

// Exact square root of q * (root of unity); throws if x is not of that form.
CycNum sqrt_cyclotomic(const CycNum& x) {
    auto dec = as_rational_times_root(x);
    if (!dec) throw invalid_parameter("sqrt: value is not rational times a root of unity");
    Rational q = dec->q;
    CycNum root_part = CycNum::root_of_unity(2 * dec->m, dec->k);
    bool negative = q < 0;
    if (negative) q = -q;
    Int nd = numerator(q) * denominator(q);
    CycNum s = sqrt_positive_int(nd) * CycNum::from_rational(Rational(1, denominator(q)));
    if (negative) s = s * CycNum::root_of_unity(4);
    CycNum r = s * root_part;
    return r;
}

// Candidate eigenvalues of a 2x2 finite-projective-order matrix, using the
// eigenvalue ratio (a root of unity) to stay inside cyclotomic fields.
std::vector<CycNum> eigenvalue_candidates_2(const Mat& m) {
    auto ord = m.proj_order();
    if (!ord) throw invalid_parameter("eigen: matrix has no finite projective order");
    long n = *ord;
    CycNum tr = m.at(0, 0) + m.at(1, 1);
    CycNum det = m.det();
    std::vector<CycNum> cands;
    auto push = [&](const CycNum& mu) {
        if (std::find(cands.begin(), cands.end(), mu) == cands.end()) cands.push_back(mu);
    };
    if (tr.is_zero()) {
        // eigenvalues +/- sqrt(-det)
        CycNum mu = sqrt_cyclotomic(-det);
        push(mu);
        push(-mu);
    } else {
        // mu2 = tr/(1+rho), mu1 = rho*mu2 where rho^n = 1; the valid rho
        // satisfy det*(1+rho)^2 = rho*tr^2.
        for (long j = 0; j < n; ++j) {
            CycNum rho = CycNum::root_of_unity(n, j);
            CycNum one_plus = CycNum::one() + rho;
            if (one_plus.is_zero()) continue;
            if (det * one_plus * one_plus != rho * tr * tr) continue;
            CycNum mu2 = tr * one_plus.inverse();
            push(mu2);
            push(rho * mu2);
        }
    }
    std::sort(cands.begin(), cands.end());
    return cands;
}

// Candidate eigenvalues of a 3x3 matrix whose determinant is a root of unity
// (true for the stored plane realizations): rescale to finite linear order.
std::vector<CycNum> eigenvalue_candidates_3(const Mat& m) {
    auto ord = m.proj_order();
    if (!ord) throw invalid_parameter("eigen: matrix has no finite projective order");
    long n = *ord;
    Mat p = m;
    for (long i = 1; i < n; ++i) p = p * m;
    CycNum lambda = p.at(0, 0);
    auto r = lambda.root_of_unity_order();
    if (!r) {
        // rescale by the inverse cube root of det if det is a root of unity
        auto dord = m.det().root_of_unity_order();
        if (!dord) throw invalid_parameter("eigen3: determinant is not a root of unity");
        long dm = *dord;
        long kk = -1;
        for (long i = 0; i < dm; ++i)
            if (CycNum::root_of_unity(dm, i) == m.det()) { kk = i; break; }
        Mat m2 = m.scaled(CycNum::root_of_unity(3 * dm, 3 * dm - kk));
        return eigenvalue_candidates_3(m2);
    }
    long lam_ord = *r;
    long k = -1;
    for (long i = 0; i < lam_ord; ++i)
        if (CycNum::root_of_unity(lam_ord, i) == lambda) { k = i; break; }
    CycNum mu0 = CycNum::root_of_unity(n * lam_ord, k);
    std::vector<CycNum> cands;
    for (long j = 0; j < n; ++j) {
        CycNum mu = mu0 * CycNum::root_of_unity(n, j);
        if (std::find(cands.begin(), cands.end(), mu) == cands.end()) cands.push_back(mu);
    }
    std::sort(cands.begin(), cands.end());
    return cands;
}

std::vector<CycNum> eigenvalue_candidates(const Mat& m) {
    if (m.dim() == 2) return eigenvalue_candidates_2(m);
    return eigenvalue_candidates_3(m);
}

}  // namespace

std::vector<std::vector<CycNum>> cyc_kernel(const std::vector<std::vector<CycNum>>& rows) {
    if (rows.empty()) return {};
    size_t ncols = rows[0].size();
    std::vector<std::vector<CycNum>> a = rows;
    std::vector<long> pivot_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < a.size(); ++col) {
        size_t pr = a.size();
        for (size_t r = row; r < a.size(); ++r)
            if (!a[r][col].is_zero()) { pr = r; break; }
        if (pr == a.size()) continue;
        std::swap(a[row], a[pr]);
        CycNum inv = a[row][col].inverse();
        for (auto& v : a[row]) v = v * inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            CycNum f = a[r][col];
            for (size_t c = 0; c < ncols; ++c) a[r][c] = a[r][c] - f * a[row][c];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<CycNum>> kernel;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<CycNum> v(ncols, CycNum::zero());
        v[col] = CycNum::one();
        for (size_t c = 0; c < ncols; ++c) {
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<size_t>(pivot_of_col[c])][col];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

std::vector<EigenLine> eigen_lines(const Mat& m) {
    std::vector<EigenLine> out;
    for (const auto& mu : eigenvalue_candidates(m)) {
        std::vector<std::vector<CycNum>> rows(m.dim(), std::vector<CycNum>(m.dim()));
        for (size_t i = 0; i < m.dim(); ++i)
            for (size_t j = 0; j < m.dim(); ++j)
                rows[i][j] = (i == j) ? m.at(i, j) - mu : m.at(i, j);
        auto ker = cyc_kernel(rows);
        if (!ker.empty()) out.push_back(EigenLine{mu, std::move(ker)});
    }
    return out;
}

FixedSet1D eigen_fixed_points(const Mat& m) {
    if (m.dim() != 2) throw invalid_parameter("eigen_fixed_points: dim 2 expected");
    FixedSet1D fs;
    if (m.is_scalar()) {
        fs.all = true;
        return fs;
    }
    for (const auto& el : eigen_lines(m)) {
        for (const auto& v : el.space) {
            ProjPoint p{std::vector<CycNum>(v)};
            if (std::find(fs.points.begin(), fs.points.end(), p) == fs.points.end())
                fs.points.push_back(p);
        }
    }
    std::sort(fs.points.begin(), fs.points.end());
    return fs;
}

namespace {

bool is_eigenvector(const Mat& m, const std::vector<CycNum>& v) {
    auto w = m.apply_vec(v);
    // w parallel to v: all 2x2 minors vanish
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) {
            if (!(v[i] * w[j] - v[j] * w[i]).is_zero()) return false;
        }
    return true;
}

// Simultaneous eigenvector of all generators, if one exists.
std::optional<std::vector<CycNum>> common_eigenvector(const std::vector<Mat>& gens) {
    size_t dim = gens.empty() ? 3 : gens[0].dim();
    // Start from the eigenspaces of the first non-scalar generator and refine.
    std::vector<std::vector<std::vector<CycNum>>> spaces;  // list of subspace bases
    bool seeded = false;
    for (const auto& g : gens) {
        if (g.is_scalar()) continue;
        if (!seeded) {
            for (const auto& el : eigen_lines(g)) spaces.push_back(el.space);
            seeded = true;
            continue;
        }
        std::vector<std::vector<std::vector<CycNum>>> next;
        for (const auto& sp : spaces) {
            for (const auto& el : eigen_lines(g)) {
                // intersect span(sp) with span(el.space): solve sp*a - el*b = 0
                size_t cols = sp.size() + el.space.size();
                std::vector<std::vector<CycNum>> rows(dim, std::vector<CycNum>(cols, CycNum::zero()));
                for (size_t j = 0; j < sp.size(); ++j)
                    for (size_t i = 0; i < dim; ++i) rows[i][j] = sp[j][i];
                for (size_t j = 0; j < el.space.size(); ++j)
                    for (size_t i = 0; i < dim; ++i) rows[i][sp.size() + j] = -el.space[j][i];
                auto ker = cyc_kernel(rows);
                std::vector<std::vector<CycNum>> basis;
                for (const auto& k : ker) {
                    std::vector<CycNum> vec(dim, CycNum::zero());
                    bool nonzero = false;
                    for (size_t j = 0; j < sp.size(); ++j)
                        for (size_t i = 0; i < dim; ++i) {
                            vec[i] = vec[i] + k[j] * sp[j][i];
                        }
                    for (const auto& c : vec)
                        if (!c.is_zero()) nonzero = true;
                    if (nonzero) basis.push_back(std::move(vec));
                }
                if (!basis.empty()) next.push_back(std::move(basis));
            }
        }
        spaces = std::move(next);
        if (spaces.empty()) return std::nullopt;
    }
    if (!seeded) {
        // all generators scalar: every line invariant; canonical answer e1
        std::vector<CycNum> e1(dim, CycNum::zero());
        e1[0] = CycNum::one();
        return e1;
    }
    if (spaces.empty()) return std::nullopt;
    // deterministic pick: smallest representative vector
    std::vector<std::vector<CycNum>> reps;
    for (const auto& sp : spaces) reps.push_back(sp[0]);
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        return ProjPoint(a) < ProjPoint(b);
    });
    return reps[0];
}

}  // namespace

InvariantSubspace common_invariant_subspace(const std::vector<Mat>& gens) {
    InvariantSubspace result;
    auto v = common_eigenvector(gens);
    if (v) {
        result.kind = InvariantSubspace::Kind::Dim1;
        result.point = ProjPoint(*v);
        return result;
    }
    std::vector<Mat> duals;
    for (const auto& g : gens) duals.push_back(g.inverse().transpose());
    auto w = common_eigenvector(duals);
    if (w) {
        result.kind = InvariantSubspace::Kind::Dim2;
        result.point = ProjPoint(*w);
        return result;
    }
    return result;
}

CrossRatio cross_ratio(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r,
                       const ProjPoint& s) {
    auto d = [](const ProjPoint& u, const ProjPoint& v) {
        return u[0] * v[1] - u[1] * v[0];
    };
    const ProjPoint* pts[4] = {&p, &q, &r, &s};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (*pts[i] == *pts[j]) throw degenerate_input("cross_ratio: points not pairwise distinct");
    CycNum denom = d(s, r) * d(q, p);
    CrossRatio cr;
    if (denom.is_zero()) {
        cr.infinite = true;
        return cr;
    }
    cr.value = d(s, p) * d(q, r) * denom.inverse();
    return cr;
}

long rational_rank(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<Rational>> a = rows;
    if (a.empty()) return 0;
    size_t ncols = a[0].size();
    long rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < a.size(); ++col) {
        size_t pr = a.size();
        for (size_t r = row; r < a.size(); ++r)
            if (a[r][col] != 0) { pr = r; break; }
        if (pr == a.size()) continue;
        std::swap(a[row], a[pr]);
        Rational inv = Rational(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < ncols; ++c) a[r][c] -= f * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> rational_kernel(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return {};
    size_t ncols = rows[0].size();
    std::vector<std::vector<Rational>> a = rows;
    std::vector<long> pivot_of_col(ncols, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < a.size(); ++col) {
        size_t pr = a.size();
        for (size_t r = row; r < a.size(); ++r)
            if (a[r][col] != 0) { pr = r; break; }
        if (pr == a.size()) continue;
        std::swap(a[row], a[pr]);
        Rational inv = Rational(1) / a[row][col];
        for (auto& v : a[row]) v *= inv;
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (size_t c = 0; c < ncols; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<Rational>> kernel;
    for (size_t col = 0; col < ncols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[col] = 1;
        for (size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<size_t>(pivot_of_col[c])][col];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace sarkisov
