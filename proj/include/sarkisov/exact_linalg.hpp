#pragma once

#include "sarkisov/cyclotomic.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sarkisov {

// A point of P^{dim-1}, coordinates scaled so the first nonzero one is 1.
// Equality is then componentwise.
class ProjPoint {
public:
    ProjPoint() = default;
    explicit ProjPoint(std::vector<CycNum> coords);
    static ProjPoint of(std::initializer_list<int> ints);

    size_t dim() const { return v_.size(); }
    const CycNum& operator[](size_t i) const { return v_[i]; }
    const std::vector<CycNum>& coords() const { return v_; }

    bool operator==(const ProjPoint& o) const { return v_ == o.v_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    bool operator<(const ProjPoint& o) const;
    std::string str() const;

private:
    std::vector<CycNum> v_;
};

// Invertible square matrix over the cyclotomics, dim 2 or 3. Supports both
// linear use and projective use; projective identity tests go through the
// canonical form (first nonzero entry scaled to 1).
class Mat {
public:
    Mat() : dim_(0) {}
    Mat(size_t dim, std::vector<CycNum> entries);
    static Mat identity(size_t dim);
    static Mat diag(std::vector<CycNum> d);
    static Mat of(size_t dim, std::initializer_list<int> ints);

    size_t dim() const { return dim_; }
    const CycNum& at(size_t r, size_t c) const { return e_[r * dim_ + c]; }
    CycNum& at(size_t r, size_t c) { return e_[r * dim_ + c]; }

    CycNum det() const;
    Mat operator*(const Mat& o) const;
    Mat inverse() const;
    Mat transpose() const;
    Mat scaled(const CycNum& c) const;
    ProjPoint apply(const ProjPoint& p) const;
    std::vector<CycNum> apply_vec(const std::vector<CycNum>& v) const;

    // Canonical projective representative (first nonzero entry = 1).
    Mat proj_canonical() const;
    bool proj_equal(const Mat& o) const { return proj_canonical().e_ == o.proj_canonical().e_; }
    bool is_scalar() const;

    // Order of the class in PGL_dim; nullopt if > cap.
    std::optional<long> proj_order(long cap = 2000) const;

    bool operator==(const Mat& o) const { return dim_ == o.dim_ && e_ == o.e_; }
    // Canonical projective key; computed once and shared across copies.
    const std::string& str() const;

private:
    size_t dim_;
    std::vector<CycNum> e_;
    mutable std::shared_ptr<const std::string> key_;
};

// Fixed-point set of an element of PGL_2 acting on P^1.
struct FixedSet1D {
    bool all = false;               // scalar matrix: every point fixed
    std::vector<ProjPoint> points;  // otherwise one or two points
};

// All  iff M is scalar; otherwise the projectivized eigenvectors.
FixedSet1D eigen_fixed_points(const Mat& m);

// Exact eigen-lines of a finite-projective-order matrix (dim 2 or 3):
// pairs (eigenvalue of the order-normalized lift, kernel basis).
struct EigenLine {
    CycNum value;
    std::vector<std::vector<CycNum>> space;  // basis vectors of the eigenspace
};
std::vector<EigenLine> eigen_lines(const Mat& m);

struct InvariantSubspace {
    enum class Kind { None, Dim1, Dim2 } kind = Kind::None;
    ProjPoint point;  // Dim1: invariant line as a point of P^2; Dim2: the dual point
};

// Common invariant subspace of the group generated by 3x3 matrices.
// Reports Dim1 before Dim2 (deterministic tie-breaking).
InvariantSubspace common_invariant_subspace(const std::vector<Mat>& gens);

struct CrossRatio {
    bool infinite = false;
    CycNum value;
};

// Cross-ratio with the normalization cr([0:1],[1:1],[1:0],[t:1]) = t.
CrossRatio cross_ratio(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r,
                       const ProjPoint& s);

// Exact rank of a rational matrix (rows x cols).
long rational_rank(const std::vector<std::vector<Rational>>& rows);

// Kernel basis of a rational matrix.
std::vector<std::vector<Rational>> rational_kernel(const std::vector<std::vector<Rational>>& rows);

// Kernel basis over the cyclotomics.
std::vector<std::vector<CycNum>> cyc_kernel(const std::vector<std::vector<CycNum>>& rows);

}  // namespace sarkisov
