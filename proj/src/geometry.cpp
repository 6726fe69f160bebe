#include "polycenter/geometry.hpp"

#include <algorithm>
#include <string>

#include "polycenter/error.hpp"

namespace polycenter {

namespace {

constexpr double kCollinearEps = 1e-12;

std::size_t wrap(std::ptrdiff_t i, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((i % m) + m) % m);
}

// Determinant by Gaussian elimination with partial pivoting.
template <std::size_t N>
double determinant(std::array<std::array<double, N>, N> a) {
    double det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const double factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < N; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

// Squared lengths in the bordered layout, points 1..4.
double cayley_menger_from_squares(const std::array<std::array<double, 4>, 4>& sq) {
    std::array<std::array<double, 5>, 5> m{};
    for (std::size_t i = 1; i < 5; ++i) {
        m[0][i] = 1.0;
        m[i][0] = 1.0;
        for (std::size_t j = 1; j < 5; ++j) m[i][j] = sq[i - 1][j - 1];
    }
    return determinant(m);
}

}  // namespace

Polygon::Polygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3)
        throw Error(ErrorKind::InvalidInput,
                    "a polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
    for (const auto& v : vertices_)
        if (!std::isfinite(v.x) || !std::isfinite(v.y))
            throw Error(ErrorKind::InvalidInput, "polygon vertex has a non-finite coordinate");
}

const Point2& Polygon::at_cyclic(std::ptrdiff_t i) const { return vertices_[wrap(i, size())]; }

Polygon cyclic_shift(const Polygon& p, std::size_t k) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[(i + k) % p.size()]);
    return Polygon(std::move(out));
}

Point2 RigidMotion::operator()(Point2 v) const {
    const double c = std::cos(rotation_angle);
    const double s = std::sin(rotation_angle);
    return {c * v.x - s * v.y + translation.x, s * v.x + c * v.y + translation.y};
}

RigidMotion operator*(const RigidMotion& a, const RigidMotion& b) {
    RigidMotion rotate_only{a.rotation_angle, {}};
    return {a.rotation_angle + b.rotation_angle, rotate_only(b.translation) + a.translation};
}

RigidMotion RigidMotion::inverse() const {
    RigidMotion back{-rotation_angle, {}};
    return {-rotation_angle, -back(translation)};
}

Similarity::Similarity(double s, RigidMotion m) : scale(s), motion(m) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw Error(ErrorKind::InvalidInput, "similarity scale must be positive");
}

Point2 Similarity::operator()(Point2 v) const { return motion(scale * v); }

Polygon apply_motion(const RigidMotion& m, const Polygon& p) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(m(v));
    return Polygon(std::move(out));
}

Polygon apply_motion(const Similarity& s, const Polygon& p) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(s(v));
    return Polygon(std::move(out));
}

Polygon scaled(const Polygon& p, double t) {
    std::vector<Point2> out;
    out.reserve(p.size());
    for (const auto& v : p) out.push_back(t * v);
    return Polygon(std::move(out));
}

DihedralElement::DihedralElement(std::size_t n, std::size_t rotation, bool flip)
    : n_(n), rotation_(n == 0 ? 0 : rotation % n), flip_(flip) {
    if (n < 3) throw Error(ErrorKind::InvalidInput, "dihedral group needs n >= 3");
}

std::vector<DihedralElement> DihedralElement::all(std::size_t n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * n);
    for (int f = 0; f < 2; ++f)
        for (std::size_t r = 0; r < n; ++r) out.emplace_back(n, r, f == 1);
    return out;
}

std::size_t DihedralElement::apply0(std::size_t index) const {
    const std::size_t reflected = flip_ ? (n_ - index) % n_ : index;
    return (reflected + rotation_) % n_;
}

std::size_t DihedralElement::operator()(std::size_t label) const {
    if (label < 1 || label > n_)
        throw Error(ErrorKind::InvalidInput, "label out of range 1..n");
    return apply0(label - 1) + 1;
}

std::vector<std::size_t> DihedralElement::permutation() const {
    std::vector<std::size_t> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = apply0(i) + 1;
    return out;
}

DihedralElement operator*(const DihedralElement& a, const DihedralElement& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::InvalidInput, "dihedral elements of different order");
    // sigma rho^k = rho^-k sigma
    const std::size_t inner = a.flip_ ? (a.n_ - b.rotation_) % a.n_ : b.rotation_;
    return {a.n_, a.rotation_ + inner, a.flip_ != b.flip_};
}

DihedralElement DihedralElement::inverse() const {
    if (flip_) return *this;
    return {n_, (n_ - rotation_) % n_, false};
}

Polygon relabel(const DihedralElement& alpha, const Polygon& p) {
    if (alpha.n() != p.size())
        throw Error(ErrorKind::InvalidInput, "dihedral element order does not match polygon size");
    std::vector<Point2> out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(p[alpha.apply0(i)]);
    return Polygon(std::move(out));
}

DistanceMatrix::DistanceMatrix(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
    if (n_ < 2) throw Error(ErrorKind::InvalidInput, "distance matrix needs at least 2 rows");
    double scale = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_)
            throw Error(ErrorKind::InvalidInput,
                        "distance matrix row " + std::to_string(i + 1) + " has wrong length");
        for (double v : rows[i]) {
            if (!std::isfinite(v)) throw Error(ErrorKind::InvalidInput, "non-finite distance");
            if (v < 0.0) throw Error(ErrorKind::InvalidInput, "negative distance");
            scale = std::max(scale, v);
        }
    }
    d_.assign(n_ * n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i][i] != 0.0)
            throw Error(ErrorKind::InvalidInput,
                        "distance matrix diagonal entry " + std::to_string(i + 1) + " is not zero");
        for (std::size_t j = i + 1; j < n_; ++j) {
            const double a = rows[i][j];
            const double b = rows[j][i];
            if (std::abs(a - b) > 1e-12 * scale)
                throw Error(ErrorKind::InvalidInput,
                            "distance matrix is not symmetric at (" + std::to_string(i + 1) + "," +
                                std::to_string(j + 1) + ")");
            const double v = a == b ? a : 0.5 * (a + b);
            d_[i * n_ + j] = v;
            d_[j * n_ + i] = v;
        }
    }
}

double DistanceMatrix::max() const { return *std::max_element(d_.begin(), d_.end()); }

std::vector<std::vector<double>> DistanceMatrix::rows() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

DistanceMatrix DistanceMatrix::permuted(const DihedralElement& alpha) const {
    if (alpha.n() != n_)
        throw Error(ErrorKind::InvalidInput, "dihedral element order does not match matrix size");
    std::vector<double> d(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d[i * n_ + j] = (*this)(alpha.apply0(i), alpha.apply0(j));
    return {n_, std::move(d)};
}

DistanceMatrix DistanceMatrix::shifted(std::size_t k) const {
    std::vector<double> d(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) d[i * n_ + j] = (*this)((i + k) % n_, (j + k) % n_);
    return {n_, std::move(d)};
}

DistanceMatrix DistanceMatrix::scaled(double t) const {
    if (!(t >= 0.0)) throw Error(ErrorKind::InvalidInput, "scale factor must be non-negative");
    std::vector<double> d = d_;
    for (auto& v : d) v *= t;
    return {n_, std::move(d)};
}

DistanceMatrix distance_matrix(const Polygon& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = distance(p[i], p[j]);
    return DistanceMatrix(rows);
}

double cayley_menger_quad(double e12, double e23, double e34, double e41, double d13, double d24) {
    for (double v : {e12, e23, e34, e41, d13, d24})
        if (!(v >= 0.0)) throw Error(ErrorKind::InvalidInput, "lengths must be non-negative");
    const double a = e12 * e12, b = e23 * e23, c = e34 * e34, d = e41 * e41;
    const double p = d13 * d13, q = d24 * d24;
    return cayley_menger_from_squares({{{0, a, p, d}, {a, 0, b, q}, {p, b, 0, c}, {d, q, c, 0}}});
}

double cayley_menger(const DistanceMatrix& d, std::array<std::size_t, 4> idx) {
    std::array<std::array<double, 4>, 4> sq{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const double v = d(idx[i], idx[j]);
            sq[i][j] = v * v;
        }
    return cayley_menger_from_squares(sq);
}

double signed_area(const Polygon& p) {
    double twice = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) twice += wedge(p[i], p.at_cyclic(i + 1));
    return 0.5 * twice;
}

double diameter(const Polygon& p) {
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, distance(p[i], p[j]));
    return best;
}

int orientation(Point2 a, Point2 b, Point2 c) {
    const Point2 u = b - a;
    const Point2 v = c - a;
    const double o = wedge(u, v);
    if (std::abs(o) <= kCollinearEps * norm(u) * norm(v)) return 0;
    return o > 0.0 ? 1 : -1;
}

namespace {

bool on_segment(Point2 a, Point2 b, Point2 c) {
    // c collinear with a-b; inside the closed bounding box
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
    const int o1 = orientation(a, b, c);
    const int o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a);
    const int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

bool is_convex(const Polygon& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[i] == p[j]) return false;
    int side = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = p[i];
        const Point2 b = p.at_cyclic(i + 1);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == (i + 1) % n) continue;
            const int o = orientation(a, b, p[k]);
            if (o == 0) return false;
            if (side == 0) side = o;
            if (o != side) return false;
        }
    }
    return true;
}

Classification classify(const Polygon& p) {
    Classification c;
    const std::size_t n = p.size();
    c.signed_area = signed_area(p);
    c.nondegenerate = true;
    for (std::size_t i = 0; i < n && c.nondegenerate; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[i] == p[j]) {
                c.nondegenerate = false;
                break;
            }
    if (!c.nondegenerate) return c;

    c.simple = true;
    for (std::size_t i = 0; i < n && c.simple; ++i) {
        const Point2 a = p[i];
        const Point2 b = p.at_cyclic(i + 1);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2 cc = p[j];
            const Point2 d = p.at_cyclic(j + 1);
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) {
                // Adjacent edges share exactly one endpoint; they may only fold
                // back onto each other when collinear.
                const Point2 shared = j == i + 1 ? b : a;
                const Point2 other_i = j == i + 1 ? a : b;
                const Point2 other_j = j == i + 1 ? d : cc;
                if (orientation(other_i, shared, other_j) == 0 &&
                    dot(other_i - shared, other_j - shared) > 0.0) {
                    c.simple = false;
                    break;
                }
                continue;
            }
            if (segments_intersect(a, b, cc, d)) {
                c.simple = false;
                break;
            }
        }
    }
    c.convex = is_convex(p);
    return c;
}

}  // namespace polycenter
