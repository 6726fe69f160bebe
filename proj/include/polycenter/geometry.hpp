#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace polycenter {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
    friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
    Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
    Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

// a ∧ b = a.x * b.y - b.x * a.y
constexpr double wedge(Point2 a, Point2 b) { return a.x * b.y - b.x * a.y; }

inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

// Ordered vertex list (V1, ..., Vn), n >= 3, stored 0-based. Indices passed
// to at_cyclic wrap modulo n.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);
    Polygon(std::initializer_list<Point2> vertices)
        : Polygon(std::vector<Point2>(vertices)) {}

    std::size_t size() const noexcept { return vertices_.size(); }
    const Point2& operator[](std::size_t i) const { return vertices_[i]; }
    const Point2& at_cyclic(std::ptrdiff_t i) const;
    std::span<const Point2> vertices() const noexcept { return vertices_; }

    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> vertices_;
};

// (V_{k+1}, ..., V_n, V_1, ..., V_k) for 0-based k: the polygon starting at
// vertex k.
Polygon cyclic_shift(const Polygon& p, std::size_t k);

// Orientation-preserving isometry: rotate about the origin, then translate.
struct RigidMotion {
    double rotation_angle = 0.0;
    Point2 translation{};

    Point2 operator()(Point2 v) const;
    // (a * b)(v) == a(b(v))
    friend RigidMotion operator*(const RigidMotion& a, const RigidMotion& b);
    RigidMotion inverse() const;
};

// Homothety about the origin followed by a rigid motion.
struct Similarity {
    double scale = 1.0;
    RigidMotion motion{};

    Similarity() = default;
    Similarity(double scale, RigidMotion motion);
    Point2 operator()(Point2 v) const;
};

Polygon apply_motion(const RigidMotion& m, const Polygon& p);
Polygon apply_motion(const Similarity& s, const Polygon& p);
Polygon scaled(const Polygon& p, double t);

// Element rho^rotation * sigma^flip of the dihedral group D_n acting on
// labels {1, ..., n} by rho(i) = i + 1 and sigma(i) = 2 + n - i (mod n, with
// representatives in 1..n).
class DihedralElement {
public:
    DihedralElement(std::size_t n, std::size_t rotation, bool flip);

    static DihedralElement identity(std::size_t n) { return {n, 0, false}; }
    static DihedralElement rho(std::size_t n) { return {n, 1, false}; }
    static DihedralElement sigma(std::size_t n) { return {n, 0, true}; }
    // All 2n elements: rotations first, then reflections.
    static std::vector<DihedralElement> all(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    std::size_t rotation() const noexcept { return rotation_; }
    bool flip() const noexcept { return flip_; }

    // Image of the 1-based label i.
    std::size_t operator()(std::size_t label) const;
    // Same action on 0-based indices.
    std::size_t apply0(std::size_t index) const;
    std::vector<std::size_t> permutation() const;  // 1-based images of 1..n

    // Composition as maps: (a * b)(i) == a(b(i)).
    friend DihedralElement operator*(const DihedralElement& a, const DihedralElement& b);
    DihedralElement inverse() const;
    friend bool operator==(const DihedralElement&, const DihedralElement&) = default;

private:
    std::size_t n_;
    std::size_t rotation_;
    bool flip_;
};

// Vertex i of the result is V_{alpha(i)} of the input.
Polygon relabel(const DihedralElement& alpha, const Polygon& p);

// Symmetric n x n matrix of non-negative lengths with zero diagonal.
class DistanceMatrix {
public:
    // Rejects asymmetric (beyond 1e-12 relative), negative, non-finite or
    // non-square input and a non-zero diagonal. The stored matrix is exactly
    // symmetric.
    explicit DistanceMatrix(const std::vector<std::vector<double>>& rows);

    std::size_t n() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    double max() const;
    std::vector<std::vector<double>> rows() const;

    // Matrix of the relabelled polygon: result(i, j) = d(alpha(i), alpha(j)).
    DistanceMatrix permuted(const DihedralElement& alpha) const;
    // d_{rho^k(i), rho^k(j)}
    DistanceMatrix shifted(std::size_t k) const;
    DistanceMatrix scaled(double t) const;

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    DistanceMatrix(std::size_t n, std::vector<double> d) : n_(n), d_(std::move(d)) {}

    std::size_t n_;
    std::vector<double> d_;
};

DistanceMatrix distance_matrix(const Polygon& p);

// The 5x5 bordered Cayley-Menger determinant of the quadrilateral with sides
// e12, e23, e34, e41 and diagonals d13, d24. It equals 288 V^2 for the
// tetrahedron spanned by the four points and vanishes for planar ones.
double cayley_menger_quad(double e12, double e23, double e34, double e41, double d13, double d24);

// Same determinant for four vertices (0-based) of a distance matrix.
double cayley_menger(const DistanceMatrix& d, std::array<std::size_t, 4> idx);

// Shoelace signed area; positive when counterclockwise.
double signed_area(const Polygon& p);
double diameter(const Polygon& p);

struct Classification {
    bool nondegenerate = false;
    bool simple = false;
    bool convex = false;
    double signed_area = 0.0;
};

Classification classify(const Polygon& p);
bool is_convex(const Polygon& p);

// Orientation of (a, b, c): +1 left turn, -1 right turn, 0 collinear within
// a 1e-12 relative tolerance.
int orientation(Point2 a, Point2 b, Point2 c);
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace polycenter
