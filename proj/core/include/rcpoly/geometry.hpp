#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rcpoly/carlitz.hpp"
#include "rcpoly/ratgen.hpp"
#include "rcpoly/report.hpp"

namespace rcpoly {

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// Integer lattice vector; must be nonzero when used as a cone generator.
struct IntVector {
    std::int64_t i = 0;
    std::int64_t j = 0;

    friend bool operator==(const IntVector&, const IntVector&) = default;
    IntVector operator-() const { return {-i, -j}; }
};

/// Apex + two independent integer generators. An open flag means the
/// corresponding coefficient is strictly positive.
struct HalfOpenCone {
    RationalPoint apex;
    IntVector g1;
    IntVector g2;
    bool open1 = false;
    bool open2 = false;
};

/// Axis-aligned right triangle with vertices (e/f, g/h), (a/b, g/h),
/// (e/f, c/d); all eight parameters positive, e/f < a/b and g/h < c/d.
struct RightTriangleParams {
    Int a, b, c, d, e, f, g, h;

    RightTriangleParams(Int a_, Int b_, Int c_, Int d_, Int e_, Int f_, Int g_, Int h_);

    Rational east_x() const { return Rational(a, b); }
    Rational north_y() const { return Rational(c, d); }
    Rational corner_x() const { return Rational(e, f); }
    Rational corner_y() const { return Rational(g, h); }
};

/// Strictly convex polygon, vertices in counterclockwise order.
class ConvexRationalPolygon {
  public:
    explicit ConvexRationalPolygon(std::vector<RationalPoint> vertices);

    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

  private:
    std::vector<RationalPoint> vertices_;
};

/// All integer points of the half-open fundamental parallelogram
/// {apex + l1 g1 + l2 g2} with l in (0,1] for an open generator and [0,1)
/// otherwise. The count equals |det(g1, g2)|. Sorted by (x, y).
std::vector<std::pair<Int, Int>> parallelogram_points(const HalfOpenCone& cone);

/// Integer-point transform of the cone: (sum over the fundamental
/// parallelogram) / (1 - x^g1)(1 - x^g2), factors canonicalized.
RationalGF cone_ipt(const HalfOpenCone& cone);

/// Checks the generating-function identity behind the conic decomposition of
/// the shifted first quadrant at (p, q) into two half-open cones and a ray
/// of direction (b, a).
VerificationReport verify_conic_decomposition(const Int& a, const Int& b, const Rational& p,
                                              const Rational& q);

/// Sum of monomials over the lattice points of the closed segment [P, Q],
/// found by solving the lattice congruence along the segment's direction.
LaurentPoly2 segment_ipt(const RationalPoint& P, const RationalPoint& Q);

/// Monomial at P when P is a lattice point, zero otherwise.
LaurentPoly2 point_ipt(const RationalPoint& P);

/// One closed vertex cone per polygon vertex; generators are the primitive
/// integer directions of the two incident edges.
std::vector<HalfOpenCone> vertex_cones(const ConvexRationalPolygon& poly);

/// Sum of the vertex-cone transforms.
RationalGF brion_ipt(const ConvexRationalPolygon& poly);

/// Which monomial the quadrant term of the right-triangle transform carries.
/// ApexCeil uses the cone apex (e/f, g/h); StatementCeil uses (a/b, g/h).
enum class Thm2V1Variant { ApexCeil, StatementCeil };

/// Closed form for the right triangle: quadrant term plus two RC-numerator
/// cone terms attached to the hypotenuse direction (alpha, beta) with
/// alpha = dh(be - af), beta = bf(ch - dg).
RationalGF triangle_ipt_thm2(const RightTriangleParams& params,
                             Thm2V1Variant variant = Thm2V1Variant::ApexCeil);

struct BoxDecomposition {
    RationalGF gf;
    bool brion_fallback = false;
};

/// Transform of an arbitrary triangle via its bounding box: the box splits
/// into the triangle, axis-aligned right triangles and rectangles, with
/// segment/point corrections. Right triangles are reflected and translated
/// into first-quadrant position and evaluated by triangle_ipt_thm2. Falls
/// back to brion_ipt when an axis-parallel edge degenerates the corner
/// decomposition.
BoxDecomposition box_decomposition_ipt(const RationalPoint& p1, const RationalPoint& p2,
                                       const RationalPoint& p3);

/// Fan triangulation from vertex 0: sum of triangle transforms minus the
/// transforms of the internal diagonals.
RationalGF polygon_ipt(const ConvexRationalPolygon& poly);

/// Oracle: sum of x^m y^n over lattice points of the closed convex hull of
/// the given vertices (>= 3: convex polygon in either orientation; 2: a
/// segment; 1: a point), by scanning the integer bounding box with exact
/// membership tests.
LaurentPoly2 brute_force_points(const std::vector<RationalPoint>& vertices);

/// Primitive integer direction of the rational vector from P to Q.
IntVector primitive_direction(const RationalPoint& P, const RationalPoint& Q);

}  // namespace rcpoly
