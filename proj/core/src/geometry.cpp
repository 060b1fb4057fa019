#include "rcpoly/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace rcpoly {

namespace {

std::int64_t to_i64(const Int& v) {
    if (!v.fits_slong_p())
        throw Error("exponent out of the supported 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

Rational cross(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    return ax * by - ay * bx;
}

// Orientation of the turn p1 -> p2 -> p3.
int orientation(const RationalPoint& p1, const RationalPoint& p2, const RationalPoint& p3) {
    return cross(p2.x - p1.x, p2.y - p1.y, p3.x - p2.x, p3.y - p2.y).sign();
}

ExponentPair as_exponents(const IntVector& g) {
    return {g.i, g.j};
}

LaurentPoly2 monomial_at(const Int& x, const Int& y) {
    return LaurentPoly2::monomial({to_i64(x), to_i64(y)}, 1);
}

LaurentPoly2 rectangle_ipt(const Rational& x1, const Rational& x2, const Rational& y1,
                           const Rational& y2) {
    LaurentPoly2 p;
    for (Int m = ceil(x1); m <= floor(x2); ++m)
        for (Int n = ceil(y1); n <= floor(y2); ++n)
            p.add_term({to_i64(m), to_i64(n)}, 1);
    return p;
}

}  // namespace

RightTriangleParams::RightTriangleParams(Int a_, Int b_, Int c_, Int d_, Int e_, Int f_, Int g_,
                                         Int h_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)), e(std::move(e_)),
      f(std::move(f_)), g(std::move(g_)), h(std::move(h_)) {
    for (const Int* v : {&a, &b, &c, &d, &e, &f, &g, &h})
        if (*v < 1) throw InvalidTriangleError("all eight parameters must be positive");
    if (!(corner_x() < east_x()) || !(corner_y() < north_y()))
        throw InvalidTriangleError("requires e/f < a/b and g/h < c/d");
}

ConvexRationalPolygon::ConvexRationalPolygon(std::vector<RationalPoint> vertices)
    : vertices_(std::move(vertices)) {
    const std::size_t n = vertices_.size();
    if (n < 3)
        throw InvalidPolygonError("a polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < n; ++i) {
        const int o = orientation(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]);
        if (o <= 0)
            throw InvalidPolygonError(
                "vertices must be strictly convex in counterclockwise order");
    }
}

IntVector primitive_direction(const RationalPoint& P, const RationalPoint& Q) {
    const Rational dx = Q.x - P.x;
    const Rational dy = Q.y - P.y;
    if (dx.is_zero() && dy.is_zero())
        throw ZeroVectorError("direction between equal points");
    Int l = lcm(dx.den(), dy.den());
    Int ix = dx.num() * (l / dx.den());
    Int iy = dy.num() * (l / dy.den());
    const Int g = gcd(ix, iy);
    ix /= g;
    iy /= g;
    return {to_i64(ix), to_i64(iy)};
}

std::vector<std::pair<Int, Int>> parallelogram_points(const HalfOpenCone& cone) {
    const std::int64_t det = cone.g1.i * cone.g2.j - cone.g1.j * cone.g2.i;
    if (det == 0)
        throw DegenerateConeError("cone generators are linearly dependent");
    const std::int64_t d = std::llabs(det);
    const std::int64_t gx = std::gcd(std::llabs(cone.g1.i), std::llabs(cone.g2.i));
    const std::int64_t rows = d / gx;
    const Rational det_r{Int(det)};

    // One representative per coset of the generator lattice; shift it into the
    // half-open parallelogram along each generator.
    std::vector<std::pair<Int, Int>> points;
    points.reserve(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < gx; ++i) {
        for (std::int64_t j = 0; j < rows; ++j) {
            const Rational rx = Rational(Int(i)) - cone.apex.x;
            const Rational ry = Rational(Int(j)) - cone.apex.y;
            const Rational l1 = (rx * Rational(Int(cone.g2.j)) - ry * Rational(Int(cone.g2.i))) / det_r;
            const Rational l2 = (Rational(Int(cone.g1.i)) * ry - Rational(Int(cone.g1.j)) * rx) / det_r;
            const Int k1 = cone.open1 ? ceil(l1) - 1 : floor(l1);
            const Int k2 = cone.open2 ? ceil(l2) - 1 : floor(l2);
            points.emplace_back(Int(i) - k1 * cone.g1.i - k2 * cone.g2.i,
                                Int(j) - k1 * cone.g1.j - k2 * cone.g2.j);
        }
    }
    std::sort(points.begin(), points.end());
    return points;
}

RationalGF cone_ipt(const HalfOpenCone& cone) {
    LaurentPoly2 num;
    for (const auto& [x, y] : parallelogram_points(cone))
        num.add_term({to_i64(x), to_i64(y)}, 1);
    RationalGF gf;
    gf.terms.push_back(make_gf_term(std::move(num), {as_exponents(cone.g1), as_exponents(cone.g2)}));
    return gf;
}

VerificationReport verify_conic_decomposition(const Int& a, const Int& b, const Rational& p,
                                              const Rational& q) {
    if (a < 1 || b < 1)
        throw Error("verify_conic_decomposition parameters must be positive");
    if (gcd(a, b) != 1)
        throw NotCoprimeError("parameters " + a.get_str() + ", " + b.get_str() +
                              " are not coprime");

    RationalGF quadrant;
    quadrant.terms.push_back(make_gf_term(
        LaurentPoly2::monomial({to_i64(ceil(p)), to_i64(ceil(q))}, 1), {{1, 0}, {0, 1}}));

    const IntVector ray{to_i64(b), to_i64(a)};
    const HalfOpenCone k1{{p, q}, {1, 0}, ray, true, false};
    const HalfOpenCone k2{{p, q}, {0, 1}, ray, true, false};
    RationalGF rhs = gf_add(cone_ipt(k1), cone_ipt(k2));
    const auto cd = segment_lattice_point(p, q, a, b);
    if (cd) {
        RationalGF ray_term;
        ray_term.terms.push_back(
            make_gf_term(monomial_at(cd->first, cd->second), {as_exponents(ray)}));
        rhs = gf_add(rhs, ray_term);
    }

    VerificationReport rep;
    rep.id = IdentityId::conic;
    rep.params = {{"a", a.get_str()}, {"b", b.get_str()}, {"p", p.str()}, {"q", q.str()}};
    rep.lhs = quadrant.to_text("u", "v");
    rep.rhs = rhs.to_text("u", "v");
    rep.holds = gf_equal(quadrant, rhs);
    if (!rep.holds)
        rep.diff = combine_over_common_denominator(gf_add(quadrant, gf_negate(rhs)))
                       .num.to_text("u", "v");
    rep.notes = cd ? "chi=1" : "chi=0";
    return rep;
}

LaurentPoly2 point_ipt(const RationalPoint& P) {
    if (P.x.is_integer() && P.y.is_integer())
        return monomial_at(P.x.num(), P.y.num());
    return LaurentPoly2::zero();
}

LaurentPoly2 segment_ipt(const RationalPoint& P, const RationalPoint& Q) {
    if (P == Q)
        throw Error("segment endpoints must differ");
    const IntVector dir = primitive_direction(P, Q);
    LaurentPoly2 p;

    if (dir.i == 0) {
        if (!P.x.is_integer()) return p;
        const Rational ylo = std::min(P.y, Q.y);
        const Rational yhi = std::max(P.y, Q.y);
        for (Int n = ceil(ylo); n <= floor(yhi); ++n)
            p.add_term({to_i64(P.x.num()), to_i64(n)}, 1);
        return p;
    }

    // Lattice abscissas m on the line satisfy the congruence obtained by
    // clearing denominators of  (m - P.x) dir.j / dir.i + P.y  in Z.
    const Int q1 = P.x.den();
    const Int q2 = P.y.den();
    const Int A = Int(dir.j) * q1 * q2;
    const Int C = P.x.num() * dir.j * q2 - P.y.num() * Int(dir.i) * q1;
    const Int M = abs(Int(dir.i)) * q1 * q2;
    const Int g = gcd(A, M);
    if (C % g != 0) return p;

    const Int step = M / g;
    const Int m0 = step == 1
                       ? Int(0)
                       : (mod_inverse((A / g) % step, step) * ((C / g) % step)) % step;
    const Rational xlo = std::min(P.x, Q.x);
    const Rational xhi = std::max(P.x, Q.x);
    const Rational step_r{step};
    const Int klo = ceil((xlo - Rational(m0)) / step_r);
    const Int khi = floor((xhi - Rational(m0)) / step_r);
    for (Int k = klo; k <= khi; ++k) {
        const Int m = m0 + k * step;
        const Rational y = P.y + (Rational(m) - P.x) * Rational(Int(dir.j)) / Rational(Int(dir.i));
        if (!y.is_integer())
            throw Error("internal: congruence produced a non-lattice ordinate");
        p.add_term({to_i64(m), to_i64(y.num())}, 1);
    }
    return p;
}

std::vector<HalfOpenCone> vertex_cones(const ConvexRationalPolygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    std::vector<HalfOpenCone> cones;
    cones.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const RationalPoint& here = v[i];
        const RationalPoint& next = v[(i + 1) % n];
        const RationalPoint& prev = v[(i + n - 1) % n];
        cones.push_back({here, primitive_direction(here, next),
                         primitive_direction(here, prev), false, false});
    }
    return cones;
}

RationalGF brion_ipt(const ConvexRationalPolygon& poly) {
    RationalGF gf;
    for (const HalfOpenCone& cone : vertex_cones(poly))
        gf = gf_add(gf, cone_ipt(cone));
    return gf;
}

RationalGF triangle_ipt_thm2(const RightTriangleParams& params, Thm2V1Variant variant) {
    const Rational ef = params.corner_x();
    const Rational gh = params.corner_y();
    const Rational ab = params.east_x();
    const Rational cd = params.north_y();

    const Int alpha = params.d * params.h * (params.b * params.e - params.a * params.f);
    const Int beta = params.b * params.f * (params.c * params.h - params.d * params.g);

    // The hypotenuse line through (a/b, g/h) and (e/f, c/d) has slope
    // beta/alpha; alpha < 0 and beta > 0 in this orientation.
    const LinearMapQ l(-beta, -alpha, Rational(beta) * ef - Rational(alpha) * cd);
    const LinearMapQ l_inv = inverse_map(l);

    const Int quad_x = variant == Thm2V1Variant::ApexCeil ? ceil(ef) : ceil(ab);
    const ExponentPair hyp{to_i64(alpha), to_i64(beta)};

    RationalGF gf;
    gf.terms.push_back(make_gf_term(monomial_at(quad_x, ceil(gh)), {{1, 0}, {0, 1}}));
    gf.terms.push_back(make_gf_term(rc(gh, l_inv), {{-1, 0}, hyp}));
    gf.terms.push_back(make_gf_term(rc(ef, l).transpose(), {{0, -1}, -hyp}));
    return gf;
}

namespace {

// Reflects an axis-aligned right triangle into first-quadrant position,
// applies the closed form, and transforms the result back. R is the
// right-angle vertex, H its horizontal neighbor, V its vertical one.
RationalGF axis_right_triangle_ipt(const RationalPoint& R, const RationalPoint& H,
                                   const RationalPoint& V) {
    const int sx = H.x > R.x ? 1 : -1;
    const int sy = V.y > R.y ? 1 : -1;
    const auto map_x = [&](const Rational& x) { return sx > 0 ? x : -x; };
    const auto map_y = [&](const Rational& y) { return sy > 0 ? y : -y; };

    const Rational xmin = std::min(map_x(R.x), map_x(H.x));
    const Rational ymin = std::min(map_y(R.y), map_y(V.y));
    const Int m = 1 - floor(xmin);
    const Int n = 1 - floor(ymin);

    const Rational corner_x = map_x(R.x) + Rational(m);
    const Rational corner_y = map_y(R.y) + Rational(n);
    const Rational east_x = map_x(H.x) + Rational(m);
    const Rational north_y = map_y(V.y) + Rational(n);

    const RightTriangleParams params(east_x.num(), east_x.den(), north_y.num(), north_y.den(),
                                     corner_x.num(), corner_x.den(), corner_y.num(),
                                     corner_y.den());
    RationalGF gf = triangle_ipt_thm2(params);
    gf = gf_mul_monomial(gf, {to_i64(-m), to_i64(-n)}, 1);
    if (sx < 0) gf = gf_invert_axis(gf, 0);
    if (sy < 0) gf = gf_invert_axis(gf, 1);
    return gf;
}

bool is_axis_parallel(const RationalPoint& a, const RationalPoint& b) {
    return a.x == b.x || a.y == b.y;
}

void add_poly_term(RationalGF& gf, LaurentPoly2 p, bool negate) {
    if (p.is_zero()) return;
    gf.terms.push_back(GFTerm{negate ? -p : std::move(p), {}});
}

}  // namespace

BoxDecomposition box_decomposition_ipt(const RationalPoint& p1, const RationalPoint& p2,
                                       const RationalPoint& p3) {
    if (orientation(p1, p2, p3) == 0)
        throw DegenerateTriangleError("triangle vertices are collinear");
    std::vector<RationalPoint> v{p1, p2, p3};
    if (orientation(v[0], v[1], v[2]) < 0) std::swap(v[1], v[2]);

    int axis_edges = 0;
    for (int i = 0; i < 3; ++i)
        if (is_axis_parallel(v[i], v[(i + 1) % 3])) ++axis_edges;

    if (axis_edges == 2) {
        // Axis-aligned right triangle: locate the right-angle vertex.
        for (int i = 0; i < 3; ++i) {
            const RationalPoint& r = v[i];
            const RationalPoint& s = v[(i + 1) % 3];
            const RationalPoint& t = v[(i + 2) % 3];
            if (r.y == s.y && r.x == t.x)
                return {axis_right_triangle_ipt(r, s, t), false};
            if (r.x == s.x && r.y == t.y)
                return {axis_right_triangle_ipt(r, t, s), false};
        }
        throw Error("internal: right angle not found");
    }
    if (axis_edges != 0) {
        // One axis-parallel edge: the corner decomposition degenerates.
        return {brion_ipt(ConvexRationalPolygon(v)), true};
    }

    const Rational xmin = std::min({v[0].x, v[1].x, v[2].x});
    const Rational xmax = std::max({v[0].x, v[1].x, v[2].x});
    const Rational ymin = std::min({v[0].y, v[1].y, v[2].y});
    const Rational ymax = std::max({v[0].y, v[1].y, v[2].y});

    RationalGF gf;
    add_poly_term(gf, rectangle_ipt(xmin, xmax, ymin, ymax), false);

    int interior = -1;
    for (int i = 0; i < 3; ++i)
        if (v[i].x > xmin && v[i].x < xmax && v[i].y > ymin && v[i].y < ymax) interior = i;

    if (interior < 0) {
        // Every vertex lies on the box boundary: one axis-aligned right
        // triangle sits behind each edge.
        for (int i = 0; i < 3; ++i) {
            const RationalPoint& a = v[i];
            const RationalPoint& b = v[(i + 1) % 3];
            const RationalPoint& opposite = v[(i + 2) % 3];
            RationalPoint w{a.x, b.y};
            const int side = cross(b.x - a.x, b.y - a.y, opposite.x - a.x, opposite.y - a.y).sign();
            if (cross(b.x - a.x, b.y - a.y, w.x - a.x, w.y - a.y).sign() == side)
                w = RationalPoint{b.x, a.y};
            RationalGF corner = w.x == a.x ? axis_right_triangle_ipt(w, b, a)
                                           : axis_right_triangle_ipt(w, a, b);
            gf = gf_add(gf, gf_negate(corner));
            add_poly_term(gf, segment_ipt(a, b), false);
        }
        return {gf, false};
    }

    // One vertex interior: the other two sit at opposite box corners. The
    // complement is one corner triangle behind the diagonal plus a staircase
    // of two right triangles and a rectangle around the interior vertex.
    const RationalPoint& c = v[interior];
    RationalPoint d1 = v[(interior + 1) % 3];
    RationalPoint d2 = v[(interior + 2) % 3];
    if (d1.x > d2.x) std::swap(d1, d2);
    const bool opposite_corners =
        d1.x == xmin && d2.x == xmax &&
        ((d1.y == ymin && d2.y == ymax) || (d1.y == ymax && d2.y == ymin));
    if (!opposite_corners)
        throw Error("internal: interior-vertex triangle without a box diagonal");

    const bool sw_ne = d1.y < d2.y;
    const bool c_above = cross(d2.x - d1.x, d2.y - d1.y, c.x - d1.x, c.y - d1.y).sign() > 0;

    const auto subtract_triangle = [&](const RationalPoint& r, const RationalPoint& h,
                                       const RationalPoint& vv) {
        gf = gf_add(gf, gf_negate(axis_right_triangle_ipt(r, h, vv)));
    };

    // Corner triangle behind the diagonal d1 -> d2.
    {
        RationalPoint w = (sw_ne == c_above) ? RationalPoint{d2.x, d1.y} : RationalPoint{d1.x, d2.y};
        subtract_triangle(w, w.x == d1.x ? d2 : d1, w.x == d1.x ? d1 : d2);
        add_poly_term(gf, segment_ipt(d1, d2), false);
    }

    // Staircase around the interior vertex: right triangles against the
    // edges d1-c and c-d2 plus the rectangle between their legs.
    RationalPoint w1, w2;
    if (c_above == sw_ne) {
        w1 = RationalPoint{d1.x, c.y};
        w2 = RationalPoint{c.x, d2.y};
    } else {
        w1 = RationalPoint{c.x, d1.y};
        w2 = RationalPoint{d2.x, c.y};
    }
    subtract_triangle(w1, w1.y == c.y ? c : d1, w1.y == c.y ? d1 : c);
    subtract_triangle(w2, w2.y == c.y ? c : d2, w2.y == c.y ? d2 : c);
    add_poly_term(gf, segment_ipt(d1, c), false);
    add_poly_term(gf, segment_ipt(c, d2), false);

    add_poly_term(gf,
                  rectangle_ipt(std::min(w1.x, w2.x), std::max(w1.x, w2.x),
                                std::min(w1.y, w2.y), std::max(w1.y, w2.y)),
                  true);
    add_poly_term(gf, segment_ipt(w1, c), false);
    add_poly_term(gf, segment_ipt(c, w2), false);
    add_poly_term(gf, point_ipt(c), true);

    return {gf, false};
}

RationalGF polygon_ipt(const ConvexRationalPolygon& poly) {
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    RationalGF gf;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const ConvexRationalPolygon tri({v[0], v[i], v[i + 1]});
        gf = gf_add(gf, brion_ipt(tri));
    }
    for (std::size_t i = 2; i + 1 < n; ++i)
        add_poly_term(gf, segment_ipt(v[0], v[i]), true);
    return gf;
}

LaurentPoly2 brute_force_points(const std::vector<RationalPoint>& vertices) {
    if (vertices.empty())
        throw Error("brute_force_points needs at least one vertex");
    if (vertices.size() == 1) return point_ipt(vertices[0]);

    Rational xmin = vertices[0].x, xmax = vertices[0].x;
    Rational ymin = vertices[0].y, ymax = vertices[0].y;
    for (const RationalPoint& p : vertices) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }

    std::vector<RationalPoint> verts = vertices;
    if (verts.size() >= 3) {
        Rational area2;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const RationalPoint& a = verts[i];
            const RationalPoint& b = verts[(i + 1) % verts.size()];
            area2 += cross(a.x, a.y, b.x, b.y);
        }
        if (area2.is_zero())
            throw Error("brute_force_points: degenerate region");
        if (area2.sign() < 0) std::reverse(verts.begin(), verts.end());
    }

    const auto inside = [&](const Rational& px, const Rational& py) {
        if (verts.size() == 2) {
            const RationalPoint& a = verts[0];
            const RationalPoint& b = verts[1];
            return cross(b.x - a.x, b.y - a.y, px - a.x, py - a.y).is_zero();
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const RationalPoint& a = verts[i];
            const RationalPoint& b = verts[(i + 1) % verts.size()];
            if (cross(b.x - a.x, b.y - a.y, px - a.x, py - a.y).sign() < 0) return false;
        }
        return true;
    };

    LaurentPoly2 p;
    for (Int m = ceil(xmin); m <= floor(xmax); ++m)
        for (Int n = ceil(ymin); n <= floor(ymax); ++n)
            if (inside(Rational(m), Rational(n)))
                p.add_term({to_i64(m), to_i64(n)}, 1);
    return p;
}

}  // namespace rcpoly
