#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace bsm {

using Complex = std::complex<double>;

enum class Model { Disk, HalfPlane };

// Point of the ideal boundary: the unit circle (disk model) or the extended
// real line (half-plane model). Disk points are renormalized to |z| = 1 on
// construction; the half-plane point at infinity is a tagged value, never an
// IEEE infinity.
struct BoundaryPoint {
    Complex value{1.0, 0.0};
    Model model = Model::Disk;
    bool inf = false;

    static BoundaryPoint disk(Complex z);
    static BoundaryPoint disk_turn(double t);  // t in turns, any real
    static BoundaryPoint half_plane(double x);
    static BoundaryPoint infinity();

    // angle / (2*pi), normalized to [0,1); disk model only
    double turn() const;
};

bool approx_eq(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-9);

enum class ElementType { Identity, Elliptic, Parabolic, Hyperbolic };

std::string to_string(ElementType t);

// z -> (a z + b) / (c z + d), with z replaced by conj(z) when anti is set.
// Matrices are kept normalized: det = 1 and a deterministic sign choice, so
// equality of group elements reduces to entrywise comparison.
struct MoebiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
    bool anti = false;
    Model model = Model::Disk;

    static MoebiusMap identity(Model m = Model::Disk);

    MoebiusMap normalized() const;
    MoebiusMap inverse() const;
    Complex det() const { return a * d - b * c; }

    BoundaryPoint apply(const BoundaryPoint& p) const;
    Complex apply(Complex z) const;  // disk model convenience

    bool is_identity(double tol = 1e-10) const;
};

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);  // f after g
bool approx_eq(const MoebiusMap& f, const MoebiusMap& g, double tol = 1e-10);

// |f'(p)| along the boundary circle/line.
double circle_derivative(const MoebiusMap& f, const BoundaryPoint& p);

ElementType classify_element(const MoebiusMap& f, double tol = 1e-9);

struct Geodesic {
    BoundaryPoint e1, e2;
    Geodesic(BoundaryPoint a, BoundaryPoint b);
};

// Anti-Moebius involution fixing the geodesic pointwise. For a disk geodesic
// with non-antipodal endpoints this is Euclidean inversion in the unique
// circle through the endpoints orthogonal to the unit circle; for antipodal
// endpoints it is reflection in the line through them.
MoebiusMap reflection_in_geodesic(const Geodesic& geo);

MoebiusMap complex_conjugation();

// w = i (1 - z) / (1 + z): unit disk onto upper half-plane,
// 1 -> 0, i -> 1, -1 -> inf, -i -> -1.
MoebiusMap cayley_transform();
MoebiusMap cayley_inverse();
BoundaryPoint disk_to_half_plane(const BoundaryPoint& p);
BoundaryPoint half_plane_to_disk(const BoundaryPoint& p);

}  // namespace bsm
