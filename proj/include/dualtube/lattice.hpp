#pragma once

// Lattice structures for dual nanotube graphs: the chiral vector, the rolled
// (quotient) triangular lattice with its exact closed-walk counting oracle,
// and the finite armchair dual graphs built from two caps plus hexagon rings.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dualtube/exact.hpp"

namespace dualtube {

/*! Chiral vector (p,q), stored in the canonical order q <= p.
 *  p+q >= 3 is required; `physical()` marks the p+q >= 5 range where the
 *  rolled tube is geometrically realizable.
 */
struct ChiralVector {
    int p = 0;
    int q = 0;

    ChiralVector(int p_, int q_) : p(p_), q(q_) {
        if (p < 0 || q < 0) throw std::invalid_argument("chiral vector: p,q >= 0");
        if (q > p) std::swap(p, q);
        if (p + q < 3) throw std::invalid_argument("chiral vector: p+q >= 3");
    }

    int circumference() const { return p + q; }
    bool physical() const { return p + q >= 5; }
    bool zigzag() const { return q == 0; }
    bool armchair() const { return p == q; }
    //! limit parameter c = p/(p+q)
    double c() const { return static_cast<double>(p) / (p + q); }
};

//! Integer coordinate in the triangular-lattice basis (e1, e2).
struct LatticeCoord {
    long long a = 0;
    long long b = 0;
    bool operator==(const LatticeCoord&) const = default;
};

/*! Canonical representative of coord under v ~ v + j*(p,q).
 *  Rule: j = floor((a*p + b*q) / (p^2 + q^2)); the representative has its
 *  projection onto (p,q) in [0, p^2+q^2), hence is unique per class.
 *  Idempotent, and invariant under adding any multiple of (p,q).
 */
inline LatticeCoord canonicalize(const ChiralVector& cv, LatticeCoord coord) {
    const long long D = static_cast<long long>(cv.p) * cv.p +
                        static_cast<long long>(cv.q) * cv.q;
    const long long proj = coord.a * cv.p + coord.b * cv.q;
    long long j = proj / D;
    if (proj % D < 0) --j; // floor division for negative projections
    return {coord.a - j * cv.p, coord.b - j * cv.q};
}

/*! The 6-regular lattice the random eigenvalue lives on: triangular lattice
 *  with a weight-3 loop per vertex, optionally rolled up by identifying
 *  v ~ v + j*(p,q). A disengaged chiral vector means the plain (unrolled)
 *  triangular lattice.
 */
struct QuotientLattice {
    std::optional<ChiralVector> chiral; // nullopt => triangular (no identification)
    // six unit steps +-e1, +-e2, +-(e1-e2); loop weight 3 at every vertex
    static constexpr int loop_weight = 3;

    static QuotientLattice triangular() { return {std::nullopt}; }
    static QuotientLattice rolled(ChiralVector cv) { return {cv}; }
};

/*! Exact number of closed k-step walks from a fixed vertex.
 *
 *  Dynamic program over integer coordinates of the covering lattice clipped
 *  to |a|,|b| <= box (a k-step walk moves each coordinate by at most 1 per
 *  step, so box >= k is lossless); the rolled count then sums the walks
 *  ending at any point whose canonical representative is the origin.
 *  The loop contributes multiplicity 3 at every step.
 */
BigInt closed_walk_count(const QuotientLattice& lattice, int k, int box = -1);

/*! Finite triangulation dual of a capped armchair tube: vertex count,
 *  undirected edges, and per-vertex half-loop weights deg(v)/2.
 */
struct FiniteDualGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;

    //! loop weight attached to vertex v in the half-loop matrix
    BigRat loop_weight(int v) const { return BigRat(degree[v], 2); }
};

/*! Build the finite dual graph of a (5,5)-capped tube with r hexagon rings
 *  between the caps: 32+10r vertices, 90+30r edges, exactly 12 vertices of
 *  degree 5 (the pentagon sites), all others degree 6.
 */
FiniteDualGraph build_finite_armchair55_dual(int r);

//! A* + D*/2 as a dense exact-rational matrix (0/1 off-diagonal, deg/2 diagonal).
std::vector<std::vector<BigRat>> half_loop_matrix(const FiniteDualGraph& g);

/*! tr(M^k)/n for k = 0..k_max, computed exactly. The matrix must have
 *  rational entries with power-of-two denominators (as half_loop_matrix
 *  produces); internally the powers run over the integer matrix 2M.
 */
std::vector<BigRat> normalized_trace_moments(const std::vector<std::vector<BigRat>>& m,
                                             int k_max);

/*! Edge-list text export: header "n m", one "u v" line per edge, then a
 *  "loops:" line followed by "v numerator/denominator" per vertex.
 */
void export_edge_list(const FiniteDualGraph& g, std::ostream& out);

} // namespace dualtube
