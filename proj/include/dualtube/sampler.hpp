#pragma once

// i.i.d. samplers for the random eigenvalue of rolled dual lattices and for
// its unrolled-lattice limit, driven by a reproducible seeded stream. Every
// sample lies in [0, 9].

#include <iosfwd>
#include <vector>

#include "dualtube/lattice.hpp"
#include "dualtube/rng.hpp"

namespace dualtube {

/*! General sampler: value = 3 + 2(cos U + cos((pU + 2 pi J)/(p+q))
 *                                      + cos((qU - 2 pi J)/(p+q)))
 *  with U uniform on (0, pi] and J uniform on {0..p+q-1}, independent.
 */
std::vector<double> sample_general(const ChiralVector& cv, SeededStream& stream, std::size_t n);

/*! Zigzag special form (q = 0), p >= 3:
 *  value = 4(1 + cos(2 pi J/p)) V^2 - 4 sin(2 pi J/p) V sqrt(1-V^2) + 1,
 *  V = cos(U/2) on [0,1) with the arcsine-type density 2/(pi sqrt(1-v^2)).
 */
std::vector<double> sample_zigzag(int p, SeededStream& stream, std::size_t n);

/*! Armchair special form (p = q), p >= 2:
 *  value = 4 V^2 + 4 cos(pi J/p) V + 1, J uniform on {0..2p-1}.
 */
std::vector<double> sample_armchair(int p, SeededStream& stream, std::size_t n);

/*! Unrolled-lattice limit X_c = 3 + 2(cos U + cos((1-c)U + V) + cos(cU - V)),
 *  U, V independent uniform on (0, 2 pi); the law does not depend on c.
 */
std::vector<double> sample_triangular_limit(double c, SeededStream& stream, std::size_t n);

//! Single-column CSV with header "lambda".
void export_samples_csv(const std::vector<double>& samples, std::ostream& out);

//! Histogram CSV: "bin_left,bin_right,count" over [0,9] with `bins` equal bins.
void export_histogram_csv(const std::vector<double>& samples, int bins, std::ostream& out);

} // namespace dualtube
