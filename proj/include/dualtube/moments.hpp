#pragma once

// Exact moment sequences of the rolled-lattice random eigenvalue, by three
// independent combinatorial formulas plus the unrolled (triangular) limit.
// All results are exact big integers; disagreement between methods is a bug
// and is surfaced as MomentMismatch.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualtube/exact.hpp"
#include "dualtube/lattice.hpp"

namespace dualtube {

enum class MomentMethod { indicator, binomial_ratio, seven_multinomial, oracle, triangular_sum };

const char* moment_method_name(MomentMethod m);

struct MomentSequence {
    std::optional<ChiralVector> chiral; // nullopt => triangular
    MomentMethod method;
    std::vector<BigInt> values; // indexed by k
};

struct MomentMismatch : std::runtime_error {
    int k;
    std::string method_a, method_b;
    BigInt value_a, value_b;
    MomentMismatch(int k_, std::string ma, std::string mb, BigInt va, BigInt vb)
        : std::runtime_error("moment methods disagree at k=" + std::to_string(k_) + ": " +
                             ma + "=" + va.str() + " vs " + mb + "=" + vb.str()),
          k(k_), method_a(std::move(ma)), method_b(std::move(mb)),
          value_a(std::move(va)), value_b(std::move(vb)) {}
};

/*! Double composition sum: pairs of 3-part compositions of k joined by the
 *  wrap indicator k1' = k1 + j p, k2' = k2 + j q, k3' = k3 - j (p+q), summed
 *  over the finitely many j with all six parts in [0, k].
 */
BigInt moments_indicator_sum(const ChiralVector& cv, int k);

/*! Squared-multinomial sum with a correction ratio of binomials for each
 *  wrap count l = 1 .. floor(k1/(p+q)). Intermediate terms are exact
 *  rationals; a non-integral total signals an implementation fault.
 */
BigInt moments_binomial_ratio(const ChiralVector& cv, int k);

/*! Seven-part composition sum 3^{k1} * multinomial(k; k1..k7) restricted by
 *  the mod-p congruence on k2+k4-k5-k7 and the linear relation
 *  p(-k2+k3+k5-k6) = q(k2+k4-k5-k7).
 */
BigInt moments_seven_multinomial(const ChiralVector& cv, int k);

//! Unrolled lattice: sum of squared trinomial coefficients over compositions of k.
BigInt triangular_moments(int k);

/*! Run the requested methods for k = 0..k_max, verify pairwise equality, and
 *  return one tagged sequence per method. Throws MomentMismatch on any
 *  disagreement. An empty method list selects all applicable methods.
 */
std::vector<MomentSequence> moment_table(const std::optional<ChiralVector>& chiral,
                                         int k_max,
                                         std::vector<MomentMethod> methods = {});

//! CSV export: header "k,method,value", decimal values.
void export_moments_csv(const std::vector<MomentSequence>& table, std::ostream& out);

} // namespace dualtube
