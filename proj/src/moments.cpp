#include "dualtube/moments.hpp"

#include <array>
#include <deque>
#include <ostream>

namespace dualtube {

namespace {

// factorial table, extended on demand; deque keeps references valid across
// growth, since callers combine several table entries in one expression
const BigInt& factorial(int n) {
    static std::deque<BigInt> table{1, 1};
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<unsigned>(table.size()));
    }
    return table[n];
}

BigInt binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt trinom(int k, int k1, int k2, int k3) {
    if (k1 < 0 || k2 < 0 || k3 < 0 || k1 + k2 + k3 != k) return 0;
    return factorial(k) / (factorial(k1) * factorial(k2) * factorial(k3));
}

} // namespace

const char* moment_method_name(MomentMethod m) {
    switch (m) {
        case MomentMethod::indicator: return "indicator";
        case MomentMethod::binomial_ratio: return "binomial_ratio";
        case MomentMethod::seven_multinomial: return "seven_multinomial";
        case MomentMethod::oracle: return "oracle";
        case MomentMethod::triangular_sum: return "triangular_sum";
    }
    return "?";
}

BigInt moments_indicator_sum(const ChiralVector& cv, int k) {
    if (k < 0) throw std::invalid_argument("moments: k >= 0");
    const int p = cv.p, q = cv.q, n = p + q;
    BigInt total = 0;
    const int jmax = k / n; // beyond this some part of the primed triple leaves [0,k]
    for (int j = -jmax; j <= jmax; ++j) {
        // compositions in lexicographic (k1, k2) order
        for (int k1 = 0; k1 <= k; ++k1) {
            for (int k2 = 0; k2 + k1 <= k; ++k2) {
                const int k3 = k - k1 - k2;
                const int k1p = k1 + j * p, k2p = k2 + j * q, k3p = k3 - j * n;
                if (k1p < 0 || k2p < 0 || k3p < 0) continue;
                total += trinom(k, k1, k2, k3) * trinom(k, k1p, k2p, k3p);
            }
        }
    }
    return total;
}

BigInt moments_binomial_ratio(const ChiralVector& cv, int k) {
    if (k < 0) throw std::invalid_argument("moments: k >= 0");
    const int p = cv.p, q = cv.q, n = p + q;
    BigRat total = 0;
    for (int k1 = 0; k1 <= k; ++k1) {
        for (int k2 = 0; k2 + k1 <= k; ++k2) {
            const int k3 = k - k1 - k2;
            const BigInt m = trinom(k, k1, k2, k3);
            BigRat inner = 1;
            for (int l = 1; l <= k1 / n; ++l) {
                const BigInt num = binom(2 * k1 - l * q, k1 + l * p) * binom(k, k1 - l * q);
                const BigInt den = binom(k, k1) * binom(2 * (k - k1), k - k1);
                inner += 2 * BigRat(num, den);
            }
            total += BigRat(m * m) * inner;
        }
    }
    if (boost::multiprecision::denominator(total) != 1) {
        throw std::logic_error("moments_binomial_ratio: non-integral total (internal fault)");
    }
    return boost::multiprecision::numerator(total);
}

BigInt moments_seven_multinomial(const ChiralVector& cv, int k) {
    if (k < 0) throw std::invalid_argument("moments: k >= 0");
    const long long p = cv.p, q = cv.q;
    BigInt total = 0;
    // lexicographic enumeration of 7-part compositions (k1..k6 free, k7 remainder)
    std::array<int, 7> ks{};
    std::vector<BigInt> pow3(k + 1);
    pow3[0] = 1;
    for (int i = 1; i <= k; ++i) pow3[i] = pow3[i - 1] * 3;

    for (ks[0] = 0; ks[0] <= k; ++ks[0])
    for (ks[1] = 0; ks[1] + ks[0] <= k; ++ks[1])
    for (ks[2] = 0; ks[2] + ks[1] + ks[0] <= k; ++ks[2])
    for (ks[3] = 0; ks[3] + ks[2] + ks[1] + ks[0] <= k; ++ks[3])
    for (ks[4] = 0; ks[4] + ks[3] + ks[2] + ks[1] + ks[0] <= k; ++ks[4])
    for (ks[5] = 0; ks[5] + ks[4] + ks[3] + ks[2] + ks[1] + ks[0] <= k; ++ks[5]) {
        ks[6] = k - ks[0] - ks[1] - ks[2] - ks[3] - ks[4] - ks[5];
        const long long k2 = ks[1], k3 = ks[2], k4 = ks[3], k5 = ks[4], k6 = ks[5],
                        k7 = ks[6];
        if ((p * k - k2 - k4 + k5 + k7) % p != 0) continue;
        if (p * (-k2 + k3 + k5 - k6) != q * (k2 + k4 - k5 - k7)) continue;
        BigInt m = factorial(k);
        for (int part : ks) m /= factorial(part);
        total += pow3[ks[0]] * m;
    }
    return total;
}

BigInt triangular_moments(int k) {
    if (k < 0) throw std::invalid_argument("moments: k >= 0");
    BigInt total = 0;
    for (int k1 = 0; k1 <= k; ++k1) {
        for (int k2 = 0; k2 + k1 <= k; ++k2) {
            const BigInt m = trinom(k, k1, k2, k - k1 - k2);
            total += m * m;
        }
    }
    return total;
}

std::vector<MomentSequence> moment_table(const std::optional<ChiralVector>& chiral,
                                         int k_max, std::vector<MomentMethod> methods) {
    if (k_max < 0) throw std::invalid_argument("moment_table: k_max >= 0");
    if (methods.empty()) {
        if (chiral) {
            methods = {MomentMethod::indicator, MomentMethod::binomial_ratio,
                       MomentMethod::seven_multinomial, MomentMethod::oracle};
        } else {
            methods = {MomentMethod::triangular_sum, MomentMethod::oracle};
        }
    }
    std::vector<MomentSequence> out;
    for (MomentMethod method : methods) {
        if (!chiral && method != MomentMethod::oracle &&
            method != MomentMethod::triangular_sum) {
            throw std::invalid_argument(std::string("moment_table: method '") +
                                        moment_method_name(method) +
                                        "' requires a chiral vector");
        }
        MomentSequence seq{chiral, method, {}};
        seq.values.reserve(k_max + 1);
        for (int k = 0; k <= k_max; ++k) {
            BigInt v;
            switch (method) {
                case MomentMethod::indicator:
                    v = moments_indicator_sum(*chiral, k);
                    break;
                case MomentMethod::binomial_ratio:
                    v = moments_binomial_ratio(*chiral, k);
                    break;
                case MomentMethod::seven_multinomial:
                    v = moments_seven_multinomial(*chiral, k);
                    break;
                case MomentMethod::oracle:
                    v = closed_walk_count(chiral ? QuotientLattice::rolled(*chiral)
                                                 : QuotientLattice::triangular(),
                                          k);
                    break;
                case MomentMethod::triangular_sum:
                    if (chiral) {
                        throw std::invalid_argument(
                            "moment_table: triangular_sum applies to the unrolled lattice");
                    }
                    v = triangular_moments(k);
                    break;
            }
            seq.values.push_back(std::move(v));
        }
        out.push_back(std::move(seq));
    }
    // pairwise agreement
    for (std::size_t i = 1; i < out.size(); ++i) {
        for (int k = 0; k <= k_max; ++k) {
            if (out[0].values[k] != out[i].values[k]) {
                throw MomentMismatch(k, moment_method_name(out[0].method),
                                     moment_method_name(out[i].method), out[0].values[k],
                                     out[i].values[k]);
            }
        }
    }
    return out;
}

void export_moments_csv(const std::vector<MomentSequence>& table, std::ostream& out) {
    out << "k,method,value\n";
    for (const auto& seq : table) {
        for (std::size_t k = 0; k < seq.values.size(); ++k) {
            out << k << ',' << moment_method_name(seq.method) << ','
                << seq.values[k].str() << '\n';
        }
    }
}

} // namespace dualtube
