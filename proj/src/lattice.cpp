#include "dualtube/lattice.hpp"

#include <algorithm>
#include <ostream>

namespace dualtube {

BigInt closed_walk_count(const QuotientLattice& lattice, int k, int box) {
    if (k < 0) throw std::invalid_argument("closed_walk_count: k >= 0");
    if (box < 0) box = k;
    if (box < k) throw std::invalid_argument("closed_walk_count: box >= k required");

    const int side = 2 * box + 1;
    auto idx = [&](int a, int b) { return (a + box) * side + (b + box); };

    static constexpr int steps[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};

    std::vector<BigInt> cur(static_cast<std::size_t>(side) * side), nxt(cur.size());
    cur[idx(0, 0)] = 1;
    for (int step = 0; step < k; ++step) {
        std::fill(nxt.begin(), nxt.end(), BigInt(0));
        for (int a = -box; a <= box; ++a) {
            for (int b = -box; b <= box; ++b) {
                const BigInt& c = cur[idx(a, b)];
                if (c == 0) continue;
                nxt[idx(a, b)] += c * QuotientLattice::loop_weight;
                for (const auto& s : steps) {
                    const int na = a + s[0], nb = b + s[1];
                    if (na < -box || na > box || nb < -box || nb > box) continue;
                    nxt[idx(na, nb)] += c;
                }
            }
        }
        cur.swap(nxt);
    }

    if (!lattice.chiral) return cur[idx(0, 0)];

    // rolled tube: collect every endpoint identified with the origin
    const ChiralVector& cv = *lattice.chiral;
    BigInt total = 0;
    for (int a = -box; a <= box; ++a) {
        for (int b = -box; b <= box; ++b) {
            if (cur[idx(a, b)] == 0) continue;
            if (canonicalize(cv, {a, b}) == LatticeCoord{0, 0}) total += cur[idx(a, b)];
        }
    }
    return total;
}

FiniteDualGraph build_finite_armchair55_dual(int r) {
    if (r < 0) throw std::invalid_argument("build_finite_armchair55_dual: r >= 0");

    // Layout: apexT, tT[5], rings[r+2][10] (first/last are the cap boundaries),
    // tB[5], apexB. Pentagon sites: both apexes, even slots of the top
    // boundary, odd slots of the bottom boundary.
    FiniteDualGraph g;
    const int nrings = r + 2;
    g.n = 2 + 10 + 10 * nrings; // 32 + 10r
    const int apexT = 0;
    auto tT = [&](int i) { return 1 + (i % 5 + 5) % 5; };
    auto ring = [&](int l, int s) { return 6 + 10 * l + ((s % 10) + 10) % 10; };
    auto tB = [&](int i) { return 6 + 10 * nrings + (i % 5 + 5) % 5; };
    const int apexB = g.n - 1;

    auto edge = [&](int u, int v) { g.edges.emplace_back(std::min(u, v), std::max(u, v)); };

    for (int i = 0; i < 5; ++i) {
        // top cap: apex pentagon, hexagon collar, boundary attachments
        edge(apexT, tT(i));
        edge(tT(i), tT(i + 1));
        edge(tT(i), ring(0, 2 * i));
        edge(tT(i), ring(0, 2 * i + 1));
        edge(tT(i), ring(0, 2 * i + 2));
        // bottom cap mirrors the top with boundary slots shifted by one,
        // which puts its pentagons on the odd slots
        edge(apexB, tB(i));
        edge(tB(i), tB(i + 1));
        edge(tB(i), ring(nrings - 1, 2 * i + 1));
        edge(tB(i), ring(nrings - 1, 2 * i + 2));
        edge(tB(i), ring(nrings - 1, 2 * i + 3));
    }
    for (int l = 0; l < nrings; ++l) {
        for (int s = 0; s < 10; ++s) edge(ring(l, s), ring(l, s + 1));
    }
    // band triangulation between consecutive rings: even slots drop one strut,
    // odd slots fan out to three
    for (int l = 0; l + 1 < nrings; ++l) {
        for (int s = 0; s < 10; ++s) {
            if (s % 2 == 0) {
                edge(ring(l, s), ring(l + 1, s));
            } else {
                edge(ring(l, s), ring(l + 1, s - 1));
                edge(ring(l, s), ring(l + 1, s));
                edge(ring(l, s), ring(l + 1, s + 1));
            }
        }
    }

    std::sort(g.edges.begin(), g.edges.end());
    g.degree.assign(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        ++g.degree[u];
        ++g.degree[v];
    }
    return g;
}

std::vector<std::vector<BigRat>> half_loop_matrix(const FiniteDualGraph& g) {
    std::vector<std::vector<BigRat>> m(g.n, std::vector<BigRat>(g.n, BigRat(0)));
    for (const auto& [u, v] : g.edges) {
        m[u][v] = 1;
        m[v][u] = 1;
    }
    for (int v = 0; v < g.n; ++v) m[v][v] = g.loop_weight(v);
    return m;
}

std::vector<BigRat> normalized_trace_moments(const std::vector<std::vector<BigRat>>& m,
                                             int k_max) {
    const std::size_t n = m.size();
    if (k_max < 0) throw std::invalid_argument("normalized_trace_moments: k_max >= 0");
    for (const auto& row : m) {
        if (row.size() != n) throw std::invalid_argument("trace moments: matrix not square");
        for (std::size_t j = 0; j < n; ++j) {
            if (boost::multiprecision::denominator(row[j]) != 1 &&
                boost::multiprecision::denominator(row[j]) != 2) {
                throw std::invalid_argument("trace moments: entries must be halves");
            }
        }
    }
    // run the powers over the integer matrix B = 2M; tr(M^k) = tr(B^k) / 2^k
    std::vector<std::vector<BigInt>> b(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            b[i][j] = boost::multiprecision::numerator(BigRat(m[i][j] * 2));

    std::vector<BigRat> out;
    out.reserve(k_max + 1);
    std::vector<std::vector<BigInt>> pw(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;

    BigInt two_k = 1;
    for (int k = 0; k <= k_max; ++k) {
        BigInt tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += pw[i][i];
        out.emplace_back(BigRat(tr) / (BigRat(two_k) * BigInt(static_cast<unsigned>(n))));
        if (k == k_max) break;
        // pw <- pw * b
        std::vector<std::vector<BigInt>> nx(n, std::vector<BigInt>(n, BigInt(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                if (pw[i][l] == 0) continue;
                const BigInt& pil = pw[i][l];
                for (std::size_t j = 0; j < n; ++j) {
                    if (b[l][j] != 0) nx[i][j] += pil * b[l][j];
                }
            }
        }
        pw.swap(nx);
        two_k <<= 1;
    }
    return out;
}

void export_edge_list(const FiniteDualGraph& g, std::ostream& out) {
    out << g.n << ' ' << g.edges.size() << '\n';
    for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
    out << "loops:\n";
    for (int v = 0; v < g.n; ++v) {
        out << v << ' ' << to_decimal(g.loop_weight(v)) << '\n';
    }
}

} // namespace dualtube
