// Python bindings for the main operations. Exact big integers and rationals
// cross the boundary as decimal strings so no precision is lost.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "dualtube/bessel.hpp"
#include "dualtube/density.hpp"
#include "dualtube/lattice.hpp"
#include "dualtube/mgf.hpp"
#include "dualtube/moments.hpp"
#include "dualtube/numerics.hpp"
#include "dualtube/rng.hpp"
#include "dualtube/sampler.hpp"

namespace py = pybind11;
using namespace dualtube;

namespace {

std::vector<std::string> to_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_decimal(x));
    return out;
}

} // namespace

PYBIND11_MODULE(dualtube_py, m) {
    m.doc() = "spectral distributions of rolled dual lattices: exact moments, samplers, "
              "densities, generating functions";

    py::class_<ChiralVector>(m, "ChiralVector")
        .def(py::init<int, int>(), py::arg("p"), py::arg("q"))
        .def_readonly("p", &ChiralVector::p)
        .def_readonly("q", &ChiralVector::q)
        .def("circumference", &ChiralVector::circumference)
        .def("physical", &ChiralVector::physical)
        .def("zigzag", &ChiralVector::zigzag)
        .def("armchair", &ChiralVector::armchair)
        .def("c", &ChiralVector::c)
        .def("__repr__", [](const ChiralVector& cv) {
            return "ChiralVector(" + std::to_string(cv.p) + ", " + std::to_string(cv.q) + ")";
        });

    m.def(
        "canonicalize",
        [](int p, int q, long long a, long long b) {
            const auto r = canonicalize(ChiralVector(p, q), LatticeCoord{a, b});
            return std::make_pair(r.a, r.b);
        },
        py::arg("p"), py::arg("q"), py::arg("a"), py::arg("b"),
        "canonical representative of (a,b) under the chiral identification");

    m.def(
        "closed_walk_count",
        [](std::optional<std::pair<int, int>> chiral, int k) {
            const auto lattice = chiral ? QuotientLattice::rolled(
                                              ChiralVector(chiral->first, chiral->second))
                                        : QuotientLattice::triangular();
            return to_decimal(closed_walk_count(lattice, k));
        },
        py::arg("chiral"), py::arg("k"),
        "exact closed k-walk count; chiral=None means the unrolled lattice");

    m.def(
        "moments",
        [](int p, int q, int k_max) {
            std::map<std::string, std::vector<std::string>> out;
            for (const auto& seq : moment_table(ChiralVector(p, q), k_max))
                out[moment_method_name(seq.method)] = to_strings(seq.values);
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("k_max"),
        "cross-checked exact moments by every applicable method (decimal strings)");

    m.def(
        "moments_triangular",
        [](int k_max) {
            std::map<std::string, std::vector<std::string>> out;
            for (const auto& seq : moment_table(std::nullopt, k_max))
                out[moment_method_name(seq.method)] = to_strings(seq.values);
            return out;
        },
        py::arg("k_max"));

    m.def(
        "sample",
        [](int p, int q, std::size_t n, std::uint64_t seed) {
            SeededStream stream(seed);
            return sample_general(ChiralVector(p, q), stream, n);
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("seed") = 12345,
        "i.i.d. random-eigenvalue samples (deterministic per seed)");

    m.def(
        "sample_limit",
        [](double c, std::size_t n, std::uint64_t seed) {
            SeededStream stream(seed);
            return sample_triangular_limit(c, stream, n);
        },
        py::arg("c"), py::arg("n"), py::arg("seed") = 12345,
        "samples of the unrolled-lattice limit variable");

    py::class_<PiecewiseDensity>(m, "PiecewiseDensity")
        .def("pdf", &PiecewiseDensity::pdf, py::arg("x"))
        .def("cdf", &PiecewiseDensity::cdf, py::arg("x"))
        .def("total_mass", &PiecewiseDensity::total_mass)
        .def("moment", &PiecewiseDensity::moment, py::arg("k"))
        .def("piece_intervals",
             [](const PiecewiseDensity& d) {
                 std::vector<std::pair<double, double>> out;
                 for (const auto& pc : d.pieces) out.emplace_back(pc.lo, pc.hi);
                 return out;
             })
        .def("atoms", [](const PiecewiseDensity& d) {
            std::vector<std::pair<double, std::string>> out;
            for (const auto& a : d.atoms) out.emplace_back(a.x, to_decimal(a.mass));
            return out;
        });

    m.def("build_zigzag_density", [](int p) { return pdf_zigzag(p); }, py::arg("p"));
    m.def("build_armchair_density", [](int p) { return pdf_armchair(p); }, py::arg("p"));
    m.def(
        "build_chiral_density",
        [](int p, int q, int grid_size) { return pdf_chiral_numeric(ChiralVector(p, q), grid_size); },
        py::arg("p"), py::arg("q"), py::arg("grid_size") = 4096);

    m.def(
        "pdf_triangular",
        [](double x, int oscillations, double abs_tol) {
            const auto r = pdf_triangular(x, oscillations, 1, abs_tol);
            return std::make_pair(r.value, r.error_estimate);
        },
        py::arg("x"), py::arg("oscillations") = 200, py::arg("abs_tol") = 1e-3,
        "unrolled-lattice limit density value and (conservative) error estimate");

    m.def(
        "mgf",
        [](int p, int q, double t) {
            const auto r = mgf(ChiralVector(p, q), t);
            return std::make_pair(r.value, r.error_estimate);
        },
        py::arg("p"), py::arg("q"), py::arg("t"));
    m.def(
        "mgf_limit",
        [](double t) {
            const auto r = mgf_limit(t);
            return std::make_pair(r.value, r.error_estimate);
        },
        py::arg("t"));
    m.def(
        "verify_integral_identity",
        [](double t) {
            const auto r = verify_integral_identity(t);
            return std::make_tuple(r.lhs, r.rhs, r.gap);
        },
        py::arg("t"), "two quadratures of the same quantity: (lhs, rhs, |gap|)");

    m.def("bessel_i0", &num::bessel_i0, py::arg("x"));
    m.def("bessel_j0", &num::bessel_j0, py::arg("x"));

    m.def(
        "finite_dual_graph",
        [](int r) {
            const auto g = build_finite_armchair55_dual(r);
            const auto traces = normalized_trace_moments(half_loop_matrix(g), 6);
            py::dict out;
            out["n"] = g.n;
            out["edges"] = g.edges;
            out["degrees"] = g.degree;
            std::vector<std::string> tm;
            for (const auto& t : traces) tm.push_back(to_decimal(t));
            out["trace_moments"] = tm;
            return out;
        },
        py::arg("r"),
        "finite capped-tube dual graph with exact normalized trace moments (k <= 6)");
}
