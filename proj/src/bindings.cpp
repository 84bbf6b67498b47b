#include "wzw/acceptance.hpp"
#include "wzw/cli.hpp"
#include "wzw/errors.hpp"
#include "wzw/fock.hpp"
#include "wzw/kz.hpp"
#include "wzw/oracle.hpp"
#include "wzw/surface.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace wzw;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them
// in Fraction.
std::vector<std::vector<std::string>> matrix_strings(const QMatrix& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = to_string(m(r, c));
    return out;
}

std::vector<DominantWeight> weights(const RootSystem& rs, const std::vector<Weight>& ws) {
    std::vector<DominantWeight> out;
    for (const auto& w : ws) {
        require_dominant(rs, w);
        out.emplace_back(w);
    }
    return out;
}

FusionRing ring(const std::string& algebra, int level) { return fusion_table(alphabet(RootSystem::parse(algebra), level)); }

}  // namespace

PYBIND11_MODULE(_wzw, m) {
    m.doc() = "exact WZW fusion, block dimensions, twists, KZ and Sugawara checks";

    auto rejection = py::register_exception<Rejection>(m, "Rejection", PyExc_ValueError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
    (void)rejection;

    m.def("dual_coxeter", [](const std::string& algebra) { return RootSystem::parse(algebra).dual_coxeter(); });

    m.def("alphabet", [](const std::string& algebra, int level) {
        const auto a = alphabet(RootSystem::parse(algebra), level);
        std::vector<Weight> out;
        for (const auto& w : a.labels()) out.push_back(w.coords());
        return out;
    });

    m.def(
        "fusion_coeff",
        [](const std::string& algebra, int level, const Weight& a, const Weight& b, const Weight& c) {
            const auto rs = RootSystem::parse(algebra);
            const auto ws = weights(rs, {a, b, c});
            return fusion_coeff(alphabet(rs, level), ws[0], ws[1], ws[2]);
        },
        py::arg("algebra"), py::arg("level"), py::arg("lam"), py::arg("mu"), py::arg("nu"));

    m.def("fusion_table", [](const std::string& algebra, int level) {
        const auto r = ring(algebra, level);
        std::vector<std::tuple<std::size_t, std::size_t, std::size_t, std::int64_t>> out;
        for (const auto& [ijk, n] : r.nonzero_sorted()) out.emplace_back(ijk[0], ijk[1], ijk[2], n);
        return out;
    });

    m.def(
        "block_dimension",
        [](const std::string& algebra, int level, int genus, const std::vector<Weight>& labels) {
            const auto rs = RootSystem::parse(algebra);
            MarkedSurface s{genus, weights(rs, labels)};
            return block_dimension(ring(algebra, level), s);
        },
        py::arg("algebra"), py::arg("level"), py::arg("genus"), py::arg("labels") = std::vector<Weight>{});

    m.def(
        "dehn_twist",
        [](const std::string& algebra, int level, const Weight& label) {
            const auto rs = RootSystem::parse(algebra);
            const auto tw = dehn_twist_eigenvalue(alphabet(rs, level), weights(rs, {label})[0]);
            return py::make_tuple(to_string(tw.exponent), tw.to_string());
        },
        py::arg("algebra"), py::arg("level"), py::arg("label"));

    m.def("three_point_rank", [](int level, int a, int b, int c) {
        const auto r = three_point_rank(level, a, b, c);
        return py::make_tuple(r.rank, r.classical_rank);
    });

    m.def(
        "npoint_block_rank",
        [](int level, const std::vector<int>& labels, const std::vector<std::string>& points) {
            std::vector<Rational> z;
            for (const auto& p : points) z.push_back(parse_rational(p));
            const auto r = npoint_block_rank({level, labels, z});
            return py::make_tuple(r.rank, r.classical_rank);
        },
        py::arg("level"), py::arg("labels"), py::arg("points"));

    m.def("kz_matrices", [](int level, const std::vector<int>& labels) {
        const auto s = kz_system(level, labels);
        std::map<std::pair<int, int>, std::vector<std::vector<std::string>>> out;
        for (const auto& [ij, a] : s.a) out[ij] = matrix_strings(a);
        return out;
    });

    m.def("kohno_violation", [](int level, const std::vector<int>& labels) {
        return find_kohno_violation(kz_system(level, labels));
    });

    m.def(
        "parallel_transport",
        [](int level, const std::vector<int>& labels, const std::vector<std::vector<Complex>>& waypoints, bool closed,
           std::size_t steps) {
            const auto s = kz_system(level, labels);
            const auto r = parallel_transport(s, KZPath{waypoints, closed}, steps);
            return py::make_tuple(r.matrix, r.error_estimate, r.converged);
        },
        py::arg("level"), py::arg("labels"), py::arg("waypoints"), py::arg("closed") = false,
        py::arg("steps") = 10000);

    m.def(
        "verify_virasoro",
        [](int kmax, int degree) {
            std::vector<std::tuple<std::string, std::string, std::string>> out;
            for (const auto& c : check_virasoro_suite(kmax, degree))
                out.emplace_back(c.name, c.window.to_string(), to_string(c.residual_norm));
            return out;
        },
        py::arg("kmax"), py::arg("degree"));

    m.def(
        "run_acceptance",
        [](const std::vector<int>& ids) {
            std::vector<py::dict> out;
            for (const auto& r : run_acceptance(ids)) {
                py::dict d;
                d["id"] = r.id;
                d["title"] = r.title;
                d["status"] = to_string(r.status);
                d["cases"] = r.cases;
                d["detail"] = r.detail;
                out.push_back(d);
            }
            return out;
        },
        py::arg("ids") = std::vector<int>{});

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int status = run_cli(args, out, err);
        return py::make_tuple(status, out.str(), err.str());
    });
}
