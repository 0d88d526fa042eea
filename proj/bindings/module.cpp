#include "hilbproj/errors.hpp"
#include "hilbproj/report_json.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace hilbproj;

namespace {

Hypersurface make_hypersurface(const std::string& polynomial, int min_vars) {
    return Hypersurface(parse_homogeneous_form(polynomial, min_vars));
}

Center make_center(const std::string& coords) { return Center{parse_point(coords)}; }

std::vector<Rat> make_direction(const std::string& coords) { return parse_point(coords); }

FiberProfile make_profile(const std::vector<int>& parts) { return FiberProfile(parts); }

std::int64_t int_or_throw(const Int& n, const char* what) { return to_int64_checked(n, what); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact kernels for hypersurface projections: fiber profiles, Hilbert-scheme "
              "fiber combinatorics, genus computations, and Mori-cone data.";

    py::register_exception<ParseError>(m, "PolynomialParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_ValueError);
    py::register_exception<InternalError>(m, "InternalConsistencyError", PyExc_RuntimeError);

    py::class_<Hypersurface>(m, "Hypersurface")
        .def(py::init(&make_hypersurface), py::arg("polynomial"), py::arg("min_vars") = 0)
        .def_property_readonly("degree", [](const Hypersurface& a) { return a.degree; })
        .def_property_readonly("ambient_dim", [](const Hypersurface& a) { return a.ambient_dim; })
        .def_property_readonly("m", &Hypersurface::m)
        .def("__repr__", [](const Hypersurface& a) {
            return "Hypersurface(" + a.form.str() + ")";
        });

    m.def("fiber_profile",
          [](const Hypersurface& a, const std::string& center, const std::string& direction) {
              return fiber_profile(a, make_center(center), make_direction(direction)).parts();
          },
          py::arg("hypersurface"), py::arg("center"), py::arg("direction"),
          "Multiplicities of the line section, sorted non-increasing.");

    m.def("singular_count_on_line",
          [](const Hypersurface& a, const std::string& center, const std::string& direction) {
              return singular_count_on_line(a, make_center(center), make_direction(direction));
          },
          py::arg("hypersurface"), py::arg("center"), py::arg("direction"));

    m.def("pencil_report_json",
          [](const Hypersurface& a, const std::string& center, bool certify, bool emit_disc) {
              const Center z = make_center(center);
              if (!certify) return pencil_json(pencil_discriminant(a, z), emit_disc).dump();
              auto [report, cert] = pencil_with_certificate(a, z);
              Json out = pencil_json(report, emit_disc);
              const Json extra = certificate_json(cert);
              for (const auto& [key, value] : extra.items()) out[key] = value;
              return out.dump();
          },
          py::arg("hypersurface"), py::arg("center"), py::arg("certify") = false,
          py::arg("emit_disc") = false);

    m.def("is_general_center",
          [](const Hypersurface& a, const std::string& center) {
              return is_general_center(a, make_center(center)).general;
          },
          py::arg("hypersurface"), py::arg("center"));

    m.def("multiplicity_bound",
          [](const std::vector<int>& profile, int m_dim) {
              return multiplicity_bound(make_profile(profile), m_dim);
          },
          py::arg("profile"), py::arg("m"),
          "sum floor(h_i/2) <= m, the bound every fiber of a general projection satisfies.");

    m.def("surface_profile_expected", [](const std::vector<int>& profile) {
        return surface_profile_expected(make_profile(profile));
    });

    m.def("enumerate_fiber_points",
          [](const std::vector<int>& profile, int a) {
              std::vector<std::vector<int>> out;
              for (const SubschemeSelector& s : enumerate_fiber_points(make_profile(profile), a))
                  out.push_back(s.k);
              return out;
          },
          py::arg("profile"), py::arg("a"));

    m.def("tangent_dim",
          [](const std::vector<int>& profile, const std::vector<int>& k) {
              return tangent_dim(SubschemeSelector(make_profile(profile), k));
          },
          py::arg("profile"), py::arg("k"));

    m.def("pi_smooth_at",
          [](const std::vector<int>& profile, const std::vector<int>& k) {
              return pi_smooth_at(SubschemeSelector(make_profile(profile), k));
          },
          py::arg("profile"), py::arg("k"));

    m.def("ramification_index",
          [](const std::vector<int>& profile, const std::vector<int>& k) {
              return ramification_index(SubschemeSelector(make_profile(profile), k));
          },
          py::arg("profile"), py::arg("k"));

    m.def("punctual_hom_ext_dim", &punctual_hom_ext_dim, py::arg("h"), py::arg("k"));
    m.def("brute_hom_dim", &brute_hom_dim, py::arg("h"), py::arg("k"));

    m.def("hilb_report_json",
          [](const std::vector<int>& profile, int a) {
              return hilb_json(make_profile(profile), a).dump();
          },
          py::arg("profile"), py::arg("a"));

    m.def("ramification_count_over_branch",
          [](int d, int a) {
              return int_or_throw(ramification_count_over_branch(d, a), "ramification count");
          },
          py::arg("d"), py::arg("a"));

    m.def("hilb_genus",
          [](int d, int a) { return int_or_throw(hilb_genus(d, a), "genus"); }, py::arg("d"),
          py::arg("a"));
    m.def("hurwitz_genus",
          [](int d, int a) { return int_or_throw(hurwitz_genus(d, a), "genus"); }, py::arg("d"),
          py::arg("a"));
    m.def("vmrt_degree",
          [](int d, int a) { return int_or_throw(vmrt_degree(d, a), "degree"); }, py::arg("d"),
          py::arg("a"));
    m.def("plane_vmrt_arith_genus",
          [](std::int64_t B) { return int_or_throw(plane_vmrt_arith_genus(Int(static_cast<long>(B))), "genus"); },
          py::arg("B"));
    m.def("tau_is_isomorphism", &tau_is_isomorphism, py::arg("d"), py::arg("a"));
    m.def("iso_obstruction_identity", &iso_obstruction_identity, py::arg("d"), py::arg("a"));
    m.def("branch_curve_nodes",
          [](int d) { return int_or_throw(branch_curve_nodes(d), "node count"); }, py::arg("d"));

    m.def("genus_report_json",
          [](const Hypersurface& a_surf, const std::string& center, int a) {
              return genus_data_json(hurwitz_genus_from_data(a_surf, make_center(center), a)).dump();
          },
          py::arg("hypersurface"), py::arg("center"), py::arg("a"));

    m.def("cone_report_json",
          [](int n, int a, int d, int i_Z, int delta) {
              return cone_json(FamilyParams{n, a, d, i_Z < 0 ? n : i_Z, delta}).dump();
          },
          py::arg("n"), py::arg("a"), py::arg("d"), py::arg("i_Z") = -1, py::arg("delta") = 1);

    m.def("is_fano",
          [](int n, int a, int d, int i_Z, int delta) {
              return is_fano(FamilyParams{n, a, d, i_Z < 0 ? n : i_Z, delta});
          },
          py::arg("n"), py::arg("a"), py::arg("d"), py::arg("i_Z") = -1, py::arg("delta") = 1);

    m.def("classify_fano_threefolds_json", []() { return classify_json().dump(); });

    m.def("monodromy_report_json",
          [](const Hypersurface& a, const std::string& center, int samples, std::uint64_t seed,
             std::uint64_t prime_bound) {
              return monodromy_json(
                         run_monodromy_sampling(a, make_center(center), samples, seed, prime_bound),
                         samples)
                  .dump();
          },
          py::arg("hypersurface"), py::arg("center"), py::arg("samples"), py::arg("seed"),
          py::arg("prime_bound") = 500);
}
