#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cq/factor.hpp"
#include "cq/jsonl.hpp"

namespace py = pybind11;
using namespace cq;

namespace pybind11::detail {

// mpz_class <-> python int (decimal-string bridge; exact at any size)
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        value = mpz_class(std::string(py::str(src)));
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

// mpq_class <-> fractions.Fraction
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = mpq_class(mpz_class(std::string(py::str(src))));
            return true;
        }
        handle type = py::type::handle_of(src);
        std::string tn = std::string(py::str(type.attr("__name__")));
        if (tn != "Fraction") return false;
        value = mpq_class(std::string(py::str(src)));
        value.canonicalize();
        return true;
    }

    static handle cast(const mpq_class& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(cq::to_string(v)).release();
    }
};

}  // namespace pybind11::detail

namespace {

std::vector<Rat> poly_coeffs(const ExactPoly& p) {
    std::vector<Rat> out = p.coeffs();
    if (out.empty()) out.emplace_back(0);
    return out;
}

ExactPoly poly_from(const std::vector<Rat>& coeffs) { return ExactPoly(coeffs); }

IntQuartic quartic_from(const std::vector<Rat>& coeffs) {
    return IntQuartic::from_poly(ExactPoly(coeffs));
}

py::dict cert_to_dict(const Certificate& c) {
    py::dict d;
    if (c.z) d["z"] = *c.z;
    if (c.params) d["params"] = *c.params;
    d["poly"] = poly_coeffs(c.polynomial);
    d["poly_str"] = c.polynomial.to_string();
    d["irreducible"] = c.irreducible;
    d["is_c4"] = c.is_c4;
    d["squarefree_a"] = c.squarefree_a;
    d["squarefree_m_part"] = c.squarefree_m_part;
    d["conductor"] = c.conductor ? py::cast(*c.conductor) : py::none();
    d["disc_poly"] = c.disc_poly;
    d["disc_field"] = c.disc_field ? py::cast(*c.disc_field) : py::none();
    d["index_square"] = c.index_square ? py::cast(*c.index_square) : py::none();
    d["monogenic"] = c.monogenic ? py::cast(*c.monogenic) : py::none();
    d["reasons"] = c.reasons;
    return d;
}

py::dict report_to_dict(const GaloisReport& r) {
    py::dict d;
    d["is_c4"] = r.is_c4;
    d["resolvent_rational_roots"] = r.resolvent_rational_roots;
    d["s"] = r.s ? py::cast(*r.s) : py::none();
    d["kernel_E"] = r.kernel_E ? py::cast(*r.kernel_E) : py::none();
    d["split_evidence"] = r.split_evidence ? py::cast(*r.split_evidence) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "cyclic quartic monogenic polynomial toolkit";

    // exact integer utilities
    m.def("factorize", [](const Int& n) {
        Factorization f = factorize(n);
        std::vector<std::pair<Int, unsigned>> fs;
        for (const auto& [p, e] : f.factors) fs.emplace_back(p, e);
        py::dict d;
        d["value"] = f.value;
        d["sign"] = f.sign;
        d["factors"] = fs;
        return d;
    });
    m.def("is_prime", &is_prime);
    m.def("is_squarefree", &is_squarefree);
    m.def("squarefree_kernel", &squarefree_kernel);
    m.def("is_perfect_square", [](const Int& n) -> py::object {
        auto r = is_perfect_square(n);
        return r ? py::cast(*r) : py::none();
    });
    m.def("is_qr_mod", &is_qr_mod);

    // polynomials (lists of Fractions/ints, constant term first)
    m.def("evaluate", [](const std::vector<Rat>& p, const Rat& x) {
        return evaluate(poly_from(p), x);
    });
    m.def("shift", [](const std::vector<Rat>& p, const Rat& r) {
        return poly_coeffs(shift(poly_from(p), r));
    });
    m.def("is_integral", [](const std::vector<Rat>& p) { return is_integral(poly_from(p)); });
    m.def("discriminant", [](const std::vector<Rat>& p) { return discriminant(poly_from(p)); });
    m.def("rational_roots",
          [](const std::vector<Rat>& p) { return rational_roots(poly_from(p)); });
    m.def("quartic_irreducible",
          [](const std::vector<Rat>& p) { return quartic_irreducible(quartic_from(p)); });
    m.def("dlw_reducible", &dlw_reducible);
    m.def("kw_is_c4",
          [](const std::vector<Rat>& p) { return report_to_dict(kw_is_c4(quartic_from(p))); });
    m.def("all_roots_real",
          [](const std::vector<Rat>& p) { return all_roots_real(quartic_from(p)); });

    // construction
    py::class_<GrasParams>(m, "GrasParams")
        .def(py::init([](const Int& a, const Int& b, const Int& g, const Int& m, const Int& x,
                         const Int& y, const Int& z, int chi, py::object t) {
                 std::optional<Int> tt;
                 if (!t.is_none()) tt = t.cast<Int>();
                 return GrasParams(a, b, g, m, x, y, z, chi, tt);
             }),
             py::arg("a"), py::arg("b"), py::arg("g"), py::arg("m"), py::arg("x"), py::arg("y"),
             py::arg("z"), py::arg("chi") = 1, py::arg("t") = py::none())
        .def_readonly("a", &GrasParams::a)
        .def_readonly("b", &GrasParams::b)
        .def_readonly("g", &GrasParams::g)
        .def_readonly("m", &GrasParams::m)
        .def_readonly("x", &GrasParams::x)
        .def_readonly("y", &GrasParams::y)
        .def_readonly("z", &GrasParams::z)
        .def_readonly("chi", &GrasParams::chi)
        .def_property_readonly(
            "t", [](const GrasParams& p) { return p.t ? py::cast(*p.t) : py::none(); })
        .def_property_readonly("conductor", &GrasParams::conductor)
        .def("with_t",
             [](const GrasParams& p, const Int& t) {
                 GrasParams q = p;
                 q.t = t;
                 return q;
             })
        .def("__repr__", [](const GrasParams& p) {
            std::string r = "GrasParams(a=" + to_string(p.a) + ", b=" + to_string(p.b) +
                            ", g=" + to_string(p.g) + ", m=" + to_string(p.m) +
                            ", x=" + to_string(p.x) + ", y=" + to_string(p.y) +
                            ", z=" + to_string(p.z);
            if (p.t) r += ", t=" + to_string(*p.t);
            r += ", chi=" + std::to_string(p.chi) + ")";
            return r;
        });
    m.def("family_params", &family_params);
    m.def("choose_t", &choose_t);
    m.def("gras_polynomial",
          [](const GrasParams& p) { return poly_coeffs(gras_polynomial(p)); });
    m.def("fz_polynomial", [](const Int& z) { return poly_coeffs(fz_polynomial(z)); });
    m.def("fz_presented", [](const Int& z) { return poly_coeffs(fz_presented(z)); });
    m.def("psi_polynomial",
          [](const Int& z) { return poly_coeffs(psi_polynomial(z).poly()); });
    m.def("hasse_integral", &hasse_integral);
    m.def("verify_system", &verify_system);
    m.def("theta_numeric", [](const GrasParams& p, unsigned digits) {
        ThetaNumeric t = theta_numeric(p, digits);
        return std::make_pair(t.theta.get_d(), t.residual.get_d());
    });
    m.def("further_family_a", &further_family_a);
    m.def("further_family_b", &further_family_b);
    m.def("x3y4_family", &x3y4_family);
    m.def("scan_t", [](const GrasParams& p, bool require_hasse) -> py::object {
        auto t = scan_t(p, require_hasse);
        return t ? py::cast(*t) : py::none();
    });

    // conductors
    m.def("sw_conductor", [](const Int& A, const Int& B, const Int& C, const Int& D) {
        return sw_conductor({A, B, C, D});
    });
    m.def("family_canonical", [](const Int& z) {
        auto c = family_canonical(z);
        return std::make_tuple(c.A, c.B, c.C, c.D);
    });
    m.def("canonicalize_params", [](const Int& a, const Int& g, const Int& m) {
        auto c = canonicalize_params(a, g, m);
        return std::make_tuple(c.A, c.B, c.C, c.D);
    });
    m.def("quadratic_conductor", &quadratic_conductor);
    m.def("field_discriminant", &field_discriminant);

    // certification
    m.def("squarefree_conditions", &squarefree_conditions);
    m.def("certify_z", [](const Int& z) { return cert_to_dict(certify_z(z)); });
    m.def("certify_params", [](const GrasParams& p) { return cert_to_dict(certify_params(p)); });

    // search
    m.def("solve_first_eq", &solve_first_eq);
    m.def("solve_second_eq", &solve_second_eq);
    m.def(
        "sweep",
        [](long a_max, long b_max, long x_max, long g_max, int chi, unsigned jobs) {
            SweepBounds bounds{a_max, b_max, x_max, g_max};
            std::vector<py::dict> out;
            for (const auto& h : sweep(bounds, chi, jobs)) {
                py::dict d = cert_to_dict(h.certificate);
                d["params"] = h.params;
                out.push_back(std::move(d));
            }
            return out;
        },
        py::arg("a_max"), py::arg("b_max"), py::arg("x_max"), py::arg("g_max"),
        py::arg("chi") = 1, py::arg("jobs") = 1);
    m.def("xy_constraint_search", [](const Int& c, const Int& g_max) {
        std::vector<std::tuple<Int, Int, int>> out;
        for (const auto& h : xy_constraint_search(c, g_max))
            out.emplace_back(h.g, h.m, h.sign);
        return out;
    });
    m.def("x_check", &x_check);
    m.def("x_check_even", &x_check_even);
}
