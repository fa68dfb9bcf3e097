#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zkern/diagonal.hpp"
#include "zkern/fredholm.hpp"
#include "zkern/kernels.hpp"
#include "zkern/monodromy.hpp"
#include "zkern/prediction.hpp"
#include "zkern/specfun.hpp"
#include "zkern/spectral.hpp"
#include "zkern/verify.hpp"

namespace py = pybind11;

PYBIND11_MODULE(zkern, m) {
    m.doc() = "integrable-kernel determinants, spectral densities, and transfer matrices";

    m.def("erf", &zkern::erf, py::arg("x"));
    m.def("gaussian_det_asymptotic", &zkern::gaussian_det_asymptotic, py::arg("zeta"),
          py::arg("nterms"));
    m.def("airy", [](double x) {
        const zkern::AiryPair p = zkern::airy(x);
        return py::make_tuple(p.Ai, p.AiPrime);
    }, py::arg("x"));
    m.def("bessel_j", &zkern::bessel_j, py::arg("nu"), py::arg("x"));
    m.def("ln_gamma", &zkern::ln_gamma, py::arg("z"));

    py::class_<zkern::KernelProfile>(m, "KernelProfile")
        .def_readonly("a", &zkern::KernelProfile::a)
        .def_readonly("b", &zkern::KernelProfile::b)
        .def_readonly("name", &zkern::KernelProfile::name)
        .def("phi", &zkern::KernelProfile::phi, py::arg("x"))
        .def("in_domain", &zkern::KernelProfile::in_domain, py::arg("x"));

    m.def("sine_profile", &zkern::sine_profile, py::arg("gamma"));
    m.def("bessel_profile", &zkern::bessel_profile, py::arg("alpha"), py::arg("gamma"));
    m.def("bessel_sqrtarg_profile", &zkern::bessel_sqrtarg_profile, py::arg("alpha"),
          py::arg("gamma"));
    m.def("gaussian_profile", &zkern::gaussian_profile);
    m.def("airy_profile", &zkern::airy_profile);
    m.def("custom_profile_csv", &zkern::custom_profile_csv, py::arg("path"));

    m.def("kernel_eval", &zkern::kernel_eval, py::arg("profile"), py::arg("x"), py::arg("t"));
    m.def("airy_truncation_length", &zkern::airy_truncation_length, py::arg("zeta"));
    m.def("bessel_cd", &zkern::bessel_cd, py::arg("x"), py::arg("t"), py::arg("alpha"),
          py::arg("gamma"));
    m.def("airy_cd", &zkern::airy_cd, py::arg("x"), py::arg("t"));

    m.def("jmatrix", &zkern::jmatrix);
    py::class_<zkern::JModule2>(m, "JModule2")
        .def_readonly("psi", &zkern::JModule2::psi)
        .def_readonly("R", &zkern::JModule2::R)
        .def_readonly("Rsq", &zkern::JModule2::Rsq)
        .def_readonly("Rinv", &zkern::JModule2::Rinv)
        .def_readonly("D", &zkern::JModule2::D);
    m.def("zclass_jmodule", &zkern::zclass_jmodule, py::arg("psi"));
    m.def("f1_vector", &zkern::f1_vector, py::arg("profile"), py::arg("x"));

    py::class_<zkern::DiscretizedOperator>(m, "DiscretizedOperator")
        .def_readonly("matrix", &zkern::DiscretizedOperator::matrix)
        .def_readonly("symmetrized", &zkern::DiscretizedOperator::symmetrized)
        .def_property_readonly("nodes",
                               [](const zkern::DiscretizedOperator& op) { return op.rule.nodes; })
        .def_property_readonly(
            "weights", [](const zkern::DiscretizedOperator& op) { return op.rule.weights; });
    m.def("discretize", &zkern::discretize, py::arg("profile"), py::arg("left"),
          py::arg("right"), py::arg("n"));
    m.def("log_det", &zkern::log_det, py::arg("op"));
    m.def("log_det_auto", [](const zkern::KernelProfile& p, double l, double r, int n,
                             double tol, int max_n) {
        int used = 0;
        const double v = zkern::log_det_auto(p, l, r, n, tol, max_n, &used);
        return py::make_tuple(v, used);
    }, py::arg("profile"), py::arg("left"), py::arg("right"), py::arg("n") = 64,
          py::arg("tol") = 1e-10, py::arg("max_n") = 512);
    m.def("resolve", &zkern::resolve, py::arg("op"), py::arg("rhs"));
    m.def("operator_norm", &zkern::operator_norm, py::arg("op"));
    m.def("lower_factor", &zkern::lower_factor, py::arg("op"));
    m.def("q_function", &zkern::q_function, py::arg("op"), py::arg("profile"));

    m.def("sigma1_at", &zkern::sigma1_at, py::arg("profile"), py::arg("a"), py::arg("zeta"),
          py::arg("n"));
    py::class_<zkern::DensityNode>(m, "DensityNode")
        .def_readonly("x", &zkern::DensityNode::x)
        .def_readonly("d", &zkern::DensityNode::d);
    m.def("sigma1_density", &zkern::sigma1_density, py::arg("profile"), py::arg("a"),
          py::arg("b"), py::arg("n"));
    m.def("density_fd", &zkern::density_fd, py::arg("profile"), py::arg("a"), py::arg("b"),
          py::arg("zeta_grid"), py::arg("n"));
    m.def("m_matrix", &zkern::m_matrix, py::arg("sigma1"));
    py::class_<zkern::DizRecord>(m, "DizRecord")
        .def_readonly("zeta", &zkern::DizRecord::zeta)
        .def_readonly("lhs", &zkern::DizRecord::lhs)
        .def_readonly("rhs", &zkern::DizRecord::rhs)
        .def_readonly("residual", &zkern::DizRecord::residual);
    m.def("diz_residual", &zkern::diz_residual, py::arg("gamma"), py::arg("zeta_grid"),
          py::arg("n"));

    py::class_<zkern::DensityField>(m, "DensityField")
        .def(py::init<const std::vector<zkern::DensityNode>&>(), py::arg("samples"))
        .def("at", &zkern::DensityField::at, py::arg("x"));
    m.def("density_field", &zkern::density_field, py::arg("samples"));
    py::class_<zkern::TransferMatrix2>(m, "TransferMatrix2")
        .def_readonly("W", &zkern::TransferMatrix2::W)
        .def_readonly("z", &zkern::TransferMatrix2::z)
        .def_readonly("steps", &zkern::TransferMatrix2::steps);
    m.def("transfer", &zkern::transfer, py::arg("density"), py::arg("a"), py::arg("b"),
          py::arg("z"), py::arg("steps"));
    m.def("boundary_pair", &zkern::boundary_pair, py::arg("density"), py::arg("a"),
          py::arg("b"), py::arg("x"), py::arg("eps"), py::arg("steps"));
    m.def("jump_residual", &zkern::jump_residual, py::arg("w_plus"), py::arg("w_minus"),
          py::arg("r_squared"));
    m.def("split_residual", &zkern::split_residual, py::arg("density"), py::arg("a"),
          py::arg("c"), py::arg("b"), py::arg("z"), py::arg("steps"));
    m.def("asymptotic_residual", &zkern::asymptotic_residual, py::arg("density"), py::arg("a"),
          py::arg("b"), py::arg("sigma1_total"), py::arg("radii"), py::arg("steps") = 2000);

    py::class_<zkern::ModulusProfile>(m, "ModulusProfile")
        .def_readonly("a", &zkern::ModulusProfile::a)
        .def_readonly("b", &zkern::ModulusProfile::b)
        .def_readonly("logM", &zkern::ModulusProfile::logM);
    m.def("modulus_const", &zkern::modulus_const, py::arg("a"), py::arg("b"), py::arg("logval"));
    m.def("modulus_from_csv", &zkern::modulus_from_csv, py::arg("path"));
    m.def("outer_transfer", &zkern::outer_transfer, py::arg("profile"), py::arg("z"));
    m.def("maximality_margin", &zkern::maximality_margin, py::arg("profile"), py::arg("z"),
          py::arg("w"));

    py::class_<zkern::PolySample>(m, "PolySample")
        .def(py::init([](std::vector<std::complex<double>> coeffs, double ell, double alpha) {
                 zkern::PolySample p;
                 p.coeffs = std::move(coeffs);
                 p.ell = ell;
                 p.alpha = alpha;
                 return p;
             }),
             py::arg("coeffs"), py::arg("ell") = 1.0, py::arg("alpha") = 0.0)
        .def_readwrite("coeffs", &zkern::PolySample::coeffs)
        .def_readwrite("ell", &zkern::PolySample::ell)
        .def_readwrite("alpha", &zkern::PolySample::alpha);
    m.def("poly_eval", &zkern::poly_eval, py::arg("p"), py::arg("x"));
    m.def("volterra_A", &zkern::volterra_A, py::arg("p"), py::arg("x"));
    m.def("frac_power", &zkern::frac_power, py::arg("p"), py::arg("sign"), py::arg("x"));
    m.def("similarity_residual", &zkern::similarity_residual, py::arg("p"), py::arg("grid"));

    m.def("verification_json",
          []() { return zkern::report_json(zkern::run_verification()); });
}
