#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coltrs/certify.hpp"
#include "coltrs/codec.hpp"
#include "coltrs/construct.hpp"
#include "coltrs/examples.hpp"
#include "coltrs/galois.hpp"
#include "coltrs/gfmatrix.hpp"
#include "coltrs/io.hpp"

namespace py = pybind11;
using namespace coltrs;

namespace {

// Field is immutable and handed around as shared_ptr<const Field>; the
// wrapper keeps that ownership model out of the binding layer.
struct PyField {
    FieldPtr f;
    const Field& get() const { return *f; }
};

PyField wrap(const FieldPtr& f) { return PyField{f}; }

py::dict report_dict(const CertificateReport& r) {
    py::dict d;
    d["n"] = r.n;
    d["k"] = r.k;
    d["d"] = r.d ? py::cast(*r.d) : py::object(py::none());
    d["is_mds"] = r.is_mds;
    d["witness"] = r.witness;
    d["schur_dim"] = r.schur_dim;
    d["non_grs"] = r.non_grs ? py::cast(non_grs_name(*r.non_grs)) : py::object(py::none());
    d["dual_ok"] = r.dual_ok;
    d["mode"] = r.mode;
    return d;
}

std::vector<std::uint8_t> erasure_mask(std::size_t n, const std::vector<std::size_t>& positions) {
    std::vector<std::uint8_t> mask(n, 0);
    for (std::size_t p : positions) {
        if (p >= n) throw std::invalid_argument("erasure position out of range");
        mask[p] = 1;
    }
    return mask;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-field twisted evaluation codes";

    py::class_<PyField>(m, "Field")
        .def_static(
            "make",
            [](std::uint32_t p, std::uint32_t mm, const std::vector<std::uint32_t>& modulus,
               std::int64_t primitive) { return wrap(Field::make(p, mm, modulus, primitive)); },
            py::arg("p"), py::arg("m"), py::arg("modulus") = std::vector<std::uint32_t>{},
            py::arg("primitive") = -1)
        .def_static("parse", [](const std::string& s) { return wrap(Field::parse(s)); })
        .def_property_readonly("p", [](const PyField& s) { return s.get().p(); })
        .def_property_readonly("m", [](const PyField& s) { return s.get().m(); })
        .def_property_readonly("q", [](const PyField& s) { return s.get().q(); })
        .def_property_readonly("modulus", [](const PyField& s) { return s.get().modulus(); })
        .def_property_readonly("primitive", [](const PyField& s) { return s.get().primitive(); })
        .def("add", [](const PyField& s, gf a, gf b) { return s.get().add(a, b); })
        .def("sub", [](const PyField& s, gf a, gf b) { return s.get().sub(a, b); })
        .def("neg", [](const PyField& s, gf a) { return s.get().neg(a); })
        .def("mul", [](const PyField& s, gf a, gf b) { return s.get().mul(a, b); })
        .def("div", [](const PyField& s, gf a, gf b) { return s.get().div(a, b); })
        .def("inv", [](const PyField& s, gf a) { return s.get().inv(a); })
        .def("pow", [](const PyField& s, gf a, std::int64_t e) { return s.get().pow(a, e); })
        .def("w_pow", [](const PyField& s, std::int64_t e) { return s.get().w_pow(e); })
        .def("log", [](const PyField& s, gf a) { return s.get().log(a); })
        .def("element_order", [](const PyField& s, gf a) { return s.get().element_order(a); })
        .def("coeffs", [](const PyField& s, gf a) { return s.get().coeffs(a); })
        .def("from_coeffs",
             [](const PyField& s, const std::vector<std::uint32_t>& cs) {
                 return s.get().from_coeffs(cs);
             })
        .def("format", [](const PyField& s, gf a) { return s.get().format(a); })
        .def("parse_element",
             [](const PyField& s, const std::string& tok) { return s.get().parse_element(tok); })
        .def("describe", [](const PyField& s) { return s.get().describe(); })
        .def("__eq__", [](const PyField& s, const PyField& o) { return s.get() == o.get(); })
        .def("__repr__", [](const PyField& s) { return s.get().describe(); });

    m.def("subgroup_elements", [](const PyField& f, std::uint32_t d) {
        return subgroup(f.f, d).elements;
    });

    py::class_<Matrix>(m, "Matrix")
        .def_property_readonly("rows", [](const Matrix& M) { return M.rows; })
        .def_property_readonly("cols", [](const Matrix& M) { return M.cols; })
        .def_property_readonly("field", [](const Matrix& M) { return wrap(M.field); })
        .def("at", [](const Matrix& M, std::size_t r, std::size_t c) { return M.at(r, c); })
        .def("row",
             [](const Matrix& M, std::size_t r) {
                 if (r >= M.rows) throw std::out_of_range("row out of range");
                 std::vector<gf> out(M.cols);
                 for (std::size_t c = 0; c < M.cols; ++c) out[c] = M.at(r, c);
                 return out;
             })
        .def("tokens",
             [](const Matrix& M) {
                 std::vector<std::vector<std::string>> out(M.rows);
                 for (std::size_t r = 0; r < M.rows; ++r)
                     for (std::size_t c = 0; c < M.cols; ++c)
                         out[r].push_back(M.field->format(M.at(r, c)));
                 return out;
             })
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__repr__", [](const Matrix& M) {
            return "<Matrix " + std::to_string(M.rows) + "x" + std::to_string(M.cols) + " over " +
                   M.field->describe() + ">";
        });

    m.def("rank", [](const Matrix& M) { return rank(M); });
    m.def("det", [](const Matrix& M) { return det(M); });
    m.def("nullspace", [](const Matrix& M) { return nullspace(M); });
    m.def("mat_mul", [](const Matrix& A, const Matrix& B) { return mat_mul(A, B); });
    m.def("transpose", [](const Matrix& M) { return transpose(M); });

    py::class_<CodeSpec>(m, "CodeSpec")
        .def_property_readonly("field", [](const CodeSpec& s) { return wrap(s.field); })
        .def_property_readonly("k", [](const CodeSpec& s) { return s.k; })
        .def_property_readonly("b", [](const CodeSpec& s) { return s.b; })
        .def_property_readonly("c", [](const CodeSpec& s) { return s.c; })
        .def_property_readonly("subgroup_order", [](const CodeSpec& s) { return s.subgroup_order; })
        .def_property_readonly("mu_exponents", [](const CodeSpec& s) { return s.mu_exponents; })
        .def_property_readonly("lambdas", [](const CodeSpec& s) { return s.lambdas; })
        .def_property_readonly("extended", [](const CodeSpec& s) { return s.extended; })
        .def_property_readonly("variant", [](const CodeSpec& s) { return variant_name(s.variant); })
        .def_property_readonly("points", [](const CodeSpec& s) { return s.points; })
        .def_property_readonly("n", [](const CodeSpec& s) { return s.n(); })
        .def("mus", [](const CodeSpec& s) { return s.mus(); })
        .def("to_json", [](const CodeSpec& s) { return spec_to_json(s); })
        .def("__repr__", [](const CodeSpec& s) {
            return "<CodeSpec [" + std::to_string(s.n()) + "," + std::to_string(s.k) + "] over " +
                   s.field->describe() + ">";
        });

    m.def(
        "make_spec",
        [](const PyField& f, std::uint32_t k, gf b, gf c, std::uint32_t subgroup_order,
           const std::vector<std::uint32_t>& mu_exponents, const std::vector<gf>& lambdas,
           bool extended, const std::string& variant) {
            return make_spec(f.f, k, b, c, subgroup_order, mu_exponents, lambdas, extended,
                             variant_from_name(variant));
        },
        py::arg("field"), py::arg("k"), py::arg("b"), py::arg("c"), py::arg("subgroup_order"),
        py::arg("mu_exponents"), py::arg("lambdas"), py::arg("extended") = false,
        py::arg("variant") = "generic");

    m.def("eval_points", [](const PyField& f, gf b, gf c, const std::vector<gf>& mus) {
        return eval_points(f.f, b, c, mus);
    });

    m.def(
        "gen_rs",
        [](const PyField& f, const std::vector<gf>& points, std::uint32_t k, bool extended) {
            return gen_rs(f.f, points, k, extended);
        },
        py::arg("field"), py::arg("points"), py::arg("k"), py::arg("extended") = false);

    m.def("generator", [](const CodeSpec& s) { return generator(s); });

    m.def(
        "search_spec",
        [](const PyField& f, std::size_t n, std::uint32_t k, std::optional<gf> b,
           std::optional<gf> c, std::optional<std::uint32_t> subgroup_order,
           std::optional<std::vector<std::uint32_t>> mu_exponents,
           std::optional<std::vector<gf>> lambdas, std::optional<bool> extended) {
            SearchChoices ch;
            ch.b = b;
            ch.c = c;
            ch.subgroup_order = subgroup_order;
            ch.mu_exponents = std::move(mu_exponents);
            ch.lambdas = std::move(lambdas);
            ch.extended = extended;
            return search_spec(f.f, n, k, ch);
        },
        py::arg("field"), py::arg("n"), py::arg("k"), py::arg("b") = std::nullopt,
        py::arg("c") = std::nullopt, py::arg("subgroup_order") = std::nullopt,
        py::arg("mu_exponents") = std::nullopt, py::arg("lambdas") = std::nullopt,
        py::arg("extended") = std::nullopt);

    m.def(
        "family_construct",
        [](const PyField& f, std::uint32_t k, const std::string& variant, const std::string& shape) {
            return family_construct(f.f, k, variant_from_name(variant), shape_from_name(shape));
        },
        py::arg("field"), py::arg("k"), py::arg("variant"), py::arg("shape") = "two-extended");

    m.def(
        "oracle_mds",
        [](const Matrix& G, unsigned jobs) {
            MdsResult r = oracle_mds(G, jobs);
            return py::make_tuple(r.is_mds, r.witness);
        },
        py::arg("G"), py::arg("jobs") = 0);

    m.def("criterion_mds", [](const CodeSpec& s) {
        MdsResult r = criterion_mds(s);
        return py::make_tuple(r.is_mds, r.witness);
    });

    m.def(
        "min_distance", [](const Matrix& G, unsigned jobs) { return min_distance(G, jobs); },
        py::arg("G"), py::arg("jobs") = 0);

    m.def("schur_square", [](const Matrix& G) {
        SchurResult r = schur_square(G);
        return py::make_tuple(r.basis, r.dim);
    });

    m.def("non_grs_certificate",
          [](const Matrix& G, std::uint32_t k) { return non_grs_name(non_grs_certificate(G, k)); });

    m.def("parity_closed_form", [](const CodeSpec& s) { return parity_closed_form(s); });
    m.def("dual_oracle", [](const Matrix& G) { return dual_oracle(G); });

    m.def(
        "certify",
        [](const CodeSpec& s, const std::string& mode, unsigned jobs) {
            return report_dict(certify(s, mode, jobs));
        },
        py::arg("spec"), py::arg("mode") = "both", py::arg("jobs") = 0);

    m.def(
        "certify_matrix",
        [](const Matrix& G, unsigned jobs) { return report_dict(certify_matrix(G, jobs)); },
        py::arg("G"), py::arg("jobs") = 0);

    m.def("encode", [](const Matrix& G, const std::vector<gf>& msg) { return encode(G, msg); });

    m.def(
        "erasure_decode",
        [](const Matrix& G, const std::vector<gf>& symbols,
           const std::vector<std::size_t>& erased_positions) {
            Codeword cw;
            cw.symbols = symbols;
            cw.erased = erasure_mask(symbols.size(), erased_positions);
            return erasure_decode(G, cw);
        },
        py::arg("G"), py::arg("symbols"), py::arg("erased_positions") = std::vector<std::size_t>{});

    m.def("matrix_to_csv", [](const Matrix& M) { return matrix_to_csv(M); });
    m.def("matrix_from_csv", [](const std::string& s) { return matrix_from_csv(s); });
    m.def("spec_to_json", [](const CodeSpec& s) { return spec_to_json(s); });
    m.def("spec_from_json", [](const std::string& s) { return spec_from_json(s); });

    m.def("reference_example", [](int id) {
        ReferenceExample ex = reference_example(id);
        py::dict d;
        d["id"] = ex.id;
        d["spec"] = ex.spec;
        d["G"] = ex.G;
        d["H"] = ex.H;
        d["d"] = ex.d;
        d["schur_dim"] = ex.schur_dim;
        d["schur_d"] = ex.schur_d;
        return d;
    });
    m.def("reference_spec_canonical", [](int id) { return reference_spec_canonical(id); });
}
