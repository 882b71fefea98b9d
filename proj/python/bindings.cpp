#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "thickening/closed_forms.hpp"
#include "thickening/cohomology.hpp"
#include "thickening/filtration.hpp"
#include "thickening/partitions.hpp"
#include "thickening/schur.hpp"

namespace py = pybind11;
using namespace thickening;

namespace {

// Python ints are arbitrary precision; go through the decimal string.
py::object to_py(const BigInt& v) { return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10)); }

py::object to_fraction(const ExactRatio& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(numerator(r)), to_py(denominator(r)));
}


py::dict summand_dict(const LayerSummand& s) {
  py::dict d;
  d["epsilon"] = s.epsilon;
  d["lambda"] = py::tuple(py::cast(s.lambda.entries()));
  d["lambda_s"] = py::tuple(py::cast(s.lambda_s.entries()));
  d["dim"] = to_py(s.dim);
  return d;
}

}  // namespace

PYBIND11_MODULE(_thickening, m) {
  m.doc() = "Exact lengths of local cohomology of thickenings of 2x2 minors of a 2 x m matrix";

  py::register_exception<IntegralityError>(m, "IntegralityError", PyExc_ArithmeticError);

  m.def("conjugate", [](std::vector<std::int64_t> parts) { return conjugate(Partition(std::move(parts))).parts(); },
        py::arg("parts"));
  m.def("contains", [](std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
        return contains(Partition(std::move(x)), Partition(std::move(y)));
      });
  m.def("det_support", [](std::vector<std::int64_t> x) { return det_support(Partition(std::move(x))); });

  m.def("weyl_dim", [](std::vector<std::int64_t> weight) {
        const DominantWeight w(std::move(weight));
        return to_py(weyl_dim(w, w.length()));
      }, py::arg("weight"), "Dimension of S_weight C^N with N = len(weight).");
  m.def("ssyt_count", [](std::vector<std::int64_t> shape, std::size_t n) { return to_py(ssyt_count(Partition(std::move(shape)), n)); },
        py::arg("shape"), py::arg("n"));
  m.def("shift_normalize", [](std::vector<std::int64_t> weight) {
        const auto r = shift_normalize(DominantWeight(std::move(weight)));
        return py::make_tuple(r.partition.parts(), r.shift);
      });

  m.def("enumerate_z", [](std::int64_t n, std::int64_t d, std::int64_t t) {
        py::list out;
        for (const auto& e : enumerate_Z(n, d, t)) out.append(py::make_tuple(py::tuple(py::cast(e.z.padded(static_cast<std::size_t>(n)))), e.l));
        return out;
      }, py::arg("n"), py::arg("D"), py::arg("t"));
  m.def("select_st", [](std::int64_t m_, std::int64_t j) {
        const auto r = select_st(m_, j);
        return py::make_tuple(r.t1, r.s);
      });
  m.def("enumerate_w", [](std::int64_t z, std::int64_t m_) {
        py::list out;
        for (const auto& w : enumerate_W(z, m_)) out.append(py::tuple(py::cast(w.entries())));
        return out;
      });
  m.def("layer_summands", [](std::int64_t m_, std::int64_t t) {
        py::list out;
        for (const auto& s : layer_summands(m_, t)) out.append(summand_dict(s));
        return out;
      });
  m.def("layer_length_via_decomposition", [](std::int64_t m_, std::int64_t t) { return to_py(layer_length_via_decomposition(m_, t)); });
  m.def("cumulative_length_via_decomposition", [](std::int64_t m_, std::int64_t t) { return to_py(cumulative_length_via_decomposition(m_, t)); });

  m.def("binom", [](std::int64_t n, std::int64_t k) { return to_py(binom(n, k)); });
  m.def("layer_length_closed", [](std::int64_t m_, std::int64_t t) { return to_py(layer_length_closed(m_, t)); });
  m.def("cumulative_length", [](std::int64_t m_, std::int64_t t) { return to_py(cumulative_length(m_, t)); });
  m.def("epsilon3", [](std::int64_t m_) { return to_fraction(epsilon3(m_)); });
  m.def("catalan", [](std::int64_t m_) { return to_py(catalan(m_)); });
  m.def("identity_sum_check", &identity_sum_check);
  m.def("cumulative_identity_check", &cumulative_identity_check);

  m.def("nonvanishing_hi_indices", &nonvanishing_hi_indices);
  m.def("dual_index", &dual_index, py::arg("m"), py::arg("n"), py::arg("j"));
  m.def("local_cohomology_length", [](std::int64_t m_, std::int64_t t, std::int64_t j) -> py::object {
        const LengthValue v = local_cohomology_length(m_, t, j);
        if (v.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
        if (v.is_zero()) return py::int_(0);
        return to_py(v.value());
      }, py::arg("m"), py::arg("t"), py::arg("j") = 3,
      "Length of H^j_m(R/I^t): an int, or math.inf for the top index.");
}
