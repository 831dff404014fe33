#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "bhat/errors.hpp"
#include "bhat/verifier.hpp"

namespace py = pybind11;
using namespace bhat;

namespace {

py::object json_loads(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

std::string rational_text(const Rational& q) { return to_string(q); }

// A filtration over k[x,y]/m^N, with N chosen from the windows when omitted.
class Pair {
 public:
  Pair(const std::string& i, const std::string& j, Coeff prime, std::optional<int> order, int r_max,
       int s_max)
      : r_max_(r_max), s_max_(s_max) {
    if (!order) {
      auto probe = std::make_shared<const TruncatedAlgebra>(PrimeField(prime), 256);
      const int ti = *ideal_from_text(probe, i).adequacy();
      const int tj = *ideal_from_text(probe, j).adequacy();
      const int k_hi = KBand{}.verify_hi;
      order = 8 + (r_max + k_hi + 1) * ti + (s_max + k_hi + 1) * tj;
    }
    alg_ = std::make_shared<const TruncatedAlgebra>(PrimeField(prime), *order);
    f_ = std::make_unique<BiFiltration>(ideal_from_text(alg_, i), ideal_from_text(alg_, j));
  }

  int order() const { return alg_->order(); }
  Coeff prime() const { return alg_->field().modulus(); }
  std::int64_t length(int r, int s) const { return f_->length(r, s); }

  std::vector<std::vector<std::int64_t>> table(std::optional<int> r_max, std::optional<int> s_max) const {
    py::gil_scoped_release release;
    return length_table(*f_, r_max.value_or(r_max_), s_max.value_or(s_max_), 1).values;
  }

  py::object coefficients() const {
    std::string text;
    {
      py::gil_scoped_release release;
      text = coefficient_report(*f_, r_max_, s_max_).to_json();
    }
    return json_loads(text);
  }

  py::dict classify_h2(int r, int s, std::uint64_t seed) const {
    H2Classification c;
    {
      py::gil_scoped_release release;
      const auto rep = coefficient_report(*f_, r_max_, s_max_);
      const KoszulEngine engine(*f_, sample_joint_reduction(*f_, seed));
      c = engine.classify_h2(r, s, rep);
    }
    py::dict d;
    d["r"] = c.r;
    d["s"] = c.s;
    d["verdict"] = to_string(c.verdict);
    d["slope"] = rational_text(c.c1);
    d["intercept"] = rational_text(c.c0);
    d["expected_slope"] = rational_text(c.expected_slope);
    d["closed_form"] = c.closed_form ? py::object(py::str(rational_text(*c.closed_form))) : py::none();
    d["lengths"] = c.lengths;
    d["note"] = c.note;
    return d;
  }

  py::object verify(std::uint64_t seed) const {
    std::string text;
    {
      py::gil_scoped_release release;
      VerifierOptions opt;
      opt.r_max = r_max_;
      opt.s_max = s_max_;
      opt.seed = seed;
      text = Verifier(*f_, opt).run().to_json();
    }
    return json_loads(text);
  }

 private:
  AlgebraPtr alg_;
  std::unique_ptr<BiFiltration> f_;
  int r_max_, s_max_;
};

}  // namespace

PYBIND11_MODULE(_bhat, m) {
  m.doc() = "Bigraded lengths, Bhattacharya coefficients and Koszul checks for ideals of k[[x,y]]";

  static py::exception<Error> error(m, "BhatError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error)(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  m.attr("DEFAULT_PRIME") = PrimeField::kDefaultPrime;

  m.def(
      "colength",
      [](const std::string& gens, int order, Coeff prime) {
        auto alg = std::make_shared<const TruncatedAlgebra>(PrimeField(prime), order);
        return colength(ideal_from_text(alg, gens));
      },
      py::arg("generators"), py::arg("N") = 64, py::arg("prime") = PrimeField::kDefaultPrime,
      "lambda(R/K) for the ideal K generated by the comma-separated list.");

  py::class_<Pair>(m, "Pair")
      .def(py::init<const std::string&, const std::string&, Coeff, std::optional<int>, int, int>(),
           py::arg("I"), py::arg("J"), py::arg("prime") = PrimeField::kDefaultPrime,
           py::arg("N") = py::none(), py::arg("r_max") = 8, py::arg("s_max") = 8)
      .def_property_readonly("N", &Pair::order)
      .def_property_readonly("prime", &Pair::prime)
      .def("length", &Pair::length, py::arg("r"), py::arg("s"), "lambda(R/I^r J^s)")
      .def("table", &Pair::table, py::arg("r_max") = py::none(), py::arg("s_max") = py::none())
      .def("coefficients", &Pair::coefficients)
      .def("classify_h2", &Pair::classify_h2, py::arg("r") = 0, py::arg("s") = 0, py::arg("seed") = 1)
      .def("verify", &Pair::verify, py::arg("seed") = 1);
}
