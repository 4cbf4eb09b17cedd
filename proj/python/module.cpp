#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcodec/experiments.hpp"
#include "bcodec/io.hpp"
#include "bcodec/limit_shape.hpp"
#include "bcodec/rsk.hpp"
#include "bcodec/schuetzenberger.hpp"
#include "bcodec/weyl.hpp"

namespace py = pybind11;
using namespace bcodec;

namespace {

using IntRows = std::vector<std::vector<int>>;
using RealRows = std::vector<std::vector<double>>;

py::list records_to_list(const ExperimentResult& res) {
  py::list out;
  for (const auto& r : res.records) {
    py::dict d;
    d["trial"] = r.trial;
    d["seed"] = r.seed;
    d["n"] = r.n;
    for (const auto& [k, v] : r.measurements) d[py::str(k)] = v;
    out.append(std::move(d));
  }
  return out;
}

template <class Config>
Config base_config(std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
  Config c;
  static_cast<ExperimentConfig&>(c) = {n, trials, seed, threads};
  return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tableau codecs for uniform Bernoulli sequences";

  py::exception<Error>(m, "BcodecError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("bcodec._core").attr("BcodecError");
      py::object exc = type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def(
      "rsk",
      [](const std::vector<double>& word) {
        const RskPair pq = rsk(Realization(word));
        return py::make_tuple(pq.p.rows(), pq.q.rows());
      },
      py::arg("word"), "Insertion and recording tableaux of a word of distinct reals.");
  m.def(
      "inverse_rsk",
      [](const RealRows& p, const IntRows& q) { return inverse_rsk(RealTableau(p), StandardTableau(q)).values(); },
      py::arg("p"), py::arg("q"));
  m.def(
      "knuth_equivalent",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return knuth_equivalent(Realization(a), Realization(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "dual_knuth_equivalent",
      [](const std::vector<double>& a, const std::vector<double>& b) {
        return dual_knuth_equivalent(Realization(a), Realization(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "encode_weyl", [](const std::vector<double>& word) { return encode_weyl(Realization(word)).values(); },
      py::arg("word"));
  m.def(
      "ranking_from_z", [](const std::vector<std::int64_t>& z) { return ranking_from_z(ZSequence(z)); },
      py::arg("z"));
  m.def(
      "shift_w", [](const std::vector<std::int64_t>& z) { return shift_w(ZSequence(z)).values(); }, py::arg("z"));
  m.def(
      "decode_first_weyl", [](const std::vector<std::int64_t>& z) { return decode_first_weyl(ZSequence(z)); },
      py::arg("z"));

  m.def(
      "sch_shift", [](const IntRows& q) { return sch_shift(StandardTableau(q)).rows(); }, py::arg("q"));
  m.def(
      "nerve",
      [](const IntRows& q) {
        const Nerve nv = nerve(StandardTableau(q));
        std::vector<std::pair<int, int>> cells;
        for (const Cell& c : nv.cells) cells.emplace_back(c.row, c.col);
        return py::make_tuple(cells, nv.values);
      },
      py::arg("q"), "Cells (row, col) and entries along the nerve.");
  m.def(
      "nerve_endpoint",
      [](const IntRows& q) {
        const NerveEndpoint e = nerve_endpoint(StandardTableau(q));
        return py::make_tuple(e.a1, e.a2);
      },
      py::arg("q"));
  m.def(
      "decode_first_nerve", [](const IntRows& q, double kappa) { return decode_first_nerve(StandardTableau(q), kappa); },
      py::arg("q"), py::arg("kappa") = 1.0);

  m.def("omega", &omega, py::arg("s"));
  m.def("r_theta", &r_theta, py::arg("theta"));
  m.def(
      "arch", [](double r, double theta) { return arch({r, theta}); }, py::arg("r"), py::arg("theta"));
  m.def(
      "profile_distance", [](const std::vector<int>& shape) {
        const YoungDiagram d(shape);
        return profile_distance(d, d.cell_count());
      },
      py::arg("shape"));

  m.def(
      "sample_realization", [](std::uint64_t seed, std::size_t n) { return sample_realization(seed, n).values(); },
      py::arg("seed"), py::arg("n"));

  m.def(
      "run_decoding_experiment",
      [](std::size_t n, std::size_t trials, std::uint64_t seed, double kappa, bool with_nerve, unsigned threads) {
        auto c = base_config<DecodeConfig>(n, trials, seed, threads);
        c.kappa = kappa;
        c.with_nerve = with_nerve;
        return records_to_list(run_decoding_experiment(c));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("kappa") = 1.0, py::arg("with_nerve") = true,
      py::arg("threads") = 0);
  m.def(
      "run_shape_experiment",
      [](std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
        return records_to_list(run_shape_experiment({n, trials, seed, threads}));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 0);
  m.def(
      "run_arch_experiment",
      [](std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
        auto c = base_config<ArchConfig>(n, trials, seed, threads);
        c.grid = default_arch_grid();
        return records_to_list(run_arch_experiment(c));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 0);
  m.def(
      "run_arrival_experiment",
      [](std::size_t n, std::size_t trials, std::uint64_t seed, std::vector<std::size_t> ms, unsigned threads) {
        auto c = base_config<ArrivalConfig>(n, trials, seed, threads);
        c.ms = ms.empty() ? default_arrival_ms() : std::move(ms);
        return records_to_list(run_arrival_experiment(c));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("ms") = std::vector<std::size_t>{},
      py::arg("threads") = 0);
  m.def(
      "run_fluctuation_sampling",
      [](std::size_t n, std::size_t trials, std::uint64_t seed, unsigned threads) {
        auto c = base_config<FluctuationConfig>(n, trials, seed, threads);
        c.thetas = default_fluctuation_thetas();
        return records_to_list(run_fluctuation_sampling(c));
      },
      py::arg("n"), py::arg("trials"), py::arg("seed") = 0, py::arg("threads") = 0);
}
