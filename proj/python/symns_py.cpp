#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symns/config.hpp"
#include "symns/diagnostics.hpp"
#include "symns/driver.hpp"
#include "symns/errors.hpp"
#include "symns/initdata.hpp"
#include "symns/io.hpp"
#include "symns/stepper.hpp"

namespace py = pybind11;
using namespace symns;

namespace {

py::array_t<double> to_array(const Field& f) { return py::array_t<double>(f.size(), f.data()); }

Field to_field(const py::array_t<double, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw DomainError("expected a one-dimensional array");
  return Field(a.data(), a.data() + a.size());
}

py::dict record_dict(const DiagnosticsRecord& r) {
  py::dict d;
  d["step"] = r.step;
  d["t"] = r.t;
  d["dt"] = r.dt;
  d["mass"] = r.mass;
  d["total_energy"] = r.total_energy;
  d["kinetic_energy"] = r.kinetic_energy;
  d["max_rho"] = r.max_rho;
  d["min_rho"] = r.min_rho;
  d["max_theta"] = r.max_theta;
  d["max_abs_u"] = r.max_abs_u;
  d["grad_u_max"] = r.grad_u_max;
  d["rho_theta_norm_12_5"] = r.rho_theta_norm_12_5;
  d["G_max"] = r.G_max;
  d["clip_mass_cumulative"] = r.clip_mass_cumulative;
  d["clip_theta"] = r.clip_theta;
  d["picard_iterations"] = r.picard_iterations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_symns, mod) {
  mod.doc() = "Radially symmetric compressible heat-conducting flow solver";

  py::register_exception<DomainError>(mod, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(mod, "ConfigError", PyExc_ValueError);
  py::register_exception<SolverError>(mod, "SolverError", PyExc_RuntimeError);

  py::class_<Grid>(mod, "Grid")
      .def(py::init<double, double, int, int>(), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("m"))
      .def_property_readonly("a", &Grid::a)
      .def_property_readonly("b", &Grid::b)
      .def_property_readonly("n", &Grid::n)
      .def_property_readonly("m", &Grid::m)
      .def_property_readonly("dx", &Grid::dx)
      .def_property_readonly("centers", [](const Grid& g) {
        return to_array(Field(g.centers().begin(), g.centers().end()));
      })
      .def("integral", [](const Grid& g, const py::array_t<double>& f) {
        return weighted_integral(g, to_field(f));
      });

  py::enum_<EnergyFamily>(mod, "EnergyFamily")
      .value("linear", EnergyFamily::linear)
      .value("power", EnergyFamily::power);
  py::enum_<ColdPressure>(mod, "ColdPressure")
      .value("zero", ColdPressure::zero)
      .value("barotropic", ColdPressure::barotropic);

  py::class_<GasModel>(mod, "GasModel")
      .def(py::init<>())
      .def_readwrite("mu", &GasModel::mu)
      .def_readwrite("lam", &GasModel::lam)
      .def_readwrite("family", &GasModel::family)
      .def_readwrite("r", &GasModel::r)
      .def_readwrite("cold", &GasModel::cold)
      .def_readwrite("A", &GasModel::A)
      .def_readwrite("gamma", &GasModel::gamma)
      .def_readwrite("kappa0", &GasModel::kappa0)
      .def_readwrite("q", &GasModel::q)
      .def_static("ideal", &GasModel::ideal, py::arg("mu") = 1.0, py::arg("lam") = 0.0,
                  py::arg("kappa0") = 1.0, py::arg("q") = 2.0);

  mod.def("pressure", &pressure, py::arg("model"), py::arg("rho"), py::arg("theta"));
  mod.def("internal_energy", &internal_energy, py::arg("model"), py::arg("rho"), py::arg("theta"));
  mod.def("admissibility_failures", [](const GasModel& model, int m) {
    return check_admissible(model, m).failures();
  });

  py::class_<StepControls>(mod, "StepControls")
      .def(py::init<>())
      .def_readwrite("cfl", &StepControls::cfl)
      .def_readwrite("picard_max", &StepControls::picard_max)
      .def_readwrite("picard_tol", &StepControls::picard_tol)
      .def_readwrite("rho_vac_tol", &StepControls::rho_vac_tol)
      .def_readwrite("dt_max", &StepControls::dt_max)
      .def_readwrite("dt_min", &StepControls::dt_min);

  py::class_<State>(mod, "State")
      .def(py::init([](double t, const py::array_t<double>& rho, const py::array_t<double>& u,
                       const py::array_t<double>& v, const py::array_t<double>& w,
                       const py::array_t<double>& theta) {
             return State{t, to_field(rho), to_field(u), to_field(v), to_field(w), to_field(theta)};
           }),
           py::arg("t"), py::arg("rho"), py::arg("u"), py::arg("v"), py::arg("w"), py::arg("theta"))
      .def_readwrite("t", &State::t)
      .def_property_readonly("rho", [](const State& s) { return to_array(s.rho); })
      .def_property_readonly("u", [](const State& s) { return to_array(s.u); })
      .def_property_readonly("v", [](const State& s) { return to_array(s.v); })
      .def_property_readonly("w", [](const State& s) { return to_array(s.w); })
      .def_property_readonly("theta", [](const State& s) { return to_array(s.theta); });

  mod.def("preset_state", [](const std::string& name, const Grid& g, double eps) {
        InitialData d = preset(name, g);
        if (eps > 0.0) d = approximate_initial_data(g, d, GasModel{}, eps);
        return d.to_state();
      },
      py::arg("name"), py::arg("grid"), py::arg("eps") = 0.0);
  mod.def("step", [](const Grid& g, const State& s, const StepControls& c, const GasModel& m) {
        return step(g, s, c, m);
      },
      py::arg("grid"), py::arg("state"), py::arg("controls"), py::arg("model"));
  mod.def("cfl_dt", &cfl_dt, py::arg("grid"), py::arg("state"), py::arg("model"), py::arg("controls"));
  mod.def("mass", &mass, py::arg("grid"), py::arg("state"));
  mod.def("total_energy", &total_energy, py::arg("grid"), py::arg("state"), py::arg("model"));

  mod.def("run_config", [](const std::string& text, const std::vector<std::string>& overrides, bool force) {
        SimConfig cfg = parse_config(text);
        for (const auto& o : overrides) apply_override(cfg, o);
        RunOptions opt;
        opt.force = force;
        opt.write_output = cfg.output.write;
        Trajectory tr;
        {
          py::gil_scoped_release release;
          tr = run(cfg, opt);
        }
        py::dict out;
        out["reason"] = std::string(to_string(tr.reason));
        out["message"] = tr.message;
        out["steps"] = tr.steps;
        py::list series;
        for (const auto& r : tr.series) series.append(record_dict(r));
        out["series"] = series;
        out["final"] = tr.snapshots.empty() ? py::none() : py::cast(tr.snapshots.back());
        return out;
      },
      py::arg("text"), py::arg("overrides") = std::vector<std::string>{}, py::arg("force") = false);

  mod.def("convergence_orders", [](const std::string& text, int levels) {
        SimConfig cfg = parse_config(text);
        const ConvergenceTable t = convergence_study(cfg, levels);
        return py::make_tuple(t.spatial_order, t.temporal_order);
      },
      py::arg("text"), py::arg("levels") = 3);
}
