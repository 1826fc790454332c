// Python bindings for the deltagon core.
//
// Rationals cross the boundary as strings ("p/q" or "p"), matrices as nested
// lists. This keeps the module free of numpy at import time; callers that
// want arrays can convert on their side.

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltagon/configurations.hpp"
#include "deltagon/cone.hpp"
#include "deltagon/coxeter.hpp"
#include "deltagon/inequalities.hpp"
#include "deltagon/polygons.hpp"
#include "deltagon/rational.hpp"
#include "deltagon/schubert.hpp"
#include "deltagon/serialize.hpp"

namespace py = pybind11;
using namespace deltagon;

namespace {

std::vector<std::string> vec_to_strings(const RatVec& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(rat_to_string(v(i)));
  return out;
}

std::vector<std::vector<std::string>> mat_to_strings(const RatMat& m) {
  std::vector<std::vector<std::string>> out;
  out.reserve(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(static_cast<size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

RatVec strings_to_vec(const std::vector<std::string>& v) {
  RatVec out(static_cast<Eigen::Index>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = parse_rational(v[i]);
  return out;
}

RatMat strings_to_mat(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return RatMat(0, 0);
  RatMat out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_rational(rows[i][j]);
  }
  return out;
}

CMat lists_to_cmat(const std::vector<std::vector<std::complex<double>>>& rows) {
  if (rows.empty()) return CMat(0, 0);
  CMat out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw std::invalid_argument("ragged matrix");
    for (size_t j = 0; j < rows[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return out;
}

std::vector<std::vector<std::complex<double>>> cmat_to_lists(const CMat& m) {
  std::vector<std::vector<std::complex<double>>> out;
  out.reserve(static_cast<size_t>(m.rows()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    std::vector<std::complex<double>> row;
    row.reserve(static_cast<size_t>(m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

RootSystem parse_rs(const std::string& name) { return root_system_from_string(name); }

py::dict system_to_dict(const InequalitySystem& sys) {
  py::dict d;
  d["root_system"] = to_string(sys.rs);
  d["n"] = sys.n;
  py::list items;
  for (const auto& it : sys.items) {
    py::dict e;
    e["label"] = it.label;
    e["rows"] = mat_to_strings(it.rows);
    items.append(e);
  }
  d["items"] = items;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Delta side length polyhedra for rank 2 root systems";

  mod.def(
      "data_table_checksum",
      [] {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(data_table_checksum()));
        return std::string(buf);
      },
      "Hex digest of the shipped multiplication tables.");

  mod.def("root_systems", [] {
    return std::vector<std::string>{"A2", "B2", "G2"};
  });

  mod.def(
      "weyl_group",
      [](const std::string& rs_name) {
        const auto& rsd = build_root_system(parse_rs(rs_name));
        py::list out;
        for (const auto& w : rsd.weyl) {
          py::dict d;
          d["word"] = w.word;
          d["length"] = w.length;
          d["matrix"] = mat_to_strings(w.matrix);
          out.append(d);
        }
        return out;
      },
      py::arg("root_system"));

  mod.def(
      "schubert_basis",
      [](const std::string& rs_name, int vertex) {
        const auto& ring = class_table(parse_rs(rs_name), vertex);
        py::dict d;
        d["m"] = ring.m;
        py::list weights, coweights;
        for (const auto& cls : ring.classes) {
          weights.append(vec_to_strings(cls.weight));
          coweights.append(vec_to_strings(cls.coweight));
        }
        d["weights"] = weights;
        d["coweights"] = coweights;
        std::vector<std::string> a;
        for (const auto& v : ring.a) a.push_back(Rat(v).str());
        d["a"] = a;
        std::vector<std::vector<std::string>> st(static_cast<size_t>(ring.m));
        for (int j = 0; j < ring.m; ++j)
          for (int k = 0; k < ring.m; ++k) st[static_cast<size_t>(j)].push_back(Rat(ring.structure(j, k)).str());
        d["structure"] = st;
        return d;
      },
      py::arg("root_system"), py::arg("vertex"));

  mod.def(
      "inequalities",
      [](const std::string& rs_name, int n, const std::string& mode, bool chamber) {
        RootSystem rs = parse_rs(rs_name);
        InequalitySystem sys;
        if (mode == "weak") {
          sys = weak_system(rs, n);
          if (chamber) {
            auto ch = chamber_system(rs, n);
            for (auto& it : ch.items) sys.items.push_back(std::move(it));
          }
        } else if (mode == "exact" || mode == "nonzero") {
          sys = stability_system(rs, n, mode == "exact" ? ProductMode::ExactPoint : ProductMode::Nonzero, chamber);
        } else {
          throw std::invalid_argument("mode must be exact, nonzero, or weak");
        }
        return system_to_dict(sys);
      },
      py::arg("root_system"), py::arg("n"), py::arg("mode") = "exact", py::arg("chamber") = false);

  mod.def(
      "membership",
      [](const std::string& rs_name, const std::vector<std::vector<std::string>>& sides) {
        RootSystem rs = parse_rs(rs_name);
        std::vector<RatVec> pt;
        pt.reserve(sides.size());
        for (const auto& s : sides) pt.push_back(strings_to_vec(s));
        auto sys = stability_system(rs, static_cast<int>(sides.size()), ProductMode::ExactPoint, true);
        auto res = membership(sys, pt);
        py::dict d;
        d["member"] = res.member;
        py::list violated, tight;
        for (int idx : res.violated) violated.append(sys.items[static_cast<size_t>(idx)].label);
        for (int idx : res.tight) tight.append(sys.items[static_cast<size_t>(idx)].label);
        d["violated"] = violated;
        d["tight"] = tight;
        return d;
      },
      py::arg("root_system"), py::arg("sides"));

  mod.def(
      "extreme_rays",
      [](const std::string& rs_name, int n) {
        RootSystem rs = parse_rs(rs_name);
        auto sys = stability_system(rs, n, ProductMode::ExactPoint, true);
        auto hrep = from_system(sys);
        auto vrep = extreme_rays(hrep);
        py::list rays;
        for (const auto& r : vrep.rays) {
          py::list sides;
          for (const auto& s : ray_to_sides(rs, n, r)) sides.append(vec_to_strings(s));
          rays.append(sides);
        }
        return rays;
      },
      py::arg("root_system"), py::arg("n"));

  mod.def(
      "apartment_semistability",
      [](const std::string& rs_name, const std::vector<std::pair<std::vector<int>, std::vector<std::string>>>& pts) {
        RootSystem rs = parse_rs(rs_name);
        const auto& rsd = build_root_system(rs);
        ApartmentConfiguration cfg;
        cfg.rs = rs;
        for (const auto& [word, h] : pts) {
          ApartmentPoint p;
          p.w = &rsd.element_for_word(word);
          p.h = strings_to_vec(h);
          cfg.points.push_back(p);
        }
        auto res = apartment_semistability(cfg);
        py::dict d;
        d["verdict"] = to_string(res.verdict);
        d["closing_vector"] = vec_to_strings(res.steepest);
        d["dominant_type"] = vec_to_strings(res.dominant_type);
        py::list hn;
        for (const auto& v : res.hn_vertices) {
          py::dict e;
          e["vertex"] = vec_to_strings(v.vertex);
          e["unique_in_orbit"] = v.unique_in_orbit;
          hn.append(e);
        }
        d["hn_vertices"] = hn;
        d["note"] = res.note;
        return d;
      },
      py::arg("root_system"), py::arg("points"));

  mod.def(
      "grassmannian_semistability",
      [](int n, int q, const std::vector<std::pair<std::vector<std::vector<std::string>>, std::string>>& atoms,
         const std::optional<std::vector<std::vector<std::string>>>& form, const std::string& strategy, unsigned seed,
         int lattice_cap) {
        GrassmannianMeasure m;
        m.n_ambient = n;
        m.q = q;
        for (const auto& [basis_rows, mass] : atoms) {
          GrassmannianAtom a;
          RatMat rows = strings_to_mat(basis_rows);
          a.basis = rows.transpose();
          a.mass = parse_rational(mass);
          m.atoms.push_back(std::move(a));
        }
        if (form) m.form = strings_to_mat(*form);
        int mc_samples = 0;
        Strategy strat = strategy_from_string(strategy, &mc_samples);
        GrassmannianResult res = m.form ? iso_semistable(m, strat, mc_samples, seed, lattice_cap)
                                        : sl_semistable(m, strat, mc_samples, seed, lattice_cap);
        py::dict d;
        d["verdict"] = to_string(res.verdict);
        if (res.witness)
          d["witness"] = mat_to_strings(res.witness->transpose());
        else
          d["witness"] = py::none();
        d["cap_exceeded"] = res.cap_exceeded;
        d["note"] = res.note;
        return d;
      },
      py::arg("n"), py::arg("q"), py::arg("atoms"), py::arg("form") = std::nullopt,
      py::arg("strategy") = "spans", py::arg("seed") = 1u, py::arg("lattice_cap") = 10000);

  mod.def(
      "delta_length_p",
      [](const std::vector<std::vector<std::complex<double>>>& a,
         const std::vector<std::vector<std::complex<double>>>& b) {
        DVec d = delta_length_p(lists_to_cmat(a), lists_to_cmat(b));
        return std::vector<double>(d.data(), d.data() + d.size());
      },
      py::arg("a"), py::arg("b"));

  mod.def(
      "delta_length_X",
      [](const std::vector<std::vector<std::complex<double>>>& g1,
         const std::vector<std::vector<std::complex<double>>>& g2) {
        DVec d = delta_length_X(lists_to_cmat(g1), lists_to_cmat(g2));
        return std::vector<double>(d.data(), d.data() + d.size());
      },
      py::arg("g1"), py::arg("g2"));

  mod.def(
      "construct_polygon",
      [](const std::vector<std::vector<double>>& spectra, double tol, int max_iter, int restarts, unsigned seed) {
        std::vector<DVec> sp;
        for (const auto& s : spectra) {
          DVec v(static_cast<Eigen::Index>(s.size()));
          for (size_t i = 0; i < s.size(); ++i) v(static_cast<Eigen::Index>(i)) = s[i];
          sp.push_back(v);
        }
        auto res = construct_polygon_momentum(sp, tol, max_iter, restarts, seed);
        py::dict d;
        d["success"] = res.success;
        d["residual"] = res.residual;
        py::list sides;
        for (const auto& s : res.sides) sides.append(cmat_to_lists(s));
        d["sides"] = sides;
        return d;
      },
      py::arg("spectra"), py::arg("tol") = 1e-8, py::arg("max_iter") = 5000, py::arg("restarts") = 10,
      py::arg("seed") = 1u);

  mod.def(
      "ideal_polygon",
      [](const std::vector<std::pair<double, double>>& atoms, double tol, int max_iter) {
        HyperbolicConfig cfg;
        for (const auto& [angle, mass] : atoms) cfg.atoms.push_back({angle, mass});
        auto res = phi_fixed_point(cfg, tol, max_iter);
        py::dict d;
        d["converged"] = res.converged;
        d["iterations"] = res.iterations;
        d["closure_error"] = res.closure_error;
        py::list verts;
        for (const auto& v : res.polygon.vertices) verts.append(std::vector<double>{v(0), v(1), v(2)});
        d["vertices"] = verts;
        if (res.converged) {
          auto back = gauss_map(res.polygon);
          py::list atoms_out;
          for (const auto& a : back.atoms) atoms_out.append(py::make_tuple(a.angle, a.mass));
          d["gauss_map"] = atoms_out;
        }
        return d;
      },
      py::arg("atoms"), py::arg("tol") = 1e-9, py::arg("max_iter") = 100000);

  mod.def(
      "sample_thompson",
      [](int n, int count, unsigned seed) {
        auto rep = sample_thompson(n, count, seed);
        py::dict d;
        d["n"] = rep.n;
        d["samples"] = rep.samples;
        d["rows"] = rep.rows;
        d["max_violation_p"] = rep.max_violation_p;
        d["max_violation_X"] = rep.max_violation_X;
        return d;
      },
      py::arg("n") = 3, py::arg("count") = 100, py::arg("seed") = 1u);
}
