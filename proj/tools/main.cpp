#include "deltagon/cone.hpp"
#include "deltagon/configurations.hpp"
#include "deltagon/coxeter.hpp"
#include "deltagon/inequalities.hpp"
#include "deltagon/polygons.hpp"
#include "deltagon/schubert.hpp"
#include "deltagon/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace deltagon;

namespace {

// -o targets resolve against this when relative.
std::filesystem::path output_base() {
  if (const char* dir = std::getenv("DELTAGON_OUTPUT_DIR")) return dir;
  return std::filesystem::current_path();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path p(out_path);
  if (p.is_relative()) p = output_base() / p;
  std::ofstream f(p);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

json rat_array(const RatVec& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(rat_to_string(v(i)));
  return a;
}

json rat_matrix(const RatMat& m) {
  json a = json::array();
  for (int i = 0; i < m.rows(); ++i) a.push_back(rat_array(m.row(i)));
  return a;
}

RatVec rat_vector_from_json(const json& a) {
  RatVec v(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    const auto& e = a[i];
    if (e.is_string())
      v(i) = parse_rational(e.get<std::string>());
    else if (e.is_number_integer())
      v(i) = Rat(Int(e.get<long long>()));
    else
      throw std::invalid_argument("expected rational string or integer in vector");
  }
  return v;
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  return json::parse(f);  // parse_error carries line/byte position
}

// Free-coordinate row of an inequality (per-side functional transform).
RatVec item_free_row(const InequalitySystem& sys, const LinearInequality& item) {
  int fd = free_dim(sys.rs);
  RatVec out(sys.n * fd);
  for (int i = 0; i < sys.n; ++i) {
    RatVec r = side_row_to_free(sys.rs, item.rows.row(i));
    out.segment(i * fd, fd) = r;
  }
  return out;
}

std::vector<int> sorted_order(const std::vector<std::vector<Rat>>& keys) {
  std::vector<int> idx(keys.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return flat_less(keys[a], keys[b]); });
  return idx;
}

std::string vec_join(const RatVec& v) {
  std::ostringstream os;
  for (int i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << rat_to_string(v(i));
  }
  return os.str();
}

InequalitySystem build_system(RootSystem rs, int n, const std::string& mode, bool chamber) {
  if (mode == "weak") {
    InequalitySystem sys = weak_system(rs, n);
    if (chamber) {
      auto ch = chamber_system(rs, n);
      for (auto& item : ch.items) sys.items.push_back(item);
      sys.includes_chamber = true;
    }
    return sys;
  }
  return stability_system(rs, n, product_mode_from_string(mode), chamber);
}

std::string render_inequalities(const InequalitySystem& sys, const std::string& format) {
  std::vector<std::vector<Rat>> keys;
  keys.reserve(sys.items.size());
  for (const auto& item : sys.items) keys.push_back(flatten(item.rows));
  auto order = sorted_order(keys);

  std::ostringstream os;
  if (format == "text") {
    for (int i : order) os << inequality_line(sys.items[i].rows) << "\n";
  } else if (format == "ieq") {
    os << "DIM = " << sys.n * free_dim(sys.rs) << "\n\nINEQUALITIES_SECTION\n";
    int no = 0;
    for (int i : order) {
      RatVec row = item_free_row(sys, sys.items[i]);
      os << "( " << ++no << ") " << vec_join(row) << " <= 0\n";
    }
    os << "END\n";
  } else if (format == "json") {
    json out;
    out["root_system"] = to_string(sys.rs);
    out["n"] = sys.n;
    out["chamber"] = sys.includes_chamber;
    out["items"] = json::array();
    for (int i : order) {
      json it;
      it["label"] = sys.items[i].label;
      it["rows"] = rat_matrix(sys.items[i].rows);
      out["items"].push_back(it);
    }
    os << out.dump(2) << "\n";
  } else {
    throw CLI::ValidationError("--format", "unknown format " + format);
  }
  return os.str();
}

int cmd_inequalities(const std::string& rs_name, int n, const std::string& mode, bool chamber,
                     const std::string& format, const std::string& out) {
  RootSystem rs = root_system_from_string(rs_name);
  emit(render_inequalities(build_system(rs, n, mode, chamber), format), out);
  return 0;
}

int cmd_cone(const std::string& rs_name, int n, bool rays, bool facets, const std::string& format,
             const std::string& out) {
  RootSystem rs = root_system_from_string(rs_name);
  auto sys = stability_system(rs, n, ProductMode::ExactPoint, true);
  ConeHRep h = from_system(sys);
  std::ostringstream os;

  if (rays == facets) throw CLI::ValidationError("cone", "pass exactly one of --rays/--facets");

  if (rays) {
    ConeVRep v = extreme_rays(h);
    if (format == "text") {
      for (const auto& r : v.rays) os << sides_line(ray_to_sides(rs, n, r)) << "\n";
      for (const auto& l : v.lineality)
        os << "line: " << sides_line(ray_to_sides(rs, n, l)) << "\n";
    } else if (format == "poi") {
      os << "DIM = " << h.dim << "\n\nCONE_SECTION\n";
      int no = 0;
      for (const auto& r : v.rays) os << "( " << ++no << ") " << vec_join(r) << "\n";
      os << "END\n";
    } else if (format == "json") {
      json out_json;
      out_json["root_system"] = to_string(rs);
      out_json["n"] = n;
      out_json["dim"] = h.dim;
      out_json["rays"] = json::array();
      for (const auto& r : v.rays) {
        json jr;
        jr["coords"] = rat_array(r);
        jr["sides"] = json::array();
        for (const auto& s : ray_to_sides(rs, n, r)) jr["sides"].push_back(rat_array(s));
        out_json["rays"].push_back(jr);
      }
      os << out_json.dump(2) << "\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format " + format);
    }
  } else {
    IrredundanceResult irr = irredundant(h);
    std::vector<const LinearInequality*> kept;
    for (size_t i = 0; i < sys.items.size(); ++i) {
      bool in_subsystem = false;
      for (const auto& name : irr.subsystem.names)
        if (name == sys.items[i].label) {
          in_subsystem = true;
          break;
        }
      if (in_subsystem) kept.push_back(&sys.items[i]);
    }
    std::vector<std::vector<Rat>> keys;
    for (auto* item : kept) keys.push_back(flatten(item->rows));
    auto order = sorted_order(keys);
    if (format == "text") {
      for (int i : order) os << inequality_line(kept[i]->rows) << "\n";
    } else if (format == "ieq") {
      os << "DIM = " << h.dim << "\n\nINEQUALITIES_SECTION\n";
      int no = 0;
      for (int i : order)
        os << "( " << ++no << ") " << vec_join(item_free_row(sys, *kept[i])) << " <= 0\n";
      os << "END\n";
    } else if (format == "json") {
      json out_json;
      out_json["root_system"] = to_string(rs);
      out_json["n"] = n;
      out_json["dim"] = h.dim;
      out_json["facets"] = json::array();
      for (int i : order) {
        json it;
        it["label"] = kept[i]->label;
        it["rows"] = rat_matrix(kept[i]->rows);
        out_json["facets"].push_back(it);
      }
      os << out_json.dump(2) << "\n";
    } else {
      throw CLI::ValidationError("--format", "unknown format " + format);
    }
  }
  emit(os.str(), out);
  return 0;
}

int cmd_member(const std::string& rs_name, const std::vector<std::string>& side_args,
               const std::string& format, const std::string& out) {
  RootSystem rs = root_system_from_string(rs_name);
  std::vector<RatVec> sides;
  sides.reserve(side_args.size());
  for (const auto& s : side_args) sides.push_back(parse_vector(s));
  auto sys = stability_system(rs, static_cast<int>(sides.size()), ProductMode::ExactPoint, true);
  auto res = membership(sys, sides);
  std::ostringstream os;
  if (format == "text") {
    os << (res.member ? "Member" : "NonMember") << "\n";
    for (int i : res.violated) os << "violated: " << sys.items[i].label << "\n";
    for (int i : res.tight) os << "tight: " << sys.items[i].label << "\n";
  } else if (format == "json") {
    json j;
    j["root_system"] = to_string(rs);
    j["verdict"] = res.member ? "Member" : "NonMember";
    j["violated"] = json::array();
    for (int i : res.violated) j["violated"].push_back(sys.items[i].label);
    j["tight"] = json::array();
    for (int i : res.tight) j["tight"].push_back(sys.items[i].label);
    os << j.dump(2) << "\n";
  } else {
    throw CLI::ValidationError("--format", "unknown format " + format);
  }
  emit(os.str(), out);
  return 0;
}

std::string class_name(int degree) {
  return degree == 0 ? "1" : "g" + std::to_string(degree);
}

std::string render_schubert_table(const CohomologyRing& ring) {
  const int m = ring.m;
  std::vector<std::vector<std::string>> cells(m + 1, std::vector<std::string>(m + 1));
  cells[0][0] = "H*(" + to_string(ring.rs) + "/P" + std::to_string(ring.vertex) + ")";
  for (int j = 0; j < m; ++j) {
    cells[0][j + 1] = class_name(j);
    cells[j + 1][0] = class_name(j);
  }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) {
      std::string cell;
      if (j + k > m - 1) {
        cell = "0";
      } else {
        Int c = ring.structure(j, k);
        if (j + k == 0)
          cell = "1";
        else if (c == 1)
          cell = class_name(j + k);
        else
          cell = c.str() + class_name(j + k);
      }
      cells[j + 1][k + 1] = cell;
    }
  std::vector<size_t> width(m + 1, 0);
  for (const auto& row : cells)
    for (int c = 0; c <= m; ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (int c = 0; c <= m; ++c) {
      if (c) os << "  ";
      os << row[c];
      if (c < m)
        for (size_t p = row[c].size(); p < width[c]; ++p) os << " ";
    }
    os << "\n";
  }
  return os.str();
}

int cmd_schubert(const std::string& rs_name, const std::string& vertex_name, bool as_json,
                 const std::string& out) {
  RootSystem rs = root_system_from_string(rs_name);
  if (vertex_name != "P1" && vertex_name != "P2")
    throw CLI::ValidationError("schubert", "vertex must be P1 or P2");
  int vertex = vertex_name == "P1" ? 1 : 2;
  const auto& ring = class_table(rs, vertex);
  std::ostringstream os;
  if (as_json) {
    json j;
    j["root_system"] = to_string(rs);
    j["vertex"] = vertex;
    j["m"] = ring.m;
    j["weights"] = json::array();
    for (const auto& cls : ring.classes) j["weights"].push_back(rat_array(cls.weight));
    j["a"] = json::array();
    for (const auto& a : ring.a) j["a"].push_back(a.str());
    j["structure"] = json::array();
    for (int jj = 0; jj < ring.m; ++jj) {
      json row = json::array();
      for (int k = 0; k < ring.m; ++k)
        row.push_back(jj + k <= ring.m - 1 ? ring.structure(jj, k).str() : "0");
      j["structure"].push_back(row);
    }
    os << j.dump(2) << "\n";
  } else {
    os << render_schubert_table(ring);
  }
  emit(os.str(), out);
  return 0;
}

json verdict_json(StabilityVerdict v) { return to_string(v); }

int cmd_stability(const std::string& apartment_path, const std::string& grassmannian_path,
                  const std::string& strategy_name, unsigned seed, int lattice_cap,
                  const std::string& format, const std::string& out) {
  if (apartment_path.empty() == grassmannian_path.empty())
    throw CLI::ValidationError("stability", "pass exactly one of --apartment/--grassmannian");
  std::ostringstream os;
  json j;
  if (!apartment_path.empty()) {
    json in = read_json_file(apartment_path);
    RootSystem rs = root_system_from_string(in.at("root_system").get<std::string>());
    const auto& rsd = build_root_system(rs);
    ApartmentConfiguration cfg;
    cfg.rs = rs;
    for (const auto& p : in.at("points")) {
      std::vector<int> word;
      for (const auto& w : p.at("word")) word.push_back(w.get<int>());  // letters 1..2
      ApartmentPoint pt;
      pt.w = &rsd.element_for_word(word);
      pt.h = rat_vector_from_json(p.at("h"));
      cfg.points.push_back(pt);
    }
    auto res = apartment_semistability(cfg);
    j["verdict"] = verdict_json(res.verdict);
    if (res.verdict == StabilityVerdict::Unstable) {
      j["steepest"] = rat_array(res.steepest);
      j["dominant_type"] = rat_array(res.dominant_type);
      j["hn_vertices"] = json::array();
      for (const auto& hv : res.hn_vertices) {
        json v;
        v["vertex"] = rat_array(hv.vertex);
        v["unique_in_orbit"] = hv.unique_in_orbit;
        j["hn_vertices"].push_back(v);
      }
    }
    if (!res.note.empty()) j["note"] = res.note;
    if (format == "text") {
      os << to_string(res.verdict) << "\n";
      if (res.verdict == StabilityVerdict::Unstable) {
        os << "steepest: " << vec_join(res.steepest) << "\n";
        os << "dominant type: " << vec_join(res.dominant_type) << "\n";
        for (const auto& hv : res.hn_vertices)
          os << "hn vertex: " << vec_join(hv.vertex)
             << (hv.unique_in_orbit ? " (unique in orbit)" : "") << "\n";
      }
      if (!res.note.empty()) os << "note: " << res.note << "\n";
    }
  } else {
    json in = read_json_file(grassmannian_path);
    GrassmannianMeasure m;
    m.n_ambient = in.at("n").get<int>();
    m.q = in.at("q").get<int>();
    if (in.contains("form")) {
      const auto& fj = in["form"];
      RatMat form(fj.size(), m.n_ambient);
      for (size_t i = 0; i < fj.size(); ++i) form.row(i) = rat_vector_from_json(fj[i]);
      m.form = form;
    }
    for (const auto& aj : in.at("atoms")) {
      GrassmannianAtom atom;
      const auto& bj = aj.at("basis");
      RatMat basis(m.n_ambient, bj.size());
      for (size_t c = 0; c < bj.size(); ++c) basis.col(c) = rat_vector_from_json(bj[c]);
      atom.basis = basis;
      const auto& mj = aj.at("mass");
      atom.mass = mj.is_string() ? parse_rational(mj.get<std::string>())
                                 : Rat(Int(mj.get<long long>()));
      m.atoms.push_back(atom);
    }
    int mc_samples = 0;
    Strategy strategy = strategy_from_string(strategy_name, &mc_samples);
    auto res = m.form ? iso_semistable(m, strategy, mc_samples, seed, lattice_cap)
                      : sl_semistable(m, strategy, mc_samples, seed, lattice_cap);
    j["verdict"] = verdict_json(res.verdict);
    if (res.witness) j["witness"] = rat_matrix(res.witness->transpose());
    j["cap_exceeded"] = res.cap_exceeded;
    if (!res.note.empty()) j["note"] = res.note;
    if (format == "text") {
      os << to_string(res.verdict) << "\n";
      if (res.witness) {
        os << "witness:\n";
        for (int c = 0; c < res.witness->cols(); ++c)
          os << "  " << vec_join(res.witness->col(c)) << "\n";
      }
      if (res.cap_exceeded) os << "lattice cap exceeded\n";
      if (!res.note.empty()) os << "note: " << res.note << "\n";
    }
  }
  if (format == "json")
    os << j.dump(2) << "\n";
  else if (format != "text")
    throw CLI::ValidationError("--format", "unknown format");
  emit(os.str(), out);
  return 0;
}

int cmd_polygon(const std::string& construct_path, const std::string& hyperbolic_path, double tol,
                bool tol_set, int max_iter, int restarts, unsigned long long seed,
                const std::string& format, const std::string& out) {
  if (construct_path.empty() == hyperbolic_path.empty())
    throw CLI::ValidationError("polygon", "pass exactly one of --construct/--hyperbolic");
  std::ostringstream os;
  if (!construct_path.empty()) {
    json in = read_json_file(construct_path);
    std::vector<DVec> spectra;
    for (const auto& sj : in.at("spectra")) {
      DVec h(sj.size());
      for (size_t i = 0; i < sj.size(); ++i) {
        const auto& e = sj[i];
        if (e.is_string())
          h(i) = parse_rational(e.get<std::string>()).convert_to<double>();
        else
          h(i) = e.get<double>();
      }
      spectra.push_back(h);
    }
    auto res = construct_polygon_momentum(spectra, tol, max_iter, restarts, seed);
    if (format == "json") {
      json j;
      j["success"] = res.success;
      j["residual"] = res.residual;
      j["sides"] = json::array();
      for (const auto& a : res.sides) {
        json rows = json::array();
        for (int r = 0; r < a.rows(); ++r) {
          json row = json::array();
          for (int c = 0; c < a.cols(); ++c)
            row.push_back(json::array({a(r, c).real(), a(r, c).imag()}));
          rows.push_back(row);
        }
        j["sides"].push_back(rows);
      }
      os << j.dump(2) << "\n";
    } else {
      os << (res.success ? "Polygon" : "Failure") << "\n";
      os << "residual below tol: " << (res.residual < tol ? "yes" : "no") << "\n";
      os << "confidently infeasible: " << (!res.success && res.residual > 1e-3 ? "yes" : "no")
         << "\n";
    }
  } else {
    json in = read_json_file(hyperbolic_path);
    HyperbolicConfig cfg;
    for (const auto& aj : in.at("atoms")) {
      IdealAtom atom;
      atom.angle = aj.at("angle").get<double>();
      atom.mass = aj.at("mass").get<double>();
      cfg.atoms.push_back(atom);
    }
    auto res = phi_fixed_point(cfg, tol_set ? tol : 1e-9, max_iter);
    if (format == "json") {
      json j;
      j["converged"] = res.converged;
      j["iterations"] = res.iterations;
      if (res.converged) {
        j["closure_error"] = res.closure_error;
        j["vertices"] = json::array();
        for (const auto& v : res.polygon.vertices)
          j["vertices"].push_back(json::array({v(0), v(1), v(2)}));
        auto back = gauss_map(res.polygon);
        j["gauss"] = json::array();
        for (const auto& a : back.atoms)
          j["gauss"].push_back(json{{"angle", a.angle}, {"mass", a.mass}});
      }
      os << j.dump(2) << "\n";
    } else {
      os << (res.converged ? "Polygon" : "Diverged") << "\n";
      if (res.converged)
        os << "closed within 1e-8: " << (res.closure_error < 1e-8 ? "yes" : "no") << "\n";
    }
  }
  emit(os.str(), out);
  return 0;
}

int cmd_verify_thompson(int n, int samples, unsigned long long seed, const std::string& format,
                        const std::string& out) {
  auto rep = sample_thompson(n, samples, seed);
  bool ok = rep.max_violation_p <= 1e-9 && rep.max_violation_X <= 1e-9;
  std::ostringstream os;
  if (format == "json") {
    json j;
    j["n"] = rep.n;
    j["samples"] = rep.samples;
    j["rows"] = rep.rows;
    j["max_violation_p"] = rep.max_violation_p;
    j["max_violation_X"] = rep.max_violation_X;
    j["verdict"] = ok ? "ok" : "violated";
    os << j.dump(2) << "\n";
  } else {
    os << "n=" << rep.n << " samples=" << rep.samples << " rows=" << rep.rows << "\n";
    os << "p family within 1e-9: " << (rep.max_violation_p <= 1e-9 ? "yes" : "no") << "\n";
    os << "X family within 1e-9: " << (rep.max_violation_X <= 1e-9 ? "yes" : "no") << "\n";
    os << "verdict: " << (ok ? "ok" : "violated") << "\n";
  }
  emit(os.str(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Delta side length polyhedra for rank 2 root systems"};
  app.require_subcommand(1);
  std::ostringstream version;
  version << "deltagon 0.1.0 data " << std::hex << std::setw(16) << std::setfill('0')
          << data_table_checksum();
  app.set_version_flag("--version", version.str());

  std::string rs_name, mode = "exact", format = "text", out_path;
  int n = 3;
  bool chamber = false;

  auto* ineq = app.add_subcommand("inequalities", "Print the side length inequality system");
  ineq->add_option("--root-system", rs_name, "A2, B2 or G2")->required();
  ineq->add_option("-n", n, "number of sides")->required();
  ineq->add_option("--mode", mode, "exact, nonzero or weak")
      ->check(CLI::IsMember({"exact", "nonzero", "weak"}));
  ineq->add_flag("--chamber", chamber, "append the dominance chamber rows");
  ineq->add_option("--format", format)->check(CLI::IsMember({"text", "json", "ieq"}));
  ineq->add_option("-o,--output", out_path, "write to file instead of stdout");

  bool rays = false, facets = false;
  auto* cone = app.add_subcommand("cone", "Extreme rays or irredundant facets of the cone");
  cone->add_option("--root-system", rs_name)->required();
  cone->add_option("-n", n)->required();
  cone->add_flag("--rays", rays, "emit extreme rays");
  cone->add_flag("--facets", facets, "emit the irredundant facet subsystem");
  cone->add_option("--format", format)->check(CLI::IsMember({"text", "json", "poi", "ieq"}));
  cone->add_option("-o,--output", out_path);

  std::vector<std::string> side_args;
  auto* member = app.add_subcommand("member", "Test membership of a side length tuple");
  member->add_option("--root-system", rs_name)->required();
  member->add_option("sides", side_args, "comma separated side vectors")->required()
      ->expected(-3);
  member->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  member->add_option("-o,--output", out_path);

  std::string vertex_name;
  bool schubert_json = false, schubert_table = false;
  auto* schubert = app.add_subcommand("schubert", "Schubert class multiplication table");
  schubert->add_flag("--table", schubert_table, "print the multiplication table (default)");
  schubert->add_flag("--json", schubert_json, "emit {m, weights, a, structure}");
  schubert->add_option("root_system", rs_name)->required();
  schubert->add_option("vertex", vertex_name, "P1 or P2")->required();
  schubert->add_option("-o,--output", out_path);

  std::string apartment_path, grassmannian_path, strategy_name = "spans";
  unsigned stab_seed = 1;
  int lattice_cap = 10000;
  auto* stability = app.add_subcommand("stability", "Stability of weighted configurations");
  stability->add_option("--apartment", apartment_path, "apartment configuration JSON");
  stability->add_option("--grassmannian", grassmannian_path, "Grassmannian measure JSON");
  stability->add_option("--strategy", strategy_name, "spans, lattice or mc:<k>");
  stability->add_option("--seed", stab_seed);
  stability->add_option("--lattice-cap", lattice_cap);
  stability->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  stability->add_option("-o,--output", out_path);

  std::string construct_path, hyperbolic_path;
  double tol = 1e-8;
  int max_iter = 100000, restarts = 10;
  unsigned long long poly_seed = 1;
  auto* polygon = app.add_subcommand("polygon", "Polygon construction oracles");
  polygon->add_option("--construct", construct_path, "target spectra JSON");
  polygon->add_option("--hyperbolic", hyperbolic_path, "ideal configuration JSON");
  polygon->add_option("--tol", tol);
  polygon->add_option("--max-iter", max_iter);
  polygon->add_option("--restarts", restarts);
  polygon->add_option("--seed", poly_seed);
  polygon->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  polygon->add_option("-o,--output", out_path);

  int vt_n = 3, vt_samples = 1000;
  unsigned long long vt_seed = 42;
  auto* thompson = app.add_subcommand("verify-thompson", "Sample closed polygons in both models");
  thompson->add_option("-n", vt_n);
  thompson->add_option("--samples", vt_samples);
  thompson->add_option("--seed", vt_seed);
  thompson->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  thompson->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
    if (ineq->parsed())
      return cmd_inequalities(rs_name, n, mode, chamber, format, out_path);
    if (cone->parsed()) return cmd_cone(rs_name, n, rays, facets, format, out_path);
    if (member->parsed()) return cmd_member(rs_name, side_args, format, out_path);
    if (schubert->parsed()) return cmd_schubert(rs_name, vertex_name, schubert_json, out_path);
    if (stability->parsed())
      return cmd_stability(apartment_path, grassmannian_path, strategy_name, stab_seed,
                           lattice_cap, format, out_path);
    if (polygon->parsed()) {
      std::string poly_format = polygon->count("--format") ? format : "json";
      return cmd_polygon(construct_path, hyperbolic_path, tol, polygon->count("--tol") > 0,
                         max_iter, restarts, poly_seed, poly_format, out_path);
    }
    if (thompson->parsed()) {
      std::string vt_format = thompson->count("--format") ? format : "json";
      return cmd_verify_thompson(vt_n, vt_samples, vt_seed, vt_format, out_path);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
