// latscope: exact lattice projections, band periods and pattern rendering.
//
// All numeric command-line inputs use the exact literal grammar of the
// library ("1/2", "1/2*r3", "1 - 1/2*r6"); floats are rejected so width
// classification never suffers from rounding.
//
// Exit codes: 0 ok, 1 usage/parse/precondition error, 2 validation
// failure, 3 embedded-table mismatch.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "latscope/band.hpp"
#include "latscope/classify.hpp"
#include "latscope/holohedry.hpp"
#include "latscope/io.hpp"
#include "latscope/projection.hpp"

using namespace latscope;
using latscope::io::json;

namespace {

Vec parse_vec(const std::string& text) {
  Vec v;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    v.push_back(QF::parse(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

std::vector<double> parse_doubles(const std::string& text, size_t want) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    std::string part = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(std::stod(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) +
                                " comma-separated values, got " +
                                std::to_string(out.size()));
  return out;
}

json module_report(const ZModule& m) {
  json j = io::module_to_json(m);
  j["rank"] = m.rank();
  std::string name = lattice_name(m);
  if (m.dim() == 2) j["name"] = name;
  return j;
}

std::string basis_str(const ZModule& m) {
  std::string s = "{";
  for (size_t i = 0; i < m.gens().size(); ++i) {
    if (i) s += "; ";
    s += "(";
    for (size_t j = 0; j < m.gens()[i].size(); ++j) {
      if (j) s += " ";
      s += m.gens()[i][j].str();
    }
    s += ")";
  }
  return s + "}";
}

std::string canonical_pair(std::string id) {
  if (id == "4.3") return "4.2";
  if (id == "5.4") return "5.3";
  return id;
}

int run(int argc, char** argv) {
  CLI::App app{
      "latscope: exact lattices, band projections and periodic patterns"};
  app.require_subcommand(1);

  std::string lattice_file, group_file, pattern_file, target_file;
  std::string y0_str, p_str, r_str, widths_str, window_str, px_str, out_file;
  bool check_tables = false;

  auto* cmd_dual = app.add_subcommand("dual", "Dual (reciprocal) lattice");
  cmd_dual->add_option("--lattice", lattice_file, "lattice JSON file")
      ->required();

  auto* cmd_hol =
      app.add_subcommand("holohedry", "Orthogonal symmetries of a lattice");
  cmd_hol->add_option("--lattice", lattice_file, "lattice JSON file")
      ->required();

  auto* cmd_check = app.add_subcommand(
      "check-period", "Is p a period of the projected band?");
  cmd_check->add_option("--lattice", lattice_file, "lattice JSON file")
      ->required();
  cmd_check->add_option("--y0", y0_str, "band width (exact literal)")
      ->required();
  cmd_check->add_option("--p", p_str, "horizontal vector, comma-separated")
      ->required();

  auto* cmd_periods = app.add_subcommand(
      "periods", "Common periods of all projected invariant patterns");
  cmd_periods->add_option("--group", group_file, "group JSON file")
      ->required();
  cmd_periods->add_option("--y0", y0_str, "band width (exact literal)")
      ->required();

  auto* cmd_classify =
      app.add_subcommand("classify", "Structural case of a group");
  cmd_classify->add_option("--group", group_file, "group JSON file")
      ->required();
  cmd_classify->add_option("--target", target_file,
                           "target planar lattice JSON (default hexagonal)");

  auto* cmd_hex = app.add_subcommand(
      "hex-table", "Width-class profile of a hexagonal-family group");
  cmd_hex->add_option("--group", group_file, "group JSON file")->required();
  cmd_hex->add_flag("--check-tables", check_tables,
                    "compare against the embedded reference profiles; "
                    "exit 3 on mismatch");

  auto* cmd_sweep =
      app.add_subcommand("sweep", "CSV of projected lattices over widths");
  cmd_sweep->add_option("--group", group_file, "group JSON file")->required();
  cmd_sweep
      ->add_option("--widths", widths_str,
                   "comma-separated band widths (exact literals)")
      ->required();

  auto* cmd_render = app.add_subcommand(
      "render", "Project a pattern and write a PGM image");
  cmd_render->add_option("--pattern", pattern_file, "pattern JSON file")
      ->required();
  cmd_render->add_option("--y0", y0_str, "band width (exact literal)")
      ->required();
  cmd_render
      ->add_option("--window", window_str, "xmin,xmax,ymin,ymax (floats)")
      ->required();
  cmd_render->add_option("--px", px_str, "width,height in pixels")->required();
  cmd_render->add_option("--out", out_file, "output PGM path")->required();

  auto* cmd_validate =
      app.add_subcommand("validate", "Check group consistency; exit 2 on "
                         "violations");
  cmd_validate->add_option("--group", group_file, "group JSON file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_dual->parsed()) {
    ZModule L = io::module_from_json(io::load_file(lattice_file));
    if (!L.is_lattice())
      throw std::invalid_argument("dual: generators are not a full-rank "
                                  "lattice basis");
    std::cout << io::module_to_json(L.dual()).dump(2) << "\n";
  } else if (cmd_hol->parsed()) {
    ZModule L = io::module_from_json(io::load_file(lattice_file));
    if (!L.is_lattice())
      throw std::invalid_argument("holohedry: generators are not a full-rank "
                                  "lattice basis");
    auto els = holohedry(L);
    json j;
    j["order"] = els.size();
    json arr = json::array();
    for (const auto& m : els) arr.push_back(io::mat_to_json(m));
    j["elements"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (cmd_check->parsed()) {
    ZModule L = io::module_from_json(io::load_file(lattice_file));
    QF y0 = QF::parse(y0_str);
    if (y0.sign() <= 0) throw std::invalid_argument("y0 must be positive");
    Vec p = parse_vec(p_str);
    json j;
    j["period"] = band_period_check(L, y0, p);
    switch (prop_latt_check(L, y0, p)) {
      case PropCase::None: j["sufficient_case"] = nullptr; break;
      case PropCase::CaseI: j["sufficient_case"] = "I"; break;
      case PropCase::CaseII: j["sufficient_case"] = "II"; break;
      case PropCase::CaseIII: j["sufficient_case"] = "III"; break;
    }
    std::cout << j.dump() << "\n";
  } else if (cmd_periods->parsed()) {
    CrystalGroup g = io::group_from_json(io::load_file(group_file));
    QF y0 = QF::parse(y0_str);
    if (y0.sign() <= 0) throw std::invalid_argument("y0 must be positive");
    PeriodModule pm = period_module(g, y0);
    json j = module_report(pm.module);
    j["derivation"] = pm.derivation;
    std::cout << j.dump(2) << "\n";
  } else if (cmd_classify->parsed()) {
    CrystalGroup g = io::group_from_json(io::load_file(group_file));
    ZModule m = target_file.empty()
                    ? hex_lattice()
                    : io::module_from_json(io::load_file(target_file));
    CaseLabel cl = classify_case(g, m);
    json j;
    j["case"] = cl.id;
    if (cl.id != "1") {
      j["c"] = cl.c.str();
      j["a3"] = cl.a3.str();
      j["b3"] = cl.b3.str();
      j["a_hat"] = io::vec_to_json(cl.a_hat);
      j["b_hat"] = io::vec_to_json(cl.b_hat);
    }
    if (!cl.v1.empty()) {
      j["v1"] = io::vec_to_json(cl.v1);
      j["y1"] = cl.y1.str();
    }
    std::cout << j.dump(2) << "\n";
  } else if (cmd_hex->parsed()) {
    CrystalGroup g = io::group_from_json(io::load_file(group_file));
    std::string id = classify_case(g, hex_lattice()).id;
    HexProfile p = hex_profile(g);
    json j;
    j["case"] = id;
    json prof;
    prof["A"] = module_report(p.a);
    prof["B"] = module_report(p.b);
    prof["C"] = module_report(p.c);
    prof["O"] = module_report(p.o);
    j["profile"] = prof;
    if (check_tables) {
      bool matched = false;
      for (const auto& f : hex_fixtures()) {
        if (canonical_pair(f.id) != id) continue;
        if (f.a == p.a && f.b == p.b && f.c == p.c && f.o == p.o) {
          matched = true;
          j["fixture"] = f.id;
          if (!f.v1.empty()) j["fixture_v1"] = io::vec_to_json(f.v1);
          break;
        }
      }
      j["tables_match"] = matched;
      std::cout << j.dump(2) << "\n";
      if (!matched) return 3;
    } else {
      std::cout << j.dump(2) << "\n";
    }
  } else if (cmd_sweep->parsed()) {
    CrystalGroup g = io::group_from_json(io::load_file(group_file));
    std::vector<QF> widths;
    for (const auto& q : parse_vec(widths_str)) widths.push_back(q);
    std::sort(widths.begin(), widths.end(),
              [](const QF& a, const QF& b) { return a < b; });
    auto mv = g.lattice().minimal_vertical();
    auto sd = g.sigma_data();
    std::cout << "y0,class,rank,basis,name\n";
    for (const auto& y0 : widths) {
      if (y0.sign() <= 0) throw std::invalid_argument("widths must be positive");
      char cls = '-';
      if (mv)
        cls = width_class(y0, mv->first,
                          sd.in_j ? std::optional<QF>(sd.y1) : std::nullopt);
      PeriodModule pm = period_module(g, y0);
      std::string name = lattice_name(pm.module);
      if (name == basis_str(pm.module) || name.front() == '{') name = "-";
      std::cout << y0.str() << "," << cls << "," << pm.module.rank() << ","
                << "\"" << basis_str(pm.module) << "\"," << name << "\n";
    }
  } else if (cmd_render->parsed()) {
    io::PatternSpec spec = io::pattern_from_json(io::load_file(pattern_file));
    auto problems = spec.group.validate();
    if (!problems.empty()) {
      for (const auto& p : problems) std::cerr << "group: " << p << "\n";
      return 2;
    }
    QF y0 = QF::parse(y0_str);
    if (y0.sign() <= 0) throw std::invalid_argument("y0 must be positive");
    WaveSum f(spec.group.dim());
    for (const auto& w : spec.waves) {
      WaveSum iw = invariant_wave(spec.group, w.k);
      for (const auto& term : iw.waves())
        f.add({term.k, term.coeff * w.coeff});
    }
    WaveSum flat = project_band(f, y0);
    auto win = parse_doubles(window_str, 4);
    auto px = parse_doubles(px_str, 2);
    if (win[0] >= win[1] || win[2] >= win[3])
      throw std::invalid_argument("degenerate window");
    Image img = render(flat, win[0], win[1], win[2], win[3],
                       static_cast<int>(px[0]), static_cast<int>(px[1]));
    write_pgm(img, out_file);
    std::cerr << "wrote " << out_file << " (" << img.width << "x"
              << img.height << ")\n";
  } else if (cmd_validate->parsed()) {
    CrystalGroup g = io::group_from_json(io::load_file(group_file));
    auto problems = g.validate();
    json j;
    j["valid"] = problems.empty();
    j["problems"] = problems;
    std::cout << j.dump(2) << "\n";
    if (!problems.empty()) return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
