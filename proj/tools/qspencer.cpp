// Command-line front end: every computation of the library behind one
// deterministic, machine-readable JSON document per invocation.
//
// Exit codes: 0 success, 1 usage error, 2 parse error in an input file,
// 3 mathematical-consistency failure (an invariant violated; always a bug).

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "qspencer/brackets.hpp"
#include "qspencer/characters.hpp"
#include "qspencer/kostant.hpp"
#include "qspencer/les.hpp"
#include "qspencer/threads.hpp"
#include "qspencer/version.hpp"

using json = nlohmann::ordered_json;
using namespace qsp;

namespace {

json envelope(const std::string& command, int n) {
  json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["n"] = n;
  return doc;
}

json weight_json(const SWeight& w) {
  json j;
  j["a"] = w.a;
  j["dyn"] = w.dyn;
  return j;
}

json character_json(const Character& c) {
  json arr = json::array();
  for (const auto& [w, m] : c) {
    json e = weight_json(w);
    e["mult"] = m;
    arr.push_back(e);
  }
  return arr;
}

json decomposition_json(int m, const Character& c, long long* total_out) {
  json arr = json::array();
  long long total = 0;
  for (const auto& [lab, mult] : decompose(m, c)) {
    json e;
    e["name"] = lab.name;
    e["display"] = lab.display();
    e["a"] = lab.a;
    e["hw"] = lab.dynF;
    e["dim"] = lab.dim;
    e["mult"] = mult;
    if (lab.degenerate) e["degenerate"] = true;
    total += mult * lab.dim;
    arr.push_back(e);
  }
  if (total_out) *total_out = total;
  return arr;
}

void emit(const json& doc, bool table, const std::string& table_text) {
  if (table)
    std::cout << table_text;
  else
    std::cout << doc.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cerr << "timing_ms " << ms << "\n";
  }
};

int cmd_info(int n, bool table) {
  GradedAlgebra a(n);
  json doc = envelope("info", n);
  doc["graded_dims"] = {{"g-1", a.dim(-1)}, {"g0", a.dim(0)}, {"g1", a.dim(1)}};
  doc["total_dim"] = a.total_dim();
  doc["subspaces"] = {{"V", a.dim_v()},
                      {"W", a.w_dim()},
                      {"U", a.u_dim()},
                      {"Uperp", 3},
                      {"Wperp", 1}};
  doc["levi_dim"] = a.levi_dim();
  const long stab = static_cast<long>(a.stabilizer_of_w().size());
  doc["stabilizer_dim"] = stab;
  doc["stabilizer_dim_formula"] = GradedAlgebra::stabilizer_dim_formula(n);
  if (stab != GradedAlgebra::stabilizer_dim_formula(n))
    throw MathConsistencyError("stabilizer dimension disagrees with the closed formula");

  std::string t = "n = " + std::to_string(n) + "\n";
  t += "graded dims: " + std::to_string(a.dim(-1)) + " / " + std::to_string(a.dim(0)) +
       " / " + std::to_string(a.dim(1)) + "  (total " + std::to_string(a.total_dim()) +
       ")\n";
  t += "dim W = " + std::to_string(a.w_dim()) + ", dim U = " + std::to_string(a.u_dim()) +
       ", dim s = " + std::to_string(a.levi_dim()) + "\n";
  t += "stabilizer of W in g^0: dim " + std::to_string(stab) + "\n";
  emit(doc, table, t);
  return 0;
}

int cmd_cohomology(int n, int p, int q, bool relative, bool decompose_flag, bool table) {
  if (q < 0 || q > 3)
    throw std::invalid_argument("cohomology is computed for 0 <= q <= 3");
  GradedAlgebra a(n);
  SpencerContext ctx(a);
  const Flavor f = relative ? Flavor::relative : Flavor::absolute;
  std::cerr << "computing H^{" << p << "," << q << "}"
            << (relative ? "(g~,W)" : "(g~)") << " at n = " << n << "\n";
  CohomologyReport rep = cohomology(ctx, p, q, f);

  json doc = envelope("cohomology", n);
  doc["p"] = p;
  doc["q"] = q;
  doc["relative"] = relative;
  doc["cochain_dim"] = rep.cochain_dim;
  doc["rank_out"] = rep.rank_out;
  doc["rank_in"] = rep.rank_in;
  doc["cocycle_dim"] = rep.cochain_dim - rep.rank_out;
  doc["boundary_dim"] = rep.rank_in;
  doc["dim"] = rep.dim;
  doc["character"] = character_json(rep.character);
  long long total = 0;
  if (decompose_flag) {
    doc["decomposition"] = decomposition_json(a.m(), rep.character, &total);
    doc["decomposition_total"] = total;
    if (total != rep.dim)
      throw MathConsistencyError("decomposition total does not match the dimension");
  }

  std::string t = "dim H^{" + std::to_string(p) + "," + std::to_string(q) + "}" +
                  (relative ? "(g~,W)" : "(g~)") + " = " + std::to_string(rep.dim) +
                  "   [cochains " + std::to_string(rep.cochain_dim) + ", rank out " +
                  std::to_string(rep.rank_out) + ", rank in " +
                  std::to_string(rep.rank_in) + "]\n";
  if (decompose_flag) {
    for (const auto& e : doc["decomposition"])
      t += "  " + e["display"].get<std::string>() + "  dim " +
           std::to_string(e["dim"].get<long long>()) + "  x" +
           std::to_string(e["mult"].get<long>()) + "\n";
    t += "  total " + std::to_string(total) + "\n";
  }
  emit(doc, table, t);
  return 0;
}

int cmd_kostant(int n, int q, bool table) {
  GradedAlgebra a(n);  // validates n
  auto entries = hasse_diagram(n, q);

  json doc = envelope("kostant", n);
  doc["q"] = q;
  doc["entries"] = json::array();
  std::string t = "W0(" + std::to_string(q) + ") at n = " + std::to_string(n) + ": " +
                  std::to_string(entries.size()) + " element(s)\n";
  for (const auto& e : entries) {
    json je;
    je["word"] = e.sigma.word;
    je["p"] = e.p;
    je["q"] = e.q;
    je["inversions"] = json::array();
    for (const auto& b : e.inversions) je["inversions"].push_back(b);
    je["sigma_theta"] = e.sigma_theta;
    je["xi"] = e.xi;
    je["omega1"] = e.omega1;
    je["omega_slm"] = e.omega_slm;
    je["dim"] = e.dim;
    doc["entries"].push_back(je);

    t += "  sigma_";
    for (int w : e.sigma.word) t += std::to_string(w);
    t += "  ->  H^{" + std::to_string(e.p) + "," + std::to_string(e.q) + "}, hw " +
         std::to_string(e.omega1) + "w1 + [";
    for (size_t i = 0; i < e.omega_slm.size(); ++i)
      t += (i ? "," : "") + std::to_string(e.omega_slm[i]);
    t += "], dim " + std::to_string(e.dim) + "\n";
  }
  emit(doc, table, t);
  return 0;
}

int cmd_les(int n, int band, bool table) {
  if (band < 0 || band > 5)
    throw std::invalid_argument("the band total degree must be 0..5");
  GradedAlgebra a(n);
  SpencerContext ctx(a);
  std::cerr << "verifying the band " << band << " long exact sequence at n = " << n
            << "\n";
  LesReport rep = les_zigzag(ctx, band, std::max(0, band - 2), 3);

  json doc = envelope("les", n);
  doc["band"] = band;
  doc["nodes"] = json::array();
  std::string t = "band " + std::to_string(band) + " nodes:\n";
  for (const auto& nd : rep.nodes) {
    json jn;
    jn["name"] = nd.name;
    jn["q"] = nd.q;
    jn["type"] = std::string(1, nd.type);
    jn["dim"] = nd.dim;
    jn["rank_in"] = nd.rank_in;
    jn["rank_out"] = nd.rank_out;
    jn["exact"] = nd.exact;
    doc["nodes"].push_back(jn);
    t += "  " + nd.name + "  dim " + std::to_string(nd.dim) + "  in " +
         std::to_string(nd.rank_in) + "  out " + std::to_string(nd.rank_out) +
         (nd.exact ? "  exact" : "  NOT EXACT") + "\n";
  }
  doc["all_exact"] = rep.all_exact;
  t += rep.all_exact ? "all nodes exact\n" : "EXACTNESS FAILURE\n";
  emit(doc, table, t);
  if (!rep.all_exact)
    throw MathConsistencyError("long exact sequence failed to be exact");
  return 0;
}

int cmd_r1(int n, const std::string& path, const std::string& t_str, bool table) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bracket file '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  BracketSpec loaded = bracket_from_json(text);
  if (loaded.n() != n)
    throw ParseError("bracket file has n = " + std::to_string(loaded.n()) +
                     " but --n " + std::to_string(n) + " was requested");

  GradedAlgebra a(n);
  SpencerContext ctx(a);
  R1Engine engine(ctx);

  BracketSpec evaluated = loaded;
  if (!t_str.empty())
    evaluated = deformation_family(standard_contact_bracket(n), loaded, Rational(t_str));
  ObstructionReport rep = engine.r1_class(evaluated);

  json doc = envelope("r1", n);
  doc["bracket"] = path;
  if (t_str.empty())
    doc["t"] = nullptr;
  else
    doc["t"] = t_str;
  doc["vanishes"] = rep.vanishes;
  doc["components"] = {{"L2E*", rep.nonzero_l2e},
                       {"L2E* S2H", rep.nonzero_l2e_s2h},
                       {"S2E* S2H", rep.nonzero_s2e_s2h},
                       {"L2E* S4H", rep.nonzero_l2e_s4h}};
  if (rep.certificate) {
    json cert = json::array();
    for (long i = 0; i < rep.certificate->size(); ++i) {
      if (rep.certificate->re[i].is_zero() && rep.certificate->im[i].is_zero()) continue;
      cert.push_back({{"index", i},
                      {"re", rep.certificate->re[i].str()},
                      {"im", rep.certificate->im[i].str()}});
    }
    doc["certificate"] = cert;
  } else {
    doc["certificate"] = nullptr;
  }

  std::string t = std::string("R1 ") + (rep.vanishes ? "vanishes" : "does not vanish") +
                  "\ncomponents: L2E* " + (rep.nonzero_l2e ? "x" : ".") + "  L2E* S2H " +
                  (rep.nonzero_l2e_s2h ? "x" : ".") + "  S2E* S2H " +
                  (rep.nonzero_s2e_s2h ? "x" : ".") + "  L2E* S4H " +
                  (rep.nonzero_l2e_s4h ? "x" : ".") + "\n";
  emit(doc, table, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic Spencer cohomology for quaternionic CR geometry"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.footer("Thread count is controlled by the QSPENCER_THREADS environment variable.");

  bool table = false;
  app.add_flag("--table", table, "human readable tables instead of JSON");

  int n = 2, p = 0, q = 0, band = 2;
  bool relative = false, decomp = false;
  std::string bracket_path, t_str;

  CLI::App* info = app.add_subcommand("info", "graded dimensions and subspaces");
  info->add_option("--n", n, "quaternionic dimension, n >= 2")->required();

  CLI::App* coh = app.add_subcommand("cohomology", "Spencer cohomology by exact ranks");
  coh->add_option("--n", n)->required();
  coh->add_option("--p", p, "first bidegree, 0..2")->required();
  coh->add_option("--q", q, "second bidegree, 0..3")->required();
  coh->add_flag("--relative", relative, "cochains on W (default: on V)");
  coh->add_flag("--decompose", decomp, "isotypic decomposition under s");

  CLI::App* kos = app.add_subcommand("kostant", "Hasse diagram and harmonic modules");
  kos->add_option("--n", n)->required();
  kos->add_option("--q", q, "length of the Weyl elements, 0..3")->required();

  CLI::App* les = app.add_subcommand("les", "long exact sequence exactness check");
  les->add_option("--n", n)->required();
  les->add_option("--q", band, "total degree band p+q, 0..5")->required();

  CLI::App* r1 = app.add_subcommand("r1", "first-order immersibility obstruction");
  r1->add_option("--n", n)->required();
  r1->add_option("--bracket", bracket_path, "bracket file (JSON)")->required();
  r1->add_option("--t", t_str, "evaluate the family L_o + t L instead of L");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Timer timer;
    enable_progress(true);
    if (n < 2) {
      std::cerr << "error: n must be >= 2 (the n = 1 case is out of scope)\n";
      return 1;
    }
    if (info->parsed()) return cmd_info(n, table);
    if (coh->parsed()) return cmd_cohomology(n, p, q, relative, decomp, table);
    if (kos->parsed()) return cmd_kostant(n, q, table);
    if (les->parsed()) return cmd_les(n, band, table);
    if (r1->parsed()) return cmd_r1(n, bracket_path, t_str, table);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const MathConsistencyError& e) {
    std::cerr << "consistency failure (this is a bug): " << e.what() << "\n";
    return 3;
  }
  return 1;
}
