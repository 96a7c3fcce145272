// Command-line surface over the library: characters and transverse
// characters, the worked strata tables, identity verifiers, basis listings.
// Vertex ids in flags and output are 1-based; tube and socle labels follow
// the R_i^{(l)} convention and stay 0-based. Exit codes: 0 ok, 1 a verifier
// reported a failure, 2 usage or domain error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qgr/bases.hpp"
#include "qgr/character.hpp"
#include "qgr/error.hpp"
#include "qgr/grassmannian.hpp"
#include "qgr/laurent.hpp"
#include "qgr/mutation.hpp"
#include "qgr/quiver.hpp"
#include "qgr/rep.hpp"
#include "qgr/tube.hpp"

using namespace qgr;
using ojson = nlohmann::ordered_json;

namespace {

// two directed paths from vertex 0 to vertex r, of lengths r and s
Quiver cyclic_quiver(int r, int s) {
  if (r < s) std::swap(r, s);
  if (s < 1) throw ValidationError("--quiver: need r, s >= 1");
  int n = r + s;
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < r; ++i) arrows.emplace_back(i, i + 1);
  int prev = 0;
  for (int i = 0; i < s; ++i) {
    int next = (i == s - 1) ? r : n - 1 - i;
    arrows.emplace_back(prev, next);
    prev = next;
  }
  return Quiver(n, arrows);
}

Quiver quiver_from_flag(const std::string& spec) {
  if (spec == "kronecker") return cyclic_quiver(1, 1);
  // compact form a21, a31, ... and the braced form a_{r,s}
  auto digits = [](const std::string& s) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return !s.empty();
  };
  if (spec.size() == 3 && spec[0] == 'a' && digits(spec.substr(1)))
    return cyclic_quiver(spec[1] - '0', spec[2] - '0');
  if (spec.rfind("a_{", 0) == 0 && spec.back() == '}') {
    std::string body = spec.substr(3, spec.size() - 4);
    auto comma = body.find(',');
    if (comma != std::string::npos && digits(body.substr(0, comma)) &&
        digits(body.substr(comma + 1)))
      return cyclic_quiver(std::stoi(body.substr(0, comma)), std::stoi(body.substr(comma + 1)));
  }
  std::ifstream f(spec);
  if (!f)
    throw ValidationError("--quiver: '" + spec +
                          "' is not an alias (kronecker, a21, a_{r,s}) or a readable file");
  return load_quiver_file(spec);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError(flag + ": bad integer '" + tok + "'");
    }
  return out;
}

DimVector parse_dims(const std::string& s, int n, const std::string& flag) {
  DimVector d = parse_int_list(s, flag);
  if (static_cast<int>(d.size()) != n)
    throw ValidationError(flag + ": expected " + std::to_string(n) + " comma-separated entries");
  return d;
}

// 1-based vertex list -> 0-based
std::vector<int> parse_vertex_seq(const std::string& s, int n, const std::string& flag) {
  std::vector<int> seq = parse_int_list(s, flag);
  for (int& v : seq) {
    if (v < 1 || v > n)
      throw ValidationError(flag + ": vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n));
    --v;
  }
  return seq;
}

std::map<std::string, std::string> key_values(const std::string& tail, const std::string& flag) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(tail);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ValidationError(flag + ": expected key=value, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

int kv_int(const std::map<std::string, std::string>& kv, const std::string& key, int fallback,
           bool required, const std::string& flag) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (required) throw ValidationError(flag + ": missing " + key + "=");
    return fallback;
  }
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw ValidationError(flag + ": bad integer for " + key + "=");
  }
}

struct ModuleSpec {
  bool tube_point = false;
  TubePoint t;
  RepTemplate m;
  std::string label;
};

// band:l=2[:lambda=3|inf] | reg:tube=0:socle=1:l=2 | simple:3 | <file.json>
ModuleSpec parse_module(CharacterContext& ctx, const std::string& spec) {
  ModuleSpec out;
  out.label = spec;
  const std::string flag = "--module " + spec;
  if (spec.rfind("band:", 0) == 0) {
    auto kv = key_values(spec.substr(5), flag);
    int l = kv_int(kv, "l", 0, true, flag);
    if (l < 1) throw ValidationError(flag + ": need l >= 1");
    long long lam = 1;
    bool inf = false;
    auto it = kv.find("lambda");
    if (it != kv.end()) {
      if (it->second == "inf") {
        inf = true;
        lam = 0;
      } else {
        lam = std::stoll(it->second);
      }
    }
    out.tube_point = true;
    out.t = TubePoint::band(lam, inf, l);
    out.m = ctx.tubes().realize(out.t);
    return out;
  }
  if (spec.rfind("reg:", 0) == 0) {
    auto kv = key_values(spec.substr(4), flag);
    int l = kv_int(kv, "l", 0, true, flag);
    if (l < 1) throw ValidationError(flag + ": need l >= 1");
    out.tube_point = true;
    out.t = TubePoint::regular(kv_int(kv, "tube", 0, false, flag),
                               kv_int(kv, "socle", 0, false, flag), l);
    out.m = ctx.tubes().realize(out.t);
    return out;
  }
  if (spec.rfind("simple:", 0) == 0) {
    int v = 0;
    try {
      v = std::stoi(spec.substr(7));
    } catch (const std::exception&) {
      throw ValidationError(flag + ": bad vertex");
    }
    if (v < 1 || v > ctx.quiver().n) throw ValidationError(flag + ": vertex out of range");
    out.m = rt_simple(ctx.quiver(), v - 1);
    return out;
  }
  std::ifstream f(spec);
  if (!f) throw ValidationError(flag + ": not a module spec and not a readable file");
  std::stringstream buf;
  buf << f.rdbuf();
  out.m = rep_template_from_json(buf.str());
  return out;
}

// factors separated by commas, multiplied: delta | b:l=2[:k=0:tube=0] | module spec
LaurentPoly parse_element(CharacterContext& ctx, const std::string& spec) {
  LaurentPoly prod = LaurentPoly::constant(ctx.quiver().n, 1);
  std::stringstream ss(spec);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    any = true;
    const std::string flag = "--element " + spec;
    if (tok == "delta") {
      prod *= ctx.generic_variable();
    } else if (tok.rfind("b:", 0) == 0) {
      auto kv = key_values(tok.substr(2), flag);
      prod *= b_element_defect_zero(ctx, kv_int(kv, "tube", 0, false, flag),
                                    kv_int(kv, "l", 0, true, flag),
                                    kv_int(kv, "k", 0, false, flag))
                  .value;
    } else {
      ModuleSpec ms = parse_module(ctx, tok);
      prod *= ms.tube_point ? ctx.character(ms.t) : ctx.cc_character(ms.m);
    }
  }
  if (!any) throw ValidationError("--element: empty spec");
  return prod;
}

std::string int_str(const Int& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

ojson poly_json(const LaurentPoly& l) { return ojson::parse(laurent_to_json(l)); }

void emit(const ojson& j) { std::cout << j.dump() << "\n"; }

void print_matrix(const IntMatrix& m) {
  size_t w = 1;
  for (auto& row : m)
    for (long long v : row) w = std::max(w, std::to_string(v).size());
  for (auto& row : m) {
    std::string line;
    for (long long v : row) {
      std::string s = std::to_string(v);
      line += "  " + std::string(w - s.size(), ' ') + s;
    }
    std::cout << line << "\n";
  }
}

struct TableColumn {
  std::string label;
  std::map<DimVector, long long> gr, tr;
};

void print_table(const std::vector<TableColumn>& cols, bool json) {
  std::set<DimVector> rows;
  for (auto& c : cols)
    for (auto& [e, v] : c.gr) rows.insert(e);
  if (json) {
    ojson j;
    j["rows"] = ojson::array();
    for (auto& e : rows) j["rows"].push_back(e);
    j["columns"] = ojson::array();
    for (auto& c : cols) {
      ojson cj;
      cj["label"] = c.label;
      cj["gr"] = ojson::array();
      cj["tr"] = ojson::array();
      for (auto& e : rows) {
        auto g = c.gr.find(e);
        auto t = c.tr.find(e);
        cj["gr"].push_back(g == c.gr.end() ? 0 : g->second);
        cj["tr"].push_back(t == c.tr.end() ? 0 : t->second);
      }
      j["columns"].push_back(cj);
    }
    emit(j);
    return;
  }
  std::vector<std::string> headers{"e"};
  for (auto& c : cols) {
    headers.push_back("Gr(" + c.label + ")");
    headers.push_back("Tr(" + c.label + ")");
  }
  std::vector<std::vector<std::string>> body;
  for (auto& e : rows) {
    std::vector<std::string> line{dv_to_string(e)};
    for (auto& c : cols) {
      auto g = c.gr.find(e);
      auto t = c.tr.find(e);
      line.push_back(std::to_string(g == c.gr.end() ? 0 : g->second));
      line.push_back(std::to_string(t == c.tr.end() ? 0 : t->second));
    }
    body.push_back(std::move(line));
  }
  std::vector<size_t> w(headers.size());
  for (size_t i = 0; i < headers.size(); ++i) {
    w[i] = headers[i].size();
    for (auto& line : body) w[i] = std::max(w[i], line[i].size());
  }
  auto print_line = [&](const std::vector<std::string>& line) {
    std::string s;
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) s += "  ";
      // label column left-aligned, counts right-aligned
      if (i == 0)
        s += line[i] + std::string(w[i] - line[i].size(), ' ');
      else
        s += std::string(w[i] - line[i].size(), ' ') + line[i];
    }
    std::cout << s << "\n";
  };
  print_line(headers);
  for (auto& line : body) print_line(line);
}

void print_reports(const std::vector<Report>& reports, bool json) {
  if (json) {
    std::string out = "[";
    for (size_t i = 0; i < reports.size(); ++i) {
      if (i) out += ",";
      out += report_to_json(reports[i]);
    }
    out += "]";
    std::cout << out << "\n";
    return;
  }
  int passed = 0;
  for (auto& r : reports) {
    std::string line = r.identity;
    for (auto& [k, v] : r.params) line += " " + k + "=" + v;
    line += r.pass ? ": PASS" : ": FAIL";
    std::cout << line << "\n";
    passed += r.pass ? 1 : 0;
  }
  std::cout << passed << "/" << reports.size() << " passed\n";
}

bool all_pass(const std::vector<Report>& reports) {
  for (auto& r : reports)
    if (!r.pass) return false;
  return true;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characters, identities and basis listings for affine quivers"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  std::string quiver_flag;
  auto add_common = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("--quiver", quiver_flag, "alias (kronecker, a21, a_{r,s}) or quiver file")
        ->required();
    return sub;
  };

  auto* cmd_delta = add_common(app.add_subcommand("delta", "affine type and imaginary root"));

  std::string avec, bvec;
  auto* cmd_euler = add_common(app.add_subcommand("euler-form", "Euler matrix or form values"));
  cmd_euler->add_option("--a", avec, "first dimension vector d1,d2,...");
  cmd_euler->add_option("--b", bvec, "second dimension vector");

  std::string bound_flag;
  auto* cmd_roots = add_common(app.add_subcommand("roots", "positive roots up to a bound"));
  cmd_roots->add_option("--bound", bound_flag, "componentwise bound d1,d2,...")->required();

  std::string seq_flag;
  auto* cmd_mutate = add_common(app.add_subcommand("mutate", "mutate the initial seed"));
  cmd_mutate->add_option("--sequence", seq_flag, "1-based vertex sequence k1,k2,...")->required();

  int depth = 3;
  auto* cmd_vars =
      add_common(app.add_subcommand("variables", "cluster variables within a mutation depth"));
  cmd_vars->add_option("--depth", depth, "mutation search depth");

  std::string module_flag, primes_flag;
  auto* cmd_char = add_common(app.add_subcommand("char", "Caldero-Chapoton character"));
  cmd_char->add_option("--module", module_flag, "band:l=..:lambda=.. | reg:tube=..:socle=..:l=.. | simple:i | file")
      ->required();
  cmd_char->add_option("--primes", primes_flag, "also print subrepresentation counts over F_p");

  auto* cmd_tr = add_common(app.add_subcommand("transverse", "transverse character"));
  cmd_tr->add_option("--module", module_flag, "tube point spec (band:... or reg:...)")->required();

  int figure = 0;
  std::vector<std::string> table_modules;
  auto* cmd_table = add_common(app.add_subcommand("table", "Gr/Tr strata table"));
  auto* fig_opt = cmd_table->add_option("--figure", figure, "1: quasi-length 2 over a_{1,1}; 2: dimension delta over a21");
  cmd_table->add_option("--module", table_modules, "explicit column (repeatable)")
      ->type_size(1)
      ->excludes(fig_opt);

  auto* cmd_verify = add_common(app.add_subcommand("verify", "identity verifiers"));
  cmd_verify->require_subcommand(1);
  int tube = 0, vl = 1, vm = 1, vn = 1, vj = 0, vk = 0;
  auto* v_diff = cmd_verify->add_subcommand("diff", "difference property across socles");
  v_diff->fallthrough();
  v_diff->add_option("--tube", tube, "tube index (0 or 1)");
  v_diff->add_option("--l", vl, "Chebyshev level, l >= 1")->required();
  auto* v_mult = cmd_verify->add_subcommand("mult", "tube multiplication formula");
  v_mult->fallthrough();
  v_mult->add_option("--tube", tube, "tube index");
  v_mult->add_option("--m", vm, "first quasi-length")->required();
  v_mult->add_option("--n", vn, "second quasi-length")->required();
  v_mult->add_option("--j", vj, "socle offset");
  v_mult->add_option("--k", vk, "winding count");
  auto* v_key = cmd_verify->add_subcommand("key", "exchange of quasi-lengths lp-1 and p-1");
  v_key->fallthrough();
  v_key->add_option("--tube", tube, "tube index");
  v_key->add_option("--l", vl, "level, l >= 1")->required();
  auto* v_geom = cmd_verify->add_subcommand("geom", "pair basis elements with transverse characters");
  v_geom->fallthrough();
  v_geom->add_option("--bound", bound_flag, "denominator bound d1,d2,...")->required();
  int geom_depth = 4;
  v_geom->add_option("--depth", geom_depth, "mutation search depth");
  std::string element_flag;
  std::vector<std::string> seq_flags;
  auto* v_pos = cmd_verify->add_subcommand("positivity", "re-expand an element in other clusters");
  v_pos->fallthrough();
  v_pos->add_option("--element", element_flag, "comma-separated factors: delta | b:l=.. | module spec")
      ->required();
  v_pos->add_option("--sequence", seq_flags, "1-based mutation sequence (repeatable)")->type_size(1);

  std::string basis_set;
  int basis_depth = 6;
  auto* cmd_basis = add_common(app.add_subcommand("basis", "basis listing over a denominator box"));
  cmd_basis->add_option("set", basis_set, "B, G or C")->required();
  cmd_basis->add_option("--bound", bound_flag, "denominator bound d1,d2,...")->required();
  cmd_basis->add_option("--depth", basis_depth, "mutation search depth");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Quiver q = quiver_from_flag(quiver_flag);

    if (cmd_delta->parsed()) {
      AffineType at = classify_affine(q);
      if (json) {
        ojson j;
        j["label"] = at.label();
        j["delta"] = at.delta;
        emit(j);
      } else {
        std::cout << "label: " << at.label() << "\n";
        std::cout << "delta: " << dv_to_string(at.delta) << "\n";
      }
      return 0;
    }

    if (cmd_euler->parsed()) {
      if (avec.empty() != bvec.empty())
        throw ValidationError("euler-form: give both --a and --b, or neither");
      if (avec.empty()) {
        IntMatrix e = euler_matrix(q);
        if (json) {
          ojson j;
          j["matrix"] = e;
          emit(j);
        } else {
          print_matrix(e);
        }
        return 0;
      }
      DimVector a = parse_dims(avec, q.n, "--a");
      DimVector b = parse_dims(bvec, q.n, "--b");
      long long ab = euler_form(q, a, b), ba = euler_form(q, b, a);
      if (json) {
        ojson j;
        j["ab"] = ab;
        j["ba"] = ba;
        j["symmetrized"] = ab + ba;
        emit(j);
      } else {
        std::cout << "<a,b> = " << ab << "\n<b,a> = " << ba << "\n(a,b) = " << ab + ba << "\n";
      }
      return 0;
    }

    if (cmd_roots->parsed()) {
      auto roots = enumerate_roots(q, parse_dims(bound_flag, q.n, "--bound"));
      if (json) {
        ojson j = ojson::array();
        for (auto& r : roots) {
          ojson rj;
          rj["d"] = r.d;
          rj["real"] = r.real;
          j.push_back(rj);
        }
        emit(j);
      } else {
        std::cout << "count: " << roots.size() << "\n";
        for (auto& r : roots)
          std::cout << dv_to_string(r.d) << (r.real ? " real" : " imaginary") << "\n";
      }
      return 0;
    }

    if (cmd_mutate->parsed()) {
      Seed s = apply_sequence(initial_seed(q), parse_vertex_seq(seq_flag, q.n, "--sequence"));
      if (json) {
        ojson j;
        j["variables"] = ojson::array();
        for (auto& x : s.x) j["variables"].push_back(poly_json(x));
        j["b"] = s.b;
        emit(j);
      } else {
        for (int i = 0; i < q.n; ++i)
          std::cout << "x" << i + 1 << " = " << to_string(s.x[i]) << "\n";
        std::cout << "b:\n";
        print_matrix(s.b);
      }
      return 0;
    }

    if (cmd_vars->parsed()) {
      auto vars = enumerate_cluster_variables(q, depth);
      if (json) {
        ojson j;
        j["count"] = vars.size();
        j["variables"] = ojson::array();
        for (auto& x : vars) j["variables"].push_back(poly_json(x));
        emit(j);
      } else {
        std::cout << "count: " << vars.size() << "\n";
        for (auto& x : vars) std::cout << to_string(x) << "\n";
      }
      return 0;
    }

    if (cmd_char->parsed() || cmd_tr->parsed()) {
      CharacterContext ctx(q);
      ModuleSpec ms = parse_module(ctx, module_flag);
      bool transverse = cmd_tr->parsed();
      if (transverse && !ms.tube_point)
        throw ValidationError("transverse: --module must be a tube point (band: or reg:)");
      LaurentPoly x = transverse      ? ctx.transverse_character(ms.t)
                      : ms.tube_point ? ctx.character(ms.t)
                                      : ctx.cc_character(ms.m);
      ojson counts = ojson::object();
      std::vector<std::string> count_lines;
      if (!primes_flag.empty()) {
        for (int p : parse_int_list(primes_flag, "--primes")) {
          if (p < 2) throw ValidationError("--primes: need primes >= 2");
          if (!ms.m.valid_at(p))
            throw ValidationError("--primes: " + std::to_string(p) +
                                  " collides with a guard value of this module");
          auto cnt = count_all_subreps(ms.m.realize(p));
          ojson pj = ojson::object();
          std::string line = "p=" + std::to_string(p) + ":";
          for (auto& [e, c] : *cnt) {
            pj[dv_to_string(e)] = int_str(c);
            line += " " + dv_to_string(e) + ":" + int_str(c);
          }
          counts[std::to_string(p)] = pj;
          count_lines.push_back(line);
        }
      }
      if (json) {
        ojson j;
        j["module"] = ms.label;
        j["dims"] = ms.tube_point ? ctx.tubes().point_dims(ms.t) : ms.m.dims;
        j[transverse ? "transverse" : "character"] = poly_json(x);
        j["den"] = denominator_vector(x);
        j["value_at_ones"] = int_str(x.value_at_ones());
        if (!counts.empty()) j["counts"] = counts;
        emit(j);
      } else {
        std::cout << "module: " << ms.label << "\n";
        std::cout << "dims: "
                  << dv_to_string(ms.tube_point ? ctx.tubes().point_dims(ms.t) : ms.m.dims)
                  << "\n";
        std::cout << (transverse ? "transverse: " : "character: ") << to_string(x) << "\n";
        std::cout << "den: " << dv_to_string(denominator_vector(x)) << "\n";
        std::cout << "value at ones: " << int_str(x.value_at_ones()) << "\n";
        for (auto& line : count_lines) std::cout << line << "\n";
      }
      return 0;
    }

    if (cmd_table->parsed()) {
      CharacterContext ctx(q);
      std::vector<std::pair<std::string, TubePoint>> points;
      if (figure == 1) {
        if (classify_affine(q).label() != "A~(1,1)")
          throw ValidationError("--figure 1 needs an a_{1,1} quiver");
        points = {{"M_0^(2)", TubePoint::band(0, false, 2)},
                  {"M_lambda^(2)", TubePoint::band(1, false, 2)},
                  {"M_inf^(2)", TubePoint::band(0, true, 2)}};
      } else if (figure == 2) {
        if (classify_affine(q).label() != "A~(2,1)")
          throw ValidationError("--figure 2 needs an a21 quiver");
        points = {{"M_lambda", TubePoint::band(1, false, 1)},
                  {"M_0", TubePoint::regular(0, 1, 2)},
                  {"R_0^(2)", TubePoint::regular(0, 0, 2)},
                  {"M_inf", TubePoint::regular(1, 0, 1)}};
      } else if (figure != 0) {
        throw ValidationError("--figure: only 1 and 2 exist");
      } else if (table_modules.empty()) {
        throw ValidationError("table: give --figure or at least one --module");
      }
      for (auto& spec : table_modules) {
        ModuleSpec ms = parse_module(ctx, spec);
        if (!ms.tube_point)
          throw ValidationError("table: --module must be a tube point (band: or reg:)");
        points.emplace_back(ms.label, ms.t);
      }
      std::vector<TableColumn> cols;
      for (auto& [label, t] : points) {
        TableColumn c;
        c.label = label;
        c.gr = ctx.euler_characteristics(ctx.tubes().realize(t));
        c.tr = ctx.transverse_euler(t);
        cols.push_back(std::move(c));
      }
      print_table(cols, json);
      return 0;
    }

    if (cmd_verify->parsed()) {
      CharacterContext ctx(q);
      std::vector<Report> reports;
      if (v_diff->parsed()) {
        reports = verify_difference_property(ctx, tube, vl);
      } else if (v_mult->parsed()) {
        reports.push_back(verify_multiplication_formula(ctx, tube, vm, vn, vj, vk));
      } else if (v_key->parsed()) {
        reports.push_back(verify_key_identity(ctx, tube, vl));
      } else if (v_geom->parsed()) {
        reports = geometrization_check(ctx, parse_dims(bound_flag, q.n, "--bound"), geom_depth);
      } else if (v_pos->parsed()) {
        LaurentPoly elem = parse_element(ctx, element_flag);
        std::vector<std::vector<int>> seqs;
        for (auto& s : seq_flags) seqs.push_back(parse_vertex_seq(s, q.n, "--sequence"));
        if (seqs.empty())
          for (int i = 0; i < q.n; ++i) seqs.push_back({i});
        for (auto& s : seqs) {
          try {
            reports.push_back(positivity_spotcheck(ctx, elem, s));
          } catch (const DivisionError&) {
            // not Laurent in the target cluster: outside the cluster algebra
            Report r;
            r.identity = "positivity";
            std::string label;
            for (size_t i = 0; i < s.size(); ++i)
              label += (i ? "," : "") + std::to_string(s[i] + 1);
            r.params = {{"cluster", label}, {"note", "expansion is not Laurent"}};
            r.lhs = LaurentPoly::zero(q.n);
            r.rhs = elem;
            reports.push_back(std::move(r));
          }
        }
      }
      print_reports(reports, json);
      return all_pass(reports) ? 0 : 1;
    }

    if (cmd_basis->parsed()) {
      std::string name = basis_set;
      for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (name != "B" && name != "G" && name != "C")
        throw ValidationError("basis: set must be B, G or C");
      CharacterContext ctx(q);
      BasisSets bs = basis_sets(ctx, parse_dims(bound_flag, q.n, "--bound"), basis_depth);
      const auto& elems = name == "B" ? bs.b : name == "G" ? bs.g : bs.c;
      if (json) {
        ojson j;
        j["set"] = name;
        j["count"] = elems.size();
        j["elements"] = ojson::array();
        for (auto& e : elems) {
          ojson ej;
          ej["label"] = e.label;
          ej["den"] = e.den;
          ej["value"] = poly_json(e.value);
          j["elements"].push_back(ej);
        }
        emit(j);
      } else {
        std::cout << "set: " << name << "\ncount: " << elems.size() << "\n";
        for (auto& e : elems)
          std::cout << dv_to_string(e.den) << "  " << e.label << " = " << to_string(e.value)
                    << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
