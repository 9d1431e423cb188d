#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pclie/pclie.hpp"

namespace {

using namespace pclie;

struct Common {
  std::string graph_path;
  std::string variety = "nilpotent:2";
  std::string field = "Q";
  std::size_t cap = BuildOptions{}.dimension_cap;
  bool machine = false;
};

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  try {
    return parse_graph(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FieldTag parse_field(const std::string& s) {
  if (s == "Q" || s == "0") return FieldTag::rationals();
  detail::require(!s.empty() && s.size() < 7 && s.find_first_not_of("0123456789") == std::string::npos,
                  "field must be Q or a prime, got '" + s + "'");
  return FieldTag::prime(static_cast<std::uint32_t>(std::stoul(s)));
}

BuildOptions options(const Common& c) {
  BuildOptions o;
  o.dimension_cap = c.cap;
  return o;
}

std::string names(const VertexSet& s) {
  std::string r = "{";
  for (int v : s) r += (r.size() > 1 ? ",a" : "a") + std::to_string(v);
  return r + "}";
}

int cmd_info(const Common& c, int max_degree) {
  const Graph g = load_graph(c.graph_path);
  Variety v = Variety::parse(c.variety);
  if (v.kind == VarietyKind::metabelian && v.degree == 0) v.degree = max_degree;
  const StructureTable tbl = build_table(g, v, parse_field(c.field), options(c));
  const DimReport r = tbl.dim_report();
  if (c.machine) {
    std::cout << "variety=" << v.to_string() << "\nfield=" << tbl.field().name() << "\n";
    for (std::size_t d = 0; d < r.by_degree.size(); ++d) std::cout << "deg" << d + 1 << "=" << r.by_degree[d] << "\n";
    for (const auto& [md, k] : r.by_multidegree) std::cout << "mdeg" << md.to_string() << "=" << k << "\n";
    std::cout << "total=" << r.total << "\n";
    return 0;
  }
  std::cout << format_dims(r) << "\n";
  for (const auto& [md, k] : r.by_multidegree) std::cout << "  " << md.to_string() << ": " << k << "\n";
  return 0;
}

int cmd_nf(const Common& c, const std::string& expr) {
  const Graph g = load_graph(c.graph_path);
  const Variety v = Variety::parse(c.variety);
  const FieldTag f = parse_field(c.field);
  const LieTerm t = parse_expr(expr, g.vertex_count());
  LiePoly p(make_context(g, v, f));
  if (v.kind == VarietyKind::metabelian) {
    const MetabelianEngine eng(g, f);
    p = eng.nf(t);
    if (v.degree > 0) {
      LiePoly cut(make_context(g, v, f));
      for (const auto& [w, k] : lower_part(p, v.degree).terms()) cut.add_term(w, k);
      p = cut;
    }
  } else {
    p = build_table(g, v, f, options(c)).evaluate(t);
  }
  std::cout << (c.machine ? "nf=" : "") << p.to_string() << "\n";
  return 0;
}

int cmd_decompose(const Common& c, const std::vector<int>& oracle, bool full) {
  const Graph g = load_graph(c.graph_path);
  const FieldTag f = parse_field(c.field);
  const Variety v = Variety::parse(c.variety);
  const auto verdict = is_decomposable(g);
  std::optional<Decomposition> d;
  if (verdict.decomposable) d = split(g, v, f, options(c));

  std::optional<OracleResult> res;
  if (!oracle.empty()) {
    detail::require(oracle.size() == 2 && oracle[0] > 1 && oracle[1] >= 2, "--oracle takes a prime p and a degree m >= 2");
    res = search_decomposition(g, oracle[1], static_cast<std::uint32_t>(oracle[0]));
    detail::ensure(res->found == verdict.decomposable, "oracle disagrees with the complement criterion");
  }

  if (c.machine) {
    std::cout << "decomposable=" << (verdict.decomposable ? "yes" : "no") << "\n";
    std::cout << "complement_components=" << verdict.complement_components.size() << "\n";
    if (full) {
      for (std::size_t k = 0; k < verdict.complement_components.size(); ++k) {
        std::cout << "component" << k + 1 << "=" << names(verdict.complement_components[k]) << "\n";
      }
    }
    if (d) std::cout << format_decomposition_machine(*d);
    if (res) {
      std::cout << "oracle.field=GF(" << res->prime << ")\noracle.degree=" << res->degree << "\n";
      std::cout << "oracle.dimension=" << res->dimension << "\n";
      std::cout << "oracle.subspaces=" << res->subspaces_enumerated << "\n";
      std::cout << "oracle.closed=" << res->closed_subspaces << "\n";
      std::cout << "oracle.ideals=" << res->ideals << "\n";
      std::cout << "oracle.pairs=" << res->pairs_tested << "\n";
      std::cout << "oracle.found=" << (res->found ? "yes" : "no") << "\n";
      for (const auto& row : res->l1) std::cout << "oracle.L1=" << format_fp_row(row, res->basis) << "\n";
      for (const auto& row : res->l2) std::cout << "oracle.L2=" << format_fp_row(row, res->basis) << "\n";
    }
    return 0;
  }

  std::string line = "decomposable: ";
  if (d) {
    line += "yes; A1=" + names(d->part1) + " A2=" + names(d->part2) + "; " +
            (d->report.passed() ? "verified" : "verification failed");
  } else {
    line += "no";
    if (!res) line += "; complement graph connected";
  }
  if (res) {
    line += res->found ? "; oracle: found L1 of dim " + std::to_string(res->l1.size()) + ", L2 of dim " +
                             std::to_string(res->l2.size())
                       : "; oracle: exhausted, none found";
  }
  std::cout << line << "\n";
  if (full && d) {
    std::cout << "finest:";
    for (const auto& s : finest_split(g)) std::cout << " " << names(s);
    std::cout << "\n";
  }
  return d && !d->report.passed() ? 4 : 0;
}

std::string basis_text(const StructureTable& tbl, const Subspace& s) {
  if (s.dim() == 0) return "{}";
  std::string r = "{";
  for (std::size_t k = 0; k < s.dim(); ++k) r += (k ? ", " : "") + tbl.to_poly(s.rows()[k]).to_string();
  return r + "}";
}

int cmd_centralizer(const Common& c, int m, const std::string& expr) {
  const Graph g = load_graph(c.graph_path);
  const StructureTable tbl = build_structure(g, m, parse_field(c.field), options(c));
  const LiePoly x = tbl.evaluate(parse_expr(expr, g.vertex_count()));
  detail::require(!x.is_zero(), "element is zero in " + tbl.context().variety.to_string());
  const auto cmp = compare_centralizer(tbl, x);
  const auto desc = describe_centralizer(g, x);
  std::cout << "element: " << x.to_string() << "\n";
  std::cout << "parts:";
  for (const auto& p : desc.parts) std::cout << " " << names(p.vertices);
  std::cout << "\nhull: " << names(desc.hull) << "\n";
  std::cout << "window: degrees <= " << cmp.window << "\n";
  std::cout << "computed: " << basis_text(tbl, cmp.computed) << "\n";
  std::cout << "predicted: " << basis_text(tbl, cmp.predicted) << "\n";
  std::cout << (cmp.match ? "MATCH" : "MISMATCH") << "\n";
  return cmp.match ? 0 : 4;
}

int cmd_dump(const Common& c, int max_degree) {
  const Graph g = load_graph(c.graph_path);
  Variety v = Variety::parse(c.variety);
  if (v.kind == VarietyKind::metabelian && v.degree == 0) v.degree = max_degree;
  std::cout << build_table(g, v, parse_field(c.field), options(c)).dump();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partially commutative Lie algebras defined by graphs"};
  app.require_subcommand(1);

  Common c;
  auto common = [&](CLI::App* s, bool variety) {
    s->add_option("graph", c.graph_path, "graph file")->required();
    if (variety) s->add_option("--variety", c.variety, "metabelian[:k], nilpotent:m or free:k")->capture_default_str();
    s->add_option("--field", c.field, "Q or a prime p")->capture_default_str();
    s->add_option("--cap", c.cap, "dimension cap")->capture_default_str();
    s->add_flag("--machine", c.machine, "stable key=value output");
  };

  int max_degree = 4;
  auto* info = app.add_subcommand("info", "dimension report");
  common(info, true);
  info->add_option("--max-degree", max_degree, "truncation for the metabelian variety")->capture_default_str();

  std::string expr;
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  common(nf, true);
  nf->add_option("expr", expr, "expression")->required();

  std::vector<int> oracle;
  bool full = false;
  auto* dec = app.add_subcommand("decompose", "direct-sum decomposition");
  common(dec, true);
  dec->add_option("--oracle", oracle, "p m: exhaustive search over GF(p) in N_m")->expected(2);
  dec->add_flag("--full", full, "one summand per complement component");

  int m = 2;
  auto* cen = app.add_subcommand("centralizer", "centralizer in N_m, computed against predicted");
  common(cen, false);
  cen->add_option("m", m, "nilpotency degree")->required();
  cen->add_option("expr", expr, "expression")->required();

  auto* dump = app.add_subcommand("dump", "structure table");
  common(dump, true);
  dump->add_option("--max-degree", max_degree, "truncation for the metabelian variety")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // decompose defaults to N_4 unless a variety is given
  if (dec->parsed() && dec->count("--variety") == 0) c.variety = "nilpotent:4";

  try {
    if (info->parsed()) return cmd_info(c, max_degree);
    if (nf->parsed()) return cmd_nf(c, expr);
    if (dec->parsed()) return cmd_decompose(c, oracle, full);
    if (cen->parsed()) return cmd_centralizer(c, m, expr);
    if (dump->parsed()) return cmd_dump(c, max_degree);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
