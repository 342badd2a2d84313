#include "commands.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lensfill/families.hpp"
#include "lensfill/surfaces.hpp"
#include "report.hpp"

namespace lensfill::cli {

using nlohmann::json;

namespace {

struct Globals {
  bool json = false;
  bool quiet = false;
  std::uint64_t budget = kDefaultBudget;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LensSpace lens_arg(const std::string& p, const std::string& q) {
  try {
    return LensSpace(Int(p), Int(q));
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  } catch (const std::runtime_error&) {
    throw UsageError("p and q must be integers");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

int cmd_classify(const Globals& g, const std::string& p, const std::string& q, std::ostream& out) {
  const Report r = build_report(lens_arg(p, q), g.budget);
  if (g.json)
    out << to_json(r).dump(2) << "\n";
  else
    out << render_text(r, g.quiet);
  return r.complete() ? kExitOk : kExitBudget;
}

int cmd_scan(const Globals& g, const std::string& pmax_s, const std::string& from,
             std::string format, std::ostream& out) {
  Int pmax;
  Int p0 = 2, q0 = 1;
  try {
    pmax = Int(pmax_s);
    if (!from.empty()) {
      const auto colon = from.find(':');
      p0 = Int(from.substr(0, colon));
      if (colon != std::string::npos) q0 = Int(from.substr(colon + 1));
    }
  } catch (const std::runtime_error&) {
    throw UsageError("--pmax and --from take integers (--from P or P:Q)");
  }
  if (pmax < 2) throw UsageError("--pmax must be at least 2");
  if (p0 < 2 || q0 < 1) throw UsageError("--from must name p >= 2, q >= 1");
  if (g.json) format = "jsonl";
  if (format != "csv" && format != "jsonl") throw UsageError("--format is csv or jsonl");

  if (format == "csv") out << "p,q,cf,dehn_status,h1_status,qr,notes\n";
  bool complete = true;
  for (Int p = p0; p <= pmax; ++p) {
    for (Int q = p == p0 ? q0 : Int(1); q < p; ++q) {
      if (boost::multiprecision::gcd(p, q) != 1) continue;
      const Report r = build_report(LensSpace(p, q), g.budget);
      complete = complete && r.complete();
      if (format == "jsonl") {
        out << to_json(r).dump() << "\n";
      } else {
        std::vector<std::string> notes = r.notes;
        if (!r.complete()) notes.push_back("search budget exhausted");
        out << p << "," << q << "," << csv_field(r.cf.to_string()) << ","
            << to_string(r.dehn.status) << "," << to_string(r.h1_filling.status) << ","
            << (r.qr_topological ? "true" : "false") << "," << csv_field(join(notes, "; "))
            << "\n";
      }
      out.flush();
    }
  }
  return complete ? kExitOk : kExitBudget;
}

json cf_json(const ContinuedFraction& cf) {
  json j = json::array();
  for (const Int& x : cf.entries()) j.push_back(int_json(x));
  return j;
}

int cmd_family(const Globals& g, const std::string& name, long m, long n, std::ostream& out) {
  FamilyId f;
  LensSpace l{2, 1};
  try {
    f = family_from_string(name);
    l = family_member(f, m, n);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  const ContinuedFraction cf = hj_expand(l.p(), l.q());
  const ContinuedFraction dual = hj_expand(l.p(), l.p() - l.q());
  const CfCheck check = verify_cf_identities(f, m, m, n, n);
  if (g.json) {
    out << json{{"family", name}, {"m", m}, {"n", n}, {"p", int_json(l.p())},
                {"q", int_json(l.q())}, {"cf", cf_json(cf)}, {"cf_dual", cf_json(dual)},
                {"cf_identities", check.ok}}
               .dump(2)
        << "\n";
  } else {
    out << "(" << l.p() << ", " << l.q() << ")\n";
    if (!g.quiet) {
      out << "p/q       " << cf.to_string() << "\n";
      out << "p/(p-q)   " << dual.to_string() << "\n";
      out << "closed forms " << (check.ok ? "agree" : "disagree: " + check.detail) << "\n";
    }
  }
  return check.ok ? kExitOk : kExitFailure;
}

int cmd_embed(const Globals& g, const std::string& p, const std::string& q, std::size_t rank,
              std::ostream& out) {
  const LensSpace l = lens_arg(p, q);
  const ChainLattice chain = ChainLattice::from_lens(l);
  if (rank == 0) rank = chain.size() + 1;
  if (rank < chain.size()) throw UsageError("--rank must be at least the chain length");
  std::vector<Embedding> found;
  SearchStats stats;
  try {
    found = enumerate_embeddings(chain, rank, g.budget, &stats);
  } catch (const BudgetExhausted& ex) {
    out << (g.json ? json{{"status", "BUDGET_EXHAUSTED"}, {"nodes", ex.nodes()}}.dump(2)
                   : std::string(ex.what()))
        << "\n";
    return kExitBudget;
  } catch (const SearchRangeExceeded& ex) {
    out << ex.what() << "\n";
    return kExitBudget;
  }
  const bool corank_one = rank == chain.size() + 1;
  json list = json::array();
  std::ostringstream text;
  text << found.size() << " embedding(s) of " << chain.weights().to_string() << " into -Z^"
       << rank << " (" << stats.nodes << " nodes)\n";
  for (const Embedding& e : found) {
    json images = json::array();
    for (std::size_t i = 0; i < e.images.size(); ++i) {
      json img = json::array();
      for (const Int& x : e.images[i].coords()) img.push_back(int_json(x));
      images.push_back(std::move(img));
      if (!g.quiet) text << "  v" << i + 1 << " -> " << e.images[i].to_string() << "\n";
    }
    json item{{"images", std::move(images)}};
    if (corank_one) {
      const ComplementGenerator cg = complement_generator(e);
      const bool cm = maps_to_changemaker(cg.vector);
      json gen = json::array();
      for (const Int& x : cg.vector.coords()) gen.push_back(int_json(x));
      item["generator"] = std::move(gen);
      item["square"] = int_json(cg.square);
      item["changemaker"] = cm;
      text << "  generator " << cg.vector.to_string() << "  square " << cg.square
           << (cg.square == -l.p() ? " = -p" : "") << (cm ? "  changemaker" : "") << "\n";
    }
    list.push_back(std::move(item));
  }
  if (g.json)
    out << json{{"chain", cf_json(chain.weights())}, {"target_rank", rank},
                {"nodes", stats.nodes}, {"embeddings", std::move(list)}}
               .dump(2)
        << "\n";
  else
    out << text.str();
  return kExitOk;
}

int cmd_dinv(const Globals& g, const std::string& p, const std::string& q, bool spin,
             const std::string& orientation, std::ostream& out) {
  const LensSpace l = lens_arg(p, q);
  Orientation o;
  if (orientation == "negative")
    o = Orientation::NegativeSurgery;
  else if (orientation == "positive")
    o = Orientation::PositiveSurgery;
  else
    throw UsageError("--orientation is negative or positive");

  std::vector<SpinD> values;
  if (spin) {
    values = spin_d_values(l, o);
  } else {
    for (Int i = 0; i < l.p(); ++i) values.push_back({i, d_invariant(l, i, o)});
  }
  if (g.json) {
    json items = json::array();
    for (const SpinD& v : values) items.push_back({{"label", int_json(v.label)}, {"d", to_string(v.d)}});
    json j{{"subject", l.to_string()}, {"orientation", orientation}, {"values", std::move(items)}};
    if (spin && o == Orientation::NegativeSurgery) {
      const SpinVerdict sv = spin_obstruction(l);
      j["spin_obstruction"] = {{"applicable", sv.applicable}, {"d_obstructed", sv.d_obstructed},
                               {"qr_obstructed", sv.qr_obstructed}, {"notes", sv.notes}};
    }
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  for (const SpinD& v : values) out << "d(" << l.to_string() << ", " << v.label << ") = " << to_string(v.d) << "\n";
  if (spin && o == Orientation::NegativeSurgery && !g.quiet) {
    const SpinVerdict sv = spin_obstruction(l);
    out << "spin test: " << sv.notes << "\n";
  }
  return kExitOk;
}

int cmd_surface(const Globals& g, const std::string& file, const std::string& builtin, long m,
                long n, bool emit, std::ostream& out) {
  BlowupScript script;
  if (!file.empty() && !builtin.empty()) throw UsageError("give --script or --builtin, not both");
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError(file + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      script = parse_blowup_script(buf.str());
    } catch (const ScriptError& ex) {
      throw UsageError(file + ": " + ex.what());
    }
  } else if (!builtin.empty()) {
    try {
      script = builtin_script(builtin, m, n);
    } catch (const std::invalid_argument& ex) {
      throw UsageError(ex.what());
    }
  } else {
    throw UsageError("surface needs --script FILE or --builtin NAME");
  }
  if (emit) {
    out << to_json(script);
    return kExitOk;
  }
  SurfaceSummary s;
  try {
    s = summarize_surface(script);
  } catch (const std::exception& ex) {
    throw UsageError(ex.what());
  }
  if (g.json) {
    json torsion = json::array();
    for (const Int& t : s.h1.torsion) torsion.push_back(int_json(t));
    out << json{{"blowups", script.steps.size()},
                {"picard_rank", s.picard_rank},
                {"chain", cf_json(s.chain)},
                {"p", int_json(s.lens.num)},
                {"q", int_json(s.lens.den)},
                {"h1", s.h1.to_string()},
                {"h1_torsion", std::move(torsion)}}
               .dump(2)
        << "\n";
  } else {
    out << "blowups      " << script.steps.size() << "\n";
    out << "chain        " << s.chain.to_string() << " = " << s.lens.num << "/" << s.lens.den << "\n";
    out << "H1           " << s.h1.to_string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice and d-invariant obstructions for lens space fillings", "lensfill"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Terse output");
  app.add_option("--budget", g.budget, "Search node budget")->check(CLI::PositiveNumber);

  std::string p, q, pmax, from, format = "csv", name, script, builtin, orientation = "negative";
  long m = 0, n = 0;
  std::size_t rank = 0;
  bool spin = false, emit = false;

  auto* classify = app.add_subcommand("classify", "Run every obstruction on L(p,q)");
  classify->add_option("--p", p)->required();
  classify->add_option("--q", q)->required();

  auto* scan = app.add_subcommand("scan", "Classify all L(p,q) with p <= pmax");
  scan->add_option("--pmax", pmax)->required();
  scan->add_option("--from", from, "Resume at P or P:Q");
  scan->add_option("--format", format, "csv or jsonl");

  auto* family = app.add_subcommand("family", "Evaluate a lens space family");
  family->add_option("--name", name)->required();
  family->add_option("--m", m);
  family->add_option("--n", n);

  auto* embed = app.add_subcommand("embed", "Enumerate lattice embeddings of the chain of L(p,q)");
  embed->add_option("--p", p)->required();
  embed->add_option("--q", q)->required();
  embed->add_option("--rank", rank, "Target rank (default: chain length + 1)");

  auto* dinv = app.add_subcommand("dinv", "d-invariants of L(p,q)");
  dinv->add_option("--p", p)->required();
  dinv->add_option("--q", q)->required();
  dinv->add_flag("--spin", spin, "Only the spin structures");
  dinv->add_option("--orientation", orientation, "negative (default) or positive surgery");

  auto* surface = app.add_subcommand("surface", "Run a blow-up script");
  surface->add_option("--script", script, "BlowupScript JSON file");
  surface->add_option("--builtin", builtin, "sec3, sec4, ex34 or l17_2");
  surface->add_option("--m", m);
  surface->add_option("--n", n);
  surface->add_flag("--emit", emit, "Print the script instead of running it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lensfill: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*classify) return cmd_classify(g, p, q, out);
    if (*scan) return cmd_scan(g, pmax, from, format, out);
    if (*family) return cmd_family(g, name, m, n, out);
    if (*embed) return cmd_embed(g, p, q, rank, out);
    if (*dinv) return cmd_dinv(g, p, q, spin, orientation, out);
    if (*surface) return cmd_surface(g, script, builtin, m, n, emit, out);
  } catch (const UsageError& e) {
    err << "lensfill: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "lensfill: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lensfill::cli
