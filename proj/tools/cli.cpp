#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "omega/claims.hpp"
#include "omega/classical.hpp"
#include "omega/frobenius.hpp"
#include "omega/json.hpp"
#include "omega/module.hpp"
#include "omega/store.hpp"

namespace omega::cli {

namespace {

const char* const kGrammar =
    "usage: omega <spectrum|prime-graph|zsigmondy|enumerate|semidirect|frobenius|verify|order> [options]\n"
    "groups: <family>(<rank>,<q>)[u|s], or <family>(<q>)[u|s] for 3D4 G2 F4 E6 2E6 E7; "
    "families A 2A B C D 2D 3D4 G2 F4 E6 2E6 E7\n"
    "run 'omega <command> --help' for the options of a command";

struct Options {
  std::string group;
  std::string eps;
  u64 q = 0;
  unsigned n = 0;
  unsigned k = 0;
  u64 cap = kDefaultEnumerationCap;
  bool json = false;
  std::string cache;
  bool oracle = false;
  std::string suite = "all";
  std::string claim;
  std::string params;
  std::string family;
  unsigned sym = 0;
  u64 r = 0;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? sep : "") << v[i];
  return s.str();
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

GroupSpec group_of(const Options& o) {
  if (o.group.empty()) throw UsageError("--group is required");
  GroupSpec spec = parse_group_spec(o.group);
  if (!o.eps.empty()) {
    if (spec.family != Family::E6 && spec.family != Family::E6_2)
      throw UsageError("--eps applies to E6 and 2E6 only; other twisted families are named directly");
    spec = make_group_spec(o.eps == "+" ? Family::E6 : Family::E6_2, 6, spec.q, spec.version);
  }
  return spec;
}

std::optional<std::filesystem::path> cache_dir(const Options& o) {
  if (!o.cache.empty()) return std::filesystem::path(o.cache);
  if (const char* env = std::getenv("OMEGA_CACHE"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  return std::nullopt;
}

EnumerationStore make_store(const Options& o) {
  if (o.cap == 0) throw UsageError("--cap must be positive");
  return EnumerationStore(o.cap, cache_dir(o));
}

// Descriptor of the group: closed form, or the oracle when asked.
std::pair<SpectrumDescriptor, std::optional<ElementTable>> descriptor_of(const Options& o, const GroupSpec& spec) {
  if (o.oracle) {
    auto store = make_store(o);
    ElementTable t = store.table(spec);
    return {canonicalize(t.spectrum).with_context(spec), std::move(t)};
  }
  try {
    return {closed_form_semisimple_spectrum(spec), std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "; pass --oracle to enumerate the group instead");
  }
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const GroupSpec spec = group_of(o);
  const auto [desc, table] = descriptor_of(o, spec);
  if (o.json) {
    json j = {{"group", spec}, {"source", o.oracle ? "oracle" : "closed_form"}, {"descriptor", desc}};
    if (table) j["table"] = *table;
    emit(out, j);
    return kExitOk;
  }
  out << display_name(spec) << " (" << to_string(spec) << ")\n";
  out << "scope: " << to_string(desc.scope()) << "\n";
  out << "maximal orders: " << join(desc.generators()) << "\n";
  if (table) out << "spectrum: " << join(table->spectrum) << "\n";
  if (!desc.note().empty()) out << "note: " << desc.note() << "\n";
  return kExitOk;
}

int cmd_prime_graph(const Options& o, std::ostream& out) {
  const GroupSpec spec = group_of(o);
  const auto [desc, table] = descriptor_of(o, spec);
  const PrimeGraph graph = prime_graph(desc);
  const auto witnesses = pg_nonadjacency_witnesses(graph);
  if (o.json) {
    json w = json::object();
    for (const auto& [r, t] : witnesses) w[std::to_string(r)] = t ? json(*t) : json(nullptr);
    emit(out, {{"group", spec},
               {"source", o.oracle ? "oracle" : "closed_form"},
               {"scope", std::string(to_string(desc.scope()))},
               {"graph", graph},
               {"witnesses", w}});
    return kExitOk;
  }
  out << display_name(spec) << " prime graph (" << to_string(desc.scope()) << ")\n";
  out << "vertices: " << join(graph.vertices()) << "\n";
  std::vector<std::string> edges;
  for (auto [a, b] : graph.edges()) edges.push_back(std::to_string(a) + "-" + std::to_string(b));
  out << "edges: " << join(edges) << "\n";
  std::vector<std::string> comps;
  for (const auto& c : graph.components()) comps.push_back("{" + join(c, ",") + "}");
  out << "components: " << join(comps) << "\n";
  for (const auto& [r, t] : witnesses)
    out << "  " << r << " is not adjacent to " << (t ? std::to_string(*t) : std::string("any vertex: adjacent to all")) << "\n";
  return kExitOk;
}

int cmd_zsigmondy(const Options& o, std::ostream& out) {
  if (o.q == 0 || o.n == 0) throw UsageError("zsigmondy needs --q and --n");
  std::optional<u128> r;
  try {
    r = zsigmondy(o.q, o.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string note = r ? "" : "q^n - 1 has no primitive prime divisor for (q, n) = (2, 6): 63 = 3^2 * 7";
  if (o.json) {
    json j = {{"q", o.q}, {"n", o.n}, {"prime", u128_json(r)}};
    if (!r) j["note"] = note;
    emit(out, j);
    return kExitOk;
  }
  if (r)
    out << "r_" << o.n << "(" << o.q << ") = " << to_string(*r) << "\n";
  else
    out << "r_" << o.n << "(" << o.q << ") = none (" << note << ")\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const GroupSpec spec = group_of(o);
  auto store = make_store(o);
  const ElementTable t = store.table(spec);
  const Factored order = group_order(spec);
  if (o.json) {
    emit(out, {{"group", spec}, {"order", order}, {"table", t}});
    return kExitOk;
  }
  out << display_name(spec) << ": " << t.size << " elements (closed form " << order.to_string() << ")\n";
  out << "spectrum: " << join(t.spectrum) << "\n";
  out << "order histogram:\n";
  for (auto [ord, count] : t.order_histogram) out << "  " << ord << ": " << count << "\n";
  return kExitOk;
}

std::vector<std::vector<unsigned>> symmetric_generators(unsigned m) {
  if (m < 2) throw UsageError("--sym needs a degree of at least 2");
  std::vector<unsigned> transposition(m), cycle(m);
  for (unsigned i = 0; i < m; ++i) {
    transposition[i] = i + 1;
    cycle[i] = (i + 1) % m + 1;
  }
  std::swap(transposition[0], transposition[1]);
  return {transposition, cycle};
}

int cmd_semidirect(const Options& o, std::ostream& out) {
  SemidirectResult h;
  std::string label;
  json source;
  if (o.sym != 0) {
    if (!o.group.empty()) throw UsageError("give either --group or --sym, not both");
    if (o.r == 0) throw UsageError("--sym needs --r, the order of the module field");
    if (o.cap == 0) throw UsageError("--cap must be positive");
    const ModuleAction action = permutation_module(symmetric_generators(o.sym), o.r);
    h = semidirect_spectrum(enumerate_action(action, o.cap));
    label = "Sym" + std::to_string(o.sym) + " on GF(" + std::to_string(o.r) + ")^" + std::to_string(o.sym);
    source = label;
  } else {
    const GroupSpec spec = group_of(o);
    if (spec.version == Version::Simple && spec.center_order() != 1)
      throw UsageError("the natural module needs the universal group; use the 'u' suffix");
    auto store = make_store(o);
    h = semidirect_spectrum(*store.universal(spec));
    label = "natural module of " + display_name(spec);
    source = spec;
  }
  if (o.json) {
    json j = h;
    j["module"] = source;
    emit(out, j);
    return kExitOk;
  }
  out << "H = V:S, " << label << ", r = " << h.r << "\n";
  out << "omega(S): " << join(h.source.spectrum) << "\n";
  out << "omega(H): " << join(h.table.spectrum) << "\n";
  for (u64 x : h.table.spectrum) {
    if (h.source.has_order(x)) continue;
    const CosetWitness& w = h.witnesses.at(x);
    out << "  new order " << x << ": s of order " << w.s_order << ", v = (" << join(w.v, ",") << ")\n";
  }
  return kExitOk;
}

int cmd_frobenius(const Options& o, std::ostream& out) {
  if (o.family.empty() || o.n == 0 || o.q == 0) throw UsageError("frobenius needs --family, --n and --q");
  FrobeniusKind kind;
  try {
    kind = parse_frobenius_kind(o.family);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::shared_ptr<const Enumeration> ambient;
  if (kind == FrobeniusKind::SpCyclic) {
    auto store = make_store(o);
    try {
      ambient = store.universal(make_group_spec(Family::C, o.n, o.q, Version::Universal));
    } catch (const EnumerationAborted&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  FrobeniusWitness w;
  try {
    w = frobenius_witness(kind, o.n, o.q, o.k, ambient.get(), o.cap);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const FrobeniusVerdict v = verify_frobenius(w.kernel_gens, w.complement_gens);
  const bool ok = v.pass && v.kernel_order == w.kernel_order && v.complement_order == w.complement_order;
  if (o.json) {
    emit(out, {{"witness", w}, {"verdict", v}, {"pass", ok}});
    return ok ? kExitOk : kExitFailure;
  }
  out << to_string(kind) << " in " << display_name(w.ambient) << ": kernel " << v.kernel_order << " (claimed "
      << w.kernel_order << "), complement " << v.complement_order << " (claimed " << w.complement_order << ")"
      << (v.complement_cyclic ? ", cyclic" : ", not cyclic") << "\n";
  out << (ok ? "Frobenius: yes" : "Frobenius: no, " + v.reason) << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  auto store = make_store(o);
  RunContext ctx{&store};
  std::vector<ClaimResult> results;
  if (!o.claim.empty()) {
    const Claim& c = find_claim(o.claim);
    if (o.params.empty()) {
      // The claim's default parameter sets.
      for (const auto& p : c.grid) results.push_back(run_claim(c.id, p, ctx));
    } else {
      json params;
      try {
        params = json::parse(o.params);
      } catch (const json::parse_error& e) {
        throw UsageError(std::string("--params is not valid JSON: ") + e.what());
      }
      results.push_back(run_claim(c.id, params, ctx));
    }
  } else {
    results = run_suite(SuiteFilter::parse(o.suite), ctx);
  }
  const SuiteSummary s = summarize(results);
  if (o.json) {
    emit(out, json(results));
  } else {
    for (const auto& r : results) {
      out << r.id << " " << find_claim(r.id).name << " " << r.params.dump() << ": " << to_string(r.verdict) << "\n";
      if (r.verdict != Verdict::Pass) out << "  evidence: " << r.evidence.dump() << "\n";
    }
    out << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped\n";
  }
  return s.fail == 0 ? kExitOk : kExitFailure;
}

int cmd_order(const Options& o, std::ostream& out) {
  const GroupSpec spec = group_of(o);
  const Factored order = group_order(spec);
  if (o.json) {
    emit(out, {{"group", spec}, {"order", order}});
    return kExitOk;
  }
  out << "|" << display_name(spec) << "| = " << order.to_string();
  if (auto v = order.value()) out << " = " << *v;
  out << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Element-order spectra, prime graphs and split extensions of finite groups of Lie type", "omega"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  auto add_group = [&](CLI::App* c) {
    c->add_option("--group", o.group, "Group spec, e.g. C(2,4)u or E6(2)s");
  };
  auto add_eps = [&](CLI::App* c) {
    c->add_option("--eps", o.eps, "Sign selecting E6 (+) or 2E6 (-)")->check(CLI::IsMember({"+", "-"}));
  };
  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json, "Write JSON to stdout"); };
  auto add_enum = [&](CLI::App* c) {
    c->add_option("--cap", o.cap, "Abort enumerations beyond this many elements")->capture_default_str();
    c->add_option("--cache", o.cache, "Directory for enumeration caches (default $OMEGA_CACHE)");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum descriptor from closed forms or enumeration");
  add_group(spectrum);
  add_eps(spectrum);
  spectrum->add_flag("--oracle", o.oracle, "Enumerate the group instead of using closed forms");
  add_enum(spectrum);
  add_json(spectrum);

  auto* pg = app.add_subcommand("prime-graph", "Prime graph and non-adjacency witnesses");
  add_group(pg);
  add_eps(pg);
  pg->add_flag("--oracle", o.oracle, "Enumerate the group instead of using closed forms");
  add_enum(pg);
  add_json(pg);

  auto* zs = app.add_subcommand("zsigmondy", "Smallest primitive prime divisor of q^n - 1");
  zs->add_option("--q", o.q, "Base q >= 2")->required();
  zs->add_option("--n", o.n, "Exponent n >= 3")->required();
  add_json(zs);

  auto* en = app.add_subcommand("enumerate", "Exhaustive enumeration of a small classical group");
  add_group(en);
  add_enum(en);
  add_json(en);

  auto* sd = app.add_subcommand("semidirect", "Spectrum of V:S for the natural or a permutation module");
  add_group(sd);
  sd->add_option("--sym", o.sym, "Use Sym_m acting on GF(r)^m by permutation matrices");
  sd->add_option("--r", o.r, "Order of the module field for --sym");
  add_enum(sd);
  add_json(sd);

  auto* fr = app.add_subcommand("frobenius", "Construct and verify a Frobenius subgroup");
  fr->add_option("--family", o.family, "sl-affine, sl-line or sp-cyclic")->required();
  fr->add_option("--n", o.n, "Matrix degree (SL_n) or half degree (Sp_2n)")->required();
  fr->add_option("--q", o.q, "Field order")->required();
  fr->add_option("--k", o.k, "Dimension of the line part for sl-line");
  add_enum(fr);
  add_json(fr);

  auto* vf = app.add_subcommand("verify", "Run catalog claims");
  vf->add_option("--suite", o.suite, "all, a strategy (arithmetic, descriptor, oracle, skipped) or ids C1,C2")
      ->capture_default_str();
  vf->add_option("--claim", o.claim, "Run one claim");
  vf->add_option("--params", o.params, "JSON parameters for --claim, e.g. '{\"q\": \"2..100\"}'");
  add_enum(vf);
  add_json(vf);

  auto* od = app.add_subcommand("order", "Factored order of a group");
  add_group(od);
  add_eps(od);
  add_json(od);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    out << target->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "spectrum") return cmd_spectrum(o, out);
    if (name == "prime-graph") return cmd_prime_graph(o, out);
    if (name == "zsigmondy") return cmd_zsigmondy(o, out);
    if (name == "enumerate") return cmd_enumerate(o, out);
    if (name == "semidirect") return cmd_semidirect(o, out);
    if (name == "frobenius") return cmd_frobenius(o, out);
    if (name == "verify") return cmd_verify(o, out);
    if (name == "order") return cmd_order(o, out);
  } catch (const EnumerationAborted& e) {
    err << "error: enumeration aborted after " << e.found() << " elements (cap " << e.cap()
        << "); raise --cap to continue\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    // Bad group specs, guard violations and unknown claims.
    err << "error: " << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  err << "error: unknown command '" << name << "'\n" << kGrammar << "\n";
  return kExitUsage;
}

}  // namespace omega::cli
