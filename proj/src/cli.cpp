#include "symdyn/cli.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "symdyn/classifiers.hpp"
#include "symdyn/eventual.hpp"
#include "symdyn/fixtures.hpp"
#include "symdyn/io.hpp"
#include "symdyn/oracle.hpp"
#include "symdyn/sofic.hpp"
#include "symdyn/williams.hpp"
#include "symdyn/witnesses.hpp"
#include "symdyn/zlinalg.hpp"

namespace symdyn {

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

IntMatrix resolve_matrix(const std::string& arg, MatrixRole role) {
  if (!arg.empty() && arg[0] == '@') {
    auto name = arg.substr(1);
    if (!fixtures::has(name)) throw DataError("unknown fixture: " + name);
    return fixtures::get(name);
  }
  if (fixtures::has(arg)) return fixtures::get(arg);
  return parse_matrix_file(arg, role);
}

nlohmann::json labelled_graph_to_json(const LabelledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
  return {{"vertices", g.vertices}, {"alphabet", g.alphabet}, {"edges", edges}};
}

LabelledGraph labelled_graph_from_json(const nlohmann::json& j) {
  LabelledGraph g;
  if (!j.is_object() || !j.contains("vertices") || !j.contains("alphabet") || !j.contains("edges"))
    throw DataError("labelled graph JSON needs \"vertices\", \"alphabet\" and \"edges\"");
  g.vertices = j["vertices"].get<std::size_t>();
  for (const auto& s : j["alphabet"]) g.alphabet.push_back(s.get<std::string>());
  for (const auto& e : j["edges"])
    g.edges.push_back({e["from"].get<std::size_t>(), e["to"].get<std::size_t>(),
                       e["label"].get<std::string>()});
  validate_graph(g);
  return g;
}

LabelledGraph resolve_graph(const std::string& path, const std::string& preset) {
  if (!preset.empty()) return preset_graph(preset);
  if (path.empty()) throw DataError("give a labelled-graph JSON file or --preset");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("labelled graph JSON parse error: ") + e.what());
  }
  return labelled_graph_from_json(j);
}

int verdict_exit(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::yes: return kExitYes;
    case Outcome::no: return kExitNo;
    default: return kExitUnknown;
  }
}

CommandResult from_verdict(const Verdict& v, nlohmann::json extra = nlohmann::json::object()) {
  CommandResult res;
  res.exit_code = verdict_exit(v);
  res.output = v.to_json();
  for (auto& [k, val] : extra.items()) res.output[k] = val;
  return res;
}

IntMatrix matrix_field(const nlohmann::json& j, const std::string& key, MatrixRole role) {
  if (!j.contains(key)) throw DataError("witness JSON is missing \"" + key + "\"");
  auto m = parse_matrix_text(j[key].dump(), role);
  return m;
}

CommandResult cmd_verify_witness(const IntMatrix& a, const IntMatrix& b,
                                 const nlohmann::json& w) {
  const std::string type = w.value("type", "");
  if (type == "sse") {
    ElementarySSEWitness wit{matrix_field(w, "R", MatrixRole::witness),
                             matrix_field(w, "S", MatrixRole::witness)};
    return from_verdict(verify_elementary_sse(a, b, wit), {{"type", "sse"}});
  }
  if (type == "se") {
    SEWitness wit{matrix_field(w, "R", MatrixRole::witness),
                  matrix_field(w, "S", MatrixRole::witness), w.value("lag", 1u)};
    return from_verdict(verify_shift_equivalence(a, b, wit), {{"type", "se"}, {"lag", wit.lag}});
  }
  if (type == "balanced") {
    const char* r1key = w.contains("R1") ? "R1" : "R";
    BalancedWitness wit{matrix_field(w, "S", MatrixRole::witness),
                        matrix_field(w, r1key, MatrixRole::witness),
                        matrix_field(w, "R2", MatrixRole::witness)};
    return from_verdict(verify_balanced(a, b, wit), {{"type", "balanced"}});
  }
  throw DataError("witness JSON \"type\" must be sse, se or balanced");
}

CommandResult cmd_verify_chain(const nlohmann::json& c) {
  const std::string type = c.value("type", "");
  if (!c.contains("matrices") || !c["matrices"].is_array())
    throw DataError("chain JSON needs a \"matrices\" array");
  std::vector<IntMatrix> mats;
  for (const auto& jm : c["matrices"])
    mats.push_back(parse_matrix_text(jm.dump(), MatrixRole::adjacency));
  if (type == "sse-chain") {
    std::vector<ElementarySSEWitness> links;
    for (const auto& jl : c["links"])
      links.push_back({matrix_field(jl, "R", MatrixRole::witness),
                       matrix_field(jl, "S", MatrixRole::witness)});
    return from_verdict(verify_sse_chain(mats, links), {{"type", "sse-chain"}});
  }
  if (type == "balanced-chain") {
    std::vector<BalancedChainLink> links;
    for (const auto& jl : c["links"]) {
      BalancedChainLink link;
      const std::string kind = jl.value("kind", "balanced");
      if (kind == "balanced") {
        link.kind = BalancedChainLink::Kind::balanced;
        const char* r1key = jl.contains("R1") ? "R1" : "R";
        link.balanced = BalancedWitness{matrix_field(jl, "S", MatrixRole::witness),
                                        matrix_field(jl, r1key, MatrixRole::witness),
                                        matrix_field(jl, "R2", MatrixRole::witness)};
      } else if (kind == "permutation") {
        link.kind = BalancedChainLink::Kind::permutation;
        link.permutation = jl["perm"].get<std::vector<std::size_t>>();
      } else if (kind == "amalgamation") {
        link.kind = BalancedChainLink::Kind::amalgamation;
      } else {
        throw DataError("unknown chain link kind: " + kind);
      }
      links.push_back(std::move(link));
    }
    return from_verdict(verify_balanced_chain(mats, links), {{"type", "balanced-chain"}});
  }
  throw DataError("chain JSON \"type\" must be sse-chain or balanced-chain");
}

EdgeShift resolve_edge_shift(const IntMatrix& m, const nlohmann::json& map_json,
                             const char* key) {
  if (map_json.contains(key)) {
    std::vector<EdgeSymbol> syms;
    for (const auto& je : map_json[key])
      syms.push_back({je["from"].get<std::size_t>(), je["to"].get<std::size_t>(),
                      je["name"].get<std::string>()});
    return EdgeShift::with_symbols(m, std::move(syms));
  }
  return EdgeShift::canonical(m);
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  CLI::App app{"decision procedures and invariants for shifts of finite type"};
  app.require_subcommand(1);
  bool quiet = false;
  bool json_out = true;
  app.add_flag("--quiet", quiet, "suppress stdout");
  app.add_flag("--json", json_out, "JSON output (default)");

  std::string ma, mb, witness_path, chain_path, graph_path, preset, word, map_path, inverse_path,
      mode;
  std::vector<std::string> examples;
  unsigned powers = 3, kbound = 2;
  std::size_t mmax = 2, lbound = 6;
  long emax = 1;
  std::size_t expand_i = 0, expand_j = 0;
  bool eventual_map = false;

  auto* amalgamate = app.add_subcommand("amalgamate", "total amalgamation with trace");
  amalgamate->add_option("matrix", ma);

  auto* conjugate = app.add_subcommand("conjugate", "decide one-sided conjugacy");
  conjugate->add_option("left", ma);
  conjugate->add_option("right", mb);

  auto* ev = app.add_subcommand("eventual-powers", "decide conjugate higher powers");
  ev->add_option("left", ma);
  ev->add_option("right", mb);
  ev->add_option("--powers", powers, "extra per-power cross-check window");

  auto* verify = app.add_subcommand("verify", "verify an equivalence witness");
  verify->add_option("left", ma);
  verify->add_option("right", mb);
  verify->add_option("witness", witness_path);
  verify->add_option("--chain", chain_path, "verify a chain file instead");

  auto* search = app.add_subcommand("search", "bounded witness search");
  search->add_option("mode", mode, "elementary | balanced")->required();
  search->add_option("left", ma);
  search->add_option("right", mb);
  search->add_option("--mmax", mmax, "inner dimension bound");
  search->add_option("--emax", emax, "entry bound");

  auto* flow = app.add_subcommand("flow", "Franks flow-equivalence classifier");
  flow->add_option("left", ma);
  flow->add_option("right", mb);

  auto* coe = app.add_subcommand("coe", "continuous orbit equivalence classifier");
  coe->add_option("left", ma);
  coe->add_option("right", mb);

  auto* inv = app.add_subcommand("invariants", "print the invariants of one matrix");
  inv->add_option("matrix", ma);

  auto* ent = app.add_subcommand("entropy", "Perron entropy");
  ent->add_option("matrix", ma);

  auto* expand = app.add_subcommand("symbol-expand", "replace an edge by a length-two path");
  expand->add_option("matrix", ma);
  expand->add_option("--from", expand_i)->required();
  expand->add_option("--to", expand_j)->required();

  auto* krieger = app.add_subcommand("sofic-krieger", "Krieger cover of a labelled graph");
  krieger->add_option("graph", graph_path);
  krieger->add_option("--preset", preset, "even-shift|odd-shift|full:N|golden-mean");

  auto* fischer = app.add_subcommand("sofic-fischer", "Fischer cover of a labelled graph");
  fischer->add_option("graph", graph_path);
  fischer->add_option("--preset", preset, "even-shift|odd-shift|full:N|golden-mean");

  auto* sync = app.add_subcommand("sofic-sync", "intrinsic synchronization test");
  sync->add_option("graph", graph_path);
  sync->add_option("--preset", preset);
  sync->add_option("--word", word)->required();
  sync->add_option("--L", lbound, "counterexample reporting bound");

  auto* oracle = app.add_subcommand("oracle", "block-map verification and search");
  oracle->add_option("mode", mode, "conjugacy")->required();
  oracle->add_option("left", ma);
  oracle->add_option("right", mb);
  oracle->add_option("--map", map_path, "verify this block map instead of searching");
  oracle->add_option("--inverse", inverse_path, "inverse block map for eventual verification");
  oracle->add_flag("--eventual", eventual_map, "verify as a Matsumoto eventual conjugacy");
  oracle->add_option("--k", kbound, "window bound for the search");
  oracle->add_option("--L", lbound, "word-length bound");

  auto* fx = app.add_subcommand("fixtures", "list built-in example matrices");

  for (auto* sub : {amalgamate, conjugate, ev, verify, search, flow, coe, inv, ent, expand, oracle})
    sub->add_option("--example", examples,
                    "use a built-in fixture for the next positional matrix argument");

  std::vector<std::string> argv_copy(args.rbegin(), args.rend());
  CommandResult res;
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    res.exit_code = kExitUsage;
    res.diagnostics = e.what();
    res.output = {{"error", "usage"}, {"detail", e.what()}};
    return res;
  }
  // --example values fill empty matrix slots in order
  {
    std::size_t next = 0;
    for (std::string* slot : {&ma, &mb}) {
      if (slot->empty() && next < examples.size()) *slot = "@" + examples[next++];
    }
  }
  auto missing = [&](const char* what) {
    CommandResult r;
    r.exit_code = kExitUsage;
    r.diagnostics = std::string(what) + " is required";
    r.output = {{"error", "usage"}, {"detail", r.diagnostics}};
    return r;
  };
  if ((*amalgamate || *inv || *ent || *expand) && ma.empty()) return missing("matrix");
  if ((*conjugate || *ev || *flow || *coe || *search || *oracle) && (ma.empty() || mb.empty()))
    return missing("left/right");

  try {
    if (*amalgamate) {
      auto trace = total_amalgamation(resolve_matrix(ma, MatrixRole::adjacency));
      res.output = {{"trace", trace.to_json()}};
      res.exit_code = kExitYes;
    } else if (*conjugate) {
      auto v = decide_one_sided_conjugacy(resolve_matrix(ma, MatrixRole::adjacency),
                                          resolve_matrix(mb, MatrixRole::adjacency));
      res = from_verdict(v);
    } else if (*ev) {
      auto v = decide_conjugate_higher_powers(resolve_matrix(ma, MatrixRole::adjacency),
                                              resolve_matrix(mb, MatrixRole::adjacency), powers);
      res = from_verdict(v);
    } else if (*verify) {
      if (!chain_path.empty()) {
        res = cmd_verify_chain(nlohmann::json::parse(read_file(chain_path)));
      } else {
        if (ma.empty() || mb.empty() || witness_path.empty())
          throw DataError("verify needs left, right and a witness file (or --chain)");
        res = cmd_verify_witness(resolve_matrix(ma, MatrixRole::adjacency),
                                 resolve_matrix(mb, MatrixRole::adjacency),
                                 nlohmann::json::parse(read_file(witness_path)));
      }
    } else if (*search) {
      SearchBounds bounds{mmax, emax};
      auto a = resolve_matrix(ma, MatrixRole::adjacency);
      auto b = resolve_matrix(mb, MatrixRole::adjacency);
      Verdict v;
      if (mode == "elementary")
        v = search_elementary(a, b, bounds);
      else if (mode == "balanced")
        v = search_balanced(a, b, bounds);
      else
        throw DataError("search mode must be elementary or balanced");
      res = from_verdict(v, {{"mode", mode}});
    } else if (*flow) {
      res = from_verdict(flow_equivalent(resolve_matrix(ma, MatrixRole::adjacency),
                                         resolve_matrix(mb, MatrixRole::adjacency)));
    } else if (*coe) {
      res = from_verdict(continuous_orbit_equivalent(resolve_matrix(ma, MatrixRole::adjacency),
                                                     resolve_matrix(mb, MatrixRole::adjacency)));
    } else if (*inv) {
      auto a = resolve_matrix(ma, MatrixRole::adjacency);
      auto cls = classify_graph(a);
      auto [det, sign] = det_id_minus(a);
      auto ent_res = entropy(a);
      auto cp = char_poly(a);
      nlohmann::json cpj = nlohmann::json::array();
      for (const auto& c : cp) cpj.push_back(mpz_to_json(c));
      res.output = {{"bowen_franks", group_to_json(bowen_franks(a))},
                    {"unit_class", group_to_json(unit_class(a))},
                    {"det_id_minus", mpz_to_json(det)},
                    {"det_sign", sign},
                    {"entropy", ent_res.value},
                    {"entropy_zero_warning", ent_res.zero_warning},
                    {"char_poly", cpj},
                    {"irreducible", cls.irreducible},
                    {"primitive", cls.primitive},
                    {"period", cls.period},
                    {"permutation", cls.permutation}};
      res.exit_code = kExitYes;
    } else if (*ent) {
      auto e = entropy(resolve_matrix(ma, MatrixRole::adjacency));
      res.output = {{"entropy", e.value}, {"zero_warning", e.zero_warning}};
      res.exit_code = kExitYes;
    } else if (*expand) {
      auto a = resolve_matrix(ma, MatrixRole::adjacency);
      res.output = {{"matrix", matrix_to_json(symbol_expand(a, expand_i, expand_j))}};
      res.exit_code = kExitYes;
    } else if (*krieger) {
      auto cover = krieger_cover(resolve_graph(graph_path, preset));
      res.output = {{"cover", labelled_graph_to_json(cover.cover)}, {"states", cover.states}};
      res.exit_code = kExitYes;
    } else if (*fischer) {
      auto cover = fischer_cover(resolve_graph(graph_path, preset));
      res.output = {{"cover", labelled_graph_to_json(cover.cover)}, {"states", cover.states}};
      res.exit_code = kExitYes;
    } else if (*sync) {
      auto g = resolve_graph(graph_path, preset);
      auto v = is_intrinsically_synchronizing(g, word_from_string(g, word), lbound);
      res = from_verdict(v, {{"word", word}});
    } else if (*oracle) {
      if (mode != "conjugacy") throw DataError("oracle mode must be conjugacy");
      auto a = resolve_matrix(ma, MatrixRole::adjacency);
      auto b = resolve_matrix(mb, MatrixRole::adjacency);
      if (map_path.empty()) {
        auto v = search_conjugacy(EdgeShift::canonical(a), EdgeShift::canonical(b), kbound, lbound);
        res = from_verdict(v);
      } else {
        auto mj = nlohmann::json::parse(read_file(map_path));
        auto sa = resolve_edge_shift(a, mj, "source_edges");
        auto sb = resolve_edge_shift(b, mj, "target_edges");
        auto bm = block_map_from_json(mj, sa, sb);
        Verdict v;
        if (eventual_map || bm.delay > 0) {
          if (inverse_path.empty())
            throw DataError("eventual verification needs --inverse");
          auto ij = nlohmann::json::parse(read_file(inverse_path));
          auto inv_map = block_map_from_json(ij, sb, sa);
          v = verify_eventual_conjugacy_map(bm, inv_map, sa, sb, lbound);
        } else {
          v = verify_conjugacy(bm, sa, sb, lbound);
        }
        res = from_verdict(v);
      }
    } else if (*fx) {
      res.output = {{"fixtures", fixtures::names()}};
      res.exit_code = kExitYes;
    }
  } catch (const CLI::Error& e) {
    res.exit_code = kExitUsage;
    res.output = {{"error", "usage"}, {"detail", e.what()}};
    res.diagnostics = e.what();
  } catch (const std::invalid_argument& e) {
    res.exit_code = kExitData;
    res.output = {{"error", "data"}, {"detail", e.what()}};
    res.diagnostics = e.what();
  } catch (const nlohmann::json::exception& e) {
    res.exit_code = kExitData;
    res.output = {{"error", "data"}, {"detail", e.what()}};
    res.diagnostics = e.what();
  }
  if (quiet) res.output = nlohmann::json();
  return res;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto res = dispatch(args);
  if (!res.output.is_null()) std::cout << res.output.dump(2) << std::endl;
  if (!res.diagnostics.empty() && res.exit_code >= 64) std::cerr << res.diagnostics << std::endl;
  return res.exit_code;
}

}  // namespace symdyn
