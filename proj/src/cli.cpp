#include "ordlim/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ordlim/enumerate.hpp"
#include "ordlim/ideal.hpp"
#include "ordlim/json_io.hpp"
#include "ordlim/lattice.hpp"
#include "ordlim/level.hpp"
#include "ordlim/quotient.hpp"
#include "ordlim/samplers.hpp"
#include "ordlim/ternary.hpp"
#include "ordlim/threads.hpp"
#include "ordlim/verify.hpp"

namespace ordlim {

const std::vector<SubcommandSpec>& cli_dispatch_table() {
  static const std::vector<SubcommandSpec> table = {
      {"construct", "build chains, antichains, linear sums and disjoint unions",
       {"chain", "antichain", "linear_sum", "disjoint_union"}},
      {"validate", "check the poset axioms on a JSON relation", {"validate"}},
      {"maximal", "maximal elements of a subset", {"maximal_elements"}},
      {"components", "2-component queries", {"is_two_component", "two_components"}},
      {"isomorphic", "brute-force isomorphism test", {"isomorphism_check"}},
      {"ideals", "enumerate the down-set lattice O(P)", {"all_down_sets"}},
      {"principal", "principal down-set of an element", {"principal"}},
      {"decompose", "canonical decomposition of a down-set", {"canonical_decomposition"}},
      {"join-irreducibles", "join-irreducible elements of a lattice", {"join_irreducibles"}},
      {"atoms", "atoms and atomicity of a lattice", {"atoms", "is_atomic"}},
      {"birkhoff", "Birkhoff duality L -> O(J(L))", {"birkhoff_eta"}},
      {"embed", "principal embedding of P into O(P)", {"principal_embedding"}},
      {"classify", "homomorphism / onto / quotient classification", {"classify"}},
      {"sticks", "quotient from a disjoint union of 2-chains", {"sticks_cover"}},
      {"amalgamate", "amalgamation of two quotients over a common base", {"amalgamate"}},
      {"induce", "induced map on down-set lattices", {"induce"}},
      {"meet-criterion", "meet-preservation criterion for a quotient", {"meet_preservation_criterion"}},
      {"level", "level P_n of the universal sequence", {"level"}},
      {"projection", "projection P_n -> P_k", {"projection"}},
      {"solve-extension", "extension of a quotient onto a level", {"solve_extension"}},
      {"witness-u", "cofinality witness: a level quotient onto x", {"witness_u"}},
      {"factor", "factor a cylinder table through a level", {"factor_through_level"}},
      {"build-universal", "level map family onto a target system", {"build_universal_quotient"}},
      {"lift", "lift a level map through a quotient", {"lift_through_quotient"}},
      {"thread-order", "compare two threads of the level system", {"thread_order"}},
      {"thread-solve", "thread through a finite inverse system", {"solve_thread"}},
      {"symbolic-compare", "order of two eventually constant points", {"symbolic_compare"}},
      {"isolated", "isolation of symbolic points, cylinder witnesses",
       {"is_isolated", "isolated_dense_witness"}},
      {"ideal-sup", "coordinatewise supremum of ideal threads", {"ideal_sup"}},
      {"ideal-inf", "greedy infimum of ideal threads", {"ideal_inf"}},
      {"atom-below", "atom below a nonzero ideal thread", {"find_atom_below"}},
      {"principal-decomposition", "principal threads reconstructing an ideal thread",
       {"principal_decomposition"}},
      {"induced-limit", "induced limit quotient of an ideal thread", {"induced_limit_quotient"}},
      {"encode", "ternary encoding of a level down-set", {"psi"}},
      {"q-step", "ternary step map T_{n+1} -> T_n", {"q_step"}},
      {"verify-square", "encoding / induced-map square check", {"verify_square"}},
      {"quotient-iso", "recognition of induced quotient maps between lattices",
       {"quotient_isomorphism_criterion"}},
      {"verify-all", "run the acceptance suite", {"verify_all"}},
  };
  return table;
}

std::vector<std::string> all_operation_names() {
  return {"validate",
          "chain",
          "antichain",
          "linear_sum",
          "disjoint_union",
          "maximal_elements",
          "is_two_component",
          "two_components",
          "isomorphism_check",
          "all_down_sets",
          "principal",
          "canonical_decomposition",
          "join_irreducibles",
          "birkhoff_eta",
          "principal_embedding",
          "atoms",
          "is_atomic",
          "classify",
          "sticks_cover",
          "amalgamate",
          "induce",
          "meet_preservation_criterion",
          "level",
          "projection",
          "solve_extension",
          "witness_u",
          "factor_through_level",
          "build_universal_quotient",
          "lift_through_quotient",
          "thread_order",
          "solve_thread",
          "symbolic_compare",
          "is_isolated",
          "isolated_dense_witness",
          "ideal_sup",
          "ideal_inf",
          "find_atom_below",
          "principal_decomposition",
          "induced_limit_quotient",
          "psi",
          "q_step",
          "verify_square",
          "quotient_isomorphism_criterion",
          "verify_all"};
}

namespace {

struct Options {
  std::uint64_t seed = 42;
  int depth = 6;
  long long samples = 100000;
  std::string format = "text";
};

std::string classification_text(const MapClassification& c) {
  std::ostringstream os;
  os << "homomorphism: " << (c.is_homomorphism ? "yes" : "no") << "\n";
  os << "onto: " << (c.is_onto ? "yes" : "no") << "\n";
  os << "quotient: " << (c.is_quotient ? "yes" : "no") << "\n";
  if (c.witness) os << "witness: (" << c.witness->first << ", " << c.witness->second << ")\n";
  return os.str();
}

Json classification_json(const MapClassification& c) {
  Json j;
  j["homomorphism"] = c.is_homomorphism;
  j["onto"] = c.is_onto;
  j["quotient"] = c.is_quotient;
  if (c.witness) j["witness"] = {c.witness->first, c.witness->second};
  return j;
}

void emit_poset(const Options& opt, std::ostream& out, const FinitePoset& p) {
  if (opt.format == "dot") {
    out << to_dot(p);
  } else if (opt.format == "json") {
    out << poset_to_json(p).dump(2) << "\n";
  } else {
    out << p.size() << " elements, " << p.strict_pairs().size() << " strict pairs\n";
    for (int i = 0; i < p.size(); ++i) out << "  " << i << ": " << p.label(i) << "\n";
  }
}

std::vector<int> parse_index_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      fail_parse("bad index list entry: " + item);
    }
  }
  return out;
}

Bits bits_from_indices(std::size_t size, const std::vector<int>& idx) {
  Bits b(size);
  for (int i : idx) {
    if (i < 0 || static_cast<std::size_t>(i) >= size) fail("index " + std::to_string(i) + " out of range");
    b.set(static_cast<std::size_t>(i));
  }
  return b;
}

std::vector<std::uint8_t> parse_digit_string(const std::string& s) {
  std::vector<std::uint8_t> digits;
  for (char c : s) {
    if (c < '0' || c > '3') fail_parse("digits must lie in 0..3");
    digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return digits;
}

// Timings go to stderr so stdout stays byte-identical for a fixed seed.
int run_verify_all(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<CriterionResult> results = run_acceptance(opt.seed);
  bool all_pass = true;
  double total = 0.0;
  for (const CriterionResult& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << std::setw(2) << r.id << ". " << r.name << " — " << r.detail
        << "\n";
    total += r.seconds;
    all_pass = all_pass && r.pass;
  }
  out << (all_pass ? "all criteria passed\n" : "some criteria FAILED\n");
  err << std::fixed << std::setprecision(2) << total << "s total\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ordlim — finite posets, quotient levels, order-ideal limits"};
  app.require_subcommand(1);

  auto opt = std::make_shared<Options>();
  app.add_option("--seed", opt->seed, "seed for all randomized behavior")->capture_default_str();
  app.add_option("--depth", opt->depth, "level depth bound")
      ->capture_default_str()
      ->check(CLI::Range(1, kLevelHardBound));
  app.add_option("--samples", opt->samples, "sample count for sampled verification")
      ->capture_default_str();
  app.add_option("--format", opt->format, "output format: text|json|dot")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "dot"}));

  int exit_code = 0;
  auto cfg = [&] { return LevelConfig{opt->depth}; };

  // construct
  {
    auto* cmd = app.add_subcommand("construct", "build chains, antichains, sums and unions");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto files = std::make_shared<std::vector<std::string>>();
    cmd->add_option("kind", *kind, "chain|antichain|linear-sum|disjoint-union")
        ->required()
        ->check(CLI::IsMember({"chain", "antichain", "linear-sum", "disjoint-union"}));
    cmd->add_option("--n", *n, "size for chain/antichain");
    cmd->add_option("inputs", *files, "poset files for linear-sum/disjoint-union");
    cmd->callback([&, kind, n, files] {
      PosetPtr p;
      if (*kind == "chain") {
        p = FinitePoset::chain(*n);
      } else if (*kind == "antichain") {
        p = FinitePoset::antichain(*n);
      } else {
        if (files->size() != 2) fail("linear-sum/disjoint-union need two poset files");
        PosetPtr a = poset_from_json(parse_json_file((*files)[0]));
        PosetPtr b = poset_from_json(parse_json_file((*files)[1]));
        p = (*kind == "linear-sum") ? linear_sum(*a, *b) : disjoint_union(*a, *b);
      }
      emit_poset(*opt, out, *p);
    });
  }

  // validate
  {
    auto* cmd = app.add_subcommand("validate", "check the poset axioms");
    auto file = std::make_shared<std::string>();
    cmd->add_option("poset", *file, "poset JSON file")->required();
    cmd->callback([&, file] {
      Json j = parse_json_file(*file);
      PosetData data;
      for (const auto& e : j.at("elements")) data.labels.push_back(e.get<std::string>());
      for (const auto& pair : j.at("le")) data.pairs.emplace_back(pair[0].get<int>(), pair[1].get<int>());
      for (int i = 0; i < static_cast<int>(data.labels.size()); ++i) data.pairs.emplace_back(i, i);
      ValidationReport report = validate_poset(data);
      if (opt->format == "json") {
        Json r;
        r["ok"] = report.ok();
        r["message"] = report.message();
        out << r.dump(2) << "\n";
      } else {
        out << report.message() << "\n";
      }
    });
  }

  // maximal
  {
    auto* cmd = app.add_subcommand("maximal", "maximal elements of a subset");
    auto file = std::make_shared<std::string>();
    auto subset = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->add_option("--subset", *subset, "comma-separated element indices (default: all)");
    cmd->callback([&, file, subset] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      Bits q = subset->empty() ? Bits::full(static_cast<std::size_t>(p->size()))
                               : bits_from_indices(static_cast<std::size_t>(p->size()), parse_index_list(*subset));
      Bits maxima = p->maximal_in(q);
      if (opt->format == "json") {
        out << bits_to_json(maxima).dump() << "\n";
      } else {
        for (int i : maxima.to_indices()) out << i << " " << p->label(i) << "\n";
      }
    });
  }

  // components
  {
    auto* cmd = app.add_subcommand("components", "2-component queries");
    auto file = std::make_shared<std::string>();
    auto pair = std::make_shared<std::vector<int>>();
    cmd->add_option("poset", *file)->required();
    cmd->add_option("--pair", *pair, "evaluate the literal predicate on (x, y)")->expected(2);
    cmd->callback([&, file, pair] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      if (pair->size() == 2) {
        int x = (*pair)[0], y = (*pair)[1];
        if (x < 0 || y < 0 || x >= p->size() || y >= p->size()) fail("pair indices out of range");
        out << (p->is_two_component(x, y) ? "true" : "false") << "\n";
      } else {
        for (auto [x, y] : p->two_components()) out << "(" << x << ", " << y << ")\n";
      }
    });
  }

  // isomorphic
  {
    auto* cmd = app.add_subcommand("isomorphic", "brute-force isomorphism test");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    cmd->add_option("a", *fa)->required();
    cmd->add_option("b", *fb)->required();
    cmd->callback([&, fa, fb] {
      PosetPtr a = poset_from_json(parse_json_file(*fa));
      PosetPtr b = poset_from_json(parse_json_file(*fb));
      out << (isomorphic(*a, *b) ? "true" : "false") << "\n";
    });
  }

  // ideals
  {
    auto* cmd = app.add_subcommand("ideals", "enumerate the down-set lattice");
    auto file = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->callback([&, file] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      IdealLattice lattice = IdealLattice::enumerate(p);
      if (opt->format == "json") {
        Json j;
        Json ideals = Json::array();
        for (std::size_t i = 0; i < lattice.size(); ++i) ideals.push_back(lattice.ideal(i).to_indices());
        j["ideals"] = std::move(ideals);
        if (lattice.size() <= 1024) {
          Json le = Json::array();
          for (std::size_t i = 0; i < lattice.size(); ++i)
            for (std::size_t j2 = 0; j2 < lattice.size(); ++j2)
              if (i != j2 && lattice.le(static_cast<int>(i), static_cast<int>(j2)))
                le.push_back({i, j2});
          j["le"] = std::move(le);
        }
        out << j.dump(2) << "\n";
      } else {
        out << lattice.size() << " down-sets\n";
      }
    });
  }

  // principal
  {
    auto* cmd = app.add_subcommand("principal", "principal down-set of an element");
    auto file = std::make_shared<std::string>();
    auto x = std::make_shared<int>();
    cmd->add_option("poset", *file)->required();
    cmd->add_option("x", *x, "element index")->required();
    cmd->callback([&, file, x] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      DownSet d = principal(p, *x);
      out << bits_to_json(d.members).dump() << "\n";
    });
  }

  // decompose
  {
    auto* cmd = app.add_subcommand("decompose", "canonical decomposition of a down-set");
    auto file = std::make_shared<std::string>();
    auto ideal = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->add_option("--ideal", *ideal, "comma-separated element indices")->required();
    cmd->callback([&, file, ideal] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      Bits q = bits_from_indices(static_cast<std::size_t>(p->size()), parse_index_list(*ideal));
      if (!is_down_set(*p, q)) fail("the given subset is not a down-set");
      Json parts = Json::array();
      for (int x : canonical_decomposition(*p, q)) {
        Json part;
        part["max"] = x;
        part["down_set"] = bits_to_json(p->down(x));
        parts.push_back(std::move(part));
      }
      out << parts.dump(2) << "\n";
    });
  }

  // join-irreducibles
  {
    auto* cmd = app.add_subcommand("join-irreducibles", "join-irreducibles of a lattice");
    auto file = std::make_shared<std::string>();
    cmd->add_option("lattice", *file, "lattice carrier as a poset JSON")->required();
    cmd->callback([&, file] {
      FiniteLattice lattice = FiniteLattice::from_poset(poset_from_json(parse_json_file(*file)));
      for (int x : lattice.join_irreducibles()) out << x << " " << lattice.carrier().label(x) << "\n";
    });
  }

  // atoms
  {
    auto* cmd = app.add_subcommand("atoms", "atoms and atomicity of a lattice");
    auto file = std::make_shared<std::string>();
    cmd->add_option("lattice", *file)->required();
    cmd->callback([&, file] {
      FiniteLattice lattice = FiniteLattice::from_poset(poset_from_json(parse_json_file(*file)));
      for (int a : lattice.atoms()) out << a << " " << lattice.carrier().label(a) << "\n";
      out << "atomic: " << (lattice.is_atomic() ? "yes" : "no") << "\n";
    });
  }

  // birkhoff
  {
    auto* cmd = app.add_subcommand("birkhoff", "Birkhoff duality");
    auto file = std::make_shared<std::string>();
    cmd->add_option("lattice", *file)->required();
    cmd->callback([&, file] {
      FiniteLattice lattice = FiniteLattice::from_poset(poset_from_json(parse_json_file(*file)));
      BirkhoffResult b = birkhoff_eta(lattice);
      Json j;
      j["join_irreducibles"] = poset_to_json(*b.jposet);
      Json eta = Json::array();
      for (std::size_t a = 0; a < b.eta.size(); ++a)
        eta.push_back(bits_to_json(b.ideals.ideal(b.eta[a])));
      j["eta"] = std::move(eta);
      j["isomorphism"] = b.isomorphism;
      out << j.dump(2) << "\n";
    });
  }

  // embed
  {
    auto* cmd = app.add_subcommand("embed", "principal embedding into O(P)");
    auto file = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->callback([&, file] {
      PosetPtr p = poset_from_json(parse_json_file(*file));
      IdealLattice lattice = IdealLattice::enumerate(p);
      PosetMap phi = principal_embedding(p, lattice);
      out << map_to_json(phi).dump(2) << "\n";
    });
  }

  // classify
  {
    auto* cmd = app.add_subcommand("classify", "classify a map between posets");
    auto file = std::make_shared<std::string>();
    cmd->add_option("map", *file)->required();
    cmd->callback([&, file] {
      MapClassification c = classify(map_from_json(parse_json_file(*file)));
      if (opt->format == "json")
        out << classification_json(c).dump(2) << "\n";
      else
        out << classification_text(c);
    });
  }

  // sticks
  {
    auto* cmd = app.add_subcommand("sticks", "sticks cover of a poset");
    auto file = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->callback([&, file] {
      SticksCover cover = sticks_cover(poset_from_json(parse_json_file(*file)));
      out << "components: " << cover.components << "\n";
      if (opt->format == "json") out << map_to_json(cover.map).dump(2) << "\n";
    });
  }

  // amalgamate
  {
    auto* cmd = app.add_subcommand("amalgamate", "amalgamate two quotients");
    auto ff = std::make_shared<std::string>();
    auto fg = std::make_shared<std::string>();
    cmd->add_option("f", *ff)->required();
    cmd->add_option("g", *fg)->required();
    cmd->callback([&, ff, fg] {
      PosetMap f = map_from_json(parse_json_file(*ff));
      PosetMap g = map_from_json(parse_json_file(*fg));
      Amalgam am = amalgamate(f, g);
      Json j;
      j["d"] = poset_to_json(*am.d);
      j["q"] = map_to_json(am.q);
      j["p"] = map_to_json(am.p);
      j["f_prime"] = map_to_json(am.b_cover.map);
      j["g_prime"] = map_to_json(am.c_cover.map);
      out << j.dump(2) << "\n";
    });
  }

  // induce
  {
    auto* cmd = app.add_subcommand("induce", "induced map on down-set lattices");
    auto file = std::make_shared<std::string>();
    cmd->add_option("map", *file)->required();
    cmd->callback([&, file] {
      InducedMap induced = InducedMap::make(map_from_json(parse_json_file(*file)));
      if (!induced.has_tables()) {
        out << "domain lattice exceeds 10^4 ideals; induced map available lazily only\n";
        return;
      }
      Json j;
      Json table = Json::array();
      const IdealLattice& dom = induced.domain_lattice();
      const IdealLattice& cod = induced.codomain_lattice();
      for (std::size_t i = 0; i < dom.size(); ++i) {
        Json row;
        row["ideal"] = bits_to_json(dom.ideal(i));
        row["image"] = bits_to_json(cod.ideal(induced.table()[i]));
        table.push_back(std::move(row));
      }
      j["table"] = std::move(table);
      out << j.dump(2) << "\n";
    });
  }

  // meet-criterion
  {
    auto* cmd = app.add_subcommand("meet-criterion", "meet-preservation criterion");
    auto file = std::make_shared<std::string>();
    cmd->add_option("map", *file)->required();
    cmd->callback([&, file] {
      MeetCriterion mc = meet_preservation_criterion(map_from_json(parse_json_file(*file)));
      if (mc.holds) {
        out << "true\n";
      } else {
        out << "false (x=" << mc.witness[0] << ", y=" << mc.witness[1] << ", t=" << mc.witness[2] << ")\n";
      }
    });
  }

  // level
  {
    auto* cmd = app.add_subcommand("level", "level P_n of the universal sequence");
    auto n = std::make_shared<int>();
    cmd->add_option("n", *n, "depth")->required();
    cmd->callback([&, n] {
      if (*n < 1 || *n > opt->depth) fail("level outside depth bound " + std::to_string(opt->depth));
      if (opt->format == "text") {
        UniversalLevel lvl(*n);
        out << "P_" << *n << ": " << lvl.size() << " elements, " << lvl.component_count()
            << " two-components\n";
      } else {
        emit_poset(*opt, out, *level_poset(*n, cfg()));
      }
    });
  }

  // projection
  {
    auto* cmd = app.add_subcommand("projection", "projection P_n -> P_k");
    auto n = std::make_shared<int>();
    auto k = std::make_shared<int>();
    cmd->add_option("n", *n)->required();
    cmd->add_option("k", *k)->required();
    cmd->callback([&, n, k] { out << map_to_json(projection(*n, *k, cfg())).dump(2) << "\n"; });
  }

  // solve-extension
  {
    auto* cmd = app.add_subcommand("solve-extension", "extend a quotient onto a level");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<int>();
    cmd->add_option("map", *file, "quotient H -> P_k as map JSON")->required();
    cmd->add_option("--k", *k, "level of the codomain")->required();
    cmd->callback([&, file, k] {
      PosetMap p = map_from_json(parse_json_file(*file));
      ExtensionResult r = solve_extension(p, *k, cfg());
      if (opt->format == "json") {
        out << level_map_to_json(r.g).dump(2) << "\n";
      } else {
        out << "m: " << r.m << "\n";
        out << "commutes: " << (extension_commutes(p, *k, r) ? "yes" : "no") << "\n";
        out << "quotient: " << (r.g.classify().is_quotient ? "yes" : "no") << "\n";
      }
    });
  }

  // witness-u
  {
    auto* cmd = app.add_subcommand("witness-u", "level quotient onto a poset");
    auto file = std::make_shared<std::string>();
    cmd->add_option("poset", *file)->required();
    cmd->callback([&, file] {
      WitnessU w = witness_u(poset_from_json(parse_json_file(*file)), cfg());
      if (opt->format == "json") {
        out << level_map_to_json(w.map).dump(2) << "\n";
      } else {
        out << "n: " << w.n << "\n";
        out << "quotient: " << (w.map.classify().is_quotient ? "yes" : "no") << "\n";
      }
    });
  }

  // factor
  {
    auto* cmd = app.add_subcommand("factor", "factor a cylinder table through a level");
    auto file = std::make_shared<std::string>();
    auto rank = std::make_shared<int>();
    cmd->add_option("table", *file, "{\"codomain\": <poset>, \"values\": [...]} JSON")->required();
    cmd->add_option("--rank", *rank, "level to factor through")->required();
    cmd->callback([&, file, rank] {
      Json j = parse_json_file(*file);
      PosetPtr codomain = poset_from_json(j.at("codomain"));
      std::vector<std::int32_t> table;
      for (const auto& v : j.at("values")) table.push_back(v.get<std::int32_t>());
      LevelMap h = factor_through_level(table, codomain, *rank, cfg());
      out << level_map_to_json(h).dump(2) << "\n";
    });
  }

  // build-universal
  {
    auto* cmd = app.add_subcommand("build-universal", "level map family onto a target system");
    auto file = std::make_shared<std::string>();
    cmd->add_option("system", *file, "target system JSON")->required();
    cmd->callback([&, file] {
      TargetSystem ts = target_system_from_json(parse_json_file(*file));
      LevelMapFamily family = build_universal_quotient(ts, cfg());
      if (opt->format == "json") {
        out << family_to_json(family).dump(2) << "\n";
      } else {
        out << "indices:";
        for (int i : family.indices) out << " " << i;
        out << "\ncommutes: " << (family_squares_commute(family, ts) ? "yes" : "no") << "\n";
      }
    });
  }

  // lift
  {
    auto* cmd = app.add_subcommand("lift", "lift a level map through a quotient");
    auto ft = std::make_shared<std::string>();
    auto fg = std::make_shared<std::string>();
    cmd->add_option("t", *ft, "level map JSON (t : P_i -> A)")->required();
    cmd->add_option("g", *fg, "quotient JSON (g : B -> A)")->required();
    cmd->callback([&, ft, fg] {
      LevelMap t = level_map_from_json(parse_json_file(*ft), cfg());
      PosetMap g = map_from_json(parse_json_file(*fg));
      LiftResult lift = lift_through_quotient(t, g, cfg());
      if (opt->format == "json") {
        out << level_map_to_json(lift.map).dump(2) << "\n";
      } else {
        out << "level: " << lift.level << "\n";
      }
    });
  }

  // thread-order
  {
    auto* cmd = app.add_subcommand("thread-order", "compare threads of the level system");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    cmd->add_option("a", *fa, "{\"entries\": [...]} JSON")->required();
    cmd->add_option("b", *fb)->required();
    cmd->callback([&, fa, fb] {
      auto read = [&](const std::string& path) {
        Json j = parse_json_file(path);
        PThread t;
        for (const auto& e : j.at("entries")) t.entries.push_back(e.get<std::uint64_t>());
        return t;
      };
      out << cmp_name(thread_order(read(*fa), read(*fb))) << "\n";
    });
  }

  // thread-solve
  {
    auto* cmd = app.add_subcommand("thread-solve", "thread through a finite inverse system");
    auto file = std::make_shared<std::string>();
    cmd->add_option("system", *file)->required();
    cmd->callback([&, file] {
      FiniteSystem sys = finite_system_from_json(parse_json_file(*file));
      ThreadSolveResult r = solve_thread(sys);
      if (opt->format == "json") {
        Json j;
        j["entries"] = r.entries;
        j["stabilized"] = r.stabilized;
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t k = 0; k < r.entries.size(); ++k)
          out << k << ": " << sys.levels[k][r.entries[k]] << "\n";
      }
    });
  }

  // symbolic-compare
  {
    auto* cmd = app.add_subcommand("symbolic-compare", "order of eventually constant points");
    auto xs = std::make_shared<std::string>();
    auto ys = std::make_shared<std::string>();
    cmd->add_option("x", *xs, "point as \"<digits>:<tail>\"")->required();
    cmd->add_option("y", *ys)->required();
    cmd->callback([&, xs, ys] {
      out << cmp_name(symbolic_compare(SymbolicPoint::parse(*xs), SymbolicPoint::parse(*ys))) << "\n";
    });
  }

  // isolated
  {
    auto* cmd = app.add_subcommand("isolated", "isolation queries");
    auto arg = std::make_shared<std::string>();
    auto witness = std::make_shared<bool>(false);
    cmd->add_option("point", *arg, "point \"<digits>:<tail>\", or cylinder digits with --witness")
        ->required();
    cmd->add_flag("--witness", *witness, "treat the argument as a cylinder prefix");
    cmd->callback([&, arg, witness] {
      if (*witness) {
        SymbolicPoint w = isolated_dense_witness(parse_digit_string(*arg));
        out << w.to_string() << "\n";
        out << "isolated: " << (is_isolated(w) ? "yes" : "no") << "\n";
      } else {
        out << (is_isolated(SymbolicPoint::parse(*arg)) ? "true" : "false") << "\n";
      }
    });
  }

  // ideal threads. For these subcommands --depth names the result depth, so
  // the level bound widens to whatever the thread itself needs.
  auto load_thread = [&](const std::string& path, const IdealSystem*& sys_out,
                         std::vector<std::unique_ptr<IdealSystem>>& keep) {
    IdealThread t = ideal_thread_from_json(parse_json_file(path));
    LevelConfig wide{std::max(opt->depth, t.depth())};
    keep.push_back(std::make_unique<IdealSystem>(t.depth(), wide));
    sys_out = keep.back().get();
    validate_ideal_thread(*sys_out, t);
    return t;
  };

  // ideal-sup
  {
    auto* cmd = app.add_subcommand("ideal-sup", "coordinatewise supremum");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    cmd->add_option("a", *fa)->required();
    cmd->add_option("b", *fb)->required();
    cmd->callback([&, fa, fb] {
      std::vector<std::unique_ptr<IdealSystem>> keep;
      const IdealSystem* sys = nullptr;
      IdealThread a = load_thread(*fa, sys, keep);
      IdealThread b = ideal_thread_from_json(parse_json_file(*fb));
      validate_ideal_thread(*sys, b);
      out << ideal_thread_to_json(ideal_sup(*sys, a, b)).dump(2) << "\n";
    });
  }

  // ideal-inf
  {
    auto* cmd = app.add_subcommand("ideal-inf", "greedy infimum with optional lookahead");
    auto fa = std::make_shared<std::string>();
    auto fb = std::make_shared<std::string>();
    auto lookahead = std::make_shared<int>(0);
    cmd->add_option("a", *fa)->required();
    cmd->add_option("b", *fb)->required();
    cmd->add_option("--lookahead", *lookahead, "compute within threads of this depth (default: --depth)");
    cmd->callback([&, fa, fb, lookahead] {
      std::vector<std::unique_ptr<IdealSystem>> keep;
      const IdealSystem* sys = nullptr;
      IdealThread a = load_thread(*fa, sys, keep);
      IdealThread b = ideal_thread_from_json(parse_json_file(*fb));
      validate_ideal_thread(*sys, b);
      int n = app.count("--depth") ? std::min(opt->depth, a.depth()) : a.depth();
      int m = (*lookahead > 0) ? *lookahead : n;
      if (m > a.depth()) fail("lookahead exceeds the given thread depth");
      IdealThread inf = ideal_inf(*sys, a, b, n, m);
      Json j = ideal_thread_to_json(inf);
      bool stable = true;
      for (int mm = n; mm <= m; ++mm)
        if (!(ideal_inf(*sys, a, b, n, mm).coords == inf.coords)) stable = false;
      j["stable_up_to_lookahead"] = stable;
      out << j.dump(2) << "\n";
    });
  }

  // atom-below
  {
    auto* cmd = app.add_subcommand("atom-below", "atom below a nonzero ideal thread");
    auto fa = std::make_shared<std::string>();
    cmd->add_option("a", *fa)->required();
    cmd->callback([&, fa] {
      std::vector<std::unique_ptr<IdealSystem>> keep;
      const IdealSystem* sys = nullptr;
      IdealThread a = load_thread(*fa, sys, keep);
      out << ideal_thread_to_json(find_atom_below(*sys, a)).dump(2) << "\n";
    });
  }

  // principal-decomposition
  {
    auto* cmd = app.add_subcommand("principal-decomposition", "principal threads below an ideal thread");
    auto fa = std::make_shared<std::string>();
    cmd->add_option("a", *fa)->required();
    cmd->callback([&, fa] {
      std::vector<std::unique_ptr<IdealSystem>> keep;
      const IdealSystem* sys = nullptr;
      IdealThread a = load_thread(*fa, sys, keep);
      Json j = Json::array();
      for (const IdealThread& t : principal_decomposition(*sys, a)) j.push_back(ideal_thread_to_json(t));
      out << j.dump(2) << "\n";
    });
  }

  // induced-limit
  {
    auto* cmd = app.add_subcommand("induced-limit", "induced limit quotient of an ideal thread");
    auto ff = std::make_shared<std::string>();
    auto fa = std::make_shared<std::string>();
    cmd->add_option("family", *ff, "level map family JSON")->required();
    cmd->add_option("a", *fa, "ideal thread JSON over the level system")->required();
    cmd->callback([&, ff, fa] {
      LevelMapFamily family = family_from_json(parse_json_file(*ff), cfg());
      std::vector<std::unique_ptr<IdealSystem>> keep;
      const IdealSystem* sys = nullptr;
      IdealThread a = load_thread(*fa, sys, keep);
      IdealThread image = induced_limit_quotient(family, a);
      Json j = Json::array();
      for (const Bits& c : image.coords) j.push_back(bits_to_json(c));
      out << j.dump(2) << "\n";
    });
  }

  // encode
  {
    auto* cmd = app.add_subcommand("encode", "ternary encoding of a level down-set");
    auto n = std::make_shared<int>();
    auto file = std::make_shared<std::string>();
    auto inverse = std::make_shared<bool>(false);
    cmd->add_option("n", *n, "level depth")->required();
    cmd->add_option("input", *file, "level subset JSON, or ternary JSON with --inverse")->required();
    cmd->add_flag("--inverse", *inverse, "decode a ternary function to a down-set");
    cmd->callback([&, n, file, inverse] {
      ComponentIndex t(*n);
      if (*inverse) {
        TernaryFunction fn = ternary_from_json(parse_json_file(*file));
        if (fn.n != *n) fail("ternary function depth mismatch");
        Json j;
        j["n"] = *n;
        j["members"] = bits_to_json(psi_inverse(t, fn));
        out << j.dump(2) << "\n";
      } else {
        Bits members = level_subset_from_json(parse_json_file(*file), *n);
        if (!UniversalLevel(*n).is_down_set(members)) fail("the given subset is not a down-set");
        out << ternary_to_json(psi(t, members)).dump(2) << "\n";
      }
    });
  }

  // q-step
  {
    auto* cmd = app.add_subcommand("q-step", "ternary step map T_{n+1} -> T_n");
    auto n = std::make_shared<int>();
    auto file = std::make_shared<std::string>();
    cmd->add_option("n", *n, "target depth (input lives on T_{n+1})")->required();
    cmd->add_option("ternary", *file)->required();
    cmd->callback([&, n, file] {
      TernaryFunction fn = ternary_from_json(parse_json_file(*file));
      if (fn.n != *n + 1) fail("q-step input must live on T_" + std::to_string(*n + 1));
      out << ternary_to_json(q_step(fn)).dump(2) << "\n";
    });
  }

  // verify-square
  {
    auto* cmd = app.add_subcommand("verify-square", "encoding / induced-map square check");
    auto n = std::make_shared<int>();
    cmd->add_option("n", *n)->required();
    cmd->callback([&, n] {
      SquareReport r = verify_square(*n, static_cast<std::uint64_t>(opt->samples), opt->seed);
      out << "checked: " << r.checked << "\n";
      out << "mismatches: " << r.mismatches << "\n";
      if (r.mismatches) exit_code = 1;
    });
  }

  // quotient-iso
  {
    auto* cmd = app.add_subcommand("quotient-iso", "recognition of induced quotient maps");
    auto file = std::make_shared<std::string>();
    cmd->add_option("map", *file, "map JSON between lattice carriers")->required();
    cmd->callback([&, file] {
      Json j = parse_json_file(*file);
      FiniteLattice l = FiniteLattice::from_poset(poset_from_json(j.at("domain")));
      FiniteLattice t = FiniteLattice::from_poset(poset_from_json(j.at("codomain")));
      std::vector<int> p;
      for (const auto& v : j.at("assignment")) p.push_back(v.get<int>());
      QuotientIsoReport report = quotient_isomorphism_criterion(l, t, p);
      out << (report.holds ? "true" : "false") << " (" << report.detail << ")\n";
    });
  }

  // verify-all
  {
    auto* cmd = app.add_subcommand("verify-all", "run the acceptance suite");
    cmd->callback([&] { exit_code = run_verify_all(*opt, out, err); });
  }

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == Error::Kind::parse ? 3 : 2;
  } catch (const Json::exception& e) {
    err << "JSON error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}

}  // namespace ordlim
