// mgw: weights, ladders, Betti data and duality checks for matroids and codes.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mgw/error.hpp"
#include "mgw/io.hpp"

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string format = "json";
  bool values = false;
  std::string chain;
  std::uint64_t cap_subsets = mgw::kDefaultSubsetCap;
  std::uint64_t cap_subspaces = mgw::SubspaceCaps{}.max_subspaces;
  std::uint64_t seed = 1;
  std::string dump_ladder;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

mgw::Chain parse_chain(const std::string& text, int n) {
  mgw::Chain chain;
  for (const auto& part : split(text, '|')) {
    std::vector<int> labels;
    for (const auto& tok : split(part, ',')) {
      if (tok.empty()) continue;
      try {
        std::size_t used = 0;
        labels.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw mgw::InputError("bad label \"" + tok + "\" in --chain");
      }
    }
    chain.push_back(mgw::SubsetMask::from_labels(labels, n));
  }
  return chain;
}

mgw::json strands_json(const mgw::CycleLadder& ladder, const RunConfig& cfg) {
  const mgw::Matroid& m = ladder.matroid();
  if (cfg.chain.empty()) {
    const auto w = mgw::greedy_from_strands(ladder);
    return {{"e", w.e}, {"e_tilde", w.e_tilde}, {"g", w.g}};
  }
  const mgw::Chain chain = parse_chain(cfg.chain, m.size());
  const bool verdict = mgw::strand_check(ladder, chain);
  mgw::json maps = mgw::json::array();
  mgw::SubsetMask rho;
  for (std::size_t l = 1; l <= chain.size(); ++l) {
    maps.push_back({{"l", l},
                    {"rho", mgw::subset_json(rho)},
                    {"mu", mgw::subset_json(chain[l - 1])},
                    {"nonzero", mgw::strand_nonzero(ladder, static_cast<int>(l), rho, chain[l - 1])}});
    rho = chain[l - 1];
  }
  return {{"chain", mgw::chain_json(chain)}, {"nonzero", verdict}, {"maps", maps}};
}

mgw::json chained_json(const mgw::CycleLadder& ladder) {
  const auto v = mgw::is_chained(ladder);
  return {{"chained", v.chained},
          {"witness", v.witness ? mgw::chain_json(*v.witness) : mgw::json(nullptr)}};
}

mgw::BettiDiagram betti_diagram(const mgw::CycleLadder& ladder, const RunConfig& cfg) {
  return cfg.values ? mgw::betti_diagram_with_values(ladder, cfg.cap_subsets)
                    : mgw::betti_support(ladder);
}

mgw::json wei_json(const mgw::CycleLadder& ladder) {
  const mgw::CycleLadder dual(ladder.matroid().dual());
  return {{"greedy", mgw::to_json(mgw::check_wei_greedy(ladder, dual))},
          {"classical", mgw::to_json(mgw::check_wei_classical(ladder, dual))}};
}

mgw::json code_json(const mgw::LinearCode& code, const RunConfig& cfg) {
  mgw::SubspaceCaps caps;
  caps.max_subspaces = cfg.cap_subspaces;
  const auto r = mgw::greedy_bruteforce(code, caps);
  return {{"d", r.d},
          {"e", r.bottom_up.weights},
          {"e_tilde", r.top_down.weights},
          {"g", r.cez.weights},
          {"chained", r.chained}};
}

// Inside `report` a section that hits a cap is marked instead of aborting the
// whole run.
template <class F>
mgw::json guarded(F&& section) {
  try {
    return section();
  } catch (const mgw::CapExceeded& e) {
    return {{"cap_exceeded", e.what()}};
  }
}

mgw::json axioms_json(const mgw::Matroid& m, const RunConfig& cfg) {
  mgw::AxiomCheckOptions opts;
  opts.seed = cfg.seed;
  return mgw::to_json(mgw::validate_axioms(m, opts));
}

std::string render_table(const std::string& command, const mgw::json& out,
                         const std::optional<mgw::BettiDiagram>& diagram) {
  std::ostringstream s;
  auto capped = [&](const mgw::json& section) {
    if (!section.contains("cap_exceeded")) return false;
    s << "skipped, cap exceeded: " << section["cap_exceeded"].get<std::string>() << '\n';
    return true;
  };
  auto weights = [&](const mgw::json& w) {
    if (capped(w)) return;
    s << "d        " << w["d"].dump() << '\n'
      << "e        " << w["e"].dump() << '\n'
      << "e_tilde  " << w["e_tilde"].dump() << '\n'
      << "g        " << w["g"].dump() << '\n'
      << "chained  " << (w["chained"].get<bool>() ? "yes" : "no") << '\n';
  };
  auto wei = [&](const mgw::json& w) {
    if (capped(w)) return;
    for (const char* kind : {"greedy", "classical"}) {
      s << kind << " duality: " << (w[kind]["identity_holds"].get<bool>() ? "holds" : "FAILS")
        << "  left " << w[kind]["left"].dump() << "  n+1-dual "
        << w[kind]["right_transformed"].dump() << '\n';
    }
  };
  auto betti = [&]() {
    if (diagram) {
      s << mgw::betti_table(*diagram);
    } else {
      capped(command == "report" ? out["betti"] : out);
    }
  };
  if (command == "weights") {
    weights(out);
  } else if (command == "betti") {
    betti();
  } else if (command == "wei") {
    wei(out);
  } else if (command == "report") {
    weights(out["weights"]);
    s << '\n';
    wei(out["wei"]);
    s << '\n';
    betti();
    if (out.contains("code_bruteforce")) {
      s << "\ncode brute force\n";
      weights(out["code_bruteforce"]);
    }
  } else {
    s << out.dump(2) << '\n';
  }
  return s.str();
}

int run(const RunConfig& cfg) {
  const mgw::LoadedInput input = mgw::load_input(cfg.input);
  const mgw::Matroid& m = input.matroid;

  if (cfg.command == "validate") {
    const auto out = axioms_json(m, cfg);
    std::cout << (cfg.format == "table" ? render_table(cfg.command, out, std::nullopt)
                                        : out.dump(2) + "\n");
    return out["ok"].get<bool>() ? 0 : 2;
  }

  const mgw::CycleLadder ladder(m);
  if (!cfg.dump_ladder.empty()) {
    std::ofstream f(cfg.dump_ladder);
    if (!f) throw mgw::InputError("cannot write " + cfg.dump_ladder);
    f << mgw::ladder_json(ladder).dump() << '\n';
  }

  mgw::json out;
  std::optional<mgw::BettiDiagram> diagram;
  auto betti_section = [&] {
    diagram = betti_diagram(ladder, cfg);
    return mgw::to_json(*diagram);
  };
  if (cfg.command == "weights") {
    const auto report = mgw::weight_report(ladder);
    mgw::check_weight_invariants(report, ladder);
    out = mgw::to_json(report);
  } else if (cfg.command == "betti") {
    out = betti_section();
  } else if (cfg.command == "strands") {
    out = strands_json(ladder, cfg);
  } else if (cfg.command == "wei") {
    out = wei_json(ladder);
  } else if (cfg.command == "chained") {
    out = chained_json(ladder);
  } else {
    const auto report = mgw::weight_report(ladder);
    mgw::check_weight_invariants(report, ladder);
    out["weights"] = mgw::to_json(report);
    out["chained"] = chained_json(ladder);
    out["wei"] = guarded([&] { return wei_json(ladder); });
    out["betti"] = guarded(betti_section);
    out["shape"] = mgw::to_json(mgw::resolution_shape(ladder));
    out["strands"] = strands_json(ladder, cfg);
    out["axioms"] = axioms_json(m, cfg);
    if (input.code) {
      out["code_bruteforce"] = guarded([&] { return code_json(*input.code, cfg); });
    }
  }

  if (cfg.command == "report") {
    for (const char* kind : {"greedy", "classical"}) {
      if (out["wei"].contains(kind) && !out["wei"][kind]["identity_holds"].get<bool>()) {
        std::cerr << "mgw: " << kind << " Wei duality fails\n";
        std::cout << out.dump(2) << '\n';
        return 2;
      }
    }
  }
  if (cfg.format == "table") {
    std::cout << render_table(cfg.command, out, diagram);
  } else {
    std::cout << out.dump(2) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized and greedy weights of matroids and linear codes"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"weights", "Hamming, bottom-up, top-down and CEZ greedy weights"},
      {"betti", "Betti support (and values with --values)"},
      {"strands", "Check a strand given by --chain, or recompute the greedy weights from strands"},
      {"wei", "Classical and greedy Wei duality"},
      {"chained", "Chainedness verdict and witness chain"},
      {"report", "Everything above"},
      {"validate", "Check the rank axioms"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "Matroid JSON descriptor or code file")->required();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--values", cfg.values, "Compute Betti values, not only the support");
    sub->add_option("--chain", cfg.chain, "Chain of multidegrees, e.g. 1,2|1,2,3,4");
    sub->add_option("--cap-subsets", cfg.cap_subsets, "Largest 2^|X| for homology computations")
        ->check(CLI::PositiveNumber);
    sub->add_option("--cap-subspaces", cfg.cap_subspaces, "Subspace enumeration cap for codes")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for sampled axiom checks");
    sub->add_option("--dump-ladder", cfg.dump_ladder, "Write the cycle ladder as JSON");
    sub->callback([&cfg, name = std::string(name)] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(cfg);
  } catch (const mgw::InputError& e) {
    std::cerr << "mgw: input error: " << e.what() << '\n';
    return 1;
  } catch (const mgw::IdentityFailure& e) {
    std::cerr << "mgw: identity failure: " << e.what() << '\n';
    return 2;
  } catch (const mgw::CapExceeded& e) {
    std::cerr << "mgw: cap exceeded: " << e.what() << '\n';
    return 3;
  }
}
