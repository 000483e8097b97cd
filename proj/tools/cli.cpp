#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "heckewalk/closedform.hpp"
#include "heckewalk/hecke.hpp"
#include "heckewalk/seq.hpp"
#include "heckewalk/walk.hpp"
#include "json_io.hpp"

namespace heckewalk::cli {

namespace {

using json_io::json;
using json_io::to_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostringstream out;
  std::ostringstream err;
  int exit_code = 0;
};

void emit_json(Context& ctx, const json& j) { ctx.out << j.dump() << '\n'; }

Perm perm_for_degree(const std::string& text, int degree) {
  Perm w = parse_perm(text);
  return degree == 0 ? w : w.pad(degree);
}

void cmd_expand(Context& ctx, const std::string& seq, int degree, bool as_json, bool force) {
  const HeckeElt h = expand(parse_sequence(seq), {.degree = degree, .force = force});
  if (as_json) {
    emit_json(ctx, to_json(h));
    return;
  }
  for (const auto& [w, c] : h.sorted_terms()) ctx.out << w.to_string() << '\t' << c.to_string() << '\n';
}

void cmd_alpha(Context& ctx, const std::string& seq, const std::string& perm, int degree, bool as_json) {
  const GenSequence r = parse_sequence(seq);
  const Perm w = perm_for_degree(perm, degree);
  const TightClass cls = classify(r);
  const QPoly a = alpha(r, cls, w);
  if (as_json) {
    emit_json(ctx, {{"sequence", to_json(r)}, {"perm", to_json(w)}, {"classification", to_json(cls)},
                    {"alpha", to_json(a)}});
    return;
  }
  ctx.out << a.to_string() << '\n';
}

void cmd_alpha_table(Context& ctx, const std::string& seq, int degree, bool as_json) {
  const GenSequence r = parse_sequence(seq);
  const TightClass cls = classify(r);
  const auto table = alpha_table(r, cls, degree);
  if (as_json) {
    json entries = json::array();
    for (const auto& [w, a] : table) entries.push_back({{"perm", to_json(w)}, {"alpha", to_json(a)}});
    emit_json(ctx, {{"sequence", to_json(r)},
                    {"degree", degree == 0 ? r.min_degree() : degree},
                    {"classification", to_json(cls)},
                    {"entries", std::move(entries)}});
    return;
  }
  for (const auto& [w, a] : table) ctx.out << w.to_string() << '\t' << a.to_string() << '\n';
}

void cmd_verify(Context& ctx, const std::string& seq, int degree, bool as_json) {
  const AlphaReport report = verify(parse_sequence(seq), degree);
  if (as_json) {
    emit_json(ctx, to_json(report));
  } else {
    ctx.out << "classification: " << to_string(report.classification.tag) << '\n';
    ctx.out << "entries: " << report.entries.size() << '\n';
    for (const auto& [w, e] : report.entries) {
      if (!e.match) {
        ctx.out << "mismatch " << w.to_string() << "\tclosed " << e.closed.to_string() << "\toracle "
                << e.oracle.to_string() << '\n';
      }
    }
    ctx.out << "all_match: " << (report.all_match ? "true" : "false") << '\n';
  }
  if (!report.classification.covered()) ctx.err << "note: no closed form covers " << seq << '\n';
  if (report.classification.search_truncated) ctx.err << "warning: commutation class search truncated\n";
  ctx.exit_code = report.all_match ? 0 : 1;
}

void cmd_tight_check(Context& ctx, const std::string& seq, bool as_json) {
  const GenSequence r = parse_sequence(seq);
  const bool tight = is_tight(r);
  if (as_json) {
    emit_json(ctx, {{"sequence", to_json(r)}, {"tight", tight}});
  } else {
    ctx.out << (tight ? "true" : "false") << '\n';
  }
}

void cmd_tight_enumerate(Context& ctx, int length, bool as_json) {
  const auto all = enumerate_tight(length);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : all) arr.push_back(to_json(r));
    emit_json(ctx, arr);
    return;
  }
  for (const auto& r : all) ctx.out << r.to_string() << '\n';
}

void cmd_tight_classify(Context& ctx, const std::string& seq, bool as_json) {
  const GenSequence r = parse_sequence(seq);
  const TightClass c = classify(r);
  if (c.search_truncated) ctx.err << "warning: commutation class search truncated at " << kCommutationSearchCap << '\n';
  if (as_json) {
    json j = to_json(c);
    j["sequence"] = to_json(r);
    emit_json(ctx, j);
    return;
  }
  ctx.out << to_string(c.tag);
  if (c.witness) ctx.out << '\t' << "witness " << c.witness->to_string() << " (" << to_string(c.inner) << ')';
  if (c.uses_inverse) ctx.out << '\t' << "uses inverse";
  ctx.out << '\n';
}

struct WalkArgs {
  std::string seq;
  std::string q;
  int degree = 0;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  bool json = false;
};

WalkConfig walk_config(Context& ctx, const WalkArgs& a) {
  if (a.samples == 0) throw UsageError("--samples must be a positive integer");
  WalkConfig cfg;
  cfg.q = parse_rational(a.q);
  cfg.samples = a.samples;
  cfg.threads = a.threads;
  if (a.seed) {
    cfg.seed = *a.seed;
  } else if (a.json) {
    throw UsageError("--seed is required with --json");
  } else {
    cfg.seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) | std::random_device{}();
    ctx.err << "seed: " << cfg.seed << '\n';
  }
  return cfg;
}

void cmd_walk_exact(Context& ctx, const WalkArgs& a) {
  const Distribution d = exact_distribution(parse_sequence(a.seq), parse_rational(a.q), a.degree);
  if (a.json) {
    emit_json(ctx, to_json(d));
    return;
  }
  for (const auto& [w, p] : d.exact_probs()) ctx.out << w.to_string() << '\t' << to_string(p) << '\n';
}

void cmd_walk_simulate(Context& ctx, const WalkArgs& a) {
  const WalkConfig cfg = walk_config(ctx, a);
  const Distribution d = simulate(parse_sequence(a.seq), cfg, a.degree);
  if (a.json) {
    json j = to_json(d);
    j["samples"] = cfg.samples;
    j["seed"] = cfg.seed;
    emit_json(ctx, j);
    return;
  }
  for (const auto& [w, p] : d.empirical_probs()) ctx.out << w.to_string() << '\t' << p << '\n';
}

void cmd_walk_compare(Context& ctx, const WalkArgs& a) {
  const WalkConfig cfg = walk_config(ctx, a);
  const GenSequence r = parse_sequence(a.seq);
  const Distribution exact = exact_distribution(r, cfg.q, a.degree);
  const Distribution empirical = simulate(r, cfg, a.degree);
  const double tv = total_variation(exact, empirical);
  std::set<Perm> support;
  for (const auto& [w, p] : exact.exact_probs()) support.insert(w);
  for (const auto& [w, p] : empirical.empirical_probs()) support.insert(w);
  if (a.json) {
    json rows = json::array();
    for (const Perm& w : support) {
      rows.push_back({{"perm", to_json(w)}, {"exact", to_json(exact.exact_prob(w))}, {"empirical", empirical.prob(w)}});
    }
    emit_json(ctx, {{"degree", exact.degree()}, {"samples", cfg.samples}, {"seed", cfg.seed},
                    {"total_variation", tv}, {"rows", std::move(rows)}});
    return;
  }
  ctx.out << "total_variation\t" << tv << '\n';
  for (const Perm& w : support) {
    ctx.out << w.to_string() << '\t' << to_string(exact.exact_prob(w)) << '\t' << empirical.prob(w) << '\n';
  }
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Context ctx;
  CLI::App app{"Hecke algebra products, tight sequences, and random walks on S_n", "heckewalk"};
  app.require_subcommand(1);

  std::string seq, perm, q;
  int degree = 0;
  int length = 0;
  bool as_json = false, as_table = false, force = false;
  WalkArgs walk;

  auto* expand_cmd = app.add_subcommand("expand", "Expand Q(r) in the standard basis");
  expand_cmd->add_option("seq", seq, "Generator sequence, e.g. 1,2,1")->required();
  expand_cmd->add_option("--degree", degree, "Degree n >= max(r)+1");
  auto* json_flag = expand_cmd->add_flag("--json", as_json, "Emit JSON");
  expand_cmd->add_flag("--table", as_table, "Emit a table (default)")->excludes(json_flag);
  expand_cmd->add_flag("--force", force, "Allow degrees above the size guard");

  auto* alpha_cmd = app.add_subcommand("alpha", "Closed-form coefficient alpha_r(w)");
  alpha_cmd->add_option("seq", seq)->required();
  alpha_cmd->add_option("perm", perm, "Permutation, e.g. 1,2,4,3")->required();
  alpha_cmd->add_option("--degree", degree);
  alpha_cmd->add_flag("--json", as_json);

  auto* table_cmd = app.add_subcommand("alpha-table", "Closed-form coefficients over the downset of r");
  table_cmd->add_option("seq", seq)->required();
  table_cmd->add_option("--degree", degree);
  table_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "Check the closed form against the expansion");
  verify_cmd->add_option("seq", seq)->required();
  verify_cmd->add_option("--degree", degree);
  verify_cmd->add_flag("--json", as_json);

  auto* tight_cmd = app.add_subcommand("tight", "Tight sequences");
  tight_cmd->require_subcommand(1);
  auto* check_cmd = tight_cmd->add_subcommand("check", "Is the sequence tight?");
  check_cmd->add_option("seq", seq)->required();
  check_cmd->add_flag("--json", as_json);
  auto* enum_cmd = tight_cmd->add_subcommand("enumerate", "All tight sequences of a given length");
  enum_cmd->add_option("length", length)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--json", as_json);
  auto* classify_cmd = tight_cmd->add_subcommand("classify", "Which closed form applies");
  classify_cmd->add_option("seq", seq)->required();
  classify_cmd->add_flag("--json", as_json);

  auto* walk_cmd = app.add_subcommand("walk", "Random walks on S_n");
  walk_cmd->require_subcommand(1);
  auto add_walk_common = [&walk](CLI::App* c) {
    c->add_option("seq", walk.seq)->required();
    c->add_option("--q", walk.q, "0 < q <= 1, as p/q or a decimal")->required();
    c->add_option("--degree", walk.degree);
    c->add_flag("--json", walk.json);
  };
  auto* exact_cmd = walk_cmd->add_subcommand("exact", "Exact law of the final permutation");
  add_walk_common(exact_cmd);
  auto* sim_cmd = walk_cmd->add_subcommand("simulate", "Monte Carlo of the walk");
  auto* cmp_cmd = walk_cmd->add_subcommand("compare", "Total variation between simulation and exact law");
  for (auto* c : {sim_cmd, cmp_cmd}) {
    add_walk_common(c);
    c->add_option("--samples", walk.samples)->required();
    c->add_option("--seed", walk.seed);
    c->add_option("--threads", walk.threads, "Worker threads (0 = hardware)");
  }

  std::vector<const char*> argv{"heckewalk"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, ctx.out, ctx.err);
    return {code == 0 ? 0 : 2, ctx.out.str(), ctx.err.str()};
  }

  try {
    if (*expand_cmd) {
      cmd_expand(ctx, seq, degree, as_json, force);
    } else if (*alpha_cmd) {
      cmd_alpha(ctx, seq, perm, degree, as_json);
    } else if (*table_cmd) {
      cmd_alpha_table(ctx, seq, degree, as_json);
    } else if (*verify_cmd) {
      cmd_verify(ctx, seq, degree, as_json);
    } else if (*check_cmd) {
      cmd_tight_check(ctx, seq, as_json);
    } else if (*enum_cmd) {
      cmd_tight_enumerate(ctx, length, as_json);
    } else if (*classify_cmd) {
      cmd_tight_classify(ctx, seq, as_json);
    } else if (*exact_cmd) {
      cmd_walk_exact(ctx, walk);
    } else if (*sim_cmd) {
      cmd_walk_simulate(ctx, walk);
    } else if (*cmp_cmd) {
      cmd_walk_compare(ctx, walk);
    }
  } catch (const std::exception& e) {
    // Domain, range, and usage errors all end here; the payload is discarded.
    return {2, "", ctx.err.str() + "error: " + e.what() + '\n' + app.help()};
  }
  return {ctx.exit_code, ctx.out.str(), ctx.err.str()};
}

}  // namespace heckewalk::cli
