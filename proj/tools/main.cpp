// Command-line front end for libarborith. Talks to the library exclusively
// through the C API in arborith.h; all output is deterministic for a fixed
// input (bench being the lone, timing-carrying exception).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "arborith.h"

namespace {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 ok, 1 usage, 2 domain, 3 resource/budget, 4 parse, 5 mismatch.
int exit_code_for(arb_status status) {
  switch (status) {
    case ARB_OK: return 0;
    case ARB_ERR_DOMAIN: return 2;
    case ARB_ERR_RESOURCE:
    case ARB_ERR_OVERFLOW:
    case ARB_ERR_NETWORK: return 3;
    case ARB_ERR_PARSE:
    case ARB_ERR_IO: return 4;
    default: return 1;
  }
}

struct Cli {
  uint64_t max_sieve = 10'000'000;  // 10^7 keeps ad-hoc decodes snappy
  unsigned threads = 1;
  bool quiet = false;
  std::string output = "text";
  arb_context* ctx = nullptr;

  bool json() const { return output == "json-lines"; }
};

int fail(const Cli& cli, arb_status status) {
  std::cerr << "arborith: " << arb_context_error(cli.ctx) << "\n";
  return exit_code_for(status);
}

std::string slurp_stdin() {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

arb_tree_format to_format(const std::string& name) {
  return name == "labeled" ? ARB_FORMAT_LABELED : ARB_FORMAT_POSITIONAL;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

int cmd_pair(const Cli& cli, uint64_t n) {
  int has_pair = 0;
  uint64_t t = 0, o = 0;
  if (arb_status st = arb_pair_of(cli.ctx, n, &has_pair, &t, &o); st != ARB_OK) return fail(cli, st);
  if (cli.json()) {
    ordered_json obj;
    obj["n"] = n;
    obj["type"] = has_pair ? ordered_json(t) : ordered_json(nullptr);
    obj["order"] = has_pair ? ordered_json(o) : ordered_json(nullptr);
    std::cout << obj.dump() << "\n";
  } else if (has_pair) {
    std::cout << t << " " << o << "\n";
  } else {
    std::cout << "NoPair\n";
  }
  return 0;
}

int cmd_encode(const Cli& cli, uint64_t n, const std::string& format) {
  arb_tree* tree = nullptr;
  if (arb_status st = arb_encode(cli.ctx, n, &tree); st != ARB_OK) return fail(cli, st);
  char* text = nullptr;
  arb_status st = arb_tree_serialize(cli.ctx, tree, to_format(format), &text);
  arb_tree_free(tree);
  if (st != ARB_OK) return fail(cli, st);
  if (cli.json()) {
    ordered_json obj;
    obj["n"] = n;
    obj["tree"] = text;
    std::cout << obj.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  arb_string_free(text);
  return 0;
}

int cmd_decode(const Cli& cli, std::string text, bool text_given, const std::string& format,
               bool trace) {
  if (!text_given || text == "-") text = slurp_stdin();
  arb_tree* tree = nullptr;
  if (arb_status st = arb_tree_parse(cli.ctx, text.c_str(), to_format(format), &tree, nullptr);
      st != ARB_OK)
    return fail(cli, st);

  uint64_t n = 0;
  arb_status st;
  arb_trace* steps = nullptr;
  if (trace) {
    st = arb_decode_traced(cli.ctx, tree, &n, &steps);
  } else {
    st = arb_decode(cli.ctx, tree, &n);
  }
  if (st != ARB_OK) {
    arb_tree_free(tree);
    return fail(cli, st);
  }

  if (steps) {
    for (size_t i = 0; i < arb_trace_size(steps); i++) {
      uint64_t node = 0, value = 0;
      arb_trace_entry(steps, i, &node, &value);
      if (cli.json()) {
        ordered_json obj;
        obj["node"] = node;
        obj["value"] = value;
        std::cout << obj.dump() << "\n";
      } else {
        std::cout << "n" << node << " = " << value << "\n";
      }
    }
    arb_trace_free(steps);
  }
  if (cli.json()) {
    char* canonical = nullptr;
    arb_tree_serialize(cli.ctx, tree, to_format(format), &canonical);
    ordered_json obj;
    obj["n"] = n;
    obj["tree"] = canonical ? canonical : "";
    std::cout << obj.dump() << "\n";
    arb_string_free(canonical);
  } else {
    std::cout << n << "\n";
  }
  arb_tree_free(tree);
  return 0;
}

int cmd_render(const Cli& cli, const std::string& input, const std::string& format, bool dot,
               bool annotate) {
  arb_tree* tree = nullptr;
  if (all_digits(input)) {
    uint64_t n = std::stoull(input);
    if (arb_status st = arb_encode(cli.ctx, n, &tree); st != ARB_OK) return fail(cli, st);
  } else {
    std::string text = input == "-" ? slurp_stdin() : input;
    if (arb_status st = arb_tree_parse(cli.ctx, text.c_str(), to_format(format), &tree, nullptr);
        st != ARB_OK)
      return fail(cli, st);
  }
  char* text = nullptr;
  arb_status st = dot ? arb_tree_render_dot(cli.ctx, tree, annotate ? 1 : 0, &text)
                      : arb_tree_render_ascii(cli.ctx, tree, &text);
  arb_tree_free(tree);
  if (st != ARB_OK) return fail(cli, st);
  std::cout << text;  // renderers terminate their own output
  arb_string_free(text);
  return 0;
}

int print_report(const Cli& cli, arb_report* report, bool sequence_mode) {
  uint64_t total = arb_report_total(report);
  uint64_t matches = arb_report_matches(report);
  uint64_t bad = arb_report_mismatches(report);
  if (!cli.quiet) {
    std::cout << matches << "/" << total << " match\n";
    for (uint64_t i = 0; i < bad; i++) {
      uint64_t n, et, eo, ct, co;
      arb_report_mismatch(report, i, &n, &et, &eo, &ct, &co);
      if (sequence_mode) {
        std::cout << "k=" << n << " expected=" << eo << " computed=" << co << "\n";
      } else {
        std::cout << "n=" << n << " expected=(" << et << "," << eo << ") computed=(" << ct << ","
                  << co << ")\n";
      }
    }
  }
  arb_report_free(report);
  return bad == 0 ? 0 : 5;
}

int cmd_verify(const Cli& cli, const std::string& appendix, const std::string& oeis_id,
               const std::string& oeis_path, uint64_t type_value, uint64_t kmax,
               const std::string& engine, bool fetch) {
  if (!appendix.empty()) {
    arb_report* report = nullptr;
    arb_engine eng = engine == "oracle" ? ARB_ENGINE_ORACLE : ARB_ENGINE_CORE;
    if (arb_status st = arb_verify_appendix(cli.ctx, appendix.c_str(), eng, &report); st != ARB_OK)
      return fail(cli, st);
    return print_report(cli, report, false);
  }
  if (fetch) {
    if (arb_status st = arb_oeis_fetch(cli.ctx, oeis_id.c_str(), oeis_path.c_str()); st != ARB_OK)
      return fail(cli, st);
    if (!cli.quiet) std::cerr << "fetched " << oeis_id << " -> " << oeis_path << "\n";
  }
  arb_report* report = nullptr;
  if (arb_status st = arb_oeis_check(cli.ctx, type_value, kmax, oeis_path.c_str(), &report);
      st != ARB_OK)
    return fail(cli, st);
  return print_report(cli, report, true);
}

int cmd_bench_sieve(const Cli& cli, uint64_t n) {
  arb_context* fresh = arb_context_new(arb_context_max_sieve(cli.ctx));
  arb_context_set_threads(fresh, cli.threads);
  auto start = std::chrono::steady_clock::now();
  arb_status st = arb_sieve_reserve(fresh, n);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (st != ARB_OK) {
    std::cerr << "arborith: " << arb_context_error(fresh) << "\n";
    arb_context_free(fresh);
    return exit_code_for(st);
  }
  arb_context_free(fresh);
  ordered_json obj;
  obj["op"] = "sieve";
  obj["n"] = n;
  obj["elapsed_s"] = elapsed;
  obj["entries_per_s"] = elapsed > 0 ? static_cast<double>(n) / elapsed : 0.0;
  std::cout << obj.dump() << "\n";
  return 0;
}

int cmd_bench_roundtrip(const Cli& cli, uint64_t n) {
  auto start = std::chrono::steady_clock::now();
  uint64_t failures = 0;
  for (uint64_t i = 1; i <= n; i++) {
    arb_tree* tree = nullptr;
    uint64_t back = 0;
    if (arb_encode(cli.ctx, i, &tree) != ARB_OK) return fail(cli, ARB_ERR_RESOURCE);
    arb_status st = arb_decode(cli.ctx, tree, &back);
    arb_tree_free(tree);
    if (st != ARB_OK) return fail(cli, st);
    if (back != i) failures++;
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ordered_json obj;
  obj["op"] = "roundtrip";
  obj["n"] = n;
  obj["elapsed_s"] = elapsed;
  obj["roundtrips_per_s"] = elapsed > 0 ? static_cast<double>(n) / elapsed : 0.0;
  obj["failures"] = failures;
  std::cout << obj.dump() << "\n";
  return failures == 0 ? 0 : 5;
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App app{"naturals <-> full binary trees via (type, order) pairs"};
  app.require_subcommand(1);
  app.add_option("--max-sieve", cli.max_sieve, "largest sieve bound any operation may build")
      ->envname("ARBORITH_MAX_SIEVE")
      ->capture_default_str();
  app.add_option("--threads", cli.threads, "worker threads for sieve construction")
      ->capture_default_str();
  app.add_flag("--quiet", cli.quiet, "suppress report detail lines");
  app.add_option("--output", cli.output, "output mode")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  uint64_t n = 0;
  std::string format = "positional";
  std::string tree_text;
  bool trace = false;
  bool dot = false, ascii = false, annotate = false;
  std::string appendix, oeis_id, oeis_path, engine = "core";
  uint64_t type_value = 1, kmax = 100;
  bool fetch = false;
  uint64_t bench_sieve = 0, bench_roundtrip = 0;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "tree text form")
        ->check(CLI::IsMember({"positional", "labeled"}))
        ->capture_default_str();
  };
  // Let global flags (--max-sieve, --output, ...) appear after the subcommand.
  app.fallthrough();

  auto* pair_cmd = app.add_subcommand("pair", "print 'type order' for n ('NoPair' for 1)");
  pair_cmd->add_option("n", n, "natural number")->required();

  auto* encode_cmd = app.add_subcommand("encode", "print the tree of n");
  encode_cmd->add_option("n", n, "natural number")->required();
  add_format(encode_cmd);

  auto* decode_cmd = app.add_subcommand("decode", "print the natural a tree stands for");
  auto* opt_tree = decode_cmd->add_option("tree", tree_text, "tree text ('-' or omitted: read stdin)");
  decode_cmd->add_flag("--trace", trace, "print the terminal-upward resolution stages");
  add_format(decode_cmd);

  auto* render_cmd = app.add_subcommand("render", "draw a tree (given as n or as tree text)");
  render_cmd->add_option("input", tree_text, "natural number or tree text")->required();
  render_cmd->add_flag("--dot", dot, "emit a Graphviz digraph");
  render_cmd->add_flag("--ascii", ascii, "emit an indented text drawing (default)");
  render_cmd->add_flag("--annotate", annotate, "label nodes with their decoded values (dot only)");
  add_format(render_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "check the engines against reference data");
  auto* opt_appendix =
      verify_cmd->add_option("--appendix", appendix, "reference pair-table CSV to reproduce");
  auto* opt_oeis = verify_cmd
                       ->add_option("--oeis", [&](const std::vector<std::string>& vals) {
                         oeis_id = vals[0];
                         oeis_path = vals[1];
                         return true;
                       },
                                    "sequence id and b-file path")
                       ->expected(2)
                       ->excludes(opt_appendix);
  opt_appendix->excludes(opt_oeis);
  verify_cmd->add_option("--type", type_value, "type whose members the sequence lists");
  verify_cmd->add_option("--kmax", kmax, "how many leading terms to check")->capture_default_str();
  verify_cmd->add_option("--engine", engine, "pair engine to verify")
      ->check(CLI::IsMember({"core", "oracle"}))
      ->capture_default_str();
  verify_cmd->add_flag("--fetch", fetch, "download the b-file into the given path first");

  auto* bench_cmd = app.add_subcommand("bench", "time library operations (json-lines output)");
  auto* opt_bsieve = bench_cmd->add_option("--sieve", bench_sieve, "build a sieve up to N");
  bench_cmd->add_option("--roundtrip", bench_roundtrip, "encode+decode every n in 1..N")
      ->excludes(opt_bsieve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help, --version
    app.exit(e);
    return 1;
  }

  cli.ctx = arb_context_new(cli.max_sieve);
  if (!cli.ctx) {
    std::cerr << "arborith: cannot create context\n";
    return 1;
  }
  arb_context_set_threads(cli.ctx, cli.threads);

  int rc = 1;
  if (pair_cmd->parsed()) {
    rc = cmd_pair(cli, n);
  } else if (encode_cmd->parsed()) {
    rc = cmd_encode(cli, n, format);
  } else if (decode_cmd->parsed()) {
    rc = cmd_decode(cli, tree_text, opt_tree->count() > 0, format, trace);
  } else if (render_cmd->parsed()) {
    if (dot && ascii) {
      std::cerr << "arborith: --dot and --ascii are mutually exclusive\n";
      rc = 1;
    } else {
      rc = cmd_render(cli, tree_text, format, dot, annotate);
    }
  } else if (verify_cmd->parsed()) {
    if (appendix.empty() && oeis_path.empty()) {
      std::cerr << "arborith: verify needs --appendix or --oeis\n";
      rc = 1;
    } else {
      rc = cmd_verify(cli, appendix, oeis_id, oeis_path, type_value, kmax, engine, fetch);
    }
  } else if (bench_cmd->parsed()) {
    if (bench_sieve == 0 && bench_roundtrip == 0) {
      std::cerr << "arborith: bench needs --sieve or --roundtrip\n";
      rc = 1;
    } else if (bench_sieve != 0) {
      rc = cmd_bench_sieve(cli, bench_sieve);
    } else {
      rc = cmd_bench_roundtrip(cli, bench_roundtrip);
    }
  }

  arb_context_free(cli.ctx);
  return rc;
}
