#include "arborith.h"

#include <cstring>
#include <new>
#include <string>

#include "arborith/codec.hpp"
#include "arborith/core.hpp"
#include "arborith/treeio.hpp"
#include "arborith/verify.hpp"

using namespace arborith;

struct arb_context {
  SieveCache cache;
  std::string error;

  explicit arb_context(uint64_t max_sieve, unsigned threads = 1)
      : cache(Budget{max_sieve}, threads) {}
};

struct arb_tree {
  FullBinaryTree tree;
};

struct arb_trace {
  DecodeTrace trace;
};

struct arb_report {
  VerificationReport report;
};

namespace {

arb_status set_error(arb_context* ctx, arb_status status, const char* msg) {
  if (ctx) ctx->error = msg;
  return status;
}

// Runs `fn` with exceptions mapped onto status codes and the context's
// error slot. Every public entry point funnels through here.
template <typename Fn>
arb_status guarded(arb_context* ctx, Fn&& fn) {
  if (!ctx) return ARB_ERR_INVALID;
  try {
    ctx->error.clear();
    fn();
    return ARB_OK;
  } catch (const DomainError& e) {
    ctx->error = e.what();
    return ARB_ERR_DOMAIN;
  } catch (const ResourceError& e) {
    ctx->error = e.what();
    return ARB_ERR_RESOURCE;
  } catch (const OverflowError& e) {
    ctx->error = e.what();
    return ARB_ERR_OVERFLOW;
  } catch (const ParseError& e) {
    ctx->error = e.what();
    return ARB_ERR_PARSE;
  } catch (const NetworkError& e) {
    ctx->error = e.what();
    return ARB_ERR_NETWORK;
  } catch (const FileError& e) {
    ctx->error = e.what();
    return e.line() ? ARB_ERR_PARSE : ARB_ERR_IO;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return ARB_ERR_RESOURCE;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return ARB_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* arb_version(void) { return "1.0.0"; }

arb_context* arb_context_new(uint64_t max_sieve_bound) {
  try {
    return new arb_context(max_sieve_bound == 0 ? kDefaultMaxSieveBound : max_sieve_bound);
  } catch (...) {
    return nullptr;
  }
}

void arb_context_free(arb_context* ctx) { delete ctx; }

uint64_t arb_context_max_sieve(const arb_context* ctx) {
  return ctx ? ctx->cache.budget().max_sieve_bound : 0;
}

void arb_context_set_threads(arb_context* ctx, unsigned threads) {
  if (!ctx) return;
  // Rebuilding the cache keeps SieveCache itself immutable-after-build.
  ctx->cache = SieveCache(ctx->cache.budget(), threads == 0 ? 1 : threads);
}

const char* arb_context_error(const arb_context* ctx) { return ctx ? ctx->error.c_str() : ""; }

arb_status arb_type_of(arb_context* ctx, uint64_t n, uint64_t* type_out) {
  if (!type_out) return set_error(ctx, ARB_ERR_INVALID, "type_out is null");
  return guarded(ctx, [&] { *type_out = type_of(n); });
}

arb_status arb_order_of(arb_context* ctx, uint64_t n, uint64_t* order_out) {
  if (!order_out) return set_error(ctx, ARB_ERR_INVALID, "order_out is null");
  return guarded(ctx, [&] { *order_out = rank_within_type(n, ctx->cache); });
}

arb_status arb_pair_of(arb_context* ctx, uint64_t n, int* has_pair, uint64_t* type_out,
                       uint64_t* order_out) {
  if (!has_pair || !type_out || !order_out)
    return set_error(ctx, ARB_ERR_INVALID, "out-parameter is null");
  return guarded(ctx, [&] {
    auto pair = pair_of(n, ctx->cache);
    *has_pair = pair.has_value() ? 1 : 0;
    *type_out = pair ? pair->type_value : 0;
    *order_out = pair ? pair->order_value : 0;
  });
}

arb_status arb_count_leq(arb_context* ctx, uint64_t type_value, uint64_t x, uint64_t* count_out) {
  if (!count_out) return set_error(ctx, ARB_ERR_INVALID, "count_out is null");
  return guarded(ctx, [&] { *count_out = count_leq(type_value, x, ctx->cache); });
}

arb_status arb_unrank(arb_context* ctx, uint64_t type_value, uint64_t order_value, uint64_t* n_out) {
  if (!n_out) return set_error(ctx, ARB_ERR_INVALID, "n_out is null");
  return guarded(ctx, [&] { *n_out = unrank(type_value, order_value, ctx->cache); });
}

arb_status arb_sieve_reserve(arb_context* ctx, uint64_t bound) {
  return guarded(ctx, [&] { ctx->cache.at_least(bound); });
}

arb_status arb_oracle_pair(arb_context* ctx, uint64_t n, uint64_t* type_out, uint64_t* order_out) {
  if (!type_out || !order_out) return set_error(ctx, ARB_ERR_INVALID, "out-parameter is null");
  return guarded(ctx, [&] {
    PairCode pair = oracle_pair(n);
    *type_out = pair.type_value;
    *order_out = pair.order_value;
  });
}

arb_status arb_encode(arb_context* ctx, uint64_t n, arb_tree** tree_out) {
  if (!tree_out) return set_error(ctx, ARB_ERR_INVALID, "tree_out is null");
  return guarded(ctx, [&] { *tree_out = new arb_tree{encode(n, ctx->cache)}; });
}

arb_status arb_decode(arb_context* ctx, const arb_tree* tree, uint64_t* n_out) {
  if (!tree || !n_out) return set_error(ctx, ARB_ERR_INVALID, "tree or n_out is null");
  return guarded(ctx, [&] { *n_out = decode(tree->tree, ctx->cache); });
}

arb_status arb_decode_traced(arb_context* ctx, const arb_tree* tree, uint64_t* n_out,
                             arb_trace** trace_out) {
  if (!tree || !n_out || !trace_out)
    return set_error(ctx, ARB_ERR_INVALID, "out-parameter is null");
  return guarded(ctx, [&] {
    auto trace = new arb_trace{};
    try {
      *n_out = decode(tree->tree, ctx->cache, &trace->trace);
    } catch (...) {
      delete trace;
      throw;
    }
    *trace_out = trace;
  });
}

void arb_tree_free(arb_tree* tree) { delete tree; }

uint64_t arb_tree_nodes(const arb_tree* tree) { return tree ? tree->tree.node_count() : 0; }

int arb_tree_equal(const arb_tree* a, const arb_tree* b) {
  if (!a || !b) return a == b;
  return a->tree == b->tree ? 1 : 0;
}

arb_status arb_tree_stats(const arb_tree* tree, uint64_t* leaves, uint64_t* internal_nodes,
                          uint64_t* depth) {
  if (!tree || !leaves || !internal_nodes || !depth) return ARB_ERR_INVALID;
  TreeStats stats = tree_stats(tree->tree);
  *leaves = stats.leaves;
  *internal_nodes = stats.internal;
  *depth = stats.depth;
  return ARB_OK;
}

arb_status arb_tree_parse(arb_context* ctx, const char* text, arb_tree_format format,
                          arb_tree** tree_out, size_t* error_offset) {
  if (!text || !tree_out) return set_error(ctx, ARB_ERR_INVALID, "text or tree_out is null");
  if (!ctx) return ARB_ERR_INVALID;
  try {
    ctx->error.clear();
    FullBinaryTree tree = format == ARB_FORMAT_LABELED ? parse_labeled(text) : parse_positional(text);
    *tree_out = new arb_tree{std::move(tree)};
    return ARB_OK;
  } catch (const ParseError& e) {
    ctx->error = e.what();
    if (error_offset) *error_offset = e.offset();
    return ARB_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    ctx->error = "out of memory";
    return ARB_ERR_RESOURCE;
  }
}

arb_status arb_tree_serialize(arb_context* ctx, const arb_tree* tree, arb_tree_format format,
                              char** text_out) {
  if (!tree || !text_out) return set_error(ctx, ARB_ERR_INVALID, "tree or text_out is null");
  return guarded(ctx, [&] {
    *text_out = copy_string(serialize_tree(
        tree->tree, format == ARB_FORMAT_LABELED ? TreeFormat::labeled : TreeFormat::positional));
  });
}

arb_status arb_tree_render_dot(arb_context* ctx, const arb_tree* tree, int annotate,
                               char** text_out) {
  if (!tree || !text_out) return set_error(ctx, ARB_ERR_INVALID, "tree or text_out is null");
  return guarded(ctx, [&] { *text_out = copy_string(render_dot(tree->tree, annotate != 0, ctx->cache)); });
}

arb_status arb_tree_render_ascii(arb_context* ctx, const arb_tree* tree, char** text_out) {
  if (!tree || !text_out) return set_error(ctx, ARB_ERR_INVALID, "tree or text_out is null");
  return guarded(ctx, [&] { *text_out = copy_string(render_ascii(tree->tree)); });
}

void arb_string_free(char* text) { delete[] text; }

size_t arb_trace_size(const arb_trace* trace) { return trace ? trace->trace.size() : 0; }

arb_status arb_trace_entry(const arb_trace* trace, size_t i, uint64_t* node_id, uint64_t* value) {
  if (!trace || !node_id || !value || i >= trace->trace.size()) return ARB_ERR_INVALID;
  *node_id = trace->trace[i].node;
  *value = trace->trace[i].value;
  return ARB_OK;
}

void arb_trace_free(arb_trace* trace) { delete trace; }

arb_status arb_verify_appendix(arb_context* ctx, const char* csv_path, arb_engine engine,
                               arb_report** report_out) {
  if (!csv_path || !report_out) return set_error(ctx, ARB_ERR_INVALID, "csv_path or report_out is null");
  return guarded(ctx, [&] {
    auto records = load_appendix(csv_path);
    *report_out = new arb_report{verify_appendix(
        records, engine == ARB_ENGINE_ORACLE ? Engine::oracle : Engine::core, ctx->cache)};
  });
}

arb_status arb_oeis_check(arb_context* ctx, uint64_t type_value, uint64_t k_max,
                          const char* bfile_path, arb_report** report_out) {
  if (!bfile_path || !report_out)
    return set_error(ctx, ARB_ERR_INVALID, "bfile_path or report_out is null");
  return guarded(ctx, [&] {
    *report_out = new arb_report{oeis_crosscheck(type_value, k_max, bfile_path, ctx->cache)};
  });
}

arb_status arb_oeis_fetch(arb_context* ctx, const char* sequence_id, const char* cache_path) {
  if (!sequence_id || !cache_path)
    return set_error(ctx, ARB_ERR_INVALID, "sequence_id or cache_path is null");
  return guarded(ctx, [&] { fetch_bfile(sequence_id, cache_path); });
}

uint64_t arb_report_total(const arb_report* report) { return report ? report->report.total : 0; }

uint64_t arb_report_matches(const arb_report* report) { return report ? report->report.matches : 0; }

uint64_t arb_report_mismatches(const arb_report* report) {
  return report ? report->report.mismatches.size() : 0;
}

arb_status arb_report_mismatch(const arb_report* report, uint64_t i, uint64_t* n,
                               uint64_t* expected_type, uint64_t* expected_order,
                               uint64_t* computed_type, uint64_t* computed_order) {
  if (!report || !n || !expected_type || !expected_order || !computed_type || !computed_order ||
      i >= report->report.mismatches.size())
    return ARB_ERR_INVALID;
  const Mismatch& mm = report->report.mismatches[i];
  *n = mm.n;
  *expected_type = mm.expected.type_value;
  *expected_order = mm.expected.order_value;
  *computed_type = mm.computed.type_value;
  *computed_order = mm.computed.order_value;
  return ARB_OK;
}

void arb_report_free(arb_report* report) { delete report; }

}  // extern "C"
