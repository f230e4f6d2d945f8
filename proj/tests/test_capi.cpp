#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "arborith.h"

namespace {

const std::string kFixtures = ARBORITH_FIXTURES_DIR;

struct Ctx {
  arb_context* ptr;
  explicit Ctx(uint64_t max_sieve = 0) : ptr(arb_context_new(max_sieve)) { REQUIRE(ptr); }
  ~Ctx() { arb_context_free(ptr); }
  operator arb_context*() const { return ptr; }
};

}  // namespace

TEST_CASE("version and context basics") {
  CHECK(std::string(arb_version()) == "1.0.0");

  Ctx ctx;
  CHECK(arb_context_max_sieve(ctx) == 100'000'000);
  CHECK(std::string(arb_context_error(ctx)).empty());

  Ctx small(4096);
  CHECK(arb_context_max_sieve(small) == 4096);
}

TEST_CASE("pair functions across the boundary") {
  Ctx ctx;
  uint64_t t = 0, o = 0;
  int has_pair = 0;

  CHECK(arb_pair_of(ctx, 598, &has_pair, &t, &o) == ARB_OK);
  CHECK(has_pair == 1);
  CHECK(t == 4);
  CHECK(o == 143);

  CHECK(arb_pair_of(ctx, 1, &has_pair, &t, &o) == ARB_OK);
  CHECK(has_pair == 0);

  CHECK(arb_pair_of(ctx, 0, &has_pair, &t, &o) == ARB_ERR_DOMAIN);
  CHECK(std::string(arb_context_error(ctx)).find("pair_of") != std::string::npos);

  CHECK(arb_type_of(ctx, 490, &t) == ARB_OK);
  CHECK(t == 4);
  CHECK(arb_order_of(ctx, 78, &o) == ARB_OK);
  CHECK(o == 6);
  CHECK(arb_count_leq(ctx, 1, 7, &o) == ARB_OK);
  CHECK(o == 4);

  uint64_t n = 0;
  CHECK(arb_unrank(ctx, 5, 16, &n) == ARB_OK);
  CHECK(n == 840);

  CHECK(arb_oracle_pair(ctx, 52, &t, &o) == ARB_OK);
  CHECK(t == 3);
  CHECK(o == 26);
}

TEST_CASE("budget errors surface as ARB_ERR_RESOURCE with a message") {
  Ctx tight(1000);
  uint64_t n = 0;
  CHECK(arb_unrank(tight, 9, 1, &n) == ARB_ERR_RESOURCE);
  CHECK(std::string(arb_context_error(tight)).find("max_sieve_bound") != std::string::npos);

  // A later good call clears the error slot.
  CHECK(arb_unrank(tight, 1, 1, &n) == ARB_OK);
  CHECK(n == 2);
  CHECK(std::string(arb_context_error(tight)).empty());
}

TEST_CASE("encode, decode, serialize, parse") {
  Ctx ctx;

  arb_tree* tree = nullptr;
  REQUIRE(arb_encode(ctx, 25, &tree) == ARB_OK);
  CHECK(arb_tree_nodes(tree) == 11);

  uint64_t leaves = 0, internal = 0, depth = 0;
  CHECK(arb_tree_stats(tree, &leaves, &internal, &depth) == ARB_OK);
  CHECK(leaves == 6);
  CHECK(internal == 5);
  CHECK(depth == 4);

  char* text = nullptr;
  REQUIRE(arb_tree_serialize(ctx, tree, ARB_FORMAT_POSITIONAL, &text) == ARB_OK);
  CHECK(std::string(text) == "((1 1) (1 (1 (1 1))))");
  arb_string_free(text);

  REQUIRE(arb_tree_serialize(ctx, tree, ARB_FORMAT_LABELED, &text) == ARB_OK);
  CHECK(std::string(text) == "(T:(T:1 O:1) O:(T:1 O:(T:1 O:(T:1 O:1))))");

  arb_tree* reparsed = nullptr;
  REQUIRE(arb_tree_parse(ctx, text, ARB_FORMAT_LABELED, &reparsed, nullptr) == ARB_OK);
  CHECK(arb_tree_equal(tree, reparsed) == 1);
  arb_string_free(text);

  uint64_t n = 0;
  CHECK(arb_decode(ctx, reparsed, &n) == ARB_OK);
  CHECK(n == 25);

  arb_tree_free(reparsed);
  arb_tree_free(tree);
}

TEST_CASE("parse errors report the byte offset") {
  Ctx ctx;
  arb_tree* tree = nullptr;
  size_t offset = 0;

  CHECK(arb_tree_parse(ctx, "(1 1", ARB_FORMAT_POSITIONAL, &tree, &offset) == ARB_ERR_PARSE);
  CHECK(offset == 4);
  CHECK(std::string(arb_context_error(ctx)).find("byte 4") != std::string::npos);

  CHECK(arb_tree_parse(ctx, "(T:1 T:1)", ARB_FORMAT_LABELED, &tree, &offset) == ARB_ERR_PARSE);
  CHECK(offset == 5);
}

TEST_CASE("decode trace entries resolve children first") {
  Ctx ctx;
  arb_tree* tree = nullptr;
  REQUIRE(arb_tree_parse(ctx, "((1 1) ((1 (1 1)) 1))", ARB_FORMAT_POSITIONAL, &tree, nullptr) ==
          ARB_OK);

  uint64_t n = 0;
  arb_trace* trace = nullptr;
  REQUIRE(arb_decode_traced(ctx, tree, &n, &trace) == ARB_OK);
  CHECK(n == 27);
  REQUIRE(arb_trace_size(trace) == arb_tree_nodes(tree));

  uint64_t node = 0, value = 0;
  CHECK(arb_trace_entry(trace, arb_trace_size(trace) - 1, &node, &value) == ARB_OK);
  CHECK(node == 0);
  CHECK(value == 27);
  CHECK(arb_trace_entry(trace, arb_trace_size(trace), &node, &value) == ARB_ERR_INVALID);

  arb_trace_free(trace);
  arb_tree_free(tree);
}

TEST_CASE("renderers through the C API") {
  Ctx ctx;
  arb_tree* tree = nullptr;
  REQUIRE(arb_encode(ctx, 27, &tree) == ARB_OK);

  char* text = nullptr;
  REQUIRE(arb_tree_render_dot(ctx, tree, 1, &text) == ARB_OK);
  std::string dot(text);
  arb_string_free(text);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 [label=\"27\"]") != std::string::npos);

  REQUIRE(arb_tree_render_ascii(ctx, tree, &text) == ARB_OK);
  CHECK(text[0] == '*');
  arb_string_free(text);
  arb_tree_free(tree);
}

TEST_CASE("verification through the C API") {
  Ctx ctx;
  arb_report* report = nullptr;
  std::string csv = kFixtures + "/appendix_pairs.csv";

  REQUIRE(arb_verify_appendix(ctx, csv.c_str(), ARB_ENGINE_CORE, &report) == ARB_OK);
  CHECK(arb_report_total(report) == 1079);
  CHECK(arb_report_matches(report) == 1079);
  CHECK(arb_report_mismatches(report) == 0);
  arb_report_free(report);

  std::string bfile = kFixtures + "/b000040.txt";
  REQUIRE(arb_oeis_check(ctx, 1, 50, bfile.c_str(), &report) == ARB_OK);
  CHECK(arb_report_matches(report) == 50);
  arb_report_free(report);

  CHECK(arb_verify_appendix(ctx, "/nonexistent/x.csv", ARB_ENGINE_CORE, &report) == ARB_ERR_IO);
  CHECK(arb_oeis_fetch(ctx, "not-an-id", "/tmp/arborith_capi_fetch.txt") == ARB_ERR_DOMAIN);
}

TEST_CASE("null handling") {
  CHECK(arb_pair_of(nullptr, 5, nullptr, nullptr, nullptr) == ARB_ERR_INVALID);
  CHECK(arb_tree_nodes(nullptr) == 0);
  CHECK(arb_tree_equal(nullptr, nullptr) == 1);
  CHECK(arb_trace_size(nullptr) == 0);
  CHECK(arb_report_total(nullptr) == 0);
  CHECK(std::string(arb_context_error(nullptr)).empty());
  arb_tree_free(nullptr);
  arb_trace_free(nullptr);
  arb_report_free(nullptr);
  arb_string_free(nullptr);
  arb_context_free(nullptr);

  Ctx ctx;
  CHECK(arb_encode(ctx, 7, nullptr) == ARB_ERR_INVALID);
}
