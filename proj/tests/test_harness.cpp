#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "relift/errors.hpp"
#include "relift/harness.hpp"
#include "relift/registry.hpp"

using namespace relift;

namespace {

bool same_report(const SuiteReport& a, const SuiteReport& b) {
  if (a.suite != b.suite || a.bound != b.bound || a.properties.size() != b.properties.size())
    return false;
  for (std::size_t i = 0; i < a.properties.size(); ++i) {
    const auto& p = a.properties[i];
    const auto& q = b.properties[i];
    if (p.name != q.name || p.verdict != q.verdict ||
        p.instances_checked != q.instances_checked ||
        p.instances_skipped != q.instances_skipped || p.detail != q.detail)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("suite names and dispatch") {
  const auto& names = theorem_suites();
  REQUIRE(names.size() == 7);
  CHECK(names[0] == "lattice");
  CHECK(names[1] == "cospan");
  CHECK(names[2] == "barr-minimal");
  CHECK(names[3] == "mtilde-minimal");
  CHECK(names[4] == "lj-classification");
  CHECK(names[5] == "distlaw-bijection");
  CHECK(names[6] == "transport");
  CHECK_THROWS_AS(run_suite("everything"), contract_error);
  CHECK_THROWS_AS(run_suite(""), contract_error);
}

TEST_CASE("lattice suite: meets stay lax and are glbs") {
  const SuiteReport rep = run_suite("lattice");
  CHECK(rep.bound == 2);
  CHECK(rep.all_pass());
  REQUIRE(rep.properties.size() == 2);

  const PropertyResult* core = rep.find("meet-satisfies-required-conditions");
  REQUIRE(core != nullptr);
  CHECK(core->verdict == Verdict::pass);
  CHECK(core->instances_checked == 1732026);

  const PropertyResult* glb = rep.find("meet-is-pointwise-glb");
  REQUIRE(glb != nullptr);
  CHECK(glb->verdict == Verdict::pass);
  CHECK(glb->instances_checked == 31369);

  CHECK(rep.find("no-such-property") == nullptr);
}

TEST_CASE("barr-minimal suite: span lifting below the registered family") {
  const SuiteReport rep = run_suite("barr-minimal");
  CHECK(rep.bound == 3);
  CHECK(rep.all_pass());
  const auto entries = lifting_registry("P");
  REQUIRE(rep.properties.size() == entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(rep.properties[i].name == "span-below-" + entries[i].lifting->name());
    CHECK(rep.properties[i].verdict == Verdict::pass);
    CHECK(rep.properties[i].instances_checked == 1193);
  }
}

TEST_CASE("barr-minimal suite is deterministic") {
  CHECK(same_report(run_suite("barr-minimal"), run_suite("barr-minimal")));
}

TEST_CASE("mtilde-minimal suite") {
  const SuiteReport rep = run_suite("mtilde-minimal");
  CHECK(rep.bound == 2);
  CHECK(rep.all_pass());
  REQUIRE(rep.properties.size() == 4);

  const PropertyResult* ax = rep.find("forth-back-core-and-converse");
  REQUIRE(ax != nullptr);
  CHECK(ax->verdict == Verdict::pass);
  CHECK(ax->instances_checked == 13638);

  const PropertyResult* wit = rep.find("witness-reconstruction");
  REQUIRE(wit != nullptr);
  CHECK(wit->verdict == Verdict::pass);
  CHECK(wit->instances_checked == 803);

  const PropertyResult* min = rep.find("pointwise-minimal-among-registered");
  REQUIRE(min != nullptr);
  CHECK(min->verdict == Verdict::pass);
  CHECK(min->instances_checked == 4940);

  const PropertyResult* tot = rep.find("totalization-factorization");
  REQUIRE(tot != nullptr);
  CHECK(tot->verdict == Verdict::pass);
  CHECK(tot->instances_checked == 4940);
}

TEST_CASE("lj-classification suite: the one red property is the source side") {
  const SuiteReport rep = run_suite("lj-classification");
  CHECK(rep.bound == 2);
  CHECK_FALSE(rep.all_pass());
  REQUIRE(rep.properties.size() == 8);

  const PropertyResult* distinct = rep.find("sixteen-pairwise-distinct");
  REQUIRE(distinct != nullptr);
  CHECK(distinct->verdict == Verdict::pass);
  CHECK(distinct->instances_checked == 120);

  const PropertyResult* order = rep.find("reindexing-matches-pointwise-order");
  REQUIRE(order != nullptr);
  CHECK(order->verdict == Verdict::pass);
  CHECK(order->instances_checked == 63232);

  const PropertyResult* min_all = rep.find("bottom-guard-least-among-registered");
  REQUIRE(min_all != nullptr);
  CHECK(min_all->verdict == Verdict::pass);
  CHECK(min_all->instances_checked == 4199);
  CHECK(min_all->detail.find("informational") != std::string::npos);
  CHECK(min_all->detail.find("barr") != std::string::npos);

  const PropertyResult* min_sym = rep.find("bottom-guard-least-among-symmetric");
  REQUIRE(min_sym != nullptr);
  CHECK(min_sym->verdict == Verdict::pass);
  CHECK(min_sym->instances_checked == 741);
  CHECK(min_sym->detail.find("top, LJ:0, LJ:15") != std::string::npos);

  const PropertyResult* table = rep.find("constant-map-preimage-table");
  REQUIRE(table != nullptr);
  CHECK(table->verdict == Verdict::pass);
  CHECK(table->instances_checked == 60);
  CHECK(table->detail.find("empty set in U") != std::string::npos);

  const PropertyResult* zig = rep.find("constant-zigzag-identities");
  REQUIRE(zig != nullptr);
  CHECK(zig->verdict == Verdict::pass);
  CHECK(zig->instances_checked == 30);

  const PropertyResult* target = rep.find("two-pair-exchange-target-side");
  REQUIRE(target != nullptr);
  CHECK(target->verdict == Verdict::pass);
  CHECK(target->instances_checked == 2077442);

  const PropertyResult* source = rep.find("two-pair-exchange-source-side");
  REQUIRE(source != nullptr);
  CHECK(source->verdict == Verdict::fail);
  CHECK(source->instances_checked == 2077442);
  CHECK(source->detail.find("rho=") != std::string::npos);
  CHECK(source->detail.find("do not satisfy every formula") != std::string::npos);
}

TEST_CASE("distlaw-bijection suite") {
  const SuiteReport rep = run_suite("distlaw-bijection");
  CHECK(rep.bound == 2);
  CHECK(rep.all_pass());
  REQUIRE(rep.properties.size() == 4);

  const PropertyResult* lift_rt = rep.find("lifting-round-trip");
  REQUIRE(lift_rt != nullptr);
  CHECK(lift_rt->verdict == Verdict::pass);
  CHECK(lift_rt->instances_checked == 7069);

  const PropertyResult* law_rt = rep.find("law-round-trip");
  REQUIRE(law_rt != nullptr);
  CHECK(law_rt->verdict == Verdict::pass);
  CHECK(law_rt->instances_checked == 253);

  const PropertyResult* diag = rep.find("diagonal-matches-extensionality");
  REQUIRE(diag != nullptr);
  CHECK(diag->verdict == Verdict::pass);
  CHECK(diag->instances_checked == 43);
  CHECK(diag->instances_skipped == 0);

  const PropertyResult* conv = rep.find("converse-matches-symmetry");
  REQUIRE(conv != nullptr);
  CHECK(conv->verdict == Verdict::pass);
  CHECK(conv->instances_checked == 43);
}

TEST_CASE("transport suite") {
  const SuiteReport rep = run_suite("transport");
  CHECK(rep.bound == 2);
  CHECK(rep.all_pass());
  REQUIRE(rep.properties.size() == 6);

  CHECK(rep.find("inclusion-components-injective")->instances_checked == 7);
  CHECK(rep.find("transported-guards-satisfy-core")->instances_checked == 218208);
  CHECK(rep.find("preserves-binary-meets")->instances_checked == 33592);
  CHECK(rep.find("preserves-twiddle")->instances_checked == 3952);
  CHECK(rep.find("preserves-symmetry")->instances_checked == 3);
  CHECK(rep.find("preserves-diagonal-preservation")->instances_checked == 119);
  for (const auto& p : rep.properties) CHECK(p.verdict == Verdict::pass);
}

TEST_CASE("cospan suite: informational span entry is gated out") {
  const SuiteReport rep = run_suite("cospan");
  CHECK(rep.bound == 2);
  CHECK(rep.all_pass());
  REQUIRE(rep.properties.size() == 49);

  const PropertyResult* pbarr = rep.find("P:barr");
  REQUIRE(pbarr != nullptr);
  CHECK(pbarr->verdict == Verdict::pass);
  CHECK(pbarr->instances_checked == 2907299);

  const PropertyResult* nbarr = rep.find("N:barr");
  REQUIRE(nbarr != nullptr);
  CHECK(nbarr->verdict == Verdict::skipped);
  CHECK(nbarr->instances_checked == 0);
  CHECK(nbarr->detail.find("required conditions fail") != std::string::npos);

  const PropertyResult* mt = rep.find("M:mtilde");
  REQUIRE(mt != nullptr);
  CHECK(mt->verdict == Verdict::pass);
  CHECK(mt->instances_checked == 62599);

  const PropertyResult* idt = rep.find("Id:transport(singleton,em)");
  REQUIRE(idt != nullptr);
  CHECK(idt->verdict == Verdict::pass);

  for (const auto& p : rep.properties)
    if (p.name != "N:barr") CHECK(p.verdict == Verdict::pass);
}

TEST_CASE("run_all_suites covers every suite in order at the requested bound") {
  const auto reports = run_all_suites(1);
  REQUIRE(reports.size() == theorem_suites().size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].suite == theorem_suites()[i]);
    CHECK(reports[i].bound == 1);
    CHECK_FALSE(reports[i].properties.empty());
  }
  // The source side of the exchange sweep is the only failure even at bound 1.
  for (const auto& rep : reports)
    for (const auto& p : rep.properties)
      if (p.verdict == Verdict::fail) CHECK(p.name == "two-pair-exchange-source-side");
}
