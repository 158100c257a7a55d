#include <doctest.h>

#include <map>

#include "lpalab/classify.hpp"
#include "test_util.hpp"

using lpa::CaseLabel;
using lpa::CompareConfig;
using lpa::IsoDecision;
using lpa::MultiGraph;
using Family = lpa::CaseLabel::Family;
using lpatest::sig;

TEST_CASE("classify: one-vertex graphs") {
  CHECK(lpa::classify(lpatest::loops(0)).label.family == Family::OneVertexField);
  CHECK(lpa::classify(lpatest::loops(1)).label.family == Family::OneVertexLaurent);
  auto c = lpa::classify(lpatest::loops(4));
  CHECK(c.label.family == Family::OneVertexLeavitt);
  CHECK(c.label.leavitt_loops == 4);
  CHECK_THROWS_AS(lpa::classify(MultiGraph({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})), lpa::Error);
}

TEST_CASE("classify: pinned two-vertex labels") {
  CHECK(lpa::classify(sig(0, 0, 3, 2)).label.family == Family::I);
  CHECK(lpa::classify(sig(1, 0, 3, 2)).label.family == Family::II);
  CHECK(lpa::classify(sig(3, 2, 5, 4)).label.family == Family::III);
  CHECK(lpa::classify(sig(3, 2, 1, 1)).label.family == Family::IVa);
  CHECK(lpa::classify(sig(2, 0, 3, 0)).label.family == Family::Va);
  CHECK(lpa::classify(sig(4, 2, 3, 0)).label.family == Family::Vb);
  CHECK(lpa::classify(sig(0, 2, 3, 0)).label.family == Family::Ve);
  // the overlap stratum: all parameters positive, no diagonal pair
  CHECK(lpa::classify(sig(2, 2, 1, 1)).label.family == Family::Vf);
  CHECK(lpa::classify(sig(5, 2, 2, 2)).label.family == Family::A14);
  CHECK(lpa::classify(sig(0, 1, 0, 1)).label.family == Family::A12);
  CHECK(lpa::classify(sig(1, 0, 0, 2)).label.family == Family::A9);
}

TEST_CASE("classify: shift-normalized shapes carry a reduction note") {
  auto ivb = lpa::classify(sig(3, 2, 4, 0));  // diagonal pair + comet: IV(b) raw
  CHECK(ivb.label.family == Family::Vb);
  bool noted = false;
  for (const auto& s : ivb.decision_path)
    if (s.find("reduced-by-shift") != std::string::npos) noted = true;
  CHECK(noted);

  auto vc = lpa::classify(sig(0, 2, 0, 3));
  CHECK(vc.label.family == Family::Ve);
  auto vd = lpa::classify(sig(3, 1, 0, 3));
  CHECK(vd.label.family == Family::Ve);

  SUBCASE("the normalized comet descriptor matches the reduction") {
    using D = lpa::AlgebraDescriptor;
    REQUIRE(vc.bundle.descriptors.has_value());
    CHECK(vc.bundle.descriptors->ideal_pec == D::mat(3 + 1, D::leavitt(6)));
    REQUIRE(vd.bundle.descriptors.has_value());
    // t_edge = 3, loops = 3 + 1*3
    CHECK(vd.bundle.descriptors->ideal_pec == D::mat(3 + 1, D::leavitt(6)));
  }
}

TEST_CASE("every small two-vertex graph gets exactly one label with the right flag bits") {
  struct Bits {
    bool pl, pc, dec, pis;
    int64_t betti;
  };
  std::map<Family, Bits> expected_nonibn{
      {Family::I, {true, false, false, false, 1}},   {Family::II, {false, true, false, false, 1}},
      {Family::Va, {false, false, true, false, 0}},  {Family::III, {false, false, false, true, 1}},
      {Family::IVa, {false, false, false, true, 0}}, {Family::Ve, {false, false, false, true, 0}},
      {Family::Vf, {false, false, false, true, 0}},  {Family::Vb, {false, false, false, false, 0}},
  };
  for (int64_t l1 = 0; l1 <= 5; ++l1)
    for (int64_t t1 = 0; t1 <= 5; ++t1)
      for (int64_t l2 = 0; l2 <= 5; ++l2)
        for (int64_t t2 = 0; t2 <= 5; ++t2) {
          auto c = lpa::classify(sig(l1, t1, l2, t2));
          INFO("at ", l1, ",", t1, ";", l2, ",", t2);
          if (!c.bundle.type.ibn) {
            auto it = expected_nonibn.find(c.label.family);
            REQUIRE(it != expected_nonibn.end());
            CHECK(c.bundle.p_l.empty() != it->second.pl);
            CHECK(c.bundle.p_c.empty() != it->second.pc);
            CHECK(c.bundle.flags.decomposable == it->second.dec);
            CHECK(c.bundle.flags.pis == it->second.pis);
            CHECK(c.bundle.k0.group.free_rank == it->second.betti);
          } else {
            CHECK(c.label.str()[0] == 'A');
            bool dec_family = c.label.family == Family::A1 || c.label.family == Family::A2 ||
                              c.label.family == Family::A3 || c.label.family == Family::A7 ||
                              c.label.family == Family::A8;
            CHECK(c.bundle.flags.decomposable == dec_family);
            CHECK(c.bundle.flags.pis == (c.label.family == Family::A14));
          }
        }
}

TEST_CASE("compare: pinned decisions") {
  CompareConfig cfg;
  SUBCASE("equal canonical graphs") {
    auto d = lpa::compare(sig(3, 0, 0, 2), sig(0, 2, 3, 0), cfg);
    CHECK(d.verdict == IsoDecision::Verdict::Isomorphic);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->kind == lpa::IsoWitness::Kind::EqualCanonical);
  }
  SUBCASE("the overlapping torsion trio is pairwise isomorphic") {
    MultiGraph e = sig(2, 2, 1, 1), f = sig(0, 2, 3, 0), g = sig(3, 2, 1, 1);
    for (const auto& [a, b] : {std::pair{e, f}, {e, g}, {f, g}}) {
      auto d = lpa::compare(a, b, cfg);
      CHECK(d.verdict == IsoDecision::Verdict::Isomorphic);
      REQUIRE(d.witness.has_value());
      if (d.witness->path) CHECK(lpa::replay_witness(*d.witness->path));
    }
  }
  SUBCASE("open-question comet pairs stay open") {
    auto d1 = lpa::compare(sig(4, 0, 2, 2), sig(4, 0, 2, 3), cfg);
    CHECK(d1.verdict == IsoDecision::Verdict::Unknown);
    CHECK(d1.unknown_tag == "V(b)-gcd-match");
    auto d2 = lpa::compare(sig(5, 0, 2, 2), sig(5, 0, 2, 4), cfg);
    CHECK(d2.verdict == IsoDecision::Verdict::Unknown);
    CHECK(d2.unknown_tag == "V(b)-gcd-match");
  }
  SUBCASE("types distinguish the sink families") {
    auto d = lpa::compare(sig(0, 0, 3, 2), sig(0, 0, 4, 3), cfg);
    CHECK(d.verdict == IsoDecision::Verdict::NotIsomorphic);
    REQUIRE(d.diff.has_value());
    CHECK(d.diff->name == "type");
  }
  SUBCASE("a shift-connected non-simple pair is found by the orbit search") {
    auto d = lpa::compare(sig(3, 2, 4, 0), sig(3, 5, 4, 0), cfg);
    CHECK(d.verdict == IsoDecision::Verdict::Isomorphic);
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->kind == lpa::IsoWitness::Kind::ShiftPath);
  }
  SUBCASE("matrix presentations of the same Laurent algebra") {
    auto d = lpa::compare(sig(1, 0, 0, 1), sig(0, 1, 0, 1), cfg);
    CHECK(d.verdict == IsoDecision::Verdict::Isomorphic);
  }
  SUBCASE("determinant sign mismatch stays open") {
    // both algebras are M_k of the same Leavitt algebra pattern with
    // determinants of opposite sign
    auto d = lpa::compare(lpatest::loops(2), sig(0, 1, 2, 0), cfg);
    CHECK(d.verdict == IsoDecision::Verdict::Unknown);
    CHECK(d.unknown_tag == "det-sign-only");
  }
  SUBCASE("open tags for the IBN families with a matching gcd") {
    auto a11 = lpa::compare(sig(1, 0, 5, 1), sig(1, 0, 5, 3), cfg);
    CHECK(a11.verdict == IsoDecision::Verdict::Unknown);
    CHECK(a11.unknown_tag == "A6/A11/A13-gcd-match");
    auto a13 = lpa::compare(sig(1, 1, 5, 0), sig(1, 3, 5, 0), cfg);
    CHECK(a13.verdict == IsoDecision::Verdict::Unknown);
    CHECK(a13.unknown_tag == "A6/A11/A13-gcd-match");
  }
  SUBCASE("unequal gcd data separates the same families") {
    auto a13 = lpa::compare(sig(1, 2, 5, 0), sig(1, 3, 5, 0), cfg);
    CHECK(a13.verdict == IsoDecision::Verdict::NotIsomorphic);  // K0 Z x Z_2 vs Z x Z
    auto third = lpa::compare(sig(2, 1, 2, 1), sig(3, 2, 3, 2), cfg);
    CHECK(third.verdict == IsoDecision::Verdict::NotIsomorphic);  // gcd 1 vs 2
  }
  SUBCASE("three-vertex graphs are decided by invariants or orbit witnesses") {
    MultiGraph chain({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    MultiGraph cycle({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
    auto d = lpa::compare(chain, cycle, cfg);
    CHECK(d.verdict == IsoDecision::Verdict::NotIsomorphic);
    auto shifted = lpa::compare(chain, lpa::shift(chain, {0, 1}), cfg);
    CHECK(shifted.verdict == IsoDecision::Verdict::Isomorphic);
    MultiGraph relabeled({{0, 0, 1}, {0, 0, 0}, {0, 1, 0}});
    auto canon = lpa::compare(chain, relabeled, cfg);
    CHECK(canon.verdict == IsoDecision::Verdict::Isomorphic);
    REQUIRE(canon.witness.has_value());
    CHECK(canon.witness->kind == lpa::IsoWitness::Kind::EqualCanonical);
  }
}

TEST_CASE("compare: symmetry, reflexivity, and soundness of Isomorphic") {
  CompareConfig cfg;
  auto gen = lpatest::rng();
  std::uniform_int_distribution<int64_t> entry(0, 3);
  for (int iter = 0; iter < 200; ++iter) {
    MultiGraph a = sig(entry(gen), entry(gen), entry(gen), entry(gen));
    MultiGraph b = sig(entry(gen), entry(gen), entry(gen), entry(gen));
    auto dab = lpa::compare(a, b, cfg);
    auto dba = lpa::compare(b, a, cfg);
    CHECK(dab.verdict == dba.verdict);
    CHECK(lpa::compare(a, a, cfg).verdict == IsoDecision::Verdict::Isomorphic);
    if (dab.verdict == IsoDecision::Verdict::Isomorphic) {
      // all computed invariants must agree
      auto ia = lpa::invariant_bundle(a), ib = lpa::invariant_bundle(b);
      CHECK(ia.type == ib.type);
      CHECK(ia.k0.group == ib.k0.group);
      CHECK(ia.k0.unit_order == ib.k0.unit_order);
      CHECK(ia.flags.decomposable == ib.flags.decomposable);
      CHECK(ia.flags.pis == ib.flags.pis);
      int64_t da = ia.k0.delta_e < 0 ? -ia.k0.delta_e : ia.k0.delta_e;
      int64_t db = ib.k0.delta_e < 0 ? -ib.k0.delta_e : ib.k0.delta_e;
      CHECK(da == db);
    }
  }
}

TEST_CASE("compare on shifted graphs returns Isomorphic") {
  CompareConfig cfg;
  cfg.orbit.max_total_multiplicity = 256;
  auto gen = lpatest::rng();
  int done = 0;
  while (done < 500) {
    MultiGraph g = lpatest::random_graph(gen, 3, 3);
    MultiGraph h = g;
    std::uniform_int_distribution<int> nshift(1, 3);
    int want = nshift(gen);
    int applied = 0;
    for (int k = 0; k < want; ++k) {
      std::vector<lpa::ShiftSpec> valid;
      for (int u = 0; u < h.vertex_count(); ++u)
        for (int v = 0; v < h.vertex_count(); ++v)
          if (u != v && h.adjacency(u, v) >= 1 && !h.is_sink(v)) valid.push_back({u, v});
      if (valid.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, valid.size() - 1);
      h = lpa::shift(h, valid[pick(gen)]);
      ++applied;
    }
    if (applied == 0) continue;
    ++done;
    auto d = lpa::compare(g, h, cfg);
    INFO("graph pair");
    CHECK(d.verdict == IsoDecision::Verdict::Isomorphic);
  }
}

TEST_CASE("enumerate_table") {
  SUBCASE("non-IBN table contains the first sink row") {
    auto rows = lpa::enumerate_table(2, lpa::TableFamily::NonIBN);
    bool found = false;
    for (const auto& r : rows) {
      REQUIRE(r.signature.has_value());
      if (r.signature->str() == "0,0;3,2") {
        found = true;
        CHECK(r.label.family == Family::I);
        CHECK(r.bundle.type == lpa::TypeResult{false, 3});
        CHECK(r.bundle.k0.group == lpa::FgAbelianGroup{{2}, 1});
      }
      CHECK_FALSE(r.bundle.type.ibn);
    }
    // 3,2 has a parameter above max_param=2, so it only appears when allowed
    CHECK(!found);
    auto rows3 = lpa::enumerate_table(3, lpa::TableFamily::NonIBN);
    for (const auto& r : rows3)
      if (r.signature->str() == "0,0;3,2") {
        found = true;
        CHECK(r.label.family == Family::I);
        CHECK(r.bundle.type == lpa::TypeResult{false, 3});
        CHECK(r.bundle.k0.group == lpa::FgAbelianGroup{{2}, 1});
      }
    CHECK(found);
  }
  SUBCASE("one-vertex table") {
    auto rows = lpa::enumerate_table(3, lpa::TableFamily::OneVertex);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].label.family == Family::OneVertexField);
    CHECK(rows[1].label.family == Family::OneVertexLaurent);
    CHECK(rows[2].label.family == Family::OneVertexLeavitt);
    CHECK(rows[2].label.leavitt_loops == 2);
    CHECK(rows[3].label.leavitt_loops == 3);
  }
  SUBCASE("IBN table: the A9 row has free K0") {
    auto rows = lpa::enumerate_table(2, lpa::TableFamily::IBN);
    bool found = false;
    for (const auto& r : rows) {
      CHECK(r.bundle.type.ibn);
      if (r.signature->str() == "0,2;1,0") {
        found = true;
        CHECK(r.label.family == Family::A9);
        CHECK(r.bundle.k0.group == lpa::FgAbelianGroup{{}, 1});
      }
    }
    CHECK(found);
  }
  SUBCASE("bounds") { CHECK_THROWS_AS(lpa::enumerate_table(13, lpa::TableFamily::IBN), lpa::Error); }
}
