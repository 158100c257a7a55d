#include "lpalab/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpa {

std::string CaseLabel::str() const {
  switch (family) {
    case Family::OneVertexField: return "K";
    case Family::OneVertexLaurent: return "K[x,x^-1]";
    case Family::OneVertexLeavitt: return "L(1," + std::to_string(leavitt_loops) + ")";
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    case Family::IVa: return "IV(a)";
    case Family::Va: return "V(a)";
    case Family::Vb: return "V(b)";
    case Family::Ve: return "V(e)";
    case Family::Vf: return "V(f)";
    case Family::A1: return "A1";
    case Family::A2: return "A2";
    case Family::A3: return "A3";
    case Family::A4: return "A4";
    case Family::A5: return "A5";
    case Family::A6: return "A6";
    case Family::A7: return "A7";
    case Family::A8: return "A8";
    case Family::A9: return "A9";
    case Family::A10: return "A10";
    case Family::A11: return "A11";
    case Family::A12: return "A12";
    case Family::A13: return "A13";
    case Family::A14: return "A14";
  }
  return "?";
}

namespace {

using D = AlgebraDescriptor;
using Family = CaseLabel::Family;

InvariantBundle compute_core(const MultiGraph& g) {
  InvariantBundle b;
  b.type = ibn_and_type(g);
  b.k0 = k0_with_unit(g);
  b.p_l = line_points(g);
  b.p_c = no_exit_cycle_vertices(g);
  b.p_ec = extreme_cycle_vertices(g);
  b.flags = graph_flags(g);
  return b;
}

/// An orientation of a two-vertex signature: (l1, t1) at the chosen first
/// vertex, (l2, t2) at the other.
struct Shape {
  int64_t l1, t1, l2, t2;
};

template <typename Pred>
std::optional<Shape> match_shape(const TwoVertexSignature& s, Pred pred) {
  Shape a{s.first.first, s.first.second, s.second.first, s.second.second};
  if (pred(a)) return a;
  Shape b{s.second.first, s.second.second, s.first.first, s.first.second};
  if (pred(b)) return b;
  return std::nullopt;
}

int64_t delta_of(const Shape& s) {
  return checked_sub(checked_mul(s.l1 - 1, s.l2 - 1), checked_mul(s.t1, s.t2));
}

struct Labeled {
  CaseLabel label;
  std::vector<std::string> path;
  CaseDescriptors desc;
};

[[noreturn]] void impossible(const char* what) {
  throw std::logic_error(std::string("classification invariant violated: ") + what);
}

Labeled label_one_vertex(int64_t loops) {
  Labeled out;
  out.path = {"|E0|=1"};
  if (loops == 0) {
    out.label = {Family::OneVertexField, 0};
    out.path.push_back("no loop");
    out.desc.ideal_pl = D::field();
  } else if (loops == 1) {
    out.label = {Family::OneVertexLaurent, 0};
    out.path.push_back("one loop");
    out.desc.ideal_pc = D::laurent();
  } else {
    out.label = {Family::OneVertexLeavitt, loops};
    out.path.push_back("n loops, n>=2");
    out.desc.ideal_pec = D::leavitt(loops);
  }
  return out;
}

Labeled label_ibn(const TwoVertexSignature& sig) {
  Labeled out;
  auto is = [](int64_t l, int64_t t) {
    return [l, t](const Shape& s) { return s.l1 == l && s.t1 == t; };
  };
  auto both = [&](int64_t l, int64_t t) {
    return [l, t](const Shape& s) { return s.l1 == l && s.t1 == t && s.l2 == l && s.t2 == t; };
  };

  if (match_shape(sig, both(0, 0))) {
    out.label.family = Family::A1;
    out.desc.ideal_pl = D::product(D::field(), D::field());
  } else if (auto s = match_shape(sig, [&](const Shape& x) { return is(0, 0)(x) && x.l2 == 1 && x.t2 == 0; })) {
    out.label.family = Family::A2;
    out.desc.ideal_pl = D::field();
    out.desc.ideal_pc = D::laurent();
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(0, 0)(x) && x.l2 >= 2 && x.t2 == 0; }))) {
    out.label.family = Family::A3;
    out.desc.ideal_pl = D::field();
    out.desc.ideal_pec = D::leavitt(s->l2);
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(0, 0)(x) && x.l2 == 0 && x.t2 >= 1; }))) {
    out.label.family = Family::A4;
    out.desc.ideal_pl = D::mat(s->t2 + 1, D::field());
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(0, 0)(x) && x.l2 == 1 && x.t2 >= 1; }))) {
    out.label.family = Family::A5;
    out.desc.ideal_pl = D::mat_inf(D::field());
    out.desc.quotient = D::laurent();
  } else if ((s = match_shape(sig, [&](const Shape& x) {
                return is(0, 0)(x) && x.l2 >= 2 && x.t2 >= 1 && x.l2 - x.t2 != 1;
              }))) {
    out.label.family = Family::A6;
    out.desc.ideal_pl = D::mat_inf(D::field());
    out.desc.quotient = D::leavitt(s->l2);
  } else if (match_shape(sig, both(1, 0))) {
    out.label.family = Family::A7;
    out.desc.ideal_pc = D::product(D::laurent(), D::laurent());
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(1, 0)(x) && x.l2 >= 2 && x.t2 == 0; }))) {
    out.label.family = Family::A8;
    out.desc.ideal_pc = D::laurent();
    out.desc.ideal_pec = D::leavitt(s->l2);
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(1, 0)(x) && x.l2 == 0 && x.t2 >= 1; }))) {
    out.label.family = Family::A9;
    out.desc.ideal_pc = D::mat(s->t2 + 1, D::laurent());
  } else if ((s = match_shape(sig, [&](const Shape& x) { return is(1, 0)(x) && x.l2 == 1 && x.t2 >= 1; }))) {
    out.label.family = Family::A10;
    out.desc.ideal_pc = D::mat_inf(D::laurent());
    out.desc.quotient = D::laurent();
  } else if ((s = match_shape(sig, [&](const Shape& x) {
                return is(1, 0)(x) && x.l2 >= 2 && x.t2 >= 1 && x.l2 - x.t2 != 1;
              }))) {
    out.label.family = Family::A11;
    out.desc.ideal_pc = D::mat_inf(D::laurent());
    out.desc.quotient = D::leavitt(s->l2);
  } else if (match_shape(sig, both(0, 1))) {
    out.label.family = Family::A12;
    out.desc.ideal_pc = D::mat(2, D::laurent());
  } else if ((s = match_shape(sig, [&](const Shape& x) {
                return x.l1 == 1 && x.t1 >= 1 && x.l2 >= 2 && x.t2 == 0;
              }))) {
    out.label.family = Family::A13;
    out.desc.ideal_pec = D::mat_inf(D::leavitt(s->l2));
    out.desc.quotient = D::laurent();
  } else {
    auto a14 = match_shape(sig, [&](const Shape& x) {
      return x.l1 >= 1 && x.t1 >= 1 && x.l2 >= 1 && x.t2 >= 1 && x.l1 - x.t1 != 1 && x.l2 - x.t2 != 1 &&
             delta_of(x) == 0;
    });
    if (!a14) impossible("IBN two-vertex graph outside the A1..A14 shapes");
    out.label.family = Family::A14;
    out.desc.ideal_pec = D::full();
  }
  out.path.push_back("shape " + out.label.str());
  return out;
}

Labeled label_non_ibn(const TwoVertexSignature& sig, const InvariantBundle& core) {
  Labeled out;
  const int64_t betti = core.k0.group.free_rank;

  if (core.flags.soc_nonzero) {
    out.path.push_back("Soc!=0");
    auto s = match_shape(sig, [](const Shape& x) {
      return x.l1 == 0 && x.t1 == 0 && x.t2 >= 1 && x.l2 == x.t2 + 1;
    });
    if (!s) impossible("nonzero socle outside case I");
    out.label.family = Family::I;
    out.desc.ideal_pl = D::mat_inf(D::field());
    out.desc.quotient = D::leavitt(s->t2 + 1);
    return out;
  }
  out.path.push_back("Soc=0");

  if (!core.p_c.empty()) {
    out.path.push_back("P_c!=0");
    auto s = match_shape(sig, [](const Shape& x) {
      return x.l1 == 1 && x.t1 == 0 && x.t2 >= 1 && x.l2 == x.t2 + 1;
    });
    if (!s) impossible("no-exit cycle outside case II");
    out.label.family = Family::II;
    out.desc.ideal_pc = D::mat_inf(D::laurent());
    out.desc.quotient = D::leavitt(s->t2 + 1);
    return out;
  }
  out.path.push_back("P_c=0");

  if (core.flags.decomposable) {
    out.path.push_back("decomposable");
    auto s = match_shape(sig, [](const Shape& x) {
      return x.t1 == 0 && x.t2 == 0 && x.l1 >= 2 && x.l2 >= 2;
    });
    if (!s) impossible("decomposable outside case V(a)");
    out.label.family = Family::Va;
    out.desc.ideal_pec = D::product(D::leavitt(s->l1), D::leavitt(s->l2));
    return out;
  }
  out.path.push_back("indecomposable");

  if (core.flags.pis) {
    out.path.push_back("PIS");
    if (betti == 1) {
      out.path.push_back("B(K0)=1");
      out.label.family = Family::III;
      out.desc.ideal_pec = D::full();
      return out;
    }
    out.path.push_back("B(K0)=0");
    if (auto s = match_shape(sig, [](const Shape& x) {
          return x.l1 == x.t1 + 1 && x.t1 >= 1 && x.t2 >= 1 && x.l2 - x.t2 != 1;
        })) {
      (void)s;
      out.label.family = Family::IVa;
      out.desc.ideal_pec = D::full();
    } else if ((s = match_shape(sig, [](const Shape& x) {
                  return x.l1 == 0 && x.t1 >= 1 && x.l2 >= 2 && x.t2 == 0;
                }))) {
      out.label.family = Family::Ve;
      out.desc.ideal_pec = D::mat(s->t1 + 1, D::leavitt(s->l2));
    } else if ((s = match_shape(sig, [](const Shape& x) {
                  return x.l1 >= 1 && x.t1 >= 1 && x.l2 >= 1 && x.t2 >= 1 && x.l1 - x.t1 != 1 &&
                         x.l2 - x.t2 != 1;
                }))) {
      out.label.family = Family::Vf;
      out.desc.ideal_pec = D::full();
    } else if ((s = match_shape(sig, [](const Shape& x) {
                  return x.l1 == 0 && x.l2 == 0 && x.t1 >= x.t2 && x.t2 >= 1 &&
                         checked_mul(x.t1, x.t2) >= 2;
                }))) {
      // t2-many shifts turn this into the comet with t1*t2 loops.
      out.path.push_back("reduced-by-shift V(c)->V(e)");
      out.label.family = Family::Ve;
      out.desc.ideal_pec = D::mat(s->t1 + 1, D::leavitt(checked_mul(s->t1, s->t2)));
    } else if ((s = match_shape(sig, [](const Shape& x) {
                  return x.l1 >= 1 && x.t1 >= 1 && x.l1 - x.t1 != 1 && x.l2 == 0 && x.t2 >= 1;
                }))) {
      out.path.push_back("reduced-by-shift V(d)->V(e)");
      out.label.family = Family::Ve;
      out.desc.ideal_pec = D::mat(s->t2 + 1, D::leavitt(checked_add(s->l1, checked_mul(s->t1, s->t2))));
    } else {
      impossible("non-IBN PIS torsion graph outside IV(a)/V(c)/V(d)/V(e)/V(f)");
    }
    return out;
  }
  out.path.push_back("non-PIS");

  if (auto s = match_shape(sig, [](const Shape& x) {
        return x.l1 >= 2 && x.t1 >= 1 && x.l1 - x.t1 != 1 && x.l2 >= 2 && x.t2 == 0;
      })) {
    out.label.family = Family::Vb;
    out.desc.ideal_pec = D::mat_inf(D::leavitt(s->l2));
    out.desc.quotient = D::leavitt(s->l1);
  } else if ((s = match_shape(sig, [](const Shape& x) {
                return x.l1 == x.t1 + 1 && x.t1 >= 1 && x.l2 >= 2 && x.t2 == 0;
              }))) {
    // One shift turns t1 edges into (l2-1)+t1 edges, landing in V(b).
    out.path.push_back("reduced-by-shift IV(b)->V(b)");
    out.label.family = Family::Vb;
    out.desc.ideal_pec = D::mat_inf(D::leavitt(s->l2));
    out.desc.quotient = D::leavitt(s->l1);
  } else {
    impossible("non-IBN non-PIS indecomposable graph outside IV(b)/V(b)");
  }
  return out;
}

Labeled label_graph(const MultiGraph& g, const InvariantBundle& core) {
  if (g.vertex_count() == 1) return label_one_vertex(g.adjacency(0, 0));
  auto sig = TwoVertexSignature::of(g);
  Labeled out;
  if (core.type.ibn) {
    out = label_ibn(sig);
    out.path.insert(out.path.begin(), {"|E0|=2", "IBN"});
  } else {
    Labeled nl = label_non_ibn(sig, core);
    out = std::move(nl);
    out.path.insert(out.path.begin(), {"|E0|=2", "non-IBN"});
    out.path.push_back("shape " + out.label.str());
  }
  return out;
}

}  // namespace

InvariantBundle invariant_bundle(const MultiGraph& g) {
  InvariantBundle b = compute_core(g);
  if (g.vertex_count() <= 2) b.descriptors = label_graph(g, b).desc;
  return b;
}

ClassifyResult classify(const MultiGraph& g) {
  if (g.vertex_count() > 2) raise(Errc::TooManyVertices, "classification covers at most two vertices");
  InvariantBundle b = compute_core(g);
  Labeled lab = label_graph(g, b);
  b.descriptors = lab.desc;
  return ClassifyResult{lab.label, std::move(b), std::move(lab.path)};
}

// ---------------------------------------------------------------------------
// compare

namespace {

std::string order_str(const std::optional<int64_t>& o) { return o ? std::to_string(*o) : "infinite"; }

std::string element_str(const GroupElement& e) {
  std::string s = "[";
  bool first = true;
  for (int64_t c : e.torsion_coords) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  for (int64_t c : e.free_coords) {
    if (!first) s += ",";
    s += std::to_string(c);
    first = false;
  }
  return s + "]";
}

std::string pattern_str(const InvariantBundle& b) {
  auto bit = [](const VertexSet& s) { return s.empty() ? "0" : "1"; };
  return std::string("(") + bit(b.p_l) + "," + bit(b.p_c) + "," + bit(b.p_ec) + ")";
}

std::optional<InvariantDiff> first_diff(const InvariantBundle& a, const InvariantBundle& b) {
  if (a.type.ibn != b.type.ibn) return InvariantDiff{"IBN", a.type.str(), b.type.str()};
  if (a.type != b.type) return InvariantDiff{"type", a.type.str(), b.type.str()};
  if (a.k0.group != b.k0.group) return InvariantDiff{"K0 group", a.k0.group.str(), b.k0.group.str()};
  if (a.k0.unit_order != b.k0.unit_order)
    return InvariantDiff{"order unit order", order_str(a.k0.unit_order), order_str(b.k0.unit_order)};
  if (pattern_str(a) != pattern_str(b))
    return InvariantDiff{"(P_l,P_c,P_ec) pattern", pattern_str(a), pattern_str(b)};
  if (a.flags.decomposable != b.flags.decomposable)
    return InvariantDiff{"decomposable", a.flags.decomposable ? "yes" : "no",
                         b.flags.decomposable ? "yes" : "no"};
  if (a.flags.pis != b.flags.pis)
    return InvariantDiff{"purely infinite simple", a.flags.pis ? "yes" : "no", b.flags.pis ? "yes" : "no"};
  // Ideal and quotient descriptors distinguish non-simple algebras; inside the
  // purely infinite simple stratum the taxonomy overlaps, so they are not
  // used as invariants there.
  if (a.descriptors && b.descriptors && !a.flags.pis && !b.flags.pis) {
    const auto& da = *a.descriptors;
    const auto& db = *b.descriptors;
    if (!(da.ideal_pl == db.ideal_pl)) return InvariantDiff{"I(P_l)", da.ideal_pl.str(), db.ideal_pl.str()};
    if (!(da.ideal_pc == db.ideal_pc)) return InvariantDiff{"I(P_c)", da.ideal_pc.str(), db.ideal_pc.str()};
    if (!(da.ideal_pec == db.ideal_pec))
      return InvariantDiff{"I(P_ec)", da.ideal_pec.str(), db.ideal_pec.str()};
    if (!(da.quotient == db.quotient)) return InvariantDiff{"quotient", da.quotient.str(), db.quotient.str()};
  }
  return std::nullopt;
}

IsoDecision isomorphic_equal() {
  IsoDecision d;
  d.verdict = IsoDecision::Verdict::Isomorphic;
  d.witness = IsoWitness{IsoWitness::Kind::EqualCanonical, "equal canonical graphs", std::nullopt};
  d.summary = "isomorphic: equal canonical graphs";
  return d;
}

IsoDecision isomorphic_clause(const std::string& clause) {
  IsoDecision d;
  d.verdict = IsoDecision::Verdict::Isomorphic;
  d.witness = IsoWitness{IsoWitness::Kind::TheoremClause, clause, std::nullopt};
  d.summary = "isomorphic: " + clause;
  return d;
}

IsoDecision isomorphic_path(WitnessPath w) {
  IsoDecision d;
  d.verdict = IsoDecision::Verdict::Isomorphic;
  d.summary = "isomorphic: shift-move witness with " + std::to_string(w.steps.size()) + " step(s)";
  d.witness = IsoWitness{IsoWitness::Kind::ShiftPath, "shift-move witness", std::move(w)};
  return d;
}

IsoDecision not_isomorphic(InvariantDiff diff) {
  IsoDecision d;
  d.verdict = IsoDecision::Verdict::NotIsomorphic;
  d.summary = "not isomorphic: " + diff.name + " differs (" + diff.left + " vs " + diff.right + ")";
  d.diff = std::move(diff);
  return d;
}

IsoDecision unknown(const std::string& tag, const std::string& why) {
  IsoDecision d;
  d.verdict = IsoDecision::Verdict::Unknown;
  d.unknown_tag = tag;
  d.summary = "unknown: " + why;
  return d;
}

}  // namespace

IsoDecision compare(const MultiGraph& e, const MultiGraph& f, const CompareConfig& cfg) {
  InvariantBundle be = invariant_bundle(e);
  InvariantBundle bf = invariant_bundle(f);

  // 1. Same graph up to relabeling.
  if (e.vertex_count() == f.vertex_count()) {
    bool equal = e.vertex_count() <= 8 ? canonical_form(e) == canonical_form(f) : e == f;
    if (equal) return isomorphic_equal();
  }

  // 2. A differing invariant settles the question.
  if (auto d = first_diff(be, bf)) return not_isomorphic(std::move(*d));

  const bool small = e.vertex_count() <= 2 && f.vertex_count() <= 2;

  // 3. Purely infinite simple: pointed K0 plus determinant.
  if (small && be.flags.pis && bf.flags.pis) {
    PointedIso pi = pointed_isomorphic(be.k0.group, be.k0.order_unit, bf.k0.group, bf.k0.order_unit,
                                       cfg.group_budget);
    if (pi == PointedIso::No)
      return not_isomorphic(InvariantDiff{"K0 order unit class", element_str(be.k0.order_unit),
                                          element_str(bf.k0.order_unit)});
    if (pi == PointedIso::Exhausted) return unknown("search-exhausted", "group search exhausted");
    if (be.k0.delta_e == bf.k0.delta_e)
      return isomorphic_clause("franks triple matches (pointed K0 and determinant " +
                               std::to_string(be.k0.delta_e) + ")");
    if (be.k0.delta_e == -bf.k0.delta_e)
      return unknown("det-sign-only", "franks triples agree only up to the determinant sign (" +
                                          std::to_string(be.k0.delta_e) + " vs " +
                                          std::to_string(bf.k0.delta_e) + ")");
    return not_isomorphic(InvariantDiff{"determinant magnitude", std::to_string(be.k0.delta_e),
                                        std::to_string(bf.k0.delta_e)});
  }

  std::optional<CaseLabel> le, lf;
  if (small) {
    le = classify(e).label;
    lf = classify(f).label;
  }

  // 4. Parameter-determined families.
  if (small && le == lf) {
    switch (le->family) {
      case Family::I:
      case Family::II:
      case Family::OneVertexField:
      case Family::OneVertexLaurent:
      case Family::OneVertexLeavitt:
        return isomorphic_clause("type determines the class in case " + le->str());
      case Family::Va:
        return isomorphic_clause("ideal type multiset determines the class in case V(a)");
      default: break;
    }
  }

  // 5. Bounded orbit search; anything left undecided is reported honestly.
  if (e.vertex_count() == f.vertex_count() && e.vertex_count() <= 8) {
    if (auto w = orbit_search(e, f, cfg.orbit); w && replay_witness(*w))
      return isomorphic_path(std::move(*w));
  }
  if (small && le == lf) {
    if (le->family == Family::Vb)
      return unknown("V(b)-gcd-match", "open question stratum: equal d and gcd invariants in V(b)");
    if (le->family == Family::A6 || le->family == Family::A11 || le->family == Family::A13)
      return unknown("A6/A11/A13-gcd-match",
                     "open question stratum: equal d and gcd invariants in " + le->str());
  }
  return unknown("search-exhausted", "all computed invariants agree; no witness within the budget");
}

// ---------------------------------------------------------------------------
// enumerate_table

std::vector<TableRow> enumerate_table(int64_t max_param, TableFamily family) {
  if (max_param < 1 || max_param > 12) raise(Errc::TooLarge, "enumeration bounded by max_param in [1,12]");
  std::vector<TableRow> rows;
  if (family == TableFamily::OneVertex) {
    for (int64_t n = 0; n <= max_param; ++n) {
      MultiGraph g(std::vector<std::vector<int64_t>>{{n}});
      ClassifyResult c = classify(g);
      rows.push_back(TableRow{std::nullopt, n, c.label, std::move(c.bundle)});
    }
    return rows;
  }
  for (int64_t l1 = 0; l1 <= max_param; ++l1)
    for (int64_t t1 = 0; t1 <= max_param; ++t1)
      for (int64_t l2 = 0; l2 <= max_param; ++l2)
        for (int64_t t2 = 0; t2 <= max_param; ++t2) {
          if (std::pair(l2, t2) < std::pair(l1, t1)) continue;  // canonical order once
          TwoVertexSignature sig({l1, t1}, {l2, t2});
          ClassifyResult c = classify(sig.to_graph());
          const bool want_ibn = family == TableFamily::IBN;
          if (c.bundle.type.ibn != want_ibn) continue;
          rows.push_back(TableRow{sig, 0, c.label, std::move(c.bundle)});
        }
  return rows;
}

}  // namespace lpa
