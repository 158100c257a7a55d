#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpalab/invariants.hpp"
#include "lpalab/moves.hpp"

namespace lpa {

/// Case taxonomy for graphs with at most two vertices. The shapes IV(b),
/// V(c) and V(d) are normalized away by shift reduction and never appear as
/// output labels; the reduction is noted on the decision path.
struct CaseLabel {
  enum class Family {
    OneVertexField,
    OneVertexLaurent,
    OneVertexLeavitt,
    I,
    II,
    III,
    IVa,
    Va,
    Vb,
    Ve,
    Vf,
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
    A8,
    A9,
    A10,
    A11,
    A12,
    A13,
    A14,
  };
  Family family = Family::OneVertexField;
  int64_t leavitt_loops = 0;  // parameter of OneVertexLeavitt

  bool operator==(const CaseLabel&) const = default;
  std::string str() const;
};

struct ClassifyResult {
  CaseLabel label;
  InvariantBundle bundle;
  std::vector<std::string> decision_path;
};

ClassifyResult classify(const MultiGraph& g);  // TooManyVertices > 2

struct CompareConfig {
  int64_t group_budget = 128;  // exponent bound for the pointed-group search
  OrbitConfig orbit{};
};

struct InvariantDiff {
  std::string name, left, right;
};

struct IsoWitness {
  enum class Kind { EqualCanonical, TheoremClause, ShiftPath };
  Kind kind = Kind::EqualCanonical;
  std::string clause;  // for TheoremClause
  std::optional<WitnessPath> path;
};

struct IsoDecision {
  enum class Verdict { Isomorphic, NotIsomorphic, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<IsoWitness> witness;    // for Isomorphic
  std::optional<InvariantDiff> diff;    // for NotIsomorphic
  std::string unknown_tag;              // for Unknown
  std::string summary;
};

/// Three-valued isomorphism decision for the path algebras of e and f.
/// Open-question strata surface as Unknown, never as a guess.
IsoDecision compare(const MultiGraph& e, const MultiGraph& f, const CompareConfig& cfg = {});

enum class TableFamily { NonIBN, IBN, OneVertex };

struct TableRow {
  std::optional<TwoVertexSignature> signature;  // absent for one-vertex rows
  int64_t one_vertex_loops = 0;
  CaseLabel label;
  InvariantBundle bundle;
};

/// Every signature of the family with all parameters <= max_param, classified
/// and sorted canonically. max_param <= 12.
std::vector<TableRow> enumerate_table(int64_t max_param, TableFamily family);

}  // namespace lpa
