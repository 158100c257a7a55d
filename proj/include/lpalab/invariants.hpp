#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lpalab/abelian.hpp"
#include "lpalab/descriptor.hpp"
#include "lpalab/graph.hpp"
#include "lpalab/int_matrix.hpp"

namespace lpa {

/// IBN verdict; a non-IBN algebra has type (1, type_n) with type_n >= 2.
struct TypeResult {
  bool ibn = true;
  std::optional<int64_t> type_n;
  bool operator==(const TypeResult&) const = default;
  std::string str() const;
};

struct K0Data {
  FgAbelianGroup group;
  GroupElement order_unit;
  std::optional<int64_t> unit_order;  // nullopt = infinite
  int64_t d_e = 0;
  int64_t delta_e = 0;
};

struct FranksTriple {
  FgAbelianGroup group;
  GroupElement unit;
  int64_t det = 0;
};

struct Flags {
  bool soc_nonzero = false;
  bool decomposable = false;
  bool simple = false;
  bool pis = false;
  bool condition_l = false;
  bool operator==(const Flags&) const = default;
};

struct CaseDescriptors {
  AlgebraDescriptor ideal_pl = AlgebraDescriptor::zero();
  AlgebraDescriptor ideal_pc = AlgebraDescriptor::zero();
  AlgebraDescriptor ideal_pec = AlgebraDescriptor::zero();
  AlgebraDescriptor quotient = AlgebraDescriptor::zero();
  bool operator==(const CaseDescriptors&) const = default;
};

struct InvariantBundle {
  TypeResult type;
  K0Data k0;
  VertexSet p_l, p_c, p_ec;
  Flags flags;
  std::optional<CaseDescriptors> descriptors;  // present for graphs with <= 2 vertices
};

/// A_E minus the identity with sink columns zeroed; sink rows come out zero.
IntMatrix n_prime(const MultiGraph& g);

K0Data k0_with_unit(const MultiGraph& g);

/// IBN flag and minimal type via the row lattice of n_prime (Smith form).
TypeResult ibn_and_type(const MultiGraph& g);

/// The same answer by the case-split closed forms; graphs with <= 2 vertices.
TypeResult type_closed_form_two_vertex(const MultiGraph& g);  // TooManyVertices

Flags graph_flags(const MultiGraph& g);  // TooLarge > 20

FranksTriple franks_triple(const MultiGraph& g);

InvariantBundle invariant_bundle(const MultiGraph& g);  // TooLarge > 20

}  // namespace lpa
