#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finmodal/formula.hpp"
#include "finmodal/kripke.hpp"
#include "finmodal/sets.hpp"
#include "finmodal/topo.hpp"

namespace finmodal {

struct TopoModel {
  TopSpace space;
  Valuation val;
};

/// d-semantics truth set: diamond is the derived-set operator.
PointSet eval_d(const TopSpace& space, const Valuation& val, const Formula& f);

/// C-semantics truth set: diamond is closure.
PointSet eval_c(const TopSpace& space, const Valuation& val, const Formula& f);

/// Exhaustive d-validity over all valuations of vars(f); bit budget as
/// in valid_in_frame.
ValidityResult d_valid(const TopSpace& space, const Formula& f,
                       int bit_budget = 24);
ValidityResult c_valid(const TopSpace& space, const Formula& f,
                       int bit_budget = 24);

/// Candidate d-morphism: a total map from space points onto frame
/// points (surjectivity is checked only where a result needs it).
struct DMorphism {
  TopSpace space;
  Frame frame;
  std::vector<int> map;
};

struct DMorphismCheck {
  enum class Condition {
    none,
    continuity,          // preimage of a basic open is not open
    openness,            // image of a minimal neighbourhood is not an up-set
    reflexive_fiber,     // fiber of a reflexive point is not crowded
    irreflexive_fiber    // fiber of an irreflexive point is not discrete
  };
  bool ok = true;
  Condition failed = Condition::none;
  int witness = -1;  // frame point (continuity/fibers) or space point (openness)
  std::string describe() const;
};

/// Checks continuity and openness against the Alexandrov topology of
/// the (transitive) target frame, crowdedness of reflexive-point
/// fibers and discreteness of irreflexive-point fibers.
DMorphismCheck d_morphism_check(const DMorphism& dm);

bool is_surjective(const DMorphism& dm);

struct TransferCheck {
  bool consistent = false;   // space d-validity implies frame validity
  ValidityResult space_side;
  ValidityResult frame_side;
};

/// Requires d_morphism_check(dm).ok and a surjective map; evaluates
/// d-validity on the space and validity on the frame. An inconsistent
/// verdict indicates an implementation bug, never a math failure.
TransferCheck validity_transfer_check(const DMorphism& dm, const Formula& f,
                                      int bit_budget = 24);

}  // namespace finmodal
