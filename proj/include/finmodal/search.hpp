#pragma once

#include <optional>

#include <optional>

#include "finmodal/dsem.hpp"
#include "finmodal/kripke.hpp"
#include "finmodal/topo.hpp"

namespace finmodal {

enum class SearchMode { frame_relational, space_d, space_c };

struct SearchSpec {
  Formula formula;
  int max_size = 4;
  FrameConstraints constraints;  // frame mode only
  SearchMode mode = SearchMode::frame_relational;
  int bit_budget = 24;
};

struct SearchWitness {
  std::optional<Frame> frame;
  std::optional<TopSpace> space;
  Valuation valuation;
  int point = -1;
  int size = 0;
};

/// Bounded semi-decision: a hit is a genuine countermodel; exhaustion
/// only means no countermodel up to max_size, never theoremhood.
struct SearchResult {
  bool found = false;
  std::optional<SearchWitness> witness;
  int exhausted_size = 0;
};

SearchResult countermodel_search(const SearchSpec& spec);

}  // namespace finmodal
