#include "finmodal/search.hpp"

namespace finmodal {

SearchResult countermodel_search(const SearchSpec& spec) {
  SearchResult out;
  if (spec.mode == SearchMode::frame_relational) {
    enumerate_frames(spec.max_size, spec.constraints, [&](const Frame& f) {
      ValidityResult r = valid_in_frame(f, spec.formula, spec.bit_budget);
      if (r.valid) return true;
      SearchWitness w;
      w.frame = f;
      w.valuation = r.countermodel->valuation;
      w.point = r.countermodel->point;
      w.size = f.n;
      out.found = true;
      out.witness = std::move(w);
      return false;
    });
  } else {
    bool d_mode = spec.mode == SearchMode::space_d;
    enumerate_topologies(spec.max_size, [&](const TopSpace& x) {
      ValidityResult r = d_mode ? d_valid(x, spec.formula, spec.bit_budget)
                                : c_valid(x, spec.formula, spec.bit_budget);
      if (r.valid) return true;
      SearchWitness w;
      w.space = x;
      w.valuation = r.countermodel->valuation;
      w.point = r.countermodel->point;
      w.size = x.points();
      out.found = true;
      out.witness = std::move(w);
      return false;
    });
  }
  if (!out.found) out.exhausted_size = spec.max_size;
  return out;
}

}  // namespace finmodal
