#include "finmodal/suites.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "finmodal/census.hpp"
#include "finmodal/dsem.hpp"
#include "finmodal/glue.hpp"
#include "finmodal/json_io.hpp"
#include "finmodal/sampling.hpp"
#include "finmodal/search.hpp"

namespace finmodal {

namespace {

using nlohmann::json;

struct Ctx {
  const SuiteCaps& caps;
  Report report;

  explicit Ctx(const std::string& id, const SuiteCaps& c) : caps(c) {
    report.id = id;
    report.seed = c.seed;
  }

  // Records a failure with its witness; keeps only the first one.
  void fail(const std::string& what, json witness = {}) {
    if (report.verdict == Report::Verdict::FAIL) return;
    report.verdict = Report::Verdict::FAIL;
    report.detail = what;
    report.witness = std::move(witness);
  }

  bool ok() const { return report.verdict != Report::Verdict::FAIL; }

  Report finish(const std::string& pass_detail) {
    if (report.verdict == Report::Verdict::PASS && report.detail.empty())
      report.detail = pass_detail;
    return std::move(report);
  }
};

json frame_witness(const Frame& f) { return frame_to_json(f); }
json space_witness(const TopSpace& x) { return space_to_json(x); }

json countermodel_witness(const Countermodel& cm) {
  return json{{"valuation", valuation_to_json(cm.valuation)},
              {"point", cm.point}};
}

Formula fresh_scheme_C(int n) { return scheme_C(n, fresh_vars(n + 1)); }

// ---------------------------------------------------------------- formula

Report suite_roundtrip(const SuiteCaps& caps) {
  Ctx ctx("roundtrip", caps);
  Rng rng(caps.seed);
  std::vector<std::string> pool = {"p", "q", "r"};
  for (int i = 0; i < caps.samples && ctx.ok(); ++i) {
    Formula f = random_formula(rng, 8, pool);
    ++ctx.report.instances;
    std::string text = print(f);
    Formula back = parse(text);
    if (!(back == f))
      ctx.fail("parse(print(f)) differs from f", json{{"printed", text}});
    // Resugared output must parse back to the same tree as well.
    Formula sugared = parse(print(f, true));
    if (!(sugared == f))
      ctx.fail("resugared print does not reparse to f",
               json{{"printed", print(f, true)}});
  }
  return ctx.finish("parse/print identity held on every sample");
}

Report suite_scheme_shape(const SuiteCaps& caps) {
  Ctx ctx("scheme-shape", caps);
  for (int n = 0; n <= 5; ++n) {
    ++ctx.report.instances;
    Formula c = fresh_scheme_C(n);
    if (static_cast<int>(vars(c).size()) != n + 1)
      ctx.fail("scheme_C(" + std::to_string(n) + ") has wrong variable count");
    Formula p = scheme_P(n, fresh_vars(n + 1));
    if (count_kind(p, Kind::Dia) != n + 1)
      ctx.fail("scheme_P(" + std::to_string(n) + ") diamond count mismatch");
  }
  if (!(scheme_D(0, fresh_vars(1)) == Formula::top()))
    ctx.fail("scheme_D(0) is not T");
  bool threw = false;
  try {
    scheme_C(1, fresh_vars(1));
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  if (!threw) ctx.fail("arity mismatch not rejected");
  return ctx.finish("scheme shapes as displayed");
}

// ----------------------------------------------------------------- kripke

Report suite_theorem_1_2(const SuiteCaps& caps) {
  Ctx ctx("theorem1.2", caps);
  FrameConstraints transitive;
  transitive.transitive = true;
  for (int n = 0; n <= 3 && ctx.ok(); ++n) {
    Formula cn = fresh_scheme_C(n);
    enumerate_frames(std::min(caps.frame_points, 4), transitive,
                     [&](const Frame& f) {
      ++ctx.report.instances;
      ValidityResult res = valid_in_frame(f, cn, caps.bit_budget);
      bool small_circ = circumference(f) <= n;
      if (res.valid != small_circ) {
        json w{{"frame", frame_witness(f)},
               {"n", n},
               {"valid", res.valid},
               {"circumference", circumference(f)}};
        if (res.countermodel) w["countermodel"] = countermodel_witness(*res.countermodel);
        ctx.fail("scheme validity disagrees with circumference bound", w);
        return false;
      }
      return true;
    });
  }
  return ctx.finish("validity of the level-n scheme matched circumference <= n");
}

Report suite_scheme_reduction(const SuiteCaps& caps) {
  Ctx ctx("scheme-reduction", caps);
  Rng rng(caps.seed);
  std::vector<std::string> pool = {"q0", "q1"};
  FrameConstraints none;
  for (int n = 0; n <= 2 && ctx.ok(); ++n) {
    Formula cn = fresh_scheme_C(n);
    enumerate_frames(std::min(caps.frame_points, 4), none, [&](const Frame& f) {
      ++ctx.report.instances;
      bool fresh_valid = valid_in_frame(f, cn, caps.bit_budget).valid;
      // The identity substitution is one of the tested instances, so
      // the equivalence reduces to closure under substitution: when the
      // fresh instance is valid every instance must be.
      if (!fresh_valid) return true;
      ++ctx.report.coverage;
      for (int t = 0; t < 10; ++t) {
        std::vector<Formula> args;
        for (int i = 0; i <= n; ++i)
          args.push_back(random_formula(rng, 2, pool));
        Formula inst = scheme_C(n, args);
        if (!valid_in_frame(f, inst, caps.bit_budget).valid) {
          ctx.fail("substitution instance fails where the fresh scheme holds",
                   json{{"frame", frame_witness(f)},
                        {"n", n},
                        {"instance", print(inst)}});
          return false;
        }
      }
      return true;
    });
  }
  return ctx.finish("every tested substitution instance agreed with the fresh scheme");
}

Report suite_grz_singleton_clusters(const SuiteCaps& caps) {
  Ctx ctx("grz-singleton-clusters", caps);
  Formula grz = named_axiom("Grz");
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 4), transitive,
                   [&](const Frame& f) {
    ++ctx.report.instances;
    ValidityResult res = valid_in_frame(f, grz, caps.bit_budget);
    bool singletons = true;
    for (PointSet c : clusters(f).clusters)
      if (set_size(c) > 1) singletons = false;
    if (res.valid != singletons) {
      json w{{"frame", frame_witness(f)}, {"valid", res.valid}};
      if (res.countermodel) w["countermodel"] = countermodel_witness(*res.countermodel);
      ctx.fail("Grz validity disagrees with all-singleton clusters", w);
      return false;
    }
    return true;
  });
  return ctx.finish("Grz validity matched the all-singleton cluster shape");
}

Report suite_validity_preservation(const SuiteCaps& caps) {
  Ctx ctx("validity-preservation", caps);
  Rng rng(caps.seed);
  std::vector<std::string> pool = {"p", "q"};
  std::vector<Formula> probes = {named_axiom("K"), named_axiom("4"),
                                 named_axiom("T")};

  auto test_morphism = [&](const Frame& source, const Frame& target,
                           const std::vector<int>& map) {
    if (!bounded_morphism_check(map, source, target).ok) return true;
    PointSet hit = 0;
    for (int v : map) hit |= point_bit(v);
    if (hit != full_set(target.n)) return true;
    ++ctx.report.instances;
    std::vector<Formula> formulas = probes;
    for (int i = 0; i < 5; ++i)
      formulas.push_back(random_formula(rng, 4, pool));
    for (const Formula& f : formulas) {
      bool src = valid_in_frame(source, f, caps.bit_budget).valid;
      if (!src) continue;
      ++ctx.report.coverage;
      if (!valid_in_frame(target, f, caps.bit_budget).valid) {
        ctx.fail("surjective bounded morphism failed to preserve validity",
                 json{{"source", frame_witness(source)},
                      {"target", frame_witness(target)},
                      {"map", map},
                      {"formula", print(f)}});
        return false;
      }
    }
    return true;
  };

  // The mod-k collapse of one universal cluster onto a smaller one.
  for (int big = 2; big <= 4 && ctx.ok(); ++big)
    for (int small = 1; small < big; ++small) {
      if (big % small != 0) continue;
      Frame source = Frame::empty(big);
      for (int x = 0; x < big; ++x) source.succ[x] = full_set(big);
      Frame target = Frame::empty(small);
      for (int x = 0; x < small; ++x) target.succ[x] = full_set(small);
      std::vector<int> map(big);
      for (int x = 0; x < big; ++x) map[x] = x % small;
      test_morphism(source, target, map);
    }

  for (int i = 0; i < caps.samples && ctx.ok(); ++i) {
    int sn = 1 + static_cast<int>(rng() % std::min(caps.frame_points, 4));
    int tn = 1 + static_cast<int>(rng() % sn);
    bool transitive_pair = rng() & 1;
    Frame source = transitive_pair ? random_transitive_frame(rng, sn)
                                   : Frame::empty(sn);
    Frame target = transitive_pair ? random_transitive_frame(rng, tn)
                                   : Frame::empty(tn);
    if (!transitive_pair) {
      for (int x = 0; x < sn; ++x) source.succ[x] = random_subset(rng, sn);
      for (int x = 0; x < tn; ++x) target.succ[x] = random_subset(rng, tn);
    }
    std::vector<int> map(sn);
    for (int x = 0; x < sn; ++x) map[x] = static_cast<int>(rng() % tn);
    test_morphism(source, target, map);
  }
  return ctx.finish("source validity carried to targets on every morphism found");
}

Report suite_cluster_partition(const SuiteCaps& caps) {
  Ctx ctx("cluster-partition", caps);
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 4), transitive,
                   [&](const Frame& f) {
    ++ctx.report.instances;
    ClusterDecomposition d = clusters(f);
    PointSet seen = 0;
    for (PointSet c : d.clusters) {
      if (c == 0 || (c & seen)) {
        ctx.fail("clusters are not disjoint and nonempty",
                 json{{"frame", frame_witness(f)}});
        return false;
      }
      seen |= c;
    }
    if (seen != full_set(f.n)) {
      ctx.fail("clusters do not cover the frame", json{{"frame", frame_witness(f)}});
      return false;
    }
    // Maximality against the defining equivalence.
    for (int x = 0; x < f.n; ++x)
      for (int y = 0; y < f.n; ++y) {
        bool equivalent = x == y || (f.has_edge(x, y) && f.has_edge(y, x));
        if (equivalent != (d.cluster_of[x] == d.cluster_of[y])) {
          ctx.fail("cluster equivalence mismatch",
                   json{{"frame", frame_witness(f)}, {"x", x}, {"y", y}});
          return false;
        }
      }
    // Strict order is irreflexive by construction; check transitivity
    // and the final flags.
    for (int i = 0; i < d.count(); ++i) {
      if (d.strict_order[i] & (std::uint64_t{1} << i)) {
        ctx.fail("strict order is not irreflexive", json{{"frame", frame_witness(f)}});
        return false;
      }
      std::uint64_t rest = d.strict_order[i];
      while (rest) {
        int j = first_point(rest);
        rest &= rest - 1;
        if (d.strict_order[j] & ~d.strict_order[i]) {
          ctx.fail("strict order is not transitive", json{{"frame", frame_witness(f)}});
          return false;
        }
      }
      if (d.is_final[i] != (d.strict_order[i] == 0)) {
        ctx.fail("final flag mismatch", json{{"frame", frame_witness(f)}});
        return false;
      }
    }
    return true;
  });
  return ctx.finish("decompositions were partitions with a strict partial order");
}

Report suite_k4dc1_m(const SuiteCaps& caps) {
  Ctx ctx("k4dc1-m", caps);
  Formula d_axiom = named_axiom("D");
  Formula c1 = fresh_scheme_C(1);
  Formula m = named_axiom("M");
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 4), transitive,
                   [&](const Frame& f) {
    ++ctx.report.instances;
    if (!valid_in_frame(f, d_axiom, caps.bit_budget).valid) return true;
    if (!valid_in_frame(f, c1, caps.bit_budget).valid) return true;
    ++ctx.report.coverage;
    ValidityResult res = valid_in_frame(f, m, caps.bit_budget);
    if (!res.valid) {
      ctx.fail("frame validates D and the level-1 scheme but not M",
               json{{"frame", frame_witness(f)},
                    {"countermodel", countermodel_witness(*res.countermodel)}});
      return false;
    }
    return true;
  });
  if (ctx.ok() && ctx.report.coverage == 0) {
    ctx.report.verdict = Report::Verdict::VACUOUS;
    ctx.report.detail = "no frame validated both D and the level-1 scheme";
  }
  return ctx.finish("M held on every frame validating D and the level-1 scheme");
}

// ------------------------------------------------------------------- topo

Report suite_closure_laws(const SuiteCaps& caps) {
  Ctx ctx("closure-laws", caps);
  Rng rng(caps.seed);
  auto check_space = [&](const TopSpace& x) {
    int n = x.points();
    for (int t = 0; t < 20 && ctx.ok(); ++t) {
      ++ctx.report.instances;
      PointSet s = random_subset(rng, n);
      PointSet u = random_subset(rng, n);
      PointSet cl_s = x.closure(s);
      if (s & ~cl_s) ctx.fail("closure not extensive", space_witness(x));
      if (x.closure(cl_s) != cl_s) ctx.fail("closure not idempotent", space_witness(x));
      if ((s & ~u) == 0 && (cl_s & ~x.closure(u)))
        ctx.fail("closure not monotone", space_witness(x));
      if (x.interior(s) != (x.universe() & ~x.closure(x.universe() & ~s)))
        ctx.fail("interior/closure duality broken", space_witness(x));
      if (cl_s != (s | x.derived(s)))
        ctx.fail("closure differs from s union derived(s)", space_witness(x));
      if (s) {
        // Relativization law on the subspace over s.
        std::vector<int> pts;
        TopSpace sub = subspace(x, s, &pts);
        PointSet y = random_subset(rng, n) & s;
        PointSet y_local = 0, expect_local = 0;
        PointSet expect = s & x.closure(y);
        for (std::size_t i = 0; i < pts.size(); ++i) {
          if (y & point_bit(pts[i])) y_local |= point_bit(static_cast<int>(i));
          if (expect & point_bit(pts[i]))
            expect_local |= point_bit(static_cast<int>(i));
        }
        if (sub.closure(y_local) != expect_local)
          ctx.fail("subspace closure law broken", space_witness(x));
        PointSet expect_de = s & x.derived(y);
        PointSet expect_de_local = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
          if (expect_de & point_bit(pts[i]))
            expect_de_local |= point_bit(static_cast<int>(i));
        if (sub.derived(y_local) != expect_de_local)
          ctx.fail("subspace derived-set law broken", space_witness(x));
      }
    }
    return ctx.ok();
  };
  enumerate_topologies(std::min(caps.space_points, 4), check_space);
  for (int i = 0; i < caps.samples && ctx.ok(); ++i)
    check_space(random_space(rng, 1 + static_cast<int>(rng() % 6), 4));
  return ctx.finish("closure operator laws held");
}

Report suite_open_set_laws(const SuiteCaps& caps) {
  Ctx ctx("open-set-laws", caps);
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    PointSet full = x.universe();
    for (PointSet o : x.opens())
      for (PointSet s = 0;; ++s) {
        ++ctx.report.instances;
        if ((o & x.closure(s)) & ~x.closure(o & s)) {
          ctx.fail("open trace of a closure escapes the closed trace",
                   json{{"space", space_witness(x)},
                        {"open", point_set_to_json(o)},
                        {"s", point_set_to_json(s)}});
          return false;
        }
        if ((o & x.derived(s)) & ~x.derived(o & s)) {
          ctx.fail("open trace of a derived set escapes",
                   json{{"space", space_witness(x)},
                        {"open", point_set_to_json(o)},
                        {"s", point_set_to_json(s)}});
          return false;
        }
        if (s == full) break;
      }
    return true;
  });
  return ctx.finish("open-set restriction laws held");
}

Report suite_lemma2(const SuiteCaps& caps) {
  Ctx ctx("lemma2", caps);
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    PointSet full = x.universe();
    for (PointSet o : x.opens()) {
      if (o == 0) continue;
      for (PointSet s = 0;; ++s) {
        ++ctx.report.instances;
        // Dense in the subspace o means o lies inside the closure.
        if (x.is_dense(s) && (o & ~x.closure(o & s))) {
          ctx.fail("dense set loses density on an open subspace",
                   json{{"space", space_witness(x)},
                        {"open", point_set_to_json(o)},
                        {"s", point_set_to_json(s)}});
          return false;
        }
        if (x.is_crowded_in(s)) {
          PointSet trace = o & s;
          // Crowded in the subspace o: trace within o-relative derived set.
          if (trace & ~(o & x.derived(trace))) {
            ctx.fail("crowded set loses crowdedness on an open subspace",
                     json{{"space", space_witness(x)},
                          {"open", point_set_to_json(o)},
                          {"s", point_set_to_json(s)}});
            return false;
          }
        }
        if (s == full) break;
      }
    }
    return true;
  });
  return ctx.finish("density and crowdedness restricted to opens");
}

Report suite_resolvability_monotone(const SuiteCaps& caps) {
  Ctx ctx("resolvability-monotone", caps);
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    for (int m = 3; m <= 4; ++m) {
      if (!k_resolvable(x, m).resolvable) continue;
      for (int k = 2; k < m; ++k) {
        ++ctx.report.instances;
        if (!k_resolvable(x, k).resolvable) {
          ctx.fail("m-resolvable space is not k-resolvable for smaller k",
                   json{{"space", space_witness(x)}, {"m", m}, {"k", k}});
          return false;
        }
      }
    }
    return true;
  });
  return ctx.finish("amalgamating dense cells preserved resolvability");
}

Report suite_hi_implies_td(const SuiteCaps& caps) {
  Ctx ctx("hi-implies-td", caps);
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    if (!hereditarily_k_irresolvable(x, 2).holds) return true;
    ++ctx.report.coverage;
    if (!classify(x).is_TD) {
      ctx.fail("hereditarily irresolvable space is not T_D", space_witness(x));
      return false;
    }
    return true;
  });
  return ctx.finish("every hereditarily irresolvable space was T_D");
}

Report suite_scattered_hi_oi(const SuiteCaps& caps) {
  Ctx ctx("scattered-hi-oi", caps);
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    bool scattered = classify(x).is_scattered;
    bool hi = hereditarily_k_irresolvable(x, 2).holds;
    bool oi = openly_irresolvable(x).holds;
    if (scattered && !hi) {
      ctx.fail("scattered space is resolvable somewhere", space_witness(x));
      return false;
    }
    if (hi && !oi) {
      ctx.fail("hereditarily irresolvable space is not openly irresolvable",
               space_witness(x));
      return false;
    }
    return true;
  });
  return ctx.finish("scattered implied HI implied OI");
}

Report suite_no_finite_crowded_td(const SuiteCaps& caps) {
  Ctx ctx("no-finite-crowded-td", caps);
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    SpacePredicates p = classify(x);
    if (p.is_crowded && p.is_TD) {
      ctx.fail("found a finite crowded T_D space", space_witness(x));
      return false;
    }
    return true;
  });
  return ctx.finish("no enumerated space was both crowded and T_D");
}

Report suite_alexandrov_roundtrip(const SuiteCaps& caps) {
  Ctx ctx("alexandrov-roundtrip", caps);
  FrameConstraints preorder;
  preorder.transitive = true;
  preorder.reflexive = true;
  enumerate_frames(std::min(caps.frame_points, 4), preorder, [&](const Frame& f) {
    ++ctx.report.instances;
    if (!(specialization_frame(alexandrov_from_frame(f)) == f)) {
      ctx.fail("specialization of the Alexandrov space differs from the frame",
               frame_witness(f));
      return false;
    }
    return true;
  });
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 4), transitive, [&](const Frame& f) {
    ++ctx.report.instances;
    TopSpace x = alexandrov_from_frame(f);
    for (int w = 0; w < f.n; ++w)
      if (x.min_nbhd(w) != (f.succ[w] | point_bit(w))) {
        ctx.fail("minimal neighbourhood differs from the reflexive successor set",
                 frame_witness(f));
        return false;
      }
    return true;
  });
  return ctx.finish("Alexandrov duality round-tripped");
}

// ------------------------------------------------------------------- dsem

Report suite_axiom4_td(const SuiteCaps& caps) {
  Ctx ctx("axiom4-td", caps);
  Formula four = named_axiom("4");
  std::map<int, long long> counts;
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    ++ctx.report.instances;
    ++counts[x.points()];
    bool td = classify(x).is_TD;  // cross-checks both characterizations
    ValidityResult res = d_valid(x, four, caps.bit_budget);
    if (td != res.valid) {
      json w{{"space", space_witness(x)}, {"TD", td}};
      if (res.countermodel) w["countermodel"] = countermodel_witness(*res.countermodel);
      ctx.fail("transitivity axiom d-validity disagrees with T_D", w);
      return false;
    }
    return true;
  });
  const std::map<int, long long> expected = {{1, 1}, {2, 4}, {3, 29}, {4, 355}};
  for (const auto& [n, c] : counts) {
    auto it = expected.find(n);
    if (it != expected.end() && it->second != c)
      ctx.fail("labeled topology count mismatch at size " + std::to_string(n) +
                   ": got " + std::to_string(c) + ", expected " +
                   std::to_string(it->second),
               json{});
  }
  return ctx.finish("d-validity of 4 matched T_D on every topology");
}

Report suite_crowded_diatop(const SuiteCaps& caps) {
  Ctx ctx("crowded-diatop", caps);
  Formula diatop = dia(Formula::top());
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    if (d_valid(x, diatop, caps.bit_budget).valid != classify(x).is_crowded) {
      ctx.fail("d-validity of <>T disagrees with crowdedness", space_witness(x));
      return false;
    }
    return true;
  });
  return ctx.finish("<>T d-validity matched crowdedness");
}

Report suite_densely_discrete_e(const SuiteCaps& caps) {
  Ctx ctx("densely-discrete-e", caps);
  Formula e = named_axiom("E");
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    bool valid = d_valid(x, e, caps.bit_budget).valid;
    bool dd = classify(x).is_densely_discrete;
    PointSet iso = x.universe() & ~x.derived(x.universe());
    bool identity = (iso | x.derived(iso)) == x.universe();
    if (valid != dd || valid != identity) {
      ctx.fail("E d-validity, dense discreteness and the set identity disagree",
               json{{"space", space_witness(x)},
                    {"valid", valid},
                    {"densely_discrete", dd},
                    {"identity", identity}});
      return false;
    }
    return true;
  });
  return ctx.finish("E d-validity matched dense discreteness and the set identity");
}

Report suite_item4_1(const SuiteCaps& caps) {
  Ctx ctx("item4.1", caps);
  for (int n = 1; n <= 2 && ctx.ok(); ++n) {
    Formula cn = fresh_scheme_C(n);
    enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
      ++ctx.report.instances;
      bool dv = d_valid(x, cn, caps.bit_budget).valid;
      bool cv = c_valid(x, cn, caps.bit_budget).valid;
      bool hi = hereditarily_k_irresolvable(x, n + 1).holds;
      if (dv != cv || dv != hi) {
        ctx.fail("d-validity, C-validity and hereditary irresolvability disagree",
                 json{{"space", space_witness(x)},
                      {"n", n},
                      {"d_valid", dv},
                      {"c_valid", cv},
                      {"hereditarily_irresolvable", hi}});
        return false;
      }
      return true;
    });
  }
  return ctx.finish("both semantics matched hereditary (n+1)-irresolvability");
}

Report suite_lemma8(const SuiteCaps& caps) {
  Ctx ctx("lemma8", caps);
  Formula m_star = named_axiom("M_star");
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    ++ctx.report.instances;
    bool oi = openly_irresolvable(x).holds;
    ValidityResult res = d_valid(x, m_star, caps.bit_budget);
    if (oi != res.valid) {
      json w{{"space", space_witness(x)}, {"OI", oi}, {"valid", res.valid}};
      if (res.countermodel) w["countermodel"] = countermodel_witness(*res.countermodel);
      ctx.fail("open irresolvability disagrees with the starred M form", w);
      return false;
    }
    return true;
  });
  return ctx.finish("OI matched d-validity of the starred M form");
}

Report suite_scattered_loeb(const SuiteCaps& caps) {
  Ctx ctx("scattered-loeb", caps);
  Formula loeb = named_axiom("Loeb");
  enumerate_topologies(std::min(caps.space_points, 4), [&](const TopSpace& x) {
    ++ctx.report.instances;
    ValidityResult res = d_valid(x, loeb, caps.bit_budget);
    bool scattered = classify(x).is_scattered;
    if (res.valid != scattered) {
      json w{{"space", space_witness(x)}, {"valid", res.valid}};
      if (res.countermodel) w["countermodel"] = countermodel_witness(*res.countermodel);
      ctx.fail("Loeb d-validity disagrees with scatteredness", w);
      return false;
    }
    return true;
  });
  return ctx.finish("Loeb d-validity matched scatteredness");
}

Report suite_item4_2(const SuiteCaps& caps) {
  Ctx ctx("item4.2", caps);
  FrameConstraints preorder;
  preorder.transitive = true;
  preorder.reflexive = true;
  enumerate_frames(std::min(caps.frame_points, 5), preorder, [&](const Frame& f) {
    TopSpace x = alexandrov_from_frame(f);
    int circ = circumference(f);
    for (int n = 1; n <= 3; ++n) {
      ++ctx.report.instances;
      bool hi = hereditarily_k_irresolvable(x, n + 1).holds;
      if ((circ <= n) != hi) {
        ctx.fail("circumference bound disagrees with hereditary irresolvability",
                 json{{"frame", frame_witness(f)},
                      {"n", n},
                      {"circumference", circ},
                      {"hereditarily_irresolvable", hi}});
        return false;
      }
    }
    return true;
  });
  return ctx.finish("circumference <= n matched hereditary (n+1)-irresolvability");
}

Report suite_theorem7(const SuiteCaps& caps) {
  Ctx ctx("theorem7", caps);
  Formula m = named_axiom("M");
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    SpacePredicates p = classify(x);
    if (!p.is_crowded || !openly_irresolvable(x).holds) return true;
    ++ctx.report.coverage;
    if (!d_valid(x, m, caps.bit_budget).valid) {
      ctx.fail("crowded OI space does not d-validate M", space_witness(x));
      return false;
    }
    return true;
  });
  if (ctx.ok() && ctx.report.coverage == 0) {
    // The hypothesis has no finite instances; assert the recorded
    // counterexample to the converse instead: the two-point indiscrete
    // space d-validates M without being OI.
    TopSpace indiscrete = make_space(2, std::vector<PointSet>{}, true);
    bool m_valid = d_valid(indiscrete, m, caps.bit_budget).valid;
    bool oi = openly_irresolvable(indiscrete).holds;
    if (!m_valid || oi) {
      ctx.fail("indiscrete counterexample to the converse failed",
               json{{"M_valid", m_valid}, {"OI", oi}});
    } else {
      ctx.report.verdict = Report::Verdict::VACUOUS;
      ctx.report.detail =
          "no finite space is crowded and OI; converse counterexample checked";
    }
  }
  return ctx.finish("every crowded OI space d-validated M");
}

Report suite_lemma9(const SuiteCaps& caps) {
  Ctx ctx("lemma9", caps);
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    SpacePredicates p = classify(x);
    if (!p.is_crowded || !p.is_TD) return true;
    ++ctx.report.coverage;
    if (!int_cl_eq_int_de(x)) {
      ctx.fail("interior-closure identity fails on a crowded T_D space",
               space_witness(x));
      return false;
    }
    return true;
  });
  if (ctx.ok() && ctx.report.coverage == 0) {
    ctx.report.verdict = Report::Verdict::VACUOUS;
    ctx.report.detail =
        "no finite space is crowded and T_D; identity exposed as a predicate";
  }
  return ctx.finish("interior identity held under the crowded T_D hypothesis");
}

Report suite_theorem8(const SuiteCaps& caps) {
  Ctx ctx("theorem8", caps);
  Formula m = named_axiom("M");
  enumerate_topologies(std::min(caps.space_points, 5), [&](const TopSpace& x) {
    ++ctx.report.instances;
    if (!classify(x).is_TD) return true;
    if (!d_valid(x, m, caps.bit_budget).valid) return true;
    ++ctx.report.coverage;
    SpacePredicates p = classify(x);
    if (!p.is_crowded || !openly_irresolvable(x).holds) {
      ctx.fail("T_D space d-validating M is not crowded and OI",
               space_witness(x));
      return false;
    }
    return true;
  });
  if (ctx.ok() && ctx.report.coverage == 0) {
    ctx.report.verdict = Report::Verdict::VACUOUS;
    ctx.report.detail = "no finite T_D space d-validates M";
  }
  return ctx.finish("conclusion held wherever the hypothesis fired");
}

Report suite_indiscrete_2pt(const SuiteCaps& caps) {
  Ctx ctx("indiscrete-2pt", caps);
  TopSpace x = make_space(2, std::vector<PointSet>{}, true);
  SpacePredicates p = classify(x);
  ctx.report.instances = 1;
  json got = {{"crowded", p.is_crowded},
              {"M_d_valid", d_valid(x, named_axiom("M"), caps.bit_budget).valid},
              {"OI", openly_irresolvable(x).holds},
              {"TD", p.is_TD},
              {"resolvable2", k_resolvable(x, 2).resolvable},
              {"HI3", hereditarily_k_irresolvable(x, 3).holds}};
  json want = {{"crowded", true}, {"M_d_valid", true}, {"OI", false},
               {"TD", false},     {"resolvable2", true}, {"HI3", true}};
  if (got != want)
    ctx.fail("two-point indiscrete space flags deviate",
             json{{"got", got}, {"want", want}});
  return ctx.finish("two-point indiscrete space matched all six flags");
}

// ------------------------------------------------------------------- glue

Report suite_lemma4(const SuiteCaps& caps) {
  Ctx ctx("lemma4", caps);
  Rng rng(caps.seed);
  std::vector<std::string> pool = {"p", "q"};
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 5), transitive,
                   [&](const Frame& f) {
    ++ctx.report.instances;
    GluedSpace g = glue(f, default_assignment(f, 2));
    DMorphism dm = g.morphism(f);
    DMorphismCheck check = d_morphism_check(dm);
    if (!check.ok) {
      ctx.fail("glued map is not a d-morphism: " + check.describe(),
               json{{"frame", frame_witness(f)}});
      return false;
    }
    for (int t = 0; t < caps.formulas_per_instance; ++t) {
      Formula probe = random_formula(rng, 4, pool);
      TransferCheck tc = validity_transfer_check(dm, probe, caps.bit_budget);
      ++ctx.report.coverage;
      if (!tc.consistent) {
        ctx.fail("validity transfer violated",
                 json{{"frame", frame_witness(f)}, {"formula", print(probe)}});
        return false;
      }
    }
    return true;
  });
  return ctx.finish("every glued map was a d-morphism with consistent transfer");
}

Report suite_lemma5(const SuiteCaps& caps) {
  Ctx ctx("lemma5", caps);
  FrameConstraints irreflexive_transitive;
  irreflexive_transitive.transitive = true;
  irreflexive_transitive.circumference_at_most = 0;
  enumerate_frames(std::min(caps.frame_points, 5), irreflexive_transitive,
                   [&](const Frame& f) {
                     ++ctx.report.instances;
                     GluedSpace g = glue(f, default_assignment(f, 2));
                     if (!classify(g.space).is_TD) {
                       ctx.fail("gluing T_D cluster spaces lost T_D",
                                frame_witness(f));
                       return false;
                     }
                     return true;
                   });
  return ctx.finish("gluing one-point cluster spaces preserved T_D");
}

// Pool of crowded k-HI spaces on at most four points, for cluster
// replacement in the lemma6 suite.
std::vector<TopSpace> crowded_hi_pool(int k) {
  std::vector<TopSpace> pool;
  enumerate_topologies(4, [&](const TopSpace& x) {
    if (classify(x).is_crowded && hereditarily_k_irresolvable(x, k).holds)
      pool.push_back(x);
    return true;
  });
  return pool;
}

Report suite_lemma6(const SuiteCaps& caps) {
  Ctx ctx("lemma6", caps);
  Rng rng(caps.seed);
  std::vector<int> targets;
  if (caps.k == 0)
    targets = {2, 3};
  else
    targets = {caps.k};

  for (int k : targets) {
    // Valid assignments need crowded dense cells, so a k-HI cluster
    // space can only sit on a singleton cluster: one-point spaces on
    // degenerate clusters always, and crowded k-HI spaces on simple
    // clusters (those exist only for k >= 3 at finite scale).
    std::vector<TopSpace> pool = crowded_hi_pool(k);
    int max_n = std::min(caps.frame_points, 3);
    std::vector<Frame> candidates;
    FrameConstraints cons;
    cons.transitive = true;
    cons.circumference_at_most = pool.empty() ? 0 : 1;
    enumerate_frames(max_n, cons, [&](const Frame& f) {
      candidates.push_back(f);
      return true;
    });
    for (int i = 0; i < caps.samples && ctx.ok(); ++i) {
      const Frame& f = candidates[rng() % candidates.size()];
      ClusterDecomposition dec = clusters(f);
      ClusterAssignment assignment;
      assignment.clusters.resize(dec.count());
      bool buildable = true;
      for (int c = 0; c < dec.count(); ++c) {
        ClusterSpaceAssignment& cs = assignment.clusters[c];
        int member = first_point(dec.clusters[c]);
        if (dec.kinds[c] == ClusterKind::degenerate) {
          cs.space = make_space(1, std::vector<PointSet>{}, true);
          cs.cells[member] = point_bit(0);
        } else if (!pool.empty()) {
          cs.space = pool[rng() % pool.size()];
          cs.cells[member] = cs.space.universe();
        } else {
          buildable = false;
        }
      }
      if (!buildable) continue;
      ++ctx.report.instances;
      // Every cluster space is k-HI by construction; re-validate.
      for (const auto& cs : assignment.clusters)
        if (!hereditarily_k_irresolvable(cs.space, k).holds) {
          ctx.fail("sampled cluster space is not k-HI", json{{"k", k}});
          break;
        }
      if (!ctx.ok()) break;
      GluedSpace g = glue(f, assignment);
      if (!hereditarily_k_irresolvable(g.space, k).holds) {
        ctx.fail("gluing k-HI cluster spaces lost k-HI",
                 json{{"frame", frame_witness(f)}, {"k", k}});
      }
    }
  }
  return ctx.finish("gluing preserved hereditary irresolvability");
}

Report suite_non_t1(const SuiteCaps& caps) {
  Ctx ctx("non-t1", caps);
  FrameConstraints transitive;
  transitive.transitive = true;
  enumerate_frames(std::min(caps.frame_points, 4), transitive,
                   [&](const Frame& f) {
    ClusterDecomposition dec = clusters(f);
    bool any_strict = false;
    for (int i = 0; i < dec.count(); ++i)
      if (dec.strict_order[i]) any_strict = true;
    if (!any_strict) return true;
    ++ctx.report.instances;
    ++ctx.report.coverage;
    GluedSpace g = glue(f, default_assignment(f, 2));
    for (int i = 0; i < dec.count(); ++i) {
      std::uint64_t rest = dec.strict_order[i];
      while (rest) {
        int j = first_point(rest);
        rest &= rest - 1;
        // Points glued in for the upper cluster j are not closed.
        for (int p = 0; p < g.space.points(); ++p) {
          if (g.provenance[p].cluster != j) continue;
          if (g.space.closure(point_bit(p)) == point_bit(p)) {
            ctx.fail("singleton above a strict cluster edge is closed",
                     json{{"frame", frame_witness(f)}, {"point", p}});
            return false;
          }
        }
      }
    }
    return true;
  });
  return ctx.finish("every strict cluster edge produced a non-closed singleton");
}

Report suite_crowded_final_nondegenerate(const SuiteCaps& caps) {
  Ctx ctx("crowded-final-nondegenerate", caps);
  FrameConstraints cons;
  cons.transitive = true;
  cons.final_clusters = FinalClusterConstraint::all_nondegenerate;
  enumerate_frames(std::min(caps.frame_points, 4), cons, [&](const Frame& f) {
    ++ctx.report.instances;
    ++ctx.report.coverage;
    GluedSpace g = glue(f, default_assignment(f, 2));
    if (!classify(g.space).is_crowded) {
      ctx.fail("glued space with non-degenerate final clusters is not crowded",
               frame_witness(f));
      return false;
    }
    return true;
  });
  return ctx.finish("non-degenerate final clusters produced crowded glued spaces");
}

Report suite_densely_discrete_final_degenerate(const SuiteCaps& caps) {
  Ctx ctx("densely-discrete-final-degenerate", caps);
  FrameConstraints cons;
  cons.transitive = true;
  cons.final_clusters = FinalClusterConstraint::all_degenerate;
  enumerate_frames(std::min(caps.frame_points, 4), cons, [&](const Frame& f) {
    ++ctx.report.instances;
    ++ctx.report.coverage;
    GluedSpace g = glue(f, default_assignment(f, 2));
    if (!classify(g.space).is_densely_discrete) {
      ctx.fail("glued space with degenerate final clusters is not densely discrete",
               frame_witness(f));
      return false;
    }
    return true;
  });
  return ctx.finish("degenerate final clusters produced densely discrete glued spaces");
}

Report suite_relabel_independence(const SuiteCaps& caps) {
  Ctx ctx("relabel-independence", caps);
  Rng rng(caps.seed);
  std::vector<Frame> frames;
  frames.push_back(Frame::from_edges(2, {{0, 1}}));                    // chain
  frames.push_back(Frame::from_edges(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  frames.push_back(Frame::from_edges(3, {{0, 1}, {0, 2}, {1, 1}, {1, 2},
                                         {2, 2}}));
  for (const Frame& f : frames) {
    ClusterAssignment base = default_assignment(f, 2);
    GluedSpace g0 = glue(f, base);
    for (int t = 0; t < 5; ++t) {
      ++ctx.report.instances;
      ClusterAssignment shuffled = base;
      for (auto& cs : shuffled.clusters) {
        int n = cs.space.points();
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        cs.space = relabel_space(cs.space, perm);
        for (auto& [w, cell] : cs.cells) {
          PointSet moved = 0, rest = cell;
          while (rest) {
            int x = first_point(rest);
            rest &= rest - 1;
            moved |= point_bit(perm[x]);
          }
          cell = moved;
        }
      }
      GluedSpace g1 = glue(f, shuffled);
      if (!homeomorphic(g0.space, g1.space)) {
        ctx.fail("relabeled cluster spaces glued to a non-homeomorphic space",
                 frame_witness(f));
        break;
      }
    }
  }
  return ctx.finish("gluing was independent of the labeling chosen");
}

// ---------------------------------------------------------------- harness

Report suite_witness_replay(const SuiteCaps& caps) {
  Ctx ctx("witness-replay", caps);
  Rng rng(caps.seed);
  std::vector<std::string> pool = {"p", "q"};
  std::vector<Formula> formulas = {named_axiom("Loeb"), named_axiom("M"),
                                   fresh_scheme_C(1)};
  for (int i = 0; i < 5; ++i) formulas.push_back(random_formula(rng, 3, pool));
  for (const Formula& f : formulas) {
    for (SearchMode mode : {SearchMode::frame_relational, SearchMode::space_d,
                            SearchMode::space_c}) {
      ++ctx.report.instances;
      SearchSpec spec;
      spec.formula = f;
      spec.max_size = 3;
      spec.mode = mode;
      spec.constraints.transitive = true;
      SearchResult r = countermodel_search(spec);
      if (!r.found) continue;
      ++ctx.report.coverage;
      PointSet truth;
      if (mode == SearchMode::frame_relational)
        truth = eval_frame(*r.witness->frame, r.witness->valuation, f);
      else if (mode == SearchMode::space_d)
        truth = eval_d(*r.witness->space, r.witness->valuation, f);
      else
        truth = eval_c(*r.witness->space, r.witness->valuation, f);
      if (truth & point_bit(r.witness->point)) {
        ctx.fail("witness does not replay: formula true at the witness point",
                 json{{"formula", print(f)}});
      }
    }
  }
  return ctx.finish("every found witness replayed through evaluation");
}

Report suite_search_oracle(const SuiteCaps& caps) {
  Ctx ctx("search-oracle", caps);
  std::vector<Formula> formulas = {named_axiom("Loeb"), named_axiom("4"),
                                   fresh_scheme_C(1), named_axiom("M")};
  for (const Formula& f : formulas) {
    ++ctx.report.instances;
    SearchSpec spec;
    spec.formula = f;
    spec.max_size = 3;
    spec.constraints.transitive = true;
    SearchResult fast = countermodel_search(spec);
    if (fast.found) ++ctx.report.coverage;

    // Reference loop: same stream, direct validity checks.
    SearchResult slow;
    enumerate_frames(spec.max_size, spec.constraints, [&](const Frame& fr) {
      ValidityResult v = valid_in_frame(fr, f, caps.bit_budget);
      if (v.valid) return true;
      slow.found = true;
      SearchWitness w;
      w.frame = fr;
      w.valuation = v.countermodel->valuation;
      w.point = v.countermodel->point;
      w.size = fr.n;
      slow.witness = std::move(w);
      return false;
    });
    if (fast.found != slow.found ||
        (fast.found && (!(*fast.witness->frame == *slow.witness->frame) ||
                        fast.witness->valuation != slow.witness->valuation ||
                        fast.witness->point != slow.witness->point))) {
      ctx.fail("search disagrees with the direct validity loop",
               json{{"formula", print(f)}});
    }
  }
  return ctx.finish("search agreed with the direct validity loop");
}

using SuiteFn = Report (*)(const SuiteCaps&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"roundtrip", suite_roundtrip},
      {"scheme-shape", suite_scheme_shape},
      {"theorem1.2", suite_theorem_1_2},
      {"scheme-reduction", suite_scheme_reduction},
      {"grz-singleton-clusters", suite_grz_singleton_clusters},
      {"validity-preservation", suite_validity_preservation},
      {"cluster-partition", suite_cluster_partition},
      {"k4dc1-m", suite_k4dc1_m},
      {"closure-laws", suite_closure_laws},
      {"open-set-laws", suite_open_set_laws},
      {"lemma2", suite_lemma2},
      {"resolvability-monotone", suite_resolvability_monotone},
      {"hi-implies-td", suite_hi_implies_td},
      {"scattered-hi-oi", suite_scattered_hi_oi},
      {"no-finite-crowded-td", suite_no_finite_crowded_td},
      {"alexandrov-roundtrip", suite_alexandrov_roundtrip},
      {"axiom4-td", suite_axiom4_td},
      {"crowded-diatop", suite_crowded_diatop},
      {"densely-discrete-e", suite_densely_discrete_e},
      {"item4.1", suite_item4_1},
      {"lemma8", suite_lemma8},
      {"scattered-loeb", suite_scattered_loeb},
      {"item4.2", suite_item4_2},
      {"theorem7", suite_theorem7},
      {"lemma9", suite_lemma9},
      {"theorem8", suite_theorem8},
      {"indiscrete-2pt", suite_indiscrete_2pt},
      {"lemma4", suite_lemma4},
      {"lemma5", suite_lemma5},
      {"lemma6", suite_lemma6},
      {"non-t1", suite_non_t1},
      {"crowded-final-nondegenerate", suite_crowded_final_nondegenerate},
      {"densely-discrete-final-degenerate",
       suite_densely_discrete_final_degenerate},
      {"relabel-independence", suite_relabel_independence},
      {"witness-replay", suite_witness_replay},
      {"search-oracle", suite_search_oracle},
  };
  return reg;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

Report run_suite(const std::string& id, const SuiteCaps& caps) {
  for (const auto& [name, fn] : registry())
    if (name == id) return fn(caps);
  throw std::invalid_argument("unknown suite id: " + id);
}

std::vector<Report> run_property_suite(const std::string& id,
                                       const SuiteCaps& caps) {
  std::vector<Report> out;
  if (id == "all") {
    for (const auto& [name, fn] : registry()) out.push_back(fn(caps));
  } else {
    out.push_back(run_suite(id, caps));
  }
  return out;
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  const char* verdict = r.verdict == Report::Verdict::PASS      ? "PASS"
                        : r.verdict == Report::Verdict::VACUOUS ? "VACUOUS"
                                                                : "FAIL";
  out << verdict << "  " << r.id << "  instances=" << r.instances
      << " coverage=" << r.coverage << " seed=" << r.seed;
  if (!r.detail.empty()) out << "  -- " << r.detail;
  return out.str();
}

nlohmann::json report_to_json(const Report& r) {
  const char* verdict = r.verdict == Report::Verdict::PASS      ? "PASS"
                        : r.verdict == Report::Verdict::VACUOUS ? "VACUOUS"
                                                                : "FAIL";
  nlohmann::json out = {{"id", r.id},
                        {"verdict", verdict},
                        {"instances", r.instances},
                        {"coverage", r.coverage},
                        {"seed", r.seed},
                        {"detail", r.detail}};
  if (r.verdict == Report::Verdict::FAIL) out["witness"] = r.witness;
  return out;
}

}  // namespace finmodal
