#include "triadic/family.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "triadic/ops.hpp"
#include "triadic/translate.hpp"

namespace triadic {

namespace {

std::int64_t pow3(unsigned k) {
  std::int64_t p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 3;
  return p;
}

std::vector<Digit> k_digits(std::int64_t value, unsigned k) {
  std::vector<Digit> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = static_cast<Digit>(value % 3);
    value /= 3;
  }
  return d;
}

unsigned runs_of_two(const std::vector<Digit>& digits) {
  unsigned runs = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] == 2 && (i == 0 || digits[i - 1] != 2)) ++runs;
  return runs;
}

std::size_t binomial(unsigned n, unsigned r) {
  if (r > n) return 0;
  std::size_t value = 1;
  for (unsigned i = 0; i < r; ++i) value = value * (n - i) / (i + 1);
  return value;
}

Presentation build_x1(std::int64_t m) {
  return build_translate_presentation(MultiplierSet({1, m}));
}

std::int64_t label_value(const Presentation& p, VertexId v) {
  auto parsed = TernaryString::parse_msb(p.label(v));
  if (!parsed) throw std::logic_error("vertex label is not ternary: " + p.label(v));
  return parsed->value();
}

void parallel_for(std::int64_t begin, std::int64_t end, unsigned jobs,
                  const std::function<void(std::int64_t)>& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs == 1 || end - begin < 2) {
    for (std::int64_t i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{begin};
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::int64_t i = next.fetch_add(1); i < end; i = next.fetch_add(1)) body(i);
    });
  for (auto& w : workers) w.join();
}

}  // namespace

LabelClass classify_pk_vertex(const TernaryString& label, unsigned k) {
  return classify_pk_vertex(label.value(), k);
}

LabelClass classify_pk_vertex(std::int64_t value, unsigned k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const std::int64_t top = pow3(k);
  if (value < 0 || value > top)
    throw std::invalid_argument("label value out of range for P_k vertex");

  LabelClass result{};
  if (value == top) {
    result.s_class = SClass::S2;
    result.t_class = TClass::T2;
  } else {
    auto digits = k_digits(value, k);
    bool has_one = std::count(digits.begin(), digits.end(), 1) > 0;
    if (!has_one) {
      result.s_class = SClass::S1;
    } else {
      // S2: a single digit 1 with only zeros in lower positions.
      std::size_t one_pos = 0;
      int ones = 0;
      for (std::size_t i = 0; i < digits.size(); ++i)
        if (digits[i] == 1) {
          ++ones;
          one_pos = i;
        }
      bool zeros_below = true;
      for (std::size_t i = 0; i < one_pos; ++i)
        if (digits[i] != 0) zeros_below = false;
      if (ones != 1 || !zeros_below)
        throw std::invalid_argument("value is not an S1/S2 label");
      result.s_class = SClass::S2;
    }
    result.t_class = digits[k - 1] == 2 ? TClass::T2 : TClass::T1;
  }

  if (result.t_class == TClass::T1)
    result.depth = runs_of_two(k_digits(value, k));
  else
    result.depth = runs_of_two(k_digits(top - value, k));
  return result;
}

DepthTable pk_depth_table(unsigned k) {
  DepthTable table;
  table.k = k;
  Presentation p = build_x1(family_member(Family::P, k));
  table.counts.assign(k / 2 + 1, 0);
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    auto cls = classify_pk_vertex(label_value(p, v), k);
    if (cls.depth >= table.counts.size()) table.counts.resize(cls.depth + 1, 0);
    ++table.counts[cls.depth];
  }
  table.expected.resize(k / 2 + 1);
  for (unsigned j = 0; j <= k / 2; ++j) table.expected[j] = 2 * binomial(k + 1, 2 * j + 1);
  return table;
}

PkStructureReport pk_structure_check(unsigned k) {
  PkStructureReport report;
  report.k = k;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  Presentation p = build_x1(family_member(Family::P, k));
  report.vertex_count = p.vertex_count();
  const std::size_t expected_vertices = std::size_t{1} << (k + 1);
  if (p.vertex_count() != expected_vertices)
    fail("vertex count " + std::to_string(p.vertex_count()) + " != 2^(k+1)");

  std::vector<unsigned> depth(p.vertex_count());
  std::vector<std::int64_t> values(p.vertex_count());
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    values[v] = label_value(p, v);
    depth[v] = classify_pk_vertex(values[v], k).depth;
  }

  for (const Edge& e : p.edges())
    if (depth[e.from] > depth[e.to]) {
      fail("depth decreases along edge " + p.label(e.from) + "->" + p.label(e.to));
      break;
    }

  SccDecomposition scc = scc_decomposition(p);
  const unsigned depth_count = k / 2 + 1;
  if (scc.components.size() != depth_count)
    fail("expected " + std::to_string(depth_count) + " components, got " +
         std::to_string(scc.components.size()));

  // Depth classes must coincide with the components.
  std::vector<std::set<VertexId>> by_depth(depth_count);
  for (VertexId v = 0; v < p.vertex_count(); ++v)
    if (depth[v] < depth_count) by_depth[depth[v]].insert(v);
  report.scc_sizes_by_depth.assign(depth_count, 0);
  for (unsigned j = 0; j < depth_count && j < scc.components.size(); ++j) {
    // Components are in topological order; depth j should be component j.
    std::set<VertexId> comp(scc.components[j].begin(), scc.components[j].end());
    report.scc_sizes_by_depth[j] = comp.size();
    if (comp != by_depth[j]) fail("component " + std::to_string(j) + " != depth class");
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> chain;
  for (std::uint32_t j = 0; j + 1 < depth_count; ++j) chain.push_back({j, j + 1});
  if (scc.condensation_edges != chain) fail("condensation is not the depth chain");

  // Reflection R(m) = 3^k - m with edge digits 0 and 1 exchanged.
  const std::int64_t top = pow3(k);
  std::vector<VertexId> reflection(p.vertex_count());
  bool reflection_total = true;
  for (VertexId v = 0; v < p.vertex_count(); ++v) {
    auto image = p.find_vertex(TernaryString::from_value(top - values[v]).to_msb_string());
    if (!image) {
      fail("reflection image of " + p.label(v) + " is not a vertex");
      reflection_total = false;
      break;
    }
    reflection[v] = *image;
  }
  if (reflection_total) {
    auto check = verify_automorphism(p, reflection, {1, 0, 2});
    if (!check.holds) fail("reflection with digit swap is not an automorphism");
    bool fixed_point_free = true;
    for (VertexId v = 0; v < p.vertex_count(); ++v)
      if (reflection[v] == v) fixed_point_free = false;
    if (!fixed_point_free) fail("reflection has a fixed point");
    if (check.quotient) {
      report.quotient_vertex_count = check.quotient->vertex_count();
      if (report.quotient_vertex_count != expected_vertices / 2)
        fail("quotient does not have 2^k vertices");
    } else if (check.holds) {
      fail("reflection is not an involution");
    }
  }

  report.ok = report.failures.empty();
  return report;
}

std::vector<std::vector<Digit>> pk_witness_strings(unsigned k, unsigned periods) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const unsigned a = k / 4, b = k % 4;
  std::vector<std::vector<Digit>> result;
  if (a == 0) return result;

  std::vector<Digit> prefix;
  for (unsigned i = 0; i < a; ++i) prefix.insert(prefix.end(), {1, 1, 0, 0});
  prefix.insert(prefix.end(), b, 0);

  // One period: (1 x 0)(0 1 z 0)^(a-1) 0^b (1100)^a 0^b, with the a free
  // digits x, z_2, ..., z_a drawn from {0,1}.
  auto period = [&](unsigned bits) {
    std::vector<Digit> w;
    w.insert(w.end(), {1, static_cast<Digit>(bits & 1), 0});
    for (unsigned i = 1; i < a; ++i)
      w.insert(w.end(), {0, 1, static_cast<Digit>((bits >> i) & 1), 0});
    w.insert(w.end(), b, 0);
    for (unsigned i = 0; i < a; ++i) w.insert(w.end(), {1, 1, 0, 0});
    w.insert(w.end(), b, 0);
    return w;
  };

  const unsigned total_bits = a * periods;
  if (total_bits > 24) throw std::invalid_argument("witness enumeration too large");
  for (unsigned choice = 0; choice < (1u << total_bits); ++choice) {
    std::vector<Digit> s = prefix;
    for (unsigned t = 0; t < periods; ++t) {
      auto w = period((choice >> (t * a)) & ((1u << a) - 1));
      s.insert(s.end(), w.begin(), w.end());
    }
    result.push_back(std::move(s));
  }
  return result;
}

WitnessReport pk_lower_bound_witness(unsigned k) {
  WitnessReport report;
  report.k = k;
  const unsigned a = k / 4;
  Presentation p = build_x1(family_member(Family::P, k));
  report.dimension = hausdorff_dimension(p).dimension;
  report.bound = a == 0 ? 0.0 : (static_cast<double>(a) / (2.0 * k - 1.0)) * kLog3Two;
  if (a == 0) {
    report.verified = true;  // vacuous below k = 4
    return report;
  }
  for (const auto& s : pk_witness_strings(k, 3)) {
    ++report.strings_checked;
    if (!run_automaton(p, s)) {
      std::string text;
      for (Digit d : s) text += static_cast<char>('0' + d);
      report.failing_string = text;
      return report;
    }
  }
  report.verified = report.dimension >= report.bound - 1e-9 &&
                    report.dimension >= kLog3Two / 13.0 - 1e-9;
  return report;
}

AppendixSubgraphReport pk_appendix_subgraph(unsigned k) {
  AppendixSubgraphReport report;
  report.k = k;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  Presentation p = build_x1(family_member(Family::P, k));
  const std::int64_t top = pow3(k);

  // Cycle of H: 0 -(1)-> 2*3^(k-1) -(1)-> ... -(1)-> 3^k - 1 -(1)-> 3^k
  // -(0)-> 3^(k-1) -(0)-> ... -(0)-> 1 -(0)-> 0, plus loops 0-(0)->0 and
  // 3^k -(1)-> 3^k.
  std::vector<std::int64_t> cycle{0};
  std::int64_t c = 0;
  for (unsigned t = 1; t <= k; ++t) {
    c += 2 * pow3(k - t);
    cycle.push_back(c);
  }
  cycle.push_back(top);
  for (unsigned j = 1; j <= k; ++j) cycle.push_back(pow3(k - j));

  std::vector<Edge> h_edges;
  std::vector<VertexId> h_vertices(cycle.size());
  bool vertices_ok = true;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    auto v = p.find_vertex(TernaryString::from_value(cycle[i]).to_msb_string());
    if (!v) {
      fail("H vertex " + TernaryString::from_value(cycle[i]).to_msb_string() + " missing");
      vertices_ok = false;
      break;
    }
    h_vertices[i] = *v;
  }
  if (vertices_ok) {
    auto has_edge = [&](VertexId u, VertexId v, Digit d) {
      for (const auto& e : p.out(u))
        if (e.to == v && e.digit == d) return true;
      return false;
    };
    const std::size_t len = cycle.size();  // 2k + 2
    for (std::size_t i = 0; i < len; ++i) {
      Digit d = i <= k ? Digit{1} : Digit{0};
      if (!has_edge(h_vertices[i], h_vertices[(i + 1) % len], d))
        fail("missing H cycle edge at position " + std::to_string(i));
    }
    if (!has_edge(h_vertices[0], h_vertices[0], 0)) fail("missing 0-loop at 0");
    if (!has_edge(h_vertices[k + 1], h_vertices[k + 1], 1)) fail("missing 1-loop at 3^k");

    // Double cover: positions i and i + (k+1) mod (2k+2) project to the
    // same vertex of the L_{k+1} graph; out-edges match one-to-one on the
    // underlying digraphs (loops at positions 0 and k+1 cover the loop at
    // the base's initial vertex).
    Presentation base = build_x1(family_member(Family::L, k + 1));
    if (base.vertex_count() * 2 != len) {
      fail("L_(k+1) graph does not have k+1 vertices");
    } else {
      // The base graph is the (k+1)-cycle 0 ->(1) L_k ->(0) ... ->(0) 0
      // with a 0-loop at 0; verify directly.
      auto base_of = [&](std::size_t i) { return i % (k + 1); };
      std::vector<std::int64_t> base_cycle{0};
      for (unsigned j = 1; j <= k; ++j)
        base_cycle.push_back(family_member(Family::L, k + 1 - j));
      bool base_ok = true;
      std::vector<VertexId> base_vertices(k + 1);
      for (std::size_t i = 0; i <= k; ++i) {
        auto bv = base.find_vertex(TernaryString::from_value(base_cycle[i]).to_msb_string());
        if (!bv) {
          fail("base cycle vertex missing in L_(k+1) graph");
          base_ok = false;
          break;
        }
        base_vertices[i] = *bv;
      }
      if (base_ok) {
        auto base_has_edge = [&](VertexId u, VertexId v) {
          for (const auto& e : base.out(u))
            if (e.to == v) return true;
          return false;
        };
        for (std::size_t i = 0; i <= k; ++i)
          if (!base_has_edge(base_vertices[i], base_vertices[(i + 1) % (k + 1)]))
            fail("base cycle edge missing at position " + std::to_string(i));
        if (!base_has_edge(base_vertices[0], base_vertices[0])) fail("base loop missing");
        if (base.edge_count() != k + 2) fail("base graph has unexpected extra edges");
        // Out-degrees match under the projection: positions 0 and k+1 have
        // degree 2 (cycle + loop) over the base's degree-2 vertex 0; all
        // other positions have degree 1 over degree-1 vertices.
        for (std::size_t i = 0; i < len; ++i) {
          std::size_t cover_deg = (i == 0 || i == k + 1) ? 2 : 1;
          std::size_t base_deg = base.out(base_vertices[base_of(i)]).size();
          if (cover_deg != base_deg) {
            fail("cover degree mismatch at position " + std::to_string(i));
            break;
          }
        }
      }
    }
  }

  report.dim_pk = hausdorff_dimension(p).dimension;
  report.dim_lk1 =
      hausdorff_dimension(build_x1(family_member(Family::L, k + 1))).dimension;
  if (report.dim_pk < report.dim_lk1 - 1e-9) fail("dim C(1,P_k) < dim C(1,L_(k+1))");
  report.equality = std::abs(report.dim_pk - report.dim_lk1) <= 5e-7;
  report.ok = report.failures.empty();
  return report;
}

QkReport qk_identity_check(unsigned k) {
  QkReport report;
  report.k = k;
  auto fail = [&](std::string msg) { report.failures.push_back(std::move(msg)); };

  Presentation q = build_x1(family_member(Family::Q, k));
  report.vertices = q.vertex_count();
  report.edges = q.edge_count();
  std::size_t expected_vertices = 1;
  for (unsigned i = 0; i < k; ++i) expected_vertices *= 4;
  if (report.vertices != expected_vertices) fail("vertex count != 4^k");
  if (report.edges != 6 * expected_vertices / 4) fail("edge count != 6*4^(k-1)");

  SccDecomposition scc = scc_decomposition(q);
  report.scc_count = scc.components.size();
  if (report.scc_count != 1) fail("graph is not strongly connected");

  report.dimension = hausdorff_dimension(q).dimension;
  if (std::abs(report.dimension - kLog3Phi) > 1e-9) fail("dimension != log_3 phi");

  auto seven = build_x1(7);
  auto interleaved = interleave(seven, k);
  if (canonical_form(interleaved.presentation) != canonical_form(q))
    fail("not isomorphic to interleave(X(1,7), k)");
  report.ok = report.failures.empty();
  return report;
}

Alpha2Report alpha2_scan(std::int64_t bound, unsigned jobs) {
  if (bound < 4) throw std::invalid_argument("alpha2_scan requires bound >= 4");
  Alpha2Report report;
  report.bound = bound;

  std::mutex mu;
  double max_dim = 0.0;
  std::vector<std::pair<std::int64_t, double>> hits;
  parallel_for(4, bound + 1, jobs, [&](std::int64_t m) {
    if (m % 3 != 1) return;
    double dim = hausdorff_dimension(build_x1(m)).dimension;
    std::lock_guard<std::mutex> lock(mu);
    if (dim > kLog3Phi + 1e-9) report.violations.push_back(m);
    hits.push_back({m, dim});
    max_dim = std::max(max_dim, dim);
  });
  report.max_dimension = max_dim;
  for (auto& [m, dim] : hits)
    if (dim >= max_dim - 1e-9) report.maximizers.push_back(m);
  std::sort(report.maximizers.begin(), report.maximizers.end());
  std::sort(report.violations.begin(), report.violations.end());
  report.ok = report.violations.empty();
  return report;
}

PkTupleReport pk_tuple_intersection(const std::vector<unsigned>& ks) {
  if (ks.empty()) throw std::invalid_argument("tuple must be nonempty");
  PkTupleReport report;
  report.ks = ks;
  std::vector<std::int64_t> multipliers{1};
  unsigned k_max = 0;
  for (unsigned k : ks) {
    multipliers.push_back(family_member(Family::P, k));
    k_max = std::max(k_max, k);
  }
  report.dimension =
      hausdorff_dimension(build_translate_presentation(MultiplierSet(multipliers))).dimension;
  report.dim_l_next = hausdorff_dimension(build_x1(family_member(Family::L, k_max + 1))).dimension;
  report.dim_l_next2 = hausdorff_dimension(build_x1(family_member(Family::L, k_max + 2))).dimension;
  report.ge_l_next = report.dimension >= report.dim_l_next - 1e-9;
  report.ge_l_next2 = report.dimension >= report.dim_l_next2 - 1e-9;
  report.positive = report.dimension > 1e-9;
  return report;
}

}  // namespace triadic
