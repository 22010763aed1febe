#include <atomic>
#include <mutex>
#include <thread>

#include "girr/acceptance.hpp"
#include "girr/number_theory.hpp"
#include "girr/reference_groups.hpp"

namespace girr {

namespace {

namespace ref = reference;

template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

PermGroup named(PermGroup g, const std::string& name) {
  g.set_name(name);
  return g;
}

std::function<PermGroup()> from_case(CaseTag tag, std::int64_t p, int n, std::int64_t d, int height = 1) {
  return [=] { return construct_case({tag, p, n, d, height}); };
}

CorpusEntry nilpotent(std::string name, std::function<PermGroup()> build) {
  return {std::move(name), std::move(build), Verdict::NilpotentEmpty, std::nullopt, 0, 0, 0};
}

CorpusEntry positive(std::string name, std::function<PermGroup()> build, CaseTag tag, std::int64_t p, int n,
                     std::int64_t d) {
  return {std::move(name), std::move(build), Verdict::SingleGaloisClass, tag, p, n, d};
}

CorpusEntry negative(std::string name, std::function<PermGroup()> build) {
  return {std::move(name), std::move(build), Verdict::NotSingleClass, std::nullopt, 0, 0, 0};
}

std::vector<FpMatrix> one(FpMatrix m) { return {std::move(m)}; }

}  // namespace

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back(nilpotent("C1", [] { return ref::cyclic(1); }));
  c.push_back(nilpotent("C6", [] { return ref::cyclic(6); }));
  c.push_back(nilpotent("C12", [] { return ref::cyclic(12); }));
  c.push_back(nilpotent("D8", [] { return ref::dihedral(4); }));
  c.push_back(nilpotent("Q8", [] { return ref::quaternion8(); }));
  c.push_back(nilpotent("Heisenberg(3)", [] { return ref::heisenberg(3); }));
  c.push_back(nilpotent("C3xQ8", [] { return ref::direct_product(ref::cyclic(3), ref::quaternion8()); }));

  c.push_back(positive("S3", [] { return ref::symmetric(3); }, CaseTag::a1, 3, 1, 1));
  c.push_back(positive("C7:C3", from_case(CaseTag::a1, 7, 1, 2), CaseTag::a1, 7, 1, 2));
  c.push_back(positive("D10", [] { return ref::dihedral(5); }, CaseTag::a1, 5, 1, 2));
  c.push_back(positive("A4", [] { return ref::alternating4(); }, CaseTag::a1, 2, 2, 1));
  c.push_back(positive("D14", [] { return affine_semidirect(7, 1, one(FpMatrix(7, {{6}}))); }, CaseTag::a1, 7, 1, 3));
  c.push_back(positive("C5:C4", [] { return affine_semidirect(5, 1, one(FpMatrix(5, {{2}}))); }, CaseTag::a1, 5, 1, 1));
  c.push_back(positive("3^2:Q8", from_case(CaseTag::a2, 3, 2, 1), CaseTag::a2, 3, 2, 1));
  c.push_back(positive("V4:C9", from_case(CaseTag::a3, 2, 2, 1, 2), CaseTag::a3, 2, 2, 1));
  c.push_back(positive("Heisenberg(3):C8", from_case(CaseTag::a4, 3, 2, 1), CaseTag::a4, 3, 2, 1));
  c.push_back(positive("SL(2,3)", [] { return ref::sl23(); }, CaseTag::a5, 2, 2, 1));
  c.push_back(positive("Heisenberg(3):Q8", from_case(CaseTag::a6, 3, 2, 1), CaseTag::a6, 3, 2, 1));
  c.push_back(positive("Q8:C9", from_case(CaseTag::a7, 2, 2, 1, 2), CaseTag::a7, 2, 2, 1));

  c.push_back(negative("S4", [] { return ref::symmetric(4); }));
  c.push_back(negative("3^2:C4", [] { return affine_semidirect(3, 2, one(FpMatrix(3, {{0, 2}, {1, 0}}))); }));
  c.push_back(negative("S3xC3", [] { return ref::direct_product(ref::symmetric(3), ref::cyclic(3)); }));
  c.push_back(negative("A4xC2", [] { return ref::direct_product(ref::alternating4(), ref::cyclic(2)); }));
  c.push_back(negative("GL(2,3)", [] {
    return matrix_group_permutations(
        std::vector<FpMatrix>{FpMatrix(3, {{2, 0}, {0, 1}}), FpMatrix(3, {{1, 1}, {0, 1}}), FpMatrix(3, {{1, 0}, {1, 1}})});
  }));
  c.push_back(negative("S5", [] { return ref::symmetric(5); }));

  for (auto& e : c) {
    e.build = [inner = std::move(e.build), name = e.name] { return named(inner(), name); };
  }
  return c;
}

std::vector<CorpusEntry> statement_gap_probes() {
  std::vector<CorpusEntry> c;
  c.push_back(negative("S3xC2", [] { return ref::direct_product(ref::symmetric(3), ref::cyclic(2)); }));
  c.push_back(negative("C3:C4", [] { return affine_semidirect(3, 1, one(FpMatrix(3, {{2}})), 2); }));
  c.push_back(negative("S3xC4", [] { return ref::direct_product(ref::symmetric(3), ref::cyclic(4)); }));
  c.push_back(negative("D10xC2", [] { return ref::direct_product(ref::dihedral(5), ref::cyclic(2)); }));
  for (auto& e : c) {
    e.build = [inner = std::move(e.build), name = e.name] { return named(inner(), name); };
  }
  return c;
}

std::vector<CorpusResult> run_corpus(const std::vector<CorpusEntry>& entries, std::uint64_t seed, int parallelism) {
  std::vector<CorpusResult> out(entries.size());
  parallel_for(entries.size(), parallelism, [&](std::size_t i) {
    out[i].name = entries[i].name;
    out[i].group = entries[i].build();
    const auto t = character_table(out[i].group, seed);
    out[i].report = analyze_structure(out[i].group, t, seed);
  });
  return out;
}

std::vector<CaseParams> sweep_points(const SweepOptions& o) {
  std::vector<CaseParams> points;
  for (CaseTag tag : o.tags) {
    const bool central = tag == CaseTag::a3 || tag == CaseTag::a7;
    const bool affine_n = tag == CaseTag::a1 || tag == CaseTag::a3;
    for (std::int64_t p : o.primes) {
      for (int n = affine_n ? 1 : 2; checked_pow(p, n) <= o.max_field; ++n) {
        for (std::int64_t d : divisors(p - 1)) {
          for (int h = central ? 2 : 1;; ++h) {
            const CaseParams params{tag, p, n, d, h};
            std::int64_t order = 0;
            try {
              order = case_order(params);
            } catch (const ParamsInvalid&) {
              if (h == (central ? 2 : 1)) points.push_back(params);
              break;
            }
            if (order > o.max_order) break;
            points.push_back(params);
            if (!central) break;
          }
        }
        if (!affine_n) break;
      }
    }
  }
  return points;
}

std::vector<SweepRecord> run_sweep(const SweepOptions& o) {
  const auto points = sweep_points(o);
  std::vector<SweepRecord> out(points.size());
  parallel_for(points.size(), o.parallelism, [&](std::size_t i) {
    SweepRecord& r = out[i];
    r.params = points[i];
    try {
      r.order = case_order(r.params);
    } catch (const ParamsInvalid& e) {
      r.status = "PARAMS-INVALID";
      r.reason = e.what();
      return;
    }
    try {
      validate_case(r.params);
      r.status = "ok";
    } catch (const ParamsInvalid& e) {
      r.status = "PARAMS-INVALID";
      r.reason = e.what();
    }
    PermGroup g;
    try {
      g = build_case(r.params);
    } catch (const std::exception& e) {
      r.status = "PARAMS-INVALID";
      r.reason = r.reason.value_or(std::string("PARAMS-INVALID: ") + e.what());
      return;
    }
    const auto t = character_table(g, o.seed);
    r.report = analyze_structure(g, t, o.seed);
  });
  return out;
}

Json params_to_json(const CaseParams& c) {
  return {{"tag", to_string(c.tag)}, {"p", c.p}, {"n", c.n}, {"d", c.d}, {"height", c.height}};
}

Json sweep_to_json(const std::vector<SweepRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    out.push_back({{"params", params_to_json(r.params)},
                   {"order", r.order},
                   {"status", r.status},
                   {"reason", r.reason ? Json(*r.reason) : Json(nullptr)},
                   {"report", r.report ? report_to_json(*r.report) : Json(nullptr)}});
  }
  return out;
}

}  // namespace girr
