#include "lieschur/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "lieschur/classifier.hpp"
#include "lieschur/error.hpp"
#include "lieschur/multiplier.hpp"

namespace lieschur {

std::string_view suite_name(Suite s) noexcept {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::Bounds: return "bounds";
    case Suite::Kunneth: return "kunneth";
    case Suite::Quotient: return "quotient";
    case Suite::Classification: return "classification";
  }
  return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) noexcept {
  for (Suite s : {Suite::Formulas, Suite::Bounds, Suite::Kunneth, Suite::Quotient, Suite::Classification})
    if (suite_name(s) == name) return s;
  return std::nullopt;
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const auto& c) { return !c.pass; }));
}

std::string SuiteReport::render() const {
  std::ostringstream os;
  for (const auto& c : cases)
    os << "case=" << c.id << " result=" << (c.pass ? "pass" : "FAIL") << " " << c.detail << "\n";
  os << "suite=" << suite << " cases=" << cases.size() << " failures=" << failures()
     << " status=" << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

namespace {

using Cases = std::vector<CaseResult>;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/// Evaluates fn over items on a few worker threads; output order follows input.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::future<void>> tasks;
  for (std::size_t w = 0; w < workers; ++w)
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < items.size(); i += workers) out[i] = fn(items[i]);
    }));
  for (auto& t : tasks) t.get();
  return out;
}

std::string pad(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

void formulas(const PopulationOptions& opts, Cases& cases) {
  for (long m = 1; m <= opts.max_m; ++m) {
    const auto r = schur_multiplier_dim(heisenberg(m).algebra);
    const long expected = m == 1 ? 2 : 2 * m * m - m - 1;
    cases.push_back({"heisenberg/" + pad(static_cast<std::size_t>(m)),
                     static_cast<long>(r.dim_M) == expected,
                     "H(" + std::to_string(m) + ") dimM=" + std::to_string(r.dim_M) +
                         " expected=" + std::to_string(expected)});
  }
  for (long n = 0; n <= opts.max_n; ++n) {
    const auto r = schur_multiplier_dim(abelian(n).algebra);
    const auto expected = static_cast<std::size_t>(n * (n - 1) / 2);
    cases.push_back({"abelian/" + pad(static_cast<std::size_t>(n)), r.dim_M == expected && r.t == 0,
                     "A(" + std::to_string(n) + ") dimM=" + std::to_string(r.dim_M) + " t=" + std::to_string(r.t)});
  }
  std::vector<CatalogEntry> entries = catalog_entries(opts);
  for (long m = 1; m <= opts.max_m; ++m)
    if (2 * m + 1 <= opts.max_n) entries.push_back(heisenberg_plus_abelian(m, 0));
  entries.push_back(abelian(0));
  for (const auto& e : entries) {
    const auto r = schur_multiplier_dim(e.algebra);
    const bool exact = (ce_d2(e.algebra) * ce_d3(e.algebra)).is_zero();
    bool ok = exact && (!e.expected_dim_M || *e.expected_dim_M == r.dim_M) &&
              (!e.expected_s || *e.expected_s == r.s);
    std::string detail = e.name() + " dimM=" + std::to_string(r.dim_M) + " s=" + std::to_string(r.s) +
                         " exact=" + yes_no(exact);
    if (e.family == Family::HeisenbergPlusAbelian) {
      // Direct Künneth closed form for H(m) ⊕ A(k).
      const long m = e.params[0], k = e.params[1];
      const long hm = m == 1 ? 2 : 2 * m * m - m - 1;
      const long closed = hm + k * (k - 1) / 2 + 2 * m * k;
      ok = ok && closed == static_cast<long>(r.dim_M);
      detail += " closed_form=" + std::to_string(closed);
      if (m >= 2) {
        const long n = static_cast<long>(e.algebra.dim());
        ok = ok && n * (n - 3) / 2 == static_cast<long>(r.dim_M);
        detail += " n(n-3)/2=" + std::to_string(n * (n - 3) / 2);
      }
    }
    cases.push_back({"catalog/" + e.name(), ok, detail});
  }
}

void bounds(const PopulationOptions& opts, Cases& cases) {
  const auto population = generate_population(opts);
  auto results = parallel_map(population, [](const PopulationCase& c) {
    const Fingerprint fp = fingerprint(c.algebra);
    if (!fp.nilpotent()) return CaseResult{"population/" + c.id, false, c.origin + " not nilpotent"};
    const DefectBoundsCheck b = check_defect_bounds(c.algebra);
    const LemmaGateCheck gate = lemma_l1_gate(fp);
    const bool t_zero_iff_abelian = (fp.t == 0) == fp.abelian;
    const bool ok = b.holds && gate.holds && t_zero_iff_abelian;
    return CaseResult{"population/" + c.id, ok,
                      "origin=\"" + c.origin + "\" " + b.describe() + " l1_gate=" + yes_no(gate.holds) +
                          " t0_iff_abelian=" + yes_no(t_zero_iff_abelian)};
  });
  cases.insert(cases.end(), results.begin(), results.end());
}

void kunneth(const PopulationOptions& opts, Cases& cases) {
  std::vector<CatalogEntry> blocks;
  for (long k = 0; k <= opts.max_k; ++k) blocks.push_back(abelian(k));
  for (long m = 1; m <= opts.max_m; ++m) blocks.push_back(heisenberg(m));
  blocks.push_back(l_3_4_1_4());
  blocks.push_back(l_4_5_2_4());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a; b < blocks.size(); ++b) pairs.emplace_back(a, b);
  auto results = parallel_map(pairs, [&](const std::pair<std::size_t, std::size_t>& p) {
    const auto& [a, b] = p;
    const KunnethCheck c = check_kunneth(blocks[a].algebra, blocks[b].algebra);
    return CaseResult{"pair/" + blocks[a].name() + "+" + blocks[b].name(), c.holds,
                      "lhs=" + std::to_string(c.lhs) + " rhs=" + std::to_string(c.dim_M1) + "+" +
                          std::to_string(c.dim_M2) + "+" + std::to_string(c.tensor) + "=" +
                          std::to_string(c.rhs())};
  });
  cases.insert(cases.end(), results.begin(), results.end());
}

void quotient_bound(const PopulationOptions& opts, Cases& cases) {
  std::vector<CatalogEntry> entries = catalog_entries(opts);
  entries.push_back(abelian(0));
  SeededGenerator gen(opts.seed);
  struct Job {
    std::string id;
    const LieAlgebra* L;
    Subspace K;
  };
  std::vector<Job> jobs;
  for (const auto& e : entries) {
    std::size_t idx = 0;
    for (auto& K : coordinate_central_subspaces(e.algebra))
      jobs.push_back({e.name() + "/coord/" + pad(idx++), &e.algebra, std::move(K)});
    for (std::size_t r = 0; r < 20; ++r)
      jobs.push_back({e.name() + "/random/" + pad(r), &e.algebra, random_central_subspace(e.algebra, gen)});
  }
  auto results = parallel_map(jobs, [](const Job& j) {
    const QuotientBoundCheck c = check_quotient_bound(*j.L, j.K);
    return CaseResult{j.id, c.holds,
                      "dimK=" + std::to_string(j.K.dim()) + " lhs=" + std::to_string(c.dim_M_L) + "+" +
                          std::to_string(c.dim_L2_cap_K) + " rhs=" + std::to_string(c.dim_M_H) + "+" +
                          std::to_string(c.dim_M_K) + "+" + std::to_string(c.tensor) + " (" +
                          std::to_string(c.lhs()) + "<=" + std::to_string(c.rhs()) + ")"};
  });
  cases.insert(cases.end(), results.begin(), results.end());
}

std::string describe(const ClassificationResult& r) {
  std::string out = std::string("status=") + to_string(r.status);
  if (r.family) {
    out += " family=" + std::string(family_id(*r.family));
    for (std::size_t i = 0; i < r.params.size(); ++i) out += (i ? "," : " params=") + std::to_string(r.params[i]);
  }
  return out + " s=" + std::to_string(r.s_value);
}

bool matches(const ClassificationResult& r, Family f, const std::vector<long>& params, long s) {
  return r.status == ClassificationStatus::Classified && r.family == f && r.params == params && r.s_value == s;
}

void classification(const PopulationOptions& opts, Cases& cases) {
  SeededGenerator gen(opts.seed);

  struct Expectation {
    CatalogEntry entry;
    Family family;
    std::vector<long> params;
    long s;
  };
  std::vector<Expectation> expectations;
  for (long n = 3; n <= opts.max_n; ++n)
    expectations.push_back({heisenberg_plus_abelian(1, n - 3), Family::HeisenbergPlusAbelian, {1, n - 3}, 0});
  expectations.push_back({l_4_5_2_4(), Family::L4524, {}, 1});
  expectations.push_back({l_3_4_1_4(), Family::L3414, {}, 2});
  expectations.push_back({l4524_plus_a1(), Family::L4524PlusA1, {}, 2});
  for (long m = 2; m <= opts.max_m; ++m)
    for (long k = 0; k <= opts.max_k; ++k)
      expectations.push_back({heisenberg_plus_abelian(m, k), Family::HeisenbergPlusAbelian, {m, k}, 2});

  struct Job {
    std::string id;
    LieAlgebra L;
    const Expectation* expect;
  };
  std::vector<Job> jobs;
  for (const auto& e : expectations) {
    jobs.push_back({"family/" + e.entry.name() + "/base", e.entry.algebra, &e});
    for (std::size_t r = 0; r < 10; ++r)
      jobs.push_back({"family/" + e.entry.name() + "/basis-change/" + pad(r),
                      change_of_basis(e.entry.algebra, random_unimodular(e.entry.algebra.dim(), gen)), &e});
  }
  auto family_results = parallel_map(jobs, [](const Job& j) {
    const ClassificationResult r = classify(j.L);
    return CaseResult{j.id, matches(r, j.expect->family, j.expect->params, j.expect->s), describe(r)};
  });
  cases.insert(cases.end(), family_results.begin(), family_results.end());

  // Static disjointness of the s = 2 pin table.
  const auto& pins = s2_family_pins();
  for (std::size_t a = 0; a < pins.size(); ++a)
    for (std::size_t b = a + 1; b < pins.size(); ++b) {
      const bool n_overlap = !pins[a].n || !pins[b].n || *pins[a].n == *pins[b].n;
      const bool disjoint = pins[a].derived_dim != pins[b].derived_dim ||
                            pins[a].nilpotency_class != pins[b].nilpotency_class || !n_overlap;
      cases.push_back({"disjoint/" + std::string(family_id(pins[a].family)) + "-" +
                           std::string(family_id(pins[b].family)),
                       disjoint, "pins distinguishable=" + yes_no(disjoint)});
    }

  // Every non-abelian member with s ≤ 2 must land in its family.
  const auto population = generate_population(opts);
  auto pop_results = parallel_map(population, [](const PopulationCase& c) {
    const Fingerprint fp = fingerprint(c.algebra);
    const std::string id = "population/" + c.id;
    if (!fp.nilpotent()) return CaseResult{id, false, "origin=\"" + c.origin + "\" not nilpotent"};
    if (fp.abelian) return CaseResult{id, fp.t == 0, "origin=\"" + c.origin + "\" abelian t=" + std::to_string(fp.t)};
    const ClassificationResult r = classify(fp);
    bool ok = r.status != ClassificationStatus::TheoremViolation;
    if (fp.s == 0) ok = ok && r.family == Family::HeisenbergPlusAbelian && r.params.at(0) == 1;
    return CaseResult{id, ok, "origin=\"" + c.origin + "\" " + describe(r) + " " + fp.describe()};
  });
  cases.insert(cases.end(), pop_results.begin(), pop_results.end());
}

}  // namespace

SuiteReport run_suite(Suite suite, const PopulationOptions& opts) {
  if (opts.max_m < 1 || opts.max_k < 0 || opts.max_n < 0)
    throw Error(ErrorKind::InvalidArgument, "need max-m >= 1, max-k >= 0, max-n >= 0");
  SuiteReport report{std::string(suite_name(suite)), {}};
  switch (suite) {
    case Suite::Formulas: formulas(opts, report.cases); break;
    case Suite::Bounds: bounds(opts, report.cases); break;
    case Suite::Kunneth: kunneth(opts, report.cases); break;
    case Suite::Quotient: quotient_bound(opts, report.cases); break;
    case Suite::Classification: classification(opts, report.cases); break;
  }
  std::stable_sort(report.cases.begin(), report.cases.end(),
                   [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return report;
}

}  // namespace lieschur
