// Acceptance suite: runs every top-level requirement at its stated
// tolerance and prints one PASS/FAIL line per criterion. Exit status is
// the number of failed criteria.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "adorn/adorn.hpp"
#include "adorn/verify.hpp"

using namespace adorn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- shared helpers ---------------------------------------------------

std::vector<const FiniteGroup*> catalog_models(detail::ModelCache& cache,
                                               std::size_t max_order_filter) {
  return cache.models_up_to(max_order_filter);
}

Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub.at(i - 1, cc++) = m.at(i, c);
    }
    Int term = m.at(0, j) * cofactor_det(sub);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

std::uint32_t act_point(const std::vector<Permutation>& gens, std::uint32_t point,
                        const Word& w) {
  for (const Letter& l : w.expanded()) {
    const Permutation& p = gens[static_cast<std::size_t>(l.gen)];
    point = l.exp > 0 ? p(point) : p.inverse()(point);
  }
  return point;
}

struct StabilizerWords {
  std::vector<Word> words;
  std::size_t orbit_size = 0;
};

StabilizerWords stabilizer_schreier_words(const std::vector<Permutation>& images) {
  const std::size_t degree = images[0].degree();
  std::vector<Word> rep(degree);
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> queue = {0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::uint32_t p = queue[head];
    for (std::size_t g = 0; g < images.size(); ++g)
      for (long long sign : {1LL, -1LL}) {
        std::uint32_t q = sign > 0 ? images[g](p) : images[g].inverse()(p);
        if (seen[q]) continue;
        seen[q] = true;
        rep[q] = rep[p] * Word::generator(static_cast<int>(g), sign);
        queue.push_back(q);
      }
  }
  StabilizerWords out;
  out.orbit_size = queue.size();
  for (std::uint32_t p : queue)
    for (std::size_t g = 0; g < images.size(); ++g) {
      Word s = rep[p] * Word::generator(static_cast<int>(g)) * rep[images[g](p)].inverse();
      if (!s.empty()) out.words.push_back(s);
    }
  return out;
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(ADORN_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  CliRun result;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
    result.output.append(buffer.data(), n);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

// --- criteria ----------------------------------------------------------

Outcome criterion_symmetric_doa(detail::ModelCache& cache, double time_limit) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  std::ostringstream detail;
  for (int n : {5, 6, 7}) {
    DoaResult r = doa_finite(cache.get("symmetric" + std::to_string(n)));
    detail << "S" << n << "=" << r.doa << " ";
    out.pass = out.pass && r.doa == 1;
  }
  double elapsed = seconds_since(start);
  out.pass = out.pass && elapsed < time_limit;
  detail << "(" << elapsed << "s)";
  out.detail = detail.str();
  return out;
}

Outcome criterion_a5_perfect(detail::ModelCache& cache) {
  auto start = std::chrono::steady_clock::now();
  const FiniteGroup& a5 = cache.get("alternating5");
  DoaResult r = doa_finite(a5);
  bool perfect = is_perfect(a5);
  double elapsed = seconds_since(start);
  Outcome out;
  out.pass = r.doa == 0 && perfect && elapsed < 1.0;
  out.detail = "doa=" + std::to_string(r.doa) + " perfect=" + (perfect ? "yes" : "no");
  return out;
}

Outcome criterion_small_solvable(detail::ModelCache& cache) {
  auto start = std::chrono::steady_clock::now();
  std::size_t s3 = doa_finite(cache.get("symmetric3")).doa;
  std::size_t s4 = doa_finite(cache.get("symmetric4")).doa;
  std::size_t q8 = doa_finite(cache.get("quaternion8")).doa;
  double elapsed = seconds_since(start);
  Outcome out;
  out.pass = s3 == 2 && s4 == 3 && q8 == 2 && elapsed < 1.0;
  out.detail = "S3=" + std::to_string(s3) + " S4=" + std::to_string(s4) +
               " Q8=" + std::to_string(q8);
  return out;
}

Outcome criterion_product_law(detail::ModelCache& cache) {
  std::vector<const FiniteGroup*> models = catalog_models(cache, 50'000);
  std::mt19937 rng(77001);
  Outcome out;
  int checked = 0, violations = 0;
  while (checked < 50) {
    const FiniteGroup& a = *models[rng() % models.size()];
    const FiniteGroup& b = *models[rng() % models.size()];
    if (a.order() * b.order() > 100'000) continue;
    ++checked;
    std::size_t expected = std::max(doa_finite(a).doa, doa_finite(b).doa);
    if (doa_finite(direct_product(a, b)).doa != expected) ++violations;
  }
  out.pass = violations == 0;
  out.detail = std::to_string(checked) + " pairs, " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_quotient_monotone(detail::ModelCache& cache) {
  std::vector<const FiniteGroup*> models = catalog_models(cache, 2000);
  std::mt19937 rng(77002);
  Outcome out;
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteGroup& g = *models[rng() % models.size()];
    FiniteGroup n = normal_closure(g, {rng() % g.order()});
    if (doa_finite(quotient(g, n)).doa > doa_finite(g).doa) ++violations;
  }
  out.pass = violations == 0;
  out.detail = "100 pairs, " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_perfect_by_perfect(detail::ModelCache& cache) {
  const char* perfect_names[] = {"alternating5", "alternating6", "alternating7", "sl2_5",
                                 "sl2_7"};
  Outcome out;
  int configurations = 0, violations = 0;
  for (const char* an : perfect_names)
    for (const char* bn : perfect_names) {
      const FiniteGroup& a = cache.get(an);
      const FiniteGroup& b = cache.get(bn);
      if (a.order() * b.order() > kDefaultMaxOrder) continue;
      ++configurations;
      FiniteGroup g = direct_product(a, b);
      std::vector<std::size_t> left;
      for (std::size_t k = 0; k < a.generator_count(); ++k)
        left.push_back(g.generator_element_index(k));
      FiniteGroup n = subgroup_generated(g, left);
      bool ok = is_perfect(n) && is_perfect(quotient(g, n)) && is_perfect(g);
      if (!ok) ++violations;
    }
  out.pass = violations == 0 && configurations > 0;
  out.detail = std::to_string(configurations) + " configurations, " +
               std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_pipeline_vs_oracle(detail::ModelCache& cache, double time_limit) {
  auto start = std::chrono::steady_clock::now();
  Outcome out;
  int groups = 0, violations = 0;
  for (const CatalogEntry& e : Catalog::instance().entries()) {
    if (!e.presentation || !e.has_model()) continue;
    const FiniteGroup& model = cache.get(e.name);
    if (model.order() > 200) continue;
    ++groups;
    ExploreResult res = explore_derived_series(*e.presentation);
    const auto* a = std::get_if<Adorable>(&res.verdict);
    if (a == nullptr) {
      ++violations;
      continue;
    }
    std::vector<FiniteGroup> series = derived_series(model);
    bool ok = static_cast<std::size_t>(a->doa) == series.size() - 1 &&
              res.trace.size() == series.size();
    if (ok)
      for (std::size_t i = 0; i + 1 < series.size(); ++i)
        ok = ok && res.trace[i].coset_index ==
                       Int(series[i].order()) / Int(series[i + 1].order());
    if (!ok) ++violations;
  }
  double elapsed = seconds_since(start);
  out.pass = groups >= 10 && violations == 0 && elapsed < time_limit;
  out.detail = std::to_string(groups) + " presented groups, " + std::to_string(violations) +
               " mismatches (" + std::to_string(elapsed) + "s)";
  return out;
}

Outcome criterion_snf_self_certifying() {
  std::mt19937 rng(77008);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  Outcome out;
  int violations = 0;
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    SmithForm s = smith_normal_form(m);
    bool ok = s.left * m * s.right == s.diagonal_matrix();
    Int du = cofactor_det(s.left), dv = cofactor_det(s.right);
    ok = ok && (du == 1 || du == -1) && (dv == 1 || dv == -1);
    for (std::size_t i = 0; ok && i < s.diag.size(); ++i) {
      ok = s.diag[i] > 0;
      if (i + 1 < s.diag.size()) ok = ok && s.diag[i + 1] % s.diag[i] == 0;
    }
    if (!ok) ++violations;
  }
  out.pass = violations == 0;
  out.detail = "500 matrices, " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_nielsen_schreier() {
  std::mt19937 rng(77009);
  Outcome out;
  int checked = 0, violations = 0;
  while (checked < 30) {
    std::size_t rank = 1 + rng() % 3;
    std::size_t degree = 2 + rng() % 7;
    std::vector<Permutation> images;
    for (std::size_t g = 0; g < rank; ++g) {
      std::vector<std::uint32_t> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
      std::shuffle(img.begin(), img.end(), rng);
      images.emplace_back(std::move(img));
    }
    StabilizerWords sw = stabilizer_schreier_words(images);
    ++checked;
    std::vector<std::string> names;
    for (std::size_t g = 0; g < rank; ++g) names.push_back("g" + std::to_string(g));
    CosetTable t = todd_coxeter(Presentation(names, {}), sw.words);
    Presentation sub = reidemeister_schreier(t);
    bool ok = t.index() == sw.orbit_size &&
              sub.generator_count() == sw.orbit_size * (rank - 1) + 1 &&
              sub.relators().empty();
    if (!ok) ++violations;
  }
  out.pass = violations == 0;
  out.detail = "30 subgroups, " + std::to_string(violations) + " violations";
  return out;
}

Outcome criterion_alexander_suite() {
  auto start = std::chrono::steady_clock::now();
  const Catalog& catalog = Catalog::instance();
  Outcome out;
  std::ostringstream detail;

  Verdict unknot = knot_adorability_verdict(*catalog.get("unknot").presentation);
  AlexanderData unknot_data = alexander_polynomial(*catalog.get("unknot").presentation);
  out.pass = out.pass && std::holds_alternative<Adorable>(unknot) &&
             unknot_data.polynomial.is_one();

  AlexanderData tre = alexander_polynomial(*catalog.get("trefoil").presentation);
  Verdict tre_verdict = knot_adorability_verdict(*catalog.get("trefoil").presentation);
  Int tre_m1 = tre.polynomial.evaluate(-1);
  out.pass = out.pass && tre.polynomial.to_string() == "t^2 - t + 1" &&
             std::holds_alternative<NotAdorable>(tre_verdict) &&
             (tre_m1 < 0 ? -tre_m1 : tre_m1) == 3 &&
             h1prime_rank(*catalog.get("trefoil").presentation) == 2 && tre.degree == 2;

  AlexanderData fig = alexander_polynomial(*catalog.get("figure_eight").presentation);
  Verdict fig_verdict = knot_adorability_verdict(*catalog.get("figure_eight").presentation);
  Int fig_m1 = fig.polynomial.evaluate(-1);
  out.pass = out.pass && fig.polynomial.to_string() == "t^2 - 3*t + 1" &&
             std::holds_alternative<NotAdorable>(fig_verdict) &&
             (fig_m1 < 0 ? -fig_m1 : fig_m1) == 5;

  double elapsed = seconds_since(start);
  out.pass = out.pass && elapsed < 1.0;
  detail << "trefoil " << tre.polynomial.to_string() << " |D(-1)|=3, figure-eight "
         << fig.polynomial.to_string() << " |D(-1)|=5";
  out.detail = detail.str();
  return out;
}

Outcome criterion_h2_rank() {
  Outcome out;
  std::size_t r3 = h2_rank_abelian({3, {}});
  std::size_t r5 = h2_rank_abelian({5, {}});
  out.pass = r3 == 3 && r5 == 10;
  out.detail = "rank 3 -> " + std::to_string(r3) + ", rank 5 -> " + std::to_string(r5);
  return out;
}

Outcome criterion_verify_determinism(double time_limit) {
  auto start = std::chrono::steady_clock::now();
  CliRun first = run_cli("verify --format json");
  double first_elapsed = seconds_since(start);
  CliRun second = run_cli("verify --format json");
  Outcome out;
  out.pass = first.exit_code == 0 && second.exit_code == 0 && first.output == second.output &&
             !first.output.empty() && first_elapsed < time_limit;
  out.detail = std::string(first.output == second.output ? "byte-identical" : "OUTPUT DIFFERS") +
               ", exit " + std::to_string(first.exit_code) + " (" +
               std::to_string(first_elapsed) + "s)";
  return out;
}

}  // namespace

int main() {
  detail::ModelCache cache;
  struct Row {
    int number;
    std::string description;
    Outcome outcome;
  };
  std::vector<Row> rows;

  rows.push_back({1, "doa(S5)=doa(S6)=doa(S7)=1 under 10s",
                  criterion_symmetric_doa(cache, 10.0)});
  rows.push_back({2, "doa(A5)=0 and A5 perfect under 1s", criterion_a5_perfect(cache)});
  rows.push_back({3, "doa(S3)=2, doa(S4)=3, doa(Q8)=2 under 1s",
                  criterion_small_solvable(cache)});
  rows.push_back({4, "doa(GxH)=max over 50 random pairs", criterion_product_law(cache)});
  rows.push_back({5, "doa(G/N)<=doa(G) over 100 random pairs",
                  criterion_quotient_monotone(cache)});
  rows.push_back({6, "perfect normal + perfect quotient force perfect",
                  criterion_perfect_by_perfect(cache)});
  rows.push_back({7, "presented pipeline matches finite oracle under 60s",
                  criterion_pipeline_vs_oracle(cache, 60.0)});
  rows.push_back({8, "Smith form self-certifies on 500 random matrices",
                  criterion_snf_self_certifying()});
  rows.push_back({9, "Nielsen-Schreier rank k(n-1)+1 through the rewriting pipeline",
                  criterion_nielsen_schreier()});
  rows.push_back({10, "Alexander suite: unknot/trefoil/figure-eight exact",
                  criterion_alexander_suite()});
  rows.push_back({11, "H2 rank formula on ranks 3 and 5", criterion_h2_rank()});
  rows.push_back({12, "verify --format json byte-identical twice under 60s",
                  criterion_verify_determinism(60.0)});

  int failed = 0;
  for (const Row& row : rows) {
    if (!row.outcome.pass) ++failed;
    std::cout << "criterion " << row.number << ": " << (row.outcome.pass ? "PASS" : "FAIL")
              << " - " << row.description << " [" << row.outcome.detail << "]\n";
  }
  std::cout << (failed == 0 ? "ACCEPTANCE: all criteria passed\n"
                            : "ACCEPTANCE: " + std::to_string(failed) + " criteria FAILED\n");
  return failed;
}
