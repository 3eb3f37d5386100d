// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "postlie/mateq.hpp"
#include "postlie/random.hpp"
#include "postlie/sl2.hpp"
#include "postlie/so3c.hpp"
#include "postlie/solver.hpp"
#include "postlie/symcanon.hpp"

using namespace postlie;

namespace {

// pinned tolerances
constexpr double kCongruateResidual = 1e-9;
constexpr double kClassifyTol = 1e-6;
constexpr double kRigidityResidual = 1e-10;
constexpr double kRigidityEntry = 1e-8;
constexpr double kReductionResidual = 1e-10;
constexpr double kRank1Trace = 1e-8;
constexpr double kConvergedFraction = 0.60;
constexpr int kDistinctK = 20;
constexpr double kDistinctKGap = 1e-3;
constexpr double kOrthogonality = 1e-9;
constexpr double kGradientRelative = 1e-5;
constexpr double kGradientStep = 1e-6;
constexpr std::uint64_t kSearchSeed = 20240607;

struct Outcome {
  bool pass;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<FamilyTag> tags() {
  return {FamilyTag::zero(),
          FamilyTag::minus_identity(),
          FamilyTag::trace_minus2(),
          FamilyTag::k_family(GaussianRational(0)),
          FamilyTag::k_family(GaussianRational(-1)),
          FamilyTag::k_family(GaussianRational(1)),
          FamilyTag::k_family(GaussianRational::i()),
          FamilyTag::k_family(GaussianRational(5)),
          FamilyTag::nonsym_rank1()};
}

GaussianRational random_gaussian(Rng& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 4);
  const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
  return GaussianRational::fraction(a, b, c, d);
}

/// Exact rank as the size of the largest nonvanishing minor.
int minor_rank(const Mat3q& m) {
  if (!det(m).is_zero()) return 3;
  for (int r0 = 0; r0 < 3; ++r0)
    for (int r1 = r0 + 1; r1 < 3; ++r1)
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = c0 + 1; c1 < 3; ++c1)
          if (!(m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0)).is_zero()) return 2;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (!m(r, c).is_zero()) return 1;
  return 0;
}

// ---------------------------------------------------------------------------

Outcome exact_representatives() {
  int bad = 0;
  for (const auto& t : tags())
    if (!(mateq::residual(mateq::representative(t)) == Mat3q::zero())) ++bad;
  return {bad == 0, std::to_string(tags().size()) + " representatives, " + std::to_string(bad) + " nonzero residuals"};
}

Outcome axiom_equivalence() {
  int solution_failures = 0, solutions = 0;
  for (const auto& t : tags()) {
    const Mat3q rep = mateq::representative(t);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Mat3q tm = so3c::random_so3_exact(1000 + s).t;
      const Mat3q a = transpose(tm) * rep * tm;
      ++solutions;
      if (!sl2::check_postlie(sl2::circ_from_matrix(a), 0.0).empty() || !sl2::check_rota_baxter(a, 0.0).empty())
        ++solution_failures;
    }
  }
  Rng rng(77);
  int non_solutions = 0, missed = 0;
  while (non_solutions < 100) {
    Mat3q a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = random_gaussian(rng, 3);
    if (frobenius_norm(mateq::residual(a)) <= 1e-3) continue;
    ++non_solutions;
    if (sl2::check_postlie(sl2::circ_from_matrix(a), 0.0).empty()) ++missed;
  }
  return {solution_failures == 0 && missed == 0,
          std::to_string(solutions) + " congruates (" + std::to_string(solution_failures) + " flagged), " +
              std::to_string(non_solutions) + " non-solutions (" + std::to_string(missed) + " accepted)"};
}

Outcome congruence_invariance() {
  int residual_failures = 0, tag_failures = 0, cases = 0;
  double worst = 0.0;
  for (const auto& t : tags()) {
    const Mat3d rep = to_numeric(mateq::representative(t));
    const FamilyTag before = mateq::classify(rep, {.tol = kClassifyTol}).tag;
    for (std::uint64_t s = 0; s < 100; ++s) {
      const Mat3d a = mateq::congruate(rep, so3c::random_so3(5000 + s).t);
      ++cases;
      const double r = frobenius_norm(mateq::residual(a));
      worst = std::max(worst, r);
      if (r >= kCongruateResidual) ++residual_failures;
      try {
        if (!mateq::classify(a, {.tol = kClassifyTol}).tag.equals(before, 1e-6)) ++tag_failures;
      } catch (const Error&) {
        ++tag_failures;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d congruates, max residual %.2e, %d residual failures, %d tag changes", cases, worst,
                residual_failures, tag_failures);
  return {residual_failures == 0 && tag_failures == 0, buf};
}

Outcome classifier_separation() {
  // prerequisite: the branch invariants agree with a brute-force exact rank oracle
  const Mat3q half = Mat3q::diag(GaussianRational::fraction(1, 2), GaussianRational::fraction(1, 2),
                                 GaussianRational::fraction(1, 2));
  int oracle_failures = 0;
  struct Pair {
    FamilyTag tag;
    int gram_rank, sym_rank;  // -1 when not applicable
  };
  const std::vector<Pair> expected{{FamilyTag::trace_minus2(), 2, -1},
                                   {FamilyTag::k_family(GaussianRational(-1)), 1, -1},
                                   {FamilyTag::k_family(GaussianRational(0)), -1, 1},
                                   {FamilyTag::nonsym_rank1(), -1, 2}};
  for (const auto& p : expected) {
    const Mat3q rep = mateq::representative(p.tag);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Mat3q tm = so3c::random_so3_exact(300 + s).t;
      const Mat3q a = transpose(tm) * rep * tm;
      if (p.gram_rank >= 0 && minor_rank(transpose(a) * a) != p.gram_rank) ++oracle_failures;
      if (p.sym_rank >= 0 && minor_rank(sym_part(a) + half) != p.sym_rank) ++oracle_failures;
    }
  }

  int misclassified = 0, total = 0;
  for (const auto& p : expected) {
    const Mat3d rep = to_numeric(mateq::representative(p.tag));
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Mat3d a = mateq::congruate(rep, so3c::random_so3(7000 + s).t);
      ++total;
      try {
        if (!mateq::classify(a, {.tol = kClassifyTol}).tag.equals(p.tag, 1e-6)) ++misclassified;
      } catch (const Error&) {
        ++misclassified;
      }
    }
  }
  return {oracle_failures == 0 && misclassified == 0,
          "oracle mismatches " + std::to_string(oracle_failures) + ", " + std::to_string(misclassified) + "/" +
              std::to_string(total) + " misclassified"};
}

struct SearchRun {
  SurveyReport report;
  std::vector<SolveResult> results;
  double seconds = 0.0;
};

const SearchRun& search_run() {
  static const SearchRun run = [] {
    SearchRun r;
    SearchOptions opts;
    opts.starts = 500;
    opts.seed = kSearchSeed;
    opts.radius = 2.0;
    opts.threads = 1;
    const auto t0 = Clock::now();
    r.report = solver::multistart(opts, r.results);
    r.seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

bool full_rank(const Mat3d& a) {
  const auto s = singular_values(a);
  return s[2] > 1e-6 * std::max(1.0, s[0]);
}

Outcome rank3_rigidity() {
  int checked = 0, failures = 0;
  double worst = 0.0;
  for (const auto& r : search_run().results) {
    if (!r.converged || r.residual_norm >= kRigidityResidual || !full_rank(r.a_final)) continue;
    ++checked;
    const double d = max_abs(r.a_final + Mat3d::identity());
    worst = std::max(worst, d);
    if (d > kRigidityEntry) ++failures;
  }
  char buf[120];
  std::snprintf(buf, sizeof buf, "%d rank-3 points, max |A+I| %.2e", checked, worst);
  return {checked > 0 && failures == 0, buf};
}

Outcome reduction_identities() {
  int rank2 = 0, rank1 = 0, failures = 0;
  for (const auto& r : search_run().results) {
    if (!r.converged) continue;
    const Mat3d& a = r.a_final;
    const auto s = singular_values(a);
    const double cut = 1e-6 * std::max(1.0, s[0]);
    const int rk = static_cast<int>((s[0] > cut) + (s[1] > cut) + (s[2] > cut));
    if (rk == 2) {
      ++rank2;
      if (frobenius_norm(mateq::rank2_identity_residual(a)) >= kReductionResidual) ++failures;
    } else if (rk == 1 && frobenius_norm(a - transpose(a)) > cut) {
      ++rank1;
      if (frobenius_norm(mateq::rank1_identity_residual(a)) >= kReductionResidual) ++failures;
      if (std::abs(trace(a) + 1.0) >= kRank1Trace) ++failures;
    }
  }
  return {rank2 > 0 && rank1 > 0 && failures == 0,
          std::to_string(rank2) + " rank-2 and " + std::to_string(rank1) + " rank-1 points, " + std::to_string(failures) +
              " failures"};
}

Outcome numerical_rediscovery() {
  const auto& run = search_run();
  const auto& rep = run.report;
  std::vector<ComplexDouble> distinct;
  for (const auto& k : rep.k_values) {
    bool seen = false;
    for (const auto& d : distinct) seen = seen || std::abs(d - k.value) <= kDistinctKGap;
    if (!seen) distinct.push_back(k.value);
  }
  int classified = 0;
  for (const auto& [name, count] : rep.family_histogram) classified += count;
  const double fraction = static_cast<double>(rep.converged_count) / rep.starts;
  std::string hist;
  for (const auto& [name, count] : rep.family_histogram) hist += " " + name + "=" + std::to_string(count);
  char buf[320];
  std::snprintf(buf, sizeof buf, "converged %d/%d (%.1f%%), classified %d, unclassified %d, distinct k %zu, %.2f s;%s",
                rep.converged_count, rep.starts, 100 * fraction, classified, rep.unclassified, distinct.size(),
                run.seconds, hist.c_str());
  return {fraction >= kConvergedFraction && rep.unclassified == 0 && classified == rep.converged_count &&
              static_cast<int>(distinct.size()) >= kDistinctK && run.seconds < 60.0,
          buf};
}

Outcome automorphisms() {
  int so3_failures = 0, adjoint_failures = 0, false_positives = 0;
  for (std::uint64_t s = 0; s < 200; ++s)
    if (!so3c::automorphism_check(so3c::random_so3(9000 + s).t)) ++so3_failures;

  Rng rng(88);
  int adjoints = 0;
  while (adjoints < 100) {
    Mat2d p;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) p(i, j) = uniform_disk(rng, 1.5);
    if (std::abs(det(p)) < 1e-2) continue;
    ++adjoints;
    const Mat3d t = so3c::adjoint_rep(p);
    const double orth = frobenius_norm(transpose(t) * t - Mat3d::identity());
    if (orth >= kOrthogonality || !so3c::automorphism_check(t)) ++adjoint_failures;
  }

  int others = 0;
  while (others < 200) {
    Mat3d m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = uniform_disk(rng, 1.0);
    if (std::abs(det(m)) < 1e-3 || so3c::is_special_orthogonal(m, 1e-6)) continue;
    ++others;
    if (so3c::automorphism_check(m)) ++false_positives;
  }
  return {so3_failures == 0 && adjoint_failures == 0 && false_positives == 0,
          "random_so3 rejected " + std::to_string(so3_failures) + "/200, adjoint_rep rejected " +
              std::to_string(adjoint_failures) + "/100, non-orthogonal accepted " + std::to_string(false_positives) +
              "/200"};
}

SymCanonicalForm sample_form(SymForm f) {
  SymCanonicalForm out{f, {}};
  for (int p = 0; p < param_count(f); ++p) out.params.push_back(ComplexValue::of(GaussianRational(p + 1)));
  return out;
}

Outcome symmetric_forms() {
  const std::vector<SymForm> forms{SymForm::Rank3Diag,  SymForm::Rank3OneBlock, SymForm::Rank3BigBlock,
                                   SymForm::Rank2Diag,  SymForm::Rank2Block,    SymForm::Rank2Nilp,
                                   SymForm::Rank2BigNilp, SymForm::Rank1Diag,   SymForm::Rank1Nilp,
                                   SymForm::ZeroForm};
  int round_trip = 0, unstable = 0, collisions = 0;
  std::vector<JordanSignature> sigs;
  for (auto f : forms) {
    const SymCanonicalForm form = sample_form(f);
    const Mat3q m = symcanon::canonical_matrix(form);
    if (!symcanon::classify_symmetric(m).equals(form, 0.0)) ++round_trip;
    const Mat3d md = to_numeric(m);
    for (std::uint64_t s = 0; s < 50; ++s) {
      const Mat3d t = so3c::random_so3(11000 + s).t;
      try {
        if (!symcanon::classify_symmetric(transpose(t) * md * t, kClassifyTol).equals(form, 1e-6)) ++unstable;
      } catch (const Error&) {
        ++unstable;
      }
    }
    sigs.push_back(jordan_signature(m));
  }
  for (std::size_t a = 0; a < sigs.size(); ++a)
    for (std::size_t b = a + 1; b < sigs.size(); ++b)
      if (sigs[a].matches(sigs[b], 1e-9)) ++collisions;
  return {round_trip == 0 && unstable == 0 && collisions == 0,
          "round-trip failures " + std::to_string(round_trip) + ", unstable " + std::to_string(unstable) +
              "/500, signature collisions " + std::to_string(collisions)};
}

Outcome gradient_check() {
  Rng rng(99);
  double worst = 0.0;
  for (int n = 0; n < 50; ++n) {
    Mat3d a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a(i, j) = uniform_disk(rng, 2.0);
    const solver::RealVec x = solver::pack(a);
    solver::Jacobian fd;
    for (int c = 0; c < 18; ++c) {
      solver::RealVec xp = x, xm = x;
      xp(c) += kGradientStep;
      xm(c) -= kGradientStep;
      fd.col(c) = (solver::pack(mateq::residual(solver::unpack(xp))) - solver::pack(mateq::residual(solver::unpack(xm)))) /
                  (2 * kGradientStep);
    }
    worst = std::max(worst, (solver::residual_jacobian(a) - fd).norm() / std::max(1.0, fd.norm()));
  }
  char buf[80];
  std::snprintf(buf, sizeof buf, "50 points, max relative error %.2e", worst);
  return {worst <= kGradientRelative, buf};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double budget_seconds;  // 0: no runtime bound
  };
  const std::vector<Criterion> criteria{
      {"exact residual of the canonical representatives", exact_representatives, 1.0},
      {"PostLie / Rota-Baxter / matrix equation equivalence", axiom_equivalence, 10.0},
      {"congruence invariance of residual and tag", congruence_invariance, 0.0},
      {"classifier separation of rank-2 and rank-1 branches", classifier_separation, 0.0},
      {"rank-3 rigidity on Newton-converged points", rank3_rigidity, 0.0},
      {"reduction identities on converged points", reduction_identities, 0.0},
      {"multistart rediscovers the five families", numerical_rediscovery, 0.0},
      {"automorphism check", automorphisms, 0.0},
      {"symmetric canonical forms", symmetric_forms, 0.0},
      {"residual Jacobian gradient check", gradient_check, 0.0},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = seconds_since(t0);
    if (criteria[i].budget_seconds > 0 && secs >= criteria[i].budget_seconds) {
      o.pass = false;
      o.detail += " (over time budget)";
    }
    failed += !o.pass;
    std::printf("[%s] %2zu %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
