#include "postlie/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace postlie::cli {

using json_io::json;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::Violation: return "violation";
    case Status::Error: return "error";
  }
  return "?";
}

int exit_code(Status s) {
  switch (s) {
    case Status::Ok: return 0;
    case Status::Violation: return 1;
    case Status::Error: return 2;
  }
  return 2;
}

json CommandReport::to_json() const { return {{"command", command}, {"status", to_string(status)}, {"payload", payload}}; }

namespace {

CommandReport error_report(std::string command, std::string_view kind, const std::string& message) {
  return {std::move(command), Status::Error, {{"error", kind}, {"message", message}}};
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

/// Runs body, turning library and JSON exceptions into an error report.
template <class F>
CommandReport guarded(const std::string& command, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_report(command, postlie::to_string(e.kind()), e.what());
  } catch (const json::exception& e) {
    return error_report(command, "ParseError", e.what());
  }
}

std::vector<FamilyTag> canon_list() {
  const GaussianRational i = GaussianRational::i();
  return {FamilyTag::zero(),
          FamilyTag::minus_identity(),
          FamilyTag::trace_minus2(),
          FamilyTag::k_family(GaussianRational(0)),
          FamilyTag::k_family(GaussianRational(-1)),
          FamilyTag::k_family(GaussianRational(1)),
          FamilyTag::k_family(i),
          FamilyTag::k_family(GaussianRational(5)),
          FamilyTag::nonsym_rank1()};
}

std::string label(const FamilyTag& tag) {
  std::string s(to_string(tag.family));
  if (tag.family == Family::KFamily) s += "(" + tag.k.exact->to_string() + ")";
  return s;
}

}  // namespace

CommandReport cmd_verify_canon(const VerifyCanonOptions& opts) {
  return guarded("verify-canon", [&] {
    const auto tags = canon_list();
    std::vector<Mat3q> mats;
    json families = json::array();
    std::vector<std::string> failed;
    for (const auto& tag : tags) {
      Mat3q a = mateq::representative(tag);
      if (opts.transform) a = opts.transform(tag, a);
      mats.push_back(a);

      const Mat3q r = mateq::residual(a);
      mpq_class norm_sq = 0;
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) norm_sq += r(p, q).norm();
      const auto c = sl2::circ_from_matrix(a);
      const auto pl = sl2::check_postlie(c, 0.0);
      const auto rb = sl2::check_rota_baxter(a, 0.0);
      const auto jac = sl2::check_jacobi(sl2::derived_bracket(c), 0.0);

      std::set<std::string> broken;
      if (sgn(norm_sq) != 0) broken.insert("matrix-equation");
      for (const auto* list : {&pl, &rb, &jac})
        for (const auto& v : *list) broken.insert(v.identity);
      for (const auto& b : broken) failed.push_back(label(tag) + ": " + b);

      json entry = json_io::encode(tag);
      entry["matrix"] = json_io::encode(a);
      entry["residual_norm_sq"] = norm_sq.get_str();
      entry["postlie_violations"] = pl.size();
      entry["rota_baxter_violations"] = rb.size();
      entry["jacobi_violations"] = jac.size();
      entry["failed"] = std::vector<std::string>(broken.begin(), broken.end());
      families.push_back(std::move(entry));
    }

    json pairs = json::array();
    CongruenceOptions prefilter_only;
    prefilter_only.budget = 0;
    for (std::size_t p = 0; p < mats.size(); ++p)
      for (std::size_t q = p + 1; q < mats.size(); ++q) {
        const auto v = mateq::congruence_test(mats[p], mats[q], prefilter_only);
        json entry = {{"a", label(tags[p])}, {"b", label(tags[q])}, {"verdict", CongruenceVerdict::kind_name(v.kind)}};
        if (v.kind == CongruenceVerdict::Kind::NotCongruent) {
          entry["separating_invariant"] = v.separating_invariant;
        } else {
          failed.push_back(label(tags[p]) + " vs " + label(tags[q]) + ": not separated by invariants");
        }
        pairs.push_back(std::move(entry));
      }

    json payload = {{"families", families}, {"pairs", pairs}, {"failed", failed}};
    return CommandReport{"verify-canon", failed.empty() ? Status::Ok : Status::Violation, payload};
  });
}

CommandReport cmd_classify(const std::string& path, double tol, bool witness, std::uint64_t seed) {
  return guarded("classify", [&] {
    const auto parsed = json_io::parse_mat3(read_json(path));
    ClassifyOptions opts;
    opts.tol = tol;
    opts.find_witness = witness;
    opts.witness.seed = seed;
    const bool exact = std::holds_alternative<Mat3q>(parsed);
    try {
      const auto rep = std::visit([&](const auto& a) { return mateq::classify(a, opts); }, parsed);
      json payload = json_io::encode(rep);
      payload["mode"] = exact ? "exact" : "floating";
      return CommandReport{"classify", Status::Ok, payload};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotASolution && e.kind() != ErrorKind::Inconclusive) throw;
      json payload = {{"error", postlie::to_string(e.kind())}, {"message", e.what()}};
      payload["residual_norm"] = frobenius_norm(mateq::residual(json_io::as_numeric(parsed)));
      return CommandReport{"classify", Status::Violation, payload};
    }
  });
}

CommandReport cmd_postlie_check(const std::string& path) {
  return guarded("postlie-check", [&] {
    const json doc = read_json(path);
    json payload;
    bool ok = true;
    auto check = [&](const auto& c, const auto* a) {
      const auto pl = sl2::check_postlie(c);
      const auto jac = sl2::check_jacobi(sl2::derived_bracket(c));
      payload["postlie"] = json_io::encode(pl);
      payload["derived_jacobi"] = json_io::encode(jac);
      ok = pl.empty() && jac.empty();
      if (a) {
        const auto rb = sl2::check_rota_baxter(*a);
        payload["rota_baxter"] = json_io::encode(rb);
        ok = ok && rb.empty();
      }
    };
    if (doc.is_object() && doc.contains("c")) {
      const auto parsed = json_io::parse_structure(doc);
      std::visit(
          [&](const auto& c) {
            using S = std::decay_t<decltype(c(0, 0)[0])>;
            check(c, static_cast<const Mat3<S>*>(nullptr));
            try {
              payload["matrix"] = json_io::encode(sl2::matrix_from_circ(c));
            } catch (const Error& e) {
              if (e.kind() != ErrorKind::NotAdjointForm) throw;
              payload["matrix"] = nullptr;
            }
          },
          parsed);
    } else {
      const auto parsed = json_io::parse_mat3(doc);
      std::visit([&](const auto& a) { check(sl2::circ_from_matrix(a), &a); }, parsed);
    }
    payload["is_postlie"] = ok;
    return CommandReport{"postlie-check", ok ? Status::Ok : Status::Violation, payload};
  });
}

CommandReport cmd_orbit_test(const std::string& path_a, const std::string& path_b, int budget, std::uint64_t seed) {
  return guarded("orbit-test", [&] {
    if (budget < 0) throw Error(ErrorKind::InvalidParameter, "budget must be non-negative");
    const auto a = json_io::parse_mat3(read_json(path_a));
    const auto b = json_io::parse_mat3(read_json(path_b));
    CongruenceOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    CongruenceVerdict v;
    if (std::holds_alternative<Mat3q>(a) && std::holds_alternative<Mat3q>(b)) {
      v = mateq::congruence_test(std::get<Mat3q>(a), std::get<Mat3q>(b), opts);
    } else {
      v = mateq::congruence_test(json_io::as_numeric(a), json_io::as_numeric(b), opts);
    }
    return CommandReport{"orbit-test", Status::Ok, json_io::encode(v)};
  });
}

CommandReport cmd_search(const SearchOptions& opts) {
  return guarded("search", [&] {
    const SurveyReport rep = solver::multistart(opts);
    json payload = json_io::encode(rep);
    payload["seed"] = opts.seed;
    payload["radius"] = opts.radius;
    return CommandReport{"search", rep.unclassified == 0 ? Status::Ok : Status::Violation, payload};
  });
}

CommandReport cmd_random_so3(std::uint64_t seed, bool exact) {
  return guarded("random-so3", [&] {
    json payload;
    if (exact) {
      const auto t = so3c::random_so3_exact(seed).t;
      payload["matrix"] = json_io::encode(t);
      payload["special_orthogonal"] = so3c::is_special_orthogonal(t, 0.0);
    } else {
      const auto t = so3c::random_so3(seed).t;
      payload["matrix"] = json_io::encode(t);
      payload["orthogonality_residual"] = frobenius_norm(transpose(t) * t - Mat3d::identity());
      payload["det_residual"] = std::abs(det(t) - 1.0);
    }
    payload["seed"] = seed;
    return CommandReport{"random-so3", Status::Ok, payload};
  });
}

CommandReport cmd_adjoint_rep(const std::string& path) {
  return guarded("adjoint-rep", [&] {
    const auto parsed = json_io::parse_mat2(read_json(path));
    return std::visit(
        [&](const auto& p) {
          const auto t = so3c::adjoint_rep(p);
          json payload = {{"matrix", json_io::encode(t)},
                          {"special_orthogonal", so3c::is_special_orthogonal(t, 1e-9)},
                          {"automorphism", so3c::automorphism_check(t, 1e-9)}};
          return CommandReport{"adjoint-rep", Status::Ok, payload};
        },
        parsed);
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"PostLie structures on sl(2,C): verification, classification and search"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify-canon", "Exact check of the five canonical solution families");

  std::string file_a, file_b;
  double classify_tol = 1e-6;
  bool witness = false;
  std::uint64_t seed = 0;
  auto* classify = app.add_subcommand("classify", "Classify a solution of the matrix equation");
  classify->add_option("file", file_a, "JSON matrix")->required();
  classify->add_option("--tol", classify_tol, "Classification tolerance (floating input)");
  classify->add_flag("--witness", witness, "Search for an SO(3,C) witness");
  classify->add_option("--seed", seed, "Seed for the witness search");

  auto* postlie = app.add_subcommand("postlie-check", "Check the PostLie axioms for a matrix or structure constants");
  postlie->add_option("file", file_a, "JSON matrix or {\"c\": ...}")->required();

  int budget = 64;
  auto* orbit = app.add_subcommand("orbit-test", "Decide SO(3,C) congruence of two matrices");
  orbit->add_option("file_a", file_a, "JSON matrix A")->required();
  orbit->add_option("file_b", file_b, "JSON matrix B")->required();
  orbit->add_option("--budget", budget, "Witness search starts");
  orbit->add_option("--seed", seed, "Seed");

  SearchOptions search_opts;
  auto* search = app.add_subcommand("search", "Multistart Newton search for solutions");
  search->add_option("--starts", search_opts.starts, "Number of starts")->check(CLI::PositiveNumber);
  search->add_option("--seed", search_opts.seed, "Seed");
  search->add_option("--radius", search_opts.radius, "Start disk radius")->check(CLI::NonNegativeNumber);
  search->add_option("--tol", search_opts.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  search->add_option("--max-iter", search_opts.max_iter, "Newton iterations per start")->check(CLI::PositiveNumber);
  search->add_option("--threads", search_opts.threads, "Worker threads")->check(CLI::PositiveNumber);

  bool exact = false;
  auto* rso3 = app.add_subcommand("random-so3", "Random element of SO(3,C) by Cayley transform");
  rso3->add_option("--seed", seed, "Seed")->required();
  rso3->add_flag("--exact", exact, "Gaussian-rational Cayley parameters");

  auto* adjoint = app.add_subcommand("adjoint-rep", "Matrix of X -> P X P^-1 for an invertible 2x2 P");
  adjoint->add_option("file", file_a, "JSON 2x2 matrix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    const auto rep = error_report(argc > 1 ? argv[1] : "", "Usage", e.what());
    out << rep.to_json().dump(2) << "\n";
    return exit_code(rep.status);
  }

  CommandReport rep;
  if (verify->parsed()) rep = cmd_verify_canon();
  else if (classify->parsed()) rep = cmd_classify(file_a, classify_tol, witness, seed);
  else if (postlie->parsed()) rep = cmd_postlie_check(file_a);
  else if (orbit->parsed()) rep = cmd_orbit_test(file_a, file_b, budget, seed);
  else if (search->parsed()) rep = cmd_search(search_opts);
  else if (rso3->parsed()) rep = cmd_random_so3(seed, exact);
  else if (adjoint->parsed()) rep = cmd_adjoint_rep(file_a);

  if (rep.status == Status::Error) err << rep.command << ": " << rep.payload.value("message", "") << "\n";
  out << rep.to_json().dump(2) << "\n";
  return exit_code(rep.status);
}

}  // namespace postlie::cli
