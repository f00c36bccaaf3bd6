#include "hardy/cli.hpp"

#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"

#include "hardy/error.hpp"

namespace hardy::cli {

namespace {

cplx parse_complex_flag(const std::string& text, const char* name) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    double im = 0.0;
    if (comma != std::string::npos) im = std::stod(text.substr(comma + 1));
    return {re, im};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("--") + name + " expects RE,IM, got \"" + text + "\"");
  }
}

ConjugationSpec requested_conjugation(const JobSpec& job) {
  if (job.lambda) return JBetaLambda(job.beta.value_or(1.0), *job.lambda);
  if (job.alpha || job.beta) return CAlphaBeta(job.alpha.value_or(1.0), job.beta.value_or(1.0));
  if (job.conjugation) return *job.conjugation;
  throw Error(ErrorKind::InvalidArgument,
              "conjugate needs a conjugation (input \"conjugation\" or --beta/--alpha/--lambda)");
}

json run_classify(const JobSpec& job) {
  cplx beta = job.beta.value_or(1.0);
  std::optional<cplx> lambda = job.lambda;
  if (!job.beta && !job.lambda && job.conjugation) {
    if (const auto* c = std::get_if<CAlphaBeta>(&*job.conjugation))
      beta = c->beta();
    else
      lambda = std::get<JBetaLambda>(*job.conjugation).lambda();
  }
  return to_json(classify(job.symbols, beta, lambda, job.n));
}

json run_adjoint(const JobSpec& job) {
  return {{"origin", "symbolic"}, {"symbols", to_json(adjoint_symbols(job.symbols))}};
}

json run_conjugate(const JobSpec& job) {
  const ConjugationSpec conj = requested_conjugation(job);
  return {{"conjugation", to_json(conj)},
          {"symbols", to_json(conjugated_symbols(conj, job.symbols))}};
}

json run_spectrum(const JobSpec& job) {
  json spectra = json::array();
  json skipped = json::array();
  const OperatorMatrix matrix = truncated_matrix(job.symbols, job.n);
  for (const auto& zero : zeros_in_disk(job.symbols.psi1)) {
    if (zero.multiplicity != 1) {
      skipped.push_back({{"zero", to_json(zero.root)},
                         {"multiplicity", zero.multiplicity},
                         {"reason", "NotSimple"}});
      continue;
    }
    SpectrumResult r = formula_spectrum(job.symbols, zero.root, job.kmax);
    attach_numeric(r, matrix);
    spectra.push_back(to_json(r));
  }
  return {{"n", job.n}, {"kmax", job.kmax}, {"spectra", spectra}, {"skipped", skipped}};
}

json verify_row(const SymbolPair& symbols, const ConjugationSpec& conj, std::size_t n) {
  const bool verdict = std::visit(
      [&](const auto& c) {
        if constexpr (std::is_same_v<std::decay_t<decltype(c)>, CAlphaBeta>)
          return classify_c_selfadjoint(symbols, c.beta()).yes;
        else
          return classify_j_selfadjoint(symbols, c.lambda()).yes;
      },
      conj);
  const ResidualReport rep = residual(symbols, conj, n);
  return {{"conjugation", to_json(conj)},
          {"verdict", verdict},
          {"residual", residual_to_json(rep.value)},
          {"sandwich_residual", residual_to_json(rep.sandwich_route.value_or(0.0))},
          {"route_disagreement", residual_to_json(rep.route_disagreement())}};
}

json run_verify(const JobSpec& job) {
  std::vector<ConjugationSpec> grid;
  for (int k = 0; k < 8; ++k)
    grid.emplace_back(CAlphaBeta(1.0, std::polar(1.0, 2 * std::numbers::pi * k / 8)));
  for (const cplx lambda : {cplx{0.25, 0.0}, cplx{0.5, 0.0}, cplx{-0.5, 0.0}, cplx{0.0, 0.5},
                            cplx{0.25, 0.25}})
    grid.emplace_back(JBetaLambda(1.0, lambda));
  if (job.lambda || job.alpha || job.beta || job.conjugation)
    grid.push_back(requested_conjugation(job));

  std::vector<std::future<json>> rows;
  for (const auto& conj : grid)
    rows.push_back(std::async(std::launch::async,
                              [&, conj] { return verify_row(job.symbols, conj, job.n); }));
  json table = json::array();
  for (auto& f : rows) table.push_back(f.get());

  const auto herm = classify_hermitian(job.symbols);
  return {{"n", job.n},
          {"hermitian",
           {{"verdict", herm.yes},
            {"residual", residual_to_json(hermitian_residual(job.symbols, job.n))}}},
          {"rows", table}};
}

json error_json(const Error& e) {
  json out{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
  return out;
}

}  // namespace

json execute(const JobSpec& job) {
  if (job.n < kMinTruncation)
    throw Error(ErrorKind::InvalidArgument, "truncation N must be >= 8");
  if (job.command == "classify") return run_classify(job);
  if (job.command == "adjoint") return run_adjoint(job);
  if (job.command == "conjugate") return run_conjugate(job);
  if (job.command == "spectrum") return run_spectrum(job);
  if (job.command == "verify") return run_verify(job);
  if (job.command == "matrix") return to_json(truncated_matrix(job.symbols, job.n));
  throw Error(ErrorKind::InvalidArgument, "unknown command \"" + job.command + "\"");
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Symmetry and spectra of first-order differential operators on the Hardy space",
               "hardy-symm"};
  std::string command, input = "-", output = "-", alpha, beta, lambda;
  std::optional<std::size_t> n;
  std::optional<int> kmax;
  app.add_option("command", command, "classify | adjoint | conjugate | spectrum | verify | matrix")
      ->required()
      ->check(CLI::IsMember({"classify", "adjoint", "conjugate", "spectrum", "verify", "matrix"}));
  app.add_option("--input", input, "JSON job file, '-' for stdin");
  app.add_option("--n", n, "truncation degree (default 128, at least 8)");
  app.add_option("--kmax", kmax, "largest eigenvalue index for spectrum (default 16)");
  app.add_option("--beta", beta, "beta as RE,IM");
  app.add_option("--alpha", alpha, "alpha as RE,IM");
  app.add_option("--lambda", lambda, "lambda as RE,IM");
  app.add_option("--output", output, "report file, '-' for stdout");

  std::vector<std::string> argv_storage{"hardy-symm"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  json doc;
  try {
    if (input == "-") {
      doc = json::parse(in);
    } else {
      std::ifstream file(input);
      if (!file) {
        err << "hardy-symm: cannot open input file " << input << "\n";
        return kMalformed;
      }
      doc = json::parse(file);
    }
  } catch (const json::exception& e) {
    err << "hardy-symm: malformed JSON input: " << e.what() << "\n";
    return kMalformed;
  }

  json report;
  int code = kOk;
  JobSpec job;
  try {
    job.command = command;
    job.symbols = symbols_from_json(doc);
    if (doc.contains("conjugation")) job.conjugation = conjugation_from_json(doc.at("conjugation"));
    job.n = n.value_or(doc.value("n", kDefaultTruncation));
    job.kmax = kmax.value_or(doc.value("kmax", kDefaultKmax));
    if (!alpha.empty()) job.alpha = parse_complex_flag(alpha, "alpha");
    if (!beta.empty()) job.beta = parse_complex_flag(beta, "beta");
    if (!lambda.empty()) job.lambda = parse_complex_flag(lambda, "lambda");
    job.output = output;
    report = execute(job);
  } catch (const Error& e) {
    err << "hardy-symm: " << to_string(e.kind()) << ": " << e.what() << "\n";
    report = error_json(e);
    // Outside the coupled family there is no symbolic adjoint; offer the
    // conjugate-transpose truncation, labeled numeric.
    if (e.kind() == ErrorKind::FamilyMismatch && command == "adjoint")
      report["numeric_adjoint"] = to_json(numeric_adjoint(job.symbols, job.n));
    code = e.kind() == ErrorKind::NonConvergence ? kNonConvergence : kPrecondition;
  } catch (const json::exception& e) {
    err << "hardy-symm: malformed job: " << e.what() << "\n";
    return kMalformed;
  }

  const std::string text = report.dump(2) + "\n";
  if (output == "-") {
    out << text;
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      err << "hardy-symm: cannot write " << output << "\n";
      return kMalformed;
    }
    file << text;
  }
  return code;
}

}  // namespace hardy::cli
