#include <omega/cli.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include <omega/codec.hpp>
#include <omega/engines.hpp>
#include <omega/identities.hpp>
#include <omega/numtheory.hpp>
#include <omega/render.hpp>

namespace omega {

namespace {

std::vector<int> parse_lambdas(const std::string& text) {
  std::vector<int> lambdas;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    lambdas.push_back(std::stoi(item, &pos));
    if (pos != item.size()) throw std::invalid_argument("bad lambda entry: " + item);
  }
  if (lambdas.empty()) throw std::invalid_argument("empty lambda list");
  return lambdas;
}

Notation pick_notation(const std::string& flag, const PartitionSpec& spec) {
  if (flag.empty()) return default_notation(spec);
  return notation_from_name(flag);
}

// The verification grid used by `verify --suite all`.
std::vector<PartitionSpec> builtin_grid() {
  std::vector<PartitionSpec> grid;
  for (int b = 2; b <= 5; ++b) {
    for (const auto& lambdas : std::vector<std::vector<int>>{
             {1}, {2}, {3}, {1, 1}, {2, 3}, {1, 1, 1}, {2, 2, 2},
             {b - 1, b - 1, b - 1}})
      grid.emplace_back(b, lambdas);
  }
  return grid;
}

bool verify_engines(const PartitionSpec& spec, long long upto, std::ostream& out) {
  RecurrenceTable table(spec);
  const std::vector<OmegaPoly> product = omega_product(upto, spec);
  for (long long n = 0; n <= upto; ++n) {
    const OmegaPoly& ref = table.at(n);
    if (!(ref == product[static_cast<size_t>(n)]) ||
        !(ref == omega_explicit(n, spec)) || !(ref == omega_convolution(n, spec))) {
      out << "engine disagreement at n=" << n << "\n";
      return false;
    }
    if (!ref.is_finished_form()) {
      out << "finished-form invariant violated at n=" << n << "\n";
      return false;
    }
    if (ref.eval(all_ones(spec), all_ones(spec)) != count_partitions(n, spec)) {
      out << "all-ones evaluation mismatch at n=" << n << "\n";
      return false;
    }
  }
  return true;
}

bool verify_codec(const PartitionSpec& spec, long long upto, std::ostream& out) {
  RecurrenceTable table(spec);
  for (long long n = 0; n <= upto; ++n) {
    const OmegaPoly& P = table.at(n);
    std::vector<ColoredPartition> decoded = omega_to_partitions(P);
    for (size_t i = 0; i < decoded.size(); ++i) {
      Monomial back = partition_to_monomial(decoded[i]);
      auto it = std::next(P.terms().begin(), static_cast<long>(i));
      if (!(back == it->first)) {
        out << "codec round trip A failed at n=" << n << "\n";
        return false;
      }
    }
    std::vector<ColoredPartition> enumerated = enumerate_partitions(n, spec);
    for (const auto& p : enumerated) {
      if (!(monomial_to_partition(partition_to_monomial(p), spec) == p)) {
        out << "codec round trip B failed at n=" << n << "\n";
        return false;
      }
    }
    std::set<ColoredPartition> lhs(decoded.begin(), decoded.end());
    std::set<ColoredPartition> rhs(enumerated.begin(), enumerated.end());
    if (lhs != rhs || lhs.size() != decoded.size()) {
      out << "codec bijection failed at n=" << n << "\n";
      return false;
    }
  }
  return true;
}

bool verify_factorization(const PartitionSpec& spec, long long upto, int ell,
                          std::ostream& out) {
  const JRange range = factorization_j_range(spec, ell);
  for (long long n = 1; n <= upto; ++n) {
    for (long long j = range.lo; j <= range.hi; ++j) {
      FactorizationReport report = check_factorization(n, ell, j, spec);
      if (!report.holds) {
        out << "factorization failed at n=" << n << " ell=" << ell << " j=" << j
            << "\n";
        return false;
      }
    }
  }
  return true;
}

bool verify_counts(const PartitionSpec& spec, long long upto, std::ostream& out) {
  const std::vector<BigInt> series = count_series(upto, spec);
  const bool uniform =
      std::all_of(spec.lambdas.begin(), spec.lambdas.end(),
                  [&](int l) { return l == spec.base - 1; });
  for (long long n = 0; n <= upto; ++n) {
    const BigInt oracle = count_partitions(n, spec);
    if (oracle != series[static_cast<size_t>(n)]) {
      out << "count mismatch (oracle vs series) at n=" << n << "\n";
      return false;
    }
    if (uniform && oracle != uniform_color_count(n, spec.base, spec.rho())) {
      out << "uniform color count mismatch at n=" << n << "\n";
      return false;
    }
  }
  return true;
}

int cmd_verify(const std::string& suite, const std::optional<PartitionSpec>& spec,
               long long upto, int ell, std::ostream& out, std::ostream& err) {
  std::vector<PartitionSpec> specs;
  if (spec) {
    specs.push_back(*spec);
  } else if (suite == "all") {
    specs = builtin_grid();
  } else {
    err << "verify: --base and --lambdas are required unless --suite all\n";
    return 2;
  }

  bool ok = true;
  for (const auto& s : specs) {
    std::ostringstream label;
    label << "b=" << s.base << " lambdas=";
    for (size_t i = 0; i < s.lambdas.size(); ++i)
      label << (i ? "," : "") << s.lambdas[i];
    auto run = [&](const std::string& name, bool passed) {
      out << name << " [" << label.str() << "]: " << (passed ? "ok" : "FAIL") << "\n";
      ok = ok && passed;
    };
    if (suite == "engines" || suite == "all")
      run("engines", verify_engines(s, spec ? upto : std::min<long long>(upto, 12), out));
    if (suite == "codec" || suite == "all")
      run("codec", verify_codec(s, spec ? upto : std::min<long long>(upto, 10), out));
    if (suite == "factorization" || suite == "all")
      run("factorization",
          verify_factorization(s, spec ? upto : std::min<long long>(upto, 4), ell, out));
    if (suite == "functional" || suite == "all")
      run("functional", check_functional_equation(s, spec ? upto : std::min<long long>(upto, 12)));
    if (suite == "counts" || suite == "all")
      run("counts", verify_counts(s, spec ? upto : std::min<long long>(upto, 15), out));
  }
  return ok ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Restricted multicolor b-ary partition polynomials"};
  app.require_subcommand(1);

  std::string lambdas_flag, engine_flag = "recurrence", format_flag = "plain";
  std::string notation_flag, method_flag = "oracle", suite_flag;
  int base = 0, ell = 1;
  long long n = -1, upto = -1;

  auto add_spec_flags = [&](CLI::App* cmd, bool required) {
    cmd->add_option("--base", base, "integer base b >= 2")->required(required);
    cmd->add_option("--lambdas", lambdas_flag,
                    "comma-separated nondecreasing multiplicity bounds")
        ->required(required);
  };

  auto* compute = app.add_subcommand("compute", "compute Omega(n;Z)");
  add_spec_flags(compute, true);
  compute->add_option("--n", n, "partition target n")->required();
  compute->add_option("--engine", engine_flag, "recurrence|product|explicit|convolution");
  compute->add_option("--format", format_flag, "plain|latex|json");
  compute->add_option("--notation", notation_flag, "letters|indexed");

  auto* count = app.add_subcommand("count", "count partitions C(n)");
  add_spec_flags(count, true);
  count->add_option("--n", n, "single n");
  count->add_option("--upto", upto, "all n from 0 to N");
  count->add_option("--method", method_flag, "oracle|poly");

  auto* partitions_cmd = app.add_subcommand("partitions", "enumerate partitions of n");
  add_spec_flags(partitions_cmd, true);
  partitions_cmd->add_option("--n", n, "partition target n")->required();
  partitions_cmd->add_option("--format", format_flag, "plain|json");

  auto* decode = app.add_subcommand("decode", "monomial <-> partition pairing table");
  add_spec_flags(decode, true);
  decode->add_option("--n", n, "partition target n")->required();
  decode->add_option("--notation", notation_flag, "letters|indexed");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_spec_flags(verify, false);
  verify->add_option("--suite", suite_flag, "engines|codec|factorization|functional|counts|all")
      ->required();
  verify->add_option("--upto", upto, "verification bound");
  verify->add_option("--ell", ell, "power of b in the factorization identity");

  auto* table = app.add_subcommand("table", "list Omega(0..N;Z)");
  add_spec_flags(table, true);
  table->add_option("--upto", upto, "largest n")->required();
  table->add_option("--format", format_flag, "plain|latex|json");
  table->add_option("--notation", notation_flag, "letters|indexed");

  std::vector<const char*> argv{"omega"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    std::optional<PartitionSpec> spec;
    if (base != 0 || !lambdas_flag.empty())
      spec.emplace(base, parse_lambdas(lambdas_flag));

    if (compute->parsed()) {
      const OmegaPoly P = compute_omega(n, *spec, engine_from_name(engine_flag));
      out << render_omega(P, n, format_from_name(format_flag),
                          pick_notation(notation_flag, *spec))
          << "\n";
      return 0;
    }

    if (count->parsed()) {
      if ((n < 0) == (upto < 0)) {
        err << "count: exactly one of --n or --upto is required\n";
        return 2;
      }
      const long long hi = upto >= 0 ? upto : n;
      std::vector<BigInt> values;
      if (method_flag == "poly") {
        values = count_series(hi, *spec);
      } else if (method_flag == "oracle") {
        for (long long m = 0; m <= hi; ++m) values.push_back(count_partitions(m, *spec));
      } else {
        err << "count: unknown method " << method_flag << "\n";
        return 2;
      }
      if (upto >= 0) {
        for (long long m = 0; m <= hi; ++m)
          out << (m ? " " : "") << values[static_cast<size_t>(m)];
        out << "\n";
      } else {
        out << values.back() << "\n";
      }
      return 0;
    }

    if (partitions_cmd->parsed()) {
      const std::vector<ColoredPartition> parts = enumerate_partitions(n, *spec);
      // cross-check against the codec decoding of Omega(n)
      std::vector<ColoredPartition> decoded =
          omega_to_partitions(omega_recurrence(n, *spec));
      std::set<ColoredPartition> lhs(parts.begin(), parts.end());
      std::set<ColoredPartition> rhs(decoded.begin(), decoded.end());
      if (lhs != rhs) {
        err << "partition enumeration disagrees with Omega(" << n << ") decoding\n";
        return 1;
      }
      if (format_flag == "json") {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& p : parts) j.push_back(partition_to_json(p));
        out << j.dump(2) << "\n";
      } else {
        for (const auto& p : parts) out << render_partition(p) << "\n";
      }
      return 0;
    }

    if (decode->parsed()) {
      const OmegaPoly P = omega_recurrence(n, *spec);
      const Notation nt = pick_notation(notation_flag, *spec);
      for (const auto& [m, coeff] : P.terms()) {
        (void)coeff;
        out << render_monomial(m, *spec, Format::plain, nt) << "  <->  "
            << render_partition(monomial_to_partition(m, *spec)) << "\n";
      }
      return 0;
    }

    if (verify->parsed()) {
      if (upto < 0) upto = 20;
      return cmd_verify(suite_flag, spec, upto, ell, out, err);
    }

    if (table->parsed()) {
      RecurrenceTable tbl(*spec);
      const Format f = format_from_name(format_flag);
      const Notation nt = pick_notation(notation_flag, *spec);
      for (long long m = 0; m <= upto; ++m)
        out << m << ": " << render_omega(tbl.at(m), m, f, nt) << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

} // namespace omega
