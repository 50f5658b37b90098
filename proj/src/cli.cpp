#include <symmoment/cli.hpp>
#include <symmoment/combinatorics.hpp>
#include <symmoment/error.hpp>
#include <symmoment/euler.hpp>
#include <symmoment/exponents.hpp>
#include <symmoment/hecke.hpp>
#include <symmoment/kernels/sieve.hpp>
#include <symmoment/polynomial.hpp>
#include <symmoment/sums.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <ostream>

namespace symmoment::cli {
namespace {

const CLI::Range kPositive(1, std::numeric_limits<int>::max());

enum class Format { Text, Csv, Json };

struct RunConfig {
  int l = 2;
  int j = 2;
  std::size_t limit = 10000;
  int weight = 12;
  Format format = Format::Text;
  std::string cache_dir;
  bool exact = false;
  bool table = false;
  unsigned p = 2;
  int order = kDefaultEulerOrder;
};

std::filesystem::path resolve_cache_dir(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty()) return cfg.cache_dir;
  if (const char* env = std::getenv("SYMMOMENT_CACHE"); env && *env) return env;
  return "cache";
}

std::string join(const std::vector<BigInt>& v, std::size_t count, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < count && i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i].get_str();
  }
  return out;
}

nlohmann::ordered_json big_array(const std::vector<BigInt>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : v) arr.push_back(x.get_str());
  return arr;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const auto oracle = coeffs_bruteforce(cfg.l, cfg.j);
  const auto closed = coeffs_closed_form(cfg.l, cfg.j);
  const auto diff = diff_coeffs(closed);
  const auto rep = structure_report(closed);
  const BigInt expected_total = ipow(cfg.j + 1, cfg.l);
  bool ok = oracle.values == closed.values && rep.palindromic && rep.unimodal && rep.total == expected_total;
  bool closed_diff_ok = true;
  if (cfg.l >= 2) closed_diff_ok = diff_coeffs_closed_form(cfg.l, cfg.j).values == diff.values;
  ok = ok && closed_diff_ok;
  const char* dname = kind_name(diff.kind);

  switch (cfg.format) {
    case Format::Text:
      out << "c: " << join(closed.values, diff.size()) << " | " << dname << ": " << join(diff.values, diff.size()) << '\n';
      out << "c (convolution):         " << join(oracle.values, oracle.size()) << '\n';
      out << "c (inclusion-exclusion): " << join(closed.values, closed.size()) << '\n';
      out << "match: " << (oracle.values == closed.values ? "yes" : "NO") << '\n';
      out << "palindromic: " << (rep.palindromic ? "yes" : "NO") << "  unimodal: " << (rep.unimodal ? "yes" : "NO")
          << "  total: " << rep.total.get_str() << " = (j+1)^l" << (rep.total == expected_total ? "" : " MISMATCH") << '\n';
      if (cfg.l >= 2) out << dname << " closed form: " << (closed_diff_ok ? "match" : "MISMATCH") << '\n';
      break;
    case Format::Csv:
      out << "kind,m,value\n";
      for (std::size_t m = 0; m < closed.size(); ++m) out << "c," << m << ',' << closed[m].get_str() << '\n';
      for (std::size_t m = 0; m < diff.size(); ++m) out << dname << ',' << m << ',' << diff[m].get_str() << '\n';
      break;
    case Format::Json: {
      nlohmann::ordered_json o;
      o["l"] = cfg.l;
      o["j"] = cfg.j;
      o["c"] = big_array(closed.values);
      o["c_oracle"] = big_array(oracle.values);
      o[dname] = big_array(diff.values);
      o["palindromic"] = rep.palindromic;
      o["unimodal"] = rep.unimodal;
      o["total"] = rep.total.get_str();
      o["match"] = ok;
      out << o.dump(2) << '\n';
      break;
    }
  }
  return ok ? kOk : kInconsistent;
}

int cmd_identity(const RunConfig& cfg, std::ostream& out) {
  const auto cert = verify_decomposition(cfg.l, cfg.j);
  const BigInt deg = degree(cfg.l, cfg.j);
  const char* dname = kind_name(cert.weights.kind);
  switch (cfg.format) {
    case Format::Text:
    case Format::Csv:
      out << "S_" << cfg.j << "(t)^" << cfg.l << " = " << cert.lhs.to_string() << '\n';
      out << "sum " << dname << "_m S_{" << cfg.l * cfg.j << "-2m}(t) = " << cert.rhs.to_string() << '\n';
      out << dname << ": " << join(cert.weights.values, cert.weights.size()) << '\n';
      out << "holds: " << (cert.holds ? "yes" : "NO") << '\n';
      out << "degree: " << deg.get_str() << " = (j+1)^l\n";
      break;
    case Format::Json: {
      nlohmann::ordered_json o;
      o["l"] = cfg.l;
      o["j"] = cfg.j;
      o["holds"] = cert.holds;
      o["lhs"] = big_array(cert.lhs.coefficients());
      o["rhs"] = big_array(cert.rhs.coefficients());
      o[dname] = big_array(cert.weights.values);
      o["degree"] = deg.get_str();
      out << o.dump(2) << '\n';
      break;
    }
  }
  return cert.holds ? kOk : kInconsistent;
}

int cmd_exponents(const RunConfig& cfg, std::ostream& out) {
  std::vector<ExponentReport> rows;
  if (cfg.table) {
    rows = reference_table();
  } else {
    if (cfg.l * cfg.j < 4) throw DomainError("exponents need l*j >= 4");
    rows.push_back(exponent_report(cfg.l, cfg.j));
  }
  switch (cfg.format) {
    case Format::Text: out << reports_to_text(rows); break;
    case Format::Csv: out << reports_to_csv(rows); break;
    case Format::Json: out << reports_to_json(rows); break;
  }
  return kOk;
}

int cmd_euler(const RunConfig& cfg, std::ostream& out) {
  if (cfg.p < 2 || kernels::smallest_prime_factors(cfg.p)[cfg.p] != cfg.p) {
    throw DomainError(fmt::format("{} is not a prime", cfg.p));
  }
  const auto form = eigenform_qexp(cfg.weight, cfg.p);
  const double t = form.lambda(cfg.p);
  const auto lhs = lhs_local(cfg.l, cfg.j, t, cfg.order);
  const auto rhs = rhs_local(cfg.l, cfg.j, t, cfg.order);
  const auto corr = correction_series(cfg.l, cfg.j, t, cfg.order);
  bool ok = std::abs(corr.coeffs[1]) <= 1e-9;
  std::optional<ExactLocalSeries> exact;
  if (cfg.exact) {
    exact = correction_series_exact(cfg.l, cfg.j, cfg.order);
    ok = ok && exact->coeffs[1].is_zero();
  }
  switch (cfg.format) {
    case Format::Text:
      out << fmt::format("weight {} p {} lambda(p) = {}\n", cfg.weight, cfg.p, format_real(t));
      out << "a,lhs,rhs,correction\n";
      for (int a = 0; a <= cfg.order; ++a) {
        out << fmt::format("{},{},{},{}\n", a, format_real(lhs.coeffs[a]), format_real(rhs.coeffs[a]),
                           format_real(corr.coeffs[a]));
      }
      out << fmt::format("X^1 coefficient: {} (|c1| = {:.3e})\n", ok ? "0" : "NONZERO", std::abs(corr.coeffs[1]));
      if (exact) {
        for (int a = 0; a <= cfg.order; ++a) out << "correction[" << a << "](t) = " << exact->coeffs[a].to_string() << '\n';
      }
      break;
    case Format::Csv:
      out << "a,lhs,rhs,correction\n";
      for (int a = 0; a <= cfg.order; ++a) {
        out << fmt::format("{},{},{},{}\n", a, format_real(lhs.coeffs[a]), format_real(rhs.coeffs[a]),
                           format_real(corr.coeffs[a]));
      }
      break;
    case Format::Json: {
      nlohmann::ordered_json o;
      o["l"] = cfg.l;
      o["j"] = cfg.j;
      o["weight"] = cfg.weight;
      o["p"] = cfg.p;
      o["t"] = t;
      o["lhs"] = lhs.coeffs;
      o["rhs"] = rhs.coeffs;
      o["correction"] = corr.coeffs;
      if (exact) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : exact->coeffs) arr.push_back(big_array(c.coefficients()));
        o["correction_exact"] = arr;
      }
      o["x1_vanishes"] = ok;
      out << o.dump(2) << '\n';
      break;
    }
  }
  return ok ? kOk : kInconsistent;
}

int cmd_tau(const RunConfig& cfg, std::ostream& out) {
  const auto form = load_or_compute(cfg.weight, cfg.limit, resolve_cache_dir(cfg), kHardQexpLimit);
  switch (cfg.format) {
    case Format::Text:
      out << "n,a_n,lambda\n";
      for (std::size_t n = 1; n <= form.limit; ++n) {
        out << n << ',' << form.a(n).get_str() << ',' << format_real(form.lambda(n)) << '\n';
      }
      break;
    case Format::Csv: write_table_csv(out, form); break;
    case Format::Json: {
      nlohmann::ordered_json o;
      o["weight"] = form.weight;
      o["limit"] = form.limit;
      auto arr = nlohmann::ordered_json::array();
      for (std::size_t n = 1; n <= form.limit; ++n) arr.push_back(form.a(n).get_str());
      o["a"] = arr;
      out << o.dump(2) << '\n';
      break;
    }
  }
  return kOk;
}

int cmd_partial_sum(const RunConfig& cfg, std::ostream& out) {
  const auto form = load_or_compute(cfg.weight, cfg.limit, resolve_cache_dir(cfg), kHardQexpLimit);
  const auto series = analyze_partial_sum(cfg.l, cfg.j, cfg.limit, form);
  switch (cfg.format) {
    case Format::Csv: out << series_to_csv(series); break;
    case Format::Json: out << series_to_json(series); break;
    case Format::Text:
      out << fmt::format("l={} j={} weight={} N={}\n", series.l, series.j, series.weight, series.N);
      if (series.fit) {
        out << "fit degree " << series.fit->degree << ", Q coefficients:";
        for (double c : series.fit->coefficients) out << ' ' << format_real(c);
        out << '\n';
      } else if ((cfg.l * cfg.j) % 2 == 0) {
        out << "fit: unavailable (main-term degree " << main_term_degree(cfg.l, cfg.j) << ")\n";
      } else {
        out << "fit: none (odd l*j, no main term)\n";
      }
      if (series.residual) {
        out << fmt::format("residual exponent: {} +- {} over {} points\n", format_real(series.residual->slope),
                           format_real(series.residual->standard_error), series.residual->points);
      } else {
        out << "residual exponent: absent\n";
      }
      out << series_to_csv(series);
      break;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Moments of symmetric-power Hecke eigenvalues: coefficients, identities, exponents, sums"};
  app.require_subcommand(1);
  app.fallthrough();

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"csv", Format::Csv}, {"json", Format::Json}};
  app.add_option("--format", cfg.format, "Output format (text | csv | json)")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for q-expansion caches (default ./cache or $SYMMOMENT_CACHE)");
  app.add_option("--weight", cfg.weight, "Eigenform weight (12, 16, 18, 20, 22, 26)");

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--l", cfg.l, "Power l")->required()->check(kPositive);
    sub->add_option("--j", cfg.j, "Symmetric power j")->required()->check(kPositive);
  };

  auto* coeffs = app.add_subcommand("coeffs", "Bounded-composition coefficients and their differences");
  add_pair(coeffs);
  auto* identity = app.add_subcommand("identity", "Exact certificate of the S_r decomposition and the degree");
  add_pair(identity);
  auto* exponents = app.add_subcommand("exponents", "Error-term exponents");
  exponents->add_flag("--table", cfg.table, "Reproduce both comparison tables");
  auto* el = exponents->add_option("--l", cfg.l, "Power l")->check(kPositive);
  auto* ej = exponents->add_option("--j", cfg.j, "Symmetric power j")->check(kPositive);
  auto* euler = app.add_subcommand("euler", "Local Euler factors at a prime");
  add_pair(euler);
  euler->add_option("--p", cfg.p, "Prime")->required();
  euler->add_option("--order", cfg.order, "Truncation order (>= 2)");
  euler->add_flag("--exact", cfg.exact, "Also certify the correction factor symbolically in t");
  auto* tau = app.add_subcommand("tau", "q-expansion coefficients of the eigenform");
  tau->add_option("--limit", cfg.limit, "Number of coefficients");
  auto* partial = app.add_subcommand("partial-sum", "Checkpointed partial sums with main-term fit");
  add_pair(partial);
  partial->add_option("--limit", cfg.limit, "Upper summation limit N");

  std::vector<std::string> argv_store{"symmoment"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!is_supported_weight(cfg.weight)) throw DomainError(fmt::format("unsupported weight {}", cfg.weight));
    if (*coeffs) return cmd_coeffs(cfg, out);
    if (*identity) return cmd_identity(cfg, out);
    if (*exponents) {
      if (!cfg.table && (el->count() == 0 || ej->count() == 0)) throw DomainError("exponents needs --table or both --l and --j");
      return cmd_exponents(cfg, out);
    }
    if (*euler) return cmd_euler(cfg, out);
    if (*tau) return cmd_tau(cfg, out);
    if (*partial) return cmd_partial_sum(cfg, out);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    err << "consistency error: " << e.what() << '\n';
    return kInconsistent;
  }
  return kUsage;
}

}  // namespace symmoment::cli
