#pragma once

// Command-line front end. `run` is kept separate from main() so the tests can
// drive it with captured streams.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relsym/relsym.hpp"

namespace relsym::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInputError = 1, kResourceError = 2, kConsistencyError = 3 };

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline json to_json(const Rational& q) {
  if (is_integer(q)) return to_json(numerator(q));
  return q.str();
}

inline json to_json(const std::vector<int>& v) { return json(v); }

/// The structured output of every command.
struct OutputEnvelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  std::vector<std::pair<std::string, bool>> cross_checks;

  bool all_checks_passed() const {
    for (const auto& [name, ok] : cross_checks) {
      if (!ok) return false;
    }
    return true;
  }

  json to_json() const {
    json checks = json::array();
    for (const auto& [name, ok] : cross_checks) checks.push_back({{"name", name}, {"passed", ok}});
    return json{{"command", command}, {"inputs", inputs}, {"result", result}, {"cross_checks", checks}};
  }
};

struct Limits {
  std::size_t max_elements = kDefaultGroupCap;
  std::size_t max_gamma = kDefaultGammaCap;
};

namespace detail {

inline std::string join_partition_values(const std::map<Partition, BigInt>& values) {
  // reverse lexicographic, matching enumerate_partitions
  std::string s;
  for (auto it = values.rbegin(); it != values.rend(); ++it) {
    if (!s.empty()) s += ", ";
    s += it->first.to_string() + ": " + it->second.str();
  }
  return s;
}

inline CharacterSpec load_character(const std::string& source, const PermutationGroup& group) {
  if (source == "trivial") return CharacterSpec::trivial(group);
  if (source == "sign") {
    return CharacterSpec::from_function(group, [](const Permutation& s) {
      return BigInt((s.degree() - static_cast<int>(s.cycles().size())) % 2 ? -1 : 1);
    });
  }
  std::ifstream in(source);
  if (!in) throw InputError("cannot open character file '" + source + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("character file '" + source + "' is not valid JSON: " + e.what());
  }
  const nlohmann::json& table = doc.contains("classes") ? doc.at("classes") : doc;
  if (!table.is_object()) throw InputError("character file must map cycle notation to integer values");
  std::vector<std::pair<Permutation, BigInt>> reps;
  for (const auto& [key, value] : table.items()) {
    if (!value.is_number_integer()) throw InputError("character value for " + key + " must be an integer");
    reps.emplace_back(parse_permutation(key, group.m()), BigInt(value.get<std::int64_t>()));
  }
  return CharacterSpec::from_class_values(group, reps);
}

/// Gamma sizes up to which `dim --verify` also runs the rank computation.
inline constexpr int kRankCheckMaxM = 5;
inline constexpr int kRankCheckMaxGamma = 2000;

}  // namespace detail

/// Parses argv-style arguments (without the program name), runs one
/// subcommand and writes its output. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Money-change denumerants, symmetric group characters and relative symmetric polynomials",
               "relsym"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  Limits limits;
  app.add_flag("--json", as_json, "structured output");
  app.add_option("--max-elements", limits.max_elements, "largest permutation group to enumerate")
      ->envname("RELSYM_MAX_ELEMENTS");
  app.add_option("--max-gamma", limits.max_gamma, "largest set of exponent vectors to enumerate");

  OutputEnvelope env;
  std::ostringstream text;
  std::function<void()> action;

  // denumerant
  std::string coins_arg;
  int amount = 0;
  bool series = false;
  auto* den = app.add_subcommand("denumerant", "number of non-negative solutions of a1 t1 + ... + an tn = D");
  den->add_option("--coins", coins_arg, "coefficients a1,...,an")->required();
  den->add_option("--amount", amount, "right-hand side D")->required()->check(CLI::NonNegativeNumber);
  den->add_flag("--series", series, "print Q_0 .. Q_D");
  den->callback([&] {
    action = [&] {
      const CoinSystem coins(relsym::detail::parse_int_list(coins_arg, "coin list"));
      env.inputs = {{"coins", coins.coins()}, {"amount", amount}, {"series", series}};
      if (series) {
        json arr = json::array();
        const auto values = q_d_series(coins, amount);
        for (std::size_t d = 0; d < values.size(); ++d) {
          arr.push_back(to_json(values[d]));
          text << "Q_" << d << " = " << values[d] << '\n';
        }
        env.result = {{"series", arr}};
      } else {
        const BigInt q = q_d(coins, amount);
        env.result = {{"count", to_json(q)}};
        text << q << '\n';
      }
    };
  });

  // qchar
  int m = 0;
  int d = 0;
  bool verify = false;
  bool literal = false;
  auto* qchar = app.add_subcommand("qchar", "Q_d as a class function of S_m");
  qchar->add_option("--m", m, "degree of the symmetric group")->required()->check(CLI::PositiveNumber);
  qchar->add_option("--d", d, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
  qchar->add_flag("--verify", verify, "compare with the induced-character sum and the fixed-point count");
  qchar->callback([&] {
    action = [&] {
      env.inputs = {{"m", m}, {"d", d}};
      const ClassFunction q = q_d_class_function(m, d);
      json rows = json::array();
      for (const Partition& lambda : enumerate_partitions(m)) {
        rows.push_back({{"class", lambda.to_string()}, {"value", to_json(q(lambda))}});
        text << lambda.to_string() << ": " << q(lambda) << '\n';
      }
      env.result = {{"values", rows}};
      if (verify) {
        env.cross_checks.emplace_back("induced_character_sum", theorem_a_class_function(m, d) == q);
        if (gamma_size(m, d) <= limits.max_gamma) {
          env.cross_checks.emplace_back("trace_identity", verify_trace_identity(m, d, limits.max_gamma));
        }
      }
    };
  });

  // decompose
  auto* dec = app.add_subcommand("decompose", "multiplicities of the irreducible characters of S_m in Q_d");
  dec->add_option("--m", m, "degree of the symmetric group")->required()->check(CLI::PositiveNumber);
  dec->add_option("--d", d, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
  dec->add_flag("--literal", literal, "sum over every exponent vector instead of orbit representatives");
  dec->add_flag("--verify", verify, "check that the decomposition reproduces Q_d");
  dec->callback([&] {
    action = [&] {
      env.inputs = {{"m", m}, {"d", d}, {"literal", literal}};
      const SumMode mode = literal ? SumMode::literal : SumMode::orbit_collapsed;
      const auto mult = theorem_b_decomposition(m, d, mode, limits.max_gamma);
      json rows = json::array();
      for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        rows.push_back({{"partition", it->first.to_string()}, {"multiplicity", to_json(it->second)}});
      }
      env.result = {{"multiplicities", rows}};
      text << detail::join_partition_values(mult) << '\n';
      if (verify) {
        env.cross_checks.emplace_back("reconstructs_q_d", reconstruct_class_function(m, mult) == q_d_class_function(m, d));
      }
    };
  });

  // kostka
  std::string shape_arg;
  std::string content_arg;
  bool list = false;
  auto* kos = app.add_subcommand("kostka", "number of semistandard tableaux of a shape and content");
  kos->add_option("--shape", shape_arg, "shape partition, e.g. 3,2")->required();
  kos->add_option("--content", content_arg, "content, e.g. 2,2,1")->required();
  kos->add_flag("--list", list, "print the tableaux");
  kos->callback([&] {
    action = [&] {
      const Partition shape = parse_partition(shape_arg);
      const std::vector<int> content = relsym::detail::parse_int_list(content_arg, "content");
      env.inputs = {{"shape", shape.to_string()}, {"content", content}};
      const auto tableaux = enumerate_ssyt(shape, content);
      BigInt count = tableaux.size();
      if (std::is_sorted(content.begin(), content.end(), std::greater<>()) &&
          std::find(content.begin(), content.end(), 0) == content.end()) {
        count = kostka(shape, Partition(content));
        if (count != tableaux.size()) throw ConsistencyError("Kostka count disagrees with tableau enumeration");
      }
      env.result = {{"kostka", to_json(count)}};
      text << count << '\n';
      if (list) {
        json arr = json::array();
        for (const Tableau& t : tableaux) {
          arr.push_back(t.rows());
          for (const auto& row : t.rows()) {
            for (std::size_t j = 0; j < row.size(); ++j) text << (j ? " " : "") << row[j];
            text << '\n';
          }
          text << '\n';
        }
        env.result["tableaux"] = arr;
      }
    };
  });

  // character
  std::string partition_arg;
  std::string class_arg;
  int table_m = 0;
  auto* chr = app.add_subcommand("character", "irreducible character values of S_m");
  auto* part_opt = chr->add_option("--partition", partition_arg, "character label, e.g. 2,1");
  auto* class_opt = chr->add_option("--class", class_arg, "cycle type, e.g. 3");
  auto* table_opt = chr->add_option("--table", table_m, "print the whole table of S_M")->check(CLI::PositiveNumber);
  part_opt->needs(class_opt);
  class_opt->needs(part_opt);
  table_opt->excludes(part_opt)->excludes(class_opt);
  chr->callback([&] {
    action = [&] {
      if (table_m > 0) {
        env.inputs = {{"table", table_m}};
        const auto table = character_table(table_m);
        json classes = json::array();
        text << "classes:";
        for (const Partition& lambda : table->partitions()) {
          classes.push_back(lambda.to_string());
          text << ' ' << lambda.to_string();
        }
        text << '\n';
        json rows = json::array();
        for (std::size_t r = 0; r < table->size(); ++r) {
          json vals = json::array();
          text << table->partitions()[r].to_string() << ':';
          for (std::size_t c = 0; c < table->size(); ++c) {
            vals.push_back(to_json((*table)(r, c)));
            text << ' ' << (*table)(r, c);
          }
          text << '\n';
          rows.push_back({{"partition", table->partitions()[r].to_string()}, {"values", vals}});
        }
        env.result = {{"classes", classes}, {"rows", rows}};
        return;
      }
      if (partition_arg.empty()) throw InputError("character needs --partition and --class, or --table");
      const Partition pi = parse_partition(partition_arg);
      const Partition lambda = Partition::from_unsorted(relsym::detail::parse_int_list(class_arg, "cycle type"));
      env.inputs = {{"partition", pi.to_string()}, {"class", lambda.to_string()}};
      const BigInt v = irreducible_character_value(pi, lambda);
      env.result = {{"value", to_json(v)}};
      text << v << '\n';
    };
  });

  // dim
  auto* dim = app.add_subcommand("dim", "dimension of the relative symmetric polynomials H_d(S_m, chi^pi)");
  dim->add_option("--m", m, "degree of the symmetric group")->required()->check(CLI::PositiveNumber);
  dim->add_option("--d", d, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
  dim->add_option("--partition", partition_arg, "character label pi")->required();
  dim->add_flag("--verify", verify, "report every formula and, for small sizes, the exact rank");
  dim->callback([&] {
    action = [&] {
      const Partition pi = parse_partition(partition_arg);
      env.inputs = {{"m", m}, {"d", d}, {"partition", pi.to_string()}};
      DimensionReport r;
      r.m = m;
      r.d = d;
      r.pi = pi;
      r.dim_orbit_sum = dim_via_orbit_sum(m, d, pi);
      r.dim_inner_product = dim_via_inner_product(m, d, pi);
      r.dim_theorem_b = dim_via_theorem_b(m, d, pi);
      r.nonvanishing_witness = is_nonvanishing(m, d, pi).witness;
      const bool formulas_agree = r.dim_orbit_sum == r.dim_inner_product && r.dim_orbit_sum == r.dim_theorem_b;
      const bool criterion_agrees = r.nonvanishing_witness.has_value() == (r.dim_orbit_sum > 0);
      env.result = {{"dimension", to_json(r.dimension())},
                    {"dim_orbit_sum", to_json(r.dim_orbit_sum)},
                    {"dim_inner_product", to_json(r.dim_inner_product)},
                    {"dim_theorem_b", to_json(r.dim_theorem_b)},
                    {"nonvanishing_witness",
                     r.nonvanishing_witness ? json(r.nonvanishing_witness->entries()) : json(nullptr)}};
      text << "dimension: " << r.dimension() << '\n';
      if (verify) {
        text << "orbit sum: " << r.dim_orbit_sum << '\n'
             << "inner product: " << r.dim_inner_product << '\n'
             << "kostka expansion: " << r.dim_theorem_b << '\n';
        env.cross_checks.emplace_back("formulas_agree", formulas_agree);
        env.cross_checks.emplace_back("nonvanishing_matches_dimension", criterion_agrees);
        if (m <= detail::kRankCheckMaxM && gamma_size(m, d) <= detail::kRankCheckMaxGamma) {
          const PermutationGroup g = symmetric_group(m, limits.max_elements);
          const std::size_t rank = dimension_by_rank(g, CharacterSpec::restricted(g, pi, true), d, limits.max_gamma);
          env.result["dim_rank"] = rank;
          text << "exact rank: " << rank << '\n';
          env.cross_checks.emplace_back("rank_matches", BigInt(rank) == r.dim_orbit_sum);
        }
      } else if (!formulas_agree || !criterion_agrees) {
        throw ConsistencyError("dimension formulas disagree; rerun with --verify for details");
      }
      if (r.nonvanishing_witness) text << "witness: " << r.nonvanishing_witness->to_string() << '\n';
    };
  });

  // vanish
  auto* van = app.add_subcommand("vanish", "whether H_d(S_m, chi^pi) is zero, with a witness if not");
  van->add_option("--m", m, "degree of the symmetric group")->required()->check(CLI::PositiveNumber);
  van->add_option("--d", d, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
  van->add_option("--partition", partition_arg, "character label pi")->required();
  van->callback([&] {
    action = [&] {
      const Partition pi = parse_partition(partition_arg);
      env.inputs = {{"m", m}, {"d", d}, {"partition", pi.to_string()}};
      const Nonvanishing v = is_nonvanishing(m, d, pi);
      env.result = {{"nonvanishing", v.nonzero}, {"witness", v.witness ? json(v.witness->entries()) : json(nullptr)}};
      if (v.nonzero) text << "nonvanishing (witness " << v.witness->to_string() << ")\n";
      else text << "vanishes (no witness)\n";
    };
  });

  // symmetrize
  std::string generators_arg;
  std::string character_arg;
  std::string alpha_arg;
  auto* sym = app.add_subcommand("symmetrize", "apply T(G, chi) to a monomial");
  sym->add_option("--generators", generators_arg, "generators in cycle notation, e.g. \"(1 2),(1 2 3)\"")->required();
  sym->add_option("--character", character_arg, "JSON file of class values, or 'trivial' / 'sign'")->required();
  sym->add_option("--alpha", alpha_arg, "exponent vector, e.g. 2,0,0")->required();
  sym->callback([&] {
    action = [&] {
      const ExponentVector alpha = parse_exponent_vector(alpha_arg);
      const PermutationGroup g =
          enumerate_group(parse_permutation_list(generators_arg, alpha.m()), alpha.m(), limits.max_elements);
      const CharacterSpec chi = detail::load_character(character_arg, g);
      env.inputs = {{"generators", generators_arg}, {"character", character_arg}, {"alpha", alpha.entries()}};
      const SymmetrizedPolynomial p = symmetrize_monomial(g, chi, alpha);
      json coeffs = json::array();
      for (const auto& [beta, c] : p.coefficients) {
        coeffs.push_back({{"exponent", beta.entries()}, {"coefficient", to_json(c)}});
        text << c << " * X^" << beta.to_string() << '\n';
      }
      if (p.is_zero()) text << "0\n";
      const NormSquared n = norm_squared(g, chi, alpha);
      env.result = {{"group_order", g.order()}, {"coefficients", coeffs}, {"norm_squared", to_json(n.formula)}};
      text << "norm^2: " << n.formula << '\n';
      env.cross_checks.emplace_back("norm_formula_matches_coefficients", n.formula == n.direct);
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    for (auto* sub : app.get_subcommands()) env.command = sub->get_name();
    action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  }

  if (as_json) {
    out << env.to_json().dump(2) << '\n';
  } else {
    out << text.str();
    for (const auto& [name, ok] : env.cross_checks) out << "check " << name << ": " << (ok ? "pass" : "FAIL") << '\n';
  }
  if (!env.all_checks_passed()) {
    err << "internal consistency failure: a cross-check failed\n";
    return kConsistencyError;
  }
  return kOk;
}

}  // namespace relsym::cli
