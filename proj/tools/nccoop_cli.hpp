#ifndef NCCOOP_TOOLS_CLI_HPP
#define NCCOOP_TOOLS_CLI_HPP

#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "nccoop/nccoop.hpp"

namespace nccoop::cli {

enum exit_code : int { ok = 0, invalid = 1, missing_moment = 2 };

namespace detail {

inline std::vector<Variable> parse_args_list(const std::string& text) {
  std::vector<Variable> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = text.find(',', start);
    std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (tok.empty()) throw parse_error("empty variable name in --args '" + text + "'");
    out.push_back(Variable{tok});
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline AlphabetPtr parse_alphabet(const std::string& text) {
  // Same syntax as words: "abc" or "a1,a2,a3"; order is kept as written.
  std::vector<std::string> names;
  if (text.find(',') != std::string::npos) {
    std::size_t start = 0;
    for (;;) {
      const auto comma = text.find(',', start);
      names.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) names.emplace_back(1, c);
  }
  return Alphabet::make(std::move(names));
}

inline const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-crossing word cooperad and free/Boolean/classical cumulants in exact arithmetic", "nccoop"};
  app.require_subcommand(1);

  std::string word_text;
  std::string alphabet_text;
  bool nc = false;
  std::size_t alphabet_size = 0;
  std::size_t max_len = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 20161015;
  std::size_t n = 0;
  bool count_only = false;
  std::string moments_path;
  std::string cumulants_path;
  std::string kind = "free";
  std::string args_text;
  std::size_t up_to = 0;
  bool as_json = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "Print the reduced form of a word");
  reduce_cmd->add_option("word", word_text, "Word, e.g. aabca or a1,a2,a1")->required();

  auto* check_cmd = app.add_subcommand("check", "Report the reduced/non-crossing/pangrammatic flags of a word");
  check_cmd->add_option("word", word_text, "Word")->required();
  check_cmd->add_option("--alphabet", alphabet_text, "Alphabet (defaults to the letters of the word)");

  auto* decompose_cmd = app.add_subcommand("decompose", "List the decomposition terms of a word");
  decompose_cmd->add_option("word", word_text, "Pangrammatic reduced word")->required();
  decompose_cmd->add_flag("--nc", nc, "Use the non-crossing quotient");

  auto* coassoc_cmd = app.add_subcommand("coassoc", "Check coassociativity exhaustively and on random samples");
  coassoc_cmd->add_option("--alphabet-size", alphabet_size, "Largest alphabet size")->required()->check(CLI::Range(1, 26));
  coassoc_cmd->add_option("--max-len", max_len, "Largest word length")->required()->check(CLI::PositiveNumber);
  coassoc_cmd->add_flag("--nc", nc, "Check the non-crossing cooperad");
  coassoc_cmd->add_option("--samples", samples, "Additional random words");
  coassoc_cmd->add_option("--seed", seed, "Seed for the random words");

  auto* ncp_cmd = app.add_subcommand("ncpartitions", "List the non-crossing partitions of [N]");
  ncp_cmd->add_option("N", n, "Size")->required()->check(CLI::PositiveNumber);
  ncp_cmd->add_flag("--count-only", count_only, "Print only the count");

  auto* surj_cmd = app.add_subcommand("surjections", "List the canonical surjections out of [N]");
  surj_cmd->add_option("N", n, "Size")->required()->check(CLI::PositiveNumber);

  auto* cum_cmd = app.add_subcommand("cumulants", "Compute a cumulant from a moment table");
  cum_cmd->add_option("--moments", moments_path, "Moment table (JSON)")->required();
  cum_cmd->add_option("--kind", kind, "free, boolean, classical or word")
      ->check(CLI::IsMember({"free", "boolean", "classical", "word"}));
  cum_cmd->add_option("--word", word_text, "Word for --kind word");
  cum_cmd->add_option("--args", args_text, "Comma-separated variables, one per slot (or per letter)")->required();
  cum_cmd->add_option("--up-to", up_to, "Batch: orders 1..N of a single variable");
  cum_cmd->add_flag("--json", as_json, "Emit JSON records");

  auto* mom_cmd = app.add_subcommand("moments", "Moments from a free cumulant sequence");
  mom_cmd->add_option("--cumulants", cumulants_path, "Cumulant sequence (JSON)")->required();
  mom_cmd->add_option("--up-to", up_to, "Highest moment order")->required()->check(CLI::PositiveNumber);
  mom_cmd->add_flag("--json", as_json, "Emit JSON records");

  std::vector<std::string> argv_store;
  argv_store.push_back("nccoop");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return invalid;
  }

  try {
    if (reduce_cmd->parsed()) {
      auto parsed = parse_word(word_text);
      out << format_word(reduce(parsed.word), parsed.syntax) << "\n";
    } else if (check_cmd->parsed()) {
      const Word w = alphabet_text.empty() ? parse_word(word_text).word
                                           : parse_word(word_text, detail::parse_alphabet(alphabet_text));
      out << "reduced: " << detail::flag(is_reduced(w)) << "\n"
          << "noncrossing: " << detail::flag(is_noncrossing(w)) << "\n"
          << "pangrammatic: " << detail::flag(is_pangrammatic(w)) << "\n";
    } else if (decompose_cmd->parsed()) {
      auto parsed = parse_word(word_text);
      const auto terms = nc ? decompose_nc(parsed.word) : decompose(parsed.word);
      for (const auto& t : terms) out << format_term(t, parsed.syntax) << "\n";
    } else if (coassoc_cmd->parsed()) {
      const auto which = nc ? CooperadKind::noncrossing : CooperadKind::word;
      std::size_t words = 0;
      CoassociativityReport total;
      auto check = [&](const Word& w) {
        auto r = coassociativity_report(w, which);
        ++words;
        total.chains += r.chains;
        total.failures += r.failures;
        if (!r.ok()) err << "coassociativity failure: " << format_word(w) << "\n";
      };
      for (std::size_t k = 1; k <= alphabet_size; ++k) {
        auto alphabet = Alphabet::latin(k);
        for (const auto& w : nc ? enumerate_nc_basis(alphabet, max_len) : enumerate_basis(alphabet, max_len)) check(w);
      }
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < samples;) {
        Word w = random_basis_word(rng, alphabet_size, max_len);
        if (nc && !is_noncrossing(w)) continue;
        check(w);
        ++i;
      }
      out << "words=" << words << " chains=" << total.chains << " failures=" << total.failures << "\n";
      return total.ok() ? ok : invalid;
    } else if (ncp_cmd->parsed()) {
      const auto partitions = enumerate_nc_partitions(n);
      if (count_only) {
        out << partitions.size() << "\n";
      } else {
        for (const auto& p : partitions) out << format_blocks(p.surjection()) << "\n";
      }
    } else if (surj_cmd->parsed()) {
      for (const auto& f : enumerate_canonical_surjections(n)) {
        std::string assignment;
        for (std::size_t i = 0; i < f.domain_size(); ++i) {
          if (i) assignment += ',';
          assignment += std::to_string(f(i) + 1);
        }
        out << assignment << " " << format_blocks(f) << "\n";
      }
    } else if (cum_cmd->parsed()) {
      const MomentFunctional E = load_moments(moments_path);
      const auto vars = detail::parse_args_list(args_text);
      CumulantTable table(E);
      auto emit = [&](std::string_view k, const std::vector<Variable>& a, const Rat& value) {
        if (as_json)
          out << cumulant_record(k, a, value).dump() << "\n";
        else
          out << format_rat(value) << "\n";
      };
      auto compute = [&](const std::vector<Variable>& a) -> Rat {
        if (kind == "free") return table.free_cumulant(a);
        if (kind == "boolean") return boolean_cumulant(E, a);
        return classical_cumulant(E, a);
      };
      if (kind == "word") {
        if (word_text.empty()) throw validation_error("--kind word requires --word");
        if (up_to != 0) throw validation_error("--up-to does not apply to --kind word");
        auto parsed = parse_word(word_text);
        const Rat value = table.word_cumulant(parsed.word, vars);
        if (as_json) {
          auto rec = cumulant_record("word", vars, value);
          rec["word"] = format_word(parsed.word, parsed.syntax);
          out << rec.dump() << "\n";
        } else {
          out << format_rat(value) << "\n";
        }
      } else if (up_to != 0) {
        if (vars.size() != 1) throw validation_error("--up-to takes exactly one variable in --args");
        for (std::size_t order = 1; order <= up_to; ++order) {
          std::vector<Variable> a(order, vars.front());
          emit(kind, a, compute(a));
        }
      } else {
        emit(kind, vars, compute(vars));
      }
    } else if (mom_cmd->parsed()) {
      const auto kappas = load_cumulant_sequence(cumulants_path);
      if (up_to > kappas.size())
        throw validation_error("cumulant file gives " + std::to_string(kappas.size()) + " orders, --up-to needs " +
                               std::to_string(up_to));
      const auto m = moments_from_free_cumulants(std::span<const Rat>(kappas).first(up_to));
      for (std::size_t order = 1; order <= up_to; ++order) {
        if (as_json) {
          json rec;
          rec["kind"] = "moment";
          rec["N"] = order;
          rec["value"] = format_rat(m[order]);
          out << rec.dump() << "\n";
        } else {
          out << "m" << order << " = " << format_rat(m[order]) << "\n";
        }
      }
    }
  } catch (const missing_moment_error& e) {
    err << "error: " << e.what() << "\n";
    return missing_moment;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }
  return ok;
}

}  // namespace nccoop::cli

#endif  // NCCOOP_TOOLS_CLI_HPP
