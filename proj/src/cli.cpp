#include "altnf/cli.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "altnf/carmichael.hpp"
#include "altnf/error.hpp"
#include "altnf/normal_form.hpp"
#include "altnf/permutation.hpp"
#include "altnf/presentation.hpp"
#include "altnf/report.hpp"
#include "altnf/word.hpp"

namespace altnf {

namespace {

using nlohmann::ordered_json;

std::vector<Permutation> standard_images(int n) {
  std::vector<Permutation> images;
  for (int i = 1; i <= n - 2; ++i)
    images.push_back(Permutation::three_cycle(i, n));
  return images;
}

/// Shared body for normalize, encode and unrank: the element in all three
/// presentations, with an optional leading rank.
void print_element(std::ostream &out, const NormalFormTuple &t, bool json,
                   const char *command, const std::uint64_t *rank_value) {
  Word w = nf_to_word(t);
  Permutation p = nf_evaluate(t);
  if (json) {
    ordered_json o;
    o["command"] = command;
    o["n"] = t.n;
    if (rank_value)
      o["rank"] = *rank_value;
    o["tuple"] = format_tuple(t);
    o["word"] = format_word(w);
    o["perm"] = format_perm_cycles(p);
    out << o.dump() << "\n";
  } else {
    if (rank_value)
      out << "rank " << *rank_value << "\n";
    out << "tuple " << format_tuple(t) << "\n"
        << "word " << format_word(w) << "\n"
        << "perm " << format_perm_cycles(p) << "\n";
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string &text) {
  std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw error("range must look like a..b, got \"" + text + "\"");
  auto part = [&](std::string piece, const char *side) -> std::uint64_t {
    if (piece.empty() ||
        piece.find_first_not_of("0123456789") != std::string::npos)
      throw error(std::string("range ") + side +
                  " bound must be an unsigned integer, got \"" + piece + "\"");
    return std::stoull(piece);
  };
  return {part(text.substr(0, dots), "lower"),
          part(text.substr(dots + 2), "upper")};
}

/// Exhaustive round trip decode(evaluate(t)) == t, with the canonical-word
/// letter bounds checked on the same sweep.
VerificationReport check_bijectivity(int n) {
  VerificationReport rep;
  rep.check = "bijectivity";
  rep.n = n;
  rep.passed = true;
  std::int64_t tuples = 0;
  std::int64_t bound_violations = 0;
  enumerate(n, [&](std::uint64_t r, const NormalFormTuple &t,
                   const Permutation &p) {
    ++tuples;
    NormalFormTuple back = encode_perm(p);
    if (back.k != t.k && rep.passed) {
      rep.passed = false;
      rep.counterexample = {{"rank", std::to_string(r)},
                            {"tuple", format_tuple(t)},
                            {"reencoded", format_tuple(back)},
                            {"perm", format_perm_cycles(p)}};
    }
    std::vector<int> letter_count(n, 0);
    for (const Letter &l : nf_to_word(t).letters)
      ++letter_count[l.index];
    for (int j = 1; j <= n - 2; ++j)
      if (letter_count[j] > n - j - 1) {
        ++bound_violations;
        if (rep.passed) {
          rep.passed = false;
          rep.counterexample = {{"tuple", format_tuple(t)},
                                {"letter", "x" + std::to_string(j)},
                                {"count", std::to_string(letter_count[j])},
                                {"bound", std::to_string(n - j - 1)}};
        }
      }
  });
  rep.stats = {{"tuples", tuples},
               {"letter_bound_violations", bound_violations}};
  return rep;
}

/// Runs every admissible parameter of the named chains and folds the
/// results into one report.
VerificationReport run_scripts_check(const std::string &check_name,
                                     const std::vector<std::string> &names,
                                     int n) {
  VerificationReport agg;
  agg.check = check_name;
  agg.n = n;
  agg.passed = true;
  std::int64_t chains = 0, steps = 0, level2 = 0, citations = 0;
  for (const std::string &name : names) {
    const DerivationScript &script = find_script(name);
    if (n < script.min_n)
      continue;
    for (int i = 1; i <= script.max_param(n); ++i) {
      VerificationReport r = verify_derivation(script, i, n);
      ++chains;
      steps += r.stats["steps"];
      level2 += r.stats["level2_matched"];
      citations += r.stats["citations_checked"];
      if (!r.passed && agg.passed) {
        agg.passed = false;
        agg.counterexample = r.counterexample;
        agg.counterexample["script"] = script.name;
        agg.counterexample["i"] = std::to_string(i);
      }
    }
  }
  if (chains == 0)
    throw error("no admissible chain instance at degree " + std::to_string(n));
  agg.stats = {{"chains", chains},
               {"steps", steps},
               {"level2_matched", level2},
               {"citations", citations}};
  return agg;
}

VerificationReport run_check(const std::string &name, int n,
                             std::uint64_t budget) {
  if (name == "relations")
    return check_assignment(standard_images(n), n);
  if (name == "bijectivity")
    return check_bijectivity(n);
  if (name == "theorem2")
    return run_scripts_check("theorem2", {"theorem2"}, n);
  if (name == "collisions")
    return run_scripts_check("collisions",
                             {"xtop_square", "collision", "n4_special"}, n);
  if (name == "carmichael")
    return check_carmichael(n);
  if (name == "stationarity")
    return check_stationarity(n);
  if (name == "solutions")
    return census_solutions(n, budget);
  throw error("unknown check \"" + name +
              "\"; expected one of relations, bijectivity, theorem2, "
              "collisions, carmichael, stationarity, solutions");
}

std::vector<VerificationReport> run_all_checks(int n, std::uint64_t budget) {
  std::vector<VerificationReport> reports;
  reports.push_back(run_check("relations", n, budget));
  if (n <= 8)
    reports.push_back(run_check("bijectivity", n, budget));
  if (n >= 5)
    reports.push_back(run_check("theorem2", n, budget));
  if (n >= 4)
    reports.push_back(run_check("collisions", n, budget));
  if (n >= 4)
    reports.push_back(run_check("carmichael", n, budget));
  if (n >= 5)
    reports.push_back(run_check("stationarity", n, budget));
  if (n >= 5 && n <= 7)
    reports.push_back(run_check("solutions", n, budget));
  return reports;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Normal forms, ranking and verification for the local "
               "presentation of the alternating group",
               "altnf"};
  app.require_subcommand(1);

  struct {
    int n = 0;
    std::string format = "text";
    std::string payload;
    std::string to;
    std::string check;
    bool all = false;
    bool count_only = false;
    std::string range;
    std::uint64_t rank_value = 0;
    std::uint64_t budget = 50000000;
  } opt;

  auto add_common = [&](CLI::App *cmd) {
    cmd->add_option("--n", opt.n, "degree of the permutation domain")
        ->required();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App *c_normalize =
      app.add_subcommand("normalize", "Rewrite a word to its canonical tuple");
  add_common(c_normalize);
  c_normalize->add_option("word", opt.payload, "word over the x alphabet")
      ->required();

  CLI::App *c_encode = app.add_subcommand(
      "encode", "Canonical tuple of an even permutation");
  add_common(c_encode);
  c_encode
      ->add_option("perm", opt.payload, "permutation, cycle or one-line form")
      ->required();

  CLI::App *c_evaluate =
      app.add_subcommand("evaluate", "Evaluate a word to a permutation");
  add_common(c_evaluate);
  c_evaluate->add_option("word", opt.payload, "word over the x or v alphabet")
      ->required();

  CLI::App *c_rank = app.add_subcommand("rank", "Mixed-radix rank of a tuple");
  add_common(c_rank);
  c_rank->add_option("tuple", opt.payload, "digits k1,k2,...")->required();

  CLI::App *c_unrank =
      app.add_subcommand("unrank", "Tuple with the given rank");
  add_common(c_unrank);
  c_unrank->add_option("rank", opt.rank_value, "rank in [0, n!/2)")
      ->required();

  CLI::App *c_enumerate =
      app.add_subcommand("enumerate", "List every tuple in rank order");
  add_common(c_enumerate);
  c_enumerate->add_flag("--count-only", opt.count_only,
                        "print only the number of tuples");
  c_enumerate->add_option("--range", opt.range, "half-open rank range a..b");

  CLI::App *c_convert = app.add_subcommand(
      "convert", "Rewrite between the local and Carmichael generators");
  add_common(c_convert);
  c_convert->add_option("--to", opt.to, "target generating set")
      ->required()
      ->check(CLI::IsMember({"carmichael", "local"}));
  c_convert->add_option("word", opt.payload, "word to rewrite")->required();

  CLI::App *c_verify =
      app.add_subcommand("verify", "Run the verification suites");
  add_common(c_verify);
  c_verify->add_option("--check", opt.check,
                       "relations|bijectivity|theorem2|collisions|carmichael|"
                       "stationarity|solutions");
  c_verify->add_flag("--all", opt.all,
                     "every check applicable at this degree");
  c_verify->add_option("--budget", opt.budget, "node budget for the census")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool json = opt.format == "json";
  try {
    if (c_normalize->parsed()) {
      NormalFormTuple t = normalize_word(parse_word(opt.payload), opt.n);
      print_element(out, t, json, "normalize", nullptr);
      return 0;
    }
    if (c_encode->parsed()) {
      NormalFormTuple t = encode_perm(parse_perm(opt.payload, opt.n));
      print_element(out, t, json, "encode", nullptr);
      return 0;
    }
    if (c_evaluate->parsed()) {
      Permutation p = evaluate(parse_word(opt.payload), opt.n);
      if (json) {
        ordered_json o;
        o["command"] = "evaluate";
        o["n"] = opt.n;
        o["perm"] = format_perm_cycles(p);
        o["images"] = p.images();
        out << o.dump() << "\n";
      } else {
        out << "perm " << format_perm_cycles(p) << "\n"
            << "images " << format_perm(p) << "\n";
      }
      return 0;
    }
    if (c_rank->parsed()) {
      NormalFormTuple t = parse_tuple(opt.payload);
      if (t.n != opt.n)
        throw error("tuple has " + std::to_string(t.n - 2) +
                    " digits, so its degree is " + std::to_string(t.n) +
                    ", not " + std::to_string(opt.n));
      std::uint64_t r = rank(t);
      if (json) {
        ordered_json o;
        o["command"] = "rank";
        o["n"] = opt.n;
        o["tuple"] = format_tuple(t);
        o["rank"] = r;
        out << o.dump() << "\n";
      } else {
        out << r << "\n";
      }
      return 0;
    }
    if (c_unrank->parsed()) {
      NormalFormTuple t = unrank(opt.n, opt.rank_value);
      print_element(out, t, json, "unrank", &opt.rank_value);
      return 0;
    }
    if (c_enumerate->parsed()) {
      std::uint64_t total = tuple_count(opt.n);
      std::uint64_t lo = 0, hi = total;
      if (!opt.range.empty()) {
        std::tie(lo, hi) = parse_range(opt.range);
        if (lo > hi || hi > total)
          throw error("range " + std::to_string(lo) + ".." +
                      std::to_string(hi) + " out of bounds for " +
                      std::to_string(total) + " tuples");
      }
      if (opt.count_only) {
        if (json) {
          ordered_json o;
          o["command"] = "enumerate";
          o["n"] = opt.n;
          o["count"] = hi - lo;
          out << o.dump() << "\n";
        } else {
          out << hi - lo << "\n";
        }
        return 0;
      }
      auto emit = [&](std::uint64_t r, const NormalFormTuple &t,
                      const Permutation &p) {
        if (json) {
          ordered_json o;
          o["rank"] = r;
          o["tuple"] = format_tuple(t);
          o["images"] = p.images();
          out << o.dump() << "\n";
        } else {
          out << r << "\t" << format_tuple(t) << "\t" << format_perm(p)
              << "\n";
        }
      };
      if (lo == 0 && hi == total)
        enumerate(opt.n, emit);
      else
        enumerate_range(opt.n, lo, hi, emit);
      return 0;
    }
    if (c_convert->parsed()) {
      Word input = parse_word(opt.payload);
      Word output = opt.to == "carmichael" ? x_to_v(input, opt.n)
                                           : v_to_x(input, opt.n);
      if (json) {
        ordered_json o;
        o["command"] = "convert";
        o["n"] = opt.n;
        o["to"] = opt.to;
        o["input"] = format_word(input);
        o["word"] = format_word(output);
        out << o.dump() << "\n";
      } else {
        out << format_word(output) << "\n";
      }
      return 0;
    }
    if (c_verify->parsed()) {
      if (opt.all != opt.check.empty()) // --all alone, or --check alone
        throw error("verify needs exactly one of --check <name> or --all");
      std::vector<VerificationReport> reports;
      if (opt.all)
        reports = run_all_checks(opt.n, opt.budget);
      else
        reports.push_back(run_check(opt.check, opt.n, opt.budget));
      bool ok = true;
      for (const VerificationReport &r : reports) {
        ok = ok && r.passed;
        out << (json ? to_json(r) : to_text(r)) << "\n";
      }
      return ok ? 0 : 1;
    }
    throw error("no command given");
  } catch (const error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace altnf
