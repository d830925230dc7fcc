// Command-line front end over the library's text formats: count, enumerate,
// check, convert, rank, unrank, sample, verify. Results go to stdout; the
// resolved legality mode and all errors go to stderr. Exit codes: 0 success
// (and "legal"/all-PASS), 1 semantic failure ("illegal", FAIL, rejected
// input), 2 usage or parse errors, 3 size-guard refusals, 70 internal
// errors.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cylpath/cylpath.hpp"

using namespace cylpath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 70;

using Json = nlohmann::ordered_json;

// Applies the default (strict for coprime a and b, modm otherwise) and
// always tells the user which mode is in effect.
LegalityMode pick_mode(const Params& p, const std::string& flag) {
  LegalityMode m;
  if (flag == "strict")
    m = LegalityMode::Strict;
  else if (flag == "modm")
    m = LegalityMode::ModM;
  else
    m = p.default_mode();
  std::cerr << "mode: " << mode_name(m) << "\n";
  return m;
}

std::string read_stdin() {
  std::ostringstream ss;
  ss << std::cin.rdbuf();
  return ss.str();
}

BigInt parse_bigint(const std::string& text) {
  std::size_t i = text.size() > 0 && (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size())
    throw parse_error("expected an integer, got \"" + text + "\"");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw parse_error("expected an integer, got \"" + text + "\"");
  return BigInt(text);
}

// Parses the source representation, reaches the target through the
// conversion maps, and renders it.
std::string run_convert(const Params& p, const std::string& from,
                        const std::string& to, const std::string& input) {
  std::optional<Word> w;
  std::optional<CylCycle> c;
  std::optional<WeightFunction> wf;
  std::optional<LapSequence> ls;
  if (from == "word")
    w = parse_word(p, input);
  else if (from == "cycle")
    c = parse_cycle(p, input);
  else if (from == "weights")
    wf = parse_weights(p, input);
  else
    ls = parse_laps(p, input);

  if (to == "word") {
    if (c)
      w = cycle_to_word(*c);
    else if (wf)
      w = cycle_to_word(weights_to_path(*wf));
    else if (ls)
      w = laps_to_word(*ls);
    return format_word(*w) + "\n";
  }
  if (to == "cycle") {
    if (w)
      c = word_to_cycle(*w);
    else if (wf)
      c = weights_to_path(*wf);
    else if (ls)
      c = weights_to_path(laps_to_weights(*ls));
    return format_cycle(*c) + "\n";
  }
  if (to == "weights") {
    if (w)
      wf = path_to_weights(word_to_cycle(*w));
    else if (c)
      wf = path_to_weights(*c);
    else if (ls)
      wf = laps_to_weights(*ls);
    return format_weights(*wf);
  }
  if (w)
    ls = word_to_laps(*w);
  else if (c)
    ls = weights_to_laps(path_to_weights(*c));
  else if (wf)
    ls = weights_to_laps(*wf);
  return format_laps(*ls);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cylindrical lattice-path words: count, enumerate, check, convert, "
      "rank, sample, verify",
      "cylpath"};
  app.require_subcommand(1);

  int a = 0, b = 0, n = 0, n_max = 0, count = 1;
  std::uint64_t seed = 0;
  std::string mode_flag, format = "text", word_text, from, to, rank_text;
  bool force = false;

  const auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("-a", a, "up-step size")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("-b", b, "down-step size")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  const auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_flag,
                    "legality mode; defaults to strict when gcd(a,b)=1, "
                    "modm otherwise")
        ->check(CLI::IsMember({"strict", "modm"}));
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  const auto add_force = [&](CLI::App* cmd) {
    cmd->add_flag("--force", force, "run even past the size guard");
  };

  CLI::App* cmd_count = app.add_subcommand(
      "count", "number of legal words of length (a+b)*n, by formula");
  add_params(cmd_count);
  cmd_count->add_option("-n", n, "number of laps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_mode(cmd_count);
  add_format(cmd_count);

  CLI::App* cmd_enumerate = app.add_subcommand(
      "enumerate", "list every legal word of length (a+b)*n");
  add_params(cmd_enumerate);
  cmd_enumerate->add_option("-n", n, "number of laps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_mode(cmd_enumerate);
  add_force(cmd_enumerate);
  add_format(cmd_enumerate);

  CLI::App* cmd_check =
      app.add_subcommand("check", "test a word for legality and report "
                                  "every offending span");
  add_params(cmd_check);
  cmd_check->add_option("--word", word_text, "word text, e.g. \"+3-2-2+3-2\"")
      ->required();
  add_mode(cmd_check);
  add_format(cmd_check);

  CLI::App* cmd_convert = app.add_subcommand(
      "convert", "convert between representations (stdin to stdout)");
  add_params(cmd_convert);
  const std::vector<std::string> reps{"word", "cycle", "weights", "laps"};
  cmd_convert->add_option("--from", from, "input representation")
      ->required()
      ->check(CLI::IsMember(reps));
  cmd_convert->add_option("--to", to, "output representation")
      ->required()
      ->check(CLI::IsMember(reps));
  add_format(cmd_convert);

  CLI::App* cmd_rank =
      app.add_subcommand("rank", "position of a legal word in rank order");
  add_params(cmd_rank);
  cmd_rank->add_option("--word", word_text, "word text")->required();
  add_format(cmd_rank);

  CLI::App* cmd_unrank =
      app.add_subcommand("unrank", "legal word at a given rank");
  add_params(cmd_unrank);
  cmd_unrank->add_option("-n", n, "number of laps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_unrank->add_option("--rank", rank_text, "rank, a nonnegative integer")
      ->required();
  add_format(cmd_unrank);

  CLI::App* cmd_sample =
      app.add_subcommand("sample", "draw legal words uniformly at random");
  add_params(cmd_sample);
  cmd_sample->add_option("-n", n, "number of laps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_sample->add_option("--seed", seed, "random seed")->capture_default_str();
  cmd_sample->add_option("--count", count, "number of samples")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_format(cmd_sample);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "cross-check formula, enumeration and the conversion maps "
                "for every n up to a bound");
  add_params(cmd_verify);
  cmd_verify->add_option("--n-max", n_max, "largest n to check")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_mode(cmd_verify);
  add_force(cmd_verify);
  add_format(cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  const bool as_json = format == "json";
  int rc = kExitOk;
  try {
    if (app.got_subcommand(cmd_count)) {
      const Params p(a, b);
      const LegalityMode mode = pick_mode(p, mode_flag);
      const BigInt total = count_formula(p, n, mode);
      if (as_json) {
        const Json out{{"a", a},
                       {"b", b},
                       {"n", n},
                       {"mode", mode_name(mode)},
                       {"count", total.str()}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << total.str() << "\n";
      }

    } else if (app.got_subcommand(cmd_enumerate)) {
      const Params p(a, b);
      const LegalityMode mode = pick_mode(p, mode_flag);
      const auto words = brute_force_legal_words(p, n, mode, force);
      if (as_json) {
        Json list = Json::array();
        for (const Word& w : words) list.push_back(format_word(w));
        const Json out{{"a", a},           {"b", b},
                       {"n", n},           {"mode", mode_name(mode)},
                       {"count", words.size()}, {"words", list}};
        std::cout << out.dump() << "\n";
      } else {
        for (const Word& w : words) std::cout << format_word(w) << "\n";
      }

    } else if (app.got_subcommand(cmd_check)) {
      const Params p(a, b);
      const LegalityMode mode = pick_mode(p, mode_flag);
      const Word w = parse_word(p, word_text);
      const auto spans = find_illegal_subwords(w, mode);
      if (as_json) {
        Json list = Json::array();
        for (const auto& [i, j] : spans) list.push_back(Json::array({i, j}));
        const Json out{{"word", format_word(w)},
                       {"mode", mode_name(mode)},
                       {"legal", spans.empty()},
                       {"spans", list}};
        std::cout << out.dump() << "\n";
      } else if (spans.empty()) {
        std::cout << "legal\n";
      } else {
        std::cout << "illegal\n";
        for (const auto& [i, j] : spans) std::cout << i << " " << j << "\n";
      }
      if (!spans.empty()) rc = kExitFail;

    } else if (app.got_subcommand(cmd_convert)) {
      const Params p(a, b);
      const std::string converted = run_convert(p, from, to, read_stdin());
      if (as_json) {
        const Json out{{"from", from}, {"to", to}, {"output", converted}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << converted;
      }

    } else if (app.got_subcommand(cmd_rank)) {
      const Params p(a, b);
      const Word w = parse_word(p, word_text);
      const BigInt r = rank_word(w);
      if (as_json) {
        const Json out{
            {"a", a}, {"b", b}, {"word", format_word(w)}, {"rank", r.str()}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << r.str() << "\n";
      }

    } else if (app.got_subcommand(cmd_unrank)) {
      const Params p(a, b);
      const BigInt r = parse_bigint(rank_text);
      const Word w = unrank_word(p, n, r);
      if (as_json) {
        const Json out{{"a", a},
                       {"b", b},
                       {"n", n},
                       {"rank", r.str()},
                       {"word", format_word(w)}};
        std::cout << out.dump() << "\n";
      } else {
        std::cout << format_word(w) << "\n";
      }

    } else if (app.got_subcommand(cmd_sample)) {
      const Params p(a, b);
      const auto words = sample_words(p, n, seed, count);
      if (as_json) {
        Json list = Json::array();
        for (const Word& w : words) list.push_back(format_word(w));
        const Json out{{"a", a},       {"b", b},
                       {"n", n},       {"seed", seed},
                       {"count", count}, {"words", list}};
        std::cout << out.dump() << "\n";
      } else {
        for (const Word& w : words) std::cout << format_word(w) << "\n";
      }

    } else if (app.got_subcommand(cmd_verify)) {
      const Params p(a, b);
      const LegalityMode mode = pick_mode(p, mode_flag);
      const auto reports = verify(p, n_max, mode, force);
      bool all_pass = true;
      for (const auto& r : reports) all_pass &= r.pass();
      if (as_json) {
        Json list = Json::array();
        for (const auto& r : reports)
          list.push_back(Json{{"n", r.n},
                              {"formula", r.formula_count.str()},
                              {"brute", r.brute_count->str()},
                              {"agree", *r.agree},
                              {"image_ok", *r.image_ok},
                              {"roundtrips_ok", *r.roundtrips_ok},
                              {"pass", r.pass()}});
        const Json out{{"a", a},
                       {"b", b},
                       {"mode", mode_name(mode)},
                       {"n_max", n_max},
                       {"pass", all_pass},
                       {"reports", list}};
        std::cout << out.dump() << "\n";
      } else {
        for (const auto& r : reports) {
          std::cout << "n=" << r.n << " formula=" << r.formula_count.str()
                    << " brute=" << r.brute_count->str() << " image="
                    << (*r.image_ok ? "OK" : "MISMATCH") << " roundtrips="
                    << (*r.roundtrips_ok ? "OK" : "MISMATCH") << " "
                    << (r.pass() ? "PASS" : "FAIL") << "\n";
        }
      }
      if (!all_pass) rc = kExitFail;
    }

  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const size_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return rc;
}
