// edr: certificate documents for gcds, condition (K), matrix reduction and
// the related witnesses over Z, Q[X] and Z + X Q[X].

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "edr/edr.h"

namespace {

enum Exit { kOk = 0, kUnverified = 1, kInvalid = 2, kBudget = 3 };

int exit_code(edr_status s) {
  switch (s) {
    case EDR_OK: return kOk;
    case EDR_ERR_SEARCH_EXHAUSTED:
    case EDR_ERR_CAP_EXCEEDED: return kBudget;
    case EDR_ERR_TRANSFORM_FAILED:
    case EDR_ERR_INTERNAL: return kUnverified;
    default: return kInvalid;
  }
}

struct SplitArgs {
  std::vector<std::string> flags;  // program name, subcommand and options
  std::vector<std::string> operands;
};

// Operands are separated before CLI11 sees the command line: element texts
// such as "-x" look like short options and CLI11 splits "[a,b]" into a list.
SplitArgs split_args(int argc, char** argv) {
  static const std::set<std::string> valued = {"--ring", "--cap", "--seed", "--from"};
  static const std::set<std::string> bare = {"-h", "--help"};
  std::vector<std::string> flags, positional;
  bool seen_command = false, rest = false;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (rest) {
      positional.push_back(a);
    } else if (a == "--") {
      rest = true;
    } else if (valued.count(a)) {
      flags.push_back(a);
      if (i + 1 < argc) flags.push_back(argv[++i]);
    } else if (bare.count(a) || (a.rfind("--", 0) == 0 && a.find('=') != std::string::npos)) {
      flags.push_back(a);
    } else if (!seen_command && a.rfind("-", 0) != 0) {
      flags.push_back(a);
      seen_command = true;
    } else if (!seen_command) {
      flags.push_back(a);
    } else {
      positional.push_back(a);
    }
  }
  flags.insert(flags.begin(), argv[0]);
  return {std::move(flags), std::move(positional)};
}

struct Options {
  std::string ring;
  std::size_t cap = 256;
  unsigned long long seed = 0;
  std::string from;
};

CLI::App* add_command(CLI::App& app, const std::string& name, const std::string& help,
                      Options& opt, bool needs_ring = true) {
  CLI::App* sub = app.add_subcommand(name, help);
  auto* ring = sub->add_option("--ring", opt.ring, "int, polyq or pullback")
                   ->check(CLI::IsMember({"int", "polyq", "pullback"}));
  if (needs_ring) ring->required();
  sub->add_option("--cap", opt.cap, "diagonal reduction pass budget")
      ->check(CLI::PositiveNumber);
  sub->add_option("--seed", opt.seed, "reserved for test harness sampling");
  return sub;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elementary divisor ring toolkit"};
  app.require_subcommand(1);
  Options opt;

  add_command(app, "gcd", "Bezout certificate for gcd(f, g)", opt);
  add_command(app, "comax", "decide (f, g) == (1)", opt);
  add_command(app, "kaplansky", "p, q with (pa, pb + qc) == (1)", opt);
  add_command(app, "hermite", "triangular form P*A == T", opt);
  add_command(app, "diag", "diagonal form P*A*Q == D", opt);
  add_command(app, "crit", "x + lambda*y == u*v with (u, z) == (v, 1 - z) == (1)", opt);
  add_command(app, "critdomain", "x + lambda*y divides y(1 - az)(1 - b(1 - z))", opt);
  add_command(app, "asr1", "lambda with (x + lambda*y, z) == (1), or a refutation", opt);
  CLI::App* transform = add_command(app, "transform", "convert between witness forms", opt);
  transform->add_option("--from", opt.from, "source witness kind")
      ->required()
      ->check(CLI::IsMember({"kaplansky", "factorization", "pq3", "star"}));
  add_command(app, "demo", "worked example report (demo mcgovern)", opt, false);

  SplitArgs split = split_args(argc, argv);
  std::vector<char*> cargv;
  for (auto& s : split.flags) cargv.push_back(s.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  edr_ring ring = EDR_RING_PULLBACK;
  if (!opt.ring.empty() && edr_ring_from_name(opt.ring.c_str(), &ring) != EDR_OK) {
    std::cerr << "edr: " << edr_last_error() << "\n";
    return kInvalid;
  }

  std::vector<std::string> args;
  if (command == "transform") args.push_back(opt.from);
  args.insert(args.end(), split.operands.begin(), split.operands.end());
  std::vector<const char*> cargs;
  for (const auto& a : args) cargs.push_back(a.c_str());

  char* json = nullptr;
  int verified = 0;
  const edr_status s = edr_document(command.c_str(), ring, cargs.data(), cargs.size(), opt.cap,
                                    &json, &verified);
  if (s != EDR_OK) {
    std::cerr << "edr " << command << ": " << edr_status_name(s) << ": " << edr_last_error()
              << "\n";
    return exit_code(s);
  }
  std::fputs(json, stdout);
  edr_string_free(json);
  if (!verified) {
    std::cerr << "edr " << command << ": verification failed\n";
    return kUnverified;
  }
  return kOk;
}
