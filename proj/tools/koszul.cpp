#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "koszul/driver.hpp"
#include "koszul/errors.hpp"
#include "koszul/version.hpp"

namespace {

// One subcommand front: CLI11 fills the JobSpec, the driver validates it.
struct Front {
  CLI::App* cmd = nullptr;
  koszul::JobSpec job;
  bool json = false;
};

bool color_enabled() {
  if (std::getenv("NO_COLOR") != nullptr) return false;
  return isatty(fileno(stdout)) != 0;
}

void print_text(const koszul::Report& rep) {
  std::string text = rep.text_dump();
  if (!color_enabled()) {
    std::cout << text;
    return;
  }
  std::istringstream ss(text);
  std::string l;
  while (std::getline(ss, l)) {
    if (l.rfind("PASS", 0) == 0)
      std::cout << "\x1b[32mPASS\x1b[0m" << l.substr(4) << "\n";
    else if (l.rfind("FAIL", 0) == 0)
      std::cout << "\x1b[31mFAIL\x1b[0m" << l.substr(4) << "\n";
    else
      std::cout << l << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Hilbert series data, Golod obstructions, monomial certificates and "
      "truncated graded resolutions for desk-scale examples"};
  app.set_version_flag("--version",
                       std::string("koszul ") + koszul::kToolkitVersion);
  app.require_subcommand(1);

  std::vector<std::unique_ptr<Front>> fronts;
  auto sub = [&](const std::string& name, const std::string& desc) -> Front& {
    fronts.push_back(std::make_unique<Front>());
    Front& f = *fronts.back();
    f.cmd = app.add_subcommand(name, desc);
    f.job.command = name;
    f.cmd->add_flag("--json", f.json, "emit the JSON report instead of text");
    return f;
  };
  auto opt = [](Front& f, const std::string& key, const std::string& help) {
    f.cmd->add_option_function<std::string>(
        "--" + key,
        [&f, key](const std::string& v) { f.job.options[key] = v; }, help);
  };
  auto pair_opt = [](Front& f, const std::string& key,
                     const std::string& help) {
    f.cmd
        ->add_option_function<std::vector<std::string>>(
            "--" + key,
            [&f, key](const std::vector<std::string>& v) {
              f.job.options[key] = v[0] + " " + v[1];
            },
            help)
        ->expected(2);
  };
  auto pos = [](Front& f, const std::string& name, const std::string& help) {
    f.cmd
        ->add_option_function<std::string>(
            name, [&f](const std::string& v) { f.job.args.push_back(v); },
            help)
        ->required();
  };

  {
    Front& f = sub("veronese",
                   "h-polynomial, multiplicity and codimension of the C-th "
                   "Veronese of N variables");
    pos(f, "N", "number of variables (1..16)");
    pos(f, "C", "Veronese exponent (1..2000)");
  }
  {
    Front& f = sub("segre",
                   "h-polynomial, multiplicity and codimension of the Segre "
                   "product of two projective spaces");
    pos(f, "M", "first factor size (1..500)");
    pos(f, "N", "second factor size (1..500)");
  }
  {
    Front& f = sub("obstruction",
                   "scan 1 - h(-z)/(1-z)^codim for a negative coefficient");
    pair_opt(f, "veronese", "Veronese parameters N C");
    pair_opt(f, "segre", "Segre parameters M N");
    opt(f, "order",
        "series truncation order (default max(200, 2*codim))");
  }
  {
    Front& f = sub("scan", "run the obstruction over a parameter grid");
    opt(f, "family", "veronese (default) or segre");
    opt(f, "nmin", "first parameter lower end (default 2)");
    opt(f, "nmax", "first parameter upper end (default 7)");
    opt(f, "cmin", "second parameter lower end (default 2)");
    opt(f, "cmax", "second parameter upper end (default 7)");
    opt(f, "order", "series truncation order (default 200)");
  }
  {
    Front& f = sub("monomial",
                   "minimal generators of a monomial ideal and a "
                   "regular-sequence-plus-linear-resolution split");
    opt(f, "input", "file with ring and ideal stanzas");
    opt(f, "cap",
        "largest generator count attempted for the split (default 24)");
  }
  {
    Front& f = sub("uk",
                   "derivation of a quadratic monomial ring from the base "
                   "family by extensions and fibre products");
    opt(f, "input", "file with ring and ideal stanzas");
  }
  {
    Front& f = sub("gb",
                   "Buchberger completion and basis verification under "
                   "graded reverse lexicographic order");
    opt(f, "input", "file with ring and ideal stanzas");
    opt(f, "char", "coefficient characteristic: 0 or a prime (default 0)");
    opt(f, "cap", "degree cap for the completion");
  }
  {
    Front& f = sub("resolve",
                   "truncated minimal graded free resolution and Betti table");
    opt(f, "input", "file with ring, ideal and optional module stanzas");
    opt(f, "char", "coefficient characteristic: 0 or a prime (default 0)");
    opt(f, "hbound", "homological window (default 5)");
    opt(f, "dbound", "internal degree bound (default derived)");
    opt(f, "cap", "certified degree cap for the ring basis");
  }
  {
    Front& f = sub("lind", "linearity defect lower bound within a window");
    opt(f, "input", "file with ring, ideal and optional module stanzas");
    opt(f, "char", "coefficient characteristic: 0 or a prime (default 0)");
    opt(f, "hbound", "homological window (default 5)");
    opt(f, "dbound", "internal degree bound (default derived)");
    opt(f, "cap", "certified degree cap for the ring basis");
  }
  {
    Front& f = sub("koszul",
                   "linear resolution test for the residue field of a "
                   "quotient ring");
    opt(f, "input", "file with ring and ideal stanzas");
    opt(f, "char", "coefficient characteristic: 0 or a prime (default 0)");
    opt(f, "hbound", "homological window (default 5)");
    opt(f, "dbound", "internal degree bound (default hbound + 3)");
    opt(f, "cap", "certified degree cap for the ring basis");
  }
  {
    Front& f = sub("golod",
                   "Golod test and Poincare series bound for the surjection "
                   "from --input onto --target");
    opt(f, "input", "file defining the base ring Q");
    opt(f, "target", "file defining the target ring over the same variables");
    opt(f, "char", "coefficient characteristic: 0 or a prime (default 0)");
    opt(f, "hbound", "homological window (default 5)");
    opt(f, "dbound", "internal degree bound (default derived)");
    opt(f, "cap", "certified degree cap for the ring basis");
    opt(f, "order", "internal degree compared in the series bound");
  }
  {
    sub("reproduce-paper",
        "recompute every frozen golden value and report the comparisons");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  Front* active = nullptr;
  for (auto& f : fronts)
    if (f->cmd->parsed()) active = f.get();
  if (active == nullptr) {
    std::cerr << "error: no command selected\n";
    return 1;
  }

  try {
    koszul::Report rep = koszul::run_job(active->job);
    if (active->json)
      std::cout << rep.json_dump();
    else
      print_text(rep);
    return 0;
  } catch (const koszul::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case koszul::ErrorKind::Usage:
        return 1;
      case koszul::ErrorKind::Parse:
        return 2;
      case koszul::ErrorKind::BoundExceeded:
        return 3;
      case koszul::ErrorKind::InternalCheck:
        return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
