#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "slw/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"verification suites for the localized Whittaker toolkit"};

  slw::SuiteConfig cfg;
  std::string c_str, mu_str, out_path;
  app.add_option("--suite", cfg.suite,
                 "one of lie-axioms, w-membership, tensor-decomposition, "
                 "pi-chain, block-principal, block-generic, cuspidal-scan, "
                 "quiver, all");
  app.add_option("--n", cfg.n, "rank parameter")->check(CLI::Range(2, 4));
  app.add_option("--degree", cfg.degree, "truncation degree bound");
  app.add_option("--window", cfg.window, "lattice window radius");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--c", c_str, "central parameter as a rational string p/q");
  app.add_option("--mu", mu_str, "comma separated rational strings mu_1,..,mu_n");
  app.add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!c_str.empty()) cfg.c = slw::Scalar::from_rational_string(c_str);
    if (!mu_str.empty()) {
      std::vector<slw::Scalar> mu{slw::Scalar(0)};
      std::size_t pos = 0;
      while (pos <= mu_str.size()) {
        std::size_t comma = mu_str.find(',', pos);
        std::string tok = mu_str.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        mu.push_back(slw::Scalar::from_rational_string(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      if (mu.size() != static_cast<std::size_t>(cfg.n) + 1)
        throw slw::schema_error("--mu needs exactly n entries");
      cfg.mu = std::move(mu);
    }

    slw::SuiteReport rep = slw::run_suite(cfg);
    std::string body = cfg.format == "json"
                           ? slw::report_to_json(rep).dump(2) + "\n"
                           : slw::report_to_text(rep);
    if (out_path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(out_path);
      if (!out) throw slw::schema_error("cannot write " + out_path);
      out << body;
    }
    return rep.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
