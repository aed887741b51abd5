// gaplab.cpp - command line frontend: every library operation behind a
// subcommand, JSON (default) or CSV on stdout, optional run-manifest logging.
// Exit codes: 0 ok, 2 invalid arguments, 3 verification failure, 4 budget
// exceeded, 1 unexpected error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <gaplab/gaplab.hpp>

namespace {

constexpr const char* kVersion = "0.1.0";

struct Range {
  long lo = 0;
  long hi = 0;
};

Range parse_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    long v = std::stol(text);
    return {v, v};
  }
  return {std::stol(text.substr(0, pos)), std::stol(text.substr(pos + 2))};
}

gaplab::Family parse_family(const std::string& name) {
  if (name == "cubic") return gaplab::Family::CubicTriple;
  if (name == "quartic") return gaplab::Family::Quartic;
  throw std::invalid_argument("unknown family: " + name);
}

unsigned env_workers() {
  if (const char* env = std::getenv("GAPLAB_WORKERS"))
    return static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  using gaplab::ordered_json;

  CLI::App app{"gaplab: divisibility gaps between products of integers in arithmetic progression"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string format = "json";
  std::string manifest_path;
  std::string subname;
  ordered_json params;
  std::function<ordered_json()> action;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--manifest", manifest_path, "append a run-manifest line to this file");
  };

  // pell
  unsigned pell_count = 10;
  {
    CLI::App* sub = app.add_subcommand("pell", "first solutions of b(b+1) = 2a(a+1)");
    add_common(sub);
    sub->add_option("--count", pell_count, "number of pairs");
    sub->callback([&] {
      subname = "pell";
      action = [&]() -> ordered_json {
        params = {{"count", pell_count}};
        return gaplab::pairs_to_json(gaplab::pell_pairs(pell_count));
      };
    });
  }

  // search / gap-report share their options
  std::string s_family = "cubic";
  long s_l = 1;
  std::string s_a = "1..10";
  long s_b_max = 0;
  bool s_include_a1 = false;
  unsigned s_workers = env_workers();
  auto add_search_options = [&](CLI::App* sub) {
    add_common(sub);
    sub->add_option("--family", s_family, "cubic or quartic")
        ->check(CLI::IsMember({"cubic", "quartic"}));
    sub->add_option("--l", s_l, "progression offset");
    sub->add_option("--a", s_a, "a range, lo..hi inclusive");
    sub->add_option("--b-max", s_b_max, "largest b scanned")->required();
    sub->add_flag("--include-a1", s_include_a1, "keep the cubic l=1, a=1 flood");
    sub->add_option("--workers", s_workers, "worker threads (0 = hardware)");
  };
  auto make_search_config = [&]() {
    Range ar = parse_range(s_a);
    gaplab::SearchConfig cfg;
    cfg.family = parse_family(s_family);
    cfg.l = s_l;
    cfg.a_min = ar.lo;
    cfg.a_max = ar.hi;
    cfg.b_max = s_b_max;
    cfg.include_a_equals_one = s_include_a1;
    cfg.worker_count = s_workers;
    params = {{"family", s_family}, {"l", s_l},
              {"a_min", cfg.a_min}, {"a_max", cfg.a_max},
              {"b_max", cfg.b_max}, {"include_a1", cfg.include_a_equals_one},
              {"workers", cfg.worker_count}};
    return cfg;
  };
  {
    CLI::App* sub = app.add_subcommand("search", "scan an (a, b) window for divisibility hits");
    add_search_options(sub);
    sub->callback([&] {
      subname = "search";
      action = [&]() -> ordered_json {
        return gaplab::to_json(gaplab::search_divisible(make_search_config()));
      };
    });
  }
  {
    CLI::App* sub = app.add_subcommand("gap-report", "b/a ratios and invariant checks over a scan");
    add_search_options(sub);
    sub->callback([&] {
      subname = "gap-report";
      action = [&]() -> ordered_json {
        return gaplab::to_json(gaplab::gap_report(gaplab::search_divisible(make_search_config())));
      };
    });
  }

  // reduce
  std::string r_family = "cubic";
  std::string r_a, r_b;
  long r_l = 1;
  {
    CLI::App* sub = app.add_subcommand("reduce", "coprime reduction of a single hit");
    add_common(sub);
    sub->add_option("--family", r_family)->check(CLI::IsMember({"cubic", "quartic"}));
    sub->add_option("--a", r_a)->required();
    sub->add_option("--b", r_b)->required();
    sub->add_option("--l", r_l);
    sub->callback([&] {
      subname = "reduce";
      action = [&]() -> ordered_json {
        params = {{"family", r_family}, {"a", r_a}, {"b", r_b}, {"l", r_l}};
        gaplab::DivisibilityHit hit{parse_family(r_family), gaplab::Int(r_a), gaplab::Int(r_b),
                                    r_l, gaplab::Int(0)};
        if (hit.family == gaplab::Family::CubicTriple) {
          gaplab::CubicReduction red = gaplab::reduce_cubic(hit);
          ordered_json j = gaplab::to_json(red);
          j["divisor_chain"] =
              gaplab::to_json(gaplab::verify_divisor_chain(red.u, red.v, red.t, red.l));
          return j;
        }
        return gaplab::to_json(gaplab::reduce_quartic(hit));
      };
    });
  }

  // verify-thm1
  {
    CLI::App* sub = app.add_subcommand("verify-thm1", "machine verification of the b(b+1)(b+2) = 2a(a+1)(a+2) theorem");
    add_common(sub);
    sub->callback([&] {
      subname = "verify-thm1";
      action = [&]() -> ordered_json {
        params = ordered_json::object();
        return gaplab::to_json(gaplab::verify_theorem1());
      };
    });
  }

  // enumerate
  std::string e_t = "2";
  long e_l = 1;
  std::string e_limit = "1000000";
  {
    CLI::App* sub = app.add_subcommand("enumerate", "all triple-family hits with a fixed quotient t");
    add_common(sub);
    sub->add_option("--t", e_t)->required();
    sub->add_option("--l", e_l);
    sub->add_option("--limit", e_limit, "largest b considered");
    sub->callback([&] {
      subname = "enumerate";
      action = [&]() -> ordered_json {
        params = {{"t", e_t}, {"l", e_l}, {"limit", e_limit}};
        return gaplab::pairs_to_json(
            gaplab::enumerate_fixed_t(gaplab::Int(e_t), e_l, gaplab::Int(e_limit)));
      };
    });
  }

  // field-bounds
  unsigned f_n = 3;
  std::string f_m;
  bool f_exact = false;
  {
    CLI::App* sub = app.add_subcommand("field-bounds", "discriminant and regulator bounds for Q(m^(1/n))");
    add_common(sub);
    sub->add_option("--n", f_n, "field degree, 3 or 4")->check(CLI::IsMember({3u, 4u}));
    sub->add_option("--m", f_m)->required();
    sub->add_flag("--exact", f_exact, "narrow cubic candidates with the mod 9 test");
    sub->callback([&] {
      subname = "field-bounds";
      action = [&]() -> ordered_json {
        params = {{"n", f_n}, {"m", f_m}, {"exact", f_exact}};
        gaplab::Int m(f_m);
        if (f_n == 3)
          return gaplab::to_json(gaplab::cubic_field_bounds(
              m, f_exact ? gaplab::CubicDiscMode::ExactCandidates
                         : gaplab::CubicDiscMode::BoundsOnly));
        return gaplab::to_json(gaplab::quartic_field_bounds(m));
      };
    });
  }

  // measure
  unsigned me_n = 3;
  std::string me_m;
  {
    CLI::App* sub = app.add_subcommand("measure", "Bugeaud's effective irrationality measure for m^(1/n)");
    add_common(sub);
    sub->add_option("--n", me_n)->check(CLI::IsMember({3u, 4u}));
    sub->add_option("--m", me_m)->required();
    sub->callback([&] {
      subname = "measure";
      action = [&]() -> ordered_json {
        params = {{"n", me_n}, {"m", me_m}};
        return gaplab::to_json(gaplab::bugeaud_measure(me_n, gaplab::Int(me_m)));
      };
    });
  }

  // cutoffs
  std::string c_family = "cubic";
  std::string c_t = "2";
  long c_l = 1;
  std::string c_a;
  {
    CLI::App* sub = app.add_subcommand("cutoffs", "height cutoff chain for parameters (t, l)");
    add_common(sub);
    sub->add_option("--family", c_family)->check(CLI::IsMember({"cubic", "quartic"}));
    sub->add_option("--t", c_t)->required();
    sub->add_option("--l", c_l);
    sub->add_option("--a", c_a, "also report min-t and the gap floor at this a");
    sub->callback([&] {
      subname = "cutoffs";
      action = [&]() -> ordered_json {
        params = {{"family", c_family}, {"t", c_t}, {"l", c_l}, {"a", c_a}};
        gaplab::Family family = parse_family(c_family);
        gaplab::Int t(c_t);
        ordered_json j = gaplab::to_json(family == gaplab::Family::CubicTriple
                                             ? gaplab::cutoff_cubic(t, c_l)
                                             : gaplab::cutoff_quartic(t, c_l));
        if (!c_a.empty()) {
          gaplab::Int a(c_a);
          j["min_t"] = family == gaplab::Family::CubicTriple ? gaplab::min_t_cubic(a, c_l)
                                                             : gaplab::min_t_quartic(a, c_l);
          j["gap_floor"] = gaplab::gap_lower_bound(a, c_l, family);
        }
        return j;
      };
    });
  }

  // abc
  std::string abc_a, abc_b, abc_c;
  {
    CLI::App* sub = app.add_subcommand("abc", "quality of an abc triple A + B = C");
    add_common(sub);
    sub->add_option("A", abc_a)->required();
    sub->add_option("B", abc_b)->required();
    sub->add_option("C", abc_c)->required();
    sub->callback([&] {
      subname = "abc";
      action = [&]() -> ordered_json {
        params = {{"A", abc_a}, {"B", abc_b}, {"C", abc_c}};
        gaplab::Int a(abc_a), b(abc_b), c(abc_c);
        double q = gaplab::abc_quality(a, b, c);
        ordered_json j;
        j["A"] = gaplab::json_int(a);
        j["B"] = gaplab::json_int(b);
        j["C"] = gaplab::json_int(c);
        j["radical"] = gaplab::json_int(gaplab::radical(a * b * c));
        j["quality"] = q;
        return j;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string out;
  auto start = std::chrono::steady_clock::now();
  try {
    ordered_json result = action();
    out = format == "csv" ? gaplab::to_csv(result) : result.dump() + "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gaplab::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const gaplab::verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::cout << out;
  if (!manifest_path.empty()) {
    gaplab::RunManifest m;
    m.subcommand = subname;
    m.parameters = params;
    m.version = kVersion;
    m.wall_ms = wall_ms;
    m.digest = gaplab::digest_hex(out);
    std::ofstream f(manifest_path, std::ios::app);
    if (!f) {
      std::cerr << "error: cannot open manifest file " << manifest_path << "\n";
      return 2;
    }
    f << gaplab::manifest_line(m);
  }
  return 0;
}
