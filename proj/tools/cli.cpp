// Copyright 2026 The isochain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "isochain/error.hpp"
#include "isochain/family.hpp"
#include "isochain/rees_quotient.hpp"
#include "isochain/semigroup.hpp"
#include "isochain/verify.hpp"

namespace isochain::cli {

using nlohmann::json;

std::string element_to_json(const PartialInjection& a) {
  json pairs = json::array();
  for (const MapsTo& p : a.pairs()) pairs.push_back({p.x, p.y});
  return json{{"n", a.chain_size()}, {"pairs", pairs}}.dump();
}

PartialInjection element_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs") ||
      !j["n"].is_number_integer() || !j["pairs"].is_array()) {
    throw Error(ErrorCode::kParseError,
                "expected {\"n\": <int>, \"pairs\": [[x,y],...]}, got " + std::string(text));
  }
  std::vector<MapsTo> pairs;
  for (const json& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
        !p[1].is_number_integer()) {
      throw Error(ErrorCode::kParseError, "bad pair " + p.dump());
    }
    pairs.push_back({p[0].get<int>(), p[1].get<int>()});
  }
  return make(j["n"].get<int>(), pairs);
}

std::string triangle_to_json_lines(const CountTriangle& t) {
  std::string out;
  for (std::size_t n = 0; n < t.rows.size(); ++n) {
    json row{{"family", cli_id(t.family)},
             {"stat", t.stat == Statistic::kHeight ? "height" : "fix"},
             {"n", n},
             {"values", t.rows[n]},
             {"sum", t.row_sums[n]}};
    out += row.dump() + '\n';
  }
  return out;
}

std::string elements_to_csv(const std::vector<PartialInjection>& elements, int n) {
  std::string out = "n,height,fix,pairs\n";
  for (const auto& a : elements) {
    out += std::to_string(n) + ',' + std::to_string(a.height()) + ',' +
           std::to_string(fix_count(a)) + ',' + pairs_to_string(a) + '\n';
  }
  return out;
}

namespace {

struct Options {
  int ceiling = kDefaultCeiling;
  std::string family;
  int n = 0;
  int p = 0;
  int max_n = 0;
  std::string format = "text";
  std::string table_format = "csv";
  std::string by;
  std::string stat;
  std::string suite;
  bool fast = false;
  bool starred = false;
  bool check = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

FamilyId family_of(const Options& o) {
  if (auto f = parse_family(o.family)) return *f;
  throw UsageError("unknown family '" + o.family + "' (use i, iminus, dp, odp, ddp, oddp)");
}

std::string join(const std::vector<Count>& v) {
  std::string s;
  for (Count c : v) s += (s.empty() ? "" : ",") + std::to_string(c);
  return s;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const FamilyId f = family_of(o);
  check_ceiling(o.n, o.ceiling);
  const auto elements = o.fast ? enumerate_fast(f, o.n) : enumerate_oracle(f, o.n, o.ceiling);
  if (o.format == "csv") {
    out << elements_to_csv(elements, o.n);
  } else {
    for (const auto& a : elements) {
      out << (o.format == "json" ? element_to_json(a) : to_string(a)) << '\n';
    }
  }
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const FamilyId f = family_of(o);
  if (o.by == "order") {
    out << order(f, o.n, o.ceiling) << '\n';
  } else if (o.by == "height") {
    out << join(count_by_height(f, o.n, o.ceiling)) << '\n';
  } else {
    out << join(count_by_fix(f, o.n, o.ceiling)) << '\n';
  }
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  const auto t = triangle(family_of(o), o.stat == "height" ? Statistic::kHeight : Statistic::kFix,
                          o.max_n, o.ceiling);
  if (o.table_format == "csv") {
    out << to_csv(t);
  } else if (o.table_format == "json") {
    out << triangle_to_json_lines(t);
  } else {
    out << to_text(t);
  }
  return kExitOk;
}

void print_classes(std::ostream& out, std::string_view label,
                   const std::vector<std::vector<PartialInjection>>& classes) {
  out << label << " classes=" << classes.size() << '\n';
  for (const auto& cls : classes) {
    out << "  {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out << (i == 0 ? "" : " | ") << to_string(cls[i]);
    }
    out << "}\n";
  }
}

int cmd_greens(const Options& o, std::ostream& out) {
  const auto s = build_semigroup(family_of(o), o.n, o.ceiling);
  out << "family=" << o.family << " n=" << o.n << " size=" << s.size() << '\n';
  if (!o.starred) {
    const std::pair<std::string_view, GreenRelation> rels[] = {
        {"L", GreenRelation::kL}, {"R", GreenRelation::kR}, {"H", GreenRelation::kH},
        {"D", GreenRelation::kD}, {"J", GreenRelation::kJ}};
    for (const auto& [name, rel] : rels) print_classes(out, name, greens_classes(s, rel));
    return kExitOk;
  }
  const std::pair<std::string_view, StarRelation> rels[] = {
      {"L*", StarRelation::kLStar}, {"R*", StarRelation::kRStar},
      {"H*", StarRelation::kHStar}, {"D*", StarRelation::kDStar}};
  for (const auto& [name, rel] : rels) print_classes(out, name, starred_classes(s, rel));

  bool image_ok = true;
  bool domain_ok = true;
  for (const auto& a : s.elements) {
    for (const auto& b : s.elements) {
      image_ok = image_ok && lstar_related_equational(s, a, b) ==
                                 (leq_lstar(a, b) && leq_lstar(b, a));
      domain_ok = domain_ok && rstar_related_equational(s, a, b) ==
                                   (leq_rstar(a, b) && leq_rstar(b, a));
    }
  }
  out << std::boolalpha << "lstar_matches_image=" << image_ok << '\n'
      << "rstar_matches_domain=" << domain_ok << '\n';
  return kExitOk;
}

// Prints "key=value ..." or "key=skipped" when the property's ceiling is
// exceeded.
void report(std::ostream& out, std::ostream& err, std::string_view key,
            const std::function<std::string()>& body) {
  try {
    out << key << '=' << body() << '\n';
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCeilingExceeded) throw;
    out << key << "=skipped\n";
    err << key << ": " << e.what() << '\n';
  }
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

template <typename T, std::size_t K>
std::string verdict_line(const Verdict<T, K>& v,
                         const std::array<std::string_view, K>& names) {
  std::string s = yes_no(v.holds);
  if (v.witness) {
    for (std::size_t i = 0; i < K; ++i) {
      s += " " + std::string(names[i]) + "=" + to_string((*v.witness)[i]);
    }
  }
  return s;
}

int cmd_props(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = build_semigroup(family_of(o), o.n, o.ceiling);
  out << "family=" << o.family << " n=" << o.n << " size=" << s.size() << '\n';
  report(out, err, "j_trivial", [&] { return yes_no(is_j_trivial(s)); });
  report(out, err, "regular",
         [&] { return verdict_line<PartialInjection, 1>(is_regular(s), {"witness"}); });
  report(out, err, "abundant", [&] { return yes_no(is_abundant(s)); });
  report(out, err, "adequate", [&] { return yes_no(is_adequate(s)); });
  report(out, err, "ample", [&] {
    return verdict_line<PartialInjection, 2>(is_ample(s), {"witness_a", "witness_e"});
  });
  report(out, err, "zero_e_unitary", [&] {
    return verdict_line<PartialInjection, 2>(is_zero_e_unitary(s),
                                             {"witness_e", "witness_s"});
  });
  report(out, err, "categorical", [&] {
    return verdict_line<PartialInjection, 3>(is_categorical(s),
                                             {"witness_a", "witness_b", "witness_c"});
  });
  return kExitOk;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  check_ceiling(o.n, o.ceiling);
  const auto q = rees_quotient(o.n, o.p);
  out << "n=" << o.n << " p=" << o.p << " nonzero=" << q.nonzero_elements().size() << '\n';
  if (!o.check) {
    for (const auto& a : q.nonzero_elements()) out << to_string(a) << '\n';
    return kExitOk;
  }
  const bool size_ok = q.nonzero_elements().size() == closed_height_oddp(o.n, o.p);
  const bool assoc = is_associative(q.table());
  const auto zeu = is_zero_e_unitary(q);
  const auto cat = is_categorical(q);
  out << "carrier_matches_binomial=" << yes_no(size_ok) << '\n'
      << "associative=" << yes_no(assoc) << '\n'
      << "zero_e_unitary="
      << verdict_line<QuotientElement, 2>(zeu, {"witness_e", "witness_s"}) << '\n'
      << "categorical="
      << verdict_line<QuotientElement, 3>(cat, {"witness_a", "witness_b", "witness_c"})
      << '\n';
  return size_ok && assoc && zeu.holds && cat.holds ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto suite = parse_suite(o.suite);
  if (!suite) throw UsageError("unknown suite '" + o.suite + "'");
  const auto results = run_suite(*suite, o.max_n, o.ceiling);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
    if (!r.passed) ++failed;
  }
  out << "passed=" << results.size() - failed << " failed=" << failed << '\n';
  return failed == 0 ? kExitOk : kExitCheckFailed;
}

int default_ceiling() {
  if (const char* env = std::getenv("ISOCHAIN_CEILING")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("ISOCHAIN_CEILING is not an integer: ") + env);
    }
  }
  return kDefaultCeiling;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact enumeration of order-decreasing partial isometries of a chain",
               "isochain"};
  app.require_subcommand(1);
  app.add_option("--ceiling", o.ceiling,
                 "Largest n the brute-force enumerator accepts (env ISOCHAIN_CEILING)")
      ->check(CLI::NonNegativeNumber);

  const auto families = CLI::IsMember({"i", "iminus", "dp", "odp", "ddp", "oddp"});
  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", o.family, "i, iminus, dp, odp, ddp or oddp")
        ->required()
        ->check(families);
  };
  auto add_n = [&](CLI::App* cmd) {
    cmd->add_option("-n", o.n, "Chain size")->required()->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "Stream the canonical elements of a family");
  add_family(enumerate);
  add_n(enumerate);
  enumerate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json", "csv"}));
  enumerate->add_flag("--fast", o.fast, "Use the structural generator (ddp, oddp)");

  auto* count = app.add_subcommand("count", "Height/fix histogram or order");
  add_family(count);
  add_n(count);
  count->add_option("--by", o.by)->required()->check(CLI::IsMember({"height", "fix", "order"}));

  auto* table = app.add_subcommand("table", "Count triangle for rows 0..max-n");
  add_family(table);
  table->add_option("--stat", o.stat)->required()->check(CLI::IsMember({"height", "fix"}));
  table->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);
  table->add_option("--format", o.table_format)->check(CLI::IsMember({"csv", "text", "json"}));

  auto* greens = app.add_subcommand("greens", "Green's (or starred) class partitions");
  add_family(greens);
  add_n(greens);
  greens->add_flag("--starred", o.starred, "Equational L*, R*, H*, D* instead");

  auto* props = app.add_subcommand("props", "Structural property report");
  add_family(props);
  add_n(props);

  auto* quotient = app.add_subcommand("quotient", "Rees quotient Q(n,p) of ODDP_n");
  add_n(quotient);
  quotient->add_option("-p", o.p, "Height of the nonzero slice")->required();
  quotient->add_flag("--check", o.check, "Run the property suite on Q(n,p)");

  auto* verify = app.add_subcommand("verify", "Run invariant suites");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"lemmas", "formulas", "greens", "structure", "all"}));
  verify->add_option("--max-n", o.max_n)->required()->check(CLI::NonNegativeNumber);

  try {
    o.ceiling = default_ceiling();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*count) return cmd_count(o, out);
    if (*table) return cmd_table(o, out);
    if (*greens) return cmd_greens(o, out);
    if (*props) return cmd_props(o, out, err);
    if (*quotient) return cmd_quotient(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::kClosureViolation ? kExitCheckFailed : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace isochain::cli
