#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hollab/catalog.hpp"
#include "hollab/criterion.hpp"
#include "hollab/cycle_notation.hpp"
#include "hollab/errors.hpp"
#include "hollab/holomorph.hpp"
#include "hollab/psl2.hpp"
#include "hollab/report.hpp"

using namespace hollab;
using report::Json;

namespace {

enum Exit { kOk = 0, kMath = 1, kUsage = 2, kScale = 3 };

struct Globals {
  std::string json_path;
  unsigned threads = 1;
  std::optional<std::uint64_t> max_order;
  std::string report_dir;
};

struct Named {
  std::string name;
  Group group;
  std::optional<catalog::Entry> entry;
};

Named resolve(const std::string& spec) {
  if (is_inline_spec(spec))
    return {spec, parse_inline_spec(spec), std::nullopt};
  auto e = catalog::lookup(spec);
  return {e.name, e.group, e};
}

std::string file_stem(const std::string& name) {
  std::string out;
  for (char c : name)
    out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
  return out;
}

std::string report_dir(const Globals& g) {
  if (!g.report_dir.empty())
    return g.report_dir;
  if (const char* env = std::getenv("HOLLAB_REPORT_DIR"))
    return env;
  return "";
}

void write_json(const Globals& g, Json doc, std::chrono::steady_clock::time_point start, int code) {
  doc["exit_code"] = code;
  doc["timings"] = {{"total_seconds",
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  if (g.json_path.empty())
    return;
  if (g.json_path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(g.json_path);
  if (!out)
    throw InputError("cannot write " + g.json_path);
  out << doc.dump(2) << "\n";
}

// Human-readable lines go to stdout unless stdout carries JSON.
std::ostream& text(const Globals& g) {
  return g.json_path == "-" ? std::cerr : std::cout;
}

int cmd_psl2_verify(const Globals& g, const std::vector<std::string>& qs) {
  auto start = std::chrono::steady_clock::now();
  std::vector<std::uint64_t> values;
  for (const auto& s : qs) {
    std::uint64_t q = 0;
    std::uint32_t p = 0, f = 0;
    try {
      std::size_t used = 0;
      q = std::stoull(s, &used);
      if (used != s.size())
        throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw InputError("'" + s + "' is not a number");
    }
    if (!gf::prime_power(q, p, f) || q <= 3)
      throw InputError("q = " + s + " must be a prime power other than 2 and 3");
    values.push_back(q);
  }

  Json doc = report::envelope("psl2-verify");
  doc["inputs"] = {{"q", values}};
  Json results = Json::array();
  bool all_pass = true;
  auto& out = text(g);
  for (auto q : values) {
    Json entry;
    entry["q"] = q;
    try {
      auto ctx = psl2::build_context(q);
      auto cd = psl2::verify_cd_factorization(ctx);
      entry["C_order"] = cd.c_order;
      entry["D_order"] = cd.d_order;
      entry["PGL2_order"] = cd.pgl_order;
      out << "q=" << q << ": |C|=" << cd.c_order << " |D|=" << cd.d_order << " |C||D|=" << cd.c_order * cd.d_order
          << " C meet D = 1, C PSL2 = D PSL2\n";
      if (q % 2 == 1) {
        auto s = psl2::splitting_check(ctx);
        entry["split"] = {{"subgroup", std::string(1, s.which)},
                          {"order", s.whole.order()},
                          {"meet_order", s.meet.order()},
                          {"complement", report::group_json(s.complement)}};
        out << "  " << s.which << " (order " << s.whole.order() << ") splits over its meet with PSL2 (order "
            << s.meet.order() << "), complement order " << s.complement.order() << "\n";
      }
      Json rows = Json::array();
      auto ns = psl2::enumerate_almost_simple(ctx);
      for (std::size_t k = 0; k < ns.size(); ++k) {
        auto w = psl2::build_theorem_witness(ctx, ns[k]);
        Json row = report::theorem_witness_json(w);
        row["pass"] = true;
        rows.push_back(row);
        out << "  N#" << k + 1 << " order " << ns[k].order() << " [" << psl2::to_string(w.case_tag)
            << "]: |A|=" << w.A.order() << " |B|=" << w.B.order() << " |P|=" << w.P.order()
            << " |E|=" << w.E.order() << " complement " << w.complement.order() << ": pass\n";
      }
      entry["almost_simple"] = rows;
      entry["pass"] = true;
    } catch (const VerificationError& e) {
      all_pass = false;
      entry["pass"] = false;
      entry["failure"] = e.what();
      out << "q=" << q << ": FAIL " << e.what() << "\n";
    }
    results.push_back(entry);
  }
  doc["results"] = results;
  int code = all_pass ? kOk : kMath;
  write_json(g, doc, start, code);
  return code;
}

std::vector<std::string> family_names(const std::string& socle) {
  std::vector<std::string> out;
  auto param = [&](const std::string& prefix) { return socle.substr(prefix.size()); };
  if (socle.starts_with("PSL2(")) {
    auto q = param("PSL2");
    out = {"PGL2" + q, "PSigmaL2" + q, "PGammaL2" + q};
    if (q == "(9)")
      out.push_back("M10");
  } else if (socle.starts_with("PSL3(")) {
    auto q = param("PSL3");
    out = {"PGL3" + q, "PGammaL3" + q, "AutPSL3" + q};
  } else if (socle == "A5") {
    out = {"S5"};
  } else if (socle == "A7") {
    out = {"S7"};
  } else if (socle == "PSU4(2)") {
    out = {"AutPSU4(2)"};
  }
  return out;
}

std::string name_of(const Group& n, const Named& socle, const Named& ambient, std::size_t k) {
  if (same_group(n, socle.group))
    return socle.name;
  for (const auto& cand : family_names(socle.name)) {
    try {
      auto e = catalog::lookup(cand);
      if (e.group.degree() == n.degree() && same_group(e.group, n))
        return cand;
    } catch (const Error&) {
    }
  }
  if (same_group(n, ambient.group))
    return ambient.name;
  return socle.name + "." + std::to_string(n.order() / socle.group.order()) + "#" + std::to_string(k);
}

struct CriterionArgs {
  std::string group, socle, ambient;
  bool all_n = false;
};

int cmd_criterion(const Globals& g, const CriterionArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Json doc = report::envelope("criterion");
  doc["inputs"] = {{"group", a.group}, {"socle", a.socle}, {"ambient", a.ambient}, {"all_N", a.all_n}};
  auto& out = text(g);

  criterion::SearchOptions opts;
  opts.threads = g.threads;
  if (g.max_order)
    opts.max_order = *g.max_order;
  doc["inputs"]["max_order"] = opts.max_order;

  auto scale_exit = [&](const std::string& name, const std::string& reason) {
    Json j;
    j["N"] = name;
    j["conclusion"] = "inconclusive";
    j["inconclusive_kind"] = "at scale";
    j["reason"] = reason;
    doc["verdicts"] = Json::array({j});
    out << name << ": inconclusive at scale (" << reason << ")\n";
    write_json(g, doc, start, kScale);
    return kScale;
  };

  std::optional<Named> group;
  std::string socle_name = a.socle, ambient_name = a.ambient;
  try {
    if (!a.group.empty()) {
      group = resolve(a.group);
      if (socle_name.empty() && group->entry && !group->entry->socle.empty())
        socle_name = group->entry->socle;
    }
    if (socle_name.empty())
      throw InputError("criterion needs --socle (or a catalog --group with a known socle)");
    Named socle = resolve(socle_name);
    if (ambient_name.empty()) {
      if (group && group->entry && !group->entry->ambient.empty())
        ambient_name = group->entry->ambient;
      else if (socle.entry && !socle.entry->ambient.empty())
        ambient_name = socle.entry->ambient;
      else
        ambient_name = socle_name;
    }
    Named ambient = resolve(ambient_name);
    if (socle.group.degree() != ambient.group.degree() ||
        (group && group->group.degree() != ambient.group.degree()))
      throw InputError("socle, group and ambient must act on the same number of points");

    std::vector<std::pair<std::string, Group>> ns;
    if (a.all_n) {
      auto between = criterion::intermediate_between(ambient.group, socle.group, opts.max_order);
      for (std::size_t k = 0; k < between.size(); ++k)
        ns.emplace_back(name_of(between[k], socle, ambient, k + 1), between[k]);
    } else if (group) {
      ns.emplace_back(group->name, group->group);
    } else {
      ns.emplace_back(socle.name, socle.group);
    }

    Json verdicts = Json::array();
    bool inconclusive = false;
    const std::string dir = report_dir(g);
    for (const auto& [name, n] : ns) {
      criterion::Verdict v;
      try {
        auto ctx = criterion::make_context(ambient.group, socle.group, n);
        v = criterion::classify(ctx, opts);
      } catch (const ResourceError& e) {
        v = criterion::at_scale_verdict(n.order() / socle.group.order(), is_normal(ambient.group, n),
                                        n.order(), e.what());
      }
      if (v.conclusion == criterion::Conclusion::Inconclusive)
        inconclusive = true;
      Json vj = report::verdict_json(name, n, v);
      verdicts.push_back(vj);

      out << name << " (order " << n.order() << "): " << criterion::format_tuple(v);
      if (v.kind == criterion::InconclusiveKind::AtScale)
        out << " at scale: " << v.reason;
      out << "\n";
      for (const auto& r : v.rows) {
        out << "  P order " << r.P.order() << ": ";
        if (r.at_scale)
          out << "at scale (" << r.reason << ")";
        else if (r.witness)
          out << "part (" << (r.part_b ? "b" : "a") << ") witness |A|=" << r.witness->A.order()
              << " |B|=" << r.witness->B.order();
        else
          out << "no factorization";
        out << "\n";
      }

      if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        Json cache = report::envelope("criterion");
        cache["verdicts"] = Json::array({vj});
        std::ofstream f(std::filesystem::path(dir) / ("criterion-" + file_stem(name) + ".json"));
        f << cache.dump(2) << "\n";
      }
    }
    doc["verdicts"] = verdicts;
    int code = inconclusive ? kScale : kOk;
    write_json(g, doc, start, code);
    return code;
  } catch (const ResourceError& e) {
    return scale_exit(group ? group->name : (socle_name.empty() ? a.group : socle_name), e.what());
  }
}

struct HolomorphArgs {
  std::string group, aut;
  bool randomized = false;
};

int cmd_holomorph(const Globals& g, const HolomorphArgs& a) {
  auto start = std::chrono::steady_clock::now();
  Json doc = report::envelope("holomorph-search");
  doc["inputs"] = {{"group", a.group}, {"aut", a.aut}, {"randomized", a.randomized}};
  auto& out = text(g);

  holomorph::SearchOptions opts;
  if (g.max_order)
    opts.max_order = *g.max_order;
  opts.randomized_fallback = a.randomized;
  doc["inputs"]["max_order"] = opts.max_order;

  auto unknown = [&](const std::string& reason) {
    doc["search"] = {{"status", holomorph::to_string(holomorph::SearchStatus::UnknownAtScale)}, {"reason", reason}};
    out << "Hol(" << a.group << "): unknown at scale (" << reason << ")\n";
    write_json(g, doc, start, kScale);
    return kScale;
  };

  Named n;
  try {
    n = resolve(a.group);
  } catch (const ResourceError& e) {
    return unknown(e.what());
  }
  Group aut;
  if (!a.aut.empty())
    aut = parse_inline_spec(a.aut);
  else if (n.entry && n.entry->aut_action)
    aut = *n.entry->aut_action;
  else
    throw InputError("no automorphism action known for " + n.name + "; pass --aut");

  holomorph::HolomorphContext ctx;
  try {
    ctx = holomorph::build_holomorph(n.group, aut);
  } catch (const ResourceError& e) {
    return unknown(e.what());
  }
  doc["holomorph"] = {{"N_order", ctx.N.order()}, {"degree", ctx.hol.degree()}, {"order", ctx.hol.order()}};
  auto result = holomorph::find_solvable_regular(ctx, opts);
  doc["search"] = report::search_json(result);

  out << "Hol(" << n.name << "): order " << ctx.hol.order() << " on " << ctx.hol.degree() << " points\n";
  if (result.status == holomorph::SearchStatus::Found) {
    out << "  solvable regular subgroup found: " << holomorph::to_string(result.witness->hint) << "\n";
    for (const auto& c : result.regular_classes)
      out << "  regular class: order " << c.order() << ", exponent " << exponent(c)
          << (is_abelian(c) ? ", abelian" : "") << "\n";
  } else {
    out << "  " << holomorph::to_string(result.status);
    if (!result.reason.empty())
      out << " (" << result.reason << ")";
    out << "\n";
  }

  int code = result.status == holomorph::SearchStatus::UnknownAtScale ? kScale : kOk;
  const std::string dir = report_dir(g);
  if (!dir.empty()) {
    auto path = std::filesystem::path(dir) / ("criterion-" + file_stem(n.name) + ".json");
    if (std::filesystem::exists(path)) {
      std::ifstream f(path);
      Json cached = Json::parse(f);
      auto verdict = report::verdict_from_json(cached.at("verdicts").at(0));
      auto cross = holomorph::cross_validate(ctx, result, verdict);
      doc["cross_validation"] = {{"status", holomorph::to_string(cross.status)},
                                 {"detail", cross.detail},
                                 {"criterion", criterion::to_string(verdict.conclusion)}};
      out << "  cross-validation with criterion: " << holomorph::to_string(cross.status) << " ("
          << cross.detail << ")\n";
      if (cross.status == holomorph::Consistency::Inconsistent)
        code = kMath;
    }
  }
  write_json(g, doc, start, code);
  return code;
}

int cmd_catalog_list(const Globals& g) {
  auto start = std::chrono::steady_clock::now();
  Json doc = report::envelope("catalog list");
  Json items = Json::array();
  for (const auto& l : catalog::list()) {
    items.push_back({{"name", l.name}, {"order", l.order}, {"description", l.description}});
    text(g) << l.name << "\t" << (l.order ? std::to_string(l.order) : std::string("-")) << "\t" << l.description
            << "\n";
  }
  doc["groups"] = items;
  write_json(g, doc, start, kOk);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact factorizations, solvable subgroup lattices and holomorph searches"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--json", g.json_path, "write the JSON report to a file, or '-' for stdout");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--max-order", g.max_order, "resource bound on enumerated groups");
  app.add_option("--report-dir", g.report_dir, "criterion verdict cache (default $HOLLAB_REPORT_DIR)");

  auto* psl2_cmd = app.add_subcommand("psl2-verify", "check the PGL2(q) factorization and witnesses");
  std::vector<std::string> qs;
  psl2_cmd->add_option("q", qs, "field sizes")->required();

  auto* crit = app.add_subcommand("criterion", "classify almost simple groups");
  CriterionArgs ca;
  crit->add_option("--group", ca.group, "the group N");
  crit->add_option("--socle", ca.socle, "the socle T");
  crit->add_option("--ambient", ca.ambient, "a group containing Aut(T) acting on the same points");
  crit->add_flag("--all-N", ca.all_n, "every N between the socle and the ambient");

  auto* hol = app.add_subcommand("holomorph-search", "search Hol(N) for a solvable regular subgroup");
  HolomorphArgs ha;
  hol->add_option("group", ha.group, "catalog name or inline perm spec")->required();
  hol->add_option("--aut", ha.aut, "automorphism action as an inline perm spec");
  hol->add_flag("--randomized", ha.randomized, "random search above the size bound");

  auto* cat = app.add_subcommand("catalog", "catalog of named groups");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*psl2_cmd)
      return cmd_psl2_verify(g, qs);
    if (*crit)
      return cmd_criterion(g, ca);
    if (*hol)
      return cmd_holomorph(g, ha);
    if (*cat_list)
      return cmd_catalog_list(g);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "inconclusive at scale: " << e.what() << "\n";
    return kScale;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMath;
  }
  return kUsage;
}
