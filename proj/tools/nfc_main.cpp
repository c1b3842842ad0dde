// Command-line front door: validate / bounds / cuts / verify / search / induce.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nfc/bounds.hpp"
#include "nfc/code.hpp"
#include "nfc/equivalence.hpp"
#include "nfc/network.hpp"

using namespace nfc;
using nlohmann::json;

static std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

static std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

static json report_json(const BoundReport& rep, bool detail) {
  json j;
  j["value"] = rep.value;
  j["argmin"] = rep.argmin;
  if (rep.best_row >= 0) {
    const CutRow& r = rep.rows[rep.best_row];
    j["witness"] = {{"cut_size", r.size}, {"n", r.denom}, {"q", rep.q}};
    if (detail) {
      j["partition"] = r.partition;
      j["aJ_star"] = r.aJ_star;
      j["J_sources"] = r.J_sources;
    }
  }
  return j;
}

static json rows_json(const BoundReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json row = {{"cut", r.cut},    {"size", r.size},     {"n", r.denom},
                {"ratio", r.ratio}, {"global", r.global}};
    if (rep.kind == "improved") {
      row["partition"] = r.partition;
      row["aJ_star"] = r.aJ_star;
      row["J_sources"] = r.J_sources;
    }
    rows.push_back(row);
  }
  return rows;
}

static void print_bound_text(const BoundReport& rep) {
  std::cout << rep.kind << ": " << fmt12(rep.value);
  if (rep.best_row >= 0) {
    const CutRow& r = rep.rows[rep.best_row];
    std::cout << "  (|C|=" << r.size << ", n=" << r.denom << ", q=" << rep.q << ")  argmin {";
    for (std::size_t i = 0; i < rep.argmin.size(); i++)
      std::cout << (i ? "," : "") << rep.argmin[i];
    std::cout << "}";
    if (rep.kind == "improved" && !r.partition.empty()) {
      std::cout << "  partition ";
      for (const auto& b : r.partition) {
        std::cout << "{";
        for (std::size_t i = 0; i < b.size(); i++) std::cout << (i ? "," : "") << b[i];
        std::cout << "}";
      }
    }
  }
  std::cout << "\n";
}

int main(int argc, char** argv) {
  CLI::App app{"network function computation capacity bounds"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document");

  std::string net_path, fn_path, code_path;
  std::string bound_sel = "all", cut_csv;
  int max_cut_size = -1, opt_k = 1, opt_n = 1;
  double timeout_seconds = 0, limit_space = 1e18;
  std::uint64_t limit_table = 1u << 20;
  bool no_prune = false;

  auto* v = app.add_subcommand("validate", "check a network file");
  v->add_option("network", net_path)->required();

  auto* b = app.add_subcommand("bounds", "evaluate capacity upper bounds");
  b->add_option("network", net_path)->required();
  b->add_option("function", fn_path)->required();
  b->add_option("--bound", bound_sel, "improved|huang|footprint|all")
      ->check(CLI::IsMember({"improved", "huang", "footprint", "all"}));
  b->add_option("--max-cut-size", max_cut_size, "only cuts up to this size");
  b->add_option("--limit-table", limit_table, "max function table entries");

  auto* c = app.add_subcommand("cuts", "list cut sets with I/J/K");
  c->add_option("network", net_path)->required();
  c->add_option("--max-cut-size", max_cut_size);

  auto* vf = app.add_subcommand("verify", "verify a code against a target function");
  vf->add_option("network", net_path)->required();
  vf->add_option("function", fn_path)->required();
  vf->add_option("code", code_path)->required();

  auto* se = app.add_subcommand("search", "exhaustive code search at fixed (k,n)");
  se->add_option("network", net_path)->required();
  se->add_option("function", fn_path)->required();
  se->add_option("--k", opt_k)->required();
  se->add_option("--n", opt_n)->required();
  se->add_option("--timeout-seconds", timeout_seconds);
  se->add_option("--limit-space", limit_space);
  se->add_flag("--no-prune", no_prune, "disable distinguishability pruning (oracle mode)");

  auto* in = app.add_subcommand("induce", "induce the target function across a global cut");
  in->add_option("network", net_path)->required();
  in->add_option("function", fn_path)->required();
  in->add_option("code", code_path)->required();
  in->add_option("--cut", cut_csv, "comma-separated edge ids, order defines the arity order")
      ->required();

  // app-level flags (--json) may appear after subcommand arguments
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) {
      Network net;
      try {
        net = parse_network(slurp(net_path));
      } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      ValidationReport rep = validate_network(net);
      for (const auto& i : rep.issues) std::cout << i.code << ": " << i.detail << "\n";
      if (rep.ok()) std::cout << "ok\n";
      return rep.ok() ? 0 : 1;
    }

    if (b->parsed()) {
      Network net = load_network(slurp(net_path));
      TargetFunction f = parse_function(slurp(fn_path));
      if (f.table.size() > limit_table) {
        std::cerr << "function table exceeds --limit-table (" << limit_table << ")\n";
        return 1;
      }
      std::optional<int> mcs;
      if (max_cut_size >= 0) mcs = max_cut_size;
      json out;
      if (bound_sel == "all") {
        FullReport rep = full_report(net, f, mcs);
        if (as_json) {
          out["footprint"] = report_json(rep.footprint, false);
          out["huang"] = report_json(rep.huang, false);
          out["improved"] = report_json(rep.improved, true);
          out["rows"] = rows_json(rep.improved);
          out["ordered"] = rep.ordered;
          std::cout << out.dump(2) << "\n";
        } else {
          print_bound_text(rep.footprint);
          print_bound_text(rep.huang);
          print_bound_text(rep.improved);
        }
      } else {
        BoundReport rep = bound_sel == "footprint" ? bound_footprint(net, f, mcs)
                          : bound_sel == "huang"   ? bound_huang(net, f, mcs)
                                                   : bound_improved(net, f, mcs);
        if (as_json) {
          out[rep.kind] = report_json(rep, rep.kind == "improved");
          out["rows"] = rows_json(rep);
          std::cout << out.dump(2) << "\n";
        } else {
          print_bound_text(rep);
        }
      }
      return 0;
    }

    if (c->parsed()) {
      Network net = load_network(slurp(net_path));
      std::optional<int> mcs;
      if (max_cut_size >= 0) mcs = max_cut_size;
      json rows = json::array();
      for (const auto& ctx : enumerate_cuts(net, mcs)) {
        auto names = [&](SourceSet m) {
          std::vector<std::string> out;
          for (int i : mask_elements(m)) out.push_back(net.sources[i]);
          return out;
        };
        int spc = (int)enumerate_strong_partitions(net, ctx).size();
        if (as_json) {
          rows.push_back({{"cut", cut_edge_ids(net, ctx.cut)},
                          {"I", names(ctx.I)},
                          {"J", names(ctx.J)},
                          {"K", names(ctx.K)},
                          {"is_global", ctx.is_global(net)},
                          {"strong_partition_count", spc}});
        } else {
          std::cout << "{";
          auto ids = cut_edge_ids(net, ctx.cut);
          for (std::size_t i = 0; i < ids.size(); i++) std::cout << (i ? "," : "") << ids[i];
          std::cout << "} I={";
          auto pr = [&](const std::vector<std::string>& xs) {
            for (std::size_t i = 0; i < xs.size(); i++) std::cout << (i ? "," : "") << xs[i];
          };
          pr(names(ctx.I));
          std::cout << "} J={";
          pr(names(ctx.J));
          std::cout << "} K={";
          pr(names(ctx.K));
          std::cout << "} global=" << (ctx.is_global(net) ? "yes" : "no")
                    << " strong_partitions=" << spc << "\n";
        }
      }
      if (as_json) std::cout << rows.dump(2) << "\n";
      return 0;
    }

    if (vf->parsed()) {
      Network net = load_network(slurp(net_path));
      TargetFunction f = parse_function(slurp(fn_path));
      NetworkCode code = parse_code(slurp(code_path));
      Verdict verdict;
      try {
        verdict = verify_code(code, net, f);
      } catch (const std::invalid_argument& e) {
        std::cerr << "shape mismatch: " << e.what() << "\n";
        return 2;
      }
      if (verdict.ok) {
        std::cout << "ok\n";
        return 0;
      }
      json cex;
      cex["reason"] = verdict.reason;
      cex["source_matrix"] = verdict.counterexample;
      cex["expected"] = verdict.expected;
      cex["decoded"] = verdict.decoded;
      std::cout << cex.dump(2) << "\n";
      return 1;
    }

    if (se->parsed()) {
      Network net = load_network(slurp(net_path));
      TargetFunction f = parse_function(slurp(fn_path));
      SearchOptions opts;
      opts.timeout_seconds = timeout_seconds;
      opts.space_limit = limit_space;
      opts.pruning = !no_prune;
      SearchResult res = search_code(net, f, opt_k, opt_n, opts);
      switch (res.status) {
        case SearchStatus::found:
          std::cout << serialize_code(*res.code) << "\n";
          return 0;
        case SearchStatus::exhausted:
          std::cout << "exhausted\n";
          return 3;
        case SearchStatus::timeout:
          std::cout << "timeout\n";
          return 4;
        case SearchStatus::space_limit:
          std::cerr << "search space exceeds --limit-space (" << limit_space << ")\n";
          return 1;
      }
    }

    if (in->parsed()) {
      Network net = load_network(slurp(net_path));
      TargetFunction f = parse_function(slurp(fn_path));
      NetworkCode code = parse_code(slurp(code_path));
      std::vector<int> cut;
      for (const auto& id : split_ids(cut_csv)) {
        auto it = net.edge_index.find(id);
        if (it == net.edge_index.end()) throw std::runtime_error("unknown edge id '" + id + "'");
        cut.push_back(it->second);
      }
      TargetFunction F = induce_function(code, net, f, cut);
      std::cout << serialize_function(F) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
