#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "mzv/families.hpp"
#include "mzv/json_io.hpp"
#include "mzv/multizeta.hpp"
#include "mzv/powersum.hpp"

namespace mzv::cli {

namespace {

struct Range {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
};

Range parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad range \"" + text + "\"");
    return static_cast<std::int64_t>(v);
  };
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const auto v = to_int(text);
      return {v, v};
    }
    Range r{to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range \"" + text + "\"");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range \"" + text + "\"");
  }
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad integer list \"" + text + "\"");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// Options every subcommand shares.
struct FieldOpts {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  std::uint64_t s = 0;
  std::string format = "text";
  std::string out_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--q", q, "field order q = p^s");
    cmd->add_option("--p", p, "characteristic (with --s)");
    cmd->add_option("--s", s, "extension degree (with --p)");
    cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  }

  FieldCtx field() const {
    if (q != 0) {
      FieldCtx ctx = make_field_for_order(q);
      if ((p != 0 && p != ctx.p()) || (s != 0 && s != ctx.s())) {
        throw std::invalid_argument("--q disagrees with --p/--s");
      }
      return ctx;
    }
    if (p == 0) throw std::invalid_argument("give --q or --p (and optionally --s)");
    return make_field(p, s == 0 ? 1 : s);
  }

  bool json() const { return format == "json"; }
};

// Routes output to --out or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::invalid_argument("cannot open " + path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_powersum(const FieldOpts& fo, std::int64_t d, std::int64_t k, const std::string& method, std::ostream& out) {
  const FieldCtx ctx = fo.field();
  RatFunc value(ctx);
  if (method == "brute") {
    value = s_d_bruteforce(ctx, d, k);
  } else if (method == "special") {
    auto v = s_d_special(power_sums(ctx).brackets(), d, k);
    if (!v) throw std::invalid_argument("no closed form matches (d, k)");
    value = *v;
  } else {
    value = power_sums(ctx).value(d, k);
  }
  Sink sink(fo.out_path, out);
  if (fo.json()) {
    Json j;
    j["q"] = ctx.q();
    j["d"] = d;
    j["k"] = k;
    j["value"] = value.to_string();
    sink.stream() << j.dump() << "\n";
  } else {
    sink.stream() << value.to_string() << "\n";
  }
  return kOk;
}

int cmd_relation(const FieldOpts& fo, std::int64_t a, std::int64_t b, const std::string& verify, std::ostream& out) {
  const FieldCtx ctx = fo.field();
  const RelationSet rel = derive_relation(ctx, a, b);
  std::vector<VerifyResult> checks;
  if (!verify.empty()) {
    for (auto d : parse_list(verify)) {
      if (d < 1) throw std::invalid_argument("verification depths must be >= 1");
      checks.push_back(verify_relation_exact(power_sums(ctx), rel, d));
    }
  }
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const VerifyResult& r) { return r.ok; });
  Sink sink(fo.out_path, out);
  if (fo.json()) {
    Json j = relation_to_json(rel, true);
    if (!checks.empty()) {
      Json v = Json::array();
      for (const auto& r : checks) {
        Json row;
        row["d"] = r.d;
        row["ok"] = r.ok;
        if (r.witness) row["witness"] = r.witness->to_string();
        v.push_back(std::move(row));
      }
      j["verify"] = std::move(v);
    }
    sink.stream() << j.dump() << "\n";
  } else {
    std::ostream& os = sink.stream();
    os << "S(" << a << "," << b << ") over " << ctx.name() << ":";
    if (rel.pairs.empty()) os << " (empty)";
    for (const auto& pr : rel.pairs) os << " (" << pr.f << "," << pr.index << ")";
    os << "\n";
    os << MZIndex{{a}}.to_string() << "*" << MZIndex{{b}}.to_string() << " = " << shuffle_expand(ctx, a, b).to_string()
       << "\n";
    for (const auto& r : checks) {
      os << "depth " << r.d << ": " << (r.ok ? "pass" : "FAIL");
      if (r.witness) os << " (difference " << r.witness->to_string() << ")";
      os << "\n";
    }
  }
  return ok ? kOk : kVerifyFailed;
}

int cmd_zeta(const FieldOpts& fo, const std::string& indices, std::int64_t prec, std::ostream& out) {
  const FieldCtx ctx = fo.field();
  const LaurentTail z = zeta_trunc(ctx, {MZIndex{parse_list(indices)}, prec});
  Sink sink(fo.out_path, out);
  if (fo.json()) {
    sink.stream() << laurent_to_json(z).dump() << "\n";
  } else {
    sink.stream() << z.to_string() << "\n";
  }
  return kOk;
}

// One family check at one grid point: (label, value, pass).
struct FamilyRow {
  std::string key;
  std::int64_t value;
  bool pass;
};

int cmd_family(const FieldOpts& fo, const std::string& id, const std::string& b_range, const std::string& n_range,
               std::int64_t a, std::ostream& out) {
  const FieldCtx ctx = fo.field();
  std::vector<FamilyRow> rows;
  auto over_b = [&](const std::function<RelationSet(std::int64_t)>& gen, std::int64_t fixed_a) {
    const Range r = parse_range(b_range.empty() ? "1..20" : b_range);
    if (r.lo < 1) throw std::invalid_argument("b must be >= 1");
    for (std::int64_t b = r.lo; b <= r.hi; ++b) rows.push_back({"b", b, gen(b) == derive_relation(ctx, fixed_a, b)});
  };
  auto over_n = [&](const std::function<bool(std::int64_t)>& check) {
    const Range r = parse_range(n_range.empty() ? "1..3" : n_range);
    if (r.lo < 1) throw std::invalid_argument("n must be >= 1");
    for (std::int64_t n = r.lo; n <= r.hi; ++n) rows.push_back({"n", n, check(n)});
  };
  if (id == "a1") {
    over_b([&](std::int64_t b) { return family_a1(ctx, b); }, 1);
  } else if (id == "a2") {
    over_b([&](std::int64_t b) { return family_a2(ctx, b); }, 2);
  } else if (id == "a3") {
    over_b([&](std::int64_t b) { return family_a3_q2(ctx, b); }, 3);
  } else if (id == "small") {
    over_b([&](std::int64_t b) { return recursion_small_a(ctx, a, b); }, a);
  } else if (id == "large") {
    over_n([&](std::int64_t n) { return check_large_indices(ctx, n); });
  } else if (id == "prop1") {
    over_n([&](std::int64_t n) { return check_prop1(ctx, n); });
  } else if (id == "negN") {
    over_n([&](std::int64_t n) { return check_s1_negN(ctx, n); });
  } else {
    throw std::invalid_argument("unknown family id \"" + id + "\"");
  }
  Sink sink(fo.out_path, out);
  bool all = true;
  for (const auto& row : rows) {
    all = all && row.pass;
    if (fo.json()) {
      Json j;
      j["family"] = id;
      j["q"] = ctx.q();
      if (id == "small") j["a"] = a;
      j[row.key] = row.value;
      j["pass"] = row.pass;
      sink.stream() << j.dump() << "\n";
    } else {
      sink.stream() << id << " q=" << ctx.q() << " " << row.key << "=" << row.value << " "
                    << (row.pass ? "pass" : "FAIL") << "\n";
    }
  }
  return all ? kOk : kVerifyFailed;
}

int cmd_table(const FieldOpts& fo, std::int64_t a_max, std::int64_t b_max, unsigned jobs, std::ostream& out) {
  const FieldCtx ctx = fo.field();
  if (a_max < 1 || b_max < 1) throw std::invalid_argument("--a-max and --b-max must be >= 1");
  const auto cells = static_cast<std::size_t>(a_max * b_max);
  std::vector<std::string> lines(cells);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells; i = next++) {
      try {
        const auto a = static_cast<std::int64_t>(i) / b_max + 1;
        const auto b = static_cast<std::int64_t>(i) % b_max + 1;
        lines[i] = relation_to_json(derive_relation(ctx, a, b), true).dump();
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  Sink sink(fo.out_path, out);
  for (const auto& line : lines) sink.stream() << line << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power sums, multizeta values and shuffle relations over F_q[t]", "mzv"};
  app.require_subcommand(1);

  FieldOpts ps_f, rel_f, zeta_f, fam_f, tab_f;
  std::int64_t ps_d = 0, ps_k = 1;
  std::string ps_method = "engine";
  auto* ps = app.add_subcommand("powersum", "S_d(k) as a rational function of t");
  ps_f.attach(ps);
  ps->add_option("--d", ps_d, "degree")->required();
  ps->add_option("--k", ps_k, "exponent (any integer)")->required()->allow_extra_args(false);
  ps->add_option("--method", ps_method, "engine, brute or special")
      ->check(CLI::IsMember({"engine", "brute", "special"}));

  std::int64_t rel_a = 1, rel_b = 1;
  std::string rel_verify;
  auto* rel = app.add_subcommand("relation", "derive S(a,b) and optionally verify it at given depths");
  rel_f.attach(rel);
  rel->add_option("--a", rel_a)->required();
  rel->add_option("--b", rel_b)->required();
  rel->add_option("--verify", rel_verify, "comma-separated depths d, e.g. 1,2,3");

  std::string zeta_idx;
  std::int64_t zeta_prec = 20;
  auto* zeta = app.add_subcommand("zeta", "truncated multizeta value");
  zeta_f.attach(zeta);
  zeta->add_option("--indices", zeta_idx, "comma-separated s_1,...,s_r")->required();
  zeta->add_option("--prec", zeta_prec, "absolute precision N (result exact through u^N)");

  std::string fam_id, fam_b, fam_n;
  std::int64_t fam_a = 2;
  auto* fam = app.add_subcommand("family", "check a closed-form family against the derivation");
  fam_f.attach(fam);
  fam->add_option("--id", fam_id, "a1, a2, a3, small, large, prop1 or negN")->required();
  fam->add_option("--b", fam_b, "range of b, e.g. 1..60");
  fam->add_option("--n", fam_n, "range of n for large/prop1/negN");
  fam->add_option("--a", fam_a, "a for the small-a recursion (2 <= a <= p)");

  std::int64_t tab_a = 10, tab_b = 10;
  unsigned tab_jobs = 0;
  auto* tab = app.add_subcommand("table", "JSON-lines archive of S(a,b) over a grid");
  tab_f.attach(tab);
  tab->add_option("--a-max", tab_a);
  tab->add_option("--b-max", tab_b);
  tab->add_option("--jobs", tab_jobs, "worker threads (0 = hardware concurrency)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (ps->parsed()) return cmd_powersum(ps_f, ps_d, ps_k, ps_method, out);
    if (rel->parsed()) return cmd_relation(rel_f, rel_a, rel_b, rel_verify, out);
    if (zeta->parsed()) return cmd_zeta(zeta_f, zeta_idx, zeta_prec, out);
    if (fam->parsed()) return cmd_family(fam_f, fam_id, fam_b, fam_n, fam_a, out);
    if (tab->parsed()) return cmd_table(tab_f, tab_a, tab_b, tab_jobs, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::overflow_error& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mzv::cli
