#include "linearr_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "linearr/arrangement.hpp"
#include "linearr/bounds.hpp"
#include "linearr/constructions.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/errors.hpp"
#include "linearr/family_io.hpp"
#include "linearr/svg.hpp"
#include "linearr/verify.hpp"

namespace linearr::cli {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open " + path);
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParameterError("cannot write " + path);
  f << text;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stoul(tok));
    } catch (const std::exception&) {
      throw ParameterError("bad line index '" + tok + "'");
    }
  }
  return out;
}

PruneMode parse_prune(const std::string& s) { return s == "hereditary" ? PruneMode::hereditary : PruneMode::off; }

struct GenerateArgs {
  std::string kind = "recursive_pq";
  std::int64_t p = 2, q = 2, l = 3, k = 2, n = 0;
  std::string epsilon_scale = "1";
  bool no_verify = false;
  std::string output;
};

struct VerifyArgs {
  std::string file;
  std::optional<std::int64_t> l, p, q, no_convex, max_concurrency;
  std::vector<std::string> unbounded;
  std::string prune = "off";
  unsigned threads = 1;
};

struct SearchArgs {
  std::string file;
  std::optional<std::int64_t> n;
  std::string prune = "off";
  unsigned threads = 1;
};

struct BoundsArgs {
  std::int64_t l = 3;
  std::int64_t n = 5;
  std::string c = "1";
};

struct RenderArgs {
  std::string file;
  std::string output;
  std::string viewport;
  std::string highlight_cell;
  std::string highlight_lines;
  int width = 480;
};

int run_generate(const GenerateArgs& a, std::ostream& out) {
  ConstructionSpec spec;
  spec.kind = parse_construction_kind(a.kind);
  spec.p = a.p;
  spec.q = a.q;
  spec.l = a.l;
  spec.k = a.k;
  spec.n = a.n;
  ConstructOptions opts;
  const Rat scale = Rat::parse(a.epsilon_scale);
  if (scale.sign() <= 0) throw ParameterError("--epsilon-scale must be positive");
  opts.epsilon = opts.epsilon * scale;
  opts.verify = !a.no_verify;
  const LineFamily f = generate(spec, opts);
  write_output(a.output, serialize_family(f, provenance_header(spec)), out);
  return ok;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const FamilyFile file = parse_family_file(read_input(a.file));
  const LineFamily& f = file.family;
  bool pass = true;
  auto verdict = [&](bool good) {
    pass = pass && good;
    return good ? "ok" : "FAIL";
  };
  if (f.name()) out << "name = " << *f.name() << "\n";
  out << "family_size = " << f.size() << "\n";

  const ConcurrencyReport conc = max_concurrency(f);
  out << "max_concurrency = " << conc.max_count;
  if (conc.point) out << " at " << to_string(*conc.point);
  // Both flags name the forbidden count: l concurrent lines are not allowed.
  std::optional<std::int64_t> limit = a.max_concurrency;
  if (a.l) limit = limit ? std::min(*limit, *a.l) : *a.l;
  if (limit) out << " (limit < " << *limit << ": " << verdict(conc.max_count < static_cast<std::size_t>(*limit)) << ")";
  out << "\n";

  const ChainResult cup = longest_cup(f);
  out << "longest_cup = " << cup.size << " " << join(cup.witness);
  if (a.p) out << " (limit <= " << *a.p << ": " << verdict(cup.size <= static_cast<std::size_t>(*a.p)) << ")";
  out << "\n";
  const ChainResult cap = longest_cap(f);
  out << "longest_cap = " << cap.size << " " << join(cap.witness);
  if (a.q) out << " (limit <= " << *a.q << ": " << verdict(cap.size <= static_cast<std::size_t>(*a.q)) << ")";
  out << "\n";

  for (const std::string& s : a.unbounded) {
    const Side side = s == "left" ? Side::left : Side::right;
    const auto w = find_k_cell_unbounded(f, 4, side);
    out << "4_cell_unbounded_" << s << " = " << (w ? "yes " + join(w->lines) + " " + to_string(w->signs) : "no")
        << " (" << verdict(!w) << ")\n";
  }

  if (a.no_convex) {
    const auto n = static_cast<std::size_t>(*a.no_convex);
    std::optional<std::vector<std::size_t>> w;
    if (n >= 2 && n <= f.size()) w = find_n_convex(f, n, {parse_prune(a.prune), a.threads});
    out << "convex_" << n << " = " << (w ? "yes " + join(*w) : "no") << " (" << verdict(!w) << ")\n";
  }
  out << "result = " << (pass ? "pass" : "fail") << "\n";
  return pass ? ok : violation;
}

int run_search(const SearchArgs& a, std::ostream& out) {
  const LineFamily f = parse_family(read_input(a.file));
  const ConvexSearchOptions opts{parse_prune(a.prune), a.threads};
  if (a.n) {
    const auto n = static_cast<std::size_t>(*a.n);
    if (n < 2) throw ParameterError("--n must be >= 2");
    std::optional<std::vector<std::size_t>> w;
    if (n <= f.size()) w = find_n_convex(f, n, opts);
    if (w) {
      out << "convex_" << n << " = yes " << join(*w) << "\n";
      return violation;
    }
    out << "convex_" << n << " = no\n";
    return ok;
  }
  const std::vector<std::size_t> best = largest_convex_subset(f, opts);
  out << "largest_convex_subset = " << best.size() << " " << join(best) << "\n";
  return ok;
}

int run_bounds(const BoundsArgs& a, std::ostream& out) {
  BoundsParams params;
  params.c = Rat::parse(a.c);
  out << "l = " << a.l << "\nn = " << a.n << "\n";
  if (const auto exact = known_exact(a.l, a.n)) out << "exact = " << *exact << "\n";
  if (a.n >= 5) out << "lower_bound = " << lower_bound_value(a.l, a.n).get_str() << "\n";
  out << "upper_bound = " << upper_bound_value(a.l, a.n, params).to_string() << "\n";
  return ok;
}

int run_render(const RenderArgs& a, std::ostream& out) {
  const LineFamily f = parse_family(read_input(a.file));
  RenderOptions opts;
  opts.width_px = a.width;
  if (!a.viewport.empty()) opts.viewport = parse_viewport(a.viewport);
  if (!a.highlight_cell.empty()) {
    opts.highlight_cell = parse_sign_vector(a.highlight_cell);
    if (opts.highlight_cell->size() != f.size()) throw ParameterError("highlight sign vector has the wrong length");
  }
  if (!a.highlight_lines.empty()) opts.highlight_lines = parse_indices(a.highlight_lines);
  write_output(a.output, render_svg(f, opts), out);
  return ok;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Line arrangements: constructions, exact verification and bounds"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Write a constructed family");
  g->add_option("--kind", gen.kind,
                "pencil, base_pq2, base_2q, recursive_pq, prop32_even, prop32_odd, thm12, thm12_even, thm12_odd, "
                "figure10")
      ->required();
  g->add_option("--p", gen.p, "cup limit");
  g->add_option("--q", gen.q, "cap limit");
  g->add_option("--l", gen.l, "forbidden concurrency");
  g->add_option("--k", gen.k, "half size parameter");
  g->add_option("--n", gen.n, "convex-position target (thm12) or line count (pencil)");
  g->add_option("--epsilon-scale", gen.epsilon_scale, "multiplier on the starting contraction epsilon");
  g->add_flag("--no-verify", gen.no_verify, "skip the verifier inside the generators");
  g->add_option("-o,--output", gen.output, "output file (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check a family against forbidden patterns");
  v->add_option("file", ver.file, "family file, - for stdin")->required();
  v->add_option("--l", ver.l, "no l concurrent lines");
  v->add_option("--max-concurrency", ver.max_concurrency, "forbidden concurrency count");
  v->add_option("--p", ver.p, "longest cup allowed");
  v->add_option("--q", ver.q, "longest cap allowed");
  v->add_option("--no-convex", ver.no_convex, "no n lines in convex position");
  v->add_option("--check-unbounded", ver.unbounded, "no 4-cell unbounded to this side")
      ->check(CLI::IsMember({"left", "right"}));
  v->add_option("--prune", ver.prune, "convex search pruning")->check(CLI::IsMember({"off", "hereditary"}));
  v->add_option("--threads", ver.threads, "convex search worker threads");

  SearchArgs sea;
  auto* s = app.add_subcommand("search", "Find lines in convex position");
  s->add_option("file", sea.file, "family file, - for stdin")->required();
  s->add_option("--n", sea.n, "subset size; omitted means report a largest subset");
  s->add_option("--prune", sea.prune, "pruning")->check(CLI::IsMember({"off", "hereditary"}));
  s->add_option("--threads", sea.threads, "worker threads");

  BoundsArgs bnd;
  auto* b = app.add_subcommand("bounds", "Evaluate the bound formulas");
  b->add_option("--l", bnd.l)->required();
  b->add_option("--n", bnd.n)->required();
  b->add_option("--c", bnd.c, "upper bound constant (rational, >= 1)");

  RenderArgs ren;
  auto* r = app.add_subcommand("render", "Draw a family as SVG");
  r->add_option("file", ren.file, "family file, - for stdin")->required();
  r->add_option("-o,--output", ren.output, "output file (default stdout)");
  r->add_option("--viewport", ren.viewport, "xmin,xmax,ymin,ymax");
  r->add_option("--highlight-cell", ren.highlight_cell, "sign vector over +/-");
  r->add_option("--highlight-lines", ren.highlight_lines, "comma separated indices");
  r->add_option("--width", ren.width, "pixel width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (*g) return run_generate(gen, out);
    if (*v) return run_verify(ver, out);
    if (*s) return run_search(sea, out);
    if (*b) return run_bounds(bnd, out);
    if (*r) return run_render(ren, out);
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return violation;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

}  // namespace linearr::cli
