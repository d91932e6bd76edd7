#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "folim/error.hpp"
#include "folim/evaluator.hpp"
#include "folim/families.hpp"
#include "folim/forest_codec.hpp"
#include "folim/formula.hpp"
#include "folim/hintikka.hpp"
#include "folim/interval.hpp"
#include "folim/limit_sampler.hpp"
#include "folim/major.hpp"
#include "folim/pairing.hpp"
#include "folim/pw_codec.hpp"
#include "folim/pw_formulas.hpp"
#include "folim/tree_io.hpp"

namespace folim::cli {
namespace {

namespace fs = std::filesystem;

PlaneCTree load_tree(const std::string& path) { return read_ctree(read_file(path)); }

// A formula argument is either formula text or the path of a file holding it.
FormulaPtr load_formula(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '(' && fs::is_regular_file(arg, ec)) return parse_formula(read_file(arg));
  return parse_formula(arg);
}

std::vector<fs::path> sequence_files(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ValidationError("not a directory: " + dir);
  std::vector<fs::path> files;
  for (auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".sexp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw ValidationError("no .sexp files in " + dir);
  return files;
}

std::vector<PlaneCTree> load_sequence(const std::string& dir) {
  std::vector<PlaneCTree> seq;
  for (auto& p : sequence_files(dir)) seq.push_back(load_tree(p.string()));
  return seq;
}

// "p/q", an integer, or a decimal like 0.01, read exactly.
Epsilon parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) return Epsilon(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    auto dot = s.find('.');
    if (dot == std::string::npos) return Epsilon(std::stoll(s));
    std::string frac = s.substr(dot + 1);
    if (frac.size() > 15) throw ValidationError("too many decimal places in " + s);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t whole = dot ? std::stoll(s.substr(0, dot)) : 0;
    return Epsilon(whole * den + (frac.empty() ? 0 : std::stoll(frac)), den);
  } catch (const std::logic_error&) {
    throw ValidationError("not a rational number: " + s);
  }
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n ") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

std::string nu_text(const TypeMeasure& m) {
  switch (m.kind) {
    case NuKind::Finite: return std::to_string(m.nu);
    case NuKind::Infinite: return "inf";
    default: return "unstable";
  }
}

std::string fixed(double x, int places = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(places) << x;
  return os.str();
}

struct Ctx {
  std::ostream& out;
  std::ostream& err;
};

struct ValidateCmd {
  std::string path, kind, pd;

  void add(CLI::App& app, Ctx& c) {
    auto* sub = app.add_subcommand("validate", "Check a tree, forest, interval graph or path-width tree file");
    sub->add_option("file", path)->required();
    sub->add_option("--kind", kind, "tree|forest|iv|pwtree|graph (guessed from content when omitted)");
    sub->add_option("--pd", pd, "path decomposition to check against a graph file");
    sub->callback([this, &c] {
      std::string text = read_file(path);
      std::string k = kind;
      if (k.empty()) {
        auto pos = text.find_first_not_of(" \t\r\n");
        if (pos == std::string::npos) throw ValidationError("empty file");
        if (text.compare(pos, 7, "(forest") == 0)
          k = "forest";
        else if (text.compare(pos, 7, "palette") == 0)
          k = "iv";
        else if (text[pos] == '(')
          k = text.find("ctriple=") != std::string::npos ? "pwtree" : "tree";
        else
          k = "graph";
      }
      if (k == "tree") {
        auto t = read_ctree(text);
        c.out << "ok tree nodes=" << t.size() << " height=" << t.tree.height() << " constants=" << t.constants.size()
              << '\n';
      } else if (k == "forest") {
        auto f = read_forest(text);
        c.out << "ok forest trees=" << f.trees.size() << " nodes=" << f.node_count() << " k=" << f.k << '\n';
      } else if (k == "iv") {
        auto h = read_interval_graph(text);
        c.out << "ok interval-graph vertices=" << h.vertices.size() << " edges=" << h.edges.size()
              << " palette=" << h.palette.size() << '\n';
      } else if (k == "pwtree") {
        auto t = read_pw_tree(text);
        auto pal = t.palette.empty() ? infer_palette(t) : t.palette;
        validate_pw_tree(t, pal);
        c.out << "ok pw-tree nodes=" << t.tree.size() << '\n';
      } else if (k == "graph") {
        auto g = read_simple_graph(text);
        if (!pd.empty()) read_path_decomposition(read_file(pd), g).validate(g);
        c.out << "ok graph vertices=" << g.n << " edges=" << g.edges.size() << (pd.empty() ? "" : " pd=valid") << '\n';
      } else {
        throw ValidationError("unknown kind " + k);
      }
    });
  }
};

struct PairingCmd {
  std::string tree, formula;
  unsigned threads = 0;
  std::string mtree, mformula;
  std::uint64_t samples = 100000, seed = 1;

  void add(CLI::App& app, Ctx& c, const bool& decimal) {
    auto* sub = app.add_subcommand("stone-pairing", "Exact Stone pairing of a formula with a tree");
    sub->add_option("tree", tree)->required();
    sub->add_option("formula", formula, "formula text or file")->required();
    sub->add_option("--threads", threads, "worker count (default FOLIM_THREADS or hardware)");
    sub->callback([this, &c, &decimal] {
      auto r = stone_pairing(load_tree(tree), load_formula(formula), threads);
      c.out << format_rational(r, decimal) << '\n';
    });

    auto* mc = app.add_subcommand("stone-pairing-mc", "Monte-Carlo Stone pairing estimate");
    mc->add_option("tree", mtree)->required();
    mc->add_option("formula", mformula)->required();
    mc->add_option("--samples", samples)->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed);
    mc->callback([this, &c] {
      auto e = stone_pairing_mc(load_tree(mtree), load_formula(mformula), samples, seed);
      c.out << "estimate " << fixed(e.estimate, 12) << "\nstderr " << fixed(e.stderr_, 12) << "\nsamples " << e.samples
            << "\nhits " << e.hits << '\n';
    });
  }
};

struct HintikkaCmd {
  std::string tree, out;
  int d = 1;
  std::size_t gamma = 0;
  bool dump = false;
  std::string ktree;
  int v = 0, w = 0;
  std::size_t k = 4;
  std::string a, b;
  int ed = 1;
  std::uint64_t budget = 50'000'000;
  std::string ha, hb;
  int D = 1;
  std::size_t hgamma = 1;

  void add(CLI::App& app, Ctx& c) {
    auto* sub = app.add_subcommand("hintikka-census", "Counts of local d-types");
    sub->add_option("tree", tree)->required();
    sub->add_option("-d,--depth", d)->check(CLI::Range(0, kMaxTypeDepth));
    sub->add_option("--gamma", gamma, "report counts >= gamma as truncated");
    sub->add_option("-o,--output", out);
    sub->add_flag("--dump", dump, "also print the fingerprint of every type");
    sub->callback([this, &c] {
      auto t = load_tree(tree);
      auto census = type_census(t, d, gamma ? std::optional<std::size_t>(gamma) : std::nullopt);
      emit(c.out, out, census_csv(census));
      if (dump)
        for (auto& [id, n] : census.counts) c.out << id << ' ' << dump_type(id) << '\n';
    });

    auto* kp = app.add_subcommand("k-position", "Word of the canonical path from v to w");
    kp->add_option("tree", ktree)->required();
    kp->add_option("v", v)->required();
    kp->add_option("w", w)->required();
    kp->add_option("-k", k);
    kp->callback([this, &c] {
      auto t = load_tree(ktree);
      if (v < 0 || w < 0 || static_cast<std::size_t>(std::max(v, w)) >= t.size())
        throw ValidationError("node id out of range");
      auto word = k_position(t.tree, v, w, k);
      c.out << (word ? to_string(*word) : "none") << '\n';
    });

    auto* ef = app.add_subcommand("ef-equiv", "Decide d-equivalence of two trees");
    ef->add_option("tree1", a)->required();
    ef->add_option("tree2", b)->required();
    ef->add_option("-d,--depth", ed)->check(CLI::Range(0, kMaxTypeDepth));
    ef->add_option("--budget", budget);
    ef->callback([this, &c] {
      c.out << (structure_equivalent_d(load_tree(a), load_tree(b), ed, budget) ? "equivalent" : "not equivalent") << '\n';
    });

    auto* hp = app.add_subcommand("hanf-predict", "Census-based equivalence prediction");
    hp->add_option("tree1", ha)->required();
    hp->add_option("tree2", hb)->required();
    hp->add_option("-D,--depth", D)->check(CLI::Range(0, kMaxTypeDepth));
    hp->add_option("--gamma", hgamma)->check(CLI::PositiveNumber);
    hp->callback([this, &c] { c.out << (hanf_predict(load_tree(ha), load_tree(hb), D, hgamma) ? "true" : "false") << '\n'; });
  }
};

struct MajorCmd {
  std::vector<std::string> trees;
  std::string eps = "1/2", csv;
  int radius = -1;
  std::string dir, outdir;
  int stages = 2;

  void add(CLI::App& app, Ctx& c) {
    auto* sub = app.add_subcommand("major", "Epsilon-major nodes and their bound");
    sub->add_option("trees", trees)->required();
    sub->add_option("--eps", eps, "epsilon in (0,1], as p/q or decimal");
    sub->add_option("--radius", radius, "also check pruned balls up to this radius");
    sub->add_option("--csv", csv, "write the report CSV here");
    sub->callback([this, &c] {
      Epsilon e = parse_rational(eps);
      std::vector<MajorReport> reports;
      bool ok = true;
      for (auto& p : trees) {
        auto t = load_tree(p);
        auto r = major_report(t.tree, e);
        c.out << "majors:";
        for (NodeId u : r.majors) c.out << ' ' << u;
        c.out << "\nbound: " << r.bound << "\npass: " << (r.pass ? "true" : "false") << '\n';
        ok &= r.pass;
        for (int rr = 0; rr <= radius; ++rr) {
          auto b = check_major_neighborhood(t.tree, e, rr);
          c.out << "ball r=" << rr << " worst=" << b.worst << " pass=" << (b.pass ? "true" : "false") << '\n';
          ok &= b.pass;
        }
        reports.push_back(r);
      }
      if (!csv.empty()) write_file(csv, major_csv(reports));
      if (!ok) throw InternalError("major-node bound violated");
    });

    auto* an = app.add_subcommand("annotate", "Assign constants to major nodes along a sequence");
    an->add_option("dir", dir, "sequence directory")->required();
    an->add_option("--stages", stages)->check(CLI::Range(0, 14));
    an->add_option("-o,--output", outdir)->required();
    an->callback([this, &c] {
      auto files = sequence_files(dir);
      std::vector<PlaneTree> seq;
      for (auto& f : files) seq.push_back(load_tree(f.string()).tree);
      auto ann = annotate_constants(seq, stages);
      fs::create_directories(outdir);
      for (std::size_t i = 0; i < files.size(); ++i) {
        write_file(fs::path(outdir) / files[i].filename(), write_ctree(ann.trees[i]));
        if (!ann.skipped[i].empty()) {
          c.out << files[i].filename().string() << " skipped stages:";
          for (int s : ann.skipped[i]) c.out << ' ' << s;
          c.out << '\n';
        }
      }
    });
  }
};

struct CodecsCmd {
  std::string ef_in, ef_out;
  std::string df_in, df_out;
  int k = 1;
  std::string ep_in, ep_out;
  std::uint64_t seed = 0;
  std::string dp_in, dp_out, pal;
  bool formulas = false;
  std::string pf_pal = "0,1";
  std::string p2i_g, p2i_pd, p2i_out;
  std::string i2p_in, i2p_out;

  void add(CLI::App& app, Ctx& c) {
    auto* ef = app.add_subcommand("encode-forest", "Encode a colored forest as a plane tree");
    ef->add_option("forest", ef_in)->required();
    ef->add_option("-o,--output", ef_out);
    ef->callback([this, &c] { emit(c.out, ef_out, write_ctree(PlaneCTree(forest_encode(read_forest(read_file(ef_in)))))); });

    auto* df = app.add_subcommand("decode-forest", "Decode a plane tree into a colored forest");
    df->add_option("tree", df_in)->required();
    df->add_option("-k", k, "number of colors")->check(CLI::PositiveNumber);
    df->add_option("-o,--output", df_out);
    df->callback([this, &c] { emit(c.out, df_out, write_forest(forest_decode(load_tree(df_in).tree, k))); });

    auto* ep = app.add_subcommand("encode-pw", "Encode an A-interval graph as a colored plane tree");
    ep->add_option("graph", ep_in, "interval graph file")->required();
    ep->add_option("-o,--output", ep_out);
    ep->add_option("--seed", seed, "randomize tie-breaking with this seed (0 = smallest id)");
    ep->callback([this, &c] {
      auto h = read_interval_graph(read_file(ep_in));
      Rng rng(seed);
      emit(c.out, ep_out, write_pw_tree(pw_encode(h, seed ? &rng : nullptr)));
    });

    auto* dp = app.add_subcommand("decode-pw", "Decode a path-width tree into a graph");
    dp->add_option("tree", dp_in)->required();
    dp->add_option("-o,--output", dp_out);
    dp->add_flag("--formulas", formulas, "decode by evaluating the interpretation formulas");
    dp->add_option("--palette", pal, "comma-separated palette (default: inferred)");
    dp->callback([this, &c] {
      auto t = read_pw_tree(read_file(dp_in));
      std::vector<int> palette;
      if (!pal.empty()) {
        std::stringstream ss(pal);
        for (std::string x; std::getline(ss, x, ',');) palette.push_back(std::stoi(x));
        std::sort(palette.begin(), palette.end());
      } else {
        palette = t.palette.empty() ? infer_palette(t) : t.palette;
      }
      t.palette = palette;
      validate_pw_tree(t, palette);
      SimpleGraph g;
      if (formulas) {
        auto st = apply_interpretation(pw_scheme(pw_formulas(palette)), pw_colored_tree(t, palette));
        g = relation_as_graph(st, "edge");
      } else {
        g = pw_decode_direct(t).graph;
      }
      emit(c.out, dp_out, write_simple_graph(g));
    });

    auto* pf = app.add_subcommand("pw-formulas", "Print the interpretation formulas for a palette");
    pf->add_option("--palette", pf_pal, "comma-separated palette");
    pf->callback([this, &c] {
      std::vector<int> palette;
      std::stringstream ss(pf_pal);
      for (std::string x; std::getline(ss, x, ',');) palette.push_back(std::stoi(x));
      std::sort(palette.begin(), palette.end());
      auto f = pw_formulas(palette);
      c.out << "phi0 " << to_string(f.phi0) << "\nphi_v " << to_string(f.phi_v) << "\nphi_e " << to_string(f.phi_e)
            << "\n# dag sizes " << dag_size(f.phi0) << ' ' << dag_size(f.phi_v) << ' ' << dag_size(f.phi_e) << '\n';
    });

    auto* p2i = app.add_subcommand("pd2iv", "Path decomposition to A-interval graph");
    p2i->add_option("graph", p2i_g)->required();
    p2i->add_option("pd", p2i_pd)->required();
    p2i->add_option("-o,--output", p2i_out);
    p2i->callback([this, &c] {
      auto g = read_simple_graph(read_file(p2i_g));
      auto pd = read_path_decomposition(read_file(p2i_pd), g);
      emit(c.out, p2i_out, write_interval_graph(pd_to_interval(g, pd)));
    });

    auto* i2p = app.add_subcommand("iv2pd", "A-interval graph to path decomposition");
    i2p->add_option("graph", i2p_in)->required();
    i2p->add_option("-o,--output", i2p_out);
    i2p->callback([this, &c] {
      auto h = read_interval_graph(read_file(i2p_in));
      emit(c.out, i2p_out, write_path_decomposition(interval_to_pd(h), h.graph()));
    });
  }
};

struct GenCmd {
  std::string family, outdir;
  std::size_t from = 2, to = 10, step = 1, legs = 1, width = 2, count = 10;
  std::uint64_t seed = 1;

  void add(CLI::App& app, Ctx& c) {
    auto* sub = app.add_subcommand("gen-family", "Write a sequence of generated structures");
    sub->add_option("family", family)->required()->check(
        CLI::IsMember({"paths", "stars", "fans", "caterpillars", "random-pw", "binary", "random-trees"}));
    sub->add_option("--from", from);
    sub->add_option("--to", to);
    sub->add_option("--step", step)->check(CLI::PositiveNumber);
    sub->add_option("--legs", legs);
    sub->add_option("--width", width)->check(CLI::PositiveNumber);
    sub->add_option("--count", count);
    sub->add_option("--seed", seed);
    sub->add_option("-o,--output", outdir)->required();
    sub->callback([this, &c] {
      fs::create_directories(outdir);
      Rng rng(seed);
      auto name = [](std::size_t i, const char* ext) {
        std::ostringstream os;
        os << std::setw(4) << std::setfill('0') << i << ext;
        return os.str();
      };
      std::size_t written = 0;
      if (family == "random-pw") {
        for (std::size_t i = 0; i < count; ++i) {
          auto dg = random_pw_graph(to, width, rng);
          write_file(fs::path(outdir) / name(i, ".iv"), write_interval_graph(pd_to_interval(dg.graph, dg.pd)));
          ++written;
        }
      } else {
        for (std::size_t n = from, i = 0; n <= to; n += step, ++i) {
          if (family == "fans" || family == "paths-graph") {
            auto dg = make_fan(n);
            write_file(fs::path(outdir) / name(i, ".iv"), write_interval_graph(pd_to_interval(dg.graph, dg.pd)));
          } else {
            PlaneTree t;
            if (family == "paths")
              t = make_path(n);
            else if (family == "stars")
              t = make_star(n);
            else if (family == "caterpillars")
              t = make_caterpillar(n, legs);
            else if (family == "binary")
              t = make_complete_binary(n);
            else
              t = random_plane_tree(n, rng);
            write_file(fs::path(outdir) / name(i, ".sexp"), write_ctree(PlaneCTree(std::move(t))));
          }
          ++written;
        }
      }
      c.out << "wrote " << written << " files to " << outdir << '\n';
    });
  }
};

struct MeasuresCmd {
  std::string dir, out;
  int d = 1;
  std::size_t threshold = 1000;
  std::string ldir, lout, tree_json;
  int ld = 3, dprime = -1;
  std::size_t samples = 100000, lthreshold = 1000, mthreshold = 16;
  std::uint64_t seed = 1;

  void add(CLI::App& app, Ctx& c) {
    auto* em = app.add_subcommand("estimate-measures", "Estimate nu and mu per local type over a sequence");
    em->add_option("dir", dir, "sequence directory")->required();
    em->add_option("-d,--depth", d)->check(CLI::Range(0, kMaxTypeDepth));
    em->add_option("--threshold", threshold)->check(CLI::PositiveNumber);
    em->add_option("-o,--output", out);
    em->callback([this, &c] {
      auto est = estimate_stone_measures(load_sequence(dir), d, threshold);
      std::ostringstream os;
      os << "type_id,depth,nu,mu,tail_counts\n";
      for (auto& [id, m] : est.types) {
        std::string tc;
        for (std::size_t x : m.tail_counts) tc += (tc.empty() ? "" : " ") + std::to_string(x);
        os << id << ',' << d << ',' << nu_text(m) << ',' << fixed(m.mu, 12) << ',' << csv_quote(tc) << '\n';
      }
      emit(c.out, out, os.str());
    });

    auto* ls = app.add_subcommand("limit-sample", "Sample the depth-truncated limit modeling");
    ls->add_option("dir", ldir, "sequence directory")->required();
    ls->add_option("-d,--depth", ld)->check(CLI::Range(1, kMaxTypeDepth));
    ls->add_option("--dprime", dprime, "comparison depth (default depth-1)");
    ls->add_option("--samples", samples)->check(CLI::PositiveNumber);
    ls->add_option("--seed", seed);
    ls->add_option("--threshold", lthreshold, "counts at or above this are infinite")->check(CLI::PositiveNumber);
    ls->add_option("--m-threshold", mthreshold, "child multiplicities at or above this are infinite")
        ->check(CLI::PositiveNumber);
    ls->add_option("-o,--output", lout, "CSV of sampled nodes");
    ls->add_option("--tree-json", tree_json, "write the type tree as JSON");
    ls->callback([this, &c] {
      int dp = dprime < 0 ? ld - 1 : dprime;
      auto seq = load_sequence(ldir);
      std::vector<StoneMeasureEstimate> est;
      for (int q = 0; q <= ld; ++q) est.push_back(estimate_stone_measures(seq, q, lthreshold));
      auto M = build_type_tree(est, seq.back(), mthreshold);
      c.err << "note: m threshold " << mthreshold << ", nu threshold " << lthreshold << '\n';
      for (auto& r : M.report) c.err << "note: " << r << '\n';
      if (!tree_json.empty()) {
        nlohmann::json j;
        j["depth"] = M.depth;
        j["m_threshold"] = M.m_threshold;
        j["report"] = M.report;
        for (auto& [id, n] : M.types) {
          nlohmann::json e{{"id", id}, {"depth", n.depth}, {"nu", n.infinite ? nlohmann::json("inf") : nlohmann::json(n.nu)},
                           {"mu", n.mu}, {"root", n.is_root}};
          if (n.refines) e["refines"] = *n.refines;
          if (n.parent) e["parent"] = *n.parent;
          if (n.successor) e["successor"] = *n.successor;
          if (n.parent) e["m"] = n.m == kInfinite ? nlohmann::json("inf") : nlohmann::json(n.m);
          if (n.constant) e["constant"] = *n.constant;
          j["types"].push_back(e);
        }
        write_file(tree_json, j.dump(2) + "\n");
      }
      if (!lout.empty()) {
        Rng rng(seed);
        std::ostringstream os;
        os << "sample,type,h,s,t\n" << std::setprecision(17);
        for (std::size_t i = 0; i < samples; ++i) {
          auto n = sample_node(M, rng);
          os << i << ',' << n.type << ',' << to_double(n.h) << ',' << to_double(n.s) << ',' << to_double(n.t) << '\n';
        }
        write_file(lout, os.str());
      }
      auto freq = empirical_type_distribution(M, dp, samples, seed);
      c.out << "type,mu_hat,empirical,deviation\n";
      for (auto& [id, m] : est[dp].types) {
        double f = freq.count(id) ? freq.at(id) : 0.0;
        c.out << id << ',' << fixed(m.mu) << ',' << fixed(f) << ',' << fixed(std::abs(f - m.mu)) << '\n';
      }
    });
  }
};

struct ConvergeCmd {
  std::string dir, out;
  std::vector<std::string> formulas;
  unsigned threads = 0;

  void add(CLI::App& app, Ctx& c) {
    auto* sub = app.add_subcommand("converge", "Stone pairings along a sequence as CSV");
    sub->add_option("dir", dir, "sequence directory")->required();
    sub->add_option("-f,--formula", formulas, "formula text or file (repeatable)")->required();
    sub->add_option("-o,--output", out);
    sub->add_option("--threads", threads);
    sub->callback([this, &c] {
      auto files = sequence_files(dir);
      std::vector<FormulaPtr> fl;
      for (auto& f : formulas) fl.push_back(load_formula(f));
      std::ostringstream os;
      os << "formula,sequence_index,file,size,value\n";
      for (std::size_t fi = 0; fi < fl.size(); ++fi)
        for (std::size_t i = 0; i < files.size(); ++i) {
          auto t = load_tree(files[i].string());
          auto r = stone_pairing(t, fl[fi], threads);
          os << csv_quote(to_string(fl[fi])) << ',' << i << ',' << csv_quote(files[i].filename().string()) << ','
             << t.size() << ',' << format_rational(r, true, 12) << '\n';
        }
      emit(c.out, out, os.str());
    });
  }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order limits of plane trees and bounded path-width graphs", "folim"};
  app.require_subcommand(1);
  app.fallthrough();
  bool decimal = false;
  app.add_flag("--decimal", decimal, "print rationals as decimals");
  Ctx c{out, err};
  ValidateCmd validate_cmd;
  validate_cmd.add(app, c);
  PairingCmd pairing_cmd;
  pairing_cmd.add(app, c, decimal);
  HintikkaCmd hintikka_cmd;
  hintikka_cmd.add(app, c);
  MajorCmd major_cmd;
  major_cmd.add(app, c);
  CodecsCmd codecs_cmd;
  codecs_cmd.add(app, c);
  GenCmd gen_cmd;
  gen_cmd.add(app, c);
  MeasuresCmd measures_cmd;
  measures_cmd.add(app, c);
  ConvergeCmd converge_cmd;
  converge_cmd.add(app, c);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace folim::cli
