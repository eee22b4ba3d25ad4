// Command-line front end: plane partitions, hourglass webs, boundary words,
// symmetry-class word families, the rank-2/3 projection, invariant
// expansions, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
// invariant violation.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hourglass/invariants.hpp"
#include "hourglass/json_io.hpp"
#include "hourglass/projection.hpp"
#include "hourglass/render_svg.hpp"
#include "hourglass/symmetry_words.hpp"
#include "hourglass/tableau.hpp"
#include "hourglass/trips.hpp"
#include "hourglass/verify.hpp"
#include "hourglass/web.hpp"

using namespace hourglass;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Box3 parse_box(const std::string& text) {
  Box3 box;
  if (std::sscanf(text.c_str(), "%d,%d,%d", &box.a, &box.b, &box.c) != 3)
    throw UsageError("--box expects A,B,C");
  return box;
}

SymmetryClass parse_class(const std::string& text) {
  auto cls = symmetry_class_from_string(text);
  if (!cls) throw UsageError("unknown symmetry class '" + text + "'");
  return *cls;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

ClassWordSpec spec_from_flags(SymmetryClass cls, int a, int c, int d) {
  switch (cls) {
    case SymmetryClass::SPP:
      if (a < 0 || c < 0) throw UsageError("spp needs --a and --c");
      return ClassWordSpec::spp(a, c);
    case SymmetryClass::CSPP:
      if (a < 0) throw UsageError("cspp needs --a");
      return ClassWordSpec::cspp(a);
    case SymmetryClass::TSPP:
      if (a < 0) throw UsageError("tspp needs --a");
      return ClassWordSpec::tspp(a);
    case SymmetryClass::TSSCPP:
      if (d < 0) throw UsageError("tsscpp needs --d");
      return ClassWordSpec::tsscpp(d);
    default:
      throw UsageError("no word family for class " + to_string(cls));
  }
}

HourglassWeb load_web(const std::string& path) {
  json j = read_json_file(path);
  if (j.contains("matched") || j.contains("class")) return web_from_json(j);
  // plain plane-partition files are accepted too
  return web_from_plane_partition(plane_partition_from_json(j));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"plane partitions, hourglass webs, and their lattice words"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "tokens";
  app.add_option("--format", format, "output format: tokens or json")
      ->check(CLI::IsMember({"tokens", "json"}));

  int exit_code = 0;
  std::vector<std::function<void()>> actions;

  // ---- pp ----------------------------------------------------------------
  auto* pp = app.add_subcommand("pp", "plane partitions in a box");
  pp->require_subcommand(1);
  {
    auto* enumerate = pp->add_subcommand("enumerate", "list plane partitions");
    auto box_text = std::make_shared<std::string>();
    auto cls_text = std::make_shared<std::string>();
    auto count_only = std::make_shared<bool>(false);
    enumerate->add_option("--box", *box_text, "box A,B,C")->required();
    enumerate->add_option("--class", *cls_text, "spp|cspp|tspp|scpp|tsscpp");
    enumerate->add_flag("--count-only", *count_only, "print only the count");
    enumerate->callback([=]() {
      Box3 box = parse_box(*box_text);
      std::vector<PlanePartition> all =
          cls_text->empty() ? enumerate_box(box)
                            : enumerate_class(parse_class(*cls_text), box);
      if (*count_only) {
        std::cout << all.size() << "\n";
        return;
      }
      json out = json::array();
      for (const auto& p : all) out.push_back(to_json(p));
      std::cout << out.dump(2) << "\n";
    });

    auto* count = pp->add_subcommand("count", "count plane partitions");
    auto box2 = std::make_shared<std::string>();
    auto formula = std::make_shared<bool>(false);
    count->add_option("--box", *box2, "box A,B,C")->required();
    count->add_flag("--formula", *formula, "use the product formula");
    count->callback([=]() {
      Box3 box = parse_box(*box2);
      if (*formula) {
        std::cout << macmahon_count(box) << "\n";
      } else {
        long long n = 0;
        for_each_in_box(box, [&](const PlanePartition&) { ++n; });
        std::cout << n << "\n";
      }
    });
  }

  // ---- web ---------------------------------------------------------------
  auto* web = app.add_subcommand("web", "hourglass plabic graphs");
  web->require_subcommand(1);
  {
    auto* build = web->add_subcommand("build", "build the web of a plane partition");
    auto ppfile = std::make_shared<std::string>();
    auto domain = std::make_shared<std::string>();
    auto outfile = std::make_shared<std::string>();
    build->add_option("--pp", *ppfile, "plane partition JSON file")->required();
    build->add_option("--domain", *domain, "restrict to a fundamental domain");
    build->add_option("--out", *outfile, "output web JSON file");
    build->callback([=]() {
      PlanePartition p = plane_partition_from_json(read_json_file(*ppfile));
      HourglassWeb w = domain->empty()
                           ? web_from_plane_partition(p)
                           : restrict_to_fundamental_domain(p, parse_class(*domain));
      json j = to_json(w);
      j["pp"] = to_json(p);
      if (outfile->empty())
        std::cout << j.dump(2) << "\n";
      else
        write_file(*outfile, j.dump(2) + "\n");
    });

    auto* word = web->add_subcommand("word", "boundary word of a web");
    auto wfile = std::make_shared<std::string>();
    word->add_option("file", *wfile, "web or plane partition JSON")->required();
    word->callback([&format, wfile]() {
      LatticeWord w = boundary_word(load_web(*wfile));
      if (format == "json")
        std::cout << to_json(w).dump(2) << "\n";
      else
        std::cout << w.to_string() << "\n";
    });

    auto* trips_cmd = web->add_subcommand("trips", "trip permutation of a web");
    auto tfile = std::make_shared<std::string>();
    auto index = std::make_shared<int>(1);
    trips_cmd->add_option("file", *tfile, "web JSON")->required();
    trips_cmd->add_option("--index", *index, "trip index 1..3")->required();
    trips_cmd->callback([&format, tfile, index]() {
      if (*index < 1 || *index > 3) throw UsageError("--index must be 1, 2 or 3");
      auto w = load_web(*tfile);
      auto sigma = trip_permutation(w, *index);
      if (format == "json") {
        json out = json::array();
        for (int i = 0; i < (int)sigma.size(); ++i)
          out.push_back({{"from", i + 1}, {"to", sigma[i] + 1}});
        std::cout << out.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < sigma.size(); ++i)
          std::cout << (i ? " " : "") << sigma[i] + 1;
        std::cout << "\n";
      }
    });

    auto* bc = web->add_subcommand("benzene-class", "closure under benzene moves");
    auto bfile = std::make_shared<std::string>();
    auto count = std::make_shared<bool>(false);
    bc->add_option("file", *bfile, "web or plane partition JSON")->required();
    bc->add_flag("--count", *count, "print only the class size");
    bc->callback([=]() {
      auto cls = benzene_class(load_web(*bfile));
      if (*count) {
        std::cout << cls.size() << "\n";
        return;
      }
      json out = json::array();
      for (const auto& w : cls) out.push_back(to_json(w));
      std::cout << out.dump(2) << "\n";
    });

    auto* render = web->add_subcommand("render", "render a web as SVG");
    auto rfile = std::make_shared<std::string>();
    auto svg = std::make_shared<std::string>();
    render->add_option("file", *rfile, "web or plane partition JSON")->required();
    render->add_option("--svg", *svg, "output SVG path")->required();
    render->callback([=]() { write_file(*svg, render_svg(load_web(*rfile))); });
  }

  // ---- word --------------------------------------------------------------
  auto* word = app.add_subcommand("word", "lattice words and tableaux");
  word->require_subcommand(1);
  {
    auto* tab = word->add_subcommand("tableau", "grow the oscillating tableau");
    auto text = std::make_shared<std::string>();
    auto rank = std::make_shared<int>(4);
    tab->add_option("word", *text, "word tokens, e.g. \"1 -4 2 -2 4 -1\"")->required();
    tab->add_option("--rank", *rank, "alphabet rank");
    tab->callback([&format, text, rank]() {
      LatticeWord w = LatticeWord::parse(*text, *rank);
      auto t = word_to_tableau(w);
      if (format == "json") {
        std::cout << to_json(t).dump(2) << "\n";
        return;
      }
      for (const auto& shape : t.shapes) {
        for (std::size_t r = 0; r < shape.size(); ++r)
          std::cout << (r ? " " : "") << shape[r];
        std::cout << "\n";
      }
    });

    auto* yam = word->add_subcommand("yamanouchi", "check the lattice condition");
    auto ytext = std::make_shared<std::string>();
    auto yrank = std::make_shared<int>(4);
    yam->add_option("word", *ytext)->required();
    yam->add_option("--rank", *yrank);
    yam->callback([&exit_code, ytext, yrank]() {
      bool ok = is_yamanouchi(LatticeWord::parse(*ytext, *yrank));
      std::cout << (ok ? "yamanouchi" : "not yamanouchi") << "\n";
      if (!ok) exit_code = 1;
    });
  }

  // ---- words -------------------------------------------------------------
  auto* words = app.add_subcommand("words", "symmetry-class boundary words");
  words->require_subcommand(1);
  {
    auto cls_text = std::make_shared<std::string>();
    auto a = std::make_shared<int>(-1);
    auto c = std::make_shared<int>(-1);
    auto d = std::make_shared<int>(-1);
    auto add_params = [&](CLI::App* cmd) {
      cmd->add_option("--class", *cls_text, "spp|cspp|tspp|tsscpp")->required();
      cmd->add_option("--a", *a, "side parameter a");
      cmd->add_option("--c", *c, "height parameter c (SPP)");
      cmd->add_option("--d", *d, "half side d (TSSCPP)");
    };

    auto* gen = words->add_subcommand("generate", "list the class's words");
    add_params(gen);
    gen->callback([=]() {
      auto spec = spec_from_flags(parse_class(*cls_text), *a, *c, *d);
      for (const auto& w : generate_words(spec)) std::cout << w.to_string() << "\n";
    });

    auto* val = words->add_subcommand("validate", "test membership of a word");
    add_params(val);
    auto vtext = std::make_shared<std::string>();
    val->add_option("word", *vtext, "word tokens")->required();
    val->callback([&exit_code, cls_text, a, c, d, vtext]() {
      auto spec = spec_from_flags(parse_class(*cls_text), *a, *c, *d);
      LatticeWord w = LatticeWord::parse(*vtext, 4);
      bool ok = validate_word(spec, w);
      std::cout << (ok ? "valid" : "invalid") << "\n";
      if (!ok) exit_code = 1;
    });

    auto* count = words->add_subcommand("count", "count the class's words");
    add_params(count);
    auto use_census = std::make_shared<bool>(false);
    auto box_text = std::make_shared<std::string>();
    count->add_flag("--census", *use_census, "count via webs instead of the formula");
    count->add_option("--box", *box_text, "box for the census");
    count->callback([=]() {
      auto spec = spec_from_flags(parse_class(*cls_text), *a, *c, *d);
      if (*use_census) {
        Box3 box = box_text->empty() ? spec.box() : parse_box(*box_text);
        auto cen = census(spec.cls, box);
        std::cout << cen.distinct.size() << " distinct words from " << cen.total
                  << " webs\n";
      } else {
        std::cout << count_words_formula(spec) << "\n";
      }
    });
  }

  // ---- project -----------------------------------------------------------
  {
    auto* project = app.add_subcommand("project", "rank-2/3 projection of a partition");
    auto cls_text = std::make_shared<std::string>();
    auto ppfile = std::make_shared<std::string>();
    auto svg = std::make_shared<std::string>();
    project->add_option("--class", *cls_text, "spp|tspp|tsscpp")->required();
    project->add_option("--pp", *ppfile, "plane partition JSON")->required();
    project->add_option("--render-svg", *svg, "also render the source web");
    project->callback([&format, cls_text, ppfile, svg]() {
      PlanePartition p = plane_partition_from_json(read_json_file(*ppfile));
      SymmetryClass cls = parse_class(*cls_text);
      auto res = project_plane_partition(p, cls);
      if (!svg->empty())
        write_file(*svg, render_svg(restrict_to_fundamental_domain(p, cls)));
      if (format == "json") {
        json j{{"word", to_json(res.source)}, {"reduced", to_json(res.reduced)}};
        if (res.matching) j["matching"] = to_json(*res.matching);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "word:    " << res.source.to_string() << "\n";
        std::cout << "reduced: " << res.reduced.to_string() << "\n";
        if (res.matching) std::cout << "matching: " << res.matching->to_string() << "\n";
      }
    });

    auto* pword = app.add_subcommand("project-word", "project a boundary word");
    auto cls2 = std::make_shared<std::string>();
    auto a = std::make_shared<int>(-1);
    auto c = std::make_shared<int>(-1);
    auto d = std::make_shared<int>(-1);
    auto text = std::make_shared<std::string>();
    pword->add_option("--class", *cls2)->required();
    pword->add_option("--a", *a);
    pword->add_option("--c", *c);
    pword->add_option("--d", *d);
    pword->add_option("word", *text, "word tokens")->required();
    pword->callback([&format, cls2, a, c, d, text]() {
      auto spec = spec_from_flags(parse_class(*cls2), *a, *c, *d);
      LatticeWord w = LatticeWord::parse(*text, 4);
      LatticeWord red = project_word(spec, w);
      if (format == "json") {
        json j{{"reduced", to_json(red)}};
        if (red.rank == 2) j["matching"] = to_json(sl2_growth(red));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << red.to_string() << "\n";
        if (red.rank == 2) std::cout << "matching: " << sl2_growth(red).to_string() << "\n";
      }
    });
  }

  // ---- invariant ---------------------------------------------------------
  {
    auto* inv = app.add_subcommand("invariant", "q=1 invariant expansion of a web");
    auto file = std::make_shared<std::string>();
    auto count_only = std::make_shared<bool>(false);
    inv->add_option("file", *file, "web or plane partition JSON")->required();
    inv->add_flag("--count-only", *count_only, "print only the coloring count");
    inv->callback([=]() {
      auto w = load_web(*file);
      if (*count_only) {
        std::cout << count_colorings(w) << "\n";
        return;
      }
      json out = json::array();
      for (const auto& m : invariant_at_q1(w)) out.push_back(to_json(m));
      std::cout << out.dump(2) << "\n";
    });
  }

  // ---- verify ------------------------------------------------------------
  {
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    auto suite = std::make_shared<std::string>();
    auto opt = std::make_shared<VerifyOptions>();
    auto box_text = std::make_shared<std::string>();
    verify->add_option("--suite", *suite, "macmahon|benzene|words|counts|projection|trips")
        ->required();
    verify->add_option("--max", opt->max_box, "box bound");
    verify->add_option("--box", *box_text, "box for the benzene suite");
    verify->add_option("--d", opt->d, "d for the projection suite");
    verify->callback([&exit_code, suite, opt, box_text]() {
      if (!box_text->empty()) opt->box = parse_box(*box_text);
      opt->max_class_size = opt->max_box;
      auto results = verify_suite(*suite, *opt);
      int failed = 0;
      for (const auto& r : results) {
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.id;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        failed += !r.pass;
      }
      std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
      if (failed) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
