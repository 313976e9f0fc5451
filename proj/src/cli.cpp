#include "hcube/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "hcube/automorphism.hpp"
#include "hcube/error.hpp"
#include "hcube/finite_cube.hpp"
#include "hcube/json_io.hpp"
#include "hcube/symplectic.hpp"

namespace hcube::cli {

namespace {

using json_io::Json;

Index parse_positive(const std::string& text) {
  try {
    return json_io::parse_index_key(text);
  } catch (const InputError&) {
    throw InputError("window entries must be positive integers, got \"" + text + "\"");
  }
}

// Inline JSON if the argument starts with '{', otherwise a file path.
Json load_json(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return json_io::parse(arg);
  std::ifstream in(arg);
  if (!in) throw InputError("cannot read \"" + arg + "\"");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return json_io::parse(buffer.str());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

// Splits on commas outside braces, so inline JSON objects stay whole.
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts(1);
  int depth = 0;
  for (char c : text) {
    if (c == ',' && depth == 0) {
      parts.emplace_back();
      continue;
    }
    depth += c == '{' ? 1 : c == '}' ? -1 : 0;
    parts.back() += c;
  }
  return parts;
}

struct Printer {
  std::ostream& out;
  bool pretty = false;

  void operator()(const Json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

int crosscheck(int n, const Printer& print) {
  if (n < 1 || n > max_listed_dimension) {
    throw InputError("crosscheck requires 1 <= n <= " + std::to_string(max_listed_dimension));
  }
  bool brute_equal = true;
  const auto extension = enumerate_automorphisms_extension(n);
  if (n <= 3) {
    const auto brute = enumerate_automorphisms_bruteforce(n);
    print.out << "brute: " << brute.size() << '\n';
    brute_equal = brute == extension;
  } else {
    print.out << "brute: skipped\n";
  }
  print.out << "extension: " << extension.size() << '\n';

  std::vector<CubeAutomorphism> from_pairs;
  for (const WreathPair& w : all_wreath_pairs(n)) from_pairs.push_back(wreath_to_cube(w, n));
  std::sort(from_pairs.begin(), from_pairs.end());
  const bool distinct = std::adjacent_find(from_pairs.begin(), from_pairs.end()) == from_pairs.end();
  const bool bijective = distinct && from_pairs == extension;
  print.out << "wreath: " << from_pairs.size() << '\n';

  std::vector<Index> window(static_cast<std::size_t>(n));
  std::iota(window.begin(), window.end(), Index{1});
  std::size_t agree = 0;
  for (const CubeAutomorphism& a : extension) {
    const SymplecticPerm expected = from_wreath(cube_to_wreath(a));
    const auto result = reconstruct_local(lift_cube_automorphism(a), embed_cube_vertex(0, n), window);
    bool same = true;
    for (Index i : window) same = same && result.action.at(i) == expected(i);
    if (same) ++agree;
  }
  const bool ok = brute_equal && bijective && agree == extension.size();
  print.out << "brute_equals_extension: " << (n <= 3 ? (brute_equal ? "true" : "false") : "skipped") << '\n';
  print.out << "wreath_bijective: " << (bijective ? "true" : "false") << '\n';
  print.out << "reconstruction_agrees: " << agree << '/' << extension.size() << '\n';
  return ok ? exit_ok : exit_check_failed;
}

}  // namespace

std::vector<Index> parse_window(const std::string& text) {
  if (text.empty()) return {};
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const Index lo = parse_positive(text.substr(0, dots));
    const Index hi = parse_positive(text.substr(dots + 2));
    if (hi < lo) throw InputError("empty window range \"" + text + "\"");
    if (hi - lo > 1'000'000) throw InputError("window range too large");
    std::vector<Index> out;
    for (Index i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  std::vector<Index> out;
  for (const std::string& part : split(text, ',')) out.push_back(parse_positive(part));
  return normalize_window(out);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Computations on the infinite-dimensional hypercube graph", "hcube"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  std::uint64_t seed = 0;
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();

  // vertex
  auto* vertex = app.add_subcommand("vertex", "Vertex relations");
  vertex->require_subcommand(1);
  std::string v_arg, w_arg;
  for (const char* name : {"adjacent", "distance", "component"}) {
    auto* sub = vertex->add_subcommand(name);
    sub->add_option("v", v_arg, "Vertex JSON or file")->required();
    sub->add_option("w", w_arg, "Vertex JSON or file")->required();
  }

  // perm
  auto* perm = app.add_subcommand("perm", "Symplectic permutation operations");
  perm->require_subcommand(1);
  std::string a_arg, b_arg;
  perm->add_subcommand("compose", "a o b (b applied first)")->add_option("a", a_arg)->required();
  perm->get_subcommand("compose")->add_option("b", b_arg)->required();
  perm->add_subcommand("inverse")->add_option("a", a_arg)->required();
  perm->add_subcommand("order")->add_option("a", a_arg)->required();
  auto* perm_apply = perm->add_subcommand("apply", "Image of an integer or a vertex");
  perm_apply->add_option("a", a_arg)->required();
  perm_apply->add_option("target", b_arg, "Nonzero integer or vertex JSON")->required();

  // reconstruct / verdict
  std::string oracle_arg, at_arg, window_arg, reps_arg;
  std::size_t checks = 0;
  auto* reconstruct = app.add_subcommand("reconstruct", "Recover the inducing permutation on a window");
  reconstruct->add_option("--oracle", oracle_arg)->required();
  reconstruct->add_option("--at", at_arg)->required();
  reconstruct->add_option("--window", window_arg)->required();
  reconstruct->add_option("--checks", checks)->capture_default_str();
  auto* verdict = app.add_subcommand("verdict", "Compare local reconstructions across components");
  verdict->add_option("--oracle", oracle_arg)->required();
  verdict->add_option("--reps", reps_arg, "Comma-separated vertex files")->required();
  verdict->add_option("--window", window_arg)->required();

  // cube
  int n = 0;
  std::string method = "extension";
  bool list = false;
  auto* cube = app.add_subcommand("cube", "Finite hypercube ground truth");
  cube->require_subcommand(1);
  auto* cube_enum = cube->add_subcommand("enum", "Count (and optionally list) Aut(H_n)");
  cube_enum->add_option("--n", n)->required();
  cube_enum->add_option("--method", method)->check(CLI::IsMember({"brute", "extension"}))->capture_default_str();
  cube_enum->add_flag("--list", list, "Print every automorphism");
  auto* cube_cross = cube->add_subcommand("crosscheck", "Compare enumerators, wreath pairs and reconstruction");
  cube_cross->add_option("--n", n)->required();

  // demo
  auto* demo = app.add_subcommand("demo", "Worked examples");
  demo->require_subcommand(1);
  demo->add_subcommand("example1", "Non-regular piecewise automorphism and its witness")
      ->add_option("--window", window_arg)
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_bad_input;
  }

  const Printer print{out, pretty};
  try {
    if (vertex->parsed()) {
      const Vertex v = json_io::vertex_from_json(load_json(v_arg));
      const Vertex w = json_io::vertex_from_json(load_json(w_arg));
      if (vertex->got_subcommand("adjacent")) {
        out << (adjacent(v, w) ? "true" : "false") << '\n';
      } else if (vertex->got_subcommand("distance")) {
        const Distance d = distance(v, w);
        if (d) {
          out << *d << '\n';
        } else {
          out << "infinity\n";
        }
      } else {
        out << (same_component(v, w) ? "true" : "false") << '\n';
      }
    } else if (perm->parsed()) {
      const SymplecticPerm a = json_io::perm_from_json(load_json(a_arg));
      if (perm->got_subcommand("compose")) {
        print(json_io::to_json(compose(a, json_io::perm_from_json(load_json(b_arg)))));
      } else if (perm->got_subcommand("inverse")) {
        print(json_io::to_json(inverse(a)));
      } else if (perm->got_subcommand("order")) {
        out << order(a) << '\n';
      } else {
        const auto first = b_arg.find_first_not_of(" \t");
        if (first != std::string::npos && b_arg[first] != '{' && b_arg.find_first_not_of("-0123456789") == std::string::npos) {
          Index i = 0;
          auto [ptr, ec] = std::from_chars(b_arg.data(), b_arg.data() + b_arg.size(), i);
          if (ec != std::errc{} || ptr != b_arg.data() + b_arg.size()) throw InputError("bad integer \"" + b_arg + "\"");
          out << apply(a, i) << '\n';
        } else {
          print(json_io::to_json(apply_vertex(a, json_io::vertex_from_json(load_json(b_arg)))));
        }
      }
    } else if (reconstruct->parsed()) {
      const AutomorphismOracle f = json_io::oracle_from_json(load_json(oracle_arg));
      const Vertex x = json_io::vertex_from_json(load_json(at_arg));
      print(json_io::to_json(reconstruct_component(f, x, parse_window(window_arg), checks, seed)));
    } else if (verdict->parsed()) {
      const AutomorphismOracle f = json_io::oracle_from_json(load_json(oracle_arg));
      std::vector<Vertex> reps;
      for (const std::string& path : split_top_level(reps_arg)) reps.push_back(json_io::vertex_from_json(load_json(path)));
      print(json_io::to_json(is_regular_verdict(f, reps, parse_window(window_arg)), reps));
    } else if (cube->parsed()) {
      if (cube_cross->parsed()) return crosscheck(n, print);
      if (method == "brute") {
        const auto all = enumerate_automorphisms_bruteforce(n);
        out << "count: " << all.size() << '\n';
        if (list) {
          for (const auto& a : all) print(json_io::to_json(a));
        }
      } else if (list) {
        const auto all = enumerate_automorphisms_extension(n);
        out << "count: " << all.size() << '\n';
        for (const auto& a : all) print(json_io::to_json(a));
      } else {
        out << "count: " << count_automorphisms_extension(n) << '\n';
      }
    } else if (demo->parsed()) {
      const std::vector<Index> window = parse_window(window_arg);
      if (std::find(window.begin(), window.end(), 1) == window.end() ||
          std::find(window.begin(), window.end(), 2) == window.end()) {
        throw InputError("the example acts on coordinates 1 and 2; the window must contain both");
      }
      const SymplecticPerm swap12 = SymplecticPerm::from_moves({{1, 2}, {2, 1}});
      const std::vector<Vertex> reps{Vertex{}, alternating_vertex()};
      const AutomorphismOracle f = example1_automorphism(reps[0], swap12);
      print(json_io::to_json(is_regular_verdict(f, reps, window), reps));
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_bad_input;
  } catch (const MalformedOracle& e) {
    err << "malformed oracle: " << e.what() << '\n';
    return exit_bad_oracle;
  }
  return exit_ok;
}

}  // namespace hcube::cli
